use num_traits::{One, Zero};
use rayon::prelude::*;

use super::fuzz::{random_m_primary_ideal, FuzzConfig};
use super::params::Params;
use super::report::{abs_diff, one, ratio, ExperimentReport, Metric, ReportRow, Trend};
use super::rng::SplitMix64;
use crate::counting::{colength, min_gens, socle_length};
use crate::error::{Error, Result};
use crate::ideal::{default_names, MonomialIdeal};
use crate::multiplicity::{hk_multiplicity, hs_multiplicity};
use crate::ops;
use crate::parse::parse_monomials;
use crate::ring::RingSpec;
use crate::Rational;

/// Extra generators per socle-sweep sample.
const SOCLE_EXTRA_GENS: usize = 6;
/// Extra generators per window sample.
const WINDOW_EXTRA_GENS: usize = 4;

fn ring_from_params(params: &Params, default_dim: u64, default_quotient: Option<&str>) -> Result<RingSpec> {
    let dim = params.int("dim", default_dim)? as usize;
    if dim == 0 || dim > 8 {
        return Err(Error::BadParam(format!("dim: expected 1..=8, got {dim}")));
    }
    match params.get("quotient").or(default_quotient) {
        Some("") | None => Ok(RingSpec::polynomial(dim)),
        Some(text) => {
            let defining =
                parse_monomials(text, &default_names(dim)).map_err(|e| Error::BadParam(format!("quotient: {e}")))?;
            RingSpec::new(dim, defining).map_err(|e| Error::BadParam(e.to_string()))
        }
    }
}

pub(crate) fn socle_depth_from_params(params: &Params, seed: u64) -> Result<ExperimentReport> {
    params.allow_only(&["dim", "depths", "samples"])?;
    let ring = ring_from_params(params, 3, None)?;
    let depths: Vec<u32> = params
        .int_list("depths", &[2, 4, 8, 16])?
        .into_iter()
        .map(|d| u32::try_from(d).map_err(|_| Error::BadParam(format!("depth {d} too large"))))
        .collect::<Result<_>>()?;
    run_socle_depth_sweep(&ring, &depths, params.int("samples", 100)?, seed)
}

pub(crate) fn blum_liu_from_params(params: &Params, seed: u64) -> Result<ExperimentReport> {
    params.allow_only(&["dim", "quotient", "delta", "n", "samples"])?;
    let ring = ring_from_params(params, 3, Some("x*y*z"))?;
    let delta = params.rational("delta", Rational::new(1.into(), 2.into()))?;
    let ns: Vec<u32> = params
        .int_list("n", &[4, 8, 16])?
        .into_iter()
        .map(|n| u32::try_from(n).map_err(|_| Error::BadParam(format!("n = {n} too large"))))
        .collect::<Result<_>>()?;
    run_blum_liu_window(&ring, &delta, &ns, params.int("samples", 50)?, seed)
}

/// For each depth `N`, samples ideals of order at least `N` (pure powers
/// `x_i^{2N}` plus random generators of degree `≥ N`) and records the socle
/// ratio `ℓ((a : m)/a)/ℓ(R/a)` and `μ/ℓ`. Every row also checks the
/// projection-chain bound `μ(a) ≤ Σ_i μ(a_i)` along the last variable. The
/// summary requires both per-depth maxima to be non-increasing.
pub fn run_socle_depth_sweep(ring: &RingSpec, depth_list: &[u32], samples: u64, seed: u64) -> Result<ExperimentReport> {
    if !ring.is_polynomial() {
        return Err(Error::Precondition("socle depth sweep needs a polynomial ring".into()));
    }
    if depth_list.contains(&0) {
        return Err(Error::BadParam("depths must be positive".into()));
    }
    let jobs: Vec<(usize, u32, u64)> =
        depth_list.iter().enumerate().flat_map(|(k, &n)| (0..samples).map(move |i| (k, n, i))).collect();
    let rows: Vec<ReportRow> = jobs
        .into_par_iter()
        .map(|(k, depth, i)| {
            let sample = k as u64 * samples + i;
            let mut row = ReportRow { sample, param_n: Some(depth.into()), ..Default::default() };
            let cfg = FuzzConfig {
                ring: ring.clone(),
                dim_box: 2 * depth,
                n_extra_gens: SOCLE_EXTRA_GENS,
                depth_floor: depth,
                samples,
                seed,
            };
            let outcome = random_m_primary_ideal(&cfg, sample).and_then(|a| socle_sample(ring, &a, depth, &mut row));
            if let Err(e) = outcome {
                row.failures.push(format!("error: {e}"));
            }
            row
        })
        .collect();
    let depths: Vec<String> = depth_list.iter().map(|d| d.to_string()).collect();
    let params = Params::new()
        .with("dim", &ring.nvars().to_string())
        .with("depths", &depths.join(","))
        .with("samples", &samples.to_string())
        .with("seed", &seed.to_string());
    let trend = Trend::NonIncreasing(vec![Metric::Ratio, Metric::MuOverColength]);
    Ok(ExperimentReport::new("socle-depth", params, rows, trend))
}

/// `Σ_i μ(a_i)` over the projection chain along the last variable.
pub(crate) fn chain_generator_bound(a: &MonomialIdeal) -> Result<u64> {
    let chain = ops::projection_chain(a, a.nvars() - 1)?;
    Ok(chain.iter().map(|j| j.num_gens() as u64).sum())
}

fn socle_sample(ring: &RingSpec, a: &MonomialIdeal, depth: u32, row: &mut ReportRow) -> Result<()> {
    row.ideal = a.to_string();
    let len = colength(ring, a)?;
    let mu = min_gens(ring, a)?;
    let ord = ops::ord(ring, a)?;
    let socle = socle_length(ring, a)?;
    row.colength = Some(len);
    row.mu = Some(mu);
    row.ord = Some(ord);
    row.socle_len = Some(socle);
    row.check(ord >= depth.into(), || format!("sample order {ord} below depth {depth}"));
    if a.nvars() >= 2 {
        let bound = chain_generator_bound(a)?;
        row.check(mu <= bound, || format!("projection bound: mu = {mu} > {bound}"));
        row.push_extra("chain_bound", bound);
    }
    let r = ratio(socle, len).ok_or(Error::Internal("empty quotient".into()))?;
    row.deviation = Some(r.clone());
    row.ratio = Some(r);
    Ok(())
}

/// `⌈δ n⌉`.
pub(crate) fn ceil_mul(delta: &Rational, n: u32) -> u32 {
    let v = delta * Rational::from_integer(n.into());
    let c = v.ceil().to_integer();
    u32::try_from(c).unwrap_or(u32::MAX)
}

/// Window ideal for sample `index`: `m^n` plus random monomials of degree in
/// `[⌈δn⌉, n)`. A degree is drawn uniformly, then each unit of degree goes to
/// a uniformly drawn variable.
pub(crate) fn window_ideal(nvars: usize, n: u32, low: u32, seed: u64, index: u64) -> MonomialIdeal {
    let mut rng = SplitMix64::for_sample(seed, index);
    let mut raw: Vec<Vec<u32>> =
        MonomialIdeal::maximal_power(nvars, n).gens().iter().map(|g| g.exps().to_vec()).collect();
    if low < n {
        for _ in 0..WINDOW_EXTRA_GENS {
            let t = rng.range_inclusive(low, n - 1);
            let mut v = vec![0u32; nvars];
            for _ in 0..t {
                v[rng.below(nvars as u64) as usize] += 1;
            }
            raw.push(v);
        }
    }
    MonomialIdeal::from_vecs(nvars, raw)
}

/// For each `n`, samples `m^n ⊆ a ⊆ m^{⌈δn⌉}` and records `e_HK(a)/ℓ(R/a)`.
/// The summary requires the per-`n` maximum of `|e_HK/ℓ − 1|` to be
/// non-increasing. In a polynomial ring every row also demands ratio 1.
pub fn run_blum_liu_window(
    ring: &RingSpec,
    delta: &Rational,
    n_list: &[u32],
    samples: u64,
    seed: u64,
) -> Result<ExperimentReport> {
    if !(ring.is_reduced() && ring.is_equidimensional()) {
        return Err(Error::Precondition(format!(
            "window sweep needs a reduced equidimensional ring, got defining ideal {}",
            ring.defining()
        )));
    }
    if !(delta > &Rational::zero() && delta < &Rational::one()) {
        return Err(Error::BadParam(format!("delta must lie strictly between 0 and 1, got {delta}")));
    }
    if n_list.contains(&0) {
        return Err(Error::BadParam("n must be positive".into()));
    }
    let jobs: Vec<(usize, u32, u64)> =
        n_list.iter().enumerate().flat_map(|(k, &n)| (0..samples).map(move |i| (k, n, i))).collect();
    let rows: Vec<ReportRow> = jobs
        .into_par_iter()
        .map(|(k, n, i)| {
            let sample = k as u64 * samples + i;
            let mut row = ReportRow { sample, param_n: Some(n.into()), ..Default::default() };
            let low = ceil_mul(delta, n);
            let a = window_ideal(ring.nvars(), n, low, seed, sample);
            if let Err(e) = window_sample(ring, &a, n, low, &mut row) {
                row.failures.push(format!("error: {e}"));
            }
            row
        })
        .collect();
    let ns: Vec<String> = n_list.iter().map(|d| d.to_string()).collect();
    let mut params = Params::new()
        .with("dim", &ring.nvars().to_string())
        .with("delta", &delta.to_string())
        .with("n", &ns.join(","))
        .with("samples", &samples.to_string())
        .with("seed", &seed.to_string());
    if !ring.is_polynomial() {
        params.insert("quotient", &ring.defining().to_string());
    }
    Ok(ExperimentReport::new("blum-liu", params, rows, Trend::NonIncreasing(vec![Metric::Deviation])))
}

fn window_sample(ring: &RingSpec, a: &MonomialIdeal, n: u32, low: u32, row: &mut ReportRow) -> Result<()> {
    row.ideal = a.to_string();
    let lifted = ring.lift(a)?;
    let top = ring.lift(&MonomialIdeal::maximal_power(ring.nvars(), n))?;
    let bottom = ring.lift(&MonomialIdeal::maximal_power(ring.nvars(), low))?;
    row.check(ops::ideal_leq(&top, &lifted) && ops::ideal_leq(&lifted, &bottom), || {
        format!("sample escapes the window m^{n} ⊆ a ⊆ m^{low}")
    });
    let len = colength(ring, a)?;
    let ehk = hk_multiplicity(ring, a)?.value;
    let e = hs_multiplicity(ring, a)?.value;
    row.colength = Some(len);
    row.mu = Some(min_gens(ring, a)?);
    row.ord = Some(ops::ord(ring, a)?);
    row.check(ehk <= e, || format!("e_HK = {ehk} > e = {e}"));
    let r = &ehk / Rational::from_integer(len.into());
    if ring.is_polynomial() {
        row.check(r.is_one(), || format!("regular ring ratio {r} != 1"));
    }
    row.deviation = Some(abs_diff(&r, &one()));
    row.ratio = Some(r);
    row.e = Some(e);
    row.ehk = Some(ehk);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximal_power_socle_ratio() {
        let k3 = RingSpec::polynomial(3);
        for n in 1..8u32 {
            let m = MonomialIdeal::maximal_power(3, n);
            let socle = socle_length(&k3, &m).unwrap();
            let len = colength(&k3, &m).unwrap();
            assert_eq!(ratio(socle, len).unwrap(), Rational::new(3.into(), (n + 2).into()));
        }
    }

    #[test]
    fn single_depth_trivially_monotone() {
        let rep = run_socle_depth_sweep(&RingSpec::polynomial(3), &[3], 5, 1).unwrap();
        assert!(rep.summary.trend_ok);
        assert_eq!(rep.rows.len(), 5);
        assert!(rep.passed(), "{}", rep.render_table());
    }

    #[test]
    fn window_samples_sit_in_the_window() {
        let delta = Rational::new(1.into(), 2.into());
        for i in 0..10 {
            let a = window_ideal(3, 8, ceil_mul(&delta, 8), 5, i);
            assert!(ops::ideal_leq(&MonomialIdeal::maximal_power(3, 8), &a));
            assert!(a.min_degree().unwrap() >= 4);
        }
    }

    #[test]
    fn regular_window_ratio_is_one() {
        let rep =
            run_blum_liu_window(&RingSpec::polynomial(3), &Rational::new(1.into(), 2.into()), &[4, 6], 5, 3).unwrap();
        assert!(rep.passed(), "{}", rep.render_table());
        assert!(rep.summary.max_dev.is_zero());
    }

    #[test]
    fn window_rejects_non_reduced_rings() {
        let q = RingSpec::new(2, MonomialIdeal::from_rows(2, &[&[2, 0]]).unwrap()).unwrap();
        let r = run_blum_liu_window(&q, &Rational::new(1.into(), 2.into()), &[4], 1, 0);
        assert!(matches!(r, Err(Error::Precondition(_))));
        let mixed = RingSpec::new(3, MonomialIdeal::from_rows(3, &[&[1, 1, 0], &[1, 0, 1]]).unwrap()).unwrap();
        let r = run_blum_liu_window(&mixed, &Rational::new(1.into(), 2.into()), &[4], 1, 0);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn ceil_of_half() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(ceil_mul(&half, 5), 3);
        assert_eq!(ceil_mul(&half, 4), 2);
    }
}
