use rayon::prelude::*;

use super::params::Params;
use super::report::{abs_diff, one, ExperimentReport, ReportRow, Trend};
use super::rng::SplitMix64;
use crate::counting::{colength, min_gens, socle_length};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::multiplicity::{factorial, hanes_holds, hk_multiplicity, hs_multiplicity, ring_multiplicity};
use crate::newton::integral_closure;
use crate::ops;
use crate::parse::parse_monomials;
use crate::ring::RingSpec;
use crate::Rational;

/// Sampler settings for random m-primary ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub ring: RingSpec,
    /// Every sample contains `x_i^dim_box` for each variable.
    pub dim_box: u32,
    pub n_extra_gens: usize,
    /// Minimum total degree of the extra generators.
    pub depth_floor: u32,
    pub samples: u64,
    pub seed: u64,
}

impl FuzzConfig {
    pub fn new(ring: RingSpec, seed: u64) -> Self {
        Self { ring, dim_box: 6, n_extra_gens: 4, depth_floor: 0, samples: 500, seed }
    }

    /// Keys: `dim` (default 2), `quotient` (monomials in x, y, z, ...),
    /// `box` (6), `extra` (4), `depth` (0), `samples` (500).
    pub fn from_params(params: &Params, seed: u64) -> Result<Self> {
        params.allow_only(&["dim", "quotient", "box", "extra", "depth", "samples"])?;
        let dim = params.int("dim", 2)? as usize;
        if dim == 0 || dim > 8 {
            return Err(Error::BadParam(format!("dim: expected 1..=8, got {dim}")));
        }
        let ring = match params.get("quotient") {
            Some(text) => {
                let names = crate::ideal::default_names(dim);
                let defining = parse_monomials(text, &names).map_err(|e| Error::BadParam(format!("quotient: {e}")))?;
                RingSpec::new(dim, defining).map_err(|e| Error::BadParam(e.to_string()))?
            }
            None => RingSpec::polynomial(dim),
        };
        Ok(Self {
            ring,
            dim_box: params.int("box", 6)? as u32,
            n_extra_gens: params.int("extra", 4)? as usize,
            depth_floor: params.int("depth", 0)? as u32,
            samples: params.int("samples", 500)?,
            seed,
        })
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.dim_box == 0 {
            return Err(Error::UnsatisfiableConfig("box bound must be at least 1".into()));
        }
        let reach = self.ring.nvars() as u64 * u64::from(self.dim_box);
        if u64::from(self.depth_floor) > reach {
            return Err(Error::UnsatisfiableConfig(format!(
                "depth floor {} exceeds the largest degree {reach} in the box",
                self.depth_floor
            )));
        }
        Ok(())
    }
}

/// Sample `index`: the pure powers `x_i^B` plus `n_extra_gens` vectors drawn
/// uniformly from `{0..=B}^d`, redrawing the zero vector and any vector of
/// total degree below the floor.
pub fn random_m_primary_ideal(cfg: &FuzzConfig, index: u64) -> Result<MonomialIdeal> {
    cfg.validate()?;
    let d = cfg.ring.nvars();
    let b = cfg.dim_box;
    let mut rng = SplitMix64::for_sample(cfg.seed, index);
    let mut raw: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut v = vec![0; d];
            v[i] = b;
            v
        })
        .collect();
    for _ in 0..cfg.n_extra_gens {
        loop {
            let v: Vec<u32> = (0..d).map(|_| rng.range_inclusive(0, b)).collect();
            let deg: u64 = v.iter().map(|&e| u64::from(e)).sum();
            if deg >= u64::from(cfg.depth_floor.max(1)) {
                raw.push(v);
                break;
            }
        }
    }
    Ok(MonomialIdeal::from_vecs(d, raw))
}

struct RingData {
    d: usize,
    d_fact: Rational,
    e_ring: Rational,
    hk_ring: Rational,
}

/// Checks, exactly and per sample: Lech's bound, the chain
/// `e/d! ≤ e_HK ≤ e`, `e_HK/ℓ ≤ e_HK(R)`, Hanes' bound (`d ≥ 2`),
/// `ℓ(R/a) = ℓ(R/(a : x)) + ℓ(R/(a, x))` for each variable `x ∉ a`, and in
/// polynomial rings `ℓ(R/a^{[q]}) = q^d ℓ(R/a)` for `q = 2, 3, 4` and
/// `e(ā) = e(a)`.
pub fn run_inequality_fuzz(cfg: &FuzzConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let d = cfg.ring.krull_dim();
    if !(1..=3).contains(&d) {
        return Err(Error::Precondition(format!(
            "inequality fuzz needs Krull dimension 1..=3 for exact multiplicities, got {d}"
        )));
    }
    let data = RingData {
        d,
        d_fact: Rational::from_integer(factorial(d)),
        e_ring: ring_multiplicity(&cfg.ring)?.value,
        hk_ring: hk_multiplicity(&cfg.ring, &cfg.ring.maximal_ideal())?.value,
    };
    let rows: Vec<ReportRow> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let mut row = ReportRow { sample: i, ..Default::default() };
            let outcome = random_m_primary_ideal(cfg, i).and_then(|a| fuzz_sample(&cfg.ring, &a, &data, &mut row));
            if let Err(e) = outcome {
                row.failures.push(format!("error: {e}"));
            }
            row
        })
        .collect();
    let mut params = Params::new()
        .with("dim", &cfg.ring.nvars().to_string())
        .with("box", &cfg.dim_box.to_string())
        .with("extra", &cfg.n_extra_gens.to_string())
        .with("depth", &cfg.depth_floor.to_string())
        .with("samples", &cfg.samples.to_string())
        .with("seed", &cfg.seed.to_string());
    if !cfg.ring.is_polynomial() {
        params.insert("quotient", &cfg.ring.defining().to_string());
    }
    Ok(ExperimentReport::new("fuzz", params, rows, Trend::None))
}

fn fuzz_sample(ring: &RingSpec, a: &MonomialIdeal, data: &RingData, row: &mut ReportRow) -> Result<()> {
    row.ideal = a.to_string();
    let len = colength(ring, a)?;
    let mu = min_gens(ring, a)?;
    row.colength = Some(len);
    row.mu = Some(mu);
    row.ord = Some(ops::ord(ring, a)?);
    row.socle_len = Some(socle_length(ring, a)?);
    let e = hs_multiplicity(ring, a)?.value;
    let ehk = hk_multiplicity(ring, a)?.value;
    let len_q = Rational::from_integer(len.into());

    let lech_bound = &data.d_fact * &data.e_ring * &len_q;
    row.check(e <= lech_bound, || format!("Lech: e = {e} > {lech_bound}"));
    row.margin = Some(&lech_bound - &e);
    let lower = &e / &data.d_fact;
    row.check(lower <= ehk && ehk <= e, || format!("chain: e/d! = {lower}, e_HK = {ehk}, e = {e}"));
    let dagger = &data.hk_ring * &len_q;
    row.check(ehk <= dagger, || format!("e_HK/len bound: e_HK = {ehk} > {dagger}"));
    if data.d >= 2 {
        let ok = hanes_holds(data.d, &e, &ehk, mu)?;
        row.check(ok, || format!("Hanes: e = {e}, e_HK = {ehk}, mu = {mu}"));
    }

    let lifted = ring.lift(a)?;
    for x in 0..ring.nvars() {
        let var = MonomialIdeal::pure_power_gen(ring.nvars(), x, 1);
        if lifted.contains(&var.gens()[0]) {
            continue;
        }
        let colon_len = colength(ring, &ops::colon(&lifted, &var)?)?;
        let mod_len = colength(&ring.mod_variable(x)?, a)?;
        row.check(len == colon_len + mod_len, || {
            format!("additivity at variable {x}: {len} != {colon_len} + {mod_len}")
        });
    }

    if ring.is_polynomial() {
        let scale = |q: u64| q.pow(ring.nvars() as u32);
        for q in [2u32, 3, 4] {
            let lq = colength(ring, &ops::frobenius_power(a, q)?)?;
            let want = len.checked_mul(scale(q.into())).ok_or(Error::Overflow("fuzz"))?;
            row.check(lq == want, || format!("Frobenius q = {q}: {lq} != {want}"));
        }
        let closed = integral_closure(a)?;
        let e_closed = hs_multiplicity(ring, &closed)?.value;
        row.check(e_closed == e, || format!("closure changed e: {e_closed} != {e}"));
    }

    let r = &ehk / &len_q;
    row.deviation = Some(abs_diff(&r, &one()));
    row.ratio = Some(r);
    row.e = Some(e);
    row.ehk = Some(ehk);
    row.push_extra("lech_bound", lech_bound);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_m_primary() {
        let cfg = FuzzConfig::new(RingSpec::polynomial(3), 17);
        let a = random_m_primary_ideal(&cfg, 5).unwrap();
        assert_eq!(a, random_m_primary_ideal(&cfg, 5).unwrap());
        assert!((0..3).all(|i| a.pure_power_bound(i).is_some_and(|b| b <= 6)));
    }

    #[test]
    fn no_extra_generators_gives_pure_powers() {
        let mut cfg = FuzzConfig::new(RingSpec::polynomial(2), 1);
        cfg.n_extra_gens = 0;
        let a = random_m_primary_ideal(&cfg, 0).unwrap();
        assert_eq!(a, MonomialIdeal::pure_powers(&[6, 6]));
    }

    #[test]
    fn depth_floor_is_respected() {
        let mut cfg = FuzzConfig::new(RingSpec::polynomial(3), 3);
        cfg.depth_floor = 6;
        cfg.n_extra_gens = 10;
        for i in 0..20 {
            let a = random_m_primary_ideal(&cfg, i).unwrap();
            assert!(a.gens().iter().all(|g| g.total_degree() >= 6));
        }
        cfg.depth_floor = 19;
        assert!(matches!(random_m_primary_ideal(&cfg, 0), Err(Error::UnsatisfiableConfig(_))));
    }

    #[test]
    fn small_fuzz_runs_clean() {
        let mut cfg = FuzzConfig::new(RingSpec::polynomial(2), 42);
        cfg.samples = 40;
        let rep = run_inequality_fuzz(&cfg).unwrap();
        assert!(rep.passed(), "{}", rep.render_table());
        assert_eq!(rep.summary.max_dev, Rational::from_integer(0.into()));
    }

    #[test]
    fn four_dimensional_rings_are_rejected() {
        let cfg = FuzzConfig::new(RingSpec::polynomial(4), 0);
        assert!(matches!(run_inequality_fuzz(&cfg), Err(Error::Precondition(_))));
    }
}
