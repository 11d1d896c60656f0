use num_traits::{One, Zero};

use super::params::Params;
use super::report::{abs_diff, ratio, ExperimentReport, Metric, ReportRow, Trend};
use super::sweeps::ceil_mul;
use crate::counting::{colength, colon_quotient_length, min_gens, socle_length};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::multiplicity::{hk_multiplicity, hs_multiplicity, hs_sequence};
use crate::newton::integral_closure;
use crate::ops;
use crate::ring::RingSpec;
use crate::Rational;

pub const FAMILIES: &[&str] = &["cx-family", "socle-colon", "nonreduced", "t-adic", "dim-one-limit", "power-ratio"];

fn int(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

fn u32_list(params: &Params, key: &str, default: &[u64]) -> Result<Vec<u32>> {
    params
        .int_list(key, default)?
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Error::BadParam(format!("{key}: {v} is too large"))))
        .collect()
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs one of the [`FAMILIES`]. Integer parameters accept `a..b` ranges
/// and comma lists.
///
/// | family | parameters (defaults) |
/// |---|---|
/// | `cx-family` | `N` (2..12) |
/// | `socle-colon` | `N` (2..6), `L` (10,50,200) |
/// | `nonreduced` | `n` (2..20), `delta` (1/2), `eps` (1/5) |
/// | `t-adic` | `mode` (both), `L` (2,5,10), `n` (4), `N` (3), `example_L` (4..40), `r` (4), `eps` (1/2) |
/// | `dim-one-limit` | `N` (1..50) |
/// | `power-ratio` | `n` (1..8) |
pub fn run_named_family(name: &str, params: &Params) -> Result<ExperimentReport> {
    match name {
        "cx-family" => cx_family(params),
        "socle-colon" => socle_colon(params),
        "nonreduced" => nonreduced(params),
        "t-adic" => t_adic(params),
        "dim-one-limit" => dim_one_limit(params),
        "power-ratio" => power_ratio(params),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// `(x^N, x^{N-1}y, ..., xy^{N-1}, y^{N^3})` in `K[x,y]`.
pub(crate) fn cx_ideal(n: u32) -> Result<MonomialIdeal> {
    let top = n.checked_pow(3).ok_or(Error::Overflow("cx-family"))?;
    let mut rows: Vec<Vec<u32>> = (1..=n).map(|a| vec![a, n - a]).collect();
    rows.push(vec![0, top]);
    Ok(MonomialIdeal::from_vecs(2, rows))
}

fn cx_family(params: &Params) -> Result<ExperimentReport> {
    params.allow_only(&["N"])?;
    let ns = u32_list(params, "N", &[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12])?;
    if ns.contains(&0) {
        return Err(Error::BadParam("N must be positive".into()));
    }
    let ring = RingSpec::polynomial(2);
    let mod_x = ring.mod_variable(0)?;
    let mut rows = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let a = cx_ideal(n)?;
        let mut row =
            ReportRow { sample: i as u64, param_n: Some(n.into()), ideal: a.to_string(), ..Default::default() };
        let len = colength(&ring, &a)?;
        let len_x = colength(&mod_x, &a)?;
        let n64 = u64::from(n);
        row.check(len_x == n64.pow(3), || format!("len(R/(I,x)) = {len_x} != N^3 = {}", n64.pow(3)));
        let want = n64.pow(3) + n64 * (n64 - 1) / 2;
        row.check(len == want, || format!("len(R/I) = {len} != {want}"));
        row.colength = Some(len);
        row.mu = Some(min_gens(&ring, &a)?);
        row.ord = Some(ops::ord(&ring, &a)?);
        row.socle_len = Some(socle_length(&ring, &a)?);
        row.e = Some(hs_multiplicity(&ring, &a)?.value);
        row.ehk = Some(hk_multiplicity(&ring, &a)?.value);
        let r = ratio(len_x, len).ok_or(Error::Internal("empty quotient".into()))?;
        row.deviation = Some(Rational::one() - &r);
        row.ratio = Some(r);
        row.push_extra("colength_mod_x", len_x);
        rows.push(row);
    }
    let params = Params::new().with("N", &join(&ns));
    Ok(ExperimentReport::new("cx-family", params, rows, Trend::None))
}

/// `Σ_{i=1}^N (x,y)^i z^{N-i} + (z^L)` in `K[x,y,z]`.
pub(crate) fn colon_family_ideal(n: u32, l: u32) -> MonomialIdeal {
    let mut rows = vec![vec![0, 0, l]];
    for i in 1..=n {
        for a in 0..=i {
            rows.push(vec![a, i - a, n - i]);
        }
    }
    MonomialIdeal::from_vecs(3, rows)
}

fn socle_colon(params: &Params) -> Result<ExperimentReport> {
    params.allow_only(&["N", "L"])?;
    let ns = u32_list(params, "N", &[2, 3, 4, 5, 6])?;
    let ls = u32_list(params, "L", &[10, 50, 200])?;
    let ring = RingSpec::polynomial(3);
    let xy = MonomialIdeal::from_rows(3, &[&[1, 0, 0], &[0, 1, 0]])?;
    let mut rows = Vec::new();
    for &n in &ns {
        for &l in &ls {
            if n < 1 || l < n {
                return Err(Error::BadParam(format!("need 1 <= N <= L, got N = {n}, L = {l}")));
            }
            let a = colon_family_ideal(n, l);
            let mut row = ReportRow {
                sample: rows.len() as u64,
                param_n: Some(n.into()),
                ideal: a.to_string(),
                ..Default::default()
            };
            let colon = ops::colon(&a, &xy)?;
            let expected = MonomialIdeal::maximal_power(3, n - 1);
            row.check(colon == expected, || format!("I : (x,y) = {colon}, expected m^{}", n - 1));
            let len = colength(&ring, &a)?;
            let want: u64 = u64::from(l - n + 1) + (2..=u64::from(n)).map(|j| j * (j + 1) / 2).sum::<u64>();
            row.check(len == want, || format!("len(R/I) = {len} != {want}"));
            let quot = colon_quotient_length(&ring, &a, &xy)?;
            row.colength = Some(len);
            row.mu = Some(min_gens(&ring, &a)?);
            row.ord = Some(ops::ord(&ring, &a)?);
            row.socle_len = Some(socle_length(&ring, &a)?);
            let r = ratio(quot, len).ok_or(Error::Internal("empty quotient".into()))?;
            row.deviation = Some(Rational::one() - &r);
            row.ratio = Some(r);
            row.push_extra("L", l);
            row.push_extra("colon_quotient_length", quot);
            rows.push(row);
        }
    }
    let params = Params::new().with("N", &join(&ns)).with("L", &join(&ls));
    Ok(ExperimentReport::new("socle-colon", params, rows, Trend::None))
}

/// `m^n + x·m^{⌈δn⌉}` in `K[x,y]`, read in `K[x,y]/(x^2)`.
pub(crate) fn nonreduced_ideal(n: u32, delta: &Rational) -> Result<MonomialIdeal> {
    let x = MonomialIdeal::pure_power_gen(2, 0, 1);
    let k = ceil_mul(delta, n);
    ops::sum(&MonomialIdeal::maximal_power(2, n), &ops::product(&x, &MonomialIdeal::maximal_power(2, k))?)
}

fn nonreduced(params: &Params) -> Result<ExperimentReport> {
    params.allow_only(&["n", "delta", "eps"])?;
    let ns = u32_list(params, "n", &(2..=20).collect::<Vec<_>>())?;
    let delta = params.rational("delta", Rational::new(1.into(), 2.into()))?;
    let eps = params.rational("eps", Rational::new(1.into(), 5.into()))?;
    if !(delta > Rational::zero() && delta < Rational::one()) {
        return Err(Error::BadParam(format!("delta must lie strictly between 0 and 1, got {delta}")));
    }
    if ns.contains(&0) {
        return Err(Error::BadParam("n must be positive".into()));
    }
    let ring = RingSpec::new(2, MonomialIdeal::pure_power_gen(2, 0, 2))?;
    let limit = int(2) / (Rational::one() + &delta);
    let mut rows = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let a = nonreduced_ideal(n, &delta)?;
        let mut row =
            ReportRow { sample: i as u64, param_n: Some(n.into()), ideal: a.to_string(), ..Default::default() };
        let len = colength(&ring, &a)?;
        let e = hs_multiplicity(&ring, &a)?.value;
        let ehk = hk_multiplicity(&ring, &a)?.value;
        let k = ceil_mul(&delta, n);
        row.check(e == int(2 * u64::from(n)), || format!("e = {e} != 2n = {}", 2 * n));
        let want = u64::from(n) + u64::from(k);
        row.check(len == want, || format!("len = {len} != n + ceil(delta n) = {want}"));
        row.check(ehk == e, || format!("dimension one but e_HK = {ehk} != e = {e}"));
        let closed = integral_closure(&ring.lift(&a)?)?;
        let closed_mn = integral_closure(&ring.lift(&MonomialIdeal::maximal_power(2, n))?)?;
        row.push_extra("closure_equals_closure_of_m^n", closed == closed_mn);
        let len_q = int(len);
        row.margin = Some(&e - (Rational::one() + &eps) * &len_q);
        let r = &e / &len_q;
        row.deviation = Some(abs_diff(&r, &limit));
        row.ratio = Some(r);
        row.colength = Some(len);
        row.mu = Some(min_gens(&ring, &a)?);
        row.ord = Some(ops::ord(&ring, &a)?);
        row.socle_len = Some(socle_length(&ring, &a)?);
        row.e = Some(e);
        row.ehk = Some(ehk);
        rows.push(row);
    }
    let params = Params::new().with("n", &join(&ns)).with("delta", &delta.to_string()).with("eps", &eps.to_string());
    Ok(ExperimentReport::new("nonreduced", params, rows, Trend::None))
}

/// Base ideals for the `T`-adic extension rows.
pub(crate) fn t_adic_bases() -> Vec<MonomialIdeal> {
    vec![
        MonomialIdeal::from_vecs(2, vec![vec![2, 0], vec![1, 1], vec![0, 3]]),
        MonomialIdeal::from_vecs(2, vec![vec![3, 0], vec![0, 2]]),
    ]
}

/// `I·K[x,y,T] + (T^L)`.
pub(crate) fn t_adic_extension(a: &MonomialIdeal, l: u32) -> MonomialIdeal {
    let n = a.nvars();
    let mut rows: Vec<Vec<u32>> = a
        .gens()
        .iter()
        .map(|g| {
            let mut v = g.exps().to_vec();
            v.push(0);
            v
        })
        .collect();
    let mut t = vec![0; n + 1];
    t[n] = l;
    rows.push(t);
    MonomialIdeal::from_vecs(n + 1, rows)
}

/// `m^N + m^{N-1}T + ... + mT^{N-1} + mT^N + ... + mT^{L-1} + T^L` over
/// `K[u]/(u^r)`, as an ideal of `K[u,T]`.
pub(crate) fn t_example_ideal(n: u32, l: u32) -> MonomialIdeal {
    let mut rows: Vec<Vec<u32>> = (0..n).map(|i| vec![n - i, i]).collect();
    rows.extend((n..l).map(|i| vec![1, i]));
    rows.push(vec![0, l]);
    MonomialIdeal::from_vecs(2, rows)
}

fn t_adic(params: &Params) -> Result<ExperimentReport> {
    params.allow_only(&["mode", "L", "n", "N", "example_L", "r", "eps"])?;
    let mode = params.get("mode").unwrap_or("both");
    let (lemma, example) = match mode {
        "both" => (true, true),
        "lemma" => (true, false),
        "example" => (false, true),
        other => return Err(Error::BadParam(format!("mode: expected lemma, example or both, got `{other}`"))),
    };
    let ls = u32_list(params, "L", &[2, 5, 10])?;
    let n_max = params.int("n", 4)? as u32;
    let big_n = params.int("N", 3)? as u32;
    let example_ls = u32_list(params, "example_L", &(4..=40).collect::<Vec<_>>())?;
    let r = params.int("r", 4)? as u32;
    let eps = params.rational("eps", Rational::new(1.into(), 2.into()))?;
    if ls.contains(&0) || n_max == 0 || big_n == 0 || r == 0 {
        return Err(Error::BadParam("L, n, N and r must be positive".into()));
    }
    let mut rows = Vec::new();

    if lemma {
        let k2 = RingSpec::polynomial(2);
        let k3 = RingSpec::polynomial(3);
        for base in t_adic_bases() {
            let e_base = hs_multiplicity(&k2, &base)?.value;
            let base_seq = hs_sequence(&k2, &base, n_max)?;
            for &l in &ls {
                let j = t_adic_extension(&base, l);
                let mut row = ReportRow {
                    sample: rows.len() as u64,
                    param_n: Some(l.into()),
                    ideal: j.to_string(),
                    ..Default::default()
                };
                let e = hs_multiplicity(&k3, &j)?.value;
                let target = int(l.into()) * &e_base;
                row.check(e == target, || format!("e(J) = {e} != L e(I) = {target}"));
                let seq = hs_sequence(&k3, &j, n_max)?;
                let mut partial = 0u64;
                for (k, (&got, &b)) in seq.iter().zip(&base_seq).enumerate() {
                    partial += b;
                    let want = u64::from(l) * partial;
                    row.check(got == want, || format!("len(S/J^{}) = {got} != {want}", k + 1));
                }
                let len = seq[0];
                row.colength = Some(len);
                row.mu = Some(min_gens(&k3, &j)?);
                row.ord = Some(ops::ord(&k3, &j)?);
                row.socle_len = Some(socle_length(&k3, &j)?);
                let rr = &e / &target;
                row.deviation = Some(abs_diff(&rr, &Rational::one()));
                row.ratio = Some(rr);
                row.e = Some(e);
                row.ehk = Some(int(len));
                row.push_extra("part", "lemma");
                rows.push(row);
            }
        }
    }

    if example {
        let ring = RingSpec::new(2, MonomialIdeal::pure_power_gen(2, 0, r))?;
        let e_r = int(r.into());
        let d_plus_one_fact = int(2);
        for &l in &example_ls {
            if l <= big_n {
                return Err(Error::BadParam(format!("example_L must exceed N = {big_n}, got {l}")));
            }
            let j = t_example_ideal(big_n, l);
            let mut row = ReportRow {
                sample: rows.len() as u64,
                param_n: Some(l.into()),
                ideal: j.to_string(),
                ..Default::default()
            };
            let len = colength(&ring, &j)?;
            let want = (2..=big_n).map(|k| u64::from(k.min(r))).sum::<u64>() + u64::from(l - big_n + 1);
            row.check(len == want, || format!("len(S/J) = {len} != {want}"));
            let e = hs_multiplicity(&ring, &j)?.value;
            let target = int(l.into()) * &e_r;
            row.check(e == target, || format!("e(J) = {e} != L e(R) = {target}"));
            let len_q = int(len);
            row.margin = Some(&e - &d_plus_one_fact * (Rational::one() + &eps) * &len_q);
            let rr = &e / &len_q;
            row.deviation = Some(abs_diff(&rr, &e_r));
            row.ratio = Some(rr);
            row.colength = Some(len);
            row.mu = Some(min_gens(&ring, &j)?);
            row.ord = Some(ops::ord(&ring, &j)?);
            row.socle_len = Some(socle_length(&ring, &j)?);
            row.ehk = Some(hk_multiplicity(&ring, &j)?.value);
            row.e = Some(e);
            row.push_extra("part", "example");
            rows.push(row);
        }
    }

    let params = Params::new()
        .with("mode", mode)
        .with("L", &join(&ls))
        .with("n", &n_max.to_string())
        .with("N", &big_n.to_string())
        .with("example_L", &join(&example_ls))
        .with("r", &r.to_string())
        .with("eps", &eps.to_string());
    Ok(ExperimentReport::new("t-adic", params, rows, Trend::None))
}

fn dim_one_limit(params: &Params) -> Result<ExperimentReport> {
    params.allow_only(&["N"])?;
    let ns = u32_list(params, "N", &(1..=50).collect::<Vec<_>>())?;
    if ns.contains(&0) {
        return Err(Error::BadParam("N must be positive".into()));
    }
    let ring = RingSpec::new(2, MonomialIdeal::from_vecs(2, vec![vec![2, 1]]))?;
    let limit = int(ring.top_faces().map(|f| f.local_length).max().unwrap_or(0));
    let x = MonomialIdeal::pure_power_gen(2, 0, 1);
    let mut rows = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let a = ops::sum(&x, &MonomialIdeal::maximal_power(2, n))?;
        let mut row =
            ReportRow { sample: i as u64, param_n: Some(n.into()), ideal: a.to_string(), ..Default::default() };
        let len = colength(&ring, &a)?;
        let e = hs_multiplicity(&ring, &a)?.value;
        let r = &e / int(len);
        let n64 = u64::from(n);
        let want = Rational::new((2 * n64 + 1).into(), n64.into());
        row.check(r == want, || format!("e/len = {r} != (2N+1)/N = {want}"));
        let dev = abs_diff(&r, &limit);
        let bound = Rational::new(1.into(), n64.into());
        row.check(dev <= bound, || format!("|e/len - {limit}| = {dev} > 1/N"));
        row.colength = Some(len);
        row.mu = Some(min_gens(&ring, &a)?);
        row.ord = Some(ops::ord(&ring, &a)?);
        row.socle_len = Some(socle_length(&ring, &a)?);
        row.ehk = Some(hk_multiplicity(&ring, &a)?.value);
        row.e = Some(e);
        row.deviation = Some(dev);
        row.ratio = Some(r);
        rows.push(row);
    }
    let params = Params::new().with("N", &join(&ns));
    Ok(ExperimentReport::new("dim-one-limit", params, rows, Trend::NonIncreasing(vec![Metric::Deviation])))
}

fn power_ratio(params: &Params) -> Result<ExperimentReport> {
    params.allow_only(&["n"])?;
    let ns = u32_list(params, "n", &[1, 2, 3, 4, 5, 6, 7, 8])?;
    if ns.contains(&0) {
        return Err(Error::BadParam("n must be positive".into()));
    }
    let ring = RingSpec::new(3, MonomialIdeal::from_vecs(3, vec![vec![1, 1, 1]]))?;
    let j = MonomialIdeal::maximal_power(3, 2);
    let mut rows = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let a = ops::power(&j, n);
        let mut row =
            ReportRow { sample: i as u64, param_n: Some(n.into()), ideal: a.to_string(), ..Default::default() };
        let len = colength(&ring, &a)?;
        let ehk = hk_multiplicity(&ring, &a)?.value;
        let e = hs_multiplicity(&ring, &a)?.value;
        row.check(&e / int(2) <= ehk && ehk <= e, || format!("chain fails: e = {e}, e_HK = {ehk}"));
        let r = &ehk / int(len);
        row.deviation = Some(abs_diff(&r, &Rational::one()));
        row.ratio = Some(r);
        row.colength = Some(len);
        row.mu = Some(min_gens(&ring, &a)?);
        row.ord = Some(ops::ord(&ring, &a)?);
        row.socle_len = Some(socle_length(&ring, &a)?);
        row.e = Some(e);
        row.ehk = Some(ehk);
        rows.push(row);
    }
    let params = Params::new().with("n", &join(&ns));
    Ok(ExperimentReport::new("power-ratio", params, rows, Trend::NonIncreasing(vec![Metric::Deviation])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, params: Params) -> ExperimentReport {
        let rep = run_named_family(name, &params).unwrap();
        assert!(rep.passed(), "{}", rep.render_table());
        rep
    }

    #[test]
    fn cx_family_at_four() {
        let rep = run("cx-family", Params::new().with("N", "4"));
        let row = &rep.rows[0];
        assert_eq!(row.colength, Some(70));
        assert_eq!(row.extra("colength_mod_x"), Some("64"));
        assert_eq!(row.ratio, Some(Rational::new(32.into(), 35.into())));
    }

    #[test]
    fn colon_family_small() {
        let a = colon_family_ideal(2, 5);
        assert_eq!(
            a,
            MonomialIdeal::from_rows(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 5]])
                .unwrap()
        );
        let rep = run("socle-colon", Params::new().with("N", "4").with("L", "200"));
        assert_eq!(rep.rows[0].colength, Some(216));
        assert_eq!(rep.rows[0].ratio, Some(Rational::new(103.into(), 108.into())));
    }

    #[test]
    fn nonreduced_rows() {
        let rep = run("nonreduced", Params::new().with("n", "2..6"));
        let four = &rep.rows[2];
        assert_eq!(four.e, Some(int(8)));
        assert_eq!(four.colength, Some(6));
        assert_eq!(four.extra("closure_equals_closure_of_m^n"), Some("true"));
        assert_eq!(four.margin, Some(int(8) - Rational::new(36.into(), 5.into())));
    }

    #[test]
    fn t_adic_rows() {
        let rep = run("t-adic", Params::new().with("L", "2").with("n", "3").with("example_L", "4,9"));
        let first = &rep.rows[0];
        assert_eq!(first.e, Some(int(10)));
        assert_eq!(first.colength, Some(8));
        let ex: Vec<&ReportRow> = rep.rows.iter().filter(|r| r.extra("part") == Some("example")).collect();
        assert_eq!(ex[0].colength, Some(7));
        assert_eq!(ex[0].e, Some(int(16)));
        assert_eq!(ex[1].margin, Some(int(0)));
    }

    #[test]
    fn dim_one_limit_rows() {
        let rep = run("dim-one-limit", Params::new().with("N", "1..10"));
        assert_eq!(rep.rows[4].e, Some(int(11)));
        assert_eq!(rep.summary.max_dev, int(1));
    }

    #[test]
    fn power_ratio_closed_form() {
        let rep = run("power-ratio", Params::new().with("n", "1..4"));
        for row in &rep.rows {
            let n = row.param_n.unwrap();
            let dev = Rational::new((6 * n - 1).into(), (6 * n * n - 3 * n + 1).into());
            assert_eq!(row.deviation, Some(dev));
        }
    }

    #[test]
    fn unknown_family_and_params() {
        assert_eq!(run_named_family("nope", &Params::new()), Err(Error::UnknownFamily("nope".into())));
        assert!(matches!(run_named_family("cx-family", &Params::new().with("M", "3")), Err(Error::BadParam(_))));
        assert!(matches!(run_named_family("nonreduced", &Params::new().with("delta", "3/2")), Err(Error::BadParam(_))));
    }
}
