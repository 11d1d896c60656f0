//! Exit criteria, run without the libtest harness so every
//! `criterion N: PASS|FAIL` line is printed. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use monomial_lech::experiments::{
    run_blum_liu_window, run_inequality_fuzz, run_named_family, run_socle_depth_sweep, FuzzConfig, Params,
};
use monomial_lech::{
    colength, hk_multiplicity, hk_sequence, hs_estimate, hs_multiplicity, hs_sequence, ops, ring_multiplicity, Method,
    MonomialIdeal, Rational, RingSpec,
};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

fn ring(n: usize, defining: &[&[u32]]) -> RingSpec {
    if defining.is_empty() {
        RingSpec::polynomial(n)
    } else {
        RingSpec::new(n, MonomialIdeal::from_rows(n, defining).unwrap()).unwrap()
    }
}

fn verdict(id: u32, title: &str, failures: &[String], started: Instant, budget: Duration) -> bool {
    let elapsed = started.elapsed();
    let in_time = elapsed <= budget;
    let ok = failures.is_empty() && in_time;
    println!(
        "criterion {id}: {} {title} ({:.2}s of {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    if !in_time {
        println!("    took {elapsed:?}, budget {budget:?}");
    }
    ok
}

/// Box count of exponent vectors not divisible by any generator.
fn brute_colength(gens: &[Vec<u32>], bounds: &[u32]) -> u64 {
    let n = bounds.len();
    let mut cur = vec![0u32; n];
    let mut count = 0;
    loop {
        if !gens.iter().any(|g| g.iter().zip(&cur).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            cur[k] += 1;
            if cur[k] < bounds[k] {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

fn criterion_01_cx_family_lengths() -> bool {
    let t = Instant::now();
    let rep = run_named_family("cx-family", &Params::new().with("N", "2..12")).unwrap();
    let mut fails = Vec::new();
    for row in &rep.rows {
        let n = row.param_n.unwrap();
        let len_x: u64 = row.extra("colength_mod_x").unwrap().parse().unwrap();
        if len_x != n.pow(3) {
            fails.push(format!("N = {n}: len(R/(I,x)) = {len_x}"));
        }
        let n32 = n as u32;
        let mut gens: Vec<Vec<u32>> = (0..n32).map(|i| vec![n32 - i, i]).collect();
        gens.push(vec![0, n32.pow(3)]);
        let oracle = brute_colength(&gens, &[n32 + 1, n32.pow(3) + 1]);
        let closed = n.pow(3) + n * (n - 1) / 2;
        if row.colength != Some(oracle) || oracle != closed {
            fails.push(format!("N = {n}: len = {:?}, brute force {oracle}, closed form {closed}", row.colength));
        }
        let ratio = row.ratio.clone().unwrap();
        if ratio != q(len_x as i64, oracle as i64) {
            fails.push(format!("N = {n}: ratio {ratio}"));
        }
        if n >= 5 && ratio <= q(9, 10) {
            fails.push(format!("N = {n}: ratio {ratio} <= 9/10"));
        }
    }
    verdict(1, "cx-family lengths", &fails, t, Duration::from_secs(10))
}

fn criterion_02_nonreduced_identities() -> bool {
    let t = Instant::now();
    let r = ring(2, &[&[2, 0]]);
    let mut fails = Vec::new();
    for n in 2..=20u32 {
        let x = MonomialIdeal::pure_power_gen(2, 0, 1);
        let k = n.div_ceil(2);
        let a = ops::sum(
            &MonomialIdeal::maximal_power(2, n),
            &ops::product(&x, &MonomialIdeal::maximal_power(2, k)).unwrap(),
        )
        .unwrap();
        let e = hs_multiplicity(&r, &a).unwrap().value;
        let len = colength(&r, &a).unwrap();
        if e != int(2 * n as u64) {
            fails.push(format!("n = {n}: e = {e}"));
        }
        if len != (n + k) as u64 {
            fails.push(format!("n = {n}: len = {len}"));
        }
        let bound = q(6, 5) * int(len);
        if e <= bound {
            fails.push(format!("n = {n}: e = {e} is not > 6/5 * {len} = {bound}"));
        }
    }
    verdict(2, "nonreduced family identities and e > 1.2 len", &fails, t, Duration::from_secs(5))
}

fn colon_ideal(n: u32, l: u32) -> MonomialIdeal {
    let mut rows = vec![vec![0, 0, l]];
    for i in 1..=n {
        for a in 0..=i {
            rows.push(vec![a, i - a, n - i]);
        }
    }
    let gens = rows.into_iter().map(monomial_lech::ExponentVector::new).collect();
    MonomialIdeal::new(3, gens).unwrap()
}

fn criterion_03_colon_counterexample() -> bool {
    let t = Instant::now();
    let k3 = RingSpec::polynomial(3);
    let xy = MonomialIdeal::from_rows(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
    let mut fails = Vec::new();
    for n in 2..=6u32 {
        for l in [10u32, 50, 200] {
            let a = colon_ideal(n, l);
            let colon = ops::colon(&a, &xy).unwrap();
            if colon != MonomialIdeal::maximal_power(3, n - 1) {
                fails.push(format!("N = {n}, L = {l}: colon = {colon}"));
            }
            if n == 4 && l == 200 {
                let len = colength(&k3, &a).unwrap();
                let inner = colength(&k3, &colon).unwrap();
                let ratio = q((len - inner) as i64, len as i64);
                if ratio < q(9, 10) {
                    fails.push(format!("colon quotient ratio {ratio} < 9/10"));
                }
            }
        }
    }
    let rep = run_named_family("socle-colon", &Params::new()).unwrap();
    if !rep.passed() {
        fails.push(format!("family report: {}", rep.summary_line()));
    }
    verdict(3, "colon counterexample", &fails, t, Duration::from_secs(30))
}

fn extend_by_t(a: &MonomialIdeal, l: u32) -> MonomialIdeal {
    let mut gens: Vec<monomial_lech::ExponentVector> = a
        .gens()
        .iter()
        .map(|g| {
            let mut v = g.exps().to_vec();
            v.push(0);
            v.into()
        })
        .collect();
    gens.push(vec![0, 0, l].into());
    MonomialIdeal::new(3, gens).unwrap()
}

fn criterion_04_t_adic_extension() -> bool {
    let t = Instant::now();
    let k2 = RingSpec::polynomial(2);
    let k3 = RingSpec::polynomial(3);
    let bases = [
        MonomialIdeal::from_rows(2, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap(),
        MonomialIdeal::from_rows(2, &[&[3, 0], &[0, 2]]).unwrap(),
    ];
    let mut fails = Vec::new();
    for base in &bases {
        let e_base = hs_multiplicity(&k2, base).unwrap().value;
        let base_seq = hs_sequence(&k2, base, 4).unwrap();
        for l in [2u32, 5, 10] {
            let j = extend_by_t(base, l);
            let e = hs_multiplicity(&k3, &j).unwrap();
            if e.method != Method::ExactVolume || e.value != int(l as u64) * &e_base {
                fails.push(format!("{base}, L = {l}: e(J) = {} ({})", e.value, e.method));
            }
            for n in 1..=4u32 {
                let jn = ops::power(&j, n);
                let bounds: Vec<u32> = (0..3).map(|i| jn.pure_power_bound(i).unwrap() + 1).collect();
                let gens: Vec<Vec<u32>> = jn.gens().iter().map(|g| g.exps().to_vec()).collect();
                let direct = brute_colength(&gens, &bounds);
                let formula = l as u64 * base_seq[..n as usize].iter().sum::<u64>();
                if direct != formula {
                    fails.push(format!("{base}, L = {l}, n = {n}: direct {direct} != {formula}"));
                }
            }
        }
    }
    verdict(4, "T-adic extension multiplicity and lengths", &fails, t, Duration::from_secs(60))
}

fn criterion_05_large_multiplicity_example() -> bool {
    let t = Instant::now();
    let r = ring(2, &[&[4, 0]]);
    let mut fails = Vec::new();
    let e_r = ring_multiplicity(&r).unwrap().value;
    if e_r != int(4) {
        fails.push(format!("e(R) = {e_r}"));
    }
    for l in 4..=200u32 {
        let mut rows: Vec<Vec<u32>> = vec![vec![3, 0], vec![2, 1], vec![1, 2]];
        rows.extend((3..l).map(|i| vec![1, i]));
        rows.push(vec![0, l]);
        let j = MonomialIdeal::new(2, rows.into_iter().map(Into::into).collect()).unwrap();
        let len = colength(&r, &j).unwrap();
        let e = hs_multiplicity(&r, &j).unwrap().value;
        if len != l as u64 + 3 {
            fails.push(format!("L = {l}: len = {len}"));
        }
        if e != int(4 * l as u64) {
            fails.push(format!("L = {l}: e = {e}"));
        }
        if l >= 9 && e < int(2) * q(3, 2) * int(len) {
            fails.push(format!("L = {l}: e = {e} < 3 * {len}"));
        }
    }
    let rep = run_named_family("t-adic", &Params::new().with("mode", "example")).unwrap();
    if !rep.passed() {
        fails.push(format!("family report: {}", rep.summary_line()));
    }
    verdict(5, "one-dimensional nonreduced base example", &fails, t, Duration::from_secs(10))
}

fn criterion_06_inequality_fuzz() -> bool {
    let t = Instant::now();
    let rings = [ring(2, &[]), ring(3, &[]), ring(2, &[&[2, 0]]), ring(3, &[&[1, 1, 1]])];
    let mut fails = Vec::new();
    for r in rings {
        let mut cfg = FuzzConfig::new(r.clone(), 42);
        cfg.samples = 500;
        let rep = run_inequality_fuzz(&cfg).unwrap();
        if rep.rows.len() != 500 {
            fails.push(format!("{}: {} rows", r.defining(), rep.rows.len()));
        }
        for row in rep.rows.iter().filter(|row| !row.failures.is_empty()) {
            fails.push(format!("ring {}: sample {} {}: {:?}", r.defining(), row.sample, row.ideal, row.failures));
        }
    }
    verdict(6, "inequality fuzz in four rings", &fails, t, Duration::from_secs(300))
}

fn criterion_07_socle_depth_sweep() -> bool {
    let t = Instant::now();
    let rep = run_socle_depth_sweep(&RingSpec::polynomial(3), &[2, 4, 8, 16], 100, 7).unwrap();
    let mut fails: Vec<String> = rep
        .rows
        .iter()
        .filter(|r| !r.failures.is_empty())
        .map(|r| format!("sample {} {}: {:?}", r.sample, r.ideal, r.failures))
        .collect();
    if rep.rows.len() != 400 {
        fails.push(format!("{} rows", rep.rows.len()));
    }
    for w in rep.summary.group_maxima.windows(2) {
        for (k, name) in ["socle ratio", "mu/len"].iter().enumerate() {
            if w[1].1[k] > w[0].1[k] {
                fails.push(format!(
                    "max {name} rises from {} at depth {} to {} at depth {}",
                    w[0].1[k], w[0].0, w[1].1[k], w[1].0
                ));
            }
        }
    }
    verdict(7, "socle and generator ratios shrink with depth", &fails, t, Duration::from_secs(120))
}

fn criterion_08_window_ratios() -> bool {
    let t = Instant::now();
    let half = q(1, 2);
    let xyz = ring(3, &[&[1, 1, 1]]);
    let rep = run_blum_liu_window(&xyz, &half, &[4, 8, 16], 50, 11).unwrap();
    let mut fails: Vec<String> = rep
        .rows
        .iter()
        .filter(|r| !r.failures.is_empty())
        .map(|r| format!("sample {}: {:?}", r.sample, r.failures))
        .collect();
    for w in rep.summary.group_maxima.windows(2) {
        if w[1].1[0] > w[0].1[0] {
            fails.push(format!(
                "max deviation rises from {} (n = {}) to {} (n = {})",
                w[0].1[0], w[0].0, w[1].1[0], w[1].0
            ));
        }
    }
    let regular = run_blum_liu_window(&RingSpec::polynomial(3), &half, &[4, 8, 16], 50, 11).unwrap();
    for row in &regular.rows {
        if row.ratio != Some(int(1)) {
            fails.push(format!("regular sample {}: ratio {:?}", row.sample, row.ratio));
        }
    }
    verdict(8, "window ratio deviations shrink", &fails, t, Duration::from_secs(180))
}

fn criterion_09_dimension_one_limit() -> bool {
    let t = Instant::now();
    let r = ring(2, &[&[2, 1]]);
    let mut fails = Vec::new();
    for n in 1..=50u32 {
        let a = ops::sum(&MonomialIdeal::pure_power_gen(2, 0, 1), &MonomialIdeal::maximal_power(2, n)).unwrap();
        let e = hs_multiplicity(&r, &a).unwrap().value;
        let len = colength(&r, &a).unwrap();
        let ratio = &e / int(len);
        if ratio != q(2 * n as i64 + 1, n as i64) {
            fails.push(format!("N = {n}: e/len = {ratio}"));
        }
        let dev = &ratio - int(2);
        if n >= 10 && (dev > q(1, 10) || dev < q(-1, 10)) {
            fails.push(format!("N = {n}: e/len = {ratio} is not within 1/10 of 2"));
        }
    }
    verdict(9, "dimension-one limit ratio", &fails, t, Duration::from_secs(5))
}

fn regression_set() -> Vec<(RingSpec, MonomialIdeal)> {
    let k2 = RingSpec::polynomial(2);
    let k3 = RingSpec::polynomial(3);
    let xy = ring(2, &[&[1, 1]]);
    let xyz = ring(3, &[&[1, 1, 1]]);
    let mixed = ring(3, &[&[1, 1, 0], &[1, 0, 1]]);
    let id = |n: usize, rows: &[&[u32]]| MonomialIdeal::from_rows(n, rows).unwrap();
    vec![
        (k2.clone(), id(2, &[&[2, 0], &[1, 1], &[0, 3]])),
        (k2.clone(), id(2, &[&[3, 0], &[0, 5]])),
        (k2.clone(), id(2, &[&[4, 0], &[2, 1], &[0, 3]])),
        (k2.clone(), id(2, &[&[5, 0], &[3, 1], &[1, 2], &[0, 4]])),
        (k2.clone(), MonomialIdeal::maximal_power(2, 3)),
        (k2.clone(), id(2, &[&[6, 0], &[1, 1], &[0, 6]])),
        (k3.clone(), MonomialIdeal::maximal(3)),
        (k3.clone(), id(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 2]])),
        (k3.clone(), id(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0], &[0, 0, 2]])),
        (k3.clone(), id(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 0, 3], &[1, 1, 1]])),
        (k3.clone(), id(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[0, 1, 1]])),
        (k3.clone(), id(3, &[&[3, 0, 0], &[1, 1, 0], &[0, 3, 0], &[1, 0, 1], &[0, 0, 2]])),
        (xy.clone(), id(2, &[&[2, 0], &[0, 3]])),
        (xy.clone(), id(2, &[&[1, 0], &[0, 4]])),
        (xyz.clone(), MonomialIdeal::maximal(3)),
        (xyz.clone(), MonomialIdeal::maximal_power(3, 2)),
        (xyz.clone(), id(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 2], &[1, 1, 0]])),
        (xyz.clone(), id(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 0, 3]])),
        (mixed.clone(), id(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])),
        (mixed.clone(), id(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 3]])),
    ]
}

fn criterion_10_oracle_consistency() -> bool {
    let t = Instant::now();
    let set = regression_set();
    assert_eq!(set.len(), 20);
    let mut fails = Vec::new();
    for (r, a) in &set {
        let exact = hs_multiplicity(r, a).unwrap();
        let estimate = hs_estimate(r, a, 40).unwrap();
        if !exact.method.is_exact() || exact.value != estimate.value {
            fails.push(format!(
                "{} / {a}: exact {} ({}) vs estimate {}",
                r.defining(),
                exact.value,
                exact.method,
                estimate.value
            ));
        }
        if r.is_polynomial() {
            if exact.method != Method::ExactVolume {
                fails.push(format!("{a}: method {}", exact.method));
            }
            continue;
        }
        let hk = hk_multiplicity(r, a).unwrap().value;
        let devs: Vec<Rational> =
            hk_sequence(r, a, 2, 5).unwrap().into_iter().map(|v| if v >= hk { &v - &hk } else { &hk - &v }).collect();
        if devs.windows(2).any(|w| w[1] >= w[0]) {
            let shown: Vec<String> = devs.iter().map(|d| d.to_string()).collect();
            fails.push(format!("{} / {a}: deviations {shown:?} not strictly decreasing", r.defining()));
        }
    }
    verdict(10, "volume, estimator and Frobenius oracles agree", &fails, t, Duration::from_secs(180))
}

fn main() {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_cx_family_lengths,
        criterion_02_nonreduced_identities,
        criterion_03_colon_counterexample,
        criterion_04_t_adic_extension,
        criterion_05_large_multiplicity_example,
        criterion_06_inequality_fuzz,
        criterion_07_socle_depth_sweep,
        criterion_08_window_ratios,
        criterion_09_dimension_one_limit,
        criterion_10_oracle_consistency,
    ];
    let failed = criteria.iter().filter(|c| !std::panic::catch_unwind(**c).unwrap_or(false)).count();
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
