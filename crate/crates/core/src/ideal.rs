//! Exponent vectors and monomial ideals in canonical minimal form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent of a monomial `x_0^{a_0} ... x_{n-1}^{a_{n-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn zeros(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// `x_var^k`.
    pub fn pure_power(nvars: usize, var: usize, k: u32) -> Self {
        let mut v = vec![0; nvars];
        v[var] = k;
        Self(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `self | other` componentwise.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        divides(&self.0, &other.0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the variable if this is a pure power `x_i^k` with `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A monomial ideal stored as its unique minimal generating set.
///
/// Generators are kept in descending lexicographic order and form an antichain under
/// divisibility. An empty generator list is the zero ideal; the unit ideal is
/// generated by the zero exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the canonical form of the ideal generated by `raw_gens`.
    pub fn new(nvars: usize, raw_gens: Vec<ExponentVector>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::MalformedInput("ideal needs at least one variable".into()));
        }
        for g in &raw_gens {
            if g.len() != nvars {
                return Err(Error::MalformedInput(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    g.len(),
                    nvars
                )));
            }
        }
        Ok(Self::from_vecs(nvars, raw_gens.into_iter().map(|g| g.0).collect()))
    }

    /// Convenience constructor from literal exponent rows.
    pub fn from_rows(nvars: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::new(nvars, rows.iter().map(|r| ExponentVector(r.to_vec())).collect())
    }

    pub(crate) fn from_vecs(nvars: usize, raw: Vec<Vec<u32>>) -> Self {
        debug_assert!(raw.iter().all(|g| g.len() == nvars));
        let gens = minimalize(nvars, raw).into_iter().map(ExponentVector).collect();
        Self { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self { nvars, gens: vec![ExponentVector::zeros(nvars)] }
    }

    /// The maximal ideal `m = (x_0, ..., x_{n-1})`.
    pub fn maximal(nvars: usize) -> Self {
        Self::maximal_power(nvars, 1)
    }

    /// `m^n`, generated by all monomials of total degree `n`.
    pub fn maximal_power(nvars: usize, n: u32) -> Self {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill_degree(&mut cur, 0, n, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        Self { nvars, gens: out.into_iter().map(ExponentVector).collect() }
    }

    /// Principal ideal `(x^g)`.
    pub fn principal(g: ExponentVector) -> Self {
        Self { nvars: g.len(), gens: vec![g] }
    }

    /// Principal ideal `(x_var^k)`.
    pub fn pure_power_gen(nvars: usize, var: usize, k: u32) -> Self {
        Self::principal(ExponentVector::pure_power(nvars, var, k))
    }

    /// Ideal generated by pure powers `x_i^{bounds[i]}`.
    pub fn pure_powers(bounds: &[u32]) -> Self {
        let n = bounds.len();
        Self::from_vecs(n, bounds.iter().enumerate().map(|(i, &b)| ExponentVector::pure_power(n, i, b).0).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.contains_slice(&m.0)
    }

    pub(crate) fn contains_slice(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(&g.0, m))
    }

    /// Smallest `k` with `x_var^k` a generator, if any.
    /// Smallest `k` with `x_var^k` in the ideal (`0` for the unit ideal).
    pub fn pure_power_bound(&self, var: usize) -> Option<u32> {
        if self.is_unit() {
            return Some(0);
        }
        self.gens.iter().filter(|g| g.pure_power_var() == Some(var)).map(|g| g.0[var]).min()
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.gens.iter().map(|g| g.total_degree()).min()
    }

    pub(crate) fn raw_gens(&self) -> impl Iterator<Item = &[u32]> {
        self.gens.iter().map(|g| g.0.as_slice())
    }

    pub(crate) fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    /// Renders generators as `x^2*y` style monomials with the given names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.gens.iter().map(|g| format_monomial(g, names)).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_with(&default_names(self.nvars)))
    }
}

/// `x, y, z, w` for up to four variables, `x0, x1, ...` beyond.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

pub fn format_monomial(g: &ExponentVector, names: &[String]) -> String {
    let factors: Vec<String> = g
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn fill_degree(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        cur[pos] = e;
        fill_degree(cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}

/// Reduces a generating set to the minimal antichain in canonical order.
pub(crate) fn minimalize(nvars: usize, mut raw: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    if raw.is_empty() {
        return raw;
    }
    let mut out = match nvars {
        1 => {
            let m = raw.iter().map(|g| g[0]).min().unwrap();
            vec![vec![m]]
        }
        2 => minimalize_2d(raw),
        3 => minimalize_3d(raw),
        _ => {
            raw.sort_unstable_by(|a, b| {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            });
            raw.dedup();
            let mut kept: Vec<Vec<u32>> = Vec::new();
            for g in raw {
                if !kept.iter().any(|h| divides(h, &g)) {
                    kept.push(g);
                }
            }
            kept
        }
    };
    // descending lex puts x^2 before x*y before y^3
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn minimalize_2d(mut raw: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    raw.sort_unstable();
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut best_y = u32::MAX;
    for g in raw {
        if g[1] < best_y {
            best_y = g[1];
            out.push(g);
        }
    }
    out
}

/// Sweep in increasing last coordinate, keeping a two-dimensional staircase
/// of everything accepted so far.
fn minimalize_3d(mut raw: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    raw.sort_unstable_by(|a, b| (a[2], a[0], a[1]).cmp(&(b[2], b[0], b[1])));
    raw.dedup();
    let mut stairs = Staircase::default();
    let mut out = Vec::new();
    for g in raw {
        if stairs.dominates(g[0], g[1]) {
            continue;
        }
        stairs.insert(g[0], g[1]);
        out.push(g);
    }
    out
}

/// Antichain of planar points: x increasing, y strictly decreasing.
#[derive(Debug, Default, Clone)]
pub(crate) struct Staircase {
    pts: BTreeMap<u32, u32>,
}

impl Staircase {
    /// Some stored point `(a, b)` has `a <= x` and `b <= y`.
    pub(crate) fn dominates(&self, x: u32, y: u32) -> bool {
        match self.pts.range(..=x).next_back() {
            Some((_, &b)) => b <= y,
            None => false,
        }
    }

    /// Inserts a point not dominated by the staircase.
    pub(crate) fn insert(&mut self, x: u32, y: u32) {
        let doomed: Vec<u32> = self.pts.range(x..).take_while(|(_, &b)| b >= y).map(|(&a, _)| a).collect();
        for a in doomed {
            self.pts.remove(&a);
        }
        self.pts.insert(x, y);
    }

    /// Number of lattice points not above the staircase, or `None` when the
    /// region is unbounded.
    pub(crate) fn count_below(&self) -> Option<u64> {
        let mut iter = self.pts.iter().peekable();
        let (&x0, _) = iter.peek()?;
        if x0 != 0 {
            return None;
        }
        let mut total = 0u64;
        let mut last: Option<(u32, u32)> = None;
        for (&x, &y) in self.pts.iter() {
            if let Some((px, py)) = last {
                total += (x - px) as u64 * py as u64;
            }
            last = Some((x, y));
        }
        match last {
            Some((_, 0)) => Some(total),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    #[test]
    fn divisible_generator_is_dropped() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[2, 1]]);
        assert_eq!(i, ideal(2, &[&[1, 1], &[2, 0]]));
        assert_eq!(i.num_gens(), 2);
    }

    #[test]
    fn antichain_is_kept() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(i.num_gens(), 3);
        for a in i.gens() {
            for b in i.gens() {
                assert!(a == b || !a.divides(b));
            }
        }
    }

    #[test]
    fn empty_list_is_zero_ideal() {
        let z = MonomialIdeal::new(1, vec![]).unwrap();
        assert!(z.is_zero());
        assert!(!z.contains(&ExponentVector::from([5])));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let err = MonomialIdeal::new(2, vec![ExponentVector::from([1, 2, 3])]).unwrap_err();
        assert!(matches!(err, Error::MalformedInput(_)));
    }

    #[test]
    fn duplicates_collapse() {
        let i = ideal(3, &[&[1, 2, 0], &[1, 2, 0], &[0, 0, 4]]);
        assert_eq!(i.num_gens(), 2);
    }

    #[test]
    fn maximal_power_counts() {
        assert_eq!(MonomialIdeal::maximal_power(2, 3).num_gens(), 4);
        assert_eq!(MonomialIdeal::maximal_power(3, 2).num_gens(), 6);
        assert_eq!(MonomialIdeal::maximal_power(4, 2).num_gens(), 10);
    }

    fn naive(raw: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> =
            raw.iter().filter(|g| !raw.iter().any(|h| h != *g && divides(h, g))).cloned().collect();
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    #[test]
    fn fast_paths_match_naive_sieve() {
        let mut state = 7u64;
        for nvars in 1..=4 {
            for _ in 0..200 {
                let k = 1 + (state % 12) as usize;
                let mut raw = Vec::new();
                for _ in 0..k {
                    let mut g = Vec::new();
                    for _ in 0..nvars {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        g.push(((state >> 33) % 5) as u32);
                    }
                    raw.push(g);
                }
                assert_eq!(minimalize(nvars, raw.clone()), naive(&raw), "{raw:?}");
            }
        }
    }

    #[test]
    fn staircase_counts_standard_monomials() {
        let mut s = Staircase::default();
        for (x, y) in [(0, 3), (1, 1), (2, 0)] {
            assert!(!s.dominates(x, y));
            s.insert(x, y);
        }
        assert_eq!(s.count_below(), Some(4));
        assert!(s.dominates(5, 0));
        assert!(!s.dominates(0, 2));
    }

    #[test]
    fn display_uses_names() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(i.to_string(), "(x^2, x*y, y^3)");
    }
}
