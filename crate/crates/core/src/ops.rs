//! Exact arithmetic on monomial ideals.
//!
//! Everything here works on generators and returns canonical ideals. Ring
//! awareness is limited to [`ord`]; the other operations act in the ambient
//! polynomial ring and callers add the defining ideal where needed.

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::ring::RingSpec;

pub fn sum(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.check_same(b)?;
    let raw = a.raw_gens().chain(b.raw_gens()).map(|g| g.to_vec()).collect();
    Ok(MonomialIdeal::from_vecs(a.nvars(), raw))
}

/// Folds [`sum`] over a non-empty list.
pub fn sum_all(parts: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let (first, rest) = parts.split_first().ok_or_else(|| Error::MalformedInput("empty ideal list".into()))?;
    for p in rest {
        first.check_same(p)?;
    }
    let raw = parts.iter().flat_map(|p| p.raw_gens().map(|g| g.to_vec())).collect();
    Ok(MonomialIdeal::from_vecs(first.nvars(), raw))
}

pub fn product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.check_same(b)?;
    let mut raw = Vec::with_capacity(a.num_gens() * b.num_gens());
    for g in a.raw_gens() {
        for h in b.raw_gens() {
            raw.push(g.iter().zip(h).map(|(x, y)| x + y).collect());
        }
    }
    Ok(MonomialIdeal::from_vecs(a.nvars(), raw))
}

/// `a^n` by iterated products; `a^0` is the unit ideal.
pub fn power(a: &MonomialIdeal, n: u32) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit(a.nvars());
    for _ in 0..n {
        acc = product(&acc, a).expect("same ring");
    }
    acc
}

/// All powers `a^1, ..., a^n_max`, sharing the iterated products.
pub fn powers(a: &MonomialIdeal, n_max: u32) -> Vec<MonomialIdeal> {
    let mut out = Vec::with_capacity(n_max as usize);
    let mut acc = MonomialIdeal::unit(a.nvars());
    for _ in 0..n_max {
        acc = product(&acc, a).expect("same ring");
        out.push(acc.clone());
    }
    out
}

/// `a^{[q]}`: every generator raised to the `q`-th power.
pub fn frobenius_power(a: &MonomialIdeal, q: u32) -> Result<MonomialIdeal> {
    if q == 0 {
        return Err(Error::MalformedInput("Frobenius exponent must be positive".into()));
    }
    let mut raw = Vec::with_capacity(a.num_gens());
    for g in a.raw_gens() {
        let mut v = Vec::with_capacity(g.len());
        for &e in g {
            v.push(e.checked_mul(q).ok_or(Error::Overflow("frobenius_power"))?);
        }
        raw.push(v);
    }
    Ok(MonomialIdeal::from_vecs(a.nvars(), raw))
}

/// `(a : x^g)`.
pub fn colon_monomial(a: &MonomialIdeal, g: &ExponentVector) -> MonomialIdeal {
    let raw = a.raw_gens().map(|h| h.iter().zip(g.exps()).map(|(x, y)| x.saturating_sub(*y)).collect()).collect();
    MonomialIdeal::from_vecs(a.nvars(), raw)
}

/// `(a : b)`, the intersection of `(a : g)` over generators `g` of `b`.
pub fn colon(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.check_same(b)?;
    if b.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut acc: Option<MonomialIdeal> = None;
    for g in b.gens() {
        let part = colon_monomial(a, g);
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
        if acc.as_ref().is_some_and(|i| i.is_zero()) {
            break;
        }
    }
    Ok(acc.expect("b has a generator"))
}

/// `a ∩ b` via pairwise lcms.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.check_same(b)?;
    let mut raw = Vec::with_capacity(a.num_gens() * b.num_gens());
    for g in a.raw_gens() {
        for h in b.raw_gens() {
            raw.push(g.iter().zip(h).map(|(x, y)| *x.max(y)).collect());
        }
    }
    Ok(MonomialIdeal::from_vecs(a.nvars(), raw))
}

/// `a ⊆ b`.
pub fn ideal_leq(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.nvars() == b.nvars() && a.gens().iter().all(|g| b.contains(g))
}

pub fn contains(a: &MonomialIdeal, m: &ExponentVector) -> bool {
    a.contains(m)
}

/// Largest `N` with `a ⊆ m^N` in the ring: the least total degree of a
/// generator that survives in the quotient.
pub fn ord(ring: &RingSpec, a: &MonomialIdeal) -> Result<u64> {
    ring.check_ideal(a)?;
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    a.gens()
        .iter()
        .filter(|g| !ring.defining().contains(g))
        .map(|g| g.total_degree())
        .min()
        .ok_or(Error::UndefinedOrder)
}

/// Slice of `a` at `x_var^i`: the ideal of monomials `u` in the remaining
/// variables with `u * x_var^i ∈ a`.
pub fn project(a: &MonomialIdeal, var: usize, i: u32) -> Result<MonomialIdeal> {
    let n = a.nvars();
    if n < 2 {
        return Err(Error::MalformedInput("projection needs at least two variables".into()));
    }
    if var >= n {
        return Err(Error::MalformedInput(format!("variable index {var} out of range")));
    }
    let raw = a
        .raw_gens()
        .filter(|g| g[var] <= i)
        .map(|g| g.iter().enumerate().filter(|(k, _)| *k != var).map(|(_, &e)| e).collect())
        .collect();
    Ok(MonomialIdeal::from_vecs(n - 1, raw))
}

/// The ascending chain `project(a, var, 0) ⊆ project(a, var, 1) ⊆ ...`,
/// stopping at the first unit ideal or once every generator has entered.
pub fn projection_chain(a: &MonomialIdeal, var: usize) -> Result<Vec<MonomialIdeal>> {
    let top = a.raw_gens().map(|g| g[var]).max().unwrap_or(0);
    let mut out = Vec::new();
    for i in 0..=top {
        let slice = project(a, var, i)?;
        let done = slice.is_unit();
        out.push(slice);
        if done {
            break;
        }
    }
    Ok(out)
}

/// Inverts the variables in `vars`: their coordinates are set to zero and the
/// result is read in the remaining variables, in their original order.
pub fn saturate_variables(a: &MonomialIdeal, vars: &[usize]) -> Result<MonomialIdeal> {
    if let Some(&v) = vars.iter().find(|&&v| v >= a.nvars()) {
        return Err(Error::MalformedInput(format!("variable index {v} out of range")));
    }
    let keep: Vec<usize> = (0..a.nvars()).filter(|i| !vars.contains(i)).collect();
    if keep.is_empty() {
        return Err(Error::MalformedInput("cannot saturate every variable".into()));
    }
    Ok(restrict_to(a, &keep))
}

/// Reads `a` in the variables `keep` after zeroing every other coordinate.
pub(crate) fn restrict_to(a: &MonomialIdeal, keep: &[usize]) -> MonomialIdeal {
    let raw = a.raw_gens().map(|g| keep.iter().map(|&i| g[i]).collect()).collect();
    MonomialIdeal::from_vecs(keep.len(), raw)
}

/// Image of `a` in `R/P = K[x_face]` for the face prime generated by the
/// complementary variables: generators involving a cover variable vanish.
pub fn face_image(a: &MonomialIdeal, face: &[usize]) -> MonomialIdeal {
    let raw = a
        .raw_gens()
        .filter(|g| g.iter().enumerate().all(|(i, &e)| e == 0 || face.contains(&i)))
        .map(|g| face.iter().map(|&i| g[i]).collect())
        .collect();
    MonomialIdeal::from_vecs(face.len(), raw)
}
