//! Lengths: colength, minimal generator counts, socles and colon quotients.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal, Staircase};
use crate::ops;
use crate::ring::{is_m_primary, RingSpec};

/// `ℓ(R/a)`, the number of standard monomials of `a + defining`.
pub fn colength(ring: &RingSpec, a: &MonomialIdeal) -> Result<u64> {
    ring.check_ideal(a)?;
    if !is_m_primary(ring, a) {
        return Err(Error::NotMPrimary);
    }
    poly_colength(&ring.lift(a)?)
}

/// Colength in the polynomial ring.
///
/// The staircase is cut into slices along the last variable; each slice is
/// the projection of the ideal at a fixed last exponent, and slice counts are
/// reused between consecutive generator heights. Two-variable slices are
/// counted directly from the planar staircase.
pub fn poly_colength(a: &MonomialIdeal) -> Result<u64> {
    let gens: Vec<Vec<u32>> = a.raw_gens().map(|g| g.to_vec()).collect();
    count_standard(a.nvars(), gens)?.ok_or(Error::NotMPrimary)
}

fn count_standard(nvars: usize, mut gens: Vec<Vec<u32>>) -> Result<Option<u64>> {
    match nvars {
        0 => Ok(Some(if gens.is_empty() { 1 } else { 0 })),
        1 => Ok(gens.iter().map(|g| g[0] as u64).min()),
        2 => {
            gens.sort_unstable();
            let mut stairs = Staircase::default();
            for g in &gens {
                if !stairs.dominates(g[0], g[1]) {
                    stairs.insert(g[0], g[1]);
                }
            }
            Ok(stairs.count_below())
        }
        _ => {
            let last = nvars - 1;
            gens.sort_unstable_by_key(|g| g[last]);
            if gens.first().is_none_or(|g| g[last] > 0) {
                return Ok(None);
            }
            let mut active: Vec<Vec<u32>> = Vec::new();
            let mut total: u64 = 0;
            let mut idx = 0;
            while idx < gens.len() {
                let height = gens[idx][last];
                while idx < gens.len() && gens[idx][last] == height {
                    active.push(gens[idx][..last].to_vec());
                    idx += 1;
                }
                active = minimalize(last, active);
                if active.iter().all(|g| g.iter().all(|&e| e == 0)) {
                    return Ok(Some(total));
                }
                let Some(slice) = count_standard(last, active.clone())? else {
                    return Ok(None);
                };
                let Some(next) = gens.get(idx).map(|g| g[last]) else {
                    return Ok(None);
                };
                let width = (next - height) as u64;
                total =
                    slice.checked_mul(width).and_then(|s| total.checked_add(s)).ok_or(Error::Overflow("colength"))?;
            }
            Ok(None)
        }
    }
}

/// Minimal number of generators of the image of `a` in the ring.
///
/// A monomial of `a + defining` outside `m·a + defining` must be a minimal
/// generator of `a` lying outside the defining ideal, so this is a filtered
/// generator count; [`min_gens_by_length`] computes the same number as a
/// difference of lengths.
pub fn min_gens(ring: &RingSpec, a: &MonomialIdeal) -> Result<u64> {
    ring.check_ideal(a)?;
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let count = a.gens().iter().filter(|g| !ring.defining().contains(g)).count();
    if count == 0 {
        return Err(Error::ZeroIdeal);
    }
    Ok(count as u64)
}

/// `ℓ(R/(m·a + defining)) − ℓ(R/(a + defining))` for m-primary `a`.
pub fn min_gens_by_length(ring: &RingSpec, a: &MonomialIdeal) -> Result<u64> {
    let ma = ops::product(&ring.maximal_ideal(), a)?;
    Ok(colength(ring, &ma)? - colength(ring, a)?)
}

/// `ℓ((a : m)/a)`.
pub fn socle_length(ring: &RingSpec, a: &MonomialIdeal) -> Result<u64> {
    colon_quotient_length(ring, a, &ring.maximal_ideal())
}

/// `ℓ((a : j)/a)` computed as `ℓ(R/a) − ℓ(R/(a : j))`.
pub fn colon_quotient_length(ring: &RingSpec, a: &MonomialIdeal, j: &MonomialIdeal) -> Result<u64> {
    let full = colength(ring, a)?;
    let col = ops::colon(&ring.lift(a)?, j)?;
    Ok(full - colength(ring, &col)?)
}
