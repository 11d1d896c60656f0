//! Polynomial rings and their monomial quotients.

use crate::counting::poly_colength;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// A minimal prime `(x_i : i in cover)` of a monomial quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePrime {
    pub cover: Vec<usize>,
    /// Variables not in the cover; `R/P` is the polynomial ring on these.
    pub face: Vec<usize>,
    /// Length of the localization `R_P`.
    pub local_length: u64,
    pub top_dimensional: bool,
}

/// `K[x_0, ..., x_{n-1}] / defining` with `defining` a monomial ideal
/// (possibly zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    nvars: usize,
    defining: MonomialIdeal,
    krull_dim: usize,
    faces: Vec<FacePrime>,
}

impl RingSpec {
    /// Builds the ring and its minimal primes.
    ///
    /// Minimal primes of a monomial quotient are generated by the minimal
    /// hitting sets of the generator supports; they are found by exhaustive
    /// search over variable subsets in order of size.
    pub fn new(nvars: usize, defining: MonomialIdeal) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidRing("ring needs at least one variable".into()));
        }
        if defining.nvars() != nvars {
            return Err(Error::NvarsMismatch { expected: nvars, found: defining.nvars() });
        }
        if defining.is_unit() {
            return Err(Error::InvalidRing("defining ideal is the unit ideal".into()));
        }
        if nvars > 20 {
            return Err(Error::InvalidRing(format!("{nvars} variables is beyond desk scale")));
        }
        if defining.is_zero() {
            let faces = vec![FacePrime {
                cover: Vec::new(),
                face: (0..nvars).collect(),
                local_length: 1,
                top_dimensional: true,
            }];
            return Ok(Self { nvars, defining, krull_dim: nvars, faces });
        }

        let supports: Vec<u32> =
            defining.gens().iter().map(|g| g.support().iter().fold(0u32, |m, &i| m | (1 << i))).collect();
        let hits = |mask: u32| supports.iter().all(|&s| s & mask != 0);

        let mut masks: Vec<u32> = (0..(1u32 << nvars)).filter(|&m| hits(m)).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let minimal: Vec<u32> =
            masks.iter().copied().filter(|&m| (0..nvars).all(|i| m & (1 << i) == 0 || !hits(m & !(1 << i)))).collect();
        let min_size = minimal
            .iter()
            .map(|m| m.count_ones())
            .min()
            .ok_or_else(|| Error::Internal("no hitting set for a proper defining ideal".into()))?
            as usize;
        let krull_dim = nvars - min_size;

        let mut faces = Vec::with_capacity(minimal.len());
        for mask in minimal {
            let cover: Vec<usize> = (0..nvars).filter(|&i| mask & (1 << i) != 0).collect();
            let face: Vec<usize> = (0..nvars).filter(|&i| mask & (1 << i) == 0).collect();
            let local_length = local_length(&defining, &cover)?;
            let top_dimensional = face.len() == krull_dim;
            faces.push(FacePrime { cover, face, local_length, top_dimensional });
        }
        Ok(Self { nvars, defining, krull_dim, faces })
    }

    /// The polynomial ring in `nvars` variables.
    pub fn polynomial(nvars: usize) -> Self {
        Self::new(nvars, MonomialIdeal::zero(nvars)).expect("polynomial ring is always valid")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn defining(&self) -> &MonomialIdeal {
        &self.defining
    }

    pub fn krull_dim(&self) -> usize {
        self.krull_dim
    }

    pub fn faces(&self) -> &[FacePrime] {
        &self.faces
    }

    pub fn top_faces(&self) -> impl Iterator<Item = &FacePrime> {
        self.faces.iter().filter(|f| f.top_dimensional)
    }

    pub fn is_polynomial(&self) -> bool {
        self.defining.is_zero()
    }

    /// Reduced: the defining ideal is squarefree.
    pub fn is_reduced(&self) -> bool {
        self.defining.gens().iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    pub fn is_equidimensional(&self) -> bool {
        self.faces.iter().all(|f| f.top_dimensional)
    }

    /// Maximal ideal of the ambient polynomial ring.
    pub fn maximal_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::maximal(self.nvars)
    }

    /// `a + defining`, the ambient preimage of the image of `a`.
    pub fn lift(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        crate::ops::sum(a, &self.defining)
    }

    /// `R/(x_var)`, modelled by adding `x_var` to the defining ideal.
    pub fn mod_variable(&self, var: usize) -> Result<RingSpec> {
        let x = MonomialIdeal::pure_power_gen(self.nvars, var, 1);
        RingSpec::new(self.nvars, crate::ops::sum(&self.defining, &x)?)
    }

    pub(crate) fn check_ideal(&self, a: &MonomialIdeal) -> Result<()> {
        if a.nvars() != self.nvars {
            return Err(Error::NvarsMismatch { expected: self.nvars, found: a.nvars() });
        }
        Ok(())
    }
}

/// Alias matching the construction vocabulary used elsewhere.
pub fn make_ring(nvars: usize, defining: MonomialIdeal) -> Result<RingSpec> {
    RingSpec::new(nvars, defining)
}

/// True iff `ideal + defining` contains a pure power of every variable.
pub fn is_m_primary(ring: &RingSpec, ideal: &MonomialIdeal) -> bool {
    if ideal.nvars() != ring.nvars {
        return false;
    }
    (0..ring.nvars).all(|i| ideal.pure_power_bound(i).is_some() || ring.defining.pure_power_bound(i).is_some())
}

/// Colength of the defining ideal after inverting the face variables,
/// read in the polynomial ring on the cover variables.
fn local_length(defining: &MonomialIdeal, cover: &[usize]) -> Result<u64> {
    let local = crate::ops::restrict_to(defining, cover);
    let primary = (0..cover.len()).all(|i| local.pure_power_bound(i).is_some());
    if !primary {
        return Err(Error::Internal(format!("localized defining ideal {local} is not primary to the cover {cover:?}")));
    }
    poly_colength(&local)
}
