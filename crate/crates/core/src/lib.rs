//! Exact computations on monomial ideals in polynomial rings and in monomial
//! quotient rings `K[x₁..x_d]/D`.
//!
//! Everything is combinatorial: lengths are counts of standard monomials,
//! Hilbert–Samuel multiplicities are normalized volumes of Newton polyhedron
//! complements, and Hilbert–Kunz multiplicities of monomial ideals reduce to
//! colengths. Values are exact `u64` counts or [`Rational`]s.
//!
//! ```
//! use monomial_lech::{colength, hs_multiplicity, MonomialIdeal, Rational, RingSpec};
//!
//! let ring = RingSpec::polynomial(2);
//! let i = MonomialIdeal::from_rows(2, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap();
//! assert_eq!(colength(&ring, &i).unwrap(), 4);
//! assert_eq!(hs_multiplicity(&ring, &i).unwrap().value, Rational::from_integer(5.into()));
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod experiments;
pub mod ideal;
pub mod multiplicity;
pub mod newton;
pub mod ops;
pub mod parse;
pub mod ring;

/// Exact rational numbers used for volumes and multiplicities.
pub type Rational = num_rational::BigRational;

pub use counting::{colength, colon_quotient_length, min_gens, min_gens_by_length, socle_length};
pub use error::{Error, Result};
pub use ideal::{ExponentVector, MonomialIdeal};
pub use multiplicity::{
    hanes_holds, hk_multiplicity, hk_sequence, hs_estimate, hs_multiplicity, hs_sequence, ring_multiplicity, Method,
    MultiplicityResult,
};
pub use newton::{
    complement_volume, integral_closure, is_integrally_closed, newton_polyhedron, Facet, NewtonPolyhedron,
};
pub use parse::{format_ideal_file, parse_ideal_file, IdealFile, ParseError};
pub use ring::{is_m_primary, make_ring, RingSpec};
