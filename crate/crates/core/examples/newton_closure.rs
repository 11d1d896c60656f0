//! Newton polyhedra: facet inequalities, the integral closure, and the
//! normalized volume that gives the multiplicity.

use monomial_lech::{complement_volume, integral_closure, is_integrally_closed, newton_polyhedron, MonomialIdeal};

fn main() -> monomial_lech::Result<()> {
    for a in [
        MonomialIdeal::from_rows(2, &[&[4, 0], &[0, 4]])?,
        MonomialIdeal::from_rows(2, &[&[5, 0], &[1, 1], &[0, 5]])?,
        MonomialIdeal::from_rows(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])?,
        MonomialIdeal::from_rows(
            3,
            &[&[4, 0, 0], &[3, 1, 0], &[3, 0, 1], &[2, 1, 1], &[1, 0, 2], &[0, 2, 0], &[0, 1, 2], &[0, 0, 4]],
        )?,
    ] {
        let np = newton_polyhedron(&a)?;
        println!("{a}");
        for f in np.facets() {
            println!("  {:?} . x >= {}", f.normal, f.offset);
        }
        let vol = complement_volume(&np)?;
        println!("  volume under NP = {vol}");
        println!("  closure = {}", integral_closure(&a)?);
        println!("  integrally closed: {}", is_integrally_closed(&a)?);
    }
    Ok(())
}
