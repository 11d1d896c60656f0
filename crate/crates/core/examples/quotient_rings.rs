//! Monomial quotient rings: minimal primes, localization lengths, and
//! multiplicities computed through the associativity formula.

use monomial_lech::{colength, hk_multiplicity, hs_multiplicity, ring_multiplicity, MonomialIdeal, RingSpec};

fn main() -> monomial_lech::Result<()> {
    let rings = [
        MonomialIdeal::from_rows(2, &[&[2, 0]])?,
        MonomialIdeal::from_rows(2, &[&[2, 1]])?,
        MonomialIdeal::from_rows(3, &[&[1, 1, 1]])?,
        MonomialIdeal::from_rows(3, &[&[1, 1, 0], &[1, 0, 1]])?,
    ];
    for defining in rings {
        let n = defining.nvars();
        let ring = RingSpec::new(n, defining)?;
        println!(
            "R = K[{n} vars]/{}: dim {}, reduced {}, equidimensional {}",
            ring.defining(),
            ring.krull_dim(),
            ring.is_reduced(),
            ring.is_equidimensional()
        );
        for p in ring.faces() {
            println!(
                "  prime on {:?}: face {:?}, local length {}, top {}",
                p.cover, p.face, p.local_length, p.top_dimensional
            );
        }
        println!("  e(R) = {}", ring_multiplicity(&ring)?.value);
        let a = MonomialIdeal::maximal_power(n, 3);
        let e = hs_multiplicity(&ring, &a)?;
        let ehk = hk_multiplicity(&ring, &a)?;
        println!(
            "  m^3: len = {}, e = {} ({}), e_HK = {} ({})",
            colength(&ring, &a)?,
            e.value,
            e.method,
            ehk.value,
            ehk.method
        );
    }
    Ok(())
}
