//! Frobenius powers: the normalized lengths `len(R/a^[q]) / q^d` approach the
//! Hilbert–Kunz multiplicity as `q = p^e` grows.

use monomial_lech::{hk_multiplicity, hk_sequence, MonomialIdeal, RingSpec};

fn main() -> monomial_lech::Result<()> {
    let ring = RingSpec::new(3, MonomialIdeal::from_rows(3, &[&[1, 1, 1]])?)?;
    let a = MonomialIdeal::from_rows(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 2], &[1, 1, 0]])?;
    let limit = hk_multiplicity(&ring, &a)?.value;
    println!("R = K[x,y,z]/(xyz), a = {a}, e_HK = {limit}");
    for p in [2, 3] {
        println!("p = {p}");
        for (e, v) in hk_sequence(&ring, &a, p, 5)?.into_iter().enumerate() {
            println!("  q = {p}^{}: {v}  (off by {})", e + 1, &v - &limit);
        }
    }
    Ok(())
}
