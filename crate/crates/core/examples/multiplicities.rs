//! Hilbert–Samuel and Hilbert–Kunz multiplicities, the length sequences they
//! come from, and the Lech and Hanes bounds they satisfy.

use monomial_lech::{
    colength, hanes_holds, hk_multiplicity, hs_estimate, hs_multiplicity, hs_sequence, min_gens, MonomialIdeal,
    Rational, RingSpec,
};

fn main() -> monomial_lech::Result<()> {
    let examples = [
        (2, MonomialIdeal::from_rows(2, &[&[2, 0], &[1, 1], &[0, 3]])?),
        (2, MonomialIdeal::from_rows(2, &[&[4, 0], &[1, 2], &[0, 5]])?),
        (3, MonomialIdeal::from_rows(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0], &[0, 0, 2]])?),
        (3, MonomialIdeal::maximal_power(3, 2)),
    ];
    for (d, a) in examples {
        let ring = RingSpec::polynomial(d);
        let len = colength(&ring, &a)?;
        let e = hs_multiplicity(&ring, &a)?;
        let ehk = hk_multiplicity(&ring, &a)?;
        let mu = min_gens(&ring, &a)?;
        println!("{a}");
        println!("  len = {len}, mu = {mu}");
        println!("  e    = {} ({})", e.value, e.method);
        println!("  e_HK = {} ({})", ehk.value, ehk.method);
        println!("  len(R/a^n), n = 1..6: {:?}", hs_sequence(&ring, &a, 6)?);
        println!("  finite-difference estimate at n = 20: {}", hs_estimate(&ring, &a, 20)?.value);
        let lech = Rational::from_integer((1..=d as u64).product::<u64>().into()) * Rational::from_integer(len.into());
        println!("  e <= d! len: {}", e.value <= lech);
        println!("  Hanes bound: {}", hanes_holds(d, &e.value, &ehk.value, mu)?);
    }
    Ok(())
}
