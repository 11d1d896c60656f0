//! Colength, generators, order and socle of a plane monomial ideal, with
//! its staircase drawn in the terminal.

use monomial_lech::{colength, min_gens, ops, socle_length, MonomialIdeal, RingSpec};

fn main() -> monomial_lech::Result<()> {
    let ring = RingSpec::polynomial(2);
    let a = MonomialIdeal::from_rows(2, &[&[5, 0], &[3, 1], &[2, 3], &[0, 4]])?;

    println!("a        = {a}");
    println!("len(R/a) = {}", colength(&ring, &a)?);
    println!("mu(a)    = {}", min_gens(&ring, &a)?);
    println!("ord(a)   = {}", ops::ord(&ring, &a)?);
    println!("socle    = {}", socle_length(&ring, &a)?);

    // '#' marks a minimal generator, '.' a standard monomial
    let (bx, by) = (a.pure_power_bound(0).unwrap(), a.pure_power_bound(1).unwrap());
    for y in (0..=by).rev() {
        let row: String = (0..=bx)
            .map(|x| {
                let g = vec![x, y].into();
                if a.gens().contains(&g) {
                    '#'
                } else if a.contains(&g) {
                    ' '
                } else {
                    '.'
                }
            })
            .collect();
        println!("  {row}");
    }
    Ok(())
}
