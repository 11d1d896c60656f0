//! Reading the plain-text ideal format, reporting a parse error with its
//! position, and writing an ideal back out.

use monomial_lech::ideal::default_names;
use monomial_lech::{colength, format_ideal_file, hs_multiplicity, parse_ideal_file};

const INPUT: &str = "\
# a nonreduced ring
vars: x y
quotient: x^2
ideal: y^4, x*y^2
";

fn main() -> monomial_lech::Result<()> {
    let (ring, a) = parse_ideal_file(INPUT)?;
    let e = hs_multiplicity(&ring, &a)?;
    println!("parsed {a} in a ring of dimension {}", ring.krull_dim());
    println!("len = {}, e = {} ({})", colength(&ring, &a)?, e.value, e.method);
    print!("{}", format_ideal_file(&ring, &a, &default_names(2)));

    for bad in ["vars: x\nideal: x^0", "vars: x y\nideal: x*w", "vars: x y"] {
        match parse_ideal_file(bad) {
            Ok(_) => println!("unexpectedly parsed {bad:?}"),
            Err(err) => println!("{bad:?}: {err}"),
        }
    }
    Ok(())
}
