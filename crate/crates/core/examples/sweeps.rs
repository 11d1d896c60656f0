//! Depth and window sweeps: how socle and generator counts shrink relative
//! to length as ideals get deeper, and how e_HK/len settles near 1.

use monomial_lech::experiments::{run_blum_liu_window, run_socle_depth_sweep};
use monomial_lech::{MonomialIdeal, Rational, RingSpec};

fn main() -> monomial_lech::Result<()> {
    let poly = RingSpec::polynomial(3);
    let depth = run_socle_depth_sweep(&poly, &[2, 4, 8], 30, 1)?;
    println!("socle sweep in K[x,y,z]: {}", depth.summary_line());
    for (n, maxima) in &depth.summary.group_maxima {
        let shown: Vec<String> = maxima.iter().map(|m| m.to_string()).collect();
        println!("  depth {n}: max socle/len, mu/len = {}", shown.join(", "));
    }

    let xyz = RingSpec::new(3, MonomialIdeal::from_rows(3, &[&[1, 1, 1]])?)?;
    let half = Rational::new(1.into(), 2.into());
    let window = run_blum_liu_window(&xyz, &half, &[4, 8, 16], 20, 1)?;
    println!("window sweep in K[x,y,z]/(xyz): {}", window.summary_line());
    for (n, maxima) in &window.summary.group_maxima {
        println!("  n = {n}: max |e_HK/len - 1| = {}", maxima[0]);
    }
    Ok(())
}
