//! Random m-primary ideals checked against the Lech, Hanes and
//! Hilbert–Kunz inequalities.

use monomial_lech::experiments::FuzzConfig;
use monomial_lech::{experiments, MonomialIdeal, RingSpec};

fn main() -> monomial_lech::Result<()> {
    let rings = [
        RingSpec::polynomial(2),
        RingSpec::polynomial(3),
        RingSpec::new(2, MonomialIdeal::from_rows(2, &[&[2, 0]])?)?,
        RingSpec::new(3, MonomialIdeal::from_rows(3, &[&[1, 1, 1]])?)?,
    ];
    for ring in rings {
        let mut cfg = FuzzConfig::new(ring.clone(), 2024);
        cfg.samples = 200;
        let report = experiments::run_inequality_fuzz(&cfg)?;
        let s = &report.summary;
        let name = if ring.is_polynomial() {
            format!("K[{} vars]", ring.nvars())
        } else {
            format!("K[{} vars]/{}", ring.nvars(), ring.defining())
        };
        println!(
            "{name}: {} samples, {} failed, min Lech margin {}",
            s.rows,
            s.failed_rows,
            s.min_margin.as_ref().map_or("-".into(), |m| m.to_string())
        );
    }
    Ok(())
}
