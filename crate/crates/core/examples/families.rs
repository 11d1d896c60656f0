//! Every named experiment family run with its default parameters.

use monomial_lech::experiments::{self, Params};

fn main() -> monomial_lech::Result<()> {
    for name in experiments::FAMILIES {
        let report = experiments::run_named_family(name, &Params::new())?;
        println!("{name:>14}: {:3} rows  {}", report.rows.len(), report.summary_line());
    }

    let cx = experiments::run_named_family("cx-family", &Params::new().with("N", "2..6"))?;
    print!("{}", cx.render_table());
    Ok(())
}
