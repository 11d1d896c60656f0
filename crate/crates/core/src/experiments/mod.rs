//! Example families and randomized property sweeps.
//!
//! Every experiment produces an [`ExperimentReport`]: one [`ReportRow`] per
//! sample or family member and a [`Summary`] folded from the rows. Samples
//! are evaluated in parallel and assembled in index order, so a report is a
//! pure function of its name, parameters and seed.

mod families;
mod fuzz;
mod params;
mod report;
pub mod rng;
mod sweeps;

pub use families::{run_named_family, FAMILIES};
pub use fuzz::{random_m_primary_ideal, run_inequality_fuzz, FuzzConfig};
pub use params::{parse_int_list, parse_rational, Params};
pub use report::{ExperimentReport, Metric, ReportRow, Summary, Trend, Verdict, CSV_HEADER};
pub use sweeps::{run_blum_liu_window, run_socle_depth_sweep};

use crate::error::{Error, Result};

/// Every experiment name accepted by [`run_experiment`].
pub fn registry() -> Vec<&'static str> {
    let mut names = vec!["fuzz", "socle-depth", "blum-liu"];
    names.extend_from_slice(FAMILIES);
    names
}

/// Dispatches by name. The sweeps read their ring and sizes from `params`;
/// see the individual runners for the keys.
pub fn run_experiment(name: &str, params: &Params, seed: u64) -> Result<ExperimentReport> {
    match name {
        "fuzz" => run_inequality_fuzz(&FuzzConfig::from_params(params, seed)?),
        "socle-depth" => sweeps::socle_depth_from_params(params, seed),
        "blum-liu" => sweeps::blum_liu_from_params(params, seed),
        _ if FAMILIES.contains(&name) => run_named_family(name, params),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}
