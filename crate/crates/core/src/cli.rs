//! The `lech` command line.
//!
//! ```text
//! lech compute <file> <invariant>
//! lech experiment <name> [--seed S] [--out path.csv] [--samples n] [--param k=v]... [--k v]...
//! lech fuzz [--dim d] [--quotient m,...] [--samples n] [--seed S] [--out path.csv] ...
//! lech list
//! ```
//!
//! Exit status: 0 success or PASS, 1 FAIL, 2 usage or parse error,
//! 3 a mathematical precondition does not hold.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::counting::{colength, min_gens, socle_length};
use crate::error::Error;
use crate::experiments::{registry, run_experiment, Params};
use crate::multiplicity::{hk_multiplicity, hk_sequence, hs_multiplicity, hs_sequence};
use crate::newton::integral_closure;
use crate::ops;
use crate::parse::{parse_ideal_file, IdealFile};
use crate::Rational;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lech", version, about = "Exact invariants of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one invariant of the ideal in FILE.
    ///
    /// INVARIANT is one of colength, mu, ord, socle, closure, e, ehk,
    /// hs-seq:<n>, hk-seq:<p>:<e>.
    Compute { file: std::path::PathBuf, invariant: String },
    /// Run a named experiment and print its summary line.
    #[command(disable_help_flag = true)]
    Experiment {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        options: Vec<String>,
    },
    /// Shorthand for `experiment fuzz`.
    #[command(disable_help_flag = true)]
    Fuzz {
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        options: Vec<String>,
    },
    /// List experiment names.
    List,
}

/// Which invariant `compute` prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Colength,
    Mu,
    Ord,
    Socle,
    Closure,
    E,
    Ehk,
    HsSeq(u32),
    HkSeq(u32, u32),
}

impl std::str::FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedInput(format!("unknown invariant `{s}`"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        Ok(match parts.as_slice() {
            ["colength"] => Invariant::Colength,
            ["mu"] => Invariant::Mu,
            ["ord"] => Invariant::Ord,
            ["socle"] => Invariant::Socle,
            ["closure"] => Invariant::Closure,
            ["e"] => Invariant::E,
            ["ehk"] => Invariant::Ehk,
            ["hs-seq", n] => Invariant::HsSeq(num(n)?),
            ["hk-seq", p, e] => Invariant::HkSeq(num(p)?, num(e)?),
            _ => return Err(bad()),
        })
    }
}

fn join_rationals(xs: &[Rational]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// The text `compute` prints for an ideal file.
pub fn cmd_compute(text: &str, invariant: Invariant) -> Result<String, Error> {
    let (ring, a) = parse_ideal_file(text)?;
    let names = IdealFile::parse(text)?.vars;
    Ok(match invariant {
        Invariant::Colength => format!("colength = {}", colength(&ring, &a)?),
        Invariant::Mu => format!("mu = {}", min_gens(&ring, &a)?),
        Invariant::Ord => format!("ord = {}", ops::ord(&ring, &a)?),
        Invariant::Socle => format!("socle = {}", socle_length(&ring, &a)?),
        Invariant::Closure => {
            let closed = integral_closure(&ring.lift(&a)?)?;
            let body = closed.display_with(&names);
            if ring.is_polynomial() {
                format!("closure = ({body})")
            } else {
                format!("closure = ({body}) (ambient ring)")
            }
        }
        Invariant::E => {
            let r = hs_multiplicity(&ring, &a)?;
            format!("e = {} ({})", r.value, r.method)
        }
        Invariant::Ehk => {
            let r = hk_multiplicity(&ring, &a)?;
            format!("e_HK = {} ({})", r.value, r.method)
        }
        Invariant::HsSeq(n) => {
            let seq = hs_sequence(&ring, &a, n)?;
            let body = seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            format!("hs-seq = [{body}]")
        }
        Invariant::HkSeq(p, e) => format!("hk-seq = [{}]", join_rationals(&hk_sequence(&ring, &a, p, e)?)),
    })
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MalformedInput(_)
        | Error::NvarsMismatch { .. }
        | Error::InvalidRing(_)
        | Error::UnknownFamily(_)
        | Error::BadParam(_)
        | Error::UnsatisfiableConfig(_) => EXIT_USAGE,
        Error::NotMPrimary
        | Error::InfiniteVolume
        | Error::UndefinedOrder
        | Error::ZeroIdeal
        | Error::UnitIdeal
        | Error::UnsupportedDimension(_)
        | Error::InsufficientData { .. }
        | Error::Precondition(_)
        | Error::Overflow(_)
        | Error::Internal(_) => EXIT_PRECONDITION,
    }
}

/// Options shared by `experiment` and `fuzz`.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub out: Option<std::path::PathBuf>,
    pub params: Params,
}

/// Parses `--seed`, `--out`, `--samples`, `--param k=v` and free-form
/// `--key value` / `--key=value` pairs.
pub fn parse_run_options(args: &[String]) -> Result<RunOptions, Error> {
    let mut opts = RunOptions::default();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let Some(flag) = arg.strip_prefix("--") else {
            return Err(Error::BadParam(format!("unexpected argument `{arg}`")));
        };
        let (key, inline) = match flag.split_once('=') {
            Some((k, v)) => (k, Some(v.to_string())),
            None => (flag, None),
        };
        let value = match inline {
            Some(v) => v,
            None => it.next().cloned().ok_or_else(|| Error::BadParam(format!("--{key} needs a value")))?,
        };
        match key {
            "seed" => {
                opts.seed = value
                    .parse()
                    .map_err(|_| Error::BadParam(format!("--seed expects an unsigned integer, got `{value}`")))?;
            }
            "out" => opts.out = Some(value.into()),
            "param" => {
                let (k, v) = value
                    .split_once('=')
                    .ok_or_else(|| Error::BadParam(format!("--param expects k=v, got `{value}`")))?;
                opts.params.insert(k.trim(), v.trim());
            }
            "" => return Err(Error::BadParam("empty option name".into())),
            other => opts.params.insert(other, &value),
        }
    }
    Ok(opts)
}

fn run_named(name: &str, options: &[String], out: &mut dyn Write) -> Result<i32, Error> {
    let opts = parse_run_options(options)?;
    let report = run_experiment(name, &opts.params, opts.seed)?;
    let io = |e: std::io::Error| Error::Precondition(format!("cannot write output: {e}"));
    match &opts.out {
        Some(path) => std::fs::write(path, report.to_csv()).map_err(io)?,
        None => out.write_all(report.render_table().as_bytes()).map_err(io)?,
    }
    writeln!(out, "{}", report.summary_line()).map_err(io)?;
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute { file, invariant } => (|| {
            let inv: Invariant = invariant.parse()?;
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", file.display())))?;
            let line = cmd_compute(&text, inv)?;
            let _ = writeln!(out, "{line}");
            Ok(EXIT_PASS)
        })(),
        Command::Experiment { name, options } => run_named(&name, &options, out),
        Command::Fuzz { options } => run_named("fuzz", &options, out),
        Command::List => {
            for name in registry() {
                let _ = writeln!(out, "{name}");
            }
            Ok(EXIT_PASS)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FILE: &str = "vars: x y\nideal: x^2, x*y, y^3\n";

    #[test]
    fn compute_outputs() {
        assert_eq!(cmd_compute(FILE, Invariant::E).unwrap(), "e = 5 (exact-volume)");
        assert_eq!(cmd_compute(FILE, Invariant::Ehk).unwrap(), "e_HK = 4 (exact-regular-colength)");
        assert_eq!(cmd_compute(FILE, Invariant::Colength).unwrap(), "colength = 4");
        assert_eq!(cmd_compute(FILE, Invariant::Mu).unwrap(), "mu = 3");
        assert_eq!(cmd_compute(FILE, Invariant::Ord).unwrap(), "ord = 2");
        assert_eq!(cmd_compute(FILE, Invariant::Socle).unwrap(), "socle = 2");
        assert_eq!(cmd_compute(FILE, Invariant::HsSeq(2)).unwrap(), "hs-seq = [4, 13]");
        assert_eq!(cmd_compute(FILE, Invariant::HkSeq(2, 2)).unwrap(), "hk-seq = [4, 4]");
        assert_eq!(
            cmd_compute("vars: x y\nideal: x^2, y^2\n", Invariant::Closure).unwrap(),
            "closure = (x^2, x*y, y^2)"
        );
    }

    #[test]
    fn quotient_outputs() {
        let text = "vars: x y\nquotient: x^2\nideal: y^4, x*y^2\n";
        assert_eq!(cmd_compute(text, Invariant::E).unwrap(), "e = 8 (exact-associativity)");
        assert_eq!(cmd_compute(text, Invariant::Colength).unwrap(), "colength = 6");
    }

    #[test]
    fn invariant_names() {
        assert_eq!("hk-seq:3:4".parse::<Invariant>().unwrap(), Invariant::HkSeq(3, 4));
        assert_eq!("hs-seq:7".parse::<Invariant>().unwrap(), Invariant::HsSeq(7));
        assert!("volume".parse::<Invariant>().is_err());
        assert!("hs-seq:x".parse::<Invariant>().is_err());
    }

    #[test]
    fn run_options() {
        let args: Vec<String> = ["--n", "2..20", "--delta=1/2", "--param", "eps=1/4", "--seed", "9"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let opts = parse_run_options(&args).unwrap();
        assert_eq!(opts.seed, 9);
        assert_eq!(opts.params.get("n"), Some("2..20"));
        assert_eq!(opts.params.get("delta"), Some("1/2"));
        assert_eq!(opts.params.get("eps"), Some("1/4"));
        assert!(parse_run_options(&["--seed".to_string()]).is_err());
        assert!(parse_run_options(&["stray".to_string()]).is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::NotMPrimary), EXIT_PRECONDITION);
        assert_eq!(exit_code(&Error::BadParam("x".into())), EXIT_USAGE);
        assert_eq!(exit_code(&Error::UnknownFamily("x".into())), EXIT_USAGE);
    }

    #[test]
    fn run_in_process() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["lech", "experiment", "dim-one-limit", "--N", "1..5"], &mut out, &mut err);
        assert_eq!(code, EXIT_PASS);
        assert!(String::from_utf8(out).unwrap().ends_with("PASS max_dev=1\n"));
        let code = run(["lech", "experiment", "nope"], &mut Vec::new(), &mut err);
        assert_eq!(code, EXIT_USAGE);
        assert_eq!(run(["lech", "bogus"], &mut Vec::new(), &mut Vec::new()), EXIT_USAGE);
    }
}
