use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::params::Params;
use crate::Rational;

pub const CSV_HEADER: &str =
    "sample,param_n,colength,mu,ord,socle_len,e_num,e_den,ehk_num,ehk_den,ratio_num,ratio_den,verdict";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

/// One sample or family member.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportRow {
    pub sample: u64,
    pub param_n: Option<u64>,
    /// Human-readable generators of the ideal.
    pub ideal: String,
    pub colength: Option<u64>,
    pub mu: Option<u64>,
    pub ord: Option<u64>,
    pub socle_len: Option<u64>,
    pub e: Option<Rational>,
    pub ehk: Option<Rational>,
    pub ratio: Option<Rational>,
    /// Distance from the experiment's reference value; drives `max_dev`.
    pub deviation: Option<Rational>,
    /// Slack in the experiment's headline inequality; negative means violated.
    pub margin: Option<Rational>,
    /// Named exact values that have no CSV column.
    pub extra: Vec<(String, String)>,
    /// Descriptions of every check this row failed.
    pub failures: Vec<String>,
}

impl ReportRow {
    pub fn verdict(&self) -> Verdict {
        if self.failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn extra(&self, key: &str) -> Option<&str> {
        self.extra.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    pub(crate) fn push_extra(&mut self, key: &str, value: impl ToString) {
        self.extra.push((key.to_string(), value.to_string()));
    }

    fn csv_line(&self) -> String {
        let int = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        let rat = |v: &Option<Rational>| match v {
            Some(r) => format!("{},{}", r.numer(), r.denom()),
            None => ",".to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.sample,
            int(self.param_n),
            int(self.colength),
            int(self.mu),
            int(self.ord),
            int(self.socle_len),
            rat(&self.e),
            rat(&self.ehk),
            rat(&self.ratio),
            self.verdict().as_str()
        )
    }
}

/// Row quantities a trend rule can track.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Deviation,
    Ratio,
    MuOverColength,
}

impl Metric {
    fn of(self, row: &ReportRow) -> Option<Rational> {
        match self {
            Metric::Deviation => row.deviation.clone(),
            Metric::Ratio => row.ratio.clone(),
            Metric::MuOverColength => match (row.mu, row.colength) {
                (Some(m), Some(l)) if l > 0 => Some(Rational::new(m.into(), l.into())),
                _ => None,
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Deviation => "deviation",
            Metric::Ratio => "ratio",
            Metric::MuOverColength => "mu/colength",
        }
    }
}

/// Monotonicity required of the per-`param_n` maxima of some metrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trend {
    None,
    NonIncreasing(Vec<Metric>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub passed: bool,
    pub rows: usize,
    pub failed_rows: usize,
    pub max_dev: Rational,
    pub max_ratio: Option<Rational>,
    pub min_margin: Option<Rational>,
    /// Per `param_n` group, in order of first appearance: the group maximum
    /// of each trend metric.
    pub group_maxima: Vec<(u64, Vec<Rational>)>,
    pub trend_ok: bool,
}

impl Summary {
    pub fn fold(rows: &[ReportRow], trend: &Trend) -> Self {
        let max_of = |it: &mut dyn Iterator<Item = Rational>| it.reduce(|a, b| a.max(b));
        let max_dev = max_of(&mut rows.iter().filter_map(|r| r.deviation.clone())).unwrap_or_else(Rational::zero);
        let max_ratio = max_of(&mut rows.iter().filter_map(|r| r.ratio.clone()));
        let min_margin = rows.iter().filter_map(|r| r.margin.clone()).reduce(|a, b| a.min(b));
        let failed_rows = rows.iter().filter(|r| r.verdict() == Verdict::Fail).count();

        let metrics: &[Metric] = match trend {
            Trend::None => &[],
            Trend::NonIncreasing(m) => m,
        };
        let mut group_maxima: Vec<(u64, Vec<Rational>)> = Vec::new();
        if !metrics.is_empty() {
            for row in rows {
                let Some(n) = row.param_n else { continue };
                let vals: Vec<Rational> = metrics.iter().map(|m| m.of(row).unwrap_or_else(Rational::zero)).collect();
                match group_maxima.iter_mut().find(|(k, _)| *k == n) {
                    Some((_, best)) => {
                        for (b, v) in best.iter_mut().zip(vals) {
                            if v > *b {
                                *b = v;
                            }
                        }
                    }
                    None => group_maxima.push((n, vals)),
                }
            }
        }
        let trend_ok = group_maxima.windows(2).all(|w| w[0].1.iter().zip(&w[1].1).all(|(prev, next)| next <= prev));
        Summary {
            passed: failed_rows == 0 && trend_ok,
            rows: rows.len(),
            failed_rows,
            max_dev,
            max_ratio,
            min_margin,
            group_maxima,
            trend_ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentReport {
    pub name: String,
    pub params: Params,
    pub rows: Vec<ReportRow>,
    pub trend: Trend,
    pub summary: Summary,
}

impl ExperimentReport {
    pub fn new(name: &str, params: Params, rows: Vec<ReportRow>, trend: Trend) -> Self {
        let summary = Summary::fold(&rows, &trend);
        Self { name: name.to_string(), params, rows, trend, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out
    }

    /// `PASS max_dev=<rational>` or `FAIL max_dev=<rational>`.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed() { Verdict::Pass } else { Verdict::Fail };
        format!("{} max_dev={}", verdict.as_str(), self.summary.max_dev)
    }

    /// Aligned plain-text table for terminals.
    pub fn render_table(&self) -> String {
        let fmt_r = |r: &Option<Rational>| r.as_ref().map(|v| v.to_string()).unwrap_or("-".into());
        let fmt_i = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or("-".into());
        let header = ["sample", "n", "len", "mu", "ord", "socle", "e", "e_HK", "ratio", "verdict"];
        let mut cells: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for r in &self.rows {
            cells.push(vec![
                r.sample.to_string(),
                fmt_i(r.param_n),
                fmt_i(r.colength),
                fmt_i(r.mu),
                fmt_i(r.ord),
                fmt_i(r.socle_len),
                fmt_r(&r.e),
                fmt_r(&r.ehk),
                fmt_r(&r.ratio),
                r.verdict().as_str().to_string(),
            ]);
        }
        let widths: Vec<usize> =
            (0..header.len()).map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.name);
        for (k, v) in self.params.iter() {
            let _ = writeln!(out, "#   {k} = {v}");
        }
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        for r in self.rows.iter().filter(|r| r.verdict() == Verdict::Fail) {
            let _ = writeln!(out, "FAIL sample {} {}: {}", r.sample, r.ideal, r.failures.join("; "));
        }
        out
    }
}

/// `|a − b|`.
pub(crate) fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

pub(crate) fn ratio(num: u64, den: u64) -> Option<Rational> {
    (den != 0).then(|| Rational::new(num.into(), den.into()))
}

pub(crate) fn one() -> Rational {
    Rational::one()
}
