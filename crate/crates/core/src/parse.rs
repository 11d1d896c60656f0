//! The ideal file format.
//!
//! ```text
//! # comments run to the end of the line
//! vars: x y z
//! quotient: x*y*z
//! ideal: x^2, x*y, y^3, z^4
//! ```
//!
//! `vars` and `ideal` are required, `quotient` is optional, each may appear
//! once and in any order. A monomial is `factor('*'factor)*` with
//! `factor := name('^'exponent)?`, exponents at least 1; whitespace between
//! tokens is ignored.

use std::fmt;

use crate::error::Error;
use crate::ideal::{format_monomial, ExponentVector, MonomialIdeal};
use crate::ring::RingSpec;

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::MalformedInput(e.to_string())
    }
}

/// The sections of an ideal file, with monomials kept as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub quotient: Option<Vec<String>>,
    pub ideal: Vec<String>,
}

/// `(variable, exponent, column)` of one factor.
type Factor = (String, u32, usize);

/// `vars`, `quotient`, `ideal` sections and the last line number.
type Sections = (Option<Section>, Option<Section>, Option<Section>, usize);

struct Section {
    line: usize,
    column: usize,
    body: Vec<char>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Scanner<'a> {
    chars: &'a [char],
    pos: usize,
    line: usize,
    /// Column of `chars[0]`.
    base: usize,
}

impl Scanner<'_> {
    fn col(&self) -> usize {
        self.base + self.pos
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn fail(&self, message: impl Into<String>) -> ParseError {
        err(self.line, self.col(), message)
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(c) if is_name_start(c) => {}
            Some(c) => return Err(self.fail(format!("expected a variable name, found `{c}`"))),
            None => return Err(self.fail("expected a variable name, found end of line")),
        }
        let start = self.pos;
        while self.peek().is_some_and(is_name_char) {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let col = self.col();
        if self.peek() == Some('-') {
            return Err(self.fail("exponent must be a positive integer"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected an exponent after `^`"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let value: u32 = text.parse().map_err(|_| err(self.line, col, format!("exponent {text} is too large")))?;
        if value == 0 {
            return Err(err(self.line, col, "exponent must be at least 1"));
        }
        Ok(value)
    }

    /// One monomial, returned as its source text normalized to `a*b^2` form.
    fn monomial(&mut self) -> Result<Vec<Factor>, ParseError> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            let col = self.col();
            let name = self.name()?;
            self.skip_ws();
            let mut exp = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                exp = self.exponent()?;
                self.skip_ws();
            }
            factors.push((name, exp, col));
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok(factors);
            }
        }
    }

    fn monomial_list(&mut self) -> Result<Vec<Vec<Factor>>, ParseError> {
        let mut out = Vec::new();
        loop {
            out.push(self.monomial()?);
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(',') => self.pos += 1,
                Some(c) => return Err(self.fail(format!("expected `,` or end of line, found `{c}`"))),
            }
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head)
}

fn split_sections(text: &str) -> Result<Sections, ParseError> {
    let (mut vars, mut quotient, mut ideal) = (None, None, None);
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let chars: Vec<char> = strip_comment(raw).chars().collect();
        let Some(start) = chars.iter().position(|c| !c.is_whitespace()) else { continue };
        let Some(colon) = chars.iter().position(|&c| c == ':') else {
            return Err(err(line_no, start + 1, "expected `vars:`, `quotient:` or `ideal:`"));
        };
        let key: String = chars[start..colon].iter().collect();
        let slot = match key.trim() {
            "vars" => &mut vars,
            "quotient" => &mut quotient,
            "ideal" => &mut ideal,
            other => {
                return Err(err(line_no, start + 1, format!("unknown section `{other}`")));
            }
        };
        if let Some(Section { line, .. }) = slot {
            return Err(err(line_no, start + 1, format!("duplicate `{}` section (first on line {line})", key.trim())));
        }
        *slot = Some(Section { line: line_no, column: colon + 2, body: chars[colon + 1..].to_vec() });
    }
    Ok((vars, quotient, ideal, last_line))
}

fn scanner(s: &Section) -> Scanner<'_> {
    Scanner { chars: &s.body, pos: 0, line: s.line, base: s.column }
}

fn parse_vars(s: &Section) -> Result<Vec<String>, ParseError> {
    let mut sc = scanner(s);
    let mut names: Vec<String> = Vec::new();
    loop {
        sc.skip_ws();
        if sc.at_end() {
            break;
        }
        let col = sc.col();
        let name = sc.name()?;
        if sc.peek().is_some_and(|c| !c.is_whitespace()) {
            return Err(sc.fail("variable names are separated by spaces"));
        }
        if names.contains(&name) {
            return Err(err(s.line, col, format!("duplicate variable `{name}`")));
        }
        names.push(name);
    }
    if names.is_empty() {
        return Err(err(s.line, s.column, "`vars` needs at least one variable"));
    }
    Ok(names)
}

fn build(line: usize, list: Vec<Vec<Factor>>, names: &[String]) -> Result<Vec<ExponentVector>, ParseError> {
    list.into_iter()
        .map(|factors| {
            let mut exps = vec![0u32; names.len()];
            for (name, e, col) in factors {
                let Some(i) = names.iter().position(|n| *n == name) else {
                    return Err(err(line, col, format!("unknown variable `{name}`")));
                };
                exps[i] = exps[i].checked_add(e).ok_or_else(|| err(line, col, "exponent overflow"))?;
            }
            Ok(ExponentVector::new(exps))
        })
        .collect()
}

fn render(list: &[Vec<Factor>]) -> Vec<String> {
    list.iter()
        .map(|f| {
            f.iter().map(|(n, e, _)| if *e == 1 { n.clone() } else { format!("{n}^{e}") }).collect::<Vec<_>>().join("*")
        })
        .collect()
}

impl IdealFile {
    /// Checks the grammar and variable names without building ideals.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(Self::parse_full(text)?.0)
    }

    #[allow(clippy::type_complexity)]
    fn parse_full(text: &str) -> Result<(Self, Option<Vec<ExponentVector>>, Vec<ExponentVector>), ParseError> {
        let (vars, quotient, ideal, last) = split_sections(text)?;
        let vars = vars.ok_or_else(|| err(last + 1, 1, "missing `vars` section"))?;
        let ideal = ideal.ok_or_else(|| err(last + 1, 1, "missing `ideal` section"))?;
        let names = parse_vars(&vars)?;
        let q = match &quotient {
            Some(s) => {
                let list = scanner(s).monomial_list()?;
                let text = render(&list);
                Some((text, build(s.line, list, &names)?))
            }
            None => None,
        };
        let list = scanner(&ideal).monomial_list()?;
        let ideal_text = render(&list);
        let gens = build(ideal.line, list, &names)?;
        let (q_text, q_gens) = match q {
            Some((t, g)) => (Some(t), Some(g)),
            None => (None, None),
        };
        Ok((IdealFile { vars: names, quotient: q_text, ideal: ideal_text }, q_gens, gens))
    }
}

/// Parses a file into its ring and ideal.
pub fn parse_ideal_file(text: &str) -> Result<(RingSpec, MonomialIdeal), ParseError> {
    let (file, q, gens) = IdealFile::parse_full(text)?;
    let n = file.vars.len();
    let ring_err = |e: Error| err(1, 1, e.to_string());
    let ring = match q {
        Some(q) => {
            let line =
                text.lines().position(|l| strip_comment(l).trim_start().starts_with("quotient")).map_or(1, |i| i + 1);
            let defining = MonomialIdeal::new(n, q).map_err(ring_err)?;
            RingSpec::new(n, defining).map_err(|e| err(line, 1, e.to_string()))?
        }
        None => RingSpec::polynomial(n),
    };
    let ideal = MonomialIdeal::new(n, gens).map_err(ring_err)?;
    Ok((ring, ideal))
}

/// Parses a comma-separated monomial list in the given variables.
pub fn parse_monomials(text: &str, names: &[String]) -> Result<MonomialIdeal, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let section = Section { line: 1, column: 1, body: chars };
    let list = scanner(&section).monomial_list()?;
    let gens = build(1, list, names)?;
    MonomialIdeal::new(names.len(), gens).map_err(|e| err(1, 1, e.to_string()))
}

/// Writes a ring and ideal back in the file format.
pub fn format_ideal_file(ring: &RingSpec, ideal: &MonomialIdeal, names: &[String]) -> String {
    let list = |a: &MonomialIdeal| a.gens().iter().map(|g| format_monomial(g, names)).collect::<Vec<_>>().join(", ");
    let mut out = format!("vars: {}\n", names.join(" "));
    if !ring.is_polynomial() {
        out.push_str(&format!("quotient: {}\n", list(ring.defining())));
    }
    out.push_str(&format!("ideal: {}\n", list(ideal)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_file() {
        let (ring, a) = parse_ideal_file("vars: x y\nideal: x^2, x*y, y^3").unwrap();
        assert!(ring.is_polynomial());
        assert_eq!(a, MonomialIdeal::from_rows(2, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap());
    }

    #[test]
    fn quotient_file() {
        let (ring, a) = parse_ideal_file("vars: x y\nquotient: x^2\nideal: y^4, x*y^2").unwrap();
        assert_eq!(ring.defining(), &MonomialIdeal::from_rows(2, &[&[2, 0]]).unwrap());
        assert_eq!(a, MonomialIdeal::from_rows(2, &[&[0, 4], &[1, 2]]).unwrap());
    }

    #[test]
    fn comments_blank_lines_and_spacing() {
        let text = "# header\n\n  ideal :  y ^ 2 *x , x^3 # tail\nvars:   x   y\n";
        let (_, a) = parse_ideal_file(text).unwrap();
        assert_eq!(a, MonomialIdeal::from_rows(2, &[&[3, 0], &[1, 2]]).unwrap());
    }

    #[test]
    fn zero_exponent_is_rejected() {
        let e = parse_ideal_file("vars: x\nideal: x^0").unwrap_err();
        assert_eq!((e.line, e.column), (2, 10));
        assert!(e.message.contains("at least 1"));
        let e = parse_ideal_file("vars: x\nideal: x^-2").unwrap_err();
        assert!(e.message.contains("positive"));
    }

    #[test]
    fn positioned_errors() {
        let e = parse_ideal_file("vars: x y\nideal: x, w^2").unwrap_err();
        assert_eq!((e.line, e.column, e.message.as_str()), (2, 11, "unknown variable `w`"));
        let e = parse_ideal_file("vars: x\nvars: y\nideal: x").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("duplicate"));
        let e = parse_ideal_file("vars: x y\n").unwrap_err();
        assert!(e.message.contains("missing `ideal`"));
        let e = parse_ideal_file("ideal: x").unwrap_err();
        assert!(e.message.contains("missing `vars`"));
        let e = parse_ideal_file("vars: x x\nideal: x").unwrap_err();
        assert!(e.message.contains("duplicate variable"));
        let e = parse_ideal_file("vars: x\nideal: x x").unwrap_err();
        assert!(e.message.contains("expected `,`"));
        let e = parse_ideal_file("vars: x\nring: x\nideal: x").unwrap_err();
        assert!(e.message.contains("unknown section"));
        let e = parse_ideal_file("vars: x\nideal:").unwrap_err();
        assert!(e.message.contains("variable name"));
    }

    #[test]
    fn unit_quotient_is_reported() {
        let e = parse_ideal_file("vars: x y\nquotient: x^2\nquotient: y\nideal: x").unwrap_err();
        assert!(e.message.contains("duplicate"));
    }

    #[test]
    fn round_trip() {
        let text = "vars: a b c\nquotient: a*b*c\nideal: a^2, b^3, c^4, a*b\n";
        let (ring, a) = parse_ideal_file(text).unwrap();
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let again = format_ideal_file(&ring, &a, &names);
        let (ring2, a2) = parse_ideal_file(&again).unwrap();
        assert_eq!(ring2, ring);
        assert_eq!(a2, a);
    }

    #[test]
    fn header_records_written_forms() {
        let f = IdealFile::parse("vars: x y\nideal: x * x, y^2").unwrap();
        assert_eq!(f.ideal, vec!["x*x".to_string(), "y^2".to_string()]);
        assert_eq!(f.quotient, None);
    }
}
