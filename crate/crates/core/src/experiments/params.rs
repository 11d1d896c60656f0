use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// String-keyed experiment parameters, as given on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: &str) -> Self {
        self.insert(key, value);
        self
    }

    pub fn insert(&mut self, key: &str, value: &str) {
        self.0.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub(crate) fn allow_only(&self, allowed: &[&str]) -> Result<()> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => {
                Err(Error::BadParam(format!("unknown parameter `{k}` (expected one of: {})", allowed.join(", "))))
            }
            None => Ok(()),
        }
    }

    pub(crate) fn int_list(&self, key: &str, default: &[u64]) -> Result<Vec<u64>> {
        match self.get(key) {
            Some(v) => parse_int_list(v).map_err(|e| tag(key, e)),
            None => Ok(default.to_vec()),
        }
    }

    pub(crate) fn int(&self, key: &str, default: u64) -> Result<u64> {
        match self.get(key) {
            Some(v) => v.trim().parse().map_err(|_| Error::BadParam(format!("{key}: expected an integer, got `{v}`"))),
            None => Ok(default),
        }
    }

    pub(crate) fn rational(&self, key: &str, default: Rational) -> Result<Rational> {
        match self.get(key) {
            Some(v) => parse_rational(v).map_err(|e| tag(key, e)),
            None => Ok(default),
        }
    }
}

fn tag(key: &str, e: Error) -> Error {
    match e {
        Error::BadParam(msg) => Error::BadParam(format!("{key}: {msg}")),
        other => other,
    }
}

/// `"2..12"`, `"10,50,200"`, `"7"`, or a comma list mixing both forms.
/// Ranges are inclusive.
pub fn parse_int_list(text: &str) -> Result<Vec<u64>> {
    let bad = || Error::BadParam(format!("expected an integer list or range, got `{text}`"));
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if let Some((a, b)) = item.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(Error::BadParam(format!("empty range `{item}`")));
            }
            out.extend(a..=b);
        } else {
            out.push(item.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

/// `"1/2"` or `"3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadParam(format!("expected a rational like 1/2, got `{text}`"));
    let (n, d) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_int_list("10, 50,200").unwrap(), vec![10, 50, 200]);
        assert_eq!(parse_int_list("1,3..4").unwrap(), vec![1, 3, 4]);
        assert!(parse_int_list("5..2").is_err());
        assert!(parse_int_list("x").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3.into()));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let p = Params::new().with("N", "2..4").with("bogus", "1");
        assert!(matches!(p.allow_only(&["N"]), Err(Error::BadParam(_))));
        assert_eq!(p.int_list("N", &[]).unwrap(), vec![2, 3, 4]);
    }
}
