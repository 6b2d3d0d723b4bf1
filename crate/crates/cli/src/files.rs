//! Text formats for certificates and explicit codes.
//!
//! Both formats are line oriented. `#` starts a comment, blank lines are
//! ignored and keys are written `key: value`. A certificate looks like
//!
//! ```text
//! dimension: 48
//! mode: upper-antipodal
//! allowed: [-1, -1/3] [-1/6, 1/6] [1/3, 1/2]
//! factors: (1, 1; 2) (0, 1; 2) (1/2, 1; 2) (-1/36, 0, 1; 1) (-1/9, 0, 1; 1) (-1/2, 1; 1)
//! ```
//!
//! where each factor is `(ascending coefficients of the base; exponent)`.
//! `coefficients: c_0, c_1, ...` may replace `factors`. Design modes take
//! their strength either as `mode: lower-design(11)` or as a separate
//! `tau: 11` line. A value may continue onto following indented lines.
//!
//! A code file starts with `dimension: n`, optionally `ambient: m` when the
//! points are written in `m > n` coordinates, and then lists one point per
//! line.

use std::fmt;
use std::str::FromStr;

use lpcert::certificate::{Certificate, CertificateMode};
use lpcert::interval::IntervalSet;
use lpcert::poly::Polynomial;
use lpcert::rational::{fmt_exact, parse_rational, parse_rational_list, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// 1-based line, when the problem can be pinned to one.
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line: Some(line),
        message: message.into(),
    }
}

fn whole(message: impl Into<String>) -> ParseError {
    ParseError {
        line: None,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

/// `(key, value, line)` triples in file order; indented lines without a key
/// extend the previous value.
fn key_values(text: &str, known: &[&str]) -> Result<Vec<(String, String, usize)>, ParseError> {
    let mut out: Vec<(String, String, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let keyed = line.split_once(':').and_then(|(k, v)| {
            let k = k.trim();
            (!k.is_empty() && k.bytes().all(|b| b.is_ascii_lowercase() || b == b'-' || b == b'_')).then(|| (k, v))
        });
        match keyed {
            Some((k, v)) => {
                if !known.contains(&k) {
                    return Err(at(n, format!("unknown key `{k}`")));
                }
                if out.iter().any(|(seen, _, _)| seen == k) {
                    return Err(at(n, format!("duplicate key `{k}`")));
                }
                out.push((k.to_string(), v.trim().to_string(), n));
            }
            None if raw.starts_with(char::is_whitespace) && !out.is_empty() => {
                let last = out.last_mut().expect("nonempty");
                last.1.push(' ');
                last.1.push_str(line.trim());
            }
            None => return Err(at(n, format!("expected `key: value`, found `{}`", line.trim()))),
        }
    }
    Ok(out)
}

fn parse_u32(value: &str, line: usize, what: &str) -> Result<u32, ParseError> {
    value
        .parse::<u32>()
        .map_err(|_| at(line, format!("{what} must be a nonnegative integer, found `{value}`")))
}

/// Parses `(c0, c1, ...; e) (c0, ...; e) ...`.
pub fn parse_factors(s: &str) -> Result<Vec<(Polynomial, u32)>, String> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c == ',' || c == '*' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(format!("expected `(` at `{rest}`"));
        }
        let end = rest.find(')').ok_or("unterminated factor")?;
        let body = &rest[1..end];
        rest = &rest[end + 1..];
        let (coeffs, exp) = body
            .split_once(';')
            .ok_or_else(|| format!("factor `({body})` needs `; exponent`"))?;
        let base = Polynomial::parse_ascending(coeffs).map_err(|e| e.to_string())?;
        if base.degree().map_or(true, |d| d == 0) {
            return Err(format!("factor `({body})` must have positive degree"));
        }
        let e: u32 = exp
            .trim()
            .parse()
            .map_err(|_| format!("bad exponent `{}`", exp.trim()))?;
        out.push((base, e));
    }
    if out.is_empty() {
        return Err("no factors".to_string());
    }
    Ok(out)
}

/// A parsed certificate file. The factorization is kept when the file gave
/// one, for display; the certificate itself only holds the expanded form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    pub certificate: Certificate,
    pub factors: Option<Vec<(Polynomial, u32)>>,
}

impl FromStr for CertificateFile {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let kv = key_values(text, &["dimension", "mode", "tau", "allowed", "coefficients", "factors"])?;
        let get = |k: &str| kv.iter().find(|(key, _, _)| key == k).map(|(_, v, l)| (v.as_str(), *l));
        let need = |k: &str| get(k).ok_or_else(|| whole(format!("missing key `{k}`")));

        let (dim, dim_line) = need("dimension")?;
        let dimension = parse_u32(dim, dim_line, "dimension")?;

        let (mode_text, mode_line) = need("mode")?;
        let (name, inline_tau) = match mode_text.split_once('(') {
            Some((name, t)) => {
                let t = t
                    .strip_suffix(')')
                    .ok_or_else(|| at(mode_line, "unterminated `(` in mode"))?;
                (name.trim(), Some(parse_u32(t.trim(), mode_line, "tau")?))
            }
            None => (mode_text, None),
        };
        let tau = match (inline_tau, get("tau")) {
            (Some(_), Some((_, l))) => return Err(at(l, "strength given twice")),
            (Some(t), None) => Some(t),
            (None, Some((v, l))) => Some(parse_u32(v, l, "tau")?),
            (None, None) => None,
        };
        let mode = CertificateMode::parse(name, tau).map_err(|e| at(mode_line, e.to_string()))?;

        let (allowed_text, allowed_line) = need("allowed")?;
        let allowed = IntervalSet::from_str(allowed_text).map_err(|e| at(allowed_line, e.to_string()))?;

        let (polynomial, factors) = match (get("coefficients"), get("factors")) {
            (Some(_), Some((_, l))) => return Err(at(l, "give either `coefficients` or `factors`, not both")),
            (Some((v, l)), None) => {
                let coeffs = parse_rational_list(v).map_err(|e| at(l, e.to_string()))?;
                (Polynomial::new(coeffs), None)
            }
            (None, Some((v, l))) => {
                let f = parse_factors(v).map_err(|e| at(l, e))?;
                (Polynomial::expand_factored(&f), Some(f))
            }
            (None, None) => return Err(whole("missing key `coefficients` or `factors`")),
        };
        let certificate = Certificate::new(dimension, polynomial, allowed, mode).map_err(|e| whole(e.to_string()))?;
        Ok(CertificateFile { certificate, factors })
    }
}

/// Canonical form: fixed key order, every rational as `p/q`, expanded
/// coefficients. Parsing the output gives back the same certificate.
pub fn emit_certificate(cert: &Certificate) -> String {
    let mut s = String::new();
    s.push_str(&format!("dimension: {}\n", cert.dimension));
    s.push_str(&format!("mode: {}\n", cert.mode.name()));
    if let Some(t) = cert.mode.tau() {
        s.push_str(&format!("tau: {t}\n"));
    }
    s.push_str(&format!("allowed: {}\n", cert.allowed));
    s.push_str(&format!("coefficients: {}\n", cert.polynomial.to_ascending_string()));
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub dimension: u32,
    pub points: Vec<Vec<Rational>>,
}

impl FromStr for CodeFile {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut dimension = None;
        let mut ambient = None;
        let mut points = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            if let Some((k, v)) = line.split_once(':') {
                if !points.is_empty() {
                    return Err(at(n, "header keys must precede the points"));
                }
                match k.trim() {
                    "dimension" if dimension.is_none() => dimension = Some(parse_u32(v.trim(), n, "dimension")?),
                    "ambient" if ambient.is_none() => ambient = Some(parse_u32(v.trim(), n, "ambient")? as usize),
                    other => return Err(at(n, format!("unexpected key `{other}`"))),
                }
                continue;
            }
            let dim = dimension.ok_or_else(|| at(n, "`dimension:` must come first"))?;
            let width = ambient.unwrap_or(dim as usize);
            let row = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| at(n, e.to_string()))?;
            if row.len() != width {
                return Err(at(n, format!("expected {width} coordinates, found {}", row.len())));
            }
            points.push(row);
        }
        let dimension = dimension.ok_or_else(|| whole("missing key `dimension`"))?;
        if let Some(a) = ambient {
            if a < dimension as usize {
                return Err(whole(format!("ambient {a} is below dimension {dimension}")));
            }
        }
        if points.is_empty() {
            return Err(whole("no points"));
        }
        Ok(CodeFile { dimension, points })
    }
}

pub fn emit_code(code: &CodeFile) -> String {
    let mut s = format!("dimension: {}\n", code.dimension);
    let width = code.points.first().map_or(0, Vec::len);
    if width != code.dimension as usize {
        s.push_str(&format!("ambient: {width}\n"));
    }
    for p in &code.points {
        let row: Vec<String> = p.iter().map(fmt_exact).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use lpcert::catalog;
    use lpcert::rational::int;

    const H48: &str = include_str!("../fixtures/h48.cert");

    #[test]
    fn fixture_matches_catalog() {
        let f: CertificateFile = H48.parse().unwrap();
        assert_eq!(f.certificate, catalog::kissing48_certificate(CertificateMode::UpperAntipodal));
        assert_eq!(f.factors.unwrap().len(), 6);
    }

    #[test]
    fn inline_and_separate_tau() {
        let a: CertificateFile = "dimension: 4\nmode: lower-design(2)\nallowed: [-1, 1]\ncoefficients: 1\n"
            .parse()
            .unwrap();
        let b: CertificateFile = "dimension: 4\nmode: lower-design\ntau: 2\nallowed: [-1, 1]\ncoefficients: 1\n"
            .parse()
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.certificate.mode, CertificateMode::LowerDesign { tau: 2 });
    }

    #[test]
    fn errors_carry_lines() {
        let e = "dimension: 4\nmode: upper-antipodal\nallowed: [-1, 0\ncoefficients: 0, 1, 1\n"
            .parse::<CertificateFile>()
            .unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = "dimension: 4\nmode: sideways\nallowed: [-1, 0]\ncoefficients: 0, 1, 1\n"
            .parse::<CertificateFile>()
            .unwrap_err();
        assert_eq!(e.line, Some(2));
        let e = "dimension: 4\ndimension: 5\n".parse::<CertificateFile>().unwrap_err();
        assert_eq!(e.line, Some(2));
        let e = "dimension: 4\nmode: upper-antipodal\nallowed: [-1, 0]\n"
            .parse::<CertificateFile>()
            .unwrap_err();
        assert_eq!(e.line, None);
        let e = "dimension: 4\nmode: upper-antipodal\nallowed: [-1, 0]\nfactors: (0, 1; 1) (1, 1\n"
            .parse::<CertificateFile>()
            .unwrap_err();
        assert_eq!(e.line, Some(4));
    }

    #[test]
    fn continuation_lines() {
        let f: CertificateFile = "dimension: 4\nmode: upper-unrestricted\nallowed: [-1, 0]\ncoefficients: 0,\n   1, 1 # t + t^2\n"
            .parse()
            .unwrap();
        assert_eq!(f.certificate.polynomial, catalog::orthoplex());
    }

    #[test]
    fn canonical_form_is_stable() {
        let cert = catalog::design48_near_certificate();
        let text = emit_certificate(&cert);
        let back: CertificateFile = text.parse().unwrap();
        assert_eq!(back.certificate, cert);
        assert_eq!(emit_certificate(&back.certificate), text);
    }

    #[test]
    fn code_files() {
        let c: CodeFile = "dimension: 2\n1 0\n-1, 0 # antipode\n0 1/2\n".parse().unwrap();
        assert_eq!(c.points[2], vec![int(0), lpcert::rational::rat(1, 2)]);
        assert_eq!(emit_code(&c).parse::<CodeFile>().unwrap(), c);
        let e = "dimension: 2\n1 0 0\n".parse::<CodeFile>().unwrap_err();
        assert_eq!(e.line, Some(2));
        let c: CodeFile = "dimension: 2\nambient: 3\n1 0 0\n0 1 0\n".parse().unwrap();
        assert!(emit_code(&c).contains("ambient: 3"));
        assert!("1 0\n".parse::<CodeFile>().is_err());
    }
}
