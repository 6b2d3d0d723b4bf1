//! Browser bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string,
//! either the result or `{"error": "..."}`. Exact values travel as `p/q`
//! strings; only the plotted samples are floats.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use lpcert::certificate::verify;
use lpcert::designs::{solve_distance_distribution, DesignError, SolvedDistribution};
use lpcert::gegenbauer::GegenbauerBasis;
use lpcert::poly::Polynomial;
use lpcert::rational::{fmt_exact, parse_rational, parse_rational_list, to_f64, Rational};
use lpcert::roots::RootLocation;
use lpcert_cli::files::{parse_factors, CertificateFile};

fn error(message: impl ToString) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn exact(values: &[Rational]) -> Vec<String> {
    values.iter().map(fmt_exact).collect()
}

/// Accepts either ascending coefficients or a factor list `(c0, c1; e) ...`.
fn parse_polynomial(text: &str) -> Result<Polynomial, String> {
    if text.trim_start().starts_with('(') {
        parse_factors(text).map(|f| Polynomial::expand_factored(&f))
    } else {
        parse_rational_list(text).map(Polynomial::new).map_err(|e| e.to_string())
    }
}

/// Gegenbauer coefficients of a polynomial in the given dimension.
#[wasm_bindgen]
pub fn expand(dimension: u32, polynomial: &str) -> String {
    let basis = match GegenbauerBasis::shared(dimension) {
        Ok(b) => b,
        Err(e) => return error(e),
    };
    let poly = match parse_polynomial(polynomial) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let e = basis.expand(&poly);
    let at_one = poly.eval(&Rational::from_integer(1.into()));
    let f0 = e.coeff(0);
    let ratio = (f0 != Rational::from_integer(0.into())).then(|| fmt_exact(&(&at_one / &f0)));
    json!({
        "dimension": dimension,
        "polynomial": poly.to_string(),
        "coefficients": exact(&e.coeffs),
        "value_at_one": fmt_exact(&at_one),
        "ratio": ratio,
    })
    .to_string()
}

/// Verifies a certificate file and returns the report together with
/// `samples` points of the curve on `[-1, 1]` for plotting.
#[wasm_bindgen]
pub fn verify_certificate(text: &str, samples: u32) -> String {
    let file: CertificateFile = match text.parse() {
        Ok(f) => f,
        Err(e) => return error(e),
    };
    let cert = &file.certificate;
    let report = verify(cert);
    let failures: Vec<String> = report.failed_conditions.iter().map(|f| f.to_string()).collect();
    let intervals: Vec<Value> = cert
        .allowed
        .intervals()
        .iter()
        .map(|iv| json!([to_f64(&iv.lo), to_f64(&iv.hi)]))
        .collect();
    let zeros: Vec<Value> = lpcert::isolate_roots(&cert.polynomial, &Rational::from_integer((-1).into()), &Rational::from_integer(1.into()))
        .unwrap_or_default()
        .iter()
        .map(|r| {
            let label = match &r.location {
                RootLocation::Exact(x) => fmt_exact(x),
                RootLocation::Isolated { lo, hi } => format!("({}, {})", fmt_exact(lo), fmt_exact(hi)),
            };
            json!({ "at": r.location.approx(), "label": label, "multiplicity": r.multiplicity })
        })
        .collect();
    json!({
        "dimension": cert.dimension,
        "mode": cert.mode.to_string(),
        "allowed": cert.allowed.to_string(),
        "polynomial": cert.polynomial.to_string(),
        "valid": report.valid,
        "bound": report.bound.as_ref().map(fmt_exact),
        "integer_bound": report.integer_bound.as_ref().map(|b| b.to_string()),
        "sign": report.sign_report.verdict.as_str(),
        "coefficients": exact(&report.expansion.coeffs),
        "failures": failures,
        "curve": sample_curve(&cert.polynomial, samples.clamp(2, 4000) as usize),
        "intervals": intervals,
        "zeros": zeros,
    })
    .to_string()
}

/// `[t, f(t) / max |f|]` on a uniform grid, scaled so the plot fits.
fn sample_curve(p: &Polynomial, n: usize) -> Vec<[f64; 2]> {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = -1.0 + 2.0 * i as f64 / (n - 1) as f64;
            (t, p.eval_f64(t))
        })
        .collect();
    let peak = pts.iter().fold(0.0f64, |m, &(_, y)| m.max(y.abs()));
    let scale = if peak > 0.0 { peak } else { 1.0 };
    pts.into_iter().map(|(t, y)| [t, y / scale]).collect()
}

fn distribution_json(s: &SolvedDistribution) -> Value {
    let entries: Vec<Value> = s
        .distribution
        .entries
        .iter()
        .map(|(t, a)| json!({ "t": fmt_exact(t), "count": fmt_exact(a) }))
        .collect();
    let residuals: Vec<Value> = s
        .consistency
        .residuals
        .iter()
        .map(|(k, r)| json!({ "k": k, "residual": fmt_exact(r) }))
        .collect();
    json!({
        "entries": entries,
        "integral": s.integral,
        "nonnegative": s.nonnegative,
        "consistent": s.consistency.is_consistent(),
        "residuals": residuals,
    })
}

/// Solves the moment equations for a distance distribution.
#[wasm_bindgen]
pub fn distance_distribution(dimension: u32, strength: u32, values: &str, cardinality: &str, antipodal: bool) -> String {
    let values = match parse_rational_list(values) {
        Ok(v) => v,
        Err(e) => return error(e),
    };
    let size = match parse_rational(cardinality) {
        Ok(s) => s,
        Err(e) => return error(e),
    };
    match solve_distance_distribution(dimension, strength, &values, &size, antipodal) {
        Ok(s) => distribution_json(&s).to_string(),
        Err(DesignError::Inconsistent { solved, .. }) => distribution_json(&solved).to_string(),
        Err(e) => error(e),
    }
}
