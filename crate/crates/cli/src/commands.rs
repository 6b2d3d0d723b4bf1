//! The subcommands, as functions from parsed arguments to an [`Outcome`].
//!
//! Everything printed by `verify`, `distribution`, `analyze` and `expand` is
//! exact. `search` also prints its floating-point diagnostics, marked as such.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use lpcert::certificate::{attainment, verify, Certificate, CertificateMode, FailureWitness};
use lpcert::designs::{analyze_code, solve_distance_distribution, DesignError, SolvedDistribution};
use lpcert::gegenbauer::GegenbauerBasis;
use lpcert::interval::IntervalSet;
use lpcert::poly::Polynomial;
use lpcert::rational::{fmt_exact, parse_rational, parse_rational_list, Rational};
use lpcert::roots::{Root, RootLocation};
use lpcert::search::{search_with_denominator_bound, SearchError, SearchProblem};

use crate::files::{emit_certificate, parse_factors, CertificateFile, CodeFile};
use crate::{Outcome, EXIT_FLOAT_ONLY, EXIT_INVALID, EXIT_OK};

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn load_certificate(path: &Path) -> Result<CertificateFile, Outcome> {
    read(path)?
        .parse::<CertificateFile>()
        .map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn fmt_root(r: &Root) -> String {
    let loc = match &r.location {
        RootLocation::Exact(x) => fmt_exact(x),
        RootLocation::Isolated { lo, hi } => format!("({}, {})", fmt_exact(lo), fmt_exact(hi)),
    };
    if r.multiplicity > 1 {
        format!("{loc}^{}", r.multiplicity)
    } else {
        loc
    }
}

fn fmt_roots(roots: &[Root]) -> String {
    let v: Vec<String> = roots.iter().map(fmt_root).collect();
    format!("{{{}}}", v.join(", "))
}

fn fmt_set(values: &[Rational]) -> String {
    let v: Vec<String> = values.iter().map(fmt_exact).collect();
    format!("{{{}}}", v.join(", "))
}

/// Writes the verification report of `cert` to `out`; returns validity.
fn report_certificate(out: &mut String, cert: &Certificate) -> bool {
    let report = verify(cert);
    let _ = writeln!(out, "dimension: {}", cert.dimension);
    let _ = writeln!(out, "mode: {}", cert.mode);
    let _ = writeln!(out, "allowed: {}", cert.allowed);
    let _ = writeln!(out, "polynomial: {}", cert.polynomial);
    let _ = writeln!(out, "valid: {}", report.valid);
    let _ = writeln!(out, "f(1): {}", fmt_exact(&report.value_at_one));
    let _ = writeln!(out, "sign: {}", report.sign_report.verdict);
    if let Some(b) = &report.bound {
        let _ = writeln!(out, "bound: {}", fmt_exact(b));
    }
    if let Some(i) = &report.integer_bound {
        let key = if cert.mode.is_upper() { "floor" } else { "ceiling" };
        let _ = writeln!(out, "{key}: {i}");
    }
    for (i, c) in report.expansion.coeffs.iter().enumerate() {
        let _ = writeln!(out, "f_{i}: {}", fmt_exact(c));
    }
    for failure in &report.failed_conditions {
        let _ = writeln!(out, "failure: {}", failure.description);
        if let FailureWitness::Coefficient { index, value } = &failure.witness {
            let _ = writeln!(out, "witness: f_{index} = {}", fmt_exact(value));
        }
        if let FailureWitness::Point(w) = &failure.witness {
            let _ = writeln!(out, "witness: {w}");
        }
    }
    report.valid
}

pub fn cmd_verify(path: &Path, achieved: Option<&str>) -> Outcome {
    let file = match load_certificate(path) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let cert = &file.certificate;
    let mut out = String::new();
    let valid = report_certificate(&mut out, cert);
    if let Some(a) = achieved {
        let size = match parse_rational(a) {
            Ok(s) => s,
            Err(e) => return Outcome::usage(e.to_string()),
        };
        match attainment(cert, &size) {
            Ok(r) => {
                let _ = writeln!(out, "attained: {}", r.attained);
                if r.attained {
                    let _ = writeln!(out, "zeros: {}", fmt_roots(&r.zero_set));
                    let _ = writeln!(out, "permitted: {}", fmt_roots(&r.permitted_inner_products));
                    let forced: Vec<String> = r.forced_zero_moments.iter().map(|i| format!("M_{i}")).collect();
                    let _ = writeln!(out, "forced_zero: {}", forced.join(", "));
                    if let Some(s) = r.deduced_design_strength {
                        let _ = writeln!(out, "deduced_strength: {s}");
                    }
                }
            }
            Err(e) => {
                let _ = writeln!(out, "attainment: {e}");
                return Outcome::with(EXIT_INVALID, out);
            }
        }
    }
    Outcome::with(if valid { EXIT_OK } else { EXIT_INVALID }, out)
}

fn report_distribution(out: &mut String, s: &SolvedDistribution) {
    let d = &s.distribution;
    let _ = writeln!(out, "dimension: {}", d.dimension);
    let _ = writeln!(out, "cardinality: {}", fmt_exact(&d.cardinality));
    for (t, a) in &d.entries {
        let _ = writeln!(out, "A({}): {}", fmt_exact(t), fmt_exact(a));
    }
    let used: Vec<String> = s.equations_used.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "equations: {}", used.join(", "));
    let _ = writeln!(out, "integral: {}", s.integral);
    let _ = writeln!(out, "nonnegative: {}", s.nonnegative);
    for (k, r) in &s.consistency.residuals {
        let _ = writeln!(out, "residual {k}: {}", fmt_exact(r));
    }
    let _ = writeln!(out, "consistent: {}", s.consistency.is_consistent());
}

pub fn cmd_distribution(dimension: u32, tau: u32, values: &str, cardinality: &str, antipodal: bool) -> Outcome {
    let values = match parse_rational_list(values) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let size = match parse_rational(cardinality) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let mut out = String::new();
    match solve_distance_distribution(dimension, tau, &values, &size, antipodal) {
        Ok(s) => {
            report_distribution(&mut out, &s);
            let good = s.integral && s.nonnegative && s.consistency.is_consistent();
            Outcome::with(if good { EXIT_OK } else { EXIT_INVALID }, out)
        }
        Err(DesignError::Inconsistent { solved, .. }) => {
            report_distribution(&mut out, &solved);
            Outcome::with(EXIT_INVALID, out)
        }
        Err(DesignError::Singular) => {
            let _ = writeln!(out, "error: {}", DesignError::Singular);
            Outcome::with(EXIT_INVALID, out)
        }
        Err(e) => Outcome::usage(e.to_string()),
    }
}

pub struct SearchArgs {
    pub dimension: u32,
    pub degree: usize,
    pub mode: String,
    pub tau: Option<u32>,
    pub allowed: String,
    pub nodes: Option<usize>,
    pub rounds: Option<usize>,
    pub denominator_bound: u64,
    pub emit: Option<PathBuf>,
}

pub fn cmd_search(args: &SearchArgs) -> Outcome {
    let mode = match CertificateMode::parse(&args.mode, args.tau) {
        Ok(m) => m,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let allowed = match IntervalSet::from_str(&args.allowed) {
        Ok(a) => a,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let mut problem = match SearchProblem::new(args.dimension, args.degree, mode, allowed) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    if let Some(n) = args.nodes {
        problem.nodes_per_interval = n;
    }
    if let Some(r) = args.rounds {
        problem.refinement_rounds = r;
    }
    let candidate = match search_with_denominator_bound(&problem, args.denominator_bound) {
        Ok(c) => c,
        Err(e @ (SearchError::InvalidProblem(_) | SearchError::Dimension(_))) => return Outcome::usage(e.to_string()),
        Err(e) => return Outcome::with(EXIT_INVALID, format!("error: {e}\n")),
    };

    let mut out = String::new();
    let _ = writeln!(out, "nodes: {}", candidate.node_count);
    let _ = writeln!(out, "float_bound: {}", candidate.float_bound);
    let coeffs: Vec<String> = candidate.float_coefficients.iter().map(|c| format!("{c:e}")).collect();
    let _ = writeln!(out, "float_coefficients: 1, {}", coeffs.join(", "));
    let roots: Vec<String> = candidate
        .guessed_roots
        .iter()
        .map(|g| match &g.endpoint {
            Some(e) => format!("{}^{}", fmt_exact(e), g.multiplicity),
            None => format!("{}^{}", g.location, g.multiplicity),
        })
        .collect();
    let _ = writeln!(out, "guessed_roots: {}", roots.join(", "));

    let Some(cert) = &candidate.exact_certificate else {
        let _ = writeln!(out, "exact: false");
        return Outcome::with(EXIT_FLOAT_ONLY, out);
    };
    let _ = writeln!(out, "exact: true");
    let report = verify(cert);
    if let Some(b) = &report.bound {
        let _ = writeln!(out, "bound: {}", fmt_exact(b));
    }
    if let Some(i) = &report.integer_bound {
        let key = if mode.is_upper() { "floor" } else { "ceiling" };
        let _ = writeln!(out, "{key}: {i}");
    }
    let _ = writeln!(out, "polynomial: {}", cert.polynomial);
    if let Some(path) = &args.emit {
        let bound = report.bound.as_ref().map(fmt_exact).unwrap_or_default();
        let text = format!("# found by search, bound {bound}\n{}", emit_certificate(cert));
        if let Err(e) = std::fs::write(path, text) {
            return Outcome::usage(format!("{}: {e}", path.display()));
        }
        let _ = writeln!(out, "written: {}", path.display());
    }
    Outcome::with(EXIT_OK, out)
}

pub fn cmd_analyze(path: &Path, max_moment: usize) -> Outcome {
    let code = match read(path).and_then(|t| {
        t.parse::<CodeFile>()
            .map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
    }) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let basis = match GegenbauerBasis::shared(code.dimension) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let a = match analyze_code(&code.points, &basis, max_moment) {
        Ok(a) => a,
        Err(e) => return Outcome::with(EXIT_INVALID, format!("error: {e}\n")),
    };
    let mut out = String::new();
    let _ = writeln!(out, "dimension: {}", a.dimension);
    let _ = writeln!(out, "size: {}", a.size);
    let _ = writeln!(out, "inner_products: {}", fmt_set(&a.inner_products));
    for (i, dist) in a.per_point_distributions.iter().enumerate() {
        let parts: Vec<String> = dist.iter().map(|(t, c)| format!("{}:{c}", fmt_exact(t))).collect();
        let _ = writeln!(out, "point {i}: {}", parts.join(" "));
    }
    for (k, m) in a.moments.iter().enumerate() {
        let _ = writeln!(out, "M_{k}: {}", fmt_exact(m));
    }
    let _ = writeln!(out, "strength: {}", a.design_strength);
    let _ = writeln!(out, "strength_limit: {max_moment}");
    let _ = writeln!(out, "antipodal: {}", a.antipodal);
    let _ = writeln!(out, "distance_invariant: {}", a.distance_invariant);
    Outcome::with(EXIT_OK, out)
}

pub enum PolySource<'a> {
    Coefficients(&'a str),
    Factors(&'a str),
    Certificate(&'a Path),
}

pub fn cmd_expand(dimension: Option<u32>, source: PolySource<'_>) -> Outcome {
    let (poly, dim) = match source {
        PolySource::Coefficients(s) => match parse_rational_list(s) {
            Ok(c) => (Polynomial::new(c), dimension),
            Err(e) => return Outcome::usage(e.to_string()),
        },
        PolySource::Factors(s) => match parse_factors(s) {
            Ok(f) => (Polynomial::expand_factored(&f), dimension),
            Err(e) => return Outcome::usage(e),
        },
        PolySource::Certificate(p) => match load_certificate(p) {
            Ok(f) => (f.certificate.polynomial, dimension.or(Some(f.certificate.dimension))),
            Err(o) => return o,
        },
    };
    let Some(dim) = dim else {
        return Outcome::usage("--dim is required unless a certificate is given");
    };
    let basis = match GegenbauerBasis::shared(dim) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let e = basis.expand(&poly);
    let mut out = String::new();
    let _ = writeln!(out, "dimension: {dim}");
    let _ = writeln!(out, "polynomial: {poly}");
    for (i, c) in e.coeffs.iter().enumerate() {
        let _ = writeln!(out, "f_{i}: {}", fmt_exact(c));
    }
    let one = poly.eval(&Rational::from_integer(1.into()));
    let _ = writeln!(out, "f(1): {}", fmt_exact(&one));
    let f0 = e.coeff(0);
    if f0 != Rational::from_integer(0.into()) {
        let _ = writeln!(out, "f(1)/f_0: {}", fmt_exact(&(one / f0)));
    }
    Outcome::with(EXIT_OK, out)
}
