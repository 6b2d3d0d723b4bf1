//! Exact verification and discovery of linear-programming bounds for
//! spherical codes and spherical designs whose inner products avoid a
//! prescribed set.
//!
//! The crate is organized bottom-up:
//!
//! * [`rational`], [`poly`], [`interval`], [`roots`], [`sign`]: exact
//!   polynomial arithmetic, Sturm-sequence root isolation and rigorous sign
//!   checks on unions of intervals.
//! * [`gegenbauer`]: the Gegenbauer basis of a dimension and exact change of
//!   basis.
//! * [`certificate`]: the linear-programming certificate conditions, bounds
//!   and attainment analysis.
//! * [`designs`]: distance distributions from the moment equations, and a
//!   brute-force analyzer for explicit codes.
//! * [`search`]: floating-point LP search for candidate polynomials, with
//!   rationalization handed back to the exact verifier.

pub mod catalog;
pub mod certificate;
pub mod designs;
pub mod gegenbauer;
pub mod interval;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod search;
pub mod sign;

pub use certificate::{attainment, verify, Certificate, CertificateMode, VerificationReport};
pub use gegenbauer::{expand_in_gegenbauer, gegenbauer_poly, monomial_moment, GegenbauerBasis, GegenbauerExpansion};
pub use interval::{Interval, IntervalSet};
pub use poly::Polynomial;
pub use rational::Rational;
pub use roots::{isolate_roots, Root, RootLocation};
pub use sign::{sign_on_set, SignReport, SignVerdict};
