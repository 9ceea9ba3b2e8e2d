//! Exact arithmetic for weight-1 eta-quotients and binary quadratic form
//! theta series.
//!
//! The crate expands eta-quotients and theta series as truncated q-series
//! with exact coefficients in small real number fields, computes class
//! groups and Gaussian composition of positive definite binary quadratic
//! forms, applies Hecke operators to theta-series combinations, and
//! evaluates closed-form Fourier-coefficient formulas for the weight-1
//! eta-quotients of level 47, 71, 135, 648, 1024, and 1872. Everything is
//! exact: no floating point enters any computation.
//!
//! Module map:
//!
//! - [`ntheory`]: Kronecker symbols, valuations, factorization, modular
//!   square roots, and polynomial arithmetic over prime fields.
//! - [`algnum`]: exact arithmetic in Q, Q(sqrt 5), Q(sqrt 2), and the cubic
//!   field Q(2 cos(2 pi / 7)).
//! - [`qseries`]: truncated q-series, Euler products, Ramanujan theta
//!   functions, eta-quotients, and lattice theta series.
//! - [`bqf`]: reduction, composition, class group enumeration, and genus
//!   characters of positive definite binary quadratic forms.
//! - [`hecke`]: Hecke operators T_p on q-series, eigenform detection, and
//!   the prime-power coefficient recursion.
//! - [`formulas`]: prime classification per discriminant and the explicit
//!   coefficient formulas for the six levels.
//! - [`verify`]: identity and table verification suites.

pub mod algnum;
pub mod bqf;
pub mod formulas;
pub mod hecke;
pub mod ntheory;
pub mod qseries;
pub mod verify;

use thiserror::Error;

/// Errors reported by fallible operations across the crate.
///
/// Contract violations that indicate a caller bug (mixing number fields in
/// element arithmetic, indexing past a truncation order) panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("polynomial is not squarefree modulo {p}")]
    NotSquarefree { p: u64 },
    #[error("f(q^{u}, q^{v}) requires u + v > 0")]
    ThetaArguments { u: i64, v: i64 },
    #[error("f(q^{u}, q^{v}) normalizes to a series with negative q-power {power}")]
    NegativeQPower { u: i64, v: i64, power: i64 },
    #[error("{0} is not a discriminant (need d < 0 and d = 0, 1 mod 4)")]
    InvalidDiscriminant(i64),
    #[error("forms have different discriminants: {0} vs {1}")]
    DiscriminantMismatch(i64, i64),
    #[error("form ({a}, {b}, {c}) is imprimitive")]
    ImprimitiveForm { a: i64, b: i64, c: i64 },
    #[error("series order {order} is too small to apply T_{p}")]
    OrderTooSmall { order: usize, p: u64 },
    #[error("series is zero to the comparison order")]
    ZeroSeries,
    #[error("no prime coprime to 2d represented by ({a}, {b}, {c}) below the search bound")]
    NoRepresentedPrime { a: i64, b: i64, c: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
