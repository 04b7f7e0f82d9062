//! Exact coefficient rings: Z[q, q^-1], Q(q) and truncated series in q.

mod laurent;
mod poly;
mod ratfunc;
mod series;

use std::fmt;

use thiserror::Error;

pub use laurent::{qfact, qint, LaurentPoly};
pub(crate) use laurent::{bigint_json, json_bigint};
pub use ratfunc::{proj_coeff, RationalFunc};
pub use series::{expand, TruncatedSeries, EXACT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QringError {
    #[error("negative argument {0}")]
    Negative(i64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("expansion leaves the integers at exponent {0}")]
    NonIntegral(i64),
    #[error("malformed ring element: {0}")]
    Json(String),
}

/// Commutative ring usable as web coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_laurent(p: &LaurentPoly) -> Self;
    fn to_json(&self) -> serde_json::Value;
}

impl Coefficient for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        p.clone()
    }
    fn to_json(&self) -> serde_json::Value {
        LaurentPoly::to_json(self)
    }
}

impl Coefficient for RationalFunc {
    fn zero() -> Self {
        RationalFunc::zero()
    }
    fn one() -> Self {
        RationalFunc::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunc::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        RationalFunc::from_laurent(p.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        RationalFunc::to_json(self)
    }
}

impl Coefficient for TruncatedSeries {
    fn zero() -> Self {
        TruncatedSeries::zero(EXACT)
    }
    fn one() -> Self {
        TruncatedSeries::exact(&LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        TruncatedSeries::exact(p)
    }
    fn to_json(&self) -> serde_json::Value {
        TruncatedSeries::to_json(self)
    }
}
