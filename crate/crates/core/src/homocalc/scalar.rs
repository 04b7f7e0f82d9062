use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::qring::LaurentPoly;

use super::HomError;

/// One summand `q^shift · label` of a graded object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub label: String,
    pub shift: i64,
}

impl Summand {
    pub fn new(label: impl Into<String>, shift: i64) -> Self {
        Summand {
            label: label.into(),
            shift,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.label)
        } else {
            write!(f, "q^{} {}", self.shift, self.label)
        }
    }
}

/// Formal direct sum; summand order is part of the data.
pub type GradedObject = Vec<Summand>;

/// Matrix entries together with the rules of the additive category they
/// describe.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// Whether the entry is allowed as a map `from -> to`.
    fn compatible(&self, _from: &Summand, _to: &Summand) -> bool {
        true
    }
    /// Whether the entry is an isomorphism `from -> to`.
    fn is_iso(&self, from: &Summand, to: &Summand) -> bool;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, HomError>;
    /// Name used in the serialized form.
    fn ring_name() -> &'static str;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// Ungraded matrices over Q; every nonzero entry is invertible.
impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_iso(&self, _from: &Summand, _to: &Summand) -> bool {
        !Zero::is_zero(self)
    }
    fn to_json(&self) -> Value {
        if self.is_integer() {
            crate::qring::bigint_json(self.numer())
        } else {
            Value::String(self.to_string())
        }
    }
    fn from_json(v: &Value) -> Result<Self, HomError> {
        match v {
            Value::Number(_) => Ok(BigRational::from_integer(
                crate::qring::json_bigint(v).map_err(|e| HomError::Json(e.to_string()))?,
            )),
            Value::String(s) => s
                .trim()
                .parse::<BigRational>()
                .map_err(|e| HomError::Json(format!("bad rational {s:?}: {e}"))),
            _ => Err(HomError::Json(format!("expected a rational, got {v}"))),
        }
    }
    fn ring_name() -> &'static str {
        "rational"
    }
}

/// q-graded matrices over Z[q, q^-1]. An entry `q^a X -> q^b Y` must be
/// homogeneous of degree `b - a`; only `±1` between equal summands is an
/// isomorphism.
impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.unit_inverse()
    }
    fn compatible(&self, from: &Summand, to: &Summand) -> bool {
        self.is_zero() || (self.num_terms() == 1 && self.min_degree() == Some(to.shift - from.shift))
    }
    fn is_iso(&self, from: &Summand, to: &Summand) -> bool {
        from == to && self.num_terms() == 1 && self.coeff(0).abs() == BigInt::one()
    }
    fn to_json(&self) -> Value {
        LaurentPoly::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, HomError> {
        LaurentPoly::from_json(v).map_err(|e| HomError::Json(e.to_string()))
    }
    fn ring_name() -> &'static str {
        "laurent"
    }
}
