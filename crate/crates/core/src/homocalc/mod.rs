//! Chain complexes over matrix categories: cones, Gaussian elimination,
//! truncation, limits of inverse systems and Euler characteristics.

mod complex;
mod double;
mod euler;
mod gauss;
mod limits;
mod matrix;
mod scalar;

use thiserror::Error;

pub use complex::{cone, cone_inclusion, connecting_map, is_homotopic_to_identity, ChainMap, Complex, Homotopy};
pub use double::{totalize, DoubleComplex};
pub use euler::{euler_char, LazyComplex, SupportRegion};
pub use gauss::{gauss_eliminate, simplify, Reduction};
pub use limits::{cauchy_defect, ch_limit, iso_order, ChLimit, InverseSystem, IsoOrder};
pub use matrix::Matrix;
pub use scalar::{GradedObject, Scalar, Summand};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("entry {entry} is not a map {from} -> {to}")]
    Incompatible { from: String, to: String, entry: String },
    #[error("d^2 != 0 starting at degree {0}")]
    DSquared(i64),
    #[error("not a chain map at degree {0}")]
    NotChainMap(i64),
    #[error("entry {entry} of d^{degree} is not invertible")]
    NotUnit { degree: i64, entry: String },
    #[error("square at ({h}, {v}) does not anticommute")]
    NotAnticommuting { h: i64, v: i64 },
    #[error("system does not stabilize in degree {0} within the probe budget")]
    NotStabilizing(i64),
    #[error("summand at (h, q) = ({h}, {q}) lies outside the support region")]
    Support { h: i64, q: i64 },
    #[error("malformed complex: {0}")]
    Json(String),
}

/// Simplifies a serialized complex over either shipped ring, eliminating
/// through `through` (default: the top degree).
pub fn simplify_json(v: &serde_json::Value, through: Option<i64>) -> Result<serde_json::Value, HomError> {
    fn go<S: Scalar>(v: &serde_json::Value, through: Option<i64>) -> Result<serde_json::Value, HomError> {
        let c = Complex::<S>::from_json(v)?;
        let through = through.unwrap_or(if c.is_zero() { 0 } else { c.hi() });
        Ok(simplify(&c, through).complex.to_json())
    }
    match v.get("ring").and_then(serde_json::Value::as_str).unwrap_or("laurent") {
        "rational" => go::<num_rational::BigRational>(v, through),
        "laurent" => go::<crate::qring::LaurentPoly>(v, through),
        r => Err(HomError::Json(format!("unknown ring {r:?}"))),
    }
}
