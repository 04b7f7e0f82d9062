use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::qring::{LaurentPoly, TruncatedSeries, EXACT};

use super::complex::Complex;
use super::matrix::Matrix;
use super::scalar::{GradedObject, Scalar};
use super::HomError;

/// `R_t[a]{b} = {(h, q) : h >= a, q >= t (h - a) + b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupportRegion {
    pub slope: Rational64,
    pub h0: i64,
    pub q0: i64,
}

impl SupportRegion {
    pub fn new(slope: Rational64, h0: i64, q0: i64) -> Self {
        SupportRegion { slope, h0, q0 }
    }

    pub fn contains(&self, h: i64, q: i64) -> bool {
        h >= self.h0 && Rational64::from_integer(q - self.q0) >= self.slope * Rational64::from_integer(h - self.h0)
    }

    /// Every summand of homological degree `> through` has quantum degree
    /// at least this.
    pub fn order_after(&self, through: i64) -> i64 {
        let h = (through + 1).max(self.h0) - self.h0;
        (self.slope * Rational64::from_integer(h)).ceil().to_i64().unwrap() + self.q0
    }
}

/// A bounded-below complex given degree by degree.
#[derive(Clone)]
pub struct LazyComplex<S> {
    pub lo: i64,
    object: Arc<dyn Fn(i64) -> GradedObject + Send + Sync>,
    diff: Arc<dyn Fn(i64) -> Matrix<S> + Send + Sync>,
}

impl<S: Scalar> LazyComplex<S> {
    /// `object(k)` for `k >= lo`; `diff(k)` maps degree `k` to `k + 1`.
    pub fn new(
        lo: i64,
        object: impl Fn(i64) -> GradedObject + Send + Sync + 'static,
        diff: impl Fn(i64) -> Matrix<S> + Send + Sync + 'static,
    ) -> Self {
        LazyComplex {
            lo,
            object: Arc::new(object),
            diff: Arc::new(diff),
        }
    }

    /// Objects only, with zero differentials.
    pub fn from_objects(lo: i64, object: impl Fn(i64) -> GradedObject + Send + Sync + 'static) -> Self {
        let object = Arc::new(object);
        let o2 = object.clone();
        LazyComplex {
            lo,
            object: object.clone(),
            diff: Arc::new(move |k| Matrix::zeros(o2(k + 1).len(), o2(k).len())),
        }
    }

    pub fn truncate(&self, k: i64) -> Result<Complex<S>, HomError> {
        Complex::from_fn(self.lo, k, |j| (self.object)(j), |j| (self.diff)(j))
    }

    /// Euler characteristic through degree `through`, checked against
    /// `region`; coefficients are known below the order the region
    /// guarantees for the omitted degrees.
    pub fn euler_char(
        &self,
        through: i64,
        region: &SupportRegion,
    ) -> Result<BTreeMap<String, TruncatedSeries>, HomError> {
        let c = self.truncate(through)?;
        euler_sum(&c, region, region.order_after(through))
    }
}

/// Euler characteristic of a bounded complex. Degrees above `through` must
/// be empty for an exact answer; otherwise the result is truncated at the
/// order the region guarantees.
pub fn euler_char<S: Scalar>(
    c: &Complex<S>,
    through: i64,
    region: &SupportRegion,
) -> Result<BTreeMap<String, TruncatedSeries>, HomError> {
    if c.is_zero() || c.hi() <= through {
        euler_sum(c, region, EXACT)
    } else {
        euler_sum(&c.truncate(through), region, region.order_after(through))
    }
}

fn euler_sum<S: Scalar>(
    c: &Complex<S>,
    region: &SupportRegion,
    order: i64,
) -> Result<BTreeMap<String, TruncatedSeries>, HomError> {
    let mut acc: BTreeMap<String, BTreeMap<i64, num_bigint::BigInt>> = BTreeMap::new();
    if !c.is_zero() {
        for h in c.degrees() {
            let sign = if h.rem_euclid(2) == 0 { 1 } else { -1 };
            for s in c.obj(h) {
                if !region.contains(h, s.shift) {
                    return Err(HomError::Support { h, q: s.shift });
                }
                *acc.entry(s.label.clone()).or_default().entry(s.shift).or_default() += sign;
            }
        }
    }
    Ok(acc
        .into_iter()
        .map(|(label, terms)| (label, TruncatedSeries::from_laurent(&LaurentPoly::from_map(&terms), order)))
        .collect())
}
