use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::laurent::{bigint_json, json_bigint, LaurentPoly};
use super::ratfunc::RationalFunc;
use super::QringError;

/// Truncation order of a series known exactly.
pub const EXACT: i64 = i64::MAX;

/// Element of Z[q^-1, q]] known below a truncation order.
///
/// Coefficients at exponents `>= order` are unknown and never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: BTreeMap<i64, BigInt>,
    order: i64,
}

impl TruncatedSeries {
    pub fn zero(order: i64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            order,
        }
    }

    pub fn from_laurent(p: &LaurentPoly, order: i64) -> Self {
        let coeffs = p
            .terms()
            .take_while(|(e, _)| *e < order)
            .map(|(e, c)| (e, c.clone()))
            .collect();
        Self { coeffs, order }
    }

    pub fn exact(p: &LaurentPoly) -> Self {
        Self::from_laurent(p, EXACT)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// Lowest exponent with a nonzero coefficient, or the order if none.
    pub fn min_degree(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order)
    }

    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        (e < self.order).then(|| self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self {
            coeffs: self.coeffs.range(..order).map(|(e, c)| (*e, c.clone())).collect(),
            order,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            order: self.order.saturating_add(k),
        }
    }

    /// The known part as a Laurent polynomial.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_map(&self.coeffs)
    }

    /// Largest `d` such that both series agree at every exponent `<= d`.
    ///
    /// Bounded by the last exponent known in both; returns `EXACT` for
    /// identical exact series.
    pub fn agreement_degree(&self, other: &Self) -> i64 {
        let order = self.order.min(other.order);
        let exps = self.coeffs.keys().chain(other.coeffs.keys());
        let first_diff = exps
            .filter(|&&e| e < order && self.coeffs.get(&e) != other.coeffs.get(&e))
            .min()
            .copied();
        match first_diff {
            Some(e) => e - 1,
            None if order == EXACT => EXACT,
            None => order - 1,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            map.insert(e.to_string(), bigint_json(c));
        }
        let trunc = if self.is_exact() {
            serde_json::Value::Null
        } else {
            serde_json::Value::from(self.order)
        };
        map.insert("truncation".into(), trunc);
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QringError> {
        let obj = v
            .as_object()
            .ok_or_else(|| QringError::Json("expected a series object".into()))?;
        let order = match obj.get("truncation") {
            None | Some(serde_json::Value::Null) => EXACT,
            Some(t) => t
                .as_i64()
                .ok_or_else(|| QringError::Json("truncation must be an integer".into()))?,
        };
        let mut coeffs = BTreeMap::new();
        for (k, c) in obj.iter().filter(|(k, _)| *k != "truncation") {
            let e: i64 = k
                .parse()
                .map_err(|_| QringError::Json(format!("bad exponent key {k:?}")))?;
            let c = json_bigint(c)?;
            if e < order && !c.is_zero() {
                coeffs.insert(e, c);
            }
        }
        Ok(Self { coeffs, order })
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_laurent();
        if self.is_exact() {
            write!(f, "{p}")
        } else if p.is_zero() {
            write!(f, "O(q^{})", self.order)
        } else {
            write!(f, "{p} + O(q^{})", self.order)
        }
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let slot = coeffs.entry(*e).or_default();
            *slot += c;
            if slot.is_zero() {
                coeffs.remove(e);
            }
        }
        coeffs.retain(|e, _| *e < order);
        TruncatedSeries { coeffs, order }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
            order: self.order,
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self
            .order
            .saturating_add(rhs.min_degree())
            .min(rhs.order.saturating_add(self.min_degree()));
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, a) in &self.coeffs {
            for (eb, b) in &rhs.coeffs {
                let e = ea + eb;
                if e < order {
                    *coeffs.entry(e).or_default() += a * b;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries { coeffs, order }
    }
}

/// Expands `f` around `q = 0`, exact below `order`.
pub fn expand(f: &RationalFunc, order: i64) -> Result<TruncatedSeries, QringError> {
    let den = f.denominator();
    let (dlow, d) = den.dense();
    if d.is_empty() {
        return Err(QringError::ZeroDenominator);
    }
    let num = f.numerator();
    let Some(nlow) = num.min_degree() else {
        return Ok(TruncatedSeries::zero(order));
    };
    let start = nlow - dlow;
    let mut rem: BTreeMap<i64, BigInt> = num.terms().map(|(e, c)| (e, c.clone())).collect();
    let mut coeffs = BTreeMap::new();
    let mut e = start;
    while e < order {
        let r = rem.remove(&(e + dlow)).unwrap_or_default();
        if !r.is_zero() {
            let (quot, left) = r.div_rem(&d[0]);
            if !left.is_zero() {
                return Err(QringError::NonIntegral(e));
            }
            for (i, dc) in d.iter().enumerate().skip(1) {
                if dc.is_zero() {
                    continue;
                }
                let slot = rem.entry(e + dlow + i as i64).or_default();
                *slot -= &quot * dc;
            }
            coeffs.insert(e, quot);
        }
        e += 1;
    }
    Ok(TruncatedSeries { coeffs, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::qint;

    fn series(t: &[(i64, i64)], order: i64) -> TruncatedSeries {
        TruncatedSeries::from_laurent(&LaurentPoly::from_terms(t.iter().copied()), order)
    }

    #[test]
    fn inverse_of_quantum_two() {
        let f = RationalFunc::new(LaurentPoly::one(), qint(2).unwrap()).unwrap();
        let s = expand(&f, 9).unwrap();
        assert_eq!(s, series(&[(1, 1), (3, -1), (5, 1), (7, -1)], 9));
    }

    #[test]
    fn inverse_of_quantum_three() {
        let f = RationalFunc::new(LaurentPoly::one(), qint(3).unwrap()).unwrap();
        let s = expand(&f, 12).unwrap();
        assert_eq!(s, series(&[(2, 1), (4, -1), (8, 1), (10, -1)], 12));
    }

    #[test]
    fn polynomial_passes_through() {
        let f = RationalFunc::from_laurent(qint(2).unwrap());
        assert_eq!(expand(&f, 2).unwrap().to_laurent(), qint(2).unwrap());
    }

    #[test]
    fn non_integral_expansion_is_rejected() {
        let f = RationalFunc::new(LaurentPoly::one(), LaurentPoly::constant(2)).unwrap();
        assert!(matches!(expand(&f, 3), Err(QringError::NonIntegral(0))));
    }

    #[test]
    fn multiplication_tracks_order() {
        let a = series(&[(-1, 1), (0, 2)], 3);
        let b = series(&[(2, 1)], 5);
        let p = &a * &b;
        assert_eq!(p.order(), 4);
        assert_eq!(p, series(&[(1, 1), (2, 2)], 4));
    }

    #[test]
    fn agreement() {
        let a = series(&[(1, 1), (3, -1)], 10);
        let b = series(&[(1, 1), (3, -1), (5, 1)], 10);
        assert_eq!(a.agreement_degree(&b), 4);
        assert_eq!(a.agreement_degree(&a), 9);
        let x = TruncatedSeries::exact(&LaurentPoly::one());
        assert_eq!(x.agreement_degree(&x), EXACT);
    }

    #[test]
    fn json_round_trip() {
        let a = series(&[(1, 1), (3, -1)], 10);
        let j = a.to_json();
        assert_eq!(j["truncation"], 10);
        assert_eq!(TruncatedSeries::from_json(&j).unwrap(), a);
    }
}
