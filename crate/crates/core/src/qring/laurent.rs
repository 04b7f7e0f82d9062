use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::QringError;

/// Element of Z[q, q^-1], stored densely from the lowest nonzero exponent.
///
/// The zero polynomial has an empty coefficient vector; otherwise the first
/// and last entries are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The element `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from coefficients of `q^low, q^(low+1), ...`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        Self::from_map(&map)
    }

    pub fn from_map(map: &BTreeMap<i64, BigInt>) -> Self {
        let Some((&lo, _)) = map.iter().find(|(_, c)| !c.is_zero()) else {
            return Self::zero();
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in map.range(lo..) {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((e - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub(crate) fn dense(&self) -> (i64, &[BigInt]) {
        (self.low, &self.coeffs)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Returns the inverse when `self = ±q^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && self.coeffs[0].abs().is_one() {
            Some(Self::monomial(self.coeffs[0].clone(), -self.low))
        } else {
            None
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        let hi = match self.max_degree() {
            Some(h) => h,
            None => return Self::zero(),
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_dense(-hi, coeffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.terms() {
            map.insert(e.to_string(), bigint_json(c));
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QringError> {
        let obj = v
            .as_object()
            .ok_or_else(|| QringError::Json("expected an object of exponent keys".into()))?;
        let mut terms = Vec::with_capacity(obj.len());
        for (k, c) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| QringError::Json(format!("bad exponent key {k:?}")))?;
            terms.push((e, json_bigint(c)?));
        }
        Ok(Self::from_terms(terms))
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(c.to_string()),
    }
}

pub(crate) fn json_bigint(v: &serde_json::Value) -> Result<BigInt, QringError> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| QringError::Json(format!("coefficient {n} is not an integer"))),
        serde_json::Value::String(s) => s
            .parse()
            .map_err(|_| QringError::Json(format!("coefficient {s:?} is not an integer"))),
        other => Err(QringError::Json(format!("bad coefficient {other}"))),
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

/// Quantum integer `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn qint(n: i64) -> Result<LaurentPoly, QringError> {
    if n < 0 {
        return Err(QringError::Negative(n));
    }
    if n == 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut coeffs = vec![BigInt::zero(); (2 * n - 1) as usize];
    for i in (0..coeffs.len()).step_by(2) {
        coeffs[i] = BigInt::one();
    }
    Ok(LaurentPoly::from_dense(1 - n, coeffs))
}

/// Quantum factorial `[n]! = [1][2]...[n]`.
pub fn qfact(n: i64) -> Result<LaurentPoly, QringError> {
    if n < 0 {
        return Err(QringError::Negative(n));
    }
    let mut acc = LaurentPoly::one();
    for i in 2..=n {
        acc = &acc * &qint(i)?;
    }
    Ok(acc)
}
