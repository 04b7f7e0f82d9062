use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::laurent::{qfact, LaurentPoly};
use super::poly::{self, Poly};
use super::QringError;

/// Element of Q(q) in lowest terms.
///
/// The denominator is an ordinary polynomial with nonzero positive constant
/// term; numerator and denominator share no common factor over Q and their
/// integer contents are coprime. Equal values therefore compare equal
/// structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunc {
    fn default() -> Self {
        Self::zero()
    }
}

fn to_poly(p: &LaurentPoly) -> (i64, Poly) {
    let (low, c) = p.dense();
    (low, c.to_vec())
}

impl RationalFunc {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QringError> {
        if den.is_zero() {
            return Err(QringError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (nlow, mut n) = to_poly(&num);
        let (dlow, mut d) = to_poly(&den);
        let g = poly::gcd(&n, &d);
        if poly::degree(&g).unwrap_or(0) > 0 {
            n = poly::div_exact(&n, &g);
            d = poly::div_exact(&d, &g);
        }
        let c = poly::content(&n).gcd(&poly::content(&d));
        let mut sign = BigInt::from(1);
        if d[0].is_negative() {
            sign = BigInt::from(-1);
        }
        let c = c * sign;
        let n: Poly = n.iter().map(|x| x / &c).collect();
        let d: Poly = d.iter().map(|x| x / &c).collect();
        Ok(Self {
            num: LaurentPoly::from_dense(nlow - dlow, n),
            den: LaurentPoly::from_dense(0, d),
        })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self, QringError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QringError> {
        match (v.get("num"), v.get("den")) {
            (Some(n), Some(d)) => Self::new(LaurentPoly::from_json(n)?, LaurentPoly::from_json(d)?),
            _ => Ok(Self::from_laurent(LaurentPoly::from_json(v)?)),
        }
    }
}

impl From<LaurentPoly> for RationalFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RationalFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunc::from_laurent(&self.num * &rhs.num);
        }
        RationalFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Div<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunc) -> RationalFunc {
        self * &rhs.inverse().expect("division by zero in Q(q)")
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunc> for RationalFunc {
            type Output = RationalFunc;
            fn $m(self, rhs: RationalFunc) -> RationalFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

/// The projector coefficient
/// `(-1)^k [m]![n]![m+n-k+1]! / ([m-k]![n-k]![m+n+1]![k]!)`.
pub fn proj_coeff(m: i64, n: i64, k: i64) -> Result<RationalFunc, QringError> {
    if m < 0 || n < 0 {
        return Err(QringError::Negative(m.min(n)));
    }
    if k < 0 || k > m.min(n) {
        return Err(QringError::OutOfRange(format!(
            "k = {k} must lie in 0..={}",
            m.min(n)
        )));
    }
    let num = &(&qfact(m)? * &qfact(n)?) * &qfact(m + n - k + 1)?;
    let den = &(&(&qfact(m - k)? * &qfact(n - k)?) * &qfact(m + n + 1)?) * &qfact(k)?;
    let v = RationalFunc::new(num, den)?;
    Ok(if k % 2 == 1 { -&v } else { v })
}
