//! Dense integer polynomials (ascending coefficients) used for gcd work.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Poly = Vec<BigInt>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn content(p: &Poly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(p: &Poly) -> Poly {
    let mut g = content(p);
    if g.is_zero() {
        return Vec::new();
    }
    if degree(p).is_some_and(|d| p[d].is_negative()) {
        g = -g;
    }
    let mut out: Poly = p.iter().map(|c| c / &g).collect();
    trim(&mut out);
    out
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let db = degree(b).expect("division by zero polynomial");
    let lb = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] -= &lr * bc;
        }
        trim(&mut r);
        let g = content(&r);
        if !g.is_zero() && !g.is_one() {
            for c in r.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
    r
}

/// Primitive gcd over Q, returned with positive leading coefficient.
pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.is_empty() {
        return y;
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x
}

/// Exact quotient `a / b`; panics if `b` does not divide `a` over Z.
pub(crate) fn div_exact(a: &Poly, b: &Poly) -> Poly {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = a.clone();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return Vec::new();
    };
    assert!(da >= db, "inexact polynomial division");
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let (quot, rem) = r[k + db].div_rem(&b[db]);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[k + i] -= &quot * bc;
        }
        q[k] = quot;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(&mut q);
    q
}
