use std::collections::BTreeMap;

use super::complex::{add_homotopy, compose_homotopy, ChainMap, Complex, Homotopy};
use super::matrix::Matrix;
use super::scalar::Scalar;
use super::HomError;

/// A complex homotopy equivalent to `original`, with `from_reduced ∘
/// to_reduced ≃ id` via `homotopy` and `to_reduced ∘ from_reduced = id`.
#[derive(Clone, Debug)]
pub struct Reduction<S> {
    pub original: Complex<S>,
    pub complex: Complex<S>,
    pub to_reduced: ChainMap<S>,
    pub from_reduced: ChainMap<S>,
    pub homotopy: Homotopy<S>,
}

impl<S: Scalar> Reduction<S> {
    pub fn trivial(c: &Complex<S>) -> Self {
        Reduction {
            original: c.clone(),
            complex: c.clone(),
            to_reduced: ChainMap::identity(c),
            from_reduced: ChainMap::identity(c),
            homotopy: Homotopy::new(),
        }
    }

    /// Checks both composites exactly.
    pub fn verify(&self) -> bool {
        let fg = self.to_reduced.compose(&self.from_reduced);
        let gf = self.from_reduced.compose(&self.to_reduced);
        fg == ChainMap::identity(&self.complex)
            && super::complex::is_homotopic_to_identity(&gf, &self.homotopy)
    }

    fn then(self, next: Reduction<S>) -> Reduction<S> {
        let homotopy = add_homotopy(
            &self.homotopy,
            &compose_homotopy(&self.from_reduced, &next.homotopy, &self.to_reduced),
        );
        Reduction {
            original: self.original,
            complex: next.complex,
            to_reduced: next.to_reduced.compose(&self.to_reduced),
            from_reduced: self.from_reduced.compose(&next.from_reduced),
            homotopy,
        }
    }
}

/// Cancels the summand `col` of degree `k` against the summand `row` of
/// degree `k + 1` along an invertible entry of `d(k)`.
pub fn gauss_eliminate<S: Scalar>(
    c: &Complex<S>,
    k: i64,
    (row, col): (usize, usize),
) -> Result<Reduction<S>, HomError> {
    let d = c.d(k);
    if row >= d.rows() || col >= d.cols() {
        return Err(HomError::Shape(format!("no entry ({row}, {col}) in d^{k}")));
    }
    let psi = d.get(row, col);
    let (b, dd) = (&c.obj(k)[col], &c.obj(k + 1)[row]);
    if !psi.is_iso(b, dd) {
        return Err(HomError::NotUnit {
            degree: k,
            entry: psi.to_string(),
        });
    }
    let psi_inv = psi.inverse().expect("isomorphic entries are units");
    let beta = d.select(&[row], &others(d.cols(), col));
    let gamma = d.select(&others(d.rows(), row), &[col]);
    let delta = d.without(Some(row), Some(col));
    let new_dk = delta.sub(&gamma.scale(&psi_inv).mul(&beta));

    let drop = |j: i64| match j - k {
        0 => Some(col),
        1 => Some(row),
        _ => None,
    };
    let reduced = Complex::from_fn(
        c.lo(),
        c.hi(),
        |j| {
            let mut o = c.obj(j).to_vec();
            if let Some(i) = drop(j) {
                o.remove(i);
            }
            o
        },
        |j| {
            if j == k {
                new_dk.clone()
            } else {
                c.d(j).without(drop(j + 1), drop(j))
            }
        },
    )?;

    let mut to = BTreeMap::new();
    let mut from = BTreeMap::new();
    for j in c.degrees() {
        let n = c.dim(j);
        let f = match drop(j) {
            None => Matrix::identity(n),
            Some(i) => Matrix::identity(n).without(Some(i), None),
        };
        let g = match drop(j) {
            None => Matrix::identity(n),
            Some(i) => Matrix::identity(n).without(None, Some(i)),
        };
        to.insert(j, f);
        from.insert(j, g);
    }
    // F^{k+1} = (-γψ⁻¹ | 1) on D ⊕ E
    let mut f1 = to[&(k + 1)].clone();
    for r in 0..gamma.rows() {
        f1.set(r, row, gamma.get(r, 0).mul(&psi_inv).neg());
    }
    to.insert(k + 1, f1);
    // G^k = (-ψ⁻¹β ; 1) on B ⊕ C
    let mut g0 = from[&k].clone();
    for cc in 0..beta.cols() {
        g0.set(col, cc, psi_inv.mul(beta.get(0, cc)).neg());
    }
    from.insert(k, g0);
    let mut h = Matrix::zeros(c.dim(k), c.dim(k + 1));
    h.set(col, row, psi_inv);
    let homotopy = Homotopy::from([(k + 1, h)]);

    Ok(Reduction {
        original: c.clone(),
        to_reduced: ChainMap::unchecked(c.clone(), reduced.clone(), to),
        from_reduced: ChainMap::unchecked(reduced.clone(), c.clone(), from),
        complex: reduced,
        homotopy,
    })
}

fn others(n: usize, skip: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != skip).collect()
}

/// First invertible entry of some `d(k)` with `k + 1 <= through`, scanning
/// degrees upward.
fn find_unit<S: Scalar>(c: &Complex<S>, through: i64) -> Option<(i64, usize, usize)> {
    if c.is_zero() {
        return None;
    }
    for k in c.lo()..c.hi().min(through) {
        let d = c.d(k);
        for col in 0..d.cols() {
            for row in 0..d.rows() {
                if d.get(row, col).is_iso(&c.obj(k)[col], &c.obj(k + 1)[row]) {
                    return Some((k, row, col));
                }
            }
        }
    }
    None
}

/// Eliminates invertible differential entries until none remain between
/// degrees `<= through`, accumulating the homotopy data.
pub fn simplify<S: Scalar>(c: &Complex<S>, through: i64) -> Reduction<S> {
    let mut acc = Reduction::trivial(c);
    while let Some((k, row, col)) = find_unit(&acc.complex, through) {
        let step = gauss_eliminate(&acc.complex, k, (row, col)).expect("entry was checked");
        acc = acc.then(step);
    }
    acc
}
