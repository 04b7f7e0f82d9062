use std::collections::BTreeMap;

use super::complex::Complex;
use super::matrix::Matrix;
use super::scalar::Scalar;
use super::HomError;

/// Rows `A^{., j}` for `j = 0..=m` with vertical maps
/// `vertical[j][i]: A^{i,j} -> A^{i,j+1}`; squares anticommute.
#[derive(Clone, Debug)]
pub struct DoubleComplex<S> {
    pub rows: Vec<Complex<S>>,
    pub vertical: Vec<BTreeMap<i64, Matrix<S>>>,
}

impl<S: Scalar> DoubleComplex<S> {
    fn v(&self, j: usize, i: i64) -> Matrix<S> {
        self.vertical
            .get(j)
            .and_then(|m| m.get(&i))
            .cloned()
            .unwrap_or_else(|| {
                let below = self.rows.get(j + 1).map_or(0, |r| r.dim(i));
                Matrix::zeros(below, self.rows[j].dim(i))
            })
    }

    fn check(&self) -> Result<(), HomError> {
        if self.vertical.len() + 1 != self.rows.len().max(1) {
            return Err(HomError::Shape(format!(
                "{} rows need {} vertical maps",
                self.rows.len(),
                self.rows.len().saturating_sub(1)
            )));
        }
        for j in 0..self.vertical.len() {
            let (a, b) = (&self.rows[j], &self.rows[j + 1]);
            for (&i, m) in &self.vertical[j] {
                if m.rows() != b.dim(i) || m.cols() != a.dim(i) {
                    return Err(HomError::Shape(format!("vertical map ({i}, {j}) has the wrong shape")));
                }
            }
            let range = span(a, b);
            for i in range.0..=range.1 {
                let sq = self.v(j, i + 1).mul(&a.d(i)).add(&b.d(i).mul(&self.v(j, i)));
                if !sq.is_zero() {
                    return Err(HomError::NotAnticommuting { h: i, v: j as i64 });
                }
                if j + 1 < self.vertical.len() && !self.v(j + 1, i).mul(&self.v(j, i)).is_zero() {
                    return Err(HomError::DSquared(i));
                }
            }
        }
        Ok(())
    }
}

fn span<S: Scalar>(a: &Complex<S>, b: &Complex<S>) -> (i64, i64) {
    let cs = [a, b];
    let nz: Vec<_> = cs.iter().filter(|c| !c.is_zero()).collect();
    let lo = nz.iter().map(|c| c.lo()).min().unwrap_or(0);
    let hi = nz.iter().map(|c| c.hi()).max().unwrap_or(-1);
    (lo, hi)
}

/// `Tot^k = ⊕_{i+j=k} A^{i,j}`, ordered by increasing `j`, with
/// differential `d_h + d_v`.
pub fn totalize<S: Scalar>(dc: &DoubleComplex<S>) -> Result<Complex<S>, HomError> {
    dc.check()?;
    let nz: Vec<(usize, &Complex<S>)> = dc.rows.iter().enumerate().filter(|(_, r)| !r.is_zero()).collect();
    if nz.is_empty() {
        return Ok(Complex::zero());
    }
    let lo = nz.iter().map(|(j, r)| r.lo() + *j as i64).min().unwrap();
    let hi = nz.iter().map(|(j, r)| r.hi() + *j as i64).max().unwrap();
    let m = dc.rows.len();
    // offset of A^{k-j, j} inside Tot^k
    let offsets = |k: i64| {
        let mut acc = 0;
        let mut out = Vec::with_capacity(m);
        for (j, r) in dc.rows.iter().enumerate() {
            out.push(acc);
            acc += r.dim(k - j as i64);
        }
        (out, acc)
    };
    Complex::from_fn(
        lo,
        hi,
        |k| {
            dc.rows
                .iter()
                .enumerate()
                .flat_map(|(j, r)| r.obj(k - j as i64).to_vec())
                .collect()
        },
        |k| {
            let (src, ns) = offsets(k);
            let (dst, nd) = offsets(k + 1);
            let mut d = Matrix::zeros(nd, ns);
            for (j, r) in dc.rows.iter().enumerate() {
                let i = k - j as i64;
                let place = |d: &mut Matrix<S>, blk: &Matrix<S>, r0: usize, c0: usize| {
                    for a in 0..blk.rows() {
                        for b in 0..blk.cols() {
                            d.set(r0 + a, c0 + b, blk.get(a, b).clone());
                        }
                    }
                };
                place(&mut d, &r.d(i), dst[j], src[j]);
                if j + 1 < m {
                    place(&mut d, &dc.v(j, i), dst[j + 1], src[j]);
                }
            }
            d
        },
    )
}
