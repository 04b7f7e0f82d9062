#![allow(dead_code)]

pub mod catalogue;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sl3spider::homocalc::{ChainMap, Complex, InverseSystem, Matrix, Summand};
use sl3spider::tangle::{Over, Slice, TangleDiagram};
use sl3spider::web::{Sign, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(r: &mut impl Rng) -> Sign {
    if r.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_word(r: &mut impl Rng, max: usize) -> Word {
    let n = r.gen_range(0..=max);
    Word::new((0..n).map(|_| sign(r)).collect())
}

/// A random diagram of `steps` slices on at most `width` strands.
/// Crossings appear only when `crossings` is set.
pub fn random_diagram(r: &mut impl Rng, width: usize, steps: usize, crossings: bool) -> TangleDiagram {
    let domain = random_word(r, width.min(3));
    let mut w = domain.clone();
    let mut slices = Vec::new();
    let mut tries = 0;
    while slices.len() < steps && tries < 20 * steps {
        tries += 1;
        let s = w.signs();
        let n = s.len();
        let slice = match r.gen_range(0..6) {
            0 if n + 2 <= width => Slice::Cup(sign(r), r.gen_range(0..=n)),
            1 if n >= 2 => Slice::Cap(r.gen_range(0..n - 1)),
            2 if n < width && n >= 1 => Slice::YSplit(r.gen_range(0..n)),
            3 if n >= 2 => Slice::YMerge(r.gen_range(0..n - 1)),
            4 | 5 if crossings && n >= 2 => {
                let o = if r.gen_bool(0.5) { Over::Top } else { Over::Bottom };
                Slice::Cross(o, r.gen_range(0..n - 1))
            }
            _ => continue,
        };
        if let Ok(next) = slice.apply(&w) {
            w = next;
            slices.push(slice);
        }
    }
    TangleDiagram::new(domain, slices)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn plain(n: usize) -> Vec<Summand> {
    (0..n).map(|_| Summand::new("x", 0)).collect()
}

/// Rank by row reduction over the rationals.
pub fn rank(m: &Matrix<BigRational>) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for j in 0..m.cols() {
                    let v = &a[rank][j] * &f;
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn homology_ranks(c: &Complex<BigRational>) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if c.is_zero() {
        return out;
    }
    for k in c.degrees() {
        let h = c.dim(k) - rank(&c.d(k)) - rank(&c.d(k - 1));
        if h > 0 {
            out.insert(k, h);
        }
    }
    out
}

fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize, f: impl Fn(&mut dyn FnMut() -> i64, usize, usize) -> i64) -> Matrix<BigRational> {
    let mut draw = || r.gen_range(-2..=2);
    let data = (0..rows)
        .map(|i| (0..cols).map(|j| q(f(&mut draw, i, j))).collect())
        .collect();
    Matrix::from_rows(data, cols).unwrap()
}

fn random_invertible(r: &mut impl Rng, n: usize) -> Matrix<BigRational> {
    use std::cmp::Ordering::*;
    let lower = random_matrix(r, n, n, |draw, i, j| match i.cmp(&j) {
        Equal => 1,
        Greater => draw(),
        Less => 0,
    });
    let upper = random_matrix(r, n, n, |draw, i, j| match i.cmp(&j) {
        Equal => if draw() >= 0 { 1 } else { -2 },
        Less => draw(),
        Greater => 0,
    });
    lower.mul(&upper)
}

/// A complex over ℚ in degrees `lo..lo+len` with at most `max_dim`
/// summands per degree, and its homology ranks by construction.
pub fn random_complex(
    r: &mut impl Rng,
    lo: i64,
    len: usize,
    max_dim: usize,
) -> (Complex<BigRational>, BTreeMap<i64, usize>) {
    // degree k = H_k ⊕ B_k ⊕ C_k with d: C_k -> B_{k+1} the identity
    let mut h = vec![0usize; len];
    let mut c = vec![0usize; len];
    for k in 0..len {
        let b = if k == 0 { 0 } else { c[k - 1] };
        let room = max_dim.saturating_sub(b);
        h[k] = r.gen_range(0..=room.min(2));
        if k + 1 < len {
            c[k] = r.gen_range(0..=(room - h[k]).min(max_dim / 2));
        }
    }
    let b = |k: usize| if k == 0 { 0 } else { c[k - 1] };
    let dims: Vec<usize> = (0..len).map(|k| h[k] + b(k) + c[k]).collect();
    let t: Vec<Matrix<BigRational>> = dims.iter().map(|&n| random_invertible(r, n)).collect();
    let t_inv: Vec<Matrix<BigRational>> = t
        .iter()
        .zip(&dims)
        .map(|(m, &n)| m.inverse(&plain(n), &plain(n)).expect("unit triangular factors"))
        .collect();
    let diffs = (0..len.saturating_sub(1))
        .map(|k| {
            let d = Matrix::from_fn(dims[k + 1], dims[k], |i, j| {
                let src = j >= h[k] + b(k) && j - h[k] - b(k) < c[k];
                let tgt = i >= h[k + 1] && i - h[k + 1] < b(k + 1);
                if src && tgt && j - h[k] - b(k) == i - h[k + 1] {
                    q(1)
                } else {
                    q(0)
                }
            });
            t[k + 1].mul(&d).mul(&t_inv[k])
        })
        .collect();
    let objects = dims.iter().map(|&n| plain(n)).collect();
    let complex = Complex::new(lo, objects, diffs).expect("d^2 = 0 by construction");
    let ranks = h
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(k, &n)| (lo + k as i64, n))
        .collect();
    (complex, ranks)
}

/// `d h + h d` for a random `h`: always a chain map.
pub fn random_null_homotopic(
    r: &mut impl Rng,
    a: &Complex<BigRational>,
    b: &Complex<BigRational>,
) -> ChainMap<BigRational> {
    let (lo, hi) = span(a, b);
    let hom: BTreeMap<i64, Matrix<BigRational>> = (lo..=hi + 1)
        .map(|k| {
            let m = random_matrix(r, b.dim(k - 1), a.dim(k), |draw, _, _| draw() / 2);
            (k, m)
        })
        .collect();
    let get = |k: i64| hom.get(&k).cloned().unwrap_or_else(|| Matrix::zeros(b.dim(k - 1), a.dim(k)));
    let maps = (lo..=hi)
        .map(|k| (k, b.d(k - 1).mul(&get(k)).add(&get(k + 1).mul(&a.d(k)))))
        .collect();
    ChainMap::new(a.clone(), b.clone(), maps).expect("dh + hd is a chain map")
}

fn span(a: &Complex<BigRational>, b: &Complex<BigRational>) -> (i64, i64) {
    let ends = [a, b].into_iter().filter(|c| !c.is_zero()).map(|c| (c.lo(), c.hi()));
    ends.fold((0, -1), |(lo, hi), (l, h)| if hi < lo { (l, h) } else { (lo.min(l), hi.max(h)) })
}

/// `A_l = X ⊕ N_l` with `N_l` living in degrees `>= l`; `f_l` is the
/// identity on `X` plus a null-homotopic map between the tails.
pub fn stabilizing_system(seed: u64) -> InverseSystem<BigRational> {
    let x = random_complex(&mut rng(seed), 0, 4, 4).0;
    let tail = move |l: usize| random_complex(&mut rng(seed ^ ((l as u64 + 1) * 7919)), l as i64, 3, 3).0;
    let level = {
        let x = x.clone();
        move |l: usize| x.direct_sum(&tail(l))
    };
    let level2 = level.clone();
    InverseSystem::new(level, move |l| {
        let (src, dst) = (tail(l + 1), tail(l));
        let g = random_null_homotopic(&mut rng(seed.wrapping_mul(31) + l as u64), &src, &dst);
        let a = level2(l + 1);
        let b = level2(l);
        let (lo, hi) = (0, a.hi().max(b.hi()));
        let maps = (lo..=hi)
            .map(|k| {
                let nx = x.dim(k);
                let gk = g.at(k);
                let m = Matrix::from_fn(b.dim(k), a.dim(k), |i, j| {
                    if i < nx && j < nx {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    } else if i >= nx && j >= nx {
                        gk.get(i - nx, j - nx).clone()
                    } else {
                        BigRational::zero()
                    }
                });
                (k, m)
            })
            .collect();
        ChainMap::new(a, b, maps).expect("block chain map")
    })
}
