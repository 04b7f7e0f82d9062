use std::collections::BTreeMap;
use std::fmt;

use super::complex::{cone, joint_range, ChainMap, Complex};
use super::gauss::simplify;
use super::matrix::Matrix;
use super::scalar::Scalar;
use super::HomError;

/// Isomorphism order of a chain map, as far as it was probed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IsoOrder {
    Finite(i64),
    /// A degreewise isomorphism in every degree up to the probe bound.
    Infinite,
}

impl fmt::Display for IsoOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoOrder::Finite(k) => write!(f, "{k}"),
            IsoOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl IsoOrder {
    pub fn at_least(self, k: i64) -> bool {
        match self {
            IsoOrder::Finite(j) => j >= k,
            IsoOrder::Infinite => true,
        }
    }
}

/// Largest `k` with the truncation `t_{<=k} f` an isomorphism, probing
/// degrees up to `probe`.
pub fn iso_order<S: Scalar>(f: &ChainMap<S>, probe: i64) -> IsoOrder {
    let range = joint_range(&f.source, &f.target);
    for k in *range.start()..=probe.min(*range.end()) {
        if !f.is_iso_at(k) {
            return IsoOrder::Finite(k - 1);
        }
    }
    IsoOrder::Infinite
}

/// `A_0 <- A_1 <- ...`, produced on demand; `map(l)` goes from `A_{l+1}` to
/// `A_l`.
pub struct InverseSystem<S> {
    complex: Box<dyn Fn(usize) -> Complex<S> + Send + Sync>,
    map: Box<dyn Fn(usize) -> ChainMap<S> + Send + Sync>,
}

impl<S: Scalar> InverseSystem<S> {
    pub fn new(
        complex: impl Fn(usize) -> Complex<S> + Send + Sync + 'static,
        map: impl Fn(usize) -> ChainMap<S> + Send + Sync + 'static,
    ) -> Self {
        InverseSystem {
            complex: Box::new(complex),
            map: Box::new(map),
        }
    }

    pub fn complex(&self, l: usize) -> Complex<S> {
        (self.complex)(l)
    }

    pub fn map(&self, l: usize) -> ChainMap<S> {
        (self.map)(l)
    }
}

/// Stabilized complex of an inverse system with its maps to every level
/// probed.
#[derive(Clone, Debug)]
pub struct ChLimit<S> {
    pub complex: Complex<S>,
    /// `levels[k]` is the level `l(k)` whose degree `k` term was chosen.
    pub levels: BTreeMap<i64, usize>,
    /// `maps[l]` goes from the limit to `A_l`.
    pub maps: Vec<ChainMap<S>>,
}

/// Builds the limit through degree `through`, looking at levels below
/// `budget`. Degree `k` uses the least `l(k)` after which every probed
/// `f_l` is invertible in degree `k`.
pub fn ch_limit<S: Scalar>(
    sys: &InverseSystem<S>,
    through: i64,
    budget: usize,
) -> Result<ChLimit<S>, HomError> {
    if budget < 2 {
        return Err(HomError::NotStabilizing(through));
    }
    let complexes: Vec<Complex<S>> = (0..budget).map(|l| sys.complex(l)).collect();
    let maps: Vec<ChainMap<S>> = (0..budget - 1).map(|l| sys.map(l)).collect();
    let lo = complexes
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.lo())
        .min()
        .unwrap_or(0);
    let mut levels = BTreeMap::new();
    for k in lo..=through {
        let mut l = maps.len();
        while l > 0 && maps[l - 1].is_iso_at(k) {
            l -= 1;
        }
        if l == maps.len() {
            return Err(HomError::NotStabilizing(k));
        }
        levels.insert(k, l);
    }
    // moves degree k data from level `from` to level `to`
    let transport = |k: i64, from: usize, to: usize| -> Matrix<S> {
        let mut m = Matrix::identity(complexes[from].dim(k));
        if to <= from {
            for l in (to..from).rev() {
                m = maps[l].at(k).mul(&m);
            }
        } else {
            for l in from..to {
                m = maps[l].inverse_at(k).expect("stable range").mul(&m);
            }
        }
        m
    };
    let top = |k: i64| levels.get(&k).copied();
    let limit = Complex::from_fn(
        lo,
        through,
        |k| complexes[levels[&k]].obj(k).to_vec(),
        |k| {
            let (a, b) = (levels[&k], levels[&(k + 1)]);
            let m = a.max(b);
            transport(k + 1, m, b)
                .mul(&complexes[m].d(k))
                .mul(&transport(k, a, m))
        },
    )?;
    let mut out = Vec::new();
    for (l, c) in complexes.iter().enumerate() {
        let c = c.truncate(through);
        let f = (lo..=through)
            .filter_map(|k| top(k).map(|lk| (k, transport(k, lk, l))))
            .collect();
        out.push(ChainMap::new(limit.clone(), c, f)?);
    }
    Ok(ChLimit {
        complex: limit,
        levels,
        maps: out,
    })
}

impl<S: Scalar> ChLimit<S> {
    /// Whether `f_{l-1} ∘ f~_l = f~_{l-1}` at every probed level.
    pub fn triangles_commute(&self, sys: &InverseSystem<S>, through: i64) -> bool {
        (1..self.maps.len()).all(|l| {
            let f = sys.map(l - 1).truncate(through);
            f.compose(&self.maps[l]) == self.maps[l - 1]
        })
    }
}

/// Lowest nonzero degree of `cone(f_l)` after simplifying through `probe`,
/// or `probe` if nothing survives there. A lower bound for the homological
/// order of the cone.
pub fn cauchy_defect<S: Scalar>(sys: &InverseSystem<S>, l: usize, probe: i64) -> i64 {
    let c = cone(&sys.map(l));
    let r = simplify(&c, probe);
    let k = &r.complex;
    if k.is_zero() {
        return probe;
    }
    k.degrees()
        .find(|&j| k.dim(j) > 0)
        .map_or(probe, |j| j.min(probe))
}
