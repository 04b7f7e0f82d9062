use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::matrix::Matrix;
use super::scalar::{GradedObject, Scalar, Summand};
use super::HomError;

/// Bounded cochain complex; `d(k)` maps degree `k` to `k + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex<S> {
    lo: i64,
    objects: Vec<GradedObject>,
    diffs: Vec<Matrix<S>>,
}

fn check_entries<S: Scalar>(m: &Matrix<S>, from: &[Summand], to: &[Summand]) -> Result<(), HomError> {
    if m.rows() != to.len() || m.cols() != from.len() {
        return Err(HomError::Shape(format!(
            "{}x{} matrix for {} -> {} summands",
            m.rows(),
            m.cols(),
            from.len(),
            to.len()
        )));
    }
    for (r, t) in to.iter().enumerate() {
        for (c, s) in from.iter().enumerate() {
            if !m.get(r, c).compatible(s, t) {
                return Err(HomError::Incompatible {
                    from: s.to_string(),
                    to: t.to_string(),
                    entry: m.get(r, c).to_string(),
                });
            }
        }
    }
    Ok(())
}

impl<S: Scalar> Complex<S> {
    /// `diffs[i]` maps `objects[i]` to `objects[i + 1]`; the last object's
    /// differential is zero.
    pub fn new(lo: i64, objects: Vec<GradedObject>, diffs: Vec<Matrix<S>>) -> Result<Self, HomError> {
        if diffs.len() + 1 != objects.len().max(1) {
            return Err(HomError::Shape(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            check_entries(d, &objects[i], &objects[i + 1])?;
        }
        for (i, p) in diffs.windows(2).enumerate() {
            if !p[1].mul(&p[0]).is_zero() {
                return Err(HomError::DSquared(lo + i as i64));
            }
        }
        Ok(Complex { lo, objects, diffs }.trimmed())
    }

    pub fn zero() -> Self {
        Complex {
            lo: 0,
            objects: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// One object in degree `k`.
    pub fn single(k: i64, obj: GradedObject) -> Self {
        Complex {
            lo: k,
            objects: vec![obj],
            diffs: Vec::new(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.objects.last().is_some_and(|o| o.is_empty()) {
            self.objects.pop();
            self.diffs.pop();
        }
        while self.objects.first().is_some_and(|o| o.is_empty()) {
            self.objects.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.objects.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.objects.is_empty()
    }

    /// Lowest nonzero degree; meaningless for the zero complex.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest nonzero degree; below `lo` for the zero complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn obj(&self, k: i64) -> &[Summand] {
        let i = k - self.lo;
        if i < 0 {
            return &[];
        }
        self.objects.get(i as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self, k: i64) -> usize {
        self.obj(k).len()
    }

    /// Differential out of degree `k`.
    pub fn d(&self, k: i64) -> Matrix<S> {
        let i = k - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            Matrix::zeros(self.dim(k + 1), self.dim(k))
        }
    }

    /// Builds a complex from per-degree objects and differentials over a
    /// degree range.
    pub fn from_fn(
        lo: i64,
        hi: i64,
        obj: impl Fn(i64) -> GradedObject,
        d: impl Fn(i64) -> Matrix<S>,
    ) -> Result<Self, HomError> {
        if hi < lo {
            return Ok(Self::zero());
        }
        let objects = (lo..=hi).map(obj).collect();
        let diffs = (lo..hi).map(d).collect();
        Self::new(lo, objects, diffs)
    }

    /// `A[n]^i = A^{i-n}` with differential `(-1)^n d`.
    pub fn shift(&self, n: i64) -> Self {
        let sign = n.rem_euclid(2) == 1;
        Complex {
            lo: if self.is_zero() { 0 } else { self.lo + n },
            objects: self.objects.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|d| if sign { d.neg() } else { d.clone() })
                .collect(),
        }
    }

    /// The truncation zeroing all degrees above `k`.
    pub fn truncate(&self, k: i64) -> Self {
        if self.is_zero() || k < self.lo {
            return Self::zero();
        }
        let keep = ((k - self.lo + 1) as usize).min(self.objects.len());
        Complex {
            lo: self.lo,
            objects: self.objects[..keep].to_vec(),
            diffs: self.diffs[..keep - 1].to_vec(),
        }
        .trimmed()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        Self::from_fn(
            lo,
            hi,
            |k| [self.obj(k), other.obj(k)].concat(),
            |k| {
                let (a, b) = (self.d(k), other.d(k));
                Matrix::block(
                    &a,
                    &Matrix::zeros(a.rows(), b.cols()),
                    &Matrix::zeros(b.rows(), a.cols()),
                    &b,
                )
            },
        )
        .expect("direct sums of complexes are complexes")
    }

    pub fn total_rank(&self) -> usize {
        self.objects.iter().map(Vec::len).sum()
    }

    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .degrees()
            .filter(|_| !self.is_zero())
            .map(|k| {
                let d = self.d(k);
                json!({
                    "degree": k,
                    "objects": self.obj(k).iter().map(|s| json!({"label": s.label, "shift": s.shift})).collect::<Vec<_>>(),
                    "d": (0..d.rows()).map(|r| d.row(r).iter().map(S::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"ring": S::ring_name(), "degrees": degrees})
    }

    /// Reads the form written by `to_json`; degrees must be consecutive.
    pub fn from_json(v: &Value) -> Result<Self, HomError> {
        let bad = |m: &str| HomError::Json(m.to_string());
        if let Some(r) = v.get("ring").and_then(Value::as_str) {
            if r != S::ring_name() {
                return Err(HomError::Json(format!("ring {r:?}, expected {:?}", S::ring_name())));
            }
        }
        let degrees = v
            .get("degrees")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"degrees\" array"))?;
        let mut lo = None;
        let mut objects = Vec::new();
        let mut raw_d = Vec::new();
        for (i, dv) in degrees.iter().enumerate() {
            let k = dv
                .get("degree")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("degree entry without integer \"degree\""))?;
            let start = *lo.get_or_insert(k);
            if k != start + i as i64 {
                return Err(bad("degrees must be consecutive"));
            }
            let obj = dv
                .get("objects")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("degree without \"objects\""))?
                .iter()
                .map(|s| {
                    let label = s.get("label").and_then(Value::as_str).ok_or_else(|| bad("summand without label"))?;
                    let shift = s.get("shift").and_then(Value::as_i64).unwrap_or(0);
                    Ok(Summand::new(label, shift))
                })
                .collect::<Result<GradedObject, HomError>>()?;
            objects.push(obj);
            raw_d.push(dv.get("d").cloned().unwrap_or(Value::Array(Vec::new())));
        }
        let mut diffs = Vec::new();
        for i in 0..objects.len().saturating_sub(1) {
            let rows = raw_d[i].as_array().ok_or_else(|| bad("\"d\" must be a list of rows"))?;
            let parsed = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| bad("matrix row must be a list"))?
                        .iter()
                        .map(S::from_json)
                        .collect::<Result<Vec<S>, HomError>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (nr, nc) = (objects[i + 1].len(), objects[i].len());
            let m = if parsed.is_empty() {
                Matrix::zeros(nr, nc)
            } else {
                Matrix::from_rows(parsed, nc).ok_or_else(|| bad("ragged matrix"))?
            };
            diffs.push(m);
        }
        if let Some(last) = raw_d.last() {
            if last.as_array().is_some_and(|a| !a.is_empty()) {
                return Err(bad("the top degree must have an empty \"d\""));
            }
        }
        Complex::new(lo.unwrap_or(0), objects, diffs)
    }
}

/// Degreewise maps `source^k -> target^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap<S> {
    pub source: Complex<S>,
    pub target: Complex<S>,
    maps: BTreeMap<i64, Matrix<S>>,
}

impl<S: Scalar> ChainMap<S> {
    /// Checks shapes, entry compatibility and `f d = d f`.
    pub fn new(source: Complex<S>, target: Complex<S>, maps: BTreeMap<i64, Matrix<S>>) -> Result<Self, HomError> {
        let f = Self::unchecked(source, target, maps);
        for (k, m) in &f.maps {
            check_entries(m, f.source.obj(*k), f.target.obj(*k))?;
        }
        for k in f.range() {
            let lhs = f.at(k + 1).mul(&f.source.d(k));
            let rhs = f.target.d(k).mul(&f.at(k));
            if lhs != rhs {
                return Err(HomError::NotChainMap(k));
            }
        }
        Ok(f)
    }

    pub(crate) fn unchecked(source: Complex<S>, target: Complex<S>, maps: BTreeMap<i64, Matrix<S>>) -> Self {
        let maps = maps.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        ChainMap { source, target, maps }
    }

    pub fn from_fn(
        source: &Complex<S>,
        target: &Complex<S>,
        f: impl Fn(i64) -> Matrix<S>,
    ) -> Result<Self, HomError> {
        let range = joint_range(source, target);
        let maps = range.map(|k| (k, f(k))).collect();
        Self::new(source.clone(), target.clone(), maps)
    }

    pub fn identity(c: &Complex<S>) -> Self {
        let maps = c.degrees().map(|k| (k, Matrix::identity(c.dim(k)))).collect();
        Self::unchecked(c.clone(), c.clone(), maps)
    }

    pub fn zero(source: &Complex<S>, target: &Complex<S>) -> Self {
        Self::unchecked(source.clone(), target.clone(), BTreeMap::new())
    }

    fn range(&self) -> std::ops::RangeInclusive<i64> {
        let r = joint_range(&self.source, &self.target);
        (*r.start() - 1)..=*r.end()
    }

    /// The component in degree `k`.
    pub fn at(&self, k: i64) -> Matrix<S> {
        self.maps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.target.dim(k), self.source.dim(k)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap<S>) -> Self {
        assert_eq!(other.target, self.source, "chain maps do not compose");
        let maps = joint_range(&other.source, &self.target)
            .map(|k| (k, self.at(k).mul(&other.at(k))))
            .collect();
        Self::unchecked(other.source.clone(), self.target.clone(), maps)
    }

    pub fn sub(&self, other: &ChainMap<S>) -> Self {
        let maps = joint_range(&self.source, &self.target)
            .map(|k| (k, self.at(k).sub(&other.at(k))))
            .collect();
        Self::unchecked(self.source.clone(), self.target.clone(), maps)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.values().all(Matrix::is_zero)
    }

    /// `f[n]`, between the shifted complexes.
    pub fn shift(&self, n: i64) -> Self {
        let maps = self.maps.iter().map(|(k, m)| (k + n, m.clone())).collect();
        Self::unchecked(self.source.shift(n), self.target.shift(n), maps)
    }

    pub fn truncate(&self, k: i64) -> Self {
        let maps = self.maps.range(..=k).map(|(j, m)| (*j, m.clone())).collect();
        Self::unchecked(self.source.truncate(k), self.target.truncate(k), maps)
    }

    /// Whether the degree `k` component is invertible.
    pub fn is_iso_at(&self, k: i64) -> bool {
        let (s, t) = (self.source.obj(k), self.target.obj(k));
        if s.is_empty() && t.is_empty() {
            return true;
        }
        self.at(k).inverse(s, t).is_some()
    }

    /// The inverse of the degree `k` component, if found.
    pub fn inverse_at(&self, k: i64) -> Option<Matrix<S>> {
        self.at(k).inverse(self.source.obj(k), self.target.obj(k))
    }
}

/// Degrees where either complex is nonzero.
pub(crate) fn joint_range<S: Scalar>(a: &Complex<S>, b: &Complex<S>) -> std::ops::RangeInclusive<i64> {
    match (a.is_zero(), b.is_zero()) {
        #[allow(clippy::reversed_empty_ranges)]
        (true, true) => 0..=-1,
        (true, false) => b.degrees(),
        (false, true) => a.degrees(),
        (false, false) => a.lo().min(b.lo())..=a.hi().max(b.hi()),
    }
}

/// A degree −1 map family `h^k: C^k -> C^{k-1}`, keyed by source degree.
pub type Homotopy<S> = BTreeMap<i64, Matrix<S>>;

fn homotopy_at<S: Scalar>(h: &Homotopy<S>, c: &Complex<S>, k: i64) -> Matrix<S> {
    h.get(&k)
        .cloned()
        .unwrap_or_else(|| Matrix::zeros(c.dim(k - 1), c.dim(k)))
}

/// Whether `id - f = d h + h d` for an endomorphism `f`.
pub fn is_homotopic_to_identity<S: Scalar>(f: &ChainMap<S>, h: &Homotopy<S>) -> bool {
    let c = &f.source;
    if &f.target != c {
        return false;
    }
    c.degrees().all(|k| {
        let lhs = Matrix::identity(c.dim(k)).sub(&f.at(k));
        let rhs = c
            .d(k - 1)
            .mul(&homotopy_at(h, c, k))
            .add(&homotopy_at(h, c, k + 1).mul(&c.d(k)));
        lhs == rhs
    })
}

pub(crate) fn compose_homotopy<S: Scalar>(
    g: &ChainMap<S>,
    h: &Homotopy<S>,
    f: &ChainMap<S>,
) -> Homotopy<S> {
    // g ∘ h ∘ f with h on the middle complex
    let mid = &f.target;
    h.keys()
        .map(|&k| (k, g.at(k - 1).mul(&homotopy_at(h, mid, k)).mul(&f.at(k))))
        .collect()
}

pub(crate) fn add_homotopy<S: Scalar>(a: &Homotopy<S>, b: &Homotopy<S>) -> Homotopy<S> {
    let mut out = a.clone();
    for (k, m) in b {
        let v = match out.get(k) {
            Some(x) => x.add(m),
            None => m.clone(),
        };
        out.insert(*k, v);
    }
    out
}

/// `cone(f)^i = A^{i+1} ⊕ B^i` with differential `(-d_A 0; -f d_B)`.
pub fn cone<S: Scalar>(f: &ChainMap<S>) -> Complex<S> {
    let (a, b) = (&f.source, &f.target);
    let a1 = a.shift(-1);
    let range = joint_range(&a1, b);
    Complex::from_fn(
        *range.start(),
        *range.end(),
        |i| [a.obj(i + 1), b.obj(i)].concat(),
        |i| Matrix::block(&a.d(i + 1).neg(), &Matrix::zeros(a.dim(i + 2), b.dim(i)), &f.at(i + 1).neg(), &b.d(i)),
    )
    .expect("the cone of a chain map is a complex")
}

/// The projection `cone(f) -> A[-1]` of the distinguished triangle.
pub fn connecting_map<S: Scalar>(f: &ChainMap<S>) -> ChainMap<S> {
    let c = cone(f);
    let a1 = f.source.shift(-1);
    let (a, b) = (&f.source, &f.target);
    let maps = joint_range(&c, &a1)
        .map(|i| {
            let m = Matrix::block(
                &Matrix::identity(a.dim(i + 1)),
                &Matrix::zeros(a.dim(i + 1), b.dim(i)),
                &Matrix::zeros(0, a.dim(i + 1)),
                &Matrix::zeros(0, b.dim(i)),
            );
            (i, m)
        })
        .collect();
    ChainMap::new(c, a1, maps).expect("the connecting map is a chain map")
}

/// The inclusion `B -> cone(f)`.
pub fn cone_inclusion<S: Scalar>(f: &ChainMap<S>) -> ChainMap<S> {
    let c = cone(f);
    let (a, b) = (&f.source, &f.target);
    let maps = joint_range(b, &c)
        .map(|i| {
            let m = Matrix::block(
                &Matrix::zeros(a.dim(i + 1), 0),
                &Matrix::zeros(a.dim(i + 1), b.dim(i)),
                &Matrix::zeros(b.dim(i), 0),
                &Matrix::identity(b.dim(i)),
            );
            (i, m)
        })
        .collect();
    ChainMap::new(b.clone(), c, maps).expect("the cone inclusion is a chain map")
}
