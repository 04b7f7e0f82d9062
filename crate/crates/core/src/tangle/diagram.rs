use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::web::{Sign, Web, Word};

/// Which strand of a crossing passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Over {
    /// The strand entering at the upper position (`x+`).
    Top,
    /// The strand entering at the lower position (`x-`).
    Bottom,
}

/// One elementary piece of a diagram; positions are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    Id,
    /// Inserts `(s, -s)` before position `p`.
    Cup(Sign, usize),
    Cap(usize),
    Cross(Over, usize),
    YSplit(usize),
    YMerge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("slice {index}: {reason}")]
pub struct SliceError {
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl Slice {
    /// The word after applying this slice to `w`.
    pub fn apply(&self, w: &Word) -> Result<Word, String> {
        let s = w.signs();
        let n = s.len();
        let need = |p: usize, k: usize| {
            if p + k > n {
                Err(format!("position {} needs {k} strand(s) but the word {w} has {n}", p + 1))
            } else {
                Ok(())
            }
        };
        let mut v = s.to_vec();
        match *self {
            Slice::Id => {}
            Slice::Cup(a, p) => {
                if p > n {
                    return Err(format!("cup position {} beyond word {w}", p + 1));
                }
                v.splice(p..p, [a, a.flip()]);
            }
            Slice::Cap(p) => {
                need(p, 2)?;
                if s[p] == s[p + 1] {
                    return Err(format!("cap at {} joins two {} strands", p + 1, s[p].as_char()));
                }
                v.drain(p..p + 2);
            }
            Slice::Cross(_, p) => {
                need(p, 2)?;
                v.swap(p, p + 1);
            }
            Slice::YSplit(p) => {
                need(p, 1)?;
                let a = s[p].flip();
                v.splice(p..p + 1, [a, a]);
            }
            Slice::YMerge(p) => {
                need(p, 2)?;
                if s[p] != s[p + 1] {
                    return Err(format!("ymerge at {} needs equal signs", p + 1));
                }
                v.splice(p..p + 2, [s[p].flip()]);
            }
        }
        Ok(Word::new(v))
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, Slice::Cross(..))
    }

    /// `+1` or `-1` for a crossing applied to `w`.
    pub fn crossing_sign(&self, w: &Word) -> Option<i32> {
        let Slice::Cross(over, p) = *self else {
            return None;
        };
        let base = if over == Over::Top { 1 } else { -1 };
        Some(if w[p] == w[p + 1] { base } else { -base })
    }

    /// Web of a crossingless slice applied to `w`.
    pub fn web(&self, w: &Word) -> Result<Web, String> {
        let out = self.apply(w)?;
        let s = w.signs();
        let pad = |p: usize, k: usize, g: Web| {
            let top = Web::identity(&Word::new(s[..p].to_vec()));
            let bottom = Web::identity(&Word::new(s[p + k..].to_vec()));
            top.tensor(&g).tensor(&bottom)
        };
        let g = match *self {
            Slice::Id => Web::identity(w),
            Slice::Cup(a, p) => pad(p, 0, Web::cup(a)),
            Slice::Cap(p) => pad(p, 2, Web::cap(s[p])),
            Slice::YSplit(p) => pad(p, 1, Web::ysplit(s[p])),
            Slice::YMerge(p) => pad(p, 2, Web::ymerge(s[p])),
            Slice::Cross(..) => return Err("a crossing has no single web".into()),
        };
        debug_assert_eq!(g.codomain(), &out);
        Ok(g)
    }

    /// Oriented smoothing and H resolution of a crossing applied to `w`.
    pub fn resolutions(&self, w: &Word) -> Option<(Web, Web)> {
        let Slice::Cross(_, p) = *self else {
            return None;
        };
        let s = w.signs();
        let (a, b) = (s[p], s[p + 1]);
        let one = |x: Sign| Web::identity(&Word::new(vec![x]));
        let (smooth, h) = if a == b {
            let id = Web::identity(&Word::new(vec![a, a]));
            (id, Web::ymerge(a).compose(&Web::ysplit(a.flip())).unwrap())
        } else {
            let smooth = Web::cap(a).compose(&Web::cup(b)).unwrap();
            let h = if a == Sign::Plus {
                one(a)
                    .tensor(&Web::ysplit(b))
                    .compose(&Web::ymerge(a).tensor(&one(a)))
                    .unwrap()
            } else {
                Web::ysplit(a)
                    .tensor(&one(b))
                    .compose(&one(b).tensor(&Web::ymerge(b)))
                    .unwrap()
            };
            (smooth, h)
        };
        let top = Web::identity(&Word::new(s[..p].to_vec()));
        let bottom = Web::identity(&Word::new(s[p + 2..].to_vec()));
        let pad = |g: Web| top.tensor(&g).tensor(&bottom);
        Some((pad(smooth), pad(h)))
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slice::Id => write!(f, "id"),
            Slice::Cup(Sign::Plus, p) => write!(f, "cup+ {}", p + 1),
            Slice::Cup(Sign::Minus, p) => write!(f, "cup- {}", p + 1),
            Slice::Cap(p) => write!(f, "cap {}", p + 1),
            Slice::Cross(Over::Top, p) => write!(f, "x+ {}", p + 1),
            Slice::Cross(Over::Bottom, p) => write!(f, "x- {}", p + 1),
            Slice::YSplit(p) => write!(f, "ysplit {}", p + 1),
            Slice::YMerge(p) => write!(f, "ymerge {}", p + 1),
        }
    }
}

impl FromStr for Slice {
    type Err = String;
    fn from_str(line: &str) -> Result<Self, String> {
        let mut it = line.split_whitespace();
        let op = it.next().ok_or("empty slice")?;
        if op == "id" {
            return match it.next() {
                None => Ok(Slice::Id),
                Some(x) => Err(format!("unexpected argument {x:?} after id")),
            };
        }
        let pos = it
            .next()
            .ok_or_else(|| format!("{op} needs a position"))?;
        if let Some(x) = it.next() {
            return Err(format!("unexpected argument {x:?}"));
        }
        let p: usize = pos
            .parse()
            .map_err(|_| format!("bad position {pos:?}"))?;
        if p == 0 {
            return Err("positions are 1-based".into());
        }
        let p = p - 1;
        Ok(match op {
            "cup+" => Slice::Cup(Sign::Plus, p),
            "cup-" => Slice::Cup(Sign::Minus, p),
            "cap" => Slice::Cap(p),
            "x+" => Slice::Cross(Over::Top, p),
            "x-" => Slice::Cross(Over::Bottom, p),
            "ysplit" => Slice::YSplit(p),
            "ymerge" => Slice::YMerge(p),
            other => return Err(format!("unknown slice {other:?}")),
        })
    }
}

/// Numbers of positive and negative crossings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CrossingCounts {
    pub c_plus: usize,
    pub c_neg: usize,
}

impl CrossingCounts {
    pub fn total(&self) -> usize {
        self.c_plus + self.c_neg
    }

    pub fn writhe(&self) -> i64 {
        self.c_plus as i64 - self.c_neg as i64
    }
}

/// A diagram read left to right as a sequence of slices, blackboard framed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleDiagram {
    pub domain: Word,
    pub slices: Vec<Slice>,
}

impl TangleDiagram {
    pub fn new(domain: Word, slices: Vec<Slice>) -> Self {
        TangleDiagram { domain, slices }
    }

    pub fn identity(w: &Word) -> Self {
        TangleDiagram::new(w.clone(), Vec::new())
    }

    /// Words at every cut: `words()[i]` is the input to slice `i`.
    pub fn words(&self) -> Result<Vec<Word>, SliceError> {
        let mut out = vec![self.domain.clone()];
        for (index, s) in self.slices.iter().enumerate() {
            let next = s
                .apply(out.last().unwrap())
                .map_err(|reason| SliceError { index, reason })?;
            out.push(next);
        }
        Ok(out)
    }

    /// The codomain word, or the first ill-formed slice.
    pub fn validate(&self) -> Result<Word, SliceError> {
        Ok(self.words()?.pop().unwrap())
    }

    pub fn crossing_counts(&self) -> Result<CrossingCounts, SliceError> {
        let words = self.words()?;
        let mut c = CrossingCounts::default();
        for (s, w) in self.slices.iter().zip(&words) {
            match s.crossing_sign(w) {
                Some(1) => c.c_plus += 1,
                Some(_) => c.c_neg += 1,
                None => {}
            }
        }
        Ok(c)
    }

    /// Appends the slices of `other`, which must start where `self` ends.
    pub fn then(&self, other: &TangleDiagram) -> Result<TangleDiagram, SliceError> {
        let end = self.validate()?;
        if end != other.domain {
            return Err(SliceError {
                index: self.slices.len(),
                reason: format!("word mismatch: {end} vs {}", other.domain),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Ok(TangleDiagram::new(self.domain.clone(), slices))
    }

    /// Places `other` below `self`, running `self` first.
    pub fn stack(&self, other: &TangleDiagram) -> Result<TangleDiagram, SliceError> {
        let top_out = self.validate()?;
        let shift = top_out.len();
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().map(|s| shift_slice(*s, shift)));
        let domain = self.domain.concat(&other.domain);
        Ok(TangleDiagram::new(domain, slices))
    }

    /// Composite web of a diagram without crossings.
    pub fn to_web(&self) -> Result<Web, SliceError> {
        let words = self.words()?;
        let mut acc = Web::identity(&self.domain);
        for (index, (s, w)) in self.slices.iter().zip(&words).enumerate() {
            let g = s.web(w).map_err(|reason| SliceError { index, reason })?;
            acc = acc.compose(&g).expect("slice words agree");
        }
        Ok(acc)
    }

    pub fn parse(text: &str) -> Result<TangleDiagram, ParseError> {
        let mut domain = None;
        let mut slices = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| ParseError { line: i + 1, reason };
            if let Some(rest) = line.strip_prefix("word:") {
                if domain.is_some() {
                    return Err(err("duplicate word header".into()));
                }
                domain = Some(rest.trim().parse::<Word>().map_err(|e| err(e.to_string()))?);
                continue;
            }
            if domain.is_none() {
                return Err(err("expected `word:` header before slices".into()));
            }
            slices.push(line.parse::<Slice>().map_err(err)?);
        }
        let domain = domain.ok_or(ParseError {
            line: 0,
            reason: "missing `word:` header".into(),
        })?;
        Ok(TangleDiagram::new(domain, slices))
    }
}

/// Moves a slice down by `k` positions.
fn shift_slice(s: Slice, k: usize) -> Slice {
    match s {
        Slice::Id => Slice::Id,
        Slice::Cup(a, p) => Slice::Cup(a, p + k),
        Slice::Cap(p) => Slice::Cap(p + k),
        Slice::Cross(o, p) => Slice::Cross(o, p + k),
        Slice::YSplit(p) => Slice::YSplit(p + k),
        Slice::YMerge(p) => Slice::YMerge(p + k),
    }
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.domain.is_empty() {
            writeln!(f, "word:")?;
        } else {
            writeln!(f, "word: {}", self.domain)?;
        }
        for s in &self.slices {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for TangleDiagram {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        TangleDiagram::parse(s)
    }
}
