//! Cabling and colored invariants.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::projector::projector_for_word;
use crate::qring::RationalFunc;
use crate::web::{Sign, WebError, WebSum, Word};

use super::diagram::{Slice, SliceError, TangleDiagram};
use super::evaluate::evaluate_with;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoredError {
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error("slice {0}: web vertices cannot be cabled")]
    Vertex(usize),
    #[error("{0}")]
    Labels(String),
    #[error("{0}")]
    Insertion(String),
    #[error(transparent)]
    Web(#[from] WebError),
}

/// Component of every strand position at every cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// `at_cut[i][p]` is the component through position `p` before slice `i`.
    pub at_cut: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits the strands of a vertex-free diagram into components, numbered in
/// order of first appearance.
pub fn components(d: &TangleDiagram) -> Result<Components, ColoredError> {
    d.words()?;
    let mut parent: Vec<usize> = (0..d.domain.len()).collect();
    let mut cur: Vec<usize> = parent.clone();
    let mut raw = vec![cur.clone()];
    for (i, s) in d.slices.iter().enumerate() {
        match *s {
            Slice::Id => {}
            Slice::Cup(_, p) => {
                let id = parent.len();
                parent.push(id);
                cur.splice(p..p, [id, id]);
            }
            Slice::Cap(p) => {
                let (a, b) = (find(&mut parent, cur[p]), find(&mut parent, cur[p + 1]));
                parent[a] = b;
                cur.drain(p..p + 2);
            }
            Slice::Cross(_, p) => cur.swap(p, p + 1),
            Slice::YSplit(_) | Slice::YMerge(_) => return Err(ColoredError::Vertex(i)),
        }
        raw.push(cur.clone());
    }
    let mut names = BTreeMap::new();
    let at_cut = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| {
                    let r = find(&mut parent, x);
                    let next = names.len();
                    *names.entry(r).or_insert(next)
                })
                .collect()
        })
        .collect();
    Ok(Components {
        count: names.len(),
        at_cut,
    })
}

struct Cabled {
    diagram: TangleDiagram,
    /// Index in the cabled diagram of the first slice coming from each
    /// original slice, plus the final cut.
    cuts: Vec<usize>,
    /// Bundle word at every position of every original cut.
    bundles: Vec<Vec<Word>>,
}

fn bundle(label: &Word, s: Sign) -> Word {
    match s {
        Sign::Plus => label.clone(),
        Sign::Minus => label.dual(),
    }
}

fn cable_full(d: &TangleDiagram, labels: &[Word]) -> Result<Cabled, ColoredError> {
    let comps = components(d)?;
    if labels.len() != comps.count {
        return Err(ColoredError::Labels(format!(
            "{} label(s) for {} component(s)",
            labels.len(),
            comps.count
        )));
    }
    if labels.iter().any(|l| l.is_empty()) {
        return Err(ColoredError::Labels("labels must be nonempty".into()));
    }
    let words = d.words()?;
    let bundles: Vec<Vec<Word>> = words
        .iter()
        .zip(&comps.at_cut)
        .map(|(w, cs)| {
            w.signs()
                .iter()
                .zip(cs)
                .map(|(&s, &c)| bundle(&labels[c], s))
                .collect()
        })
        .collect();
    let offset = |i: usize, p: usize| bundles[i][..p].iter().map(Word::len).sum::<usize>();
    let domain = bundles[0].iter().fold(Word::empty(), |acc, b| acc.concat(b));
    let mut slices = Vec::new();
    let mut cuts = Vec::new();
    for (i, s) in d.slices.iter().enumerate() {
        cuts.push(slices.len());
        match *s {
            Slice::Id => slices.push(Slice::Id),
            Slice::Cup(_, p) => {
                let at = offset(i, p);
                let top = &bundles[i + 1][p];
                slices.extend(top.signs().iter().enumerate().map(|(j, &a)| Slice::Cup(a, at + j)));
            }
            Slice::Cap(p) => {
                let at = offset(i, p);
                let k = bundles[i][p].len();
                slices.extend((0..k).rev().map(|j| Slice::Cap(at + j)));
            }
            Slice::Cross(over, p) => {
                let at = offset(i, p);
                let (k1, k2) = (bundles[i][p].len(), bundles[i][p + 1].len());
                for a in (0..k1).rev() {
                    slices.extend((0..k2).map(|b| Slice::Cross(over, at + a + b)));
                }
            }
            Slice::YSplit(_) | Slice::YMerge(_) => unreachable!(),
        }
    }
    cuts.push(slices.len());
    Ok(Cabled {
        diagram: TangleDiagram::new(domain, slices),
        cuts,
        bundles,
    })
}

/// Replaces every strand by parallel strands directed by its component's
/// label.
pub fn cable(d: &TangleDiagram, labels: &[Word]) -> Result<TangleDiagram, ColoredError> {
    Ok(cable_full(d, labels)?.diagram)
}

/// Default insertion point of each component: the topmost position at the
/// first cut where it appears.
pub fn default_insertion_points(d: &TangleDiagram) -> Result<Vec<(usize, usize)>, ColoredError> {
    let comps = components(d)?;
    let mut out = vec![None; comps.count];
    for (i, row) in comps.at_cut.iter().enumerate() {
        for (p, &c) in row.iter().enumerate() {
            out[c].get_or_insert((i, p));
        }
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

/// Colored invariant with projectors at the default insertion points.
pub fn colored_invariant(
    d: &TangleDiagram,
    labels: &[Word],
) -> Result<WebSum<RationalFunc>, ColoredError> {
    colored_invariant_at(d, labels, &default_insertion_points(d)?)
}

/// Colored invariant with the projector of component `c` inserted at
/// `points[c] = (cut, position)` of the uncabled diagram.
pub fn colored_invariant_at(
    d: &TangleDiagram,
    labels: &[Word],
    points: &[(usize, usize)],
) -> Result<WebSum<RationalFunc>, ColoredError> {
    let cabled = cable_full(d, labels)?;
    let comps = components(d)?;
    if points.len() != comps.count {
        return Err(ColoredError::Insertion(format!(
            "{} insertion point(s) for {} component(s)",
            points.len(),
            comps.count
        )));
    }
    let mut inserts: BTreeMap<usize, Vec<(usize, Word)>> = BTreeMap::new();
    for (c, &(cut, p)) in points.iter().enumerate() {
        if comps.at_cut.get(cut).and_then(|row| row.get(p)) != Some(&c) {
            return Err(ColoredError::Insertion(format!(
                "position {} at cut {cut} is not on component {c}",
                p + 1
            )));
        }
        let at = cabled.bundles[cut][..p].iter().map(Word::len).sum();
        inserts
            .entry(cabled.cuts[cut])
            .or_default()
            .push((at, cabled.bundles[cut][p].clone()));
    }
    let out = evaluate_with(&cabled.diagram, |cut, word| {
        let list = inserts.get(&cut)?;
        let mut acc = WebSum::identity(word);
        for (at, b) in list {
            let s = word.signs();
            let top = WebSum::identity(&Word::new(s[..*at].to_vec()));
            let bottom = WebSum::identity(&Word::new(s[at + b.len()..].to_vec()));
            let p = top.tensor(&projector_for_word(b)).tensor(&bottom);
            acc = acc.compose(&p).expect("projector fits its bundle");
        }
        Some(acc)
    })?;
    Ok(out)
}

/// Colored invariant of a closed diagram.
pub fn colored_closed(d: &TangleDiagram, labels: &[Word]) -> Result<RationalFunc, ColoredError> {
    Ok(colored_invariant(d, labels)?.evaluate_closed()?)
}
