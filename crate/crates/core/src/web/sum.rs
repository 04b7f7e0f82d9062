use std::collections::BTreeMap;
use std::fmt;

use crate::qring::Coefficient;

use super::graph::{Web, WebError};
use super::reduce::reduce_web;
use super::word::Word;

/// Linear combination of non-elliptic webs in `Hom(domain, codomain)`.
#[derive(Clone, PartialEq)]
pub struct WebSum<R> {
    domain: Word,
    codomain: Word,
    terms: BTreeMap<Web, R>,
}

impl<R: Coefficient> WebSum<R> {
    pub fn zero(domain: Word, codomain: Word) -> Self {
        WebSum {
            domain,
            codomain,
            terms: BTreeMap::new(),
        }
    }

    /// The reduced expansion of a single web.
    pub fn from_web(w: &Web) -> Self {
        let mut s = Self::zero(w.domain().clone(), w.codomain().clone());
        s.add_reduced(w, &R::one());
        s
    }

    pub fn identity(w: &Word) -> Self {
        Self::from_web(&Web::identity(w))
    }

    pub fn domain(&self) -> &Word {
        &self.domain
    }

    pub fn codomain(&self) -> &Word {
        &self.codomain
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Web, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Web) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    /// Adds `c * w` where `w` is already non-elliptic.
    pub fn add_term(&mut self, w: Web, c: R) {
        debug_assert_eq!(w.domain(), &self.domain);
        debug_assert_eq!(w.codomain(), &self.codomain);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let v = slot.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Adds `c * w` for an arbitrary web, reducing it first.
    pub fn add_reduced(&mut self, w: &Web, c: &R) {
        for (x, k) in reduce_web(w).iter() {
            self.add_term(x.clone(), c.times(&R::from_laurent(k)));
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.domain.clone(), self.codomain.clone());
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.times(c));
        }
        out
    }

    pub fn negated(&self) -> Self {
        self.scale(&R::one().negated())
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    /// Bilinear gluing (`self` first), reduced.
    pub fn compose(&self, other: &Self) -> Result<Self, WebError> {
        if self.codomain != other.domain {
            return Err(WebError::WordMismatch {
                left: self.codomain.clone(),
                right: other.domain.clone(),
            });
        }
        let mut out = Self::zero(self.domain.clone(), other.codomain.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_reduced(&a.compose(b)?, &ca.times(cb));
            }
        }
        Ok(out)
    }

    /// Bilinear stacking (`self` on top), reduced.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(
            self.domain.concat(&other.domain),
            self.codomain.concat(&other.codomain),
        );
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_reduced(&a.tensor(b), &ca.times(cb));
            }
        }
        out
    }

    pub fn dual(&self) -> Self {
        let mut out = Self::zero(self.codomain.dual(), self.domain.dual());
        for (w, c) in &self.terms {
            out.add_term(w.dual(), c.clone());
        }
        out
    }

    /// Applies `Web::reflect` termwise.
    pub fn reflect(&self) -> Self {
        let mut out = Self::zero(self.codomain.clone(), self.domain.clone());
        for (w, c) in &self.terms {
            out.add_term(w.reflect(), c.clone());
        }
        out
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> WebSum<S> {
        let mut out = WebSum::zero(self.domain.clone(), self.codomain.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Scalar value of a sum with empty boundary.
    pub fn evaluate_closed(&self) -> Result<R, WebError> {
        if !self.domain.is_empty() || !self.codomain.is_empty() {
            return Err(WebError::NotClosed);
        }
        Ok(self.coeff(&Web::empty()))
    }

    /// Coefficient of the identity web.
    pub fn identity_coeff(&self) -> R {
        if self.domain != self.codomain {
            return R::zero();
        }
        self.coeff(&Web::identity(&self.domain))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(code, c)| serde_json::json!({ "web": code, "coeff": c.to_json() }))
            .collect();
        serde_json::json!({
            "domain": self.domain.to_string(),
            "codomain": self.codomain.to_string(),
            "terms": terms,
        })
    }

    /// Terms keyed by encoding, in encoding order.
    pub fn sorted_terms(&self) -> Vec<(String, &R)> {
        let mut v: Vec<(String, &R)> = self.terms.iter().map(|(w, c)| (w.code(), c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

impl<R: Coefficient> fmt::Debug for WebSum<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WebSum[{} -> {}] {{", self.domain, self.codomain)?;
        for (code, c) in self.sorted_terms() {
            write!(f, " ({c}) {code};")?;
        }
        write!(f, " }}")
    }
}
