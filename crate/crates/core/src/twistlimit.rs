//! Shifted full-twist evaluations and their convergence to the clasps.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::json;

use crate::projector::projector_for_word;
use crate::qring::{expand, LaurentPoly, TruncatedSeries};
use crate::tangle::{evaluate, CrossingCounts, Over, Slice, TangleDiagram};
use crate::web::{Web, WebSum, Word};

/// `k` full twists as the braid `(s_1 ... s_{n-1})^(n k)` with the top strand
/// always over.
pub fn full_twist(w: &Word, k: usize) -> TangleDiagram {
    let n = w.len();
    let mut slices = Vec::new();
    for _ in 0..n * k {
        slices.extend((0..n.saturating_sub(1)).map(|p| Slice::Cross(Over::Top, p)));
    }
    TangleDiagram::new(w.clone(), slices)
}

/// Crossing counts of a single full twist.
pub fn twist_counts(w: &Word) -> CrossingCounts {
    full_twist(w, 1).crossing_counts().expect("braids are valid")
}

/// Exponent `3 c_- - 2 c_+` of the per-twist normalization.
pub fn twist_shift(w: &Word) -> i64 {
    let c = twist_counts(w);
    3 * c.c_neg as i64 - 2 * c.c_plus as i64
}

/// `q^(k(3c_- - 2c_+)) <twist^k>` with coefficients truncated at `order`.
pub fn shifted_eval(w: &Word, k: usize, order: i64) -> WebSum<TruncatedSeries> {
    let s = evaluate(&full_twist(w, k)).expect("braids are valid");
    let shift = twist_shift(w) * k as i64;
    s.map(|c| TruncatedSeries::from_laurent(&c.shift(shift), order))
}

/// Degree through which two sums agree on every web of either support.
pub fn sum_agreement(a: &WebSum<TruncatedSeries>, b: &WebSum<TruncatedSeries>, order: i64) -> i64 {
    let webs: BTreeSet<&Web> = a.terms().chain(b.terms()).map(|(w, _)| w).collect();
    webs.into_iter()
        .map(|w| {
            let get = |s: &WebSum<TruncatedSeries>| {
                let c = s.coeff(w);
                if c.is_zero() {
                    TruncatedSeries::zero(order)
                } else {
                    c.truncate(order)
                }
            };
            get(a).agreement_degree(&get(b))
        })
        .min()
        .unwrap_or(order - 1)
}

#[derive(Clone, Debug)]
pub struct StabilizationReport {
    pub word: Word,
    pub order: i64,
    /// Shifted evaluations for `k = 0..=k_max`.
    pub per_k: Vec<(usize, WebSum<TruncatedSeries>)>,
    /// `agreement_degree[k]` compares `k` with `k + 1`.
    pub agreement_degree: Vec<i64>,
    /// Agreement of the last evaluation with the expanded clasp.
    pub projector_agreement: i64,
}

pub fn stabilization_report(w: &Word, k_max: usize, order: i64) -> StabilizationReport {
    let per_k: Vec<_> = (0..=k_max).map(|k| (k, shifted_eval(w, k, order))).collect();
    let agreement_degree = per_k
        .windows(2)
        .map(|p| sum_agreement(&p[0].1, &p[1].1, order))
        .collect();
    let limit = expanded_projector(w, order);
    let projector_agreement = sum_agreement(&per_k.last().unwrap().1, &limit, order);
    StabilizationReport {
        word: w.clone(),
        order,
        per_k,
        agreement_degree,
        projector_agreement,
    }
}

/// The clasp on `w` with coefficients expanded as series.
pub fn expanded_projector(w: &Word, order: i64) -> WebSum<TruncatedSeries> {
    projector_for_word(w).map(|c| expand(c, order).expect("clasp coefficients expand"))
}

impl StabilizationReport {
    pub fn is_monotone(&self) -> bool {
        self.agreement_degree.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn strict_increases(&self) -> usize {
        self.agreement_degree.windows(2).filter(|p| p[0] < p[1]).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "word": self.word.to_string(),
            "order": self.order,
            "per_k": self.per_k.iter().map(|(k, s)| json!({"k": k, "sum": s.to_json()})).collect::<Vec<_>>(),
            "agreement_degree": self.agreement_degree,
            "projector_agreement": self.projector_agreement,
        })
    }

    pub fn table(&self) -> String {
        let mut out = format!("word {}  order {}\n  k  agrees with k+1 through\n", self.word, self.order);
        for (k, d) in self.agreement_degree.iter().enumerate() {
            let _ = writeln!(out, "{k:>3}  q^{d}");
        }
        let _ = writeln!(
            out,
            "k={} agrees with the clasp through q^{}",
            self.per_k.len() - 1,
            self.projector_agreement
        );
        out
    }
}

/// Coefficient of `id_w` in a shifted evaluation, as an exact polynomial.
pub fn identity_coefficient(s: &WebSum<TruncatedSeries>) -> LaurentPoly {
    s.identity_coeff().to_laurent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::Sign;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn twist_shapes() {
        assert!(full_twist(&w("+-+"), 0).slices.is_empty());
        let c = twist_counts(&w("++"));
        assert_eq!((c.c_plus, c.c_neg), (2, 0));
        let c = twist_counts(&w("+-"));
        assert_eq!((c.c_plus, c.c_neg), (0, 2));
        assert_eq!(full_twist(&w("+++"), 2).slices.len(), 12);
    }

    #[test]
    fn one_twist_by_hand() {
        let h = Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap();
        let s = shifted_eval(&w("++"), 1, 20);
        assert!(identity_coefficient(&s).is_one());
        let expect = &LaurentPoly::monomial(1, 3) - &LaurentPoly::monomial(1, 1);
        assert_eq!(s.coeff(&h).to_laurent(), expect);
        let u = Web::cap(Sign::Plus).compose(&Web::cup(Sign::Plus)).unwrap();
        let s = shifted_eval(&w("+-"), 1, 20);
        assert!(identity_coefficient(&s).is_one());
        let expect = &LaurentPoly::monomial(1, 4) - &LaurentPoly::monomial(1, 2);
        assert_eq!(s.coeff(&u).to_laurent(), expect);
    }

    #[test]
    fn single_strand_is_stable() {
        let r = stabilization_report(&w("+"), 3, 10);
        assert!(r.agreement_degree.iter().all(|&d| d == 9));
        assert_eq!(r.projector_agreement, 9);
    }

    #[test]
    fn two_strands_converge() {
        for word in ["++", "+-"] {
            let r = stabilization_report(&w(word), 3, 12);
            assert!(r.is_monotone(), "{word}: {:?}", r.agreement_degree);
            assert!(r.projector_agreement >= 6, "{word}: {}", r.projector_agreement);
        }
    }
}
