//! Clasps of the sl3 spider over Q(q).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::qring::{proj_coeff, qint, Coefficient, RationalFunc};
use crate::tangle::{Over, Slice};
use crate::web::{Sign, Web, WebSum, Word};

fn memo() -> &'static Mutex<HashMap<(usize, usize), WebSum<RationalFunc>>> {
    static MEMO: OnceLock<Mutex<HashMap<(usize, usize), WebSum<RationalFunc>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn id(w: &Word) -> Web {
    Web::identity(w)
}

fn repeat(s: Sign, k: usize) -> Word {
    Word::new(vec![s; k])
}

/// Nested caps closing `+^k -^k`.
fn nested_caps(k: usize) -> Web {
    let mut w = Web::identity(&Word::segregated(k, k));
    for j in (0..k).rev() {
        let word = w.codomain().clone();
        let cap = Slice::Cap(j).web(&word).unwrap();
        w = w.compose(&cap).unwrap();
    }
    w
}

/// The clasp on `+^m -^n`.
pub fn segregated_projector(m: usize, n: usize) -> WebSum<RationalFunc> {
    if let Some(p) = memo().lock().unwrap().get(&(m, n)) {
        return p.clone();
    }
    let p = build_segregated(m, n);
    memo().lock().unwrap().insert((m, n), p.clone());
    p
}

fn build_segregated(m: usize, n: usize) -> WebSum<RationalFunc> {
    if m + n <= 1 {
        return WebSum::identity(&Word::segregated(m, n));
    }
    if m == 0 {
        return segregated_projector(n, 0).dual();
    }
    if n == 0 {
        let plus = Word::new(vec![Sign::Plus]);
        let a = segregated_projector(m - 1, 0).tensor(&WebSum::identity(&plus));
        let h = Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap();
        let middle = WebSum::from_web(&id(&repeat(Sign::Plus, m - 2)).tensor(&h));
        let x = a.compose(&middle).unwrap().compose(&a).unwrap();
        let c = RationalFunc::new(qint(m as i64 - 1).unwrap(), qint(m as i64).unwrap()).unwrap();
        return a.minus(&x.scale(&c));
    }
    let sides = segregated_projector(m, 0).tensor(&segregated_projector(0, n));
    let mut out = WebSum::zero(Word::segregated(m, n), Word::segregated(m, n));
    for k in 0..=m.min(n) {
        let outer_top = id(&repeat(Sign::Plus, m - k));
        let outer_bottom = id(&repeat(Sign::Minus, n - k));
        let caps = outer_top.tensor(&nested_caps(k)).tensor(&outer_bottom);
        let cups = outer_top.tensor(&nested_caps(k).reflect()).tensor(&outer_bottom);
        let middle = WebSum::from_web(&caps.compose(&cups).unwrap());
        let term = sides.compose(&middle).unwrap().compose(&sides).unwrap();
        let c = proj_coeff(m as i64, n as i64, k as i64).unwrap();
        out = out.plus(&term.scale(&c));
    }
    out
}

/// Adjacent `(-, +)` positions swapped by bubble sort, in order.
fn bubble_swaps(w: &Word) -> Vec<usize> {
    let mut s = w.signs().to_vec();
    let mut swaps = Vec::new();
    while let Some(p) = s.windows(2).position(|x| x[0] == Sign::Minus && x[1] == Sign::Plus) {
        s.swap(p, p + 1);
        swaps.push(p);
    }
    swaps
}

/// The clasp on an arbitrary nonempty word, conjugated from the
/// segregated clasp by H-webs and normalized to identity coefficient 1.
pub fn projector_for_word(w: &Word) -> WebSum<RationalFunc> {
    let (m, n) = w.weight();
    if w.is_segregated() {
        return segregated_projector(m, n);
    }
    let mut hbar = Web::identity(w);
    for p in bubble_swaps(w) {
        let word = hbar.codomain().clone();
        let (_, rung) = Slice::Cross(Over::Top, p).resolutions(&word).unwrap();
        hbar = hbar.compose(&rung).unwrap();
    }
    let h = hbar.reflect();
    let x = WebSum::from_web(&hbar)
        .compose(&segregated_projector(m, n))
        .unwrap()
        .compose(&WebSum::from_web(&h))
        .unwrap();
    let c = x.identity_coeff();
    x.scale(&c.inverse().expect("conjugated clasp has no identity term"))
}

/// The coefficient of `id_w` is 1.
pub fn check_identity_coefficient<R: Coefficient>(p: &WebSum<R>, w: &Word) -> bool {
    p.domain() == w && p.codomain() == w && p.identity_coeff() == R::one()
}

pub fn check_idempotent<R: Coefficient>(p: &WebSum<R>, w: &Word) -> bool {
    p.domain() == w && p.codomain() == w && p.compose(p).is_ok_and(|pp| &pp == p)
}

/// Composing with a Y-web or U-web on any adjacent pair, on either side,
/// gives zero.
pub fn check_annihilation<R: Coefficient>(p: &WebSum<R>, w: &Word) -> bool {
    if p.domain() != w || p.codomain() != w {
        return false;
    }
    let s = w.signs();
    for i in 0..s.len().saturating_sub(1) {
        let top = Word::new(s[..i].to_vec());
        let bottom = Word::new(s[i + 2..].to_vec());
        let pad = |g: Web| id(&top).tensor(&g).tensor(&id(&bottom));
        let (after, before) = if s[i] == s[i + 1] {
            (Web::ymerge(s[i]), Web::ysplit(s[i].flip()))
        } else {
            (Web::cap(s[i]), Web::cup(s[i]))
        };
        let right = p.compose(&WebSum::from_web(&pad(after))).unwrap();
        let left = WebSum::<R>::from_web(&pad(before)).compose(p).unwrap();
        if !right.is_zero() || !left.is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn two_strand_clasps() {
        let p = segregated_projector(2, 0);
        let h = Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap();
        let half = RationalFunc::new(1.into(), qint(2).unwrap()).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&h), -&half);
        let p11 = segregated_projector(1, 1);
        let u = Web::cap(Sign::Plus).compose(&Web::cup(Sign::Plus)).unwrap();
        let third = RationalFunc::new(1.into(), qint(3).unwrap()).unwrap();
        assert_eq!(p11.coeff(&u), -&third);
        assert!(p11.identity_coeff().is_one());
    }

    #[test]
    fn small_clasps_have_all_properties() {
        for (m, n) in [(1, 0), (2, 0), (0, 2), (1, 1), (3, 0)] {
            let word = Word::segregated(m, n);
            let p = segregated_projector(m, n);
            assert!(check_identity_coefficient(&p, &word), "({m},{n})");
            assert!(check_idempotent(&p, &word), "({m},{n})");
            assert!(check_annihilation(&p, &word), "({m},{n})");
        }
    }

    #[test]
    fn mixed_clasps_have_all_properties() {
        for (m, n) in [(2, 1), (1, 2), (2, 2)] {
            let word = Word::segregated(m, n);
            let p = segregated_projector(m, n);
            assert!(check_identity_coefficient(&p, &word), "({m},{n})");
            assert!(check_idempotent(&p, &word), "({m},{n})");
            assert!(check_annihilation(&p, &word), "({m},{n})");
        }
    }

    #[test]
    fn unsorted_words() {
        for s in ["-+", "+-+", "-++", "-+-", "+--+"] {
            let word = w(s);
            let p = projector_for_word(&word);
            assert!(check_identity_coefficient(&p, &word), "{s}");
            assert!(check_idempotent(&p, &word), "{s}");
            assert!(check_annihilation(&p, &word), "{s}");
            assert_eq!(p.dual(), projector_for_word(&word.dual()), "{s}");
        }
    }

    #[test]
    fn identity_does_not_annihilate() {
        let word = w("++");
        let id = WebSum::<RationalFunc>::identity(&word);
        assert!(check_idempotent(&id, &word));
        assert!(!check_annihilation(&id, &word));
        let zero = WebSum::<RationalFunc>::zero(word.clone(), word.clone());
        assert!(!check_identity_coefficient(&zero, &word));
    }

    #[test]
    fn minus_plus_clasp() {
        let p = projector_for_word(&w("-+"));
        let u = Web::cap(Sign::Minus).compose(&Web::cup(Sign::Minus)).unwrap();
        let third = RationalFunc::new(1.into(), qint(3).unwrap()).unwrap();
        assert!(p.identity_coeff().is_one());
        assert_eq!(p.coeff(&u), -&third);
        assert_eq!(p.len(), 2);
    }
}
