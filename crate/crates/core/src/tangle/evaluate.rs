use crate::qring::{Coefficient, LaurentPoly};
use crate::web::{Web, WebSum, Word};

use super::diagram::{SliceError, TangleDiagram};

/// Weights of the smoothing and the H resolution of a crossing of sign `s`.
pub fn crossing_weights(sign: i32) -> (LaurentPoly, LaurentPoly) {
    if sign > 0 {
        (LaurentPoly::monomial(1, 2), LaurentPoly::monomial(-1, 3))
    } else {
        (LaurentPoly::monomial(1, -2), LaurentPoly::monomial(-1, -3))
    }
}

/// Skein evaluation, reducing after every slice.
pub fn evaluate(d: &TangleDiagram) -> Result<WebSum<LaurentPoly>, SliceError> {
    evaluate_with(d, |_, _| None)
}

/// Slice-by-slice evaluation over any coefficient ring; `insert(cut, word)`
/// may return a sum composed in at that cut (cut `i` precedes slice `i`).
pub fn evaluate_with<R: Coefficient>(
    d: &TangleDiagram,
    insert: impl Fn(usize, &Word) -> Option<WebSum<R>>,
) -> Result<WebSum<R>, SliceError> {
    let words = d.words()?;
    let mut state = WebSum::<R>::identity(&d.domain);
    for (i, w) in words.iter().enumerate() {
        if let Some(p) = insert(i, w) {
            state = state.compose(&p).map_err(|e| SliceError {
                index: i,
                reason: e.to_string(),
            })?;
        }
        let Some(slice) = d.slices.get(i) else {
            break;
        };
        let step = match slice.resolutions(w) {
            Some((smooth, h)) => {
                let (a, b) = crossing_weights(slice.crossing_sign(w).unwrap());
                let mut s = WebSum::zero(w.clone(), words[i + 1].clone());
                s.add_reduced(&smooth, &R::from_laurent(&a));
                s.add_reduced(&h, &R::from_laurent(&b));
                s
            }
            None => WebSum::from_web(&slice.web(w).map_err(|reason| SliceError { index: i, reason })?),
        };
        state = state.compose(&step).expect("slice words agree");
    }
    Ok(state)
}

/// Depth-first expansion over all `2^c` resolutions, each resolved web
/// reduced only at the leaf. Returns the sum and the number of leaves.
pub fn evaluate_streamed(d: &TangleDiagram) -> Result<(WebSum<LaurentPoly>, u64), SliceError> {
    let words = d.words()?;
    let mut out = WebSum::zero(d.domain.clone(), words.last().unwrap().clone());
    let mut leaves = 0u64;
    let mut stack = vec![(0usize, Web::identity(&d.domain), LaurentPoly::one())];
    while let Some((i, web, coeff)) = stack.pop() {
        let Some(slice) = d.slices.get(i) else {
            leaves += 1;
            out.add_reduced(&web, &coeff);
            continue;
        };
        let w = &words[i];
        match slice.resolutions(w) {
            Some((smooth, h)) => {
                let (a, b) = crossing_weights(slice.crossing_sign(w).unwrap());
                stack.push((i + 1, web.compose(&h).unwrap(), &coeff * &b));
                stack.push((i + 1, web.compose(&smooth).unwrap(), &coeff * &a));
            }
            None => {
                let g = slice.web(w).map_err(|reason| SliceError { index: i, reason })?;
                stack.push((i + 1, web.compose(&g).unwrap(), coeff));
            }
        }
    }
    Ok((out, leaves))
}

/// Scalar invariant of a closed diagram.
pub fn evaluate_closed(d: &TangleDiagram) -> Result<LaurentPoly, SliceError> {
    let s = evaluate(d)?;
    s.evaluate_closed().map_err(|e| SliceError {
        index: d.slices.len(),
        reason: e.to_string(),
    })
}

/// Whether `<d1> = q^8 <d2>`.
pub fn writhe_correction_check(d1: &TangleDiagram, d2: &TangleDiagram) -> Result<bool, SliceError> {
    let a = evaluate(d1)?;
    let b = evaluate(d2)?;
    Ok(a == b.scale(&LaurentPoly::monomial(1, 8)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::qint;
    use crate::web::Sign;

    fn diagram(s: &str) -> TangleDiagram {
        TangleDiagram::parse(s).unwrap()
    }

    #[test]
    fn unknot_is_quantum_three() {
        let d = diagram("word:\ncup+ 1\ncap 1\n");
        assert_eq!(evaluate_closed(&d).unwrap(), qint(3).unwrap());
    }

    #[test]
    fn kinks_are_invisible() {
        for text in [
            "word: +\ncup+ 2\nx+ 1\ncap 2\n",
            "word: +\ncup+ 2\nx- 1\ncap 2\n",
            "word: -\ncup- 2\nx+ 1\ncap 2\n",
            "word: +\ncup- 1\nx+ 2\ncap 1\n",
        ] {
            let d = diagram(text);
            let w = d.domain.clone();
            assert_eq!(evaluate(&d).unwrap(), WebSum::identity(&w), "{text}");
        }
    }

    #[test]
    fn single_positive_crossing() {
        let d = diagram("word: ++\nx+ 1\n");
        let s = evaluate(&d).unwrap();
        let h = Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap();
        let w: Word = "++".parse().unwrap();
        let mut expect = WebSum::zero(w.clone(), w.clone());
        expect.add_term(Web::identity(&w), LaurentPoly::monomial(1, 2));
        expect.add_term(h, LaurentPoly::monomial(-1, 3));
        assert_eq!(s, expect);
    }

    #[test]
    fn streamed_matches_layered() {
        let d = diagram("word: ++\nx+ 1\nx+ 1\nx- 1\ncup- 2\nx+ 2\ncap 2\n");
        let (s, leaves) = evaluate_streamed(&d).unwrap();
        assert_eq!(leaves, 16);
        assert_eq!(s, evaluate(&d).unwrap());
    }
}
