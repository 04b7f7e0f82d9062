use sl3spider::qring::LaurentPoly;
use sl3spider::tangle::TangleDiagram;

pub fn diagram(text: &str) -> TangleDiagram {
    TangleDiagram::parse(text).unwrap_or_else(|e| panic!("{e}\n{text}"))
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

/// Closure of the 2-braid `x+ 1` repeated `n` times, strands oriented `s s`.
pub fn torus_2(n: usize, s: char) -> String {
    let mut t = format!("word:\ncup{s} 1\ncup{s} 2\n");
    for _ in 0..n {
        t.push_str("x+ 1\n");
    }
    t.push_str("cap 2\ncap 1\n");
    t
}

/// `<T(2,n)>` from the skein relation alone:
/// `q^-3 <L+> - q^3 <L-> = (q^-1 - q) <L0>`, so
/// `P_n = q^6 P_{n-2} + q^3 (q^-1 - q) P_{n-1}`.
pub fn torus_2_oracle(n: usize) -> LaurentPoly {
    let three = &q(-2) + &(&q(0) + &q(2));
    let mut p = vec![&three * &three, three];
    let step = &q(2) - &q(4);
    for k in 2..=n {
        let next = &(&q(6) * &p[k - 2]) + &(&step * &p[k - 1]);
        p.push(next);
    }
    p[n].clone()
}

/// Left-handed trefoil in three standard forms: 2-braid closure, 3-braid
/// closure and 4-plat.
pub fn trefoils() -> Vec<String> {
    let two = torus_2(3, '-').replace("x+", "x-");
    let three = "word:\ncup+ 1\ncup+ 2\ncup+ 3\nx- 1\nx- 2\nx- 1\nx- 2\ncap 3\ncap 2\ncap 1\n".to_string();
    let plat = "word:\ncup+ 1\ncup- 3\nx- 2\nx- 2\nx- 2\ncap 3\ncap 1\n".to_string();
    vec![two, three, plat]
}

/// Pairs of diagrams related by a single Reidemeister move or isotopy.
pub fn catalogue() -> Vec<(&'static str, String, String)> {
    let mut v = Vec::new();
    for w in ["++", "+-", "-+", "--"] {
        v.push(("R2 top over", format!("word: {w}\nx+ 1\nx- 1\n"), format!("word: {w}\nid\n")));
        v.push(("R2 bottom over", format!("word: {w}\nx- 1\nx+ 1\n"), format!("word: {w}\nid\n")));
    }
    for w in ["+++", "++-", "+-+", "-+-", "---"] {
        v.push((
            "R3 positive",
            format!("word: {w}\nx+ 1\nx+ 2\nx+ 1\n"),
            format!("word: {w}\nx+ 2\nx+ 1\nx+ 2\n"),
        ));
        v.push((
            "R3 mixed",
            format!("word: {w}\nx+ 1\nx+ 2\nx- 1\n"),
            format!("word: {w}\nx- 2\nx+ 1\nx+ 2\n"),
        ));
    }
    v.push(("R1 positive kink", "word: +\ncup+ 2\nx+ 1\ncap 2\n".into(), "word: +\nid\n".into()));
    v.push(("R1 negative kink", "word: -\ncup- 2\nx- 1\ncap 2\n".into(), "word: -\nid\n".into()));
    v.push(("zigzag", "word: +\ncup- 2\ncap 1\n".into(), "word: +\nid\n".into()));
    v.push((
        "R2 next to a vertex",
        "word: ++-\nymerge 1\nx+ 1\nx- 1\n".into(),
        "word: ++-\nymerge 1\n".into(),
    ));
    for (i, a) in trefoils().iter().enumerate() {
        for b in &trefoils()[i + 1..] {
            v.push(("trefoil", a.clone(), b.clone()));
        }
    }
    v
}

/// A strand passing a vertex: once across the vertex's single leg versus
/// twice across its pair of legs. Returns (one crossing, two crossings).
pub fn vertex_pass(a: char, s: char, strand_over: bool) -> (TangleDiagram, TangleDiagram) {
    let x = if strand_over { "x-" } else { "x+" };
    let one = format!("word: {a}{a}{s}\nymerge 1\n{x} 1\n");
    let two = format!("word: {a}{a}{s}\n{x} 2\n{x} 1\nymerge 2\n");
    (diagram(&one), diagram(&two))
}

