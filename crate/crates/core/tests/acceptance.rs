//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints its own line; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_rational::Rational64;

use common::catalogue::{catalogue, diagram, torus_2_oracle, trefoils, vertex_pass};
use common::{homology_ranks, random_complex, random_null_homotopic, rng, stabilizing_system};
use sl3spider::homocalc::{
    ch_limit, cone, connecting_map, iso_order, simplify, ChainMap, Complex, LazyComplex, Summand, SupportRegion,
};
use sl3spider::projector::{check_annihilation, check_identity_coefficient, check_idempotent, projector_for_word};
use sl3spider::qring::{expand, qint, LaurentPoly, RationalFunc, TruncatedSeries};
use sl3spider::tangle::{
    colored_closed, colored_invariant, colored_invariant_at, evaluate, evaluate_closed, writhe_correction_check,
};
use sl3spider::twistlimit::stabilization_report;
use sl3spider::web::{Sign, Web, WebSum, Word};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn three() -> LaurentPoly {
    qint(3).unwrap()
}

fn unknots() -> Outcome {
    let start = Instant::now();
    let d = diagram("word:\ncup+ 1\ncap 1\n");
    ensure(evaluate_closed(&d).unwrap() == three(), || "unknot".into())?;
    for n in 1..=6u32 {
        for orient in ['+', '-'] {
            let mut side = String::from("word:\n");
            let mut nested = String::from("word:\n");
            for i in 0..n {
                side.push_str(&format!("cup{orient} {}\n", 2 * i + 1));
                nested.push_str(&format!("cup{orient} {}\n", i + 1));
            }
            for i in (0..n).rev() {
                side.push_str("cap 1\n");
                nested.push_str(&format!("cap {}\n", i + 1));
            }
            for text in [&side, &nested] {
                let v = evaluate_closed(&diagram(text)).unwrap();
                ensure(v == three().pow(n), || format!("{n} unknots: {v}"))?;
            }
        }
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("[3]^n for n <= 6 in {t:.2?}"))
}

fn single_term(s: &WebSum<LaurentPoly>, web: &Web, c: &LaurentPoly) -> bool {
    let mut expect = WebSum::zero(s.domain().clone(), s.codomain().clone());
    expect.add_term(web.clone(), c.clone());
    *s == expect
}

fn relations() -> Outcome {
    let mut checked = 0;
    for (a, ch) in [(Sign::Plus, '+'), (Sign::Minus, '-')] {
        let strand = Web::identity(&Word::new(vec![a]));
        let bigon = evaluate(&diagram(&format!("word: {ch}\nysplit 1\nymerge 1\n"))).unwrap();
        ensure(single_term(&bigon, &strand, &qint(2).unwrap()), || format!("bigon {ch}: {bigon:?}"))?;
        let bigon_web = Web::ysplit(a).compose(&Web::ymerge(a.flip())).unwrap();
        ensure(single_term(&WebSum::from_web(&bigon_web.dual()), &strand.dual(), &qint(2).unwrap()), || {
            format!("rotated bigon {ch}")
        })?;

        let word = Word::new(vec![a, a.flip()]);
        let square = evaluate(&diagram(&format!("word: {word}\nysplit 1\nymerge 2\nysplit 2\nymerge 1\n"))).unwrap();
        let mut expect = WebSum::identity(&word);
        expect.add_term(Web::cap(a).compose(&Web::cup(a)).unwrap(), LaurentPoly::one());
        ensure(square == expect, || format!("square {word}: {square:?}"))?;
        ensure(square.dual() == expect.dual(), || format!("rotated square {word}"))?;

        let circle = evaluate(&diagram(&format!("word:\ncup{ch} 1\ncap 1\n"))).unwrap();
        ensure(circle.identity_coeff() == three() && circle.len() == 1, || format!("circle {ch}"))?;
        checked += 3;
    }
    Ok(format!("{checked} relation instances exact"))
}

fn reidemeister() -> Outcome {
    let start = Instant::now();
    let cat = catalogue();
    for (name, a, b) in &cat {
        let (x, y) = (evaluate(&diagram(a)).unwrap(), evaluate(&diagram(b)).unwrap());
        ensure(x == y, || format!("{name} differs:\n{a}\n{b}"))?;
    }
    let left = torus_2_oracle(3).bar();
    for t in trefoils() {
        ensure(evaluate_closed(&diagram(&t)).unwrap() == left, || format!("trefoil\n{t}"))?;
    }
    let mut q8 = 0;
    for (a, s) in [('+', '+'), ('+', '-'), ('-', '+'), ('-', '-')] {
        for over in [true, false] {
            let (one, two) = vertex_pass(a, s, over);
            let (w1, w2) = (
                one.crossing_counts().unwrap().writhe(),
                two.crossing_counts().unwrap().writhe(),
            );
            let (hi, lo) = if w1 > w2 { (&one, &two) } else { (&two, &one) };
            ensure(writhe_correction_check(hi, lo).unwrap(), || format!("q^8 for {a}{s} over={over}"))?;
            q8 += 1;
        }
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} move pairs, 3 trefoils, {q8} q^8 orientations in {t:.2?}", cat.len()))
}

fn projectors() -> Outcome {
    let start = Instant::now();
    for (m, n) in [(2, 0), (3, 0), (4, 0), (1, 1), (2, 1), (2, 2)] {
        let word = Word::segregated(m, n);
        let p = projector_for_word(&word);
        ensure(check_identity_coefficient(&p, &word), || format!("identity coefficient of P_({m},{n})"))?;
        ensure(check_idempotent(&p, &word), || format!("P_({m},{n}) is not idempotent"))?;
        ensure(check_annihilation(&p, &word), || format!("P_({m},{n}) does not annihilate"))?;
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("6 clasps exact over Q(q) in {t:.2?}"))
}

/// Trace of an endomorphism of `(a, b)`: nested cups, the sum, nested caps.
fn closure(p: &WebSum<RationalFunc>) -> RationalFunc {
    let [a, b] = *p.domain().signs() else { panic!("two strands") };
    let id = |s: Sign| Web::identity(&Word::new(vec![s]));
    let cups = Web::cup(a)
        .compose(&id(a).tensor(&Web::cup(b)).tensor(&id(a.flip())))
        .unwrap();
    let caps = id(a)
        .tensor(&Web::cap(b))
        .tensor(&id(a.flip()))
        .compose(&Web::cap(a))
        .unwrap();
    let mid = p.tensor(&WebSum::identity(&Word::new(vec![b.flip(), a.flip()])));
    WebSum::from_web(&cups)
        .compose(&mid)
        .unwrap()
        .compose(&WebSum::from_web(&caps))
        .unwrap()
        .evaluate_closed()
        .unwrap()
}

fn colored() -> Outcome {
    let unknot = diagram("word:\ncup+ 1\ncap 1\n");
    let t3 = RationalFunc::from_laurent(three());
    let one = RationalFunc::one();
    let plus = colored_closed(&unknot, &[w("+")]).unwrap();
    ensure(plus == t3, || format!("(+) gave {plus}"))?;
    let pm = colored_closed(&unknot, &[w("+-")]).unwrap();
    ensure(pm == &(&t3 * &t3) - &one, || format!("(+-) gave {pm}"))?;
    let pp = colored_closed(&unknot, &[w("++")]).unwrap();
    let trace = closure(&projector_for_word(&w("++")));
    ensure(pp == trace, || format!("(++) gave {pp}, trace of clasp {trace}"))?;
    ensure(pp == &(&t3 * &t3) - &t3, || format!("(++) gave {pp}"))?;

    let hopf = diagram("word:\ncup+ 1\ncup+ 3\nx+ 2\nx+ 2\ncap 1\ncap 1\n");
    let labels = [w("+-"), w("+")];
    let a = colored_invariant(&hopf, &labels).unwrap();
    let b = colored_invariant_at(&hopf, &labels, &[(4, 1), (3, 3)]).unwrap();
    let c = colored_invariant_at(&hopf, &labels, &[(2, 1), (5, 1)]).unwrap();
    ensure(a == b && b == c, || "insertion point changes the Hopf link value".into())?;
    Ok("[3], [3]^2-1, [3]^2-[3]; Hopf link independent of insertion".into())
}

fn twist() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for word in ["++", "+-"] {
        let r = stabilization_report(&w(word), 4, 20);
        ensure(r.is_monotone(), || format!("{word}: agreement {:?}", r.agreement_degree))?;
        ensure(r.strict_increases() >= 2, || format!("{word}: agreement {:?}", r.agreement_degree))?;
        ensure(r.projector_agreement >= 6, || format!("{word}: clasp agreement {}", r.projector_agreement))?;
        notes.push(format!("{word} {:?}/{}", r.agreement_degree, r.projector_agreement));
        if word == "++" {
            let h = Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap();
            let (_, s) = r.per_k.last().unwrap();
            let got = s.coeff(&h).truncate(8);
            let expect = TruncatedSeries::from_laurent(&LaurentPoly::from_terms([(1, -1), (3, 1), (5, -1), (7, 1)]), 8);
            ensure(got == expect, || format!("H coefficient {got}"))?;
        }
    }
    let t = within(start, Duration::from_secs(300))?;
    Ok(format!("{} in {t:.2?}", notes.join(", ")))
}

fn h_web() -> Web {
    Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap()
}

fn u_web() -> Web {
    Web::cap(Sign::Plus).compose(&Web::cup(Sign::Plus)).unwrap()
}

fn euler_matches(
    data: LazyComplex<LaurentPoly>,
    slope: i64,
    word: &str,
    webs: &BTreeMap<&str, Web>,
) -> Result<(), String> {
    const ORDER: i64 = 20;
    let region = SupportRegion::new(Rational64::from_integer(slope), 0, 0);
    let chi = data.euler_char(ORDER, &region).map_err(|e| e.to_string())?;
    let p = projector_for_word(&w(word));
    let mut seen = 0;
    for (label, series) in &chi {
        ensure(series.order() >= ORDER, || format!("{label} only known below q^{}", series.order()))?;
        let web = &webs[label.as_str()];
        let expect = expand(&p.coeff(web), ORDER).unwrap();
        ensure(series.truncate(ORDER) == expect, || format!("{word} {label}: {series} vs {expect}"))?;
        seen += 1;
    }
    ensure(seen == p.len(), || format!("{word}: support mismatch"))
}

fn euler() -> Outcome {
    let plus_plus = LazyComplex::from_objects(0, |j| {
        vec![if j == 0 { Summand::new("id", 0) } else { Summand::new("H", 2 * j - 1) }]
    });
    let webs = BTreeMap::from([("id", Web::identity(&w("++"))), ("H", h_web())]);
    euler_matches(plus_plus, 1, "++", &webs)?;
    let plus_minus = LazyComplex::from_objects(0, |h| {
        let j = (h - 1).div_euclid(2);
        vec![match h {
            0 => Summand::new("id", 0),
            _ if h % 2 == 1 => Summand::new("U", 6 * j + 2),
            _ => Summand::new("U", 6 * j + 4),
        }]
    });
    let webs = BTreeMap::from([("id", Web::identity(&w("+-"))), ("U", u_web())]);
    euler_matches(plus_minus, 2, "+-", &webs)?;
    Ok("both clasps reproduced through q^20".into())
}

fn homocalc() -> Outcome {
    let start = Instant::now();
    for seed in 0..100u64 {
        let (c, ranks) = random_complex(&mut rng(seed), (seed % 5) as i64 - 2, 5, 6);
        ensure(homology_ranks(&c) == ranks, || format!("seed {seed}: generator"))?;
        let red = simplify(&c, c.hi());
        ensure(red.verify(), || format!("seed {seed}: homotopy data"))?;
        ensure(homology_ranks(&red.complex) == ranks, || format!("seed {seed}: homology"))?;
        for k in [c, red.complex] {
            let rebuilt = Complex::from_fn(k.lo(), k.hi(), |j| k.obj(j).to_vec(), |j| k.d(j));
            ensure(k.is_zero() || rebuilt.is_ok(), || format!("seed {seed}: d^2"))?;
        }
    }
    for seed in 0..10u64 {
        let (c, _) = random_complex(&mut rng(1000 + seed), 0, 4, 5);
        let k = cone(&ChainMap::identity(&c));
        ensure(simplify(&k, k.hi().max(0)).complex.is_zero(), || format!("cone(id) seed {seed}"))?;
    }
    for i in 0..20u64 {
        let k = 1 + (i % 4) as i64;
        let mut r = rng(2000 + i);
        let (a, _) = random_complex(&mut r, 0, 4, 4);
        let (b, _) = random_complex(&mut r, k, 3, 4);
        let f = random_null_homotopic(&mut r, &a, &b);
        let order = iso_order(&connecting_map(&f), 12);
        ensure(order.at_least(k - 1), || format!("instance {i}: |delta| = {order} < {}", k - 1))?;
    }
    for seed in 0..10u64 {
        let sys = stabilizing_system(3000 + seed);
        let lim = ch_limit(&sys, 3, 7).map_err(|e| e.to_string())?;
        ensure(lim.triangles_commute(&sys, 3), || format!("system {seed}: triangles"))?;
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("100 complexes, 10 cones, 20 triangles, 10 limits in {t:.2?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("unknot and disjoint unknots", unknots),
        ("web relations", relations),
        ("Reidemeister invariance", reidemeister),
        ("projector properties", projectors),
        ("colored invariants", colored),
        ("twist convergence", twist),
        ("Euler characteristics of clasp complexes", euler),
        ("homological calculus", homocalc),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(run) {
            Ok(Ok(note)) => println!("criterion {} PASS  {name}: {note}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: panicked", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
