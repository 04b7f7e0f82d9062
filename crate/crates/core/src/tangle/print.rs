//! Decomposition of an arbitrary web into crossingless slices.

use crate::web::{Builder, Sign, Web, Word};

use super::diagram::{Slice, TangleDiagram};

/// A slice sequence whose composite is exactly `web`.
pub fn web_to_diagram(web: &Web) -> TangleDiagram {
    let mut slices = Vec::new();
    for _ in 0..web.loops() {
        slices.push(Slice::Cup(Sign::Plus, 0));
        slices.push(Slice::Cap(0));
    }
    let mut rest = web.without_loops();
    while let Some((slice, next)) = peel(&rest) {
        slices.push(slice);
        rest = next;
    }
    debug_assert!(rest.is_identity(), "unpeeled remainder {rest}");
    TangleDiagram::new(web.domain().clone(), slices)
}

fn replace_domain(w: &Web, at: usize, remove: usize, insert: &[Sign]) -> Word {
    let mut v = w.domain().signs().to_vec();
    v.splice(at..at + remove, insert.iter().copied());
    Word::new(v)
}

/// Writes `rest = slice • next` for one elementary slice, if any remains.
fn peel(r: &Web) -> Option<(Slice, Web)> {
    let n = r.domain().len();
    let b = r.boundary_len();
    let dom = r.domain().signs();

    for i in 0..n.saturating_sub(1) {
        if r.twin(i) == i + 1 {
            let mut bl = Builder::from_web(r);
            bl.kill_dart(i);
            bl.kill_dart(i + 1);
            bl.outer = (0..b).filter(|&d| d != i && d != i + 1).collect();
            bl.domain = replace_domain(r, i, 2, &[]);
            return Some((Slice::Cap(i), bl.finish()));
        }
    }

    for i in 0..n.saturating_sub(1) {
        let (a, c) = (r.twin(i), r.twin(i + 1));
        let (Some(u), Some(v)) = (r.vertex_of(a), r.vertex_of(c)) else {
            continue;
        };
        if u != v || r.sigma(c) != a {
            continue;
        }
        let third = r.sigma(a);
        let mut bl = Builder::from_web(r);
        let x = bl.add_boundary_dart();
        bl.link(x, r.twin(third));
        bl.remove_vertex(v);
        bl.kill_dart(i);
        bl.kill_dart(i + 1);
        bl.outer = (0..i).chain([x]).chain(i + 2..b).collect();
        bl.domain = replace_domain(r, i, 2, &[dom[i].flip()]);
        return Some((Slice::YMerge(i), bl.finish()));
    }

    for i in 0..n {
        let a = r.twin(i);
        let Some(v) = r.vertex_of(a) else {
            continue;
        };
        let s1 = r.sigma(a);
        let s2 = r.sigma(s1);
        let mut bl = Builder::from_web(r);
        let x = bl.add_boundary_dart();
        let y = bl.add_boundary_dart();
        bl.link(x, r.twin(s1));
        bl.link(y, r.twin(s2));
        bl.remove_vertex(v);
        bl.kill_dart(i);
        bl.outer = (0..i).chain([x, y]).chain(i + 1..b).collect();
        let s = dom[i].flip();
        bl.domain = replace_domain(r, i, 1, &[s, s]);
        return Some((Slice::YSplit(i), bl.finish()));
    }

    let mut boundary_edge = None;
    if b > 0 {
        for g in 0..=n {
            let orbit = r
                .face_orbits()
                .into_iter()
                .find(|o| o.contains(&(g % b)))
                .unwrap();
            for &d in &orbit {
                let t = r.twin(d);
                if d < n || t < n {
                    continue;
                }
                if r.vertex_of(d).is_some() || r.vertex_of(t).is_some() {
                    return pull(r, g, d);
                }
                boundary_edge.get_or_insert((g, d));
            }
        }
    }
    if let Some((g, d)) = boundary_edge {
        return pull(r, g, d);
    }
    if r.num_vertices() > 0 {
        // only closed components remain among the vertices
        let closed = (0..r.num_vertices())
            .rev()
            .flat_map(|v| r.vertex_darts(v))
            .next()
            .unwrap();
        return pull(r, 0, closed);
    }
    None
}

/// Cuts the edge at dart `d` and brings both ends to the left boundary at
/// gap `g` as a cup.
fn pull(r: &Web, g: usize, d: usize) -> Option<(Slice, Web)> {
    let b = r.boundary_len();
    let t = r.twin(d);
    for (upper, lower) in [(d, t), (t, d)] {
        let mut bl = Builder::from_web(r);
        let x = bl.add_boundary_dart();
        let y = bl.add_boundary_dart();
        bl.link(x, upper);
        bl.link(y, lower);
        bl.outer = (0..g).chain([x, y]).chain(g..b).collect();
        let s = if r.is_outgoing(upper) {
            Sign::Minus
        } else {
            Sign::Plus
        };
        bl.domain = replace_domain(r, g, 0, &[s, s.flip()]);
        let next = bl.finish();
        if next.validate().is_ok() {
            return Some((Slice::Cup(s, g), next));
        }
    }
    unreachable!("no planar way to pull edge {d} into gap {g}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(w: &Web) {
        let d = web_to_diagram(w);
        let text = d.to_string();
        let back = TangleDiagram::parse(&text).unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(&back.to_web().unwrap(), w, "via\n{text}");
    }

    #[test]
    fn generators_round_trip() {
        for a in [Sign::Plus, Sign::Minus] {
            round_trip(&Web::cup(a));
            round_trip(&Web::cap(a));
            round_trip(&Web::ymerge(a));
            round_trip(&Web::ysplit(a));
        }
        round_trip(&Web::circle());
        round_trip(&Web::empty());
    }

    #[test]
    fn composite_round_trip() {
        let h = Web::ymerge(Sign::Plus).compose(&Web::ysplit(Sign::Minus)).unwrap();
        round_trip(&h);
        let hd = h.dual();
        round_trip(&hd);
        let t = h.tensor(&Web::cap(Sign::Minus)).tensor(&Web::cup(Sign::Plus));
        round_trip(&t);
        round_trip(&t.dual());
        // right-to-right edge enclosing a vertex pair
        let inner = Web::cup(Sign::Plus)
            .compose(&Web::ysplit(Sign::Plus).tensor(&Web::ysplit(Sign::Minus)))
            .unwrap();
        round_trip(&inner);
        let wrapped = Web::cup(Sign::Minus)
            .compose(&Web::identity(&"-".parse().unwrap()).tensor(&inner).tensor(&Web::identity(&"+".parse().unwrap())))
            .unwrap();
        round_trip(&wrapped);
        // closed theta next to a strand
        let theta = Web::cup(Sign::Plus)
            .compose(&Web::ysplit(Sign::Plus).tensor(&Web::identity(&"-".parse().unwrap())))
            .unwrap()
            .compose(&Web::ymerge(Sign::Minus).tensor(&Web::identity(&"-".parse().unwrap())))
            .unwrap()
            .compose(&Web::cap(Sign::Plus))
            .unwrap();
        round_trip(&theta.tensor(&Web::identity(&"+".parse().unwrap())));
    }
}
