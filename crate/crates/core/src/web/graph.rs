use std::fmt;

use thiserror::Error;

use super::word::{Sign, Word};

/// Trivalent vertex type: all three edges outgoing or all incoming.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Source,
    Sink,
}

impl VertexKind {
    fn flip(self) -> Self {
        match self {
            VertexKind::Source => VertexKind::Sink,
            VertexKind::Sink => VertexKind::Source,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("word mismatch: {left} vs {right}")]
    WordMismatch { left: Word, right: Word },
    #[error("dart {0} has an invalid partner")]
    BadTwin(usize),
    #[error("edge at dart {0} does not join an outgoing end to an incoming end")]
    Orientation(usize),
    #[error("rotation system is not planar (component Euler characteristic {0})")]
    NotPlanar(i64),
    #[error("malformed web encoding: {0}")]
    Encoding(String),
    #[error("expected a web with empty boundary")]
    NotClosed,
}

/// A web stored as a canonically numbered combinatorial map.
///
/// Darts `0..b` are the boundary points in the cyclic order
/// `L0, L1, .., L(n-1), R(m-1), .., R0` (left side downwards, then right side
/// upwards), where `L` is the domain and `R` the codomain, index 0 on top.
/// Vertex `v` owns darts `b + 3v .. b + 3v + 3` in clockwise order. Vertices
/// reachable from the boundary come first in traversal order, followed by
/// closed components sorted by their own minimal encodings, so two webs are
/// isotopic exactly when they compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Web {
    domain: Word,
    codomain: Word,
    kinds: Vec<VertexKind>,
    twin: Vec<u32>,
    loops: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Owner {
    Boundary,
    Vertex(usize, usize),
    Dead,
}

/// Mutable map used while gluing and rewriting; `finish` canonicalizes.
#[derive(Clone)]
pub(crate) struct Builder {
    pub(crate) domain: Word,
    pub(crate) codomain: Word,
    twin: Vec<usize>,
    owner: Vec<Owner>,
    verts: Vec<Option<(VertexKind, [usize; 3])>>,
    pub(crate) outer: Vec<usize>,
    pub(crate) loops: u32,
}

const NONE: usize = usize::MAX;

impl Builder {
    /// Empty map with `|domain| + |codomain|` unlinked boundary darts.
    pub(crate) fn new(domain: Word, codomain: Word) -> Self {
        let b = domain.len() + codomain.len();
        Builder {
            domain,
            codomain,
            twin: vec![NONE; b],
            owner: vec![Owner::Boundary; b],
            verts: Vec::new(),
            outer: (0..b).collect(),
            loops: 0,
        }
    }

    pub(crate) fn from_web(w: &Web) -> Self {
        let b = w.boundary_len();
        let mut owner = vec![Owner::Boundary; b];
        let mut verts = Vec::with_capacity(w.kinds.len());
        for (v, &k) in w.kinds.iter().enumerate() {
            let base = b + 3 * v;
            owner.extend((0..3).map(|s| Owner::Vertex(v, s)));
            verts.push(Some((k, [base, base + 1, base + 2])));
        }
        Builder {
            domain: w.domain.clone(),
            codomain: w.codomain.clone(),
            twin: w.twin.iter().map(|&t| t as usize).collect(),
            owner,
            verts,
            outer: (0..b).collect(),
            loops: w.loops,
        }
    }

    pub(crate) fn add_vertex(&mut self, kind: VertexKind) -> [usize; 3] {
        let v = self.verts.len();
        let base = self.twin.len();
        let darts = [base, base + 1, base + 2];
        for s in 0..3 {
            self.twin.push(NONE);
            self.owner.push(Owner::Vertex(v, s));
        }
        self.verts.push(Some((kind, darts)));
        darts
    }

    pub(crate) fn add_boundary_dart(&mut self) -> usize {
        self.twin.push(NONE);
        self.owner.push(Owner::Boundary);
        self.twin.len() - 1
    }

    pub(crate) fn kill_dart(&mut self, d: usize) {
        self.owner[d] = Owner::Dead;
    }

    pub(crate) fn link(&mut self, a: usize, b: usize) {
        self.twin[a] = b;
        self.twin[b] = a;
    }

    /// Appends a copy of `w`; returns the dart offset. Its boundary darts
    /// become stubs that the caller must splice or list in `outer`.
    pub(crate) fn append(&mut self, w: &Web) -> usize {
        let off = self.twin.len();
        let voff = self.verts.len();
        let b = w.boundary_len();
        self.twin.extend(w.twin.iter().map(|&t| t as usize + off));
        self.owner.extend(std::iter::repeat_n(Owner::Boundary, b));
        for (v, &k) in w.kinds.iter().enumerate() {
            let base = off + b + 3 * v;
            self.owner.extend((0..3).map(|s| Owner::Vertex(voff + v, s)));
            self.verts.push(Some((k, [base, base + 1, base + 2])));
        }
        self.loops += w.loops;
        off
    }

    /// Joins the far ends of the stubs `d1` and `d2` and discards both.
    pub(crate) fn splice(&mut self, d1: usize, d2: usize) {
        let t1 = self.twin[d1];
        let t2 = self.twin[d2];
        if t1 == d2 {
            self.loops += 1;
        } else {
            self.link(t1, t2);
        }
        self.owner[d1] = Owner::Dead;
        self.owner[d2] = Owner::Dead;
    }

    pub(crate) fn remove_vertex(&mut self, v: usize) {
        if let Some((_, darts)) = self.verts[v].take() {
            for d in darts {
                self.owner[d] = Owner::Dead;
            }
        }
    }

    pub(crate) fn reverse_orientation(&mut self) {
        for (kind, darts) in self.verts.iter_mut().flatten() {
            *kind = kind.flip();
            darts.swap(1, 2);
        }
        for (v, slot) in self.verts.iter().enumerate() {
            if let Some((_, darts)) = slot {
                for (s, &d) in darts.iter().enumerate() {
                    self.owner[d] = Owner::Vertex(v, s);
                }
            }
        }
    }

    pub(crate) fn finish(self) -> Web {
        let nd = self.twin.len();
        let b = self.outer.len();
        debug_assert_eq!(b, self.domain.len() + self.codomain.len());
        let mut outer_pos = vec![NONE; nd];
        for (k, &d) in self.outer.iter().enumerate() {
            outer_pos[d] = k;
        }
        let sigma = |d: usize| -> usize {
            match self.owner[d] {
                Owner::Boundary => self.outer[(outer_pos[d] + 1) % b],
                Owner::Vertex(v, s) => self.verts[v].as_ref().unwrap().1[(s + 1) % 3],
                Owner::Dead => panic!("dead dart {d} reached"),
            }
        };

        let mut seen = vec![false; self.verts.len()];
        let mut kinds = Vec::new();
        let mut order = self.outer.clone();
        let mut i = 0;
        while i < order.len() {
            let t = self.twin[order[i]];
            if let Owner::Vertex(v, _) = self.owner[t] {
                if !seen[v] {
                    seen[v] = true;
                    kinds.push(self.verts[v].unwrap().0);
                    order.extend([t, sigma(t), sigma(sigma(t))]);
                }
            } else {
                debug_assert_eq!(self.owner[t], Owner::Boundary, "dangling dart");
            }
            i += 1;
        }
        let mut new_id = vec![NONE; nd];
        for (i, &d) in order.iter().enumerate() {
            new_id[d] = i;
        }
        let mut twin: Vec<u32> = order.iter().map(|&d| new_id[self.twin[d]] as u32).collect();

        let mut comps: Vec<(Vec<VertexKind>, Vec<u32>)> = Vec::new();
        for v in 0..self.verts.len() {
            if seen[v] || self.verts[v].is_none() {
                continue;
            }
            let mut members = vec![v];
            seen[v] = true;
            let mut j = 0;
            while j < members.len() {
                for d in self.verts[members[j]].unwrap().1 {
                    if let Owner::Vertex(u, _) = self.owner[self.twin[d]] {
                        if !seen[u] {
                            seen[u] = true;
                            members.push(u);
                        }
                    }
                }
                j += 1;
            }
            let best = members
                .iter()
                .flat_map(|&u| self.verts[u].unwrap().1)
                .map(|root| self.closed_code(root, &sigma))
                .min()
                .unwrap();
            comps.push(best);
        }
        comps.sort();
        for (ck, ct) in comps {
            let off = twin.len() as u32;
            kinds.extend(ck);
            twin.extend(ct.iter().map(|t| t + off));
        }
        Web {
            domain: self.domain,
            codomain: self.codomain,
            kinds,
            twin,
            loops: self.loops,
        }
    }

    fn closed_code(
        &self,
        root: usize,
        sigma: &impl Fn(usize) -> usize,
    ) -> (Vec<VertexKind>, Vec<u32>) {
        let mut order = vec![root, sigma(root), sigma(sigma(root))];
        let Owner::Vertex(v0, _) = self.owner[root] else {
            unreachable!()
        };
        let mut kinds = vec![self.verts[v0].unwrap().0];
        let mut visited = vec![v0];
        let mut i = 0;
        while i < order.len() {
            let t = self.twin[order[i]];
            if let Owner::Vertex(v, _) = self.owner[t] {
                if !visited.contains(&v) {
                    visited.push(v);
                    kinds.push(self.verts[v].unwrap().0);
                    order.extend([t, sigma(t), sigma(sigma(t))]);
                }
            }
            i += 1;
        }
        let twins = order
            .iter()
            .map(|&d| order.iter().position(|&x| x == self.twin[d]).unwrap() as u32)
            .collect();
        (kinds, twins)
    }
}

/// An internal face of a web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Face {
    /// A vertexless closed loop.
    Circle,
    /// Boundary darts of a face bounded by edges, in traversal order.
    Polygon(Vec<usize>),
}

impl Face {
    pub fn size(&self) -> usize {
        match self {
            Face::Circle => 0,
            Face::Polygon(d) => d.len(),
        }
    }
}

impl Web {
    pub fn domain(&self) -> &Word {
        &self.domain
    }

    pub fn codomain(&self) -> &Word {
        &self.codomain
    }

    pub fn boundary_len(&self) -> usize {
        self.domain.len() + self.codomain.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn vertex_kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d] as usize
    }

    /// Next dart clockwise around the same node.
    pub fn sigma(&self, d: usize) -> usize {
        let b = self.boundary_len();
        if d < b {
            (d + 1) % b
        } else {
            let base = d - (d - b) % 3;
            base + (d - base + 1) % 3
        }
    }

    /// Vertex owning a dart, or `None` for boundary darts.
    pub fn vertex_of(&self, d: usize) -> Option<usize> {
        let b = self.boundary_len();
        (d >= b).then(|| (d - b) / 3)
    }

    pub fn vertex_darts(&self, v: usize) -> [usize; 3] {
        let base = self.boundary_len() + 3 * v;
        [base, base + 1, base + 2]
    }

    /// Boundary dart of domain point `i`.
    pub fn left_dart(&self, i: usize) -> usize {
        i
    }

    /// Boundary dart of codomain point `j`.
    pub fn right_dart(&self, j: usize) -> usize {
        self.boundary_len() - 1 - j
    }

    /// Whether the edge at `d` leaves the node owning `d`.
    pub fn is_outgoing(&self, d: usize) -> bool {
        let n = self.domain.len();
        let b = self.boundary_len();
        if d < n {
            self.domain[d] == Sign::Plus
        } else if d < b {
            self.codomain[b - 1 - d] == Sign::Minus
        } else {
            self.kinds[(d - b) / 3] == VertexKind::Source
        }
    }

    pub fn identity(w: &Word) -> Web {
        let n = w.len();
        let mut bl = Builder::new(w.clone(), w.clone());
        for i in 0..n {
            bl.link(i, 2 * n - 1 - i);
        }
        bl.finish()
    }

    pub fn empty() -> Web {
        Web::identity(&Word::empty())
    }

    /// The cup `() -> (a, -a)`.
    pub fn cup(a: Sign) -> Web {
        let mut bl = Builder::new(Word::empty(), Word::new(vec![a, a.flip()]));
        bl.link(0, 1);
        bl.finish()
    }

    /// The cap `(a, -a) -> ()`.
    pub fn cap(a: Sign) -> Web {
        let mut bl = Builder::new(Word::new(vec![a, a.flip()]), Word::empty());
        bl.link(0, 1);
        bl.finish()
    }

    /// The trivalent merge `(a, a) -> (-a)`.
    pub fn ymerge(a: Sign) -> Web {
        let mut bl = Builder::new(Word::new(vec![a, a]), Word::new(vec![a.flip()]));
        let kind = if a == Sign::Plus {
            VertexKind::Sink
        } else {
            VertexKind::Source
        };
        let v = bl.add_vertex(kind);
        bl.link(v[0], 2);
        bl.link(v[1], 1);
        bl.link(v[2], 0);
        bl.finish()
    }

    /// The trivalent split `(a) -> (-a, -a)`.
    pub fn ysplit(a: Sign) -> Web {
        let mut bl = Builder::new(Word::new(vec![a]), Word::new(vec![a.flip(), a.flip()]));
        let kind = if a == Sign::Plus {
            VertexKind::Sink
        } else {
            VertexKind::Source
        };
        let v = bl.add_vertex(kind);
        bl.link(v[0], 0);
        bl.link(v[1], 2);
        bl.link(v[2], 1);
        bl.finish()
    }

    /// A single vertexless loop.
    pub fn circle() -> Web {
        let mut w = Web::empty();
        w.loops = 1;
        w
    }

    /// Gluing: `self` first, then `other`.
    pub fn compose(&self, other: &Web) -> Result<Web, WebError> {
        if self.codomain != other.domain {
            return Err(WebError::WordMismatch {
                left: self.codomain.clone(),
                right: other.domain.clone(),
            });
        }
        let na = self.domain.len();
        let k = self.codomain.len();
        let mut bl = Builder::from_web(self);
        let off = bl.append(other);
        for i in 0..k {
            bl.splice(self.right_dart(i), off + i);
        }
        bl.outer = (0..na)
            .chain(off + k..off + other.boundary_len())
            .collect();
        bl.codomain = other.codomain.clone();
        Ok(bl.finish())
    }

    /// `self` stacked above `other`.
    pub fn tensor(&self, other: &Web) -> Web {
        let na = self.domain.len();
        let mut bl = Builder::from_web(self);
        let off = bl.append(other);
        let mut outer: Vec<usize> = (0..na).collect();
        outer.extend(off..off + other.boundary_len());
        outer.extend(na..self.boundary_len());
        bl.outer = outer;
        bl.domain = self.domain.concat(&other.domain);
        bl.codomain = self.codomain.concat(&other.codomain);
        bl.finish()
    }

    /// Rotation by a half turn.
    pub fn dual(&self) -> Web {
        let n = self.domain.len();
        let b = self.boundary_len();
        let mut bl = Builder::from_web(self);
        bl.outer = (0..b).map(|k| (k + n) % b).collect();
        bl.domain = self.codomain.dual();
        bl.codomain = self.domain.dual();
        bl.finish()
    }

    /// Mirror image in a vertical line with all orientations reversed,
    /// giving a web from the codomain back to the domain.
    pub fn reflect(&self) -> Web {
        let b = self.boundary_len();
        let mut bl = Builder::from_web(self);
        bl.reverse_orientation();
        bl.outer = (0..b).rev().collect();
        bl.domain = self.codomain.clone();
        bl.codomain = self.domain.clone();
        bl.finish()
    }

    pub fn without_loops(&self) -> Web {
        let mut w = self.clone();
        w.loops = 0;
        w
    }

    pub fn with_loops(&self, loops: u32) -> Web {
        let mut w = self.clone();
        w.loops = loops;
        w
    }

    /// Face orbits `d -> sigma(twin(d))`, each listed from its smallest dart.
    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        let nd = self.num_darts();
        let mut seen = vec![false; nd];
        let mut out = Vec::new();
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.sigma(self.twin(d));
            }
            out.push(orbit);
        }
        out
    }

    /// Internal faces: polygons not touching the boundary, and circles.
    pub fn faces(&self) -> Vec<Face> {
        let b = self.boundary_len();
        let mut faces: Vec<Face> = self
            .face_orbits()
            .into_iter()
            .filter(|o| o.iter().all(|&d| d >= b))
            .map(Face::Polygon)
            .collect();
        faces.extend((0..self.loops).map(|_| Face::Circle));
        faces
    }

    /// No circles and no internal faces with at most four sides.
    pub fn is_non_elliptic(&self) -> bool {
        self.loops == 0 && self.faces().iter().all(|f| f.size() > 4)
    }

    /// Whether some vertex is not connected to the boundary.
    pub fn has_closed_component(&self) -> bool {
        let b = self.boundary_len();
        let mut seen = vec![false; self.kinds.len()];
        let mut stack: Vec<usize> = (0..b).collect();
        let mut count = 0;
        while let Some(d) = stack.pop() {
            if let Some(v) = self.vertex_of(self.twin(d)) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.extend(self.vertex_darts(v));
                }
            }
        }
        count < self.kinds.len()
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && *self == Web::identity(&self.domain)
    }

    /// Checks the map invariants: twin involution, edge orientation and
    /// genus zero for every connected component.
    pub fn validate(&self) -> Result<(), WebError> {
        let nd = self.num_darts();
        let b = self.boundary_len();
        if nd != b + 3 * self.kinds.len() {
            return Err(WebError::Encoding("dart count mismatch".into()));
        }
        for d in 0..nd {
            let t = self.twin[d] as usize;
            if t >= nd || t == d || self.twin[t] as usize != d {
                return Err(WebError::BadTwin(d));
            }
            if self.is_outgoing(d) == self.is_outgoing(t) {
                return Err(WebError::Orientation(d));
            }
        }
        let nodes = self.kinds.len() + usize::from(b > 0);
        let node = |d: usize| if d < b { self.kinds.len() } else { (d - b) / 3 };
        let mut parent: Vec<usize> = (0..nodes).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for d in 0..nd {
            let (a, c) = (find(&mut parent, node(d)), find(&mut parent, node(self.twin(d))));
            parent[a] = c;
        }
        let mut euler = vec![0i64; nodes];
        for v in 0..nodes {
            let r = find(&mut parent, v);
            euler[r] += 1;
        }
        for d in 0..nd {
            let r = find(&mut parent, node(d));
            if d < self.twin(d) {
                euler[r] -= 1;
            }
        }
        for orbit in self.face_orbits() {
            let r = find(&mut parent, node(orbit[0]));
            euler[r] += 1;
        }
        for v in 0..nodes {
            if find(&mut parent, v) == v && euler[v] != 2 {
                return Err(WebError::NotPlanar(euler[v]));
            }
        }
        Ok(())
    }

    /// Builds and canonicalizes a web from raw map data.
    pub fn from_parts(
        domain: Word,
        codomain: Word,
        kinds: Vec<VertexKind>,
        twin: Vec<u32>,
        loops: u32,
    ) -> Result<Web, WebError> {
        let raw = Web {
            domain,
            codomain,
            kinds,
            twin,
            loops,
        };
        raw.validate()?;
        Ok(Builder::from_web(&raw).finish())
    }

    /// Stable text key: `domain|codomain|kinds|twins|loops`.
    pub fn code(&self) -> String {
        let kinds: String = self
            .kinds
            .iter()
            .map(|k| match k {
                VertexKind::Source => 'o',
                VertexKind::Sink => 'i',
            })
            .collect();
        let twins: Vec<String> = self.twin.iter().map(|t| t.to_string()).collect();
        format!(
            "{}|{}|{}|{}|{}",
            self.domain,
            self.codomain,
            kinds,
            twins.join(","),
            self.loops
        )
    }

    pub fn from_code(s: &str) -> Result<Web, WebError> {
        let bad = |m: &str| WebError::Encoding(format!("{m} in {s:?}"));
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 5 {
            return Err(bad("expected five fields"));
        }
        let domain: Word = parts[0].parse().map_err(|_| bad("bad domain"))?;
        let codomain: Word = parts[1].parse().map_err(|_| bad("bad codomain"))?;
        let kinds = parts[2]
            .chars()
            .map(|c| match c {
                'o' => Ok(VertexKind::Source),
                'i' => Ok(VertexKind::Sink),
                _ => Err(bad("bad vertex kind")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let twin = if parts[3].is_empty() {
            Vec::new()
        } else {
            parts[3]
                .split(',')
                .map(|t| t.parse::<u32>().map_err(|_| bad("bad dart")))
                .collect::<Result<Vec<_>, _>>()?
        };
        let loops = parts[4].parse().map_err(|_| bad("bad loop count"))?;
        Web::from_parts(domain, codomain, kinds, twin, loops)
    }

    /// Removes a digon face (darts `d1, d2`), joining the outer legs.
    pub(crate) fn contract_digon(&self, face: &[usize]) -> Web {
        let (d1, d2) = (face[0], face[1]);
        let u = self.vertex_of(d1).unwrap();
        let v = self.vertex_of(d2).unwrap();
        let mut bl = Builder::from_web(self);
        bl.splice(self.sigma(d1), self.sigma(d2));
        bl.remove_vertex(u);
        bl.remove_vertex(v);
        bl.finish()
    }

    /// The two reconnections of a square face.
    pub(crate) fn resolve_square(&self, face: &[usize]) -> [Web; 2] {
        let legs: Vec<usize> = face.iter().map(|&d| self.sigma(d)).collect();
        let verts: Vec<usize> = face.iter().map(|&d| self.vertex_of(d).unwrap()).collect();
        let make = |pairs: [(usize, usize); 2]| {
            let mut bl = Builder::from_web(self);
            for (a, b) in pairs {
                bl.splice(legs[a], legs[b]);
            }
            for &v in &verts {
                bl.remove_vertex(v);
            }
            bl.finish()
        };
        [make([(0, 1), (2, 3)]), make([(1, 2), (3, 0)])]
    }
}

impl fmt::Debug for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Web({})", self.code())
    }
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}
