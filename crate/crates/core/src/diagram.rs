//! Knot and link diagrams as 4-valent rotation systems.
//!
//! A diagram is a list of crossings, each holding the four incident
//! edge-ends in counterclockwise order starting at the incoming
//! under-edge (the usual PD convention). Edges are dense indices
//! `0..edge_count`, each occurring exactly twice across all crossing
//! slots. Crossing-free circles produced by untwisting moves are
//! tracked separately as `free_loops`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

pub type EdgeId = usize;

/// One crossing: edge ids counterclockwise from the incoming under-edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Crossing(pub [EdgeId; 4]);

impl Crossing {
    pub fn under_in(&self) -> EdgeId {
        self.0[0]
    }
    pub fn over_a(&self) -> EdgeId {
        self.0[1]
    }
    pub fn under_out(&self) -> EdgeId {
        self.0[2]
    }
    pub fn over_b(&self) -> EdgeId {
        self.0[3]
    }
}

/// An edge-end: crossing index plus slot position (0..4, ccw from under-in).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

impl Dart {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Dart { crossing, slot }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    edge_count: usize,
    free_loops: usize,
}

/// Partition of edges into Fox arcs: the two over-edges at each crossing
/// always belong to the same arc. Crossing-free circles get one arc each,
/// appended after the edge-supported arcs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcPartition {
    pub arc_of_edge: Vec<usize>,
    pub arc_count: usize,
    pub free_loop_arcs: usize,
}

impl ArcPartition {
    /// Arc index of the i-th crossing-free circle.
    pub fn free_loop_arc(&self, i: usize) -> usize {
        self.arc_count - self.free_loop_arcs + i
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl Diagram {
    /// Build a diagram from dense crossing data, validating the edge
    /// multiplicity and planarity invariants.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let mut max_edge = 0usize;
        for c in &crossings {
            for &e in &c.0 {
                max_edge = max_edge.max(e + 1);
            }
        }
        let edge_count = if crossings.is_empty() { 0 } else { max_edge };
        let d = Diagram {
            crossings,
            edge_count,
            free_loops,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = vec![0usize; self.edge_count];
        for c in &self.crossings {
            for &e in &c.0 {
                seen[e] += 1;
            }
        }
        for (e, &count) in seen.iter().enumerate() {
            if count != 2 {
                return Err(Error::EdgeMultiplicity {
                    label: (e + 1).to_string(),
                    count,
                });
            }
        }
        self.check_euler()
    }

    /// Per-component Euler check: every connected component of the
    /// 4-valent graph must satisfy V - E + F = 2 on its own sphere.
    fn check_euler(&self) -> Result<()> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(());
        }
        let ends = self.edge_ends();
        let mut uf = UnionFind::new(n);
        for pair in &ends {
            uf.union(pair[0].crossing, pair[1].crossing);
        }
        let faces = self.faces();
        let mut v = HashMap::new();
        let mut e = HashMap::new();
        let mut f = HashMap::new();
        for c in 0..n {
            *v.entry(uf.find(c)).or_insert(0i64) += 1;
        }
        for pair in &ends {
            *e.entry(uf.find(pair[0].crossing)).or_insert(0i64) += 1;
        }
        for face in &faces {
            *f.entry(uf.find(face[0].crossing)).or_insert(0i64) += 1;
        }
        for (&comp, &vc) in &v {
            let chi = vc - e.get(&comp).copied().unwrap_or(0) + f.get(&comp).copied().unwrap_or(0);
            if chi != 2 {
                return Err(Error::NotPlanar { chi });
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// The two ends of every edge, each end given as a dart.
    pub fn edge_ends(&self) -> Vec<[Dart; 2]> {
        let mut ends: Vec<Vec<Dart>> = vec![Vec::new(); self.edge_count];
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &e) in c.0.iter().enumerate() {
                ends[e].push(Dart::new(ci, si as u8));
            }
        }
        ends.into_iter().map(|v| [v[0], v[1]]).collect()
    }

    /// The dart at the other end of the edge behind `d`.
    pub fn mate(&self, ends: &[[Dart; 2]], d: Dart) -> Dart {
        let e = self.crossings[d.crossing].0[d.slot as usize];
        let [a, b] = ends[e];
        if a == d {
            b
        } else {
            a
        }
    }

    pub fn edge_at(&self, d: Dart) -> EdgeId {
        self.crossings[d.crossing].0[d.slot as usize]
    }

    /// Face cycles of the rotation system: orbits of "cross the edge,
    /// then turn counterclockwise". Deterministic order: each face starts
    /// at its smallest unvisited dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let ends = self.edge_ends();
        let mut visited = vec![[false; 4]; self.crossings.len()];
        let mut faces = Vec::new();
        for c in 0..self.crossings.len() {
            for s in 0..4u8 {
                if visited[c][s as usize] {
                    continue;
                }
                let start = Dart::new(c, s);
                let mut cycle = Vec::new();
                let mut d = start;
                loop {
                    visited[d.crossing][d.slot as usize] = true;
                    cycle.push(d);
                    let m = self.mate(&ends, d);
                    d = Dart::new(m.crossing, (m.slot + 1) % 4);
                    if d == start {
                        break;
                    }
                }
                faces.push(cycle);
            }
        }
        faces
    }

    /// Fox arcs: union of edges across the over-strand of every crossing.
    /// Arc indices are dense, ordered by smallest member edge.
    pub fn arcs(&self) -> ArcPartition {
        let mut uf = UnionFind::new(self.edge_count);
        for c in &self.crossings {
            uf.union(c.over_a(), c.over_b());
        }
        let mut arc_of_edge = vec![usize::MAX; self.edge_count];
        let mut next = 0usize;
        for e in 0..self.edge_count {
            let root = uf.find(e);
            if arc_of_edge[root] == usize::MAX {
                arc_of_edge[root] = next;
                next += 1;
            }
            arc_of_edge[e] = arc_of_edge[root];
        }
        ArcPartition {
            arc_of_edge,
            arc_count: next + self.free_loops,
            free_loop_arcs: self.free_loops,
        }
    }

    /// Arc of the over-strand at crossing `ci` (the two over-edges agree).
    pub fn over_arc(&self, arcs: &ArcPartition, ci: usize) -> usize {
        let c = &self.crossings[ci];
        debug_assert_eq!(
            arcs.arc_of_edge[c.over_a()],
            arcs.arc_of_edge[c.over_b()]
        );
        arcs.arc_of_edge[c.over_a()]
    }

    /// PD text: one `X a b c d` line per crossing (1-based labels), one
    /// `O` line per crossing-free circle.
    pub fn to_pd_string(&self) -> String {
        let mut s = String::new();
        for c in &self.crossings {
            let _ = writeln!(
                s,
                "X {} {} {} {}",
                c.0[0] + 1,
                c.0[1] + 1,
                c.0[2] + 1,
                c.0[3] + 1
            );
        }
        for _ in 0..self.free_loops {
            let _ = writeln!(s, "O");
        }
        s
    }
}

/// Parse PD notation: one crossing per line, `X a b c d`, slots listed
/// counterclockwise from the incoming under-edge. Edge labels may be any
/// positive integers; they are renumbered densely in order of first
/// appearance. `#` starts a comment, blank lines and `/` separators are
/// ignored, and a bare `O` adds a crossing-free circle.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut crossings = Vec::new();
    let mut free_loops = 0usize;
    let mut relabel: HashMap<u64, usize> = HashMap::new();
    let mut multiplicity: HashMap<u64, usize> = HashMap::new();

    for raw in text.split(['\n', '/']) {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        if head.eq_ignore_ascii_case("o") {
            if tokens.next().is_some() {
                return Err(Error::BadLine {
                    line: line.to_string(),
                    reason: "free-loop line takes no labels".into(),
                });
            }
            free_loops += 1;
            continue;
        }
        if !head.eq_ignore_ascii_case("x") {
            return Err(Error::BadLine {
                line: line.to_string(),
                reason: "expected a line starting with X".into(),
            });
        }
        let mut slots = [0usize; 4];
        for slot in &mut slots {
            let tok = tokens.next().ok_or_else(|| Error::BadLine {
                line: line.to_string(),
                reason: "expected four edge labels".into(),
            })?;
            let label: u64 = tok.parse().map_err(|_| Error::BadLine {
                line: line.to_string(),
                reason: format!("bad edge label {tok:?}"),
            })?;
            if label == 0 {
                return Err(Error::BadLine {
                    line: line.to_string(),
                    reason: "edge labels are positive".into(),
                });
            }
            let next_id = relabel.len();
            let id = *relabel.entry(label).or_insert(next_id);
            *multiplicity.entry(label).or_insert(0) += 1;
            *slot = id;
        }
        if tokens.next().is_some() {
            return Err(Error::BadLine {
                line: line.to_string(),
                reason: "expected exactly four edge labels".into(),
            });
        }
        crossings.push(Crossing(slots));
    }

    if crossings.is_empty() && free_loops == 0 {
        return Err(Error::EmptyInput);
    }
    for (label, count) in &multiplicity {
        if *count != 2 {
            return Err(Error::EdgeMultiplicity {
                label: label.to_string(),
                count: *count,
            });
        }
    }
    Diagram::new(crossings, free_loops)
}
