//! Vertex and edge indexing for complete graphs, simple graphs with bitset
//! adjacency, edge colorings of `K_n`, and the small patterns (`K3`, `K1,3`,
//! `P4`) whose copies are enumerated inside vertex subsets.
//!
//! Edges of `K_n` are numbered colexicographically: the pair `{u, v}` with
//! `u < v` has index `v(v-1)/2 + u`. The numbering does not depend on `n`, so
//! a coloring of `K_n` restricted to its first `m` vertices is a prefix.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// `C(n, 2)`.
#[inline]
pub const fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(n, r)` for the small `r` used by subset enumeration.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Index of the unordered pair `{u, v}` among the edges of `K_n`.
pub fn edge_index(u: Vertex, v: Vertex, n: usize) -> Result<usize> {
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidPair { u, v, n });
    }
    Ok(pair_index(u, v))
}

/// Unchecked [`edge_index`]; `u != v` is a caller obligation.
#[inline]
pub fn pair_index(u: Vertex, v: Vertex) -> usize {
    debug_assert_ne!(u, v);
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

/// Inverse of [`pair_index`]: the sorted endpoints of edge `e`.
pub fn edge_endpoints(e: usize) -> (Vertex, Vertex) {
    // hi is the largest integer with hi(hi-1)/2 <= e.
    let mut hi = ((((8 * e + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while hi * (hi - 1) / 2 > e {
        hi -= 1;
    }
    while (hi + 1) * hi / 2 <= e {
        hi += 1;
    }
    (e - hi * (hi - 1) / 2, hi)
}

/// A sorted vertex subset of size at most four.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    len: u8,
    verts: [Vertex; 4],
}

impl Subset {
    pub fn new(verts: &[Vertex]) -> Result<Self> {
        if verts.is_empty() || verts.len() > 4 {
            return Err(Error::invalid(format!(
                "subset size {} not in 1..=4",
                verts.len()
            )));
        }
        let mut sorted = [0; 4];
        sorted[..verts.len()].copy_from_slice(verts);
        sorted[..verts.len()].sort_unstable();
        if sorted[..verts.len()].windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated vertex in {verts:?}")));
        }
        Ok(Subset {
            len: verts.len() as u8,
            verts: sorted,
        })
    }

    #[inline]
    pub fn as_slice(&self) -> &[Vertex] {
        &self.verts[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Global edge indices of the subset's edges, in local colex order
    /// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3)`.
    pub fn edges(&self) -> Vec<usize> {
        let s = self.as_slice();
        let mut out = Vec::with_capacity(edge_count(s.len()));
        for j in 1..s.len() {
            for i in 0..j {
                out.push(pair_index(s[i], s[j]));
            }
        }
        out
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_slice().fmt(f)
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_slice().serialize(s)
    }
}

/// Lexicographic enumeration of sorted `r`-subsets of `0..n`.
#[derive(Clone, Debug)]
pub struct Subsets {
    n: usize,
    r: usize,
    current: [Vertex; 4],
    /// Position below which entries stay fixed.
    pinned: usize,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let out = Subset {
            len: self.r as u8,
            verts: self.current,
        };
        let (n, r) = (self.n, self.r);
        let mut i = r;
        loop {
            if i == self.pinned {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < n - r + i {
                self.current[i] += 1;
                for j in i + 1..r {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All sorted `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Result<Subsets> {
    if !(1..=4).contains(&r) {
        return Err(Error::invalid(format!("subset size {r} not in 1..=4")));
    }
    if n < r {
        return Err(Error::invalid(format!("n = {n} is smaller than r = {r}")));
    }
    let mut current = [0; 4];
    for (i, c) in current.iter_mut().enumerate().take(r) {
        *c = i;
    }
    Ok(Subsets {
        n,
        r,
        current,
        pinned: 0,
        done: false,
    })
}

/// The `r`-subsets whose smallest vertex is `first`, in lexicographic order.
/// Concatenating these for `first = 0, 1, ..` reproduces [`subsets`].
pub fn subsets_starting_at(n: usize, r: usize, first: Vertex) -> Subsets {
    assert!((1..=4).contains(&r));
    let mut current = [0; 4];
    for (i, c) in current.iter_mut().enumerate().take(r) {
        *c = first + i;
    }
    Subsets {
        n,
        r,
        current,
        pinned: 1,
        done: first + r > n,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    K3,
    K13,
    P4,
}

impl PatternKind {
    pub const ALL: [PatternKind; 3] = [PatternKind::K3, PatternKind::K13, PatternKind::P4];

    pub fn vertex_count(self) -> usize {
        match self {
            PatternKind::K3 => 3,
            PatternKind::K13 | PatternKind::P4 => 4,
        }
    }

    pub fn edge_count(self) -> usize {
        3
    }

    /// Copies inside a sorted subset, as triples of positions into the
    /// subset's local edge list (see [`Subset::edges`]).
    pub fn local_copies(self) -> &'static [[u8; 3]] {
        match self {
            PatternKind::K3 => &[[0, 1, 2]],
            PatternKind::K13 => k13_local(),
            PatternKind::P4 => p4_local(),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::K3 => "K3",
            PatternKind::K13 => "K13",
            PatternKind::P4 => "P4",
        })
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace([',', '_'], "").as_str() {
            "K3" | "TRIANGLE" => Ok(PatternKind::K3),
            "K13" | "STAR" | "CLAW" => Ok(PatternKind::K13),
            "P4" | "PATH" => Ok(PatternKind::P4),
            _ => Err(Error::invalid(format!("unknown pattern {s:?}"))),
        }
    }
}

/// Local colex position of the pair `{i, j}` of a 4-vertex subset.
const fn local_pair(i: usize, j: usize) -> u8 {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    (hi * (hi - 1) / 2 + lo) as u8
}

fn k13_local() -> &'static [[u8; 3]] {
    static CELL: OnceLock<Vec<[u8; 3]>> = OnceLock::new();
    CELL.get_or_init(|| {
        (0..4)
            .map(|c| {
                let mut leaves = (0..4).filter(|&x| x != c);
                let mut edge = || local_pair(c, leaves.next().unwrap());
                [edge(), edge(), edge()]
            })
            .collect()
    })
}

fn p4_local() -> &'static [[u8; 3]] {
    static CELL: OnceLock<Vec<[u8; 3]>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::with_capacity(12);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = [a, b, c, d];
                        let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                        // each undirected path once: its two orientations
                        // differ in which endpoint is smaller
                        if distinct && a < d {
                            out.push([local_pair(a, b), local_pair(b, c), local_pair(c, d)]);
                        }
                    }
                }
            }
        }
        out
    })
}

/// One labeled copy of a pattern, as three global edge indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternCopy {
    pub edges: [usize; 3],
}

/// Every copy of `kind` on the vertex set `subset`, in a fixed order derived
/// from lexicographic vertex orderings.
pub fn pattern_copies(kind: PatternKind, subset: &[Vertex]) -> Result<Vec<PatternCopy>> {
    if subset.len() != kind.vertex_count() {
        return Err(Error::invalid(format!(
            "{kind} needs {} vertices, got {}",
            kind.vertex_count(),
            subset.len()
        )));
    }
    let edges = Subset::new(subset)?.edges();
    Ok(kind
        .local_copies()
        .iter()
        .map(|t| PatternCopy {
            edges: t.map(|i| edges[i as usize]),
        })
        .collect())
}

/// Undirected simple graph on `0..n` with one adjacency bitset per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Bitset>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Bitset::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.adj[v] = Bitset::full(n);
            g.adj[v].remove(v);
        }
        g
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                g.add_edge(i, j).expect("cycle edge in range");
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph from an adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidPair { u, v, n });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &Bitset {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as sorted pairs in colex order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for v in 0..self.n() {
            for u in self.adj[v].iter().take_while(|&u| u < v) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn induced_subgraph(&self, verts: &[Vertex]) -> SimpleGraph {
        SimpleGraph::from_fn(verts.len(), |i, j| self.has_edge(verts[i], verts[j]))
    }

    pub fn complement(&self) -> SimpleGraph {
        SimpleGraph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = Bitset::new(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }

    /// First triangle `(a, b, c)` with `a < b < c`, if any.
    pub fn find_triangle(&self) -> Option<(Vertex, Vertex, Vertex)> {
        for (a, b) in self.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))) {
            let mut common = self.adj[a].clone();
            common.intersect_with(&self.adj[b]);
            if let Some(c) = common.iter().find(|&c| c > b) {
                return Some((a, b, c));
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

pub type Color = u16;

/// A `k`-coloring of the edges of `K_n`, indexed by colex edge index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(n: usize, k: usize, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != edge_count(n) {
            return Err(Error::invalid(format!(
                "K_{n} has {} edges but {} colors were given",
                edge_count(n),
                colors.len()
            )));
        }
        if k > Color::MAX as usize + 1 {
            return Err(Error::invalid(format!("palette size {k} too large")));
        }
        if let Some(pos) = colors.iter().position(|&c| c as usize >= k) {
            let (u, v) = edge_endpoints(pos);
            return Err(Error::invalid(format!(
                "edge {{{u}, {v}}} has color {} outside palette of size {k}",
                colors[pos]
            )));
        }
        Ok(EdgeColoring { n, k, colors })
    }

    /// Colors edge `{u, v}` (called with `u < v`) by `color(u, v)`.
    pub fn from_fn(
        n: usize,
        k: usize,
        mut color: impl FnMut(Vertex, Vertex) -> Color,
    ) -> Result<Self> {
        let mut colors = Vec::with_capacity(edge_count(n));
        for v in 0..n {
            for u in 0..v {
                colors.push(color(u, v));
            }
        }
        Self::new(n, k, colors)
    }

    /// A single-color coloring of `K_n`.
    pub fn constant(n: usize) -> Self {
        EdgeColoring {
            n,
            k: 1,
            colors: vec![0; edge_count(n)],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn color(&self, u: Vertex, v: Vertex) -> Color {
        self.colors[pair_index(u, v)]
    }

    #[inline]
    pub fn color_at(&self, e: usize) -> Color {
        self.colors[e]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of edges in each color class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Palette entries that color no edge. Allowed, but worth reporting.
    pub fn unused_colors(&self) -> Vec<Color> {
        self.class_sizes()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == 0)
            .map(|(c, _)| c as Color)
            .collect()
    }

    /// The spanning subgraph formed by color class `c`.
    pub fn color_class(&self, c: Color) -> SimpleGraph {
        SimpleGraph::from_fn(self.n, |u, v| self.color(u, v) == c)
    }

    /// One adjacency graph per color class.
    pub fn color_classes(&self) -> Vec<SimpleGraph> {
        let mut classes = vec![SimpleGraph::empty(self.n); self.k];
        for (e, &c) in self.colors.iter().enumerate() {
            let (u, v) = edge_endpoints(e);
            classes[c as usize]
                .add_edge(u, v)
                .expect("endpoints in range");
        }
        classes
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(n={}, k={}, {:?})", self.n, self.k, self.colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_index_examples() {
        assert_eq!(edge_index(0, 1, 5), Ok(0));
        assert_eq!(edge_index(1, 0, 5), Ok(0));
        assert_eq!(edge_index(3, 4, 5), Ok(9));
    }

    #[test]
    fn edge_index_rejects_bad_pairs() {
        assert!(edge_index(2, 2, 5).is_err());
        assert!(edge_index(0, 5, 5).is_err());
        assert!(edge_index(7, 1, 5).is_err());
    }

    #[test]
    fn edge_index_matches_enumeration() {
        // independent: enumerate pairs in colex order and count
        let n = 5;
        let mut pairs = Vec::new();
        for v in 0..n {
            for u in 0..v {
                pairs.push((u, v));
            }
        }
        assert_eq!(pairs.len(), 10);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            assert_eq!(edge_index(u, v, n).unwrap(), i);
        }
    }

    #[test]
    fn edge_index_bijection_up_to_100() {
        for n in 2..=100 {
            let mut seen = vec![false; edge_count(n)];
            for v in 0..n {
                for u in 0..v {
                    let e = edge_index(u, v, n).unwrap();
                    assert!(!seen[e]);
                    seen[e] = true;
                    assert_eq!(edge_endpoints(e), (u, v));
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn subset_counts() {
        assert_eq!(
            subsets(4, 4).unwrap().map(|s| s.as_slice().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(subsets(5, 4).unwrap().count(), 5);
        assert_eq!(subsets(9, 4).unwrap().count() as u64, binomial(9, 4));
        assert_eq!(binomial(9, 4), 126);
        assert!(subsets(3, 4).is_err());
    }

    #[test]
    fn subsets_sorted_distinct_lexicographic() {
        let all: Vec<_> = subsets(9, 4).unwrap().collect();
        for s in &all {
            assert!(s.as_slice().windows(2).all(|w| w[0] < w[1]));
        }
        assert!(all.windows(2).all(|w| w[0].as_slice() < w[1].as_slice()));
    }

    #[test]
    fn subsets_split_by_first_vertex() {
        for r in 1..=4 {
            let whole: Vec<_> = subsets(10, r).unwrap().collect();
            let split: Vec<_> = (0..10).flat_map(|f| subsets_starting_at(10, r, f)).collect();
            assert_eq!(whole, split);
        }
    }

    #[test]
    fn pattern_copy_counts() {
        assert_eq!(pattern_copies(PatternKind::P4, &[0, 1, 2, 3]).unwrap().len(), 12);
        assert_eq!(pattern_copies(PatternKind::K13, &[0, 1, 2, 3]).unwrap().len(), 4);
        assert_eq!(pattern_copies(PatternKind::K3, &[0, 1, 2]).unwrap().len(), 1);
        assert!(pattern_copies(PatternKind::K3, &[0, 1, 2, 3]).is_err());
        assert!(pattern_copies(PatternKind::P4, &[0, 1, 2]).is_err());
    }

    fn is_path(edges: &[(usize, usize)]) -> bool {
        let mut deg = std::collections::HashMap::new();
        for &(u, v) in edges {
            *deg.entry(u).or_insert(0) += 1;
            *deg.entry(v).or_insert(0) += 1;
        }
        let ones = deg.values().filter(|&&d| d == 1).count();
        let twos = deg.values().filter(|&&d| d == 2).count();
        deg.len() == 4 && ones == 2 && twos == 2
    }

    #[test]
    fn pattern_copies_realize_their_shape() {
        let quad = [2, 5, 7, 11];
        let p4 = pattern_copies(PatternKind::P4, &quad).unwrap();
        let mut edge_sets: Vec<[usize; 3]> = Vec::new();
        for copy in &p4 {
            let ends: Vec<_> = copy.edges.iter().map(|&e| edge_endpoints(e)).collect();
            assert!(is_path(&ends), "{ends:?}");
            let mut es = copy.edges;
            es.sort();
            edge_sets.push(es);
        }
        edge_sets.sort();
        edge_sets.dedup();
        assert_eq!(edge_sets.len(), 12);

        for (c, copy) in pattern_copies(PatternKind::K13, &quad).unwrap().iter().enumerate() {
            for &e in &copy.edges {
                let (u, v) = edge_endpoints(e);
                assert!(u == quad[c] || v == quad[c]);
            }
        }
    }

    #[test]
    fn p4_copies_cover_each_edge_six_times() {
        for s in subsets(7, 4).unwrap() {
            let copies = pattern_copies(PatternKind::P4, s.as_slice()).unwrap();
            let edges = s.edges();
            for e in edges {
                let hits = copies.iter().filter(|c| c.edges.contains(&e)).count();
                assert_eq!(hits, 6);
            }
        }
    }

    #[test]
    fn coloring_validation() {
        assert!(EdgeColoring::new(3, 2, vec![0, 1, 2]).is_err());
        assert!(EdgeColoring::new(3, 2, vec![0, 1]).is_err());
        let c = EdgeColoring::new(3, 3, vec![0, 1, 1]).unwrap();
        assert_eq!(c.unused_colors(), vec![2]);
        assert_eq!(c.color(2, 1), 1);
        assert_eq!(c.class_sizes(), vec![1, 2, 0]);
    }

    #[test]
    fn simple_graph_basics() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.is_connected());
        assert!(c5.is_triangle_free());
        assert!(!SimpleGraph::complete(3).is_triangle_free());
        assert!(c5.add_edge_checked_fails());
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.has_edge(0, 2));
    }

    impl SimpleGraph {
        fn add_edge_checked_fails(&self) -> bool {
            let mut g = self.clone();
            g.add_edge(1, 1).is_err() && g.add_edge(0, 9).is_err()
        }
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("K1,3".parse::<PatternKind>().unwrap(), PatternKind::K13);
        assert_eq!("p4".parse::<PatternKind>().unwrap(), PatternKind::P4);
        assert!("C4".parse::<PatternKind>().is_err());
    }
}
