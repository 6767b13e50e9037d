//! OR-products and powers of graphs, the Mycielski construction, exact
//! maximum-clique search, and clique certificates for lower bounds on the
//! Shannon OR-capacity `C_OR(G) = lim ω(G^t)^{1/t}`.
//!
//! In the OR-product two distinct pairs are adjacent when they are adjacent
//! in at least one coordinate, so a vertex of `G^t` is a length-`t` sequence
//! over `V(G)` and two sequences are adjacent iff some coordinate holds an
//! edge of `G`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};
use crate::verify::Verdict;

/// Largest vertex count [`or_power`] will materialize by default.
pub const DEFAULT_MATERIALIZE_CAP: usize = 20_000;

/// Largest base graph a descriptor may name.
pub const MAX_BASE_VERTICES: usize = 20_000;

/// The 28 sequences of the clique in the fourth OR-power of the Grötzsch
/// graph `M(C5)`. `i'` is the twin of `i` and `z` is the apex.
pub const GROTZSCH_28_CLIQUE: [&str; 28] = [
    "0'0'00", "120'0", "2400'", "3100'", "430'0",
    "001'2", "1'2'12", "241'2", "3112'", "4312'",
    "0024'", "122'4", "2'4'24", "312'4", "4324'",
    "0031'", "1231'", "243'1", "3'1'31", "433'1",
    "004'3", "1243'", "2443'", "314'3", "4'3'43",
    "0'zzz", "z0'zz", "zzzz",
];

/// Shannon's five-clique in `C5^2`.
pub const SHANNON_C5_CLIQUE: [&str; 5] = ["00", "12", "24", "31", "43"];

/// `G ⊗ H` on `V(G) × V(H)`, with `(g, h)` numbered `g·|H| + h`.
pub fn or_product(g: &SimpleGraph, h: &SimpleGraph, cap: usize) -> Result<SimpleGraph> {
    let (gn, hn) = (g.n(), h.n());
    let vertices = gn.saturating_mul(hn);
    if vertices > cap {
        return Err(Error::CapExceeded { vertices, cap });
    }
    Ok(SimpleGraph::from_fn(vertices, |a, b| {
        g.has_edge(a / hn, b / hn) || h.has_edge(a % hn, b % hn)
    }))
}

/// The `t`-fold OR-power, materialized. Sequence `(s_0, .., s_{t-1})` is
/// numbered in mixed radix with `s_0` most significant.
pub fn or_power(g: &SimpleGraph, t: u32, cap: usize) -> Result<SimpleGraph> {
    if t == 0 {
        return Err(Error::invalid("OR-power exponent must be at least 1"));
    }
    let power = PowerGraph::new(g.clone(), t);
    let vertices = power.vertex_count();
    if vertices > cap {
        return Err(Error::CapExceeded { vertices, cap });
    }
    let seqs: Vec<Vec<Vertex>> = (0..vertices).map(|i| power.sequence(i)).collect();
    Ok(SimpleGraph::from_fn(vertices, |a, b| {
        power.adjacent(&seqs[a], &seqs[b])
    }))
}

/// `G^t` with adjacency evaluated on demand, for powers too large to store.
#[derive(Clone, Debug)]
pub struct PowerGraph {
    base: SimpleGraph,
    t: u32,
}

impl PowerGraph {
    pub fn new(base: SimpleGraph, t: u32) -> Self {
        PowerGraph { base, t }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `|V(G)|^t`, saturating.
    pub fn vertex_count(&self) -> usize {
        self.base.n().checked_pow(self.t).unwrap_or(usize::MAX)
    }

    pub fn sequence(&self, mut index: usize) -> Vec<Vertex> {
        let n = self.base.n();
        let mut seq = vec![0; self.t as usize];
        for slot in seq.iter_mut().rev() {
            *slot = index % n;
            index /= n;
        }
        seq
    }

    pub fn index(&self, seq: &[Vertex]) -> usize {
        seq.iter().fold(0, |acc, &s| acc * self.base.n() + s)
    }

    pub fn adjacent(&self, a: &[Vertex], b: &[Vertex]) -> bool {
        a.iter().zip(b).any(|(&x, &y)| self.base.has_edge(x, y))
    }
}

/// Originals `0..n`, twin of `i` at `n + i`, apex at `2n`.
pub fn mycielskian(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    let mut m = SimpleGraph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        m.add_edge(u, v).expect("in range");
        m.add_edge(n + u, v).expect("in range");
        m.add_edge(n + v, u).expect("in range");
    }
    for i in 0..n {
        m.add_edge(n + i, 2 * n).expect("in range");
    }
    m
}

/// `M_k`: `M_2 = K_2`, `M_{k+1} = M(M_k)`.
pub fn mycielski_graph(k: u32) -> Result<SimpleGraph> {
    if k < 2 {
        return Err(Error::invalid("Mycielski graphs start at M_2 = K_2"));
    }
    let mut g = SimpleGraph::complete(2);
    for _ in 2..k {
        g = mycielskian(&g);
    }
    Ok(g)
}

pub fn grotzsch() -> SimpleGraph {
    mycielskian(&SimpleGraph::cycle(5))
}

/// A proper `k`-coloring of `g`, if one exists.
pub fn k_coloring(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &SimpleGraph, k: usize, order: &[Vertex], i: usize, col: &mut [usize]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        // colors above the highest one in use are interchangeable
        let fresh = order[..i].iter().map(|&w| col[w] + 1).max().unwrap_or(0);
        for c in 0..k.min(fresh + 1) {
            if g.neighbors(v).iter().all(|w| col[w] != c) {
                col[v] = c;
                if go(g, k, order, i + 1, col) {
                    return true;
                }
                col[v] = usize::MAX;
            }
        }
        false
    }
    let n = g.n();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut col = vec![usize::MAX; n];
    go(g, k, &order, 0, &mut col).then_some(col)
}

pub fn chromatic_number(g: &SimpleGraph) -> usize {
    (0..=g.n())
        .find(|&k| k_coloring(g, k).is_some())
        .expect("n colors always suffice")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueBudget {
    pub node_cap: u64,
    pub time_cap: Duration,
}

impl Default for CliqueBudget {
    fn default() -> Self {
        CliqueBudget {
            node_cap: 5_000_000_000,
            time_cap: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueResult {
    pub vertices: Vec<Vertex>,
    /// False when the budget ran out; `vertices` is then only a lower bound.
    pub exact: bool,
    pub nodes: u64,
}

impl CliqueResult {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

struct CliqueSearch<'a> {
    adj: &'a [Bitset],
    best_size: AtomicUsize,
    best: Mutex<Vec<Vertex>>,
    nodes: AtomicU64,
    stop: AtomicBool,
    node_cap: u64,
    deadline: Instant,
}

impl CliqueSearch<'_> {
    /// Greedy coloring of `p` in index order; returns vertices by ascending
    /// color together with their color numbers (1-based).
    fn color_sort(&self, p: &Bitset) -> (Vec<Vertex>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut bounds = Vec::with_capacity(p.len());
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(&self.adj[v]);
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn offer(&self, clique: &[Vertex]) {
        let size = clique.len();
        if size > self.best_size.load(Ordering::Relaxed) {
            let mut best = self.best.lock().expect("clique mutex poisoned");
            if size > best.len() {
                *best = clique.to_vec();
                self.best_size.store(size, Ordering::Relaxed);
            }
        }
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if n >= self.node_cap || (n & 0x3ff == 0 && Instant::now() > self.deadline) {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }

    fn expand(&self, clique: &mut Vec<Vertex>, mut p: Bitset) {
        let (order, bounds) = self.color_sort(&p);
        for i in (0..order.len()).rev() {
            if clique.len() + bounds[i] <= self.best_size.load(Ordering::Relaxed) {
                return;
            }
            if self.tick() {
                return;
            }
            let v = order[i];
            clique.push(v);
            let mut next = p.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_empty() {
                self.offer(clique);
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            p.remove(v);
        }
    }
}

/// Vertices in smallest-last (degeneracy) order, reversed so that the
/// densest core comes first.
fn degeneracy_order(g: &SimpleGraph) -> Vec<Vertex> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        out.push(v);
        for w in g.neighbors(v).iter() {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    out.reverse();
    out
}

/// Exact maximum clique by branch and bound with greedy-coloring bounds.
/// Root branches run in parallel; the clique size is deterministic when
/// `exact` is true, the particular clique may not be.
pub fn max_clique(g: &SimpleGraph, budget: &CliqueBudget) -> CliqueResult {
    let n = g.n();
    if n == 0 {
        return CliqueResult {
            vertices: Vec::new(),
            exact: true,
            nodes: 0,
        };
    }
    // relabel so that index order is the degeneracy order
    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<Bitset> = order
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|w| position[w]).fold(Bitset::new(n), |mut s, w| {
            s.insert(w);
            s
        }))
        .collect();

    let search = CliqueSearch {
        adj: &adj,
        best_size: AtomicUsize::new(1),
        best: Mutex::new(vec![0]),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        node_cap: budget.node_cap,
        deadline: Instant::now() + budget.time_cap,
    };
    let all = Bitset::full(n);
    let (root_order, root_bounds) = search.color_sort(&all);
    (0..root_order.len()).into_par_iter().rev().for_each(|i| {
        if root_bounds[i] <= search.best_size.load(Ordering::Relaxed) || search.stop.load(Ordering::Relaxed) {
            return;
        }
        let v = root_order[i];
        // candidates are the vertices colored before v in the root ordering
        let mut p = Bitset::new(n);
        for &w in &root_order[..i] {
            p.insert(w);
        }
        p.intersect_with(&adj[v]);
        let mut clique = vec![v];
        if p.is_empty() {
            search.offer(&clique);
        } else {
            search.expand(&mut clique, p);
        }
    });

    let mut vertices: Vec<Vertex> = search
        .best
        .into_inner()
        .expect("clique mutex poisoned")
        .into_iter()
        .map(|i| order[i])
        .collect();
    vertices.sort_unstable();
    debug_assert!(is_clique(g, &vertices));
    CliqueResult {
        vertices,
        exact: !search.stop.load(Ordering::Relaxed),
        nodes: search.nodes.load(Ordering::Relaxed),
    }
}

/// The lexicographically first clique of `size` vertices, found by a
/// sequential search. Together with [`max_clique`] this gives a witness that
/// does not depend on thread scheduling.
pub fn lex_first_clique(g: &SimpleGraph, size: usize) -> Option<Vec<Vertex>> {
    fn color_bound(g: &SimpleGraph, p: &Bitset) -> usize {
        let mut uncolored = p.clone();
        let mut colors = 0;
        while !uncolored.is_empty() {
            colors += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(g.neighbors(v));
                uncolored.remove(v);
            }
        }
        colors
    }
    fn go(g: &SimpleGraph, size: usize, clique: &mut Vec<Vertex>, mut p: Bitset) -> bool {
        if clique.len() == size {
            return true;
        }
        while let Some(v) = p.first() {
            if clique.len() + p.len() < size || clique.len() + color_bound(g, &p) < size {
                return false;
            }
            p.remove(v);
            let mut next = p.clone();
            next.intersect_with(g.neighbors(v));
            clique.push(v);
            if go(g, size, clique, next) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let mut clique = Vec::with_capacity(size);
    go(g, size, &mut clique, Bitset::full(g.n())).then_some(clique)
}

pub fn is_clique(g: &SimpleGraph, verts: &[Vertex]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Base graphs that certificates and the command line can name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseGraph {
    Cycle(usize),
    Complete(usize),
    /// `M_k` of the Mycielski sequence.
    Mycielski(u32),
    Mycielskian(Box<BaseGraph>),
}

impl BaseGraph {
    pub fn build(&self) -> SimpleGraph {
        match self {
            BaseGraph::Cycle(n) => SimpleGraph::cycle(*n),
            BaseGraph::Complete(n) => SimpleGraph::complete(*n),
            BaseGraph::Mycielski(k) => mycielski_graph(*k).expect("k >= 2 checked at parse"),
            BaseGraph::Mycielskian(inner) => mycielskian(&inner.build()),
        }
    }

    /// `|V|` without building the graph, saturating.
    pub fn vertex_count(&self) -> usize {
        match self {
            BaseGraph::Cycle(n) | BaseGraph::Complete(n) => *n,
            BaseGraph::Mycielski(k) => 3usize.saturating_mul(1 << (k - 2)) - 1,
            BaseGraph::Mycielskian(inner) => inner.vertex_count().saturating_mul(2).saturating_add(1),
        }
    }

    /// Vertex count of the graph inside the outermost Mycielskian, if any.
    fn twin_base(&self) -> Option<usize> {
        match self {
            BaseGraph::Mycielskian(inner) => Some(inner.vertex_count()),
            BaseGraph::Mycielski(k) if *k >= 3 => Some(BaseGraph::Mycielski(k - 1).vertex_count()),
            _ => None,
        }
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGraph::Cycle(n) => write!(f, "C{n}"),
            BaseGraph::Complete(n) => write!(f, "K{n}"),
            BaseGraph::Mycielski(k) => write!(f, "M{k}"),
            BaseGraph::Mycielskian(inner) => write!(f, "M({inner})"),
        }
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnresolvedDescriptor(s.to_string());
        if s.matches("M(").count() > 16 {
            return Err(bad());
        }
        let g = parse_base(s)?;
        if g.vertex_count() > MAX_BASE_VERTICES {
            return Err(bad());
        }
        Ok(g)
    }
}

fn parse_base(s: &str) -> Result<BaseGraph> {
    let bad = || Error::UnresolvedDescriptor(s.to_string());
    let lower = s.to_ascii_lowercase();
    if lower == "grotzsch" || lower == "groetzsch" {
        return Ok(BaseGraph::Mycielskian(Box::new(BaseGraph::Cycle(5))));
    }
    if let Some(inner) = s.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
        return Ok(BaseGraph::Mycielskian(Box::new(inner.parse()?)));
    }
    let number = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
    match s.chars().next() {
        Some('C') => {
            let n = number(&s[1..])?;
            if n < 3 {
                return Err(bad());
            }
            Ok(BaseGraph::Cycle(n))
        }
        Some('K') => Ok(BaseGraph::Complete(number(&s[1..])?)),
        Some('M') => {
            let k = number(&s[1..])?;
            if !(2..=8).contains(&k) {
                return Err(bad());
            }
            Ok(BaseGraph::Mycielski(k as u32))
        }
        _ => Err(bad()),
    }
}

/// A base graph raised to an OR-power, e.g. `M(C5)^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDescriptor {
    pub base: BaseGraph,
    pub power: u32,
}

impl GraphDescriptor {
    pub fn power_graph(&self) -> PowerGraph {
        PowerGraph::new(self.base.build(), self.power)
    }

    /// Parses one vertex of the base graph: `i`, `i'` (twin of `i` when the
    /// base is a Mycielskian) or `z` (its apex).
    fn parse_token(&self, tok: &str, n: usize) -> Option<Vertex> {
        let twin_base = self.base.twin_base();
        let v = if tok == "z" {
            2 * twin_base?
        } else if let Some(num) = tok.strip_suffix('\'') {
            let i: usize = num.parse().ok()?;
            let tb = twin_base?;
            (i < tb).then_some(tb + i)?
        } else {
            let i: usize = tok.parse().ok()?;
            (i < twin_base.unwrap_or(n)).then_some(i)?
        };
        (v < n).then_some(v)
    }

    /// Parses a vertex sequence of the power. Without separators each symbol
    /// is one digit optionally followed by `'`, or `z`; with spaces or
    /// commas, tokens may be multi-digit.
    pub fn parse_sequence(&self, line: &str) -> Result<Vec<Vertex>> {
        let n = self.base.vertex_count();
        let bad = |msg: String| Error::invalid(msg);
        let tokens: Vec<String> = if !self.compact() || line.contains([' ', ',', '\t']) {
            line.split([' ', ',', '\t'])
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        } else {
            let mut toks = Vec::new();
            let chars: Vec<char> = line.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let mut tok = chars[i].to_string();
                if i + 1 < chars.len() && chars[i + 1] == '\'' {
                    tok.push('\'');
                    i += 1;
                }
                toks.push(tok);
                i += 1;
            }
            toks
        };
        if tokens.len() != self.power as usize {
            return Err(bad(format!(
                "sequence {line:?} has {} coordinates, expected {}",
                tokens.len(),
                self.power
            )));
        }
        tokens
            .iter()
            .map(|t| {
                self.parse_token(t, n)
                    .ok_or_else(|| bad(format!("bad vertex token {t:?} in {line:?}")))
            })
            .collect()
    }

    pub fn format_vertex(&self, v: Vertex) -> String {
        match self.base.twin_base() {
            Some(tb) if v == 2 * tb => "z".into(),
            Some(tb) if v >= tb => format!("{}'", v - tb),
            _ => v.to_string(),
        }
    }

    /// Whether every vertex token is one symbol, so sequences need no
    /// separators.
    fn compact(&self) -> bool {
        match self.base.twin_base() {
            Some(tb) => tb <= 10,
            None => self.base.vertex_count() <= 10,
        }
    }

    pub fn format_sequence(&self, seq: &[Vertex]) -> String {
        let parts: Vec<String> = seq.iter().map(|&v| self.format_vertex(v)).collect();
        if self.compact() {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for GraphDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.base, self.power)
    }
}

impl FromStr for GraphDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (base, power) = match s.rsplit_once('^') {
            Some((b, p)) => (
                b,
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::UnresolvedDescriptor(s.to_string()))?,
            ),
            None => (s, 1),
        };
        if power == 0 {
            return Err(Error::UnresolvedDescriptor(s.to_string()));
        }
        Ok(GraphDescriptor {
            base: base.parse()?,
            power,
        })
    }
}

/// A claimed clique in a described graph. Never trusted: see
/// [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCertificate {
    pub descriptor: GraphDescriptor,
    pub vertices: Vec<Vec<Vertex>>,
}

impl CliqueCertificate {
    pub fn from_strings<S: AsRef<str>>(descriptor: &str, seqs: &[S]) -> Result<Self> {
        let descriptor: GraphDescriptor = descriptor.parse()?;
        let vertices = seqs
            .iter()
            .map(|s| descriptor.parse_sequence(s.as_ref()))
            .collect::<Result<_>>()?;
        Ok(CliqueCertificate {
            descriptor,
            vertices,
        })
    }

    /// The 28-vertex clique in `M(C5)^4`.
    pub fn grotzsch_28() -> Self {
        Self::from_strings("M(C5)^4", &GROTZSCH_28_CLIQUE).expect("well-formed constant")
    }

    /// Shannon's 5-vertex clique in `C5^2`.
    pub fn shannon_c5() -> Self {
        Self::from_strings("C5^2", &SHANNON_C5_CLIQUE).expect("well-formed constant")
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Concatenates every pair of sequences; the result is a clique in
    /// `G^{s+t}` whenever both inputs are cliques in `G^s` and `G^t`.
    pub fn product(&self, other: &CliqueCertificate) -> Result<Self> {
        if self.descriptor.base != other.descriptor.base {
            return Err(Error::invalid("certificates over different base graphs"));
        }
        let vertices = self
            .vertices
            .iter()
            .flat_map(|a| {
                other.vertices.iter().map(move |b| {
                    let mut s = a.clone();
                    s.extend_from_slice(b);
                    s
                })
            })
            .collect();
        Ok(CliqueCertificate {
            descriptor: GraphDescriptor {
                base: self.descriptor.base.clone(),
                power: self.descriptor.power + other.descriptor.power,
            },
            vertices,
        })
    }
}

/// Checks all pairs; reports the first non-adjacent pair of positions.
pub fn verify_certificate(cert: &CliqueCertificate) -> Result<Verdict<(usize, usize)>> {
    let power = cert.descriptor.power_graph();
    let n = power.base().n();
    for seq in &cert.vertices {
        if seq.len() != power.t() as usize || seq.iter().any(|&v| v >= n) {
            return Err(Error::invalid(format!("malformed vertex sequence {seq:?}")));
        }
    }
    let verts = &cert.vertices;
    let first = (0..verts.len()).into_par_iter().find_map_first(|i| {
        (i + 1..verts.len())
            .find(|&j| !power.adjacent(&verts[i], &verts[j]))
            .map(|j| (i, j))
    });
    Ok(first.into())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CapacityBound {
    pub graph: String,
    pub t: u32,
    pub clique_size: usize,
    /// `clique_size^(1/t)`.
    pub bound: f64,
    /// True when `clique_size = ω(G^t)` was established by exhaustive search.
    pub exact: bool,
}

/// `ω(G^t)^{1/t}`, computed by materializing `G^t` and running
/// [`max_clique`]. A budget overrun yields the best clique found with
/// `exact = false`.
pub fn capacity_lower_bound(
    g: &SimpleGraph,
    t: u32,
    cap: usize,
    budget: &CliqueBudget,
) -> Result<CapacityBound> {
    let power = or_power(g, t, cap)?;
    let clique = max_clique(&power, budget);
    if clique.size() == 0 {
        return Err(Error::invalid("empty graph has no clique"));
    }
    Ok(CapacityBound {
        graph: format!("G^{t}"),
        t,
        clique_size: clique.size(),
        bound: (clique.size() as f64).powf(1.0 / t as f64),
        exact: clique.exact,
    })
}

/// Lower bound from a verified certificate; fails if the certificate is not
/// a clique.
pub fn certified_capacity_bound(cert: &CliqueCertificate) -> Result<CapacityBound> {
    if let Verdict::Fail((i, j)) = verify_certificate(cert)? {
        return Err(Error::invalid(format!(
            "certificate vertices {i} and {j} are not adjacent"
        )));
    }
    let t = cert.descriptor.power;
    Ok(CapacityBound {
        graph: cert.descriptor.to_string(),
        t,
        clique_size: cert.size(),
        bound: (cert.size() as f64).powf(1.0 / t as f64),
        exact: false,
    })
}

/// Whether `a_size^(1/a_t) > b_size^(1/b_t)`, decided in integers as
/// `a_size^b_t > b_size^a_t`.
pub fn bound_exceeds(a_size: u64, a_t: u32, b_size: u64, b_t: u32) -> Option<bool> {
    let lhs = (a_size as u128).checked_pow(b_t)?;
    let rhs = (b_size as u128).checked_pow(a_t)?;
    Some(lhs > rhs)
}
