//! Steiner and Kirkman triple systems.
//!
//! [`kts_power_of_three`] builds a Kirkman triple system on `3^t` points by
//! repeatedly tripling the affine plane `AG(2,3)`: three copies of the
//! smaller system contribute the old classes, and each offset
//! `j ∈ Z_N` contributes the new class of transversal triples
//! `{a, N + (a+j), 2N + (a+2j)}` (arithmetic mod `N`). Every system built this
//! way is *good*: no four points have their six pairs spread over only three
//! parallel classes.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge_count, edge_endpoints, pair_index, Color, EdgeColoring, Vertex};
use crate::verify::Verdict;

pub type Triple = [Vertex; 3];

/// Largest `t` accepted by [`kts_power_of_three`] unless a caller opts into
/// a higher limit.
pub const DEFAULT_MAX_POWER: u32 = 7;

fn sorted_triple(t: Triple, n: usize) -> Result<Triple> {
    let mut s = t;
    s.sort_unstable();
    if s[2] >= n {
        return Err(Error::invalid(format!("triple {t:?} has a point outside 0..{n}")));
    }
    if s[0] == s[1] || s[1] == s[2] {
        return Err(Error::invalid(format!("triple {t:?} repeats a point")));
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    n: usize,
    triples: Vec<Triple>,
}

impl TripleSystem {
    /// Sorts each triple; rejects out-of-range or repeated points. Pair
    /// coverage is checked separately by [`is_steiner`].
    pub fn new(n: usize, triples: Vec<Triple>) -> Result<Self> {
        let triples = triples
            .into_iter()
            .map(|t| sorted_triple(t, n))
            .collect::<Result<_>>()?;
        Ok(TripleSystem { n, triples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirkmanSystem {
    n: usize,
    classes: Vec<Vec<Triple>>,
}

impl KirkmanSystem {
    /// Accepts any list of classes whose triples are well formed; whether
    /// they really are parallel classes of a Steiner system is the job of
    /// [`is_resolvable`].
    pub fn new(n: usize, classes: Vec<Vec<Triple>>) -> Result<Self> {
        let classes = classes
            .into_iter()
            .map(|class| class.into_iter().map(|t| sorted_triple(t, n)).collect())
            .collect::<Result<_>>()?;
        Ok(KirkmanSystem { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<Triple>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn triple_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn flatten(&self) -> TripleSystem {
        TripleSystem {
            n: self.n,
            triples: self.classes.iter().flatten().copied().collect(),
        }
    }
}

/// The affine plane `AG(2,3)`: point `(x, y)` is `3x + y`, and the four
/// classes are the lines in directions `(0,1)`, `(1,0)`, `(1,1)`, `(1,2)`.
pub fn kts9_base() -> KirkmanSystem {
    let point = |x: usize, y: usize| 3 * (x % 3) + y % 3;
    let directions = [(0, 1), (1, 0), (1, 1), (1, 2)];
    let classes = directions
        .iter()
        .map(|&(dx, dy)| {
            // one line through each point of a transversal of the direction
            let starts: [(usize, usize); 3] = if dx == 0 {
                [(0, 0), (1, 0), (2, 0)]
            } else {
                [(0, 0), (0, 1), (0, 2)]
            };
            starts
                .iter()
                .map(|&(x, y)| {
                    let mut t = [0; 3];
                    for (s, p) in t.iter_mut().enumerate() {
                        *p = point(x + s * dx, y + s * dy);
                    }
                    t.sort_unstable();
                    t
                })
                .collect()
        })
        .collect();
    KirkmanSystem { n: 9, classes }
}

/// Triples the point set of a Kirkman system on `N` (odd) points.
///
/// Point `j` of block `ℓ` becomes `ℓN + j`. Class `i < m` of the result is
/// the union of class `i` of the three block copies; class `m + j` holds the
/// triples `{a, N + (a+j mod N), 2N + (a+2j mod N)}`.
pub fn triple_kts(base: &KirkmanSystem) -> KirkmanSystem {
    let block = base.n;
    let mut classes: Vec<Vec<Triple>> = base
        .classes
        .iter()
        .map(|class| {
            (0..3)
                .flat_map(|l| class.iter().map(move |t| t.map(|p| l * block + p)))
                .collect()
        })
        .collect();
    for j in 0..block {
        classes.push(
            (0..block)
                .map(|a| [a, block + (a + j) % block, 2 * block + (a + 2 * j) % block])
                .collect(),
        );
    }
    KirkmanSystem {
        n: 3 * block,
        classes,
    }
}

/// A good Kirkman system on `3^t` points, `2 <= t <= 7`.
pub fn kts_power_of_three(t: u32) -> Result<KirkmanSystem> {
    kts_power_of_three_with_limit(t, DEFAULT_MAX_POWER)
}

pub fn kts_power_of_three_with_limit(t: u32, max_t: u32) -> Result<KirkmanSystem> {
    if t < 2 {
        return Err(Error::invalid(format!("t = {t}; the construction starts at t = 2")));
    }
    if t > max_t {
        return Err(Error::invalid(format!("t = {t} exceeds the guard limit {max_t}")));
    }
    let mut ks = kts9_base();
    for _ in 2..t {
        ks = triple_kts(&ks);
    }
    Ok(ks)
}

/// A pair covered by a number of triples other than one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub pair: (Vertex, Vertex),
    pub coverage: usize,
}

/// Checks that every pair of points lies in exactly one triple. Reports the
/// first offending pair in edge order.
pub fn is_steiner(ts: &TripleSystem) -> Verdict<PairViolation> {
    let mut cover = vec![0usize; edge_count(ts.n)];
    for t in &ts.triples {
        cover[pair_index(t[0], t[1])] += 1;
        cover[pair_index(t[0], t[2])] += 1;
        cover[pair_index(t[1], t[2])] += 1;
    }
    match cover.iter().position(|&c| c != 1) {
        None => Verdict::Pass,
        Some(e) => Verdict::Fail(PairViolation {
            pair: edge_endpoints(e),
            coverage: cover[e],
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassViolation {
    /// `point` is missing from, or repeated in, class `class`.
    NotPartition { class: usize, point: Vertex },
    /// The classes are partitions but their union is not a Steiner system.
    NotSteiner(PairViolation),
}

pub fn is_resolvable(ks: &KirkmanSystem) -> Verdict<ClassViolation> {
    for (ci, class) in ks.classes.iter().enumerate() {
        let mut seen = vec![0u8; ks.n];
        for t in class {
            for &p in t {
                seen[p] += 1;
            }
        }
        if let Some(point) = seen.iter().position(|&c| c != 1) {
            return Verdict::Fail(ClassViolation::NotPartition { class: ci, point });
        }
    }
    match is_steiner(&ks.flatten()) {
        Verdict::Pass => Verdict::Pass,
        Verdict::Fail(v) => Verdict::Fail(ClassViolation::NotSteiner(v)),
    }
}

/// Colors each pair by the index of the class containing its triple.
/// Fails when the system is not resolvable.
pub fn kts_coloring(ks: &KirkmanSystem) -> Result<EdgeColoring> {
    if let Verdict::Fail(v) = is_resolvable(ks) {
        return Err(Error::invalid(format!("not a Kirkman system: {v:?}")));
    }
    let mut colors = vec![0 as Color; edge_count(ks.n)];
    for (ci, class) in ks.classes.iter().enumerate() {
        let c = Color::try_from(ci).map_err(|_| Error::invalid("too many classes"))?;
        for t in class {
            colors[pair_index(t[0], t[1])] = c;
            colors[pair_index(t[0], t[2])] = c;
            colors[pair_index(t[1], t[2])] = c;
        }
    }
    EdgeColoring::new(ks.n, ks.classes.len(), colors)
}

/// Number of distinct colors on the six edges of a quadruple.
#[inline]
pub(crate) fn quad_color_count(c: &EdgeColoring, q: [Vertex; 4]) -> usize {
    let cols = [
        c.color(q[0], q[1]),
        c.color(q[0], q[2]),
        c.color(q[1], q[2]),
        c.color(q[0], q[3]),
        c.color(q[1], q[3]),
        c.color(q[2], q[3]),
    ];
    let mut distinct = 0;
    for i in 0..6 {
        if !cols[..i].contains(&cols[i]) {
            distinct += 1;
        }
    }
    distinct
}

/// First quadruple (lexicographically) whose six edges use fewer than four
/// colors. On a KTS coloring such a quadruple is exactly a bad `K4`: three
/// classes, each a perfect matching of the quadruple.
pub fn first_bad_quadruple(c: &EdgeColoring) -> Option<[Vertex; 4]> {
    let n = c.n();
    (0..n).into_par_iter().find_map_first(|a| {
        for b in a + 1..n {
            for cc in b + 1..n {
                for d in cc + 1..n {
                    let q = [a, b, cc, d];
                    if quad_color_count(c, q) < 4 {
                        return Some(q);
                    }
                }
            }
        }
        None
    })
}

/// Whether every four points see at least four parallel classes.
pub fn is_good_kts(ks: &KirkmanSystem) -> Result<Verdict<[Vertex; 4]>> {
    let coloring = kts_coloring(ks)?;
    Ok(first_bad_quadruple(&coloring).into())
}
