//! Exhaustive property checks on edge colorings and coloring rounds.
//!
//! Subset scans run in parallel, one task per smallest vertex, and are
//! merged in vertex order, so the reported witness is always the
//! lexicographically first failing subset regardless of the worker count.

use rayon::prelude::*;
use serde::Serialize;

use crate::colorings::ColoringRounds;
use crate::error::{Error, Result};
use crate::graph::{
    binomial, pair_index, subsets_starting_at, Color, EdgeColoring, PatternCopy, PatternKind,
    SimpleGraph, Subset, Vertex,
};

/// Outcome of a check that can point at what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "lowercase")]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(o: Option<W>) -> Self {
        o.map_or(Verdict::Pass, Verdict::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A pattern copy all of whose edges share `color`.
    MonochromaticCopy {
        subset: Subset,
        copy: PatternCopy,
        color: Color,
    },
    /// A subset with no rainbow copy of the pattern.
    NoRainbowCopy { subset: Subset },
    /// A quadruple with no rainbow `P4` in any round.
    NoRainbowInAnyRound { subset: Subset },
    /// A triangle that never receives the required number of colors.
    TriangleUndercolored { subset: Subset, required: usize },
}

impl Witness {
    pub fn subset(&self) -> Subset {
        match self {
            Witness::MonochromaticCopy { subset, .. }
            | Witness::NoRainbowCopy { subset }
            | Witness::NoRainbowInAnyRound { subset }
            | Witness::TriangleUndercolored { subset, .. } => *subset,
        }
    }

    /// Re-evaluates a single-coloring witness from scratch.
    pub fn reproduces(&self, c: &EdgeColoring, kind: PatternKind) -> bool {
        match self {
            Witness::MonochromaticCopy { copy, color, .. } => {
                copy.edges.iter().all(|&e| c.color_at(e) == *color)
            }
            Witness::NoRainbowCopy { subset } => {
                rainbow_copies(c, kind, subset.as_slice()) == 0
            }
            _ => false,
        }
    }

    /// Re-evaluates a multi-round witness from scratch.
    pub fn reproduces_rounds(&self, rounds: &ColoringRounds) -> bool {
        match self {
            Witness::NoRainbowInAnyRound { subset } => rounds
                .rounds()
                .iter()
                .all(|r| rainbow_copies(r, PatternKind::P4, subset.as_slice()) == 0),
            Witness::TriangleUndercolored { subset, required } => {
                let s = subset.as_slice();
                rounds.rounds().iter().all(|r| {
                    distinct(&[r.color(s[0], s[1]), r.color(s[0], s[2]), r.color(s[1], s[2])])
                        < *required
                })
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternKind>,
    pub n: usize,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Subsets examined by an exhaustive scan; zero when only the
    /// structural shortcut ran.
    pub subsets_checked: u64,
    /// Minimum, over all subsets, of the number of rainbow witnesses found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_rainbow_witnesses: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerifyReport {
    fn new(check: &'static str, pattern: Option<PatternKind>, n: usize) -> Self {
        VerifyReport {
            check,
            pattern,
            n,
            passed: true,
            witness: None,
            subsets_checked: 0,
            min_rainbow_witnesses: None,
            notes: Vec::new(),
        }
    }
}

#[inline]
fn distinct(cols: &[Color]) -> usize {
    (0..cols.len()).filter(|&i| !cols[..i].contains(&cols[i])).count()
}

/// Colors of the subset's edges in local colex order.
#[inline]
fn local_colors(c: &EdgeColoring, s: &[Vertex]) -> [Color; 6] {
    let mut out = [0; 6];
    let mut idx = 0;
    for j in 1..s.len() {
        for i in 0..j {
            out[idx] = c.color_at(pair_index(s[i], s[j]));
            idx += 1;
        }
    }
    out
}

#[inline]
fn is_rainbow(cols: &[Color; 6], t: &[u8; 3]) -> bool {
    let (a, b, c) = (cols[t[0] as usize], cols[t[1] as usize], cols[t[2] as usize]);
    a != b && b != c && a != c
}

fn rainbow_copies(c: &EdgeColoring, kind: PatternKind, s: &[Vertex]) -> u64 {
    let cols = local_colors(c, s);
    kind.local_copies()
        .iter()
        .filter(|t| is_rainbow(&cols, t))
        .count() as u64
}

/// Per-worker result of a subset scan.
struct Scan<W> {
    checked: u64,
    first_fail: Option<W>,
    min_tally: u64,
}

/// Visits every `r`-subset in parallel. `visit` returns an optional failure
/// and a tally; the merge keeps the first failure in lexicographic order and
/// the minimum tally.
fn scan_subsets<W, F>(n: usize, r: usize, visit: F) -> Scan<W>
where
    W: Send,
    F: Fn(&[Vertex]) -> (Option<W>, u64) + Sync,
{
    let parts: Vec<Scan<W>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut part = Scan {
                checked: 0,
                first_fail: None,
                min_tally: u64::MAX,
            };
            for s in subsets_starting_at(n, r, first) {
                let (fail, tally) = visit(s.as_slice());
                part.checked += 1;
                part.min_tally = part.min_tally.min(tally);
                if part.first_fail.is_none() {
                    part.first_fail = fail;
                }
            }
            part
        })
        .collect();
    let mut total = Scan {
        checked: 0,
        first_fail: None,
        min_tally: u64::MAX,
    };
    for p in parts {
        total.checked += p.checked;
        total.min_tally = total.min_tally.min(p.min_tally);
        if total.first_fail.is_none() {
            total.first_fail = p.first_fail;
        }
    }
    total
}

/// Class-structure test for monochromatic-copy freeness: `K1,3`-free classes
/// have maximum degree two, `P4`-free classes are disjoint triangles and
/// stars, and `K3`-free classes are triangle-free graphs.
pub fn mono_free_structural(c: &EdgeColoring, kind: PatternKind) -> bool {
    match kind {
        PatternKind::K13 => {
            let (n, k) = (c.n(), c.k());
            let mut deg = vec![0u32; n * k];
            for v in 0..n {
                for u in 0..v {
                    let col = c.color(u, v) as usize;
                    deg[u * k + col] += 1;
                    deg[v * k + col] += 1;
                }
            }
            deg.iter().all(|&d| d <= 2)
        }
        PatternKind::P4 => c.color_classes().iter().all(components_are_triangles_or_stars),
        PatternKind::K3 => c.color_classes().iter().all(SimpleGraph::is_triangle_free),
    }
}

fn components_are_triangles_or_stars(g: &SimpleGraph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for w in g.neighbors(comp[i]).iter() {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let verts = comp.len();
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let max_deg = comp.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
        let triangle = verts == 3 && edges == 3;
        let star = edges + 1 == verts && max_deg == edges;
        if !(triangle || star) {
            return false;
        }
    }
    true
}

/// Direct scan over every copy of the pattern; returns the first
/// monochromatic copy in canonical order.
pub fn mono_free_scan(c: &EdgeColoring, kind: PatternKind) -> Option<Witness> {
    let r = kind.vertex_count();
    if c.n() < r {
        return None;
    }
    scan_subsets(c.n(), r, |s| {
        let cols = local_colors(c, s);
        let subset = Subset::new(s).expect("scan subsets are valid");
        let fail = kind.local_copies().iter().find_map(|t| {
            let col = cols[t[0] as usize];
            if cols[t[1] as usize] == col && cols[t[2] as usize] == col {
                let edges = subset.edges();
                Some(Witness::MonochromaticCopy {
                    subset,
                    copy: PatternCopy {
                        edges: t.map(|i| edges[i as usize]),
                    },
                    color: col,
                })
            } else {
                None
            }
        });
        (fail, 0)
    })
    .first_fail
}

/// Largest `n` at which [`monochromatic_free`] also runs the direct scan and
/// requires it to agree with the structural shortcut.
pub const CROSS_CHECK_MAX_N: usize = 12;

pub fn monochromatic_free(c: &EdgeColoring, kind: PatternKind) -> VerifyReport {
    let mut report = VerifyReport::new("monochromatic_free", Some(kind), c.n());
    let structural = mono_free_structural(c, kind);
    let needs_scan = !structural || c.n() <= CROSS_CHECK_MAX_N;
    if needs_scan {
        let witness = mono_free_scan(c, kind);
        assert_eq!(
            structural,
            witness.is_none(),
            "structural and scan checks disagree for {kind} on {c:?}"
        );
        report.subsets_checked = binomial(c.n(), kind.vertex_count());
        report.passed = witness.is_none();
        report.witness = witness;
    }
    if c.n() <= CROSS_CHECK_MAX_N {
        report.notes.push("structural shortcut cross-checked by direct scan".into());
    }
    report
}

pub fn rainbow_everywhere(c: &EdgeColoring, kind: PatternKind) -> VerifyReport {
    let mut report = VerifyReport::new("rainbow_everywhere", Some(kind), c.n());
    let r = kind.vertex_count();
    if kind == PatternKind::K3 {
        report
            .notes
            .push("K3: every triangle must be rainbow (trivial setting)".into());
    }
    if c.n() < r {
        report.min_rainbow_witnesses = Some(0);
        return report;
    }
    let scan = scan_subsets(c.n(), r, |s| {
        let tally = rainbow_copies(c, kind, s);
        let fail = (tally == 0).then(|| Witness::NoRainbowCopy {
            subset: Subset::new(s).expect("scan subsets are valid"),
        });
        (fail, tally)
    });
    report.subsets_checked = scan.checked;
    report.min_rainbow_witnesses = Some(scan.min_tally);
    report.passed = scan.first_fail.is_none();
    report.witness = scan.first_fail;
    report
}

/// Monochromatic-free and rainbow-everywhere at once.
pub fn is_caring(c: &EdgeColoring, kind: PatternKind) -> VerifyReport {
    let mono = monochromatic_free(c, kind);
    let mut report = rainbow_everywhere(c, kind);
    report.check = "is_caring";
    report.notes.extend(mono.notes);
    if !mono.passed {
        report.passed = false;
        report.witness = mono.witness;
    }
    report
}

/// Every quadruple must have a rainbow `P4` in at least one round. The tally
/// counts `(round, copy)` pairs.
pub fn rounds_rainbow_p4(rounds: &ColoringRounds) -> VerifyReport {
    let n = rounds.n();
    let mut report = VerifyReport::new("rounds_rainbow_p4", Some(PatternKind::P4), n);
    if n < 4 {
        report.min_rainbow_witnesses = Some(0);
        return report;
    }
    let copies = PatternKind::P4.local_copies();
    let scan = scan_subsets(n, 4, |s| {
        let mut edges = [0usize; 6];
        let mut idx = 0;
        for j in 1..4 {
            for i in 0..j {
                edges[idx] = pair_index(s[i], s[j]);
                idx += 1;
            }
        }
        let mut tally = 0u64;
        for r in rounds.rounds() {
            let cols = edges.map(|e| r.color_at(e));
            tally += copies.iter().filter(|t| is_rainbow(&cols, t)).count() as u64;
        }
        let fail = (tally == 0).then(|| Witness::NoRainbowInAnyRound {
            subset: Subset::new(s).expect("scan subsets are valid"),
        });
        (fail, tally)
    });
    report.subsets_checked = scan.checked;
    report.min_rainbow_witnesses = Some(scan.min_tally);
    report.passed = scan.first_fail.is_none();
    report.witness = scan.first_fail;
    report
}

/// Every triangle must see at least `required` (2 or 3) colors in some round.
/// The tally counts the rounds that achieve it.
pub fn rounds_triangle_multicolored(
    rounds: &ColoringRounds,
    required: usize,
) -> Result<VerifyReport> {
    if !(2..=3).contains(&required) {
        return Err(Error::invalid(format!("required colors must be 2 or 3, got {required}")));
    }
    let n = rounds.n();
    let mut report = VerifyReport::new("rounds_triangle_multicolored", Some(PatternKind::K3), n);
    if n < 3 {
        return Ok(report);
    }
    let scan = scan_subsets(n, 3, |s| {
        let tally = rounds
            .rounds()
            .iter()
            .filter(|r| {
                distinct(&[r.color(s[0], s[1]), r.color(s[0], s[2]), r.color(s[1], s[2])])
                    >= required
            })
            .count() as u64;
        let fail = (tally == 0).then(|| Witness::TriangleUndercolored {
            subset: Subset::new(s).expect("scan subsets are valid"),
            required,
        });
        (fail, tally)
    });
    report.subsets_checked = scan.checked;
    report.min_rainbow_witnesses = Some(scan.min_tally);
    report.passed = scan.first_fail.is_none();
    report.witness = scan.first_fail;
    Ok(report)
}
