//! Explicit colorings of `K_n`: Hamiltonian decompositions, paired
//! one-factorizations, and multi-round colorings driven by binary vertex
//! labels.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Vertex};
use crate::verify::Verdict;

/// Colors of the binary-label four-coloring rounds.
pub const BLUE: Color = 0;
pub const GREEN: Color = 1;
pub const RED: Color = 2;
pub const YELLOW: Color = 3;
/// Third color of a three-color round, where red and yellow are merged.
pub const MIXED: Color = 2;

/// Two-symbol ternary codeword of each four-coloring color, indexed by color.
/// Any three of the codewords are pairwise distinct in some position.
pub const TERNARY_CODE: [[Color; 2]; 4] = [[0, 0], [0, 1], [1, 2], [2, 2]];

/// An ordered list of colorings of the same `K_n`, all over one palette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringRounds {
    n: usize,
    palette: usize,
    rounds: Vec<EdgeColoring>,
}

impl ColoringRounds {
    pub fn new(n: usize, palette: usize, rounds: Vec<EdgeColoring>) -> Result<Self> {
        for (i, r) in rounds.iter().enumerate() {
            if r.n() != n {
                return Err(Error::invalid(format!("round {i} colors K_{}, expected K_{n}", r.n())));
            }
            if r.k() != palette {
                return Err(Error::invalid(format!(
                    "round {i} has palette {}, expected {palette}",
                    r.k()
                )));
            }
        }
        Ok(ColoringRounds { n, palette, rounds })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn rounds(&self) -> &[EdgeColoring] {
        &self.rounds
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }
}

/// `⌈log₂ n⌉`, with `ceil_log2(1) = 0`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Distinct binary labels of a common length `t`. Coordinate `0` is the
/// leftmost (most significant) symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLabeling {
    t: u32,
    labels: Vec<u64>,
}

impl BinaryLabeling {
    pub fn new(t: u32, labels: Vec<u64>) -> Result<Self> {
        if t > 64 {
            return Err(Error::invalid(format!("label length {t} exceeds 64")));
        }
        if let Some(l) = labels.iter().find(|&&l| t < 64 && l >> t != 0) {
            return Err(Error::invalid(format!("label {l:#b} longer than {t} bits")));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("label {:0width$b} repeated", w[0], width = t as usize)));
        }
        Ok(BinaryLabeling { t, labels })
    }

    /// Binary forms of `0..n`, zero-padded to `⌈log₂ n⌉` symbols.
    pub fn standard(n: usize) -> Self {
        BinaryLabeling {
            t: ceil_log2(n),
            labels: (0..n as u64).collect(),
        }
    }

    /// Parses labels such as `["00", "01", "11"]`.
    pub fn from_strings<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let t = labels.first().map_or(0, |s| s.as_ref().len());
        let parsed = labels
            .iter()
            .map(|s| {
                let s = s.as_ref();
                if s.len() != t || !s.bytes().all(|b| b == b'0' || b == b'1') {
                    return Err(Error::invalid(format!("bad label {s:?}")));
                }
                if t == 0 {
                    return Ok(0);
                }
                u64::from_str_radix(s, 2).map_err(|e| Error::invalid(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(t as u32, parsed)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Symbol of vertex `v` at coordinate `i`.
    #[inline]
    pub fn bit(&self, v: Vertex, i: u32) -> u64 {
        self.labels[v] >> (self.t - 1 - i) & 1
    }

    /// Whether `u` and `v` agree on coordinates `0..i`.
    #[inline]
    fn same_prefix(&self, u: Vertex, v: Vertex, i: u32) -> bool {
        i == 0 || (self.labels[u] ^ self.labels[v]) >> (self.t - i) == 0
    }
}

/// Splits the edges of `K_n` (`n` odd) into `(n-1)/2` Hamiltonian cycles,
/// one per color, by Walecki's construction: vertex `n-1` is a hub and the
/// zigzag path `0, 1, -1, 2, -2, ..` on `Z_{n-1}` is rotated.
pub fn hamiltonian_decomposition_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!("Hamiltonian decomposition needs odd n >= 3, got {n}")));
    }
    let m = n - 1;
    let hub = n - 1;
    let mut colors = vec![Color::MAX; crate::graph::edge_count(n)];
    for (c, cycle) in (0..m / 2).map(|i| walecki_cycle(m, i)).enumerate() {
        let mut prev = hub;
        for &v in cycle.iter().chain(std::iter::once(&hub)) {
            colors[crate::graph::pair_index(prev, v)] = c as Color;
            prev = v;
        }
    }
    debug_assert!(colors.iter().all(|&c| c != Color::MAX));
    EdgeColoring::new(n, m / 2, colors)
}

/// Zigzag path on `Z_m` rotated by `shift`.
fn walecki_cycle(m: usize, shift: usize) -> Vec<Vertex> {
    let mut path = Vec::with_capacity(m);
    path.push(shift % m);
    for k in 1..m / 2 {
        path.push((shift + k) % m);
        path.push((shift + m - k) % m);
    }
    if m >= 2 {
        path.push((shift + m / 2) % m);
    }
    path
}

/// The round-robin one-factorization of `K_n` (`n` even): matching `r`
/// pairs `r` with the fixed vertex `n-1` and `r+k` with `r-k` mod `n-1`.
pub fn round_robin_matchings(n: usize) -> Result<Vec<Vec<(Vertex, Vertex)>>> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::invalid(format!("one-factorization needs even n >= 2, got {n}")));
    }
    let m = n - 1;
    Ok((0..m)
        .map(|r| {
            let mut matching = vec![(r, n - 1)];
            for k in 1..n / 2 {
                let (a, b) = ((r + k) % m, (r + m - k) % m);
                matching.push((a.min(b), a.max(b)));
            }
            matching
        })
        .collect())
}

/// Merges matchings `2i` and `2i+1` of the round-robin factorization into
/// color `i`; the last matching stays alone. Every color class has maximum
/// degree at most two.
pub fn paired_one_factorization_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::invalid(format!("paired one-factorization needs even n >= 4, got {n}")));
    }
    let matchings = round_robin_matchings(n)?;
    let mut colors = vec![0; crate::graph::edge_count(n)];
    for (r, matching) in matchings.iter().enumerate() {
        for &(u, v) in matching {
            colors[crate::graph::pair_index(u, v)] = (r / 2) as Color;
        }
    }
    EdgeColoring::new(n, n / 2, colors)
}

/// Round `i` colors `{u, v}` blue when both labels read 0 at coordinate `i`,
/// green when both read 1, red when they first differ at `i`, and yellow
/// when they differ at `i` and already differed earlier.
pub fn four_color_rounds_from_labels(lab: &BinaryLabeling) -> Result<ColoringRounds> {
    let n = lab.n();
    let rounds = (0..lab.t())
        .map(|i| {
            EdgeColoring::from_fn(n, 4, |u, v| match (lab.bit(u, i), lab.bit(v, i)) {
                (0, 0) => BLUE,
                (1, 1) => GREEN,
                _ if lab.same_prefix(u, v, i) => RED,
                _ => YELLOW,
            })
        })
        .collect::<Result<_>>()?;
    ColoringRounds::new(n, 4, rounds)
}

/// `⌈log₂ n⌉` four-color rounds over the standard binary labels.
pub fn binary_four_color_rounds(n: usize) -> Result<ColoringRounds> {
    if n < 4 {
        return Err(Error::invalid(format!("need n >= 4, got {n}")));
    }
    four_color_rounds_from_labels(&BinaryLabeling::standard(n))
}

/// Replaces each four-color round by two three-color rounds holding the
/// first and second symbols of [`TERNARY_CODE`]. The first merges blue with
/// green, the second merges red with yellow.
pub fn encode_rounds_to_ternary(rounds: &ColoringRounds) -> Result<ColoringRounds> {
    if rounds.palette() != 4 {
        return Err(Error::invalid(format!(
            "ternary encoding needs palette 4, got {}",
            rounds.palette()
        )));
    }
    let mut out = Vec::with_capacity(2 * rounds.len());
    for r in rounds.rounds() {
        let words: Vec<[Color; 2]> = r.colors().iter().map(|&c| TERNARY_CODE[c as usize]).collect();
        for pos in 0..2 {
            out.push(EdgeColoring::new(rounds.n(), 3, words.iter().map(|w| w[pos]).collect())?);
        }
    }
    ColoringRounds::new(rounds.n(), 3, out)
}

/// Whether every three codewords are pairwise distinct in some position.
pub fn is_trifferent_code(code: &[[Color; 2]]) -> Verdict<[usize; 3]> {
    for a in 0..code.len() {
        for b in a + 1..code.len() {
            for c in b + 1..code.len() {
                let separated = (0..2).any(|i| {
                    let (x, y, z) = (code[a][i], code[b][i], code[c][i]);
                    x != y && y != z && x != z
                });
                if !separated {
                    return Verdict::Fail([a, b, c]);
                }
            }
        }
    }
    Verdict::Pass
}

/// Coordinates at which exactly two of the four labels carry a 1, as a mask.
#[inline]
fn two_of_four_mask(a: u64, b: u64, c: u64, d: u64) -> u64 {
    (a & b & !c & !d)
        | (a & c & !b & !d)
        | (a & d & !b & !c)
        | (b & c & !a & !d)
        | (b & d & !a & !c)
        | (c & d & !a & !b)
}

/// Checks that any four labels have a coordinate where exactly two of them
/// read 1. Reports the lexicographically first quadruple that fails.
pub fn has_two_ones_of_four_property(lab: &BinaryLabeling) -> Verdict<[Vertex; 4]> {
    let l = lab.labels();
    let n = l.len();
    (0..n)
        .into_par_iter()
        .find_map_first(|a| {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if two_of_four_mask(l[a], l[b], l[c], l[d]) == 0 {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
            None
        })
        .into()
}

/// One three-color round per coordinate: blue for a shared 0, green for a
/// shared 1, and a single mixed color when the labels differ.
pub fn three_color_rounds_from_labels(lab: &BinaryLabeling) -> Result<ColoringRounds> {
    if let Verdict::Fail(quadruple) = has_two_ones_of_four_property(lab) {
        return Err(Error::LabelProperty { quadruple });
    }
    let n = lab.n();
    let rounds = (0..lab.t())
        .map(|i| {
            EdgeColoring::from_fn(n, 3, |u, v| match (lab.bit(u, i), lab.bit(v, i)) {
                (0, 0) => BLUE,
                (1, 1) => GREEN,
                _ => MIXED,
            })
        })
        .collect::<Result<_>>()?;
    ColoringRounds::new(n, 3, rounds)
}

/// Trivial lower bound `⌈log₃(n-1)⌉` on the number of three-color rounds:
/// the `n-1` edges at a vertex must pairwise differ in some round.
pub fn rounds_lower_bound(n: usize) -> u32 {
    let mut r = 0;
    let mut reach = 1usize;
    while reach < n.saturating_sub(1) {
        reach = reach.saturating_mul(3);
        r += 1;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundsSummary {
    pub n: usize,
    pub rounds: usize,
    pub palette: usize,
}

impl From<&ColoringRounds> for RoundsSummary {
    fn from(r: &ColoringRounds) -> Self {
        RoundsSummary {
            n: r.n(),
            rounds: r.len(),
            palette: r.palette(),
        }
    }
}
