//! Exhaustive backtracking oracles for the extremal coloring parameters at
//! small `n`:
//!
//! * `b(n, F)`: fewest colors with no monochromatic copy of `F`;
//! * `a(n, F)`: fewest colors with a rainbow copy of `F` on every subset;
//! * `g(n, F)`: fewest colors doing both;
//! * `f(n, 4, q)`: fewest colors giving every quadruple at least `q` colors;
//! * `p(n)`: fewest three-color rounds giving every quadruple a rainbow `P4`
//!   in some round;
//! * Ramsey feasibility: does a `k`-coloring of `K_n` avoid monochromatic
//!   triangles?
//!
//! The search assigns the star of vertex 0 first, then the remaining edges
//! in colex order. Colors are introduced in increasing order, and in the
//! first round the star colors are non-decreasing. Every coloring can be
//! brought into that form by relabeling vertices `1..n` and colors, so the
//! pruning never loses a solution.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::colorings::ColoringRounds;
use crate::error::{Error, Result};
use crate::graph::{edge_count, pair_index, subsets, Color, EdgeColoring, PatternKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest `n` the oracle will attempt.
    pub max_vertices: usize,
    /// Largest color count (or round count) explored before giving up.
    pub max_colors: usize,
    pub node_cap: u64,
    pub time_cap: Duration,
}

impl SearchBudget {
    pub fn new(
        max_vertices: usize,
        max_colors: usize,
        node_cap: u64,
        time_cap: Duration,
    ) -> Result<Self> {
        if max_vertices == 0 || max_colors == 0 || node_cap == 0 || time_cap.is_zero() {
            return Err(Error::invalid("search budget caps must be positive"));
        }
        Ok(SearchBudget {
            max_vertices,
            max_colors,
            node_cap,
            time_cap,
        })
    }

    /// Default guards for each oracle.
    pub fn default_for(param: Parameter) -> Self {
        let (max_vertices, max_colors) = match param {
            Parameter::B(PatternKind::K3) => (6, 3),
            Parameter::B(_) => (9, 8),
            Parameter::G(_) | Parameter::A(_) => (7, 8),
            Parameter::F { .. } => (8, 16),
            Parameter::P => (5, 4),
            Parameter::Ramsey { .. } => (16, 3),
        };
        SearchBudget {
            max_vertices,
            max_colors,
            node_cap: 2_000_000_000,
            time_cap: Duration::from_secs(300),
        }
    }

    pub fn with_time_cap(mut self, cap: Duration) -> Self {
        self.time_cap = cap;
        self
    }

    pub fn with_node_cap(mut self, cap: u64) -> Self {
        self.node_cap = cap;
        self
    }
}

/// Which extremal parameter a search computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parameter {
    B(PatternKind),
    G(PatternKind),
    A(PatternKind),
    F { q: usize },
    P,
    Ramsey { k: usize },
}

impl Parameter {
    pub fn name(&self) -> &'static str {
        match self {
            Parameter::B(_) => "b",
            Parameter::G(_) => "g",
            Parameter::A(_) => "a",
            Parameter::F { .. } => "f",
            Parameter::P => "p",
            Parameter::Ramsey { .. } => "ramsey",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub parameter: Parameter,
    pub n: usize,
    /// The minimal color count (rounds for `p`).
    pub value: usize,
    /// Colorings achieving `value`; a single round except for `p`.
    pub witness: ColoringRounds,
    pub nodes: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Feasibility {
    pub feasible: bool,
    pub witness: Option<EdgeColoring>,
    pub nodes: u64,
    pub seconds: f64,
}

/// What a completed subset must satisfy.
#[derive(Clone, Copy, Debug)]
enum Rule {
    NoMonochromatic(PatternKind),
    Rainbow(PatternKind),
    Caring(PatternKind),
    MinColors(usize),
}

impl Rule {
    fn subset_size(self) -> usize {
        match self {
            Rule::NoMonochromatic(k) | Rule::Rainbow(k) | Rule::Caring(k) => k.vertex_count(),
            Rule::MinColors(_) => 4,
        }
    }

    /// `cols[r]` holds the subset's edge colors in round `r`; the subset
    /// passes when some round satisfies the rule.
    fn holds(self, cols: &[[Color; 6]]) -> bool {
        cols.iter().any(|c| self.holds_single(c))
    }

    fn holds_single(self, c: &[Color; 6]) -> bool {
        let mono = |k: PatternKind| {
            k.local_copies().iter().any(|t| {
                c[t[0] as usize] == c[t[1] as usize] && c[t[1] as usize] == c[t[2] as usize]
            })
        };
        let rainbow = |k: PatternKind| {
            k.local_copies().iter().any(|t| {
                let (x, y, z) = (c[t[0] as usize], c[t[1] as usize], c[t[2] as usize]);
                x != y && y != z && x != z
            })
        };
        match self {
            Rule::NoMonochromatic(k) => !mono(k),
            Rule::Rainbow(k) => rainbow(k),
            Rule::Caring(k) => !mono(k) && rainbow(k),
            Rule::MinColors(q) => (0..6).filter(|&i| !c[..i].contains(&c[i])).count() >= q,
        }
    }
}

struct Search {
    n: usize,
    k: usize,
    rounds: usize,
    rule: Rule,
    /// Edge ids in assignment order.
    order: Vec<usize>,
    /// Subsets (as local edge lists) completed when position `i` is assigned.
    completes: Vec<Vec<[usize; 6]>>,
    /// `colors[r * m + e]`.
    colors: Vec<Color>,
    /// Per-round largest color used so far, at each position.
    max_used: Vec<i32>,
    /// Optional cap on the degree of any vertex inside one color class.
    degree_cap: Option<u32>,
    degree: Vec<u32>,
    star_len: usize,
    nodes: u64,
    node_cap: u64,
    deadline: Instant,
    started: Instant,
    exceeded: bool,
}

impl Search {
    fn new(n: usize, k: usize, rounds: usize, rule: Rule, degree_cap: Option<u32>) -> Self {
        let m = edge_count(n);
        let mut order: Vec<usize> = (1..n).map(|v| pair_index(0, v)).collect();
        let star_len = order.len();
        for e in 0..m {
            if !order.contains(&e) {
                order.push(e);
            }
        }
        let mut position = vec![0; m];
        for (i, &e) in order.iter().enumerate() {
            position[e] = i;
        }
        let mut completes = vec![Vec::new(); m];
        let r = rule.subset_size();
        if n >= r {
            for s in subsets(n, r).expect("n >= r") {
                let edges = s.edges();
                let mut local = [0; 6];
                local[..edges.len()].copy_from_slice(&edges);
                let last = edges.iter().map(|&e| position[e]).max().expect("nonempty");
                completes[last].push(local);
            }
        }
        Search {
            n,
            k,
            rounds,
            rule,
            order,
            completes,
            colors: vec![0; m * rounds],
            max_used: vec![-1; rounds],
            degree_cap,
            degree: vec![0; rounds * n * k],
            star_len,
            nodes: 0,
            node_cap: u64::MAX,
            deadline: Instant::now(),
            started: Instant::now(),
            exceeded: false,
        }
    }

    fn run(&mut self, budget: &SearchBudget, nodes_so_far: u64) -> Result<Option<Vec<EdgeColoring>>> {
        self.node_cap = budget.node_cap.saturating_sub(nodes_so_far);
        self.started = Instant::now();
        self.deadline = self.started + budget.time_cap;
        let found = self.extend(0, 0);
        if self.exceeded {
            return Err(Error::BudgetExceeded {
                nodes: nodes_so_far + self.nodes,
                seconds: self.started.elapsed().as_secs_f64(),
            });
        }
        if !found {
            return Ok(None);
        }
        let m = edge_count(self.n);
        let rounds = (0..self.rounds)
            .map(|r| EdgeColoring::new(self.n, self.k, self.colors[r * m..(r + 1) * m].to_vec()))
            .collect::<Result<_>>()?;
        Ok(Some(rounds))
    }

    fn extend(&mut self, pos: usize, round: usize) -> bool {
        let m = self.order.len();
        if pos == m {
            return true;
        }
        let (next_pos, next_round) = if round + 1 == self.rounds {
            (pos + 1, 0)
        } else {
            (pos, round + 1)
        };
        let e = self.order[pos];
        let (u, v) = crate::graph::edge_endpoints(e);
        let prev_max = self.max_used[round];
        let mut lo = 0;
        let mut hi = (prev_max + 1).min(self.k as i32 - 1);
        if round == 0 && pos < self.star_len && pos > 0 {
            let prev = self.colors[self.order[pos - 1]] as i32;
            lo = prev;
            hi = hi.min(prev + 1);
        }
        for c in lo..=hi {
            self.nodes += 1;
            if self.nodes & 0xfff == 0 && Instant::now() > self.deadline {
                self.exceeded = true;
            }
            if self.nodes > self.node_cap {
                self.exceeded = true;
            }
            if self.exceeded {
                return false;
            }
            let color = c as Color;
            let du = (round * self.n + u) * self.k + c as usize;
            let dv = (round * self.n + v) * self.k + c as usize;
            if let Some(cap) = self.degree_cap {
                if self.degree[du] >= cap || self.degree[dv] >= cap {
                    continue;
                }
            }
            self.colors[round * m + e] = color;
            self.degree[du] += 1;
            self.degree[dv] += 1;
            self.max_used[round] = prev_max.max(c);
            let ok = round + 1 < self.rounds || self.subsets_ok(pos);
            if ok && self.extend(next_pos, next_round) {
                return true;
            }
            self.degree[du] -= 1;
            self.degree[dv] -= 1;
            self.max_used[round] = prev_max;
            if self.exceeded {
                return false;
            }
        }
        false
    }

    fn subsets_ok(&self, pos: usize) -> bool {
        let m = self.order.len();
        let width = edge_count(self.rule.subset_size());
        let mut cols = vec![[0 as Color; 6]; self.rounds];
        self.completes[pos].iter().all(|edges| {
            for (r, c) in cols.iter_mut().enumerate() {
                for i in 0..width {
                    c[i] = self.colors[r * m + edges[i]];
                }
            }
            self.rule.holds(&cols)
        })
    }
}

fn check_guard(n: usize, budget: &SearchBudget, min_n: usize) -> Result<()> {
    if n < min_n {
        return Err(Error::invalid(format!("n = {n} is below the minimum {min_n}")));
    }
    if n > budget.max_vertices {
        return Err(Error::invalid(format!(
            "n = {n} exceeds the configured guard of {} vertices",
            budget.max_vertices
        )));
    }
    Ok(())
}

/// Smallest color count (starting at 1) for which `rule` is satisfiable.
fn minimize(
    param: Parameter,
    n: usize,
    rounds_for: impl Fn(usize) -> (usize, usize),
    rule: Rule,
    degree_cap: Option<u32>,
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    let mut nodes = 0;
    for value in 1..=budget.max_colors {
        let (k, rounds) = rounds_for(value);
        let mut search = Search::new(n, k, rounds, rule, degree_cap);
        let remaining = budget.time_cap.saturating_sub(start.elapsed());
        if remaining.is_zero() {
            break;
        }
        let found = search.run(&budget.with_time_cap(remaining), nodes)?;
        nodes += search.nodes;
        if let Some(witness) = found {
            return Ok(SearchOutcome {
                parameter: param,
                n,
                value,
                witness: ColoringRounds::new(n, k, witness)?,
                nodes,
                seconds: start.elapsed().as_secs_f64(),
            });
        }
    }
    Err(Error::BudgetExceeded {
        nodes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// `b(n, F)`.
pub fn exact_b(n: usize, kind: PatternKind, budget: &SearchBudget) -> Result<SearchOutcome> {
    check_guard(n, budget, kind.vertex_count())?;
    let cap = (kind == PatternKind::K13).then_some(2);
    minimize(
        Parameter::B(kind),
        n,
        |k| (k, 1),
        Rule::NoMonochromatic(kind),
        cap,
        budget,
    )
}

/// `g(n, F)`.
pub fn exact_g(n: usize, kind: PatternKind, budget: &SearchBudget) -> Result<SearchOutcome> {
    check_guard(n, budget, kind.vertex_count())?;
    let cap = (kind == PatternKind::K13).then_some(2);
    minimize(Parameter::G(kind), n, |k| (k, 1), Rule::Caring(kind), cap, budget)
}

/// `a(n, F)`.
pub fn exact_a(n: usize, kind: PatternKind, budget: &SearchBudget) -> Result<SearchOutcome> {
    check_guard(n, budget, kind.vertex_count())?;
    minimize(Parameter::A(kind), n, |k| (k, 1), Rule::Rainbow(kind), None, budget)
}

/// `f(n, p, q)` for `p = 4`.
pub fn exact_f(n: usize, p: usize, q: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    if p != 4 {
        return Err(Error::invalid(format!("only p = 4 is supported, got {p}")));
    }
    if !(3..=6).contains(&q) {
        return Err(Error::invalid(format!("q must be in 3..=6, got {q}")));
    }
    check_guard(n, budget, 4)?;
    minimize(Parameter::F { q }, n, |k| (k, 1), Rule::MinColors(q), None, budget)
}

/// `p(n)`: the value is a round count; every round uses three colors.
pub fn exact_p(n: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    check_guard(n, budget, 4)?;
    minimize(Parameter::P, n, |r| (3, r), Rule::Rainbow(PatternKind::P4), None, budget)
}

/// Upper bound on a vertex's degree inside one class of a triangle-free
/// `k`-coloring: its neighbors in that class span a triangle-free
/// `(k-1)`-coloring, so there are fewer than `R(3; k-1)` of them.
fn ramsey_degree_cap(k: usize) -> Option<u32> {
    match k {
        1 => Some(1),
        2 => Some(2),
        3 => Some(5),
        4 => Some(16),
        _ => None,
    }
}

/// Whether some `k`-coloring of `K_n` has no monochromatic triangle.
pub fn ramsey_feasible(n: usize, k: usize, budget: &SearchBudget) -> Result<Feasibility> {
    check_guard(n, budget, 1)?;
    if k == 0 || k > budget.max_colors {
        return Err(Error::invalid(format!(
            "k = {k} outside 1..={}",
            budget.max_colors
        )));
    }
    let start = Instant::now();
    if n < 3 {
        return Ok(Feasibility {
            feasible: true,
            witness: Some(EdgeColoring::new(n, k, vec![0; edge_count(n)])?),
            nodes: 0,
            seconds: 0.0,
        });
    }
    let mut search = Search::new(
        n,
        k,
        1,
        Rule::NoMonochromatic(PatternKind::K3),
        ramsey_degree_cap(k),
    );
    let found = search.run(budget, 0)?;
    Ok(Feasibility {
        feasible: found.is_some(),
        witness: found.map(|mut r| r.remove(0)),
        nodes: search.nodes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// `b(n, K3) = min{k : R(3;k) > n}`, via [`ramsey_feasible`].
pub fn b_triangle_via_ramsey(n: usize, budget: &SearchBudget) -> Result<usize> {
    for k in 1..=budget.max_colors {
        if ramsey_feasible(n, k, budget)?.feasible {
            return Ok(k);
        }
    }
    Err(Error::BudgetExceeded {
        nodes: 0,
        seconds: 0.0,
    })
}
