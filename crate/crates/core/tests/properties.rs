use std::collections::BTreeSet;
use std::time::Duration;

use caring_core::colorings::{
    binary_four_color_rounds, encode_rounds_to_ternary, hamiltonian_decomposition_coloring,
    paired_one_factorization_coloring, ColoringRounds,
};
use caring_core::designs::{is_good_kts, kts_coloring};
use caring_core::extremal::{
    exact_a, exact_b, exact_f, exact_g, exact_p, ramsey_feasible, Parameter, SearchBudget,
    SearchOutcome,
};
use caring_core::graph::{
    edge_count, pair_index, pattern_copies, subsets, Color, EdgeColoring, PatternKind,
    SimpleGraph,
};
use caring_core::io::read_kts;
use caring_core::shannon::{
    is_clique, max_clique, mycielskian, or_power, verify_certificate, CliqueBudget,
    CliqueCertificate, GraphDescriptor, BaseGraph,
};
use caring_core::verify::{
    is_caring, mono_free_scan, mono_free_structural, monochromatic_free, rainbow_everywhere,
    rounds_rainbow_p4, Verdict,
};
use proptest::collection::vec;
use proptest::prelude::*;

const KINDS: [PatternKind; 3] = [PatternKind::K3, PatternKind::K13, PatternKind::P4];

fn random_coloring() -> impl Strategy<Value = EdgeColoring> {
    (4usize..=10, 1usize..=8).prop_flat_map(|(n, k)| {
        vec(0..k as Color, edge_count(n))
            .prop_map(move |colors| EdgeColoring::new(n, k, colors).unwrap())
    })
}

/// A construction with a few edges recolored, so that both verdicts occur.
fn perturbed_construction() -> impl Strategy<Value = EdgeColoring> {
    (4usize..=10, vec((any::<prop::sample::Index>(), 0..5u16), 0..3)).prop_map(|(n, edits)| {
        let base = if n % 2 == 1 {
            hamiltonian_decomposition_coloring(n).unwrap()
        } else {
            paired_one_factorization_coloring(n).unwrap()
        };
        let k = base.k();
        let mut colors = base.colors().to_vec();
        for (idx, c) in edits {
            let e = idx.index(colors.len());
            colors[e] = c % k as Color;
        }
        EdgeColoring::new(n, k, colors).unwrap()
    })
}

fn check_agreement(c: &EdgeColoring) -> Result<(), TestCaseError> {
    for kind in KINDS {
        let scan = mono_free_scan(c, kind);
        prop_assert_eq!(mono_free_structural(c, kind), scan.is_none(), "{:?} {:?}", kind, c);
        if let Some(w) = scan {
            prop_assert!(w.reproduces(c, kind));
        }
        let report = monochromatic_free(c, kind);
        if let Some(w) = &report.witness {
            prop_assert!(w.reproduces(c, kind));
        }
        let rainbow = rainbow_everywhere(c, kind);
        if let Some(w) = &rainbow.witness {
            prop_assert!(w.reproduces(c, kind));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shortcut_matches_scan_on_random_colorings(c in random_coloring()) {
        check_agreement(&c)?;
    }

    #[test]
    fn shortcut_matches_scan_near_constructions(c in perturbed_construction()) {
        check_agreement(&c)?;
    }

    #[test]
    fn mycielskian_keeps_triangle_freeness(
        n in 1usize..=8,
        pairs in vec((0usize..8, 0usize..8), 0..28),
    ) {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in pairs {
            let (u, v) = (u % n, v % n);
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let closes = (0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w));
            if !closes {
                g.add_edge(u, v).unwrap();
            }
        }
        let m = mycielskian(&g);
        prop_assert_eq!(m.n(), 2 * n + 1);
        for a in 0..m.n() {
            for b in a + 1..m.n() {
                for c in b + 1..m.n() {
                    prop_assert!(!(m.has_edge(a, b) && m.has_edge(b, c) && m.has_edge(a, c)));
                }
            }
        }
    }

    #[test]
    fn clique_matches_brute_force(n in 1usize..=14, density in 0.0f64..1.0, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let g = SimpleGraph::from_fn(n, |_, _| rng.gen_bool(density));
        let r = max_clique(&g, &CliqueBudget::default());
        prop_assert!(r.exact);
        prop_assert!(is_clique(&g, &r.vertices));
        let best = (1u32..1 << n)
            .filter(|&mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                is_clique(&g, &vs)
            })
            .map(u32::count_ones)
            .max()
            .unwrap();
        prop_assert_eq!(r.size(), best as usize);
    }

    #[test]
    fn induced_subgraph_power_clique_is_monotone(
        n in 2usize..=6,
        density in 0.2f64..0.9,
        seed in any::<u64>(),
        keep in vec(any::<bool>(), 6),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let g = SimpleGraph::from_fn(n, |_, _| rng.gen_bool(density));
        let verts: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        prop_assume!(!verts.is_empty());
        let f = g.induced_subgraph(&verts);
        for t in 1..=2 {
            let wf = max_clique(&or_power(&f, t, 100).unwrap(), &CliqueBudget::default()).size();
            let wg = max_clique(&or_power(&g, t, 100).unwrap(), &CliqueBudget::default()).size();
            prop_assert!(wf <= wg);
        }
    }
}

fn budget(p: Parameter) -> SearchBudget {
    SearchBudget::default_for(p).with_time_cap(Duration::from_secs(120))
}

/// Number of distinct colors among the six edges of `q`, by direct lookup.
fn quad_colors(c: &EdgeColoring, q: &[usize]) -> usize {
    let mut seen = BTreeSet::new();
    for i in 0..4 {
        for j in i + 1..4 {
            seen.insert(c.color(q[i], q[j]));
        }
    }
    seen.len()
}

/// Every ordering of `q` read as a path; true if one has three colors.
fn has_rainbow_path(c: &EdgeColoring, q: &[usize]) -> bool {
    let mut found = false;
    for a in 0..4 {
        for b in 0..4 {
            for d in 0..4 {
                if a == b || a == d || b == d {
                    continue;
                }
                let e = 6 - a - b - d;
                let x = c.color(q[a], q[b]);
                let y = c.color(q[b], q[d]);
                let z = c.color(q[d], q[e]);
                found |= x != y && y != z && x != z;
            }
        }
    }
    found
}

fn verify_outcome(o: &SearchOutcome, kind: PatternKind) {
    let w = &o.witness.rounds()[0];
    let used = w.k() - w.unused_colors().len();
    assert!(used <= o.value);
    match o.parameter {
        Parameter::B(_) => assert!(monochromatic_free(w, kind).passed),
        Parameter::A(_) => assert!(rainbow_everywhere(w, kind).passed),
        Parameter::G(_) => assert!(is_caring(w, kind).passed),
        _ => unreachable!(),
    }
}

#[test]
fn oracle_b_matches_formula_and_constructions() {
    for n in 4..=7 {
        let o = exact_b(n, PatternKind::K13, &budget(Parameter::B(PatternKind::K13))).unwrap();
        assert_eq!(o.value, (n - 1).div_ceil(2), "n = {n}");
        let construction = if n % 2 == 1 {
            hamiltonian_decomposition_coloring(n).unwrap()
        } else {
            paired_one_factorization_coloring(n).unwrap()
        };
        assert_eq!(construction.k(), o.value);
        assert!(monochromatic_free(&construction, PatternKind::K13).passed);
    }
}

#[test]
fn oracle_values_are_consistent() {
    for kind in KINDS {
        let mut prev = (0, 0, 0);
        for n in 4..=7 {
            let g = exact_g(n, kind, &budget(Parameter::G(kind))).unwrap();
            let a = exact_a(n, kind, &budget(Parameter::A(kind))).unwrap();
            verify_outcome(&g, kind);
            verify_outcome(&a, kind);
            let b = if kind == PatternKind::K3 && n > 6 {
                None
            } else {
                let b = exact_b(n, kind, &budget(Parameter::B(kind))).unwrap();
                verify_outcome(&b, kind);
                Some(b.value)
            };
            assert!(g.value >= a.value.max(b.unwrap_or(0)), "{kind} n = {n}");
            assert!(g.value >= prev.0 && a.value >= prev.1 && b.unwrap_or(prev.2) >= prev.2);
            prev = (g.value, a.value, b.unwrap_or(prev.2));
        }
    }
}

#[test]
fn oracle_f_witnesses_and_monotonicity() {
    for q in 3..=6 {
        let mut prev = 0;
        for n in 4..=6 {
            let o = exact_f(n, 4, q, &budget(Parameter::F { q })).unwrap();
            let w = &o.witness.rounds()[0];
            for s in subsets(n, 4).unwrap() {
                assert!(quad_colors(w, s.as_slice()) >= q);
            }
            assert!(o.value >= prev);
            prev = o.value;
        }
    }
    let a5 = exact_a(5, PatternKind::K13, &budget(Parameter::A(PatternKind::K13))).unwrap();
    let f5 = exact_f(5, 4, 4, &budget(Parameter::F { q: 4 })).unwrap();
    assert!(a5.value <= f5.value);
    assert_eq!(exact_f(6, 4, 6, &budget(Parameter::F { q: 6 })).unwrap().value, 15);
}

#[test]
fn oracle_p_bounds() {
    let a5 = exact_a(5, PatternKind::P4, &budget(Parameter::A(PatternKind::P4))).unwrap();
    for n in 4..=5 {
        let p = exact_p(n, &budget(Parameter::P)).unwrap();
        assert!(rounds_rainbow_p4(&p.witness).passed);
        assert!(p.witness.palette() <= 3);
        // the product of p three-colorings is one 3^p-coloring with a rainbow P4 on every quadruple
        assert!(3usize.pow(p.value as u32) >= a5.value);
    }
}

#[test]
fn ramsey_is_monotone_in_n() {
    for k in 1..=2 {
        let answers: Vec<bool> = (1..=7)
            .map(|n| {
                let f = ramsey_feasible(n, k, &budget(Parameter::Ramsey { k })).unwrap();
                if let Some(w) = &f.witness {
                    assert!(monochromatic_free(w, PatternKind::K3).passed);
                }
                assert_eq!(f.feasible, f.witness.is_some());
                f.feasible
            })
            .collect();
        let first_false = answers.iter().position(|&x| !x).unwrap();
        assert!(answers[first_false..].iter().all(|&x| !x));
        assert_eq!(first_false + 1, if k == 1 { 3 } else { 6 });
    }
}

#[test]
fn kts_rainbow_fails_exactly_on_bad_quadruples() {
    let ks = read_kts(include_str!("data/kts15_pg32.kts")).unwrap();
    let c = kts_coloring(&ks).unwrap();
    let mut bad = Vec::new();
    for s in subsets(15, 4).unwrap() {
        let q = s.as_slice();
        let colors = quad_colors(&c, q);
        let matchings = [
            (c.color(q[0], q[1]), c.color(q[2], q[3])),
            (c.color(q[0], q[2]), c.color(q[1], q[3])),
            (c.color(q[0], q[3]), c.color(q[1], q[2])),
        ];
        let three_matchings = matchings.iter().all(|(x, y)| x == y)
            && matchings[0].0 != matchings[1].0
            && matchings[0].0 != matchings[2].0
            && matchings[1].0 != matchings[2].0;
        assert_eq!(!has_rainbow_path(&c, q), three_matchings, "{q:?}");
        assert_eq!(colors < 4, three_matchings, "{q:?}");
        if three_matchings {
            bad.push([q[0], q[1], q[2], q[3]]);
        }
    }
    assert_eq!(bad.len(), 14);
    assert_eq!(is_good_kts(&ks).unwrap(), Verdict::Fail(bad[0]));
    let report = rainbow_everywhere(&c, PatternKind::P4);
    assert!(!report.passed);
    assert_eq!(report.witness.unwrap().subset().as_slice(), &bad[0]);
}

#[test]
fn ternary_encoding_preserves_rainbow_paths() {
    for n in [8, 16] {
        let four = binary_four_color_rounds(n).unwrap();
        let three = encode_rounds_to_ternary(&four).unwrap();
        assert_eq!(three.len(), 2 * four.len());
        for s in subsets(n, 4).unwrap() {
            for copy in pattern_copies(PatternKind::P4, s.as_slice()).unwrap() {
                for (r, round) in four.rounds().iter().enumerate() {
                    let rainbow = |c: &EdgeColoring| {
                        let [x, y, z] = copy.edges.map(|e| c.color_at(e));
                        x != y && y != z && x != z
                    };
                    if rainbow(round) {
                        assert!(
                            rainbow(&three.rounds()[2 * r]) || rainbow(&three.rounds()[2 * r + 1])
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn binary_rounds_have_four_witnesses_per_quadruple() {
    for n in [4, 5, 8, 13, 16, 32, 64] {
        let rounds: ColoringRounds = binary_four_color_rounds(n).unwrap();
        let report = rounds_rainbow_p4(&rounds);
        assert!(report.passed, "n = {n}");
        assert!(report.min_rainbow_witnesses.unwrap() >= 4, "n = {n}");
    }
}

#[test]
fn c5_power_cliques_are_supermultiplicative() {
    let c5 = SimpleGraph::cycle(5);
    let omega: Vec<usize> = (1..=3)
        .map(|t| {
            let r = max_clique(&or_power(&c5, t, 1000).unwrap(), &CliqueBudget::default());
            assert!(r.exact);
            r.size()
        })
        .collect();
    assert_eq!(omega, vec![2, 5, 10]);
    assert!(omega[1] >= omega[0] * omega[0]);
    assert!(omega[2] >= omega[0] * omega[1]);
    // ω(C5^4) ≥ ω(C5^2)²: the product of Shannon's clique with itself
    let shannon = CliqueCertificate::shannon_c5();
    let square = shannon.product(&shannon).unwrap();
    assert_eq!(square.size(), 25);
    assert_eq!(verify_certificate(&square).unwrap(), Verdict::Pass);
    for t in 1..=3 {
        assert!((omega[t - 1] as f64).powf(1.0 / t as f64) >= omega[0] as f64 - 1e-12);
    }
}

#[test]
fn solver_cliques_pass_certificate_check() {
    for (base, t) in [("C5", 2), ("C7", 2), ("M(C5)", 2), ("K3", 3)] {
        let d = GraphDescriptor {
            base: base.parse::<BaseGraph>().unwrap(),
            power: t,
        };
        let power = d.power_graph();
        let g = or_power(power.base(), t, 2000).unwrap();
        let r = max_clique(&g, &CliqueBudget::default());
        let cert = CliqueCertificate {
            descriptor: d.clone(),
            vertices: r.vertices.iter().map(|&v| power.sequence(v)).collect(),
        };
        assert_eq!(verify_certificate(&cert).unwrap(), Verdict::Pass, "{d}");
    }
}

#[test]
fn colex_index_is_the_coloring_layout() {
    let c = EdgeColoring::from_fn(6, 15, |u, v| pair_index(u, v) as Color).unwrap();
    assert_eq!(c.colors(), (0..15).collect::<Vec<Color>>().as_slice());
}
