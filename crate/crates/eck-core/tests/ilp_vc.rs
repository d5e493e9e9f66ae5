//! End-to-end checks for the cover-parameterized engine: matching-type
//! enumeration, neighborhood-class bookkeeping, model construction, the
//! exact model solver, witness reconstruction, and full-verdict agreement
//! with the exhaustive solver.

use eck_core::ilp::{
    aux_functions, build_ilp, enumerate_types, reconstruct, render_lp, solve_ilp, solve_via_ilp,
    solve_via_ilp_with, PartialGuess, MAX_TYPES,
};
use eck_core::oracle::solve_exact;
use eck_core::vertex_cover::min_vertex_cover;
use eck_core::{verify_coloring, EckError, Graph, MecsInstance, WorkBudget};

fn p3() -> Graph {
    Graph::from_edges(3, &[(0, 1), (1, 2)])
}

fn k3() -> Graph {
    Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)])
}

fn k4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

fn empty_guess(p: usize) -> PartialGuess {
    PartialGuess { h_prime: vec![], p0: 0, phi_prime: vec![], p }
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn random_graph(rng: &mut XorShift, n: usize, density_pct: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.below(100) < density_pct {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn path_has_the_empty_type_and_one_center_type() {
    let g = p3();
    let types = enumerate_types(&g, &[1]).unwrap();
    assert_eq!(types.len(), 2);
    assert!(types[0].x_prime.is_empty());
    assert!(types[0].slots.is_empty());
    assert_eq!(types[1].x_prime, vec![1]);
    assert_eq!(types[1].slots, vec![vec![1]]);
    assert_eq!(types[1].size(), 1);
    assert!(types[1].is_present(1));
    assert!(!types[1].is_present(0));
}

#[test]
fn empty_cover_leaves_only_the_empty_type() {
    let g = Graph::new(3);
    let types = enumerate_types(&g, &[]).unwrap();
    assert_eq!(types.len(), 1);
    assert_eq!(types[0].size(), 0);
}

#[test]
fn star_leaves_collapse_into_one_class() {
    let g = star(3);
    let types = enumerate_types(&g, &[0]).unwrap();
    assert_eq!(types.len(), 2);
    assert_eq!(types[1].x_prime, vec![0]);
    assert_eq!(types[1].slots, vec![vec![0]]);

    let aux = aux_functions(&g, &[0]);
    assert_eq!(aux.gamma(&[0]), &[1, 2, 3]);
    assert_eq!(aux.false_twins(1), 3);
}

#[test]
fn neighborhood_bookkeeping_on_the_path() {
    let aux = aux_functions(&p3(), &[1]);
    assert_eq!(aux.cover, vec![1]);
    assert_eq!(aux.false_twins(0), 2);
    assert_eq!(aux.false_twins(2), 2);
    assert_eq!(aux.gamma(&[1]), &[0, 2]);
    let types = enumerate_types(&p3(), &[1]).unwrap();
    assert_eq!(aux.nr_nbr_present(0, &types[1]), 1);
    assert_eq!(aux.nr_nbr_present(0, &types[0]), 0);
}

#[test]
fn types_respect_their_structural_constraints() {
    let mut rng = XorShift(0x452821e638d01377);
    for _ in 0..25 {
        let n = 3 + rng.below(5);
        let g = random_graph(&mut rng, n, 50);
        let x = min_vertex_cover(&g);
        if x.len() > 3 {
            continue;
        }
        let aux = aux_functions(&g, &x);
        let types = enumerate_types(&g, &x).unwrap();
        assert!(types.len() <= MAX_TYPES);
        for t in &types {
            assert_eq!(t.x_prime.len(), t.slots.len());
            let mut sorted = t.x_prime.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted, t.x_prime, "x_prime must be ascending and distinct");
            for (&x_v, s) in t.x_prime.iter().zip(&t.slots) {
                assert!(aux.cover.contains(&x_v));
                assert!(s.contains(&x_v), "slot class must contain its cover vertex");
                assert!(!aux.gamma(s).is_empty(), "slot must cite a realized class");
            }
            // no class used beyond its member count
            for (s, members) in &aux.classes {
                let used = t.slots.iter().filter(|sl| *sl == s).count();
                assert!(used <= members.len());
            }
        }
        // all types pairwise distinct
        for i in 0..types.len() {
            for j in (i + 1)..types.len() {
                assert!(types[i] != types[j]);
            }
        }
    }
}

#[test]
fn path_model_solves_to_two_edges() {
    let g = p3();
    let types = enumerate_types(&g, &[1]).unwrap();
    let aux = aux_functions(&g, &[1]);
    let guess = empty_guess(2);
    let model = build_ilp(&guess, &types, &aux);

    assert_eq!(model.variables, vec![(0, 0), (1, 0)]);
    assert_eq!(model.objective, vec![0, 1]);
    assert_eq!(model.var_bound, 2);

    let rhs_of = |label: &str| -> usize {
        model
            .constraints
            .iter()
            .find(|c| c.label.starts_with(label))
            .unwrap_or_else(|| panic!("no {label} row"))
            .rhs
    };
    assert_eq!(rhs_of("deg-cap x=1"), 2);
    assert_eq!(rhs_of("twin-load"), 4);
    assert_eq!(rhs_of("total-matchings"), 2);
    assert_eq!(rhs_of("fresh-colors"), 2);

    let (value, assignment) = solve_ilp(&model);
    assert_eq!(value, 2);
    assert_eq!(assignment, vec![0, 2]);

    let c = reconstruct(&g, &guess, &model, &types, &aux, &assignment).unwrap();
    verify_coloring(&g, &c).unwrap();
    assert_eq!(c.colored_count(), 2);
    assert_ne!(c.get(0), c.get(1), "adjacent edges need distinct colors");
}

#[test]
fn precolored_cover_edges_block_their_color() {
    let g = k3();
    let cover = vec![0, 1];
    let types = enumerate_types(&g, &cover).unwrap();
    let aux = aux_functions(&g, &cover);
    let guess = PartialGuess { h_prime: vec![(0, 1)], p0: 1, phi_prime: vec![1], p: 2 };
    let model = build_ilp(&guess, &types, &aux);

    let clash_rows: Vec<_> = model
        .constraints
        .iter()
        .filter(|c| c.label.starts_with("color-clash"))
        .collect();
    assert!(!clash_rows.is_empty());
    for row in &clash_rows {
        assert_eq!(row.rhs, 0);
        assert_eq!(row.terms.len(), 1);
    }

    // The all-zero assignment keeps exactly the precolored edge.
    let zeros = vec![0; model.variables.len()];
    let c = reconstruct(&g, &guess, &model, &types, &aux, &zeros).unwrap();
    verify_coloring(&g, &c).unwrap();
    assert_eq!(c.colored_count(), 1);
    let e01 = g.edge_index(0, 1).unwrap();
    assert_eq!(c.get(e01), Some(1));
}

#[test]
fn empty_cover_model_is_trivially_zero() {
    let g = Graph::new(3);
    let types = enumerate_types(&g, &[]).unwrap();
    let aux = aux_functions(&g, &[]);
    let model = build_ilp(&empty_guess(2), &types, &aux);
    let (value, _) = solve_ilp(&model);
    assert_eq!(value, 0);
}

#[test]
fn star_reconstruction_prefers_the_lowest_leaves() {
    let g = star(3);
    let types = enumerate_types(&g, &[0]).unwrap();
    let aux = aux_functions(&g, &[0]);
    let guess = empty_guess(1);
    let model = build_ilp(&guess, &types, &aux);
    let (value, assignment) = solve_ilp(&model);
    assert_eq!(value, 1, "one color keeps one star edge");
    let c = reconstruct(&g, &guess, &model, &types, &aux, &assignment).unwrap();
    verify_coloring(&g, &c).unwrap();
    assert_eq!(c.colored_count(), 1);
    assert_eq!(c.get(0), Some(1), "candidates are tried lowest-first");
}

#[test]
fn engine_verdicts_on_named_instances() {
    let yes = solve_via_ilp(&MecsInstance::new(p3(), 2, 2)).unwrap();
    assert!(yes.verdict);
    let w = yes.witness.unwrap();
    verify_coloring(&p3(), &w).unwrap();
    assert_eq!(w.colored_count(), 2);

    assert!(!solve_via_ilp(&MecsInstance::new(k3(), 3, 2)).unwrap().verdict);

    let k4_yes = solve_via_ilp(&MecsInstance::new(k4(), 4, 2)).unwrap();
    assert!(k4_yes.verdict);
    let w = k4_yes.witness.unwrap();
    verify_coloring(&k4(), &w).unwrap();
    assert!(w.colored_count() >= 4);
}

#[test]
fn cover_cap_rejects_dense_graphs() {
    // K4 needs a cover of 3; a cap of 2 must refuse rather than answer.
    let r = solve_via_ilp_with(&MecsInstance::new(k4(), 4, 2), 2, &mut WorkBudget::unlimited());
    match r {
        Err(EckError::Budget(_)) => {}
        other => panic!("expected a cover-cap rejection, got {other:?}"),
    }
}

#[test]
fn lp_dump_lists_types_objective_and_rows() {
    let g = p3();
    let types = enumerate_types(&g, &[1]).unwrap();
    let aux = aux_functions(&g, &[1]);
    let model = build_ilp(&empty_guess(2), &types, &aux);
    let dump = render_lp(&model, &types);

    let lines: Vec<&str> = dump.lines().collect();
    let legend = lines.iter().filter(|l| l.starts_with("# T")).count();
    assert_eq!(legend, 2, "one legend line per type:\n{dump}");
    assert!(lines.iter().any(|l| l.starts_with("max: ")));
    let rows = lines.iter().filter(|l| l.contains("<=")).count();
    assert_eq!(rows, model.constraints.len());
    assert!(dump.contains("Y[T1,a0]"));
}

#[test]
fn engine_agrees_with_the_exhaustive_answer() {
    let mut rng = XorShift(0xbe5466cf34e90c6c);
    let mut checked = 0;
    while checked < 30 {
        let n = 3 + rng.below(4);
        let g = random_graph(&mut rng, n, 45);
        if g.m() == 0 || g.m() > 10 || min_vertex_cover(&g).len() > 3 {
            continue;
        }
        let p = 1 + rng.below(3);
        for l in 0..=g.m() {
            let inst = MecsInstance::new(g.clone(), l, p);
            let want = solve_exact(&inst).unwrap().verdict;
            let got = solve_via_ilp(&inst).unwrap();
            assert_eq!(got.verdict, want, "on {:?} l={l} p={p}", g.edges());
            if got.verdict {
                let w = got.witness.unwrap();
                verify_coloring(&g, &w).unwrap();
                assert!(w.colored_count() >= l);
            }
        }
        checked += 1;
    }
}
