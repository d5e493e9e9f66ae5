//! End-to-end checks for the hardness gadgets: module and gadget geometry,
//! the behavioral claims behind them, the domination-to-coloring reduction,
//! and verdict agreement between the reduced instance and the source problem.

use eck_core::formats::RbdsInstance;
use eck_core::gadgets::{
    build_blue_gadget, build_module, build_red_gadget, delete_and_color, rbds_brute_force,
    reduce_rbds, verify_claims, MODULE_EDGES,
};
use eck_core::WorkBudget;

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

/// Random domination instance where every blue vertex has a red neighbor.
fn random_rbds(rng: &mut XorShift, reds: usize, blues: usize, k: usize) -> RbdsInstance {
    let mut edges = Vec::new();
    for b in 0..blues {
        let r = rng.below(reds);
        edges.push((r, b));
    }
    for r in 0..reds {
        if !edges.iter().any(|&(er, _)| er == r) {
            edges.push((r, rng.below(blues)));
        }
    }
    for _ in 0..reds {
        let (r, b) = (rng.below(reds), rng.below(blues));
        if !edges.contains(&(r, b)) {
            edges.push((r, b));
        }
    }
    edges.sort_unstable();
    RbdsInstance { red_count: reds, blue_count: blues, edges, k }
}

#[test]
fn module_geometry() {
    let (g, carriers) = build_module();
    assert_eq!(g.n(), 7);
    assert_eq!(g.m(), 8);
    assert_eq!(g.edges(), &MODULE_EDGES);
    assert_eq!(carriers, [0, 1, 2, 3, 4]);
    // Carriers have one free half-edge each; the two inner vertices are full.
    for c in carriers {
        assert_eq!(g.degree(c), 2);
    }
    assert_eq!(g.degree(5), 3);
    assert_eq!(g.degree(6), 3);
}

#[test]
fn red_gadget_module_count_scales_with_degree() {
    let red = build_red_gadget(4, false);
    assert_eq!(red.module_count, 10);
    assert_eq!(red.pairs.len(), 5, "pair 0 plus one output pair per degree");
    let d = 4;
    assert_eq!(red.graph.m(), 22 * d + 22);
    assert_eq!(red.graph.n(), 14 * (d + 1) + 1 + 2 * d);
}

#[test]
fn modified_red_gadget_splits_the_terminal() {
    let normal = build_red_gadget(1, false);
    let modified = build_red_gadget(1, true);
    // Splitting r into r1/r2 adds one vertex, keeps the edge count.
    assert_eq!(modified.graph.n(), normal.graph.n() + 1);
    assert_eq!(modified.graph.m(), normal.graph.m());
}

#[test]
fn blue_gadget_module_count_equals_degree() {
    let blue = build_blue_gadget(3);
    assert_eq!(blue.module_count, 3);
    assert_eq!(blue.inputs.len(), 3);
    assert_eq!(blue.cycle_edges.len(), 2 * 3 + 1, "odd cycle of length 2d+1");
    assert_eq!(blue.graph.m(), 15 * 3 + 2);
    assert_eq!(blue.graph.n(), 12 * 3 + 2);
}

#[test]
fn all_behavioral_claims_hold() {
    let results = verify_claims(&mut WorkBudget::unlimited()).unwrap();
    assert_eq!(results.len(), 6);
    for r in &results {
        assert!(r.pass, "claim {} failed: {}", r.id, r.description);
        assert!(r.nodes > 0);
    }
    // The closed module's census: 36 proper 3-colorings.
    assert_eq!(results[0].colorings, 36);
}

#[test]
fn single_edge_reduction_has_the_expected_shape() {
    let inst = RbdsInstance { red_count: 1, blue_count: 1, edges: vec![(0, 0)], k: 1 };
    let layout = reduce_rbds(&inst);
    let g = &layout.mecs.graph;
    assert_eq!(g.n(), 41);
    assert_eq!(g.m(), 59);
    assert_eq!(layout.mecs.p, 3);
    assert_eq!(layout.mecs.l, 58);
    assert_eq!(layout.reds.len(), 1);
    assert_eq!(layout.blues.len(), 1);
    assert_eq!(layout.identifications.len(), 1);
    // Red side: d=1 means 4 modules; blue side: d=1 means 1 module and a
    // 3-cycle.
    assert_eq!(layout.reds[0].modules.len(), 4);
    assert_eq!(layout.blues[0].modules.len(), 1);
    assert_eq!(layout.blues[0].cycle_edges.len(), 3);
    // Identification edges are real edges of the output graph.
    let (e1, e2) = layout.identifications[0].edges;
    assert!(e1 < g.m() && e2 < g.m());
}

#[test]
fn single_edge_reduction_mirrors_the_domination_verdict() {
    let inst = RbdsInstance { red_count: 1, blue_count: 1, edges: vec![(0, 0)], k: 1 };
    assert!(rbds_brute_force(&inst));
    let layout = reduce_rbds(&inst);
    let g = &layout.mecs.graph;

    // Deleting one edge (= meeting l = m − 1) makes the graph 3-colorable.
    let (yes, nodes) = delete_and_color(g, 1, &mut WorkBudget::unlimited()).unwrap();
    assert!(yes);
    assert_eq!(nodes, 39_559);

    // With no deletion allowed the graph is not 3-edge-colorable.
    let (no, nodes) = delete_and_color(g, 0, &mut WorkBudget::unlimited()).unwrap();
    assert!(!no);
    assert_eq!(nodes, 31_665);
}

#[test]
fn reduction_size_is_linear_in_the_source() {
    let mut rng = XorShift(0x3243f6a8885a308d);
    for _ in 0..10 {
        let reds = 1 + rng.below(3);
        let blues = 1 + rng.below(3);
        let inst = random_rbds(&mut rng, reds, blues, 1);
        let layout = reduce_rbds(&inst);
        let m = layout.mecs.graph.m();
        let e = inst.edges.len();
        assert_eq!(m, 35 * e + 22 * reds + 2 * blues);
        assert!(m <= 67 * e, "m={m} exceeds 67·|E|={}", 67 * e);
        assert_eq!(layout.mecs.l, m - inst.k);
        assert_eq!(layout.reds.len(), reds);
        assert_eq!(layout.blues.len(), blues);
        assert_eq!(layout.identifications.len(), e);
    }
}

#[test]
fn taking_every_red_vertex_always_dominates() {
    let mut rng = XorShift(0x452821e638d01377);
    for _ in 0..10 {
        let reds = 1 + rng.below(4);
        let blues = 1 + rng.below(4);
        let mut inst = random_rbds(&mut rng, reds, blues, 0);
        inst.k = reds;
        assert!(rbds_brute_force(&inst));
    }
}

#[test]
fn layouts_serialize_to_json() {
    let inst = RbdsInstance { red_count: 1, blue_count: 2, edges: vec![(0, 0), (0, 1)], k: 1 };
    let layout = reduce_rbds(&inst);
    let json = serde_json::to_value(&layout).unwrap();
    assert!(json["mecs"]["l"].is_number());
    assert_eq!(json["reds"].as_array().unwrap().len(), 1);
    assert_eq!(json["blues"].as_array().unwrap().len(), 2);
    assert_eq!(json["identifications"].as_array().unwrap().len(), 2);
    assert!(json["reds"][0]["anchor_edges"].is_array());
    assert!(json["blues"][0]["pendant_edge"].is_number());
}
