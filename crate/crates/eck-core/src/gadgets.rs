//! Hardness-instance generator: red-blue dominating set → edge-colorable
//! subgraph, built from one 7-vertex inverting module.
//!
//! The module has five hanging half-edges a, b, c, d, e. Over all proper
//! 3-edge-colorings, either a and b agree and {c, d, e} use all three colors,
//! or c and d agree and {a, b, e} do — nothing else is possible, and every
//! such boundary pattern occurs. Red gadgets chain modules into a ring so all
//! their output pairs are forced *unequal*; blue gadgets hang modules off an
//! odd cycle so at least one input pair is forced *equal*. Identifying output
//! pairs with input pairs along the bipartite instance's edges makes the
//! reduced graph 3-colorable after at most k edge deletions exactly when k
//! red vertices dominate all blue ones.
//!
//! All coloring claims are machine-checked by brute force on the смallest
//! gadgets; the wiring below is exactly the wiring those checks validate.

use serde::Serialize;

use crate::budget::WorkBudget;
use crate::error::Result;
use crate::formats::RbdsInstance;
use crate::graph::{Graph, MecsInstance};
use crate::oracle::for_each_combination;

/// Internal wiring of the inverting module over vertices 0..7. Carriers for
/// the hanging edges a, b, c, d, e are vertices 0..5 in that order; 5 and 6
/// are inner. Each vertex has degree 3 once the hanging edges are attached.
pub const MODULE_EDGES: [(usize, usize); 8] = [
    (0, 2),
    (0, 5),
    (1, 3),
    (1, 6),
    (2, 6),
    (3, 5),
    (4, 5),
    (4, 6),
];

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;

/// The standalone module: 7 vertices, 8 edges, plus the ids of the five
/// carrier vertices (a, b, c, d, e) whose hanging edges are still open.
pub fn build_module() -> (Graph, [usize; 5]) {
    (Graph::from_edges(7, &MODULE_EDGES), [A, B, C, D, E])
}

/// Incremental graph assembly with stable vertex and edge ids.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { n: 0, edges: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) -> usize {
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// Appends one module; returns its base id (carriers base..base+4).
    fn module(&mut self) -> usize {
        let base = self.n;
        for _ in 0..7 {
            self.vertex();
        }
        for &(u, v) in &MODULE_EDGES {
            self.edge(base + u, base + v);
        }
        base
    }

    fn graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Red gadget: ring of d+1 cells, each a pair of modules (PM_i, LM_i) glued
/// a–c and b–d, with ring edges LM_i.a–PM_{i+1}.e and LM_i.b–LM_{i+1}.e.
/// `pairs[0]` is the anchored pair (both edges into one terminal r, or split
/// to r1/r2 in the modified variant); pairs 1..=d dangle as outputs.
#[derive(Debug, Clone)]
pub struct RedGadget {
    pub graph: Graph,
    /// Edge-id pairs; in every proper 3-edge-coloring the two edges of each
    /// pair get distinct colors (the anchored pair forces this, being
    /// incident to a shared terminal in the unmodified variant).
    pub pairs: Vec<(usize, usize)>,
    pub module_count: usize,
}

pub fn build_red_gadget(d: usize, modified: bool) -> RedGadget {
    assert!(d >= 1, "red gadget needs at least one output pair");
    let b = &mut Builder::new();
    let pm: Vec<usize> = (0..=d).map(|_| b.module()).collect();
    let lm: Vec<usize> = (0..=d).map(|_| b.module()).collect();
    for i in 0..=d {
        b.edge(pm[i] + A, lm[i] + C);
        b.edge(pm[i] + B, lm[i] + D);
    }
    for i in 0..=d {
        let j = (i + 1) % (d + 1);
        b.edge(lm[i] + A, pm[j] + E);
        b.edge(lm[i] + B, lm[j] + E);
    }
    let mut pairs = Vec::new();
    if modified {
        let r1 = b.vertex();
        let r2 = b.vertex();
        pairs.push((b.edge(pm[0] + C, r1), b.edge(pm[0] + D, r2)));
    } else {
        let r = b.vertex();
        pairs.push((b.edge(pm[0] + C, r), b.edge(pm[0] + D, r)));
    }
    for i in 1..=d {
        let x = b.vertex();
        let y = b.vertex();
        pairs.push((b.edge(pm[i] + C, x), b.edge(pm[i] + D, y)));
    }
    RedGadget {
        graph: b.graph(),
        pairs,
        module_count: 2 * (d + 1),
    }
}

/// Blue gadget: odd cycle w_0..w_2d with a pendant at w_0 (the terminal b),
/// and one module per input pair, its c and d carriers riding consecutive
/// cycle vertices and its e carrier closed off by a private sink.
#[derive(Debug, Clone)]
pub struct BlueGadget {
    pub graph: Graph,
    /// Edge-id pairs (a, b hanging edges); every proper 3-edge-coloring
    /// colors at least one pair monochromatically, and any prescription
    /// with at least one equal pair extends to a full coloring.
    pub inputs: Vec<(usize, usize)>,
    pub cycle_edges: Vec<usize>,
    pub module_count: usize,
}

pub fn build_blue_gadget(d: usize) -> BlueGadget {
    assert!(d >= 1, "blue gadget needs at least one input pair");
    let b = &mut Builder::new();
    let w: Vec<usize> = (0..2 * d + 1).map(|_| b.vertex()).collect();
    let cycle_edges: Vec<usize> = (0..2 * d + 1)
        .map(|i| b.edge(w[i], w[(i + 1) % (2 * d + 1)]))
        .collect();
    let terminal = b.vertex();
    b.edge(w[0], terminal);
    let mut inputs = Vec::new();
    for j in 1..=d {
        let mj = b.module();
        b.edge(mj + C, w[2 * j - 1]);
        b.edge(mj + D, w[2 * j]);
        let ia = b.vertex();
        let ib = b.vertex();
        let ea = b.edge(mj + A, ia);
        let eb = b.edge(mj + B, ib);
        let sink = b.vertex();
        b.edge(mj + E, sink);
        inputs.push((ea, eb));
    }
    BlueGadget {
        graph: b.graph(),
        inputs,
        cycle_edges,
        module_count: d,
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerationResult {
    /// Proper 3-edge-colorings found (stops early at `limit`).
    pub count: u64,
    /// Colorings failing the predicate.
    pub violations: u64,
    /// Search-tree nodes explored.
    pub nodes: u64,
}

/// Backtracking enumeration of proper 3-edge-colorings (colors 0, 1, 2).
///
/// `forced` pins edges to given colors; `limit` stops after that many full
/// colorings; `predicate` is evaluated on each full coloring (indexed by
/// original edge id, `usize::MAX` marking nothing — all edges are set at
/// that point) and may carry state. Edges are ordered once up front,
/// most-constrained first, so the search is deterministic.
pub fn enumerate_colorings(
    n: usize,
    edges: &[(usize, usize)],
    forced: &[(usize, usize)],
    limit: Option<u64>,
    budget: &mut WorkBudget,
    mut predicate: Option<&mut dyn FnMut(&[usize]) -> bool>,
) -> Result<EnumerationResult> {
    let m = edges.len();
    let mut force = vec![usize::MAX; m];
    for &(e, c) in forced {
        assert!(c < 3, "colors are 0..3");
        force[e] = c;
    }
    // static order: repeatedly take the lowest-index unplaced edge touching
    // the most already-placed endpoints
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    let mut seen_v = vec![0usize; n];
    for _ in 0..m {
        let mut best = usize::MAX;
        let mut best_score = 0usize;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if placed[i] {
                continue;
            }
            let score = seen_v[u] + seen_v[v];
            if best == usize::MAX || score > best_score {
                best = i;
                best_score = score;
            }
        }
        order.push(best);
        placed[best] = true;
        seen_v[edges[best].0] += 1;
        seen_v[edges[best].1] += 1;
    }

    struct St<'a> {
        edges: &'a [(usize, usize)],
        order: &'a [usize],
        force: &'a [usize],
        limit: Option<u64>,
        used: Vec<u32>,
        color: Vec<usize>,
        res: EnumerationResult,
    }

    fn bt(
        st: &mut St,
        pos: usize,
        predicate: &mut Option<&mut dyn FnMut(&[usize]) -> bool>,
        budget: &mut WorkBudget,
    ) -> Result<()> {
        if let Some(lim) = st.limit {
            if st.res.count >= lim {
                return Ok(());
            }
        }
        if pos == st.order.len() {
            st.res.count += 1;
            if let Some(p) = predicate {
                if !p(&st.color) {
                    st.res.violations += 1;
                }
            }
            return Ok(());
        }
        let i = st.order[pos];
        let (u, v) = st.edges[i];
        let mask = st.used[u] | st.used[v];
        let single = [st.force[i]];
        let choices: &[usize] = if st.force[i] != usize::MAX {
            &single
        } else {
            &[0, 1, 2]
        };
        for &c in choices {
            let bit = 1u32 << c;
            if mask & bit != 0 {
                continue;
            }
            st.res.nodes += 1;
            budget.tick("coloring enumeration")?;
            st.color[i] = c;
            st.used[u] |= bit;
            st.used[v] |= bit;
            bt(st, pos + 1, predicate, budget)?;
            st.used[u] &= !bit;
            st.used[v] &= !bit;
        }
        st.color[i] = usize::MAX;
        Ok(())
    }

    let mut st = St {
        edges,
        order: &order,
        force: &force,
        limit,
        used: vec![0; n],
        color: vec![usize::MAX; m],
        res: EnumerationResult::default(),
    };
    bt(&mut st, 0, &mut predicate, budget)?;
    Ok(st.res)
}

/// Is the graph properly 3-edge-colorable after deleting at most k edges?
/// Tries deletion sets smallest-first in lexicographic order; also returns
/// the total number of search nodes spent (a determinism fingerprint).
pub fn delete_and_color(g: &Graph, k: usize, budget: &mut WorkBudget) -> Result<(bool, u64)> {
    let m = g.m();
    let mut total_nodes = 0u64;
    for size in 0..=k.min(m) {
        let mut verdict = false;
        for_each_combination(m, size, &mut |del: &[usize]| -> Result<bool> {
            let keep: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| !del.contains(i))
                .map(|(_, &e)| e)
                .collect();
            let res = enumerate_colorings(g.n(), &keep, &[], Some(1), budget, None)?;
            total_nodes += res.nodes;
            if res.count > 0 {
                verdict = true;
                return Ok(false);
            }
            Ok(true)
        })?;
        if verdict {
            return Ok((true, total_nodes));
        }
    }
    Ok((false, total_nodes))
}

/// Brute-force check of the source problem: can ≤ k red vertices dominate
/// every blue vertex?
pub fn rbds_brute_force(inst: &RbdsInstance) -> bool {
    assert!(inst.red_count <= 20, "brute force is for tiny instances");
    let mut dominated_by = vec![0u32; inst.blue_count];
    for &(r, b) in &inst.edges {
        dominated_by[b] |= 1 << r;
    }
    for mask in 0u32..(1 << inst.red_count) {
        if (mask.count_ones() as usize) <= inst.k
            && dominated_by.iter().all(|&d| d & mask != 0)
        {
            return true;
        }
    }
    false
}

/// Per-red-vertex geometry of the reduced graph.
#[derive(Debug, Clone, Serialize)]
pub struct RedGadgetMap {
    /// The r terminal vertex.
    pub terminal: usize,
    /// Module base ids, PM_0..PM_d then LM_0..LM_d.
    pub modules: Vec<usize>,
    /// The two edges anchoring pair 0 to the terminal.
    pub anchor_edges: (usize, usize),
    /// (c, d) carrier vertices of output pairs 1..=d, in ring order.
    pub output_carriers: Vec<(usize, usize)>,
}

/// Per-blue-vertex geometry of the reduced graph.
#[derive(Debug, Clone, Serialize)]
pub struct BlueGadgetMap {
    /// The b terminal vertex.
    pub terminal: usize,
    pub cycle_vertices: Vec<usize>,
    pub cycle_edges: Vec<usize>,
    pub pendant_edge: usize,
    pub modules: Vec<usize>,
    /// (a, b) carrier vertices of the input pairs, in cycle order.
    pub input_carriers: Vec<(usize, usize)>,
}

/// One source edge realized as two identification edges between a red output
/// pair and a blue input pair.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeIdentification {
    pub red: usize,
    pub blue: usize,
    pub edges: (usize, usize),
}

/// The reduced instance together with the geometry needed to interpret it.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetLayout {
    pub mecs: MecsInstance,
    pub reds: Vec<RedGadgetMap>,
    pub blues: Vec<BlueGadgetMap>,
    pub identifications: Vec<EdgeIdentification>,
}

/// Builds the full reduction: one red gadget per red vertex (ring of
/// deg+1 cells), one blue gadget per blue vertex (odd cycle of length
/// 2·deg+1 with deg modules), and two identification edges per source edge,
/// consumed in input order against each gadget's pair order. The output
/// instance asks for p = 3 and l = |E| − k, i.e. "3-colorable after at most
/// k deletions".
pub fn reduce_rbds(inst: &RbdsInstance) -> GadgetLayout {
    let mut deg_r = vec![0usize; inst.red_count];
    let mut deg_b = vec![0usize; inst.blue_count];
    for &(r, b) in &inst.edges {
        deg_r[r] += 1;
        deg_b[b] += 1;
    }
    assert!(
        deg_r.iter().all(|&d| d >= 1) && deg_b.iter().all(|&d| d >= 1),
        "reduction requires a source instance without isolated vertices"
    );

    let bld = &mut Builder::new();
    let r_vert: Vec<usize> = (0..inst.red_count).map(|_| bld.vertex()).collect();
    let b_vert: Vec<usize> = (0..inst.blue_count).map(|_| bld.vertex()).collect();

    let mut reds = Vec::with_capacity(inst.red_count);
    for r in 0..inst.red_count {
        let d = deg_r[r];
        let pm: Vec<usize> = (0..=d).map(|_| bld.module()).collect();
        let lm: Vec<usize> = (0..=d).map(|_| bld.module()).collect();
        for i in 0..=d {
            bld.edge(pm[i] + A, lm[i] + C);
            bld.edge(pm[i] + B, lm[i] + D);
        }
        for i in 0..=d {
            let j = (i + 1) % (d + 1);
            bld.edge(lm[i] + A, pm[j] + E);
            bld.edge(lm[i] + B, lm[j] + E);
        }
        let a1 = bld.edge(pm[0] + C, r_vert[r]);
        let a2 = bld.edge(pm[0] + D, r_vert[r]);
        let output_carriers: Vec<(usize, usize)> =
            (1..=d).map(|i| (pm[i] + C, pm[i] + D)).collect();
        let mut modules = pm;
        modules.extend(lm);
        reds.push(RedGadgetMap {
            terminal: r_vert[r],
            modules,
            anchor_edges: (a1, a2),
            output_carriers,
        });
    }

    let mut blues = Vec::with_capacity(inst.blue_count);
    for b in 0..inst.blue_count {
        let d = deg_b[b];
        let w: Vec<usize> = (0..2 * d + 1).map(|_| bld.vertex()).collect();
        let cycle_edges: Vec<usize> = (0..2 * d + 1)
            .map(|i| bld.edge(w[i], w[(i + 1) % (2 * d + 1)]))
            .collect();
        let pendant_edge = bld.edge(w[0], b_vert[b]);
        let mut modules = Vec::with_capacity(d);
        let mut input_carriers = Vec::with_capacity(d);
        for j in 1..=d {
            let mj = bld.module();
            bld.edge(mj + C, w[2 * j - 1]);
            bld.edge(mj + D, w[2 * j]);
            let sink = bld.vertex();
            bld.edge(mj + E, sink);
            modules.push(mj);
            input_carriers.push((mj + A, mj + B));
        }
        blues.push(BlueGadgetMap {
            terminal: b_vert[b],
            cycle_vertices: w,
            cycle_edges,
            pendant_edge,
            modules,
            input_carriers,
        });
    }

    let mut next_out = vec![0usize; inst.red_count];
    let mut next_in = vec![0usize; inst.blue_count];
    let mut identifications = Vec::with_capacity(inst.edges.len());
    for &(r, b) in &inst.edges {
        let (oc, od) = reds[r].output_carriers[next_out[r]];
        let (ia, ib) = blues[b].input_carriers[next_in[b]];
        next_out[r] += 1;
        next_in[b] += 1;
        let e1 = bld.edge(oc, ia);
        let e2 = bld.edge(od, ib);
        identifications.push(EdgeIdentification { red: r, blue: b, edges: (e1, e2) });
    }

    let g = bld.graph();
    let l = g.m() - inst.k.min(g.m());
    GadgetLayout {
        mecs: MecsInstance::new(g, l, 3),
        reds,
        blues,
        identifications,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: usize,
    pub description: String,
    pub pass: bool,
    pub colorings: u64,
    pub nodes: u64,
}

/// Exhaustively checks the six coloring facts the reduction rests on, each
/// at the smallest gadget size:
/// 1. every module coloring repeats a color on the (a,b) or the (c,d) pair;
/// 2. the achievable module boundary patterns are exactly "a=b and c,d,e
///    rainbow" or "c=d and a,b,e rainbow";
/// 3. the red gadget (d=1) colors every output pair with two distinct colors;
/// 4. the modified red gadget (d=1) admits a coloring with every free output
///    pair monochromatic;
/// 5. every blue gadget (d=1) coloring makes some input pair monochromatic;
/// 6. any monochromatic prescription on the blue input pair extends to a
///    full coloring.
pub fn verify_claims(budget: &mut WorkBudget) -> Result<Vec<ClaimResult>> {
    let mut out = Vec::new();

    // closed module: give each carrier a private far endpoint
    let b = &mut Builder::new();
    let m0 = b.module();
    let dangles: Vec<usize> = [A, B, C, D, E]
        .iter()
        .map(|&cv| {
            let far = b.vertex();
            b.edge(m0 + cv, far)
        })
        .collect();
    let mut patterns: Vec<[usize; 5]> = Vec::new();
    let mut collect = |color: &[usize]| -> bool {
        let pat = [
            color[dangles[0]],
            color[dangles[1]],
            color[dangles[2]],
            color[dangles[3]],
            color[dangles[4]],
        ];
        if !patterns.contains(&pat) {
            patterns.push(pat);
        }
        true
    };
    let g = b.graph();
    let res = enumerate_colorings(g.n(), g.edges(), &[], None, budget, Some(&mut collect))?;
    patterns.sort_unstable();
    let pair_repeats = patterns
        .iter()
        .all(|p| p[0] == p[1] || p[2] == p[3]);
    out.push(ClaimResult {
        id: 1,
        description: "module boundary always repeats on (a,b) or (c,d)".into(),
        pass: res.count > 0 && pair_repeats,
        colorings: res.count,
        nodes: res.nodes,
    });
    let mut legal: Vec<[usize; 5]> = Vec::new();
    for a in 0..3 {
        for bb in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    for e in 0..3 {
                        let mut cde = [c, d, e];
                        cde.sort_unstable();
                        let mut abe = [a, bb, e];
                        abe.sort_unstable();
                        if (a == bb && cde == [0, 1, 2]) || (c == d && abe == [0, 1, 2]) {
                            legal.push([a, bb, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    legal.sort_unstable();
    legal.dedup();
    out.push(ClaimResult {
        id: 2,
        description: "achievable module boundary patterns are exactly the legal set".into(),
        pass: patterns == legal,
        colorings: res.count,
        nodes: res.nodes,
    });

    // red gadget, smallest size: all output pairs forced unequal
    let red = build_red_gadget(1, false);
    let pairs = red.pairs.clone();
    let mut all_diff = |color: &[usize]| -> bool {
        pairs.iter().all(|&(e1, e2)| color[e1] != color[e2])
    };
    let res = enumerate_colorings(
        red.graph.n(),
        red.graph.edges(),
        &[],
        None,
        budget,
        Some(&mut all_diff),
    )?;
    out.push(ClaimResult {
        id: 3,
        description: "red gadget forces every output pair to differ".into(),
        pass: res.count > 0 && res.violations == 0,
        colorings: res.count,
        nodes: res.nodes,
    });

    // modified red gadget: some coloring makes all free pairs equal
    let modified = build_red_gadget(1, true);
    let free: Vec<(usize, usize)> = modified.pairs[1..].to_vec();
    let mut hits = 0u64;
    let mut all_equal = |color: &[usize]| -> bool {
        if free.iter().all(|&(e1, e2)| color[e1] == color[e2]) {
            hits += 1;
        }
        true
    };
    let res = enumerate_colorings(
        modified.graph.n(),
        modified.graph.edges(),
        &[],
        None,
        budget,
        Some(&mut all_equal),
    )?;
    out.push(ClaimResult {
        id: 4,
        description: "split-anchor red gadget can color all output pairs equal".into(),
        pass: hits > 0,
        colorings: res.count,
        nodes: res.nodes,
    });

    // blue gadget: some input pair always monochromatic
    let blue = build_blue_gadget(1);
    let inputs = blue.inputs.clone();
    let mut some_equal = |color: &[usize]| -> bool {
        inputs.iter().any(|&(e1, e2)| color[e1] == color[e2])
    };
    let res = enumerate_colorings(
        blue.graph.n(),
        blue.graph.edges(),
        &[],
        None,
        budget,
        Some(&mut some_equal),
    )?;
    out.push(ClaimResult {
        id: 5,
        description: "blue gadget forces a monochromatic input pair".into(),
        pass: res.count > 0 && res.violations == 0,
        colorings: res.count,
        nodes: res.nodes,
    });

    // and each monochromatic prescription extends
    let (e1, e2) = blue.inputs[0];
    let mut extends = true;
    let mut total = (0u64, 0u64);
    for c in 0..3 {
        let res = enumerate_colorings(
            blue.graph.n(),
            blue.graph.edges(),
            &[(e1, c), (e2, c)],
            Some(1),
            budget,
            None,
        )?;
        extends &= res.count > 0;
        total.0 += res.count;
        total.1 += res.nodes;
    }
    out.push(ClaimResult {
        id: 6,
        description: "every monochromatic input prescription extends".into(),
        pass: extends,
        colorings: total.0,
        nodes: total.1,
    });

    Ok(out)
}
