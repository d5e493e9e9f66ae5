//! Cheap matching-based screen run before any expensive machinery.
//!
//! Two greedy stages: a maximum matching alone answers YES when it already
//! has l edges, and for p ≥ 2 a second matching taken from the leftover edges
//! can push the total over the line. When both stages miss, the caller learns
//! which structural size bounds are now guaranteed to hold, which is what the
//! kernelization and the cover-based solver key their parameter budgets on.

use crate::graph::{EdgeColoring, MecsInstance};
use crate::matching::max_matching;

#[derive(Debug, Clone)]
pub enum PrecheckOutcome {
    /// Instance solved outright; the coloring is a valid witness.
    Yes(EdgeColoring),
    /// No quick answer. `vc_bound_holds` records ν(G) < l (so any vertex
    /// cover-style parameter is tied to l), `modulator_bound_holds` records
    /// that even two disjoint matchings fall short of l.
    Bounds {
        vc_bound_holds: bool,
        modulator_bound_holds: bool,
    },
}

pub fn parameter_precheck(inst: &MecsInstance) -> PrecheckOutcome {
    let g = &inst.graph;
    let m1 = max_matching(g);
    if inst.l <= m1.len() {
        let mut c = EdgeColoring::new(inst.p, g.m());
        for &e in m1.edges() {
            c.set(e, 1);
        }
        return PrecheckOutcome::Yes(c);
    }
    // second matching on whatever the first one left behind
    let rest: Vec<usize> = (0..g.m()).filter(|e| !m1.edges().contains(e)).collect();
    let (h, back) = g.edge_subgraph(&rest);
    let m2 = max_matching(&h);
    if inst.p >= 2 && m1.len() + m2.len() >= inst.l {
        let mut c = EdgeColoring::new(inst.p, g.m());
        for &e in m1.edges() {
            c.set(e, 1);
        }
        for &e in m2.edges() {
            c.set(back[e], 2);
        }
        return PrecheckOutcome::Yes(c);
    }
    PrecheckOutcome::Bounds {
        vc_bound_holds: m1.len() < inst.l,
        modulator_bound_holds: m1.len() + m2.len() < inst.l,
    }
}
