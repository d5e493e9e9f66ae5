//! Kernelization around a degree-1 modulator X (a vertex set whose removal
//! leaves maximum degree 1).
//!
//! Two reduction rules shrink the instance while preserving the verdict:
//! components untouched by X can always be colored greedily and are dropped
//! outright, and once every leftover component clings to X, a large enough
//! component count lets an expansion argument delete p fully-served components
//! per modulator vertex together with that vertex. The surviving instance has
//! at most (p+1)·|X| vertices; when a pathological fixpoint overshoots that
//! bound the instance is small enough to close out exactly instead.

use serde::Serialize;

use crate::budget::WorkBudget;
use crate::error::{EckError, Result};
use crate::graph::{Graph, MecsInstance};
use crate::matching::max_matching;
use crate::modulator::deg1_modulator_3approx;
use crate::oracle::{solve_exact_capped_with, EXACT_EDGE_CAP};
use crate::precheck::{parameter_precheck, PrecheckOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RuleId {
    #[serde(rename = "RR1")]
    Rule1,
    #[serde(rename = "RR2")]
    Rule2,
}

/// One rule application. `deleted` is reported in the vertex numbering of the
/// instance the rule was applied to; `kernelize` remaps these to the original
/// input's numbering before recording them.
#[derive(Debug, Clone, Serialize)]
pub struct KernelStep {
    pub rule: RuleId,
    pub deleted: Vec<usize>,
    pub l_decrease: usize,
}

/// How the pipeline short-circuited, when it did.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind")]
pub enum EarlyOutcome {
    /// Matching-based screen already produced a witness.
    PrecheckYes,
    /// p = 1 is plain maximum matching; settled exactly up front.
    SingleColorExact { verdict: bool },
    /// Reduced instance overshot the (p+1)|X| vertex bound; resolved exactly
    /// and replaced by a constant-size instance with the same verdict.
    BoundFallback { verdict: bool },
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelTrace {
    pub steps: Vec<KernelStep>,
    /// Modulator in original vertex ids; None when the rules never ran.
    pub modulator: Option<Vec<usize>>,
    pub early: Option<EarlyOutcome>,
    pub final_instance: MecsInstance,
}

/// Subset of the modulator with one component-side partner per unit of
/// capacity, in the vertex ids of the bipartite graph handed to
/// `find_expansion` (modulator side first, then component side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub x_prime: Vec<usize>,
    pub c_prime: Vec<usize>,
    /// (modulator vertex, component vertex) pairs; exactly t per x_prime
    /// member, all component endpoints distinct.
    pub expansion_edges: Vec<(usize, usize)>,
}

/// Smallest YES / smallest NO instances used to stand in for an answer that
/// was already decided.
fn vacuous_instance(verdict: bool) -> MecsInstance {
    if verdict {
        MecsInstance::new(Graph::from_edges(2, &[(0, 1)]), 1, 1)
    } else {
        MecsInstance::new(Graph::new(1), 1, 1)
    }
}

/// Drop the lowest component of g − X that has no edge to X. Only components
/// with at most one edge qualify (always true under Δ(g − X) ≤ 1): a lone
/// edge or vertex can join any coloring, so l shrinks by the edge count.
pub fn rule1_drop_isolated_components(
    inst: &MecsInstance,
    x: &[usize],
) -> Option<(MecsInstance, KernelStep)> {
    let g = &inst.graph;
    for comp in g.connected_components() {
        if comp.iter().any(|v| x.contains(v)) {
            continue;
        }
        let internal = comp
            .iter()
            .map(|&v| g.incident_edges(v).len())
            .sum::<usize>()
            / 2;
        if internal > 1 {
            continue; // not a modulator component; leave it alone
        }
        let (graph, _) = g.remove_vertices(&comp);
        let dec = internal.min(inst.l);
        let next = MecsInstance::new(graph, inst.l - dec, inst.p);
        let step = KernelStep {
            rule: RuleId::Rule1,
            deleted: comp,
            l_decrease: dec,
        };
        return Some((next, step));
    }
    None
}

/// Constructive expansion in a bipartite graph whose vertices 0..left_count
/// form one side. Looks for X′ ⊆ left and t·|X′| right vertices such that
/// every X′ member is flow-connected to t private partners and no chosen
/// right vertex sees anything outside X′.
///
/// Works by capacitated bipartite matching (capacity t per left vertex, 1 per
/// right) with lexicographic augmenting paths; whenever some left vertex
/// stays deficient, the alternating-reachable part is peeled off and the
/// matching restarts on the rest. Requires every right vertex to have a
/// neighbor; returns None when the right side is smaller than t·left.
pub fn find_expansion(b: &Graph, left_count: usize, t: usize) -> Option<ExpansionResult> {
    let right: Vec<usize> = (left_count..b.n()).collect();
    if t == 0 || left_count == 0 || right.len() < t * left_count {
        return None;
    }
    let mut p_alive: Vec<usize> = (0..left_count).collect();
    let mut q_alive = vec![false; b.n()];
    for &r in &right {
        q_alive[r] = true;
    }

    const NONE: usize = usize::MAX;
    loop {
        if p_alive.is_empty() {
            return None;
        }
        // capacitated Kuhn from scratch over the surviving sides
        let mut owner = vec![NONE; b.n()];
        fn try_aug(
            x: usize,
            b: &Graph,
            q_alive: &[bool],
            owner: &mut [usize],
            visited: &mut [bool],
        ) -> bool {
            for &r in b.neighbors(x) {
                if r < q_alive.len() && q_alive[r] && !visited[r] {
                    visited[r] = true;
                    if owner[r] == NONE || try_aug(owner[r], b, q_alive, owner, visited) {
                        owner[r] = x;
                        return true;
                    }
                }
            }
            false
        }
        for &x in &p_alive {
            for _ in 0..t {
                let mut visited = vec![false; b.n()];
                if !try_aug(x, b, &q_alive, &mut owner, &mut visited) {
                    break;
                }
            }
        }
        let mut owned: Vec<Vec<usize>> = vec![Vec::new(); left_count];
        for &r in &right {
            if owner[r] != NONE {
                owned[owner[r]].push(r);
            }
        }
        let deficient: Vec<usize> = p_alive
            .iter()
            .copied()
            .filter(|&x| owned[x].len() < t)
            .collect();
        if deficient.is_empty() {
            let x_prime = p_alive.clone();
            let mut c_prime = Vec::new();
            let mut expansion_edges = Vec::new();
            for &x in &x_prime {
                for &r in &owned[x] {
                    c_prime.push(r);
                    expansion_edges.push((x, r));
                }
            }
            c_prime.sort_unstable();
            return Some(ExpansionResult {
                x_prime,
                c_prime,
                expansion_edges,
            });
        }
        // peel the alternating closure of the deficient vertices: their
        // reachable right vertices form a Hall violator together with them
        let mut in_s = vec![false; left_count];
        for &x in &deficient {
            in_s[x] = true;
        }
        let mut reach = vec![false; b.n()];
        loop {
            let mut changed = false;
            for x in 0..left_count {
                if !in_s[x] {
                    continue;
                }
                for &r in b.neighbors(x) {
                    if r < q_alive.len() && q_alive[r] && !reach[r] {
                        reach[r] = true;
                        changed = true;
                        if owner[r] != NONE && !in_s[owner[r]] {
                            in_s[owner[r]] = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        p_alive.retain(|&x| !in_s[x]);
        for r in left_count..b.n() {
            if reach[r] {
                q_alive[r] = false;
            }
        }
    }
}

/// Components of g − x as sorted vertex lists in g's numbering, ordered by
/// smallest member.
fn components_outside(g: &Graph, x: &[usize]) -> Vec<Vec<usize>> {
    let (h, map) = g.remove_vertices(x);
    let mut inv = vec![0usize; h.n()];
    for (old, slot) in map.iter().enumerate() {
        if let Some(new) = slot {
            inv[*new] = old;
        }
    }
    h.connected_components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| inv[v]).collect())
        .collect()
}

/// Expansion-based deletion: if g − x splits into at least p·|x| components
/// (all adjacent to x once rule 1 is exhausted), pick X′ and p fully-served
/// components per X′ member and delete them all. l drops by p·|X′| plus the
/// edges inside the deleted components.
pub fn rule2_expansion_delete(
    inst: &MecsInstance,
    x: &[usize],
) -> Option<(MecsInstance, KernelStep)> {
    let g = &inst.graph;
    let mut xs: Vec<usize> = x.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.is_empty() {
        return None;
    }
    let comps = components_outside(g, &xs);
    if comps.len() < inst.p * xs.len() {
        return None;
    }
    let mut b = Graph::new(xs.len() + comps.len());
    for (i, &xv) in xs.iter().enumerate() {
        for (j, comp) in comps.iter().enumerate() {
            if comp.iter().any(|&v| g.has_edge(xv, v)) {
                b.add_edge(i, xs.len() + j);
            }
        }
    }
    let exp = find_expansion(&b, xs.len(), inst.p)?;
    let mut deleted: Vec<usize> = exp.x_prime.iter().map(|&i| xs[i]).collect();
    let mut internal_edges = 0usize;
    for &c in &exp.c_prime {
        let comp = &comps[c - xs.len()];
        internal_edges += g
            .edges()
            .iter()
            .filter(|(u, v)| comp.contains(u) && comp.contains(v))
            .count();
        deleted.extend(comp.iter().copied());
    }
    deleted.sort_unstable();
    let dec_full = inst.p * exp.x_prime.len() + internal_edges;
    let dec = dec_full.min(inst.l);
    let (graph, _) = g.remove_vertices(&deleted);
    let next = MecsInstance::new(graph, inst.l - dec, inst.p);
    let step = KernelStep {
        rule: RuleId::Rule2,
        deleted,
        l_decrease: dec,
    };
    Some((next, step))
}

/// Old-id → new-id map produced by deleting `deleted` (sorted) from 0..n.
fn compact_map(n: usize, deleted: &[usize]) -> Vec<Option<usize>> {
    let mut map = Vec::with_capacity(n);
    let mut gone = 0usize;
    for v in 0..n {
        if deleted.binary_search(&v).is_ok() {
            gone += 1;
            map.push(None);
        } else {
            map.push(Some(v - gone));
        }
    }
    map
}

pub fn kernelize_with(inst: &MecsInstance, budget: &mut WorkBudget) -> Result<KernelTrace> {
    if inst.p == 1 {
        let verdict = max_matching(&inst.graph).len() >= inst.l;
        return Ok(KernelTrace {
            steps: Vec::new(),
            modulator: None,
            early: Some(EarlyOutcome::SingleColorExact { verdict }),
            final_instance: vacuous_instance(verdict),
        });
    }
    if let PrecheckOutcome::Yes(_) = parameter_precheck(inst) {
        return Ok(KernelTrace {
            steps: Vec::new(),
            modulator: None,
            early: Some(EarlyOutcome::PrecheckYes),
            final_instance: vacuous_instance(true),
        });
    }
    let modulator = deg1_modulator_3approx(&inst.graph);
    let bound = (inst.p + 1) * modulator.len();
    let mut cur = inst.clone();
    // current id → original id, and the modulator members still present
    let mut orig_of: Vec<usize> = (0..inst.graph.n()).collect();
    let mut x_cur = modulator.clone();
    let mut steps = Vec::new();
    loop {
        budget.tick("kernelization rules")?;
        if let Some((next, step)) = rule1_drop_isolated_components(&cur, &x_cur) {
            apply_step(&mut steps, &mut orig_of, &mut x_cur, cur.graph.n(), step);
            cur = next;
            continue;
        }
        if let Some((next, step)) = rule2_expansion_delete(&cur, &x_cur) {
            apply_step(&mut steps, &mut orig_of, &mut x_cur, cur.graph.n(), step);
            cur = next;
            continue;
        }
        break;
    }

    let (early, final_instance) = if cur.graph.n() <= bound {
        (None, cur)
    } else {
        match solve_exact_capped_with(&cur, EXACT_EDGE_CAP, budget) {
            Ok(sol) => (
                Some(EarlyOutcome::BoundFallback {
                    verdict: sol.verdict,
                }),
                vacuous_instance(sol.verdict),
            ),
            Err(EckError::TooLarge(_)) => (None, cur), // best effort
            Err(e) => return Err(e),
        }
    };
    Ok(KernelTrace {
        steps,
        modulator: Some(modulator),
        early,
        final_instance,
    })
}

fn apply_step(
    steps: &mut Vec<KernelStep>,
    orig_of: &mut Vec<usize>,
    x_cur: &mut Vec<usize>,
    n_before: usize,
    step: KernelStep,
) {
    let deleted_orig: Vec<usize> = step.deleted.iter().map(|&v| orig_of[v]).collect();
    let map = compact_map(n_before, &step.deleted);
    *orig_of = (0..n_before)
        .filter(|&v| map[v].is_some())
        .map(|v| orig_of[v])
        .collect();
    *x_cur = x_cur.iter().filter_map(|&v| map[v]).collect();
    steps.push(KernelStep {
        rule: step.rule,
        deleted: deleted_orig,
        l_decrease: step.l_decrease,
    });
}

pub fn kernelize(inst: &MecsInstance) -> KernelTrace {
    kernelize_with(inst, &mut WorkBudget::unlimited()).expect("unlimited budget cannot trip")
}
