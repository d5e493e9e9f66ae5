//! Exact minimum vertex cover by branching on an uncovered edge: either
//! endpoint must be in any cover, so the search tree has depth ≤ cover size
//! (the classical 2^vc bound).

use crate::error::{EckError, Result};
use crate::graph::Graph;

fn first_uncovered(g: &Graph, in_cover: &[bool]) -> Option<(usize, usize)> {
    g.edges().iter().copied().find(|&(u, v)| !in_cover[u] && !in_cover[v])
}

fn branch(g: &Graph, in_cover: &mut Vec<bool>, count: usize, limit: usize, best: &mut Option<Vec<usize>>) {
    if let Some(b) = best {
        if count >= b.len() {
            return; // cannot strictly improve
        }
    }
    if count > limit {
        return;
    }
    match first_uncovered(g, in_cover) {
        None => {
            let cover: Vec<usize> =
                (0..g.n()).filter(|&v| in_cover[v]).collect();
            let better = best.as_ref().map_or(true, |b| cover.len() < b.len());
            if better {
                *best = Some(cover);
            }
        }
        Some((u, v)) => {
            // branch order u then v: with strictly-smaller updates this makes
            // the returned cover deterministic
            for w in [u, v] {
                in_cover[w] = true;
                branch(g, in_cover, count + 1, limit, best);
                in_cover[w] = false;
            }
        }
    }
}

/// Minimum vertex cover, exact. Returns a sorted vertex list.
pub fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut best = None;
    branch(g, &mut vec![false; g.n()], 0, g.n(), &mut best);
    best.expect("the full vertex set always covers")
}

/// Minimum vertex cover if its size is ≤ `cap`, else a budget error. Used by
/// solvers whose running time is exponential in the cover size.
pub fn min_vertex_cover_capped(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let mut best = None;
    branch(g, &mut vec![false; g.n()], 0, cap, &mut best);
    best.ok_or_else(|| {
        EckError::Budget(format!("minimum vertex cover exceeds the cap of {cap}"))
    })
}
