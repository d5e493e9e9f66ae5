//! 3-approximation for the smallest vertex set X with Δ(G − X) ≤ 1.
//!
//! While some vertex u still has two distinct neighbors, any valid modulator
//! must contain u or both neighbors, so taking all three keeps the result
//! within 3× optimal. A reverse-order minimality pass then discards the
//! members that turned out to be unnecessary — typically shrinking the greedy
//! triples back toward the true hitting vertices.

use crate::graph::Graph;

/// True if Δ(g − x) ≤ 1.
pub fn is_deg1_modulator(g: &Graph, x: &[usize]) -> bool {
    let mut in_x = vec![false; g.n()];
    for &v in x {
        in_x[v] = true;
    }
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in g.edges() {
        if !in_x[u] && !in_x[v] {
            deg[u] += 1;
            deg[v] += 1;
            if deg[u] > 1 || deg[v] > 1 {
                return false;
            }
        }
    }
    true
}

/// Vertex set X with Δ(g − X) ≤ 1 and |X| ≤ 3·optimum. Returned sorted.
pub fn deg1_modulator_3approx(g: &Graph) -> Vec<usize> {
    let mut alive = vec![true; g.n()];
    let mut picked_order = Vec::new();
    loop {
        // lowest vertex with ≥ 2 surviving neighbors
        let pick = (0..g.n()).find(|&u| {
            alive[u] && g.neighbors(u).iter().filter(|&&w| alive[w]).count() >= 2
        });
        let Some(u) = pick else { break };
        let mut chosen = vec![u];
        chosen.extend(
            g.neighbors(u).iter().copied().filter(|&w| alive[w]).take(2),
        );
        for v in chosen {
            picked_order.push(v);
            alive[v] = false;
        }
    }
    // minimality pass in reverse pick order: later greedy picks are the most
    // likely to be redundant once their trigger vertex is gone
    let mut keep: Vec<usize> = picked_order.clone();
    for &v in picked_order.iter().rev() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&w| w != v).collect();
        if is_deg1_modulator(g, &trial) {
            keep = trial;
        }
    }
    keep.sort_unstable();
    keep
}
