//! Rebalancing a proper edge coloring so class sizes differ by at most one,
//! without touching which edges are colored: repeatedly pick a largest and a
//! smallest class and swap one surplus edge across via an alternating path in
//! their symmetric difference.

use crate::graph::{EdgeColoring, Graph};

/// Edges of the two classes incident to each vertex (at most one per class).
fn pair_incidence(g: &Graph, c: &EdgeColoring, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); g.n()];
    for e in 0..g.m() {
        if let Some(col) = c.get(e) {
            if col == a || col == b {
                let (u, v) = g.edge(e);
                inc[u].push(e);
                inc[v].push(e);
            }
        }
    }
    inc
}

/// Walks the path component starting at endpoint `start` and returns its
/// edges. Within the union of two matchings every vertex has degree ≤ 2, so
/// components are simple paths or cycles; `start` must have degree 1.
fn walk_path(g: &Graph, inc: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut edges = Vec::new();
    let mut v = start;
    let mut prev = usize::MAX;
    loop {
        let next = inc[v].iter().copied().find(|&e| e != prev);
        match next {
            Some(e) => {
                edges.push(e);
                prev = e;
                v = g.other_endpoint(e, v);
            }
            None => return edges,
        }
    }
}

/// Balances `c`: same colored edge set, still proper, and any two class sizes
/// differ by at most 1.
pub fn rebalance(c: &EdgeColoring, g: &Graph) -> EdgeColoring {
    assert_eq!(c.len(), g.m(), "coloring must belong to this graph");
    let mut c = c.clone();
    let p = c.p();
    loop {
        let sizes = c.class_sizes();
        // largest and smallest class; ties toward the lowest color
        let hi = (0..p).max_by_key(|&i| (sizes[i], p - i)).unwrap();
        let lo = (0..p).min_by_key(|&i| (sizes[i], i)).unwrap();
        if sizes[hi] - sizes[lo] <= 1 {
            return c;
        }
        let (a, b) = (hi + 1, lo + 1); // colors are 1-based
        let inc = pair_incidence(g, &c, a, b);
        // find a path with one more a-edge than b-edges, lowest endpoint first
        let mut swapped = false;
        for v in 0..g.n() {
            if inc[v].len() != 1 {
                continue;
            }
            let path = walk_path(g, &inc, v);
            // each path is seen from both endpoints; taking the first hit is
            // fine because the a-surplus is a property of the whole path
            let surplus_a = path.iter().filter(|&&e| c.get(e) == Some(a)).count() as i64
                - path.iter().filter(|&&e| c.get(e) == Some(b)).count() as i64;
            if surplus_a == 1 {
                for e in path {
                    let col = c.get(e).unwrap();
                    c.set(e, a + b - col);
                }
                swapped = true;
                break;
            }
        }
        assert!(swapped, "a size gap of 2 or more guarantees a surplus path");
    }
}
