//! Maximum matching in general graphs via augmenting paths with blossom
//! contraction. Exactness is all callers need; the classical O(V^3) version
//! is plenty at the scales this library targets.

use crate::graph::{Graph, Matching};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    /// Lowest common ancestor of the bases of `a` and `b` in the alternating
    /// forest, walking mate/parent pointers.
    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.g.n();
        let mut hit = vec![false; n];
        let mut x = a;
        loop {
            x = self.base[x];
            hit[x] = true;
            if self.mate[x] == NONE {
                break;
            }
            x = self.parent[self.mate[x]];
        }
        let mut y = b;
        loop {
            y = self.base[y];
            if hit[y] {
                return y;
            }
            y = self.parent[self.mate[y]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS from `root` for an augmenting path; returns true if one was
    /// applied. Deterministic: sorted adjacency, FIFO queue.
    fn augment_from(&mut self, root: usize) -> bool {
        let n = self.g.n();
        self.used = vec![false; n];
        self.parent = vec![NONE; n];
        self.base = (0..n).collect();
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom at the lca
                    let cur_base = self.lca(v, to);
                    self.in_blossom = vec![false; n];
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        // augment: flip matched/unmatched along the path
                        let mut u = to;
                        while u != NONE {
                            let pv = self.parent[u];
                            let next = self.mate[pv];
                            self.mate[u] = pv;
                            self.mate[pv] = u;
                            u = next;
                        }
                        return true;
                    } else {
                        let w = self.mate[to];
                        self.used[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        false
    }
}

/// Maximum-cardinality matching. Deterministic for a fixed graph: greedy
/// initialization over edges in index order, then augmentation rooted at
/// exposed vertices in ascending order.
pub fn max_matching(g: &Graph) -> Matching {
    let mut bl = Blossom::new(g);
    for e in 0..g.m() {
        let (u, v) = g.edge(e);
        if bl.mate[u] == NONE && bl.mate[v] == NONE {
            bl.mate[u] = v;
            bl.mate[v] = u;
        }
    }
    for v in 0..g.n() {
        if bl.mate[v] == NONE {
            bl.augment_from(v);
        }
    }
    let mut edges = Vec::new();
    for v in 0..g.n() {
        if bl.mate[v] != NONE && v < bl.mate[v] {
            edges.push(g.edge_index(v, bl.mate[v]).expect("mate implies edge"));
        }
    }
    Matching::new(g, edges)
}
