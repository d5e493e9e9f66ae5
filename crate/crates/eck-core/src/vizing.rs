//! Proper edge coloring with at most Δ+1 colors by the constructive fan /
//! alternating-path argument behind the Δ+1 upper bound.

use crate::graph::{EdgeColoring, Graph};

struct State<'a> {
    g: &'a Graph,
    q: usize,                    // palette size, Δ+1
    color: Vec<Option<usize>>,   // per edge, 0-based
    at: Vec<Vec<Option<usize>>>, // at[v][c] = edge colored c at v
}

impl<'a> State<'a> {
    fn new(g: &'a Graph, q: usize) -> Self {
        State {
            g,
            q,
            color: vec![None; g.m()],
            at: vec![vec![None; q]; g.n()],
        }
    }

    fn set(&mut self, e: usize, c: usize) {
        debug_assert!(self.color[e].is_none());
        let (u, v) = self.g.edge(e);
        debug_assert!(self.at[u][c].is_none() && self.at[v][c].is_none());
        self.color[e] = Some(c);
        self.at[u][c] = Some(e);
        self.at[v][c] = Some(e);
    }

    fn unset(&mut self, e: usize) {
        let c = self.color[e].expect("unset of uncolored edge");
        let (u, v) = self.g.edge(e);
        self.color[e] = None;
        self.at[u][c] = None;
        self.at[v][c] = None;
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    /// Smallest color free at `v`; exists because deg(v) ≤ Δ < q.
    fn free_color(&self, v: usize) -> usize {
        (0..self.q).find(|&c| self.is_free(v, c)).expect("palette exceeds degree")
    }

    /// Maximal fan of `u` rooted at the uncolored edge toward `f0`: a
    /// sequence of distinct neighbors where each next edge's color is free
    /// at the previous fan vertex. Ties resolved toward the lowest vertex id.
    fn build_fan(&self, u: usize, f0: usize) -> Vec<usize> {
        let mut fan = vec![f0];
        let mut in_fan = vec![false; self.g.n()];
        in_fan[f0] = true;
        loop {
            let z = *fan.last().unwrap();
            let next = self.g.neighbors(u).iter().copied().find(|&w| {
                if in_fan[w] {
                    return false;
                }
                let e = self.g.edge_index(u, w).unwrap();
                match self.color[e] {
                    Some(c) => self.is_free(z, c),
                    None => false,
                }
            });
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => return fan,
            }
        }
    }

    /// Inverts the maximal path starting at `u` whose edges alternate colors
    /// `d`, `c`, `d`, ... After inversion `d` is free at `u`.
    fn invert_cd_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let mut x = u;
        let mut want = d;
        while let Some(e) = self.at[x][want] {
            path.push(e);
            x = self.g.other_endpoint(e, x);
            want = c + d - want;
        }
        let old: Vec<usize> = path.iter().map(|&e| self.color[e].unwrap()).collect();
        for &e in &path {
            self.unset(e);
        }
        for (&e, &o) in path.iter().zip(&old) {
            self.set(e, c + d - o);
        }
    }

    /// True if fan[0..=j] is a valid fan of u under the current coloring.
    fn fan_prefix_valid(&self, u: usize, fan: &[usize], j: usize) -> bool {
        (1..=j).all(|i| {
            let e = self.g.edge_index(u, fan[i]).unwrap();
            match self.color[e] {
                Some(c) => self.is_free(fan[i - 1], c),
                None => false,
            }
        })
    }

    /// Shift colors down the fan prefix and give color `d` to the last edge.
    fn rotate_and_finish(&mut self, u: usize, fan: &[usize], j: usize, d: usize) {
        for i in 0..j {
            let e_next = self.g.edge_index(u, fan[i + 1]).unwrap();
            let c = self.color[e_next].unwrap();
            self.unset(e_next);
            let e = self.g.edge_index(u, fan[i]).unwrap();
            self.set(e, c);
        }
        let e_last = self.g.edge_index(u, fan[j]).unwrap();
        self.set(e_last, d);
    }

    fn color_edge(&mut self, e: usize) {
        let (u, v) = self.g.edge(e);
        let fan = self.build_fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());
        if !self.is_free(u, d) {
            self.invert_cd_path(u, c, d);
        }
        // After the inversion d is free at u; find the shortest fan prefix
        // whose tip also has d free and which is still a fan (the inversion
        // may have recolored fan edges).
        debug_assert!(self.is_free(u, d));
        let j = (0..fan.len())
            .find(|&j| self.is_free(fan[j], d) && self.fan_prefix_valid(u, &fan, j))
            .expect("some fan prefix must accept the free color");
        self.rotate_and_finish(u, &fan, j, d);
    }
}

/// Colors every edge of `g` properly with at most Δ(g)+1 colors.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let q = g.max_degree() + 1;
    let mut st = State::new(g, q.max(1));
    for e in 0..g.m() {
        st.color_edge(e);
    }
    let mut out = EdgeColoring::new(q.max(1), g.m());
    for e in 0..g.m() {
        out.set(e, st.color[e].expect("all edges colored") + 1);
    }
    out
}
