use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Simple undirected graph over dense 0-indexed vertices.
///
/// Edges are stored as normalized `(u, v)` pairs with `u < v`; the index of an
/// edge is its insertion position and is stable for the lifetime of the graph,
/// so colorings and matchings can refer to edges by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    index: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds edge `{u, v}` and returns its index.
    ///
    /// Panics on self-loops, out-of-range endpoints, and duplicate edges:
    /// all three indicate a caller bug, not a data condition.
    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range, n={}", self.n);
        let key = (u.min(v), u.max(v));
        assert!(!self.index.contains_key(&key), "duplicate edge ({},{})", key.0, key.1);
        let id = self.edges.len();
        self.edges.push(key);
        self.index.insert(key, id);
        // keep neighbor lists sorted so every traversal is deterministic
        let pos = self.adj[key.0].binary_search(&key.1).unwrap_err();
        self.adj[key.0].insert(pos, key.1);
        let pos = self.adj[key.1].binary_search(&key.0).unwrap_err();
        self.adj[key.1].insert(pos, key.0);
        self.inc[key.0].push(id);
        self.inc[key.1].push(id);
        id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Indices of edges incident to `v`, in insertion order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Endpoint of edge `e` that is not `v`.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Deletes the given vertices, compacting the ids of the survivors while
    /// preserving their relative order. Returns the new graph and a map
    /// `old id -> Some(new id)` (`None` for deleted vertices).
    pub fn remove_vertices(&self, remove: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut gone = vec![false; self.n];
        for &v in remove {
            gone[v] = true;
        }
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for &(u, v) in &self.edges {
            if let (Some(nu), Some(nv)) = (map[u], map[v]) {
                g.add_edge(nu, nv);
            }
        }
        (g, map)
    }

    /// Subgraph on the same vertex set containing only the edges in `keep`.
    /// Returns the subgraph and a map `new edge index -> old edge index`.
    pub fn edge_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut g = Graph::new(self.n);
        let mut back = Vec::with_capacity(keep.len());
        for &e in keep {
            let (u, v) = self.edges[e];
            g.add_edge(u, v);
            back.push(e);
        }
        (g, back)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// Set of pairwise vertex-disjoint edges, stored as sorted edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    /// Builds a matching from edge indices, asserting disjointness against `g`.
    pub fn new(g: &Graph, mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut used = vec![false; g.n()];
        for &e in &edges {
            let (u, v) = g.edge(e);
            assert!(!used[u] && !used[v], "edges share endpoint in matching");
            used[u] = true;
            used[v] = true;
        }
        Matching { edges }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Partial proper edge coloring: `colors[e]` is `Some(c)` with `1 <= c <= p`
/// for colored edges. Properness is a checked invariant (`verify_coloring`),
/// not enforced on every write, so algorithms can recolor freely mid-flight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    p: usize,
    colors: Vec<Option<usize>>,
}

impl EdgeColoring {
    pub fn new(p: usize, m: usize) -> Self {
        assert!(p >= 1, "color budget must be positive");
        EdgeColoring { p, colors: vec![None; m] }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn set(&mut self, e: usize, c: usize) {
        assert!((1..=self.p).contains(&c), "color {c} outside 1..={}", self.p);
        self.colors[e] = Some(c);
    }

    pub fn unset(&mut self, e: usize) {
        self.colors[e] = None;
    }

    pub fn get(&self, e: usize) -> Option<usize> {
        self.colors[e]
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    /// Size of each color class, indexed by color − 1.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.p];
        for c in self.colors.iter().flatten() {
            sizes[*c - 1] += 1;
        }
        sizes
    }

    /// Edge indices of each color class, indexed by color − 1.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut cls = vec![Vec::new(); self.p];
        for (e, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                cls[*c - 1].push(e);
            }
        }
        cls
    }
}

/// Checks that `c` is a valid partial proper edge coloring of `g`.
///
/// On failure the message names the first offending edge pair (or the edge
/// with an out-of-range color), which makes fuzz counterexamples readable.
pub fn verify_coloring(g: &Graph, c: &EdgeColoring) -> std::result::Result<(), String> {
    if c.len() != g.m() {
        return Err(format!("coloring covers {} edges, graph has {}", c.len(), g.m()));
    }
    // at[v][color-1] remembers which edge claimed the color at v
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; c.p()]; g.n()];
    for e in 0..g.m() {
        let Some(col) = c.get(e) else { continue };
        if col < 1 || col > c.p() {
            return Err(format!("edge {e} has color {col} outside 1..={}", c.p()));
        }
        let (u, v) = g.edge(e);
        for end in [u, v] {
            if let Some(other) = at[end][col - 1] {
                return Err(format!(
                    "edges {other} and {e} share vertex {end} and color {col}"
                ));
            }
            at[end][col - 1] = Some(e);
        }
    }
    Ok(())
}

/// Problem instance: find a subgraph with at least `l` edges that admits a
/// proper edge coloring with at most `p` colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MecsInstance {
    pub graph: Graph,
    pub l: usize,
    pub p: usize,
}

impl MecsInstance {
    pub fn new(graph: Graph, l: usize, p: usize) -> Self {
        assert!(p >= 1, "color budget must be positive");
        MecsInstance { graph, l, p }
    }
}

/// Solver output. `optimum` is populated only by engines that compute it
/// (the exact search does; the FPT solvers answer the decision question).
#[derive(Debug, Clone)]
pub struct MecsSolution {
    pub verdict: bool,
    pub witness: Option<EdgeColoring>,
    pub optimum: Option<usize>,
}

/// Graph whose edges carry positive integer labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// labels[e] is the label of edge e; always ≥ 1.
    pub labels: Vec<usize>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Self {
        assert_eq!(graph.m(), labels.len(), "one label per edge");
        assert!(labels.iter().all(|&l| l >= 1), "labels must be positive");
        LabeledGraph { graph, labels }
    }
}
