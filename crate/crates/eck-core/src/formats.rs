//! Plain-text formats for graphs, colorings, labeled graphs, and
//! red-blue domination instances.
//!
//! All formats share the same conventions: whitespace-separated integer
//! tokens, `#` starts a full-line comment, blank lines are ignored, and
//! parse errors carry the 1-based line number of the offending line.

use crate::error::{EckError, Result};
use crate::graph::{EdgeColoring, Graph, LabeledGraph};

/// Red-blue domination instance: bipartite graph between `red_count` red
/// vertices and `blue_count` blue vertices, asking for at most `k` red
/// vertices that dominate every blue vertex.
///
/// Edges are stored as `(red, blue)` pairs in their own 0-based id spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    pub red_count: usize,
    pub blue_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

fn fail(line: usize, msg: impl Into<String>) -> EckError {
    EckError::Parse { line, msg: msg.into() }
}

/// Iterator over meaningful lines: (1-based line number, trimmed content).
fn lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ints(line_no: usize, line: &str, want: usize, what: &str) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(want);
    for tok in line.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| fail(line_no, format!("expected integer, got `{tok}`")))?;
        out.push(v);
    }
    if out.len() != want {
        return Err(fail(
            line_no,
            format!("expected {want} integers ({what}), got {}", out.len()),
        ));
    }
    Ok(out)
}

/// Parses the graph format:
///
/// ```text
/// n m
/// u v        (m lines, 0 <= u < v < n)
/// ```
pub fn parse_graph(input: &str) -> Result<Graph> {
    let mut it = lines(input);
    let (ln, header) = it.next().ok_or_else(|| fail(1, "missing `n m` header"))?;
    let h = parse_ints(ln, header, 2, "n m")?;
    let (n, m) = (h[0], h[1]);
    let mut g = Graph::new(n);
    let mut count = 0;
    for (ln, line) in it {
        if count == m {
            return Err(fail(ln, format!("more than {m} edge lines")));
        }
        let e = parse_ints(ln, line, 2, "u v")?;
        let (u, v) = (e[0], e[1]);
        if u >= v {
            return Err(fail(ln, format!("edge must satisfy u < v, got {u} {v}")));
        }
        if v >= n {
            return Err(fail(ln, format!("vertex {v} out of range, n={n}")));
        }
        if g.has_edge(u, v) {
            return Err(fail(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(fail(1, format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

/// Prints a graph in the format accepted by [`parse_graph`].
pub fn print_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a coloring as `u v c` lines against a known graph: every referenced
/// edge must exist, colors must lie in `1..=p`, and no edge may repeat.
pub fn parse_coloring(input: &str, g: &Graph, p: usize) -> Result<EdgeColoring> {
    let mut c = EdgeColoring::new(p, g.m());
    for (ln, line) in lines(input) {
        let t = parse_ints(ln, line, 3, "u v c")?;
        let (u, v, col) = (t[0], t[1], t[2]);
        let e = g
            .edge_index(u, v)
            .ok_or_else(|| fail(ln, format!("no edge {u} {v} in graph")))?;
        if col < 1 || col > p {
            return Err(fail(ln, format!("color {col} outside 1..={p}")));
        }
        if c.get(e).is_some() {
            return Err(fail(ln, format!("edge {u} {v} colored twice")));
        }
        c.set(e, col);
    }
    Ok(c)
}

/// Prints the colored edges of `c` as `u v c` lines in edge-index order.
pub fn print_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::new();
    for e in 0..g.m() {
        if let Some(col) = c.get(e) {
            let (u, v) = g.edge(e);
            out.push_str(&format!("{u} {v} {col}\n"));
        }
    }
    out
}

/// Parses the labeled-graph format: like the graph format but edge lines are
/// `u v label` with `label >= 1`. Parallel labeled edges are not allowed.
pub fn parse_labeled_graph(input: &str) -> Result<LabeledGraph> {
    let mut it = lines(input);
    let (ln, header) = it.next().ok_or_else(|| fail(1, "missing `n m` header"))?;
    let h = parse_ints(ln, header, 2, "n m")?;
    let (n, m) = (h[0], h[1]);
    let mut g = Graph::new(n);
    let mut labels = Vec::new();
    for (ln, line) in it {
        if labels.len() == m {
            return Err(fail(ln, format!("more than {m} edge lines")));
        }
        let t = parse_ints(ln, line, 3, "u v label")?;
        let (u, v, lab) = (t[0], t[1], t[2]);
        if u >= v {
            return Err(fail(ln, format!("edge must satisfy u < v, got {u} {v}")));
        }
        if v >= n {
            return Err(fail(ln, format!("vertex {v} out of range, n={n}")));
        }
        if lab < 1 {
            return Err(fail(ln, "label must be >= 1".to_string()));
        }
        if g.has_edge(u, v) {
            return Err(fail(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        labels.push(lab);
    }
    if labels.len() != m {
        return Err(fail(1, format!("header declares {m} edges, found {}", labels.len())));
    }
    Ok(LabeledGraph::new(g, labels))
}

/// Prints a labeled graph in the format accepted by [`parse_labeled_graph`].
pub fn print_labeled_graph(lg: &LabeledGraph) -> String {
    let mut out = format!("{} {}\n", lg.graph.n(), lg.graph.m());
    for (e, &(u, v)) in lg.graph.edges().iter().enumerate() {
        out.push_str(&format!("{u} {v} {}\n", lg.labels[e]));
    }
    out
}

/// Parses a red-blue domination instance:
///
/// ```text
/// R B m k
/// r b        (m lines, 0 <= r < R, 0 <= b < B)
/// ```
pub fn parse_rbds(input: &str) -> Result<RbdsInstance> {
    let mut it = lines(input);
    let (ln, header) = it.next().ok_or_else(|| fail(1, "missing `R B m k` header"))?;
    let h = parse_ints(ln, header, 4, "R B m k")?;
    let (red_count, blue_count, m, k) = (h[0], h[1], h[2], h[3]);
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (ln, line) in it {
        if edges.len() == m {
            return Err(fail(ln, format!("more than {m} edge lines")));
        }
        let t = parse_ints(ln, line, 2, "r b")?;
        let (r, b) = (t[0], t[1]);
        if r >= red_count {
            return Err(fail(ln, format!("red vertex {r} out of range, R={red_count}")));
        }
        if b >= blue_count {
            return Err(fail(ln, format!("blue vertex {b} out of range, B={blue_count}")));
        }
        if !seen.insert((r, b)) {
            return Err(fail(ln, format!("duplicate edge {r} {b}")));
        }
        edges.push((r, b));
    }
    if edges.len() != m {
        return Err(fail(1, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(RbdsInstance { red_count, blue_count, edges, k })
}

/// Prints a red-blue domination instance in the format accepted by
/// [`parse_rbds`].
pub fn print_rbds(inst: &RbdsInstance) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        inst.red_count,
        inst.blue_count,
        inst.edges.len(),
        inst.k
    );
    for &(r, b) in &inst.edges {
        out.push_str(&format!("{r} {b}\n"));
    }
    out
}
