//! Exhaustive reference solvers. These are the ground truth everything else is
//! cross-checked against, so they favor obvious correctness over speed and
//! refuse instances past a hard edge cap instead of silently crawling.

use crate::budget::WorkBudget;
use crate::error::{EckError, Result};
use crate::graph::{EdgeColoring, Graph, MecsInstance, MecsSolution};
use crate::vizing::vizing_color;

pub const EXACT_EDGE_CAP: usize = 24;

/// Proper p-edge-coloring of all of `g`, or None. Backtracks over edges in
/// descending order of endpoint degree sum (hardest first) and never opens a
/// color beyond the first unused one, which kills color-permutation symmetry.
fn color_with_p(g: &Graph, p: usize, budget: &mut WorkBudget) -> Result<Option<EdgeColoring>> {
    if g.m() == 0 {
        return Ok(Some(EdgeColoring::new(p.max(1), 0)));
    }
    if p == 0 || g.max_degree() > p {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    let mut used = vec![vec![false; p + 1]; g.n()];
    let mut colors = vec![0usize; g.m()];

    fn bt(
        i: usize,
        max_used: usize,
        g: &Graph,
        p: usize,
        order: &[usize],
        used: &mut [Vec<bool>],
        colors: &mut [usize],
        budget: &mut WorkBudget,
    ) -> Result<bool> {
        if i == order.len() {
            return Ok(true);
        }
        budget.tick("exact edge-coloring search")?;
        let e = order[i];
        let (u, v) = g.edge(e);
        for c in 1..=p.min(max_used + 1) {
            if used[u][c] || used[v][c] {
                continue;
            }
            used[u][c] = true;
            used[v][c] = true;
            colors[e] = c;
            if bt(i + 1, max_used.max(c), g, p, order, used, colors, budget)? {
                return Ok(true);
            }
            used[u][c] = false;
            used[v][c] = false;
        }
        Ok(false)
    }

    if bt(0, 0, g, p, &order, &mut used, &mut colors, budget)? {
        let mut out = EdgeColoring::new(p, g.m());
        for e in 0..g.m() {
            out.set(e, colors[e]);
        }
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

/// p-color the edge set `subset` of `g` if possible, using the constructive
/// Δ+1 routine whenever Δ(H) < p and falling back to search at Δ(H) = p.
fn color_subset(
    g: &Graph,
    subset: &[usize],
    p: usize,
    budget: &mut WorkBudget,
) -> Result<Option<EdgeColoring>> {
    let (h, back) = g.edge_subgraph(subset);
    let lifted = if h.max_degree() + 1 <= p {
        Some(vizing_color(&h))
    } else {
        color_with_p(&h, p, budget)?
    };
    Ok(lifted.map(|ch| {
        let mut c = EdgeColoring::new(p, g.m());
        for e in 0..h.m() {
            c.set(back[e], ch.get(e).expect("full coloring"));
        }
        c
    }))
}

/// Exact optimum by trying edge subsets largest-first: the first subset whose
/// graph is p-edge-colorable has maximum size. Errors with `TooLarge` above
/// `cap` edges so callers can pick a fallback instead of waiting on 2^m work.
pub fn solve_exact_capped_with(
    inst: &MecsInstance,
    cap: usize,
    budget: &mut WorkBudget,
) -> Result<MecsSolution> {
    let g = &inst.graph;
    if g.m() > cap {
        return Err(EckError::TooLarge(format!(
            "{} edges exceeds the exact solver cap of {cap}",
            g.m()
        )));
    }
    for size in (0..=g.m()).rev() {
        let mut found: Option<Vec<usize>> = None;
        for_each_combination(g.m(), size, &mut |subset| {
            budget.tick("exact subset sweep")?;
            let mut deg = vec![0usize; g.n()];
            for &e in subset {
                let (u, v) = g.edge(e);
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d > inst.p) {
                return Ok(true);
            }
            if color_subset(g, subset, inst.p, budget)?.is_some() {
                found = Some(subset.to_vec());
                return Ok(false); // stop: lexicographically first optimum
            }
            Ok(true)
        })?;
        if let Some(subset) = found {
            let verdict = size >= inst.l;
            let witness = if !verdict {
                None
            } else if inst.l == 0 {
                // the empty subgraph already meets the target
                Some(EdgeColoring::new(inst.p, g.m()))
            } else {
                color_subset(g, &subset, inst.p, budget)?
            };
            return Ok(MecsSolution {
                verdict,
                witness,
                optimum: Some(size),
            });
        }
    }
    unreachable!("the empty subset is always colorable");
}

pub fn solve_exact_capped(inst: &MecsInstance, cap: usize) -> Result<MecsSolution> {
    solve_exact_capped_with(inst, cap, &mut WorkBudget::unlimited())
}

pub fn solve_exact(inst: &MecsInstance) -> Result<MecsSolution> {
    solve_exact_capped(inst, EXACT_EDGE_CAP)
}

/// Exact chromatic index. By the Δ+1 theorem the answer is Δ or Δ+1, so a
/// single Δ-colorability search settles it.
pub fn chromatic_index_exact_with(g: &Graph, budget: &mut WorkBudget) -> Result<usize> {
    if g.m() == 0 {
        return Ok(0);
    }
    let d = g.max_degree();
    Ok(if color_with_p(g, d, budget)?.is_some() {
        d
    } else {
        d + 1
    })
}

pub fn chromatic_index_exact(g: &Graph) -> usize {
    chromatic_index_exact_with(g, &mut WorkBudget::unlimited()).expect("unlimited budget")
}

/// Calls `f` on every k-subset of 0..m in lexicographic order until f returns
/// Ok(false) or errors.
pub(crate) fn for_each_combination<F>(m: usize, k: usize, f: &mut F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    if k > m {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx)? {
            return Ok(());
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return Ok(());
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
