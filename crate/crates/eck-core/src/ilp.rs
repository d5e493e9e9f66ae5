//! Solver parameterized by a small vertex cover X.
//!
//! Every edge touches X, so an optimal solution decomposes into a colored
//! subgraph H′ inside X plus matchings from X into the outside W. Matchings
//! that agree on which cover vertices they use and which outside
//! *neighborhood class* each one is matched into are interchangeable, so the
//! search only counts matchings per such "type" — an integer program — and
//! turns the counts back into concrete edges afterwards.
//!
//! Two capacity families beyond the obvious degree/color constraints are
//! needed to make the count model exact (without them it overcounts, e.g.
//! claiming 4 on a triangle plus a disjoint edge at p = 2 where 3 is
//! optimal): a (cover vertex, class) pair can be used at most |Γ(S)| times
//! overall, and at most p − p0 counted matchings may take fresh colors. Even
//! then a count vector can be unrealizable in corner cases, so the verdict
//! search additionally gates every candidate on an exact slot-assignment
//! check — the same backtracking later used to build the witness.

use crate::budget::WorkBudget;
use crate::error::{EckError, Result};
use crate::graph::{verify_coloring, EdgeColoring, Graph, MecsInstance, MecsSolution};
use crate::vertex_cover::min_vertex_cover_capped;

pub const DEFAULT_VC_CAP: usize = 4;
pub const MAX_TYPES: usize = 100_000;

/// A way a single matching from X into W can interact with the cover: the
/// cover vertices it saturates, and for each one the neighborhood class of
/// the outside endpoint. `x_prime` ascending fixes a canonical slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTuple {
    pub x_prime: Vec<usize>,
    /// slots[i] = sorted neighborhood (⊆ X) paired with x_prime[i]; always
    /// nonempty and containing x_prime[i].
    pub slots: Vec<Vec<usize>>,
}

impl TypeTuple {
    /// Number of cover vertices the matching saturates (its edge count).
    pub fn size(&self) -> usize {
        self.x_prime.len()
    }

    pub fn is_present(&self, x: usize) -> bool {
        self.x_prime.binary_search(&x).is_ok()
    }
}

/// Precomputed neighborhood-class data shared by the model builder and the
/// reconstruction.
#[derive(Debug, Clone)]
pub struct AuxFunctions {
    /// The vertex cover, sorted.
    pub cover: Vec<usize>,
    /// Vertices outside the cover with their (sorted) neighborhoods.
    pub outside: Vec<(usize, Vec<usize>)>,
    /// Realized nonempty neighborhood classes: (S, Γ(S) members), both
    /// sorted, classes in lexicographic order of S.
    pub classes: Vec<(Vec<usize>, Vec<usize>)>,
}

impl AuxFunctions {
    /// Members of the class with neighborhood exactly `s`.
    pub fn gamma(&self, s: &[usize]) -> &[usize] {
        self.classes
            .iter()
            .find(|(cs, _)| cs.as_slice() == s)
            .map(|(_, members)| members.as_slice())
            .unwrap_or(&[])
    }

    /// Number of outside vertices sharing w's exact neighborhood (w included).
    pub fn false_twins(&self, w: usize) -> usize {
        let nb = &self
            .outside
            .iter()
            .find(|(v, _)| *v == w)
            .expect("w outside the cover")
            .1;
        self.outside.iter().filter(|(_, n)| n == nb).count()
    }

    /// Number of slots of `t` equal to w's neighborhood.
    pub fn nr_nbr_present(&self, w: usize, t: &TypeTuple) -> usize {
        let nb = &self
            .outside
            .iter()
            .find(|(v, _)| *v == w)
            .expect("w outside the cover")
            .1;
        t.slots.iter().filter(|s| *s == nb).count()
    }
}

fn assert_cover(g: &Graph, x: &[usize]) {
    for &(u, v) in g.edges() {
        assert!(
            x.contains(&u) || x.contains(&v),
            "edge ({u},{v}) not covered by the given vertex cover"
        );
    }
}

pub fn aux_functions(g: &Graph, x: &[usize]) -> AuxFunctions {
    assert_cover(g, x);
    let mut cover = x.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let outside: Vec<(usize, Vec<usize>)> = (0..g.n())
        .filter(|v| cover.binary_search(v).is_err())
        .map(|v| (v, g.neighbors(v).to_vec()))
        .collect();
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (w, nb) in &outside {
        if nb.is_empty() {
            continue; // isolated outside vertices can never be matched
        }
        match classes.iter_mut().find(|(s, _)| s == nb) {
            Some((_, members)) => members.push(*w),
            None => classes.push((nb.clone(), vec![*w])),
        }
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    AuxFunctions {
        cover,
        outside,
        classes,
    }
}

/// All matching types over the cover: choose the saturated subset X′
/// (ascending) and pair each member with a realized class containing it, no
/// class being used more often than it has members.
pub fn enumerate_types(g: &Graph, x: &[usize]) -> Result<Vec<TypeTuple>> {
    let aux = aux_functions(g, x);
    let mut types = Vec::new();
    let k = aux.cover.len();
    for r in 0..=k {
        let mut pick: Vec<usize> = (0..r).collect();
        loop {
            if pick.len() == r {
                let xp: Vec<usize> = pick.iter().map(|&i| aux.cover[i]).collect();
                fill_slots(
                    &xp,
                    0,
                    &mut vec![0usize; aux.classes.len()],
                    &mut Vec::new(),
                    &aux,
                    &mut types,
                )?;
            }
            // next r-combination of 0..k
            let mut i = r;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if pick[i] != i + k - r {
                    break;
                }
                if i == 0 {
                    break;
                }
            }
            if r == 0 || (i == 0 && pick[0] == k - r) {
                break;
            }
            pick[i] += 1;
            for j in i + 1..r {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Ok(types)
}

fn fill_slots(
    xp: &[usize],
    i: usize,
    used: &mut Vec<usize>,
    slots: &mut Vec<Vec<usize>>,
    aux: &AuxFunctions,
    out: &mut Vec<TypeTuple>,
) -> Result<()> {
    if i == xp.len() {
        if out.len() >= MAX_TYPES {
            return Err(EckError::TooManyTypes(out.len() + 1));
        }
        out.push(TypeTuple {
            x_prime: xp.to_vec(),
            slots: slots.clone(),
        });
        return Ok(());
    }
    for ci in 0..aux.classes.len() {
        let (s, members) = &aux.classes[ci];
        if s.binary_search(&xp[i]).is_ok() && used[ci] < members.len() {
            used[ci] += 1;
            slots.push(s.clone());
            fill_slots(xp, i + 1, used, slots, aux, out)?;
            slots.pop();
            used[ci] -= 1;
        }
    }
    Ok(())
}

/// The guessed part of the solution inside the cover: an edge subset of
/// G[X], the number p0 of colors it uses, and a proper surjective coloring.
#[derive(Debug, Clone)]
pub struct PartialGuess {
    pub h_prime: Vec<(usize, usize)>,
    pub p0: usize,
    pub phi_prime: Vec<usize>,
    /// Total palette size of the enclosing instance (sets the RHS scales).
    pub p: usize,
}

#[derive(Debug, Clone)]
pub struct IlpConstraint {
    /// Family tag, kept for tests and debugging; not part of the LP dump.
    pub label: String,
    /// (coefficient, variable index); coefficients are all nonnegative.
    pub terms: Vec<(usize, usize)>,
    pub rhs: usize,
}

/// Maximize Σ size(T)·Y over counted matchings Y_{T,α} ≥ 0, α = 0 meaning "a
/// fresh color beyond p0". All constraints are ≤ rows with nonnegative
/// coefficients; variable values range over 0..=p.
#[derive(Debug, Clone)]
pub struct IlpModel {
    /// (type index, α); type-major, α ascending.
    pub variables: Vec<(usize, usize)>,
    /// Objective coefficient per variable (the type's size).
    pub objective: Vec<usize>,
    pub constraints: Vec<IlpConstraint>,
    /// Upper bound for every variable (= p).
    pub var_bound: usize,
}

fn forbidden_pairs(guess: &PartialGuess, types: &[TypeTuple]) -> Vec<(usize, usize)> {
    let mut forb = Vec::new();
    for (&(u, v), &c) in guess.h_prime.iter().zip(&guess.phi_prime) {
        for (ti, t) in types.iter().enumerate() {
            if t.is_present(u) || t.is_present(v) {
                forb.push((ti, c));
            }
        }
    }
    forb.sort_unstable();
    forb.dedup();
    forb
}

pub fn build_ilp(guess: &PartialGuess, types: &[TypeTuple], aux: &AuxFunctions) -> IlpModel {
    let p = guess.p;
    let p0 = guess.p0;
    let mut deg_h = vec![0usize; aux.cover.len()];
    for &(u, v) in &guess.h_prime {
        for e in [u, v] {
            let i = aux.cover.binary_search(&e).expect("H' endpoint in cover");
            deg_h[i] += 1;
        }
    }
    let mut variables = Vec::new();
    let mut objective = Vec::new();
    for (ti, t) in types.iter().enumerate() {
        for a in 0..=p0 {
            variables.push((ti, a));
            objective.push(t.size());
        }
    }
    let var_index = |ti: usize, a: usize| -> usize {
        // dense layout: p0+1 colors per type
        ti * (p0 + 1) + a
    };
    let mut constraints = Vec::new();
    // degree capacity at each cover vertex
    for (i, &x) in aux.cover.iter().enumerate() {
        let terms: Vec<(usize, usize)> = variables
            .iter()
            .enumerate()
            .filter(|(_, (ti, _))| types[*ti].is_present(x))
            .map(|(vi, _)| (1, vi))
            .collect();
        constraints.push(IlpConstraint {
            label: format!("deg-cap x={x}"),
            terms,
            rhs: p - deg_h[i],
        });
    }
    // colors already used inside H' cannot recolor a matching touching its
    // endpoints
    for (ti, a) in forbidden_pairs(guess, types) {
        constraints.push(IlpConstraint {
            label: format!("color-clash T={ti} a={a}"),
            terms: vec![(1, var_index(ti, a))],
            rhs: 0,
        });
    }
    // total load on each neighborhood class
    for (s, members) in &aux.classes {
        let terms: Vec<(usize, usize)> = variables
            .iter()
            .enumerate()
            .filter_map(|(vi, (ti, _))| {
                let cnt = types[*ti].slots.iter().filter(|sl| *sl == s).count();
                (cnt > 0).then_some((cnt, vi))
            })
            .collect();
        constraints.push(IlpConstraint {
            label: format!("twin-load S={s:?}"),
            terms,
            rhs: p * members.len(),
        });
    }
    // at most one counted matching may reuse each existing color
    for a in 1..=p0 {
        let terms: Vec<(usize, usize)> = variables
            .iter()
            .enumerate()
            .filter(|(_, (_, va))| *va == a)
            .map(|(vi, _)| (1, vi))
            .collect();
        constraints.push(IlpConstraint {
            label: format!("one-per-color a={a}"),
            terms,
            rhs: 1,
        });
    }
    // at most p matchings in total
    constraints.push(IlpConstraint {
        label: "total-matchings".into(),
        terms: (0..variables.len()).map(|vi| (1, vi)).collect(),
        rhs: p,
    });
    // pair capacity: a cover vertex can be matched into a class at most
    // |Γ(S)| times across all matchings
    for &x in &aux.cover {
        for (s, members) in &aux.classes {
            if s.binary_search(&x).is_err() {
                continue;
            }
            let terms: Vec<(usize, usize)> = variables
                .iter()
                .enumerate()
                .filter(|(_, (ti, _))| {
                    types[*ti]
                        .x_prime
                        .iter()
                        .zip(&types[*ti].slots)
                        .any(|(&px, ps)| px == x && ps == s)
                })
                .map(|(vi, _)| (1, vi))
                .collect();
            constraints.push(IlpConstraint {
                label: format!("pair-cap x={x} S={s:?}"),
                terms,
                rhs: members.len(),
            });
        }
    }
    // only p − p0 colors remain for matchings that take a fresh color
    constraints.push(IlpConstraint {
        label: "fresh-colors".into(),
        terms: variables
            .iter()
            .enumerate()
            .filter(|(_, (_, a))| *a == 0)
            .map(|(vi, _)| (1, vi))
            .collect(),
        rhs: p - p0,
    });
    IlpModel {
        variables,
        objective,
        constraints,
        var_bound: p,
    }
}

/// Exact maximization over integral assignments by depth-first unit
/// increments in nondecreasing variable order; all rows have nonnegative
/// coefficients, so a violated row can never recover and prunes the branch.
pub fn solve_ilp_with(model: &IlpModel, budget: &mut WorkBudget) -> Result<(usize, Vec<usize>)> {
    let nv = model.variables.len();
    let mut rows_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv]; // var -> (row, coef)
    for (ri, c) in model.constraints.iter().enumerate() {
        for &(coef, vi) in &c.terms {
            if coef > 0 {
                rows_of[vi].push((ri, coef));
            }
        }
    }
    let mut best_val = 0usize;
    let mut best = vec![0usize; nv];
    let mut cur = vec![0usize; nv];
    let mut row_sum = vec![0usize; model.constraints.len()];

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        idx: usize,
        val: usize,
        model: &IlpModel,
        rows_of: &[Vec<(usize, usize)>],
        cur: &mut Vec<usize>,
        row_sum: &mut Vec<usize>,
        best_val: &mut usize,
        best: &mut Vec<usize>,
        budget: &mut WorkBudget,
    ) -> Result<()> {
        budget.tick("ilp branching")?;
        if val > *best_val {
            *best_val = val;
            best.clone_from(cur);
        }
        for j in idx..model.variables.len() {
            if cur[j] >= model.var_bound {
                continue;
            }
            let ok = rows_of[j]
                .iter()
                .all(|&(ri, coef)| row_sum[ri] + coef <= model.constraints[ri].rhs);
            if !ok {
                continue;
            }
            cur[j] += 1;
            for &(ri, coef) in &rows_of[j] {
                row_sum[ri] += coef;
            }
            dfs(
                j,
                val + model.objective[j],
                model,
                rows_of,
                cur,
                row_sum,
                best_val,
                best,
                budget,
            )?;
            cur[j] -= 1;
            for &(ri, coef) in &rows_of[j] {
                row_sum[ri] -= coef;
            }
        }
        Ok(())
    }

    dfs(
        0,
        0,
        model,
        &rows_of,
        &mut cur,
        &mut row_sum,
        &mut best_val,
        &mut best,
        budget,
    )?;
    Ok((best_val, best))
}

pub fn solve_ilp(model: &IlpModel) -> (usize, Vec<usize>) {
    solve_ilp_with(model, &mut WorkBudget::unlimited()).expect("unlimited budget cannot trip")
}

/// Plain-text rendering of a model: a legend of the types, the objective,
/// then one `coef*var + … <= rhs` line per constraint.
pub fn render_lp(model: &IlpModel, types: &[TypeTuple]) -> String {
    let mut out = String::new();
    let mut legend: Vec<usize> = model.variables.iter().map(|&(ti, _)| ti).collect();
    legend.dedup();
    for ti in legend {
        let t = &types[ti];
        out.push_str(&format!(
            "# T{ti} = (X'={:?}; slots={:?})\n",
            t.x_prime, t.slots
        ));
    }
    let name = |vi: usize| {
        let (ti, a) = model.variables[vi];
        format!("Y[T{ti},a{a}]")
    };
    let obj: Vec<String> = model
        .objective
        .iter()
        .enumerate()
        .map(|(vi, c)| format!("{c}*{}", name(vi)))
        .collect();
    out.push_str(&format!("max: {}\n", obj.join(" + ")));
    for c in &model.constraints {
        if c.terms.is_empty() {
            out.push_str(&format!("0 <= {}\n", c.rhs));
            continue;
        }
        let lhs: Vec<String> = c
            .terms
            .iter()
            .map(|&(coef, vi)| format!("{coef}*{}", name(vi)))
            .collect();
        out.push_str(&format!("{} <= {}\n", lhs.join(" + "), c.rhs));
    }
    out
}

/// Exact backtracking assignment of matching slots to concrete outside
/// vertices: within one matching the endpoints are distinct, and a concrete
/// edge (x, w) is used at most once overall. Scarcer classes first, then
/// lowest-numbered candidates.
fn assign_slots(
    units: &[(usize, usize)],
    types: &[TypeTuple],
    aux: &AuxFunctions,
    budget: &mut WorkBudget,
) -> Result<Option<Vec<usize>>> {
    // slot list: (unit index, cover vertex, class index)
    let mut slots: Vec<(usize, usize, usize)> = Vec::new();
    for (ui, &(ti, _)) in units.iter().enumerate() {
        let t = &types[ti];
        for (x, s) in t.x_prime.iter().zip(&t.slots) {
            let ci = aux
                .classes
                .iter()
                .position(|(cs, _)| cs == s)
                .expect("slot class realized");
            slots.push((ui, *x, ci));
        }
    }
    let mut order: Vec<usize> = (0..slots.len()).collect();
    order.sort_by_key(|&i| aux.classes[slots[i].2].1.len());

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        slots: &[(usize, usize, usize)],
        aux: &AuxFunctions,
        unit_used: &mut Vec<Vec<usize>>,
        pair_used: &mut Vec<(usize, usize)>,
        assign: &mut Vec<usize>,
        budget: &mut WorkBudget,
    ) -> Result<bool> {
        if k == order.len() {
            return Ok(true);
        }
        budget.tick("slot assignment")?;
        let (ui, x, ci) = slots[order[k]];
        for &w in &aux.classes[ci].1 {
            if unit_used[ui].contains(&w) || pair_used.contains(&(x, w)) {
                continue;
            }
            unit_used[ui].push(w);
            pair_used.push((x, w));
            assign[order[k]] = w;
            if go(k + 1, order, slots, aux, unit_used, pair_used, assign, budget)? {
                return Ok(true);
            }
            unit_used[ui].pop();
            pair_used.pop();
        }
        Ok(false)
    }

    let mut unit_used = vec![Vec::new(); units.len()];
    let mut pair_used = Vec::new();
    let mut assign = vec![usize::MAX; slots.len()];
    if go(
        0,
        &order,
        &slots,
        aux,
        &mut unit_used,
        &mut pair_used,
        &mut assign,
        budget,
    )? {
        Ok(Some(assign))
    } else {
        Ok(None)
    }
}

fn units_realizable(
    units: &[(usize, usize)],
    types: &[TypeTuple],
    aux: &AuxFunctions,
    budget: &mut WorkBudget,
) -> Result<bool> {
    Ok(assign_slots(units, types, aux, budget)?.is_some())
}

/// Turn counted matchings back into a concrete colored subgraph extending
/// (H′, φ′): α > 0 matchings reuse color α, α = 0 matchings take fresh
/// colors p0+1, p0+2, … in order.
fn reconstruct_units(
    g: &Graph,
    guess: &PartialGuess,
    types: &[TypeTuple],
    aux: &AuxFunctions,
    units: &[(usize, usize)],
    budget: &mut WorkBudget,
) -> Result<EdgeColoring> {
    let assign = assign_slots(units, types, aux, budget)?.ok_or_else(|| {
        EckError::Reconstruction("no consistent slot assignment for the chosen counts".into())
    })?;
    let mut fresh = guess.p0;
    let mut unit_color = Vec::with_capacity(units.len());
    for &(_, a) in units {
        if a == 0 {
            fresh += 1;
            unit_color.push(fresh);
        } else {
            unit_color.push(a);
        }
    }
    if fresh > guess.p {
        return Err(EckError::Reconstruction(format!(
            "needed {fresh} colors with only {} available",
            guess.p
        )));
    }
    let mut c = EdgeColoring::new(guess.p, g.m());
    for (&(u, v), &col) in guess.h_prime.iter().zip(&guess.phi_prime) {
        let e = g.edge_index(u, v).expect("H' edge present in g");
        c.set(e, col);
    }
    let mut si = 0usize;
    for (ui, &(ti, _)) in units.iter().enumerate() {
        let t = &types[ti];
        for &x in &t.x_prime {
            let w = assign[si];
            si += 1;
            let e = g
                .edge_index(x, w)
                .expect("matched pair must be an edge of g");
            debug_assert!(c.get(e).is_none(), "edge colored twice");
            c.set(e, unit_color[ui]);
        }
    }
    if let Err(msg) = verify_coloring(g, &c) {
        return Err(EckError::Reconstruction(msg));
    }
    Ok(c)
}

/// Expand a model assignment into unit matchings and realize them as edges.
/// The returned coloring extends (H′, φ′); its colored edge count is
/// |E(H′)| plus the achieved objective.
pub fn reconstruct(
    g: &Graph,
    guess: &PartialGuess,
    model: &IlpModel,
    types: &[TypeTuple],
    aux: &AuxFunctions,
    assignment: &[usize],
) -> Result<EdgeColoring> {
    assert_eq!(assignment.len(), model.variables.len());
    let mut units = Vec::new();
    for (vi, &count) in assignment.iter().enumerate() {
        let (ti, a) = model.variables[vi];
        if types[ti].size() == 0 {
            continue; // empty type carries no edges
        }
        for _ in 0..count {
            units.push((ti, a));
        }
    }
    reconstruct_units(g, guess, types, aux, &units, &mut WorkBudget::unlimited())
}

struct GuessSearch<'a> {
    types: &'a [TypeTuple],
    aux: &'a AuxFunctions,
    deg_h: Vec<usize>, // indexed like aux.cover
    p: usize,
    p0: usize,
    units: Vec<(usize, usize)>,
    target: usize,
}

impl<'a> GuessSearch<'a> {
    /// Depth-first search over multisets of units (≤ p of them) maintaining
    /// the capacity families incrementally; a candidate needs value ≥ target
    /// and a realizable slot assignment. Once the value bar is met,
    /// realizability is decisive: adding more units only adds slots, so an
    /// unrealizable multiset never becomes realizable again.
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        idx: usize,
        cnt: usize,
        val: usize,
        x_load: &mut Vec<usize>,
        pair_load: &mut Vec<Vec<usize>>, // [cover idx][class idx]
        class_load: &mut Vec<usize>,
        color_load: &mut Vec<usize>, // index 0 = fresh, 1..=p0 existing
        chosen: &mut Vec<(usize, usize)>,
        budget: &mut WorkBudget,
    ) -> Result<bool> {
        budget.tick("ilp verdict search")?;
        if val >= self.target {
            return units_realizable(chosen, self.types, self.aux, budget);
        }
        if cnt == self.p {
            return Ok(false);
        }
        for j in idx..self.units.len() {
            let (ti, a) = self.units[j];
            let t = &self.types[ti];
            if !self.feasible(t, a, x_load, pair_load, class_load, color_load) {
                continue;
            }
            self.apply(t, a, 1, x_load, pair_load, class_load, color_load);
            chosen.push((ti, a));
            let hit = self.dfs(
                j,
                cnt + 1,
                val + t.size(),
                x_load,
                pair_load,
                class_load,
                color_load,
                chosen,
                budget,
            )?;
            if hit {
                return Ok(true);
            }
            chosen.pop();
            self.apply(t, a, usize::MAX, x_load, pair_load, class_load, color_load);
        }
        Ok(false)
    }

    fn feasible(
        &self,
        t: &TypeTuple,
        a: usize,
        x_load: &[usize],
        pair_load: &[Vec<usize>],
        class_load: &[usize],
        color_load: &[usize],
    ) -> bool {
        for (x, s) in t.x_prime.iter().zip(&t.slots) {
            let xi = self.aux.cover.binary_search(x).unwrap();
            if x_load[xi] + 1 > self.p - self.deg_h[xi] {
                return false;
            }
            let ci = self
                .aux
                .classes
                .iter()
                .position(|(cs, _)| cs == s)
                .unwrap();
            if pair_load[xi][ci] + 1 > self.aux.classes[ci].1.len() {
                return false;
            }
        }
        for ci in 0..self.aux.classes.len() {
            let cnt = t
                .slots
                .iter()
                .filter(|s| **s == self.aux.classes[ci].0)
                .count();
            if cnt > 0 && class_load[ci] + cnt > self.p * self.aux.classes[ci].1.len() {
                return false;
            }
        }
        if a == 0 {
            if color_load[0] + 1 > self.p - self.p0 {
                return false;
            }
        } else if color_load[a] + 1 > 1 {
            return false;
        }
        true
    }

    /// delta = 1 to add a unit, usize::MAX (−1 in wrapping terms) to remove.
    fn apply(
        &self,
        t: &TypeTuple,
        a: usize,
        delta: usize,
        x_load: &mut [usize],
        pair_load: &mut [Vec<usize>],
        class_load: &mut [usize],
        color_load: &mut [usize],
    ) {
        for (x, s) in t.x_prime.iter().zip(&t.slots) {
            let xi = self.aux.cover.binary_search(x).unwrap();
            x_load[xi] = x_load[xi].wrapping_add(delta);
            let ci = self
                .aux
                .classes
                .iter()
                .position(|(cs, _)| cs == s)
                .unwrap();
            pair_load[xi][ci] = pair_load[xi][ci].wrapping_add(delta);
        }
        for ci in 0..self.aux.classes.len() {
            let cnt = t
                .slots
                .iter()
                .filter(|s| **s == self.aux.classes[ci].0)
                .count();
            class_load[ci] = class_load[ci].wrapping_add(cnt.wrapping_mul(delta));
        }
        color_load[if a == 0 { 0 } else { a }] =
            color_load[if a == 0 { 0 } else { a }].wrapping_add(delta);
    }
}

pub fn solve_via_ilp_with(
    inst: &MecsInstance,
    vc_cap: usize,
    budget: &mut WorkBudget,
) -> Result<MecsSolution> {
    let g = &inst.graph;
    let p = inst.p;
    if inst.l == 0 {
        return Ok(MecsSolution {
            verdict: true,
            witness: Some(EdgeColoring::new(p, g.m())),
            optimum: None,
        });
    }
    let x = min_vertex_cover_capped(g, vc_cap)?;
    let types = enumerate_types(g, &x)?;
    let aux = aux_functions(g, &x);
    let gx_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            aux.cover.binary_search(&u).is_ok() && aux.cover.binary_search(&v).is_ok()
        })
        .collect();
    // no p-colorable subgraph can beat |E(G[X])| + p·|X|: edges outside G[X]
    // go from X to W and each color class holds at most |X| of those
    if inst.l > gx_edges.len() + p * aux.cover.len() {
        return Ok(MecsSolution {
            verdict: false,
            witness: None,
            optimum: None,
        });
    }

    for hsz in 0..=gx_edges.len() {
        if inst.l > hsz && inst.l - hsz > p * aux.cover.len() {
            continue; // even a fully saturated cover cannot close the gap
        }
        let mut found: Option<EdgeColoring> = None;
        for_each_subset(gx_edges.len(), hsz, &mut |picked| -> Result<bool> {
            let hedges: Vec<(usize, usize)> = picked.iter().map(|&i| gx_edges[i]).collect();
            let p0s: Vec<usize> = if hsz == 0 {
                vec![0]
            } else {
                (1..=p.min(hsz)).collect()
            };
            for p0 in p0s {
                let mut phi = vec![1usize; hsz];
                loop {
                    budget.tick("ilp guess sweep")?;
                    if is_surjective(&phi, p0) && is_proper(&hedges, &phi) {
                        let guess = PartialGuess {
                            h_prime: hedges.clone(),
                            p0,
                            phi_prime: phi.clone(),
                            p,
                        };
                        if let Some(c) =
                            try_guess(g, &guess, &types, &aux, inst.l, budget)?
                        {
                            found = Some(c);
                            return Ok(false);
                        }
                    }
                    if hsz == 0 || !next_tuple(&mut phi, p0) {
                        break;
                    }
                }
            }
            Ok(true)
        })?;
        if let Some(c) = found {
            return Ok(MecsSolution {
                verdict: true,
                witness: Some(c),
                optimum: None,
            });
        }
    }
    Ok(MecsSolution {
        verdict: false,
        witness: None,
        optimum: None,
    })
}

/// Run the gated count search for one guess; on success reconstruct and
/// return the verified witness.
fn try_guess(
    g: &Graph,
    guess: &PartialGuess,
    types: &[TypeTuple],
    aux: &AuxFunctions,
    l: usize,
    budget: &mut WorkBudget,
) -> Result<Option<EdgeColoring>> {
    let hsz = guess.h_prime.len();
    let target = l.saturating_sub(hsz);
    let mut deg_h = vec![0usize; aux.cover.len()];
    for &(u, v) in &guess.h_prime {
        for e in [u, v] {
            deg_h[aux.cover.binary_search(&e).unwrap()] += 1;
        }
    }
    let forb = forbidden_pairs(guess, types);
    let units: Vec<(usize, usize)> = (0..types.len())
        .flat_map(|ti| (0..=guess.p0).map(move |a| (ti, a)))
        .filter(|&(ti, a)| types[ti].size() > 0 && forb.binary_search(&(ti, a)).is_err())
        .collect();
    let search = GuessSearch {
        types,
        aux,
        deg_h,
        p: guess.p,
        p0: guess.p0,
        units,
        target,
    };
    let mut chosen = Vec::new();
    let hit = search.dfs(
        0,
        0,
        0,
        &mut vec![0; aux.cover.len()],
        &mut vec![vec![0; aux.classes.len()]; aux.cover.len()],
        &mut vec![0; aux.classes.len()],
        &mut vec![0; guess.p0 + 1],
        &mut chosen,
        budget,
    )?;
    if !hit {
        return Ok(None);
    }
    let c = reconstruct_units(g, guess, types, aux, &chosen, budget)?;
    assert!(c.colored_count() >= l, "witness below target");
    Ok(Some(c))
}

fn is_surjective(phi: &[usize], p0: usize) -> bool {
    (1..=p0).all(|c| phi.contains(&c))
}

fn is_proper(edges: &[(usize, usize)], phi: &[usize]) -> bool {
    let mut seen = Vec::new();
    for (&(u, v), &c) in edges.iter().zip(phi) {
        if seen.contains(&(u, c)) || seen.contains(&(v, c)) {
            return false;
        }
        seen.push((u, c));
        seen.push((v, c));
    }
    true
}

/// Odometer over {1..p0}^len, rightmost digit fastest; false when wrapped.
fn next_tuple(phi: &mut [usize], p0: usize) -> bool {
    for d in phi.iter_mut().rev() {
        if *d < p0 {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}

/// Calls `f` on every k-subset of 0..m in lexicographic order until it
/// returns Ok(false) or errors.
fn for_each_subset<F>(m: usize, k: usize, f: &mut F) -> Result<()>
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

pub fn solve_via_ilp(inst: &MecsInstance) -> Result<MecsSolution> {
    solve_via_ilp_with(inst, DEFAULT_VC_CAP, &mut WorkBudget::unlimited())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::solve_exact;
    use crate::vertex_cover::min_vertex_cover;

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn types_for_a_path() {
        let types = enumerate_types(&p3(), &[1]).unwrap();
        assert_eq!(types.len(), 2);
        assert_eq!(types[0].x_prime, Vec::<usize>::new());
        assert_eq!(types[1].x_prime, vec![1]);
        assert_eq!(types[1].slots, vec![vec![1]]);
    }

    #[test]
    fn types_for_a_star() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let types = enumerate_types(&g, &[0]).unwrap();
        assert_eq!(types.len(), 2); // all leaves share one class
        assert_eq!(types[1].slots, vec![vec![0]]);
    }

    #[test]
    fn types_for_no_cover_vertices() {
        let g = Graph::new(3);
        let types = enumerate_types(&g, &[]).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].size(), 0);
    }

    #[test]
    fn aux_values_on_the_path() {
        let aux = aux_functions(&p3(), &[1]);
        assert_eq!(aux.false_twins(0), 2);
        assert_eq!(aux.false_twins(2), 2);
        let types = enumerate_types(&p3(), &[1]).unwrap();
        assert_eq!(aux.nr_nbr_present(0, &types[1]), 1);
        assert_eq!(aux.nr_nbr_present(0, &types[0]), 0);
        assert!(types[1].is_present(1));
        assert!(!types[0].is_present(1));
        assert_eq!(aux.gamma(&[1]), &[0, 2]);
    }

    #[test]
    fn path_model_solves_to_two() {
        let types = enumerate_types(&p3(), &[1]).unwrap();
        let aux = aux_functions(&p3(), &[1]);
        let guess = PartialGuess {
            h_prime: vec![],
            p0: 0,
            phi_prime: vec![],
            p: 2,
        };
        let model = build_ilp(&guess, &types, &aux);
        assert_eq!(model.variables, vec![(0, 0), (1, 0)]);
        assert_eq!(model.objective, vec![0, 1]);
        let (val, assignment) = solve_ilp(&model);
        assert_eq!(val, 2);
        assert_eq!(assignment, vec![0, 2]);
        let witness = reconstruct(&p3(), &guess, &model, &types, &aux, &assignment).unwrap();
        assert_eq!(witness.colored_count(), 2);
        assert_eq!(witness.class_sizes(), vec![1, 1]);
    }

    #[test]
    fn hand_built_models() {
        let zero = IlpModel {
            variables: vec![(0, 0)],
            objective: vec![5],
            constraints: vec![IlpConstraint {
                label: "z".into(),
                terms: vec![(1, 0)],
                rhs: 0,
            }],
            var_bound: 3,
        };
        assert_eq!(solve_ilp(&zero), (0, vec![0]));
        let single = IlpModel {
            variables: vec![(0, 0)],
            objective: vec![3],
            constraints: vec![IlpConstraint {
                label: "cap".into(),
                terms: vec![(1, 0)],
                rhs: 1,
            }],
            var_bound: 3,
        };
        assert_eq!(solve_ilp(&single), (3, vec![1]));
    }

    #[test]
    fn color_clash_rows_forbid_reuse() {
        // H' = the single edge (0,1) of a path 0-1-2 with cover {0,1}
        let g = p3();
        let types = enumerate_types(&g, &[0, 1]).unwrap();
        let aux = aux_functions(&g, &[0, 1]);
        let guess = PartialGuess {
            h_prime: vec![(0, 1)],
            p0: 1,
            phi_prime: vec![1],
            p: 2,
        };
        let model = build_ilp(&guess, &types, &aux);
        for c in model.constraints.iter().filter(|c| c.label.starts_with("color-clash")) {
            assert_eq!(c.rhs, 0);
            assert_eq!(c.terms.len(), 1);
            let (ti, a) = model.variables[c.terms[0].1];
            assert_eq!(a, 1);
            assert!(types[ti].is_present(0) || types[ti].is_present(1));
        }
        // every type containing 0 or 1 is forbidden at color 1
        let forbidden: Vec<usize> = model
            .constraints
            .iter()
            .filter(|c| c.label.starts_with("color-clash"))
            .map(|c| c.terms[0].1)
            .collect();
        for (vi, &(ti, a)) in model.variables.iter().enumerate() {
            let hit = types[ti].size() > 0 && a == 1;
            assert_eq!(forbidden.contains(&vi), hit);
        }
    }

    #[test]
    fn reconstruct_from_all_zero_keeps_the_guess() {
        let g = p3();
        let types = enumerate_types(&g, &[0, 1]).unwrap();
        let aux = aux_functions(&g, &[0, 1]);
        let guess = PartialGuess {
            h_prime: vec![(0, 1)],
            p0: 1,
            phi_prime: vec![1],
            p: 2,
        };
        let model = build_ilp(&guess, &types, &aux);
        let zeros = vec![0; model.variables.len()];
        let w = reconstruct(&g, &guess, &model, &types, &aux, &zeros).unwrap();
        assert_eq!(w.colored_count(), 1);
        assert_eq!(w.get(0), Some(1));
    }

    #[test]
    fn reconstruct_prefers_low_vertices() {
        // star with three leaves, two fresh matchings into the leaf class
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let types = enumerate_types(&g, &[0]).unwrap();
        let aux = aux_functions(&g, &[0]);
        let guess = PartialGuess {
            h_prime: vec![],
            p0: 0,
            phi_prime: vec![],
            p: 2,
        };
        let model = build_ilp(&guess, &types, &aux);
        // variables: [(empty,0), (star-type,0)]
        let w = reconstruct(&g, &guess, &model, &types, &aux, &[0, 2]).unwrap();
        assert_eq!(w.get(0), Some(1)); // leaf 1, fresh color 1
        assert_eq!(w.get(1), Some(2)); // leaf 2, fresh color 2
        assert_eq!(w.get(2), None); // leaf 3 unused
    }

    #[test]
    fn lp_rendering_shape() {
        let types = enumerate_types(&p3(), &[1]).unwrap();
        let aux = aux_functions(&p3(), &[1]);
        let guess = PartialGuess {
            h_prime: vec![],
            p0: 0,
            phi_prime: vec![],
            p: 2,
        };
        let model = build_ilp(&guess, &types, &aux);
        let text = render_lp(&model, &types);
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("# T0 = "));
        assert!(lines.next().unwrap().starts_with("# T1 = "));
        assert_eq!(
            lines.next().unwrap(),
            "max: 0*Y[T0,a0] + 1*Y[T1,a0]"
        );
        for rest in lines {
            assert!(rest.contains("<="), "constraint line: {rest}");
        }
    }

    #[test]
    fn verdicts_on_the_named_instances() {
        let yes = solve_via_ilp(&MecsInstance::new(p3(), 2, 2)).unwrap();
        assert!(yes.verdict);
        assert_eq!(yes.witness.unwrap().colored_count(), 2);
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert!(!solve_via_ilp(&MecsInstance::new(k3, 3, 2)).unwrap().verdict);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let sol = solve_via_ilp(&MecsInstance::new(k4.clone(), 4, 2)).unwrap();
        assert!(sol.verdict);
        let w = sol.witness.unwrap();
        assert!(verify_coloring(&k4, &w).is_ok());
        assert_eq!(w.colored_count(), 4);
    }

    #[test]
    fn counting_alone_would_overcount_this_one() {
        // triangle plus a far edge: optimum at p=2 is 3, and the count model
        // without the pair-capacity family claims 4
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]);
        assert!(solve_via_ilp(&MecsInstance::new(g.clone(), 3, 2)).unwrap().verdict);
        assert!(!solve_via_ilp(&MecsInstance::new(g, 4, 2)).unwrap().verdict);
    }

    #[test]
    fn vc_cap_trips_as_budget() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        match solve_via_ilp_with(
            &MecsInstance::new(k4, 2, 2),
            2,
            &mut WorkBudget::unlimited(),
        ) {
            Err(EckError::Budget(_)) => {}
            other => panic!("expected Budget, got {other:?}"),
        }
    }

    #[test]
    fn fuzz_against_the_oracle() {
        let mut state = 0x6a09e667f3bcc909u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut tested = 0;
        while tested < 120 {
            let n = 3 + (next() % 4) as usize; // 3..=6
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 40 {
                        g.add_edge(u, v);
                    }
                }
            }
            if min_vertex_cover(&g).len() > 3 {
                continue;
            }
            let p = 1 + (next() % 3) as usize;
            let l = (next() % (g.m() as u64 + 1)) as usize;
            let inst = MecsInstance::new(g, l, p);
            let truth = solve_exact(&inst).unwrap().verdict;
            let got = solve_via_ilp(&inst).unwrap();
            assert_eq!(truth, got.verdict, "disagreement on {inst:?}");
            if let Some(w) = got.witness {
                assert!(verify_coloring(&inst.graph, &w).is_ok());
                assert!(w.colored_count() >= inst.l);
            }
            tested += 1;
        }
    }
}
