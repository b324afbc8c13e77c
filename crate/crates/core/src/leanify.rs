//! Exact treewidth for small graphs and the improvement loop that turns a
//! tree-decomposition into a lean one without increasing its width.
//!
//! Each iteration takes the least-order leanness violation `(s, t, Z_s, Z_t,
//! X)`, cuts the decomposition into one copy for each side of `X` and joins
//! the copies at `t` and `s`. The fatness vector drops strictly with every
//! step, which bounds the loop.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::decomp::{fatness, require_valid, width, DecompError, Fatness, TreeDecomposition};
use crate::graph::{Graph, VertexSet};
use crate::menger::{max_disjoint_paths, MengerError};
use crate::verify::{check_lean, LeanCheck, LeannessViolation, VerifyError};

/// Largest graph accepted by [`treewidth_exact`].
pub const EXACT_LIMIT: usize = 20;
/// Largest graph accepted by [`treewidth_oracle`].
pub const ORACLE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeanifyError {
    #[error("graph has {n} vertices, limit is {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Menger(#[from] MengerError),
    #[error("improvement failed: {}", .0.reason)]
    ImprovementFailed(Box<FailedStep>),
    #[error("no lean decomposition after {0} iterations")]
    MaxIters(usize),
}

/// Everything needed to replay a failed improvement step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedStep {
    pub reason: String,
    pub input: TreeDecomposition,
    pub violation: LeannessViolation,
    pub output: Option<TreeDecomposition>,
}

/// Exact treewidth with an optimal decomposition, for at most
/// [`EXACT_LIMIT`] vertices.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition), LeanifyError> {
    treewidth_exact_with_limit(g, EXACT_LIMIT)
}

/// [`treewidth_exact`] with a custom size limit (at most 30).
pub fn treewidth_exact_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<(usize, TreeDecomposition), LeanifyError> {
    let n = g.n();
    if n > limit.min(30) {
        return Err(LeanifyError::SizeLimit {
            n,
            limit: limit.min(30),
        });
    }
    if n == 0 {
        return Ok((0, TreeDecomposition::trivial(0, VertexSet::new())?));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    // q(s, v): vertices outside s ∪ {v} reachable from v through s
    let q = |s: u32, v: usize| -> u32 {
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        let mut nb = 0u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            nb |= next;
            frontier = next & s & !comp;
            comp |= frontier;
        }
        (nb & !comp & !s).count_ones()
    };
    // tw[s]: best width for eliminating exactly the set s first
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![u8::MAX; 1usize << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev as usize].max(q(prev, v) as u8);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    // reconstruct: the last vertex of each prefix set
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s as usize];
        let v = (0..n)
            .filter(|&v| s & (1 << v) != 0)
            .find(|&v| {
                let prev = s & !(1 << v);
                tw[prev as usize].max(q(prev, v) as u8) == target
            })
            .expect("optimal predecessor exists");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let td = decomposition_from_order(g, &order);
    let w = width(&td);
    debug_assert_eq!(w, tw[full as usize] as usize);
    Ok((w, td))
}

/// Decomposition induced by an elimination order: node `i` holds `order[i]`
/// and its later neighbours in the fill-in graph.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut higher: Vec<VertexSet> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect()
        })
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let hv = higher[v].clone();
        for (a, b) in hv.iter().tuple_combinations() {
            let (lo, hi) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
            higher[lo].insert(hi);
        }
        parent[i] = hv.iter().map(|w| pos[w]).min();
        let mut bag = hv;
        bag.insert(v);
        bags.push(bag);
    }
    let mut edges: Vec<(usize, usize)> = (0..n).filter_map(|i| parent[i].map(|p| (i, p))).collect();
    let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
    edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    let td = TreeDecomposition::new(n, bags, &edges).expect("elimination forest is a tree");
    cleanup(&td)
}

/// Brute-force treewidth over all elimination orderings, for at most
/// [`ORACLE_LIMIT`] vertices.
pub fn treewidth_oracle(g: &Graph) -> Result<usize, LeanifyError> {
    treewidth_oracle_with_limit(g, ORACLE_LIMIT)
}

pub fn treewidth_oracle_with_limit(g: &Graph, limit: usize) -> Result<usize, LeanifyError> {
    let n = g.n();
    if n > limit {
        return Err(LeanifyError::SizeLimit { n, limit });
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|v| (0..n).map(|w| g.has_edge(v, w)).collect())
        .collect();
    let mut best = n.saturating_sub(1);
    for perm in (0..n).permutations(n) {
        let mut a = adj.clone();
        let mut gone = vec![false; n];
        let mut w = 0;
        for &v in &perm {
            let nb: Vec<usize> = (0..n).filter(|&x| !gone[x] && a[v][x]).collect();
            w = w.max(nb.len());
            for (&x, &y) in nb.iter().tuple_combinations() {
                a[x][y] = true;
                a[y][x] = true;
            }
            gone[v] = true;
        }
        best = best.min(w);
    }
    Ok(best)
}

/// Contracts tree edges whose bags are nested, merging the smaller bag into
/// the larger, until no such edge is left. Empty bags disappear on the way.
/// Surviving nodes keep their relative order.
pub fn cleanup(td: &TreeDecomposition) -> TreeDecomposition {
    let count = td.node_count();
    let mut alive = vec![true; count];
    let bags = td.bags().to_vec();
    let mut adj: Vec<Vec<usize>> = (0..count).map(|x| td.tree_neighbors(x).to_vec()).collect();
    let mut root = td.root();
    'outer: loop {
        for s in 0..count {
            if !alive[s] {
                continue;
            }
            for &t in &adj[s] {
                let (gone, keep) = if bags[s].is_subset(&bags[t]) {
                    (s, t)
                } else if bags[t].is_subset(&bags[s]) {
                    (t, s)
                } else {
                    continue;
                };
                let moved = std::mem::take(&mut adj[gone]);
                for x in moved {
                    adj[x].retain(|&y| y != gone);
                    if x != keep {
                        adj[x].push(keep);
                        adj[keep].push(x);
                    }
                }
                adj[keep].sort_unstable();
                alive[gone] = false;
                if root == Some(gone) {
                    root = Some(keep);
                }
                continue 'outer;
            }
        }
        break;
    }
    let mut new_id = vec![usize::MAX; count];
    let mut next = 0;
    for x in 0..count {
        if alive[x] {
            new_id[x] = next;
            next += 1;
        }
    }
    let new_bags: Vec<VertexSet> = (0..count)
        .filter(|&x| alive[x])
        .map(|x| bags[x].clone())
        .collect();
    let mut edges = Vec::new();
    for s in 0..count {
        if alive[s] {
            edges.extend(
                adj[s]
                    .iter()
                    .filter(|&&t| s < t)
                    .map(|&t| (new_id[s], new_id[t])),
            );
        }
    }
    // the `with_bags` constructor rechecks tree shape
    let out = TreeDecomposition::new(td.vertex_count(), new_bags, &edges)
        .expect("contraction keeps a tree");
    match root {
        Some(r) => out.with_root(new_id[r]).expect("root survives"),
        None => out,
    }
}

/// One improvement step on the violation `v` (which must be of least order
/// among all violations of `td`).
pub fn improve_step(
    g: &Graph,
    td: &TreeDecomposition,
    v: &LeannessViolation,
) -> Result<TreeDecomposition, LeanifyError> {
    let fail = |reason: String, output: Option<TreeDecomposition>| {
        LeanifyError::ImprovementFailed(Box::new(FailedStep {
            reason,
            input: td.clone(),
            violation: v.clone(),
            output,
        }))
    };
    require_valid(g, td)?;
    v.revalidate(g, td)
        .map_err(|e| fail(format!("violation does not revalidate: {e}"), None))?;
    let flow = max_disjoint_paths(g, &v.z_s, &v.z_t)?;
    let sep = &v.separator;
    let x = &sep.separator;
    if flow.k() != x.len() {
        return Err(fail(
            format!("{} paths against separator of order {}", flow.k(), x.len()),
            None,
        ));
    }
    let n = g.n();
    let in_a = sep.side_a.mask(n);
    let in_b = sep.side_b.mask(n);
    let in_x = x.mask(n);
    // path index of each vertex, and the separator vertex of each path
    let mut path_of = vec![usize::MAX; n];
    let mut cross = Vec::with_capacity(flow.k());
    for (i, p) in flow.paths.paths.iter().enumerate() {
        let hits: Vec<usize> = p.iter().copied().filter(|&u| in_x[u]).collect();
        if hits.len() != 1 {
            return Err(fail(format!("path {p:?} meets X in {hits:?}"), None));
        }
        cross.push(hits[0]);
        for &u in p {
            path_of[u] = i;
        }
    }
    let copy_bag = |bag: &VertexSet, keep: &[bool], far: &[bool]| -> VertexSet {
        let mut out: VertexSet = bag.iter().filter(|&u| keep[u] || in_x[u]).collect();
        for u in bag {
            if far[u] && path_of[u] != usize::MAX {
                out.insert(cross[path_of[u]]);
            }
        }
        out
    };
    let count = td.node_count();
    let mut bags = Vec::with_capacity(2 * count);
    bags.extend(td.bags().iter().map(|b| copy_bag(b, &in_a, &in_b)));
    bags.extend(td.bags().iter().map(|b| copy_bag(b, &in_b, &in_a)));
    for u in 0..count {
        for copy in [u, count + u] {
            if bags[copy].len() > td.bag(u).len() {
                return Err(fail(format!("copy {copy} of node {u} grew"), None));
            }
        }
    }
    let mut edges = td.edges();
    let shifted: Vec<_> = edges.iter().map(|&(a, b)| (a + count, b + count)).collect();
    edges.extend(shifted);
    edges.push((v.t, count + v.s));
    let raw = TreeDecomposition::new(n, bags, &edges)?;
    let out = cleanup(&raw);
    let valid = crate::decomp::validate_td(g, &out)?;
    if !valid.is_empty() {
        return Err(fail(format!("output invalid: {valid:?}"), Some(out)));
    }
    if width(&out) > width(td) {
        return Err(fail("width increased".into(), Some(out)));
    }
    if !crate::decomp::fatness_less(&fatness(&out), &fatness(td))? {
        return Err(fail(
            format!(
                "fatness {} did not drop below {}",
                fatness(&out),
                fatness(td)
            ),
            Some(out),
        ));
    }
    Ok(out)
}

/// One row of an [`ImprovementTrace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub iter: usize,
    pub s: usize,
    pub t: usize,
    pub ell: usize,
    pub order: usize,
    pub width_before: usize,
    pub width_after: usize,
    pub fatness_before: Fatness,
    pub fatness_after: Fatness,
    pub bags_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ImprovementTrace {
    pub steps: Vec<TraceStep>,
}

impl ImprovementTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Fatness strictly decreasing and width non-increasing along the trace.
    pub fn is_monotone(&self) -> bool {
        self.steps.iter().all(|s| {
            s.fatness_after.try_cmp(&s.fatness_before) == Ok(std::cmp::Ordering::Less)
                && s.width_after <= s.width_before
        })
    }
}

impl fmt::Display for ImprovementTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(
                f,
                "{}\t{},{},{},{}\t{}\t{}",
                s.iter, s.s, s.t, s.ell, s.order, s.width_after, s.fatness_after
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeanifyOptions {
    pub max_iters: usize,
    pub bag_cap: usize,
}

impl Default for LeanifyOptions {
    fn default() -> Self {
        Self {
            max_iters: 10_000,
            bag_cap: 12,
        }
    }
}

/// Improves `td` until [`check_lean`] passes.
pub fn leanify_loop(
    g: &Graph,
    td: &TreeDecomposition,
    opts: LeanifyOptions,
) -> Result<(TreeDecomposition, ImprovementTrace), LeanifyError> {
    require_valid(g, td)?;
    let mut current = td.clone();
    let mut trace = ImprovementTrace::default();
    for iter in 1..=opts.max_iters + 1 {
        let v = match check_lean(g, &current, opts.bag_cap)? {
            LeanCheck::Lean => return Ok((current, trace)),
            LeanCheck::Violated(v) => v,
        };
        if iter > opts.max_iters {
            break;
        }
        let next = improve_step(g, &current, &v)?;
        trace.steps.push(TraceStep {
            iter,
            s: v.s,
            t: v.t,
            ell: v.ell,
            order: v.order(),
            width_before: width(&current),
            width_after: width(&next),
            fatness_before: fatness(&current),
            fatness_after: fatness(&next),
            bags_after: next.node_count(),
        });
        current = next;
    }
    Err(LeanifyError::MaxIters(opts.max_iters))
}
