//! Shared test support: an exhaustive small-graph corpus, brute-force
//! oracles that share no code with the library algorithms, and random
//! decomposition generators.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::OnceLock;

use itertools::Itertools;
use leantd::{Graph, TreeDecomposition, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Exhaustive corpus

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = (i.min(j), i.max(j));
    1 << (j * (j - 1) / 2 + i)
}

/// Canonical code: the least edge bitmask over all relabellings that list
/// vertices by nondecreasing degree.
fn canonical(adj: &[u8]) -> u32 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| deg[v]);
    let slot_deg: Vec<u32> = slots.iter().map(|&v| deg[v]).collect();
    let mut best = u32::MAX;
    let mut perm = vec![0usize; n];
    let mut used = vec![false; n];
    fn go(
        pos: usize,
        adj: &[u8],
        deg: &[u32],
        slot_deg: &[u32],
        perm: &mut [usize],
        used: &mut [bool],
        best: &mut u32,
    ) {
        let n = adj.len();
        if pos == n {
            let mut code = 0;
            for j in 1..n {
                for i in 0..j {
                    if adj[perm[i]] >> perm[j] & 1 == 1 {
                        code |= pair_bit(i, j);
                    }
                }
            }
            *best = (*best).min(code);
            return;
        }
        for v in 0..n {
            if !used[v] && deg[v] == slot_deg[pos] {
                used[v] = true;
                perm[pos] = v;
                go(pos + 1, adj, deg, slot_deg, perm, used, best);
                used[v] = false;
            }
        }
    }
    go(0, adj, &deg, &slot_deg, &mut perm, &mut used, &mut best);
    best
}

fn adj_connected(adj: &[u8]) -> bool {
    let n = adj.len();
    let mut seen: u8 = 1;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v] >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

fn adj_to_graph(adj: &[u8]) -> Graph {
    let n = adj.len();
    let edges: Vec<_> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// Every graph on `1..=max_n` vertices up to isomorphism, grouped by order.
/// Graphs on `n` vertices arise from those on `n - 1` by adding one vertex
/// with every possible neighbourhood.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Vec<u8>>> {
    assert!(max_n <= 8);
    let mut levels: Vec<Vec<Vec<u8>>> = vec![vec![vec![0u8]]];
    for n in 2..=max_n {
        let mut seen: HashMap<u32, Vec<u8>> = HashMap::new();
        for base in &levels[n - 2] {
            for nb in 0u8..(1 << (n - 1)) {
                let mut adj = base.clone();
                for (v, a) in adj.iter_mut().enumerate() {
                    if nb >> v & 1 == 1 {
                        *a |= 1 << (n - 1);
                    }
                }
                adj.push(nb);
                seen.entry(canonical(&adj)).or_insert(adj);
            }
        }
        let mut level: Vec<_> = seen.into_iter().collect();
        level.sort_by_key(|(code, _)| *code);
        levels.push(level.into_iter().map(|(_, adj)| adj).collect());
    }
    levels
}

/// All connected graphs on at most 7 vertices up to isomorphism (996).
pub fn connected_corpus() -> &'static [Graph] {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        all_graphs(7)
            .iter()
            .flatten()
            .filter(|adj| adj_connected(adj))
            .map(|adj| adj_to_graph(adj))
            .collect()
    })
}

/// `count` graphs `G(n, p)` with `n` in `5..=12`.
pub fn random_corpus(count: u64) -> Vec<Graph> {
    (0..count)
        .map(|seed| {
            let n = 5 + (seed % 8) as usize;
            let p = 0.25 + 0.05 * (seed % 7) as f64;
            leantd::zoo::gen_standard(leantd::zoo::Family::Random { n, p, seed }).unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Brute-force oracles

fn mask(set: &VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

/// Vertex masks of all A–B paths, deduplicated.
pub fn brute_path_masks(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<u64> {
    assert!(g.n() <= 64);
    let (am, bm) = (mask(a), mask(b));
    let mut out = Vec::new();
    fn dfs(g: &Graph, v: usize, used: u64, blocked: u64, bm: u64, out: &mut Vec<u64>) {
        for &w in g.neighbors(v) {
            let bit = 1u64 << w;
            if used & bit != 0 {
                continue;
            }
            if bm & bit != 0 && blocked & bit == 0 {
                out.push(used | bit);
            } else if blocked & bit == 0 {
                dfs(g, w, used | bit, blocked, bm, out);
            }
        }
    }
    for s in a.iter() {
        if bm >> s & 1 == 1 {
            out.push(1 << s);
        } else {
            // interior and end avoid A; end in B \ A
            dfs(g, s, 1 << s, am, bm & !am, &mut out);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Largest number of pairwise disjoint masks, capped at `cap`.
pub fn max_disjoint_masks(masks: &[u64], cap: usize) -> usize {
    fn go(masks: &[u64], start: usize, used: u64, depth: usize, cap: usize, best: &mut usize) {
        *best = (*best).max(depth);
        if *best >= cap {
            return;
        }
        for i in start..masks.len() {
            if masks[i] & used == 0 {
                go(masks, i + 1, used | masks[i], depth + 1, cap, best);
                if *best >= cap {
                    return;
                }
            }
        }
    }
    let mut best = 0;
    go(masks, 0, 0, 0, cap, &mut best);
    best
}

/// Maximum number of disjoint A–B paths by exhaustive search.
pub fn brute_max_paths(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    let masks = brute_path_masks(g, a, b);
    max_disjoint_masks(&masks, a.len().min(b.len()))
}

/// Smallest A–B separator by trying all vertex subsets in order of size.
pub fn brute_min_separator(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    let n = g.n();
    assert!(n <= 20);
    for k in 0..=n {
        for x in (0..n).combinations(k) {
            let mut xm = 0u64;
            for &v in &x {
                xm |= 1 << v;
            }
            let mut seen = xm;
            let mut stack: Vec<usize> = a.iter().filter(|&v| xm >> v & 1 == 0).collect();
            for &v in &stack {
                seen |= 1 << v;
            }
            let mut hit = false;
            while let Some(v) = stack.pop() {
                if b.contains(v) {
                    hit = true;
                    break;
                }
                for &w in g.neighbors(v) {
                    if seen >> w & 1 == 0 {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            if !hit {
                return k;
            }
        }
    }
    unreachable!()
}

/// Node path between `s` and `t` found by a plain DFS on the tree edges.
fn tree_path(td: &TreeDecomposition, s: usize, t: usize) -> Vec<usize> {
    let k = td.node_count();
    let mut adj = vec![Vec::new(); k];
    for (x, y) in td.edges() {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut pred = vec![usize::MAX; k];
    pred[s] = s;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if pred[w] == usize::MAX {
                pred[w] = v;
                stack.push(w);
            }
        }
    }
    let mut path = vec![t];
    while *path.last().unwrap() != s {
        path.push(pred[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

fn min_adhesion(td: &TreeDecomposition, s: usize, t: usize) -> usize {
    tree_path(td, s, t)
        .windows(2)
        .map(|w| td.bag(w[0]).intersection(td.bag(w[1])).len())
        .min()
        .unwrap_or(usize::MAX)
}

/// The least order of a leanness violation, if any, by trying every pair of
/// equal-size subsets of every pair of bags.
pub fn brute_lean_violation_order(g: &Graph, td: &TreeDecomposition) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..td.node_count() {
        for t in s..td.node_count() {
            let cap = min_adhesion(td, s, t);
            let top = td.bag(s).len().min(td.bag(t).len()).min(cap);
            for ell in 1..=top {
                for zs in td.bag(s).iter().combinations(ell) {
                    let zs = VertexSet::from_sorted(zs);
                    for zt in td.bag(t).iter().combinations(ell) {
                        let zt = VertexSet::from_sorted(zt);
                        let k = brute_max_paths(g, &zs, &zt);
                        if k < ell {
                            best = Some(best.map_or(k, |b: usize| b.min(k)));
                        }
                    }
                }
            }
        }
    }
    best
}

/// Whether all pairs of distinct nodes (or only comparable ones) are linked,
/// by exhaustive path search.
pub fn brute_linked(g: &Graph, td: &TreeDecomposition, comparable_only: bool) -> bool {
    let root = td.effective_root();
    let on_root_path = |x: usize, y: usize| tree_path(td, root, y).contains(&x);
    for s in 0..td.node_count() {
        for t in s + 1..td.node_count() {
            if comparable_only && !on_root_path(s, t) && !on_root_path(t, s) {
                continue;
            }
            let need = min_adhesion(td, s, t);
            if need > 0 && brute_max_paths(g, td.bag(s), td.bag(t)) < need {
                return false;
            }
        }
    }
    true
}

/// Treewidth by trying every elimination order; independent of the
/// library's oracle.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 8);
    if n == 0 {
        return 0;
    }
    let base: Vec<u64> = (0..n)
        .map(|v| mask(&g.neighbors(v).iter().copied().collect()))
        .collect();
    let mut best = usize::MAX;
    for order in (0..n).permutations(n) {
        let mut adj = base.clone();
        let mut alive: u64 = (1 << n) - 1;
        let mut w = 0;
        for &v in &order {
            let nb = adj[v] & alive & !(1 << v);
            w = w.max(nb.count_ones() as usize);
            if w >= best {
                break;
            }
            for (u, a) in adj.iter_mut().enumerate() {
                if nb >> u & 1 == 1 {
                    *a |= nb & !(1 << u);
                }
            }
            alive &= !(1 << v);
        }
        best = best.min(w);
    }
    best
}

// ---------------------------------------------------------------------------
// Random decompositions

/// A random tree on `nodes` nodes, a connected subtree per vertex, and a
/// graph whose edges join vertices with meeting subtrees with probability
/// `p`. The decomposition is valid by construction and rooted at a random
/// node.
pub fn random_td(r: &mut ChaCha8Rng, n: usize, nodes: usize, p: f64) -> (Graph, TreeDecomposition) {
    let tree: Vec<(usize, usize)> = (1..nodes).map(|i| (r.gen_range(0..i), i)).collect();
    let mut tadj = vec![Vec::new(); nodes];
    for &(x, y) in &tree {
        tadj[x].push(y);
        tadj[y].push(x);
    }
    let mut bags = vec![VertexSet::new(); nodes];
    let mut sub = vec![Vec::new(); n];
    for (v, nodes_of_v) in sub.iter_mut().enumerate() {
        let size = r.gen_range(1..=nodes.div_ceil(2));
        let mut own = vec![r.gen_range(0..nodes)];
        while own.len() < size {
            let frontier: Vec<usize> = own
                .iter()
                .flat_map(|&x| tadj[x].iter().copied())
                .filter(|y| !own.contains(y))
                .unique()
                .collect();
            match frontier.choose(r) {
                Some(&y) => own.push(y),
                None => break,
            }
        }
        for &x in &own {
            bags[x].insert(v);
        }
        *nodes_of_v = own;
    }
    let edges: Vec<_> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| sub[u].iter().any(|x| sub[v].contains(x)) && r.gen_bool(p))
        .collect();
    let g = Graph::new(n, &edges).unwrap();
    let root = r.gen_range(0..nodes);
    let td = TreeDecomposition::new(n, bags, &tree)
        .unwrap()
        .with_root(root)
        .unwrap();
    (g, td)
}
