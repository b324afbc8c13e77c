//! Maximum families of disjoint A–B paths and minimum A–B separators.
//!
//! Paths follow the usual A–B convention: a path starts in `A`, ends in `B`
//! and has no interior vertex in `A ∪ B`; a vertex of `A ∩ B` is a trivial
//! path on its own. Every answer carries both Menger certificates, the path
//! family and a separator of the same size.
//!
//! The engine is a unit vertex-capacity flow on the split graph (`v_in ->
//! v_out`), augmented along breadth-first shortest paths that explore
//! vertices in ascending id order. The separator reported is the minimum cut
//! closest to `A`, read off the final residual reachability.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MengerError {
    #[error("source set A is empty")]
    EmptyA,
    #[error("target set B is empty")]
    EmptyB,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{separator} does not separate A from B; path {path:?} avoids it")]
    NotASeparator {
        separator: VertexSet,
        path: Vec<usize>,
    },
}

/// Pairwise disjoint A–B paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub a: VertexSet,
    pub b: VertexSet,
    /// Each path is listed from its `A` end to its `B` end. Paths are sorted
    /// by their first vertex.
    pub paths: Vec<Vec<usize>>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks every invariant of an A–B path family against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let mut used = vec![false; g.n()];
        for p in &self.paths {
            let (first, last) = match (p.first(), p.last()) {
                (Some(&f), Some(&l)) => (f, l),
                _ => return Err("empty path".into()),
            };
            if !self.a.contains(first) || !self.b.contains(last) {
                return Err(format!("path {p:?} does not run from A to B"));
            }
            if p.len() > 1 {
                if let Some(&x) = p[1..p.len() - 1]
                    .iter()
                    .find(|&&x| self.a.contains(x) || self.b.contains(x))
                {
                    return Err(format!("path {p:?} has interior vertex {x} in A ∪ B"));
                }
                if self.b.contains(first) || self.a.contains(last) {
                    return Err(format!("non-trivial path {p:?} has an end in A ∩ B"));
                }
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("path {p:?} uses non-edge {}-{}", w[0], w[1]));
                }
            }
            for &v in p {
                if v >= g.n() || std::mem::replace(&mut used[v], true) {
                    return Err(format!("vertex {v} used twice or out of range"));
                }
            }
        }
        Ok(())
    }
}

/// A vertex set `X` meeting every A–B path, together with the split of
/// `V - X` into the part reachable from `A - X` and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorWitness {
    pub separator: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl SeparatorWitness {
    pub fn order(&self) -> usize {
        self.separator.len()
    }

    /// `side_a ∪ X` and `side_b ∪ X`: the separation of the graph.
    pub fn separation(&self) -> (VertexSet, VertexSet) {
        (
            self.side_a.union(&self.separator),
            self.side_b.union(&self.separator),
        )
    }

    pub fn validate(&self, g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<(), String> {
        let x = &self.separator;
        if !self.side_a.is_disjoint(&self.side_b)
            || !self.side_a.is_disjoint(x)
            || !self.side_b.is_disjoint(x)
            || self.side_a.len() + self.side_b.len() + x.len() != g.n()
        {
            return Err("sides and separator do not partition V".into());
        }
        if !a.difference(x).is_subset(&self.side_a) {
            return Err("A - X not inside side A".into());
        }
        if !b.difference(x).is_subset(&self.side_b) {
            return Err("B - X not inside side B".into());
        }
        if !a.intersection(b).is_subset(x) {
            return Err("A ∩ B not inside X".into());
        }
        for u in &self.side_a {
            if let Some(&w) = g.neighbors(u).iter().find(|&&w| self.side_b.contains(w)) {
                return Err(format!("edge {u}-{w} crosses the separator"));
            }
        }
        Ok(())
    }
}

/// Both Menger certificates for one query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MengerResult {
    pub paths: PathFamily,
    pub separator: SeparatorWitness,
}

impl MengerResult {
    /// The common value `|paths| = |X|`.
    pub fn k(&self) -> usize {
        self.paths.len()
    }
}

const INF: i32 = i32::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i32,
    flow: i32,
}

/// Split-graph flow network, reusable across queries on the same graph.
///
/// Node `2v` is `v_in`, node `2v + 1` is `v_out`.
#[derive(Debug, Clone)]
pub struct MengerEngine<'g> {
    g: &'g Graph,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    inner: Vec<usize>,
    // per-query scratch
    is_source: Vec<bool>,
    is_sink: Vec<bool>,
    pred: Vec<usize>,
    seen: Vec<bool>,
}

impl<'g> MengerEngine<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let nodes = 2 * g.n();
        let mut engine = Self {
            g,
            arcs: Vec::with_capacity(2 * (g.n() + 2 * g.edge_count())),
            out: vec![Vec::new(); nodes],
            inner: Vec::with_capacity(g.n()),
            is_source: vec![false; g.n()],
            is_sink: vec![false; g.n()],
            pred: vec![usize::MAX; nodes],
            seen: vec![false; nodes],
        };
        for v in 0..g.n() {
            engine.inner.push(engine.arcs.len());
            engine.add_arc(2 * v, 2 * v + 1, 1);
        }
        for v in 0..g.n() {
            for &w in g.neighbors(v) {
                engine.add_arc(2 * v + 1, 2 * w, INF);
            }
        }
        engine
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            flow: 0,
        });
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Maximum number of disjoint A–B paths, without certificates.
    pub fn max_flow(&mut self, a: &VertexSet, b: &VertexSet) -> Result<usize, MengerError> {
        self.prepare(a, b)?;
        let mut k = 0;
        while self.augment(a) {
            k += 1;
        }
        self.clear(a, b);
        Ok(k)
    }

    /// Maximum disjoint A–B path family with a minimum separator.
    pub fn solve(&mut self, a: &VertexSet, b: &VertexSet) -> Result<MengerResult, MengerError> {
        self.prepare(a, b)?;
        while self.augment(a) {}
        let paths = self.extract_paths(a, b);
        let separator = self.extract_separator(a);
        self.clear(a, b);
        Ok(MengerResult {
            paths: PathFamily {
                a: a.clone(),
                b: b.clone(),
                paths,
            },
            separator,
        })
    }

    fn prepare(&mut self, a: &VertexSet, b: &VertexSet) -> Result<(), MengerError> {
        if a.is_empty() {
            return Err(MengerError::EmptyA);
        }
        if b.is_empty() {
            return Err(MengerError::EmptyB);
        }
        self.g.check_vertex_set(a)?;
        self.g.check_vertex_set(b)?;
        for arc in &mut self.arcs {
            arc.flow = 0;
        }
        for v in a {
            self.is_source[v] = true;
        }
        for v in b {
            self.is_sink[v] = true;
        }
        Ok(())
    }

    fn clear(&mut self, a: &VertexSet, b: &VertexSet) {
        for v in a {
            self.is_source[v] = false;
        }
        for v in b {
            self.is_sink[v] = false;
        }
    }

    /// Residual BFS from every `a_in` to any `b_out`; pushes one unit along
    /// the first shortest path found.
    fn augment(&mut self, a: &VertexSet) -> bool {
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut queue = VecDeque::new();
        for v in a {
            self.seen[2 * v] = true;
            self.pred[2 * v] = usize::MAX;
            queue.push_back(2 * v);
        }
        let mut target = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &id in &self.out[x] {
                let arc = &self.arcs[id];
                if arc.cap - arc.flow <= 0 || self.seen[arc.to] {
                    continue;
                }
                let y = arc.to;
                self.seen[y] = true;
                self.pred[y] = id;
                if y % 2 == 1 && self.is_sink[y / 2] {
                    target = Some(y);
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
        let Some(mut y) = target else {
            return false;
        };
        while self.pred[y] != usize::MAX {
            let id = self.pred[y];
            self.arcs[id].flow += 1;
            self.arcs[id ^ 1].flow -= 1;
            y = self.arcs[id ^ 1].to;
        }
        true
    }

    fn extract_paths(&self, a: &VertexSet, b: &VertexSet) -> Vec<Vec<usize>> {
        // A vertex carries flow iff its internal arc is saturated. Walks start at sources with no incoming flow
        // from a neighbour, and stop at the first sink whose flow is not
        // passed on.
        let n = self.g.n();
        let carries = |v: usize| self.arcs[self.inner[v]].flow == 1;
        let next = |v: usize| -> Option<usize> {
            self.out[2 * v + 1]
                .iter()
                .map(|&id| &self.arcs[id])
                .find(|arc| arc.cap > 0 && arc.flow > 0)
                .map(|arc| arc.to / 2)
        };
        let mut fed = vec![false; n];
        for v in 0..n {
            if carries(v) {
                if let Some(w) = next(v) {
                    fed[w] = true;
                }
            }
        }
        let mut paths = Vec::new();
        for start in a {
            if !carries(start) || fed[start] {
                continue;
            }
            let mut walk = vec![start];
            let mut v = start;
            while let Some(w) = next(v) {
                walk.push(w);
                v = w;
            }
            debug_assert!(b.contains(v));
            paths.push(trim_to_ab_path(&walk, a, b));
        }
        paths.sort();
        paths
    }

    fn extract_separator(&mut self, a: &VertexSet) -> SeparatorWitness {
        let n = self.g.n();
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut queue = VecDeque::new();
        for v in a {
            self.seen[2 * v] = true;
            queue.push_back(2 * v);
        }
        while let Some(x) = queue.pop_front() {
            for &id in &self.out[x] {
                let arc = &self.arcs[id];
                if arc.cap - arc.flow > 0 && !self.seen[arc.to] {
                    self.seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        let separator: VertexSet = (0..n)
            .filter(|&v| self.seen[2 * v] && !self.seen[2 * v + 1])
            .collect();
        let (side_a, side_b) = split_sides(self.g, &separator, a);
        SeparatorWitness {
            separator,
            side_a,
            side_b,
        }
    }
}

/// Shortens an A-to-B walk to its last `A` vertex and the first `B` vertex
/// after it.
fn trim_to_ab_path(walk: &[usize], a: &VertexSet, b: &VertexSet) -> Vec<usize> {
    let start = walk
        .iter()
        .rposition(|&v| a.contains(v))
        .expect("walk starts in A");
    let end = start
        + walk[start..]
            .iter()
            .position(|&v| b.contains(v))
            .expect("walk ends in B");
    walk[start..=end].to_vec()
}

/// `side_a` = vertices reachable from `A - X` in `G - X`; `side_b` = rest of
/// `V - X`.
fn split_sides(g: &Graph, separator: &VertexSet, a: &VertexSet) -> (VertexSet, VertexSet) {
    let mut blocked = separator.mask(g.n());
    let mut reach = vec![false; g.n()];
    let mut queue: VecDeque<usize> = a.iter().filter(|&v| !blocked[v]).collect();
    for &v in &queue {
        reach[v] = true;
        blocked[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !blocked[w] {
                blocked[w] = true;
                reach[w] = true;
                queue.push_back(w);
            }
        }
    }
    let side_a = (0..g.n()).filter(|&v| reach[v]).collect();
    let side_b = (0..g.n())
        .filter(|&v| !reach[v] && !separator.contains(v))
        .collect();
    (side_a, side_b)
}

/// Maximum family of disjoint A–B paths and a separator of equal size.
pub fn max_disjoint_paths(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<MengerResult, MengerError> {
    MengerEngine::new(g).solve(a, b)
}

/// Result of a separation test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCheck {
    pub separates: bool,
    /// An A–B path avoiding `X` when `separates` is false.
    pub violating_path: Option<Vec<usize>>,
}

/// Whether every A–B path meets `x`.
pub fn is_separator(
    g: &Graph,
    x: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<SeparationCheck, MengerError> {
    g.check_vertex_set(x)?;
    g.check_vertex_set(a)?;
    g.check_vertex_set(b)?;
    let mut pred = vec![usize::MAX; g.n()];
    let mut seen = x.mask(g.n());
    let mut queue = VecDeque::new();
    for v in a {
        if !seen[v] {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if b.contains(v) {
            let mut walk = vec![v];
            let mut cur = v;
            while pred[cur] != usize::MAX {
                cur = pred[cur];
                walk.push(cur);
            }
            walk.reverse();
            return Ok(SeparationCheck {
                separates: false,
                violating_path: Some(trim_to_ab_path(&walk, a, b)),
            });
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                pred[w] = v;
                queue.push_back(w);
            }
        }
    }
    Ok(SeparationCheck {
        separates: true,
        violating_path: None,
    })
}

/// Whether the separator `x` has minimum order among all A–B separators.
pub fn distinguishes_efficiently(
    g: &Graph,
    x: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<bool, MengerError> {
    let check = is_separator(g, x, a, b)?;
    if let Some(path) = check.violating_path {
        return Err(MengerError::NotASeparator {
            separator: x.clone(),
            path,
        });
    }
    let k = MengerEngine::new(g).max_flow(a, b)?;
    Ok(x.len() == k)
}
