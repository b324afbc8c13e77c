//! Finite simple undirected graphs with dense vertex ids.
//!
//! Vertices are `0..n`. Neighbour lists are kept sorted, so every traversal in
//! the crate visits vertices in ascending id order and produces the same
//! witnesses from run to run.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("label {0:?} is used for more than one vertex")]
    DuplicateLabel(String),
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    ///
    /// Debug builds assert the precondition.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]), "unsorted input {v:?}");
        Self(v)
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + Clone + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self {
            adj,
            labels: None,
            edge_count,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            labels: None,
            edge_count: 0,
        }
    }

    /// Attaches one label per vertex. Labels must be pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Looks a vertex up by its label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    pub fn check_vertex_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.max() {
            Some(v) if v >= self.n() => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }

    /// Open neighbourhood of a vertex set.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let inside = set.mask(self.n());
        set.iter()
            .flat_map(|v| self.adj[v].iter().copied())
            .filter(|&w| !inside[w])
            .collect()
    }

    /// Connected components of `G - deleted`, each sorted, ordered by their
    /// smallest member.
    pub fn components(&self, deleted: &VertexSet) -> Vec<VertexSet> {
        let mut blocked = deleted.mask(self.n());
        self.components_masked(&mut blocked)
    }

    /// Components of the subgraph induced by `keep`.
    pub fn components_within(&self, keep: &VertexSet) -> Vec<VertexSet> {
        let mut blocked = vec![true; self.n()];
        for v in keep {
            blocked[v] = false;
        }
        self.components_masked(&mut blocked)
    }

    fn components_masked(&self, blocked: &mut [bool]) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if blocked[start] {
                continue;
            }
            blocked[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !blocked[w] {
                        blocked[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(&VertexSet::new()).len() <= 1
    }

    /// Whether `G[set]` is connected. The empty set is reported as not
    /// connected.
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        self.components_within(set).len() == 1
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()`.
    ///
    /// The returned map sends new ids to old ids; `keep` itself is that map
    /// since both are sorted.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|v| l[v].clone()).collect());
        (
            Graph {
                adj,
                labels,
                edge_count,
            },
            keep.as_slice().to_vec(),
        )
    }

    /// Copy of the graph with the given vertices' edges removed. Vertex ids
    /// are kept, so the deleted vertices stay behind as isolated vertices.
    pub fn without_vertices(&self, deleted: &VertexSet) -> Graph {
        let gone = deleted.mask(self.n());
        let adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, ns)| {
                if gone[v] {
                    Vec::new()
                } else {
                    ns.iter().copied().filter(|&w| !gone[w]).collect()
                }
            })
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adj,
            labels: self.labels.clone(),
            edge_count,
        }
    }

    /// Full scan of the structural invariants: symmetry, no loops, sorted
    /// duplicate-free neighbour lists.
    pub fn check_invariants(&self) -> Result<(), String> {
        for (v, ns) in self.adj.iter().enumerate() {
            if !ns.windows(2).all(|w| w[0] < w[1]) {
                return Err(format!("neighbour list of {v} not strictly sorted"));
            }
            for &w in ns {
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if w >= self.n() || self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("asymmetric edge {v}->{w}"));
                }
            }
        }
        Ok(())
    }
}
