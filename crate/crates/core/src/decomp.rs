//! Tree-decompositions: the data model, the three validity axioms, rooted
//! geometry (tree paths, parts above edges, adhesion sets) and the fatness
//! potential used by the leanification loop.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("decomposition has no nodes")]
    NoNodes,
    #[error("tree is not a tree: {0}")]
    NotATree(String),
    #[error("node {node} does not exist (decomposition has {count} nodes)")]
    UnknownNode { node: usize, count: usize },
    #[error("{0}-{1} is not a tree edge")]
    UnknownEdge(usize, usize),
    #[error("bag of node {node} contains vertex {vertex}, host graph has {n} vertices")]
    VertexOutOfRange {
        node: usize,
        vertex: usize,
        n: usize,
    },
    #[error("decomposition is for a graph on {td} vertices, host graph has {graph}")]
    HostMismatch { td: usize, graph: usize },
    #[error("invalid tree-decomposition: {}", summarize(.0))]
    Invalid(Vec<AxiomViolation>),
    #[error("fatness vectors over {0} and {1} vertices are not comparable")]
    FatnessMismatch(usize, usize),
}

fn summarize(v: &[AxiomViolation]) -> String {
    let mut s = v
        .iter()
        .take(3)
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ");
    if v.len() > 3 {
        s.push_str(&format!("; and {} more", v.len() - 3));
    }
    s
}

/// One failed tree-decomposition axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    VertexNotCovered {
        vertex: usize,
    },
    EdgeNotCovered {
        u: usize,
        v: usize,
    },
    /// The nodes whose bags contain `vertex` do not induce a subtree; `nodes`
    /// lists all of them.
    DisconnectedOccurrence {
        vertex: usize,
        nodes: Vec<usize>,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexNotCovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Self::EdgeNotCovered { u, v } => write!(f, "edge {{{u},{v}}} is in no bag"),
            Self::DisconnectedOccurrence { vertex, nodes } => write!(
                f,
                "nodes {nodes:?} containing vertex {vertex} do not induce a subtree"
            ),
        }
    }
}

/// A tree with one bag of host vertices per node and an optional root.
///
/// Construction guarantees the tree shape (connected, acyclic, at least one
/// node) and that bag entries are host vertices. The three covering axioms
/// are checked separately by [`validate_td`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<VertexSet>,
    tree: Vec<Vec<usize>>,
    root: Option<usize>,
}

impl TreeDecomposition {
    /// `n` is the vertex count of the host graph.
    pub fn new(
        n: usize,
        bags: Vec<VertexSet>,
        edges: &[(usize, usize)],
    ) -> Result<Self, DecompError> {
        let count = bags.len();
        if count == 0 {
            return Err(DecompError::NoNodes);
        }
        for (node, bag) in bags.iter().enumerate() {
            if let Some(vertex) = bag.max().filter(|&v| v >= n) {
                return Err(DecompError::VertexOutOfRange { node, vertex, n });
            }
        }
        if edges.len() != count - 1 {
            return Err(DecompError::NotATree(format!(
                "{} nodes need {} edges, got {}",
                count,
                count - 1,
                edges.len()
            )));
        }
        let mut tree = vec![Vec::new(); count];
        for &(s, t) in edges {
            for x in [s, t] {
                if x >= count {
                    return Err(DecompError::UnknownNode { node: x, count });
                }
            }
            if s == t {
                return Err(DecompError::NotATree(format!("loop at node {s}")));
            }
            tree[s].push(t);
            tree[t].push(s);
        }
        for ns in &mut tree {
            ns.sort_unstable();
            let before = ns.len();
            ns.dedup();
            if ns.len() != before {
                return Err(DecompError::NotATree("parallel tree edges".into()));
            }
        }
        let td = Self {
            n,
            bags,
            tree,
            root: None,
        };
        let reached = td.bfs_order(0).len();
        if reached != count {
            return Err(DecompError::NotATree(format!(
                "tree is disconnected ({reached} of {count} nodes reachable from node 0)"
            )));
        }
        Ok(td)
    }

    /// Single-bag decomposition.
    pub fn trivial(n: usize, bag: VertexSet) -> Result<Self, DecompError> {
        Self::new(n, vec![bag], &[])
    }

    pub fn with_root(mut self, root: usize) -> Result<Self, DecompError> {
        self.check_node(root)?;
        self.root = Some(root);
        Ok(self)
    }

    /// Same tree and root, new bags.
    pub fn with_bags(&self, bags: Vec<VertexSet>) -> Result<Self, DecompError> {
        let mut td = Self::new(self.n, bags, &self.edges())?;
        td.root = self.root;
        Ok(td)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &VertexSet {
        &self.bags[node]
    }

    pub fn tree_neighbors(&self, node: usize) -> &[usize] {
        &self.tree[node]
    }

    /// Tree edges as `(s, t)` with `s < t`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.node_count().saturating_sub(1));
        for (s, ns) in self.tree.iter().enumerate() {
            out.extend(ns.iter().filter(|&&t| s < t).map(|&t| (s, t)));
        }
        out
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// The declared root, or node 0 when none was set.
    pub fn effective_root(&self) -> usize {
        self.root.unwrap_or(0)
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        s < self.node_count() && self.tree[s].binary_search(&t).is_ok()
    }

    pub fn check_node(&self, node: usize) -> Result<(), DecompError> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(DecompError::UnknownNode {
                node,
                count: self.node_count(),
            })
        }
    }

    fn check_edge(&self, s: usize, t: usize) -> Result<(), DecompError> {
        if self.has_edge(s, t) {
            Ok(())
        } else {
            Err(DecompError::UnknownEdge(s, t))
        }
    }

    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.node_count()];
        let mut order = Vec::with_capacity(self.node_count());
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &self.tree[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        order
    }

    /// Rooted view at [`Self::effective_root`].
    pub fn rooted(&self) -> Rooted {
        Rooted::new(self, self.effective_root())
    }

    /// Nodes whose bag is empty.
    pub fn empty_bags(&self) -> Vec<usize> {
        (0..self.node_count())
            .filter(|&t| self.bags[t].is_empty())
            .collect()
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// Parent pointers and Euler intervals of a tree-decomposition's tree for a
/// fixed root.
#[derive(Debug, Clone)]
pub struct Rooted {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    order: Vec<usize>,
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl Rooted {
    pub fn new(td: &TreeDecomposition, root: usize) -> Self {
        let count = td.node_count();
        let mut parent = vec![None; count];
        let mut depth = vec![0; count];
        let mut enter = vec![0; count];
        let mut exit = vec![0; count];
        let order = td.bfs_order(root);
        for &x in &order {
            for &y in td.tree_neighbors(x) {
                if Some(y) != parent[x] {
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                }
            }
        }
        // iterative DFS for subtree intervals
        let mut clock = 0;
        let mut stack = vec![(root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                exit[x] = clock;
                continue;
            }
            enter[x] = clock;
            clock += 1;
            stack.push((x, true));
            for &y in td.tree_neighbors(x).iter().rev() {
                if Some(y) != parent[x] {
                    stack.push((y, false));
                }
            }
        }
        Self {
            root,
            parent,
            depth,
            order,
            enter,
            exit,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn depth(&self, node: usize) -> usize {
        self.depth[node]
    }

    /// Nodes in breadth-first order from the root.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `a <= b` in the tree-order: `a` lies on the path from the root to `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.enter[a] <= self.enter[b] && self.exit[b] <= self.exit[a]
    }

    /// Tree edges as `(parent, child)` in breadth-first order of the child.
    pub fn down_edges(&self) -> Vec<(usize, usize)> {
        self.order
            .iter()
            .filter_map(|&c| self.parent[c].map(|p| (p, c)))
            .collect()
    }

    /// Of the edge `{s, t}`, the endpoint farther from the root.
    pub fn lower_end(&self, s: usize, t: usize) -> usize {
        if self.parent[t] == Some(s) {
            t
        } else {
            s
        }
    }

    /// Nodes of the subtree rooted at `node`.
    pub fn subtree(&self, node: usize) -> Vec<usize> {
        self.order
            .iter()
            .copied()
            .filter(|&x| self.is_ancestor(node, x))
            .collect()
    }

    /// Node sequence of the tree path from `s` to `t`.
    pub fn path(&self, s: usize, t: usize) -> Vec<usize> {
        let (mut a, mut b) = (s, t);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                left.push(a);
                a = self.parent[a].expect("non-root has parent");
            } else {
                right.push(b);
                b = self.parent[b].expect("non-root has parent");
            }
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }
}

/// Checks the three axioms. An empty result means the decomposition is valid.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<Vec<AxiomViolation>, DecompError> {
    if td.vertex_count() != g.n() {
        return Err(DecompError::HostMismatch {
            td: td.vertex_count(),
            graph: g.n(),
        });
    }
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (t, bag) in td.bags().iter().enumerate() {
        for v in bag {
            occurrences[v].push(t);
        }
    }
    let mut out = Vec::new();
    for (vertex, nodes) in occurrences.iter().enumerate() {
        if nodes.is_empty() {
            out.push(AxiomViolation::VertexNotCovered { vertex });
        }
    }
    for (u, v) in g.edges() {
        let covered = occurrences[u].iter().any(|&t| td.bag(t).contains(v));
        if !covered {
            out.push(AxiomViolation::EdgeNotCovered { u, v });
        }
    }
    let mut member = vec![false; td.node_count()];
    for (vertex, nodes) in occurrences.iter().enumerate() {
        if nodes.len() < 2 {
            continue;
        }
        for &t in nodes {
            member[t] = true;
        }
        // a node set of a tree is connected iff it spans |nodes| - 1 tree edges
        let inner_edges = nodes
            .iter()
            .map(|&t| {
                td.tree_neighbors(t)
                    .iter()
                    .filter(|&&s| s > t && member[s])
                    .count()
            })
            .sum::<usize>();
        if inner_edges + 1 != nodes.len() {
            out.push(AxiomViolation::DisconnectedOccurrence {
                vertex,
                nodes: nodes.clone(),
            });
        }
        for &t in nodes {
            member[t] = false;
        }
    }
    Ok(out)
}

/// [`validate_td`] as a `Result`.
pub fn require_valid(g: &Graph, td: &TreeDecomposition) -> Result<(), DecompError> {
    let v = validate_td(g, td)?;
    if v.is_empty() {
        Ok(())
    } else {
        Err(DecompError::Invalid(v))
    }
}

/// Largest bag size minus one (zero for a decomposition of the empty graph).
pub fn width(td: &TreeDecomposition) -> usize {
    td.max_bag_size().saturating_sub(1)
}

/// The adhesion set `bag(s) ∩ bag(t)` of the tree edge `st`.
pub fn adhesion(td: &TreeDecomposition, s: usize, t: usize) -> Result<VertexSet, DecompError> {
    td.check_edge(s, t)?;
    Ok(td.bag(s).intersection(td.bag(t)))
}

/// The separation of the host graph induced by a tree edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSeparation {
    /// Union of the bags on `s`'s side of the edge.
    pub side_s: VertexSet,
    /// Union of the bags on `t`'s side of the edge.
    pub side_t: VertexSet,
    /// `side_s ∩ side_t`, which equals the adhesion set.
    pub separator: VertexSet,
}

impl EdgeSeparation {
    pub fn order(&self) -> usize {
        self.separator.len()
    }
}

pub fn edge_separation(
    g: &Graph,
    td: &TreeDecomposition,
    s: usize,
    t: usize,
) -> Result<EdgeSeparation, DecompError> {
    td.check_edge(s, t)?;
    require_valid(g, td)?;
    let rooted = Rooted::new(td, s);
    let t_side: Vec<usize> = rooted.subtree(t);
    let mut on_t = vec![false; td.node_count()];
    for &x in &t_side {
        on_t[x] = true;
    }
    let union_of = |pick: bool| -> VertexSet {
        (0..td.node_count())
            .filter(|&x| on_t[x] == pick)
            .flat_map(|x| td.bag(x).iter())
            .collect()
    };
    let side_s = union_of(false);
    let side_t = union_of(true);
    let separator = side_s.intersection(&side_t);
    debug_assert_eq!(separator, td.bag(s).intersection(td.bag(t)));
    Ok(EdgeSeparation {
        side_s,
        side_t,
        separator,
    })
}

/// Nodes of the tree path `sTt`, both ends included.
pub fn tree_path(td: &TreeDecomposition, s: usize, t: usize) -> Result<Vec<usize>, DecompError> {
    td.check_node(s)?;
    td.check_node(t)?;
    Ok(td.rooted().path(s, t))
}

/// `min |V_e|` over the edges of `sTt`; `None` stands for the unbounded
/// minimum over the empty edge set (`s == t`).
pub fn min_adhesion_on_path(
    td: &TreeDecomposition,
    s: usize,
    t: usize,
) -> Result<Option<usize>, DecompError> {
    let path = tree_path(td, s, t)?;
    Ok(path
        .windows(2)
        .map(|w| td.bag(w[0]).intersection(td.bag(w[1])).len())
        .min())
}

/// Union of the bags on the side of `{s, t}` away from the root.
pub fn part_above(td: &TreeDecomposition, s: usize, t: usize) -> Result<VertexSet, DecompError> {
    td.check_edge(s, t)?;
    let rooted = td.rooted();
    Ok(part_above_rooted(td, &rooted, rooted.lower_end(s, t)))
}

/// [`part_above`] minus the adhesion set of the edge.
pub fn part_strictly_above(
    td: &TreeDecomposition,
    s: usize,
    t: usize,
) -> Result<VertexSet, DecompError> {
    let above = part_above(td, s, t)?;
    Ok(above.difference(&td.bag(s).intersection(td.bag(t))))
}

pub(crate) fn part_above_rooted(
    td: &TreeDecomposition,
    rooted: &Rooted,
    child: usize,
) -> VertexSet {
    rooted
        .subtree(child)
        .into_iter()
        .flat_map(|x| td.bag(x).iter())
        .collect()
}

/// Bag-size histogram read from the largest size down: entry `k` counts the
/// bags with exactly `n - k` vertices. Compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fatness {
    n: usize,
    counts: Vec<usize>,
}

impl Fatness {
    pub fn host_size(&self) -> usize {
        self.n
    }

    /// Counts for bag sizes `n, n-1, ..., 1`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn try_cmp(&self, other: &Fatness) -> Result<Ordering, DecompError> {
        if self.n != other.n {
            return Err(DecompError::FatnessMismatch(self.n, other.n));
        }
        Ok(self.counts.cmp(&other.counts))
    }
}

impl fmt::Display for Fatness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn fatness(td: &TreeDecomposition) -> Fatness {
    let n = td.vertex_count();
    let mut counts = vec![0; n];
    for bag in td.bags() {
        if !bag.is_empty() {
            counts[n - bag.len()] += 1;
        }
    }
    Fatness { n, counts }
}

/// Strict lexicographic "thinner than" on fatness vectors.
pub fn fatness_less(a: &Fatness, b: &Fatness) -> Result<bool, DecompError> {
    Ok(a.try_cmp(b)? == Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn two_bags() -> TreeDecomposition {
        TreeDecomposition::new(3, vec![[0, 1].into(), [1, 2].into()], &[(0, 1)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let g = path_graph(3);
        assert!(validate_td(&g, &two_bags()).unwrap().is_empty());

        let td = TreeDecomposition::new(3, vec![[0, 1].into(), [2].into()], &[(0, 1)]).unwrap();
        assert_eq!(
            validate_td(&g, &td).unwrap(),
            vec![AxiomViolation::EdgeNotCovered { u: 1, v: 2 }]
        );

        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        let td = TreeDecomposition::new(
            4,
            vec![[0, 1].into(), [1, 2].into(), [0, 3].into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert_eq!(
            validate_td(&g, &td).unwrap(),
            vec![AxiomViolation::DisconnectedOccurrence {
                vertex: 0,
                nodes: vec![0, 2]
            }]
        );
    }

    #[test]
    fn structural_errors() {
        let bags = || {
            vec![
                VertexSet::from([0]),
                VertexSet::from([0]),
                VertexSet::from([0]),
            ]
        };
        assert!(matches!(
            TreeDecomposition::new(1, bags(), &[(0, 1)]),
            Err(DecompError::NotATree(_))
        ));
        assert!(matches!(
            TreeDecomposition::new(1, bags(), &[(0, 1), (0, 1)]),
            Err(DecompError::NotATree(_))
        ));
        assert!(matches!(
            TreeDecomposition::new(1, vec![[0].into(), [0].into()], &[(0, 2)]),
            Err(DecompError::UnknownNode { node: 2, .. })
        ));
        assert_eq!(
            TreeDecomposition::new(1, vec![], &[]),
            Err(DecompError::NoNodes)
        );
        assert!(matches!(
            TreeDecomposition::new(2, vec![[0, 5].into()], &[]),
            Err(DecompError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(matches!(
            validate_td(&path_graph(4), &two_bags()),
            Err(DecompError::HostMismatch { .. })
        ));
    }

    #[test]
    fn width_and_adhesion() {
        let td = two_bags();
        assert_eq!(width(&td), 1);
        assert_eq!(adhesion(&td, 0, 1).unwrap(), VertexSet::from([1]));
        assert_eq!(adhesion(&td, 1, 0).unwrap(), VertexSet::from([1]));
        let single = TreeDecomposition::trivial(3, [0, 1, 2].into()).unwrap();
        assert_eq!(width(&single), 2);
        assert!(single.edges().is_empty());
        assert_eq!(adhesion(&single, 0, 1), Err(DecompError::UnknownEdge(0, 1)));
    }

    #[test]
    fn edge_separation_examples() {
        let sep = edge_separation(&path_graph(3), &two_bags(), 0, 1).unwrap();
        assert_eq!(sep.side_s, VertexSet::from([0, 1]));
        assert_eq!(sep.side_t, VertexSet::from([1, 2]));
        assert_eq!(sep.order(), 1);

        // star graph with centre 0 and leaves 1, 2, 3
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let td = TreeDecomposition::new(
            4,
            vec![[0, 1].into(), [0, 2].into(), [0, 3].into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        let sep = edge_separation(&star, &td, 0, 1).unwrap();
        assert_eq!(sep.side_s, VertexSet::from([0, 1]));
        assert_eq!(sep.side_t, VertexSet::from([0, 2, 3]));

        let bad = TreeDecomposition::new(3, vec![[0, 1].into(), [2].into()], &[(0, 1)]).unwrap();
        assert!(matches!(
            edge_separation(&path_graph(3), &bad, 0, 1),
            Err(DecompError::Invalid(_))
        ));
    }

    #[test]
    fn rooted_geometry() {
        let td = two_bags().with_root(0).unwrap();
        assert_eq!(part_above(&td, 0, 1).unwrap(), VertexSet::from([1, 2]));
        assert_eq!(
            part_strictly_above(&td, 0, 1).unwrap(),
            VertexSet::from([2])
        );
        assert_eq!(tree_path(&td, 1, 1).unwrap(), vec![1]);
        assert_eq!(min_adhesion_on_path(&td, 1, 1).unwrap(), None);

        let td = TreeDecomposition::new(
            4,
            vec![[0, 1].into(), [1, 2].into(), [2, 3].into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap()
        .with_root(0)
        .unwrap();
        assert_eq!(tree_path(&td, 0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(tree_path(&td, 2, 0).unwrap(), vec![2, 1, 0]);
        assert_eq!(min_adhesion_on_path(&td, 0, 2).unwrap(), Some(1));
        let r = td.rooted();
        assert!(r.is_ancestor(0, 2) && !r.is_ancestor(2, 0));
        assert_eq!(r.down_edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn unrooted_defaults_to_first_node() {
        let td = two_bags();
        assert_eq!(td.effective_root(), 0);
        assert_eq!(
            part_strictly_above(&td, 1, 0).unwrap(),
            VertexSet::from([2])
        );
        let flipped = two_bags().with_root(1).unwrap();
        assert_eq!(
            part_strictly_above(&flipped, 0, 1).unwrap(),
            VertexSet::from([0])
        );
    }

    #[test]
    fn fatness_examples() {
        let big = TreeDecomposition::trivial(3, [0, 1, 2].into()).unwrap();
        let split = two_bags();
        let (a, b) = (fatness(&big), fatness(&split));
        assert_eq!(a.counts(), &[1, 0, 0]);
        assert_eq!(b.counts(), &[0, 2, 0]);
        assert!(fatness_less(&b, &a).unwrap());
        assert!(!fatness_less(&a, &b).unwrap());
        assert!(!fatness_less(&a, &a).unwrap());
        let other = fatness(&TreeDecomposition::trivial(4, [0].into()).unwrap());
        assert_eq!(
            fatness_less(&a, &other),
            Err(DecompError::FatnessMismatch(3, 4))
        );
    }

    #[test]
    fn empty_bag_lint() {
        let td =
            TreeDecomposition::new(2, vec![[0, 1].into(), VertexSet::new()], &[(0, 1)]).unwrap();
        assert_eq!(td.empty_bags(), vec![1]);
        assert_eq!(fatness(&td).counts(), &[1, 0]);
    }
}
