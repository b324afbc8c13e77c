//! Checkers for the lean, linked, strongly linked, tight and componental
//! properties, and the ray-decomposition, cumulative-closure and tightening
//! transformations.
//!
//! Rooted checks use the decomposition's declared root, or node 0.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use thiserror::Error;

use crate::decomp::{
    part_above_rooted, require_valid, validate_td, DecompError, Rooted, TreeDecomposition,
};
use crate::graph::{Graph, VertexSet};
use crate::menger::{is_separator, MengerEngine, MengerError, MengerResult, SeparatorWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Menger(#[from] MengerError),
    #[error("scale limit: bag of node {node} has {size} vertices, cap is {cap}")]
    ScaleLimit {
        node: usize,
        size: usize,
        cap: usize,
    },
    #[error("decomposition is not componental at tree edge {0}-{1}")]
    NotComponental(usize, usize),
    #[error("vertex order is not a permutation of the {0} vertices")]
    NotAPermutation(usize),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
}

/// A tree edge `(parent, child)` at which a per-edge property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFailure {
    pub parent: usize,
    pub child: usize,
    pub adhesion: VertexSet,
    pub strictly_above: VertexSet,
}

/// Nodes `s, t` whose bags are joined by fewer disjoint paths than the
/// smallest adhesion set between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkFailure {
    pub s: usize,
    pub t: usize,
    pub required: usize,
    pub flow: MengerResult,
}

/// Subsets `Z_s ⊆ V_s`, `Z_t ⊆ V_t` of size `ℓ`, no `ℓ` disjoint paths
/// between them, and no adhesion set on `sTt` smaller than `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeannessViolation {
    pub s: usize,
    pub t: usize,
    pub ell: usize,
    pub z_s: VertexSet,
    pub z_t: VertexSet,
    /// Minimum `Z_s`–`Z_t` separator, of order `< ell`.
    pub separator: SeparatorWitness,
}

impl LeannessViolation {
    pub fn order(&self) -> usize {
        self.separator.order()
    }

    /// Re-checks every defining condition against `g` and `td`.
    pub fn revalidate(&self, g: &Graph, td: &TreeDecomposition) -> Result<(), String> {
        td.check_node(self.s).map_err(|e| e.to_string())?;
        td.check_node(self.t).map_err(|e| e.to_string())?;
        if self.z_s.len() != self.ell || self.z_t.len() != self.ell {
            return Err("|Z_s| or |Z_t| differs from ℓ".into());
        }
        if !self.z_s.is_subset(td.bag(self.s)) || !self.z_t.is_subset(td.bag(self.t)) {
            return Err("Z sets are not inside their bags".into());
        }
        if self.order() >= self.ell {
            return Err(format!(
                "|X| = {} is not below ℓ = {}",
                self.order(),
                self.ell
            ));
        }
        let check = is_separator(g, &self.separator.separator, &self.z_s, &self.z_t)
            .map_err(|e| e.to_string())?;
        if let Some(p) = check.violating_path {
            return Err(format!("X misses the Z_s–Z_t path {p:?}"));
        }
        self.separator.validate(g, &self.z_s, &self.z_t)?;
        let path = td.rooted().path(self.s, self.t);
        for w in path.windows(2) {
            let a = td.bag(w[0]).intersection(td.bag(w[1])).len();
            if a < self.ell {
                return Err(format!("adhesion {}-{} has size {a} < ℓ", w[0], w[1]));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LeannessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={} t={} ℓ={} Z_s={} Z_t={} X={}",
            self.s, self.t, self.ell, self.z_s, self.z_t, self.separator.separator
        )
    }
}

/// Scope and limits for [`check_lean_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeanOptions {
    /// Largest bag the subset enumeration is allowed to touch.
    pub bag_cap: usize,
    /// Only pairs `s <= t` comparable in the rooted tree.
    pub comparable_only: bool,
    /// Restrict the scan to these node pairs.
    pub pairs: Option<Vec<(usize, usize)>>,
}

impl Default for LeanOptions {
    fn default() -> Self {
        Self {
            bag_cap: 12,
            comparable_only: false,
            pairs: None,
        }
    }
}

/// Outcome of a lean check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeanCheck {
    Lean,
    Violated(LeannessViolation),
}

impl LeanCheck {
    pub fn is_lean(&self) -> bool {
        matches!(self, LeanCheck::Lean)
    }

    pub fn violation(&self) -> Option<&LeannessViolation> {
        match self {
            LeanCheck::Lean => None,
            LeanCheck::Violated(v) => Some(v),
        }
    }
}

/// Full lean check over all node pairs, including `s = t`.
pub fn check_lean(
    g: &Graph,
    td: &TreeDecomposition,
    bag_cap: usize,
) -> Result<LeanCheck, VerifyError> {
    check_lean_with(
        g,
        td,
        &LeanOptions {
            bag_cap,
            ..LeanOptions::default()
        },
    )
}

/// Lean check returning the violation of least separator order, ties broken
/// by `(s, t)`, then `ℓ`, then `(Z_s, Z_t)` lexicographically.
///
/// If some `Z_s, Z_t` of size `ℓ` have a separator `X` with `|X| < ℓ`, then
/// any `|X| + 1`-subsets of them are separated by `X` as well. Hence the
/// least order over all violations is `ℓ₀ - 1` for the smallest violating
/// `ℓ₀`, and the scan stops at the first violation in `(ℓ, s, t, Z_s, Z_t)`
/// order.
pub fn check_lean_with(
    g: &Graph,
    td: &TreeDecomposition,
    opts: &LeanOptions,
) -> Result<LeanCheck, VerifyError> {
    require_valid(g, td)?;
    let rooted = td.rooted();
    let pairs: Vec<(usize, usize)> = match &opts.pairs {
        Some(p) => {
            let mut p: Vec<_> = p.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
            for &(s, t) in &p {
                td.check_node(s)?;
                td.check_node(t)?;
            }
            p.sort_unstable();
            p.dedup();
            p
        }
        None => (0..td.node_count())
            .flat_map(|s| (s..td.node_count()).map(move |t| (s, t)))
            .collect(),
    };
    let pairs: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(s, t)| {
            !opts.comparable_only || rooted.is_ancestor(s, t) || rooted.is_ancestor(t, s)
        })
        .collect();
    for &(s, t) in &pairs {
        for node in [s, t] {
            let size = td.bag(node).len();
            if size > opts.bag_cap {
                return Err(VerifyError::ScaleLimit {
                    node,
                    size,
                    cap: opts.bag_cap,
                });
            }
        }
    }
    // largest ℓ worth testing per pair
    let limits: Vec<usize> = pairs
        .iter()
        .map(|&(s, t)| {
            let path = rooted.path(s, t);
            let bound = td.bag(s).len().min(td.bag(t).len());
            path.windows(2)
                .map(|w| td.bag(w[0]).intersection(td.bag(w[1])).len())
                .fold(bound, usize::min)
        })
        .collect();
    let max_ell = limits.iter().copied().max().unwrap_or(0);
    let mut engine = MengerEngine::new(g);
    let mut memo: HashMap<(VertexSet, VertexSet), usize> = HashMap::new();
    for ell in 1..=max_ell {
        for (i, &(s, t)) in pairs.iter().enumerate() {
            if ell > limits[i] {
                continue;
            }
            let zs_all: Vec<VertexSet> = subsets(td.bag(s), ell);
            let zt_all: Vec<VertexSet> = if s == t {
                zs_all.clone()
            } else {
                subsets(td.bag(t), ell)
            };
            for (a, z_s) in zs_all.iter().enumerate() {
                let from = if s == t { a + 1 } else { 0 };
                for z_t in &zt_all[from..] {
                    if z_s.intersection(z_t).len() == ell {
                        continue;
                    }
                    let key = if z_s <= z_t {
                        (z_s.clone(), z_t.clone())
                    } else {
                        (z_t.clone(), z_s.clone())
                    };
                    let k = match memo.get(&key) {
                        Some(&k) => k,
                        None => {
                            let k = engine.max_flow(z_s, z_t)?;
                            memo.insert(key, k);
                            k
                        }
                    };
                    if k < ell {
                        let flow = engine.solve(z_s, z_t)?;
                        return Ok(LeanCheck::Violated(LeannessViolation {
                            s,
                            t,
                            ell,
                            z_s: z_s.clone(),
                            z_t: z_t.clone(),
                            separator: flow.separator,
                        }));
                    }
                }
            }
        }
    }
    Ok(LeanCheck::Lean)
}

/// All `k`-subsets of `set` in lexicographic order.
fn subsets(set: &VertexSet, k: usize) -> Vec<VertexSet> {
    set.iter()
        .combinations(k)
        .map(VertexSet::from_sorted)
        .collect()
}

fn strictly_above(
    td: &TreeDecomposition,
    rooted: &Rooted,
    parent: usize,
    child: usize,
) -> (VertexSet, VertexSet) {
    let adhesion = td.bag(parent).intersection(td.bag(child));
    let above = part_above_rooted(td, rooted, child).difference(&adhesion);
    (adhesion, above)
}

/// Every part strictly above a tree edge is nonempty and connected.
pub fn check_componental(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<Option<EdgeFailure>, VerifyError> {
    require_valid(g, td)?;
    let rooted = td.rooted();
    for (parent, child) in rooted.down_edges() {
        let (adhesion, above) = strictly_above(td, &rooted, parent, child);
        if !g.is_connected_within(&above) {
            return Ok(Some(EdgeFailure {
                parent,
                child,
                adhesion,
                strictly_above: above,
            }));
        }
    }
    Ok(None)
}

/// Every tree edge has a component strictly above it whose neighbourhood is
/// the whole adhesion set.
pub fn check_tight(g: &Graph, td: &TreeDecomposition) -> Result<Option<EdgeFailure>, VerifyError> {
    require_valid(g, td)?;
    let rooted = td.rooted();
    for (parent, child) in rooted.down_edges() {
        let (adhesion, above) = strictly_above(td, &rooted, parent, child);
        let tight = g
            .components_within(&above)
            .iter()
            .any(|c| g.neighborhood(c) == adhesion);
        if !tight {
            return Ok(Some(EdgeFailure {
                parent,
                child,
                adhesion,
                strictly_above: above,
            }));
        }
    }
    Ok(None)
}

fn check_pairs(
    g: &Graph,
    td: &TreeDecomposition,
    comparable: bool,
) -> Result<Option<LinkFailure>, VerifyError> {
    require_valid(g, td)?;
    let rooted = td.rooted();
    let mut engine = MengerEngine::new(g);
    for s in 0..td.node_count() {
        for t in s + 1..td.node_count() {
            if comparable && !rooted.is_ancestor(s, t) && !rooted.is_ancestor(t, s) {
                continue;
            }
            let required = rooted
                .path(s, t)
                .windows(2)
                .map(|w| td.bag(w[0]).intersection(td.bag(w[1])).len())
                .min()
                .unwrap_or(0);
            if required == 0 {
                continue;
            }
            if engine.max_flow(td.bag(s), td.bag(t))? < required {
                return Ok(Some(LinkFailure {
                    s,
                    t,
                    required,
                    flow: engine.solve(td.bag(s), td.bag(t))?,
                }));
            }
        }
    }
    Ok(None)
}

/// For comparable nodes `s < t`, as many disjoint `V_s`–`V_t` paths as the
/// smallest adhesion set on `sTt`.
pub fn check_linked(g: &Graph, td: &TreeDecomposition) -> Result<Option<LinkFailure>, VerifyError> {
    check_pairs(g, td, true)
}

/// [`check_linked`] for all pairs of distinct nodes.
pub fn check_strongly_linked(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<Option<LinkFailure>, VerifyError> {
    check_pairs(g, td, false)
}

/// Path decomposition whose `i`-th bag holds the first `i + 1` vertices of
/// `order`. Rooted at the first node.
pub fn ray_decomposition(g: &Graph, order: &[usize]) -> Result<TreeDecomposition, VerifyError> {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n()
        || order
            .iter()
            .any(|&v| v >= g.n() || std::mem::replace(&mut seen[v], true))
    {
        return Err(VerifyError::NotAPermutation(g.n()));
    }
    if order.is_empty() {
        return Ok(TreeDecomposition::trivial(0, VertexSet::new())?.with_root(0)?);
    }
    let bags: Vec<VertexSet> = (1..=order.len())
        .map(|i| order[..i].iter().copied().collect())
        .collect();
    let edges: Vec<_> = (1..order.len()).map(|i| (i - 1, i)).collect();
    Ok(TreeDecomposition::new(g.n(), bags, &edges)?.with_root(0)?)
}

/// Replaces each bag by the union of the bags on the path from the root.
pub fn cumulative_closure(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<TreeDecomposition, VerifyError> {
    require_valid(g, td)?;
    let rooted = td.rooted();
    let mut bags = td.bags().to_vec();
    for &x in rooted.order() {
        if let Some(p) = rooted.parent(x) {
            bags[x] = bags[p].union(td.bag(x));
        }
    }
    let out = td.with_bags(bags)?.with_root(rooted.root())?;
    Ok(out)
}

/// Removes, for each tree edge `e` from the root down, the vertices of `V_e`
/// with no neighbour strictly above `e` from every bag above `e`.
pub fn make_tight(g: &Graph, td: &TreeDecomposition) -> Result<TreeDecomposition, VerifyError> {
    if let Some(f) = check_componental(g, td)? {
        return Err(VerifyError::NotComponental(f.parent, f.child));
    }
    let rooted = td.rooted();
    let mut bags = td.bags().to_vec();
    for (parent, child) in rooted.down_edges() {
        let adhesion = bags[parent].intersection(&bags[child]);
        let subtree = rooted.subtree(child);
        let above: VertexSet = subtree
            .iter()
            .flat_map(|&x| bags[x].iter())
            .collect::<VertexSet>()
            .difference(&adhesion);
        let drop = adhesion.difference(&g.neighborhood(&above));
        if drop.is_empty() {
            continue;
        }
        for &x in &subtree {
            bags[x] = bags[x].difference(&drop);
        }
    }
    let out = td.with_bags(bags)?.with_root(rooted.root())?;
    debug_assert!(validate_td(g, &out).map(|v| v.is_empty()).unwrap_or(false));
    Ok(out)
}

/// The properties a [`PropertyReport`] can cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Valid,
    Lean,
    Linked,
    StronglyLinked,
    Tight,
    Componental,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Valid,
        Property::Lean,
        Property::Linked,
        Property::StronglyLinked,
        Property::Tight,
        Property::Componental,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Valid => "valid",
            Property::Lean => "lean",
            Property::Linked => "linked",
            Property::StronglyLinked => "strongly-linked",
            Property::Tight => "tight",
            Property::Componental => "componental",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| VerifyError::UnknownProperty(s.to_string()))
    }
}

/// Witness attached to one report line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    Axioms(Vec<crate::decomp::AxiomViolation>),
    Edge(EdgeFailure),
    Link(LinkFailure),
    Lean(LeannessViolation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyLine {
    pub property: Property,
    pub pass: bool,
    pub witness: Witness,
    pub elapsed: Duration,
}

impl PropertyLine {
    pub fn summary(&self) -> String {
        match &self.witness {
            Witness::None => "-".into(),
            Witness::Axioms(v) => v.iter().map(|x| x.to_string()).join("; "),
            Witness::Edge(e) => format!(
                "edge {}-{} adhesion={} strictly-above={}",
                e.parent, e.child, e.adhesion, e.strictly_above
            ),
            Witness::Link(l) => format!(
                "s={} t={} required={} paths={} X={}",
                l.s,
                l.t,
                l.required,
                l.flow.k(),
                l.flow.separator.separator
            ),
            Witness::Lean(v) => v.to_string(),
        }
    }
}

/// One line per requested property.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PropertyReport {
    pub lines: Vec<PropertyLine>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn get(&self, p: Property) -> Option<&PropertyLine> {
        self.lines.iter().find(|l| l.property == p)
    }

    /// Checks every witness against `g` and `td` again.
    pub fn revalidate(&self, g: &Graph, td: &TreeDecomposition) -> Result<(), String> {
        for line in &self.lines {
            match &line.witness {
                Witness::Lean(v) => v.revalidate(g, td)?,
                Witness::Link(l) => {
                    l.flow.paths.validate(g)?;
                    l.flow.separator.validate(g, td.bag(l.s), td.bag(l.t))?;
                    if l.flow.k() >= l.required {
                        return Err(format!("link witness {}-{} has enough paths", l.s, l.t));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(
                f,
                "{}\t{}\t{}",
                l.property,
                if l.pass { "pass" } else { "fail" },
                l.summary()
            )?;
        }
        Ok(())
    }
}

/// Runs the requested checks. Every property except `valid` is reported as
/// failing, without running, when the decomposition is invalid.
pub fn verify_properties(
    g: &Graph,
    td: &TreeDecomposition,
    props: &[Property],
    lean: &LeanOptions,
) -> Result<PropertyReport, VerifyError> {
    let axioms = validate_td(g, td)?;
    let mut report = PropertyReport::default();
    for &property in props {
        let start = Instant::now();
        let witness = if !axioms.is_empty() {
            Witness::Axioms(axioms.clone())
        } else {
            match property {
                Property::Valid => Witness::None,
                Property::Lean => match check_lean_with(g, td, lean)? {
                    LeanCheck::Lean => Witness::None,
                    LeanCheck::Violated(v) => Witness::Lean(v),
                },
                Property::Linked => check_linked(g, td)?.map_or(Witness::None, Witness::Link),
                Property::StronglyLinked => {
                    check_strongly_linked(g, td)?.map_or(Witness::None, Witness::Link)
                }
                Property::Tight => check_tight(g, td)?.map_or(Witness::None, Witness::Edge),
                Property::Componental => {
                    check_componental(g, td)?.map_or(Witness::None, Witness::Edge)
                }
            }
        };
        report.lines.push(PropertyLine {
            property,
            pass: witness == Witness::None,
            witness,
            elapsed: start.elapsed(),
        });
    }
    Ok(report)
}
