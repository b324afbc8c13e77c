//! Named experiments that check exact separator and path counts on the
//! generated truncations, and their line-oriented reports.
//!
//! Every experiment repeats its headline computation on a deeper truncation
//! and reports whether the value is unchanged.

use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::menger::{distinguishes_efficiently, is_separator, MengerEngine, MengerError};
use crate::verify::{check_lean_with, LeanOptions, LeannessViolation, VerifyError};
use crate::zoo::clique_rows::{self, gen_clique_rows, CliqueRowsConfig};
use crate::zoo::planar::{gen_planar_witness, grid_rows, PlanarWitnessConfig};
use crate::zoo::seq_tree::{gen_seq_tree, parent, seq_name, SeqTreeConfig};
use crate::zoo::{LandmarkAtlas, ZooError};

/// Names accepted by [`run_experiment`].
pub const EXPERIMENTS: [&str; 4] = ["c31-cuts", "c31-slink", "ex3-bag", "ex5-deg2"];

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("unknown experiment `{0}` (expected one of c31-cuts, c31-slink, ex3-bag, ex5-deg2)")]
    UnknownExperiment(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error(transparent)]
    Menger(#[from] MengerError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// One checked value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    /// What the value means, in words.
    pub statement: String,
    pub expected: String,
    pub computed: String,
}

impl Claim {
    pub fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
    ) -> Self {
        Self {
            id: id.into(),
            statement: statement.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }

    pub fn pass(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentReport {
    pub name: String,
    pub config: Vec<(String, String)>,
    pub claims: Vec<Claim>,
    pub elapsed: Duration,
}

impl ExperimentReport {
    fn new(name: &str, config: Vec<(&str, String)>) -> Self {
        Self {
            name: name.into(),
            config: config.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            claims: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn all_pass(&self) -> bool {
        !self.claims.is_empty() && self.claims.iter().all(Claim::pass)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// The report without the timing line; reproducible for a fixed config.
    pub fn body(&self) -> String {
        let mut out = format!("experiment {}\n", self.name);
        for (k, v) in &self.config {
            out += &format!("cfg {k} {v}\n");
        }
        for c in &self.claims {
            let verdict = if c.pass() { "pass" } else { "fail" };
            out += &format!("{}\t{}\t{}\t{verdict}\n", c.id, c.expected, c.computed);
        }
        out
    }
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}time_ms\t{}", self.body(), self.elapsed.as_millis())
    }
}

/// Flat configuration covering every experiment; each reads its own fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub planar: PlanarWitnessConfig,
    /// Grid index for the planar experiments.
    pub n: usize,
    pub clique_rows: CliqueRowsConfig,
    /// Clique index for the clique-rows experiment.
    pub m: usize,
    pub seq_tree: SeqTreeConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            planar: PlanarWitnessConfig::default(),
            n: 1,
            clique_rows: CliqueRowsConfig::default(),
            m: 3,
            seq_tree: SeqTreeConfig::default(),
        }
    }
}

pub fn run_experiment(
    name: &str,
    cfg: &ExperimentConfig,
) -> Result<ExperimentReport, ExperimentError> {
    match name {
        "c31-cuts" => exp_c31_cuts(&cfg.planar, cfg.n),
        "c31-slink" => exp_c31_strongly_linked_obstruction(&cfg.planar, cfg.n),
        "ex3-bag" => exp_ex3_bag_violation(&cfg.clique_rows, cfg.m),
        "ex5-deg2" => exp_ex5_degree2(&cfg.seq_tree),
        other => Err(ExperimentError::UnknownExperiment(other.into())),
    }
}

fn landmark(atlas: &LandmarkAtlas, name: &str) -> VertexSet {
    atlas
        .set(name)
        .unwrap_or_else(|| panic!("generator did not emit landmark {name}"))
}

fn flow(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<usize, MengerError> {
    MengerEngine::new(g).max_flow(a, b)
}

/// `2^(n+1) + n + 2`.
pub fn s_n_size(n: usize) -> usize {
    (1 << (n + 1)) + n + 2
}

fn planar_config_echo(cfg: &PlanarWitnessConfig, n: usize) -> Vec<(&'static str, String)> {
    vec![
        ("levels", cfg.levels.to_string()),
        ("grids", cfg.grids.to_string()),
        ("cols", cfg.cols.to_string()),
        ("base_grid", cfg.base_grid.to_string()),
        ("n", n.to_string()),
    ]
}

fn check_planar(cfg: &PlanarWitnessConfig, n: usize) -> Result<(), ExperimentError> {
    cfg.validate()?;
    if n < 1 || n > cfg.grids {
        return Err(ExperimentError::Config(format!(
            "grid index {n} outside 1..={}",
            cfg.grids
        )));
    }
    if cfg.levels < n + 3 || cfg.cols < 8 {
        return Err(ExperimentError::Config(format!(
            "truncation too shallow for n = {n}: need levels >= {} and cols >= 8",
            n + 3
        )));
    }
    Ok(())
}

fn deeper(cfg: &PlanarWitnessConfig) -> PlanarWitnessConfig {
    PlanarWitnessConfig {
        levels: cfg.levels + 2,
        cols: cfg.cols + 2,
        ..*cfg
    }
}

fn frontier_cut(cfg: &PlanarWitnessConfig, n: usize) -> Result<usize, ExperimentError> {
    let (g, atlas) = gen_planar_witness(cfg)?;
    Ok(flow(
        &g,
        &landmark(&atlas, "eps_frontier"),
        &landmark(&atlas, &format!("eps_{n}_frontier")),
    )?)
}

/// Separator between the top frontier of `G'` and the far column of `G_n`.
pub fn exp_c31_cuts(
    cfg: &PlanarWitnessConfig,
    n: usize,
) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    check_planar(cfg, n)?;
    let mut report = ExperimentReport::new("c31-cuts", planar_config_echo(cfg, n));
    let (g, atlas) = gen_planar_witness(cfg)?;
    let eps = landmark(&atlas, "eps_frontier");
    let eps_n = landmark(&atlas, &format!("eps_{n}_frontier"));
    let s_n = landmark(&atlas, &format!("S_{n}"));
    let v20 = landmark(&atlas, "v20");
    let expected = s_n_size(n);

    let cut = flow(&g, &eps, &eps_n)?;
    report.claims.push(Claim::new(
        "a",
        "max number of disjoint paths from the top frontier to the grid frontier",
        expected,
        cut,
    ));
    report.claims.push(Claim::new(
        "a.size",
        "size of the landmark separator S_n",
        expected,
        s_n.len(),
    ));

    let separates = is_separator(&g, &s_n, &eps, &eps_n)?.separates;
    let efficient = separates && distinguishes_efficiently(&g, &s_n, &eps, &eps_n)?;
    report.claims.push(Claim::new(
        "b",
        "S_n separates the two frontiers and has minimum order",
        true,
        efficient,
    ));

    let avoided = landmark(&atlas, "blue_ray").union(&v20);
    let pruned = g.without_vertices(&avoided);
    let cut_pruned = flow(
        &pruned,
        &eps.difference(&avoided),
        &eps_n.difference(&avoided),
    )?;
    report.claims.push(Claim::new(
        "c",
        "the same number of disjoint paths avoids the blue ray and the vertex (2,0)",
        expected,
        cut_pruned,
    ));

    let comps = g.components(&s_n);
    let v = v20.as_slice()[0];
    let home = comps.iter().find(|c| c.contains(v));
    let split = match home {
        Some(c) => c.is_disjoint(&eps) && eps_n.difference(&s_n).is_subset(c),
        None => false,
    };
    report.claims.push(Claim::new(
        "d",
        "without S_n, (2,0) lies with the grid frontier and away from the top frontier",
        true,
        split,
    ));

    report.claims.push(Claim::new(
        "stable",
        "claim (a) recomputed with two more levels and two more columns",
        cut,
        frontier_cut(&deeper(cfg), n)?,
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `R_n` vertices of the top level, spread evenly from left to right.
fn spread_top_level(g: &Graph, levels: usize, count: usize) -> VertexSet {
    let width = 1usize << (levels + 1);
    (0..count)
        .map(|k| {
            let i = (k * width + (count - 1) / 2) / (count - 1);
            let label = crate::zoo::planar::gprime_label(i, levels);
            g.vertex_by_label(&label).expect("top level vertex")
        })
        .collect()
}

fn middle_column(g: &Graph, n: usize, cols: usize) -> VertexSet {
    let c = cols.div_ceil(2);
    (1..=grid_rows(n))
        .map(|r| {
            g.vertex_by_label(&crate::zoo::planar::grid_label(n, c, r))
                .expect("grid vertex")
        })
        .collect()
}

fn column_cut(cfg: &PlanarWitnessConfig, n: usize) -> Result<usize, ExperimentError> {
    let (g, _) = gen_planar_witness(cfg)?;
    let x = middle_column(&g, n, cfg.cols);
    let y = spread_top_level(&g, cfg.levels, grid_rows(n));
    Ok(flow(&g, &x, &y)?)
}

/// A grid column and an equally large set far up in `G'` are linked by
/// fewer disjoint paths than their size.
pub fn exp_c31_strongly_linked_obstruction(
    cfg: &PlanarWitnessConfig,
    n: usize,
) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    check_planar(cfg, n)?;
    let mut report = ExperimentReport::new("c31-slink", planar_config_echo(cfg, n));
    let (g, _) = gen_planar_witness(cfg)?;
    let rows = grid_rows(n);
    let x = middle_column(&g, n, cfg.cols);
    let y = spread_top_level(&g, cfg.levels, rows);
    let cut = flow(&g, &x, &y)?;
    report.claims.push(Claim::new(
        "a",
        "max number of disjoint paths from a grid column to a set high up in G'",
        s_n_size(n),
        cut,
    ));
    report.claims.push(Claim::new(
        "b",
        "both end sets have one vertex per grid row and are disjoint",
        format!("{rows},{rows},true"),
        format!("{},{},{}", x.len(), y.len(), x.is_disjoint(&y)),
    ));
    report.claims.push(Claim::new(
        "c",
        "the path count stays below the size of the end sets",
        true,
        cut < rows,
    ));
    report.claims.push(Claim::new(
        "sanity",
        "a set is linked to itself by trivial paths",
        rows,
        flow(&g, &x, &x)?,
    ));
    report.claims.push(Claim::new(
        "stable",
        "claim (a) recomputed with two more levels and two more columns",
        cut,
        column_cut(&deeper(cfg), n)?,
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// A bag containing `Z1 ∪ Z2` forces a lean violation inside one node.
pub fn exp_ex3_bag_violation(
    cfg: &CliqueRowsConfig,
    m: usize,
) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    cfg.validate()?;
    if m < 2 || m + 4 > cfg.width {
        return Err(ExperimentError::Config(format!(
            "m = {m} outside 2..={}",
            cfg.width.saturating_sub(4)
        )));
    }
    let mut report = ExperimentReport::new(
        "ex3-bag",
        vec![("width", cfg.width.to_string()), ("m", m.to_string())],
    );
    let (g, atlas) = gen_clique_rows(cfg)?;
    let z1 = landmark(&atlas, &format!("Z1_{m:02}"));
    let z2 = landmark(&atlas, &format!("Z2_{m:02}"));
    let k = landmark(&atlas, &format!("K_{m:02}"));

    let result = MengerEngine::new(&g).solve(&z1, &z2)?;
    report.claims.push(Claim::new(
        "a",
        "max number of disjoint Z1-Z2 paths",
        m + 2,
        result.k(),
    ));
    report.claims.push(Claim::new(
        "a.size",
        "sizes of Z1 and Z2",
        format!("{0},{0}", m + 3),
        format!("{},{}", z1.len(), z2.len()),
    ));
    report.claims.push(Claim::new(
        "b",
        "the intersection of consecutive cliques separates Z1 from Z2",
        true,
        is_separator(&g, &k, &z1, &z2)?.separates,
    ));

    let (td, leaf) = clique_rows::handcrafted_decomposition(cfg, m)?;
    let opts = LeanOptions {
        pairs: Some(vec![(leaf, leaf)]),
        ..LeanOptions::default()
    };
    let found = check_lean_with(&g, &td, &opts)?;
    let computed = match found.violation() {
        Some(v) if v.revalidate(&g, &td).is_err() => "invalid witness".into(),
        Some(v) if v.s == v.t => format!("s=t={},{},{}", v.s, v.ell, v.order()),
        Some(v) => format!("s={},t={}", v.s, v.t),
        None => "lean".into(),
    };
    report.claims.push(Claim::new(
        "c",
        "the least violation inside the bag holding Z1 and Z2 has sizes m+3 and m+2",
        format!("s=t={leaf},{},{}", m + 3, m + 2),
        computed,
    ));

    let explicit = LeannessViolation {
        s: leaf,
        t: leaf,
        ell: m + 3,
        z_s: z1,
        z_t: z2,
        separator: result.separator.clone(),
    };
    let ok = explicit.revalidate(&g, &td).is_ok();
    report.claims.push(Claim::new(
        "c.explicit",
        "Z1 and Z2 themselves witness the violation in that bag",
        format!("{},{},true", m + 3, m + 2),
        format!("{},{},{ok}", explicit.ell, explicit.order()),
    ));

    let wider = CliqueRowsConfig {
        width: cfg.width + 2,
    };
    let (g2, atlas2) = gen_clique_rows(&wider)?;
    report.claims.push(Claim::new(
        "stable",
        "claim (a) recomputed with two more columns",
        result.k(),
        flow(
            &g2,
            &landmark(&atlas2, &format!("Z1_{m:02}")),
            &landmark(&atlas2, &format!("Z2_{m:02}")),
        )?,
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}

fn diagonal_cut(cfg: &SeqTreeConfig) -> Result<usize, ExperimentError> {
    let (g, atlas) = gen_seq_tree(cfg)?;
    let root = vec![0; cfg.depth];
    Ok(flow(
        &g,
        &landmark(&atlas, &format!("entry_{}", seq_name(&root))),
        &landmark(&atlas, "diagonal_frontier"),
    )?)
}

/// The diagonal end of the sequence tree has degree two, and each of its
/// order-two separators meets an order-three strip separator.
pub fn exp_ex5_degree2(cfg: &SeqTreeConfig) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    cfg.validate()?;
    if cfg.depth < 2 || cfg.len < 2 * cfg.branch + 2 {
        return Err(ExperimentError::Config(format!(
            "need depth >= 2 and len >= 2*branch + 2, got D={} B={} M={}",
            cfg.depth, cfg.branch, cfg.len
        )));
    }
    let mut report = ExperimentReport::new(
        "ex5-deg2",
        vec![
            ("depth", cfg.depth.to_string()),
            ("branch", cfg.branch.to_string()),
            ("len", cfg.len.to_string()),
        ],
    );
    let (g, atlas) = gen_seq_tree(cfg)?;
    let seqs = cfg.sequences();

    let mut engine = MengerEngine::new(&g);
    let mut strip_values = Vec::with_capacity(seqs.len());
    for s in &seqs {
        let name = seq_name(s);
        strip_values.push(engine.max_flow(
            &landmark(&atlas, &format!("entry_{name}")),
            &landmark(&atlas, &format!("frontier_{name}")),
        )?);
    }
    let (lo, hi) = strip_values.iter().minmax().into_option().expect("strips");
    let strip_value = if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    };
    report.claims.push(Claim::new(
        "a",
        "every strip has three disjoint paths from its entry column to its last column",
        3,
        strip_value,
    ));

    let root = vec![0; cfg.depth];
    let entry = landmark(&atlas, &format!("entry_{}", seq_name(&root)));
    let diag = landmark(&atlas, "diagonal_frontier");
    let cut = engine.max_flow(&entry, &diag)?;
    report.claims.push(Claim::new(
        "b",
        "max number of disjoint paths from the root strip to the diagonal frontier",
        2,
        cut,
    ));

    // exhaustive scan of vertex pairs
    let mut separators = Vec::new();
    for (x, y) in (0..g.n()).tuple_combinations() {
        let pair = VertexSet::from_sorted(vec![x, y]);
        if is_separator(&g, &pair, &entry, &diag)?.separates {
            separators.push(pair);
        }
    }
    let mut shapes = Vec::new();
    for pair in &separators {
        shapes.push(row3_pair(cfg, &seqs, pair));
    }
    let all_shaped = shapes.iter().all(Option::is_some);
    report.claims.push(Claim::new(
        "c",
        "every order-two separator is a pair of consecutive row-3 vertices of one strip",
        true,
        !separators.is_empty() && all_shaped,
    ));
    let on_diagonal: Vec<(Vec<usize>, usize)> = (0..cfg.depth)
        .map(|d| {
            let mut child = vec![0; cfg.depth];
            child[..=d].fill(cfg.branch);
            let (p, i) = parent(&child).expect("nonzero");
            (p, i - 1)
        })
        .collect();
    let mut found: Vec<(Vec<usize>, usize)> = shapes.iter().flatten().cloned().collect();
    found.sort();
    report.claims.push(Claim::new(
        "c.where",
        "these are exactly the attachment pairs along the diagonal",
        format_pairs(&on_diagonal),
        format_pairs(&found),
    ));

    let mut meets = true;
    for (s, i) in &found {
        let column: VertexSet = (1..=3).map(|j| cfg.vertex(s, *i, j)).collect();
        let name = seq_name(s);
        let strip_entry = landmark(&atlas, &format!("entry_{name}"));
        let strip_frontier = landmark(&atlas, &format!("frontier_{name}"));
        let pair = [cfg.vertex(s, *i, 3), cfg.vertex(s, i + 1, 3)];
        meets &= is_separator(&g, &column, &strip_entry, &strip_frontier)?.separates
            && distinguishes_efficiently(&g, &column, &strip_entry, &strip_frontier)?
            && pair.iter().any(|&v| column.contains(v));
    }
    report.claims.push(Claim::new(
        "d",
        "each such pair meets an order-three column separator of its strip",
        true,
        !found.is_empty() && meets,
    ));

    report.claims.push(Claim::new(
        "stable",
        "claim (b) recomputed with two more columns per strip",
        cut,
        diagonal_cut(&SeqTreeConfig {
            len: cfg.len + 2,
            ..*cfg
        })?,
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `(S, i)` when `pair = {(S,i,3), (S,i+1,3)}`.
fn row3_pair(
    cfg: &SeqTreeConfig,
    seqs: &[Vec<usize>],
    pair: &VertexSet,
) -> Option<(Vec<usize>, usize)> {
    let (x, y) = (pair.as_slice()[0], pair.as_slice()[1]);
    seqs.iter().find_map(|s| {
        (0..cfg.len).find_map(|i| {
            (cfg.vertex(s, i, 3) == x && cfg.vertex(s, i + 1, 3) == y).then(|| (s.clone(), i))
        })
    })
}

fn format_pairs(pairs: &[(Vec<usize>, usize)]) -> String {
    pairs
        .iter()
        .map(|(s, i)| format!("{}@{}", seq_name(s), i))
        .join(",")
}
