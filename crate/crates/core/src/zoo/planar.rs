//! Finite truncation of the planar witness graph.
//!
//! The base graph `G'` has vertices `(i/2^j, j)` for `0 <= j <= J` and
//! `0 <= i <= 2^(j+1)`, joined horizontally, vertically to `(i/2^j, j+1)`,
//! and diagonally to `((2i-1)/2^(j+1), j+1)` for `1 <= i <= 2^j`.
//!
//! Grid `G_n` is a king's-move grid with `R_n = 2^(n+1) + 2^n + 2` rows and
//! `M` columns; vertex `(c, r)` is column `c`, row `r`, both 1-based. Its
//! corners `(1, 1)` and `(1, R_n)` are the vertices `(2, n)` and `(2, n+1)`
//! of `G'`, whose edge is dropped. Rows `2..R_n-1` are extended by tracks
//! back to the remaining vertices of
//! `U_n = {(i/2^j, j) : j in {n, n+1}, 2^j <= i <= 2^(j+1)}`, matched in
//! boundary order: row 2 ends at `(2 - 1/2^n, n)`, the lower rows run
//! leftwards along level `n` down to `(1, n)`, then up to `(1, n+1)` and
//! rightwards along level `n+1`.
//!
//! The vertical edges between levels `n` and `n+1` with `1 < x < 2` are
//! subdivided: each track crosses every vertical strictly to its right,
//! sharing one new vertex with it.

use std::collections::HashMap;

use super::{LandmarkAtlas, ZooError};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarWitnessConfig {
    /// Levels `0..=J` of `G'`.
    pub levels: usize,
    /// Grids `G_n` for `1 <= n <= N`.
    pub grids: usize,
    /// Columns per grid.
    pub cols: usize,
    /// Also build `G_0` and drop the edge `(2,0)(2,1)`.
    pub base_grid: bool,
}

impl Default for PlanarWitnessConfig {
    fn default() -> Self {
        Self {
            levels: 5,
            grids: 2,
            cols: 12,
            base_grid: true,
        }
    }
}

impl PlanarWitnessConfig {
    pub fn validate(&self) -> Result<(), ZooError> {
        if self.grids < 1 {
            return Err(ZooError::Config("need at least one grid".into()));
        }
        if self.levels < self.grids + 2 {
            return Err(ZooError::Config(format!(
                "levels J = {} must be at least grids N + 2 = {}",
                self.levels,
                self.grids + 2
            )));
        }
        if self.cols < 2 {
            return Err(ZooError::Config("need at least two columns".into()));
        }
        if self.levels > 16 {
            return Err(ZooError::Config("at most 16 levels".into()));
        }
        Ok(())
    }

    /// Indices `n` of the grids that are built.
    pub fn grid_indices(&self) -> std::ops::RangeInclusive<usize> {
        (if self.base_grid { 0 } else { 1 })..=self.grids
    }
}

/// Rows of `G_n`.
pub fn grid_rows(n: usize) -> usize {
    (1 << (n + 1)) + (1 << n) + 2
}

/// Label of `G'` vertex `(i/2^j, j)`, with the fraction reduced.
pub fn gprime_label(i: usize, j: usize) -> String {
    let (mut num, mut den) = (i, 1usize << j);
    while den > 1 && num % 2 == 0 {
        num /= 2;
        den /= 2;
    }
    if den == 1 {
        format!("({num},{j})")
    } else {
        format!("({num}/{den},{j})")
    }
}

/// Label of grid vertex `(c, r)` of `G_n`. The two corners on `G'` carry the
/// `G'` labels instead.
pub fn grid_label(n: usize, c: usize, r: usize) -> String {
    if c == 1 && r == 1 {
        gprime_label(2, 0).replace(",0)", &format!(",{n})"))
    } else if c == 1 && r == grid_rows(n) {
        gprime_label(2, 0).replace(",0)", &format!(",{})", n + 1))
    } else {
        format!("G{n}({c},{r})")
    }
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: String) -> usize {
        if let Some(&v) = self.index.get(&label) {
            return v;
        }
        let v = self.labels.len();
        self.index.insert(label.clone(), v);
        self.labels.push(label);
        v
    }

    fn id(&self, label: &str) -> usize {
        self.index[label]
    }

    fn walk(&mut self, ids: &[usize]) {
        self.edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
    }
}

pub fn gen_planar_witness(cfg: &PlanarWitnessConfig) -> Result<(Graph, LandmarkAtlas), ZooError> {
    cfg.validate()?;
    let big_j = cfg.levels;
    let has_grid = |n: usize| cfg.grid_indices().contains(&n);
    let mut b = Builder::default();
    for j in 0..=big_j {
        for i in 0..=(1usize << (j + 1)) {
            b.vertex(gprime_label(i, j));
        }
    }
    let gp = |b: &Builder, i: usize, j: usize| b.id(&gprime_label(i, j));
    for j in 0..=big_j {
        let width = 1usize << (j + 1);
        for i in 0..width {
            b.edges.push((gp(&b, i, j), gp(&b, i + 1, j)));
        }
        if j == big_j {
            continue;
        }
        for i in 0..=width {
            let dropped = i == width && has_grid(j);
            let subdivided = has_grid(j) && i > (1 << j) && i < width;
            if !dropped && !subdivided {
                b.edges.push((gp(&b, i, j), gp(&b, 2 * i, j + 1)));
            }
        }
        for i in 1..=(1usize << j) {
            b.edges.push((gp(&b, i, j), gp(&b, 2 * i - 1, j + 1)));
        }
    }
    let mut atlas = LandmarkAtlas::default();
    for n in cfg.grid_indices() {
        add_grid(&mut b, &mut atlas, n, cfg.cols);
    }
    atlas.insert("blue_ray", (0..=big_j).map(|j| gp(&b, 0, j)).collect());
    atlas.insert("v20", vec![gp(&b, 2, 0)]);
    let frontier: VertexSet = (0..=(1usize << (big_j + 1)))
        .map(|i| gp(&b, i, big_j))
        .collect();
    atlas.insert_set("eps_frontier", &frontier);
    for n in 1..=cfg.grids {
        let top = 1usize << (n + 1);
        let s: VertexSet = (top + 1..=2 * top)
            .map(|i| gp(&b, i, n + 1))
            .chain((0..=n + 1).map(|j| gp(&b, 1 << j, j)))
            .collect();
        atlas.insert_set(format!("S_{n}"), &s);
    }
    let g = Graph::new(b.labels.len(), &b.edges)?.with_labels(b.labels)?;
    Ok((g, atlas))
}

/// Adds `G_n`, its tracks and the subdivided verticals between levels `n`
/// and `n + 1`.
fn add_grid(b: &mut Builder, atlas: &mut LandmarkAtlas, n: usize, cols: usize) {
    let rows = grid_rows(n);
    for c in 1..=cols {
        for r in 1..=rows {
            b.vertex(grid_label(n, c, r));
        }
    }
    let cell = |b: &Builder, c: usize, r: usize| b.id(&grid_label(n, c, r));
    for c in 1..=cols {
        for r in 1..=rows {
            let v = cell(b, c, r);
            if r < rows {
                b.edges.push((v, cell(b, c, r + 1)));
            }
            if c < cols {
                b.edges.push((v, cell(b, c + 1, r)));
                if r < rows {
                    b.edges.push((v, cell(b, c + 1, r + 1)));
                }
                if r > 1 {
                    b.edges.push((v, cell(b, c + 1, r - 1)));
                }
            }
        }
    }
    // x-coordinates in units of 1 / 2^(n+1)
    let unit = 1usize << (n + 1);
    let low = 1usize << n;
    // (row, level, index on level, x)
    let mut tracks: Vec<(usize, usize, usize, usize)> = Vec::new();
    for r in 2..=low + 1 {
        let i = unit - (r - 1);
        tracks.push((r, n, i, 2 * i));
    }
    for r in low + 2..rows {
        let i = unit + (r - (low + 2));
        tracks.push((r, n + 1, i, i));
    }
    let verticals: Vec<usize> = (low + 1..unit).collect();
    let crossing = |b: &mut Builder, iv: usize, r: usize| b.vertex(format!("C{n}({iv},{r})"));
    for &iv in &verticals {
        let mut walk = vec![b.id(&gprime_label(iv, n))];
        for &(r, _, _, x) in &tracks {
            if x < 2 * iv {
                walk.push(crossing(b, iv, r));
            }
        }
        walk.push(b.id(&gprime_label(2 * iv, n + 1)));
        b.walk(&walk);
    }
    let mut u_set = VertexSet::new();
    for &(r, level, i, x) in &tracks {
        let start = b.id(&gprime_label(i, level));
        u_set.insert(start);
        let mut walk = vec![start];
        for &iv in &verticals {
            if x < 2 * iv {
                walk.push(crossing(b, iv, r));
            }
        }
        walk.push(cell(b, 1, r));
        b.walk(&walk);
        atlas.insert(format!("track_{n}_{r:02}"), walk);
    }
    for r in [1, rows] {
        let v = cell(b, 1, r);
        u_set.insert(v);
        atlas.insert(format!("track_{n}_{r:02}"), vec![v]);
    }
    atlas.insert_set(format!("U_{n}"), &u_set);
    let frontier: VertexSet = (1..=rows).map(|r| cell(b, cols, r)).collect();
    atlas.insert_set(format!("eps_{n}_frontier"), &frontier);
    let first: VertexSet = (1..=rows).map(|r| cell(b, 1, r)).collect();
    atlas.insert_set(format!("grid_{n}_col1"), &first);
}
