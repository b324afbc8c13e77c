//! Truncation of the three-row grid with cliques.
//!
//! Vertex `(i, j)` for `0 <= i <= W`, `j in {0, 1, 2}` has id `3i + j`.
//! Besides the grid edges, each `U_m = {(i, 1) : i <= m} ∪ {(m-1, 0), (m, 0)}`
//! for `1 <= m <= W - 1` is made complete.

use itertools::Itertools;

use super::{LandmarkAtlas, ZooError};
use crate::decomp::TreeDecomposition;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueRowsConfig {
    /// Last column index `W`.
    pub width: usize,
}

impl Default for CliqueRowsConfig {
    fn default() -> Self {
        Self { width: 8 }
    }
}

impl CliqueRowsConfig {
    pub fn validate(&self) -> Result<(), ZooError> {
        if self.width < 3 {
            return Err(ZooError::Config(format!("width {} is below 3", self.width)));
        }
        Ok(())
    }
}

pub fn vertex(i: usize, j: usize) -> usize {
    3 * i + j
}

/// `U_m`.
pub fn clique(m: usize) -> VertexSet {
    (0..=m)
        .map(|i| vertex(i, 1))
        .chain([vertex(m - 1, 0), vertex(m, 0)])
        .collect()
}

pub fn gen_clique_rows(cfg: &CliqueRowsConfig) -> Result<(Graph, LandmarkAtlas), ZooError> {
    cfg.validate()?;
    let w = cfg.width;
    let mut edges = Vec::new();
    for i in 0..=w {
        for j in 0..3 {
            if i < w {
                edges.push((vertex(i, j), vertex(i + 1, j)));
            }
            if j < 2 {
                edges.push((vertex(i, j), vertex(i, j + 1)));
            }
        }
    }
    let mut atlas = LandmarkAtlas::default();
    for m in 1..w {
        let u = clique(m);
        edges.extend(u.iter().tuple_combinations::<(usize, usize)>());
        atlas.insert_set(format!("U_{m:02}"), &u);
    }
    let (u, wv) = (vertex(0, 0), vertex(w, 2));
    atlas.insert("u", vec![u]);
    atlas.insert("w", vec![wv]);
    for m in 1..w.saturating_sub(3) {
        let k = clique(m).intersection(&clique(m + 1));
        let mut z1 = k.clone();
        z1.insert(wv);
        let mut z2 = k.clone();
        z2.insert(u);
        atlas.insert_set(format!("K_{m:02}"), &k);
        atlas.insert_set(format!("Z1_{m:02}"), &z1);
        atlas.insert_set(format!("Z2_{m:02}"), &z2);
    }
    let labels = (0..=w)
        .flat_map(|i| (0..3).map(move |j| format!("({i},{j})")))
        .collect();
    let g = Graph::new(3 * (w + 1), &edges)?.with_labels(labels)?;
    Ok((g, atlas))
}

/// A path decomposition of the truncation together with one extra leaf bag
/// equal to `Z1 ∪ Z2` for the given `m`. Returns the decomposition and the
/// node of that leaf.
///
/// The path has bags `B_k = U_k ∪ {(k-1, 2), (k, 2)}` for `1 <= k < W` and a
/// last bag on columns `W-1, W`; `u` is added to `B_1..B_m` and `w` to
/// `B_m..` so that the leaf can hang off `B_m`.
pub fn handcrafted_decomposition(
    cfg: &CliqueRowsConfig,
    m: usize,
) -> Result<(TreeDecomposition, usize), ZooError> {
    cfg.validate()?;
    let w = cfg.width;
    if m < 1 || m + 3 >= w {
        return Err(ZooError::Config(format!("m = {m} outside 1..={}", w - 4)));
    }
    let (u, wv) = (vertex(0, 0), vertex(w, 2));
    let mut bags: Vec<VertexSet> = (1..w)
        .map(|k| {
            let mut b = clique(k);
            b.insert(vertex(k - 1, 2));
            b.insert(vertex(k, 2));
            b
        })
        .collect();
    bags.push(
        (0..3)
            .flat_map(|j| [vertex(w - 1, j), vertex(w, j)])
            .collect(),
    );
    for (idx, bag) in bags.iter_mut().enumerate() {
        let k = idx + 1;
        if k <= m {
            bag.insert(u);
        }
        if k >= m {
            bag.insert(wv);
        }
    }
    let k = clique(m).intersection(&clique(m + 1));
    let mut special = k;
    special.insert(u);
    special.insert(wv);
    let leaf = bags.len();
    bags.push(special);
    let mut edges: Vec<(usize, usize)> = (1..leaf).map(|i| (i - 1, i)).collect();
    edges.push((m - 1, leaf));
    let td = TreeDecomposition::new(3 * (w + 1), bags, &edges)
        .map_err(|e| ZooError::Config(e.to_string()))?;
    Ok((td, leaf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::require_valid;

    #[test]
    fn sizes() {
        assert_eq!(clique(4).len(), 7);
        assert_eq!(clique(3).intersection(&clique(4)).len(), 5);
        let (g, atlas) = gen_clique_rows(&CliqueRowsConfig { width: 8 }).unwrap();
        assert_eq!(g.n(), 27);
        assert_eq!(atlas.get("Z1_03").unwrap().len(), 6);
        assert_eq!(atlas.get("Z2_03").unwrap().len(), 6);
        assert!(gen_clique_rows(&CliqueRowsConfig { width: 2 }).is_err());
    }

    #[test]
    fn handcrafted_is_valid() {
        let cfg = CliqueRowsConfig { width: 8 };
        let (g, atlas) = gen_clique_rows(&cfg).unwrap();
        for m in 1..=4 {
            let (td, leaf) = handcrafted_decomposition(&cfg, m).unwrap();
            require_valid(&g, &td).unwrap();
            let z = atlas
                .set(&format!("Z1_{m:02}"))
                .unwrap()
                .union(&atlas.set(&format!("Z2_{m:02}")).unwrap());
            assert_eq!(td.bag(leaf), &z);
        }
        assert!(handcrafted_decomposition(&cfg, 5).is_err());
    }
}
