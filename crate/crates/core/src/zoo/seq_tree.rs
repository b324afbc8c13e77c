//! Truncation of the sequence-tree graph.
//!
//! One strip of `3 × (M + 1)` vertices `(S, i, j)`, `0 <= i <= M`,
//! `j in {1, 2, 3}`, for every sequence `S` of length `D` with entries in
//! `0..=B`. A sequence whose last nonzero entry is `i` hangs below the
//! sequence obtained by zeroing that entry: both `(parent, i-1, 3)` and
//! `(parent, i, 3)` are joined to all three entry vertices `(S, 0, j)`.

use itertools::Itertools;

use super::{LandmarkAtlas, ZooError};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeqTreeConfig {
    /// Support length `D`.
    pub depth: usize,
    /// Largest entry `B`.
    pub branch: usize,
    /// Last column `M`.
    pub len: usize,
}

impl Default for SeqTreeConfig {
    fn default() -> Self {
        Self {
            depth: 2,
            branch: 2,
            len: 6,
        }
    }
}

impl SeqTreeConfig {
    pub fn validate(&self) -> Result<(), ZooError> {
        if self.depth < 1 || self.branch < 1 || self.branch > self.len || self.len < 2 {
            return Err(ZooError::Config(format!(
                "need D >= 1, 1 <= B <= M and M >= 2, got D={} B={} M={}",
                self.depth, self.branch, self.len
            )));
        }
        if (self.branch + 1).pow(self.depth as u32) > 100_000 {
            return Err(ZooError::Config("too many strips".into()));
        }
        Ok(())
    }

    /// All sequences in lexicographic order.
    pub fn sequences(&self) -> Vec<Vec<usize>> {
        (0..self.depth)
            .map(|_| 0..=self.branch)
            .multi_cartesian_product()
            .collect()
    }

    fn strip_index(&self, seq: &[usize]) -> usize {
        seq.iter().fold(0, |acc, &s| acc * (self.branch + 1) + s)
    }

    /// Id of `(seq, i, j)`.
    pub fn vertex(&self, seq: &[usize], i: usize, j: usize) -> usize {
        (self.strip_index(seq) * (self.len + 1) + i) * 3 + (j - 1)
    }

    /// The diagonal sequence `(B, ..., B)`.
    pub fn diagonal(&self) -> Vec<usize> {
        vec![self.branch; self.depth]
    }
}

/// Atlas name fragment for a sequence, e.g. `s2_0`.
pub fn seq_name(seq: &[usize]) -> String {
    format!("s{}", seq.iter().join("_"))
}

/// The sequence `seq` hangs below, and the entry that was zeroed.
pub fn parent(seq: &[usize]) -> Option<(Vec<usize>, usize)> {
    let pos = seq.iter().rposition(|&s| s != 0)?;
    let mut p = seq.to_vec();
    p[pos] = 0;
    Some((p, seq[pos]))
}

pub fn gen_seq_tree(cfg: &SeqTreeConfig) -> Result<(Graph, LandmarkAtlas), ZooError> {
    cfg.validate()?;
    let seqs = cfg.sequences();
    let m = cfg.len;
    let n = seqs.len() * (m + 1) * 3;
    let mut edges = Vec::new();
    let mut labels = vec![String::new(); n];
    let mut atlas = LandmarkAtlas::default();
    for seq in &seqs {
        let name = seq_name(seq);
        for i in 0..=m {
            for j in 1..=3 {
                let v = cfg.vertex(seq, i, j);
                labels[v] = format!("({name},{i},{j})");
                if i < m {
                    edges.push((v, cfg.vertex(seq, i + 1, j)));
                }
                if j < 3 {
                    edges.push((v, cfg.vertex(seq, i, j + 1)));
                }
            }
        }
        if let Some((p, i)) = parent(seq) {
            for j in 1..=3 {
                let entry = cfg.vertex(seq, 0, j);
                edges.push((cfg.vertex(&p, i - 1, 3), entry));
                edges.push((cfg.vertex(&p, i, 3), entry));
            }
        }
        let column = |i: usize| -> VertexSet { (1..=3).map(|j| cfg.vertex(seq, i, j)).collect() };
        atlas.insert_set(format!("entry_{name}"), &column(0));
        atlas.insert_set(format!("frontier_{name}"), &column(m));
        for i in 0..m {
            atlas.insert(
                format!("pair_{name}_{i}"),
                vec![cfg.vertex(seq, i, 3), cfg.vertex(seq, i + 1, 3)],
            );
        }
    }
    let diag = cfg.diagonal();
    atlas.insert_set(
        "diagonal_frontier",
        &(1..=3).map(|j| cfg.vertex(&diag, m, j)).collect(),
    );
    let g = Graph::new(n, &edges)?.with_labels(labels)?;
    Ok((g, atlas))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let cfg = SeqTreeConfig {
            depth: 1,
            branch: 2,
            len: 4,
        };
        let (g, atlas) = gen_seq_tree(&cfg).unwrap();
        assert_eq!(g.n(), 45);
        assert_eq!(atlas.get("entry_s0").unwrap().len(), 3);
        assert_eq!(atlas.get("pair_s1_2").unwrap().len(), 2);
        assert!(gen_seq_tree(&SeqTreeConfig { branch: 5, ..cfg }).is_err());
    }

    #[test]
    fn attachment() {
        let cfg = SeqTreeConfig::default();
        let (g, _) = gen_seq_tree(&cfg).unwrap();
        // (2,1) hangs below (2,0) at columns 0 and 1
        for j in 1..=3 {
            let e = cfg.vertex(&[2, 1], 0, j);
            assert!(g.has_edge(cfg.vertex(&[2, 0], 0, 3), e));
            assert!(g.has_edge(cfg.vertex(&[2, 0], 1, 3), e));
            assert_eq!(g.degree(e), if j == 2 { 5 } else { 4 });
        }
        assert_eq!(parent(&[0, 2]), Some((vec![0, 0], 2)));
        assert_eq!(parent(&[0, 0]), None);
    }
}
