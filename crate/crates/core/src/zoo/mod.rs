//! Generators: finite truncations of the three counterexample graphs, each
//! with a [`LandmarkAtlas`] of named vertex sets, and standard families for
//! test corpora.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

pub mod clique_rows;
pub mod planar;
pub mod seq_tree;
pub mod standard;

pub use clique_rows::{gen_clique_rows, CliqueRowsConfig};
pub use planar::{gen_planar_witness, PlanarWitnessConfig};
pub use seq_tree::{gen_seq_tree, SeqTreeConfig};
pub use standard::{gen_standard, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Named vertex sequences attached to a generated graph, kept in name order.
///
/// Sets are stored sorted; rays and other walks keep their traversal order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LandmarkAtlas {
    entries: BTreeMap<String, Vec<usize>>,
}

impl LandmarkAtlas {
    /// Inserts a landmark, returning the previous value under that name.
    pub fn insert(&mut self, name: impl Into<String>, ids: Vec<usize>) -> Option<Vec<usize>> {
        self.entries.insert(name.into(), ids)
    }

    pub fn insert_set(&mut self, name: impl Into<String>, set: &VertexSet) {
        self.entries.insert(name.into(), set.as_slice().to_vec());
    }

    pub fn get(&self, name: &str) -> Option<&[usize]> {
        self.entries.get(name).map(Vec::as_slice)
    }

    /// The landmark as a vertex set.
    pub fn set(&self, name: &str) -> Option<VertexSet> {
        self.get(name).map(|ids| ids.iter().copied().collect())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[usize])> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every id exists in `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        for (name, ids) in &self.entries {
            if let Some(&v) = ids.iter().find(|&&v| v >= g.n()) {
                return Err(format!(
                    "landmark {name} references vertex {v} of {}",
                    g.n()
                ));
            }
        }
        Ok(())
    }
}
