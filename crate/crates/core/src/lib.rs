//! Tree-decompositions of finite graphs and the lean, linked, tight and
//! componental properties, with an exact Menger engine, a leanification
//! loop that keeps treewidth optimal, and generators for finite truncations
//! of three infinite counterexample graphs.

pub mod decomp;
pub mod dot;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod leanify;
pub mod menger;
pub mod verify;
pub mod zoo;

pub use decomp::{
    fatness, fatness_less, validate_td, width, AxiomViolation, DecompError, Fatness,
    TreeDecomposition,
};
pub use format::{ParseError, ParseErrorKind};
pub use graph::{Graph, GraphError, VertexSet};
pub use leanify::{leanify_loop, treewidth_exact, ImprovementTrace, LeanifyError};
pub use menger::{max_disjoint_paths, MengerError, MengerResult, PathFamily, SeparatorWitness};
pub use verify::{check_lean, LeanCheck, LeannessViolation, VerifyError};
pub use zoo::LandmarkAtlas;
