//! Exact Steiner-tree reference solvers: Dreyfus-Wagner, brute force over
//! edge subsets, the one-face interval program, and portal-anchored forests.

pub mod cost;
pub mod dw;
pub mod engine;
pub mod error;
pub mod exhaustive;
pub mod oneface;
pub mod portal;

pub use dw::{dreyfus_wagner, steiner_with_each_vertex, DwConfig, SteinerTable};
pub use error::OracleError;
pub use exhaustive::{exhaustive_min_edge_set, exhaustive_min_steiner};
pub use oneface::one_face_steiner;
pub use portal::portal_anchored_forest_min;
