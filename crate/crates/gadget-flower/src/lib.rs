//! Weighted interval grids: the unrolled grid of discrete intervals, the
//! rolled flower gadget built from it, and numeric checks of their metric
//! and Steiner-forest properties.

pub mod flower;
pub mod gamma;
pub mod interval;
pub mod verify;

use thiserror::Error;

pub use flower::{build_flower, canonical_forest, FlowerGadget};
pub use gamma::{gamma_window, GammaWindow};
pub use interval::{closed_form_distance, edge_weight, monotone_weight, Interval};
pub use verify::{
    interval_distance, triangle_tip_units, verify_flower_theorem, verify_metric_propositions,
    verify_triangle_lemma, FlowerReport, MetricReport, TriangleReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("scale {scale} is not divisible by {divisor}")]
    NonIntegralWeight { scale: u64, divisor: u64 },
    #[error("root {0} is outside 1..=t/2")]
    BadRoot(usize),
    #[error("window with margin {margin} is too small for l = {l}")]
    WindowTooSmall { l: i64, margin: i64 },
    #[error("t = {0} is beyond the exhaustive checks")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
    #[error(transparent)]
    Oracle(#[from] oracles::OracleError),
}
