//! Grid Tiling to Planar Steiner Tree: verification gadgets, the assembled
//! graph with its budget, unit-weight subdivision, and brute-force checks.

pub mod assemble;
pub mod constants;
pub mod grid;
pub mod lemmas;
mod sketch;
pub mod subdivide;
pub mod vg;

use gadget_flower::GadgetError;
use graph_core::{GraphError, Weight};
use oracles::OracleError;
use thiserror::Error;

pub use assemble::{build_reduction, build_reduction_with, CellPortals, FlowerPortals, PortalDirectory, ReductionOutput};
pub use constants::{DummyAttachment, Powers, ReductionConstants};
pub use grid::{solve_grid_tiling_bruteforce, GridSolution, GridTilingInstance};
pub use lemmas::{default_base, verify_gadget_lemmas, ClauseReport, LemmaReport};
pub use subdivide::{subdivide_to_unit_weights, Subdivided};
pub use vg::{build_lvg, build_vg, LvgGadget, LvgPortals, VgGadget, VgPortals};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("invalid grid tiling instance: {0}")]
    InvalidGrid(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("total weight {total} exceeds the budget {budget}")]
    BudgetExceeded { total: Weight, budget: u64 },
    #[error("layout: {0}")]
    Layout(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
