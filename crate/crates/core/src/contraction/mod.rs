//! The linking-number contraction bracket: glue the legs of decorated
//! trivalent graphs in pairs in all possible ways, weight by linking numbers
//! and collect the resulting Jacobi diagrams.

mod builders;
mod engine;
mod graph;
mod linking;

pub use builders::{i_sigma, i_sigma_oriented, seifert_linking_table, surface_curve, tripods, SurfaceCurve, Trilinear};
pub use engine::{contract, contract_with, Execution};
pub use graph::{DecoratedGraph, GraphCombination, Slot, Term};
pub use linking::{CurveId, LinkingTable};
