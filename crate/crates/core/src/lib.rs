//! Exact arithmetic for finite type invariants of knots and rational
//! homology spheres: Jacobi diagram spaces, the linking-number contraction
//! bracket, closed knot formulas and surgery formulas.

pub mod algebra;
pub mod anchors;
pub mod contraction;
pub mod diagram;
mod error;
pub mod io;
pub mod knot;
pub mod surgery;

pub use algebra::{LaurentPoly, Matrix, Rational};
pub use contraction::{contract, contract_with, CurveId, DecoratedGraph, Execution, GraphCombination, LinkingTable};
pub use diagram::{CanonicalForm, DiagramKey, DiagramVector, JacobiDiagram, WeightSystem};
pub use error::{Error, Result};
