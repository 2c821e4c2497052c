//! Jacobi diagrams: canonical forms, enumeration, the quotient by AS and
//! IHX, and weight systems.

mod enumerate;
mod jacobi;
mod labelled;
mod quotient;
pub mod reference;
mod vector;
mod weight;

pub use enumerate::{enumerate_diagrams, MAX_DEGREE};
pub use labelled::{fully_labelled, two_thirds_labelled, LabelledDiagram};
pub use jacobi::{CanonicalForm, DiagramKey, JacobiDiagram};
pub use quotient::{ihx_terms, quotient, Quotient};
pub use vector::{named_basis, DiagramVector};
pub use weight::WeightSystem;

