//! Dedekind sums, lens spaces, surgery formulas for the Casson-Walker
//! invariant and `λ₂`, and the surgery brackets for boundary links,
//! algebraically split links and LP-surgeries.

mod brackets;
mod lens;
mod polynomial;

pub use brackets::{
    bracket_as, bracket_as_mu0, bracket_boundary, bracket_lp, HandlebodyDatum, IntersectionLinkTable, MilnorTensor,
};
pub use lens::{dedekind_sum, lambda2_integral_surgery, lambda2_surgery, lambda_lens, lambda_surgery, SurgerySpec};
pub use polynomial::{
    singular_pair_linking_table, y2_singular_engine, y2_singular_polynomial, y_leading, y_penultimate,
};
