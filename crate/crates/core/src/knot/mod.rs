//! Knot invariants from Seifert data, and closed formulas for pretzel knots,
//! singular knots, crossing changes and link components.

mod closed;
mod seifert;

pub use closed::{
    lambda_prime_many, lambda_prime_pair, lambda_prime_pretzel, lambda_prime_triple, mu_01_23, mu_10_23, nu_abc,
    singular_invariants, w3_crossing_change, w3_embedded_genus_one, w3_pretzel, PretzelParams, SingularInvariants,
    SingularLinkingMatrix,
};
pub use seifert::{
    alexander_from_seifert, delta_d_closed_form, delta_d_determinant, i_sigma_bracket, intersection_form,
    lambda2_second, lambda2_second_with, lambda_prime, lambda_prime_alexander, lambda_prime_contraction,
    seifert_determinant, stacked_bracket, SeifertData,
};
