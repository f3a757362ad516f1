//! Combinatorics of regular nilpotent Hessenberg varieties: permissible
//! fillings, the dimension pair algorithm, Betti poset pinball, and
//! equivariant restrictions of Schubert classes via Billey's formula.

pub mod billey;
pub mod cli;
pub mod error;
pub mod fillings;
pub mod hess334;
pub mod perm;
pub mod pinball;
pub mod poly;
pub mod report;

pub use billey::{
    billey_r, check_upper_triangular, p_restriction, project_s1, restriction_matrix,
    sigma_restriction, RestrictionMatrix, Root, S1Value,
};
pub use error::{Error, Result};
pub use fillings::{
    dimension_pairs, enumerate_permissible, filling_of_fixed_point, is_permissible, omega,
    omega_inverse, reading_word, top_parts, DimensionPairSet, Filling, HessenbergFunction,
    TopParts, YoungDiagram,
};
pub use hess334::{
    associated_subset, catalog_reduced_word, classify, closed_form_restriction,
    is_334_fixed_point, rolldown_closed_form, summand_census, verify_334_theorem,
    AssociatedSubset, FixedPointClass,
};
pub use perm::{
    bruhat_leq, bruhat_leq_oracle, canonical_reduced_word, from_reduced_word, DescentSet,
    Permutation, ReducedWord, Word,
};
pub use pinball::{betti_numbers, degree, rolldown, verify_pinball, BettiVector, RolldownTable};
pub use poly::MultivariatePolynomial;
