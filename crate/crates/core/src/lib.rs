//! Almost groups, almost Hopf algebras and their bicrossproducts, with
//! exhaustive verifiers for every structural identity, plus the numerical
//! meromorphic loop factorization that motivates them.

pub mod almost_group;
pub mod bicross_dual;
pub mod exact_linear;
pub mod hopf_core;
pub mod loop_factor;
pub mod matched_pair;
pub mod report;
