//! Crossed-product cyclic homology through the group-graded bicomplex, its quotients,
//! coinvariants, conjugacy stalks and comparison maps.

mod operators;

pub use operators::{gj_index, GjOperators};
mod proposition;

pub use proposition::{proposition_bicomplex, proposition_complex, proposition_dims, PropositionComplex};
mod coinvariant;

pub use coinvariant::{
    coinvariant_bicomplex, coinvariant_complex, coinvariant_dims, conjugacy_decomposition,
    hcG_bicomplex, hcg_complex, stalk_complex, theorem_map_f, RowComplex, StalkHomology,
    TheoremDegree, TheoremMapReport,
};
mod lambda;

pub use lambda::{connes_lambda_complex, lambda_b, lambda_complex, lambda_index, lambda_t, LambdaComplex};
mod identities;

pub use identities::{
    verify_identities, verify_pair_identities, IdentityCheck, Residual, IDENTITY_NAMES, PAIR_NAMES,
};
mod lemma;

pub use lemma::{u_complex_equivalence, LemmaReport};
