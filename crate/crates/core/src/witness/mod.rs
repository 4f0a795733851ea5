//! Explicit pairs `(A, B)` whose commutator has finite order.

mod commutator;
mod general;

pub use commutator::{
    build_c, build_witness, commutator_preimage, realize_commutator, zero_diagonal_similarity, CommutatorWitness,
    WitnessChecks,
};
pub use general::{
    build_dp, build_theorem32, corollary_units, lemma_pd_check, wrap_index, CentralUnitDecomposition, LemmaPdReport,
    Strategy,
};
