//! Ground truth for the presentations: matrix models of rank-2 unipotent
//! groups, relator evaluation, brute-force enumeration and coset
//! enumeration.

mod closure;
mod evaluate;
mod laws;
mod matrix;
mod model;
pub mod todd_coxeter;

pub use closure::{closure, frattini_generator_count, frattini_subgroup_order, GroupEnumeration};
pub use evaluate::{
    eval_word, model_kind_for, verify_auto, verify_pair_local, verify_presentation, VerifyReport,
};
pub use laws::{
    commutator_identity_suite, commutator_product_law, hall_witt_law, sp4_reduction_claims,
    LawReport,
};
pub use matrix::MatrixGF;
pub use model::{build_model, MatrixModel, ModelKind};
pub use todd_coxeter::{max_cosets_from_env, todd_coxeter, CosetTable, TcStatus, DEFAULT_MAX_COSETS};

/// Default closure cap for a group whose largest expected order is `q⁴`.
pub fn default_closure_cap(q: u64) -> usize {
    (2 * q.pow(4)) as usize
}
