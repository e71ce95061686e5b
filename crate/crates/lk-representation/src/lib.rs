//! The Lawrence–Krammer representation ν of the BMW algebra B(A_{n-1}) on the
//! space with basis {x_β} indexed by the positive roots β of A_{n-1}.
//!
//! Matrices act on coordinate column vectors: column `position(β)` of G_i
//! holds the coordinates of ν(g_i)(x_β).

pub mod action;
pub mod build;
pub mod relations;

pub use action::{nu_action, nu_case, nu_e_action, nu_e_coeff, nu_inv_action, NuCase, Params, SparseColumn};
pub use build::{build_matrices, build_matrices_recursive, e_from_g, ginv_from_g_e, LKMatrices};
pub use relations::{verify_relations, RelationCheck, RelationReport};
