//! Spectral data of the sum matrix T(n): its determinant, the factorization
//! of the determinant in l, kernels at special values of l, submatrix rank
//! witnesses, and a library of explicit kernel vectors.

pub mod det;
pub mod kernel;
pub mod vectors;
pub mod witness;

use exact_rings::{Field, Matrix, RingError};
use lk_representation::Params;
use thiserror::Error;
use xij_operators::{sum_matrix_direct, XijError};

pub use det::{det_t, locus_of, reducibility_locus, LocusFactor, LocusReport};
pub use kernel::{kernel, nullspace, rank, rref, KernelReport};
pub use vectors::{check_membership, check_membership_in, named_vectors, NamedVector, CASES};
pub use witness::{det_sn_formula, det_sn_formula_check, rank_witness, s_n_indices, submatrix_det, Minor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Xij(#[from] XijError),
    #[error("n = {n} exceeds the size guard {limit} for symbolic determinants over Q(l, r); raise it with LK_SIZE_GUARD or --force")]
    SizeGuard { n: usize, limit: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("unknown vector family {0:?}")]
    UnknownCase(String),
    #[error("vector family {case:?} is not defined for n = {n}")]
    OutOfRange { case: String, n: usize },
}

/// Largest n for which a determinant over the bivariate field Q(l, r) is
/// attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub generic_max_n: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard { generic_max_n: 6 }
    }
}

impl SizeGuard {
    /// No limit.
    pub fn unlimited() -> Self {
        SizeGuard { generic_max_n: usize::MAX }
    }

    /// The default, overridden by the `LK_SIZE_GUARD` environment variable
    /// when it holds an integer.
    pub fn from_env() -> Self {
        std::env::var("LK_SIZE_GUARD")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|generic_max_n| SizeGuard { generic_max_n })
            .unwrap_or_default()
    }
}

/// T(n) over the given field, assembled from the single-coefficient rules.
pub fn t_matrix<F: Field>(n: usize, field: &F) -> Result<Matrix<F::El>, SpectralError> {
    let p = Params::new(field)?;
    Ok(sum_matrix_direct(&p, n).matrix)
}
