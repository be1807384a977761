//! The tensor space `V^{⊗n}`, `V` spanned by `v_i^j` with `1 ≤ i, j ≤ n`,
//! as a faithful module, and the quotient submodules `M` and `N`.

mod action;
mod checks;
mod vector;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::exactmath::MathError;

pub use action::{block_projection, relabel_upper, TensorAction};
pub use checks::{
    faithfulness_certificate, partition_probes, quotient_checks, upper_canonical_keys, verify_tensor_relations,
    FaithfulnessReport, QuotientReport, RankWitness, TensorRelationReport,
};
pub use vector::{TensorKey, TensorVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("position {k} out of range for n = {n}")]
    PositionOutOfRange { k: usize, n: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Math(#[from] MathError),
}
