//! Young and Gyoja symmetrizers, the vectors `v_Λ`, `w_Λ`, the elements
//! `e_Λ`, and the simple modules `S(Λ) = E_n(u) e_Λ w_Λ` inside `V^{⊗n}`.

mod checks;
mod construction;
mod form;
mod module;
mod symmetrizers;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::combinatorics::CombinatoricsError;
use crate::exactmath::MathError;
use crate::tensor::TensorError;

pub use checks::{
    dominance_filter, multinomial, symmetrizer_checks, weight_space, DominanceInstance, DominanceReport,
    SymmetrizerReport,
};
pub use construction::{
    block_permutation, column_block_antisymmetrizer, e_lambda, hecke_block_factor, row_block_symmetrizer, v_lambda,
    w_lambda, BlockStructure, ELambdaFactors,
};
pub use form::{form_diagnostic, form_exponent, label_norm, tensor_form, tensor_form_with, FormDiagnostic};
pub use module::{
    algebra_dim, character, classification_report, e_action_check, simplicity_witness, specht_dim, specht_module,
    specht_module_at, ClassificationReport, SimplicityWitness, SpechtModule,
};
pub use symmetrizers::{
    epsilon_sum, gyoja_element, iota, proportionality, random_t_span, schur_proportional, symmetrizers,
    GyojaElement, YoungSymmetrizer,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error("e_Λ w_Λ vanishes for {0}")]
    ZeroSeed(String),
    #[error("vectors of different size: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Math(#[from] MathError),
}
