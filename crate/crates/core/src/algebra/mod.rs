//! The algebra E_n(u) in the normal form `Σ c · E_A T_w`.

mod element;
mod generators;
mod parse;
mod relations;
mod reports;

use thiserror::Error;

use crate::combinatorics::CombinatoricsError;
use crate::exactmath::MathError;

pub use element::{basis_mul, key_expr, AlgebraElement, BasisKey, SpecializedElement};
pub use generators::{
    e_block, e_pair, e_pair_word, e_set, eval_word, flip, gen, moebius_coefficient, t_w_inverse, word_expand,
    GeneratorWord, Letter,
};
pub use parse::parse_word;
pub use reports::{gram_matrix, gram_report, moebius_report, GramReport, MoebiusReport, MoebiusRow};
pub use relations::{
    eval_word_sum, formula_instances, relation_instances, verify_formulas, verify_relations, RelationInstance,
    RelationReport, RelationResult, WordSum,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements of different size: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Math(#[from] MathError),
}
