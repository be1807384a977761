//! Permutations, integer and set partitions, tableaux, and the label set
//! indexing the simple modules.

mod intpart;
mod labels;
mod perm;
mod setpart;
mod tableau;

use thiserror::Error;

pub use intpart::IntPartition;
pub use labels::{brute_force_label_count, enumerate_labels, LabelEntry, SpechtLabel};
pub use perm::Permutation;
pub use setpart::{SetPartition, UnionFind};
pub use tableau::TableauData;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("{0:?} is not a set partition")]
    NotASetPartition(Vec<Vec<usize>>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("partitions are not comparable")]
    NotComparable,
    #[error("dominance needs equal sizes, got {0} and {1}")]
    DominanceSizeMismatch(usize, usize),
    #[error("{0:?} is not an integer partition")]
    InvalidPartition(Vec<usize>),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
}
