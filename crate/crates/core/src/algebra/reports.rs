use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{basis_mul, moebius_coefficient, AlgebraError, BasisKey};
use crate::combinatorics::{Permutation, SetPartition};
use crate::exactmath::{format_rational, rank_exact, RatFunc, Rational, SparseMatrix, SparseVec};

/// Gram matrix `<g, h> = ε(g* h)` of the basis `E_A T_w`, in [`BasisKey::all`] order.
pub fn gram_matrix(n: usize) -> SparseMatrix<RatFunc> {
    let keys = BasisKey::all(n);
    let top = BasisKey { a: SetPartition::top(n), w: Permutation::identity(n) };
    let rows: Vec<SparseVec<usize, RatFunc>> = keys
        .par_iter()
        .map(|g| {
            let gs = g.star();
            keys.iter()
                .enumerate()
                .filter_map(|(j, h)| {
                    basis_mul(&gs, h).into_iter().find(|(k, _)| *k == top).map(|(_, c)| (j, c))
                })
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect();
    let mut m = SparseMatrix::new(keys.len(), keys.len());
    for (i, r) in rows.into_iter().enumerate() {
        for (j, c) in r {
            m.set(i, j, c);
        }
    }
    m
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub n: usize,
    pub size: usize,
    /// `"generic"` or the value of `u`.
    pub point: String,
    pub rank: usize,
    pub full_rank: bool,
}

/// Rank of the Gram matrix over Q(u) (`at = None`) or at `u = q`.
pub fn gram_report(n: usize, at: Option<&Rational>) -> Result<GramReport, AlgebraError> {
    let g = gram_matrix(n);
    let size = g.shape().0;
    let (point, rank) = match at {
        None => ("generic".to_string(), rank_exact(&g)),
        Some(q) => (format_rational(q), rank_exact(&g.map(|c| c.eval(q))?)),
    };
    Ok(GramReport { n, size, point, rank, full_rank: rank == size })
}

#[derive(Clone, Debug, Serialize)]
pub struct MoebiusRow {
    pub partition: SetPartition,
    pub blocks: usize,
    /// Coefficient of `E_⊤` in `∏_{A0 ⊊ A} (1 - E_A) E_{A0}`, by expansion.
    pub brute_force: String,
    /// Lattice Möbius value `μ(A0, ⊤)`.
    pub lattice: i64,
    /// `(-1)^(k-1) (k-1)!`.
    pub classical: i64,
    /// `(-1)^(k-1) k!`.
    pub factorial_k: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoebiusReport {
    pub n: usize,
    /// The expansion equals `normalization · μ(A0, ⊤)`.
    pub normalization: i64,
    pub rows: Vec<MoebiusRow>,
    pub brute_force_matches_lattice: bool,
    pub matches_classical: bool,
    pub matches_factorial_k: bool,
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

pub fn moebius_report(n: usize) -> Result<MoebiusReport, AlgebraError> {
    let top = SetPartition::top(n);
    let rows = SetPartition::enumerate(n)
        .par_iter()
        .map(|a| {
            let k = a.num_blocks();
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let brute = moebius_coefficient(a)?;
            Ok((
                brute,
                MoebiusRow {
                    partition: a.clone(),
                    blocks: k,
                    brute_force: String::new(),
                    lattice: SetPartition::moebius(a, &top)?,
                    classical: sign * factorial(k - 1),
                    factorial_k: sign * factorial(k),
                },
            ))
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    let normalization = 1;
    let eq = |q: &Rational, v: i64| *q == Rational::from_integer(v.into());
    let brute_force_matches_lattice = rows.iter().all(|(b, r)| eq(b, normalization * r.lattice));
    let matches_classical = rows.iter().all(|(b, r)| eq(b, r.classical));
    let matches_factorial_k = rows.iter().all(|(b, r)| eq(b, r.factorial_k));
    let rows = rows
        .into_iter()
        .map(|(b, mut r)| {
            r.brute_force = if b.denom().is_one() { b.numer().to_string() } else { format_rational(&b) };
            r
        })
        .collect();
    Ok(MoebiusReport { n, normalization, rows, brute_force_matches_lattice, matches_classical, matches_factorial_k })
}
