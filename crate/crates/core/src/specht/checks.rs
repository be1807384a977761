use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{gyoja_element, random_t_span, schur_proportional, symmetrizers, SpechtError};
use crate::combinatorics::{IntPartition, Permutation};
use crate::exactmath::RatFunc;
use crate::tensor::{TensorAction, TensorKey, TensorVector};

#[derive(Clone, Debug, Serialize)]
pub struct DominanceInstance {
    pub lambda: IntPartition,
    pub mu: IntPartition,
    /// `c_λ(u)` acts nontrivially on the weight-`μ` part of `N`.
    pub nonzero: bool,
    pub dominated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceReport {
    pub n: usize,
    pub instances: Vec<DominanceInstance>,
    /// Nonzero action implies `μ ⊴ λ` for every pair.
    pub pass: bool,
    /// Nonzero action happens exactly when `μ ⊴ λ`.
    pub sharp: bool,
}

/// Pure tensors in `N` (all upper indices 1) whose lower indices have
/// content `μ`: the tensor-space model of the permutation module `M_u(μ)`.
pub fn weight_space(mu: &IntPartition) -> Vec<TensorKey> {
    let mut lowers: Vec<usize> =
        mu.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i + 1).take(m)).collect();
    let mut out = Vec::new();
    // distinct permutations of the multiset, in lexicographic order
    loop {
        out.push(TensorKey::new(&lowers.iter().map(|&i| (i, 1)).collect::<Vec<_>>()));
        let Some(i) = (1..lowers.len()).rev().find(|&i| lowers[i - 1] < lowers[i]) else { break };
        let j = (i..lowers.len()).rev().find(|&j| lowers[j] > lowers[i - 1]).expect("successor exists");
        lowers.swap(i - 1, j);
        lowers[i..].reverse();
    }
    out
}

/// For all `λ, μ ⊢ n`: does `c_λ(u)` kill the weight-`μ` subspace of `N`?
pub fn dominance_filter(n: usize) -> Result<DominanceReport, SpechtError> {
    let action = TensorAction::generic(n);
    let shapes = IntPartition::all(n);
    let mut instances = Vec::new();
    for lambda in &shapes {
        let c = gyoja_element(lambda)?.c;
        for mu in &shapes {
            let mut nonzero = false;
            for key in weight_space(mu) {
                if !action.act(&c, &TensorVector::<RatFunc>::pure(key))?.is_zero() {
                    nonzero = true;
                    break;
                }
            }
            instances.push(DominanceInstance {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nonzero,
                dominated: mu.dominance_leq(lambda)?,
            });
        }
    }
    Ok(DominanceReport {
        n,
        pass: instances.iter().all(|i| !i.nonzero || i.dominated),
        sharp: instances.iter().all(|i| i.nonzero == i.dominated),
        instances,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetrizerReport {
    pub n: usize,
    pub shapes: usize,
    pub samples_per_shape: usize,
    pub preidempotent: bool,
    /// Instances of `c z r ∝ c r` in the Hecke quotient that held.
    pub hecke_held: usize,
    pub group_held: usize,
    pub checked: usize,
    pub pass: bool,
}

/// Preidempotence of `s_λ` and `e_λ`, and `c z r ∝ c r` for random `z`
/// in both quotients, for every `λ ⊢ n`.
pub fn symmetrizer_checks(n: usize, samples: usize, seed: u64) -> Result<SymmetrizerReport, SpechtError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = IntPartition::all(n);
    let mut preidempotent = true;
    let (mut hecke_held, mut group_held, mut checked) = (0, 0, 0);
    for lam in &shapes {
        let (y, g) = match (symmetrizers(lam), gyoja_element(lam)) {
            (Ok(y), Ok(g)) => (y, g),
            (Err(SpechtError::Invariant(_)), _) | (_, Err(SpechtError::Invariant(_))) => {
                preidempotent = false;
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        for _ in 0..samples {
            let z = random_t_span(n, &mut rng);
            checked += 1;
            hecke_held += usize::from(schur_proportional(&g.c, &z, &g.r, true)?);
            group_held += usize::from(schur_proportional(&y.c, &z, &y.r, false)?);
        }
    }
    Ok(SymmetrizerReport {
        n,
        shapes: shapes.len(),
        samples_per_shape: samples,
        preidempotent,
        hecke_held,
        group_held,
        checked,
        pass: preidempotent && hecke_held == checked && group_held == checked,
    })
}

/// The number of permutations of the multiset with content `μ`.
pub fn multinomial(mu: &IntPartition) -> usize {
    let fact = |k: usize| Permutation::all(k).len();
    mu.parts().iter().fold(fact(mu.size()), |acc, &m| acc / fact(m))
}
