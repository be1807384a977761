use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{e_lambda, w_lambda, SpechtError};
use crate::algebra::{AlgebraElement, BasisKey};
use crate::combinatorics::{enumerate_labels, IntPartition, Permutation, SetPartition, SpechtLabel};
use crate::exactmath::{random_rational, span_closure, EchelonBasis, Field, RankMode, RatFunc, Rational};
use crate::tensor::{TensorAction, TensorKey, TensorVector};

/// `S(Λ) = E_n(u) e_Λ w_Λ` inside `V^{⊗n}`, over the field `F`.
#[derive(Clone)]
pub struct SpechtModule<F> {
    pub label: SpechtLabel,
    /// `e_Λ w_Λ`.
    pub seed: TensorVector<F>,
    echelon: EchelonBasis<TensorKey, F>,
    action: TensorAction<F>,
}

impl<F: Field> SpechtModule<F> {
    fn build(label: &SpechtLabel, action: TensorAction<F>, seed: TensorVector<F>) -> Result<Self, SpechtError> {
        if seed.is_zero() {
            return Err(SpechtError::ZeroSeed(label.to_string()));
        }
        let n = label.n();
        let step = |v: &crate::exactmath::SparseVec<TensorKey, F>| {
            let v = TensorVector::from_sparse(n, v.clone());
            action.generator_images(&v).into_iter().map(TensorVector::into_terms).collect()
        };
        let echelon = span_closure(vec![seed.terms().clone()], step);
        Ok(SpechtModule { label: label.clone(), seed, echelon, action })
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn basis(&self) -> Vec<TensorVector<F>> {
        let n = self.label.n();
        self.echelon.rows().map(|r| TensorVector::from_sparse(n, r.clone())).collect()
    }

    pub fn contains(&self, v: &TensorVector<F>) -> bool {
        self.echelon.contains(v.terms())
    }

    pub fn action(&self) -> &TensorAction<F> {
        &self.action
    }

    /// Trace of `x` acting on the module.
    pub fn trace(&self, x: &AlgebraElement) -> Result<F, SpechtError> {
        let mut tr = F::zero();
        for (i, b) in self.basis().iter().enumerate() {
            let image = self.action.act(x, b)?;
            let coords = self
                .echelon
                .coordinates(image.terms())
                .ok_or_else(|| SpechtError::Invariant(format!("S({}) is not closed", self.label)))?;
            tr = tr + &coords[i];
        }
        Ok(tr)
    }

    /// Every generator image of every basis vector lies in the span.
    pub fn is_closed(&self) -> bool {
        self.basis().iter().all(|b| self.action.generator_images(b).iter().all(|v| self.contains(v)))
    }

    /// Dimension of `x · S(Λ)`.
    pub fn image_dim(&self, x: &AlgebraElement) -> Result<usize, SpechtError> {
        let mut e = EchelonBasis::new();
        for b in self.basis() {
            e.insert(self.action.act(x, &b)?.into_terms());
        }
        Ok(e.dim())
    }
}

/// `S(Λ)` exactly over Q(u).
pub fn specht_module(label: &SpechtLabel) -> Result<SpechtModule<RatFunc>, SpechtError> {
    let action = TensorAction::generic(label.n());
    let seed = action.act(&e_lambda(label)?, &w_lambda(label)?)?;
    SpechtModule::build(label, action, seed)
}

/// `S(Λ)` with `u` specialized to `q`.
pub fn specht_module_at(label: &SpechtLabel, q: &Rational) -> Result<SpechtModule<Rational>, SpechtError> {
    let action = TensorAction::at(label.n(), q)?;
    let w = w_lambda(label)?;
    let mut wq = TensorVector::zero(label.n());
    for (k, c) in w.terms() {
        wq.add_term(k.clone(), c.eval(q)?);
    }
    let seed = action.act(&e_lambda(label)?, &wq)?;
    SpechtModule::build(label, action, seed)
}

/// `dim S(Λ)`: exact, or the maximum over random specializations with an
/// exact recomputation when two points disagree. Specialization never
/// raises the dimension.
pub fn specht_dim(label: &SpechtLabel, mode: RankMode) -> Result<usize, SpechtError> {
    match mode {
        RankMode::Exact => Ok(specht_module(label)?.dim()),
        RankMode::Specialized { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut at_point = || -> Result<usize, SpechtError> {
                loop {
                    let q = random_rational(&mut rng);
                    match specht_module_at(label, &q) {
                        Err(SpechtError::ZeroSeed(_)) => continue,
                        other => return other.map(|m| m.dim()),
                    }
                }
            };
            let a = at_point()?;
            let b = at_point()?;
            if a == b {
                Ok(a)
            } else {
                Ok(specht_module(label)?.dim())
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub n: usize,
    pub labels: Vec<SpechtLabel>,
    pub dims: Vec<usize>,
    pub sum_squares: usize,
    pub dim_algebra: usize,
    pub equal: bool,
    /// The data `(block sizes of A_Λ, (λˢ), (μˢ))` differ between labels.
    pub distinct_data: bool,
}

/// `n! · B_n`.
pub fn algebra_dim(n: usize) -> usize {
    Permutation::all(n).len() * SetPartition::enumerate(n).len()
}

pub fn classification_report(n: usize, mode: RankMode) -> Result<ClassificationReport, SpechtError> {
    let labels = enumerate_labels(n);
    let dims = labels.par_iter().map(|l| specht_dim(l, mode)).collect::<Result<Vec<_>, _>>()?;
    let sum_squares = dims.iter().map(|d| d * d).sum();
    let dim_algebra = algebra_dim(n);
    let mut data: Vec<(Vec<usize>, Vec<&IntPartition>, Vec<&IntPartition>)> = labels
        .iter()
        .map(|l| {
            (
                l.block_intervals().iter().map(|b| b.1).collect(),
                l.entries().iter().map(|e| &e.lambda).collect(),
                l.entries().iter().map(|e| &e.mu).collect(),
            )
        })
        .collect();
    data.sort();
    data.dedup();
    Ok(ClassificationReport {
        n,
        distinct_data: data.len() == labels.len(),
        labels,
        dims,
        sum_squares,
        dim_algebra,
        equal: sum_squares == dim_algebra,
    })
}

/// `E_B w_Λ` equals `w_Λ` when `B` refines `A_Λ` and vanishes otherwise.
pub fn e_action_check(label: &SpechtLabel, b: &SetPartition) -> Result<bool, SpechtError> {
    let w = w_lambda(label)?;
    let image = TensorAction::generic(label.n()).act(&AlgebraElement::e_a(b), &w)?;
    Ok(if b.leq(&label.a_lambda())? { image == w } else { image.is_zero() })
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityWitness {
    pub label: SpechtLabel,
    pub dim: usize,
    /// `dim e_Λ S(Λ)`.
    pub e_image_dim: usize,
    pub contains_seed: bool,
    pub pass: bool,
}

/// `e_Λ S(Λ) = K e_Λ w_Λ`, exactly.
pub fn simplicity_witness(module: &SpechtModule<RatFunc>) -> Result<SimplicityWitness, SpechtError> {
    let e = e_lambda(&module.label)?;
    let mut image = EchelonBasis::new();
    for b in module.basis() {
        image.insert(module.action().act(&e, &b)?.into_terms());
    }
    let seed_image = module.action().act(&e, &module.seed)?;
    let contains_seed = image.contains(seed_image.terms()) && image.contains(module.seed.terms());
    let e_image_dim = image.dim();
    Ok(SimplicityWitness {
        label: module.label.clone(),
        dim: module.dim(),
        e_image_dim,
        contains_seed,
        pass: e_image_dim == 1 && contains_seed,
    })
}

/// The character `x ↦ tr(x | S(Λ))` on every basis element `E_A T_w`.
pub fn character(module: &SpechtModule<RatFunc>) -> Result<Vec<RatFunc>, SpechtError> {
    BasisKey::all(module.label.n())
        .into_iter()
        .map(|k| module.trace(&AlgebraElement::basis(k)))
        .collect()
}
