use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{e_lambda, w_lambda, SpechtError};
use crate::algebra::{gen, AlgebraElement, BasisKey, Letter};
use crate::combinatorics::{enumerate_labels, SpechtLabel};
use crate::exactmath::{field_pow, Field, RatFunc};
use crate::tensor::{TensorAction, TensorKey, TensorVector};

/// Exponent of the weight of a pure tensor: after stably sorting the factors
/// by upper index, the total number of inversions of the lower indices
/// inside each group of equal upper index.
pub fn form_exponent(key: &TensorKey) -> usize {
    let pairs = &key.0;
    let mut inv = 0;
    for (a, &(la, ua)) in pairs.iter().enumerate() {
        for &(lb, ub) in &pairs[a + 1..] {
            if ua == ub && la > lb {
                inv += 1;
            }
        }
    }
    inv
}

/// The bilinear form, diagonal on pure tensors with `⟨k, k⟩ = u^{form_exponent(k)}`.
pub fn tensor_form_with<F: Field>(v: &TensorVector<F>, w: &TensorVector<F>, u: &F) -> Result<F, SpechtError> {
    if v.n() != w.n() {
        return Err(SpechtError::SizeMismatch(v.n(), w.n()));
    }
    let mut acc = F::zero();
    for (k, c) in v.terms() {
        if let Some(d) = w.terms().get(k) {
            acc = acc + &(c.clone() * d * &field_pow(u, form_exponent(k) as i64)?);
        }
    }
    Ok(acc)
}

pub fn tensor_form(v: &TensorVector<RatFunc>, w: &TensorVector<RatFunc>) -> Result<RatFunc, SpechtError> {
    tensor_form_with(v, w, &RatFunc::u())
}

#[derive(Clone, Debug, Serialize)]
pub struct FormDiagnostic {
    pub n: usize,
    pub invariance_checked: usize,
    pub invariance_held: usize,
    /// Labels `Λ` with `⟨e_Λ w_Λ, e_Λ w_Λ⟩ ≠ 0`, out of all labels.
    pub norms_nonzero: usize,
    pub labels: usize,
    pub pass: bool,
}

fn random_element<R: Rng>(n: usize, rng: &mut R) -> Result<AlgebraElement, SpechtError> {
    if n < 2 || rng.gen_bool(0.5) {
        let keys = BasisKey::all(n);
        return Ok(AlgebraElement::basis(keys.choose(rng).expect("nonempty").clone()));
    }
    let i = rng.gen_range(1..n);
    let letter = [Letter::T(i), Letter::Tinv(i), Letter::E(i)][rng.gen_range(0..3)];
    Ok(gen(letter, n)?)
}

/// `⟨x v, w⟩ = ⟨v, x* w⟩` on `samples` random triples (pure tensors, `x` a
/// generator or basis element, `w` drawn from the support of `x v` when
/// possible) and nonvanishing of `⟨e_Λ w_Λ, e_Λ w_Λ⟩`, exact over Q(u).
pub fn form_diagnostic(n: usize, samples: usize, seed: u64) -> Result<FormDiagnostic, SpechtError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let action = TensorAction::generic(n);
    let keys = TensorKey::all(n);
    let mut held = 0;
    for _ in 0..samples {
        let x = random_element(n, &mut rng)?;
        let v = TensorVector::pure(keys.choose(&mut rng).expect("nonempty").clone());
        let xv = action.act(&x, &v)?;
        let wkey = match xv.terms().keys().collect::<Vec<_>>().choose(&mut rng) {
            Some(&k) if rng.gen_bool(0.8) => k.clone(),
            _ => keys.choose(&mut rng).expect("nonempty").clone(),
        };
        let w = TensorVector::pure(wkey);
        let lhs = tensor_form(&xv, &w)?;
        let rhs = tensor_form(&v, &action.act(&x.star(), &w)?)?;
        if lhs == rhs {
            held += 1;
        }
    }
    let labels = enumerate_labels(n);
    let mut norms_nonzero = 0;
    for l in &labels {
        if !label_norm(l)?.is_zero() {
            norms_nonzero += 1;
        }
    }
    Ok(FormDiagnostic {
        n,
        invariance_checked: samples,
        invariance_held: held,
        norms_nonzero,
        labels: labels.len(),
        pass: held == samples && norms_nonzero == labels.len(),
    })
}

/// `⟨e_Λ w_Λ, e_Λ w_Λ⟩`.
pub fn label_norm(label: &SpechtLabel) -> Result<RatFunc, SpechtError> {
    let action = TensorAction::generic(label.n());
    let seed = action.act(&e_lambda(label)?, &w_lambda(label)?)?;
    tensor_form(&seed, &seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn pure(pairs: &[(usize, usize)]) -> TensorVector<RatFunc> {
        TensorVector::pure(TensorKey::new(pairs))
    }

    #[test]
    fn form_examples() {
        let a = pure(&[(1, 1), (1, 2)]);
        assert!(tensor_form(&a, &a).unwrap().is_one());
        assert!(tensor_form(&a, &pure(&[(1, 2), (1, 1)])).unwrap().is_zero());
        let b = pure(&[(2, 1), (1, 1)]);
        assert_eq!(tensor_form(&b, &b).unwrap(), RatFunc::u());
        assert!(tensor_form(&a, &pure(&[(1, 1)])).is_err());
    }

    #[test]
    fn invariance_small() {
        let d = form_diagnostic(2, 60, 9).unwrap();
        assert!(d.pass, "{d:?}");
    }
}
