use serde::Serialize;

use super::{gyoja_element, SpechtError};
use crate::algebra::{AlgebraElement, BasisKey};
use crate::combinatorics::{Permutation, SetPartition, SpechtLabel, TableauData};
use crate::exactmath::RatFunc;
use crate::tensor::{TensorAction, TensorKey, TensorVector};

/// `A_Λ` and its intervals `I_1, ..., I_l`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockStructure {
    pub label: SpechtLabel,
    pub a_lambda: SetPartition,
    /// `(first element, length)` per block, 1-based.
    pub blocks: Vec<(usize, usize)>,
}

impl BlockStructure {
    pub fn new(label: &SpechtLabel) -> Self {
        BlockStructure { label: label.clone(), a_lambda: label.a_lambda(), blocks: label.block_intervals() }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// The permutation of `{1..n}` moving block `first + j` onto block
/// `first + σ(j)` (blocks of one group have equal size).
pub fn block_permutation(label: &SpechtLabel, first: usize, sigma: &Permutation) -> Permutation {
    let blocks = label.block_intervals();
    let mut images: Vec<usize> = (1..=label.n()).collect();
    for j in 0..sigma.n() {
        let (from, len) = blocks[first + j];
        let (to, _) = blocks[first + sigma.apply(j + 1) - 1];
        for t in 0..len {
            images[from - 1 + t] = to + t;
        }
    }
    Permutation::from_images(&images).expect("block permutation")
}

pub fn v_lambda(label: &SpechtLabel) -> TensorKey {
    let mut pairs = Vec::with_capacity(label.n());
    for (b, lam) in label.block_types().into_iter().enumerate() {
        for (i, &part) in lam.parts().iter().enumerate() {
            pairs.extend(std::iter::repeat((i + 1, b + 1)).take(part));
        }
    }
    TensorKey::new(&pairs)
}

/// `Σ_σ coeff(σ) T_{ι(σ)}` for each group, multiplied over the groups.
fn block_sum(
    label: &SpechtLabel,
    stabilizer: impl Fn(&TableauData) -> &Vec<Permutation>,
    signed: bool,
) -> Result<AlgebraElement, SpechtError> {
    let n = label.n();
    let mut acc = AlgebraElement::one(n);
    for (first, entry) in label.groups() {
        let t = TableauData::new(&entry.mu);
        let mut sum = AlgebraElement::zero(n);
        for sigma in stabilizer(&t) {
            let c = RatFunc::from_int(if signed { sigma.sign() } else { 1 });
            let key = BasisKey { a: SetPartition::bottom(n), w: block_permutation(label, first, sigma) };
            sum.add_term(key, &c);
        }
        acc = acc.try_mul(&sum)?;
    }
    Ok(acc)
}

/// `r_{μ¹} ⊗ ... ⊗ r_{μᵏ}` acting by block permutations.
pub fn row_block_symmetrizer(label: &SpechtLabel) -> Result<AlgebraElement, SpechtError> {
    block_sum(label, |t| &t.row_stabilizer, false)
}

/// `c_{μ¹} ⊗ ... ⊗ c_{μᵏ}` acting by block permutations.
pub fn column_block_antisymmetrizer(label: &SpechtLabel) -> Result<AlgebraElement, SpechtError> {
    block_sum(label, |t| &t.col_stabilizer, true)
}

/// `c_{λ¹}(u)^{⊗m₁} ⊗ ... `, each factor placed on the generators of its block.
pub fn hecke_block_factor(label: &SpechtLabel) -> Result<AlgebraElement, SpechtError> {
    let n = label.n();
    let mut acc = AlgebraElement::one(n);
    for ((start, _), lam) in label.block_intervals().into_iter().zip(label.block_types()) {
        let c = gyoja_element(lam)?.c;
        let mut shifted = AlgebraElement::zero(n);
        for (k, coeff) in c.terms() {
            shifted.add_term(BasisKey { a: SetPartition::bottom(n), w: k.w.shifted(start - 1, n) }, coeff);
        }
        acc = acc.try_mul(&shifted)?;
    }
    Ok(acc)
}

pub fn w_lambda(label: &SpechtLabel) -> Result<TensorVector<RatFunc>, SpechtError> {
    let r = row_block_symmetrizer(label)?;
    let v = TensorVector::pure(v_lambda(label));
    Ok(TensorAction::generic(label.n()).act(&r, &v)?)
}

/// The three factors of `e_Λ`.
#[derive(Clone, Debug)]
pub struct ELambdaFactors {
    pub column: AlgebraElement,
    pub hecke: AlgebraElement,
    pub idempotent: AlgebraElement,
}

impl ELambdaFactors {
    pub fn new(label: &SpechtLabel) -> Result<Self, SpechtError> {
        let f = ELambdaFactors {
            column: column_block_antisymmetrizer(label)?,
            hecke: hecke_block_factor(label)?,
            idempotent: AlgebraElement::e_a(&label.a_lambda()),
        };
        let pairs = [(&f.column, &f.hecke), (&f.column, &f.idempotent), (&f.hecke, &f.idempotent)];
        for (x, y) in pairs {
            if x.try_mul(y)? != y.try_mul(x)? {
                return Err(SpechtError::Invariant(format!("factors of e_Λ do not commute for {label}")));
            }
        }
        Ok(f)
    }

    pub fn product(&self) -> Result<AlgebraElement, SpechtError> {
        Ok(self.column.try_mul(&self.hecke)?.try_mul(&self.idempotent)?)
    }
}

pub fn e_lambda(label: &SpechtLabel) -> Result<AlgebraElement, SpechtError> {
    ELambdaFactors::new(label)?.product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_word;

    fn label(parts: &[(&[usize], usize, &[usize])]) -> SpechtLabel {
        SpechtLabel::from_parts(parts).unwrap()
    }

    #[test]
    fn v_lambda_example() {
        let l = label(&[(&[2, 1], 2, &[1, 1])]);
        let expect = TensorKey::new(&[(1, 1), (1, 1), (2, 1), (1, 2), (1, 2), (2, 2)]);
        assert_eq!(v_lambda(&l), expect);
        let sigma = Permutation::from_images(&[2, 1]).unwrap();
        assert_eq!(block_permutation(&l, 0, &sigma).images(), vec![4, 5, 6, 1, 2, 3]);
    }

    #[test]
    fn w_lambda_examples() {
        let sym = w_lambda(&label(&[(&[1], 2, &[2])])).unwrap();
        let a = TensorVector::pure(TensorKey::new(&[(1, 1), (1, 2)]));
        let b = TensorVector::pure(TensorKey::new(&[(1, 2), (1, 1)]));
        assert_eq!(sym, a.add(&b));
        let e = e_lambda(&label(&[(&[1], 2, &[1, 1])])).unwrap();
        let alt = TensorAction::generic(2).act(&e, &w_lambda(&label(&[(&[1], 2, &[1, 1])])).unwrap()).unwrap();
        assert_eq!(alt, a.sub(&b));
    }

    #[test]
    fn e_lambda_special_cases() {
        assert_eq!(e_lambda(&label(&[(&[1], 2, &[2])])).unwrap(), AlgebraElement::one(2));
        for n in 1..=4 {
            let l = label(&[(&[n], 1, &[1])]);
            assert_eq!(e_lambda(&l).unwrap(), AlgebraElement::e_a(&SetPartition::top(n)));
        }
        let l = label(&[(&[1], 3, &[2, 1])]);
        let c = column_block_antisymmetrizer(&l).unwrap();
        assert_eq!(e_lambda(&l).unwrap(), c);
        assert_eq!(c, parse_word("1 - T1*T2*T1", 3).unwrap().hecke_projection());
    }

    #[test]
    fn factors_commute_n4() {
        for l in crate::combinatorics::enumerate_labels(4) {
            ELambdaFactors::new(&l).unwrap();
        }
    }
}
