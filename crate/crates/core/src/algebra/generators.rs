use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{AlgebraElement, AlgebraError, BasisKey};
use crate::combinatorics::{Permutation, SetPartition};
use crate::exactmath::{RatFunc, Rational};

/// A generator letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    T(usize),
    Tinv(usize),
    E(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::T(i) | Letter::Tinv(i) | Letter::E(i) => i,
        }
    }

    pub fn with_index(self, i: usize) -> Letter {
        match self {
            Letter::T(_) => Letter::T(i),
            Letter::Tinv(_) => Letter::Tinv(i),
            Letter::E(_) => Letter::E(i),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::Tinv(i) => write!(f, "T{i}^-1"),
            Letter::E(i) => write!(f, "E{i}"),
        }
    }
}

pub type GeneratorWord = Vec<Letter>;

fn check_index(i: usize, n: usize) -> Result<(), AlgebraError> {
    if i == 0 || i >= n {
        return Err(AlgebraError::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

/// The generator `T_i`, `E_i`, or `T_i^{-1} = T_i + (u^{-1} - 1) E_i (1 + T_i)`.
pub fn gen(letter: Letter, n: usize) -> Result<AlgebraElement, AlgebraError> {
    let i = letter.index();
    check_index(i, n)?;
    let si = Permutation::simple(i, n)?;
    let pair = SetPartition::pair(n, i, i + 1)?;
    Ok(match letter {
        Letter::T(_) => AlgebraElement::t_w(&si),
        Letter::E(_) => AlgebraElement::e_a(&pair),
        Letter::Tinv(_) => {
            let c = RatFunc::u_inv_minus_one();
            AlgebraElement::from_terms(
                n,
                [
                    (BasisKey { a: SetPartition::bottom(n), w: si.clone() }, RatFunc::one()),
                    (BasisKey { a: pair.clone(), w: Permutation::identity(n) }, c.clone()),
                    (BasisKey { a: pair, w: si }, c),
                ],
            )?
        }
    })
}

/// Product of the letters of `word`, left to right.
pub fn eval_word(word: &[Letter], n: usize) -> Result<AlgebraElement, AlgebraError> {
    let mut acc = AlgebraElement::one(n);
    for &l in word {
        acc = acc.try_mul(&gen(l, n)?)?;
    }
    Ok(acc)
}

/// `E_{ij} = T_i ... T_{j-2} E_{j-1} T_{j-2}^{-1} ... T_i^{-1}` as a word.
pub fn e_pair_word(i: usize, j: usize) -> GeneratorWord {
    let mut w: GeneratorWord = (i..j - 1).map(Letter::T).collect();
    w.push(Letter::E(j - 1));
    w.extend((i..j - 1).rev().map(Letter::Tinv));
    w
}

/// A word for `E_A T_w`: `E_{i0 i}` for each block and each non-minimal
/// element `i`, then the reduced word of `w`.
pub fn word_expand(key: &BasisKey) -> GeneratorWord {
    let mut word = GeneratorWord::new();
    for block in key.a.blocks() {
        for &i in &block[1..] {
            word.extend(e_pair_word(block[0], i));
        }
    }
    word.extend(key.w.reduced_word().into_iter().map(Letter::T));
    word
}

pub fn e_pair(i: usize, j: usize, n: usize) -> Result<AlgebraElement, AlgebraError> {
    if i == 0 || i >= j || j > n {
        return Err(AlgebraError::IndexOutOfRange { index: j, n });
    }
    eval_word(&e_pair_word(i, j), n)
}

/// `E_A` built as a product of conjugated generators, asserting that the
/// result collapses to the single basis element `(A, e)`.
pub fn e_set(a: &SetPartition) -> Result<AlgebraElement, AlgebraError> {
    let n = a.n();
    let key = BasisKey { a: a.clone(), w: Permutation::identity(n) };
    let x = eval_word(&word_expand(&key), n)?;
    if x != AlgebraElement::basis(key) {
        return Err(AlgebraError::Invariant(format!("E_A for {a} evaluated to {x}")));
    }
    Ok(x)
}

/// `E_I` for a single block `I` (elements 1-based), other points singletons.
pub fn e_block(block: &[usize], n: usize) -> Result<AlgebraElement, AlgebraError> {
    let pairs: Vec<(usize, usize)> = block.windows(2).map(|w| (w[0], w[1])).collect();
    if block.iter().any(|&x| x == 0 || x > n) {
        return Err(AlgebraError::IndexOutOfRange { index: *block.iter().max().unwrap_or(&0), n });
    }
    Ok(AlgebraElement::e_a(&SetPartition::closure(n, &pairs)?))
}

/// `T_w^{-1}` as the product of inverse letters along the reversed reduced word.
pub fn t_w_inverse(w: &Permutation) -> Result<AlgebraElement, AlgebraError> {
    let word: GeneratorWord = w.reduced_word().into_iter().rev().map(Letter::Tinv).collect();
    eval_word(&word, w.n())
}

/// The involution induced by `i ↦ n - i` on generator indices.
pub fn flip(x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    let n = x.n();
    let mut out = AlgebraElement::zero(n);
    for (k, c) in x.terms() {
        let word: GeneratorWord = word_expand(k).into_iter().map(|l| l.with_index(n - l.index())).collect();
        out = out.try_add(&eval_word(&word, n)?.scale(c))?;
    }
    Ok(out)
}

/// Coefficient of `E_⊤` in `∏_{A0 ⊊ A} (1 - E_A) E_{A0}`.
pub fn moebius_coefficient(a0: &SetPartition) -> Result<Rational, AlgebraError> {
    let n = a0.n();
    let one = AlgebraElement::one(n);
    let mut acc = AlgebraElement::e_a(a0);
    for a in SetPartition::enumerate(n) {
        if a != *a0 && a0.leq(&a)? {
            acc = acc.try_mul(&one.try_sub(&AlgebraElement::e_a(&a))?)?;
        }
    }
    let c = acc.epsilon();
    c.as_constant()
        .ok_or_else(|| AlgebraError::Invariant(format!("coefficient {c} depends on u")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn key(n: usize, blocks: &[Vec<usize>], w: &[usize]) -> BasisKey {
        BasisKey {
            a: SetPartition::from_blocks(n, blocks).unwrap(),
            w: Permutation::from_images(w).unwrap(),
        }
    }

    #[test]
    fn generator_examples() {
        let e1 = gen(Letter::E(1), 2).unwrap();
        assert_eq!(e1, AlgebraElement::basis(key(2, &[vec![1, 2]], &[1, 2])));
        let t1 = gen(Letter::T(1), 2).unwrap();
        assert_eq!(t1, AlgebraElement::basis(key(2, &[vec![1], vec![2]], &[2, 1])));
        let tinv = gen(Letter::Tinv(1), 2).unwrap();
        assert_eq!(tinv.len(), 3);
        assert_eq!(tinv.coeff(&key(2, &[vec![1, 2]], &[2, 1])), RatFunc::u_inv_minus_one());
        assert!((&t1 * &tinv).as_scalar().unwrap().is_one());
        assert!(gen(Letter::T(2), 2).is_err());
        assert!(gen(Letter::E(0), 2).is_err());
    }

    #[test]
    fn pair_and_set_idempotents() {
        assert_eq!(e_pair(1, 2, 3).unwrap(), AlgebraElement::basis(key(3, &[vec![1, 2], vec![3]], &[1, 2, 3])));
        assert_eq!(e_pair(1, 3, 3).unwrap(), AlgebraElement::basis(key(3, &[vec![1, 3], vec![2]], &[1, 2, 3])));
        let top = SetPartition::top(3);
        assert_eq!(e_set(&top).unwrap(), AlgebraElement::e_a(&top));
        let prod = &e_pair(1, 2, 3).unwrap() * &e_pair(1, 3, 3).unwrap();
        assert_eq!(prod, AlgebraElement::e_a(&top));
        for n in 1..=4 {
            for a in SetPartition::enumerate(n) {
                e_set(&a).unwrap();
            }
        }
    }

    #[test]
    fn word_expansion_examples() {
        assert_eq!(word_expand(&key(2, &[vec![1], vec![2]], &[2, 1])), vec![Letter::T(1)]);
        assert_eq!(
            word_expand(&key(3, &[vec![1, 3], vec![2]], &[1, 2, 3])),
            vec![Letter::T(1), Letter::E(2), Letter::Tinv(1)]
        );
        assert_eq!(word_expand(&key(2, &[vec![1, 2]], &[2, 1])), vec![Letter::E(1), Letter::T(1)]);
        for n in 1..=3 {
            for k in BasisKey::all(n) {
                assert_eq!(eval_word(&word_expand(&k), n).unwrap(), AlgebraElement::basis(k));
            }
        }
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(&gen(Letter::E(1), 3).unwrap()).unwrap(), gen(Letter::E(2), 3).unwrap());
        assert_eq!(flip(&e_pair(1, 2, 3).unwrap()).unwrap(), e_pair(2, 3, 3).unwrap());
        let x = &gen(Letter::T(1), 3).unwrap() * &e_pair(1, 3, 3).unwrap();
        assert_eq!(flip(&flip(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn moebius_small_cases() {
        assert_eq!(moebius_coefficient(&SetPartition::top(3)).unwrap(), Rational::one());
        assert_eq!(moebius_coefficient(&SetPartition::bottom(2)).unwrap(), -Rational::one());
        assert_eq!(moebius_coefficient(&SetPartition::bottom(3)).unwrap(), Rational::from_integer(2.into()));
        assert!(!moebius_coefficient(&SetPartition::bottom(1)).unwrap().is_zero());
    }

    #[test]
    fn inverse_of_t_w() {
        let w = Permutation::from_images(&[3, 1, 2]).unwrap();
        let p = &AlgebraElement::t_w(&w) * &t_w_inverse(&w).unwrap();
        assert_eq!(p, AlgebraElement::one(3));
    }
}
