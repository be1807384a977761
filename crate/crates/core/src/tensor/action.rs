use super::{TensorError, TensorKey, TensorVector};
use crate::algebra::{word_expand, AlgebraElement, Letter};
use crate::combinatorics::{Permutation, SetPartition};
use crate::exactmath::{Field, RatFunc, Rational};

/// The generator action on `V^{⊗n}` with `u` specialized in the field `F`
/// (for `F = RatFunc` and `u` the indeterminate this is the generic action).
#[derive(Clone, Debug)]
pub struct TensorAction<F> {
    n: usize,
    u: F,
    u_minus_one: F,
    u_inv_minus_one: F,
}

impl TensorAction<RatFunc> {
    pub fn generic(n: usize) -> Self {
        Self::new(n, RatFunc::u()).expect("u is invertible")
    }
}

impl TensorAction<Rational> {
    pub fn at(n: usize, q: &Rational) -> Result<Self, TensorError> {
        Self::new(n, q.clone())
    }
}

impl<F: Field> TensorAction<F> {
    pub fn new(n: usize, u: F) -> Result<Self, TensorError> {
        let u_inv_minus_one = u.inv()? - &F::one();
        Ok(TensorAction { n, u_minus_one: u.clone() - &F::one(), u, u_inv_minus_one })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self) -> &F {
        &self.u
    }

    fn check_pos(&self, k: usize) -> Result<(), TensorError> {
        if k == 0 || k >= self.n {
            return Err(TensorError::PositionOutOfRange { k, n: self.n });
        }
        Ok(())
    }

    fn check_vec(&self, v: &TensorVector<F>) -> Result<(), TensorError> {
        if v.n() != self.n {
            return Err(TensorError::SizeMismatch(self.n, v.n()));
        }
        Ok(())
    }

    /// `T` at positions `k, k+1`: a transposition when the upper indices
    /// differ, the Jimbo matrix when they agree.
    pub fn act_t(&self, k: usize, v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
        self.check_pos(k)?;
        self.check_vec(v)?;
        Ok(self.t_unchecked(k, v))
    }

    fn t_unchecked(&self, k: usize, v: &TensorVector<F>) -> TensorVector<F> {
        let mut out = TensorVector::zero(self.n);
        for (key, c) in v.terms() {
            let (i1, j1) = key.0[k - 1];
            let (i2, j2) = key.0[k];
            if j1 != j2 || i1 < i2 {
                out.add_term(key.swapped(k), c.clone());
            } else if i1 == i2 {
                out.add_term(key.clone(), c.clone() * &self.u);
            } else {
                out.add_term(key.swapped(k), c.clone() * &self.u);
                out.add_term(key.clone(), c.clone() * &self.u_minus_one);
            }
        }
        out
    }

    /// `E` at positions `k, k+1`: projection onto equal upper indices.
    pub fn act_e(&self, k: usize, v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
        self.check_pos(k)?;
        self.check_vec(v)?;
        Ok(self.e_unchecked(k, v))
    }

    fn e_unchecked(&self, k: usize, v: &TensorVector<F>) -> TensorVector<F> {
        TensorVector::from_sparse(
            self.n,
            v.terms()
                .iter()
                .filter(|(key, _)| key.0[k - 1].1 == key.0[k].1)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        )
    }

    /// `T^{-1} v = T v + (u^{-1} - 1) E (v + T v)`.
    pub fn act_tinv(&self, k: usize, v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
        self.check_pos(k)?;
        self.check_vec(v)?;
        Ok(self.tinv_unchecked(k, v))
    }

    fn tinv_unchecked(&self, k: usize, v: &TensorVector<F>) -> TensorVector<F> {
        let tv = self.t_unchecked(k, v);
        let mut out = tv.clone();
        out.axpy(&self.u_inv_minus_one, &self.e_unchecked(k, &v.add(&tv)));
        out
    }

    pub fn act_letter(&self, l: Letter, v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
        match l {
            Letter::T(k) => self.act_t(k, v),
            Letter::Tinv(k) => self.act_tinv(k, v),
            Letter::E(k) => self.act_e(k, v),
        }
    }

    /// Applies the product `l_1 l_2 ... l_m`, i.e. `l_m` first.
    pub fn act_word(&self, word: &[Letter], v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
        self.check_vec(v)?;
        for &l in word {
            self.check_pos(l.index())?;
        }
        let mut cur = v.clone();
        for &l in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = match l {
                Letter::T(k) => self.t_unchecked(k, &cur),
                Letter::Tinv(k) => self.tinv_unchecked(k, &cur),
                Letter::E(k) => self.e_unchecked(k, &cur),
            };
        }
        Ok(cur)
    }

    /// Action of an algebra element, expanding each basis element into a
    /// generator word.
    pub fn act(&self, x: &AlgebraElement, v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
        if x.n() != self.n {
            return Err(TensorError::SizeMismatch(self.n, x.n()));
        }
        self.check_vec(v)?;
        let mut out = TensorVector::zero(self.n);
        for (key, c) in x.terms() {
            let c = F::eval_ratfunc(c, &self.u)?;
            let image = self.act_word(&word_expand(key), v)?;
            out.axpy(&c, &image);
        }
        Ok(out)
    }

    /// All generator images `T_k v`, `E_k v`; the step of a span closure.
    pub fn generator_images(&self, v: &TensorVector<F>) -> Vec<TensorVector<F>> {
        (1..self.n)
            .flat_map(|k| [self.t_unchecked(k, v), self.e_unchecked(k, v)])
            .collect()
    }
}

/// `φ^σ`: applies `σ` to every upper index.
pub fn relabel_upper<F: Field>(sigma: &Permutation, v: &TensorVector<F>) -> TensorVector<F> {
    TensorVector::from_sparse(
        v.n(),
        v.terms()
            .iter()
            .map(|(k, c)| {
                let key = TensorKey(k.0.iter().map(|&(i, j)| (i, sigma.apply(j as usize) as u8)).collect());
                (key, c.clone())
            })
            .collect(),
    )
}

/// Keeps the pure tensors whose upper indices are constant on every block of `a`.
pub fn block_projection<F: Field>(a: &SetPartition, v: &TensorVector<F>) -> TensorVector<F> {
    let blocks = a.blocks();
    TensorVector::from_sparse(
        v.n(),
        v.terms()
            .iter()
            .filter(|(k, _)| blocks.iter().all(|b| b.iter().all(|&p| k.upper(p) == k.upper(b[0]))))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect(),
    )
}
