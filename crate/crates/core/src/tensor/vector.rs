use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::exactmath::{Field, SparseVec};

/// Pure tensor `v_{i1}^{j1} ⊗ ... ⊗ v_{in}^{jn}`, stored as `(lower, upper)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TensorKey(pub SmallVec<[(u8, u8); 8]>);

impl TensorKey {
    pub fn new(pairs: &[(usize, usize)]) -> Self {
        TensorKey(pairs.iter().map(|&(i, j)| (i as u8, j as u8)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn lower(&self, p: usize) -> usize {
        self.0[p - 1].0 as usize
    }

    pub fn upper(&self, p: usize) -> usize {
        self.0[p - 1].1 as usize
    }

    pub fn lowers(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.0 as usize).collect()
    }

    pub fn uppers(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.1 as usize).collect()
    }

    /// Swaps the factors at positions `k`, `k+1`.
    pub fn swapped(&self, k: usize) -> Self {
        let mut t = self.clone();
        t.0.swap(k - 1, k);
        t
    }

    /// All `n^(2n)` pure tensors over indices `1..=n`.
    pub fn all(n: usize) -> Vec<TensorKey> {
        let pairs: Vec<(u8, u8)> = (1..=n as u8).flat_map(|i| (1..=n as u8).map(move |j| (i, j))).collect();
        let mut out = vec![TensorKey(SmallVec::new())];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|k| {
                    pairs.iter().map(move |&p| {
                        let mut k2 = k.clone();
                        k2.0.push(p);
                        k2
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Debug for TensorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(i, j)| format!("v{i}^{j}")).collect();
        f.write_str(&parts.join("⊗"))
    }
}

/// Sparse vector in `V^{⊗n}` with no stored zeros.
#[derive(Clone, PartialEq)]
pub struct TensorVector<F> {
    n: usize,
    terms: SparseVec<TensorKey, F>,
}

impl<F: Field> TensorVector<F> {
    pub fn zero(n: usize) -> Self {
        TensorVector { n, terms: BTreeMap::new() }
    }

    pub fn pure(key: TensorKey) -> Self {
        let n = key.n();
        let mut terms = BTreeMap::new();
        terms.insert(key, F::one());
        TensorVector { n, terms }
    }

    pub fn from_sparse(n: usize, terms: SparseVec<TensorKey, F>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        TensorVector { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &SparseVec<TensorKey, F> {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec<TensorKey, F> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &TensorKey) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, key: TensorKey, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                let s = slot.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `self += a * x`.
    pub fn axpy(&mut self, a: &F, x: &TensorVector<F>) {
        crate::exactmath::axpy(&mut self.terms, a, &x.terms);
    }

    pub fn add(&self, other: &TensorVector<F>) -> Self {
        let mut out = self.clone();
        out.axpy(&F::one(), other);
        out
    }

    pub fn sub(&self, other: &TensorVector<F>) -> Self {
        let mut out = self.clone();
        out.axpy(&-F::one(), other);
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        TensorVector { n: self.n, terms: self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c)).collect() }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> TensorVector<G> {
        TensorVector::from_sparse(self.n, self.terms.iter().map(|(k, c)| (k.clone(), f(c))).collect())
    }
}

impl<F: Field> fmt::Debug for TensorVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c:?}·{k}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Field + Serialize> Serialize for TensorVector<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a, F> {
            key: &'a TensorKey,
            coeff: &'a F,
        }
        let wire: Vec<Term<'_, F>> = self.terms.iter().map(|(key, coeff)| Term { key, coeff }).collect();
        wire.serialize(s)
    }
}
