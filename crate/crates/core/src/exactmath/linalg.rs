//! Sparse row reduction, rank and invariant-subspace closure.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{random_rational, Field, MathError, RatFunc, Rational};

/// Sparse vector: key to nonzero coefficient. Zero entries are never stored.
pub type SparseVec<K, F> = BTreeMap<K, F>;

/// `y += a * x`, dropping cancelled entries.
pub(crate) fn axpy<K: Ord + Clone, F: Field>(y: &mut SparseVec<K, F>, a: &F, x: &SparseVec<K, F>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let term = a.clone() * v;
        match y.get_mut(k) {
            Some(slot) => {
                let sum = slot.clone() + &term;
                if sum.is_zero() {
                    y.remove(k);
                } else {
                    *slot = sum;
                }
            }
            None => {
                if !term.is_zero() {
                    y.insert(k.clone(), term);
                }
            }
        }
    }
}

/// Reduced row-echelon basis of a subspace.
///
/// Every row has coefficient one at its pivot (its smallest key) and zero at
/// the pivots of all other rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis<K, F> {
    rows: BTreeMap<K, SparseVec<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for EchelonBasis<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> EchelonBasis<K, F> {
    pub fn new() -> Self {
        EchelonBasis { rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K, F>> {
        self.rows.values()
    }

    pub fn into_rows(self) -> Vec<SparseVec<K, F>> {
        self.rows.into_values().collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot of the basis.
    pub fn reduce(&self, mut v: SparseVec<K, F>) -> SparseVec<K, F> {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                axpy(&mut v, &(-c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Coordinates of `v` in the row basis, or `None` if `v` lies outside the span.
    pub fn coordinates(&self, v: &SparseVec<K, F>) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .keys()
                .map(|p| v.get(p).cloned().unwrap_or_else(F::zero))
                .collect(),
        )
    }

    /// Adds `v` to the span. Returns the new normalized row if the dimension grew.
    pub fn insert(&mut self, v: SparseVec<K, F>) -> Option<SparseVec<K, F>> {
        let mut v = self.reduce(v);
        let (pivot, lead) = match v.iter().next() {
            None => return None,
            Some((k, c)) => (k.clone(), c.clone()),
        };
        let inv = lead.inv().expect("stored entries are nonzero");
        for c in v.values_mut() {
            *c = c.clone() * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &(-c), &v);
            }
        }
        self.rows.insert(pivot, v.clone());
        Some(v)
    }
}

/// Smallest subspace containing `seed` and closed under `step`.
///
/// `step` must be linear; it is applied to each new basis direction once.
pub fn span_closure<K, F, S>(seed: Vec<SparseVec<K, F>>, step: S) -> EchelonBasis<K, F>
where
    K: Ord + Clone,
    F: Field,
    S: Fn(&SparseVec<K, F>) -> Vec<SparseVec<K, F>>,
{
    let mut basis = EchelonBasis::new();
    let mut queue = Vec::new();
    for v in seed {
        if let Some(row) = basis.insert(v) {
            queue.push(row);
        }
    }
    while let Some(v) = queue.pop() {
        for image in step(&v) {
            if let Some(row) = basis.insert(image) {
                queue.push(row);
            }
        }
    }
    basis
}

/// Sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), F>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix from sparse rows; the column count is the largest index seen.
    pub fn from_rows(rows: &[SparseVec<usize, F>]) -> Self {
        let cols = rows
            .iter()
            .filter_map(|r| r.keys().next_back())
            .max()
            .map_or(0, |c| c + 1);
        let mut m = Self::new(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        self.entries.get(&(i, j))
    }

    /// Sets an entry; zero removes it. Panics on an out-of-range index.
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &F)> {
        self.entries.iter()
    }

    pub fn row_vectors(&self) -> Vec<SparseVec<usize, F>> {
        let mut out = vec![SparseVec::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i].insert(j, v.clone());
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Result<G, MathError>) -> Result<SparseMatrix<G>, MathError> {
        let mut m = SparseMatrix::new(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            m.set(i, j, f(v)?);
        }
        Ok(m)
    }
}

/// Exact rank by row reduction over the entry field.
pub fn rank_exact<F: Field>(m: &SparseMatrix<F>) -> usize {
    let mut basis = EchelonBasis::new();
    for row in m.row_vectors() {
        basis.insert(row);
    }
    basis.dim()
}

/// How to compute the rank of a matrix over Q(u).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Row reduction over Q(u) itself.
    Exact,
    /// Rank at random rational points `u = q`: two points, a third on
    /// disagreement, maximum taken. Specialization never raises the rank.
    Specialized { seed: u64 },
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Specialized { seed: 0x5eed }
    }
}

pub fn rank(m: &SparseMatrix<RatFunc>, mode: RankMode) -> usize {
    match mode {
        RankMode::Exact => rank_exact(m),
        RankMode::Specialized { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut at_random_point = || loop {
                let q = random_rational(&mut rng);
                if let Ok(mq) = m.map(|e| e.eval(&q)) {
                    return rank_exact::<Rational>(&mq);
                }
            };
            let a = at_random_point();
            let b = at_random_point();
            if a == b {
                a
            } else {
                a.max(b).max(at_random_point())
            }
        }
    }
}
