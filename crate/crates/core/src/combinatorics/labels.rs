use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CombinatoricsError, IntPartition, SetPartition};

/// One triple `(λ, m, μ)`: `m` blocks of size `|λ|`, each carrying the Hecke
/// type `λ`, permuted among themselves with symmetric-group type `μ ⊢ m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelEntry {
    pub lambda: IntPartition,
    pub m: usize,
    pub mu: IntPartition,
}

/// A label `Λ = ((λ¹,m₁,μ¹), ..., (λᵏ,mₖ,μᵏ))` with `λ¹ < ... < λᵏ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpechtLabel {
    entries: Vec<LabelEntry>,
}

impl SpechtLabel {
    pub fn new(entries: Vec<LabelEntry>) -> Result<Self, CombinatoricsError> {
        if entries.is_empty() {
            return Err(CombinatoricsError::InvalidLabel("no entries".into()));
        }
        for e in &entries {
            if e.m == 0 || e.mu.size() != e.m || e.lambda.is_empty() {
                return Err(CombinatoricsError::InvalidLabel(format!(
                    "entry {}, {}, {} violates |μ| = m ≥ 1",
                    e.lambda, e.m, e.mu
                )));
            }
        }
        if entries.windows(2).any(|w| w[0].lambda >= w[1].lambda) {
            return Err(CombinatoricsError::InvalidLabel("λ entries must be strictly increasing".into()));
        }
        Ok(SpechtLabel { entries })
    }

    /// Shorthand for tests and the CLI: `[(λ, m, μ), ...]` as part lists.
    pub fn from_parts(entries: &[(&[usize], usize, &[usize])]) -> Result<Self, CombinatoricsError> {
        let entries = entries
            .iter()
            .map(|&(l, m, mu)| {
                Ok(LabelEntry { lambda: IntPartition::new(l)?, m, mu: IntPartition::new(mu)? })
            })
            .collect::<Result<Vec<_>, CombinatoricsError>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[LabelEntry] {
        &self.entries
    }

    /// `n = Σ mₛ |λˢ|`.
    pub fn n(&self) -> usize {
        self.entries.iter().map(|e| e.m * e.lambda.size()).sum()
    }

    /// Number of blocks `l = Σ mₛ`.
    pub fn num_blocks(&self) -> usize {
        self.entries.iter().map(|e| e.m).sum()
    }

    /// The Hecke type of each block, in block order.
    pub fn block_types(&self) -> Vec<&IntPartition> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat(&e.lambda).take(e.m))
            .collect()
    }

    /// Consecutive intervals `I_1, ..., I_l` (1-based, inclusive start, length).
    pub fn block_intervals(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 1;
        for lam in self.block_types() {
            out.push((start, lam.size()));
            start += lam.size();
        }
        out
    }

    /// `A_Λ`: the set partition into the consecutive intervals.
    pub fn a_lambda(&self) -> SetPartition {
        let blocks: Vec<Vec<usize>> = self
            .block_intervals()
            .into_iter()
            .map(|(s, len)| (s..s + len).collect())
            .collect();
        SetPartition::from_blocks(self.n(), &blocks).expect("intervals partition 1..n")
    }

    /// The group-block ranges: entry `s` owns blocks `first..first+m` (0-based).
    pub fn groups(&self) -> Vec<(usize, &LabelEntry)> {
        let mut first = 0;
        self.entries
            .iter()
            .map(|e| {
                let g = (first, e);
                first += e.m;
                g
            })
            .collect()
    }
}

impl fmt::Display for SpechtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("({},{},{})", e.lambda, e.m, e.mu))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All labels for `n`.
///
/// Ordered by number of blocks, then by the entry sequence in decreasing
/// order, which lists single-block Hecke labels first and the
/// symmetric-group labels `((1), n, μ)` last.
pub fn enumerate_labels(n: usize) -> Vec<SpechtLabel> {
    let lambdas: Vec<IntPartition> = (1..=n).flat_map(IntPartition::all).collect();
    let mut out = Vec::new();

    fn rec(
        lambdas: &[IntPartition],
        from: usize,
        rest: usize,
        cur: &mut Vec<LabelEntry>,
        out: &mut Vec<SpechtLabel>,
    ) {
        if rest == 0 {
            out.push(SpechtLabel { entries: cur.clone() });
            return;
        }
        for (k, lam) in lambdas.iter().enumerate().skip(from) {
            let size = lam.size();
            for m in 1..=rest / size {
                for mu in IntPartition::all(m) {
                    cur.push(LabelEntry { lambda: lam.clone(), m, mu });
                    rec(lambdas, k + 1, rest - m * size, cur, out);
                    cur.pop();
                }
            }
        }
    }

    if n > 0 {
        rec(&lambdas, 0, n, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| {
        (a.num_blocks(), Reverse(&a.entries)).cmp(&(b.num_blocks(), Reverse(&b.entries)))
    });
    out
}

/// `|L_n|` counted without building labels: a label is a choice of
/// multiplicity `m_λ ≥ 0` for each partition `λ` with `Σ m_λ |λ| = n`,
/// together with a partition of each nonzero `m_λ`.
pub fn brute_force_label_count(n: usize) -> u64 {
    // p(k) by the coin-change recurrence
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    // each partition λ of size s is one "item" of weight s; choosing m copies
    // contributes a factor p(m)
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for s in 1..=n {
        for _ in 0..p[s] {
            let mut next = vec![0u64; n + 1];
            for (t, &w) in ways.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                next[t] += w;
                let mut m = 1;
                while t + m * s <= n {
                    next[t + m * s] += w * p[m];
                    m += 1;
                }
            }
            ways = next;
        }
    }
    ways[n]
}
