use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CombinatoricsError;

/// Integer partition with parts in weakly decreasing order.
///
/// `Ord` is the total order: sizes first, then partial-sum sequences
/// compared at the first index where they differ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(parts: &[usize]) -> Result<Self, CombinatoricsError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidPartition(parts.to_vec()));
        }
        Ok(IntPartition { parts: parts.to_vec() })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(parts: &[usize]) -> Self {
        let mut parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    fn partial_sums(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
    }

    /// Partial sum `lambda_1 + ... + lambda_i`, saturating at the size.
    fn partial_sum(&self, i: usize) -> usize {
        self.parts.iter().take(i).sum()
    }

    /// Dominance order `self ⊴ other`.
    pub fn dominance_leq(&self, other: &IntPartition) -> Result<bool, CombinatoricsError> {
        if self.size() != other.size() {
            return Err(CombinatoricsError::DominanceSizeMismatch(self.size(), other.size()));
        }
        let k = self.len().max(other.len());
        Ok((1..=k).all(|i| self.partial_sum(i) <= other.partial_sum(i)))
    }

    pub fn total_lt(&self, other: &IntPartition) -> bool {
        self < other
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> IntPartition {
        let first = self.parts.first().copied().unwrap_or(0);
        IntPartition {
            parts: (1..=first).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect(),
        }
    }

    /// All partitions of `n`, ascending in the total order.
    pub fn all(n: usize) -> Vec<IntPartition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if rest == 0 {
                out.push(IntPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.partial_sums().cmp(other.partial_sums()))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for IntPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        IntPartition::new(&parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(parts: &[usize]) -> IntPartition {
        IntPartition::new(parts).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(ip(&[1, 1, 1]).dominance_leq(&ip(&[2, 1])).unwrap());
        assert!(ip(&[2, 1]).dominance_leq(&ip(&[3])).unwrap());
        assert!(!ip(&[3]).dominance_leq(&ip(&[2, 1])).unwrap());
        assert!(ip(&[2]).dominance_leq(&ip(&[2, 1])).is_err());
        // incomparable pair at n = 6
        assert!(!ip(&[3, 1, 1, 1]).dominance_leq(&ip(&[2, 2, 2])).unwrap());
        assert!(!ip(&[2, 2, 2]).dominance_leq(&ip(&[3, 1, 1, 1])).unwrap());
    }

    #[test]
    fn total_order_examples() {
        assert!(ip(&[1, 1]).total_lt(&ip(&[2])));
        assert!(ip(&[2, 1]).total_lt(&ip(&[1, 1, 1, 1])));
        assert!(!ip(&[1, 1, 1, 1]).total_lt(&ip(&[2, 1])));
        assert!(ip(&[2, 2, 2]).total_lt(&ip(&[3, 1, 1, 1])));
    }

    #[test]
    fn total_order_refines_dominance() {
        for n in 1..=7 {
            let all = IntPartition::all(n);
            for a in &all {
                for b in &all {
                    if a != b && a.dominance_leq(b).unwrap() {
                        assert!(a < b, "{a} ⊴ {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn counts_and_conjugates() {
        let counts: Vec<usize> = (0..=8).map(|n| IntPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(ip(&[3, 1]).conjugate(), ip(&[2, 1, 1]));
        for lam in IntPartition::all(6) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
        assert_eq!(ip(&[2, 1]).to_string(), "(2,1)");
        assert!(IntPartition::new(&[1, 2]).is_err());
    }
}
