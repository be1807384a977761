use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CombinatoricsError, Permutation};

/// Disjoint-set forest over `0..n` with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Set partition of `{1..n}`.
///
/// Canonical: elements ascending within each block, blocks ordered by their
/// minimum. The derived ordering compares these block lists, so the finest
/// partition sorts before the coarsest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<u8>>,
    n: usize,
}

impl SetPartition {
    /// All singletons, the minimum of the refinement order.
    pub fn bottom(n: usize) -> Self {
        SetPartition { blocks: (1..=n as u8).map(|i| vec![i]).collect(), n }
    }

    /// One block, the maximum of the refinement order.
    pub fn top(n: usize) -> Self {
        if n == 0 {
            return SetPartition { blocks: Vec::new(), n };
        }
        SetPartition { blocks: vec![(1..=n as u8).collect()], n }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, CombinatoricsError> {
        let mut seen = vec![false; n];
        for b in blocks {
            if b.is_empty() {
                return Err(CombinatoricsError::NotASetPartition(blocks.to_vec()));
            }
            for &x in b {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(CombinatoricsError::NotASetPartition(blocks.to_vec()));
                }
                seen[x - 1] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(CombinatoricsError::NotASetPartition(blocks.to_vec()));
        }
        Ok(Self::canonical(n, blocks.iter().map(|b| b.iter().map(|&x| x as u8).collect()).collect()))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<u8>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { blocks, n }
    }

    fn from_union_find(n: usize, uf: &mut UnionFind) -> Self {
        let mut by_root: HashMap<usize, Vec<u8>> = HashMap::new();
        for x in 0..n {
            by_root.entry(uf.find(x)).or_default().push(x as u8 + 1);
        }
        Self::canonical(n, by_root.into_values().collect())
    }

    /// The partition `<R>` generated by connecting `i` and `j` for each pair.
    pub fn closure(n: usize, pairs: &[(usize, usize)]) -> Result<Self, CombinatoricsError> {
        let mut uf = UnionFind::new(n);
        for &(i, j) in pairs {
            for x in [i, j] {
                if x == 0 || x > n {
                    return Err(CombinatoricsError::IndexOutOfRange { index: x, n });
                }
            }
            uf.union(i - 1, j - 1);
        }
        Ok(Self::from_union_find(n, &mut uf))
    }

    /// The partition whose only non-singleton block is `{i, j}`.
    pub fn pair(n: usize, i: usize, j: usize) -> Result<Self, CombinatoricsError> {
        Self::closure(n, &[(i, j)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks as 1-based element lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_bottom(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_top(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// Block label of each element, `labels[i-1]` for element `i`.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x as usize - 1] = k;
            }
        }
        out
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        let labels = self.labels();
        labels[i - 1] == labels[j - 1]
    }

    /// Least upper bound in the refinement lattice.
    pub fn join(&self, other: &SetPartition) -> Result<Self, CombinatoricsError> {
        if self.n != other.n {
            return Err(CombinatoricsError::SizeMismatch(self.n, other.n));
        }
        let mut uf = UnionFind::new(self.n);
        for b in self.blocks.iter().chain(&other.blocks) {
            for w in b.windows(2) {
                uf.union(w[0] as usize - 1, w[1] as usize - 1);
            }
        }
        Ok(Self::from_union_find(self.n, &mut uf))
    }

    /// Join with the pair `{i, j}`, cheaper than building the pair partition.
    pub fn join_pair(&self, i: usize, j: usize) -> Self {
        let labels = self.labels();
        let (a, b) = (labels[i - 1], labels[j - 1]);
        if a == b {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        let (lo, hi) = (a.min(b), a.max(b));
        let moved = blocks.remove(hi);
        blocks[lo].extend(moved);
        Self::canonical(self.n, blocks)
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool, CombinatoricsError> {
        if self.n != other.n {
            return Err(CombinatoricsError::SizeMismatch(self.n, other.n));
        }
        let labels = other.labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| labels[x as usize - 1] == labels[b[0] as usize - 1])))
    }

    /// `wA = {w(I_1), ..., w(I_k)}`.
    pub fn apply(&self, w: &Permutation) -> Result<Self, CombinatoricsError> {
        if w.n() != self.n {
            return Err(CombinatoricsError::SizeMismatch(w.n(), self.n));
        }
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Permutation) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| w.apply(x as usize) as u8).collect())
            .collect();
        Self::canonical(self.n, blocks)
    }

    /// Embeds into a ground set of size `total`, shifting elements by `offset`;
    /// elements outside the image become singletons.
    pub fn shifted(&self, offset: usize, total: usize) -> Self {
        let mut blocks: Vec<Vec<u8>> = (1..=offset).map(|i| vec![i as u8]).collect();
        blocks.extend(self.blocks.iter().map(|b| b.iter().map(|&x| x + offset as u8).collect()));
        blocks.extend((offset + self.n + 1..=total).map(|i| vec![i as u8]));
        Self::canonical(total, blocks)
    }

    /// All `B_n` set partitions in canonical order, enumerated by restricted
    /// growth strings.
    pub fn enumerate(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(pos: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            let n = rgs.len();
            if pos == n {
                let mut blocks: Vec<Vec<u8>> = vec![Vec::new(); max];
                for (i, &b) in rgs.iter().enumerate() {
                    blocks[b].push(i as u8 + 1);
                }
                out.push(SetPartition::canonical(n, blocks));
                return;
            }
            for b in 0..=max {
                rgs[pos] = b;
                rec(pos + 1, max.max(b + 1), rgs, out);
            }
        }
        if n == 0 {
            return vec![SetPartition::bottom(0)];
        }
        rec(0, 0, &mut rgs, &mut out);
        out.sort();
        out
    }

    /// Möbius function of the refinement lattice, from the defining recursion
    /// `mu(A,A) = 1`, `sum_{A <= C <= B} mu(A,C) = 0` for `A < B`.
    pub fn moebius(a: &SetPartition, b: &SetPartition) -> Result<i64, CombinatoricsError> {
        if !a.leq(b)? {
            return Err(CombinatoricsError::NotComparable);
        }
        let mut interval: Vec<SetPartition> = Self::enumerate(a.n)
            .into_iter()
            .filter(|c| a.leq(c).unwrap_or(false) && c.leq(b).unwrap_or(false))
            .collect();
        // finer partitions (more blocks) first: a linear extension of the order
        interval.sort_by_key(|c| std::cmp::Reverse(c.num_blocks()));
        let mut mu: HashMap<&SetPartition, i64> = HashMap::new();
        for (k, c) in interval.iter().enumerate() {
            let value = if c == a {
                1
            } else {
                -interval[..k]
                    .iter()
                    .filter(|d| d.leq(c).unwrap_or(false))
                    .map(|d| mu[d])
                    .sum::<i64>()
            };
            mu.insert(c, value);
        }
        Ok(mu[b])
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::from_blocks(n, &blocks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::from_blocks(n, &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(SetPartition::closure(3, &[]).unwrap(), SetPartition::bottom(3));
        assert_eq!(SetPartition::closure(3, &[(1, 2), (2, 3)]).unwrap(), SetPartition::top(3));
        assert_eq!(SetPartition::closure(4, &[(1, 3)]).unwrap(), sp(4, &[&[1, 3], &[2], &[4]]));
        assert!(SetPartition::closure(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn join_examples() {
        let a = sp(3, &[&[1, 2], &[3]]);
        let b = sp(3, &[&[1], &[2, 3]]);
        assert_eq!(a.join(&b).unwrap(), SetPartition::top(3));
        assert_eq!(a.join(&a).unwrap(), a);
        assert_eq!(SetPartition::bottom(3).join(&b).unwrap(), b);
        assert!(a.join(&SetPartition::bottom(4)).is_err());
        assert_eq!(b.join_pair(1, 3), SetPartition::top(3));
    }

    #[test]
    fn order_apply_enumerate() {
        assert_eq!(SetPartition::enumerate(3).len(), 5);
        let bells = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bells.iter().enumerate() {
            assert_eq!(SetPartition::enumerate(n).len(), b);
        }
        let s1 = Permutation::simple(1, 3).unwrap();
        assert_eq!(sp(3, &[&[1, 3], &[2]]).apply(&s1).unwrap(), sp(3, &[&[2, 3], &[1]]));
        for a in SetPartition::enumerate(3) {
            assert!(SetPartition::bottom(3).leq(&a).unwrap());
            assert!(a.leq(&SetPartition::top(3)).unwrap());
        }
    }

    #[test]
    fn validation() {
        assert!(SetPartition::from_blocks(3, &[vec![1, 2]]).is_err());
        assert!(SetPartition::from_blocks(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![1], vec![]]).is_err());
    }

    #[test]
    fn moebius_examples() {
        let top = SetPartition::top(3);
        assert_eq!(SetPartition::moebius(&top, &top).unwrap(), 1);
        assert_eq!(SetPartition::moebius(&sp(3, &[&[1, 2], &[3]]), &top).unwrap(), -1);
        assert_eq!(SetPartition::moebius(&SetPartition::bottom(3), &top).unwrap(), 2);
        assert!(SetPartition::moebius(&top, &SetPartition::bottom(3)).is_err());
    }

    #[test]
    fn canonical_order_and_json() {
        assert!(SetPartition::bottom(2) < SetPartition::top(2));
        let v = serde_json::to_value(sp(3, &[&[3, 1], &[2]])).unwrap();
        assert_eq!(v, serde_json::json!([[1, 3], [2]]));
        assert_eq!(sp(2, &[&[1, 2]]).shifted(1, 4), sp(4, &[&[1], &[2, 3], &[4]]));
    }
}
