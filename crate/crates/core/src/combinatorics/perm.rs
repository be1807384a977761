use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CombinatoricsError;

/// Permutation of `{1..n}` in one-line notation.
///
/// Composition follows function composition: `(v * w)(i) = v(w(i))`, so that
/// `T_{vw} = T_v T_w` whenever lengths add.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 <= i < n`.
    pub fn simple(i: usize, n: usize) -> Result<Self, CombinatoricsError> {
        if i == 0 || i >= n {
            return Err(CombinatoricsError::IndexOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// From 1-based images `w(1), ..., w(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self, CombinatoricsError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(CombinatoricsError::NotAPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}` of simple transpositions.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self, CombinatoricsError> {
        let mut p = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(CombinatoricsError::IndexOutOfRange { index: i, n });
            }
            p.images.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, CombinatoricsError> {
        if self.n() != other.n() {
            return Err(CombinatoricsError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// True when `l(self * s_i) < l(self)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `self * s_i`: swaps the entries at positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i * self`: swaps the values `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// Lexicographically smallest reduced word `[i_1, ..., i_k]` with
    /// `self = s_{i_1} ... s_{i_k}`, found by repeatedly stripping the
    /// smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let inv = w.inverse();
            let i = (1..w.n())
                .find(|&i| inv.images[i - 1] > inv.images[i])
                .expect("non-identity permutation has a left descent");
            word.push(i);
            w = w.simple_times(i);
        }
        word
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
    }

    /// Embeds into `S_total` acting on `offset+1 ..= offset+n`, fixing the rest.
    pub fn shifted(&self, offset: usize, total: usize) -> Self {
        let mut p = Self::identity(total);
        for (i, &x) in self.images.iter().enumerate() {
            p.images[offset + i] = (offset as u8) + x;
        }
        p
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p(&[2, 3, 1]).reduced_word(), vec![1, 2]);
        let s1 = Permutation::simple(1, 3).unwrap();
        assert!(s1.compose(&s1).unwrap().is_identity());
    }

    #[test]
    fn composition_convention() {
        let s1 = Permutation::simple(1, 3).unwrap();
        let s2 = Permutation::simple(2, 3).unwrap();
        // (s1 s2)(1) = s1(s2(1)) = 2
        assert_eq!(s1.compose(&s2).unwrap(), p(&[2, 3, 1]));
        assert_eq!(Permutation::from_word(&[1, 2], 3).unwrap(), p(&[2, 3, 1]));
        assert_eq!(s1.times_simple(2), p(&[2, 3, 1]));
        assert_eq!(s2.simple_times(1), p(&[2, 3, 1]));
    }

    #[test]
    fn errors() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
        assert!(p(&[1, 2]).compose(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn reduced_words_are_reduced_and_correct() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(&word, n).unwrap(), w);
            }
        }
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn shift_embeds() {
        let s1 = Permutation::simple(1, 2).unwrap();
        assert_eq!(s1.shifted(2, 4), p(&[1, 2, 4, 3]));
    }
}
