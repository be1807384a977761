use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::combinatorics::{Permutation, SetPartition};
use crate::exactmath::{RatFunc, Rational};

/// The basis element `E_A T_w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisKey {
    #[serde(rename = "partition")]
    pub a: SetPartition,
    #[serde(rename = "perm")]
    pub w: Permutation,
}

impl BasisKey {
    pub fn new(a: SetPartition, w: Permutation) -> Result<Self, AlgebraError> {
        if a.n() != w.n() {
            return Err(AlgebraError::SizeMismatch(a.n(), w.n()));
        }
        Ok(BasisKey { a, w })
    }

    pub fn identity(n: usize) -> Self {
        BasisKey { a: SetPartition::bottom(n), w: Permutation::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// All `n! B_n` keys, sorted.
    pub fn all(n: usize) -> Vec<BasisKey> {
        let perms = Permutation::all(n);
        let mut out: Vec<BasisKey> = SetPartition::enumerate(n)
            .into_iter()
            .flat_map(|a| perms.iter().map(move |w| BasisKey { a: a.clone(), w: w.clone() }))
            .collect();
        out.sort();
        out
    }

    /// `(E_A T_w)* = T_{w^-1} E_A = E_{w^-1 A} T_{w^-1}`.
    pub fn star(&self) -> BasisKey {
        let winv = self.w.inverse();
        BasisKey { a: self.a.apply_unchecked(&winv), w: winv }
    }
}

impl fmt::Debug for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.w)
    }
}

/// One term `coeff * E_D T_x` of the expansion of `T_w T_v`.
type TTerm = (SetPartition, Permutation, RatFunc);

static TT_CACHE: LazyLock<RwLock<HashMap<(Permutation, Permutation), Arc<Vec<TTerm>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Expansion of `T_w T_v` in the basis, computed by right-multiplying the
/// letters of a reduced word of `v` one at a time.
///
/// For a current term `E_C T_x` and letter `s_i`:
/// if `x(i) < x(i+1)` the product is `E_C T_{x s_i}`; otherwise
/// `T_x = T_{x s_i} T_i`, the quadratic relation gives
/// `T_{x s_i} (1 + (u-1) E_i + (u-1) E_i T_i)`, and moving `E_i` left past
/// `T_{x s_i}` turns it into `E_P` with `P = {x(i), x(i+1)}`:
/// `E_C T_{x s_i} + (u-1) E_{C ∨ P} T_{x s_i} + (u-1) E_{C ∨ P} T_x`.
/// Getting the pair `P` right is the delicate step; the relation verifier
/// exercises it on every instance.
fn t_product(w: &Permutation, v: &Permutation) -> Arc<Vec<TTerm>> {
    let key = (w.clone(), v.clone());
    if let Some(hit) = TT_CACHE.read().expect("cache poisoned").get(&key) {
        return hit.clone();
    }
    let n = w.n();
    let um1 = RatFunc::u_minus_one();
    let mut terms: BTreeMap<(SetPartition, Permutation), RatFunc> = BTreeMap::new();
    terms.insert((SetPartition::bottom(n), w.clone()), RatFunc::one());
    for i in v.reduced_word() {
        let mut next: BTreeMap<(SetPartition, Permutation), RatFunc> = BTreeMap::new();
        let mut add = |k: (SetPartition, Permutation), c: RatFunc| {
            let slot = next.entry(k).or_insert_with(RatFunc::zero);
            *slot = &*slot + &c;
        };
        for ((c, x), coeff) in terms {
            let xs = x.times_simple(i);
            if !x.has_right_descent(i) {
                add((c, xs), coeff);
            } else {
                let joined = c.join_pair(x.apply(i), x.apply(i + 1));
                let scaled = &coeff * &um1;
                add((c, xs.clone()), coeff);
                add((joined.clone(), xs), scaled.clone());
                add((joined, x), scaled);
            }
        }
        next.retain(|_, c| !c.is_zero());
        terms = next;
    }
    let out: Arc<Vec<TTerm>> = Arc::new(terms.into_iter().map(|((d, x), c)| (d, x, c)).collect());
    TT_CACHE.write().expect("cache poisoned").insert(key, out.clone());
    out
}

/// Product of two basis elements:
/// `(E_A T_w)(E_B T_v) = E_{A ∨ wB} T_w T_v`.
pub fn basis_mul(x: &BasisKey, y: &BasisKey) -> Vec<(BasisKey, RatFunc)> {
    let c = x
        .a
        .join(&y.a.apply_unchecked(&x.w))
        .expect("keys share n");
    t_product(&x.w, &y.w)
        .iter()
        .map(|(d, p, coeff)| {
            let a = if d.is_bottom() { c.clone() } else { c.join(d).expect("same n") };
            (BasisKey { a, w: p.clone() }, coeff.clone())
        })
        .collect()
}

/// Element of `E_n(u)` in normal form: a sparse combination of `E_A T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<BasisKey, RatFunc>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(BasisKey::identity(n))
    }

    pub fn scalar(n: usize, c: RatFunc) -> Self {
        Self::term(BasisKey::identity(n), c)
    }

    pub fn basis(key: BasisKey) -> Self {
        Self::term(key, RatFunc::one())
    }

    pub fn term(key: BasisKey, c: RatFunc) -> Self {
        let mut x = Self::zero(key.n());
        x.add_term(key, &c);
        x
    }

    /// `T_w` for a permutation `w`.
    pub fn t_w(w: &Permutation) -> Self {
        Self::basis(BasisKey { a: SetPartition::bottom(w.n()), w: w.clone() })
    }

    /// `E_A`.
    pub fn e_a(a: &SetPartition) -> Self {
        Self::basis(BasisKey { a: a.clone(), w: Permutation::identity(a.n()) })
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (BasisKey, RatFunc)>,
    ) -> Result<Self, AlgebraError> {
        let mut x = Self::zero(n);
        for (k, c) in terms {
            if k.n() != n {
                return Err(AlgebraError::SizeMismatch(n, k.n()));
            }
            x.add_term(k, &c);
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BasisKey, RatFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &BasisKey) -> RatFunc {
        self.terms.get(key).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The coefficient of `1` if this is a scalar multiple of the identity.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().expect("one term");
                (k.a.is_bottom() && k.w.is_identity()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, key: BasisKey, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                let s = &*slot + c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    fn check_n(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<Self, AlgebraError> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-RatFunc::one())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &AlgebraElement) -> Result<Self, AlgebraError> {
        self.check_n(other)?;
        let mut acc: HashMap<BasisKey, RatFunc> = HashMap::new();
        for (kx, cx) in &self.terms {
            for (ky, cy) in &other.terms {
                let c = cx * cy;
                for (k, s) in basis_mul(kx, ky) {
                    let t = &c * &s;
                    let slot = acc.entry(k).or_insert_with(RatFunc::zero);
                    *slot = &*slot + &t;
                }
            }
        }
        Ok(AlgebraElement {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Product of a sequence; the empty product is `1`.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a AlgebraElement>) -> Result<Self, AlgebraError> {
        let mut acc = Self::one(n);
        for f in factors {
            acc = acc.try_mul(f)?;
        }
        Ok(acc)
    }

    /// The anti-automorphism fixing every `T_i` and `E_i`.
    pub fn star(&self) -> Self {
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.star(), c.clone())).collect(),
        }
    }

    /// Coefficient of `E_⊤` (the key `(⊤, e)`).
    pub fn epsilon(&self) -> RatFunc {
        self.coeff(&BasisKey { a: SetPartition::top(self.n), w: Permutation::identity(self.n) })
    }

    /// `<x, y> = ε(x* y)`.
    pub fn form(&self, other: &AlgebraElement) -> Result<RatFunc, AlgebraError> {
        Ok(self.star().try_mul(other)?.epsilon())
    }

    /// Evaluates every coefficient at `u = q`.
    pub fn specialize(&self, q: &Rational) -> Result<SpecializedElement, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.eval(q)?;
            if !v.is_zero() {
                terms.insert(k.clone(), v);
            }
        }
        Ok(SpecializedElement { n: self.n, terms })
    }

    /// Image in `E_n(u)/J` (every `E_A` sent to 1), kept as a combination of
    /// `T_w` keys with trivial partition.
    pub fn hecke_projection(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(BasisKey { a: SetPartition::bottom(self.n), w: k.w.clone() }, c);
        }
        out
    }

    /// Image in `E_n(u)/I` (every `E_A` with `A ≠ ⊥` sent to 0).
    pub fn group_projection(&self) -> Self {
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.a.is_bottom())
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product in the Hecke quotient `E_n(u)/J`.
    pub fn hecke_mul(&self, other: &AlgebraElement) -> Result<Self, AlgebraError> {
        Ok(self.try_mul(other)?.hecke_projection())
    }

    /// Product in the group-algebra quotient `E_n(u)/I`.
    pub fn group_mul(&self, other: &AlgebraElement) -> Result<Self, AlgebraError> {
        Ok(self.try_mul(other)?.group_projection())
    }

    /// Text accepted by the expression parser.
    pub fn to_expr_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let key = key_expr(k);
            let coeff = coeff_expr(c);
            let (neg, coeff) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            let body = match (coeff.as_str(), key.is_empty()) {
                (c, true) => c.to_string(),
                ("1", false) => key,
                (c, false) => format!("{c}*{key}"),
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

fn coeff_expr(c: &RatFunc) -> String {
    let s = c.to_expr_string();
    if let Some(q) = c.as_constant() {
        if q.is_integer() {
            return s;
        }
        // a bare "p/q" would bind to the key through "/" first
        return if s.starts_with('-') { format!("-({})", &s[1..]) } else { format!("({s})") };
    }
    let num = c.num();
    if c.is_polynomial() && num.term_count() == 1 {
        // single monomial such as 3*u^2 or -u
        return s;
    }
    format!("({s})")
}

/// `E{..}` for each non-singleton block followed by the reduced word of `w`.
pub fn key_expr(k: &BasisKey) -> String {
    let mut parts: Vec<String> = k
        .a
        .blocks()
        .iter()
        .filter(|b| b.len() > 1)
        .map(|b| format!("E{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    parts.extend(k.w.reduced_word().iter().map(|i| format!("T{i}")));
    parts.join("*")
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement(n={}, {})", self.n, self.to_expr_string())
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    partition: SetPartition,
    perm: Permutation,
    coeff: RatFunc,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<TermWire> = self
            .terms
            .iter()
            .map(|(k, c)| TermWire { partition: k.a.clone(), perm: k.w.clone(), coeff: c.clone() })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Vec::<TermWire>::deserialize(d)?;
        let n = wire
            .first()
            .map(|t| t.perm.n())
            .ok_or_else(|| serde::de::Error::custom("empty element has no size; use a nonempty term list"))?;
        AlgebraElement::from_terms(n, wire.into_iter().map(|t| (BasisKey { a: t.partition, w: t.perm }, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

macro_rules! checked_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;
            /// Panics on a size mismatch.
            fn $m(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$f(rhs).expect("operands of different size")
            }
        }
    };
}
checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

/// An element with coefficients evaluated at a rational `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedElement {
    pub n: usize,
    pub terms: BTreeMap<BasisKey, Rational>,
}

impl SpecializedElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
