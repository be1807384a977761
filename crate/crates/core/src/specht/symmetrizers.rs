use num_traits::{One, Zero};
use rand::Rng;

use super::SpechtError;
use crate::algebra::{AlgebraElement, BasisKey};
use crate::combinatorics::{IntPartition, Permutation, SetPartition, TableauData};
use crate::exactmath::{RatFunc, Rational};

/// Classical Young symmetrizers of `λ`, kept as `T`-span elements of
/// `E_m(u)` and multiplied in the group-algebra quotient.
#[derive(Clone, Debug)]
pub struct YoungSymmetrizer {
    pub shape: IntPartition,
    pub r: AlgebraElement,
    pub c: AlgebraElement,
    pub s: AlgebraElement,
    /// `s · s = scalar · s`.
    pub scalar: Rational,
}

/// Gyoja's Hecke analogue `e_λ = c_λ(u) r_λ(u)`, multiplied in the Hecke quotient.
#[derive(Clone, Debug)]
pub struct GyojaElement {
    pub shape: IntPartition,
    pub c: AlgebraElement,
    pub r: AlgebraElement,
    pub e: AlgebraElement,
    /// `e · e = scalar · e`.
    pub scalar: RatFunc,
}

fn signed_sum(n: usize, perms: &[Permutation], mut coeff: impl FnMut(&Permutation) -> RatFunc) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for w in perms {
        out.add_term(BasisKey { a: SetPartition::bottom(n), w: w.clone() }, &coeff(w));
    }
    out
}

/// `ι(X) = Σ_{w∈X} T_w`.
pub fn iota(n: usize, perms: &[Permutation]) -> AlgebraElement {
    signed_sum(n, perms, |_| RatFunc::one())
}

/// `ε(X) = Σ_{w∈X} (-u)^{-l(w)} T_w`.
pub fn epsilon_sum(n: usize, perms: &[Permutation]) -> AlgebraElement {
    signed_sum(n, perms, |w| {
        let l = w.length() as i64;
        let sign = if l % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
        sign * &RatFunc::u_pow(-l)
    })
}

/// `C` with `x = C · y`, if it exists (`y ≠ 0`).
pub fn proportionality(x: &AlgebraElement, y: &AlgebraElement) -> Option<RatFunc> {
    let (k, c) = y.terms().iter().next()?;
    let ratio = x.coeff(k).checked_div(c).ok()?;
    (y.scale(&ratio) == *x).then_some(ratio)
}

pub fn symmetrizers(shape: &IntPartition) -> Result<YoungSymmetrizer, SpechtError> {
    let n = shape.size();
    let t = TableauData::new(shape);
    let r = iota(n, &t.row_stabilizer);
    let c = signed_sum(n, &t.col_stabilizer, |w| RatFunc::from_int(w.sign()));
    let s = c.group_mul(&r)?;
    let sq = s.group_mul(&s)?;
    let scalar = proportionality(&sq, &s)
        .and_then(|k| k.as_constant())
        .filter(|k| !k.is_zero())
        .ok_or_else(|| SpechtError::Invariant(format!("s_{shape} is not preidempotent")))?;
    Ok(YoungSymmetrizer { shape: shape.clone(), r, c, s, scalar })
}

pub fn gyoja_element(shape: &IntPartition) -> Result<GyojaElement, SpechtError> {
    let n = shape.size();
    let t = TableauData::new(shape);
    let conj = TableauData::new(&shape.conjugate());
    let y = epsilon_sum(n, &conj.row_stabilizer);
    let c = AlgebraElement::t_w(&t.w_lambda.inverse())
        .hecke_mul(&y)?
        .hecke_mul(&AlgebraElement::t_w(&t.w_lambda))?;
    let r = iota(n, &t.row_stabilizer);
    let e = c.hecke_mul(&r)?;
    let sq = e.hecke_mul(&e)?;
    let scalar = proportionality(&sq, &e)
        .filter(|k| !k.is_zero())
        .ok_or_else(|| SpechtError::Invariant(format!("e_{shape} is not preidempotent")))?;
    Ok(GyojaElement { shape: shape.clone(), c, r, e, scalar })
}

/// Random `T`-span element with small integer coefficients.
pub fn random_t_span<R: Rng + ?Sized>(n: usize, rng: &mut R) -> AlgebraElement {
    let perms = Permutation::all(n);
    signed_sum(n, &perms, |_| RatFunc::from_int(rng.gen_range(-3..=3)))
}

/// `c z r = C_z · c r` in the Hecke quotient (`hecke`) or the group algebra.
pub fn schur_proportional(
    c: &AlgebraElement,
    z: &AlgebraElement,
    r: &AlgebraElement,
    hecke: bool,
) -> Result<bool, SpechtError> {
    let mul = |a: &AlgebraElement, b: &AlgebraElement| if hecke { a.hecke_mul(b) } else { a.group_mul(b) };
    let czr = mul(&mul(c, z)?, r)?;
    let cr = mul(c, r)?;
    Ok(czr.is_zero() || proportionality(&czr, &cr).is_some())
}
