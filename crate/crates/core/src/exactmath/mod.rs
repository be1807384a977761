//! Exact arithmetic in Q and Q(u), and sparse exact linear algebra over
//! any field the engine works in.

mod linalg;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

pub(crate) use linalg::axpy;
pub use linalg::{rank, rank_exact, span_closure, EchelonBasis, RankMode, SparseMatrix, SparseVec};
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at u = {0}")]
    Pole(String),
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

/// A field the linear algebra and the tensor action can run over.
///
/// Implemented for [`Rational`] (specializations `u = q`) and [`RatFunc`]
/// (generic `u`).
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn inv(&self) -> Result<Self, MathError>;

    fn from_rational(q: &Rational) -> Self;

    /// Value of `r` when the indeterminate is sent to `at`.
    fn eval_ratfunc(r: &RatFunc, at: &Self) -> Result<Self, MathError> {
        let den = r.den().eval_in(at);
        let den_inv = den.inv().map_err(|_| MathError::Pole(format!("{at:?}")))?;
        Ok(r.num().eval_in(at) * &den_inv)
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self, MathError> {
        if self.is_zero() {
            Err(MathError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Result<Self, MathError> {
        self.recip()
    }

    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }

    fn eval_ratfunc(r: &RatFunc, at: &Self) -> Result<Self, MathError> {
        if *at == RatFunc::u() {
            return Ok(r.clone());
        }
        let den = r.den().eval_in(at);
        Ok(r.num().eval_in(at) * &den.inv()?)
    }
}

/// Formats as `"p/q"`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, MathError> {
    let bad = || MathError::BadRational(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(MathError::DivisionByZero);
    }
    Ok(Rational::new(p, q))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A nonzero rational with numerator and denominator drawn from a wide range,
/// used for random specializations of `u`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-1_000_000..=1_000_000);
        let q: i64 = rng.gen_range(1..=1_000_000);
        if p != 0 && p != q {
            return rat(p, q);
        }
    }
}

/// `x^k` in any field, `k` possibly negative.
pub fn field_pow<F: Field>(x: &F, k: i64) -> Result<F, MathError> {
    let base = if k < 0 { x.inv()? } else { x.clone() };
    let mut acc = F::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * &base;
    }
    Ok(acc)
}
