//! Dense univariate polynomials in `u` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{MathError, Rational};

/// Polynomial with coefficients stored in ascending degree.
///
/// Canonical: the coefficient vector is empty for zero and otherwise has a
/// nonzero last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), MathError> {
        let dd = divisor.degree().ok_or(MathError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, MathError> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(MathError::NotDivisible);
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Horner evaluation in any field containing the rationals.
    pub fn eval_in<F: super::Field>(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + &F::from_rational(c);
        }
        acc
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.eval_in(at)
    }

    /// Writes the polynomial in descending degree without spaces, e.g. `u^2-1/2*u+3`.
    pub fn to_expr_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let var = match deg {
                0 => String::new(),
                1 => "u".to_string(),
                d => format!("u^{d}"),
            };
            if var.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{abs}*{var}"));
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_expr_string())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, Rational::zero());
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (u^2 - 1) = (u - 1)(u + 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = Poly::gcd(&p(&[-2, 0, 2]), &p(&[3, 3]));
        assert_eq!(g, p(&[1, 1]));
        assert!(p(&[1]).div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn expression_string() {
        assert_eq!(p(&[-1, 1]).to_expr_string(), "u-1");
        assert_eq!(p(&[1, -1]).to_expr_string(), "-u+1");
        assert_eq!(p(&[0, 0, 3]).to_expr_string(), "3*u^2");
        let half = Poly::constant(Rational::new(1.into(), 2.into()));
        assert_eq!(half.to_expr_string(), "1/2");
    }

    #[test]
    fn horner() {
        assert_eq!(p(&[1, 2, 3]).eval(&Rational::from_integer(2.into())), Rational::from_integer(17.into()));
    }
}
