//! Elements of the rational function field Q(u) in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, MathError, Poly, Rational};

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0/1`.
///
/// Canonical form makes structural equality coincide with equality of
/// rational functions, so values can key hash maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            let lc = den.coeffs()[0].clone();
            return RatFunc {
                num: num.scale(&lc.recip()),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        Self::from_poly(Poly::u())
    }

    /// `u - 1`, the coefficient appearing in the quadratic relation.
    pub fn u_minus_one() -> Self {
        Self::from_poly(Poly::from_i64(&[-1, 1]))
    }

    /// `u^-1 - 1 = (1 - u)/u`.
    pub fn u_inv_minus_one() -> Self {
        RatFunc {
            num: Poly::from_i64(&[1, -1]),
            den: Poly::u(),
        }
    }

    /// `u^k` for any integer `k`.
    pub fn u_pow(k: i64) -> Self {
        let mono = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            RatFunc { num: Poly::one(), den: mono }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn recip(&self) -> Result<Self, MathError> {
        if self.num.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, MathError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self, MathError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at `q`; errors when `q` is a pole.
    pub fn eval(&self, q: &Rational) -> Result<Rational, MathError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(MathError::Pole(format_rational(q)));
        }
        Ok(self.num.eval(q) / d)
    }

    /// Expression text accepted by the element parser, e.g. `(u-1)/u`.
    pub fn to_expr_string(&self) -> String {
        let num = self.num.to_expr_string();
        if self.den.is_one() {
            return num;
        }
        let wrap = |p: &Poly, s: String| {
            if p.term_count() > 1 || s.starts_with('-') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        let den = self.den.to_expr_string();
        format!("{}/{}", wrap(&self.num, num), wrap(&self.den, den))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_expr_string())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::normalized(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] for a `Result`.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(u)")
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncWire {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFunc", 2)?;
        let enc = |p: &Poly| p.coeffs().iter().map(format_rational).collect::<Vec<_>>();
        st.serialize_field("num", &enc(&self.num))?;
        st.serialize_field("den", &enc(&self.den))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = RatFuncWire::deserialize(d)?;
        let dec = |v: &[String]| -> Result<Poly, D::Error> {
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect::<Result<Vec<_>, _>>()
                .map(Poly::from_coeffs)
        };
        RatFunc::new(dec(&wire.num)?, dec(&wire.den)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn field_examples() {
        // (u - 1) + 1 = u
        assert_eq!(&rf(&[-1, 1], &[1]) + &RatFunc::one(), RatFunc::u());
        // u * (1/u) = 1
        assert_eq!(&RatFunc::u() * &RatFunc::u_pow(-1), RatFunc::one());
        // (u^2 - 1)/(u - 1) = u + 1
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::zero().recip(), Err(MathError::DivisionByZero));
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
        assert!(RatFunc::u().checked_div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let a = rf(&[2], &[0, 4]);
        assert_eq!(a.den(), &Poly::from_i64(&[0, 1]));
        assert_eq!(a.num().coeffs()[0], q(1, 2));
        assert_eq!(rf(&[0], &[3, 5]), RatFunc::zero());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(rf(&[-1, 1], &[1]).eval(&q(1, 1)).unwrap(), q(0, 1));
        assert_eq!(RatFunc::u_pow(-1).eval(&q(2, 1)).unwrap(), q(1, 2));
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]).eval(&q(3, 1)).unwrap(), q(4, 1));
        assert!(matches!(RatFunc::u_pow(-1).eval(&q(0, 1)), Err(MathError::Pole(_))));
    }

    #[test]
    fn inverse_of_t_coefficient() {
        assert_eq!(RatFunc::u_inv_minus_one(), &RatFunc::u_pow(-1) - &RatFunc::one());
        assert_eq!(RatFunc::u_inv_minus_one().to_expr_string(), "(-u+1)/u");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(rf(&[1, -1], &[0, 1])).unwrap();
        assert_eq!(v, serde_json::json!({"num": ["1/1", "-1/1"], "den": ["0/1", "1/1"]}));
        let back: RatFunc = serde_json::from_value(v).unwrap();
        assert_eq!(back, rf(&[1, -1], &[0, 1]));
    }
}
