//! Expression parser for elements written in the generators.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | factor
//! factor := atom ("^" "-"? INT)?
//! atom   := "T" INT | "E" INT | "E{" INT ("," INT)+ "}" | INT | "u" | "(" expr ")"
//! ```
//!
//! Division is only by scalars. Negative powers are allowed for scalars and
//! for single terms `c * T_w`.

use num_bigint::BigInt;

use super::{e_block, gen, t_w_inverse, AlgebraElement, AlgebraError, Letter};
use crate::exactmath::{RatFunc, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    U,
    T(usize),
    E(usize),
    EBlock(Vec<usize>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<String> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > start).then(|| src[start..*i].to_string())
    };
    let small = |s: String, pos: usize| s.parse::<usize>().map_err(|_| err(pos, "index too large"));
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((pos, Tok::Plus)),
            b'-' => out.push((pos, Tok::Minus)),
            b'*' => out.push((pos, Tok::Star)),
            b'/' => out.push((pos, Tok::Slash)),
            b'^' => out.push((pos, Tok::Caret)),
            b'(' => out.push((pos, Tok::LParen)),
            b')' => out.push((pos, Tok::RParen)),
            b'u' => out.push((pos, Tok::U)),
            b'0'..=b'9' => {
                let s = read_int(&mut i).expect("digit present");
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            b'T' => {
                i += 1;
                let s = read_int(&mut i).ok_or_else(|| err(i, "expected index after T"))?;
                out.push((pos, Tok::T(small(s, pos)?)));
                continue;
            }
            b'E' => {
                i += 1;
                if i < bytes.len() && bytes[i] == b'{' {
                    i += 1;
                    let mut elems = Vec::new();
                    loop {
                        while i < bytes.len() && bytes[i] == b' ' {
                            i += 1;
                        }
                        let s = read_int(&mut i).ok_or_else(|| err(i, "expected integer in E{...}"))?;
                        elems.push(small(s, pos)?);
                        while i < bytes.len() && bytes[i] == b' ' {
                            i += 1;
                        }
                        match bytes.get(i) {
                            Some(b',') => i += 1,
                            Some(b'}') => {
                                i += 1;
                                break;
                            }
                            _ => return Err(err(i, "expected ',' or '}'")),
                        }
                    }
                    if elems.len() < 2 {
                        return Err(err(pos, "E{...} needs at least two elements"));
                    }
                    out.push((pos, Tok::EBlock(elems)));
                } else {
                    let s = read_int(&mut i).ok_or_else(|| err(i, "expected index or '{' after E"))?;
                    out.push((pos, Tok::E(small(s, pos)?)));
                }
                continue;
            }
            _ => return Err(err(pos, format!("unexpected character {:?}", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.try_mul(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    let s = d.as_scalar().ok_or_else(|| err(pos, "division by a non-scalar"))?;
                    let inv = s.recip().map_err(|_| err(pos, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<AlgebraElement, AlgebraError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<AlgebraElement, AlgebraError> {
        let pos = self.pos();
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let k: usize = match self.bump() {
            Some(Tok::Int(k)) => k.try_into().map_err(|_| err(pos, "exponent too large"))?,
            _ => return Err(err(self.pos(), "expected integer exponent")),
        };
        let base = if negative { invert(&base).ok_or_else(|| err(pos, "element is not invertible by the parser"))?? } else { base };
        let mut acc = AlgebraElement::one(self.n);
        for _ in 0..k {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<AlgebraElement, AlgebraError> {
        let pos = self.pos();
        let n = self.n;
        let at = |e: AlgebraError| match e {
            AlgebraError::IndexOutOfRange { index, n } => {
                err(pos, format!("index {index} out of range for n = {n}"))
            }
            other => other,
        };
        match self.bump() {
            Some(Tok::Int(v)) => Ok(AlgebraElement::scalar(n, RatFunc::constant(Rational::from_integer(v)))),
            Some(Tok::U) => Ok(AlgebraElement::scalar(n, RatFunc::u())),
            Some(Tok::T(i)) => gen(Letter::T(i), n).map_err(at),
            Some(Tok::E(i)) => gen(Letter::E(i), n).map_err(at),
            Some(Tok::EBlock(b)) => {
                let mut sorted = b.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != b.len() {
                    return Err(err(pos, "repeated element in E{...}"));
                }
                e_block(&sorted, n).map_err(at)
            }
            Some(Tok::LParen) => {
                let x = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(x),
                    _ => Err(err(self.pos().min(self.end), "expected ')'")),
                }
            }
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

/// Inverse of a scalar or of a single term `c * T_w`.
fn invert(x: &AlgebraElement) -> Option<Result<AlgebraElement, AlgebraError>> {
    if let Some(s) = x.as_scalar() {
        return Some(s.recip().map(|r| AlgebraElement::scalar(x.n(), r)).map_err(AlgebraError::from));
    }
    if x.len() != 1 {
        return None;
    }
    let (k, c) = x.terms().iter().next()?;
    if !k.a.is_bottom() {
        return None;
    }
    Some((|| Ok(t_w_inverse(&k.w)?.scale(&c.recip()?)))())
}

/// Parses and evaluates an expression in `E_n(u)`.
pub fn parse_word(src: &str, n: usize) -> Result<AlgebraElement, AlgebraError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end: src.len(), n };
    let x = p.expr()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{e_pair, BasisKey};
    use crate::combinatorics::{Permutation, SetPartition};

    #[test]
    fn parse_examples() {
        let sq = parse_word("T1*T1", 2).unwrap();
        assert_eq!(sq.to_expr_string(), "1 + (u-1)*E{1,2} + (u-1)*E{1,2}*T1");
        assert_eq!(parse_word("E{1,3}", 3).unwrap(), e_pair(1, 3, 3).unwrap());
        let x = parse_word("(u-1)*E1 + T1^-1", 2).unwrap();
        let expect = &gen(Letter::E(1), 2).unwrap().scale(&RatFunc::u_minus_one()) + &gen(Letter::Tinv(1), 2).unwrap();
        assert_eq!(x, expect);
    }

    #[test]
    fn scalars_and_powers() {
        let x = parse_word("1/2*u^2 - 3", 2).unwrap();
        let s = x.as_scalar().unwrap();
        assert_eq!(s.eval(&Rational::from_integer(2.into())).unwrap(), Rational::from_integer((-1).into()));
        assert_eq!(parse_word("u^-1*u", 2).unwrap(), AlgebraElement::one(2));
        assert_eq!(parse_word("(T1*T2)^-1*T1*T2", 3).unwrap(), AlgebraElement::one(3));
        assert_eq!(parse_word("-T1 + T1", 2).unwrap(), AlgebraElement::zero(2));
        let top = parse_word("E{1,2,3}", 3).unwrap();
        assert_eq!(top, AlgebraElement::e_a(&SetPartition::top(3)));
        let tw = parse_word("T2*T1", 3).unwrap();
        assert_eq!(tw, AlgebraElement::basis(BasisKey::new(SetPartition::bottom(3), Permutation::from_images(&[3, 1, 2]).unwrap()).unwrap()));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_word("T1 * T3", 3) {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_word("T1 +", 2), Err(AlgebraError::Parse { pos: 4, .. })));
        assert!(matches!(parse_word("T1 $", 2), Err(AlgebraError::Parse { pos: 3, .. })));
        assert!(parse_word("T1 / E1", 2).is_err());
        assert!(parse_word("E1^-1", 2).is_err());
        assert!(parse_word("(T1", 2).is_err());
        assert!(parse_word("1/0", 2).is_err());
        assert!(parse_word("", 2).is_err());
    }

    #[test]
    fn printer_round_trip() {
        for src in ["T1*T1", "T1^-1", "E{1,3}*T2*T1 - 1/3*u^2*T1", "(u+1)/(u-2)*E2 + 7"] {
            let x = parse_word(src, 3).unwrap();
            assert_eq!(parse_word(&x.to_expr_string(), 3).unwrap(), x, "{src} -> {x}");
        }
    }
}
