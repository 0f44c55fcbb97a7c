//! Element expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' int)?
//! atom   := int | var | e1 | e2 | k1 | k2 | X1..X6 | '(' expr ')'
//! ```
//!
//! `var` is one of the coefficient variables `r, s, l1, l2, g1, g2`. Division
//! and negative powers need an invertible divisor: a nonzero scalar whose
//! denominator factors are allowed, or a unit times a group-like.

use crate::coefficients::{Lexer, Scalar, Token, Var};
use crate::error::{Error, Result};
use crate::pbw::{multiply, AlgebraElement, Monomial};

/// Parses and normalizes to PBW form.
pub fn parse_element(src: &str) -> Result<AlgebraElement> {
    let mut lx = Lexer::new(src)?;
    let x = expr(&mut lx)?;
    if lx.peek() != &Token::End {
        return lx.error("trailing input");
    }
    Ok(x)
}

fn expr(lx: &mut Lexer) -> Result<AlgebraElement> {
    let mut neg = match lx.peek() {
        Token::Minus => {
            lx.next();
            true
        }
        Token::Plus => {
            lx.next();
            false
        }
        _ => false,
    };
    let mut acc = AlgebraElement::zero();
    loop {
        let t = term(lx)?;
        acc = if neg { &acc - &t } else { &acc + &t };
        neg = match lx.peek() {
            Token::Plus => false,
            Token::Minus => true,
            _ => return Ok(acc),
        };
        lx.next();
    }
}

fn term(lx: &mut Lexer) -> Result<AlgebraElement> {
    let mut acc = factor(lx)?;
    loop {
        match lx.peek() {
            Token::Star => {
                lx.next();
                acc = multiply(&acc, &factor(lx)?);
            }
            Token::Slash => {
                lx.next();
                let pos = lx.pos();
                let d = factor(lx)?;
                acc = multiply(&acc, &inverse(&d, pos)?);
            }
            _ => return Ok(acc),
        }
    }
}

/// `c * k1^m k2^n` with `c` an invertible scalar.
fn inverse(x: &AlgebraElement, pos: usize) -> Result<AlgebraElement> {
    let not_invertible = || Error::Parse {
        pos,
        msg: format!("{x} is not invertible"),
    };
    let mut terms = x.terms();
    let (m, c) = terms.next().ok_or_else(not_invertible)?;
    if terms.next().is_some() || !m.is_group_like() {
        return Err(not_invertible());
    }
    let inv = c.inverse().ok_or_else(not_invertible)?;
    Ok(AlgebraElement::monomial(
        Monomial::group_like(-m.k[0], -m.k[1]),
        inv,
    ))
}

enum Atom {
    Element(AlgebraElement),
    /// `e1`, `e2`, `X1..X6`: no negative powers.
    Root(usize, &'static str),
}

fn generator(name: &str) -> Option<Atom> {
    let root = |i| Some(Atom::Root(i, if i == 6 { "e1" } else { "e2" }));
    match name {
        "e1" => root(6),
        "e2" => root(1),
        "k1" => Some(Atom::Element(AlgebraElement::group_like(1, 0))),
        "k2" => Some(Atom::Element(AlgebraElement::group_like(0, 1))),
        _ => {
            let i: usize = name.strip_prefix('X')?.parse().ok()?;
            (1..=6).contains(&i).then_some(Atom::Root(i, ""))
        }
    }
}

fn factor(lx: &mut Lexer) -> Result<AlgebraElement> {
    let pos = lx.pos();
    let atom = match lx.next() {
        Token::Int(n) => Atom::Element(AlgebraElement::scalar(Scalar::from(
            crate::LaurentPoly::constant(n),
        ))),
        Token::Ident(name) => match (generator(&name), Var::from_name(&name)) {
            (Some(a), _) => a,
            (None, Some(v)) => Atom::Element(AlgebraElement::scalar(crate::LaurentPoly::var(v))),
            (None, None) => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown symbol {name:?}"),
                })
            }
        },
        Token::LParen => {
            let inner = expr(lx)?;
            lx.expect(Token::RParen)?;
            Atom::Element(inner)
        }
        other => {
            return Err(Error::Parse {
                pos,
                msg: format!("unexpected {other:?}"),
            })
        }
    };
    let power = lx.exponent()?;
    match (atom, power) {
        (Atom::Root(i, name), Some(k)) if k < 0 => Err(Error::NegativePower(if name.is_empty() {
            format!("X{i}")
        } else {
            name.to_string()
        })),
        (Atom::Root(i, _), k) => {
            let mut m = Monomial::root(i);
            m.x[i - 1] = k.unwrap_or(1) as u32;
            Ok(AlgebraElement::monomial(m, Scalar::one()))
        }
        (Atom::Element(x), None) => Ok(x),
        (Atom::Element(x), Some(k)) => {
            let base = if k < 0 { inverse(&x, pos)? } else { x };
            let mut out = AlgebraElement::one();
            for _ in 0..k.unsigned_abs() {
                out = multiply(&out, &base);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> AlgebraElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn grammar() {
        assert_eq!(p("e1*e2 - s^3*e2*e1"), AlgebraElement::root(2));
        assert_eq!(p("k1*k1^-1"), AlgebraElement::one());
        assert_eq!(p("(k1*k2)^-2"), AlgebraElement::group_like(-2, -2));
        assert_eq!(p("e2^0"), AlgebraElement::one());
        assert_eq!(p("-(e1 + e2) + e1"), -&AlgebraElement::e2());
        assert_eq!(p("X6"), AlgebraElement::e1());
        assert_eq!(p("e1/(r*k1)"), p("r^-1*e1*k1^-1"));
        assert!(matches!(
            parse_element("e1^-1"),
            Err(Error::NegativePower(_))
        ));
        assert!(parse_element("e1/e2").is_err());
        assert!(parse_element("e1 +").is_err());
        assert!(parse_element("e3").is_err());
        assert!(parse_element("X7").is_err());
        assert!(matches!(
            parse_element("e1 $ e2"),
            Err(Error::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn printed_elements_round_trip() {
        for s in [
            "X5*X2",
            "X3*X1*k2^-1",
            "(e1 + k1)^3",
            "X2*X4/(r + s)",
            "e2*e1*e1*e2 - 3*l1*g2",
        ] {
            let x = p(s);
            assert_eq!(p(&x.to_string()), x, "{s} -> {x}");
        }
    }
}
