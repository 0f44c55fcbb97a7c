//! Tokenizer shared by the coefficient and element parsers, plus the
//! coefficient text-form parser.

use num_bigint::BigInt;

use super::{LaurentPoly, Scalar, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

pub(crate) struct Lexer {
    toks: Vec<(Token, usize)>,
    at: usize,
}

impl Lexer {
    pub(crate) fn new(src: &str) -> Result<Self> {
        let bytes = src.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            let tok = match c {
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '^' => Token::Caret,
                '/' => Token::Slash,
                '(' => Token::LParen,
                ')' => Token::RParen,
                '0'..='9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    toks.push((Token::Int(src[start..i].parse().expect("digits")), start));
                    continue;
                }
                c if c.is_ascii_alphabetic() => {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    toks.push((Token::Ident(src[start..i].to_string()), start));
                    continue;
                }
                other => {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            };
            toks.push((tok, start));
            i += 1;
        }
        toks.push((Token::End, src.len()));
        Ok(Lexer { toks, at: 0 })
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.toks[self.at].0
    }

    pub(crate) fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    pub(crate) fn next(&mut self) -> Token {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub(crate) fn expect(&mut self, want: Token) -> Result<()> {
        let pos = self.pos();
        let got = self.next();
        if got == want {
            Ok(())
        } else {
            Err(Error::Parse {
                pos,
                msg: format!("expected {want:?}, found {got:?}"),
            })
        }
    }

    pub(crate) fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    /// `^` followed by an optionally signed integer.
    pub(crate) fn exponent(&mut self) -> Result<Option<i32>> {
        if self.peek() != &Token::Caret {
            return Ok(None);
        }
        self.next();
        let neg = if self.peek() == &Token::Minus {
            self.next();
            true
        } else {
            false
        };
        let pos = self.pos();
        match self.next() {
            Token::Int(n) => {
                let n: i32 = n.try_into().map_err(|_| Error::Parse {
                    pos,
                    msg: "exponent out of range".into(),
                })?;
                Ok(Some(if neg { -n } else { n }))
            }
            other => Err(Error::Parse {
                pos,
                msg: format!("expected integer exponent, found {other:?}"),
            }),
        }
    }
}

pub(crate) fn parse_poly(src: &str) -> Result<LaurentPoly> {
    let mut lx = Lexer::new(src)?;
    let p = poly_expr(&mut lx)?;
    if lx.peek() != &Token::End {
        return lx.error("trailing input");
    }
    Ok(p)
}

fn poly_expr(lx: &mut Lexer) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    let mut sign = match lx.peek() {
        Token::Minus => {
            lx.next();
            -1
        }
        Token::Plus => {
            lx.next();
            1
        }
        _ => 1,
    };
    loop {
        let t = poly_term(lx)?;
        if sign < 0 {
            acc -= &t;
        } else {
            acc += &t;
        }
        sign = match lx.peek() {
            Token::Plus => 1,
            Token::Minus => -1,
            _ => return Ok(acc),
        };
        lx.next();
    }
}

fn poly_term(lx: &mut Lexer) -> Result<LaurentPoly> {
    let mut acc = poly_factor(lx)?;
    while lx.peek() == &Token::Star {
        lx.next();
        acc = &acc * &poly_factor(lx)?;
    }
    Ok(acc)
}

fn poly_factor(lx: &mut Lexer) -> Result<LaurentPoly> {
    let pos = lx.pos();
    let base = match lx.next() {
        Token::Int(n) => LaurentPoly::constant(n),
        Token::Ident(name) => match Var::from_name(&name) {
            Some(v) => LaurentPoly::var(v),
            None => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown variable {name:?}"),
                })
            }
        },
        Token::LParen => {
            let inner = poly_expr(lx)?;
            lx.expect(Token::RParen)?;
            inner
        }
        other => {
            return Err(Error::Parse {
                pos,
                msg: format!("unexpected {other:?}"),
            })
        }
    };
    match lx.exponent()? {
        None => Ok(base),
        Some(k) => base.powi(k).ok_or_else(|| Error::Parse {
            pos,
            msg: "negative power of a non-unit".into(),
        }),
    }
}

pub(crate) fn parse_scalar(src: &str) -> Result<Scalar> {
    let mut lx = Lexer::new(src)?;
    let x = scalar_expr(&mut lx)?;
    if lx.peek() != &Token::End {
        return lx.error("trailing input");
    }
    Ok(x)
}

pub(crate) fn scalar_expr(lx: &mut Lexer) -> Result<Scalar> {
    let mut acc = Scalar::zero();
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
    loop {
        let t = scalar_term(lx)?;
        acc = if neg { &acc - &t } else { &acc + &t };
        neg = match lx.peek() {
            Token::Plus => false,
            Token::Minus => true,
            _ => return Ok(acc),
        };
        lx.next();
    }
}

fn scalar_term(lx: &mut Lexer) -> Result<Scalar> {
    let mut acc = scalar_factor(lx)?;
    loop {
        match lx.peek() {
            Token::Star => {
                lx.next();
                acc = &acc * &scalar_factor(lx)?;
            }
            Token::Slash => {
                lx.next();
                let pos = lx.pos();
                let d = scalar_factor(lx)?;
                acc = &acc * &invert(d, pos)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn invert(x: Scalar, pos: usize) -> Result<Scalar> {
    x.inverse().ok_or_else(|| Error::Parse {
        pos,
        msg: format!("cannot divide by {x}"),
    })
}

fn scalar_factor(lx: &mut Lexer) -> Result<Scalar> {
    let pos = lx.pos();
    let base = match lx.next() {
        Token::Int(n) => Scalar::from(LaurentPoly::constant(n)),
        Token::Ident(name) => match Var::from_name(&name) {
            Some(v) => Scalar::from(LaurentPoly::var(v)),
            None => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown variable {name:?}"),
                })
            }
        },
        Token::LParen => {
            let inner = scalar_expr(lx)?;
            lx.expect(Token::RParen)?;
            inner
        }
        other => {
            return Err(Error::Parse {
                pos,
                msg: format!("unexpected {other:?}"),
            })
        }
    };
    match lx.exponent()? {
        None => Ok(base),
        Some(k) if k >= 0 => Ok(base.pow(k as u32)),
        Some(k) => Ok(invert(base, pos)?.pow(k.unsigned_abs())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested() {
        let p = parse_poly("-(r + s)*(r^2 + s^2) + 2").unwrap();
        assert_eq!(p.to_string(), "-r^3 - r^2*s - r*s^2 - s^3 + 2");
        assert!(parse_poly("(r+s)^-1").is_err());
        assert_eq!(parse_poly("(r*s)^-2").unwrap(), LaurentPoly::rs(-2, -2));
        assert!(parse_poly("r +").is_err());
        assert!(parse_poly("q").is_err());
        assert!(parse_poly("1/(r+s)").is_err());
        let x = parse_scalar("r/(r^2 - s^2) - 1/(r + s)").unwrap();
        assert_eq!(x.to_string(), "s/((r - s)*(r + s))");
        assert!(parse_scalar("1/(r + 2*s)").is_err());
        assert!(parse_scalar("1/0").is_err());
    }
}
