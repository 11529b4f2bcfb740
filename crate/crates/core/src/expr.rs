//! Text syntax for operators.
//!
//! ```text
//! expression := term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := ['-'] atom ['^' nat]
//! atom       := rational | 'a' | 'b' | 't' | 'mu' | 'T' | 'x' | 'd' | '(' expression ')'
//! ```
//!
//! `T` is `x*d`, products are taken left to right without commuting `x` past `d`, and
//! `n/m` is a single rational literal.

use num_bigint::BigInt;

use crate::algebra::{ParamPoly, Rational, Symbol};
use crate::error::{Error, Result};
use crate::weyl::{to_theta_form, DeltaFormOperator, ThetaFormOperator};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push((
                    pos,
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                ));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let mut value = Rational::from_integer(num.parse::<BigInt>().unwrap());
                if i + 1 < chars.len() && chars[i].1 == '/' && chars[i + 1].1.is_ascii_digit() {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    let den: String = chars[dstart..i].iter().map(|(_, c)| c).collect();
                    let den = den.parse::<BigInt>().unwrap();
                    if den == BigInt::from(0) {
                        return Err(Error::SyntaxError {
                            pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    value /= Rational::from_integer(den);
                }
                out.push((pos, Tok::Num(value)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Ident(word)));
            }
            _ => {
                return Err(Error::SyntaxError {
                    pos,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expression(&mut self) -> Result<DeltaFormOperator> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<DeltaFormOperator> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DeltaFormOperator> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() => {
                let e = n.to_integer();
                let e = u32::try_from(e).map_err(|_| Error::NonIntegerExponent { pos })?;
                self.at += 1;
                Ok(base.pow(e))
            }
            Some(Tok::Num(_)) | Some(Tok::Minus) => Err(Error::NonIntegerExponent { pos }),
            _ => self.error("expected an exponent"),
        }
    }

    fn atom(&mut self) -> Result<DeltaFormOperator> {
        let Some(tok) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        self.at += 1;
        match tok {
            Tok::Num(n) => Ok(DeltaFormOperator::constant(ParamPoly::constant(n))),
            Tok::Ident(w) => match w.as_str() {
                "T" => Ok(DeltaFormOperator::x().mul(&DeltaFormOperator::d())),
                "x" => Ok(DeltaFormOperator::x()),
                "d" => Ok(DeltaFormOperator::d()),
                other => match Symbol::from_name(other) {
                    Some(s) => Ok(DeltaFormOperator::constant(ParamPoly::symbol(s))),
                    None => {
                        self.at -= 1;
                        self.error(format!("unknown symbol `{other}`"))
                    }
                },
            },
            Tok::LParen => {
                let inner = self.expression()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            _ => {
                self.at -= 1;
                self.error("expected a number, symbol or `(`")
            }
        }
    }
}

/// Parses to normal-ordered δ-form.
pub fn parse_delta(src: &str) -> Result<DeltaFormOperator> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let out = p.expression()?;
    if p.at != p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(out)
}

/// Parses to θ-form. Inputs with more `d` than `x` in some monomial are multiplied on
/// the left by the least power of `x` that clears them.
pub fn parse_operator(src: &str) -> Result<ThetaFormOperator> {
    Ok(to_theta_form(&parse_delta(src)?).1)
}

/// Parses a parameter polynomial (no `x`, `d`, `T`).
pub fn parse_param(src: &str) -> Result<ParamPoly> {
    let d = parse_delta(src)?;
    let mut out = ParamPoly::zero();
    for ((m, n), c) in d.terms() {
        if (*m, *n) != (0, 0) {
            return Err(Error::Input(format!(
                "`{src}` is not a parameter expression"
            )));
        }
        out = c.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{sym, ThetaPoly};

    #[test]
    fn theta_products() {
        let p = parse_operator("T*(T-1)").unwrap();
        assert_eq!(p, ThetaFormOperator::from_theta(ThetaPoly::falling(2)));
        let q = parse_operator("d*x").unwrap();
        assert_eq!(q, ThetaFormOperator::from_theta(ThetaPoly::linear(1, 1)));
        let r = parse_operator("x^2*(T+1-2*b)").unwrap();
        let expect = ThetaPoly::linear(
            ParamPoly::one(),
            &sym::c(1) - &sym::b().scale(&crate::algebra::rat(2)),
        );
        assert_eq!(r, ThetaFormOperator::new([(2, expect)]));
    }

    #[test]
    fn literals_and_params() {
        assert_eq!(
            parse_param("1/2*mu - 3").unwrap(),
            &sym::mu().scale(&crate::algebra::ratio(1, 2)) - &sym::c(3)
        );
        assert_eq!(
            parse_param("-(t+1)^2").unwrap(),
            -(&sym::t() + &sym::c(1)).pow(2)
        );
        assert!(parse_param("x").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_operator("T + ?"),
            Err(Error::SyntaxError { pos: 4, .. })
        ));
        assert!(matches!(
            parse_operator("T^1/2"),
            Err(Error::NonIntegerExponent { pos: 2 })
        ));
        assert!(matches!(
            parse_operator("(T"),
            Err(Error::SyntaxError { pos: 2, .. })
        ));
        assert!(matches!(
            parse_operator("T^-1"),
            Err(Error::NonIntegerExponent { .. })
        ));
        assert!(matches!(
            parse_operator("q"),
            Err(Error::SyntaxError { pos: 0, .. })
        ));
    }

    #[test]
    fn print_parse_roundtrip() {
        let p =
            parse_operator("-4096*T^2*(T-1)*(T+1) + x*(1/3*T + mu) + x^3*(T+1+b)*(T+2-b)").unwrap();
        assert_eq!(parse_operator(&p.to_string()).unwrap(), p);
    }
}
