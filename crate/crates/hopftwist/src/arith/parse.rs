//! Parser for the coefficient grammar used in all file formats: terms joined
//! by `+`/`-`, variables named `t_<label>` or parameter names, `^` for powers,
//! `*` optional, `/` and parentheses allowed.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{RatExpr, Rational, SparsePoly, VarTable};
use crate::error::HopfError;

pub fn parse_rational(s: &str) -> Result<Rational, HopfError> {
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| HopfError::Parse(format!("bad rational: {s}")))?;
    let den: BigInt = den_s
        .parse()
        .map_err(|_| HopfError::Parse(format!("bad rational: {s}")))?;
    if den.is_zero() {
        return Err(HopfError::Parse(format!("zero denominator: {s}")));
    }
    Ok(Rational::new(num, den))
}

/// Parses a rational expression in the variables of `vars`.
pub fn parse_ratexpr(s: &str, vars: &VarTable) -> Result<RatExpr, HopfError> {
    let tokens = tokenize(s)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(HopfError::Parse(format!(
            "trailing input at token {} in: {s}",
            p.pos
        )));
    }
    Ok(e)
}

/// Like [`parse_ratexpr`] but requires a polynomial result.
pub fn parse_poly(s: &str, vars: &VarTable) -> Result<SparsePoly, HopfError> {
    let e = parse_ratexpr(s, vars)?;
    e.as_poly()
        .cloned()
        .ok_or_else(|| HopfError::Parse(format!("expected polynomial, got fraction: {s}")))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, HopfError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
                out.push(Tok::Int(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(HopfError::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    vars: &'a VarTable,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<RatExpr, HopfError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatExpr, HopfError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(HopfError::Parse("division by zero".into()));
                    }
                    acc = &acc / &d;
                }
                // implicit multiplication: `3 t_x`, `a(b+c)`, `2x^2`
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatExpr, HopfError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatExpr, HopfError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let k: u32 = n
                        .try_into()
                        .map_err(|_| HopfError::Parse("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => Err(HopfError::Parse("expected integer exponent after ^".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatExpr, HopfError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RatExpr::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.lookup(&name) {
                    Some(v) => Ok(RatExpr::var(v)),
                    None => Err(HopfError::Parse(format!("unknown variable: {name}"))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(HopfError::Parse("missing closing parenthesis".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(HopfError::Parse(format!("unexpected token: {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> VarTable {
        VarTable::new(
            &["1".into(), "x".into(), "y".into(), "z".into()],
            &["a".into(), "b".into(), "c".into()],
        )
    }

    #[test]
    fn parse_and_print_round_trip() {
        let vars = table();
        for s in [
            "a t_x^2/t_1",
            "(a t_y^2 + b t_1 t_y + c t_1^2)/t_1",
            "-(t_z^2 + b t_x t_z + a c t_x^2)/t_1",
            "3/4",
            "0",
            "t_e",
        ] {
            if s == "t_e" {
                assert!(parse_ratexpr(s, &vars).is_err());
                continue;
            }
            let e = parse_ratexpr(s, &vars).unwrap();
            let printed = e.to_string_with(&vars);
            let back = parse_ratexpr(&printed, &vars).unwrap();
            assert_eq!(e, back, "round trip failed for {s} -> {printed}");
        }
    }

    #[test]
    fn minus_sign_unicode() {
        let vars = table();
        let a = parse_ratexpr("t_x \u{2212} t_y", &vars).unwrap();
        let b = parse_ratexpr("t_x - t_y", &vars).unwrap();
        assert_eq!(a, b);
    }
}
