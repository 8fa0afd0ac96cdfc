//! Text grammar for ladder-operator expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'i' | 'sqrt2' | symbol | '(' expr ')'
//! symbol := ('a' | 'ad' | 'a†' | 'x' | 'p') '_'? integer
//! ```
//!
//! Division is only allowed by a nonzero constant. `x_k` and `p_k` expand to
//! `(a_k + a†_k)/sqrt2` and `i(a†_k - a_k)/sqrt2`. Positions in errors are
//! character offsets into the input.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{OpAlgError, OperatorExpr};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Imag,
    Sqrt2,
    Ann(usize),
    Cre(usize),
    Pos(usize),
    Mom(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(pos: usize, msg: impl Into<String>) -> OpAlgError {
    OpAlgError::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str, modes: usize) -> Result<Vec<(usize, Tok)>, OpAlgError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n: BigInt = digits.parse().map_err(|_| syntax(start, "bad integer"))?;
            out.push((start, Tok::Int(n)));
            continue;
        }
        if c.is_alphabetic() || c == '†' {
            while i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '†') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            if i < chars.len() && chars[i] == '_' {
                i += 1;
            }
            let dstart = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[dstart..i].iter().collect();
            let tok = match (name.as_str(), digits.as_str()) {
                ("i", "") => Tok::Imag,
                ("sqrt", "2") => Tok::Sqrt2,
                (_, "") => return Err(syntax(start, format!("unknown identifier '{name}'"))),
                (kind, idx) => {
                    let mode: usize = idx.parse().map_err(|_| syntax(dstart, "bad mode index"))?;
                    if mode == 0 || mode > modes {
                        return Err(OpAlgError::ModeOutOfRange { mode, modes, pos: start });
                    }
                    match kind {
                        "a" => Tok::Ann(mode),
                        "ad" | "a†" => Tok::Cre(mode),
                        "x" => Tok::Pos(mode),
                        "p" => Tok::Mom(mode),
                        _ => return Err(syntax(start, format!("unknown symbol '{name}{idx}'"))),
                    }
                }
            };
            out.push((start, tok));
            continue;
        }
        return Err(syntax(start, format!("unexpected character '{c}'")));
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    modes: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<OperatorExpr, OpAlgError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorExpr, OpAlgError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let (pos, _) = self.bump();
                    let rhs = self.unary()?;
                    let c = rhs
                        .as_constant()
                        .ok_or_else(|| syntax(pos, "division by a non-constant expression"))?;
                    let inv = c.inv().ok_or_else(|| syntax(pos, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<OperatorExpr, OpAlgError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<OperatorExpr, OpAlgError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().1 {
            Tok::Int(n) => {
                let e: u32 = n.try_into().map_err(|_| syntax(pos, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(syntax(pos, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<OperatorExpr, OpAlgError> {
        let m = self.modes;
        let (pos, tok) = self.bump();
        let e = match tok {
            Tok::Int(n) => OperatorExpr::constant(m, ExactScalar::rational(BigRational::from_integer(n))),
            Tok::Imag => OperatorExpr::constant(m, ExactScalar::i()),
            Tok::Sqrt2 => OperatorExpr::constant(m, ExactScalar::sqrt2()),
            Tok::Ann(k) => OperatorExpr::a(m, k),
            Tok::Cre(k) => OperatorExpr::ad(m, k),
            Tok::Pos(k) => OperatorExpr::position(m, k),
            Tok::Mom(k) => OperatorExpr::momentum(m, k),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(syntax(self.pos(), "expected ')'"));
                }
                self.bump();
                inner
            }
            Tok::End => return Err(syntax(pos, "unexpected end of input")),
            other => return Err(syntax(pos, format!("unexpected token {other:?}"))),
        };
        Ok(e)
    }
}

/// Parses `text` into a canonical expression over `modes` modes.
pub fn parse_expr(text: &str, modes: usize) -> Result<OperatorExpr, OpAlgError> {
    let toks = lex(text, modes)?;
    let mut p = Parser { toks, at: 0, modes };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_operator() {
        let e = parse_expr("ad1*a1", 1).unwrap();
        assert_eq!(e.to_string(), "ad1*a1");
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn x_p_commutator_is_i() {
        let e = parse_expr("x1*p1 - p1*x1", 1).unwrap();
        assert_eq!(e, OperatorExpr::constant(1, ExactScalar::i()));
    }

    #[test]
    fn symmetrized_number_operator() {
        let e = parse_expr("(1/2)*(a1*ad1 + ad1*a1)", 1).unwrap();
        assert_eq!(e.to_string(), "ad1*a1 + 1/2");
    }

    #[test]
    fn dagger_spelling_and_whitespace() {
        let a = parse_expr("a†1 * a 1", 1);
        // "a 1" is not a symbol: the name needs its index attached
        assert!(a.is_err());
        let b = parse_expr("  a†1*a1 ", 1).unwrap();
        assert_eq!(b, parse_expr("ad1*a1", 1).unwrap());
        assert_eq!(parse_expr("a_1", 1).unwrap(), OperatorExpr::a(1, 1));
    }

    #[test]
    fn mode_out_of_range() {
        assert_eq!(
            parse_expr("ad1*a3", 2).unwrap_err(),
            OpAlgError::ModeOutOfRange { mode: 3, modes: 2, pos: 4 }
        );
        assert!(matches!(parse_expr("a0", 2), Err(OpAlgError::ModeOutOfRange { .. })));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_expr("a1 + * a1", 1).unwrap_err(),
            OpAlgError::Syntax { pos: 5, msg: "unexpected token Star".into() }
        );
        assert!(matches!(parse_expr("(a1", 1), Err(OpAlgError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("a1 / a1", 1), Err(OpAlgError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("a1 / (1 - 1)", 1), Err(OpAlgError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("a1 ? 2", 1), Err(OpAlgError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("b1", 1), Err(OpAlgError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expr("a1 a1", 1), Err(OpAlgError::Syntax { pos: 3, .. })));
    }

    #[test]
    fn powers_and_unary() {
        assert_eq!(parse_expr("-a1^2", 1).unwrap().to_string(), "-a1^2");
        assert_eq!(parse_expr("sqrt2^2", 1).unwrap(), OperatorExpr::constant(1, ExactScalar::int(2)));
        assert_eq!(parse_expr("i^2", 1).unwrap(), OperatorExpr::constant(1, ExactScalar::int(-1)));
    }

    #[test]
    fn x_and_p_definitions() {
        let x = parse_expr("x2", 2).unwrap();
        assert_eq!(x.to_string(), "1/2*sqrt2*ad2 + 1/2*sqrt2*a2");
        let p = parse_expr("p2", 2).unwrap();
        assert_eq!(p.to_string(), "1/2*i*sqrt2*ad2 - 1/2*i*sqrt2*a2");
    }
}
