use std::fmt;

use super::{Cursor, ParseError, Vocabulary};
use crate::normalize::Formula;

// Precedence, loosest first: ≡, → (right associative), ∨, ∧, ¬.
impl Cursor<'_> {
    fn infix_iff(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.infix_implies()?;
        loop {
            self.skip_ws();
            if self.eat('≡') || self.eat_str("<->") {
                let rhs = self.infix_implies()?;
                f = Formula::iff(f, rhs);
            } else {
                return Ok(f);
            }
        }
    }

    fn infix_implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.infix_or()?;
        self.skip_ws();
        if self.eat('→') || self.eat_str("->") {
            let rhs = self.infix_implies()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn infix_or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.infix_and()?;
        loop {
            self.skip_ws();
            if self.eat('∨') || self.eat('|') {
                let rhs = self.infix_and()?;
                f = Formula::or(f, rhs);
            } else {
                return Ok(f);
            }
        }
    }

    fn infix_and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.infix_unary()?;
        loop {
            self.skip_ws();
            if self.eat('∧') || self.eat('&') {
                let rhs = self.infix_unary()?;
                f = Formula::and(f, rhs);
            } else {
                return Ok(f);
            }
        }
    }

    fn infix_unary(&mut self) -> Result<Formula, ParseError> {
        self.skip_ws();
        if self.eat('¬') || self.eat('~') {
            return Ok(Formula::not(self.infix_unary()?));
        }
        if self.eat('(') {
            let f = self.infix_iff()?;
            self.skip_ws();
            self.expect(')')?;
            return Ok(f);
        }
        if self.eat('⊥') || self.eat('F') {
            return Ok(Formula::Const(false));
        }
        if self.eat('⊤') || self.eat('T') {
            return Ok(Formula::Const(true));
        }
        Ok(Formula::Var(self.variable()?))
    }
}

/// Parses an infix formula, e.g. `(p ∧ q) -> ~r`.
pub fn parse_formula(s: &str, vocab: &mut Vocabulary) -> Result<Formula, ParseError> {
    let mut cursor = Cursor::new(s, vocab);
    let f = cursor.infix_iff()?;
    cursor.finish()?;
    Ok(f)
}

/// Fully parenthesized infix.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Const(true) => f.write_str("⊤"),
            Formula::Const(false) => f.write_str("⊥"),
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Not(g) => write!(f, "¬{g}"),
            Formula::And(a, b) => write!(f, "({a} ∧ {b})"),
            Formula::Or(a, b) => write!(f, "({a} ∨ {b})"),
            Formula::Implies(a, b) => write!(f, "({a} → {b})"),
            Formula::Iff(a, b) => write!(f, "({a} ≡ {b})"),
        }
    }
}
