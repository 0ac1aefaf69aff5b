//! Text notations.
//!
//! Two styles are supported, both for reading and writing:
//!
//! * **bracket** ([`Style::Bracket`]): lists such as `[D.p..Ns., D.q..r.]` for
//!   clauses and `[C.p..Nr.]` for co-clauses, literals written `.p.` /
//!   `.Np.`, constants `.0.` (⊥) and `.1.` (⊤). Variables are lowercase
//!   identifiers or `P(a,b)`, meaning variable number `a` out of `b`.
//!   Interpolants extend this with `C(l, r)` and `D(l, r)` for binary
//!   conjunction and disjunction.
//! * **infix** ([`Style::Infix`]): `¬ ∧ ∨ → ≡ ⊥ ⊤`, fully parenthesized on
//!   output; the ASCII spellings `~ & | -> <-> F T` are accepted on input.
//!
//! ```text
//! list     = "[" [ item { "," SP item } ] "]" ;
//! item     = dclause | cclause | const ;
//! dclause  = "D" lit { lit } ;
//! cclause  = "C" lit { lit } ;
//! lit      = "." [ "N" ] var "." ;
//! var      = ident | "P(" nat "," nat ")" ;
//! const    = ".0." | ".1." ;
//! ident    = lowercase letter { letter | digit } ;
//! ```
//!
//! Named variables get indices from a [`Vocabulary`] in order of first
//! appearance; parse both sides of an implication with the same vocabulary
//! so that `p` means the same variable on each side.

mod bracket;
mod infix;
mod trace;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::logic::Variable;

pub use bracket::{parse_cnf_list, parse_dnf_list, parse_interpolant, parse_pair};
pub use infix::parse_formula;
pub use trace::{render_refutation, render_trace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Bracket,
    Infix,
}

pub trait Render {
    fn render(&self, style: Style) -> String;
}

pub fn render<R: Render + ?Sized>(value: &R, style: Style) -> String {
    value.render(style)
}

/// Syntax error; `position` is a 0-based character offset into the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at column {}: {message}", .position + 1)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Origin {
    Named,
    Numbered,
}

/// Name-to-index table shared across the inputs of one problem.
#[derive(Clone, Debug, Default)]
pub struct Vocabulary {
    by_name: HashMap<String, Variable>,
    taken: BTreeMap<u32, Origin>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    /// A vocabulary that maps every named variable in `vars` back to its
    /// own index.
    pub fn from_variables<'a>(vars: impl IntoIterator<Item = &'a Variable>) -> Self {
        let mut vocab = Self::new();
        for v in vars {
            match v.name() {
                Some(name) if !name.starts_with("P(") => {
                    vocab.by_name.insert(name.to_owned(), v.clone());
                    vocab.taken.insert(v.index(), Origin::Named);
                }
                _ => {
                    vocab.taken.insert(v.index(), Origin::Numbered);
                }
            }
        }
        vocab
    }

    pub fn named(&mut self, name: &str) -> Variable {
        if let Some(v) = self.by_name.get(name) {
            return v.clone();
        }
        let index = self.taken.keys().next_back().map_or(1, |max| max + 1);
        let v = Variable::named(index, name);
        self.taken.insert(index, Origin::Named);
        self.by_name.insert(name.to_owned(), v.clone());
        v
    }

    pub fn numbered(&mut self, index: u32, total: u32) -> Result<Variable, String> {
        if index == 0 || index > total {
            return Err(format!("P({index},{total}) needs 1 <= index <= total"));
        }
        match self.taken.get(&index) {
            Some(Origin::Named) => Err(format!("P({index},{total}) collides with a named variable")),
            _ => {
                self.taken.insert(index, Origin::Numbered);
                Ok(Variable::numbered(index, total))
            }
        }
    }

    pub fn len(&self) -> usize {
        self.taken.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taken.is_empty()
    }
}

/// Character cursor shared by both parsers.
pub(crate) struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    pub(crate) vocab: &'a mut Vocabulary,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(input: &str, vocab: &'a mut Vocabulary) -> Self {
        Self {
            chars: input.chars().collect(),
            pos: 0,
            vocab,
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    pub(crate) fn describe_next(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_owned(),
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}', found {}", self.describe_next())))
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing '{c}'"))),
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected a number, found {}", self.describe_next())));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| ParseError::new(start, format!("number {digits} out of range")))
    }

    /// `ident | "P(" nat "," nat ")"`
    pub(crate) fn variable(&mut self) -> Result<Variable, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some('P') if self.peek_at(1) == Some('(') => {
                self.pos += 2;
                let index = self.nat()?;
                self.expect(',')?;
                let total = self.nat()?;
                self.expect(')')?;
                self.vocab.numbered(index, total).map_err(|m| ParseError::new(start, m))
            }
            Some(c) if c.is_ascii_lowercase() => {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(self.vocab.named(&name))
            }
            _ => Err(self.error(format!("expected a variable, found {}", self.describe_next()))),
        }
    }
}

/// A single variable name (`p`, `P(2,4)`), resolved against `vocab`.
pub fn parse_variable(s: &str, vocab: &mut Vocabulary) -> Result<Variable, ParseError> {
    let mut cursor = Cursor::new(s, vocab);
    cursor.skip_ws();
    let v = cursor.variable()?;
    cursor.finish()?;
    Ok(v)
}

pub(crate) struct JoinDisplay<'a, T>(pub &'a [T], pub &'a str);

impl<T: fmt::Display> fmt::Display for JoinDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(self.1)?;
            }
            write!(f, "{item}")?;
        }
        Ok(())
    }
}
