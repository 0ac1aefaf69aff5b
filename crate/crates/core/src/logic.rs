//! Literals, clauses and the two normal-form shapes the engine works on.
//!
//! A [`NormalFormPair`] stands for `∧X → ∨Y` with `X` a list of clauses and
//! `Y` a list of co-clauses (conjunctions of literals). Its clausal form
//! [`ClausalForm`] is `∧(X ∪ Y*) → ⊥`, obtained by complementing `Y` and
//! moving it to the left.
//!
//! Clauses keep their literals as written, duplicates and complementary
//! literals included. Empty clauses never appear: an empty disjunction is
//! `Const(false)` and an empty conjunction is `Const(true)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// A propositional variable. Identity is the index alone; the name only
/// affects printing.
#[derive(Clone)]
pub struct Variable {
    index: u32,
    name: Option<Arc<str>>,
}

impl Variable {
    /// # Panics
    /// If `index` is zero.
    pub fn new(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Self { index, name: None }
    }

    pub fn named(index: u32, name: impl Into<Arc<str>>) -> Self {
        Self {
            name: Some(name.into()),
            ..Self::new(index)
        }
    }

    /// The `P(index,total)` form used for arbitrarily many variables.
    pub fn numbered(index: u32, total: u32) -> Self {
        Self::named(index, format!("P({index},{total})"))
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn positive(&self) -> Literal {
        Literal::new(self.clone(), false)
    }

    pub fn negative(&self) -> Literal {
        Literal::new(self.clone(), true)
    }
}

impl PartialEq for Variable {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
    }
}

impl Eq for Variable {}

impl Hash for Variable {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.hash(state);
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index.cmp(&other.index)
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => f.write_str(name),
            None => write!(f, "P({0},{0})", self.index),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: Variable,
    pub negated: bool,
}

impl Literal {
    pub fn new(var: Variable, negated: bool) -> Self {
        Self { var, negated }
    }

    pub fn complement(&self) -> Literal {
        Literal::new(self.var.clone(), !self.negated)
    }

    pub fn is_positive(&self) -> bool {
        !self.negated
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

pub fn complement_literal(l: &Literal) -> Literal {
    l.complement()
}

/// A clause: a disjunction of literals, or a constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CnfElement {
    Const(bool),
    Disj(Vec<Literal>),
}

/// A co-clause: a conjunction of literals, or a constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DnfElement {
    Const(bool),
    Conj(Vec<Literal>),
}

impl CnfElement {
    /// Builds a disjunction; the empty one collapses to `⊥`.
    pub fn disj(literals: Vec<Literal>) -> Self {
        if literals.is_empty() {
            CnfElement::Const(false)
        } else {
            CnfElement::Disj(literals)
        }
    }

    pub fn literals(&self) -> &[Literal] {
        match self {
            CnfElement::Const(_) => &[],
            CnfElement::Disj(lits) => lits,
        }
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.literals().contains(l)
    }

    /// The co-clause whose negation this clause is.
    pub fn complement(&self) -> DnfElement {
        match self {
            CnfElement::Const(t) => DnfElement::Const(!t),
            CnfElement::Disj(lits) => DnfElement::Conj(lits.iter().map(Literal::complement).collect()),
        }
    }

    /// Removes every occurrence of `l`.
    pub fn strip(&self, l: &Literal) -> CnfElement {
        CnfElement::disj(self.literals().iter().filter(|x| *x != l).cloned().collect())
    }
}

impl DnfElement {
    /// Builds a conjunction; the empty one collapses to `⊤`.
    pub fn conj(literals: Vec<Literal>) -> Self {
        if literals.is_empty() {
            DnfElement::Const(true)
        } else {
            DnfElement::Conj(literals)
        }
    }

    pub fn literals(&self) -> &[Literal] {
        match self {
            DnfElement::Const(_) => &[],
            DnfElement::Conj(lits) => lits,
        }
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.literals().contains(l)
    }

    pub fn complement(&self) -> CnfElement {
        match self {
            DnfElement::Const(t) => CnfElement::Const(!t),
            DnfElement::Conj(lits) => CnfElement::Disj(lits.iter().map(Literal::complement).collect()),
        }
    }

    pub fn strip(&self, l: &Literal) -> DnfElement {
        DnfElement::conj(self.literals().iter().filter(|x| *x != l).cloned().collect())
    }
}

pub fn complement_side(y: &[DnfElement]) -> Vec<CnfElement> {
    y.iter().map(DnfElement::complement).collect()
}

/// Inverse of [`complement_side`].
pub fn complement_cnf_side(x: &[CnfElement]) -> Vec<DnfElement> {
    x.iter().map(CnfElement::complement).collect()
}

/// `∧x → ∨y`. Empty `x` reads as `⊤`, empty `y` as `⊥`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalFormPair {
    pub x: Vec<CnfElement>,
    pub y: Vec<DnfElement>,
}

impl NormalFormPair {
    pub fn new(x: Vec<CnfElement>, y: Vec<DnfElement>) -> Self {
        Self { x, y }
    }

    pub fn x_variables(&self) -> BTreeSet<Variable> {
        self.x
            .iter()
            .flat_map(|c| c.literals())
            .map(|l| l.var.clone())
            .collect()
    }

    pub fn y_variables(&self) -> BTreeSet<Variable> {
        self.y
            .iter()
            .flat_map(|c| c.literals())
            .map(|l| l.var.clone())
            .collect()
    }

    pub fn shared_variables(&self) -> BTreeSet<Variable> {
        self.x_variables().intersection(&self.y_variables()).cloned().collect()
    }

    pub fn to_clausal(&self) -> ClausalForm {
        let mut z = self.x.clone();
        z.extend(complement_side(&self.y));
        ClausalForm::new(z)
    }
}

/// `∧z → ⊥`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClausalForm {
    pub z: Vec<CnfElement>,
}

impl ClausalForm {
    pub fn new(z: Vec<CnfElement>) -> Self {
        Self { z }
    }

    pub fn clauses(&self) -> &[CnfElement] {
        &self.z
    }

    pub fn contains_falsum(&self) -> bool {
        self.z.contains(&CnfElement::Const(false))
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn eliminable_variables(&self) -> BTreeSet<Variable> {
        eliminable_variables(self)
    }
}

/// Variables with a positive occurrence in one clause and a negative one in
/// a different clause.
pub fn eliminable_variables(z: &ClausalForm) -> BTreeSet<Variable> {
    // For each variable, the clauses holding it positively and negatively.
    let mut occurrences: BTreeMap<&Variable, (BTreeSet<usize>, BTreeSet<usize>)> = BTreeMap::new();
    for (i, clause) in z.z.iter().enumerate() {
        for l in clause.literals() {
            let entry = occurrences.entry(&l.var).or_default();
            if l.negated {
                entry.1.insert(i);
            } else {
                entry.0.insert(i);
            }
        }
    }
    occurrences
        .into_iter()
        .filter(|(_, (pos, neg))| pos.iter().any(|i| neg.iter().any(|j| i != j)))
        .map(|(v, _)| v.clone())
        .collect()
}

/// Number of complementary variable pairs spread over distinct clauses.
pub fn rank(z: &ClausalForm) -> usize {
    eliminable_variables(z).len()
}
