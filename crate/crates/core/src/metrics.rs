//! Size measures over the canonical infix rendering.
//!
//! `size` is literal occurrences plus constant occurrences. Connectives are
//! `∧ ∨ ¬ → ≡` as they appear in the rendering, so an n-literal clause
//! contributes `n - 1` disjunctions plus one `¬` per negative literal, and
//! an empty antecedent/consequent renders (and counts) as `⊤`/`⊥`.

use std::collections::BTreeSet;

use crate::interpolate::Interpolant;
use crate::logic::{ClausalForm, CnfElement, DnfElement, Literal, NormalFormPair, Variable};
use crate::normalize::Formula;
use crate::semantics::Semantics;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeMetrics {
    pub literal_occurrences: usize,
    pub constant_occurrences: usize,
    pub connective_count: usize,
    pub variable_count: usize,
}

impl SizeMetrics {
    pub fn size(&self) -> usize {
        self.literal_occurrences + self.constant_occurrences
    }
}

pub trait Measure {
    fn measure(&self) -> SizeMetrics;
}

#[derive(Default)]
struct Tally {
    literals: usize,
    constants: usize,
    connectives: usize,
}

impl Tally {
    fn literal(&mut self, l: &Literal) {
        self.literals += 1;
        self.connectives += usize::from(l.negated);
    }

    fn element(&mut self, lits: &[Literal]) {
        lits.iter().for_each(|l| self.literal(l));
        self.connectives += lits.len().saturating_sub(1);
    }

    fn cnf_side(&mut self, x: &[CnfElement]) {
        if x.is_empty() {
            self.constants += 1;
            return;
        }
        self.connectives += x.len() - 1;
        for clause in x {
            match clause {
                CnfElement::Const(_) => self.constants += 1,
                CnfElement::Disj(lits) => self.element(lits),
            }
        }
    }

    fn dnf_side(&mut self, y: &[DnfElement]) {
        if y.is_empty() {
            self.constants += 1;
            return;
        }
        self.connectives += y.len() - 1;
        for conj in y {
            match conj {
                DnfElement::Const(_) => self.constants += 1,
                DnfElement::Conj(lits) => self.element(lits),
            }
        }
    }

    fn finish(self, vars: BTreeSet<Variable>) -> SizeMetrics {
        SizeMetrics {
            literal_occurrences: self.literals,
            constant_occurrences: self.constants,
            connective_count: self.connectives,
            variable_count: vars.len(),
        }
    }
}

impl Measure for NormalFormPair {
    fn measure(&self) -> SizeMetrics {
        let mut t = Tally::default();
        t.cnf_side(&self.x);
        t.dnf_side(&self.y);
        t.connectives += 1;
        t.finish(self.variables())
    }
}

impl Measure for ClausalForm {
    fn measure(&self) -> SizeMetrics {
        let mut t = Tally::default();
        t.cnf_side(&self.z);
        t.constants += 1;
        t.connectives += 1;
        t.finish(self.variables())
    }
}

impl Measure for Interpolant {
    fn measure(&self) -> SizeMetrics {
        fn walk(i: &Interpolant, t: &mut Tally) {
            match i {
                Interpolant::Const(_) => t.constants += 1,
                Interpolant::Lit(l) => t.literal(l),
                Interpolant::And(a, b) | Interpolant::Or(a, b) => {
                    t.connectives += 1;
                    walk(a, t);
                    walk(b, t);
                }
            }
        }
        let mut t = Tally::default();
        walk(self, &mut t);
        t.finish(self.variables())
    }
}

impl Measure for Formula {
    fn measure(&self) -> SizeMetrics {
        fn walk(f: &Formula, t: &mut Tally) {
            match f {
                Formula::Const(_) => t.constants += 1,
                Formula::Var(_) => t.literals += 1,
                Formula::Not(g) => {
                    t.connectives += 1;
                    walk(g, t);
                }
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                    t.connectives += 1;
                    walk(a, t);
                    walk(b, t);
                }
            }
        }
        let mut t = Tally::default();
        walk(self, &mut t);
        t.finish(self.variables())
    }
}

pub fn measure<M: Measure + ?Sized>(value: &M) -> SizeMetrics {
    value.measure()
}
