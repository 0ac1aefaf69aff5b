//! Conversions from arbitrary formulas into CNF/DNF sides, and between the
//! normal and clausal shapes of an implication.
//!
//! CNF/DNF conversion is the textbook route (eliminate `→`/`≡`, push
//! negations to the atoms, distribute) without auxiliary variables, so the
//! output is equivalent to the input and may be exponentially larger.
//! Duplicate or complementary literals inside a clause are left alone.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::interpolate::Interpolant;
use crate::logic::{complement_cnf_side, ClausalForm, CnfElement, DnfElement, Literal, NormalFormPair, Variable};
use crate::semantics::{Semantics, Truth};

/// A general propositional formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Var(Variable),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn literal(l: &Literal) -> Self {
        let atom = Formula::Var(l.var.clone());
        if l.negated {
            Formula::not(atom)
        } else {
            atom
        }
    }

    /// Negation normal form, returned as an `∧`/`∨` tree over literals.
    pub fn nnf(&self) -> Interpolant {
        self.nnf_signed(false)
    }

    fn nnf_signed(&self, negate: bool) -> Interpolant {
        match self {
            Formula::Const(t) => Interpolant::Const(*t != negate),
            Formula::Var(v) => Interpolant::Lit(Literal::new(v.clone(), negate)),
            Formula::Not(f) => f.nnf_signed(!negate),
            Formula::And(a, b) if negate => Interpolant::or(a.nnf_signed(true), b.nnf_signed(true)),
            Formula::And(a, b) => Interpolant::and(a.nnf_signed(false), b.nnf_signed(false)),
            Formula::Or(a, b) if negate => Interpolant::and(a.nnf_signed(true), b.nnf_signed(true)),
            Formula::Or(a, b) => Interpolant::or(a.nnf_signed(false), b.nnf_signed(false)),
            // a → b  ≡  ¬a ∨ b
            Formula::Implies(a, b) if negate => Interpolant::and(a.nnf_signed(false), b.nnf_signed(true)),
            Formula::Implies(a, b) => Interpolant::or(a.nnf_signed(true), b.nnf_signed(false)),
            // a ≡ b  ≡  (¬a ∨ b) ∧ (a ∨ ¬b);  ¬(a ≡ b)  ≡  (a ∨ b) ∧ (¬a ∨ ¬b)
            Formula::Iff(a, b) if negate => Interpolant::and(
                Interpolant::or(a.nnf_signed(false), b.nnf_signed(false)),
                Interpolant::or(a.nnf_signed(true), b.nnf_signed(true)),
            ),
            Formula::Iff(a, b) => Interpolant::and(
                Interpolant::or(a.nnf_signed(true), b.nnf_signed(false)),
                Interpolant::or(a.nnf_signed(false), b.nnf_signed(true)),
            ),
        }
    }
}

impl From<&Interpolant> for Formula {
    fn from(i: &Interpolant) -> Self {
        match i {
            Interpolant::Const(t) => Formula::Const(*t),
            Interpolant::Lit(l) => Formula::literal(l),
            Interpolant::And(a, b) => Formula::and(a.as_ref().into(), b.as_ref().into()),
            Interpolant::Or(a, b) => Formula::or(a.as_ref().into(), b.as_ref().into()),
        }
    }
}

impl Semantics for Formula {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        Ok(match self {
            Formula::Const(t) => T::constant(*t),
            Formula::Var(v) => lit(&v.positive())?,
            Formula::Not(f) => !f.eval_in(lit)?,
            Formula::And(a, b) => a.eval_in(lit)? & b.eval_in(lit)?,
            Formula::Or(a, b) => a.eval_in(lit)? | b.eval_in(lit)?,
            Formula::Implies(a, b) => !a.eval_in(lit)? | b.eval_in(lit)?,
            Formula::Iff(a, b) => {
                let (x, y) = (a.eval_in(lit)?, b.eval_in(lit)?);
                (x & y) | (!x & !y)
            }
        })
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        match self {
            Formula::Const(_) => {}
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Not(f) => f.collect_variables(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }
}

/// Clause-list (conjunction) equivalent of `f`. `⊤` yields the empty list.
pub fn to_cnf(f: &Formula) -> Vec<CnfElement> {
    cnf_of(&f.nnf())
}

/// Co-clause-list (disjunction) equivalent of `f`. `⊥` yields the empty list.
pub fn to_dnf(f: &Formula) -> Vec<DnfElement> {
    dnf_of(&f.nnf())
}

fn cnf_of(i: &Interpolant) -> Vec<CnfElement> {
    match i {
        Interpolant::Const(true) => vec![],
        Interpolant::Const(false) => vec![CnfElement::Const(false)],
        Interpolant::Lit(l) => vec![CnfElement::Disj(vec![l.clone()])],
        Interpolant::And(a, b) => {
            let mut out = cnf_of(a);
            out.extend(cnf_of(b));
            out
        }
        Interpolant::Or(a, b) => {
            let (left, right) = (cnf_of(a), cnf_of(b));
            let mut out = Vec::with_capacity(left.len() * right.len());
            for ca in &left {
                for cb in &right {
                    let mut lits = ca.literals().to_vec();
                    lits.extend_from_slice(cb.literals());
                    // ⊥ ∨ ⊥ stays ⊥; any other ⊥ vanishes into the literals
                    out.push(CnfElement::disj(lits));
                }
            }
            out
        }
    }
}

fn dnf_of(i: &Interpolant) -> Vec<DnfElement> {
    match i {
        Interpolant::Const(false) => vec![],
        Interpolant::Const(true) => vec![DnfElement::Const(true)],
        Interpolant::Lit(l) => vec![DnfElement::Conj(vec![l.clone()])],
        Interpolant::Or(a, b) => {
            let mut out = dnf_of(a);
            out.extend(dnf_of(b));
            out
        }
        Interpolant::And(a, b) => {
            let (left, right) = (dnf_of(a), dnf_of(b));
            let mut out = Vec::with_capacity(left.len() * right.len());
            for ca in &left {
                for cb in &right {
                    let mut lits = ca.literals().to_vec();
                    lits.extend_from_slice(cb.literals());
                    out.push(DnfElement::conj(lits));
                }
            }
            out
        }
    }
}

/// Normal form for an arbitrary implication `a → b`.
pub fn normal_form(a: &Formula, b: &Formula) -> NormalFormPair {
    NormalFormPair::new(to_cnf(a), to_dnf(b))
}

pub fn to_clausal(g: &NormalFormPair) -> ClausalForm {
    g.to_clausal()
}

/// Splits `z` back into a normal form: the first `split_point` clauses form
/// the antecedent, the rest are complemented into the consequent.
pub fn from_clausal(z: &ClausalForm, split_point: usize) -> Result<NormalFormPair> {
    if split_point > z.z.len() {
        return Err(Error::SplitOutOfRange {
            split: split_point,
            len: z.z.len(),
        });
    }
    let (x, rest) = z.z.split_at(split_point);
    Ok(NormalFormPair::new(x.to_vec(), complement_cnf_side(rest)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::Oracle;

    fn v(i: u32) -> Formula {
        Formula::Var(Variable::new(i))
    }

    fn lit(i: u32, neg: bool) -> Literal {
        Literal::new(Variable::new(i), neg)
    }

    fn d(lits: &[(u32, bool)]) -> CnfElement {
        CnfElement::disj(lits.iter().map(|&(i, n)| lit(i, n)).collect())
    }

    fn c(lits: &[(u32, bool)]) -> DnfElement {
        DnfElement::conj(lits.iter().map(|&(i, n)| lit(i, n)).collect())
    }

    #[test]
    fn cnf_examples() {
        assert_eq!(to_cnf(&v(1)), vec![d(&[(1, false)])]);
        assert_eq!(
            to_cnf(&Formula::not(Formula::and(v(1), v(2)))),
            vec![d(&[(1, true), (2, true)])]
        );
        let f = Formula::or(Formula::and(v(1), v(2)), v(3));
        let cnf = to_cnf(&f);
        assert_eq!(cnf, vec![d(&[(1, false), (3, false)]), d(&[(2, false), (3, false)])]);
        assert!(Oracle::default().equivalent(&f, &cnf[..]).unwrap());
    }

    #[test]
    fn dnf_examples() {
        assert_eq!(to_dnf(&v(1)), vec![c(&[(1, false)])]);
        assert_eq!(
            to_dnf(&Formula::not(Formula::or(v(1), v(2)))),
            vec![c(&[(1, true), (2, true)])]
        );
        let f = Formula::and(Formula::or(v(1), v(2)), v(3));
        let dnf = to_dnf(&f);
        assert_eq!(dnf, vec![c(&[(1, false), (3, false)]), c(&[(2, false), (3, false)])]);
        assert!(Oracle::default().equivalent(&f, &dnf[..]).unwrap());
    }

    #[test]
    fn constants_in_conversion() {
        assert!(to_cnf(&Formula::Const(true)).is_empty());
        assert_eq!(to_cnf(&Formula::Const(false)), vec![CnfElement::Const(false)]);
        assert_eq!(
            to_cnf(&Formula::or(Formula::Const(false), v(1))),
            vec![d(&[(1, false)])]
        );
        assert!(to_cnf(&Formula::or(Formula::Const(true), v(1))).is_empty());
        assert!(to_dnf(&Formula::Const(false)).is_empty());
        assert_eq!(
            to_dnf(&Formula::and(Formula::Const(true), v(2))),
            vec![c(&[(2, false)])]
        );
    }

    #[test]
    fn implication_and_equivalence_are_eliminated() {
        let oracle = Oracle::default();
        for f in [
            Formula::implies(v(1), v(2)),
            Formula::iff(v(1), Formula::not(v(2))),
            Formula::not(Formula::iff(v(1), v(2))),
            Formula::not(Formula::implies(Formula::and(v(1), v(3)), v(2))),
        ] {
            assert!(oracle.equivalent(&f, &to_cnf(&f)[..]).unwrap(), "{f:?}");
            assert!(oracle.equivalent(&f, &to_dnf(&f)[..]).unwrap(), "{f:?}");
        }
    }

    #[test]
    fn clausal_round_trip() {
        let g = NormalFormPair::new(
            vec![
                d(&[(1, false), (4, true)]),
                d(&[(2, false), (3, false)]),
                d(&[(1, true), (2, true)]),
                d(&[(3, true), (4, false)]),
            ],
            vec![
                c(&[(1, true), (3, false)]),
                c(&[(1, true), (2, false)]),
                c(&[(1, false), (2, true)]),
            ],
        );
        let z = to_clausal(&g);
        assert_eq!(z.z.len(), 7);
        assert_eq!(z.rank(), 4);
        assert_eq!(from_clausal(&z, 4).unwrap(), g);
        assert!(from_clausal(&z, 7).unwrap().y.is_empty());
        assert!(from_clausal(&z, 0).unwrap().x.is_empty());
        assert!(matches!(
            from_clausal(&z, 8),
            Err(Error::SplitOutOfRange { split: 8, len: 7 })
        ));
        assert_eq!(to_clausal(&NormalFormPair::default()).z, vec![]);
        let with_verum = NormalFormPair::new(vec![d(&[(1, false)])], vec![DnfElement::Const(true)]);
        assert_eq!(
            to_clausal(&with_verum).z,
            vec![d(&[(1, false)]), CnfElement::Const(false)]
        );
    }
}
