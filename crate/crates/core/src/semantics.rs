//! Classical two-valued semantics and the brute-force truth-table oracle.
//!
//! Everything the engine claims is checked against this module, so it
//! deliberately knows nothing about elimination or refutation. Validity is
//! decided by sweeping all `2^n` valuations; formulas are evaluated 64
//! valuations at a time by running the same evaluator over `u64` words
//! instead of `bool`s.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use crate::error::{Error, Result};
use crate::interpolate::Interpolant;
use crate::logic::{ClausalForm, CnfElement, DnfElement, Literal, NormalFormPair, Variable};

/// Variable cap applied when none is configured.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// A value domain the evaluator can compute in: `bool` for one valuation,
/// `u64` for 64 valuations side by side.
pub trait Truth: Copy + PartialEq + BitAnd<Output = Self> + BitOr<Output = Self> + Not<Output = Self> {
    const TRUE: Self;
    const FALSE: Self;

    fn constant(b: bool) -> Self {
        if b {
            Self::TRUE
        } else {
            Self::FALSE
        }
    }
}

impl Truth for bool {
    const TRUE: Self = true;
    const FALSE: Self = false;
}

impl Truth for u64 {
    const TRUE: Self = !0;
    const FALSE: Self = 0;
}

pub trait Semantics {
    /// Evaluates with `lit` supplying the value of each literal occurrence.
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T>;

    fn collect_variables(&self, out: &mut BTreeSet<Variable>);

    fn variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }
}

fn fold_all<'a, T, F, I, S>(items: I, lit: &mut F) -> Result<T>
where
    T: Truth,
    F: FnMut(&Literal) -> Result<T>,
    I: IntoIterator<Item = &'a S>,
    S: Semantics + 'a + ?Sized,
{
    let mut acc = T::TRUE;
    for item in items {
        acc = acc & item.eval_in(lit)?;
    }
    Ok(acc)
}

fn fold_any<'a, T, F, I, S>(items: I, lit: &mut F) -> Result<T>
where
    T: Truth,
    F: FnMut(&Literal) -> Result<T>,
    I: IntoIterator<Item = &'a S>,
    S: Semantics + 'a + ?Sized,
{
    let mut acc = T::FALSE;
    for item in items {
        acc = acc | item.eval_in(lit)?;
    }
    Ok(acc)
}

impl Semantics for Literal {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        lit(self)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        out.insert(self.var.clone());
    }
}

impl Semantics for CnfElement {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        match self {
            CnfElement::Const(t) => Ok(T::constant(*t)),
            CnfElement::Disj(lits) => fold_any(lits, lit),
        }
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.literals().iter().for_each(|l| l.collect_variables(out));
    }
}

impl Semantics for DnfElement {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        match self {
            DnfElement::Const(t) => Ok(T::constant(*t)),
            DnfElement::Conj(lits) => fold_all(lits, lit),
        }
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.literals().iter().for_each(|l| l.collect_variables(out));
    }
}

/// A CNF side: the conjunction of its clauses.
impl Semantics for [CnfElement] {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        fold_all(self, lit)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.iter().for_each(|c| c.collect_variables(out));
    }
}

/// A DNF side: the disjunction of its co-clauses.
impl Semantics for [DnfElement] {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        fold_any(self, lit)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.iter().for_each(|c| c.collect_variables(out));
    }
}

impl Semantics for NormalFormPair {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        Implies(&self.x[..], &self.y[..]).eval_in(lit)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.x.collect_variables(out);
        self.y.collect_variables(out);
    }
}

/// `∧z → ⊥`, i.e. the negation of the clause set.
impl Semantics for ClausalForm {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        Ok(!self.z.eval_in(lit)?)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.z.collect_variables(out);
    }
}

impl Semantics for Interpolant {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        Ok(match self {
            Interpolant::Const(t) => T::constant(*t),
            Interpolant::Lit(l) => lit(l)?,
            Interpolant::And(a, b) => a.eval_in(lit)? & b.eval_in(lit)?,
            Interpolant::Or(a, b) => a.eval_in(lit)? | b.eval_in(lit)?,
        })
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        Interpolant::collect_variables(self, out);
    }
}

impl<S: Semantics + ?Sized> Semantics for &S {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        (**self).eval_in(lit)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        (**self).collect_variables(out);
    }
}

/// `a → b` over any two evaluable values.
#[derive(Clone, Copy, Debug)]
pub struct Implies<A, B>(pub A, pub B);

impl<A: Semantics, B: Semantics> Semantics for Implies<A, B> {
    fn eval_in<T: Truth, F: FnMut(&Literal) -> Result<T>>(&self, lit: &mut F) -> Result<T> {
        Ok(!self.0.eval_in(lit)? | self.1.eval_in(lit)?)
    }

    fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        self.0.collect_variables(out);
        self.1.collect_variables(out);
    }
}

/// A total assignment of truth values to the variables of interest.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Valuation {
    assignment: BTreeMap<Variable, bool>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: Variable, value: bool) -> &mut Self {
        self.assignment.insert(var, value);
        self
    }

    pub fn get(&self, var: &Variable) -> Option<bool> {
        self.assignment.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, bool)> {
        self.assignment.iter().map(|(v, b)| (v, *b))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

impl FromIterator<(Variable, bool)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Variable, bool)>>(iter: I) -> Self {
        Self {
            assignment: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.assignment.is_empty() {
            return f.write_str("(empty valuation)");
        }
        for (i, (var, value)) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{var}={}", u8::from(*value))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

pub fn evaluate<S: Semantics + ?Sized>(f: &S, v: &Valuation) -> Result<bool> {
    f.eval_in(&mut |l: &Literal| {
        v.get(&l.var)
            .map(|b| b != l.negated)
            .ok_or_else(|| Error::UnassignedVariable(l.var.clone()))
    })
}

// Bit i of PATTERNS[j] is bit j of i: the first six variables inside a block.
const PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Brute-force validity oracle with a cap on the number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    /// First valuation (in counting order over the sorted variables) under
    /// which `f` evaluates differently from `expected`.
    fn find_deviation<S: Semantics + ?Sized>(&self, f: &S, expected: bool) -> Result<Option<Valuation>> {
        let vars: Vec<Variable> = f.variables().into_iter().collect();
        let n = vars.len();
        // also bounded by the 64-bit valuation counter
        if n > self.cap || n > 63 {
            return Err(Error::OracleCap {
                cap: self.cap,
                found: n,
            });
        }
        let (blocks, mask) = if n <= 6 {
            let rows = 1u32 << n;
            (1u64, if rows == 64 { !0 } else { (1u64 << rows) - 1 })
        } else {
            (1u64 << (n - 6), !0)
        };
        let target = if expected { mask } else { 0 };
        for block in 0..blocks {
            let word = f.eval_in(&mut |l: &Literal| {
                let j = vars.binary_search(&l.var).expect("variable collected above");
                let w = if j < 6 {
                    PATTERNS[j]
                } else if (block >> (j - 6)) & 1 == 1 {
                    !0
                } else {
                    0
                };
                Ok(if l.negated { !w } else { w })
            })? & mask;
            if word != target {
                let bit = (word ^ target).trailing_zeros() as u64;
                let row = (block << 6) | bit;
                let valuation = vars
                    .iter()
                    .enumerate()
                    .map(|(j, v)| (v.clone(), (row >> j) & 1 == 1))
                    .collect();
                return Ok(Some(valuation));
            }
        }
        Ok(None)
    }

    /// A valuation making `f` false, if one exists.
    pub fn falsifying_valuation<S: Semantics + ?Sized>(&self, f: &S) -> Result<Option<Valuation>> {
        self.find_deviation(f, true)
    }

    pub fn satisfying_valuation<S: Semantics + ?Sized>(&self, f: &S) -> Result<Option<Valuation>> {
        self.find_deviation(f, false)
    }

    pub fn is_tautology<S: Semantics + ?Sized>(&self, f: &S) -> Result<bool> {
        Ok(self.falsifying_valuation(f)?.is_none())
    }

    /// True when `¬f` is a tautology.
    pub fn is_contradiction<S: Semantics + ?Sized>(&self, f: &S) -> Result<bool> {
        Ok(self.satisfying_valuation(f)?.is_none())
    }

    pub fn equivalent<A: Semantics + ?Sized, B: Semantics + ?Sized>(&self, a: &A, b: &B) -> Result<bool> {
        Ok(self.is_tautology(&Implies(a, b))? && self.is_tautology(&Implies(b, a))?)
    }

    /// `⊨ ∧x → i`, `⊨ i → ∨y`, and, when some complementary pair spans
    /// distinct clauses of `x ∪ y*`, `i` uses only variables common to both
    /// sides.
    pub fn is_interpolant(&self, x: &[CnfElement], y: &[DnfElement], i: &Interpolant) -> Result<bool> {
        if !self.is_tautology(&Implies(x, i))? || !self.is_tautology(&Implies(i, y))? {
            return Ok(false);
        }
        let pair = NormalFormPair::new(x.to_vec(), y.to_vec());
        if pair.to_clausal().eliminable_variables().is_empty() {
            return Ok(true);
        }
        let shared = pair.shared_variables();
        Ok(i.variables().is_subset(&shared))
    }
}

pub fn is_tautology<S: Semantics + ?Sized>(f: &S) -> Result<bool> {
    Oracle::default().is_tautology(f)
}

pub fn is_interpolant(x: &[CnfElement], y: &[DnfElement], i: &Interpolant) -> Result<bool> {
    Oracle::default().is_interpolant(x, y, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(i: u32) -> Variable {
        Variable::new(i)
    }

    fn lit(i: u32, neg: bool) -> Literal {
        Literal::new(var(i), neg)
    }

    fn d(lits: &[(u32, bool)]) -> CnfElement {
        CnfElement::disj(lits.iter().map(|&(i, n)| lit(i, n)).collect())
    }

    fn c(lits: &[(u32, bool)]) -> DnfElement {
        DnfElement::conj(lits.iter().map(|&(i, n)| lit(i, n)).collect())
    }

    const P: u32 = 1;
    const Q: u32 = 2;
    const R: u32 = 3;
    const S: u32 = 4;

    fn example_pair() -> NormalFormPair {
        NormalFormPair::new(
            vec![
                d(&[(P, false), (S, true)]),
                d(&[(Q, false), (R, false)]),
                d(&[(P, true), (Q, true)]),
                d(&[(R, true), (S, false)]),
            ],
            vec![
                c(&[(P, true), (R, false)]),
                c(&[(P, true), (Q, false)]),
                c(&[(P, false), (Q, true)]),
            ],
        )
    }

    #[test]
    fn evaluate_basics() {
        let excluded_middle = d(&[(P, false), (P, true)]);
        for b in [false, true] {
            let v: Valuation = [(var(P), b)].into_iter().collect();
            assert!(evaluate(&excluded_middle, &v).unwrap());
            // ⊤ → ⊥
            assert!(!evaluate(&NormalFormPair::default(), &v).unwrap());
        }
        let v: Valuation = [(var(P), true), (var(Q), false), (var(R), true), (var(S), true)]
            .into_iter()
            .collect();
        assert!(evaluate(&example_pair().x[..], &v).unwrap());
    }

    #[test]
    fn evaluate_reports_unassigned_variable() {
        let v: Valuation = [(var(P), true)].into_iter().collect();
        match evaluate(&d(&[(P, true), (Q, false)]), &v) {
            // ¬p is false under p=1, so q is consulted
            Err(Error::UnassignedVariable(x)) => assert_eq!(x, var(Q)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tautology_basics() {
        assert!(is_tautology(&d(&[(P, false), (P, true)])).unwrap());
        let p_implies_q = Implies(lit(P, false), lit(Q, false));
        assert!(!is_tautology(&p_implies_q).unwrap());
        assert!(is_tautology(&example_pair()).unwrap());
        assert!(is_tautology(&CnfElement::Const(true)).unwrap());
        assert!(!is_tautology(&CnfElement::Const(false)).unwrap());
    }

    #[test]
    fn falsifying_valuation_is_genuine() {
        let p_implies_q = Implies(lit(P, false), lit(Q, false));
        let v = Oracle::default().falsifying_valuation(&p_implies_q).unwrap().unwrap();
        assert_eq!(v.get(&var(P)), Some(true));
        assert_eq!(v.get(&var(Q)), Some(false));
        assert!(!evaluate(&p_implies_q, &v).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let wide = d(&(1..=5).map(|i| (i, false)).collect::<Vec<_>>());
        match Oracle::with_cap(4).is_tautology(&wide) {
            Err(Error::OracleCap { cap: 4, found: 5 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sweeps_beyond_one_block() {
        // nine variables: the falsifying row sits in a later block
        let clause = d(&(1..=9).map(|i| (i, i == 9)).collect::<Vec<_>>());
        let v = Oracle::default().falsifying_valuation(&clause).unwrap().unwrap();
        assert!(!evaluate(&clause, &v).unwrap());
        assert_eq!(v.get(&var(9)), Some(true));
        assert!(Oracle::default()
            .is_contradiction(&[d(&[(9, false)]), d(&[(9, true)])][..])
            .unwrap());
    }

    #[test]
    fn interpolant_checks() {
        let g = example_pair();
        let shortcut = Interpolant::and(
            Interpolant::or(
                Interpolant::or(Interpolant::lit(lit(P, false)), Interpolant::lit(lit(R, false))),
                Interpolant::lit(lit(Q, false)),
            ),
            Interpolant::or(Interpolant::lit(lit(P, true)), Interpolant::lit(lit(Q, true))),
        );
        assert!(is_interpolant(&g.x, &g.y, &shortcut).unwrap());
        // X = {p}, Y = {p∧q}: ⊤ does not imply the consequent
        assert!(!is_interpolant(
            &[d(&[(P, false)])],
            &[c(&[(P, false), (Q, false)])],
            &Interpolant::VERUM
        )
        .unwrap());
        assert!(is_interpolant(&[CnfElement::Const(false)], &[], &Interpolant::FALSUM).unwrap());
        // vocabulary condition: s is not shared
        let uses_s = Interpolant::and(
            shortcut.clone(),
            Interpolant::or(Interpolant::lit(lit(S, false)), Interpolant::VERUM),
        );
        assert!(!is_interpolant(&g.x, &g.y, &uses_s).unwrap());
    }

    #[test]
    fn clausal_form_agrees_with_normal_form() {
        let g = example_pair();
        let z = g.to_clausal();
        for row in 0..16u32 {
            let v: Valuation = (1..=4).map(|i| (var(i), row >> (i - 1) & 1 == 1)).collect();
            assert_eq!(evaluate(&g, &v).unwrap(), evaluate(&z, &v).unwrap());
        }
    }
}
