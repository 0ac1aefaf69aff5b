//! Refutation search over clausal forms `Z → ⊥`.
//!
//! `Z → ⊥` fails to be valid exactly when there is a refutation: a chain of
//! eliminations ending in an axiom, a clause set of rank 0 without `⊥`.
//! Eliminating `v` offers two rules; `F1` keeps the clauses that contained
//! `v` (minus `v`) and `F2` those that contained `¬v` (minus `¬v`), each
//! together with the clauses that mention neither. `Z → ⊥` is valid iff both
//! `F1` and `F2` are, so a refutation needs only one of them.
//!
//! `⊤` elements are left in place; they carry no literals and therefore
//! never take part in an elimination or affect the rank.

use crate::error::{Error, Result};
use crate::logic::{ClausalForm, CnfElement, Variable};
use crate::semantics::Valuation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    F1,
    F2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefutationTree {
    Axiom(ClausalForm),
    Step {
        z: ClausalForm,
        eliminated: Variable,
        branch: Branch,
        child: Box<RefutationTree>,
    },
}

impl RefutationTree {
    pub fn root(&self) -> &ClausalForm {
        match self {
            RefutationTree::Axiom(z) | RefutationTree::Step { z, .. } => z,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            RefutationTree::Axiom(_) => 0,
            RefutationTree::Step { child, .. } => 1 + child.steps(),
        }
    }

    /// Re-derives every step and checks the leaf is an axiom.
    pub fn is_well_formed(&self) -> bool {
        match self {
            RefutationTree::Axiom(z) => is_refutation_axiom(z),
            RefutationTree::Step {
                z,
                eliminated,
                branch,
                child,
            } => apply_rule(z, eliminated, *branch).is_ok_and(|next| &next == child.root()) && child.is_well_formed(),
        }
    }

    /// A valuation of the root's variables satisfying every clause of the
    /// root, read off the refutation: `F1` means `v` is false, `F2` true.
    pub fn countermodel(&self) -> Valuation {
        let mut valuation = Valuation::new();
        for v in crate::semantics::Semantics::variables(self.root()) {
            valuation.set(v, false);
        }
        let mut node = self;
        loop {
            match node {
                RefutationTree::Axiom(z) => {
                    // rank 0: no variable occurs positively in one clause and
                    // negatively in another, so making every positive
                    // occurrence true satisfies each clause
                    for clause in z.clauses() {
                        for l in clause.literals() {
                            if l.is_positive() {
                                valuation.set(l.var.clone(), true);
                            }
                        }
                    }
                    return valuation;
                }
                RefutationTree::Step {
                    eliminated,
                    branch,
                    child,
                    ..
                } => {
                    valuation.set(eliminated.clone(), *branch == Branch::F2);
                    node = child;
                }
            }
        }
    }
}

pub fn is_refutation_axiom(z: &ClausalForm) -> bool {
    z.rank() == 0 && !z.contains_falsum()
}

pub fn apply_rule(z: &ClausalForm, v: &Variable, branch: Branch) -> Result<ClausalForm> {
    if !z.eliminable_variables().contains(v) {
        return Err(Error::NotEliminable(v.clone()));
    }
    Ok(apply_unchecked(z, v, branch))
}

fn apply_unchecked(z: &ClausalForm, v: &Variable, branch: Branch) -> ClausalForm {
    let keep = match branch {
        Branch::F1 => v.positive(),
        Branch::F2 => v.negative(),
    };
    let drop = keep.complement();
    let mut stripped = Vec::new();
    let mut rest = Vec::new();
    for clause in z.clauses() {
        if clause.contains(&keep) {
            stripped.push(clause.strip(&keep));
        } else if !clause.contains(&drop) {
            rest.push(clause.clone());
        }
    }
    stripped.extend(rest);
    ClausalForm::new(stripped)
}

/// Searches for a refutation, eliminating the lowest-indexed eliminable
/// variable and trying `F1` before `F2`. `None` means `Z → ⊥` is valid.
/// `⊤` elements are dropped before the search; the returned tree starts
/// from the remaining clauses.
pub fn refute(z: &ClausalForm) -> Option<RefutationTree> {
    let z = ClausalForm::new(
        z.clauses()
            .iter()
            .filter(|c| **c != CnfElement::Const(true))
            .cloned()
            .collect(),
    );
    search(&z)
}

fn search(z: &ClausalForm) -> Option<RefutationTree> {
    if is_refutation_axiom(z) {
        return Some(RefutationTree::Axiom(z.clone()));
    }
    // a ⊥ clause survives every rule, so no axiom is reachable
    if z.contains_falsum() {
        return None;
    }
    let eliminable = z.eliminable_variables();
    let v = eliminable.iter().next().expect("rank > 0");
    let rank = eliminable.len();
    [Branch::F1, Branch::F2].into_iter().find_map(|branch| {
        let next = apply_unchecked(z, v, branch);
        assert!(next.rank() < rank, "rank did not decrease when eliminating {v}");
        search(&next).map(|child| RefutationTree::Step {
            z: z.clone(),
            eliminated: v.clone(),
            branch,
            child: Box::new(child),
        })
    })
}

/// `Z → ⊥` is valid.
pub fn is_valid(z: &ClausalForm) -> bool {
    refute(z).is_none()
}
