use std::collections::BTreeSet;

use crate::logic::{Literal, Variable};

/// Formula tree produced by the interpolation procedure: literals and
/// constants combined with binary `∧`/`∨`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Interpolant {
    Const(bool),
    Lit(Literal),
    And(Box<Interpolant>, Box<Interpolant>),
    Or(Box<Interpolant>, Box<Interpolant>),
}

impl Interpolant {
    pub const FALSUM: Interpolant = Interpolant::Const(false);
    pub const VERUM: Interpolant = Interpolant::Const(true);

    pub fn and(a: Interpolant, b: Interpolant) -> Self {
        Interpolant::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Interpolant, b: Interpolant) -> Self {
        Interpolant::Or(Box::new(a), Box::new(b))
    }

    pub fn lit(l: Literal) -> Self {
        Interpolant::Lit(l)
    }

    pub fn node_count(&self) -> usize {
        match self {
            Interpolant::Const(_) | Interpolant::Lit(_) => 1,
            Interpolant::And(a, b) | Interpolant::Or(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut BTreeSet<Variable>) {
        match self {
            Interpolant::Const(_) => {}
            Interpolant::Lit(l) => {
                out.insert(l.var.clone());
            }
            Interpolant::And(a, b) | Interpolant::Or(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    pub fn contains_constant(&self) -> bool {
        match self {
            Interpolant::Const(_) => true,
            Interpolant::Lit(_) => false,
            Interpolant::And(a, b) | Interpolant::Or(a, b) => a.contains_constant() || b.contains_constant(),
        }
    }

    pub fn as_const(&self) -> Option<bool> {
        match self {
            Interpolant::Const(t) => Some(*t),
            _ => None,
        }
    }
}
