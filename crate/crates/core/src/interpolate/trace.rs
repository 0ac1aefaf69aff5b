use std::fmt;

use super::{assemble, AssemblyCase, Interpolant};
use crate::logic::{NormalFormPair, Variable};

/// Which terminal branch of the procedure produced a leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseCase {
    /// Sides share no variable and both are non-empty.
    NoSharedVariables,
    /// Sides share variables but no complementary pair is left.
    NoPairs,
    XEmpty,
    YEmpty,
}

impl BaseCase {
    pub fn label(self) -> &'static str {
        match self {
            BaseCase::NoSharedVariables => "no-shared-vars",
            BaseCase::NoPairs => "no-pairs",
            BaseCase::XEmpty => "x-empty",
            BaseCase::YEmpty => "y-empty",
        }
    }
}

/// The elimination tree behind an interpolant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EliminationTrace {
    Leaf {
        pair: NormalFormPair,
        base_case: BaseCase,
        result: bool,
    },
    Node {
        pair: NormalFormPair,
        eliminated: Variable,
        case: AssemblyCase,
        g1: Box<EliminationTrace>,
        g2: Box<EliminationTrace>,
    },
}

impl EliminationTrace {
    pub fn pair(&self) -> &NormalFormPair {
        match self {
            EliminationTrace::Leaf { pair, .. } | EliminationTrace::Node { pair, .. } => pair,
        }
    }

    pub fn elimination_count(&self) -> usize {
        match self {
            EliminationTrace::Leaf { .. } => 0,
            EliminationTrace::Node { g1, g2, .. } => 1 + g1.elimination_count() + g2.elimination_count(),
        }
    }

    /// Eliminated variables in depth-first, `G1`-first order; feeding this
    /// back as a scripted strategy replays the same tree.
    pub fn elimination_order(&self) -> Vec<Variable> {
        let mut out = Vec::new();
        self.visit(&mut |node| {
            if let EliminationTrace::Node { eliminated, .. } = node {
                out.push(eliminated.clone());
            }
        });
        out
    }

    /// Rebuilds the interpolant from the recorded leaves and cases.
    pub fn interpolant(&self) -> Interpolant {
        match self {
            EliminationTrace::Leaf { result, .. } => Interpolant::Const(*result),
            EliminationTrace::Node {
                eliminated,
                case,
                g1,
                g2,
                ..
            } => assemble(eliminated, *case, g1.interpolant(), g2.interpolant()),
        }
    }

    /// Pre-order walk.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a EliminationTrace)) {
        f(self);
        if let EliminationTrace::Node { g1, g2, .. } = self {
            g1.visit(f);
            g2.visit(f);
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            EliminationTrace::Leaf { .. } => 0,
            EliminationTrace::Node { g1, g2, .. } => 1 + g1.depth().max(g2.depth()),
        }
    }
}

pub fn elimination_count(trace: &EliminationTrace) -> usize {
    trace.elimination_count()
}

impl fmt::Display for EliminationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::render_trace(self))
    }
}
