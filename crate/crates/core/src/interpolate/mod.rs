//! The recursive interpolation procedure.
//!
//! Given a valid `∧X → ∨Y` with `X` in CNF and `Y` in DNF, repeatedly
//! eliminate a variable that occurs positively and negatively in two
//! different clauses of `X, Y*`, splitting the problem into two smaller
//! valid implications, and combine the interpolants of the halves.

mod interpolant;
mod simplify;
mod split;
mod strategy;
mod trace;

pub use interpolant::Interpolant;
pub use simplify::simplify;
pub use split::{split, AssemblyCase, Split, SplitPartition};
pub use strategy::{derive_seed, Strategy};
pub use trace::{elimination_count, BaseCase, EliminationTrace};

use crate::error::{Error, Result};
use crate::logic::{CnfElement, DnfElement, NormalFormPair, Variable};
use crate::semantics::Oracle;
use strategy::Chooser;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InterpolateOptions {
    /// Reject inputs where `X → Y` is not valid. The procedure is only
    /// meaningful for valid inputs; turn off when validity is known.
    pub check_precondition: bool,
    /// Used for the precondition and for the base-case satisfiability tests.
    pub oracle: Oracle,
}

impl Default for InterpolateOptions {
    fn default() -> Self {
        Self {
            check_precondition: true,
            oracle: Oracle::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpolation {
    pub interpolant: Interpolant,
    pub trace: EliminationTrace,
}

pub fn assemble(v: &Variable, case: AssemblyCase, i1: Interpolant, i2: Interpolant) -> Interpolant {
    match case {
        AssemblyCase::Or => Interpolant::or(i1, i2),
        AssemblyCase::And => Interpolant::and(i1, i2),
        AssemblyCase::Standard => Interpolant::and(
            Interpolant::or(Interpolant::lit(v.positive()), i1),
            Interpolant::or(Interpolant::lit(v.negative()), i2),
        ),
    }
}

pub fn interpolate(x: &[CnfElement], y: &[DnfElement], strategy: &Strategy) -> Result<Interpolation> {
    interpolate_with(x, y, strategy, &InterpolateOptions::default())
}

pub fn interpolate_with(
    x: &[CnfElement],
    y: &[DnfElement],
    strategy: &Strategy,
    options: &InterpolateOptions,
) -> Result<Interpolation> {
    if x.is_empty() && y.is_empty() {
        return Err(Error::BothSidesEmpty);
    }
    let root = NormalFormPair::new(x.to_vec(), y.to_vec());
    if options.check_precondition {
        if let Some(valuation) = options.oracle.falsifying_valuation(&root)? {
            return Err(Error::NotValid(valuation));
        }
    }
    let mut chooser = Chooser::new(strategy);
    let seed = chooser.root_seed();
    let (interpolant, trace) = solve(root, seed, &mut chooser, &options.oracle)?;
    Ok(Interpolation { interpolant, trace })
}

fn solve(
    g: NormalFormPair,
    seed: u64,
    chooser: &mut Chooser<'_>,
    oracle: &Oracle,
) -> Result<(Interpolant, EliminationTrace)> {
    let base_case = if !g.shared_variables().is_empty() {
        let z = g.to_clausal();
        let candidates = z.eliminable_variables();
        if !candidates.is_empty() {
            let v = chooser.choose(&candidates, seed)?;
            let s = split::split_unchecked(&g, &v);
            let rank = candidates.len();
            assert!(
                s.g1.to_clausal().rank() < rank && s.g2.to_clausal().rank() < rank,
                "rank did not decrease when eliminating {v}"
            );
            let case = s.case();
            let (i1, t1) = solve(s.g1, derive_seed(seed, 1), chooser, oracle)?;
            let (i2, t2) = solve(s.g2, derive_seed(seed, 2), chooser, oracle)?;
            let trace = EliminationTrace::Node {
                pair: g,
                eliminated: v.clone(),
                case,
                g1: Box::new(t1),
                g2: Box::new(t2),
            };
            return Ok((assemble(&v, case, i1, i2), trace));
        }
        BaseCase::NoPairs
    } else {
        match (g.x.is_empty(), g.y.is_empty()) {
            (false, false) => BaseCase::NoSharedVariables,
            (false, true) => BaseCase::YEmpty,
            (true, _) => {
                assert!(!g.y.is_empty(), "both sides of a subproblem are empty");
                BaseCase::XEmpty
            }
        }
    };
    let result = match base_case {
        BaseCase::XEmpty => true,
        BaseCase::YEmpty => false,
        BaseCase::NoPairs | BaseCase::NoSharedVariables => !oracle.is_contradiction(&g.x[..])?,
    };
    let trace = EliminationTrace::Leaf {
        pair: g,
        base_case,
        result,
    };
    Ok((Interpolant::Const(result), trace))
}
