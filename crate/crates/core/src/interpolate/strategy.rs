use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logic::Variable;

/// How the variable to eliminate is picked when several qualify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Uniform choice among eliminable variables. Each node draws from its
    /// own ChaCha8 stream; child seeds are derived from the parent seed and
    /// the branch number, so results do not depend on evaluation order.
    SeededRandom(u64),
    /// Variables in the given order, consumed depth first, `G1` before `G2`.
    Scripted(Vec<Variable>),
    /// The lowest-indexed eliminable variable.
    FirstAvailable,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::SeededRandom(seed) => write!(f, "random (seed {seed})"),
            Strategy::FirstAvailable => f.write_str("first"),
            Strategy::Scripted(order) => {
                f.write_str("scripted:")?;
                for (i, v) in order.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// SplitMix64 finalizer, used to derive per-branch seeds.
pub fn derive_seed(seed: u64, branch: u64) -> u64 {
    let mut z = seed
        .wrapping_add(branch.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) struct Chooser<'a> {
    strategy: &'a Strategy,
    cursor: usize,
}

impl<'a> Chooser<'a> {
    pub(crate) fn new(strategy: &'a Strategy) -> Self {
        Self { strategy, cursor: 0 }
    }

    pub(crate) fn root_seed(&self) -> u64 {
        match self.strategy {
            Strategy::SeededRandom(seed) => *seed,
            _ => 0,
        }
    }

    pub(crate) fn choose(&mut self, candidates: &BTreeSet<Variable>, seed: u64) -> Result<Variable> {
        debug_assert!(!candidates.is_empty());
        match self.strategy {
            Strategy::FirstAvailable => Ok(candidates.iter().next().cloned().expect("non-empty")),
            Strategy::SeededRandom(_) => {
                let k = ChaCha8Rng::seed_from_u64(seed).gen_range(0..candidates.len());
                Ok(candidates.iter().nth(k).cloned().expect("index in range"))
            }
            Strategy::Scripted(order) => {
                let v = order.get(self.cursor).ok_or(Error::ScriptExhausted)?;
                self.cursor += 1;
                // pick up the caller's name for display
                candidates
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::NotEliminable(v.clone()))
            }
        }
    }
}
