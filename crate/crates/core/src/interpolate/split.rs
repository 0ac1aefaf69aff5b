use crate::error::{Error, Result};
use crate::logic::{CnfElement, DnfElement, NormalFormPair, Variable};

/// The pieces of `X → Y` around an eliminated variable `v`: remainders of
/// the clauses that mentioned `v` or `¬v`, and the untouched rest.
///
/// A clause holding both `v` and `¬v` shows up in both `a_rem` and `b_rem`,
/// each time with only the matching literal stripped (likewise for `Y`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitPartition {
    /// `X` clauses that contained `v`, with every `v` removed.
    pub a_rem: Vec<CnfElement>,
    /// `X` clauses that contained `¬v`, with every `¬v` removed.
    pub b_rem: Vec<CnfElement>,
    /// `Y` co-clauses that contained `¬v`, with every `¬v` removed.
    pub c_rem: Vec<DnfElement>,
    /// `Y` co-clauses that contained `v`, with every `v` removed.
    pub d_rem: Vec<DnfElement>,
    pub e1: Vec<CnfElement>,
    pub e2: Vec<DnfElement>,
}

/// Which of the three assembly rules applies at an elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssemblyCase {
    /// `v` occurs nowhere in `Y`: `I1 ∨ I2`.
    Or,
    /// `v` occurs nowhere in `X`: `I1 ∧ I2`.
    And,
    /// `(v ∨ I1) ∧ (¬v ∨ I2)`.
    Standard,
}

impl AssemblyCase {
    pub fn label(self) -> &'static str {
        match self {
            AssemblyCase::Or => "or-case",
            AssemblyCase::And => "and-case",
            AssemblyCase::Standard => "standard",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub variable: Variable,
    pub partition: SplitPartition,
    /// `a_rem, e1 → c_rem, e2`
    pub g1: NormalFormPair,
    /// `b_rem, e1 → d_rem, e2`
    pub g2: NormalFormPair,
}

impl Split {
    pub fn case(&self) -> AssemblyCase {
        let p = &self.partition;
        let in_x = !p.a_rem.is_empty() || !p.b_rem.is_empty();
        let in_y = !p.c_rem.is_empty() || !p.d_rem.is_empty();
        if !in_y {
            AssemblyCase::Or
        } else if !in_x {
            AssemblyCase::And
        } else {
            AssemblyCase::Standard
        }
    }
}

/// Eliminates `v` from `g`, producing the two premises whose validity
/// together is equivalent to that of `g`.
pub fn split(g: &NormalFormPair, v: &Variable) -> Result<Split> {
    if !g.to_clausal().eliminable_variables().contains(v) {
        return Err(Error::NotEliminable(v.clone()));
    }
    Ok(split_unchecked(g, v))
}

pub(crate) fn split_unchecked(g: &NormalFormPair, v: &Variable) -> Split {
    let pos = v.positive();
    let neg = v.negative();
    let mut p = SplitPartition::default();
    for clause in &g.x {
        let (has_pos, has_neg) = (clause.contains(&pos), clause.contains(&neg));
        if has_pos {
            p.a_rem.push(clause.strip(&pos));
        }
        if has_neg {
            p.b_rem.push(clause.strip(&neg));
        }
        if !has_pos && !has_neg {
            p.e1.push(clause.clone());
        }
    }
    for conj in &g.y {
        let (has_pos, has_neg) = (conj.contains(&pos), conj.contains(&neg));
        if has_neg {
            p.c_rem.push(conj.strip(&neg));
        }
        if has_pos {
            p.d_rem.push(conj.strip(&pos));
        }
        if !has_pos && !has_neg {
            p.e2.push(conj.clone());
        }
    }
    let join_x = |rem: &[CnfElement]| rem.iter().chain(&p.e1).cloned().collect::<Vec<_>>();
    let join_y = |rem: &[DnfElement]| rem.iter().chain(&p.e2).cloned().collect::<Vec<_>>();
    let g1 = NormalFormPair::new(join_x(&p.a_rem), join_y(&p.c_rem));
    let g2 = NormalFormPair::new(join_x(&p.b_rem), join_y(&p.d_rem));
    Split {
        variable: v.clone(),
        partition: p,
        g1,
        g2,
    }
}
