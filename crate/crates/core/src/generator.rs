//! Random valid implications `X → Y` by rejection sampling.
//!
//! Both sides draw from the same pool of `max_vars` variables, rendered
//! `P(i,max_vars)`. Every element picks its length uniformly in
//! `[1, max_vars]`, that many distinct variables (kept in index order), and
//! negates each independently. Candidates that are not tautologies are
//! discarded and regenerated.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logic::{CnfElement, DnfElement, Literal, NormalFormPair, Variable};
use crate::semantics::Oracle;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenConfig {
    pub conjuncts: usize,
    pub disjuncts: usize,
    pub max_vars: usize,
    pub negation_prob: f64,
    pub seed: u64,
    /// When set, each candidate draws its side sizes uniformly from
    /// `[1, conjuncts]` and `[1, disjuncts]` instead of using them exactly.
    pub up_to: bool,
    pub attempt_limit: u64,
    pub oracle: Oracle,
}

impl GenConfig {
    pub fn new(conjuncts: usize, disjuncts: usize, max_vars: usize, seed: u64) -> Self {
        Self {
            conjuncts,
            disjuncts,
            max_vars,
            negation_prob: 0.5,
            seed,
            up_to: false,
            attempt_limit: 1_000_000,
            oracle: Oracle::default(),
        }
    }

    pub fn up_to(mut self, up_to: bool) -> Self {
        self.up_to = up_to;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.conjuncts == 0 || self.disjuncts == 0 {
            return bad("conjunct and disjunct counts must be positive".into());
        }
        if self.max_vars == 0 {
            return bad("max_vars must be positive".into());
        }
        if self.max_vars > self.oracle.cap {
            return bad(format!(
                "max_vars {} exceeds the oracle cap {}",
                self.max_vars, self.oracle.cap
            ));
        }
        if !(0.0..=1.0).contains(&self.negation_prob) {
            return bad(format!("negation probability {} outside [0, 1]", self.negation_prob));
        }
        if self.attempt_limit == 0 {
            return bad("attempt limit must be positive".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedPair {
    pub pair: NormalFormPair,
    /// Candidates drawn, including the accepted one.
    pub attempts: u64,
}

pub struct Generator {
    config: GenConfig,
    pool: Vec<Variable>,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(config: GenConfig) -> Result<Self> {
        config.validate()?;
        let total = config.max_vars as u32;
        Ok(Self {
            pool: (1..=total).map(|i| Variable::numbered(i, total)).collect(),
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            config,
        })
    }

    pub fn config(&self) -> &GenConfig {
        &self.config
    }

    pub fn variables(&self) -> &[Variable] {
        &self.pool
    }

    fn literals(&mut self) -> Vec<Literal> {
        let n = self.pool.len();
        let k = self.rng.gen_range(1..=n);
        let mut picked = sample(&mut self.rng, n, k).into_vec();
        picked.sort_unstable();
        picked
            .into_iter()
            .map(|i| Literal::new(self.pool[i].clone(), self.rng.gen_bool(self.config.negation_prob)))
            .collect()
    }

    pub fn gen_cnf_clause(&mut self) -> CnfElement {
        CnfElement::Disj(self.literals())
    }

    pub fn gen_dnf_clause(&mut self) -> DnfElement {
        DnfElement::Conj(self.literals())
    }

    fn side_len(&mut self, n: usize) -> usize {
        if self.config.up_to {
            self.rng.gen_range(1..=n)
        } else {
            n
        }
    }

    /// Draws candidates until one is valid.
    pub fn gen_pair(&mut self) -> Result<GeneratedPair> {
        for attempts in 1..=self.config.attempt_limit {
            let c = self.side_len(self.config.conjuncts);
            let d = self.side_len(self.config.disjuncts);
            let x = (0..c).map(|_| self.gen_cnf_clause()).collect();
            let y = (0..d).map(|_| self.gen_dnf_clause()).collect();
            let pair = NormalFormPair::new(x, y);
            if self.config.oracle.is_tautology(&pair)? {
                return Ok(GeneratedPair { pair, attempts });
            }
        }
        Err(Error::AttemptLimit(self.config.attempt_limit))
    }
}

impl Iterator for Generator {
    type Item = Result<GeneratedPair>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.gen_pair())
    }
}
