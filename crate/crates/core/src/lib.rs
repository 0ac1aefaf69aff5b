//! Craig interpolants for propositional implications `X → Y`, with `X` in
//! conjunctive and `Y` in disjunctive normal form, computed by repeatedly
//! eliminating a variable that occurs with both signs in different clauses.
//!
//! ```
//! use craig_refute::{interpolate, parse_pair, simplify, Render, Strategy, Style};
//!
//! let g = parse_pair("[D.p.]", "[C.p.]").unwrap();
//! let out = interpolate(&g.x, &g.y, &Strategy::FirstAvailable).unwrap();
//! assert_eq!(out.interpolant.render(Style::Infix), "((p ∨ ⊥) ∧ (¬p ∨ ⊤))");
//! assert_eq!(simplify(&out.interpolant).render(Style::Infix), "p");
//! ```
//!
//! Validity questions are answered by [`Oracle`], a truth-table evaluator
//! that refuses formulas with more than [`DEFAULT_ORACLE_CAP`] variables
//! unless configured otherwise.

pub mod bench;
pub mod cli;
pub mod error;
pub mod generator;
pub mod interpolate;
pub mod logic;
pub mod metrics;
pub mod normalize;
pub mod notation;
pub mod refutation;
pub mod semantics;

pub use error::{Error, Result};
pub use generator::{GenConfig, GeneratedPair, Generator};
pub use interpolate::{
    assemble, interpolate, interpolate_with, simplify, split, AssemblyCase, BaseCase, EliminationTrace, Interpolant,
    InterpolateOptions, Interpolation, Split, SplitPartition, Strategy,
};
pub use logic::{complement_side, ClausalForm, CnfElement, DnfElement, Literal, NormalFormPair, Variable};
pub use metrics::{measure, Measure, SizeMetrics};
pub use normalize::{from_clausal, normal_form, to_cnf, to_dnf, Formula};
pub use notation::{
    parse_cnf_list, parse_dnf_list, parse_formula, parse_interpolant, parse_pair, parse_variable, render_refutation,
    render_trace, ParseError, Render, Style, Vocabulary,
};
pub use refutation::{apply_rule, is_refutation_axiom, refute, Branch, RefutationTree};
pub use semantics::{evaluate, is_interpolant, is_tautology, Oracle, Semantics, Valuation, DEFAULT_ORACLE_CAP};
