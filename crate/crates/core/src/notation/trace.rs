use std::fmt::Write;

use super::{Render, Style};
use crate::interpolate::EliminationTrace;
use crate::refutation::{Branch, RefutationTree};

/// One line per subproblem, children indented two spaces below their parent:
///
/// ```text
/// X:  [D.p.] Y:  [C.p.]  eliminate p (standard)
///   X:  [.0.] Y:  []  => .0. (y-empty)
///   X:  [] Y:  [.1.]  => .1. (x-empty)
/// ```
pub fn render_trace(trace: &EliminationTrace) -> String {
    let mut out = String::new();
    trace_lines(trace, 0, &mut out);
    out
}

fn trace_lines(trace: &EliminationTrace, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match trace {
        EliminationTrace::Leaf {
            pair,
            base_case,
            result,
        } => {
            let constant = if *result { ".1." } else { ".0." };
            let _ = writeln!(
                out,
                "{pad}{}  => {constant} ({})",
                pair.render(Style::Bracket),
                base_case.label()
            );
        }
        EliminationTrace::Node {
            pair,
            eliminated,
            case,
            g1,
            g2,
        } => {
            let _ = writeln!(
                out,
                "{pad}{}  eliminate {eliminated} ({})",
                pair.render(Style::Bracket),
                case.label()
            );
            trace_lines(g1, depth + 1, out);
            trace_lines(g2, depth + 1, out);
        }
    }
}

/// A refutation is a single path, so it prints flat:
///
/// ```text
/// Z:  [D.p..q., D.Nq.]  F2 on q
/// Z:  [D.p.]  axiom
/// ```
pub fn render_refutation(tree: &RefutationTree) -> String {
    let mut out = String::new();
    let mut node = tree;
    loop {
        match node {
            RefutationTree::Axiom(z) => {
                let _ = writeln!(out, "{}  axiom", z.render(Style::Bracket));
                return out;
            }
            RefutationTree::Step {
                z,
                eliminated,
                branch,
                child,
            } => {
                let rule = match branch {
                    Branch::F1 => "F1",
                    Branch::F2 => "F2",
                };
                let _ = writeln!(out, "{}  {rule} on {eliminated}", z.render(Style::Bracket));
                node = child;
            }
        }
    }
}
