//! Constant folding on interpolants read from either notation.

use craig_refute::{parse_formula, parse_interpolant, simplify, Render, Style, Vocabulary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut vocab = Vocabulary::new();
    let raw = [
        parse_interpolant("C(D(.p., .0.), D(.Np., .1.))", &mut vocab)?,
        parse_formula("(p ∨ ((q ∨ ⊥) ∧ (¬q ∨ ⊤))) ∧ (¬p ∨ ((r ∨ ⊥) ∧ (¬r ∨ ⊥)))", &mut vocab)?.nnf(),
        parse_formula("(q ∧ ⊥) ∨ ⊥", &mut vocab)?.nnf(),
    ];
    for i in raw {
        println!("{}\n  => {}", i.render(Style::Infix), simplify(&i).render(Style::Infix));
    }
    Ok(())
}
