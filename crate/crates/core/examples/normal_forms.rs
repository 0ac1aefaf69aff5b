//! Bringing arbitrary formulas into the required shape: the antecedent to
//! CNF, the consequent to DNF, then interpolating.

use craig_refute::{interpolate, normal_form, parse_formula, simplify, Render, Strategy, Style, Vocabulary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut vocab = Vocabulary::new();
    let a = parse_formula("(p → q) ∧ (q → r) ∧ p", &mut vocab)?;
    let b = parse_formula("r ∨ (s ∧ ¬s)", &mut vocab)?;
    let g = normal_form(&a, &b);
    println!("X = {}", g.x.render(Style::Bracket));
    println!("Y = {}", g.y.render(Style::Bracket));

    let out = interpolate(&g.x, &g.y, &Strategy::FirstAvailable)?;
    println!("interpolant: {}", simplify(&out.interpolant).render(Style::Infix));

    let z = g.to_clausal();
    println!("clausal form: {} (rank {})", z.render(Style::Bracket), z.rank());
    Ok(())
}
