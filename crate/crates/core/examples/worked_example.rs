//! The seven-clause worked example, eliminating p, q, r, q, q in that order
//! and printing every intermediate pair.

use craig_refute::{interpolate, parse_pair, simplify, Render, Semantics, Strategy, Style, Vocabulary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = "[D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.]";
    let y = "[C.p..Nr., C.Np..q., C.p..Nq.]";
    let g = parse_pair(x, y)?;

    let mut vocab = Vocabulary::from_variables(&g.variables());
    let order = ["p", "q", "r", "q", "q"].iter().map(|n| vocab.named(n)).collect();
    let out = interpolate(&g.x, &g.y, &Strategy::Scripted(order))?;

    print!("{}", out.trace);
    println!();
    println!("eliminations: {}", out.trace.elimination_count());
    println!("interpolant:  {}", out.interpolant.render(Style::Infix));
    println!("simplified:   {}", simplify(&out.interpolant).render(Style::Infix));

    // a random order gives a different but equally valid interpolant
    let other = interpolate(&g.x, &g.y, &Strategy::SeededRandom(7))?;
    println!("seed 7:       {}", simplify(&other.interpolant).render(Style::Infix));
    Ok(())
}
