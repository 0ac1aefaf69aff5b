//! An instance needing exactly two eliminations, shown with the choice
//! scripted and then under every strategy.

use craig_refute::{interpolate, is_interpolant, parse_pair, Render, Semantics, Strategy, Style, Vocabulary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_pair("[D.p..Nq., D.Np..Nr., D.q.]", "[C.q..Nr., C.Nq..Ns., C.s.]")?;
    let mut vocab = Vocabulary::from_variables(&g.variables());
    let scripted = Strategy::Scripted(vec![vocab.named("q"), vocab.named("r")]);

    for strategy in [scripted, Strategy::FirstAvailable, Strategy::SeededRandom(3)] {
        let out = interpolate(&g.x, &g.y, &strategy)?;
        println!("{strategy}:");
        print!("{}", out.trace);
        println!(
            "  {} eliminations, {}  (checked: {})\n",
            out.trace.elimination_count(),
            out.interpolant.render(Style::Infix),
            is_interpolant(&g.x, &g.y, &out.interpolant)?
        );
    }
    Ok(())
}
