//! Inputs that empty out one side after a single elimination, including a
//! clause holding both p and ¬p.

use craig_refute::{interpolate, parse_pair, simplify, split, Render, Semantics, Strategy, Style, Vocabulary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (x, y) in [
        ("[D.p.]", "[C.p.]"),
        ("[D.p..Np., D.p..p.]", "[C.p.]"),
        ("[D.p.]", "[C.Np., .1.]"),
        ("[]", "[.1.]"),
    ] {
        let g = parse_pair(x, y)?;
        println!("{}", g.render(Style::Bracket));
        let mut vocab = Vocabulary::from_variables(&g.variables());
        if let Ok(s) = split(&g, &vocab.named("p")) {
            println!(
                "  -> {}  |  {}",
                s.g1.render(Style::Bracket),
                s.g2.render(Style::Bracket)
            );
        }
        let out = interpolate(&g.x, &g.y, &Strategy::FirstAvailable)?;
        println!(
            "  interpolant {}  ~  {}",
            out.interpolant.render(Style::Infix),
            simplify(&out.interpolant).render(Style::Infix)
        );
    }
    Ok(())
}
