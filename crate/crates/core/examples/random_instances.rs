//! Drawing valid pairs from the seeded generator. Generated variables are
//! named P(i,n), variable i of n.

use craig_refute::{interpolate, simplify, GenConfig, Generator, Render, Strategy, Style};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let small = Generator::new(GenConfig::new(3, 3, 3, 42).up_to(true))?;
    for generated in small.take(3) {
        let generated = generated?;
        let g = &generated.pair;
        let out = interpolate(&g.x, &g.y, &Strategy::SeededRandom(42))?;
        println!("{}   ({} draws)", g.render(Style::Bracket), generated.attempts);
        println!("  I = {}", simplify(&out.interpolant).render(Style::Infix));
    }

    let mut wide = Generator::new(GenConfig::new(2, 4, 12, 1))?;
    println!("\n{}", wide.gen_pair()?.pair.render(Style::Bracket));
    Ok(())
}
