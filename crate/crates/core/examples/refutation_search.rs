//! Deciding validity by searching for a refutation of the clausal form. A
//! found refutation doubles as a countermodel.

use craig_refute::{parse_cnf_list, parse_pair, refute, render_refutation, ClausalForm, Vocabulary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // X → Y is valid iff Z = X, Y* has no refutation
    let g = parse_pair("[D.p..q., D.Np..r.]", "[C.q., C.r.]")?;
    match refute(&g.to_clausal()) {
        None => println!("[D.p..q., D.Np..r.] → [C.q., C.r.] is valid"),
        Some(t) => println!("unexpected refutation:\n{}", render_refutation(&t)),
    }

    let mut vocab = Vocabulary::new();
    for text in [
        "[D.p..q., D.Np., D.Nq..r.]",
        "[D.p., D.Np.]",
        "[D.p..Nq., D.q..Nr., D.r.]",
    ] {
        let z = ClausalForm::new(parse_cnf_list(text, &mut vocab)?);
        println!("\n{text} → ⊥");
        match refute(&z) {
            None => println!("  valid, no refutation exists"),
            Some(tree) => {
                print!("{}", render_refutation(&tree));
                println!("  countermodel: {}", tree.countermodel());
            }
        }
    }
    Ok(())
}
