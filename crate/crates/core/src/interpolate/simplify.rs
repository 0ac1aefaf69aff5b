use super::Interpolant;

/// Removes constants using `A∨⊥ = A`, `A∨⊤ = ⊤`, `A∧⊤ = A`, `A∧⊥ = ⊥` and
/// their mirror images. A single bottom-up pass reaches the fixpoint: the
/// result is either a constant or constant-free.
pub fn simplify(i: &Interpolant) -> Interpolant {
    match i {
        Interpolant::Const(_) | Interpolant::Lit(_) => i.clone(),
        Interpolant::Or(a, b) => match (simplify(a), simplify(b)) {
            (Interpolant::Const(true), _) | (_, Interpolant::Const(true)) => Interpolant::VERUM,
            (Interpolant::Const(false), x) | (x, Interpolant::Const(false)) => x,
            (x, y) => Interpolant::or(x, y),
        },
        Interpolant::And(a, b) => match (simplify(a), simplify(b)) {
            (Interpolant::Const(false), _) | (_, Interpolant::Const(false)) => Interpolant::FALSUM,
            (Interpolant::Const(true), x) | (x, Interpolant::Const(true)) => x,
            (x, y) => Interpolant::and(x, y),
        },
    }
}
