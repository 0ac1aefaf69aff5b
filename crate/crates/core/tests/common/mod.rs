// Shared test support: an evaluator written independently of the library's
// bitsliced `Semantics`, a few fixtures, and proptest strategies.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use craig_refute::{
    ClausalForm, CnfElement, DnfElement, Formula, Interpolant, Literal, NormalFormPair, Variable, Vocabulary,
};
use proptest::prelude::*;

pub type Assignment = HashMap<u32, bool>;

pub fn lit_value(l: &Literal, a: &Assignment) -> bool {
    a[&l.var.index()] != l.negated
}

pub fn clause_value(c: &CnfElement, a: &Assignment) -> bool {
    match c {
        CnfElement::Const(t) => *t,
        CnfElement::Disj(ls) => ls.iter().any(|l| lit_value(l, a)),
    }
}

pub fn coclause_value(c: &DnfElement, a: &Assignment) -> bool {
    match c {
        DnfElement::Const(t) => *t,
        DnfElement::Conj(ls) => ls.iter().all(|l| lit_value(l, a)),
    }
}

pub fn cnf_value(x: &[CnfElement], a: &Assignment) -> bool {
    x.iter().all(|c| clause_value(c, a))
}

pub fn dnf_value(y: &[DnfElement], a: &Assignment) -> bool {
    y.iter().any(|c| coclause_value(c, a))
}

pub fn pair_value(g: &NormalFormPair, a: &Assignment) -> bool {
    !cnf_value(&g.x, a) || dnf_value(&g.y, a)
}

/// `Z → ⊥`
pub fn clausal_value(z: &ClausalForm, a: &Assignment) -> bool {
    !cnf_value(z.clauses(), a)
}

pub fn interpolant_value(i: &Interpolant, a: &Assignment) -> bool {
    match i {
        Interpolant::Const(t) => *t,
        Interpolant::Lit(l) => lit_value(l, a),
        Interpolant::And(l, r) => interpolant_value(l, a) && interpolant_value(r, a),
        Interpolant::Or(l, r) => interpolant_value(l, a) || interpolant_value(r, a),
    }
}

pub fn formula_value(f: &Formula, a: &Assignment) -> bool {
    match f {
        Formula::Const(t) => *t,
        Formula::Var(v) => a[&v.index()],
        Formula::Not(g) => !formula_value(g, a),
        Formula::And(l, r) => formula_value(l, a) && formula_value(r, a),
        Formula::Or(l, r) => formula_value(l, a) || formula_value(r, a),
        Formula::Implies(l, r) => !formula_value(l, a) || formula_value(r, a),
        Formula::Iff(l, r) => formula_value(l, a) == formula_value(r, a),
    }
}

pub fn lits_of_cnf(x: &[CnfElement], out: &mut BTreeSet<u32>) {
    for c in x {
        if let CnfElement::Disj(ls) = c {
            out.extend(ls.iter().map(|l| l.var.index()));
        }
    }
}

pub fn lits_of_dnf(y: &[DnfElement], out: &mut BTreeSet<u32>) {
    for c in y {
        if let DnfElement::Conj(ls) = c {
            out.extend(ls.iter().map(|l| l.var.index()));
        }
    }
}

pub fn interpolant_vars(i: &Interpolant, out: &mut BTreeSet<u32>) {
    match i {
        Interpolant::Const(_) => {}
        Interpolant::Lit(l) => {
            out.insert(l.var.index());
        }
        Interpolant::And(l, r) | Interpolant::Or(l, r) => {
            interpolant_vars(l, out);
            interpolant_vars(r, out);
        }
    }
}

pub fn formula_vars(f: &Formula, out: &mut BTreeSet<u32>) {
    match f {
        Formula::Const(_) => {}
        Formula::Var(v) => {
            out.insert(v.index());
        }
        Formula::Not(g) => formula_vars(g, out),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
            formula_vars(l, out);
            formula_vars(r, out);
        }
    }
}

/// Every assignment over `vars`, in no particular order.
pub fn assignments(vars: &BTreeSet<u32>) -> Vec<Assignment> {
    let vars: Vec<u32> = vars.iter().copied().collect();
    assert!(vars.len() <= 16, "naive evaluator limited to 16 variables");
    (0u32..1 << vars.len())
        .map(|bits| vars.iter().enumerate().map(|(k, &v)| (v, bits >> k & 1 == 1)).collect())
        .collect()
}

pub fn pair_vars(g: &NormalFormPair) -> BTreeSet<u32> {
    let mut vars = BTreeSet::new();
    lits_of_cnf(&g.x, &mut vars);
    lits_of_dnf(&g.y, &mut vars);
    vars
}

pub fn naive_valid(g: &NormalFormPair) -> bool {
    assignments(&pair_vars(g)).iter().all(|a| pair_value(g, a))
}

pub fn naive_clausal_valid(z: &ClausalForm) -> bool {
    let mut vars = BTreeSet::new();
    lits_of_cnf(z.clauses(), &mut vars);
    assignments(&vars).iter().all(|a| clausal_value(z, a))
}

pub fn naive_equivalent_interpolants(a: &Interpolant, b: &Interpolant) -> bool {
    let mut vars = BTreeSet::new();
    interpolant_vars(a, &mut vars);
    interpolant_vars(b, &mut vars);
    assignments(&vars)
        .iter()
        .all(|v| interpolant_value(a, v) == interpolant_value(b, v))
}

/// Complementary pair of some variable spread over two different clauses
/// of `X, Y*` (where a `Y` literal flips sign).
pub fn naive_has_cross_pair(g: &NormalFormPair) -> bool {
    let mut clauses: Vec<Vec<(u32, bool)>> = Vec::new();
    for c in &g.x {
        clauses.push(c.literals().iter().map(|l| (l.var.index(), !l.negated)).collect());
    }
    for c in &g.y {
        clauses.push(c.literals().iter().map(|l| (l.var.index(), l.negated)).collect());
    }
    for (i, ci) in clauses.iter().enumerate() {
        for (j, cj) in clauses.iter().enumerate() {
            if i != j && ci.iter().any(|&(v, pos)| pos && cj.contains(&(v, false))) {
                return true;
            }
        }
    }
    false
}

/// The interpolant conditions, checked from scratch.
pub fn naive_is_interpolant(g: &NormalFormPair, i: &Interpolant) -> bool {
    let mut vars = pair_vars(g);
    interpolant_vars(i, &mut vars);
    let semantic = assignments(&vars).iter().all(|a| {
        let iv = interpolant_value(i, a);
        (!cnf_value(&g.x, a) || iv) && (!iv || dnf_value(&g.y, a))
    });
    if !semantic {
        return false;
    }
    if !naive_has_cross_pair(g) {
        return true;
    }
    let (mut xv, mut yv, mut iv) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
    lits_of_cnf(&g.x, &mut xv);
    lits_of_dnf(&g.y, &mut yv);
    interpolant_vars(i, &mut iv);
    iv.iter().all(|v| xv.contains(v) && yv.contains(v))
}

/// Multiset comparison of two clause lists.
pub fn same_clauses(a: &[CnfElement], b: &[CnfElement]) -> bool {
    let key = |c: &CnfElement| format!("{c:?}");
    let mut ka: Vec<String> = a.iter().map(key).collect();
    let mut kb: Vec<String> = b.iter().map(key).collect();
    ka.sort();
    kb.sort();
    ka == kb
}

// ---- fixtures ----

/// The worked example in bracket notation, as printed in the trace.
pub const EX1_X: &str = "[D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.]";
pub const EX1_Y_TRACE: &str = "[C.p..Nr., C.Np..q., C.p..Nq.]";
/// The same example as stated in ordinary notation: Y = ¬p∧r, ¬p∧q, p∧¬q.
pub const EX1_Y_MATH: &str = "[C.Np..r., C.Np..q., C.p..Nq.]";

pub const TWO_STEP_X: &str = "[D.p..Nq., D.Np..Nr., D.q.]";
pub const TWO_STEP_Y: &str = "[C.q..Nr., C.Nq..Ns., C.s.]";

pub fn sides(x: &str, y: &str) -> (NormalFormPair, Vocabulary) {
    let mut vocab = Vocabulary::new();
    let xs = craig_refute::parse_cnf_list(x, &mut vocab).unwrap();
    let ys = craig_refute::parse_dnf_list(y, &mut vocab).unwrap();
    (NormalFormPair::new(xs, ys), vocab)
}

pub fn vars(vocab: &mut Vocabulary, names: &str) -> Vec<Variable> {
    names.split(',').map(|n| vocab.named(n.trim())).collect()
}

// ---- proptest strategies ----

pub const NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "w", "z"];

pub fn variable(n: u32) -> impl Strategy<Value = Variable> {
    (1..=n).prop_map(|i| Variable::named(i, NAMES[i as usize - 1]))
}

pub fn literal(n: u32) -> impl Strategy<Value = Literal> {
    (variable(n), any::<bool>()).prop_map(|(v, neg)| Literal::new(v, neg))
}

pub fn cnf_element(n: u32, max_len: usize) -> impl Strategy<Value = CnfElement> {
    prop_oneof![
        1 => any::<bool>().prop_map(CnfElement::Const),
        12 => prop::collection::vec(literal(n), 1..=max_len).prop_map(CnfElement::Disj),
    ]
}

pub fn dnf_element(n: u32, max_len: usize) -> impl Strategy<Value = DnfElement> {
    prop_oneof![
        1 => any::<bool>().prop_map(DnfElement::Const),
        12 => prop::collection::vec(literal(n), 1..=max_len).prop_map(DnfElement::Conj),
    ]
}

pub fn pair(n: u32, max_side: usize, max_len: usize) -> impl Strategy<Value = NormalFormPair> {
    (
        prop::collection::vec(cnf_element(n, max_len), 0..=max_side),
        prop::collection::vec(dnf_element(n, max_len), 0..=max_side),
    )
        .prop_map(|(x, y)| NormalFormPair::new(x, y))
}

pub fn valid_pair(n: u32, max_side: usize, max_len: usize) -> impl Strategy<Value = NormalFormPair> {
    pair(n, max_side, max_len).prop_filter("X → Y must be valid and not both sides empty", |g| {
        !(g.x.is_empty() && g.y.is_empty()) && naive_valid(g)
    })
}

pub fn interpolant(n: u32) -> impl Strategy<Value = Interpolant> {
    let leaf = prop_oneof![
        1 => any::<bool>().prop_map(Interpolant::Const),
        3 => literal(n).prop_map(Interpolant::Lit),
    ];
    leaf.prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Interpolant::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Interpolant::or(a, b)),
        ]
    })
}

pub fn formula(n: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => any::<bool>().prop_map(Formula::Const),
        4 => variable(n).prop_map(Formula::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

/// Every clause list over `p, q` with at most three elements, each a
/// constant or a disjunction of one or two literals.
pub fn small_clausal_forms() -> Vec<ClausalForm> {
    let lits: Vec<Literal> = ["p", "q"]
        .iter()
        .enumerate()
        .flat_map(|(k, n)| {
            let v = Variable::named(k as u32 + 1, *n);
            [Literal::new(v.clone(), false), Literal::new(v, true)]
        })
        .collect();
    let mut elements = vec![CnfElement::Const(true), CnfElement::Const(false)];
    for a in &lits {
        elements.push(CnfElement::Disj(vec![a.clone()]));
    }
    for a in &lits {
        for b in &lits {
            elements.push(CnfElement::Disj(vec![a.clone(), b.clone()]));
        }
    }
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for z in &frontier {
            for e in &elements {
                let mut z: Vec<CnfElement> = z.clone();
                z.push(e.clone());
                next.push(z);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(ClausalForm::new).collect()
}
