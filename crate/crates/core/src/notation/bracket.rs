use super::{Cursor, JoinDisplay, ParseError, Render, Style, Vocabulary};
use crate::interpolate::Interpolant;
use crate::logic::{ClausalForm, CnfElement, DnfElement, Literal, NormalFormPair};

enum Item {
    Const(bool),
    D(Vec<Literal>),
    C(Vec<Literal>),
}

impl Cursor<'_> {
    /// `"." [ "N" ] var "."`
    fn bracket_literal(&mut self) -> Result<Literal, ParseError> {
        self.expect('.')?;
        let negated = self.eat('N');
        let var = self.variable()?;
        self.expect('.')?;
        Ok(Literal::new(var, negated))
    }

    fn bracket_literals(&mut self) -> Result<Vec<Literal>, ParseError> {
        let mut lits = vec![self.bracket_literal()?];
        while self.peek() == Some('.') {
            lits.push(self.bracket_literal()?);
        }
        Ok(lits)
    }

    fn bracket_constant(&mut self) -> Option<bool> {
        if self.eat_str(".0.") {
            Some(false)
        } else if self.eat_str(".1.") {
            Some(true)
        } else {
            None
        }
    }

    fn bracket_item(&mut self) -> Result<Item, ParseError> {
        if let Some(t) = self.bracket_constant() {
            return Ok(Item::Const(t));
        }
        match self.peek() {
            Some('D') => {
                self.bump();
                Ok(Item::D(self.bracket_literals()?))
            }
            Some('C') => {
                self.bump();
                Ok(Item::C(self.bracket_literals()?))
            }
            _ => Err(self.error(format!(
                "expected a D-clause, C-clause or constant, found {}",
                self.describe_next()
            ))),
        }
    }

    fn bracket_list<T>(
        &mut self,
        mut convert: impl FnMut(Item, usize) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        self.skip_ws();
        self.expect('[')?;
        self.skip_ws();
        let mut out = Vec::new();
        if self.eat(']') {
            self.finish()?;
            return Ok(out);
        }
        loop {
            let at = self.pos;
            let item = self.bracket_item()?;
            out.push(convert(item, at)?);
            self.skip_ws();
            if self.eat(',') {
                self.skip_ws();
                continue;
            }
            self.expect(']')?;
            break;
        }
        self.finish()?;
        Ok(out)
    }

    fn bracket_interpolant(&mut self) -> Result<Interpolant, ParseError> {
        if let Some(t) = self.bracket_constant() {
            return Ok(Interpolant::Const(t));
        }
        let conj = match self.peek() {
            Some('.') => return Ok(Interpolant::Lit(self.bracket_literal()?)),
            Some('C') if self.peek_at(1) == Some('(') => true,
            Some('D') if self.peek_at(1) == Some('(') => false,
            _ => return Err(self.error(format!("expected an interpolant, found {}", self.describe_next()))),
        };
        self.pos += 2;
        self.skip_ws();
        let left = self.bracket_interpolant()?;
        self.skip_ws();
        self.expect(',')?;
        self.skip_ws();
        let right = self.bracket_interpolant()?;
        self.skip_ws();
        self.expect(')')?;
        Ok(if conj {
            Interpolant::and(left, right)
        } else {
            Interpolant::or(left, right)
        })
    }
}

/// Parses a clause list such as `[D.p..Ns., .0.]`.
pub fn parse_cnf_list(s: &str, vocab: &mut Vocabulary) -> Result<Vec<CnfElement>, ParseError> {
    Cursor::new(s, vocab).bracket_list(|item, at| match item {
        Item::Const(t) => Ok(CnfElement::Const(t)),
        Item::D(lits) => Ok(CnfElement::Disj(lits)),
        Item::C(_) => Err(ParseError::new(at, "C-clause in a clause (CNF) list")),
    })
}

/// Parses a co-clause list such as `[C.p..Nr., .1.]`.
pub fn parse_dnf_list(s: &str, vocab: &mut Vocabulary) -> Result<Vec<DnfElement>, ParseError> {
    Cursor::new(s, vocab).bracket_list(|item, at| match item {
        Item::Const(t) => Ok(DnfElement::Const(t)),
        Item::C(lits) => Ok(DnfElement::Conj(lits)),
        Item::D(_) => Err(ParseError::new(at, "D-clause in a co-clause (DNF) list")),
    })
}

/// Parses both sides of `X → Y` with one fresh vocabulary.
pub fn parse_pair(x: &str, y: &str) -> Result<NormalFormPair, ParseError> {
    let mut vocab = Vocabulary::new();
    let x = parse_cnf_list(x, &mut vocab)?;
    let y = parse_dnf_list(y, &mut vocab)?;
    Ok(NormalFormPair::new(x, y))
}

/// Parses the bracket rendering of an interpolant, e.g. `C(D(.p., .0.), .1.)`.
pub fn parse_interpolant(s: &str, vocab: &mut Vocabulary) -> Result<Interpolant, ParseError> {
    let mut cursor = Cursor::new(s, vocab);
    cursor.skip_ws();
    let i = cursor.bracket_interpolant()?;
    cursor.finish()?;
    Ok(i)
}

fn bracket_constant(t: bool) -> &'static str {
    if t {
        ".1."
    } else {
        ".0."
    }
}

fn infix_constant(t: bool) -> &'static str {
    if t {
        "⊤"
    } else {
        "⊥"
    }
}

fn render_literals(prefix: &str, lits: &[Literal], style: Style, op: &str) -> String {
    match style {
        Style::Bracket => {
            let mut s = prefix.to_owned();
            lits.iter().for_each(|l| s.push_str(&l.render(Style::Bracket)));
            s
        }
        Style::Infix if lits.len() == 1 => lits[0].render(Style::Infix),
        Style::Infix => {
            let parts: Vec<String> = lits.iter().map(|l| l.render(Style::Infix)).collect();
            format!("({})", parts.join(op))
        }
    }
}

impl Render for Literal {
    fn render(&self, style: Style) -> String {
        match (style, self.negated) {
            (Style::Bracket, false) => format!(".{}.", self.var),
            (Style::Bracket, true) => format!(".N{}.", self.var),
            (Style::Infix, false) => self.var.to_string(),
            (Style::Infix, true) => format!("¬{}", self.var),
        }
    }
}

impl Render for CnfElement {
    fn render(&self, style: Style) -> String {
        match (self, style) {
            (CnfElement::Const(t), Style::Bracket) => bracket_constant(*t).to_owned(),
            (CnfElement::Const(t), Style::Infix) => infix_constant(*t).to_owned(),
            (CnfElement::Disj(lits), _) => render_literals("D", lits, style, " ∨ "),
        }
    }
}

impl Render for DnfElement {
    fn render(&self, style: Style) -> String {
        match (self, style) {
            (DnfElement::Const(t), Style::Bracket) => bracket_constant(*t).to_owned(),
            (DnfElement::Const(t), Style::Infix) => infix_constant(*t).to_owned(),
            (DnfElement::Conj(lits), _) => render_literals("C", lits, style, " ∧ "),
        }
    }
}

fn render_side<T: Render>(items: &[T], style: Style, op: &str, empty: bool) -> String {
    let parts: Vec<String> = items.iter().map(|i| i.render(style)).collect();
    match style {
        Style::Bracket => format!("[{}]", JoinDisplay(&parts, ", ")),
        Style::Infix => match parts.len() {
            0 => infix_constant(empty).to_owned(),
            1 => parts.into_iter().next().unwrap_or_default(),
            _ => format!("({})", parts.join(op)),
        },
    }
}

/// Rendered as a conjunction in infix style.
impl Render for [CnfElement] {
    fn render(&self, style: Style) -> String {
        render_side(self, style, " ∧ ", true)
    }
}

/// Rendered as a disjunction in infix style.
impl Render for [DnfElement] {
    fn render(&self, style: Style) -> String {
        render_side(self, style, " ∨ ", false)
    }
}

impl Render for NormalFormPair {
    fn render(&self, style: Style) -> String {
        match style {
            Style::Bracket => format!("X:  {} Y:  {}", self.x.render(style), self.y.render(style)),
            Style::Infix => format!("({} → {})", self.x.render(style), self.y.render(style)),
        }
    }
}

impl Render for ClausalForm {
    fn render(&self, style: Style) -> String {
        match style {
            Style::Bracket => format!("Z:  {}", self.z.render(style)),
            Style::Infix => format!("({} → ⊥)", self.z.render(style)),
        }
    }
}

impl Render for Interpolant {
    fn render(&self, style: Style) -> String {
        match (self, style) {
            (Interpolant::Const(t), Style::Bracket) => bracket_constant(*t).to_owned(),
            (Interpolant::Const(t), Style::Infix) => infix_constant(*t).to_owned(),
            (Interpolant::Lit(l), _) => l.render(style),
            (Interpolant::And(a, b), Style::Bracket) => format!("C({}, {})", a.render(style), b.render(style)),
            (Interpolant::Or(a, b), Style::Bracket) => format!("D({}, {})", a.render(style), b.render(style)),
            (Interpolant::And(a, b), Style::Infix) => format!("({} ∧ {})", a.render(style), b.render(style)),
            (Interpolant::Or(a, b), Style::Infix) => format!("({} ∨ {})", a.render(style), b.render(style)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Variable;

    fn names(vocab: &mut Vocabulary, names: &[&str]) -> Vec<Variable> {
        names.iter().map(|n| vocab.named(n)).collect()
    }

    #[test]
    fn parses_clause_lists() {
        let mut vocab = Vocabulary::new();
        let x = parse_cnf_list("[D.p..Ns., D.q..r.]", &mut vocab).unwrap();
        let v = names(&mut vocab, &["p", "s", "q", "r"]);
        assert_eq!(
            x,
            vec![
                CnfElement::Disj(vec![v[0].positive(), v[1].negative()]),
                CnfElement::Disj(vec![v[2].positive(), v[3].positive()]),
            ]
        );
        assert!(parse_cnf_list("[]", &mut vocab).unwrap().is_empty());
        let with_const = parse_cnf_list("[.0., D.s.]", &mut vocab).unwrap();
        assert_eq!(
            with_const,
            vec![CnfElement::Const(false), CnfElement::Disj(vec![v[1].positive()])]
        );
    }

    #[test]
    fn parses_co_clause_lists() {
        let mut vocab = Vocabulary::new();
        let y = parse_dnf_list("[C.p..Nr.]", &mut vocab).unwrap();
        let v = names(&mut vocab, &["p", "r"]);
        assert_eq!(y, vec![DnfElement::Conj(vec![v[0].positive(), v[1].negative()])]);
        assert_eq!(
            parse_dnf_list("[.1.]", &mut vocab).unwrap(),
            vec![DnfElement::Const(true)]
        );
        let numbered = parse_dnf_list("[C.P(1,2)..NP(2,2).]", &mut Vocabulary::new()).unwrap();
        assert_eq!(
            numbered,
            vec![DnfElement::Conj(vec![
                Variable::new(1).positive(),
                Variable::new(2).negative()
            ])]
        );
        // comma spacing is optional on input
        assert_eq!(
            parse_dnf_list("[C.p..Nr.,C.Np..q., C.p..Nq.]", &mut vocab)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn rejects_wrong_item_kinds() {
        let err = parse_cnf_list("[D.p., C.q.]", &mut Vocabulary::new()).unwrap_err();
        assert_eq!(err.position, 7);
        assert!(parse_dnf_list("[D.p.]", &mut Vocabulary::new()).is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (input, pos) in [
            ("D.p.]", 0),
            ("[D.p.", 5),
            ("[D]", 2),
            ("[D.p.] x", 7),
            ("[D.Q.]", 3),
            ("[D.P(3,2).]", 3),
            ("[.2.]", 1),
        ] {
            let err = parse_cnf_list(input, &mut Vocabulary::new()).unwrap_err();
            assert_eq!(err.position, pos, "{input}: {err}");
        }
    }

    #[test]
    fn renders_both_styles() {
        let mut vocab = Vocabulary::new();
        let x = parse_cnf_list("[D.p..Ns.]", &mut vocab).unwrap();
        assert_eq!(x.render(Style::Bracket), "[D.p..Ns.]");
        assert_eq!(x.render(Style::Infix), "(p ∨ ¬s)");
        assert_eq!(CnfElement::Const(true).render(Style::Bracket), ".1.");
        let p = vocab.named("p");
        let i = Interpolant::and(
            Interpolant::or(Interpolant::lit(p.positive()), Interpolant::FALSUM),
            Interpolant::or(Interpolant::lit(p.negative()), Interpolant::VERUM),
        );
        assert_eq!(i.render(Style::Infix), "((p ∨ ⊥) ∧ (¬p ∨ ⊤))");
        assert_eq!(i.render(Style::Bracket), "C(D(.p., .0.), D(.Np., .1.))");
        assert_eq!(parse_interpolant(&i.render(Style::Bracket), &mut vocab).unwrap(), i);
    }

    #[test]
    fn renders_pairs() {
        let g = parse_pair("[D.p..p., .0.]", "[]").unwrap();
        assert_eq!(g.render(Style::Bracket), "X:  [D.p..p., .0.] Y:  []");
        assert_eq!(g.render(Style::Infix), "(((p ∨ p) ∧ ⊥) → ⊥)");
        assert_eq!(g.to_clausal().render(Style::Bracket), "Z:  [D.p..p., .0.]");
    }
}
