//! Many-valued propositional logic over a discretized truth grid, and
//! max-min composition inference.
//!
//! Conjunction is `min`, disjunction `max`, negation `1 - x`. Implication
//! has no canonical fuzzy counterpart and is selected with [`Implication`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::matrix::GradeMatrix;
use crate::util::Cartesian;

/// Largest number of free variables [`classify`] will enumerate.
pub const MAX_VARIABLES: usize = 6;
/// Largest number of assignments [`classify`] will enumerate (11^6).
pub const MAX_ASSIGNMENTS: usize = 1_771_561;

const TRUE_TOLERANCE: f64 = 1e-9;

/// Strictly increasing truth values, always including 0 and 1.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthGrid(Vec<Grade>);

impl TruthGrid {
    pub fn new(values: &[f64]) -> Result<Self> {
        let grades = values
            .iter()
            .map(|&v| Grade::new(v))
            .collect::<Result<Vec<_>>>()?;
        let increasing = grades.windows(2).all(|w| w[0] < w[1]);
        let bounded = grades.first() == Some(&Grade::ZERO) && grades.last() == Some(&Grade::ONE);
        if !increasing || !bounded {
            return Err(Error::InvalidGrid);
        }
        Ok(TruthGrid(grades))
    }

    pub fn crisp() -> Self {
        TruthGrid(vec![Grade::ZERO, Grade::ONE])
    }

    /// `0, 1/(steps), …, 1`.
    pub fn uniform(steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(Error::InvalidGrid);
        }
        let values: Vec<f64> = (0..=steps).map(|k| k as f64 / steps as f64).collect();
        TruthGrid::new(&values)
    }

    pub fn values(&self) -> &[Grade] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Implication {
    /// `max(1 - p, q)`.
    Material,
    /// `1` if `p <= q`, else `q`.
    #[default]
    Goedel,
}

impl Implication {
    pub fn apply(self, p: Grade, q: Grade) -> Grade {
        match self {
            Implication::Material => p.complement().max(q),
            Implication::Goedel => {
                if p <= q {
                    Grade::ONE
                } else {
                    q
                }
            }
        }
    }
}

impl FromStr for Implication {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "material" => Ok(Implication::Material),
            "goedel" | "godel" | "gödel" => Ok(Implication::Goedel),
            other => Err(format!(
                "unknown implication `{other}` (expected material or goedel)"
            )),
        }
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Implication::Material => "material",
            Implication::Goedel => "goedel",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    And,
    Or,
    Implies,
    Equiv,
}

impl Connective {
    pub fn apply(self, p: Grade, q: Grade, implication: Implication) -> Grade {
        match self {
            Connective::And => p.min(q),
            Connective::Or => p.max(q),
            Connective::Implies => implication.apply(p, q),
            Connective::Equiv => implication.apply(p, q).min(implication.apply(q, p)),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Implies => "->",
            Connective::Equiv => "<->",
        }
    }
}

impl FromStr for Connective {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "and" => Ok(Connective::And),
            "or" => Ok(Connective::Or),
            "implies" => Ok(Connective::Implies),
            "equiv" => Ok(Connective::Equiv),
            other => Err(format!(
                "unknown connective `{other}` (expected and, or, implies, equiv)"
            )),
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Implies => "implies",
            Connective::Equiv => "equiv",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Var(String),
    Const(Grade),
    Not(Box<Expr>),
    Binary(Connective, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::Binary(Connective::And, Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::Binary(Connective::Or, Box::new(a), Box::new(b))
    }

    pub fn implies(a: Expr, b: Expr) -> Expr {
        Expr::Binary(Connective::Implies, Box::new(a), Box::new(b))
    }

    pub fn equiv(a: Expr, b: Expr) -> Expr {
        Expr::Binary(Connective::Equiv, Box::new(a), Box::new(b))
    }

    /// Free variables in sorted order.
    pub fn variables(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut BTreeSet<String>) {
            match e {
                Expr::Var(v) => {
                    out.insert(v.clone());
                }
                Expr::Const(_) => {}
                Expr::Not(x) => walk(x, out),
                Expr::Binary(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out.into_iter().collect()
    }

    pub fn eval(
        &self,
        assignment: &BTreeMap<String, Grade>,
        implication: Implication,
    ) -> Result<Grade> {
        match self {
            Expr::Var(v) => assignment
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnboundVariable(v.clone())),
            Expr::Const(g) => Ok(*g),
            Expr::Not(x) => Ok(x.eval(assignment, implication)?.complement()),
            Expr::Binary(op, a, b) => {
                let p = a.eval(assignment, implication)?;
                let q = b.eval(assignment, implication)?;
                Ok(op.apply(p, q, implication))
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(v) => f.write_str(v),
            Expr::Const(g) => write!(f, "{g}"),
            Expr::Not(x) => match **x {
                Expr::Binary(..) => write!(f, "!({x})"),
                _ => write!(f, "!{x}"),
            },
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    /// Grammar, loosest binding first:
    ///
    /// ```text
    /// equiv   := implies ("<->" implies)*
    /// implies := or ("->" implies)?
    /// or      := and ("|" and)*
    /// and     := unary ("&" unary)*
    /// unary   := ("!" | "~") unary | atom
    /// atom    := identifier | number | "(" equiv ")"
    /// ```
    fn from_str(s: &str) -> Result<Expr> {
        let tokens = tokenize(s)?;
        let mut parser = Parser { tokens, pos: 0 };
        let e = parser.equiv()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Expression(format!(
                "unexpected `{}`",
                parser.tokens[parser.pos]
            )));
        }
        Ok(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(f64),
    Not,
    And,
    Or,
    Implies,
    Equiv,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => f.write_str(s),
            Token::Number(n) => write!(f, "{n}"),
            Token::Not => f.write_str("!"),
            Token::And => f.write_str("&"),
            Token::Or => f.write_str("|"),
            Token::Implies => f.write_str("->"),
            Token::Equiv => f.write_str("<->"),
            Token::Open => f.write_str("("),
            Token::Close => f.write_str(")"),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let rest: String = chars[i..].iter().take(3).collect();
        match c {
            _ if c.is_whitespace() => i += 1,
            '!' | '~' => {
                out.push(Token::Not);
                i += 1;
            }
            '&' => {
                out.push(Token::And);
                i += 1;
            }
            '|' => {
                out.push(Token::Or);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            '-' if rest.starts_with("->") => {
                out.push(Token::Implies);
                i += 2;
            }
            '<' if rest == "<->" => {
                out.push(Token::Equiv);
                i += 3;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse::<f64>()
                    .map_err(|_| Error::Expression(format!("bad number `{text}`")))?;
                out.push(Token::Number(n));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::Expression(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn equiv(&mut self) -> Result<Expr> {
        let mut lhs = self.implies()?;
        while self.eat(&Token::Equiv) {
            lhs = Expr::equiv(lhs, self.implies()?);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Expr> {
        let lhs = self.or()?;
        if self.eat(&Token::Implies) {
            return Ok(Expr::implies(lhs, self.implies()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.eat(&Token::Or) {
            lhs = Expr::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            lhs = Expr::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Token::Not) {
            return Ok(Expr::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        let token = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Expression("unexpected end of input".into()))?;
        self.pos += 1;
        match token {
            Token::Ident(name) => Ok(Expr::Var(name)),
            Token::Number(n) => Ok(Expr::Const(Grade::new(n)?)),
            Token::Open => {
                let e = self.equiv()?;
                if !self.eat(&Token::Close) {
                    return Err(Error::Expression("missing `)`".into()));
                }
                Ok(e)
            }
            other => Err(Error::Expression(format!("unexpected `{other}`"))),
        }
    }
}

/// Cell `(i, j)` holds `grid[i] ∘ grid[j]`; rows follow the first argument.
pub fn cayley_table(
    connective: Connective,
    grid: &TruthGrid,
    implication: Implication,
) -> GradeMatrix {
    let v = grid.values();
    GradeMatrix::from_fn(v.len(), v.len(), |i, j| {
        connective.apply(v[i], v[j], implication)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// True (value 1) under every assignment: a tautology.
    Valid,
    /// True under some but not all assignments.
    Satisfiable,
    /// True under no assignment.
    Unsatisfiable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "valid",
            Verdict::Satisfiable => "satisfiable",
            Verdict::Unsatisfiable => "unsatisfiable",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub assignment: BTreeMap<String, Grade>,
    pub value: Grade,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    pub variables: Vec<String>,
    /// Every assignment whose value is below 1, in enumeration order.
    pub counterexamples: Vec<Counterexample>,
    pub assignments: usize,
}

/// Evaluates `expr` at every assignment of grid values to its variables.
pub fn classify(expr: &Expr, grid: &TruthGrid, implication: Implication) -> Result<Classification> {
    let variables = expr.variables();
    let too_many = variables.len() > MAX_VARIABLES
        || (grid.len() as f64).powi(variables.len() as i32) > MAX_ASSIGNMENTS as f64;
    if too_many {
        return Err(Error::EnumerationTooLarge {
            variables: variables.len(),
            grid: grid.len(),
        });
    }
    let mut counterexamples = Vec::new();
    let mut assignments = 0;
    for combo in Cartesian::new(vec![grid.len(); variables.len()]) {
        let assignment: BTreeMap<String, Grade> = variables
            .iter()
            .cloned()
            .zip(combo.iter().map(|&k| grid.values()[k]))
            .collect();
        let value = expr.eval(&assignment, implication)?;
        if value.value() < 1.0 - TRUE_TOLERANCE {
            counterexamples.push(Counterexample { assignment, value });
        }
        assignments += 1;
    }
    let verdict = if counterexamples.is_empty() {
        Verdict::Valid
    } else if counterexamples.len() < assignments {
        Verdict::Satisfiable
    } else {
        Verdict::Unsatisfiable
    };
    Ok(Classification {
        verdict,
        variables,
        counterexamples,
        assignments,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `qᵗ = pᵗ ∘ R`: `q_j = max_i min(p_i, R_ij)`.
    Left,
    /// `p = R ∘ q`: `p_i = max_j min(R_ij, q_j)`.
    Right,
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("unknown side `{other}` (expected left or right)")),
        }
    }
}

/// Max-min composition of a truth vector with a relation.
pub fn compose_maxmin(vector: &[Grade], relation: &GradeMatrix, side: Side) -> Result<Vec<Grade>> {
    let (expected, outputs) = match side {
        Side::Left => (relation.rows(), relation.cols()),
        Side::Right => (relation.cols(), relation.rows()),
    };
    if vector.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: vector.len(),
        });
    }
    let cell = |k: usize, o: usize| match side {
        Side::Left => relation.get(k, o),
        Side::Right => relation.get(o, k),
    };
    Ok((0..outputs)
        .map(|o| {
            vector
                .iter()
                .enumerate()
                .map(|(k, &v)| v.min(cell(k, o)))
                .fold(Grade::ZERO, Grade::max)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(values: &[f64]) -> Vec<Grade> {
        values.iter().map(|&v| Grade::new(v).unwrap()).collect()
    }

    fn assign(pairs: &[(&str, f64)]) -> BTreeMap<String, Grade> {
        pairs
            .iter()
            .map(|&(k, v)| (k.to_string(), Grade::new(v).unwrap()))
            .collect()
    }

    fn three() -> TruthGrid {
        TruthGrid::new(&[0.0, 0.5, 1.0]).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(TruthGrid::new(&[0.0, 0.5, 1.0]).is_ok());
        assert_eq!(TruthGrid::new(&[0.0, 0.5]), Err(Error::InvalidGrid));
        assert_eq!(
            TruthGrid::new(&[0.0, 0.5, 0.5, 1.0]),
            Err(Error::InvalidGrid)
        );
        assert_eq!(TruthGrid::uniform(4).unwrap().len(), 5);
    }

    #[test]
    fn evaluation() {
        let em: Expr = "p | !p".parse().unwrap();
        assert_eq!(
            em.eval(&assign(&[("p", 0.5)]), Implication::Goedel)
                .unwrap()
                .value(),
            0.5
        );
        let or: Expr = "p | q".parse().unwrap();
        assert_eq!(
            or.eval(&assign(&[("p", 0.0), ("q", 1.0)]), Implication::Goedel)
                .unwrap(),
            Grade::ONE
        );
        let imp: Expr = "p -> q".parse().unwrap();
        assert_eq!(
            imp.eval(&assign(&[("p", 1.0), ("q", 0.0)]), Implication::Material)
                .unwrap(),
            Grade::ZERO
        );
        assert_eq!(
            imp.eval(&assign(&[("p", 0.7), ("q", 0.4)]), Implication::Goedel)
                .unwrap()
                .value(),
            0.4
        );
        assert_eq!(
            imp.eval(&assign(&[("p", 1.0)]), Implication::Goedel),
            Err(Error::UnboundVariable("q".into()))
        );
    }

    #[test]
    fn parser_precedence() {
        let e: Expr = "!p & q | r -> s <-> t".parse().unwrap();
        assert_eq!(e.to_string(), "((((!p & q) | r) -> s) <-> t)");
        let right: Expr = "a -> b -> c".parse().unwrap();
        assert_eq!(right.to_string(), "(a -> (b -> c))");
        assert!("p &".parse::<Expr>().is_err());
        assert!("(p".parse::<Expr>().is_err());
        assert!("p q".parse::<Expr>().is_err());
        assert!("p $ q".parse::<Expr>().is_err());
        assert!("1.5".parse::<Expr>().is_err());
    }

    #[test]
    fn cayley_tables() {
        let or = cayley_table(Connective::Or, &TruthGrid::crisp(), Implication::Goedel);
        assert_eq!(or.values(), vec![vec![0.0, 1.0], vec![1.0, 1.0]]);
        let or3 = cayley_table(Connective::Or, &three(), Implication::Goedel);
        assert_eq!(or3.values()[1], vec![0.5, 0.5, 1.0]);
        let imp = cayley_table(
            Connective::Implies,
            &TruthGrid::crisp(),
            Implication::Material,
        );
        assert_eq!(imp.values(), vec![vec![1.0, 1.0], vec![0.0, 1.0]]);
    }

    #[test]
    fn excluded_middle_is_only_satisfiable() {
        let c = classify(&"p | !p".parse().unwrap(), &three(), Implication::Goedel).unwrap();
        assert_eq!(c.verdict, Verdict::Satisfiable);
        assert_eq!(c.counterexamples.len(), 1);
        assert_eq!(c.counterexamples[0].assignment, assign(&[("p", 0.5)]));
        assert_eq!(c.counterexamples[0].value.value(), 0.5);
    }

    #[test]
    fn modus_ponens_tautology_under_goedel() {
        let e: Expr = "(p & (p -> q)) -> q".parse().unwrap();
        let c = classify(&e, &three(), Implication::Goedel).unwrap();
        assert_eq!(c.verdict, Verdict::Valid);
        assert_eq!(c.assignments, 9);
        // Material implication loses it at p = 0.5.
        let m = classify(&e, &three(), Implication::Material).unwrap();
        assert_eq!(m.verdict, Verdict::Satisfiable);
    }

    #[test]
    fn constants_and_bounds() {
        let one = classify(&Expr::Const(Grade::ONE), &three(), Implication::Goedel).unwrap();
        assert_eq!(one.verdict, Verdict::Valid);
        assert_eq!(one.assignments, 1);
        let zero = classify(
            &"p & !p & 0".parse().unwrap(),
            &three(),
            Implication::Goedel,
        )
        .unwrap();
        assert_eq!(zero.verdict, Verdict::Unsatisfiable);
        let seven: Expr = "a & b & c & d & e & f & h".parse().unwrap();
        assert!(matches!(
            classify(&seven, &TruthGrid::crisp(), Implication::Goedel),
            Err(Error::EnumerationTooLarge { variables: 7, .. })
        ));
        let wide = TruthGrid::uniform(20).unwrap();
        let six: Expr = "a & b & c & d & e & f".parse().unwrap();
        assert!(classify(&six, &wide, Implication::Goedel).is_err());
    }

    #[test]
    fn composition_examples() {
        let r = GradeMatrix::from_values(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(
            compose_maxmin(&g(&[0.0, 1.0]), &r, Side::Left).unwrap(),
            g(&[0.0, 1.0])
        );
        assert_eq!(
            compose_maxmin(&g(&[1.0, 0.0]), &r, Side::Left).unwrap(),
            g(&[1.0, 1.0])
        );
        assert_eq!(
            compose_maxmin(&g(&[1.0, 0.0]), &r, Side::Right).unwrap(),
            g(&[1.0, 0.0])
        );
        let id = GradeMatrix::from_values(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(
            compose_maxmin(&g(&[0.3, 0.8]), &id, Side::Left).unwrap(),
            g(&[0.3, 0.8])
        );
        assert!(compose_maxmin(&g(&[1.0]), &r, Side::Left).is_err());
    }

    fn connectives() -> impl Strategy<Value = Connective> {
        prop_oneof![
            Just(Connective::And),
            Just(Connective::Or),
            Just(Connective::Implies),
            Just(Connective::Equiv),
        ]
    }

    fn implications() -> impl Strategy<Value = Implication> {
        prop_oneof![Just(Implication::Material), Just(Implication::Goedel)]
    }

    proptest! {
        #[test]
        fn corners_agree_with_crisp_table(c in connectives(), imp in implications(), steps in 1usize..10) {
            let fuzzy = cayley_table(c, &TruthGrid::uniform(steps).unwrap(), imp);
            let crisp = cayley_table(c, &TruthGrid::crisp(), imp);
            let n = fuzzy.rows() - 1;
            prop_assert_eq!(fuzzy.get(0, 0), crisp.get(0, 0));
            prop_assert_eq!(fuzzy.get(0, n), crisp.get(0, 1));
            prop_assert_eq!(fuzzy.get(n, 0), crisp.get(1, 0));
            prop_assert_eq!(fuzzy.get(n, n), crisp.get(1, 1));
        }

        #[test]
        fn modus_ponens_sound_on_any_grid(steps in 1usize..11) {
            let e: Expr = "(p & (p -> q)) -> q".parse().unwrap();
            let c = classify(&e, &TruthGrid::uniform(steps).unwrap(), Implication::Goedel).unwrap();
            prop_assert_eq!(c.verdict, Verdict::Valid);
        }

        #[test]
        fn boolean_composition_is_relational_image(
            bits in proptest::collection::vec(any::<bool>(), 12),
            vec in proptest::collection::vec(any::<bool>(), 3),
        ) {
            let to_g = |b: bool| if b { Grade::ONE } else { Grade::ZERO };
            let r = GradeMatrix::from_fn(3, 4, |i, j| to_g(bits[i * 4 + j]));
            let v: Vec<Grade> = vec.iter().map(|&b| to_g(b)).collect();
            let image = compose_maxmin(&v, &r, Side::Left).unwrap();
            for j in 0..4 {
                let oracle = (0..3).any(|i| vec[i] && bits[i * 4 + j]);
                prop_assert_eq!(image[j] == Grade::ONE, oracle);
            }
        }

        #[test]
        fn composition_is_monotone(
            r in proptest::collection::vec(0.0f64..=1.0, 9),
            v in proptest::collection::vec(0.0f64..=1.0, 3),
            k in 0usize..3, bump in 0.0f64..=1.0,
        ) {
            let m = GradeMatrix::from_fn(3, 3, |i, j| Grade::new(r[i * 3 + j]).unwrap());
            let base = compose_maxmin(&g(&v), &m, Side::Left).unwrap();
            let mut raised = v.clone();
            raised[k] = raised[k].max(bump);
            let up = compose_maxmin(&g(&raised), &m, Side::Left).unwrap();
            prop_assert!(base.iter().zip(&up).all(|(a, b)| a <= b));
            let mut m2 = m.clone();
            m2.set(k, (k + 1) % 3, m.get(k, (k + 1) % 3).max(Grade::new(bump).unwrap()));
            let up2 = compose_maxmin(&g(&v), &m2, Side::Left).unwrap();
            prop_assert!(base.iter().zip(&up2).all(|(a, b)| a <= b));
        }
    }
}
