use std::fmt::Write as _;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fuzzysoft::logic::{self, Connective, Expr, Implication, Side, TruthGrid};
use fuzzysoft::workspace::OrderedMap;
use fuzzysoft::{
    load_workspace, pairwise_relation, possibility_dominance, rank, regret_table,
    score_alternatives, uncertainty, validate_probability, DecisionQuery, Grade, GradeMatrix,
    PayoffTable, TNorm, Workspace,
};
use serde::Serialize;

/// Counterexamples shown by `logic classify`; the library keeps them all.
const MAX_COUNTEREXAMPLES: usize = 32;

#[derive(Parser)]
#[command(
    name = "fsr",
    version,
    about = "Fuzzy soft relations on the command line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score and rank the alternatives of a decision query.
    Decide {
        file: PathBuf,
        /// Query to run; defaults to the only query in the file.
        #[arg(long)]
        query: Option<String>,
        /// Override the query's combiner (min or product).
        #[arg(long)]
        combiner: Option<TNorm>,
        /// Emit {scores, ranking, winner} as JSON at full precision.
        #[arg(long)]
        json: bool,
    },
    /// Print the product relation between two parameters.
    Relate {
        file: PathBuf,
        /// Fuzzy soft set name, given twice (left then right).
        #[arg(long = "set", num_args = 1, required = true)]
        sets: Vec<String>,
        /// Parameter name, given twice (left then right).
        #[arg(long = "param", num_args = 1, required = true)]
        params: Vec<String>,
    },
    /// Expected cardinality, uncertainty per row and the average.
    Uncertainty {
        file: PathBuf,
        #[arg(long)]
        relation: String,
    },
    /// Max-min composition of a truth vector with a relation.
    Infer {
        /// Workspace holding the named relation; optional with an inline matrix.
        file: Option<PathBuf>,
        /// Comma separated grades, e.g. `0,1`.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Relation name in the file, or inline rows such as `1,1;0,1`.
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// Regret (opportunity loss) table of a payoff table.
    Regret {
        file: PathBuf,
        #[arg(long)]
        table: String,
    },
    /// Check a workspace and run its diagnostics.
    Validate { file: PathBuf },
    /// Truth tables and classification of formulas.
    Logic {
        #[command(subcommand)]
        command: LogicCommand,
    },
}

#[derive(Subcommand)]
enum LogicCommand {
    /// Cayley table of a binary connective (and, or, implies, equiv).
    Table {
        connective: Connective,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Classify a formula as valid, satisfiable or unsatisfiable.
    Classify {
        formula: String,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(clap::Args)]
struct GridArgs {
    /// Comma separated truth values; defaults to {0, 1}.
    #[arg(long, conflicts_with = "steps")]
    grid: Option<String>,
    /// Evenly spaced grid with this many intervals.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, default_value = "goedel")]
    implication: Implication,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<fuzzysoft::Error> for Failure {
    fn from(e: fuzzysoft::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<fuzzysoft::WorkspaceError> for Failure {
    fn from(e: fuzzysoft::WorkspaceError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage mistakes are input errors; 2 is kept for internal failures.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    panic::set_hook(Box::new(|info| eprintln!("fsr: internal error: {info}")));
    match panic::catch_unwind(|| run(cli.command)) {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("fsr: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("fsr: internal error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Decide {
            file,
            query,
            combiner,
            json,
        } => decide(&load_workspace(file)?, query.as_deref(), combiner, json),
        Command::Relate { file, sets, params } => relate(&load_workspace(file)?, &sets, &params),
        Command::Uncertainty { file, relation } => {
            uncertainty_cmd(&load_workspace(file)?, &relation)
        }
        Command::Infer {
            file,
            vector,
            matrix,
            side,
        } => {
            let ws = file.map(load_workspace).transpose()?;
            infer(ws.as_ref(), &vector, &matrix, side)
        }
        Command::Regret { file, table } => regret(&load_workspace(file)?, &table),
        Command::Validate { file } => validate(&load_workspace(file)?),
        Command::Logic { command } => match command {
            LogicCommand::Table { connective, grid } => {
                let g = grid.grid()?;
                Ok(render_table(
                    &connective.to_string(),
                    &g,
                    &logic::cayley_table(connective, &g, grid.implication),
                ))
            }
            LogicCommand::Classify { formula, grid } => classify(&formula, &grid),
        },
    }
}

fn f4(x: f64) -> String {
    let s = format!("{x:.4}");
    // Avoid printing "-0.0000".
    if s.trim_start_matches('-')
        .bytes()
        .all(|b| b == b'0' || b == b'.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn width<'a>(labels: impl IntoIterator<Item = &'a str>, min: usize) -> usize {
    labels
        .into_iter()
        .map(|l| l.chars().count())
        .fold(min, usize::max)
}

#[derive(Serialize)]
struct DecisionJson {
    query: String,
    combiner: String,
    scores: OrderedMap<f64>,
    ranking: Vec<String>,
    winner: String,
}

fn decide(ws: &Workspace, name: Option<&str>, combiner: Option<TNorm>, json: bool) -> Outcome {
    let (name, query) = match name {
        Some(n) => {
            let q = ws
                .query(n)
                .ok_or_else(|| Failure::Input(format!("no query named `{n}`")))?;
            (n.to_string(), q)
        }
        None => match ws.queries() {
            [(n, q)] => (n.clone(), q),
            [] => return Err(Failure::Input("the workspace has no queries".into())),
            many => {
                let names: Vec<&str> = many.iter().map(|(n, _)| n.as_str()).collect();
                return Err(Failure::Input(format!(
                    "several queries ({}); pick one with --query",
                    names.join(", ")
                )));
            }
        },
    };
    let query = DecisionQuery {
        criteria: query.criteria.clone(),
        combiner: combiner.unwrap_or(query.combiner),
    };
    let scores = score_alternatives(ws.fuzzy_soft_sets(), &query)?;
    let ranking = rank(&scores)?;
    let (winner, best) = ranking.winner();

    if json {
        let doc = DecisionJson {
            query: name,
            combiner: query.combiner.to_string(),
            scores: scores
                .iter()
                .map(|(l, g)| (l.to_string(), g.value()))
                .collect(),
            ranking: ranking.entries().iter().map(|(l, _)| l.clone()).collect(),
            winner: winner.to_string(),
        };
        let mut text =
            serde_json::to_string_pretty(&doc).map_err(|e| Failure::Internal(e.to_string()))?;
        text.push('\n');
        return Ok(text);
    }

    let mut out = String::new();
    let criteria: Vec<String> = query
        .criteria
        .iter()
        .map(|c| format!("{}.{}", c.set, c.parameter))
        .collect();
    writeln!(
        out,
        "query {name} ({}): {}",
        query.combiner,
        criteria.join(", ")
    )
    .unwrap();
    let w = width(ranking.entries().iter().map(|(l, _)| l.as_str()), 11);
    writeln!(out, "rank  {:<w$}  score", "alternative").unwrap();
    for (k, (label, grade)) in ranking.entries().iter().enumerate() {
        writeln!(out, "{:>4}  {label:<w$}  {}", k + 1, f4(grade.value())).unwrap();
    }
    writeln!(out, "winner: {winner} ({})", f4(best.value())).unwrap();
    Ok(out)
}

fn relate(ws: &Workspace, sets: &[String], params: &[String]) -> Outcome {
    let ([f, g], [e, h]) = (sets, params) else {
        return Err(Failure::Input(
            "give --set and --param exactly twice each".into(),
        ));
    };
    let lookup = |name: &str| {
        ws.fuzzy_soft_set(name)
            .ok_or_else(|| Failure::Input(format!("no fuzzy soft set named `{name}`")))
    };
    let m = pairwise_relation(lookup(f)?, e, lookup(g)?, h)?;
    let title = format!("R({e}, {h})");
    let rows: Vec<&str> = m
        .row_universe()
        .labels()
        .iter()
        .map(String::as_str)
        .collect();
    let cols: Vec<&str> = m
        .col_universe()
        .labels()
        .iter()
        .map(String::as_str)
        .collect();
    Ok(render_grid(&title, &rows, &cols, |i, j| {
        f4(m.cells().get(i, j).value())
    }))
}

fn uncertainty_cmd(ws: &Workspace, name: &str) -> Outcome {
    let t = ws
        .relation(name)
        .ok_or_else(|| Failure::Input(format!("no relation named `{name}`")))?;
    let report = uncertainty::report(t)?;
    let w = width(report.rows.iter().map(|r| r.element.as_str()), 7);
    let mut out = String::new();
    writeln!(out, "{:<w$}  card    V", "element").unwrap();
    for row in &report.rows {
        writeln!(
            out,
            "{:<w$}  {}  {}",
            row.element,
            f4(row.expected_cardinality),
            f4(row.uncertainty)
        )
        .unwrap();
    }
    writeln!(out, "G = {}", f4(report.average)).unwrap();
    Ok(out)
}

fn parse_grades(text: &str) -> Result<Vec<Grade>, Failure> {
    text.split(',')
        .map(|s| {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| Failure::Input(format!("`{}` is not a number", s.trim())))?;
            Ok(Grade::new(v)?)
        })
        .collect()
}

fn infer(ws: Option<&Workspace>, vector: &str, matrix: &str, side: Side) -> Outcome {
    let v = parse_grades(vector)?;
    let named = ws.and_then(|ws| ws.relation(matrix));
    let m = match named {
        Some(r) => r.cells().clone(),
        None if matrix.contains(',') || matrix.contains(';') || matrix.parse::<f64>().is_ok() => {
            let rows = matrix
                .split(';')
                .map(|r| Ok(parse_grades(r)?.into_iter().map(Grade::value).collect()))
                .collect::<Result<Vec<Vec<f64>>, Failure>>()?;
            GradeMatrix::from_values(&rows)?
        }
        None => return Err(Failure::Input(format!("no relation named `{matrix}`"))),
    };
    let out = logic::compose_maxmin(&v, &m, side)?;
    let text: Vec<String> = out.iter().map(|g| f4(g.value())).collect();
    Ok(format!("{}\n", text.join(" ")))
}

fn regret(ws: &Workspace, name: &str) -> Outcome {
    let p = ws
        .payoff_table(name)
        .ok_or_else(|| Failure::Input(format!("no payoff table named `{name}`")))?;
    let r = regret_table(p);
    let mut out = render_payoffs("payoff", p);
    out.push('\n');
    out.push_str(&render_payoffs("regret", &r));
    // Minimax regret: the action whose worst regret is smallest.
    let worst: Vec<f64> = (0..r.actions().len())
        .map(|j| {
            (0..r.states().len())
                .map(|i| r.get(i, j))
                .fold(0.0, f64::max)
        })
        .collect();
    let mut best = 0;
    for (j, &w) in worst.iter().enumerate() {
        if w < worst[best] {
            best = j;
        }
    }
    if let Some(action) = r.actions().get(best) {
        writeln!(out, "\nminimax regret: {action} ({})", f4(worst[best])).unwrap();
    }
    Ok(out)
}

fn render_payoffs(title: &str, p: &PayoffTable) -> String {
    let rows: Vec<&str> = p.states().iter().map(String::as_str).collect();
    let cols: Vec<&str> = p.actions().iter().map(String::as_str).collect();
    render_grid(title, &rows, &cols, |i, j| f4(p.get(i, j)))
}

fn render_grid(
    title: &str,
    rows: &[&str],
    cols: &[&str],
    cell: impl Fn(usize, usize) -> String,
) -> String {
    let cells: Vec<Vec<String>> = (0..rows.len())
        .map(|i| (0..cols.len()).map(|j| cell(i, j)).collect())
        .collect();
    let first = width(rows.iter().copied().chain([title]), 0);
    let w = cols
        .iter()
        .map(|c| c.chars().count())
        .chain(cells.iter().flatten().map(String::len))
        .max()
        .unwrap_or(0);
    let mut out = format!("{title:<first$}");
    for c in cols {
        write!(out, "  {c:>w$}").unwrap();
    }
    out.push('\n');
    for (label, row) in rows.iter().zip(&cells) {
        write!(out, "{label:<first$}").unwrap();
        for c in row {
            write!(out, "  {c:>w$}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn render_table(title: &str, grid: &TruthGrid, table: &GradeMatrix) -> String {
    let labels: Vec<String> = grid.values().iter().map(|g| f4(g.value())).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    render_grid(title, &refs, &refs, |i, j| f4(table.get(i, j).value()))
}

impl GridArgs {
    fn grid(&self) -> Result<TruthGrid, Failure> {
        match (&self.grid, self.steps) {
            (Some(text), _) => {
                let values: Vec<f64> = parse_grades(text)?.into_iter().map(Grade::value).collect();
                Ok(TruthGrid::new(&values)?)
            }
            (None, Some(n)) => Ok(TruthGrid::uniform(n)?),
            (None, None) => Ok(TruthGrid::crisp()),
        }
    }
}

fn classify(formula: &str, args: &GridArgs) -> Outcome {
    let expr: Expr = formula.parse()?;
    let grid = args.grid()?;
    let c = logic::classify(&expr, &grid, args.implication)?;
    let mut out = String::new();
    writeln!(out, "formula: {expr}").unwrap();
    writeln!(out, "implication: {}", args.implication).unwrap();
    writeln!(out, "assignments: {}", c.assignments).unwrap();
    writeln!(out, "verdict: {}", c.verdict).unwrap();
    if !c.counterexamples.is_empty() {
        writeln!(out, "counterexamples: {}", c.counterexamples.len()).unwrap();
        for x in c.counterexamples.iter().take(MAX_COUNTEREXAMPLES) {
            let bound: Vec<String> = x
                .assignment
                .iter()
                .map(|(v, g)| format!("{v}={}", f4(g.value())))
                .collect();
            writeln!(out, "  {} -> {}", bound.join(" "), f4(x.value.value())).unwrap();
        }
        if c.counterexamples.len() > MAX_COUNTEREXAMPLES {
            writeln!(
                out,
                "  ... {} more",
                c.counterexamples.len() - MAX_COUNTEREXAMPLES
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn validate(ws: &Workspace) -> Outcome {
    let doc = ws.document();
    let mut out = String::new();
    let mut failures = 0;
    let mut line = |out: &mut String, ok: bool, text: String| {
        failures += usize::from(!ok);
        writeln!(out, "{:<4}  {text}", if ok { "ok" } else { "FAIL" }).unwrap();
    };
    writeln!(
        out,
        "workspace: {} universes, {} fuzzy soft sets, {} soft sets, {} relations, {} queries",
        doc.universes.len(),
        ws.fuzzy_soft_sets().len(),
        ws.soft_sets().len(),
        ws.relations().len(),
        ws.queries().len()
    )
    .unwrap();

    for d in ws.distributions() {
        let verdict = validate_probability(&d.probability);
        let detail = if verdict.is_valid() {
            String::new()
        } else {
            format!(" {:?}", verdict.violations)
        };
        line(
            &mut out,
            verdict.is_valid(),
            format!("{}: probability sum {}{detail}", d.name, f4(verdict.total)),
        );
        if let Some(poss) = &d.possibility {
            let violations = possibility_dominance(&d.probability, poss)?;
            let labels: Vec<&str> = violations
                .iter()
                .map(|v| d.universe.label(v.index))
                .collect();
            let detail = if labels.is_empty() {
                String::new()
            } else {
                format!(" (exceeded at {})", labels.join(", "))
            };
            line(
                &mut out,
                violations.is_empty(),
                format!("{}: possibility dominates probability{detail}", d.name),
            );
        }
    }

    for ev in &doc.expected_values {
        let probs: Vec<f64> = ev.options.iter().map(|o| o.probability).collect();
        let bad: Vec<&str> = ev
            .options
            .iter()
            .filter(|o| !(0.0..=1.0).contains(&o.probability))
            .map(|o| o.label.as_str())
            .collect();
        line(
            &mut out,
            bad.is_empty(),
            format!(
                "{}: {} option probabilities in [0, 1]",
                ev.name,
                probs.len()
            ),
        );
    }

    for (name, r) in ws.relations() {
        if r.row_universe() != r.col_universe() {
            continue;
        }
        let p = r.properties()?;
        writeln!(
            out,
            "info  {name}: reflexive {}, symmetric {}, min-transitive {}",
            p.reflexive, p.symmetric, p.min_transitive
        )
        .unwrap();
    }

    for (name, q) in ws.queries() {
        let scores = score_alternatives(ws.fuzzy_soft_sets(), q)?;
        let ranking = rank(&scores)?;
        let (winner, grade) = ranking.winner();
        let expected = doc
            .queries
            .iter()
            .find(|d| &d.name == name)
            .and_then(|d| d.expected.as_ref())
            .and_then(|e| e.winner.as_deref());
        match expected {
            Some(w) => line(
                &mut out,
                w == winner,
                format!(
                    "{name}: winner {winner} ({}), annotated {w}",
                    f4(grade.value())
                ),
            ),
            None => writeln!(out, "info  {name}: winner {winner} ({})", f4(grade.value())).unwrap(),
        }
    }

    if failures > 0 {
        print!("{out}");
        return Err(Failure::Input(format!("{failures} diagnostic(s) failed")));
    }
    out.push_str("all diagnostics passed\n");
    Ok(out)
}
