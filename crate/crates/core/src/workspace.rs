//! The `.fsr` workspace format: a JSON document holding universes, fuzzy
//! soft sets, relations, queries and decision tables.
//!
//! Parsing is strict. Unknown keys, duplicate keys and duplicate names are
//! rejected, and every cross-reference must resolve. Validation collects
//! every problem it finds, each with the path of the offending value.

use std::collections::HashSet;
use std::fmt;
use std::marker::PhantomData;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::decision::{score_alternatives, Criterion, DecisionQuery, PayoffTable};
use crate::grade::Grade;
use crate::membership::{MembershipFunction, MembershipKind};
use crate::relation::{pairwise_relation, FuzzyRelationMatrix, FuzzySoftSet};
use crate::set::{CrispSet, FuzzySet};
use crate::soft::{CrispRelationMatrix, SoftRelation, SoftSet};
use crate::tnorm::TNorm;
use crate::universe::Universe;

pub const SCHEMA_VERSION: u32 = 1;

/// A JSON object that keeps its key order and rejects repeated keys.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V> OrderedMap<V> {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, key: &str) -> Option<&V> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &V)> + '_ {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> + '_ {
        self.0.iter().map(|(k, _)| k.as_str())
    }
}

impl<V> Default for OrderedMap<V> {
    fn default() -> Self {
        OrderedMap(Vec::new())
    }
}

impl<V> FromIterator<(String, V)> for OrderedMap<V> {
    fn from_iter<I: IntoIterator<Item = (String, V)>>(iter: I) -> Self {
        OrderedMap(iter.into_iter().collect())
    }
}

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MapVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for MapVisitor<V> {
            type Value = OrderedMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut seen = HashSet::new();
                let mut entries = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, V>()? {
                    if !seen.insert(key.clone()) {
                        return Err(serde::de::Error::custom(format!("duplicate key `{key}`")));
                    }
                    entries.push((key, value));
                }
                Ok(OrderedMap(entries))
            }
        }

        deserializer.deserialize_map(MapVisitor(PhantomData))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "OrderedMap::is_empty")]
    pub universes: OrderedMap<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fuzzy_soft_sets: Vec<FuzzySoftSetDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub soft_sets: Vec<SoftSetDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub soft_relations: Vec<SoftRelationDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub membership_functions: Vec<MembershipDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub queries: Vec<QueryDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairwise: Vec<PairwiseDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub payoff_tables: Vec<PayoffDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_values: Vec<ExpectedValueDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub distributions: Vec<DistributionDoc>,
}

impl WorkspaceDocument {
    pub fn empty() -> Self {
        WorkspaceDocument {
            version: SCHEMA_VERSION,
            description: None,
            universes: OrderedMap::default(),
            fuzzy_soft_sets: Vec::new(),
            soft_sets: Vec::new(),
            soft_relations: Vec::new(),
            relations: Vec::new(),
            membership_functions: Vec::new(),
            queries: Vec::new(),
            pairwise: Vec::new(),
            payoff_tables: Vec::new(),
            expected_values: Vec::new(),
            distributions: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }
}

/// Parameter → (element → grade).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzySoftSetDoc {
    pub name: String,
    pub universe: String,
    pub parameters: OrderedMap<OrderedMap<f64>>,
}

/// Parameter → member labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftSetDoc {
    pub name: String,
    pub universe: String,
    pub parameters: OrderedMap<Vec<String>>,
}

/// Parameter → related `[row, col]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftRelationDoc {
    pub name: String,
    pub rows: String,
    pub cols: String,
    pub parameters: OrderedMap<Vec<(String, String)>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub name: String,
    pub rows: String,
    pub cols: String,
    pub cells: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipDoc {
    pub name: String,
    pub kind: MembershipKind,
    pub breakpoints: [f64; 4],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDoc {
    pub name: String,
    pub criteria: Vec<Criterion>,
    pub combiner: TNorm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<QueryExpectation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryExpectation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub winner: Option<String>,
    #[serde(default, skip_serializing_if = "OrderedMap::is_empty")]
    pub scores: OrderedMap<ScoreAnnotation>,
}

/// A published score. When `erratum` is set the printed figure is known to
/// be wrong and `recomputed` holds the corrected one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoreAnnotation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recomputed: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub erratum: bool,
}

/// The product relation of two fuzzy soft set parameters, with optional
/// published cell values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairwiseDoc {
    pub name: String,
    pub left: Criterion,
    pub right: Criterion,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<CellErratum>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellErratum {
    pub row: String,
    pub col: String,
    pub printed: f64,
    pub recomputed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PayoffDoc {
    pub name: String,
    pub states: Vec<String>,
    pub actions: Vec<String>,
    pub payoffs: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedValueDoc {
    pub name: String,
    pub options: Vec<OptionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_winner: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionDoc {
    pub label: String,
    pub probability: f64,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionDoc {
    pub name: String,
    pub universe: String,
    pub probability: OrderedMap<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub possibility: Option<OrderedMap<f64>>,
}

/// One validation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub path: String,
    pub reason: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.reason)
    }
}

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{}", .0.iter().map(Issue::to_string).collect::<Vec<_>>().join("\n"))]
    Invalid(Vec<Issue>),
}

impl WorkspaceError {
    pub fn issues(&self) -> Vec<Issue> {
        match self {
            WorkspaceError::Invalid(issues) => issues.clone(),
            other => vec![Issue {
                path: "$".into(),
                reason: other.to_string(),
            }],
        }
    }
}

/// Probability and optional possibility grades over one universe.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    pub name: String,
    pub universe: Universe,
    pub probability: Vec<f64>,
    pub possibility: Option<Vec<Grade>>,
}

/// A validated document with every entry built into its domain type.
#[derive(Debug, Clone)]
pub struct Workspace {
    document: WorkspaceDocument,
    universes: Vec<(String, Universe)>,
    fuzzy_soft_sets: Vec<FuzzySoftSet>,
    soft_sets: Vec<SoftSet>,
    soft_relations: Vec<SoftRelation>,
    relations: Vec<(String, FuzzyRelationMatrix)>,
    membership_functions: Vec<(String, MembershipFunction)>,
    queries: Vec<(String, DecisionQuery)>,
    payoff_tables: Vec<(String, PayoffTable)>,
    distributions: Vec<Distribution>,
}

pub fn parse_workspace(text: &str) -> Result<Workspace, WorkspaceError> {
    let document: WorkspaceDocument =
        serde_json::from_str(text).map_err(|e| WorkspaceError::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })?;
    Workspace::from_document(document)
}

pub fn load_workspace(path: impl AsRef<Path>) -> Result<Workspace, WorkspaceError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| WorkspaceError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_workspace(&text)
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

fn key(section: &str, name: &str) -> String {
    format!("{section}[{name:?}]")
}

struct Validator {
    issues: Vec<Issue>,
}

impl Validator {
    fn report(&mut self, path: impl Into<String>, reason: impl fmt::Display) {
        self.issues.push(Issue {
            path: path.into(),
            reason: reason.to_string(),
        });
    }

    fn unique_names<'a>(&mut self, section: &str, names: impl Iterator<Item = &'a str>) {
        let mut seen = HashSet::new();
        for name in names {
            if !seen.insert(name) {
                self.report(key(section, name), "duplicate name");
            }
        }
    }

    fn universe(
        &mut self,
        universes: &[(String, Universe)],
        path: &str,
        name: &str,
    ) -> Option<Universe> {
        let found = universes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, u)| u.clone());
        if found.is_none() {
            self.report(path, format!("unknown universe `{name}`"));
        }
        found
    }

    fn grade(&mut self, path: String, value: f64) -> Option<Grade> {
        match Grade::new(value) {
            Ok(g) => Some(g),
            Err(e) => {
                self.report(path, e);
                None
            }
        }
    }

    /// Reads an element → grade object that must list every element of
    /// `universe` exactly once.
    fn grades(
        &mut self,
        path: &str,
        universe: &Universe,
        map: &OrderedMap<f64>,
    ) -> Option<Vec<Grade>> {
        let values = self.values(path, universe, map)?;
        let mut ok = true;
        let mut grades = Vec::with_capacity(values.len());
        for (label, v) in universe.labels().iter().zip(values) {
            match self.grade(format!("{path}[{label:?}]"), v) {
                Some(g) => grades.push(g),
                None => ok = false,
            }
        }
        ok.then_some(grades)
    }

    fn values(
        &mut self,
        path: &str,
        universe: &Universe,
        map: &OrderedMap<f64>,
    ) -> Option<Vec<f64>> {
        let mut ok = true;
        for label in map.keys() {
            if !universe.contains(label) {
                self.report(
                    format!("{path}[{label:?}]"),
                    "element is not in the universe",
                );
                ok = false;
            }
        }
        let mut values = Vec::with_capacity(universe.len());
        for label in universe.labels() {
            match map.get(label) {
                Some(&v) => values.push(v),
                None => {
                    self.report(path.to_string(), format!("missing element `{label}`"));
                    ok = false;
                }
            }
        }
        ok.then_some(values)
    }

    fn labels(&mut self, path: &str, universe: &Universe, labels: &[String]) -> bool {
        let mut ok = true;
        for label in labels {
            if !universe.contains(label) {
                self.report(
                    path.to_string(),
                    format!("`{label}` is not in the universe"),
                );
                ok = false;
            }
        }
        ok
    }
}

impl Workspace {
    pub fn from_document(document: WorkspaceDocument) -> Result<Self, WorkspaceError> {
        let mut v = Validator { issues: Vec::new() };
        let doc = &document;

        if doc.version != SCHEMA_VERSION {
            v.report(
                "version",
                format!(
                    "unsupported version {} (expected {SCHEMA_VERSION})",
                    doc.version
                ),
            );
        }

        let mut universes = Vec::new();
        for (name, labels) in doc.universes.iter() {
            match Universe::new(labels.iter().cloned()) {
                Ok(u) => universes.push((name.to_string(), u)),
                Err(e) => v.report(key("universes", name), e),
            }
        }

        v.unique_names(
            "fuzzy_soft_sets",
            doc.fuzzy_soft_sets.iter().map(|s| s.name.as_str()),
        );
        let mut fuzzy_soft_sets = Vec::new();
        // Sets that were declared but failed validation; references to them
        // are not reported a second time.
        let mut broken = HashSet::new();
        for s in &doc.fuzzy_soft_sets {
            let path = key("fuzzy_soft_sets", &s.name);
            let Some(universe) = v.universe(&universes, &format!("{path}.universe"), &s.universe)
            else {
                broken.insert(s.name.as_str());
                continue;
            };
            let mut entries = Vec::new();
            let mut ok = true;
            for (parameter, map) in s.parameters.iter() {
                let ppath = format!("{path}.parameters[{parameter:?}]");
                match v.grades(&ppath, &universe, map) {
                    Some(grades) => {
                        let set =
                            FuzzySet::new(universe.clone(), grades).expect("aligned to universe");
                        entries.push((parameter.to_string(), set));
                    }
                    None => ok = false,
                }
            }
            if ok {
                match FuzzySoftSet::new(s.name.clone(), universe, entries) {
                    Ok(set) => fuzzy_soft_sets.push(set),
                    Err(e) => v.report(path, e),
                }
            } else {
                broken.insert(s.name.as_str());
            }
        }

        v.unique_names("soft_sets", doc.soft_sets.iter().map(|s| s.name.as_str()));
        let mut soft_sets = Vec::new();
        for s in &doc.soft_sets {
            let path = key("soft_sets", &s.name);
            let Some(universe) = v.universe(&universes, &format!("{path}.universe"), &s.universe)
            else {
                continue;
            };
            let mut entries = Vec::new();
            let mut ok = true;
            for (parameter, members) in s.parameters.iter() {
                let ppath = format!("{path}.parameters[{parameter:?}]");
                if v.labels(&ppath, &universe, members) {
                    match CrispSet::from_labels(universe.clone(), members) {
                        Ok(set) => entries.push((parameter.to_string(), set)),
                        Err(e) => {
                            v.report(ppath, e);
                            ok = false;
                        }
                    }
                } else {
                    ok = false;
                }
            }
            if ok {
                match SoftSet::new(s.name.clone(), universe, entries) {
                    Ok(set) => soft_sets.push(set),
                    Err(e) => v.report(path, e),
                }
            }
        }

        v.unique_names(
            "soft_relations",
            doc.soft_relations.iter().map(|s| s.name.as_str()),
        );
        let mut soft_relations = Vec::new();
        for r in &doc.soft_relations {
            let path = key("soft_relations", &r.name);
            let rows = v.universe(&universes, &format!("{path}.rows"), &r.rows);
            let cols = v.universe(&universes, &format!("{path}.cols"), &r.cols);
            let (Some(rows), Some(cols)) = (rows, cols) else {
                continue;
            };
            let mut entries = Vec::new();
            let mut ok = true;
            for (parameter, pairs) in r.parameters.iter() {
                let ppath = format!("{path}.parameters[{parameter:?}]");
                let left: Vec<String> = pairs.iter().map(|p| p.0.clone()).collect();
                let right: Vec<String> = pairs.iter().map(|p| p.1.clone()).collect();
                let valid = v.labels(&ppath, &rows, &left) & v.labels(&ppath, &cols, &right);
                if !valid {
                    ok = false;
                    continue;
                }
                match CrispRelationMatrix::from_pairs(pairs, rows.clone(), cols.clone()) {
                    Ok(m) => entries.push((parameter.to_string(), m)),
                    Err(e) => {
                        v.report(ppath, e);
                        ok = false;
                    }
                }
            }
            if ok {
                match SoftRelation::new(r.name.clone(), entries) {
                    Ok(rel) => soft_relations.push(rel),
                    Err(e) => v.report(path, e),
                }
            }
        }

        v.unique_names("relations", doc.relations.iter().map(|s| s.name.as_str()));
        let mut relations = Vec::new();
        for r in &doc.relations {
            let path = key("relations", &r.name);
            let rows = v.universe(&universes, &format!("{path}.rows"), &r.rows);
            let cols = v.universe(&universes, &format!("{path}.cols"), &r.cols);
            let (Some(rows), Some(cols)) = (rows, cols) else {
                continue;
            };
            if r.cells.len() != rows.len() {
                v.report(
                    format!("{path}.cells"),
                    format!("expected {} rows, found {}", rows.len(), r.cells.len()),
                );
                continue;
            }
            let mut ok = true;
            for (i, row) in r.cells.iter().enumerate() {
                if row.len() != cols.len() {
                    v.report(
                        format!("{path}.cells[{i}]"),
                        format!("expected {} columns, found {}", cols.len(), row.len()),
                    );
                    ok = false;
                    continue;
                }
                for (j, &x) in row.iter().enumerate() {
                    ok &= v.grade(format!("{path}.cells[{i}][{j}]"), x).is_some();
                }
            }
            if ok {
                match FuzzyRelationMatrix::from_values(rows, cols, &r.cells) {
                    Ok(m) => relations.push((r.name.clone(), m)),
                    Err(e) => v.report(path, e),
                }
            }
        }

        v.unique_names(
            "membership_functions",
            doc.membership_functions.iter().map(|s| s.name.as_str()),
        );
        let mut membership_functions = Vec::new();
        for m in &doc.membership_functions {
            let path = key("membership_functions", &m.name);
            let [a, b, c, d] = m.breakpoints;
            let f = match MembershipFunction::new(m.kind, a, b, c, d) {
                Ok(f) => f,
                Err(e) => {
                    v.report(format!("{path}.breakpoints"), e);
                    continue;
                }
            };
            if let Err(e) = f.discretize(&m.points) {
                v.report(format!("{path}.points"), e);
            }
            if let Some(expected) = &m.expected {
                if expected.len() != m.points.len() {
                    v.report(
                        format!("{path}.expected"),
                        format!(
                            "expected {} values, found {}",
                            m.points.len(),
                            expected.len()
                        ),
                    );
                }
            }
            membership_functions.push((m.name.clone(), f));
        }

        v.unique_names("queries", doc.queries.iter().map(|s| s.name.as_str()));
        let mut queries = Vec::new();
        for q in &doc.queries {
            let path = key("queries", &q.name);
            if q.criteria.iter().any(|c| broken.contains(c.set.as_str())) {
                continue;
            }
            let mut dangling = false;
            for (k, c) in q.criteria.iter().enumerate() {
                let reason = match fuzzy_soft_sets.iter().find(|s| s.name() == c.set) {
                    None => format!("unknown fuzzy soft set `{}`", c.set),
                    Some(s) if s.get(&c.parameter).is_err() => {
                        format!("`{}` has no parameter `{}`", c.set, c.parameter)
                    }
                    Some(_) => continue,
                };
                v.report(format!("{path}.criteria[{k}]"), reason);
                dangling = true;
            }
            if dangling {
                continue;
            }
            let query = match DecisionQuery::new(q.criteria.clone(), q.combiner) {
                Ok(query) => query,
                Err(e) => {
                    v.report(format!("{path}.criteria"), e);
                    continue;
                }
            };
            match score_alternatives(&fuzzy_soft_sets, &query) {
                Ok(scores) => {
                    if let Some(expected) = &q.expected {
                        let universe = scores.universe();
                        if let Some(w) = &expected.winner {
                            if !universe.contains(w) {
                                v.report(
                                    format!("{path}.expected.winner"),
                                    format!("`{w}` is not in the universe"),
                                );
                            }
                        }
                        for label in expected.scores.keys() {
                            if !universe.contains(label) {
                                v.report(
                                    format!("{path}.expected.scores[{label:?}]"),
                                    "element is not in the universe",
                                );
                            }
                        }
                    }
                    queries.push((q.name.clone(), query));
                }
                Err(e) => v.report(format!("{path}.criteria"), e),
            }
        }

        v.unique_names("pairwise", doc.pairwise.iter().map(|s| s.name.as_str()));
        for p in &doc.pairwise {
            let path = key("pairwise", &p.name);
            if broken.contains(p.left.set.as_str()) || broken.contains(p.right.set.as_str()) {
                continue;
            }
            let find = |name: &str| {
                fuzzy_soft_sets
                    .iter()
                    .find(|s| s.name() == name)
                    .ok_or_else(|| crate::Error::UnknownSet(name.to_string()))
            };
            let built = find(&p.left.set).and_then(|f| {
                pairwise_relation(
                    f,
                    &p.left.parameter,
                    find(&p.right.set)?,
                    &p.right.parameter,
                )
            });
            match built {
                Ok(m) => {
                    if let Some(expected) = &p.expected {
                        let shape_ok = expected.len() == m.row_universe().len()
                            && expected.iter().all(|r| r.len() == m.col_universe().len());
                        if !shape_ok {
                            v.report(
                                format!("{path}.expected"),
                                format!(
                                    "expected a {}x{} table",
                                    m.row_universe().len(),
                                    m.col_universe().len()
                                ),
                            );
                        }
                    }
                    for (k, e) in p.errata.iter().enumerate() {
                        if !m.row_universe().contains(&e.row) || !m.col_universe().contains(&e.col)
                        {
                            v.report(format!("{path}.errata[{k}]"), "cell is outside the table");
                        }
                    }
                }
                Err(e) => v.report(path, e),
            }
        }

        v.unique_names(
            "payoff_tables",
            doc.payoff_tables.iter().map(|s| s.name.as_str()),
        );
        let mut payoff_tables = Vec::new();
        for t in &doc.payoff_tables {
            let path = key("payoff_tables", &t.name);
            let states_ok = Universe::new(t.states.iter().cloned())
                .map_err(|e| v.report(format!("{path}.states"), e));
            let actions_ok = Universe::new(t.actions.iter().cloned())
                .map_err(|e| v.report(format!("{path}.actions"), e));
            if let Some(bad) = t.payoffs.iter().flatten().find(|x| !x.is_finite()) {
                v.report(
                    format!("{path}.payoffs"),
                    format!("payoff {bad} is not finite"),
                );
                continue;
            }
            if states_ok.is_err() || actions_ok.is_err() {
                continue;
            }
            match PayoffTable::new(t.states.clone(), t.actions.clone(), t.payoffs.clone()) {
                Ok(table) => payoff_tables.push((t.name.clone(), table)),
                Err(e) => v.report(format!("{path}.payoffs"), e),
            }
        }

        v.unique_names(
            "expected_values",
            doc.expected_values.iter().map(|s| s.name.as_str()),
        );
        for e in &doc.expected_values {
            let path = key("expected_values", &e.name);
            if e.options.is_empty() {
                v.report(format!("{path}.options"), "must not be empty");
            }
            for (k, o) in e.options.iter().enumerate() {
                if !(0.0..=1.0).contains(&o.probability) {
                    v.report(
                        format!("{path}.options[{k}].probability"),
                        crate::Error::ProbabilityOutOfRange(o.probability),
                    );
                }
            }
            v.unique_names(
                &format!("{path}.options"),
                e.options.iter().map(|o| o.label.as_str()),
            );
            if let Some(w) = &e.expected_winner {
                if !e.options.iter().any(|o| &o.label == w) {
                    v.report(
                        format!("{path}.expected_winner"),
                        format!("no option labelled `{w}`"),
                    );
                }
            }
        }

        v.unique_names(
            "distributions",
            doc.distributions.iter().map(|s| s.name.as_str()),
        );
        let mut distributions = Vec::new();
        for d in &doc.distributions {
            let path = key("distributions", &d.name);
            let Some(universe) = v.universe(&universes, &format!("{path}.universe"), &d.universe)
            else {
                continue;
            };
            let probability = v.values(&format!("{path}.probability"), &universe, &d.probability);
            if let Some(p) = &probability {
                if let Some(bad) = p.iter().find(|x| !x.is_finite()) {
                    v.report(
                        format!("{path}.probability"),
                        format!("{bad} is not finite"),
                    );
                }
            }
            let possibility = match &d.possibility {
                Some(map) => match v.grades(&format!("{path}.possibility"), &universe, map) {
                    Some(g) => Some(Some(g)),
                    None => None,
                },
                None => Some(None),
            };
            if let (Some(probability), Some(possibility)) = (probability, possibility) {
                distributions.push(Distribution {
                    name: d.name.clone(),
                    universe,
                    probability,
                    possibility,
                });
            }
        }

        if !v.issues.is_empty() {
            return Err(WorkspaceError::Invalid(v.issues));
        }
        Ok(Workspace {
            document,
            universes,
            fuzzy_soft_sets,
            soft_sets,
            soft_relations,
            relations,
            membership_functions,
            queries,
            payoff_tables,
            distributions,
        })
    }

    pub fn document(&self) -> &WorkspaceDocument {
        &self.document
    }

    pub fn to_json(&self) -> String {
        self.document.to_json()
    }

    pub fn universe(&self, name: &str) -> Option<&Universe> {
        find(&self.universes, name)
    }

    pub fn fuzzy_soft_sets(&self) -> &[FuzzySoftSet] {
        &self.fuzzy_soft_sets
    }

    pub fn fuzzy_soft_set(&self, name: &str) -> Option<&FuzzySoftSet> {
        self.fuzzy_soft_sets.iter().find(|s| s.name() == name)
    }

    pub fn soft_set(&self, name: &str) -> Option<&SoftSet> {
        self.soft_sets.iter().find(|s| s.name() == name)
    }

    pub fn soft_sets(&self) -> &[SoftSet] {
        &self.soft_sets
    }

    pub fn soft_relation(&self, name: &str) -> Option<&SoftRelation> {
        self.soft_relations.iter().find(|s| s.name() == name)
    }

    pub fn soft_relations(&self) -> &[SoftRelation] {
        &self.soft_relations
    }

    pub fn relation(&self, name: &str) -> Option<&FuzzyRelationMatrix> {
        find(&self.relations, name)
    }

    pub fn relations(&self) -> &[(String, FuzzyRelationMatrix)] {
        &self.relations
    }

    pub fn membership_function(&self, name: &str) -> Option<&MembershipFunction> {
        find(&self.membership_functions, name)
    }

    pub fn query(&self, name: &str) -> Option<&DecisionQuery> {
        find(&self.queries, name)
    }

    pub fn queries(&self) -> &[(String, DecisionQuery)] {
        &self.queries
    }

    pub fn payoff_table(&self, name: &str) -> Option<&PayoffTable> {
        find(&self.payoff_tables, name)
    }

    pub fn payoff_tables(&self) -> &[(String, PayoffTable)] {
        &self.payoff_tables
    }

    pub fn distributions(&self) -> &[Distribution] {
        &self.distributions
    }

    pub fn distribution(&self, name: &str) -> Option<&Distribution> {
        self.distributions.iter().find(|d| d.name == name)
    }

    /// The product relation described by a `pairwise` entry.
    pub fn pairwise(&self, name: &str) -> Option<FuzzyRelationMatrix> {
        let p = self.document.pairwise.iter().find(|p| p.name == name)?;
        let f = self.fuzzy_soft_set(&p.left.set)?;
        let g = self.fuzzy_soft_set(&p.right.set)?;
        pairwise_relation(f, &p.left.parameter, g, &p.right.parameter).ok()
    }
}

fn find<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, t)| t)
}
