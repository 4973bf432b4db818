//! Fuzzy soft sets, fuzzy relation matrices and the operators built on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::matrix::{GradeMatrix, Matrix};
use crate::set::FuzzySet;
use crate::soft::{tuple_label, CrispRelationMatrix};
use crate::tnorm::TNorm;
use crate::universe::Universe;
use crate::util::Cartesian;

/// A parameterized family of fuzzy subsets of one universe, `(F, A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySoftSet {
    name: String,
    universe: Universe,
    parameters: Vec<String>,
    sets: Vec<FuzzySet>,
}

impl FuzzySoftSet {
    /// Member sets whose universe holds the same labels in another order are
    /// realigned to `universe`.
    pub fn new<S: Into<String>>(
        name: S,
        universe: Universe,
        entries: Vec<(String, FuzzySet)>,
    ) -> Result<Self> {
        let template = FuzzySet::constant(universe.clone(), Grade::ZERO);
        let mut parameters = Vec::with_capacity(entries.len());
        let mut sets = Vec::with_capacity(entries.len());
        for (parameter, set) in entries {
            if parameters.contains(&parameter) {
                return Err(Error::DuplicateLabel(parameter));
            }
            let grades = template.aligned_grades(&set)?;
            parameters.push(parameter);
            sets.push(FuzzySet::new(universe.clone(), grades)?);
        }
        Ok(FuzzySoftSet {
            name: name.into(),
            universe,
            parameters,
            sets,
        })
    }

    /// Builds from parameter → grades listed in universe order.
    pub fn from_values<S: Into<String>>(
        name: S,
        universe: Universe,
        entries: &[(&str, &[f64])],
    ) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|(p, v)| Ok((p.to_string(), FuzzySet::from_values(universe.clone(), v)?)))
            .collect::<Result<Vec<_>>>()?;
        FuzzySoftSet::new(name, universe, entries)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn get(&self, parameter: &str) -> Result<&FuzzySet> {
        self.parameters
            .iter()
            .position(|p| p == parameter)
            .map(|i| &self.sets[i])
            .ok_or_else(|| Error::UnknownParameter {
                set: self.name.clone(),
                parameter: parameter.to_string(),
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &FuzzySet)> + '_ {
        self.parameters
            .iter()
            .map(String::as_str)
            .zip(self.sets.iter())
    }

    /// `¬(F, A)`: every approximation complemented.
    pub fn not(&self) -> FuzzySoftSet {
        FuzzySoftSet {
            name: format!("not {}", self.name),
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            sets: self.sets.iter().map(FuzzySet::complement).collect(),
        }
    }
}

/// Connectives lifting fuzzy soft sets to tuple-parameterized products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoftConnective {
    And,
    Or,
    Not,
    Nand,
    Nor,
}

/// Applies a connective to a family of fuzzy soft sets over a shared
/// universe. Binary-style connectives range over the cartesian product of
/// the parameter lists, in order; `Not` takes exactly one set.
///
/// `Nand` and `Nor` are the complements of `And` and `Or`.
pub fn soft_product(op: SoftConnective, sets: &[&FuzzySoftSet]) -> Result<FuzzySoftSet> {
    if op == SoftConnective::Not {
        return match sets {
            [one] => Ok(one.not()),
            _ => Err(Error::NotArity(sets.len())),
        };
    }
    let first = sets.first().ok_or(Error::Empty("fuzzy soft set list"))?;
    let universe = first.universe.clone();
    let join: fn(&FuzzySet, &FuzzySet) -> Result<FuzzySet> = match op {
        SoftConnective::And | SoftConnective::Nand => FuzzySet::intersection,
        _ => FuzzySet::union,
    };
    let negate = matches!(op, SoftConnective::Nand | SoftConnective::Nor);

    let lens = sets.iter().map(|s| s.parameters.len()).collect();
    let mut entries = Vec::new();
    for tuple in Cartesian::new(lens) {
        let mut acc = sets[0].sets[tuple[0]].clone();
        for (k, &p) in tuple.iter().enumerate().skip(1) {
            acc = join(&acc, &sets[k].sets[p])?;
        }
        if negate {
            acc = acc.complement();
        }
        let names: Vec<&str> = tuple
            .iter()
            .enumerate()
            .map(|(k, &p)| sets[k].parameters[p].as_str())
            .collect();
        entries.push((tuple_label(&names), acc));
    }
    let name = sets.iter().map(|s| s.name.as_str()).collect::<Vec<_>>();
    let name = format!("{op:?}({})", name.join(", ")).to_lowercase();
    FuzzySoftSet::new(name, universe, entries)
}

/// Combines fuzzy sets over a shared universe element by element with a
/// t-norm.
pub fn nary_combine(sets: &[&FuzzySet], combiner: TNorm) -> Result<FuzzySet> {
    let (first, rest) = sets.split_first().ok_or(Error::Empty("fuzzy set list"))?;
    let aligned = rest
        .iter()
        .map(|s| first.aligned_grades(s))
        .collect::<Result<Vec<_>>>()?;
    let grades = (0..first.len())
        .map(|i| {
            aligned
                .iter()
                .fold(first.grades()[i], |acc, g| combiner.apply(acc, g[i]))
        })
        .collect();
    FuzzySet::new(first.universe().clone(), grades)
}

/// Lifts a crisp map `f: X1 × … × Xr → Y` to fuzzy inputs:
/// `μ(y) = max over f⁻¹(y) of min of the component grades`, zero when the
/// preimage is empty.
pub fn extension_principle<F>(inputs: &[&FuzzySet], codomain: Universe, f: F) -> Result<FuzzySet>
where
    F: Fn(&[&str]) -> String,
{
    let mut grades = vec![Grade::ZERO; codomain.len()];
    let lens = inputs.iter().map(|s| s.len()).collect();
    for tuple in Cartesian::new(lens) {
        let labels: Vec<&str> = tuple
            .iter()
            .enumerate()
            .map(|(k, &i)| inputs[k].universe().label(i))
            .collect();
        let y = f(&labels);
        let slot = codomain.position(&y).ok_or(Error::OutsideCodomain(y))?;
        let strength = tuple
            .iter()
            .enumerate()
            .map(|(k, &i)| inputs[k].grades()[i])
            .fold(Grade::ONE, Grade::min);
        grades[slot] = grades[slot].max(strength);
    }
    FuzzySet::new(codomain, grades)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FuzzyProperties {
    pub reflexive: bool,
    pub symmetric: bool,
    pub min_transitive: bool,
}

impl FuzzyProperties {
    pub fn is_similarity(&self) -> bool {
        self.reflexive && self.symmetric
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_similarity() && self.min_transitive
    }
}

/// A fuzzy relation between two finite universes, `t_ij = T(e_i, e_j)`.
#[derive(Clone, PartialEq)]
pub struct FuzzyRelationMatrix {
    rows: Universe,
    cols: Universe,
    cells: GradeMatrix,
}

impl FuzzyRelationMatrix {
    pub fn new(rows: Universe, cols: Universe, cells: GradeMatrix) -> Result<Self> {
        if cells.rows() != rows.len() || cells.cols() != cols.len() {
            return Err(Error::DimensionMismatch {
                left_rows: rows.len(),
                left_cols: cols.len(),
                right_rows: cells.rows(),
                right_cols: cells.cols(),
            });
        }
        Ok(FuzzyRelationMatrix { rows, cols, cells })
    }

    pub fn from_values(rows: Universe, cols: Universe, values: &[Vec<f64>]) -> Result<Self> {
        let cells = if values.is_empty() {
            Matrix::filled(0, cols.len(), Grade::ZERO)
        } else {
            GradeMatrix::from_values(values)?
        };
        FuzzyRelationMatrix::new(rows, cols, cells)
    }

    pub fn square(universe: Universe, values: &[Vec<f64>]) -> Result<Self> {
        FuzzyRelationMatrix::from_values(universe.clone(), universe, values)
    }

    pub fn constant(rows: Universe, cols: Universe, grade: Grade) -> Self {
        let cells = Matrix::filled(rows.len(), cols.len(), grade);
        FuzzyRelationMatrix { rows, cols, cells }
    }

    /// Ones on the diagonal, zeros elsewhere.
    pub fn identity(universe: Universe) -> Self {
        let n = universe.len();
        let cells = Matrix::from_fn(n, n, |i, j| if i == j { Grade::ONE } else { Grade::ZERO });
        FuzzyRelationMatrix {
            rows: universe.clone(),
            cols: universe,
            cells,
        }
    }

    pub fn row_universe(&self) -> &Universe {
        &self.rows
    }

    pub fn col_universe(&self) -> &Universe {
        &self.cols
    }

    pub fn cells(&self) -> &GradeMatrix {
        &self.cells
    }

    pub fn values(&self) -> Vec<Vec<f64>> {
        self.cells.values()
    }

    pub fn get(&self, row: &str, col: &str) -> Result<Grade> {
        Ok(self
            .cells
            .get(self.rows.require(row)?, self.cols.require(col)?))
    }

    pub fn transpose(&self) -> Self {
        FuzzyRelationMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            cells: self.cells.transpose(),
        }
    }

    /// Row `i` as a fuzzy subset of the column universe.
    pub fn row_set(&self, i: usize) -> Result<FuzzySet> {
        if i >= self.rows.len() {
            return Err(Error::IndexOutOfBounds {
                index: i,
                len: self.rows.len(),
            });
        }
        FuzzySet::new(self.cols.clone(), self.cells.row(i).to_vec())
    }

    fn require_same(&self, other: &FuzzyRelationMatrix) -> Result<()> {
        self.cells.same_shape(&other.cells)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::UniverseMismatch);
        }
        Ok(())
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows.len())
        } else {
            Err(Error::NotSquare {
                rows: self.rows.len(),
                cols: self.cols.len(),
            })
        }
    }

    /// Pointwise max.
    pub fn union(&self, other: &FuzzyRelationMatrix) -> Result<Self> {
        self.require_same(other)?;
        Ok(FuzzyRelationMatrix {
            cells: self.cells.zip_with(&other.cells, Grade::max)?,
            ..self.clone()
        })
    }

    /// Pointwise min.
    pub fn intersection(&self, other: &FuzzyRelationMatrix) -> Result<Self> {
        self.require_same(other)?;
        Ok(FuzzyRelationMatrix {
            cells: self.cells.zip_with(&other.cells, Grade::min)?,
            ..self.clone()
        })
    }

    /// `self ⊆ other`: every cell of `self` is at most the matching cell of `other`.
    pub fn is_contained_in(&self, other: &FuzzyRelationMatrix) -> Result<bool> {
        self.require_same(other)?;
        Ok(self
            .cells
            .cells()
            .iter()
            .zip(other.cells.cells())
            .all(|(a, b)| a <= b))
    }

    /// Weak α-cut: a cell is kept iff its grade is at least `alpha`.
    pub fn alpha_cut(&self, alpha: Grade) -> CrispRelationMatrix {
        CrispRelationMatrix::new(
            self.rows.clone(),
            self.cols.clone(),
            self.cells.map(|g| g >= alpha),
        )
        .expect("shape preserved")
    }

    pub fn properties(&self) -> Result<FuzzyProperties> {
        let n = self.require_square()?;
        let t = &self.cells;
        let reflexive = (0..n).all(|i| t.get(i, i) == Grade::ONE);
        let symmetric = (0..n).all(|i| (0..i).all(|j| t.get(i, j) == t.get(j, i)));
        let min_transitive = (0..n).all(|a| {
            (0..n).all(|c| {
                let through = (0..n)
                    .map(|b| t.get(a, b).min(t.get(b, c)))
                    .fold(Grade::ZERO, Grade::max);
                t.get(a, c) >= through
            })
        });
        Ok(FuzzyProperties {
            reflexive,
            symmetric,
            min_transitive,
        })
    }

    /// The class `[e]_T`, row `e` read as a fuzzy subset of the universe.
    pub fn class_of(&self, e: &str) -> Result<EquivalenceClass> {
        self.require_square()?;
        let i = self.rows.require(e)?;
        Ok(EquivalenceClass {
            center: e.to_string(),
            membership: self.row_set(i)?,
        })
    }

    /// Every class, in universe order.
    pub fn quotient(&self) -> Result<Vec<EquivalenceClass>> {
        let n = self.require_square()?;
        (0..n)
            .map(|i| {
                Ok(EquivalenceClass {
                    center: self.rows.label(i).to_string(),
                    membership: self.row_set(i)?,
                })
            })
            .collect()
    }
}

impl fmt::Debug for FuzzyRelationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyRelationMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("cells", &self.values())
            .finish()
    }
}

/// The fuzzy class of one element under a relation on a finite set.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceClass {
    pub center: String,
    pub membership: FuzzySet,
}

/// Relation of `(F, A)` on `(G, B)` for one parameter pair: cell `(l, k)` is
/// `μ_F(e_i)(u_l) × μ_G(e_j)(u_k)`.
pub fn pairwise_relation(
    f: &FuzzySoftSet,
    e_i: &str,
    g: &FuzzySoftSet,
    e_j: &str,
) -> Result<FuzzyRelationMatrix> {
    let left = f.get(e_i)?;
    let right = g.get(e_j)?;
    let cells = Matrix::from_fn(left.len(), right.len(), |l, k| {
        left.grades()[l].product(right.grades()[k])
    });
    FuzzyRelationMatrix::new(left.universe().clone(), right.universe().clone(), cells)
}

/// A fuzzy soft relation: a body per parameter tuple. With `B =
/// FuzzyRelationMatrix` it is the pairwise form, with `B = FuzzySet` the
/// diagonal (n-ary) form.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySoftRelation<B> {
    parameters: Vec<Vec<String>>,
    bodies: Vec<B>,
}

impl<B> FuzzySoftRelation<B> {
    pub fn parameters(&self) -> &[Vec<String>] {
        &self.parameters
    }

    pub fn get<S: AsRef<str>>(&self, tuple: &[S]) -> Option<&B> {
        self.parameters
            .iter()
            .position(|p| {
                p.len() == tuple.len() && p.iter().zip(tuple).all(|(a, b)| a == b.as_ref())
            })
            .map(|i| &self.bodies[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[String], &B)> + '_ {
        self.parameters
            .iter()
            .map(Vec::as_slice)
            .zip(self.bodies.iter())
    }
}

impl FuzzySoftRelation<FuzzyRelationMatrix> {
    /// Pairwise relation matrices for each requested `(x, y) ∈ A × B`.
    pub fn pairwise(f: &FuzzySoftSet, g: &FuzzySoftSet, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut parameters = Vec::new();
        let mut bodies = Vec::new();
        for &(x, y) in pairs {
            bodies.push(pairwise_relation(f, x, g, y)?);
            parameters.push(vec![x.to_string(), y.to_string()]);
        }
        Ok(FuzzySoftRelation { parameters, bodies })
    }
}

impl FuzzySoftRelation<FuzzySet> {
    /// For each tuple `(x1, …, xn)` drawn from the sets' parameters, the
    /// combination `F1(x1) ∩ … ∩ Fn(xn)` under `combiner`.
    pub fn nary<S: AsRef<str>>(
        sets: &[&FuzzySoftSet],
        tuples: &[Vec<S>],
        combiner: TNorm,
    ) -> Result<Self> {
        let mut parameters = Vec::new();
        let mut bodies = Vec::new();
        for tuple in tuples {
            if tuple.len() != sets.len() {
                return Err(Error::LengthMismatch {
                    expected: sets.len(),
                    found: tuple.len(),
                });
            }
            let members = sets
                .iter()
                .zip(tuple)
                .map(|(s, p)| s.get(p.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            bodies.push(nary_combine(&members, combiner)?);
            parameters.push(tuple.iter().map(|p| p.as_ref().to_string()).collect());
        }
        Ok(FuzzySoftRelation { parameters, bodies })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cars() -> Universe {
        Universe::new(["c1", "c2", "c3", "c4", "c5", "c6"]).unwrap()
    }

    fn cost() -> FuzzySoftSet {
        FuzzySoftSet::from_values(
            "F",
            cars(),
            &[
                ("costly", &[0.5, 0.8, 0.0, 0.1, 1.0, 0.9]),
                ("moderate", &[0.2, 0.4, 0.5, 0.6, 0.5, 0.7]),
                ("cheap", &[0.5, 0.1, 1.0, 0.9, 0.0, 0.4]),
            ],
        )
        .unwrap()
    }

    fn looks() -> FuzzySoftSet {
        FuzzySoftSet::from_values(
            "G",
            cars(),
            &[
                ("fuel efficient", &[0.4, 0.6, 0.8, 1.0, 0.2, 0.5]),
                ("beautiful", &[0.8, 0.0, 0.5, 0.7, 0.9, 0.8]),
                ("having metallic color", &[1.0, 0.0, 0.0, 1.0, 0.0, 1.0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn min_relation_of_two_fuzzy_soft_sets() {
        let (f, g) = (cost(), looks());
        let r = FuzzySoftRelation::nary(
            &[&f, &g],
            &[vec!["cheap", "fuel efficient"], vec!["cheap", "beautiful"]],
            TNorm::Min,
        )
        .unwrap();
        let fe = r.get(&["cheap", "fuel efficient"]).unwrap();
        assert_eq!(fe.values(), vec![0.4, 0.1, 0.8, 0.9, 0.0, 0.4]);
        let b = r.get(&["cheap", "beautiful"]).unwrap();
        assert_eq!(b.values(), vec![0.5, 0.0, 0.5, 0.7, 0.0, 0.4]);
        assert!(r.get(&["costly", "beautiful"]).is_none());
    }

    #[test]
    fn connectives_on_one_tuple() {
        let (f, g) = (cost(), looks());
        let and = soft_product(SoftConnective::And, &[&f, &g]).unwrap();
        assert_eq!(and.parameters().len(), 9);
        assert_eq!(and.parameters()[0], "costly, fuel efficient");
        let key = "cheap, fuel efficient";
        assert_eq!(and.get(key).unwrap().grade("c1").unwrap().value(), 0.4);
        let or = soft_product(SoftConnective::Or, &[&f, &g]).unwrap();
        assert_eq!(or.get(key).unwrap().grade("c1").unwrap().value(), 0.5);
        let nand = soft_product(SoftConnective::Nand, &[&f, &g]).unwrap();
        assert!((nand.get(key).unwrap().grade("c1").unwrap().value() - 0.6).abs() < 1e-12);
        let nor = soft_product(SoftConnective::Nor, &[&f, &g]).unwrap();
        assert!((nor.get(key).unwrap().grade("c1").unwrap().value() - 0.5).abs() < 1e-12);
        let not = soft_product(SoftConnective::Not, &[&f]).unwrap();
        assert_eq!(not.get("cheap").unwrap().grade("c3").unwrap().value(), 0.0);
        assert_eq!(
            soft_product(SoftConnective::Not, &[&f, &g]).unwrap_err(),
            Error::NotArity(2)
        );
    }

    #[test]
    fn mismatched_universe_is_rejected() {
        let other = FuzzySoftSet::from_values(
            "H",
            Universe::new(["c1", "c2"]).unwrap(),
            &[("x", &[0.1, 0.2])],
        )
        .unwrap();
        assert_eq!(
            soft_product(SoftConnective::And, &[&cost(), &other]).unwrap_err(),
            Error::UniverseMismatch
        );
        let a = cost();
        let b = other.get("x").unwrap();
        assert_eq!(
            nary_combine(&[a.get("cheap").unwrap(), b], TNorm::Min).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn nary_combine_singleton_is_identity() {
        let f = cost();
        let cheap = f.get("cheap").unwrap();
        assert_eq!(&nary_combine(&[cheap], TNorm::Product).unwrap(), cheap);
        assert!(nary_combine(&[], TNorm::Min).is_err());
    }

    #[test]
    fn pairwise_product_matrix() {
        let watches = Universe::new(["w1", "w2", "w3", "w4", "w5", "w6"]).unwrap();
        let f = FuzzySoftSet::from_values(
            "F",
            watches.clone(),
            &[
                ("cheap", &[0.1, 0.25, 0.2, 0.6, 0.15, 0.35]),
                ("costly", &[1.0, 0.75, 0.8, 0.55, 0.9, 0.85]),
            ],
        )
        .unwrap();
        let g = FuzzySoftSet::from_values(
            "G",
            watches,
            &[("beautiful", &[0.65, 1.0, 0.8, 0.7, 0.8, 0.75])],
        )
        .unwrap();
        let r = pairwise_relation(&f, "costly", &g, "beautiful").unwrap();
        assert!((r.get("w2", "w1").unwrap().value() - 0.4875).abs() < 1e-12);
        let r = pairwise_relation(&f, "cheap", &g, "beautiful").unwrap();
        assert!((r.get("w4", "w2").unwrap().value() - 0.6).abs() < 1e-12);
        assert!(matches!(
            pairwise_relation(&f, "pricey", &g, "beautiful"),
            Err(Error::UnknownParameter { .. })
        ));
    }

    #[test]
    fn relation_algebra_small_cases() {
        let u = Universe::new(["a"]).unwrap();
        let t1 = FuzzyRelationMatrix::square(u.clone(), &[vec![0.3]]).unwrap();
        let t2 = FuzzyRelationMatrix::square(u.clone(), &[vec![0.7]]).unwrap();
        assert_eq!(t1.intersection(&t2).unwrap().values(), vec![vec![0.3]]);
        assert_eq!(t1.union(&t2).unwrap().values(), vec![vec![0.7]]);
        assert!(t1.is_contained_in(&t1).unwrap());
        assert!(t1.is_contained_in(&t2).unwrap());
        assert!(!t2.is_contained_in(&t1).unwrap());
        let big = FuzzyRelationMatrix::identity(Universe::new(["a", "b"]).unwrap());
        assert!(matches!(
            t1.union(&big),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn far() -> FuzzyRelationMatrix {
        FuzzyRelationMatrix::from_values(
            Universe::new(["Paris", "Berlin", "Amsterdam"]).unwrap(),
            Universe::new(["Rome", "Madrid", "Lisbon"]).unwrap(),
            &[
                vec![0.60, 0.45, 0.40],
                vec![0.55, 0.65, 0.70],
                vec![0.75, 0.50, 0.80],
            ],
        )
        .unwrap()
    }

    #[test]
    fn alpha_cut_of_far_relation() {
        let cut = far().alpha_cut(Grade::new(0.6).unwrap());
        assert_eq!(
            cut.pairs(),
            vec![
                ("Paris", "Rome"),
                ("Berlin", "Madrid"),
                ("Berlin", "Lisbon"),
                ("Amsterdam", "Rome"),
                ("Amsterdam", "Lisbon"),
            ]
        );
        assert_eq!(far().alpha_cut(Grade::ZERO).pairs().len(), 9);
        assert!(far().alpha_cut(Grade::ONE).pairs().is_empty());
    }

    #[test]
    fn fuzzy_properties() {
        let e = Universe::new(["e1", "e2", "e3"]).unwrap();
        assert!(FuzzyRelationMatrix::identity(e.clone())
            .properties()
            .unwrap()
            .is_equivalence());
        let two = FuzzyRelationMatrix::square(
            Universe::new(["e1", "e2"]).unwrap(),
            &[vec![1.0, 0.6], vec![0.6, 1.0]],
        )
        .unwrap();
        assert!(two.properties().unwrap().is_equivalence());
        let broken = FuzzyRelationMatrix::square(
            e,
            &[
                vec![1.0, 0.9, 0.1],
                vec![0.9, 1.0, 0.9],
                vec![0.1, 0.9, 1.0],
            ],
        )
        .unwrap();
        let p = broken.properties().unwrap();
        assert!(p.reflexive && p.symmetric && !p.min_transitive);
        assert!(matches!(far().properties(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn classes_and_quotient() {
        let e = Universe::new(["e1", "e2"]).unwrap();
        let t = FuzzyRelationMatrix::square(e.clone(), &[vec![1.0, 0.6], vec![0.6, 1.0]]).unwrap();
        let c = t.class_of("e1").unwrap();
        assert_eq!(c.membership.values(), vec![1.0, 0.6]);
        let id = FuzzyRelationMatrix::identity(e.clone());
        assert_eq!(
            id.class_of("e2").unwrap().membership.values(),
            vec![0.0, 1.0]
        );
        let ones = FuzzyRelationMatrix::constant(e.clone(), e, Grade::ONE);
        assert!(ones
            .quotient()
            .unwrap()
            .iter()
            .all(|c| c.membership.values() == vec![1.0, 1.0]));
        assert!(t.class_of("e3").is_err());
    }

    #[test]
    fn extension_principle_cases() {
        let u = Universe::new(["0", "1"]).unwrap();
        let a = FuzzySet::from_values(u.clone(), &[0.3, 0.9]).unwrap();
        let same = extension_principle(&[&a], u.clone(), |x| x[0].to_string()).unwrap();
        assert_eq!(same, a);

        // Only "2" is hit by a constant map; everything else has empty preimage.
        let y = Universe::new(["0", "1", "2"]).unwrap();
        let konst = extension_principle(&[&a], y.clone(), |_| "2".into()).unwrap();
        assert_eq!(konst.values(), vec![0.0, 0.0, 0.9]);

        let err = extension_principle(&[&a], y, |_| "7".into()).unwrap_err();
        assert_eq!(err, Error::OutsideCodomain("7".into()));
    }

    #[test]
    fn extension_principle_matches_exhaustive_oracle() {
        let u = Universe::new(["0", "1"]).unwrap();
        let a = FuzzySet::from_values(u.clone(), &[0.4, 0.7]).unwrap();
        let b = FuzzySet::from_values(u, &[0.8, 0.2]).unwrap();
        let y = Universe::new(["0", "1", "2"]).unwrap();
        let sum = extension_principle(&[&a, &b], y, |x| {
            let s: u32 = x.iter().map(|v| v.parse::<u32>().unwrap()).sum();
            s.to_string()
        })
        .unwrap();
        // (0,0)->0: min(.4,.8)=.4 ; (0,1),(1,0)->1: max(min(.4,.2), min(.7,.8))=.7 ; (1,1)->2: .2
        assert_eq!(sum.values(), vec![0.4, 0.7, 0.2]);
    }

    fn soft_set_strategy(name: &'static str, params: usize) -> impl Strategy<Value = FuzzySoftSet> {
        proptest::collection::vec(proptest::collection::vec(0.0f64..=1.0, 4), params).prop_map(
            move |rows| {
                let u = Universe::new(["u1", "u2", "u3", "u4"]).unwrap();
                let entries = rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        (
                            format!("{name}{i}"),
                            FuzzySet::from_values(u.clone(), r).unwrap(),
                        )
                    })
                    .collect();
                FuzzySoftSet::new(name, u, entries).unwrap()
            },
        )
    }

    fn matrix_strategy(n: usize) -> impl Strategy<Value = FuzzyRelationMatrix> {
        proptest::collection::vec(0.0f64..=1.0, n * n).prop_map(move |v| {
            let u = Universe::new((0..n).map(|i| format!("e{i}"))).unwrap();
            let rows: Vec<Vec<f64>> = v.chunks(n).map(<[f64]>::to_vec).collect();
            FuzzyRelationMatrix::square(u, &rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn de_morgan(f in soft_set_strategy("f", 2), g in soft_set_strategy("g", 3)) {
            let nand = soft_product(SoftConnective::Nand, &[&f, &g]).unwrap();
            let or_of_nots = soft_product(SoftConnective::Or, &[&f.not(), &g.not()]).unwrap();
            prop_assert_eq!(nand.parameters(), or_of_nots.parameters());
            for ((_, x), (_, y)) in nand.iter().zip(or_of_nots.iter()) {
                for (a, b) in x.grades().iter().zip(y.grades()) {
                    prop_assert!((a.value() - b.value()).abs() < 1e-9);
                }
            }
        }

        #[test]
        fn pairwise_is_rank_one(f in soft_set_strategy("f", 1), g in soft_set_strategy("g", 1)) {
            let r = pairwise_relation(&f, "f0", &g, "g0").unwrap();
            let row = f.get("f0").unwrap();
            let col = g.get("g0").unwrap();
            for l in 0..4 {
                for k in 0..4 {
                    prop_assert_eq!(
                        r.cells().get(l, k).value(),
                        row.grades()[l].value() * col.grades()[k].value()
                    );
                }
            }
        }

        #[test]
        fn min_dominates_product(f in soft_set_strategy("f", 3)) {
            let sets: Vec<&FuzzySet> = f.iter().map(|(_, s)| s).collect();
            let m = nary_combine(&sets, TNorm::Min).unwrap();
            let p = nary_combine(&sets, TNorm::Product).unwrap();
            prop_assert!(p.is_subset(&m).unwrap());
        }

        #[test]
        fn union_matches_pointwise_max(a in matrix_strategy(3), b in matrix_strategy(3)) {
            let u = a.union(&b).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let oracle = a.values()[i][j].max(b.values()[i][j]);
                    prop_assert_eq!(u.values()[i][j], oracle);
                }
            }
        }

        #[test]
        fn union_is_monotone(t1 in matrix_strategy(3), t3 in matrix_strategy(3), lift in matrix_strategy(3)) {
            let t2 = t1.union(&lift).unwrap();
            prop_assert!(t1.is_contained_in(&t2).unwrap());
            prop_assert!(t1.union(&t3).unwrap().is_contained_in(&t2.union(&t3).unwrap()).unwrap());
        }
    }
}
