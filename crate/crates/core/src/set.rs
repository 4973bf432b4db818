//! Finite fuzzy sets and their crisp counterparts.

use std::fmt;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::universe::Universe;

/// A fuzzy subset of a finite universe: one grade per element, stored in
/// universe order.
#[derive(Clone, PartialEq)]
pub struct FuzzySet {
    universe: Universe,
    grades: Vec<Grade>,
}

impl FuzzySet {
    pub fn new(universe: Universe, grades: Vec<Grade>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: grades.len(),
            });
        }
        Ok(FuzzySet { universe, grades })
    }

    pub fn from_values(universe: Universe, values: &[f64]) -> Result<Self> {
        let grades = values
            .iter()
            .map(|&v| Grade::new(v))
            .collect::<Result<Vec<_>>>()?;
        FuzzySet::new(universe, grades)
    }

    /// Builds a set from `(label, grade)` pairs. Elements not mentioned get
    /// grade zero; a label may appear at most once.
    pub fn from_pairs<'a, I>(universe: Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, f64)>,
    {
        let mut grades = vec![Grade::ZERO; universe.len()];
        let mut seen = vec![false; universe.len()];
        for (label, value) in pairs {
            let i = universe.require(label)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            grades[i] = Grade::new(value)?;
        }
        Ok(FuzzySet { universe, grades })
    }

    pub fn constant(universe: Universe, grade: Grade) -> Self {
        let grades = vec![grade; universe.len()];
        FuzzySet { universe, grades }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn values(&self) -> Vec<f64> {
        self.grades.iter().map(|g| g.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn grade(&self, label: &str) -> Option<Grade> {
        self.universe.position(label).map(|i| self.grades[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Grade)> + '_ {
        self.universe
            .labels()
            .iter()
            .map(String::as_str)
            .zip(self.grades.iter().copied())
    }

    /// Grades of `other` rearranged into this set's universe order.
    pub(crate) fn aligned_grades(&self, other: &FuzzySet) -> Result<Vec<Grade>> {
        let map = self
            .universe
            .alignment(&other.universe)
            .ok_or(Error::UniverseMismatch)?;
        Ok(map.into_iter().map(|j| other.grades[j]).collect())
    }

    fn zip_with(&self, other: &FuzzySet, f: impl Fn(Grade, Grade) -> Grade) -> Result<FuzzySet> {
        let rhs = self.aligned_grades(other)?;
        let grades = self.grades.iter().zip(rhs).map(|(&a, b)| f(a, b)).collect();
        Ok(FuzzySet {
            universe: self.universe.clone(),
            grades,
        })
    }

    /// Pointwise max.
    pub fn union(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip_with(other, Grade::max)
    }

    /// Pointwise min.
    pub fn intersection(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip_with(other, Grade::min)
    }

    /// Pointwise `1 - μ`.
    pub fn complement(&self) -> FuzzySet {
        FuzzySet {
            universe: self.universe.clone(),
            grades: self.grades.iter().map(|g| g.complement()).collect(),
        }
    }

    /// Weak α-cut: every element whose grade is at least `alpha`.
    pub fn alpha_cut(&self, alpha: Grade) -> CrispSet {
        CrispSet {
            universe: self.universe.clone(),
            members: self.grades.iter().map(|&g| g >= alpha).collect(),
        }
    }

    /// Scalar cardinality, the sum of all grades.
    pub fn cardinality(&self) -> f64 {
        self.grades.iter().map(|g| g.value()).sum()
    }

    /// Pointwise `≤` after aligning by label.
    pub fn is_subset(&self, other: &FuzzySet) -> Result<bool> {
        let rhs = self.aligned_grades(other)?;
        Ok(self.grades.iter().zip(rhs).all(|(&a, b)| a <= b))
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|(l, g)| (l, g.value())))
            .finish()
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, g)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{label}/{g}")?;
        }
        f.write_str("}")
    }
}

/// An ordinary subset of a finite universe.
#[derive(Clone, PartialEq, Eq)]
pub struct CrispSet {
    universe: Universe,
    members: Vec<bool>,
}

impl CrispSet {
    pub fn empty(universe: Universe) -> Self {
        let members = vec![false; universe.len()];
        CrispSet { universe, members }
    }

    pub fn full(universe: Universe) -> Self {
        let members = vec![true; universe.len()];
        CrispSet { universe, members }
    }

    pub fn from_labels<I, S>(universe: Universe, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = CrispSet::empty(universe);
        for label in labels {
            let i = set.universe.require(label.as_ref())?;
            set.members[i] = true;
        }
        Ok(set)
    }

    pub(crate) fn from_mask(universe: Universe, members: Vec<bool>) -> Self {
        debug_assert_eq!(universe.len(), members.len());
        CrispSet { universe, members }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, label: &str) -> bool {
        self.universe
            .position(label)
            .is_some_and(|i| self.members[i])
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    /// Member labels in universe order.
    pub fn labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.universe.label(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    fn zip_with(&self, other: &CrispSet, f: impl Fn(bool, bool) -> bool) -> Result<CrispSet> {
        let map = self
            .universe
            .alignment(&other.universe)
            .ok_or(Error::UniverseMismatch)?;
        let members = self
            .members
            .iter()
            .zip(map)
            .map(|(&a, j)| f(a, other.members[j]))
            .collect();
        Ok(CrispSet {
            universe: self.universe.clone(),
            members,
        })
    }

    pub fn intersection(&self, other: &CrispSet) -> Result<CrispSet> {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn union(&self, other: &CrispSet) -> Result<CrispSet> {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn is_subset(&self, other: &CrispSet) -> Result<bool> {
        Ok(self
            .zip_with(other, |a, b| !a || b)?
            .members
            .iter()
            .all(|&m| m))
    }

    /// Indicator function as a fuzzy set.
    pub fn to_fuzzy(&self) -> FuzzySet {
        let grades = self
            .members
            .iter()
            .map(|&m| if m { Grade::ONE } else { Grade::ZERO })
            .collect();
        FuzzySet {
            universe: self.universe.clone(),
            grades,
        }
    }
}

impl fmt::Debug for CrispSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}
