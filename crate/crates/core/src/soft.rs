//! Crisp soft sets, Boolean soft relations, covers and partitions.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::set::CrispSet;
use crate::universe::Universe;

/// A parameterized family of crisp subsets of one universe.
#[derive(Debug, Clone, PartialEq)]
pub struct SoftSet {
    name: String,
    universe: Universe,
    parameters: Vec<String>,
    approximations: Vec<CrispSet>,
}

impl SoftSet {
    pub fn new<S: Into<String>>(
        name: S,
        universe: Universe,
        entries: Vec<(String, CrispSet)>,
    ) -> Result<Self> {
        let mut parameters = Vec::with_capacity(entries.len());
        let mut approximations = Vec::with_capacity(entries.len());
        for (parameter, set) in entries {
            if parameters.contains(&parameter) {
                return Err(Error::DuplicateLabel(parameter));
            }
            if set.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            parameters.push(parameter);
            approximations.push(set);
        }
        Ok(SoftSet {
            name: name.into(),
            universe,
            parameters,
            approximations,
        })
    }

    /// Convenience constructor from parameter → member-label lists.
    pub fn from_labels<S: Into<String>>(
        name: S,
        universe: Universe,
        entries: &[(&str, &[&str])],
    ) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|(p, members)| {
                Ok((
                    p.to_string(),
                    CrispSet::from_labels(universe.clone(), *members)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        SoftSet::new(name, universe, entries)
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

    pub fn approximation(&self, parameter: &str) -> Result<&CrispSet> {
        self.parameters
            .iter()
            .position(|p| p == parameter)
            .map(|i| &self.approximations[i])
            .ok_or_else(|| Error::UnknownParameter {
                set: self.name.clone(),
                parameter: parameter.to_string(),
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &CrispSet)> + '_ {
        self.parameters
            .iter()
            .map(String::as_str)
            .zip(self.approximations.iter())
    }

    /// Soft relation of `self` and `other` restricted to the requested
    /// parameter pairs: each pair `(x, y)` is approximated by `F(x) ∩ G(y)`.
    pub fn relation(&self, other: &SoftSet, pairs: &[(&str, &str)]) -> Result<SoftSet> {
        if !self.universe.same_elements(&other.universe) {
            return Err(Error::UniverseMismatch);
        }
        let entries = pairs
            .iter()
            .map(|&(x, y)| {
                let approx = self
                    .approximation(x)?
                    .intersection(other.approximation(y)?)?;
                Ok((tuple_label(&[x, y]), approx))
            })
            .collect::<Result<Vec<_>>>()?;
        SoftSet::new(
            format!("{} x {}", self.name, other.name),
            self.universe.clone(),
            entries,
        )
    }
}

/// Label of a tuple parameter: components joined in order.
pub fn tuple_label<S: AsRef<str>>(components: &[S]) -> String {
    components
        .iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CrispProperties {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
}

impl CrispProperties {
    pub fn is_similarity(&self) -> bool {
        self.reflexive && self.symmetric
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_similarity() && self.transitive
    }
}

/// Boolean relation matrix between two universes; cell `(i, j)` is set iff
/// row element `i` is related to column element `j`.
#[derive(Clone, PartialEq)]
pub struct CrispRelationMatrix {
    rows: Universe,
    cols: Universe,
    cells: Matrix<bool>,
}

impl CrispRelationMatrix {
    pub fn new(rows: Universe, cols: Universe, cells: Matrix<bool>) -> Result<Self> {
        if cells.rows() != rows.len() || cells.cols() != cols.len() {
            return Err(Error::DimensionMismatch {
                left_rows: rows.len(),
                left_cols: cols.len(),
                right_rows: cells.rows(),
                right_cols: cells.cols(),
            });
        }
        Ok(CrispRelationMatrix { rows, cols, cells })
    }

    /// Relation matrix of a pair list. Repeated pairs collapse.
    pub fn from_pairs<S: AsRef<str>>(
        pairs: &[(S, S)],
        rows: Universe,
        cols: Universe,
    ) -> Result<Self> {
        let mut cells = Matrix::filled(rows.len(), cols.len(), false);
        for (r, c) in pairs {
            let i = rows.require(r.as_ref())?;
            let j = cols.require(c.as_ref())?;
            cells.set(i, j, true);
        }
        Ok(CrispRelationMatrix { rows, cols, cells })
    }

    pub fn identity(universe: Universe) -> Self {
        let n = universe.len();
        CrispRelationMatrix {
            rows: universe.clone(),
            cols: universe,
            cells: Matrix::from_fn(n, n, |i, j| i == j),
        }
    }

    pub fn full(rows: Universe, cols: Universe) -> Self {
        let cells = Matrix::filled(rows.len(), cols.len(), true);
        CrispRelationMatrix { rows, cols, cells }
    }

    pub fn row_universe(&self) -> &Universe {
        &self.rows
    }

    pub fn col_universe(&self) -> &Universe {
        &self.cols
    }

    pub fn cells(&self) -> &Matrix<bool> {
        &self.cells
    }

    pub fn contains(&self, row: &str, col: &str) -> Result<bool> {
        Ok(self
            .cells
            .get(self.rows.require(row)?, self.cols.require(col)?))
    }

    /// Related pairs in row-major order.
    pub fn pairs(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        for i in 0..self.cells.rows() {
            for j in 0..self.cells.cols() {
                if self.cells.get(i, j) {
                    out.push((self.rows.label(i), self.cols.label(j)));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        CrispRelationMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            cells: self.cells.transpose(),
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows.len())
        } else {
            Err(Error::NotSquare {
                rows: self.rows.len(),
                cols: self.cols.len(),
            })
        }
    }

    pub fn properties(&self) -> Result<CrispProperties> {
        let n = self.require_square()?;
        let m = &self.cells;
        let reflexive = (0..n).all(|i| m.get(i, i));
        let symmetric = (0..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(j, i)));
        let transitive = (0..n)
            .all(|a| (0..n).all(|b| !m.get(a, b) || (0..n).all(|c| !m.get(b, c) || m.get(a, c))));
        Ok(CrispProperties {
            reflexive,
            symmetric,
            transitive,
        })
    }

    /// `{x | (x, e) ∈ T}`: the elements related to `e`.
    pub fn similarity_class(&self, e: &str) -> Result<CrispSet> {
        self.require_square()?;
        let j = self.cols.require(e)?;
        let mask = (0..self.rows.len()).map(|i| self.cells.get(i, j)).collect();
        Ok(CrispSet::from_mask(self.rows.clone(), mask))
    }

    /// Boolean composition `self ∘ other`.
    pub fn compose(&self, other: &CrispRelationMatrix) -> Result<CrispRelationMatrix> {
        if self.cols != other.rows {
            return Err(Error::UniverseMismatch);
        }
        let inner = self.cols.len();
        let cells = Matrix::from_fn(self.rows.len(), other.cols.len(), |i, k| {
            (0..inner).any(|j| self.cells.get(i, j) && other.cells.get(j, k))
        });
        Ok(CrispRelationMatrix {
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            cells,
        })
    }

    pub fn is_subset(&self, other: &CrispRelationMatrix) -> Result<bool> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::UniverseMismatch);
        }
        Ok(self
            .cells
            .cells()
            .iter()
            .zip(other.cells.cells())
            .all(|(&a, &b)| !a || b))
    }
}

impl fmt::Debug for CrispRelationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CrispRelationMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("pairs", &self.pairs())
            .finish()
    }
}

/// Parameter-indexed family of crisp relations between two universes.
#[derive(Debug, Clone, PartialEq)]
pub struct SoftRelation {
    name: String,
    parameters: Vec<String>,
    relations: Vec<CrispRelationMatrix>,
}

impl SoftRelation {
    pub fn new<S: Into<String>>(
        name: S,
        entries: Vec<(String, CrispRelationMatrix)>,
    ) -> Result<Self> {
        let mut parameters = Vec::new();
        let mut relations: Vec<CrispRelationMatrix> = Vec::new();
        for (p, rel) in entries {
            if parameters.contains(&p) {
                return Err(Error::DuplicateLabel(p));
            }
            if let Some(first) = relations.first() {
                if first.rows != rel.rows || first.cols != rel.cols {
                    return Err(Error::UniverseMismatch);
                }
            }
            parameters.push(p);
            relations.push(rel);
        }
        Ok(SoftRelation {
            name: name.into(),
            parameters,
            relations,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn get(&self, parameter: &str) -> Result<&CrispRelationMatrix> {
        self.parameters
            .iter()
            .position(|p| p == parameter)
            .map(|i| &self.relations[i])
            .ok_or_else(|| Error::UnknownParameter {
                set: self.name.clone(),
                parameter: parameter.to_string(),
            })
    }
}

/// A family of nonempty subsets of a ground set.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockFamily {
    ground: Universe,
    blocks: Vec<CrispSet>,
}

impl BlockFamily {
    pub fn new(ground: Universe, blocks: Vec<CrispSet>) -> Result<Self> {
        for b in &blocks {
            if b.universe() != &ground {
                return Err(Error::UniverseMismatch);
            }
            if b.is_empty() {
                return Err(Error::EmptyBlock);
            }
        }
        Ok(BlockFamily { ground, blocks })
    }

    pub fn from_labels<S: AsRef<str>>(ground: Universe, blocks: &[&[S]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| CrispSet::from_labels(ground.clone(), b.iter()))
            .collect::<Result<Vec<_>>>()?;
        BlockFamily::new(ground, blocks)
    }

    pub fn ground(&self) -> &Universe {
        &self.ground
    }

    pub fn blocks(&self) -> &[CrispSet] {
        &self.blocks
    }

    /// Every element of the ground set lies in some block.
    pub fn is_cover(&self) -> bool {
        (0..self.ground.len()).all(|e| self.blocks.iter().any(|b| b.contains_index(e)))
    }

    /// A cover whose blocks are pairwise disjoint; a repeated block counts as
    /// overlapping itself.
    pub fn is_partition(&self) -> bool {
        let mut seen = vec![false; self.ground.len()];
        for b in &self.blocks {
            for e in b.indices() {
                if std::mem::replace(&mut seen[e], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Every block of `self` is contained in some block of `other`.
    pub fn refines(&self, other: &BlockFamily) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::UniverseMismatch);
        }
        for b in &self.blocks {
            let mut inside = false;
            for c in &other.blocks {
                if b.is_subset(c)? {
                    inside = true;
                    break;
                }
            }
            if !inside {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A partition of a finite ground set. Blocks are kept sorted by their
/// smallest member so that equal partitions compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition(BlockFamily);

impl Partition {
    pub fn new(family: BlockFamily) -> Result<Self> {
        if !family.is_partition() {
            return Err(Error::NotAPartition);
        }
        let BlockFamily { ground, mut blocks } = family;
        blocks.sort_by_key(|b| b.indices().next());
        Ok(Partition(BlockFamily { ground, blocks }))
    }

    pub fn from_labels<S: AsRef<str>>(ground: Universe, blocks: &[&[S]]) -> Result<Self> {
        Partition::new(BlockFamily::from_labels(ground, blocks)?)
    }

    /// `{E}`.
    pub fn coarsest(ground: Universe) -> Result<Self> {
        let all = CrispSet::full(ground.clone());
        Partition::new(BlockFamily::new(ground, vec![all])?)
    }

    /// `{{e} | e ∈ E}`.
    pub fn finest(ground: Universe) -> Self {
        let blocks = (0..ground.len())
            .map(|i| {
                let mut mask = vec![false; ground.len()];
                mask[i] = true;
                CrispSet::from_mask(ground.clone(), mask)
            })
            .collect();
        Partition(BlockFamily { ground, blocks })
    }

    pub fn family(&self) -> &BlockFamily {
        &self.0
    }

    pub fn blocks(&self) -> &[CrispSet] {
        &self.0.blocks
    }

    pub fn block_labels(&self) -> Vec<Vec<&str>> {
        self.0.blocks.iter().map(CrispSet::labels).collect()
    }

    pub fn refines(&self, other: &Partition) -> Result<bool> {
        self.0.refines(&other.0)
    }

    /// All nonempty pairwise intersections of blocks.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.0.ground != other.0.ground {
            return Err(Error::UniverseMismatch);
        }
        let mut blocks = Vec::new();
        for a in &self.0.blocks {
            for b in &other.0.blocks {
                let c = a.intersection(b)?;
                if !c.is_empty() {
                    blocks.push(c);
                }
            }
        }
        Partition::new(BlockFamily::new(self.0.ground.clone(), blocks)?)
    }
}
