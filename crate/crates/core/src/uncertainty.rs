//! Cardinality-based uncertainty of fuzzy relations on a finite set.
//!
//! For a relation `T` on `E` with `|E| = n`:
//!
//! * the expected cardinality of the class of `e_i` is `Σ_j t_ij / n`;
//! * its uncertainty quantity is `-log2` of that;
//! * the average uncertainty `G(T)` is the mean over all elements, and zero
//!   for the empty set.
//!
//! Larger grades give larger cardinalities and therefore smaller
//! uncertainty: `T1 ⊆ T2` implies `G(T1) >= G(T2)`.

use crate::error::{Error, Result};
use crate::relation::FuzzyRelationMatrix;

pub fn expected_cardinality(t: &FuzzyRelationMatrix, i: usize) -> Result<f64> {
    let n = t.require_square()?;
    if n == 0 {
        return Err(Error::Empty("universe"));
    }
    if i >= n {
        return Err(Error::IndexOutOfBounds { index: i, len: n });
    }
    let sum: f64 = t.cells().row(i).iter().map(|g| g.value()).sum();
    Ok(sum / n as f64)
}

/// Fails with [`Error::DegenerateClass`] when the class is empty.
pub fn uncertainty_quantity(t: &FuzzyRelationMatrix, i: usize) -> Result<f64> {
    let card = expected_cardinality(t, i)?;
    if card <= 0.0 {
        return Err(Error::DegenerateClass {
            element: t.row_universe().label(i).to_string(),
        });
    }
    // -log2(1) is -0.0; normalize so printed output never shows "-0".
    Ok(-card.log2() + 0.0)
}

pub fn average_uncertainty(t: &FuzzyRelationMatrix) -> Result<f64> {
    let n = t.require_square()?;
    if n == 0 {
        return Ok(0.0);
    }
    let total = (0..n)
        .map(|i| uncertainty_quantity(t, i))
        .sum::<Result<f64>>()?;
    Ok(total / n as f64)
}

/// Per-element breakdown, as printed by the command line tool.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertaintyReport {
    pub rows: Vec<RowUncertainty>,
    pub average: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowUncertainty {
    pub element: String,
    pub expected_cardinality: f64,
    pub uncertainty: f64,
}

pub fn report(t: &FuzzyRelationMatrix) -> Result<UncertaintyReport> {
    let n = t.require_square()?;
    let rows = (0..n)
        .map(|i| {
            Ok(RowUncertainty {
                element: t.row_universe().label(i).to_string(),
                expected_cardinality: expected_cardinality(t, i)?,
                uncertainty: uncertainty_quantity(t, i)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UncertaintyReport {
        rows,
        average: average_uncertainty(t)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::Grade;
    use crate::universe::Universe;
    use proptest::prelude::*;

    fn universe(n: usize) -> Universe {
        Universe::new((0..n).map(|i| format!("e{i}"))).unwrap()
    }

    #[test]
    fn all_ones_has_no_uncertainty() {
        let t = FuzzyRelationMatrix::constant(universe(3), universe(3), Grade::ONE);
        for i in 0..3 {
            assert_eq!(expected_cardinality(&t, i).unwrap(), 1.0);
            assert_eq!(uncertainty_quantity(&t, i).unwrap(), 0.0);
        }
        assert_eq!(average_uncertainty(&t).unwrap(), 0.0);
    }

    #[test]
    fn identity_diagonal() {
        let t = FuzzyRelationMatrix::identity(universe(4));
        assert_eq!(expected_cardinality(&t, 2).unwrap(), 0.25);
        assert_eq!(uncertainty_quantity(&t, 2).unwrap(), 2.0);
        assert_eq!(average_uncertainty(&t).unwrap(), 2.0);
    }

    #[test]
    fn two_element_similarity() {
        let t =
            FuzzyRelationMatrix::square(universe(2), &[vec![1.0, 0.6], vec![0.6, 1.0]]).unwrap();
        assert!((expected_cardinality(&t, 0).unwrap() - 0.8).abs() < 1e-12);
        assert!((uncertainty_quantity(&t, 0).unwrap() - 0.321_928_094_887_362_3).abs() < 1e-9);
    }

    #[test]
    fn empty_universe() {
        let t = FuzzyRelationMatrix::identity(Universe::empty());
        assert_eq!(average_uncertainty(&t).unwrap(), 0.0);
        assert_eq!(expected_cardinality(&t, 0), Err(Error::Empty("universe")));
    }

    #[test]
    fn zero_row_is_an_error() {
        let t =
            FuzzyRelationMatrix::square(universe(2), &[vec![1.0, 0.5], vec![0.0, 0.0]]).unwrap();
        assert_eq!(
            average_uncertainty(&t),
            Err(Error::DegenerateClass {
                element: "e1".into()
            })
        );
        assert!(uncertainty_quantity(&t, 0).is_ok());
    }

    #[test]
    fn report_lists_every_row() {
        let t = FuzzyRelationMatrix::identity(universe(4));
        let r = report(&t).unwrap();
        assert_eq!(r.rows.len(), 4);
        assert_eq!(r.rows[3].element, "e3");
        assert_eq!(r.average, 2.0);
    }

    proptest! {
        #[test]
        fn raising_a_cell_lowers_the_row_uncertainty(
            row in proptest::collection::vec(0.05f64..0.9, 4),
            j in 0usize..4,
            bump in 0.01f64..0.1,
        ) {
            let mut rows = vec![vec![1.0; 4]; 4];
            rows[0] = row.clone();
            let before = FuzzyRelationMatrix::square(universe(4), &rows).unwrap();
            rows[0][j] += bump;
            let after = FuzzyRelationMatrix::square(universe(4), &rows).unwrap();
            prop_assert!(uncertainty_quantity(&after, 0).unwrap() < uncertainty_quantity(&before, 0).unwrap());
        }

        #[test]
        fn union_and_intersection_bound_the_average(
            a in proptest::collection::vec(proptest::collection::vec(0.01f64..=1.0, 3), 3),
            b in proptest::collection::vec(proptest::collection::vec(0.01f64..=1.0, 3), 3),
        ) {
            let t1 = FuzzyRelationMatrix::square(universe(3), &a).unwrap();
            let t2 = FuzzyRelationMatrix::square(universe(3), &b).unwrap();
            let (g1, g2) = (average_uncertainty(&t1).unwrap(), average_uncertainty(&t2).unwrap());
            let join = average_uncertainty(&t1.union(&t2).unwrap()).unwrap();
            let meet = average_uncertainty(&t1.intersection(&t2).unwrap()).unwrap();
            prop_assert!(join <= g1.min(g2) + 1e-12);
            prop_assert!(meet >= g1.max(g2) - 1e-12);
        }
    }
}
