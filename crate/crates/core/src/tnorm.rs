use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;

/// The conjunction used to combine grades from several criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TNorm {
    Min,
    Product,
}

impl TNorm {
    #[inline]
    pub fn apply(self, a: Grade, b: Grade) -> Grade {
        match self {
            TNorm::Min => a.min(b),
            TNorm::Product => a.product(b),
        }
    }

    /// Folds the t-norm over a nonempty list of grades.
    pub fn combine(self, grades: &[Grade]) -> Result<Grade> {
        let (first, rest) = grades.split_first().ok_or(Error::Empty("grade list"))?;
        Ok(rest.iter().fold(*first, |acc, &g| self.apply(acc, g)))
    }

    pub fn name(self) -> &'static str {
        match self {
            TNorm::Min => "min",
            TNorm::Product => "product",
        }
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TNorm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "min" => Ok(TNorm::Min),
            "product" | "prod" => Ok(TNorm::Product),
            other => Err(format!(
                "unknown combiner `{other}` (expected min or product)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grades(values: &[f64]) -> Vec<Grade> {
        values.iter().map(|&v| Grade::new(v).unwrap()).collect()
    }

    #[test]
    fn product_of_three_criteria() {
        let g = TNorm::Product.combine(&grades(&[0.5, 0.6, 0.7])).unwrap();
        assert!((g.value() - 0.21).abs() < 1e-9);
    }

    #[test]
    fn min_of_four_criteria() {
        let g = TNorm::Min.combine(&grades(&[0.2, 0.4, 1.0, 0.3])).unwrap();
        assert_eq!(g.value(), 0.2);
    }

    #[test]
    fn singleton_and_empty() {
        let one = grades(&[0.37]);
        assert_eq!(TNorm::Min.combine(&one).unwrap().value(), 0.37);
        assert_eq!(TNorm::Product.combine(&one).unwrap().value(), 0.37);
        assert_eq!(TNorm::Min.combine(&[]), Err(Error::Empty("grade list")));
    }

    proptest! {
        #[test]
        fn min_bounds_inputs_and_product_bounded_by_min(v in proptest::collection::vec(0.0f64..=1.0, 1..8)) {
            let g = grades(&v);
            let m = TNorm::Min.combine(&g).unwrap();
            let p = TNorm::Product.combine(&g).unwrap();
            prop_assert!(g.iter().all(|&x| m <= x));
            prop_assert!(p <= m);
            prop_assert!((0.0..=1.0).contains(&p.value()));
        }
    }
}
