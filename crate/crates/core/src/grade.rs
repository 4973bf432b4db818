use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A membership grade, a real number in the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Grade(f64);

impl Grade {
    pub const ZERO: Grade = Grade(0.0);
    pub const ONE: Grade = Grade(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Grade(value))
        } else {
            Err(Error::GradeOutOfRange(value))
        }
    }

    /// Clamps into [0, 1]. NaN maps to zero.
    pub fn saturating(value: f64) -> Self {
        if value.is_nan() {
            Grade(0.0)
        } else {
            Grade(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn min(self, other: Grade) -> Grade {
        Grade(self.0.min(other.0))
    }

    #[inline]
    pub fn max(self, other: Grade) -> Grade {
        Grade(self.0.max(other.0))
    }

    /// Standard negation `1 - g`.
    #[inline]
    pub fn complement(self) -> Grade {
        Grade(1.0 - self.0)
    }

    #[inline]
    pub fn product(self, other: Grade) -> Grade {
        Grade(self.0 * other.0)
    }
}

impl TryFrom<f64> for Grade {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Grade::new(value)
    }
}

impl From<Grade> for f64 {
    fn from(g: Grade) -> f64 {
        g.0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_is_closed() {
        assert!(Grade::new(0.0).is_ok());
        assert!(Grade::new(1.0).is_ok());
        assert_eq!(Grade::new(1.2), Err(Error::GradeOutOfRange(1.2)));
        assert!(Grade::new(-0.01).is_err());
        assert!(Grade::new(f64::NAN).is_err());
    }

    #[test]
    fn saturating_clamps() {
        assert_eq!(Grade::saturating(3.0), Grade::ONE);
        assert_eq!(Grade::saturating(-1.0), Grade::ZERO);
        assert_eq!(Grade::saturating(f64::NAN), Grade::ZERO);
    }

    #[test]
    fn serde_rejects_out_of_range() {
        assert!(serde_json::from_str::<Grade>("0.4").is_ok());
        assert!(serde_json::from_str::<Grade>("1.5").is_err());
    }
}
