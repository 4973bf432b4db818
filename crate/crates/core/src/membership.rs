//! Parametric membership functions and their discretization.
//!
//! All four shapes are controlled by breakpoints `a <= b <= c <= d`: the
//! grade rises on `[a, b]`, stays at one on `[b, c]` and falls on `[c, d]`.
//! Linear shapes use straight ramps, smooth shapes use half a cosine period.
//! When two neighbouring breakpoints coincide the ramp has zero width and
//! becomes a right-continuous step.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::set::FuzzySet;
use crate::universe::Universe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MembershipKind {
    Trapezoid,
    Triangle,
    SmoothTrapezoid,
    SmoothTriangle,
}

impl MembershipKind {
    fn is_smooth(self) -> bool {
        matches!(
            self,
            MembershipKind::SmoothTrapezoid | MembershipKind::SmoothTriangle
        )
    }

    fn is_triangle(self) -> bool {
        matches!(
            self,
            MembershipKind::Triangle | MembershipKind::SmoothTriangle
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipFunction {
    kind: MembershipKind,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl MembershipFunction {
    /// Builds a function of the given kind. Triangle kinds require `b == c`.
    pub fn new(kind: MembershipKind, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let ordered = a <= b && b <= c && c <= d;
        if !ordered || (kind.is_triangle() && b != c) || ![a, b, c, d].iter().all(|v| v.is_finite())
        {
            return Err(Error::InvalidBreakpoints { a, b, c, d });
        }
        Ok(MembershipFunction { kind, a, b, c, d })
    }

    pub fn trapezoid(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(MembershipKind::Trapezoid, a, b, c, d)
    }

    pub fn triangle(a: f64, peak: f64, d: f64) -> Result<Self> {
        Self::new(MembershipKind::Triangle, a, peak, peak, d)
    }

    pub fn smooth_trapezoid(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(MembershipKind::SmoothTrapezoid, a, b, c, d)
    }

    pub fn smooth_triangle(a: f64, peak: f64, d: f64) -> Result<Self> {
        Self::new(MembershipKind::SmoothTriangle, a, peak, peak, d)
    }

    pub fn kind(&self) -> MembershipKind {
        self.kind
    }

    pub fn breakpoints(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn eval(&self, x: f64) -> Grade {
        let MembershipFunction { a, b, c, d, .. } = *self;
        let raw = if x < a {
            0.0
        } else if x < b {
            if self.kind.is_smooth() {
                0.5 + 0.5 * ((x - b) / (b - a) * PI).cos()
            } else {
                (x - a) / (b - a)
            }
        } else if x < c {
            1.0
        } else if x < d {
            if self.kind.is_smooth() {
                0.5 + 0.5 * ((x - c) / (d - c) * PI).cos()
            } else {
                (d - x) / (d - c)
            }
        } else {
            0.0
        };
        Grade::saturating(raw)
    }

    /// Samples the function at strictly increasing points. Each point becomes
    /// an element of the universe, labelled with its decimal form.
    pub fn discretize(&self, points: &[f64]) -> Result<FuzzySet> {
        for pair in points.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicatePoint(pair[0]));
            }
            if pair[0] > pair[1] {
                return Err(Error::UnorderedPoints {
                    previous: pair[0],
                    next: pair[1],
                });
            }
        }
        let universe = Universe::new(points.iter().map(|p| p.to_string()))?;
        let grades = points.iter().map(|&x| self.eval(x)).collect();
        FuzzySet::new(universe, grades)
    }
}
