//! Trapezoids around the tracked level and their 1-tubes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::DualLine;

use super::arrangement::{level_value_at, Slab};

/// Slack used by the tube test, in favour of keeping a line.
pub const TUBE_TOLERANCE: f64 = 1e-9;

/// Non-vertical line `y = slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Carrier {
    pub slope: f64,
    pub intercept: f64,
}

impl Carrier {
    fn through(x0: f64, y0: f64, x1: f64, y1: f64) -> Carrier {
        let slope = (y1 - y0) / (x1 - x0);
        Carrier {
            slope,
            intercept: y0 - slope * x0,
        }
    }

    #[inline]
    pub fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// Region of a subslab between two levels, with straight top and bottom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Trapezoid {
    pub x_left: f64,
    pub x_right: f64,
    pub y_upper_left: f64,
    pub y_upper_right: f64,
    pub y_lower_left: f64,
    pub y_lower_right: f64,
    /// Through the two upper corners.
    pub upper: Carrier,
    /// Through the two lower corners.
    pub lower: Carrier,
}

impl Trapezoid {
    pub fn from_corners(
        slab: Slab,
        (y_lower_left, y_upper_left): (f64, f64),
        (y_lower_right, y_upper_right): (f64, f64),
    ) -> Trapezoid {
        Trapezoid {
            x_left: slab.left,
            x_right: slab.right,
            y_upper_left,
            y_upper_right,
            y_lower_left,
            y_lower_right,
            upper: Carrier::through(slab.left, y_upper_left, slab.right, y_upper_right),
            lower: Carrier::through(slab.left, y_lower_left, slab.right, y_lower_right),
        }
    }

    /// Top boundary of the tube: `a(x) + sqrt(1 + x^2)`.
    pub fn tube_upper(&self, x: f64) -> f64 {
        self.upper.at(x) + x.hypot(1.0)
    }

    /// Bottom boundary of the tube: `b(x) - sqrt(1 + x^2)`.
    pub fn tube_lower(&self, x: f64) -> f64 {
        self.lower.at(x) - x.hypot(1.0)
    }

    /// Where `g` sits against the tube at `x`, with [`TUBE_TOLERANCE`].
    pub fn classify(&self, g: &DualLine, x: f64) -> TubeSide {
        let y = g.at(x);
        if y > self.tube_upper(x) + TUBE_TOLERANCE {
            TubeSide::Above
        } else if y < self.tube_lower(x) - TUBE_TOLERANCE {
            TubeSide::Below
        } else {
            TubeSide::Inside
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TubeSide {
    Above,
    Inside,
    Below,
}

/// Levels `max(1, lam - floor(n/8))` and `min(n, lam + floor(n/8))`.
pub fn trapezoid_levels(n: usize, lam: usize) -> (usize, usize) {
    let reach = n / 8;
    ((lam.saturating_sub(reach)).max(1), (lam + reach).min(n))
}

/// The trapezoid of `subslab` whose corners lie on the levels from
/// [`trapezoid_levels`].
pub fn build_trapezoid(lines: &[DualLine], subslab: Slab, lam: usize) -> Result<Trapezoid> {
    if lines.len() < 2 {
        return Err(Error::Degenerate(lines.len()));
    }
    if lam == 0 || lam > lines.len() {
        return Err(Error::LevelOutOfRange {
            lambda: lam,
            len: lines.len(),
        });
    }
    let (lower, upper) = trapezoid_levels(lines.len(), lam);
    let corners = |x: f64| -> Result<(f64, f64)> {
        Ok((level_value_at(lines, x, lower)?, level_value_at(lines, x, upper)?))
    };
    Ok(Trapezoid::from_corners(
        subslab,
        corners(subslab.left)?,
        corners(subslab.right)?,
    ))
}

/// Whether `g` meets the tube of `trap` somewhere in `[x0, x1]`.
///
/// `g - U` and `L - g` are concave, so the parts of `[x0, x1]` where `g` is
/// above (below) the tube are intervals, and they are disjoint because the
/// trapezoid's top is never below its bottom. Hence `g` misses the tube on
/// the whole range exactly when both ends are above or both are below.
pub fn line_intersects_tube_in_range(g: &DualLine, trap: &Trapezoid, x0: f64, x1: f64) -> bool {
    let s0 = trap.classify(g, x0);
    let s1 = trap.classify(g, x1);
    !(s0 == s1 && s0 != TubeSide::Inside)
}
