//! Points, directions, hyperplanes and the planar point-line duality.
//!
//! Distances are measured in ball radii: every ball has radius 1.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the unit-norm invariant of [`Direction`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Tangency slack for [`ball_intersects_hyperplane`].
pub const TANGENCY_TOLERANCE: f64 = 1e-12;

/// Slack on the pairwise center distance accepted by [`BallSet::new`].
pub const DISJOINT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Dimension {
                expected: 1,
                found: 0,
            });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("point"));
        }
        Ok(Point { coords })
    }

    pub fn xy(x: f64, y: f64) -> Result<Self> {
        Point::new(vec![x, y])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn x(&self) -> f64 {
        self.coords[0]
    }

    pub fn y(&self) -> f64 {
        self.coords[1]
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

/// A unit vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    coords: Vec<f64>,
}

impl Direction {
    /// Wraps `coords`, which must already have unit norm.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("direction"));
        }
        let norm = norm(&coords);
        if (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::NotUnit { norm });
        }
        Ok(Direction { coords })
    }

    /// Scales `coords` to unit length.
    pub fn normalized(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("direction"));
        }
        let norm = norm(&coords);
        if norm == 0.0 {
            return Err(Error::NotUnit { norm });
        }
        Ok(Direction {
            coords: coords.into_iter().map(|c| c / norm).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dot(&self, p: &Point) -> f64 {
        dot(&self.coords, p.coords())
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The hyperplane `{x : normal · x = offset}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Direction,
    pub offset: f64,
}

impl Hyperplane {
    pub fn new(normal: Direction, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::NonFinite("hyperplane offset"));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// The non-vertical line `y = slope * x + intercept` as a hyperplane with
    /// its normal pointing to positive y.
    pub fn from_slope_intercept(slope: f64, intercept: f64) -> Result<Self> {
        let len = slope.hypot(1.0);
        let normal = Direction::normalized(vec![-slope, 1.0])?;
        Hyperplane::new(normal, intercept / len)
    }

    /// Inverse of [`Hyperplane::from_slope_intercept`]; `None` for vertical
    /// or non-planar hyperplanes.
    pub fn slope_intercept(&self) -> Option<(f64, f64)> {
        if self.dim() != 2 {
            return None;
        }
        let (nx, ny) = (self.normal.coords[0], self.normal.coords[1]);
        if ny == 0.0 {
            return None;
        }
        Some((-nx / ny, self.offset / ny))
    }
}

/// A unit-ball instance: centers in R^d, pairwise more than 2 apart.
#[derive(Debug, Clone, PartialEq)]
pub struct BallSet {
    dim: usize,
    centers: Vec<Point>,
}

impl BallSet {
    /// Validates dimensions and disjointness.
    pub fn new(dim: usize, centers: Vec<Point>) -> Result<Self> {
        let set = BallSet::new_unchecked_overlap(dim, centers)?;
        if let Some((a, b, distance)) = set.first_overlap() {
            return Err(Error::Disjointness { a, b, distance });
        }
        Ok(set)
    }

    /// Validates dimensions only. Used for rigid motions of sets that were
    /// already checked.
    pub(crate) fn new_unchecked_overlap(dim: usize, centers: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension {
                expected: 1,
                found: 0,
            });
        }
        if let Some(p) = centers.iter().find(|p| p.dim() != dim) {
            return Err(Error::Dimension {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(BallSet { dim, centers })
    }

    pub fn from_coords(dim: usize, coords: impl IntoIterator<Item = Vec<f64>>) -> Result<Self> {
        let centers = coords
            .into_iter()
            .map(Point::new)
            .collect::<Result<Vec<_>>>()?;
        BallSet::new(dim, centers)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    /// The first `n` balls.
    pub fn truncated(&self, n: usize) -> BallSet {
        BallSet {
            dim: self.dim,
            centers: self.centers[..n.min(self.len())].to_vec(),
        }
    }

    /// Lexicographically smallest overlapping pair, if any.
    ///
    /// Buckets centers into cubes of side 2 so that only neighbouring cubes
    /// need to be compared.
    fn first_overlap(&self) -> Option<(usize, usize, f64)> {
        let limit = 2.0 - DISJOINT_SLACK;
        let cell = |p: &Point| -> Vec<i64> {
            p.coords().iter().map(|c| (c / 2.0).floor() as i64).collect()
        };
        let mut grid: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        for (i, p) in self.centers.iter().enumerate() {
            grid.entry(cell(p)).or_default().push(i);
        }
        let offsets = neighbour_offsets(self.dim);
        let mut best: Option<(usize, usize, f64)> = None;
        for (i, p) in self.centers.iter().enumerate() {
            let base = cell(p);
            let mut key = base.clone();
            for off in &offsets {
                for (k, o) in key.iter_mut().zip(base.iter().zip(off)) {
                    *k = o.0 + o.1;
                }
                let Some(bucket) = grid.get(&key) else {
                    continue;
                };
                for &j in bucket {
                    if j <= i {
                        continue;
                    }
                    let d = p.dist(&self.centers[j]);
                    if d <= limit && best.is_none_or(|(a, b, _)| (i, j) < (a, b)) {
                        best = Some((i, j, d));
                    }
                }
            }
            if best.is_some_and(|(a, _, _)| a == i) {
                return best;
            }
        }
        best
    }
}

fn neighbour_offsets(dim: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(dim)];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-1..=1).map(move |o| {
                    let mut w = v.clone();
                    w.push(o);
                    w
                })
            })
            .collect();
    }
    out
}

/// Dual of a disk center: the line `y = p_x * x - p_y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualLine {
    pub slope: f64,
    pub intercept: f64,
    pub id: usize,
}

impl DualLine {
    #[inline]
    pub fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

pub fn dualize_point(p: &Point, id: usize) -> Result<DualLine> {
    if p.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: p.dim(),
        });
    }
    Ok(DualLine {
        slope: p.x(),
        intercept: -p.y(),
        id,
    })
}

/// Dual of the non-vertical line `y = slope * x + y_intercept`: the point
/// `(slope, -y_intercept)`.
pub fn dualize_line(slope: f64, y_intercept: f64) -> Result<Point> {
    Point::xy(slope, -y_intercept)
}

pub fn signed_distance(h: &Hyperplane, p: &Point) -> Result<f64> {
    check_dims(h.dim(), p.dim())?;
    Ok(h.normal.dot(p) - h.offset)
}

/// Whether the unit ball at `center` meets `h`. Tangency does not count.
pub fn ball_intersects_hyperplane(h: &Hyperplane, center: &Point) -> Result<bool> {
    Ok(signed_distance(h, center)?.abs() < 1.0 - TANGENCY_TOLERANCE)
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension { expected, found });
    }
    Ok(())
}

/// Closed vertical segment `{x} × [y_lo, y_hi]` in the dual plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerticalSegment {
    pub x: f64,
    pub y_lo: f64,
    pub y_hi: f64,
}

impl VerticalSegment {
    /// Whether `line` passes through the segment.
    pub fn crossed_by(&self, line: &DualLine) -> bool {
        let y = line.at(self.x);
        self.y_lo <= y && y <= self.y_hi
    }
}

/// The unit disk at `p` meets `y = m x + b` iff the dual line of `p` crosses
/// this segment.
pub fn dual_segment_for_line(m: f64, b: f64) -> VerticalSegment {
    let half = (m * m + 1.0).sqrt();
    VerticalSegment {
        x: m,
        y_lo: -b - half,
        y_hi: -b + half,
    }
}

/// Rotates `(x, y)` by `angle` radians counter-clockwise about the origin.
pub fn rotate_xy(x: f64, y: f64, angle: f64) -> (f64, f64) {
    let (s, c) = angle.sin_cos();
    (c * x - s * y, s * x + c * y)
}

/// Largest exponent in the rotation schedule `2^j * 1e-12` rad.
pub const ROTATION_SCHEDULE_MAX: i32 = 60;

/// Rotates a planar instance about the origin so that all center
/// x-coordinates are pairwise distinct. Tries angle 0, then `2^j * 1e-12` rad
/// for `j = 0..=60`.
pub fn rotate_to_general_position(balls: &BallSet) -> Result<(BallSet, f64)> {
    check_dims(2, balls.dim())?;
    let angles = std::iter::once(0.0)
        .chain((0..=ROTATION_SCHEDULE_MAX).map(|j| 2f64.powi(j) * 1e-12));
    for angle in angles {
        let rotated: Vec<(f64, f64)> = balls
            .centers()
            .iter()
            .map(|p| rotate_xy(p.x(), p.y(), angle))
            .collect();
        let mut xs: Vec<f64> = rotated.iter().map(|r| r.0).collect();
        xs.sort_unstable_by(f64::total_cmp);
        if xs.windows(2).all(|w| w[0] < w[1]) {
            let centers = rotated
                .into_iter()
                .map(|(x, y)| Point::xy(x, y))
                .collect::<Result<Vec<_>>>()?;
            return Ok((BallSet::new_unchecked_overlap(2, centers)?, angle));
        }
    }
    Err(Error::GeneralPosition)
}
