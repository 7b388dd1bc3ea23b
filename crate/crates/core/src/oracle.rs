//! Brute-force verifiers.
//!
//! Everything here is written for clarity and is independent of the fast
//! paths in [`crate::select`], [`crate::separator`] and [`crate::halving`]:
//! this module only depends on the geometric primitives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{
    ball_intersects_hyperplane, signed_distance, BallSet, Direction, DualLine, Hyperplane,
};

/// Points closer than this to a hyperplane count as lying on it.
pub const ON_PLANE_TOLERANCE: f64 = 1e-12;

/// Largest instance accepted by [`best_halving_line_2d`].
pub const BEST_HALVING_MAX_N: usize = 64;

/// Largest line set accepted by [`brute_vertices_in_slab`].
pub const BRUTE_VERTICES_MAX_N: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideCounts {
    /// Strictly on the negative side.
    pub left: usize,
    /// Strictly on the positive side.
    pub right: usize,
    pub on: usize,
}

impl SideCounts {
    pub fn left_closed(&self) -> usize {
        self.left + self.on
    }

    pub fn right_closed(&self) -> usize {
        self.right + self.on
    }

    pub fn min_closed(&self) -> usize {
        self.left_closed().min(self.right_closed())
    }
}

pub fn count_sides(balls: &BallSet, plane: &Hyperplane) -> Result<SideCounts> {
    let mut counts = SideCounts {
        left: 0,
        right: 0,
        on: 0,
    };
    for c in balls.centers() {
        let s = signed_distance(plane, c)?;
        if s < -ON_PLANE_TOLERANCE {
            counts.left += 1;
        } else if s > ON_PLANE_TOLERANCE {
            counts.right += 1;
        } else {
            counts.on += 1;
        }
    }
    Ok(counts)
}

/// Number and ids of balls the plane intersects (tangency excluded).
pub fn count_intersected(balls: &BallSet, plane: &Hyperplane) -> Result<(usize, Vec<usize>)> {
    let mut ids = Vec::new();
    for (i, c) in balls.centers().iter().enumerate() {
        if ball_intersects_hyperplane(plane, c)? {
            ids.push(i);
        }
    }
    Ok((ids.len(), ids))
}

/// Whether both closed halfspaces contain at least `m` centers.
pub fn verify_m_separator(balls: &BallSet, plane: &Hyperplane, m: usize) -> Result<bool> {
    Ok(count_sides(balls, plane)?.min_closed() >= m)
}

/// Exhaustive search for the halving line that cuts the fewest disks.
///
/// Candidate normals: every center-difference normal perturbed by ±1e-6 rad
/// plus 256 evenly spaced angles. For each, the line through the median
/// projection is kept if it halves exactly.
pub fn best_halving_line_2d(balls: &BallSet) -> Result<(Hyperplane, usize)> {
    if balls.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: balls.dim(),
        });
    }
    let n = balls.len();
    if n == 0 || n > BEST_HALVING_MAX_N {
        return Err(Error::Size {
            n,
            reason: "exhaustive halving oracle needs 1 <= n <= 64",
        });
    }
    if n % 2 == 0 {
        return Err(Error::Size {
            n,
            reason: "exhaustive halving oracle needs odd n",
        });
    }
    let pts = balls.centers();
    let mut angles = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let dx = pts[j].x() - pts[i].x();
            let dy = pts[j].y() - pts[i].y();
            let normal = dy.atan2(dx) + std::f64::consts::FRAC_PI_2;
            angles.push(normal - 1e-6);
            angles.push(normal + 1e-6);
        }
    }
    angles.extend((0..256).map(|k| k as f64 * std::f64::consts::PI / 256.0));

    let half = n.div_ceil(2);
    let mut best: Option<(Hyperplane, usize)> = None;
    for theta in angles {
        let normal = Direction::normalized(vec![theta.cos(), theta.sin()])?;
        let mut proj: Vec<(f64, usize)> = pts
            .iter()
            .enumerate()
            .map(|(i, p)| (normal.dot(p), i))
            .collect();
        proj.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let plane = Hyperplane::new(normal, proj[(n - 1) / 2].0)?;
        if count_sides(balls, &plane)?.min_closed() < half {
            continue;
        }
        let (cut, _) = count_intersected(balls, &plane)?;
        if best.as_ref().is_none_or(|(_, c)| cut < *c) {
            best = Some((plane, cut));
        }
    }
    best.ok_or(Error::Size {
        n,
        reason: "no exact halving candidate found",
    })
}

/// Pairwise crossings with x strictly inside `(a, b)`, by direct solve.
pub fn brute_vertices_in_slab(lines: &[DualLine], a: f64, b: f64) -> Result<u64> {
    if lines.len() > BRUTE_VERTICES_MAX_N {
        return Err(Error::Size {
            n: lines.len(),
            reason: "brute vertex count limited to 500 lines",
        });
    }
    if !(a < b) {
        return Err(Error::InvalidParameter(format!(
            "slab bounds must satisfy a < b, got {a} and {b}"
        )));
    }
    let mut count = 0;
    for (i, g) in lines.iter().enumerate() {
        for h in &lines[i + 1..] {
            if g.slope == h.slope {
                continue;
            }
            let x = (h.intercept - g.intercept) / (g.slope - h.slope);
            if a < x && x < b {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The `lam`-th smallest line value at `x` (1-based), by full sort with
/// ties broken by id.
pub fn brute_level_value(lines: &[DualLine], x: f64, lam: usize) -> Result<f64> {
    if lam == 0 || lam > lines.len() {
        return Err(Error::Rank {
            k: lam,
            len: lines.len(),
        });
    }
    let mut vals: Vec<(f64, usize)> = lines.iter().map(|g| (g.at(x), g.id)).collect();
    vals.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(vals[lam - 1].0)
}

/// Balls lying entirely within distance `widths[i]` of `planes[i]` for
/// every `i`.
pub fn count_within_strips(balls: &BallSet, planes: &[Hyperplane], widths: &[f64]) -> Result<usize> {
    if planes.len() != widths.len() {
        return Err(Error::InvalidParameter(
            "one width per plane required".into(),
        ));
    }
    let mut count = 0;
    'balls: for c in balls.centers() {
        for (h, w) in planes.iter().zip(widths) {
            if signed_distance(h, c)?.abs() + 1.0 > *w {
                continue 'balls;
            }
        }
        count += 1;
    }
    Ok(count)
}

/// Determinant of a square matrix given as columns, by Gaussian elimination
/// with partial pivoting.
pub fn determinant(columns: &[Vec<f64>]) -> f64 {
    let d = columns.len();
    let mut m: Vec<Vec<f64>> = (0..d)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    let mut det = 1.0;
    for col in 0..d {
        let pivot = (col..d)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..d {
            let f = m[r][col] / m[col][col];
            for c in col..d {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}

/// Smallest `|det|` over all `d`-subsets of `vectors` (each of length `d`),
/// or `None` when there are fewer than `d` vectors.
pub fn min_abs_subset_determinant(vectors: &[Vec<f64>]) -> Option<f64> {
    let d = vectors.first()?.len();
    if vectors.len() < d {
        return None;
    }
    let mut idx: Vec<usize> = (0..d).collect();
    let mut best = f64::INFINITY;
    loop {
        let cols: Vec<Vec<f64>> = idx.iter().map(|&i| vectors[i].clone()).collect();
        best = best.min(determinant(&cols).abs());
        // next combination in lexicographic order
        let k = vectors.len();
        let Some(pos) = (0..d).rev().find(|&p| idx[p] != p + k - d) else {
            return Some(best);
        };
        idx[pos] += 1;
        for q in pos + 1..d {
            idx[q] = idx[q - 1] + 1;
        }
    }
}
