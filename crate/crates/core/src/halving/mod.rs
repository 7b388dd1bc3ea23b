//! Exact halving lines in the plane by prune-and-search on the dual
//! arrangement.
//!
//! The halving lines of the centers are dual to the points of the median
//! level of their dual lines. Each iteration narrows a vertical slab that
//! contains the part of that level we still care about and throws away dual
//! lines that cannot meet the 1-tube around it, since their disks cannot be
//! cut by any line we might still output.

pub mod arrangement;
pub mod tube;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{
    dual_segment_for_line, dualize_point, rotate_to_general_position, rotate_xy, BallSet,
    Direction, DualLine, Hyperplane, Point,
};
use crate::oracle;

pub use arrangement::{
    level_line_at, level_value_at, order_at, subdivide_slab, vertices_in, Slab, Subdivision,
    MAX_BISECTION_STEPS,
};
pub use tube::{
    build_trapezoid, line_intersects_tube_in_range, trapezoid_levels, Carrier, Trapezoid,
    TubeSide, TUBE_TOLERANCE,
};

/// Tuning of the planar algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarParams {
    /// Each subslab is shrunk to its central `1 - 2 gamma` fraction.
    pub gamma: f64,
    /// Pruning slack; only enters the logged theoretical width guard.
    pub epsilon: f64,
    /// Maximum number of subslabs per iteration.
    pub m_max: usize,
    /// Stop iterating once this many lines or fewer survive.
    pub min_lines: usize,
    /// Relative width at which bisection and iteration stop.
    pub width_floor: f64,
    /// Scan 33 points of the final slab for the fewest cut disks instead of
    /// using its midpoint.
    pub optimize_finish: bool,
}

impl Default for PlanarParams {
    fn default() -> Self {
        PlanarParams {
            gamma: 0.25,
            epsilon: 0.25,
            m_max: 64,
            min_lines: 24,
            width_floor: 1e-13,
            optimize_finish: false,
        }
    }
}

impl PlanarParams {
    pub fn validate(&self) -> Result<()> {
        let open_half = |v: f64| v > 0.0 && v < 0.5;
        if !open_half(self.gamma) {
            return Err(Error::InvalidParameter(format!(
                "gamma must lie in (0, 1/2), got {}",
                self.gamma
            )));
        }
        if !open_half(self.epsilon) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must lie in (0, 1/2), got {}",
                self.epsilon
            )));
        }
        if !(1..=64).contains(&self.m_max) {
            return Err(Error::InvalidParameter(format!(
                "m_max must lie in 1..=64, got {}",
                self.m_max
            )));
        }
        if !(self.width_floor > 0.0 && self.width_floor < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "width_floor must lie in (0, 1), got {}",
                self.width_floor
            )));
        }
        Ok(())
    }

    /// `(8 m / (gamma epsilon))^2`.
    pub fn width_constant(&self) -> f64 {
        (8.0 * self.m_max as f64 / (self.gamma * self.epsilon)).powi(2)
    }
}

/// Survivors, slab, and tracked level between iterations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlabState {
    pub lines: Vec<DualLine>,
    pub slab: Slab,
    /// Index of the tracked level among `lines` (1-based).
    pub lambda: usize,
    /// Lines discarded below the level so far.
    pub discarded_below: usize,
    pub iteration: usize,
}

impl SlabState {
    /// Starts on `<0, 1>` tracking level `lambda`.
    pub fn initial(lines: Vec<DualLine>, lambda: usize) -> Result<Self> {
        if lambda == 0 || lambda > lines.len() {
            return Err(Error::LevelOutOfRange {
                lambda,
                len: lines.len(),
            });
        }
        Ok(SlabState {
            lines,
            slab: Slab::new(0.0, 1.0)?,
            lambda,
            discarded_below: 0,
            iteration: 0,
        })
    }
}

/// Per-iteration record for tracing and plotting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationTrace {
    pub iteration: usize,
    pub slab: Slab,
    pub boundaries: Vec<f64>,
    /// Lines meeting each subslab's tube over its core.
    pub counts: Vec<usize>,
    pub chosen: usize,
    pub core: Slab,
    pub trapezoid: Trapezoid,
    pub lines_before: usize,
    pub survivors: usize,
    pub discarded_above: usize,
    pub discarded_below: usize,
    pub lambda: usize,
    pub total_vertices: u64,
    pub max_bisection_steps: usize,
    /// `c log(n) / n`; logged only.
    pub theoretical_width_guard: f64,
}

/// Result of one iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub state: SlabState,
    pub trace: IterationTrace,
    pub discarded: Vec<(DualLine, TubeSide)>,
}

/// One prune step: subdivide, build a trapezoid per subslab, keep the wide
/// subslab whose tube meets the fewest lines over its core, and shrink to
/// that core.
pub fn iterate_once(state: &SlabState, params: &PlanarParams) -> Result<Step> {
    params.validate()?;
    let n = state.lines.len();
    if n < 2 || n <= params.min_lines {
        return Err(Error::InvalidParameter(format!(
            "iteration needs more than max(1, min_lines = {}) lines, got {n}",
            params.min_lines
        )));
    }
    if state.lambda == 0 || state.lambda > n {
        return Err(Error::LevelOutOfRange {
            lambda: state.lambda,
            len: n,
        });
    }
    let lines = &state.lines;
    let sub = subdivide_slab(lines, state.slab, params.m_max, params.width_floor)?;

    let (lower, upper) = trapezoid_levels(n, state.lambda);
    let corners = sub
        .boundaries
        .iter()
        .map(|&x| Ok((level_value_at(lines, x, lower)?, level_value_at(lines, x, upper)?)))
        .collect::<Result<Vec<_>>>()?;
    let traps: Vec<Trapezoid> = sub
        .subslabs()
        .enumerate()
        .map(|(i, s)| Trapezoid::from_corners(s, corners[i], corners[i + 1]))
        .collect();

    let m = sub.len();
    let min_width = state.slab.width() / m as f64 * (1.0 - 1e-12);
    let mut counts = Vec::with_capacity(m);
    let mut best: Option<(usize, usize)> = None;
    for (i, (s, trap)) in sub.subslabs().zip(&traps).enumerate() {
        let core = s.core(params.gamma);
        let c = lines
            .iter()
            .filter(|g| line_intersects_tube_in_range(g, trap, core.left, core.right))
            .count();
        counts.push(c);
        if s.width() >= min_width && best.is_none_or(|(_, b)| c < b) {
            best = Some((i, c));
        }
    }
    let (chosen, _) = best.expect("some subslab is at least as wide as the average");
    let trap = traps[chosen];
    let core = sub
        .subslabs()
        .nth(chosen)
        .expect("chosen index is in range")
        .core(params.gamma);
    if !(core.left < core.right) || core.width() < params.width_floor {
        return Err(Error::NoProgress);
    }

    let mut survivors = Vec::with_capacity(n);
    let mut discarded = Vec::new();
    let (mut above, mut below) = (0, 0);
    for g in lines {
        // same test as line_intersects_tube_in_range, keeping the side
        let side = trap.classify(g, core.left);
        if side == TubeSide::Inside || side != trap.classify(g, core.right) {
            survivors.push(*g);
            continue;
        }
        if side == TubeSide::Above {
            above += 1;
        } else {
            below += 1;
        }
        discarded.push((*g, side));
    }
    let lambda = state
        .lambda
        .checked_sub(below)
        .filter(|&l| l >= 1 && l <= survivors.len())
        .ok_or(Error::LevelOutOfRange {
            lambda: state.lambda.saturating_sub(below),
            len: survivors.len(),
        })?;

    let n_f = n as f64;
    let trace = IterationTrace {
        iteration: state.iteration + 1,
        slab: state.slab,
        boundaries: sub.boundaries.clone(),
        counts,
        chosen,
        core,
        trapezoid: trap,
        lines_before: n,
        survivors: survivors.len(),
        discarded_above: above,
        discarded_below: below,
        lambda,
        total_vertices: sub.total_vertices,
        max_bisection_steps: sub.max_bisection_steps,
        theoretical_width_guard: params.width_constant() * n_f.ln() / n_f,
    };
    log::debug!(
        "iteration {}: {} -> {} lines, slab width {:.3e}, guard {:.3e}",
        trace.iteration,
        n,
        survivors.len(),
        core.width(),
        trace.theoretical_width_guard
    );
    Ok(Step {
        state: SlabState {
            lines: survivors,
            slab: core,
            lambda,
            discarded_below: state.discarded_below + below,
            iteration: state.iteration + 1,
        },
        trace,
        discarded,
    })
}

/// Why the iteration loop ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// At most `min_lines` lines survived.
    FewLines,
    /// The slab became narrower than the width floor.
    WidthFloor,
    /// An iteration discarded nothing.
    NoDiscard,
    /// The slab could not shrink further.
    NoProgress,
}

/// Output of [`halving_line`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalvingResult {
    /// The line `y = slope * x + intercept`, if not vertical.
    pub slope_intercept: Option<(f64, f64)>,
    pub plane: Hyperplane,
    pub intersected_ids: Vec<usize>,
    pub left_count: usize,
    pub right_count: usize,
    pub iterations: usize,
    pub survivors_at_finish: usize,
    /// Disks cut according to the dual test on the survivors.
    pub survivor_cut_count: usize,
    /// Rotation applied to reach general position.
    pub rotation: f64,
    pub stop_reason: StopReason,
}

pub fn halving_line(balls: &BallSet, params: &PlanarParams) -> Result<HalvingResult> {
    halving_line_traced(balls, params, &mut |_| {})
}

/// [`halving_line`] reporting each iteration to `on_iteration`.
pub fn halving_line_traced(
    balls: &BallSet,
    params: &PlanarParams,
    on_iteration: &mut dyn FnMut(&Step),
) -> Result<HalvingResult> {
    params.validate()?;
    if balls.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: balls.dim(),
        });
    }
    if balls.is_empty() {
        return Err(Error::Size {
            n: 0,
            reason: "need at least one disk",
        });
    }
    let centers = balls.centers();
    let set_aside = (centers.len() % 2 == 0).then(|| lexicographic_min(centers));
    let working_ids: Vec<usize> = (0..centers.len()).filter(|&i| Some(i) != set_aside).collect();
    let working = BallSet::new_unchecked_overlap(
        2,
        working_ids.iter().map(|&i| centers[i].clone()).collect(),
    )?;
    let (rotated, angle) = rotate_to_general_position(&working)?;
    let lines = rotated
        .centers()
        .iter()
        .zip(&working_ids)
        .map(|(p, &id)| dualize_point(p, id))
        .collect::<Result<Vec<_>>>()?;
    let lambda = lines.len().div_ceil(2);
    let mut state = SlabState::initial(lines, lambda)?;

    let stop_reason = loop {
        if state.lines.len() <= params.min_lines.max(1) {
            break StopReason::FewLines;
        }
        if state.slab.width() < params.width_floor {
            break StopReason::WidthFloor;
        }
        match iterate_once(&state, params) {
            Ok(step) => {
                on_iteration(&step);
                let nothing_discarded = step.discarded.is_empty();
                state = step.state;
                if nothing_discarded {
                    break StopReason::NoDiscard;
                }
            }
            Err(Error::NoProgress | Error::LevelOutOfRange { .. }) => break StopReason::NoProgress,
            Err(e) => return Err(e),
        }
    };

    let x_star = if params.optimize_finish {
        best_finish_x(&state)?
    } else {
        state.slab.mid()
    };
    let pivot = level_line_at(&state.lines, x_star, state.lambda)?;
    let y_star = pivot.value;

    // The primal line y = x* X - y* in the rotated frame passes through the
    // pivot center; anchor the plane on its original coordinates.
    let scale = x_star.hypot(1.0);
    let (nx, ny) = rotate_xy(-x_star / scale, 1.0 / scale, -angle);
    let normal = Direction::normalized(vec![nx, ny])?;
    let offset = normal.dot(&centers[pivot.tag]);
    let plane = Hyperplane::new(normal, offset)?;

    let sides = oracle::count_sides(balls, &plane)?;
    let (_, intersected_ids) = oracle::count_intersected(balls, &plane)?;
    let segment = dual_segment_for_line(x_star, -y_star);
    let mut survivor_cut_count = state.lines.iter().filter(|g| segment.crossed_by(g)).count();
    if let Some(i) = set_aside {
        let alone = BallSet::new_unchecked_overlap(2, vec![centers[i].clone()])?;
        survivor_cut_count += oracle::count_intersected(&alone, &plane)?.0;
    }
    Ok(HalvingResult {
        slope_intercept: plane.slope_intercept(),
        plane,
        intersected_ids,
        left_count: sides.left_closed(),
        right_count: sides.right_closed(),
        iterations: state.iteration,
        survivors_at_finish: state.lines.len(),
        survivor_cut_count,
        rotation: angle,
        stop_reason,
    })
}

fn lexicographic_min(centers: &[Point]) -> usize {
    (0..centers.len())
        .min_by(|&a, &b| {
            let (p, q) = (&centers[a], &centers[b]);
            p.x().total_cmp(&q.x()).then(p.y().total_cmp(&q.y()))
        })
        .expect("non-empty")
}

/// Among 33 evenly spaced points of the slab, the one whose primal line
/// cuts the fewest survivor disks (leftmost on ties).
fn best_finish_x(state: &SlabState) -> Result<f64> {
    let mut best = (usize::MAX, state.slab.mid());
    for j in 0..=32 {
        let x = state.slab.left + state.slab.width() * j as f64 / 32.0;
        let y = level_value_at(&state.lines, x, state.lambda)?;
        let segment = dual_segment_for_line(x, -y);
        let cut = state.lines.iter().filter(|g| segment.crossed_by(g)).count();
        if cut < best.0 {
            best = (cut, x);
        }
    }
    Ok(best.1)
}
