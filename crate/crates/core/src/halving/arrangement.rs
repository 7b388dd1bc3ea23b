//! Queries on the arrangement of dual lines restricted to a vertical slab.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::DualLine;
use crate::select::{count_inversions, rank_select, sequence_inversions, Ranked};

/// Vertical strip `left <= x <= right` of the dual plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slab {
    pub left: f64,
    pub right: f64,
}

impl Slab {
    pub fn new(left: f64, right: f64) -> Result<Self> {
        if !(left.is_finite() && right.is_finite()) {
            return Err(Error::NonFinite("slab"));
        }
        if !(left < right) {
            return Err(Error::InvalidParameter(format!(
                "slab needs left < right, got <{left}, {right}>"
            )));
        }
        Ok(Slab { left, right })
    }

    pub fn width(&self) -> f64 {
        self.right - self.left
    }

    pub fn mid(&self) -> f64 {
        self.left + self.width() / 2.0
    }

    /// The central `1 - 2 gamma` fraction.
    pub fn core(&self, gamma: f64) -> Slab {
        let w = self.width();
        Slab {
            left: self.left + gamma * w,
            right: self.right - gamma * w,
        }
    }
}

fn values_at(lines: &[DualLine], x: f64) -> Vec<Ranked> {
    lines.iter().map(|l| Ranked::new(l.at(x), l.id)).collect()
}

/// The `lam`-th smallest line value at `x` (1-based, ties by id).
pub fn level_value_at(lines: &[DualLine], x: f64, lam: usize) -> Result<f64> {
    Ok(level_line_at(lines, x, lam)?.value)
}

/// Like [`level_value_at`] but also reports which line attains the level.
pub fn level_line_at(lines: &[DualLine], x: f64, lam: usize) -> Result<Ranked> {
    rank_select(&values_at(lines, x), lam)
}

fn sort_at(lines: &mut [DualLine], x: f64) {
    lines.sort_unstable_by(|a, b| a.at(x).total_cmp(&b.at(x)).then(a.id.cmp(&b.id)));
}

/// Line ids sorted by `(value at x, id)`.
pub fn order_at(lines: &[DualLine], x: f64) -> Vec<usize> {
    let mut sorted = lines.to_vec();
    sort_at(&mut sorted, x);
    sorted.iter().map(|l| l.id).collect()
}

/// Number of arrangement vertices with `a < x < b`: every crossing pair
/// swaps order exactly once.
pub fn vertices_in(lines: &[DualLine], a: f64, b: f64) -> Result<u64> {
    if !(a < b) {
        return Err(Error::InvalidParameter(format!("need a < b, got {a}, {b}")));
    }
    count_inversions(&order_at(lines, a), &order_at(lines, b))
}

/// Outcome of [`subdivide_slab`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Subdivision {
    /// `boundaries[0] = slab.left`, last = `slab.right`, strictly increasing.
    pub boundaries: Vec<f64>,
    /// Vertices strictly inside the slab.
    pub total_vertices: u64,
    /// Deepest bisection needed for any boundary.
    pub max_bisection_steps: usize,
}

impl Subdivision {
    pub fn subslabs(&self) -> impl Iterator<Item = Slab> + '_ {
        self.boundaries.windows(2).map(|w| Slab {
            left: w[0],
            right: w[1],
        })
    }

    pub fn len(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Hard cap on bisection depth per boundary.
pub const MAX_BISECTION_STEPS: usize = 128;

/// Splits `slab` into at most `m_max` subslabs holding at most
/// `max(ceil(V / m_max), 1)` vertices each.
///
/// Boundary `i` targets the cumulative count `ceil(i V / m_max)` and is found
/// by bisection on `x`, counting vertices with inversions. All targets are
/// bisected together; below each bracket only the lines that still swap
/// inside it are re-sorted.
pub fn subdivide_slab(
    lines: &[DualLine],
    slab: Slab,
    m_max: usize,
    width_floor: f64,
) -> Result<Subdivision> {
    if lines.len() < 2 {
        return Err(Error::Degenerate(lines.len()));
    }
    if m_max == 0 {
        return Err(Error::InvalidParameter("m_max must be >= 1".into()));
    }
    let max_id = lines.iter().map(|l| l.id).max().unwrap_or(0);
    let mut scratch = Scratch {
        pos: vec![0; max_id + 1],
        active: vec![false; max_id + 1],
    };
    let mut at_left = lines.to_vec();
    sort_at(&mut at_left, slab.left);
    let mut at_right = lines.to_vec();
    sort_at(&mut at_right, slab.right);
    let total = scratch.inversions(&at_left, &at_right);

    let mut targets: Vec<u64> = (1..m_max as u64)
        .map(|i| (i * total).div_ceil(m_max as u64))
        .filter(|&t| 0 < t && t < total)
        .collect();
    targets.dedup();

    let mut search = Bisection {
        floor: width_floor * slab.width(),
        scratch,
        found: Vec::with_capacity(targets.len()),
        max_steps: 0,
    };
    let (lo, hi) = search.restrict(&at_left, &at_right);
    search.run(
        Bracket {
            lo: slab.left,
            hi: slab.right,
            c_lo: 0,
            c_hi: total,
            depth: 0,
        },
        lo,
        hi,
        &targets,
    );

    let mut boundaries = Vec::with_capacity(search.found.len() + 2);
    boundaries.push(slab.left);
    for x in search.found {
        if x > *boundaries.last().expect("non-empty") && x < slab.right {
            boundaries.push(x);
        }
    }
    boundaries.push(slab.right);
    Ok(Subdivision {
        boundaries,
        total_vertices: total,
        max_bisection_steps: search.max_steps,
    })
}

struct Scratch {
    pos: Vec<u32>,
    active: Vec<bool>,
}

impl Scratch {
    fn sequence(&mut self, a: &[DualLine], b: &[DualLine]) -> Vec<u32> {
        for (i, l) in b.iter().enumerate() {
            self.pos[l.id] = i as u32;
        }
        a.iter().map(|l| self.pos[l.id]).collect()
    }

    fn inversions(&mut self, a: &[DualLine], b: &[DualLine]) -> u64 {
        let mut seq = self.sequence(a, b);
        sequence_inversions(&mut seq)
    }

    /// Marks the lines that take part in at least one inversion between the
    /// two orders.
    fn mark_active(&mut self, a: &[DualLine], b: &[DualLine]) {
        let seq = self.sequence(a, b);
        let n = seq.len();
        let mut suffix_min = vec![u32::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(seq[i]);
        }
        let mut prefix_max = 0u32;
        for (i, l) in a.iter().enumerate() {
            let crossed = (i > 0 && prefix_max > seq[i]) || suffix_min[i + 1] < seq[i];
            self.active[l.id] = crossed;
            prefix_max = prefix_max.max(seq[i]);
        }
    }
}

#[derive(Clone, Copy)]
struct Bracket {
    lo: f64,
    hi: f64,
    c_lo: u64,
    c_hi: u64,
    depth: usize,
}

struct Bisection {
    floor: f64,
    scratch: Scratch,
    found: Vec<f64>,
    max_steps: usize,
}

impl Bisection {
    /// Both orders cut down to the lines that swap between them.
    fn restrict(&mut self, a: &[DualLine], b: &[DualLine]) -> (Vec<DualLine>, Vec<DualLine>) {
        self.scratch.mark_active(a, b);
        let keep = |v: &[DualLine], act: &[bool]| -> Vec<DualLine> {
            v.iter().filter(|l| act[l.id]).copied().collect()
        };
        (keep(a, &self.scratch.active), keep(b, &self.scratch.active))
    }

    /// `at_lo`/`at_hi` hold the lines swapping inside the bracket, sorted at
    /// its two ends. Every target lies strictly between the end counts.
    fn run(&mut self, br: Bracket, at_lo: Vec<DualLine>, at_hi: Vec<DualLine>, targets: &[u64]) {
        if targets.is_empty() {
            return;
        }
        if br.depth >= MAX_BISECTION_STEPS || br.hi - br.lo < self.floor {
            self.max_steps = self.max_steps.max(br.depth);
            for &t in targets {
                let x = if t - br.c_lo <= br.c_hi - t { br.lo } else { br.hi };
                self.found.push(x);
            }
            return;
        }
        let mid = br.lo + (br.hi - br.lo) / 2.0;
        let mut at_mid = at_lo.clone();
        sort_at(&mut at_mid, mid);
        let c_mid = br.c_lo + self.scratch.inversions(&at_lo, &at_mid);

        let split_lo = targets.partition_point(|&t| t < c_mid);
        let split_hi = targets.partition_point(|&t| t <= c_mid);
        let depth = br.depth + 1;

        if split_lo > 0 {
            let (a, b) = self.restrict(&at_lo, &at_mid);
            let left = Bracket {
                hi: mid,
                c_hi: c_mid,
                depth,
                ..br
            };
            self.run(left, a, b, &targets[..split_lo]);
        }
        if split_hi > split_lo {
            self.max_steps = self.max_steps.max(depth);
            self.found.push(mid);
        }
        if split_hi < targets.len() {
            let (a, b) = self.restrict(&at_mid, &at_hi);
            let right = Bracket {
                lo: mid,
                c_lo: c_mid,
                depth,
                ..br
            };
            self.run(right, a, b, &targets[split_hi..]);
        }
    }
}
