//! Approximate halving hyperplanes in R^d by direction search.
//!
//! A fixed set of `k'` well-spread directions (a modular Heilbronn
//! configuration lifted to the upper hemisphere) is scanned in order. The
//! first direction whose middle-`b` projection window is at least `t` wide
//! admits a cut point that keeps a unit cushion to every ball outside the
//! window and meets few balls inside it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{BallSet, Direction, Hyperplane};
use crate::oracle;
use crate::select::{rank_select, Ranked};

/// Volume of the unit ball in R^d: `pi^(d/2) / Gamma(d/2 + 1)`.
pub fn unit_ball_volume(d: usize) -> f64 {
    // V_0 = 1, V_1 = 2, V_d = V_{d-2} * 2 pi / d
    let mut v = if d % 2 == 0 { 1.0 } else { 2.0 };
    let mut k = if d % 2 == 0 { 2 } else { 3 };
    while k <= d {
        v *= 2.0 * std::f64::consts::PI / k as f64;
        k += 2;
    }
    v
}

pub fn is_prime(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= k {
        if k % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// Least prime `>= max(k, 2)`, by trial division.
pub fn smallest_prime_at_least(k: usize) -> usize {
    (k.max(2)..).find(|&p| is_prime(p)).expect("primes are unbounded")
}

/// `p_i = (i, i^2 mod k, ..., i^m mod k) / k` for `i = 0..k`.
pub fn heilbronn_points(k: usize, m: usize) -> Result<Vec<Vec<f64>>> {
    if !is_prime(k) {
        return Err(Error::NotPrime(k));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("cube dimension must be >= 1".into()));
    }
    let kf = k as f64;
    Ok((0..k)
        .map(|i| {
            let mut power = i % k;
            let mut p = Vec::with_capacity(m);
            p.push(i as f64 / kf);
            for _ in 1..m {
                power = power * i % k;
                p.push(power as f64 / kf);
            }
            p
        })
        .collect())
}

/// `(x_1 - 1/2, ..., x_{d-1} - 1/2, 1/2)`, normalized.
pub fn lift_to_sphere(p: &[f64]) -> Result<Direction> {
    if let Some(&value) = p.iter().find(|&&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::Domain { value });
    }
    let mut v: Vec<f64> = p.iter().map(|x| x - 0.5).collect();
    v.push(0.5);
    Direction::normalized(v)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionSet {
    pub directions: Vec<Direction>,
    pub source_prime: usize,
}

pub fn build_directions(k: usize, d: usize) -> Result<DirectionSet> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "direction sets need d >= 2, got {d}"
        )));
    }
    let prime = smallest_prime_at_least(k);
    let directions = heilbronn_points(prime, d - 1)?
        .iter()
        .map(|p| lift_to_sphere(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(DirectionSet {
        directions,
        source_prime: prime,
    })
}

/// Parameters of the direction-search separator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparatorParams {
    pub d: usize,
    pub n: usize,
    /// Approximation budget: the result is an `(n - b)/2`-separator.
    pub b: usize,
    /// Number of directions requested.
    pub k: usize,
    /// Spread threshold.
    pub t: f64,
    /// Volume of the d-dimensional unit ball.
    pub v_d: f64,
}

impl SeparatorParams {
    /// Computes `t` without checking the two feasibility conditions.
    pub fn unchecked(d: usize, n: usize, b: usize, k: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("need d >= 2, got {d}")));
        }
        if b == 0 || b > n {
            return Err(Error::InvalidParameter(format!(
                "budget b = {b} outside 1..={n}"
            )));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("need k >= 1".into()));
        }
        let v_d = unit_ball_volume(d);
        let df = d as f64;
        let t = (v_d / (2.0 * df.powf((df - 2.0) / 2.0))).powf(1.0 / df)
            * (n as f64).powf(1.0 / df)
            / (k as f64).powf(2.0 - 1.0 / df);
        Ok(SeparatorParams { d, n, b, k, t, v_d })
    }

    /// `d n <= k b` and `t > 2`.
    pub fn validate(&self) -> Result<()> {
        let lhs = self.d as u128 * self.n as u128;
        let rhs = self.k as u128 * self.b as u128;
        if lhs > rhs {
            return Err(Error::Condition1Violated { lhs, rhs });
        }
        if !(self.t > 2.0) {
            return Err(Error::Condition2Violated { t: self.t });
        }
        Ok(())
    }

    pub fn min_side(&self) -> usize {
        (self.n - self.b).div_ceil(2)
    }

    pub fn max_cut(&self) -> f64 {
        2.0 * self.b as f64 / (self.t - 2.0)
    }
}

pub fn check_conditions(d: usize, n: usize, b: usize, k: usize) -> Result<SeparatorParams> {
    let params = SeparatorParams::unchecked(d, n, b, k)?;
    params.validate()?;
    Ok(params)
}

fn alpha_budget(d: usize, n: usize, alpha: f64) -> Result<(usize, usize)> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 1/2), got {alpha}"
        )));
    }
    let frac = 1.0 - 2.0 * alpha;
    let b = (frac * n as f64).floor() as usize;
    let k = (d as f64 / frac).ceil() as usize;
    Ok((b, k))
}

fn f_budget(d: usize, n: usize, f_value: f64) -> Result<(usize, usize)> {
    if !(f_value >= 1.0) || !f_value.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "f(n) must be finite and >= 1, got {f_value}"
        )));
    }
    let b = (n as f64 / f_value).ceil() as usize;
    let k = (d as f64 * f_value).ceil() as usize;
    Ok((b, k))
}

/// `b = floor((1 - 2 alpha) n)`, `k = ceil(d / (1 - 2 alpha))`.
pub fn params_from_alpha(d: usize, n: usize, alpha: f64) -> Result<SeparatorParams> {
    let (b, k) = alpha_budget(d, n, alpha)?;
    check_conditions(d, n, b, k)
}

/// `b = ceil(n / f)`, `k = ceil(d f)`.
pub fn params_from_f(d: usize, n: usize, f_value: f64) -> Result<SeparatorParams> {
    let (b, k) = f_budget(d, n, f_value)?;
    check_conditions(d, n, b, k)
}

/// Like [`params_from_alpha`] but returns the parameters even when the
/// conditions fail, together with the violation.
pub fn params_from_alpha_lenient(
    d: usize,
    n: usize,
    alpha: f64,
) -> Result<(SeparatorParams, Option<Error>)> {
    let (b, k) = alpha_budget(d, n, alpha)?;
    let params = SeparatorParams::unchecked(d, n, b.max(1), k)?;
    let violation = params.validate().err();
    Ok((params, violation))
}

/// Like [`params_from_f`] but returns the parameters even when the
/// conditions fail, together with the violation.
pub fn params_from_f_lenient(
    d: usize,
    n: usize,
    f_value: f64,
) -> Result<(SeparatorParams, Option<Error>)> {
    let (b, k) = f_budget(d, n, f_value)?;
    let params = SeparatorParams::unchecked(d, n, b.min(n), k)?;
    let violation = params.validate().err();
    Ok((params, violation))
}

/// Projection window of a direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spread {
    pub spread: f64,
    pub lo_value: f64,
    pub hi_value: f64,
    /// Ids whose projection lies in `[lo_value, hi_value]`.
    pub member_ids: Vec<usize>,
}

fn window_ranks(n: usize, b: usize) -> (usize, usize) {
    let lo = (n - b).div_ceil(2).max(1);
    let hi = (n + b).div_ceil(2).min(n);
    (lo, hi)
}

fn projections(balls: &BallSet, v: &Direction) -> Result<Vec<Ranked>> {
    if v.dim() != balls.dim() {
        return Err(Error::Dimension {
            expected: balls.dim(),
            found: v.dim(),
        });
    }
    Ok(balls
        .centers()
        .iter()
        .enumerate()
        .map(|(i, p)| Ranked::new(v.dot(p), i))
        .collect())
}

fn spread_of(proj: &[Ranked], b: usize) -> Result<Spread> {
    let n = proj.len();
    if n == 0 || b > n {
        return Err(Error::InvalidParameter(format!(
            "budget b = {b} invalid for n = {n}"
        )));
    }
    let (lo_rank, hi_rank) = window_ranks(n, b);
    let lo = rank_select(proj, lo_rank)?.value;
    let hi = rank_select(proj, hi_rank)?.value;
    let member_ids = proj
        .iter()
        .filter(|r| lo <= r.value && r.value <= hi)
        .map(|r| r.tag)
        .collect();
    Ok(Spread {
        spread: hi - lo,
        lo_value: lo,
        hi_value: hi,
        member_ids,
    })
}

/// Distance between the rank `ceil((n-b)/2)` and rank `ceil((n+b)/2)`
/// projections onto `v`.
pub fn spread(balls: &BallSet, v: &Direction, b: usize) -> Result<Spread> {
    spread_of(&projections(balls, v)?, b)
}

/// Finds `p` in `(lo + 1, hi - 1)` with at most `2 b' / (w - 2)` of the
/// `b'` values within distance 1, where `w = hi - lo > 2`.
///
/// Lays out `q = ceil((w - 2) / 2)` disjoint closed length-2 intervals with
/// equal gaps and binary-searches over them, always keeping the side whose
/// point-per-interval ratio is smaller. Returns the midpoint of the interval
/// found.
pub fn select_cut_point(values: &[f64], lo: f64, hi: f64) -> Result<f64> {
    let width = hi - lo;
    if !(width > 2.0) || !width.is_finite() {
        return Err(Error::Width { width });
    }
    if let Some(v) = values.iter().find(|&&v| !(lo <= v && v <= hi)) {
        return Err(Error::InvalidParameter(format!(
            "value {v} outside [{lo}, {hi}]"
        )));
    }
    let q = (((width - 2.0) / 2.0).ceil() as usize).max(1);
    let gap = (width - 2.0 * q as f64) / (q as f64 + 1.0);
    let start = |i: usize| lo + gap + i as f64 * (2.0 + gap);
    let threshold = 2.0 * values.len() as f64 / (width - 2.0);

    let mut points = values.to_vec();
    let (mut first, mut last) = (0usize, q - 1);
    loop {
        let mid = first + (last - first) / 2;
        if points.len() as f64 <= threshold || first == last {
            return Ok(start(mid) + 1.0);
        }
        let (s, e) = (start(mid), start(mid) + 2.0);
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut inside = 0usize;
        for &v in &points {
            if v < s {
                left.push(v);
            } else if v > e {
                right.push(v);
            } else {
                inside += 1;
            }
        }
        if inside as f64 <= threshold {
            return Ok(s + 1.0);
        }
        let (left_slots, right_slots) = (mid - first, last - mid);
        // compare left.len() / left_slots with right.len() / right_slots
        let go_left = match (left_slots, right_slots) {
            (0, _) => false,
            (_, 0) => true,
            (ls, rs) => left.len() * rs <= right.len() * ls,
        };
        if go_left {
            points = left;
            last = mid - 1;
        } else {
            points = right;
            first = mid + 1;
        }
    }
}

/// Why a separator carries no cut guarantee.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FallbackWarning {
    /// The parameters violate `d n <= k b` or `t > 2`.
    ConditionsViolated(String),
    /// No scanned direction reached spread `t`; the widest one was used.
    NoQualifyingDirection { best_spread: f64, t: f64 },
}

impl std::fmt::Display for FallbackWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FallbackWarning::ConditionsViolated(why) => {
                write!(f, "parameters violate the separator conditions: {why}")
            }
            FallbackWarning::NoQualifyingDirection { best_spread, t } => write!(
                f,
                "no direction reached spread {t}; used the widest ({best_spread})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparatorResult {
    pub plane: Hyperplane,
    pub direction_index: usize,
    pub spread: f64,
    pub guaranteed_min_side: usize,
    /// `2 b / (t - 2)`; absent when a fallback was taken.
    pub guaranteed_max_cut: Option<f64>,
    pub actual_left: usize,
    pub actual_right: usize,
    pub actual_cut: usize,
    pub intersected_ids: Vec<usize>,
    pub directions_scanned: usize,
    pub warnings: Vec<FallbackWarning>,
}

/// One scanned direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionTrace {
    pub index: usize,
    pub direction: Vec<f64>,
    pub spread: f64,
    pub qualifies: bool,
}

pub fn find_separator_nd(balls: &BallSet, params: &SeparatorParams) -> Result<SeparatorResult> {
    find_separator_nd_traced(balls, params, &mut |_| {})
}

/// [`find_separator_nd`] reporting every scanned direction to `on_direction`.
///
/// Parameters that violate the conditions are accepted; the result then
/// carries a [`FallbackWarning`] and no cut guarantee.
pub fn find_separator_nd_traced(
    balls: &BallSet,
    params: &SeparatorParams,
    on_direction: &mut dyn FnMut(&DirectionTrace),
) -> Result<SeparatorResult> {
    if balls.dim() != params.d {
        return Err(Error::Dimension {
            expected: params.d,
            found: balls.dim(),
        });
    }
    if balls.len() != params.n {
        return Err(Error::InvalidParameter(format!(
            "params are for n = {}, instance has {} balls",
            params.n,
            balls.len()
        )));
    }
    let mut warnings = Vec::new();
    if let Err(e) = params.validate() {
        warnings.push(FallbackWarning::ConditionsViolated(e.to_string()));
    }

    let dirs = build_directions(params.k, params.d)?;
    let mut chosen: Option<(usize, Spread, Vec<Ranked>)> = None;
    let mut widest: Option<(usize, Spread, Vec<Ranked>)> = None;
    let mut scanned = 0;
    for (index, v) in dirs.directions.iter().enumerate() {
        scanned += 1;
        let proj = projections(balls, v)?;
        let s = spread_of(&proj, params.b)?;
        let qualifies = s.spread >= params.t && s.spread > 2.0;
        on_direction(&DirectionTrace {
            index,
            direction: v.coords().to_vec(),
            spread: s.spread,
            qualifies,
        });
        if qualifies {
            chosen = Some((index, s, proj));
            break;
        }
        if widest.as_ref().is_none_or(|w| s.spread > w.1.spread) {
            widest = Some((index, s, proj));
        }
    }
    let (index, window, proj) = match chosen {
        Some(c) => c,
        None => {
            let w = widest.expect("direction set is never empty");
            warnings.push(FallbackWarning::NoQualifyingDirection {
                best_spread: w.1.spread,
                t: params.t,
            });
            w
        }
    };

    // Values on the window boundary are never within distance 1 of a point
    // in (lo + 1, hi - 1), so only the interior ones matter.
    let (lo, hi) = (window.lo_value, window.hi_value);
    let cut = if window.spread > 2.0 {
        let interior: Vec<f64> = proj
            .iter()
            .map(|r| r.value)
            .filter(|&v| lo < v && v < hi)
            .collect();
        select_cut_point(&interior, lo, hi)?
    } else {
        lo + (hi - lo) / 2.0
    };
    let plane = Hyperplane::new(dirs.directions[index].clone(), cut)?;
    let sides = oracle::count_sides(balls, &plane)?;
    let (actual_cut, intersected_ids) = oracle::count_intersected(balls, &plane)?;
    let guaranteed_max_cut = warnings.is_empty().then(|| params.max_cut());
    Ok(SeparatorResult {
        plane,
        direction_index: index,
        spread: window.spread,
        guaranteed_min_side: params.min_side(),
        guaranteed_max_cut,
        actual_left: sides.left_closed(),
        actual_right: sides.right_closed(),
        actual_cut,
        intersected_ids,
        directions_scanned: scanned,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_examples() {
        assert_eq!(smallest_prime_at_least(1), 2);
        assert_eq!(smallest_prime_at_least(8), 11);
        assert_eq!(smallest_prime_at_least(97), 97);
        for k in 2..500 {
            assert!(smallest_prime_at_least(k) <= 2 * k);
        }
    }

    #[test]
    fn unit_ball_volumes() {
        use std::f64::consts::PI;
        assert_eq!(unit_ball_volume(1), 2.0);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-15);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((unit_ball_volume(4) - PI * PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn heilbronn_examples() {
        let p = heilbronn_points(5, 2).unwrap();
        let expect = [[0.0, 0.0], [0.2, 0.2], [0.4, 0.8], [0.6, 0.8], [0.8, 0.2]];
        for (a, b) in p.iter().zip(expect) {
            assert_eq!(a.as_slice(), &b);
        }
        let p = heilbronn_points(3, 1).unwrap();
        assert_eq!(p, vec![vec![0.0], vec![1.0 / 3.0], vec![2.0 / 3.0]]);
        let p = heilbronn_points(2, 2).unwrap();
        assert_eq!(p, vec![vec![0.0, 0.0], vec![0.5, 0.5]]);
        assert_eq!(heilbronn_points(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_to_sphere(&[0.5]).unwrap().coords(), &[0.0, 1.0]);
        let v = lift_to_sphere(&[0.0]).unwrap();
        let h = 2f64.sqrt() / 2.0;
        assert!((v.coords()[0] + h).abs() < 1e-15 && (v.coords()[1] - h).abs() < 1e-15);
        assert_eq!(lift_to_sphere(&[0.5, 0.5]).unwrap().coords(), &[0.0, 0.0, 1.0]);
        assert!(matches!(lift_to_sphere(&[1.5]), Err(Error::Domain { .. })));
    }

    #[test]
    fn build_direction_examples() {
        let d = build_directions(4, 2).unwrap();
        assert_eq!((d.directions.len(), d.source_prime), (5, 5));
        assert_eq!(build_directions(2, 2).unwrap().directions.len(), 2);
        let d = build_directions(5, 3).unwrap();
        assert_eq!(d.directions.len(), 5);
        let vecs: Vec<Vec<f64>> = d.directions.iter().map(|v| v.coords().to_vec()).collect();
        let min = oracle::min_abs_subset_determinant(&vecs).unwrap();
        let bound = 4.0 / (2.0 * 3f64.powf(1.5) * 25.0);
        assert!(min >= bound, "{min} < {bound}");
    }

    #[test]
    fn condition_examples() {
        let p = check_conditions(2, 10000, 5000, 4).unwrap();
        let expect = (std::f64::consts::PI / 2.0).sqrt() * 100.0 / 8.0;
        assert!((p.t - expect).abs() < 1e-12);
        assert!((p.t - 15.67).abs() < 0.01);
        assert_eq!(
            check_conditions(2, 100, 10, 3),
            Err(Error::Condition1Violated { lhs: 200, rhs: 30 })
        );
        match check_conditions(2, 16, 16, 2) {
            Err(Error::Condition2Violated { t }) => {
                // sqrt(pi/2) * 16^(1/2) / 2^(3/2)
                let expect = (std::f64::consts::PI / 2.0).sqrt() * 4.0 / 2f64.powf(1.5);
                assert!((t - expect).abs() < 1e-12);
                assert!((t - 1.772).abs() < 1e-3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn alpha_examples() {
        let p = params_from_alpha(2, 10000, 0.25).unwrap();
        assert_eq!((p.b, p.k), (5000, 4));
        assert!((p.t - 15.67).abs() < 0.01);
        let p = params_from_alpha(2, 10000, 0.001).unwrap();
        assert_eq!((p.b, p.k), (9980, 3));
        let p = params_from_alpha(3, 1_000_000, 0.25).unwrap();
        assert_eq!((p.b, p.k), (500000, 6));
        let v3 = 4.0 * std::f64::consts::PI / 3.0;
        let t = (v3 / (2.0 * 3f64.sqrt())).cbrt() * 100.0 / 6f64.powf(5.0 / 3.0);
        assert!((p.t - t).abs() < 1e-12);
        assert!(params_from_alpha(2, 100, 0.5).is_err());
    }

    #[test]
    fn f_examples() {
        let p = params_from_f(2, 1 << 20, 20.0).unwrap();
        assert_eq!((p.b, p.k), (52429, 40));
        let (p, violation) = params_from_f_lenient(2, 100, 1.0).unwrap();
        assert_eq!((p.b, p.k), (100, 2));
        // condition 1 holds with equality
        assert_eq!(p.d * p.n, p.k * p.b);
        assert_eq!(violation, None);
        assert!(matches!(
            params_from_f(2, 100, 50.0),
            Err(Error::Condition2Violated { .. })
        ));
    }

    #[test]
    fn spread_examples() {
        let balls =
            BallSet::from_coords(2, (0..5).map(|i| vec![3.0 * i as f64, 0.0])).unwrap();
        let v = Direction::new(vec![1.0, 0.0]).unwrap();
        let s = spread(&balls, &v, 1).unwrap();
        assert_eq!((s.lo_value, s.hi_value, s.spread), (3.0, 6.0, 3.0));
        assert_eq!(s.member_ids, vec![1, 2]);
        let s = spread(&balls, &v, 3).unwrap();
        assert_eq!((s.lo_value, s.hi_value, s.spread), (0.0, 9.0, 9.0));
        let neg = Direction::new(vec![-1.0, 0.0]).unwrap();
        assert_eq!(spread(&balls, &neg, 3).unwrap().spread, 9.0);
    }

    fn within_one(values: &[f64], p: f64) -> usize {
        values.iter().filter(|v| (*v - p).abs() <= 1.0).count()
    }

    #[test]
    fn cut_point_examples() {
        let p = select_cut_point(&[], 0.0, 10.0).unwrap();
        assert!(1.0 < p && p < 9.0);
        let p = select_cut_point(&[5.0], 0.0, 10.0).unwrap();
        assert!(1.0 < p && p < 9.0);
        assert_eq!(within_one(&[5.0], p), 0);
        let vals = [1.0, 5.0, 9.0];
        let p = select_cut_point(&vals, 0.0, 10.0).unwrap();
        assert_eq!(within_one(&vals, p), 0);
        assert_eq!(
            select_cut_point(&[], 0.0, 2.0),
            Err(Error::Width { width: 2.0 })
        );
        assert!(select_cut_point(&[11.0], 0.0, 10.0).is_err());
    }

    #[test]
    fn cut_point_dense_cluster() {
        // everything piled on one spot: must find an empty interval
        let vals = vec![4.0; 50];
        let p = select_cut_point(&vals, 0.0, 20.0).unwrap();
        assert!(within_one(&vals, p) as f64 <= 2.0 * 50.0 / 18.0);
    }

    #[test]
    fn separator_on_collinear_row() {
        let balls =
            BallSet::from_coords(2, (0..5).map(|i| vec![3.0 * i as f64, 0.0])).unwrap();
        let params = SeparatorParams::unchecked(2, 5, 1, 2).unwrap();
        let r = find_separator_nd(&balls, &params).unwrap();
        assert!(r.actual_left >= 2 && r.actual_right >= 2);
        // t < 2 here, so the conditions fail and no cut bound is claimed
        assert!(r.guaranteed_max_cut.is_none());
        assert!(!r.warnings.is_empty());
    }

    #[test]
    fn separator_rejects_mismatched_params() {
        let balls = BallSet::from_coords(2, [vec![0.0, 0.0]]).unwrap();
        let params = SeparatorParams::unchecked(3, 1, 1, 3).unwrap();
        assert!(matches!(
            find_separator_nd(&balls, &params),
            Err(Error::Dimension { .. })
        ));
        let params = SeparatorParams::unchecked(2, 2, 1, 3).unwrap();
        assert!(find_separator_nd(&balls, &params).is_err());
    }
}
