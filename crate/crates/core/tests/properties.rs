use ballcut::geom::{
    ball_intersects_hyperplane, dual_segment_for_line, dualize_line, dualize_point, Hyperplane,
    Point,
};
use ballcut::select::{count_inversions, rank_select, Ranked};
use ballcut::separator::select_cut_point;
use proptest::prelude::*;

fn brute_inversions(a: &[usize], b: &[usize]) -> u64 {
    let pos = |v: &[usize], id: usize| v.iter().position(|&x| x == id).unwrap();
    let mut count = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if pos(b, a[i]) > pos(b, a[j]) {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #[test]
    fn rank_select_matches_sorting(
        values in prop::collection::vec(-1e6f64..1e6, 1..300),
        pick in any::<prop::sample::Index>(),
    ) {
        let items: Vec<Ranked> =
            values.iter().enumerate().map(|(i, &v)| Ranked::new(v, i)).collect();
        let mut sorted = items.clone();
        sorted.sort_by(Ranked::order);
        let k = pick.index(items.len()) + 1;
        prop_assert_eq!(rank_select(&items, k).unwrap(), sorted[k - 1]);
    }

    #[test]
    fn rank_select_with_heavy_ties(
        values in prop::collection::vec(0u8..4, 1..200),
        pick in any::<prop::sample::Index>(),
    ) {
        let items: Vec<Ranked> =
            values.iter().enumerate().map(|(i, &v)| Ranked::new(v as f64, i)).collect();
        let mut sorted = items.clone();
        sorted.sort_by(Ranked::order);
        let k = pick.index(items.len()) + 1;
        prop_assert_eq!(rank_select(&items, k).unwrap(), sorted[k - 1]);
    }

    #[test]
    fn inversions_match_pair_scan(
        perm in Just((0..60usize).collect::<Vec<_>>()).prop_shuffle(),
        other in Just((0..60usize).collect::<Vec<_>>()).prop_shuffle(),
        len in 0usize..60,
    ) {
        let a: Vec<usize> = perm.iter().copied().filter(|&x| x < len).collect();
        let b: Vec<usize> = other.iter().copied().filter(|&x| x < len).collect();
        let fast = count_inversions(&a, &b).unwrap();
        prop_assert_eq!(fast, brute_inversions(&a, &b));
        prop_assert_eq!(fast, count_inversions(&b, &a).unwrap());
    }

    #[test]
    fn line_duality_is_an_involution(m in -1e3f64..1e3, c in -1e3f64..1e3) {
        let p = dualize_line(m, c).unwrap();
        let l = dualize_point(&p, 0).unwrap();
        prop_assert_eq!((l.slope, l.intercept), (m, c));
    }

    #[test]
    fn duality_preserves_above_below(
        px in -100f64..100.0, py in -100f64..100.0,
        m in -100f64..100.0, c in -100f64..100.0,
    ) {
        // p above y = m x + c  <=>  dual line of p below the dual point
        let p = Point::xy(px, py).unwrap();
        let gap = py - (m * px + c);
        prop_assume!(gap.abs() > 1e-9);
        let dual_point = dualize_line(m, c).unwrap();
        let dual_line = dualize_point(&p, 0).unwrap();
        let dual_gap = dual_line.at(dual_point.x()) - dual_point.y();
        prop_assert_eq!(gap > 0.0, dual_gap < 0.0);
    }

    #[test]
    fn disk_intersection_matches_dual_segment(
        px in -50f64..50.0, py in -50f64..50.0,
        m in -20f64..20.0, c in -50f64..50.0,
    ) {
        let p = Point::xy(px, py).unwrap();
        let plane = Hyperplane::from_slope_intercept(m, c).unwrap();
        let dist = (py - m * px - c).abs() / m.hypot(1.0);
        prop_assume!((dist - 1.0).abs() > 1e-9);
        let primal = ball_intersects_hyperplane(&plane, &p).unwrap();
        let dual = dual_segment_for_line(m, c).crossed_by(&dualize_point(&p, 0).unwrap());
        prop_assert_eq!(primal, dual);
    }

    #[test]
    fn cut_point_contract(
        lo in -100f64..100.0,
        width in 2.1f64..50.0,
        fractions in prop::collection::vec(0f64..=1.0, 0..200),
    ) {
        let hi = lo + width;
        let values: Vec<f64> = fractions.iter().map(|f| (lo + f * width).clamp(lo, hi)).collect();
        let p = select_cut_point(&values, lo, hi).unwrap();
        prop_assert!(lo + 1.0 < p && p < hi - 1.0);
        let near = values.iter().filter(|v| (*v - p).abs() <= 1.0).count();
        let w = hi - lo;
        prop_assert!(near as f64 <= 2.0 * values.len() as f64 / (w - 2.0));
    }
}
