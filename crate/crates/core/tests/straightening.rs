//! End-to-end exercises of the bigon engine: quasi-transverse
//! normalization, minimal bigons, removals with constraints, arc and loop
//! straightening, and geometric intersection numbers.

use bigonkit::bigon::{
    find_bigons, find_minimal_bigon, geometric_intersection_number, make_quasi_transverse,
    remove_bigon, straighten_arc, straighten_loop, verify_bigon, AvoidSets, BigonError,
    FeatureSet, GinCurve, LinePair, PairKind, PairState, StepKind, SupportLocation,
};
use bigonkit::curves::{PLLoop, PLPath, PunctureSet};
use bigonkit::geom::{rat, ratio, Point};

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn pth(x: i64, y2: i64) -> Point {
    // Point with half-integer y.
    Point::new(rat(x), ratio(y2, 2))
}

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| pt(x, y)).collect()
}

fn path(v: &[(i64, i64)]) -> PLPath {
    PLPath::new(pts(v)).unwrap()
}

fn lp(v: &[(i64, i64)]) -> PLLoop {
    PLLoop::new(pts(v)).unwrap()
}

fn punctures(v: &[(i64, i64)]) -> PunctureSet {
    PunctureSet::new(pts(v)).unwrap()
}

/// The straight line with a single-lens prime: the lens is the smallest
/// face, so one removal plus the final step straightens everything.
fn one_lens_pair() -> LinePair {
    let alpha = path(&[(0, 0), (1, 0), (9, 0), (10, 0)]);
    let prime = path(&[
        (0, 0),
        (1, 0),
        (2, 2),
        (3, 3),
        (5, -3),
        (7, 3),
        (8, 2),
        (9, 0),
        (10, 0),
    ]);
    LinePair::new(alpha, prime).unwrap()
}

#[test]
fn lens_bigon_found_and_verified() {
    let pair = one_lens_pair();
    let f = punctures(&[(5, 5)]);
    let state = PairState {
        alpha: pair.alpha().vertices().to_vec(),
        prime: pair.alpha_prime().vertices().to_vec(),
        alpha_closed: false,
        prime_closed: false,
        kind: PairKind::PinnedArcs,
    };
    let cert = find_minimal_bigon(&state, &f).unwrap().expect("a bigon");
    verify_bigon(&state, &f, &cert).unwrap();
    // The smallest face is the central lens between (4,0) and (6,0).
    let mut vs = vec![cert.vertices.0.clone(), cert.vertices.1.clone()];
    vs.sort();
    assert_eq!(vs, vec![pt(4, 0), pt(6, 0)]);
}

#[test]
fn straighten_single_lens() {
    let pair = one_lens_pair();
    let f = punctures(&[(5, 5)]);
    let trace = straighten_arc(&pair, &f, &FeatureSet::default(), &FeatureSet::default())
        .expect("straightens");
    assert_eq!(trace.final_curve, pair.alpha().vertices().to_vec());
    assert_eq!(trace.bigon_removal_count(), 1);
    assert_eq!(
        trace.steps.last().unwrap().kind,
        StepKind::FinalCoincidence
    );
    // Components: 4 (two tails + two crossings) → 2 → 1.
    assert_eq!(trace.component_counts, vec![4, 2, 1]);
    // Supports avoid the puncture.
    for step in &trace.steps {
        assert_eq!(step.support_contains(&pt(5, 5)), SupportLocation::Outside);
    }
}

#[test]
fn straighten_rejects_non_homotopic() {
    // Prime passes on the other side of the puncture.
    let alpha = path(&[(0, 0), (1, 0), (9, 0), (10, 0)]);
    let prime = path(&[(0, 0), (1, 0), (4, 3), (6, 3), (9, 0), (10, 0)]);
    let pair = LinePair::new(alpha, prime).unwrap();
    let f = punctures(&[(5, 1)]);
    match straighten_arc(&pair, &f, &FeatureSet::default(), &FeatureSet::default()) {
        Err(BigonError::NotHomotopic {
            alpha_word,
            prime_word,
        }) => {
            assert_ne!(alpha_word, prime_word);
        }
        other => panic!("expected NotHomotopic, got {other:?}"),
    }
}

#[test]
fn straighten_zigzag_multiple_bigons() {
    let alpha = path(&[(0, 0), (1, 0), (9, 0), (10, 0)]);
    let prime = path(&[
        (0, 0),
        (1, 0),
        (2, 2),
        (3, -2),
        (4, 2),
        (5, -2),
        (6, 2),
        (9, 0),
        (10, 0),
    ]);
    let pair = LinePair::new(alpha, prime).unwrap();
    let f = PunctureSet::empty();
    let trace = straighten_arc(&pair, &f, &FeatureSet::default(), &FeatureSet::default())
        .expect("straightens");
    assert_eq!(trace.final_curve, pair.alpha().vertices().to_vec());
    // Counts strictly decrease.
    for w in trace.component_counts.windows(2) {
        assert!(w[1] < w[0], "counts must strictly decrease: {:?}", trace.component_counts);
    }
    // 4 crossings need at least two removals.
    assert!(trace.bigon_removal_count() >= 2);
}

#[test]
fn nested_lenses_inner_removal_is_local() {
    let alpha = path(&[(0, 0), (1, 0), (9, 0), (10, 0)]);
    let prime = PLPath::new(vec![
        pt(0, 0),
        pt(1, 0),
        pth(2, 1),              // (3/2 → 2, climbing); integer-friendly start
        Point::new(ratio(5, 2), rat(-4)),
        Point::new(ratio(15, 2), rat(-4)),
        Point::new(ratio(17, 2), rat(1)),
        pt(7, 1),
        Point::new(ratio(13, 2), rat(-1)),
        Point::new(ratio(7, 2), rat(-1)),
        pt(3, 1),
        pt(4, 5),
        Point::new(ratio(17, 2), rat(5)),
        pt(9, 0),
        pt(10, 0),
    ])
    .unwrap();
    assert!(prime.is_embedded());
    let pair = LinePair::new(alpha, prime).unwrap();
    let f = PunctureSet::empty();
    let state = PairState {
        alpha: pair.alpha().vertices().to_vec(),
        prime: pair.alpha_prime().vertices().to_vec(),
        alpha_closed: false,
        prime_closed: false,
        kind: PairKind::PinnedArcs,
    };
    let before_crossings = state.crossings().unwrap();
    assert_eq!(before_crossings.len(), 4);
    // Pick the inner shallow lens: its vertices are the two crossings with
    // the shallow dip, x = 13/4 and x = 27/4.
    let bigons = find_bigons(&state, &f).unwrap();
    let inner = bigons
        .iter()
        .find(|c| {
            let mut xs = vec![c.vertices.0.x.clone(), c.vertices.1.x.clone()];
            xs.sort();
            xs == vec![ratio(13, 4), ratio(27, 4)]
        })
        .expect("inner lens is a minimal bigon");
    verify_bigon(&state, &f, inner).unwrap();
    let (after, step) = remove_bigon(&state, inner, &f, &AvoidSets::default()).unwrap();
    let after_crossings = after.crossings().unwrap();
    // Exactly the inner pair disappeared; the outer lens is intact.
    assert_eq!(after_crossings.len(), 2);
    for c in &after_crossings {
        assert!(before_crossings.contains(c));
    }
    assert_eq!(step.kind, StepKind::BigonRemoval);
    // Locality: the outer lens crossings are outside the support.
    for c in &after_crossings {
        assert_eq!(step.support_contains(c), SupportLocation::Outside);
    }
}

#[test]
fn constraint_point_respected() {
    // A static constraint point sits beyond the alpha chain, on the reroute
    // side of the lens: the rerouted arc must squeeze between the chain and
    // the point, leaving it outside the support.
    let pair = one_lens_pair();
    let f = PunctureSet::empty();
    // The lens hangs below alpha, so the reroute passes above: a constraint
    // point just above the chain forces the offset to shrink under 1/2.
    let c_point = pth(5, 1); // (5, 1/2)
    let c_static = FeatureSet::points(vec![c_point.clone()]);
    let trace = straighten_arc(&pair, &f, &c_static, &FeatureSet::default())
        .expect("straightens despite the constraint");
    assert_eq!(trace.final_curve, pair.alpha().vertices().to_vec());
    for step in &trace.steps {
        assert_eq!(
            step.support_contains(&c_point),
            SupportLocation::Outside,
            "constraint point must stay outside every support"
        );
    }
}

#[test]
fn moving_constraint_inside_bigon_conflicts() {
    let pair = one_lens_pair();
    let f = PunctureSet::empty();
    // A moving-side constraint point strictly inside the lens face.
    let inside = pth(5, -2); // (5, -1): inside the lens (below alpha, above dip)
    let c_moving = FeatureSet::points(vec![inside]);
    match straighten_arc(&pair, &f, &FeatureSet::default(), &c_moving) {
        Err(BigonError::ConstraintConflict { .. }) => {}
        other => panic!("expected ConstraintConflict, got {other:?}"),
    }
}

#[test]
fn make_quasi_transverse_repairs_overlap() {
    let alpha = path(&[(0, 0), (1, 0), (9, 0), (10, 0)]);
    let prime = path(&[
        (0, 0),
        (1, 0),
        (3, 2),
        (4, 0),
        (6, 0),
        (7, 2),
        (9, 0),
        (10, 0),
    ]);
    let pair = LinePair::new(alpha, prime).unwrap();
    let f = punctures(&[(5, 3)]);
    let (fixed, steps) = make_quasi_transverse(&pair, &f).unwrap();
    assert!(!steps.is_empty());
    assert_eq!(fixed.alpha(), pair.alpha());
    // Idempotence.
    let (again, steps2) = make_quasi_transverse(&fixed, &f).unwrap();
    assert!(steps2.is_empty());
    assert_eq!(again, fixed);
    // Class preserved end to end.
    let w1 = bigonkit::curves::crossing_word(pair.alpha_prime().into(), &f).unwrap();
    let w2 = bigonkit::curves::crossing_word(fixed.alpha_prime().into(), &f).unwrap();
    assert_eq!(w1, w2);
}

#[test]
fn straighten_concentric_loops_single_annulus_step() {
    let inner = lp(&[(2, 2), (4, 2), (4, 4), (2, 4)]);
    let outer = lp(&[(1, 1), (5, 1), (5, 5), (1, 5)]);
    let f = punctures(&[(3, 3)]);
    let trace = straighten_loop(&inner, &outer, &f, None).unwrap();
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].kind, StepKind::FinalCoincidence);
    assert_eq!(trace.final_curve, inner.vertices().to_vec());
    // The annulus contains no puncture and the region between the loops is
    // exactly the support.
    assert_eq!(
        trace.steps[0].support_contains(&pt(3, 3)),
        SupportLocation::Outside
    );
    let in_annulus = Point::new(ratio(3, 2), rat(3));
    assert_eq!(
        trace.steps[0].support_contains(&in_annulus),
        SupportLocation::Inside
    );
}

#[test]
fn straighten_loops_rejects_class_mismatch() {
    let a = lp(&[(2, 2), (4, 2), (4, 4), (2, 4)]);
    let b = lp(&[(6, 2), (8, 2), (8, 4), (6, 4)]);
    let f = punctures(&[(3, 3), (7, 3)]);
    match straighten_loop(&a, &b, &f, None) {
        Err(BigonError::NotFreelyHomotopic { .. }) => {}
        other => panic!("expected NotFreelyHomotopic, got {other:?}"),
    }
    // Contractible loops are rejected outright.
    let c = lp(&[(10, 10), (11, 10), (11, 11)]);
    match straighten_loop(&c, &c.clone(), &f, None) {
        Err(BigonError::Inessential) => {}
        other => panic!("expected Inessential, got {other:?}"),
    }
}

#[test]
fn straighten_crossing_loops() {
    // Two homotopic loops around the same puncture crossing twice with an
    // empty lens: one bigon removal, then the annulus step.
    let a = lp(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
    let b = lp(&[(1, 1), (11, 1), (11, 9), (1, 9)]);
    let f = punctures(&[(5, 5)]);
    let trace = straighten_loop(&a, &b, &f, None).unwrap();
    assert!(trace.bigon_removal_count() >= 1);
    assert_eq!(
        trace.steps.last().unwrap().kind,
        StepKind::FinalCoincidence
    );
    for w in trace.component_counts.windows(2) {
        assert!(w[1] < w[0] || w[0] == 0, "{:?}", trace.component_counts);
    }
}

#[test]
fn pinned_loop_straightening_keeps_basepoint() {
    // Two loops around the same puncture sharing the basepoint (0,0).
    let a = lp(&[(0, 0), (6, -1), (6, 6), (-1, 6)]);
    let b = lp(&[(0, 0), (8, -2), (8, 8), (-2, 8)]);
    let f = punctures(&[(3, 3)]);
    let pin = pt(0, 0);
    let trace = straighten_loop(&a, &b, &f, Some(pin.clone())).unwrap();
    for step in &trace.steps {
        assert_ne!(
            step.support_contains(&pin),
            SupportLocation::Inside,
            "pin must never be interior to a support"
        );
    }
    assert_eq!(trace.final_curve, a.vertices().to_vec());
}

#[test]
fn gin_examples() {
    let f = punctures(&[(3, 3), (7, 3)]);
    // Loops around disjoint puncture sets, crossing four times: removable.
    let a = lp(&[(1, 1), (5, 1), (5, 5), (1, 5)]);
    let b = lp(&[(4, 2), (9, 2), (9, 4), (4, 4)]);
    let g = geometric_intersection_number(&a.clone().into(), &b.clone().into(), &f).unwrap();
    assert_eq!(g, 0);

    // A loop around both punctures versus an arc passing between them:
    // the arc separates the punctures, so the intersection number is 2.
    let both = lp(&[(0, 0), (10, 0), (10, 6), (0, 6)]);
    let arc = path(&[(-5, 1), (time_x(), 1), (5, 8), (15, 8)]);
    let g = geometric_intersection_number(&both.clone().into(), &arc.clone().into(), &f).unwrap();
    assert_eq!(g, 2);

    // A near-copy pushed off itself: disjoint realizable.
    let pushed = lp(&[(1, 0), (5, 0), (5, 5), (1, 5)]);
    let a2 = lp(&[(0, -1), (6, -1), (6, 6), (0, 6)]);
    let f1 = punctures(&[(3, 3)]);
    let g = geometric_intersection_number(&a2.into(), &pushed.into(), &f1).unwrap();
    assert_eq!(g, 0);

    fn time_x() -> i64 {
        5
    }
}

#[test]
fn gin_deterministic_across_input_jitter() {
    // Same configuration with prime pre-perturbed differently: the final
    // count is the same.
    let f = punctures(&[(3, 3), (7, 3)]);
    let both = lp(&[(0, 0), (10, 0), (10, 6), (0, 6)]);
    let mut results = Vec::new();
    for dy in [-2i64, -1, 0, 1, 2] {
        let arc = PLPath::new(vec![
            pt(-5, 1),
            Point::new(rat(4), rat(1) + ratio(dy, 7)),
            Point::new(rat(5), rat(8) + ratio(dy, 9)),
            pt(15, 8),
        ])
        .unwrap();
        let g =
            geometric_intersection_number(&GinCurve::from(both.clone()), &arc.into(), &f).unwrap();
        results.push(g);
    }
    assert!(results.iter().all(|&g| g == results[0]));
    assert_eq!(results[0], 2);
}
