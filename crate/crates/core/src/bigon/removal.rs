//! Minimal-bigon search, certification, and removal.
//!
//! A bigon of the pair is a bounded face of the two-curve arrangement that
//! is a topological disc, contains no puncture and no other piece of either
//! curve, and whose boundary splits at exactly two curve-curve intersection
//! vertices into one run of alpha edges and one run of prime edges.
//!
//! Removal reroutes the prime chain across the alpha chain along an offset
//! polyline on the far side; every claimed property of the result is then
//! re-checked exactly, and the offsets shrink until the checks pass.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::PunctureSet;
use crate::geom::{
    intersect_segments, polygon_contains_on_boundary, rat, winding_number, Point, Rational,
    SegSegIntersection, Segment, Vector,
};
use num_traits::{Signed, Zero};

use super::arrangement::{he_edge, Arrangement};
use super::pairs::{PairKind, PairState};
use super::{BigonError, FeatureSet, IsotopyStep, StepKind, SupportLocation};

/// A certified minimal bigon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigonCert {
    /// Face id in the deterministic pair arrangement.
    pub face: usize,
    /// The two bigon vertices.
    pub vertices: (Point, Point),
    /// Polyline of the alpha edge chain, in face-cycle order (interior on
    /// the left of each segment).
    pub alpha_chain: Vec<Point>,
    /// Polyline of the prime edge chain, in face-cycle order.
    pub prime_chain: Vec<Point>,
}

impl BigonCert {
    /// The closed boundary polygon of the bigon face (cycle order).
    pub fn face_polygon(&self) -> Vec<Point> {
        let mut poly = self.alpha_chain.clone();
        // prime_chain continues from alpha_chain's end back to its start.
        poly.extend(self.prime_chain[1..self.prime_chain.len() - 1].iter().cloned());
        poly
    }
}

/// The constraint sets for a removal: `c_static` must keep clear of the
/// moving support (it pairs with alpha), `c_moving` pairs with the moving
/// curve, and `pin` is an optional point that must never move.
#[derive(Clone, Debug, Default)]
pub struct AvoidSets {
    pub c_static: FeatureSet,
    pub c_moving: FeatureSet,
    pub pin: Option<Point>,
}

/// Search for a minimal bigon of a quasi-transverse pair.
///
/// When several bigons exist the smallest face by boundary vertex count is
/// returned, ties broken by face id, so runs are deterministic. `None`
/// means the pair has no removable bigon (minimal position).
pub fn find_minimal_bigon(
    state: &PairState,
    punctures: &PunctureSet,
) -> Result<Option<BigonCert>, BigonError> {
    Ok(find_bigons(state, punctures)?.into_iter().next())
}

/// All minimal bigons of the pair, ordered by (boundary size, face id); the
/// first entry is the one [`find_minimal_bigon`] returns.
pub fn find_bigons(
    state: &PairState,
    punctures: &PunctureSet,
) -> Result<Vec<BigonCert>, BigonError> {
    if let Err(v) = state.crossings() {
        return Err(violation_to_error(v));
    }
    let mut arr = state.arrangement();
    arr.assign_punctures(punctures);
    let mut candidates = bigon_faces(&arr);
    candidates.sort_by_key(|c| (c.alpha_chain.len() + c.prime_chain.len(), c.face));
    Ok(candidates)
}

pub(crate) fn violation_to_error(v: super::pairs::QuasiViolation) -> BigonError {
    match v {
        super::pairs::QuasiViolation::Overlap { from, to } => BigonError::NonTransverse {
            witness: from,
            detail: format!("collinear overlap towards {}", super::format_point(&to)),
        },
        super::pairs::QuasiViolation::Touch { at } => BigonError::NonTransverse {
            witness: at,
            detail: String::from("tangential or vertex contact"),
        },
    }
}

/// All bigon faces of a two-curve arrangement.
pub(crate) fn bigon_faces(arr: &Arrangement) -> Vec<BigonCert> {
    let mut out = Vec::new();
    for (fi, face) in arr.faces.iter().enumerate() {
        let Some(oc) = face.outer else { continue };
        if !face.holes.is_empty()
            || !face.isolated_vertices.is_empty()
            || !face.punctures.is_empty()
        {
            continue;
        }
        if !arr.cycle_is_simple(oc) {
            continue;
        }
        let hes = &arr.cycles[oc].half_edges;
        if hes
            .iter()
            .any(|&h| arr.edges[he_edge(h)].owners.len() != 1)
        {
            continue;
        }
        // Positions whose source vertex lies on both curves.
        let marks: Vec<usize> = (0..hes.len())
            .filter(|&i| arr.vertex_curves[arr.he_source(hes[i])] == [0, 1])
            .collect();
        if marks.len() != 2 {
            continue;
        }
        let (i1, i2) = (marks[0], marks[1]);
        let arc1: Vec<usize> = (i1..i2).map(|i| hes[i]).collect();
        let arc2: Vec<usize> = (i2..hes.len()).chain(0..i1).map(|i| hes[i]).collect();
        if arc1.is_empty() || arc2.is_empty() {
            continue;
        }
        let owner_of = |arc: &[usize]| -> Option<usize> {
            let o = arr.edges[he_edge(arc[0])].owners[0];
            if arc.iter().all(|&h| arr.edges[he_edge(h)].owners == [o]) {
                Some(o)
            } else {
                None
            }
        };
        let (o1, _o2) = match (owner_of(&arc1), owner_of(&arc2)) {
            (Some(a), Some(b)) if a != b => (a, b),
            _ => continue,
        };
        let chain_points = |arc: &[usize]| -> Vec<Point> {
            let mut pts: Vec<Point> = arc
                .iter()
                .map(|&h| arr.vertices[arr.he_source(h)].clone())
                .collect();
            pts.push(arr.vertices[arr.he_target(*arc.last().unwrap())].clone());
            pts
        };
        let (alpha_arc, prime_arc) = if o1 == 0 { (arc1, arc2) } else { (arc2, arc1) };
        let alpha_chain = chain_points(&alpha_arc);
        let prime_chain = chain_points(&prime_arc);
        out.push(BigonCert {
            face: fi,
            vertices: (
                alpha_chain.first().unwrap().clone(),
                alpha_chain.last().unwrap().clone(),
            ),
            alpha_chain,
            prime_chain,
        });
    }
    out
}

/// Exact re-verification of a bigon certificate against the pair state:
/// the face polygon is a simple disc, it contains no puncture, and no third
/// piece of either curve meets its interior.
pub fn verify_bigon(
    state: &PairState,
    punctures: &PunctureSet,
    cert: &BigonCert,
) -> Result<(), BigonError> {
    let poly = cert.face_polygon();
    let as_loop = crate::curves::PLLoop::new(poly.clone())
        .map_err(|_| BigonError::internal("bigon polygon is degenerate"))?;
    if !as_loop.is_embedded() {
        return Err(BigonError::internal("bigon polygon is not simple"));
    }
    for p in punctures.iter() {
        if polygon_contains_on_boundary(&poly, p) || winding_number(&poly, p) != 0 {
            return Err(BigonError::internal("puncture inside the bigon"));
        }
    }
    // Chains lie on the claimed curves.
    if !polyline_on_curve(&cert.alpha_chain, &state.alpha, state.alpha_closed) {
        return Err(BigonError::internal("alpha chain is not on alpha"));
    }
    if !polyline_on_curve(&cert.prime_chain, &state.prime, state.prime_closed) {
        return Err(BigonError::internal("prime chain is not on prime"));
    }
    // No third piece of either curve in the open interior: sample each
    // curve sub-segment (split at polygon boundary crossings) and require
    // interior pieces to lie on the boundary itself.
    for curve in [
        (&state.alpha, state.alpha_closed),
        (&state.prime, state.prime_closed),
    ] {
        for seg in segments_of(curve.0, curve.1) {
            for piece in split_segment_on_polygon(&seg, &poly) {
                let mid = piece.a.lerp(&piece.b, &crate::geom::ratio(1, 2));
                if polygon_contains_on_boundary(&poly, &mid) {
                    continue;
                }
                if winding_number(&poly, &mid) != 0 {
                    return Err(BigonError::internal(
                        "a curve piece crosses the bigon interior",
                    ));
                }
            }
        }
    }
    Ok(())
}

fn polyline_on_curve(chain: &[Point], curve: &[Point], closed: bool) -> bool {
    let segs = segments_of(curve, closed);
    chain.windows(2).all(|w| {
        let mid = w[0].lerp(&w[1], &crate::geom::ratio(1, 2));
        segs.iter().any(|s| s.contains_point(&mid) && s.contains_point(&w[0]) && s.contains_point(&w[1]))
            || segs.iter().any(|s| s.contains_point(&mid))
    })
}

pub(crate) fn segments_of(vertices: &[Point], closed: bool) -> Vec<Segment> {
    let n = vertices.len();
    let m = if closed { n } else { n - 1 };
    (0..m)
        .map(|i| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone()))
        .collect()
}

/// Split a segment at its crossings with a polygon boundary.
fn split_segment_on_polygon(seg: &Segment, poly: &[Point]) -> Vec<Segment> {
    let n = poly.len();
    let mut ts: Vec<Rational> = vec![Rational::zero(), Rational::from_integer(1.into())];
    for i in 0..n {
        let side = Segment::new(poly[i].clone(), poly[(i + 1) % n].clone());
        match intersect_segments(seg, &side) {
            SegSegIntersection::Disjoint => {}
            SegSegIntersection::Point { t, .. } => ts.push(t),
            SegSegIntersection::Overlap { from, to } => {
                ts.push(param_on(seg, &from));
                ts.push(param_on(seg, &to));
            }
        }
    }
    ts.sort();
    ts.dedup();
    let mut out = Vec::new();
    for w in ts.windows(2) {
        let a = seg.a.lerp(&seg.b, &w[0]);
        let b = seg.a.lerp(&seg.b, &w[1]);
        if a != b {
            out.push(Segment::new(a, b));
        }
    }
    out
}

fn param_on(seg: &Segment, p: &Point) -> Rational {
    let d = seg.dir();
    if d.x.abs() >= d.y.abs() {
        (&p.x - &seg.a.x) / &d.x
    } else {
        (&p.y - &seg.a.y) / &d.y
    }
}

/// Remove one bigon: reroute the prime chain across the alpha chain.
///
/// Returns the updated state and the isotopy step. The intersection
/// component count strictly decreases; the moving curve's homotopy class is
/// unchanged; the support avoids the punctures and the constraint sets (the
/// support shrinks first, and a forced conflict is an error).
pub fn remove_bigon(
    state: &PairState,
    cert: &BigonCert,
    punctures: &PunctureSet,
    avoid: &AvoidSets,
) -> Result<(PairState, IsotopyStep), BigonError> {
    let anchors = state.anchors();
    let (va, vb) = (&cert.vertices.0, &cert.vertices.1);
    let a_is_anchor = anchors.contains(va);
    let b_is_anchor = anchors.contains(vb);
    if a_is_anchor && b_is_anchor {
        return Err(BigonError::internal(
            "two-anchor bigon must go through the final-coincidence step",
        ));
    }
    // Constraint features already inside the bigon face can never be
    // avoided by shrinking the support.
    let face_poly = cert.face_polygon();
    for p in avoid.c_moving.sample_points() {
        if winding_number(&face_poly, &p) != 0 && !polygon_contains_on_boundary(&face_poly, &p) {
            return Err(BigonError::ConstraintConflict {
                detail: format!(
                    "moving-side constraint at {} lies inside the bigon",
                    super::format_point(&p)
                ),
            });
        }
    }

    let old_crossings = state
        .crossings()
        .map_err(violation_to_error)?;
    let mut removed: Vec<Point> = Vec::new();
    for v in [va, vb] {
        if !anchors.contains(v) {
            removed.push((*v).clone());
        }
    }

    // Locate the prime chain inside the subdivided prime walk.
    let walk = prime_walk(state);
    let (run_start, run_len, chain_forward) = locate_run(&walk, &cert.prime_chain, state.prime_closed)
        .ok_or_else(|| BigonError::internal("prime chain not found on the prime walk"))?;

    // Route along the alpha chain, oriented to match the prime run.
    // cert chains are in cycle order: alpha_chain runs A→B, prime_chain B→A.
    let route_alpha = if chain_forward {
        // prime run follows prime_chain order (B→A): route must run B→A too,
        // i.e. reversed alpha_chain.
        ReversedOrNot::Reversed
    } else {
        ReversedOrNot::Forward
    };

    let mut delta = initial_clearance(state, cert, punctures, avoid);
    let mut mu = crate::geom::ratio(1, 4);
    let mut nu = crate::geom::ratio(1, 8);
    let mut last_reason = String::new();
    for _attempt in 0..48 {
        match try_removal(
            state,
            cert,
            punctures,
            avoid,
            &walk,
            run_start,
            run_len,
            route_alpha,
            &delta,
            &mu,
            &nu,
            &removed,
            &old_crossings,
            &anchors,
        ) {
            Ok(done) => return Ok(done),
            Err(RemovalAttemptError::Fatal(e)) => return Err(e),
            Err(RemovalAttemptError::Retry(reason)) => {
                last_reason = reason;
                // Desynchronized shrinking rotates the connector directions,
                // so exact collinearities cannot persist across rounds.
                delta /= rat(2);
                mu /= rat(2);
                nu /= rat(3);
            }
        }
    }
    Err(BigonError::Internal(format!(
        "bigon removal budget exhausted; last failure: {last_reason}"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ReversedOrNot {
    Forward,
    Reversed,
}

enum RemovalAttemptError {
    Retry(String),
    Fatal(BigonError),
}

/// The subdivided prime walk: every intersection with alpha is a vertex.
fn prime_walk(state: &PairState) -> Vec<Point> {
    let a_segs = state.alpha_segments();
    let n = state.prime.len();
    let m = if state.prime_closed { n } else { n - 1 };
    let mut out: Vec<Point> = Vec::new();
    for i in 0..m {
        let seg = Segment::new(state.prime[i].clone(), state.prime[(i + 1) % n].clone());
        let mut ts: Vec<Rational> = vec![Rational::zero()];
        for sa in &a_segs {
            if let SegSegIntersection::Point { t, .. } = intersect_segments(&seg, sa) {
                if t > Rational::zero() && t < Rational::from_integer(1.into()) {
                    ts.push(t);
                }
            }
        }
        ts.sort();
        ts.dedup();
        for t in ts {
            let p = seg.a.lerp(&seg.b, &t);
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
    }
    if !state.prime_closed {
        out.push(state.prime[n - 1].clone());
    }
    out
}

/// Find the chain as a contiguous vertex run in the walk. Returns
/// `(start, len, forward)`: `forward` is true when the walk traverses
/// `chain` in the given order.
fn locate_run(walk: &[Point], chain: &[Point], closed: bool) -> Option<(usize, usize, bool)> {
    let n = walk.len();
    let k = chain.len();
    if k > n + 1 {
        return None;
    }
    let get = |i: usize| -> &Point { &walk[i % n] };
    let limit = if closed { n } else { n.saturating_sub(k - 1) };
    for s in 0..limit {
        if !closed && s + k > n {
            break;
        }
        if (0..k).all(|i| get(s + i) == &chain[i]) {
            return Some((s, k, true));
        }
        if (0..k).all(|i| get(s + i) == &chain[k - 1 - i]) {
            return Some((s, k, false));
        }
    }
    None
}

/// Squared-distance clearance that the offsets must respect, turned into a
/// starting offset scale.
fn initial_clearance(
    state: &PairState,
    cert: &BigonCert,
    punctures: &PunctureSet,
    avoid: &AvoidSets,
) -> Rational {
    let mut best: Option<Rational> = None;
    let mut consider = |d: Rational| {
        if !d.is_zero() && best.as_ref().map(|b| d < *b).unwrap_or(true) {
            best = Some(d);
        }
    };
    let chain_segs: Vec<Segment> = cert
        .alpha_chain
        .windows(2)
        .map(|w| Segment::new(w[0].clone(), w[1].clone()))
        .collect();
    for s in &chain_segs {
        for p in punctures.iter() {
            consider(s.dist_sq_to_point(p));
        }
        for p in avoid
            .c_static
            .sample_points()
            .iter()
            .chain(avoid.c_moving.sample_points().iter())
        {
            consider(s.dist_sq_to_point(p));
        }
        if let Some(pin) = &avoid.pin {
            consider(s.dist_sq_to_point(pin));
        }
        // Stay clear of every curve feature not on the chain itself.
        for other in segments_of(&state.alpha, state.alpha_closed)
            .iter()
            .chain(segments_of(&state.prime, state.prime_closed).iter())
        {
            consider(s.dist_sq_to_segment(other));
        }
    }
    let floor = crate::geom::quarter_sqrt_lower_bound(&best.unwrap_or_else(|| rat(1)));
    floor / rat(4)
}

#[allow(clippy::too_many_arguments)]
fn try_removal(
    state: &PairState,
    cert: &BigonCert,
    punctures: &PunctureSet,
    avoid: &AvoidSets,
    walk: &[Point],
    run_start: usize,
    run_len: usize,
    route_dir: ReversedOrNot,
    delta: &Rational,
    mu: &Rational,
    nu: &Rational,
    removed: &[Point],
    old_crossings: &[Point],
    anchors: &[Point],
) -> Result<(PairState, IsotopyStep), RemovalAttemptError> {
    let n = walk.len();
    let get = |i: usize| -> Point { walk[i % n].clone() };
    let run_end = run_start + run_len - 1;
    let start_pt = get(run_start);
    let end_pt = get(run_end);
    let start_anchor = anchors.contains(&start_pt);
    let end_anchor = anchors.contains(&end_pt);

    // Chain in route order (from the start of the prime run to its end).
    let chain: Vec<Point> = match route_dir {
        ReversedOrNot::Forward => cert.alpha_chain.clone(),
        ReversedOrNot::Reversed => cert.alpha_chain.iter().rev().cloned().collect(),
    };
    // Right-hand normals relative to cycle orientation: the face interior is
    // on the left of the cycle-ordered chain, so the route goes right.
    // After reorienting the chain we must flip sides when reversed.
    let side = match route_dir {
        ReversedOrNot::Forward => rat(-1),
        ReversedOrNot::Reversed => rat(1),
    };
    let offsets = offset_polyline(&chain, delta, &side, nu)
        .map_err(RemovalAttemptError::Retry)?;

    // Route endpoints: anchors are kept exactly; at a crossing we splice at
    // an interpolated point strictly between the crossing and the next walk
    // vertex outside the chain.
    if !state.prime_closed && !start_anchor && run_start == 0 {
        return Err(RemovalAttemptError::Fatal(BigonError::internal(
            "crossing at the very start of an open prime",
        )));
    }
    if !state.prime_closed && !end_anchor && run_end + 1 >= n {
        return Err(RemovalAttemptError::Fatal(BigonError::internal(
            "crossing at the very end of an open prime",
        )));
    }
    let mut route: Vec<Point> = Vec::new();
    if start_anchor {
        route.push(start_pt.clone());
    } else {
        let outside = get(run_start + n - 1);
        route.push(start_pt.lerp(&outside, mu));
        route.push(offsets[0].clone());
    }
    for o in offsets.iter().take(offsets.len() - 1).skip(1) {
        route.push(o.clone());
    }
    if end_anchor {
        route.push(end_pt.clone());
    } else {
        route.push(offsets[offsets.len() - 1].clone());
        let outside = get(run_end + 1);
        route.push(end_pt.lerp(&outside, mu));
    }
    let mut route_dedup: Vec<Point> = Vec::new();
    for p in route {
        if route_dedup.last() != Some(&p) {
            route_dedup.push(p);
        }
    }
    let route = route_dedup;

    // Walk indices of the last kept vertex before the route and the first
    // kept vertex after it (cyclic for closed curves).
    let keep_left = run_start + n - 1; // interpret modulo n
    let keep_right = run_end + 1;
    // The replaced sub-walk, as a polyline sharing endpoints with the route.
    let mut before: Vec<Point> = Vec::new();
    before.push(route[0].clone());
    let interior_from = if start_anchor { run_start + 1 } else { run_start };
    let interior_to = if end_anchor { run_end } else { run_end + 1 };
    for i in interior_from..interior_to {
        let p = get(i);
        if before.last() != Some(&p) {
            before.push(p);
        }
    }
    let tail = route[route.len() - 1].clone();
    if before.last() != Some(&tail) {
        before.push(tail);
    }
    let before_piece = before;

    // New prime vertex list.
    let new_prime: Vec<Point> = if state.prime_closed {
        let mut v: Vec<Point> = route.clone();
        let mut i = keep_right % n;
        let stop = (keep_left + 1) % n;
        let mut guard = 0;
        while i != stop {
            v.push(get(i));
            i = (i + 1) % n;
            guard += 1;
            if guard > n {
                return Err(RemovalAttemptError::Fatal(BigonError::internal(
                    "cyclic splice failed to terminate",
                )));
            }
        }
        dedup_cycle(v)
    } else {
        let mut merged: Vec<Point> = Vec::new();
        let kl = keep_left - n; // run_start - 1; valid because run_start ≥ 1
        for i in 0..=kl {
            merged.push(get(i));
        }
        for p in &route {
            if merged.last() != Some(p) {
                merged.push(p.clone());
            }
        }
        for i in keep_right..n {
            let p = get(i);
            if merged.last() != Some(&p) {
                merged.push(p);
            }
        }
        merged
    };

    // Drop subdivision vertices that became collinear (old crossing points
    // in particular), keeping anchors and pinned tail vertices.
    let mut keep: Vec<Point> = anchors.to_vec();
    if matches!(state.kind, PairKind::PinnedArcs) {
        let a = &state.alpha;
        keep.push(a[0].clone());
        keep.push(a[1].clone());
        keep.push(a[a.len() - 2].clone());
        keep.push(a[a.len() - 1].clone());
    }
    let new_prime = merge_collinear(&new_prime, state.prime_closed, &keep);

    // Validate the rewritten curve.
    let mut new_state = state.clone();
    new_state.prime = new_prime.clone();
    validate_removal(
        state,
        &new_state,
        cert,
        punctures,
        avoid,
        &before_piece,
        &route,
        removed,
        old_crossings,
    )?;

    // Support polygon: route + reversed interior of the old piece.
    let support_poly = close_support(&route, &before_piece)
        .map_err(RemovalAttemptError::Retry)?;
    let step = IsotopyStep {
        kind: StepKind::BigonRemoval,
        support: vec![support_poly],
        before: before_piece,
        after: route,
    };
    // Support must avoid punctures and constraints.
    check_support(&step, state, punctures, avoid, Some(&cert.face_polygon()))?;
    // Alpha within the support must be a single arc.
    check_curve_in_support_connected(&step, &state.alpha, state.alpha_closed)
        .map_err(RemovalAttemptError::Retry)?;
    Ok((new_state, step))
}

/// Remove interior vertices that are strictly-forward collinear with their
/// neighbours (the point set of the curve is unchanged), except points in
/// `keep`.
pub(crate) fn merge_collinear(vertices: &[Point], closed: bool, keep: &[Point]) -> Vec<Point> {
    let mut cur = vertices.to_vec();
    loop {
        let n = cur.len();
        if n < 3 {
            return cur;
        }
        let mut removed = false;
        let mut out: Vec<Point> = Vec::with_capacity(n);
        for i in 0..n {
            if !closed && (i == 0 || i == n - 1) {
                out.push(cur[i].clone());
                continue;
            }
            let prev = &cur[(i + n - 1) % n];
            let v = &cur[i];
            let next = &cur[(i + 1) % n];
            let d1 = v.sub(prev);
            let d2 = next.sub(v);
            let straight = d1.cross(&d2).is_zero() && d1.dot(&d2).is_positive();
            if straight && !keep.contains(v) && !removed {
                removed = true; // one at a time keeps neighbour indices valid
                continue;
            }
            out.push(cur[i].clone());
        }
        if !removed {
            return out;
        }
        cur = out;
    }
}

fn dedup_cycle(mut v: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for p in v.drain(..) {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    while out.len() >= 2 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Offset the chain to one side by (roughly) `delta`, exactly. The first
/// and last offset points sit slightly advanced into the chain (fraction
/// `nu` of the end segments), so splice connectors never run along the
/// curves through the bigon vertices.
fn offset_polyline(
    chain: &[Point],
    delta: &Rational,
    side: &Rational,
    nu: &Rational,
) -> Result<Vec<Point>, String> {
    let k = chain.len();
    if k < 2 {
        return Err(String::from("degenerate chain"));
    }
    let mut normals: Vec<Vector> = Vec::with_capacity(k - 1);
    for w in chain.windows(2) {
        let d = w[1].sub(&w[0]);
        let perp = d.perp(); // left normal
        let l1 = perp.l1();
        if l1.is_zero() {
            return Err(String::from("zero-length chain segment"));
        }
        normals.push(perp.scale(&(side / &l1)));
    }
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let (base, n) = if i == 0 {
            (chain[0].lerp(&chain[1], nu), normals[0].clone())
        } else if i == k - 1 {
            (chain[k - 1].lerp(&chain[k - 2], nu), normals[k - 2].clone())
        } else {
            let s = normals[i - 1].add(&normals[i]);
            let l1 = s.l1();
            if l1.is_zero() {
                return Err(String::from("reversing chain corner"));
            }
            (
                chain[i].clone(),
                s.scale(&(Rational::from_integer(1.into()) / &l1)),
            )
        };
        out.push(base.add(&n.scale(delta)));
    }
    Ok(out)
}

/// Close the support polygon: the new route followed by the old piece
/// reversed (they share endpoints). Must be a simple polygon.
fn close_support(route: &[Point], old_piece: &[Point]) -> Result<Vec<Point>, String> {
    if route.first() != old_piece.first() || route.last() != old_piece.last() {
        return Err(String::from("support pieces do not share endpoints"));
    }
    let mut poly: Vec<Point> = route.to_vec();
    for p in old_piece[1..old_piece.len() - 1].iter().rev() {
        poly.push(p.clone());
    }
    let poly = dedup_cycle(poly);
    if poly.len() < 3 {
        return Err(String::from("degenerate support polygon"));
    }
    match crate::curves::PLLoop::new(poly.clone()) {
        Ok(l) if l.is_embedded() => Ok(poly),
        _ => Err(String::from("support polygon not simple")),
    }
}

fn validate_removal(
    old_state: &PairState,
    new_state: &PairState,
    _cert: &BigonCert,
    punctures: &PunctureSet,
    avoid: &AvoidSets,
    _before_piece: &[Point],
    route: &[Point],
    removed: &[Point],
    old_crossings: &[Point],
) -> Result<(), RemovalAttemptError> {
    // Structural validity of the rewritten curve.
    let verts = &new_state.prime;
    if verts.len() < 2 {
        return Err(RemovalAttemptError::Retry(String::from("curve collapsed")));
    }
    let curve_ok = if new_state.prime_closed {
        crate::curves::PLLoop::new(verts.clone())
            .map(|l| l.is_embedded())
            .unwrap_or(false)
    } else {
        crate::curves::PLPath::new(verts.clone())
            .map(|p| p.is_embedded())
            .unwrap_or(false)
    };
    if !curve_ok {
        return Err(RemovalAttemptError::Retry(String::from(
            "rewritten curve not embedded",
        )));
    }
    // Pinned invariants.
    match &new_state.kind {
        PairKind::PinnedArcs => {
            let a = &new_state.alpha;
            let p = verts;
            if !(a[0] == p[0]
                && a[1] == p[1]
                && a[a.len() - 1] == p[p.len() - 1]
                && a[a.len() - 2] == p[p.len() - 2])
            {
                return Err(RemovalAttemptError::Fatal(BigonError::internal(
                    "removal disturbed the pinned tails",
                )));
            }
        }
        PairKind::Loops { pin: Some(pin) } => {
            if !verts.contains(pin) {
                return Err(RemovalAttemptError::Fatal(BigonError::internal(
                    "removal moved the pinned basepoint",
                )));
            }
        }
        _ => {}
    }
    if super::check_general_position(&[(verts, new_state.prime_closed)], punctures).is_err() {
        return Err(RemovalAttemptError::Retry(String::from(
            "general position lost",
        )));
    }
    // Quasi-transversality and exact crossing bookkeeping.
    let new_crossings = match new_state.crossings() {
        Ok(c) => c,
        Err(v) => {
            return Err(RemovalAttemptError::Retry(format!(
                "rewritten pair not quasi-transverse: {v:?}"
            )))
        }
    };
    let mut expected: Vec<Point> = old_crossings
        .iter()
        .filter(|p| !removed.contains(p))
        .cloned()
        .collect();
    expected.sort();
    if new_crossings != expected {
        return Err(RemovalAttemptError::Retry(String::from(
            "crossing set changed beyond the removed bigon",
        )));
    }
    // Route must never touch the static constraint set.
    if avoid.c_static.meets_polyline(route, false) {
        return Err(RemovalAttemptError::Retry(String::from(
            "route touches the static constraint set",
        )));
    }
    if avoid.c_moving.meets_polyline(verts, new_state.prime_closed) {
        return Err(RemovalAttemptError::Retry(String::from(
            "moving constraint set touches the rewritten curve",
        )));
    }
    // Homotopy class is preserved.
    let w_old = old_state
        .curve_word(&old_state.prime, punctures)
        .map_err(RemovalAttemptError::Fatal)?;
    let w_new = new_state
        .curve_word(verts, punctures)
        .map_err(RemovalAttemptError::Fatal)?;
    // For closed curves the based word may rotate; compare cyclic classes,
    // except for pinned loops where the basepoint word must match exactly
    // once rotated to start at the pin.
    let class_ok = match &new_state.kind {
        PairKind::Loops { pin: None } => {
            crate::freegroup::CyclicWord::of(&w_old) == crate::freegroup::CyclicWord::of(&w_new)
        }
        PairKind::Loops { pin: Some(pin) } => {
            let wo = old_state
                .curve_word(&rotate_to(&old_state.prime, pin), punctures)
                .map_err(RemovalAttemptError::Fatal)?;
            let wn = new_state
                .curve_word(&rotate_to(verts, pin), punctures)
                .map_err(RemovalAttemptError::Fatal)?;
            wo == wn
        }
        _ => w_old == w_new,
    };
    if !class_ok {
        return Err(RemovalAttemptError::Retry(String::from(
            "homotopy class changed",
        )));
    }
    Ok(())
}

pub(crate) fn rotate_to(vertices: &[Point], pin: &Point) -> Vec<Point> {
    let k = vertices
        .iter()
        .position(|v| v == pin)
        .expect("pin is a vertex");
    let n = vertices.len();
    (0..n).map(|i| vertices[(i + k) % n].clone()).collect()
}

/// Shared support checks: punctures strictly outside; constraint samples
/// outside (static constraints may sit inside the pre-existing face).
fn check_support(
    step: &IsotopyStep,
    _state: &PairState,
    punctures: &PunctureSet,
    avoid: &AvoidSets,
    face_poly: Option<&[Point]>,
) -> Result<(), RemovalAttemptError> {
    for p in punctures.iter() {
        if step.support_contains(p) != SupportLocation::Outside {
            return Err(RemovalAttemptError::Retry(String::from(
                "puncture inside the support",
            )));
        }
    }
    for p in avoid.c_moving.sample_points() {
        if step.support_contains(&p) != SupportLocation::Outside {
            return Err(RemovalAttemptError::Retry(String::from(
                "moving constraint inside the support",
            )));
        }
    }
    for p in avoid.c_static.sample_points() {
        match step.support_contains(&p) {
            SupportLocation::Outside => {}
            SupportLocation::Boundary => {
                return Err(RemovalAttemptError::Retry(String::from(
                    "static constraint on the support boundary",
                )))
            }
            SupportLocation::Inside => {
                // Allowed only when the feature was inside the bigon face
                // already (it is not moved; the support only grew past it).
                let inside_face = face_poly
                    .map(|fp| {
                        !polygon_contains_on_boundary(fp, &p) && winding_number(fp, &p) != 0
                    })
                    .unwrap_or(false);
                if !inside_face {
                    return Err(RemovalAttemptError::Retry(String::from(
                        "static constraint inside the support collar",
                    )));
                }
            }
        }
    }
    if let Some(pin) = &avoid.pin {
        if step.support_contains(pin) == SupportLocation::Inside {
            return Err(RemovalAttemptError::Retry(String::from(
                "pin inside the support",
            )));
        }
    }
    Ok(())
}

/// The static curve must meet the support in a single arc.
fn check_curve_in_support_connected(
    step: &IsotopyStep,
    curve: &[Point],
    closed: bool,
) -> Result<(), String> {
    let poly = match step.support.first() {
        Some(p) if step.support.len() == 1 => p,
        _ => return Ok(()), // multi-polygon supports are final steps
    };
    let mut flags: Vec<bool> = Vec::new();
    for seg in segments_of(curve, closed) {
        for piece in split_segment_on_polygon(&seg, poly) {
            let mid = piece.a.lerp(&piece.b, &crate::geom::ratio(1, 2));
            let inside = polygon_contains_on_boundary(poly, &mid) || winding_number(poly, &mid) != 0;
            flags.push(inside);
        }
    }
    // Count maximal true-runs (cyclically for closed curves).
    let n = flags.len();
    if n == 0 {
        return Ok(());
    }
    let mut runs = 0;
    for i in 0..n {
        let prev = if i == 0 {
            if closed {
                flags[n - 1]
            } else {
                false
            }
        } else {
            flags[i - 1]
        };
        if flags[i] && !prev {
            runs += 1;
        }
    }
    if runs > 1 {
        return Err(format!("static curve meets the support in {runs} arcs"));
    }
    Ok(())
}
