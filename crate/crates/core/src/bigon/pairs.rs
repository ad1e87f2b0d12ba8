//! Two-curve pairs: transversality, quasi-transverse normalization and the
//! shared state consumed by bigon search and removal.
//!
//! A pair always has a static curve `alpha` (index 0 in arrangements) and a
//! moving curve `prime` (index 1). Arcs with pinned tails share their first
//! and last segments; pinned loops share a basepoint vertex. Those shared
//! features are *anchors*: they are legitimate non-transversal intersection
//! components and are never perturbed.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::{validate_general_position, CurveRef, PLLoop, PLPath, PunctureSet};
use crate::freegroup::Word;
use crate::geom::{
    intersect_segments, rat, ratio, Point, Rational, SegSegIntersection, Segment, Vector,
};
use num_traits::{One, Signed, Zero};

use super::arrangement::{Arrangement, InputCurve};
use super::BigonError;

/// What the two curves are, and which intersection anchors are exempt from
/// transversality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// Properly embedded lines modeled as open arcs sharing their first and
    /// last segments.
    PinnedArcs,
    /// Closed loops, optionally sharing a pinned basepoint vertex.
    Loops { pin: Option<Point> },
    /// Unrelated curves with no shared anchors (used by intersection
    /// number computations); open curves keep their endpoints fixed.
    FreeArcs,
}

/// Working state for a two-curve problem.
#[derive(Clone, Debug)]
pub struct PairState {
    pub alpha: Vec<Point>,
    pub prime: Vec<Point>,
    pub alpha_closed: bool,
    pub prime_closed: bool,
    pub kind: PairKind,
}

impl PairState {
    pub fn alpha_curve(&self) -> InputCurve {
        InputCurve {
            vertices: self.alpha.clone(),
            closed: self.alpha_closed,
        }
    }

    pub fn prime_curve(&self) -> InputCurve {
        InputCurve {
            vertices: self.prime.clone(),
            closed: self.prime_closed,
        }
    }

    pub fn arrangement(&self) -> Arrangement {
        Arrangement::build(&[self.alpha_curve(), self.prime_curve()], &[])
    }

    /// Anchor points: intersection components that are allowed to be
    /// non-transversal (tail junctions, the pinned basepoint).
    pub fn anchors(&self) -> Vec<Point> {
        match &self.kind {
            PairKind::PinnedArcs => {
                let n = self.alpha.len();
                vec![self.alpha[1].clone(), self.alpha[n - 2].clone()]
            }
            PairKind::Loops { pin: Some(p) } => vec![p.clone()],
            _ => Vec::new(),
        }
    }

    /// Indices of prime vertices that must never move.
    pub fn fixed_prime_vertices(&self) -> Vec<usize> {
        let n = self.prime.len();
        match &self.kind {
            PairKind::PinnedArcs => vec![0, 1, n - 2, n - 1],
            PairKind::Loops { pin: Some(p) } => self
                .prime
                .iter()
                .enumerate()
                .filter(|(_, v)| *v == p)
                .map(|(i, _)| i)
                .collect(),
            PairKind::Loops { pin: None } => Vec::new(),
            PairKind::FreeArcs => {
                if self.prime_closed {
                    Vec::new()
                } else {
                    vec![0, n - 1]
                }
            }
        }
    }

    fn segments_of(vertices: &[Point], closed: bool) -> Vec<Segment> {
        let n = vertices.len();
        let m = if closed { n } else { n - 1 };
        (0..m)
            .map(|i| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone()))
            .collect()
    }

    pub fn alpha_segments(&self) -> Vec<Segment> {
        Self::segments_of(&self.alpha, self.alpha_closed)
    }

    pub fn prime_segments(&self) -> Vec<Segment> {
        Self::segments_of(&self.prime, self.prime_closed)
    }

    /// The transversal crossing points of the pair, or the quasi-transverse
    /// violation that prevents counting them.
    ///
    /// For a quasi-transverse pair the intersection set is exactly the
    /// anchors (tails, pin) plus these isolated interior-interior crossings.
    pub fn crossings(&self) -> Result<Vec<Point>, QuasiViolation> {
        let anchors = self.anchors();
        let a_segs = self.alpha_segments();
        let p_segs = self.prime_segments();
        let pinned = matches!(self.kind, PairKind::PinnedArcs);
        let a_last = a_segs.len() - 1;
        let p_last = p_segs.len() - 1;
        let mut out: Vec<Point> = Vec::new();
        for (i, sa) in a_segs.iter().enumerate() {
            for (j, sp) in p_segs.iter().enumerate() {
                if !crate::geom::bboxes_may_touch(sa, sp) {
                    continue;
                }
                // The shared first and last segments of a pinned pair.
                let shared_tail = pinned && ((i == 0 && j == 0) || (i == a_last && j == p_last));
                match intersect_segments(sa, sp) {
                    SegSegIntersection::Disjoint => {}
                    SegSegIntersection::Overlap { from, to } => {
                        if shared_tail {
                            continue;
                        }
                        return Err(QuasiViolation::Overlap { from, to });
                    }
                    SegSegIntersection::Point { p, t, u } => {
                        if shared_tail || anchors.contains(&p) {
                            continue;
                        }
                        let zero = Rational::zero();
                        let one = Rational::one();
                        let interior = t > zero && t < one && u > zero && u < one;
                        if interior {
                            if !out.contains(&p) {
                                out.push(p);
                            }
                        } else {
                            return Err(QuasiViolation::Touch { at: p });
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn is_quasi_transverse(&self) -> bool {
        self.crossings().is_ok()
    }

    /// Number of connected components of `alpha ∩ prime` in the
    /// quasi-transverse state: crossings plus one per anchor component.
    pub fn component_count(&self) -> Result<usize, QuasiViolation> {
        let c = self.crossings()?.len();
        let base = match &self.kind {
            PairKind::PinnedArcs => 2,
            PairKind::Loops { pin: Some(_) } => 1,
            _ => 0,
        };
        Ok(c + base)
    }

    /// Component count without an arrangement build, valid whenever the
    /// pair is quasi-transverse (crossings plus one per anchor component).
    pub fn component_count_fast(&self) -> Option<usize> {
        let c = self.crossings().ok()?.len();
        let base = match &self.kind {
            PairKind::PinnedArcs => 2,
            PairKind::Loops { pin: Some(_) } => 1,
            _ => 0,
        };
        Some(c + base)
    }

    /// Connected components of `alpha ∩ prime` as a point set, computed
    /// from the arrangement's shared vertices and shared edges. Defined for
    /// any position of the pair, quasi-transverse or not.
    pub fn intersection_components(&self) -> usize {
        let arr = self.arrangement();
        let shared_vertex: Vec<bool> = arr
            .vertex_curves
            .iter()
            .map(|cs| cs.as_slice() == [0, 1])
            .collect();
        let n = arr.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != c {
                let nx = parent[c];
                parent[c] = r;
                c = nx;
            }
            r
        }
        for e in &arr.edges {
            if e.owners.as_slice() == [0, 1] {
                let ra = find(&mut parent, e.a);
                let rb = find(&mut parent, e.b);
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let mut roots = alloc::collections::BTreeSet::new();
        for v in 0..n {
            if shared_vertex[v] {
                roots.insert(find(&mut parent, v));
            }
        }
        roots.len()
    }

    /// Are the two curves pointwise equal (up to rotation for loops)?
    pub fn curves_equal(&self) -> bool {
        if self.alpha_closed != self.prime_closed {
            return false;
        }
        if !self.alpha_closed {
            return self.alpha == self.prime;
        }
        if self.alpha.len() != self.prime.len() {
            return false;
        }
        let n = self.alpha.len();
        (0..n).any(|k| (0..n).all(|i| self.alpha[(i + k) % n] == self.prime[i]))
    }

    /// The homotopy word of the moving curve (based path word; for loops
    /// the vertex list is closed up first).
    pub fn curve_word(
        &self,
        vertices: &[Point],
        punctures: &PunctureSet,
    ) -> Result<Word, BigonError> {
        let word = if self.prime_closed {
            let mut v = vertices.to_vec();
            let first = v[0].clone();
            v.push(first);
            let path = PLPath::new(v).map_err(BigonError::curve)?;
            crate::curves::crossing_word((&path).into(), punctures).map_err(BigonError::curve)?
        } else {
            let path = PLPath::new(vertices.to_vec()).map_err(BigonError::curve)?;
            crate::curves::crossing_word((&path).into(), punctures).map_err(BigonError::curve)?
        };
        Ok(word)
    }
}

/// A quasi-transversality violation with its witness locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiViolation {
    /// Collinear overlap of positive length.
    Overlap { from: Point, to: Point },
    /// A tangential or vertex touch (intersection not interior to both
    /// segments and not an anchor).
    Touch { at: Point },
}

/// A transversal intersection of two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransverseCrossing {
    pub point: Point,
    /// +1 when the second curve crosses the first from right to left.
    pub sign: i8,
}

/// All pairwise transversal intersections of two curves; errors with a
/// witness when any contact is non-transversal (overlap, vertex touch, or
/// endpoint-interior coincidence).
pub fn intersect_transverse(
    c1: CurveRef<'_>,
    c2: CurveRef<'_>,
) -> Result<Vec<TransverseCrossing>, BigonError> {
    let s1 = c1.segments();
    let s2 = c2.segments();
    let mut out = Vec::new();
    for sa in &s1 {
        for sb in &s2 {
            match intersect_segments(sa, sb) {
                SegSegIntersection::Disjoint => {}
                SegSegIntersection::Overlap { from, to } => {
                    return Err(BigonError::NonTransverse {
                        witness: from.clone(),
                        detail: alloc::format!("collinear overlap up to {to:?}"),
                    })
                }
                SegSegIntersection::Point { p, t, u } => {
                    let zero = Rational::zero();
                    let one = Rational::one();
                    if t > zero && t < one && u > zero && u < one {
                        let cross = sa.dir().cross(&sb.dir());
                        let sign = if cross.is_positive() { 1 } else { -1 };
                        out.push(TransverseCrossing { point: p, sign });
                    } else {
                        return Err(BigonError::NonTransverse {
                            witness: p,
                            detail: String::from("vertex or endpoint contact"),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.point.cmp(&b.point));
    out.dedup();
    Ok(out)
}

/// One atomic perturbation applied to the moving curve.
#[derive(Clone, Debug)]
pub struct PerturbMove {
    /// Sub-arc of `prime` before the move.
    pub before: Vec<Point>,
    /// Sub-arc after the move (same endpoints).
    pub after: Vec<Point>,
    /// Swept triangles; they contain no puncture.
    pub support: Vec<Vec<Point>>,
    /// Full moving curve right after the move (for renderers).
    pub state_after: Vec<Point>,
}

/// Make the pair quasi-transverse by perturbing `prime` only; `alpha` is
/// never touched. Returns the list of atomic moves (empty when the pair was
/// already quasi-transverse). The homotopy class of `prime` is preserved;
/// each move's swept region avoids the punctures.
pub fn transversalize(
    state: &mut PairState,
    punctures: &PunctureSet,
) -> Result<Vec<PerturbMove>, BigonError> {
    let mut moves: Vec<PerturbMove> = Vec::new();
    if state.is_quasi_transverse() {
        return Ok(moves);
    }
    subdivide_prime_on_alpha(state);
    for _round in 0..64 {
        if state.is_quasi_transverse() {
            return Ok(moves);
        }
        let fixed = state.fixed_prime_vertices();
        let offender = find_offending_vertex(state, &fixed);
        let Some(vi) = offender else {
            // No vertex-level degeneracy left but still not quasi-transverse:
            // new overlaps may need further subdivision.
            subdivide_prime_on_alpha(state);
            if find_offending_vertex(state, &state.fixed_prime_vertices()).is_none() {
                return Err(BigonError::internal(
                    "transversalization stalled without an offending vertex",
                ));
            }
            continue;
        };
        let mv = nudge_vertex(state, vi, punctures)?;
        moves.push(mv);
    }
    Err(BigonError::internal("transversalization budget exhausted"))
}

/// Insert subdivision vertices on `prime` at every non-anchor contact with
/// `alpha` that is not already a prime vertex: overlap endpoints, alpha
/// vertices interior to prime segments, and alpha-vertex projections inside
/// overlaps. Pure subdivision: the point set of the curve is unchanged.
fn subdivide_prime_on_alpha(state: &mut PairState) {
    let a_segs = state.alpha_segments();
    let n = state.prime.len();
    let m = if state.prime_closed { n } else { n - 1 };
    let mut new_prime: Vec<Point> = Vec::new();
    for i in 0..m {
        let a = state.prime[i].clone();
        let b = state.prime[(i + 1) % n].clone();
        let seg = Segment::new(a.clone(), b.clone());
        let mut cuts: Vec<Rational> = Vec::new();
        for sa in &a_segs {
            match intersect_segments(&seg, sa) {
                SegSegIntersection::Disjoint => {}
                SegSegIntersection::Point { .. } => {}
                SegSegIntersection::Overlap { from, to } => {
                    for p in [&from, &to] {
                        cuts.push(param_on(&seg, p));
                    }
                }
            }
            // Alpha bend points interior to the prime segment.
            for p in [&sa.a, &sa.b] {
                if seg.contains_point(p) && *p != seg.a && *p != seg.b {
                    cuts.push(param_on(&seg, p));
                }
            }
        }
        cuts.push(Rational::zero());
        cuts.sort();
        cuts.dedup();
        for t in cuts {
            if t >= Rational::one() {
                continue;
            }
            let p = seg.a.lerp(&seg.b, &t);
            if new_prime.last() != Some(&p) {
                new_prime.push(p);
            }
        }
    }
    if !state.prime_closed {
        let last = state.prime[n - 1].clone();
        if new_prime.last() != Some(&last) {
            new_prime.push(last);
        }
    }
    state.prime = new_prime;
}

fn param_on(seg: &Segment, p: &Point) -> Rational {
    let d = seg.dir();
    if d.x.abs() >= d.y.abs() {
        (&p.x - &seg.a.x) / &d.x
    } else {
        (&p.y - &seg.a.y) / &d.y
    }
}

/// A movable prime vertex lying exactly on alpha (a repairable degeneracy).
fn find_offending_vertex(state: &PairState, fixed: &[usize]) -> Option<usize> {
    let a_segs = state.alpha_segments();
    for (i, v) in state.prime.iter().enumerate() {
        if fixed.contains(&i) {
            continue;
        }
        if a_segs.iter().any(|s| s.contains_point(v)) {
            return Some(i);
        }
    }
    None
}

/// Move prime vertex `vi` off alpha by an exact tiny displacement that keeps
/// the curve embedded, keeps general position, sweeps no puncture, and
/// introduces no new degeneracy.
fn nudge_vertex(
    state: &mut PairState,
    vi: usize,
    punctures: &PunctureSet,
) -> Result<PerturbMove, BigonError> {
    let n = state.prime.len();
    let prev = state.prime[(vi + n - 1) % n].clone();
    let v = state.prime[vi].clone();
    let next = state.prime[(vi + 1) % n].clone();
    let clearance = local_clearance(state, &v, punctures);
    let mut delta = crate::geom::quarter_sqrt_lower_bound(&clearance);
    let dirs = [
        Vector::new(rat(1), rat(0)),
        Vector::new(rat(0), rat(1)),
        Vector::new(rat(-1), rat(0)),
        Vector::new(rat(0), rat(-1)),
        Vector::new(ratio(1, 2), ratio(1, 2)),
        Vector::new(ratio(-1, 2), ratio(1, 2)),
        Vector::new(ratio(-1, 2), ratio(-1, 2)),
        Vector::new(ratio(1, 2), ratio(-1, 2)),
    ];
    for _ in 0..48 {
        for d in &dirs {
            let cand = v.add(&d.scale(&delta));
            if candidate_ok(state, vi, &prev, &v, &next, &cand, punctures) {
                state.prime[vi] = cand.clone();
                return Ok(PerturbMove {
                    before: vec![prev.clone(), v.clone(), next.clone()],
                    after: vec![prev.clone(), cand.clone(), next.clone()],
                    support: vec![
                        vec![prev.clone(), v.clone(), cand.clone()],
                        vec![v.clone(), next.clone(), cand.clone()],
                    ],
                    state_after: state.prime.clone(),
                });
            }
        }
        delta /= rat(2);
    }
    Err(BigonError::internal("no valid nudge direction found"))
}

/// Squared clearance radius around `v`: punctures and non-incident features.
fn local_clearance(state: &PairState, v: &Point, punctures: &PunctureSet) -> Rational {
    let mut best: Option<Rational> = None;
    let mut consider = |d: Rational| {
        if !d.is_zero() && best.as_ref().map(|b| d < *b).unwrap_or(true) {
            best = Some(d);
        }
    };
    for p in punctures.iter() {
        consider(p.sub(v).norm_sq());
    }
    for s in state.alpha_segments() {
        consider(s.dist_sq_to_point(v));
    }
    for w in state.prime.iter() {
        consider(w.sub(v).norm_sq());
    }
    best.unwrap_or_else(Rational::one)
}

fn candidate_ok(
    state: &PairState,
    vi: usize,
    prev: &Point,
    v: &Point,
    next: &Point,
    cand: &Point,
    punctures: &PunctureSet,
) -> bool {
    if cand == prev || cand == next || cand == v {
        return false;
    }
    let a_segs = state.alpha_segments();
    // Off alpha.
    if a_segs.iter().any(|s| s.contains_point(cand)) {
        return false;
    }
    let new1 = Segment::new(prev.clone(), cand.clone());
    let new2 = Segment::new(cand.clone(), next.clone());
    // No overlaps with alpha and no alpha bend on the new segments.
    for s in &a_segs {
        for ns in [&new1, &new2] {
            if matches!(
                intersect_segments(ns, s),
                SegSegIntersection::Overlap { .. }
            ) {
                return false;
            }
            for p in [&s.a, &s.b] {
                if ns.contains_point(p) && *p != ns.a && *p != ns.b {
                    return false;
                }
            }
        }
    }
    // Swept triangles avoid punctures (closed triangles, conservatively).
    for p in punctures.iter() {
        for tri in [
            [prev.clone(), v.clone(), cand.clone()],
            [v.clone(), next.clone(), cand.clone()],
        ] {
            if triangle_contains_closed(&tri, p) {
                return false;
            }
        }
    }
    // The rewritten curve stays valid.
    let mut cand_curve = state.prime.clone();
    cand_curve[vi] = cand.clone();
    if !curve_ok(&cand_curve, state.prime_closed, punctures) {
        return false;
    }
    true
}

fn triangle_contains_closed(tri: &[Point; 3], p: &Point) -> bool {
    if crate::geom::polygon_contains_on_boundary(tri, p) {
        return true;
    }
    crate::geom::winding_number(tri, p) != 0
}

fn curve_ok(vertices: &[Point], closed: bool, punctures: &PunctureSet) -> bool {
    let curve = if closed {
        match PLLoop::new(vertices.to_vec()) {
            Ok(l) => {
                if !l.is_embedded() {
                    return false;
                }
                validate_general_position((&l).into(), punctures).is_ok()
            }
            Err(_) => false,
        }
    } else {
        match PLPath::new(vertices.to_vec()) {
            Ok(p) => {
                if !p.is_embedded() {
                    return false;
                }
                validate_general_position((&p).into(), punctures).is_ok()
            }
            Err(_) => false,
        }
    };
    curve
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| pt(x, y)).collect()
    }

    fn pinned(alpha: &[(i64, i64)], prime: &[(i64, i64)]) -> PairState {
        PairState {
            alpha: pts(alpha),
            prime: pts(prime),
            alpha_closed: false,
            prime_closed: false,
            kind: PairKind::PinnedArcs,
        }
    }

    #[test]
    fn quasi_transverse_crossings() {
        // alpha straight, prime with one bump crossing twice.
        let s = pinned(
            &[(0, 0), (1, 0), (8, 0), (9, 0)],
            &[(0, 0), (1, 0), (3, 2), (6, 2), (8, 0), (9, 0)],
        );
        // The bump stays above: crossings only at... none here (prime leaves
        // at the junction upward and returns at the other junction).
        assert_eq!(s.crossings().unwrap().len(), 0);
        assert_eq!(s.component_count().unwrap(), 2);

        let s2 = pinned(
            &[(0, 0), (1, 0), (8, 0), (9, 0)],
            &[(0, 0), (1, 0), (2, 2), (3, -2), (5, 2), (8, 0), (9, 0)],
        );
        // The zigzag crosses the alpha middle twice.
        assert_eq!(s2.crossings().unwrap().len(), 2);
        assert_eq!(s2.component_count().unwrap(), 4);
    }

    #[test]
    fn overlap_is_violation_and_gets_repaired() {
        let mut s = pinned(
            &[(0, 0), (1, 0), (8, 0), (9, 0)],
            &[(0, 0), (1, 0), (3, 2), (4, 0), (6, 0), (7, 2), (8, 0), (9, 0)],
        );
        // Prime runs along alpha between x=4 and x=6; the first violation
        // found may be the overlap or the touch at its boundary vertex.
        assert!(s.crossings().is_err());
        let f = PunctureSet::empty();
        let before_word = s.curve_word(&s.prime.clone(), &f).unwrap();
        let moves = transversalize(&mut s, &f).unwrap();
        assert!(!moves.is_empty());
        assert!(s.is_quasi_transverse());
        let after_word = s.curve_word(&s.prime.clone(), &f).unwrap();
        assert_eq!(before_word, after_word);
        // Overlap resolved into 0 or 2 transversal crossings of that stretch.
        let c = s.crossings().unwrap().len();
        assert!(c % 2 == 0, "crossing parity preserved, got {c}");
    }

    #[test]
    fn tangential_touch_resolved() {
        let mut s = pinned(
            &[(0, 0), (1, 0), (8, 0), (9, 0)],
            &[(0, 0), (1, 0), (4, 3), (5, 0), (6, 3), (8, 0), (9, 0)],
        );
        // Prime touches alpha at the vertex (5,0) without crossing.
        assert!(matches!(s.crossings(), Err(QuasiViolation::Touch { .. })));
        let f = PunctureSet::new(vec![pt(5, 1)]).unwrap();
        let w0 = s.curve_word(&s.prime.clone(), &f).unwrap();
        let moves = transversalize(&mut s, &f).unwrap();
        assert!(!moves.is_empty());
        assert!(s.is_quasi_transverse());
        assert_eq!(s.curve_word(&s.prime.clone(), &f).unwrap(), w0);
        let c = s.crossings().unwrap().len();
        assert!(c == 0 || c == 2);
        // Every move's support avoids the puncture.
        for mv in &moves {
            for poly in &mv.support {
                assert!(!triangle_contains_closed(
                    &[poly[0].clone(), poly[1].clone(), poly[2].clone()],
                    &pt(5, 1)
                ));
            }
        }
    }

    #[test]
    fn idempotent_on_clean_input() {
        let mut s = pinned(
            &[(0, 0), (1, 0), (8, 0), (9, 0)],
            &[(0, 0), (1, 0), (2, 2), (3, -2), (5, 2), (8, 0), (9, 0)],
        );
        let before = s.prime.clone();
        let moves = transversalize(&mut s, &PunctureSet::empty()).unwrap();
        assert!(moves.is_empty());
        assert_eq!(s.prime, before);
    }

    #[test]
    fn intersect_transverse_examples() {
        let d1 = PLPath::new(pts(&[(0, 0), (2, 2)])).unwrap();
        let d2 = PLPath::new(pts(&[(0, 2), (2, 0)])).unwrap();
        let hits = intersect_transverse((&d1).into(), (&d2).into()).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].point, pt(1, 1));
        assert!(hits[0].sign == 1 || hits[0].sign == -1);

        let h1 = PLPath::new(pts(&[(0, 0), (4, 0)])).unwrap();
        let h2 = PLPath::new(pts(&[(0, 1), (4, 1)])).unwrap();
        assert!(intersect_transverse((&h1).into(), (&h2).into())
            .unwrap()
            .is_empty());

        let o2 = PLPath::new(pts(&[(2, 0), (6, 0)])).unwrap();
        assert!(matches!(
            intersect_transverse((&h1).into(), (&o2).into()),
            Err(BigonError::NonTransverse { .. })
        ));
    }
}
