//! PL curves in the punctured plane and their crossing-word invariants.
//!
//! The homotopy class of a curve in `ℝ² ∖ F` is encoded by its reduced word
//! of signed crossings with the upward vertical rays of the punctures.
//! Crossing a ray right-to-left (x decreasing) above the puncture emits the
//! positive generator, so a counterclockwise loop around a puncture reads as
//! `x_i` and has winding number +1.

use alloc::vec::Vec;
use core::fmt;

use crate::freegroup::{CyclicWord, Letter, Sign, Word};
use crate::geom::{ray_crossing, Point, Rational, Segment};


/// A finite set of punctures in general position: pairwise distinct and no
/// puncture on the open upward ray of another (hence pairwise distinct x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctureSet {
    points: Vec<Point>,
}

impl PunctureSet {
    pub fn new(points: Vec<Point>) -> Result<PunctureSet, CurveError> {
        for i in 0..points.len() {
            for j in 0..points.len() {
                if i != j && points[i].x == points[j].x {
                    return Err(CurveError::PuncturesShareRay { i, j });
                }
            }
        }
        Ok(PunctureSet { points })
    }

    pub fn empty() -> PunctureSet {
        PunctureSet { points: Vec::new() }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }
}

/// An open PL path with at least two vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PLPath {
    vertices: Vec<Point>,
}

impl fmt::Debug for PLPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLPath{:?}", self.vertices)
    }
}

/// A closed PL loop with at least three vertices; the edge from the last
/// vertex back to the first is implicit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PLLoop {
    vertices: Vec<Point>,
}

impl fmt::Debug for PLLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLLoop{:?}", self.vertices)
    }
}

impl PLPath {
    pub fn new(vertices: Vec<Point>) -> Result<PLPath, CurveError> {
        if vertices.len() < 2 {
            return Err(CurveError::TooFewVertices {
                got: vertices.len(),
                need: 2,
            });
        }
        for i in 0..vertices.len() - 1 {
            if vertices[i] == vertices[i + 1] {
                return Err(CurveError::RepeatedVertex { index: i });
            }
        }
        Ok(PLPath { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn first(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Point {
        self.vertices.last().unwrap()
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices
            .windows(2)
            .map(|w| Segment::new(w[0].clone(), w[1].clone()))
    }

    pub fn reversed(&self) -> PLPath {
        PLPath {
            vertices: self.vertices.iter().rev().cloned().collect(),
        }
    }

    /// Is the path simple (no self-intersections)?
    pub fn is_embedded(&self) -> bool {
        curve_is_simple(&self.vertices, false)
    }
}

impl PLLoop {
    pub fn new(vertices: Vec<Point>) -> Result<PLLoop, CurveError> {
        if vertices.len() < 3 {
            return Err(CurveError::TooFewVertices {
                got: vertices.len(),
                need: 3,
            });
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(CurveError::RepeatedVertex { index: i });
            }
        }
        Ok(PLLoop { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| {
            Segment::new(
                self.vertices[i].clone(),
                self.vertices[(i + 1) % n].clone(),
            )
        })
    }

    pub fn reversed(&self) -> PLLoop {
        PLLoop {
            vertices: self.vertices.iter().rev().cloned().collect(),
        }
    }

    /// Rotate the vertex list so that it starts at index `k`.
    pub fn rotated(&self, k: usize) -> PLLoop {
        let n = self.vertices.len();
        PLLoop {
            vertices: (0..n).map(|i| self.vertices[(i + k) % n].clone()).collect(),
        }
    }

    pub fn is_embedded(&self) -> bool {
        curve_is_simple(&self.vertices, true)
    }

    /// View the loop as a closed path based at its first vertex.
    pub fn as_based_path(&self) -> PLPath {
        let mut v = self.vertices.clone();
        v.push(self.vertices[0].clone());
        PLPath { vertices: v }
    }

    /// Winding number around a point not on the loop.
    pub fn winding_number(&self, p: &Point) -> Result<i64, CurveError> {
        for s in self.segments() {
            if s.contains_point(p) {
                return Err(CurveError::PointOnCurve { point: p.clone() });
            }
        }
        Ok(crate::geom::winding_number(&self.vertices, p))
    }
}

/// Either kind of curve, borrowed; lets the validators and ray-crossing
/// machinery treat paths and loops uniformly.
#[derive(Clone, Copy, Debug)]
pub enum CurveRef<'a> {
    Path(&'a PLPath),
    Loop(&'a PLLoop),
}

impl<'a> CurveRef<'a> {
    pub fn vertices(&self) -> &'a [Point] {
        match self {
            CurveRef::Path(p) => p.vertices(),
            CurveRef::Loop(l) => l.vertices(),
        }
    }

    pub fn closed(&self) -> bool {
        matches!(self, CurveRef::Loop(_))
    }

    pub fn segments(&self) -> Vec<Segment> {
        match self {
            CurveRef::Path(p) => p.segments().collect(),
            CurveRef::Loop(l) => l.segments().collect(),
        }
    }
}

impl<'a> From<&'a PLPath> for CurveRef<'a> {
    fn from(p: &'a PLPath) -> Self {
        CurveRef::Path(p)
    }
}

impl<'a> From<&'a PLLoop> for CurveRef<'a> {
    fn from(l: &'a PLLoop) -> Self {
        CurveRef::Loop(l)
    }
}

fn curve_is_simple(vertices: &[Point], closed: bool) -> bool {
    let segs: Vec<Segment> = if closed {
        let n = vertices.len();
        (0..n)
            .map(|i| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone()))
            .collect()
    } else {
        vertices
            .windows(2)
            .map(|w| Segment::new(w[0].clone(), w[1].clone()))
            .collect()
    };
    let n = segs.len();
    for i in 0..n {
        for j in i + 1..n {
            if !crate::geom::bboxes_may_touch(&segs[i], &segs[j]) {
                continue;
            }
            let adjacent_fwd = j == i + 1;
            let adjacent_wrap = closed && i == 0 && j == n - 1;
            match crate::geom::intersect_segments(&segs[i], &segs[j]) {
                crate::geom::SegSegIntersection::Disjoint => {}
                crate::geom::SegSegIntersection::Overlap { .. } => return false,
                crate::geom::SegSegIntersection::Point { p, .. } => {
                    if adjacent_fwd {
                        if p != segs[i].b {
                            return false;
                        }
                    } else if adjacent_wrap {
                        if p != segs[j].b {
                            return false;
                        }
                    } else {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A violation of the general-position requirements between a curve and a
/// puncture set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositionViolation {
    /// The puncture lies on the curve.
    PunctureOnCurve { puncture: usize, segment: usize },
    /// A curve vertex lies on the open upward ray of the puncture.
    VertexOnRay { puncture: usize, vertex: usize },
    /// A vertical segment at the puncture's x reaching the open ray.
    VerticalOnRay { puncture: usize, segment: usize },
}

/// Check general position of a curve against a puncture set.
pub fn validate_general_position(
    curve: CurveRef<'_>,
    punctures: &PunctureSet,
) -> Result<(), PositionViolation> {
    let verts = curve.vertices();
    let segs = curve.segments();
    for (pi, p) in punctures.iter().enumerate() {
        for (vi, v) in verts.iter().enumerate() {
            if v.x == p.x && v.y > p.y {
                return Err(PositionViolation::VertexOnRay {
                    puncture: pi,
                    vertex: vi,
                });
            }
        }
        for (si, s) in segs.iter().enumerate() {
            if s.contains_point(p) {
                return Err(PositionViolation::PunctureOnCurve {
                    puncture: pi,
                    segment: si,
                });
            }
            if s.a.x == p.x && s.b.x == p.x {
                let top = if s.a.y >= s.b.y { &s.a.y } else { &s.b.y };
                if *top > p.y {
                    return Err(PositionViolation::VerticalOnRay {
                        puncture: pi,
                        segment: si,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The signed ray crossings of one segment, ordered along the segment.
fn segment_crossings(seg: &Segment, punctures: &PunctureSet) -> Vec<(Rational, Letter)> {
    let mut hits: Vec<(Rational, Letter)> = Vec::new();
    for (pi, p) in punctures.iter().enumerate() {
        let c = ray_crossing(&seg.a, &seg.b, p);
        if c != 0 {
            let t = (&p.x - &seg.a.x) / (&seg.b.x - &seg.a.x);
            let sign = if c > 0 { Sign::Plus } else { Sign::Minus };
            hits.push((t, Letter::new(pi as u32 + 1, sign)));
        }
    }
    hits.sort_by(|a, b| a.0.cmp(&b.0));
    hits
}

/// The crossing word of a curve: a reduced word for paths, with generator
/// `x_i` for each signed crossing of puncture `i`'s upward ray.
pub fn crossing_word(curve: CurveRef<'_>, punctures: &PunctureSet) -> Result<Word, CurveError> {
    validate_general_position(curve, punctures).map_err(CurveError::GeneralPosition)?;
    let mut letters = Vec::new();
    for seg in curve.segments() {
        for (_, l) in segment_crossings(&seg, punctures) {
            letters.push(l);
        }
    }
    Ok(Word::reduce(letters))
}

/// The free-homotopy class of a loop: its crossing word as a cyclic word.
pub fn cyclic_crossing_word(
    l: &PLLoop,
    punctures: &PunctureSet,
) -> Result<CyclicWord, CurveError> {
    Ok(CyclicWord::of(&crossing_word(l.into(), punctures)?))
}

/// Are two paths homotopic rel endpoints in the punctured plane?
pub fn homotopic_rel_endpoints(
    g1: &PLPath,
    g2: &PLPath,
    punctures: &PunctureSet,
) -> Result<bool, CurveError> {
    if g1.first() != g2.first() || g1.last() != g2.last() {
        return Err(CurveError::EndpointMismatch);
    }
    let w1 = crossing_word(g1.into(), punctures)?;
    let w2 = crossing_word(g2.into(), punctures)?;
    Ok(w1.concat(&w2.invert()).is_empty())
}

/// Are two loops freely homotopic in the punctured plane?
pub fn freely_homotopic(
    l1: &PLLoop,
    l2: &PLLoop,
    punctures: &PunctureSet,
) -> Result<bool, CurveError> {
    Ok(cyclic_crossing_word(l1, punctures)? == cyclic_crossing_word(l2, punctures)?)
}

/// Is the loop contractible in the punctured plane?
pub fn is_contractible(l: &PLLoop, punctures: &PunctureSet) -> Result<bool, CurveError> {
    Ok(cyclic_crossing_word(l, punctures)?.is_empty())
}

/// Do two loops with a common basepoint commute in `π₁(ℝ² ∖ F, z)`?
///
/// Both loops must start at the same vertex; their based crossing words
/// (not cyclically reduced) are compared in the free group.
pub fn commutation_check(
    alpha: &PLLoop,
    beta: &PLLoop,
    punctures: &PunctureSet,
) -> Result<bool, CurveError> {
    if alpha.vertices()[0] != beta.vertices()[0] {
        return Err(CurveError::BasepointMismatch);
    }
    let wa = crossing_word((&alpha.as_based_path()).into(), punctures)?;
    let wb = crossing_word((&beta.as_based_path()).into(), punctures)?;
    Ok(wa.commutes_with(&wb))
}

/// Errors from curve constructors and operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveError {
    TooFewVertices { got: usize, need: usize },
    RepeatedVertex { index: usize },
    PuncturesShareRay { i: usize, j: usize },
    GeneralPosition(PositionViolation),
    PointOnCurve { point: Point },
    EndpointMismatch,
    BasepointMismatch,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::TooFewVertices { got, need } => {
                write!(f, "curve needs at least {need} vertices, got {got}")
            }
            CurveError::RepeatedVertex { index } => {
                write!(f, "consecutive vertices {index} and next coincide")
            }
            CurveError::PuncturesShareRay { i, j } => {
                write!(f, "punctures {i} and {j} lie on a common vertical ray")
            }
            CurveError::GeneralPosition(v) => write!(f, "general position violated: {v:?}"),
            CurveError::PointOnCurve { point } => {
                write!(f, "point {point:?} lies on the curve")
            }
            CurveError::EndpointMismatch => write!(f, "paths do not share endpoints"),
            CurveError::BasepointMismatch => write!(f, "loops do not share a basepoint"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CurveError {}
