//! Bigon machinery: fillings, minimal bigons, bigon removal and curve
//! straightening in the punctured plane.

pub mod arrangement;
pub mod incidence;
pub mod pairs;
mod removal;
mod straighten;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::curves::{CurveError, PLPath, PunctureSet};
use crate::freegroup::Word;
use crate::geom::Point;

pub use arrangement::{fill, Arrangement, InputCurve, Location, Region};
pub use incidence::incidence_levels;
pub use pairs::{intersect_transverse, PairKind, PairState, TransverseCrossing};
pub use removal::{find_bigons, find_minimal_bigon, remove_bigon, verify_bigon, AvoidSets, BigonCert};
pub use straighten::{GinCurve, 
    geometric_intersection_number, make_quasi_transverse, straighten_arc, straighten_loop,
};

/// Two properly embedded lines modeled as open arcs with pinned tails: the
/// first and last segments of both arcs coincide exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePair {
    alpha: PLPath,
    alpha_prime: PLPath,
}

impl LinePair {
    pub fn new(alpha: PLPath, alpha_prime: PLPath) -> Result<LinePair, BigonError> {
        if alpha.vertices().len() < 4 || alpha_prime.vertices().len() < 4 {
            return Err(BigonError::InvalidInput(String::from(
                "pinned arcs need at least 4 vertices",
            )));
        }
        let a = alpha.vertices();
        let p = alpha_prime.vertices();
        let tails_match = a[0] == p[0]
            && a[1] == p[1]
            && a[a.len() - 1] == p[p.len() - 1]
            && a[a.len() - 2] == p[p.len() - 2];
        if !tails_match {
            return Err(BigonError::InvalidInput(String::from(
                "first and last segments of the two arcs must coincide",
            )));
        }
        if !alpha.is_embedded() || !alpha_prime.is_embedded() {
            return Err(BigonError::InvalidInput(String::from(
                "both arcs must be embedded",
            )));
        }
        Ok(LinePair { alpha, alpha_prime })
    }

    pub fn alpha(&self) -> &PLPath {
        &self.alpha
    }

    pub fn alpha_prime(&self) -> &PLPath {
        &self.alpha_prime
    }

    pub(crate) fn state(&self) -> PairState {
        PairState {
            alpha: self.alpha.vertices().to_vec(),
            prime: self.alpha_prime.vertices().to_vec(),
            alpha_closed: false,
            prime_closed: false,
            kind: PairKind::PinnedArcs,
        }
    }

    pub(crate) fn from_state(state: &PairState) -> LinePair {
        LinePair {
            alpha: PLPath::new(state.alpha.clone()).expect("valid alpha"),
            alpha_prime: PLPath::new(state.prime.clone()).expect("valid prime"),
        }
    }
}

/// The kind of an elementary isotopy step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Perturb,
    BigonRemoval,
    FinalCoincidence,
}

/// One elementary isotopy: a sub-arc of the moving curve is replaced inside
/// a support region which avoids the punctures.
#[derive(Clone, Debug)]
pub struct IsotopyStep {
    pub kind: StepKind,
    /// Support region as simple polygons with even-odd semantics.
    pub support: Vec<Vec<Point>>,
    /// The replaced sub-arc of the moving curve.
    pub before: Vec<Point>,
    /// Its replacement; shares endpoints with `before` (loops may be
    /// replaced whole, in which case both are full cycles).
    pub after: Vec<Point>,
}

impl IsotopyStep {
    /// Even-odd membership in the support region.
    pub fn support_contains(&self, p: &Point) -> SupportLocation {
        let mut parity = 0i64;
        for poly in &self.support {
            if poly.len() >= 2 && crate::geom::polygon_contains_on_boundary(poly, p) {
                return SupportLocation::Boundary;
            }
            if poly.len() >= 3 {
                parity += crate::geom::winding_number(poly, p).rem_euclid(2);
            }
        }
        if parity % 2 == 1 {
            SupportLocation::Inside
        } else {
            SupportLocation::Outside
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportLocation {
    Inside,
    Boundary,
    Outside,
}

/// A full straightening run: the ordered steps and the intersection
/// component count before each step (and after the last).
#[derive(Clone, Debug)]
pub struct StraighteningTrace {
    pub steps: Vec<IsotopyStep>,
    /// `component_counts[i]` is the count before step `i`;
    /// the final entry is the count after the last step.
    pub component_counts: Vec<usize>,
    /// Moving-curve snapshots: `states[i]` before step `i`, plus the final
    /// state (so `states.len() == steps.len() + 1`).
    pub states: Vec<Vec<Point>>,
    /// The final position of the moving curve (equal to the target).
    pub final_curve: Vec<Point>,
}

impl StraighteningTrace {
    pub fn bigon_removal_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::BigonRemoval)
            .count()
    }
}

/// Errors from the bigon machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BigonError {
    /// Curves touch non-transversally; the witness locates the contact.
    NonTransverse { witness: Point, detail: String },
    /// The arcs are not homotopic rel tails; the two crossing words witness.
    NotHomotopic { alpha_word: Word, prime_word: Word },
    /// The loops are not freely homotopic.
    NotFreelyHomotopic { alpha_word: Word, prime_word: Word },
    /// A loop is contractible, so it cannot be straightened as essential.
    Inessential,
    /// The pinned basepoint's connecting class is nontrivial.
    PinClassNontrivial { alpha_word: Word, prime_word: Word },
    /// A constraint set blocks every admissible support region.
    ConstraintConflict { detail: String },
    InvalidInput(String),
    Curve(CurveError),
    Internal(String),
}

impl BigonError {
    pub(crate) fn curve(e: CurveError) -> BigonError {
        BigonError::Curve(e)
    }

    pub(crate) fn internal(msg: &str) -> BigonError {
        BigonError::Internal(String::from(msg))
    }
}

impl fmt::Display for BigonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigonError::NonTransverse { witness, detail } => {
                write!(f, "non-transverse contact at {witness:?}: {detail}")
            }
            BigonError::NotHomotopic {
                alpha_word,
                prime_word,
            } => write!(
                f,
                "arcs are not homotopic rel tails: {} vs {}",
                alpha_word.display(),
                prime_word.display()
            ),
            BigonError::NotFreelyHomotopic {
                alpha_word,
                prime_word,
            } => write!(
                f,
                "loops are not freely homotopic: {} vs {}",
                alpha_word.display(),
                prime_word.display()
            ),
            BigonError::Inessential => write!(f, "loop is contractible in the punctured plane"),
            BigonError::PinClassNontrivial {
                alpha_word,
                prime_word,
            } => write!(
                f,
                "based classes at the pin differ: {} vs {}",
                alpha_word.display(),
                prime_word.display()
            ),
            BigonError::ConstraintConflict { detail } => {
                write!(f, "constraint conflict: {detail}")
            }
            BigonError::InvalidInput(s) => write!(f, "invalid input: {s}"),
            BigonError::Curve(e) => write!(f, "curve error: {e}"),
            BigonError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BigonError {}

/// A constraint set: points and curves whose intersection pattern with the
/// straightening pair must be preserved.
#[derive(Clone, Debug, Default)]
pub struct FeatureSet {
    pub points: Vec<Point>,
    pub curves: Vec<PLPath>,
}

impl FeatureSet {
    pub fn points(points: Vec<Point>) -> FeatureSet {
        FeatureSet {
            points,
            curves: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.curves.is_empty()
    }

    /// Does the set meet the polyline (as a point set)?
    pub fn meets_polyline(&self, vertices: &[Point], closed: bool) -> bool {
        let n = vertices.len();
        let m = if closed { n } else { n.saturating_sub(1) };
        let segs: Vec<crate::geom::Segment> = (0..m)
            .map(|i| {
                crate::geom::Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone())
            })
            .collect();
        for p in &self.points {
            if segs.iter().any(|s| s.contains_point(p)) {
                return true;
            }
        }
        for c in &self.curves {
            for cs in c.segments() {
                for s in &segs {
                    if !matches!(
                        crate::geom::intersect_segments(&cs, s),
                        crate::geom::SegSegIntersection::Disjoint
                    ) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Sample points of the set: the points plus curve vertices and curve
    /// segment midpoints.
    pub fn sample_points(&self) -> Vec<Point> {
        let mut out = self.points.clone();
        for c in &self.curves {
            for v in c.vertices() {
                out.push(v.clone());
            }
            for s in c.segments() {
                out.push(s.a.lerp(&s.b, &crate::geom::ratio(1, 2)));
            }
        }
        out
    }
}

/// Validate a puncture set against every curve involved in an operation.
pub(crate) fn check_general_position(
    curves: &[(&[Point], bool)],
    punctures: &PunctureSet,
) -> Result<(), BigonError> {
    for (vertices, closed) in curves {
        if *closed {
            let l = crate::curves::PLLoop::new(vertices.to_vec()).map_err(BigonError::curve)?;
            crate::curves::validate_general_position((&l).into(), punctures)
                .map_err(|v| BigonError::Curve(CurveError::GeneralPosition(v)))?;
        } else {
            let p = PLPath::new(vertices.to_vec()).map_err(BigonError::curve)?;
            crate::curves::validate_general_position((&p).into(), punctures)
                .map_err(|v| BigonError::Curve(CurveError::GeneralPosition(v)))?;
        }
    }
    Ok(())
}

pub(crate) fn format_point(p: &Point) -> String {
    format!("({}, {})", p.x, p.y)
}
