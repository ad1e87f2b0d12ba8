//! Geometric pure braids: point motions in the plane that return every
//! point to its start.
//!
//! Sign conventions (see [`conventions`]): a counterclockwise relative turn
//! of two strands contributes +1 to their linking number, and the braid
//! generator `σ_i` is positive when the strand coming from the left passes
//! in front — with the greater y — at the crossing.

pub mod artin;
pub mod criterion;
pub mod linking;
pub mod rotation;
pub mod word;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::geom::{Point, Rational, Vector};
use num_traits::{One, Signed, Zero};

pub use artin::{artin_action, artin_generator, FreeAutomorphism};
pub use criterion::{is_trivial, 
    connected_set_criterion, unlinked_finite, ComponentReport, CriterionReport, UnlinkedReport,
};
pub use linking::{linking_matrix, linking_number};
pub use rotation::{rotation_braid, rotation_compose};
pub use word::{braid_word, BraidLetter, BraidWord};

/// Sign conventions, fixed once for the whole crate.
pub mod conventions {
    //! * Linking: +1 per net counterclockwise relative turn.
    //! * Braid generators: `σ_i` exchanges the strands at x-ranks `i`,
    //!   `i+1`; the sign is positive when the left strand passes with the
    //!   greater y at the crossing.
    //! * The Artin action of `σ_i` maps `x_i ↦ x_i x_{i+1} x_i⁻¹` and
    //!   `x_{i+1} ↦ x_i`, with loops around the punctures ordered by x and
    //!   based below the configuration.
}

/// One strand: a PL motion through breakpoint times `0 = t₀ < … < t_m = 1`
/// that returns to its start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    times: Vec<Rational>,
    points: Vec<Point>,
}

impl Strand {
    pub fn new(times: Vec<Rational>, points: Vec<Point>) -> Result<Strand, BraidError> {
        if times.len() != points.len() || times.len() < 2 {
            return Err(BraidError::Malformed(String::from(
                "a strand needs matching time and point lists with at least two entries",
            )));
        }
        if !times[0].is_zero() || !times[times.len() - 1].is_one() {
            return Err(BraidError::Malformed(String::from(
                "strand times must start at 0 and end at 1",
            )));
        }
        for w in times.windows(2) {
            if w[0] >= w[1] {
                return Err(BraidError::Malformed(String::from(
                    "strand times must strictly increase",
                )));
            }
        }
        if points[0] != points[points.len() - 1] {
            return Err(BraidError::Malformed(String::from(
                "a pure strand must return to its starting point",
            )));
        }
        Ok(Strand { times, points })
    }

    /// A strand that never moves.
    pub fn constant(p: Point) -> Strand {
        Strand {
            times: alloc::vec![Rational::zero(), Rational::one()],
            points: alloc::vec![p.clone(), p],
        }
    }

    pub fn times(&self) -> &[Rational] {
        &self.times
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn base(&self) -> &Point {
        &self.points[0]
    }

    /// Position at an arbitrary time in `[0, 1]`.
    pub fn position(&self, t: &Rational) -> Point {
        debug_assert!(!t.is_negative() && *t <= Rational::one());
        let i = match self.times.binary_search(t) {
            Ok(i) => return self.points[i].clone(),
            Err(i) => i - 1,
        };
        let t0 = &self.times[i];
        let t1 = &self.times[i + 1];
        let s = (t - t0) / (t1 - t0);
        self.points[i].lerp(&self.points[i + 1], &s)
    }

    /// Rescale the time axis into `[from, to]` (used by concatenation).
    fn rescaled(&self, from: &Rational, to: &Rational) -> (Vec<Rational>, Vec<Point>) {
        let span = to - from;
        let times = self.times.iter().map(|t| from + &(t * &span)).collect();
        (times, self.points.clone())
    }
}

/// A geometric pure braid: simultaneous strand motions that stay pairwise
/// disjoint at every time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureBraid {
    strands: Vec<Strand>,
}

/// A collision witness: strands `i` and `j` coincide at time `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub t: Rational,
    pub i: usize,
    pub j: usize,
}

impl PureBraid {
    /// Build and validate: the strands must be pairwise disjoint at every
    /// time (checked exactly on every common linear piece).
    pub fn new(strands: Vec<Strand>) -> Result<PureBraid, BraidError> {
        let b = PureBraid { strands };
        match b.validate() {
            None => Ok(b),
            Some(c) => Err(BraidError::Collision(c)),
        }
    }

    /// The identity braid on the given base points.
    pub fn identity(bases: Vec<Point>) -> Result<PureBraid, BraidError> {
        PureBraid::new(bases.into_iter().map(Strand::constant).collect())
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn len(&self) -> usize {
        self.strands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }

    pub fn base_points(&self) -> Vec<Point> {
        self.strands.iter().map(|s| s.base().clone()).collect()
    }

    /// Exact disjointness check; `None` means valid, otherwise the first
    /// collision found (earliest time, then lowest strand pair).
    pub fn validate(&self) -> Option<Collision> {
        let n = self.strands.len();
        let mut best: Option<Collision> = None;
        for i in 0..n {
            for j in i + 1..n {
                if let Some(t) = first_meeting(&self.strands[i], &self.strands[j]) {
                    let better = best
                        .as_ref()
                        .map(|b| (t.clone(), i, j) < (b.t.clone(), b.i, b.j))
                        .unwrap_or(true);
                    if better {
                        best = Some(Collision { t, i, j });
                    }
                }
            }
        }
        best
    }

    /// Concatenate two braids: this one on `[0, ½]`, then `other`. The
    /// second braid must start where the first ends (same base points).
    pub fn concat(&self, other: &PureBraid) -> Result<PureBraid, BraidError> {
        if self.base_points() != other.base_points() {
            return Err(BraidError::Malformed(String::from(
                "concatenation needs identical base points",
            )));
        }
        let half = crate::geom::ratio(1, 2);
        let one = Rational::one();
        let zero = Rational::zero();
        let mut strands = Vec::with_capacity(self.strands.len());
        for (a, b) in self.strands.iter().zip(other.strands.iter()) {
            let (mut times, mut points) = a.rescaled(&zero, &half);
            let (t2, p2) = b.rescaled(&half, &one);
            times.extend(t2.into_iter().skip(1));
            points.extend(p2.into_iter().skip(1));
            strands.push(Strand { times, points });
        }
        PureBraid::new(strands)
    }

    /// The braid run backwards in time.
    pub fn reversed(&self) -> PureBraid {
        let one = Rational::one();
        let strands = self
            .strands
            .iter()
            .map(|s| Strand {
                times: s.times.iter().rev().map(|t| &one - t).collect(),
                points: s.points.iter().rev().cloned().collect(),
            })
            .collect();
        PureBraid { strands }
    }
}

/// The earliest time at which two strands meet, if any.
fn first_meeting(a: &Strand, b: &Strand) -> Option<Rational> {
    let grid = merge_times(a.times(), b.times());
    let mut best: Option<Rational> = None;
    for w in grid.windows(2) {
        let (t0, t1) = (&w[0], &w[1]);
        let pa0 = a.position(t0);
        let pa1 = a.position(t1);
        let pb0 = b.position(t0);
        let pb1 = b.position(t1);
        // Relative motion is linear on the piece: Δ(s) = Δ0 + s·(Δ1 − Δ0).
        let d0 = Vector::new(&pb0.x - &pa0.x, &pb0.y - &pa0.y);
        let d1 = Vector::new(&pb1.x - &pa1.x, &pb1.y - &pa1.y);
        if let Some(s) = zero_of_linear_vector(&d0, &d1) {
            let t = t0 + &(&s * &(t1 - t0));
            if best.as_ref().map(|b| t < *b).unwrap_or(true) {
                best = Some(t);
            }
        }
    }
    best
}

/// The parameter `s ∈ [0,1]` with `d0 + s (d1 − d0) = 0`, when it exists.
fn zero_of_linear_vector(d0: &Vector, d1: &Vector) -> Option<Rational> {
    let ex = &d1.x - &d0.x;
    let ey = &d1.y - &d0.y;
    let zero = Rational::zero();
    let one = Rational::one();
    let sx: Option<Rational> = if ex.is_zero() {
        if d0.x.is_zero() {
            None // x vanishes identically
        } else {
            return None; // x never vanishes
        }
    } else {
        Some(-&d0.x / &ex)
    };
    let sy: Option<Rational> = if ey.is_zero() {
        if d0.y.is_zero() {
            None
        } else {
            return None;
        }
    } else {
        Some(-&d0.y / &ey)
    };
    let s = match (sx, sy) {
        (Some(sx), Some(sy)) => {
            if sx != sy {
                return None;
            }
            sx
        }
        (Some(s), None) | (None, Some(s)) => s,
        (None, None) => zero.clone(), // identically zero: collision everywhere
    };
    if s >= zero && s <= one {
        Some(s)
    } else {
        None
    }
}

pub(crate) fn merge_times(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.iter().chain(b.iter()).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// Deterministically jitter the interior breakpoint times of every strand
/// by distinct tiny rationals derived from `seed`. The strand paths are
/// unchanged as point sets; only the schedule moves, which is how callers
/// resolve `NonGenericProjection` before re-running [`braid_word`]. The
/// result is re-validated: a collision introduced by the retiming is
/// reported so the caller can try another seed.
pub fn time_jitter(braid: &PureBraid, seed: u64) -> Result<PureBraid, BraidError> {
    // Smallest gap between consecutive breakpoints bounds the jitter.
    let mut min_gap: Option<Rational> = None;
    for s in braid.strands() {
        for w in s.times().windows(2) {
            let g = &w[1] - &w[0];
            if min_gap.as_ref().map(|m| g < *m).unwrap_or(true) {
                min_gap = Some(g);
            }
        }
    }
    let Some(gap) = min_gap else {
        return Ok(braid.clone());
    };
    let amplitude = gap / crate::geom::rat(4);
    let strands = braid
        .strands()
        .iter()
        .enumerate()
        .map(|(si, s)| {
            let m = s.times().len();
            let times: Vec<Rational> = s
                .times()
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    if i == 0 || i == m - 1 {
                        return t.clone();
                    }
                    let h = mix(seed, si as u64, i as u64);
                    // h in (-1024, 1024) \ {0}, scaled into (−amp, amp).
                    t + &(&amplitude * crate::geom::ratio(h, 1024))
                })
                .collect();
            Strand::new(times, s.points().to_vec())
        })
        .collect::<Result<Vec<_>, _>>()?;
    PureBraid::new(strands)
}

fn mix(seed: u64, a: u64, b: u64) -> i64 {
    let mut x = seed
        .wrapping_mul(0x9e3779b97f4a7c15)
        .wrapping_add(a.wrapping_mul(0xbf58476d1ce4e5b9))
        .wrapping_add(b.wrapping_mul(0x94d049bb133111eb));
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58476d1ce4e5b9);
    x ^= x >> 27;
    let k = (x % 1023) as i64 + 1; // 1..=1023
    if (x >> 10) & 1 == 0 {
        k
    } else {
        -k
    }
}

/// Errors from braid construction and analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidError {
    Malformed(String),
    Collision(Collision),
    /// The x-projection is not generic; the witness is an offending time.
    NonGenericProjection { t: Rational, detail: String },
    SameStrand,
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::Malformed(s) => write!(f, "malformed braid: {s}"),
            BraidError::Collision(c) => {
                write!(f, "strands {} and {} collide at t = {}", c.i, c.j, c.t)
            }
            BraidError::NonGenericProjection { t, detail } => {
                write!(f, "non-generic x-projection at t = {t}: {detail}")
            }
            BraidError::SameStrand => write!(f, "linking number needs two distinct strands"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BraidError {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, ratio};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn constant_strands_are_valid() {
        let b = PureBraid::new(alloc::vec![
            Strand::constant(pt(0, 0)),
            Strand::constant(pt(1, 0)),
        ])
        .unwrap();
        assert!(b.validate().is_none());
    }

    #[test]
    fn crossing_straight_lines_collide() {
        let s1 = Strand::new(
            alloc::vec![rat(0), ratio(1, 2), rat(1)],
            alloc::vec![pt(0, 0), pt(2, 0), pt(0, 0)],
        )
        .unwrap();
        let s2 = Strand::new(
            alloc::vec![rat(0), ratio(1, 2), rat(1)],
            alloc::vec![pt(2, 0), pt(0, 0), pt(2, 0)],
        )
        .unwrap();
        match PureBraid::new(alloc::vec![s1, s2]) {
            Err(BraidError::Collision(c)) => {
                assert_eq!(c.t, ratio(1, 4));
                assert_eq!((c.i, c.j), (0, 1));
            }
            other => panic!("expected a collision, got {other:?}"),
        }
    }

    #[test]
    fn half_turn_apart_orbits_are_fine() {
        // Two strands a half-turn apart on a square orbit never meet.
        let sq = |k: usize| -> Vec<Point> {
            let cycle = [pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)];
            (0..=4).map(|i| cycle[(i + k) % 4].clone()).collect()
        };
        let times: Vec<Rational> =
            alloc::vec![rat(0), ratio(1, 4), ratio(1, 2), ratio(3, 4), rat(1)];
        let s1 = Strand::new(times.clone(), sq(0)).unwrap();
        let s2 = Strand::new(times, sq(2)).unwrap();
        assert!(PureBraid::new(alloc::vec![s1, s2]).is_ok());
    }

    #[test]
    fn position_interpolates() {
        let s = Strand::new(
            alloc::vec![rat(0), ratio(1, 2), rat(1)],
            alloc::vec![pt(0, 0), pt(4, 2), pt(0, 0)],
        )
        .unwrap();
        assert_eq!(s.position(&ratio(1, 4)), pt(2, 1));
        assert_eq!(s.position(&ratio(1, 2)), pt(4, 2));
        assert_eq!(s.position(&rat(1)), pt(0, 0));
    }
}
