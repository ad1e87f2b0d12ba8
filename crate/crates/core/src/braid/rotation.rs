//! Rigid-rotation loops realized as exact PL motions.
//!
//! A true circular rotation has irrational orbits. Instead every point
//! slides along the concentric "pinwheel" quadrilateral through it — the
//! scaled copies of the cycle `(1, 1/3), (-1/3, 1), (-1, -1/3), (1/3, -1)`
//! around the center. Sliding all points one full lap is a loop of plane
//! homeomorphisms isotopic to a full rigid turn, so composing a braid with
//! `k` laps changes every pairwise linking number by exactly `k`. The
//! pinwheel has no vertical edge and no vertex above the center, which
//! keeps x-projections recoverable by retiming.

use alloc::vec::Vec;

use crate::geom::{rat, ratio, Point, Rational, Vector};
use num_traits::{Signed, Zero};

use super::{BraidError, PureBraid, Strand};

/// Corners of the unit pinwheel, counterclockwise.
fn unit_corners() -> [Vector; 4] {
    [
        Vector::new(rat(1), ratio(1, 3)),
        Vector::new(ratio(-1, 3), rat(1)),
        Vector::new(rat(-1), ratio(-1, 3)),
        Vector::new(ratio(1, 3), rat(-1)),
    ]
}

/// The braid that slides each base point `k` full laps (counterclockwise
/// for positive `k`) around its concentric pinwheel centred at `center`,
/// with eight breakpoints per lap (corners and edge midpoints).
pub fn rotation_braid(bases: &[Point], k: i64, center: &Point) -> Result<PureBraid, BraidError> {
    if k == 0 {
        return PureBraid::identity(bases.to_vec());
    }
    let strands = bases
        .iter()
        .map(|b| orbit_strand(b, k, center))
        .collect::<Result<Vec<_>, _>>()?;
    PureBraid::new(strands)
}

/// Compose a braid with `k` full turns about `center`: the rotation loop is
/// appended in time. `k = 0` returns the braid unchanged.
pub fn rotation_compose(
    braid: &PureBraid,
    k: i64,
    center: &Point,
) -> Result<PureBraid, BraidError> {
    if k == 0 {
        return Ok(braid.clone());
    }
    let rot = rotation_braid(&braid.base_points(), k, center)?;
    braid.concat(&rot)
}

/// Gauge and parameter of a point relative to the pinwheel family:
/// `(r, s)` with the point on the pinwheel of scale `r` at parameter
/// `s ∈ [0, 8)` (each edge spans 2 parameter units: corner, midpoint).
fn locate(p: &Vector) -> (Rational, Rational) {
    let corners = unit_corners();
    for i in 0..4 {
        let ci = &corners[i];
        let cj = &corners[(i + 1) % 4];
        let det = ci.cross(cj);
        let a = p.cross(cj) / &det;
        let b = ci.cross(p) / &det;
        if !a.is_negative() && !b.is_negative() {
            let r = &a + &b;
            if r.is_zero() {
                return (Rational::zero(), Rational::zero());
            }
            let u = b / &r; // position along edge i, in [0, 1]
            let s = rat(2 * i as i64) + rat(2) * u;
            return (r, s);
        }
    }
    unreachable!("the pinwheel sectors cover the plane");
}

/// Position at parameter `s ∈ [0, 8)` on the pinwheel of scale `r`.
fn position_at(s: &Rational, r: &Rational, center: &Point) -> Point {
    let corners = unit_corners();
    let edge = (s / rat(2)).floor();
    let i: i64 = num_traits::ToPrimitive::to_i64(edge.numer()).unwrap();
    let i = (i.rem_euclid(4)) as usize;
    let u = (s - rat(2 * i as i64)) / rat(2);
    let ci = &corners[i];
    let cj = &corners[(i + 1) % 4];
    let one = rat(1);
    let d = Vector::new(
        (&one - &u) * &ci.x + &u * &cj.x,
        (&one - &u) * &ci.y + &u * &cj.y,
    );
    Point::new(&center.x + &(&d.x * r), &center.y + &(&d.y * r))
}

/// One strand: `k` laps along its pinwheel, with a breakpoint at every
/// corner and edge midpoint passed (eight per lap).
fn orbit_strand(base: &Point, k: i64, center: &Point) -> Result<Strand, BraidError> {
    let rel = base.sub(center);
    if rel.is_zero() {
        return Ok(Strand::constant(base.clone()));
    }
    let (r, s0) = locate(&rel);
    let laps = k.unsigned_abs() as i64;
    let total = rat(8 * laps); // parameter distance travelled
    let dir = if k > 0 { rat(1) } else { rat(-1) };
    // Breakpoints at every integer parameter value passed (corners at even,
    // midpoints at odd values), plus the endpoints.
    let mut progress: Vec<Rational> = alloc::vec![Rational::zero()];
    let mut step = rat(1);
    // First integer strictly ahead of s0 in the direction of travel.
    let first = if k > 0 {
        (s0.floor() + rat(1)) - &s0
    } else {
        &s0 - &s0.floor()
    };
    let first = if first.is_zero() { rat(1) } else { first };
    let mut acc = first;
    while acc < total {
        progress.push(acc.clone());
        acc += &step;
        step = rat(1);
    }
    progress.push(total.clone());
    let mut times = Vec::with_capacity(progress.len());
    let mut points = Vec::with_capacity(progress.len());
    for pr in &progress {
        times.push(pr / &total);
        let s = wrap8(&(&s0 + &(&dir * pr)));
        points.push(position_at(&s, &r, center));
    }
    Strand::new(times, points)
}

fn wrap8(v: &Rational) -> Rational {
    let eight = rat(8);
    let q = (v / &eight).floor();
    v - &(q * eight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{linking_matrix, linking_number};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn locate_round_trips() {
        for (x, y) in [(1, 0), (2, 3), (-1, 1), (0, -2), (-3, -1), (5, 0)] {
            let p = Vector::new(rat(x), rat(y));
            let (r, s) = locate(&p);
            let q = position_at(&s, &r, &pt(0, 0));
            assert_eq!((q.x, q.y), (p.x, p.y), "({x},{y})");
        }
    }

    #[test]
    fn one_turn_links_all_pairs_once() {
        let bases = alloc::vec![pt(1, 0), pt(2, 0), pt(3, 1), pt(-1, -2)];
        let b = rotation_braid(&bases, 1, &pt(0, 0)).unwrap();
        let m = linking_matrix(&b).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(m[i][j], Some(1), "pair {i},{j}");
                }
            }
        }
    }

    #[test]
    fn negative_turns_and_cancellation() {
        let bases = alloc::vec![pt(1, 0), pt(3, 0)];
        let fwd = rotation_braid(&bases, 2, &pt(2, 0)).unwrap();
        assert_eq!(linking_number(&fwd, 0, 1).unwrap(), 2);
        let corrected = rotation_compose(&fwd, -2, &pt(2, 0)).unwrap();
        assert_eq!(linking_number(&corrected, 0, 1).unwrap(), 0);
    }

    #[test]
    fn compose_with_zero_is_identity() {
        let b = PureBraid::identity(alloc::vec![pt(0, 0), pt(1, 0)]).unwrap();
        assert_eq!(rotation_compose(&b, 0, &pt(0, 0)).unwrap(), b);
    }

    #[test]
    fn strand_at_center_stays_put() {
        let bases = alloc::vec![pt(0, 0), pt(2, 1)];
        let b = rotation_braid(&bases, 1, &pt(0, 0)).unwrap();
        assert_eq!(b.strands()[0], Strand::constant(pt(0, 0)));
        assert_eq!(linking_number(&b, 0, 1).unwrap(), 1);
    }

    #[test]
    fn breakpoints_per_lap() {
        let b = rotation_braid(&[pt(5, 0)], 2, &pt(0, 0)).unwrap();
        // Eight integer parameter stops per lap plus the two endpoints.
        assert!(b.strands()[0].times().len() >= 17);
    }
}
