//! Linking numbers: the net number of turns of the difference vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{Point, Rational, Vector};
use num_traits::Signed;

use super::{merge_times, BraidError, PureBraid};

/// The linking number of strands `i` and `j`: the integer winding of
/// `position_j(t) − position_i(t)` around the origin over a full period,
/// counted by signed crossings of the positive x-axis with the half-open
/// rule (counterclockwise positive). Symmetric in `i` and `j`.
pub fn linking_number(braid: &PureBraid, i: usize, j: usize) -> Result<i64, BraidError> {
    if i == j {
        return Err(BraidError::SameStrand);
    }
    let a = &braid.strands()[i];
    let b = &braid.strands()[j];
    let grid = merge_times(a.times(), b.times());
    let deltas: Vec<Vector> = grid
        .iter()
        .map(|t| {
            let pa = a.position(t);
            let pb = b.position(t);
            Vector::new(&pb.x - &pa.x, &pb.y - &pa.y)
        })
        .collect();
    let mut w = 0i64;
    let n = deltas.len();
    for k in 0..n - 1 {
        w += positive_axis_crossing(&deltas[k], &deltas[(k + 1) % n]);
    }
    Ok(w)
}

/// Signed crossing of the segment `d0 → d1` (in difference space) with the
/// positive x-axis, half-open in y: counts when exactly one endpoint has
/// `y ≤ 0`, at a crossing abscissa `x > 0`; upward crossings (y increasing)
/// are counterclockwise and count +1.
fn positive_axis_crossing(d0: &Vector, d1: &Vector) -> i64 {
    let below0 = !d0.y.is_positive();
    let below1 = !d1.y.is_positive();
    if below0 == below1 {
        return 0;
    }
    let t = -&d0.y / (&d1.y - &d0.y);
    let x = &d0.x + &(&t * &(&d1.x - &d0.x));
    if x.is_positive() {
        if below0 {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// The full symmetric matrix of pairwise linking numbers; the diagonal
/// holds `None`.
pub fn linking_matrix(braid: &PureBraid) -> Result<Vec<Vec<Option<i64>>>, BraidError> {
    let n = braid.len();
    let mut m = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let l = linking_number(braid, i, j)?;
            m[i][j] = Some(l);
            m[j][i] = Some(l);
        }
    }
    Ok(m)
}

/// Test-support oracle material lives in the integration tests; here only
/// the exact quadrant bookkeeping helper is exposed for them.
pub fn difference_samples(braid: &PureBraid, i: usize, j: usize) -> Vec<(Rational, Point)> {
    let a = &braid.strands()[i];
    let b = &braid.strands()[j];
    merge_times(a.times(), b.times())
        .into_iter()
        .map(|t| {
            let pa = a.position(&t);
            let pb = b.position(&t);
            (t, Point::new(&pb.x - &pa.x, &pb.y - &pa.y))
        })
        .collect()
}
