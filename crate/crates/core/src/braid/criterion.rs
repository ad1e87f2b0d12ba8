//! Unlinkedness decisions: braid triviality through the Artin action, and
//! the linking-constancy criterion for finite samples of connected sets.

use alloc::string::String;
use alloc::vec::Vec;

use crate::geom::{rat, Point, Rational};
use num_traits::Zero;

use super::artin::artin_action;
use super::linking::{linking_matrix, linking_number};
use super::rotation::rotation_compose;
use super::word::braid_word;
use super::{BraidError, PureBraid};

/// Is the braid trivial (deformable to the constant braid through pure
/// braids)? Decided through the faithful Artin action of its word.
/// Non-generic projections propagate; the caller perturbs and retries.
pub fn is_trivial(braid: &PureBraid) -> Result<bool, BraidError> {
    let word = braid_word(braid)?;
    Ok(artin_action(&word, braid.len() as u32).is_identity())
}

/// The full unlinkedness report for a finite fixed-point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnlinkedReport {
    pub trivial: bool,
    /// All pairwise linking numbers (all zero is necessary, not sufficient).
    pub linking_matrix: Vec<Vec<Option<i64>>>,
    /// When nontrivial: the first generator whose Artin image moved.
    pub witness: Option<u32>,
}

/// Decide triviality and report the independent linking evidence.
pub fn unlinked_finite(braid: &PureBraid) -> Result<UnlinkedReport, BraidError> {
    let matrix = linking_matrix(braid)?;
    let word = braid_word(braid)?;
    let phi = artin_action(&word, braid.len() as u32);
    let witness = (1..=braid.len() as u32)
        .find(|&g| *phi.image_of_generator(g) != crate::freegroup::Word::generator(g));
    Ok(UnlinkedReport {
        trivial: witness.is_none(),
        linking_matrix: matrix,
        witness,
    })
}

/// Constancy evidence for one component of the modeled connected set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub strands: Vec<usize>,
    /// The common linking number of all in-component pairs, when constant.
    pub constant: Option<i64>,
    /// An offending pair when not constant.
    pub offending: Option<((usize, usize), (usize, usize))>,
}

/// Report of [`connected_set_criterion`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub components: Vec<ComponentReport>,
    /// Single-component case only: triviality of the rotation-corrected
    /// braid, which decides unlinkedness in the sense of the criterion.
    pub unlinked: Option<bool>,
    /// The correction applied in the single-component case.
    pub correction_turns: Option<i64>,
}

/// The finite-sample unlinkedness criterion for strand sets modeling the
/// components of a connected fixed-point set: linking numbers must be
/// constant within each component; with a single component of constant
/// linking `L`, the braid composed with `−L` turns must be trivial.
///
/// Multi-component inputs get the constancy table only; the criterion does
/// not claim the continuum conclusion.
pub fn connected_set_criterion(
    braid: &PureBraid,
    components: &[Vec<usize>],
) -> Result<CriterionReport, BraidError> {
    let n = braid.len();
    let mut seen = alloc::vec![false; n];
    for comp in components {
        for &s in comp {
            if s >= n {
                return Err(BraidError::Malformed(String::from(
                    "component refers to a missing strand",
                )));
            }
            if seen[s] {
                return Err(BraidError::Malformed(String::from(
                    "components must partition the strands",
                )));
            }
            seen[s] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(BraidError::Malformed(String::from(
            "components must cover every strand",
        )));
    }
    let mut reports = Vec::with_capacity(components.len());
    for comp in components {
        let mut constant: Option<i64> = None;
        let mut offending = None;
        let mut first_pair: Option<(usize, usize)> = None;
        'pairs: for (a, &i) in comp.iter().enumerate() {
            for &j in comp.iter().skip(a + 1) {
                let l = linking_number(braid, i, j)?;
                match constant {
                    None => {
                        constant = Some(l);
                        first_pair = Some((i, j));
                    }
                    Some(c) if c != l => {
                        offending = Some((first_pair.unwrap(), (i, j)));
                        constant = None;
                        break 'pairs;
                    }
                    Some(_) => {}
                }
            }
        }
        reports.push(ComponentReport {
            strands: comp.clone(),
            constant,
            offending,
        });
    }
    let (unlinked, correction_turns) = if components.len() == 1 {
        match reports[0].constant {
            Some(l) => {
                let centroid = centroid(&braid.base_points());
                let corrected = rotation_compose(braid, -l, &centroid)?;
                (Some(is_trivial_retimed(&corrected)?), Some(-l))
            }
            None => (Some(false), None),
        }
    } else {
        (None, None)
    };
    Ok(CriterionReport {
        components: reports,
        unlinked,
        correction_turns,
    })
}

/// Triviality with deterministic time-jitter retries on non-generic
/// projections; triviality is invariant under retiming, so any seed that
/// yields a generic projection decides it.
fn is_trivial_retimed(braid: &PureBraid) -> Result<bool, BraidError> {
    match is_trivial(braid) {
        Ok(v) => return Ok(v),
        Err(BraidError::NonGenericProjection { .. }) => {}
        Err(e) => return Err(e),
    }
    for seed in 0..32u64 {
        match super::time_jitter(braid, seed).and_then(|b| is_trivial(&b)) {
            Ok(v) => return Ok(v),
            Err(_) => continue,
        }
    }
    Err(BraidError::Malformed(String::from(
        "could not reach a generic projection by retiming",
    )))
}

fn centroid(points: &[Point]) -> Point {
    let n = rat(points.len() as i64);
    let mut x = Rational::zero();
    let mut y = Rational::zero();
    for p in points {
        x += &p.x;
        y += &p.y;
    }
    Point::new(x / &n, y / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::rotation::rotation_braid;
    use crate::braid::word::BraidWord;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn identity_is_trivial() {
        let b = PureBraid::identity(alloc::vec![pt(1, 0), pt(2, 0), pt(3, 0)]).unwrap();
        assert!(is_trivial(&b).unwrap());
        let r = unlinked_finite(&b).unwrap();
        assert!(r.trivial);
        assert!(r.witness.is_none());
        assert!(r
            .linking_matrix
            .iter()
            .flatten()
            .all(|e| e.is_none() || *e == Some(0)));
    }

    #[test]
    fn sigma_squared_is_not_trivial() {
        let b = BraidWord::parse("s1 s1").unwrap().realize(2).unwrap();
        let r = unlinked_finite(&b).unwrap();
        assert!(!r.trivial);
        assert_eq!(r.witness, Some(1));
        assert_eq!(r.linking_matrix[0][1].unwrap().abs(), 1);
    }

    #[test]
    fn formal_cancellation_is_trivial() {
        let b = BraidWord::parse("s1 s2 s2^-1 s1^-1")
            .unwrap()
            .realize(3)
            .unwrap();
        assert!(is_trivial(&b).unwrap());
    }

    #[test]
    fn collinear_rotation_scenario() {
        // Five collinear points under one full turn: constant linking 1,
        // and the rotation-corrected braid is trivial.
        let bases: Vec<Point> = (1..=5).map(|i| pt(i, 0)).collect();
        let b = rotation_braid(&bases, 1, &pt(3, 0)).unwrap();
        let rep = connected_set_criterion(&b, &[alloc::vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(rep.components[0].constant, Some(1));
        assert_eq!(rep.correction_turns, Some(-1));
        assert_eq!(rep.unlinked, Some(true));
    }

    #[test]
    fn mixed_linking_fails_constancy() {
        // Strand 2 far away does not link with the rotating pair.
        let close = rotation_braid(&[pt(1, 0), pt(2, 0)], 1, &pt(3, 2)).unwrap();
        let far = crate::braid::Strand::constant(pt(50, 0));
        let mut strands = close.strands().to_vec();
        strands.push(far);
        let b = PureBraid::new(strands).unwrap();
        let rep = connected_set_criterion(&b, &[alloc::vec![0, 1, 2]]).unwrap();
        assert_eq!(rep.components[0].constant, None);
        assert!(rep.components[0].offending.is_some());
        assert_eq!(rep.unlinked, Some(false));
    }

    #[test]
    fn identity_any_partition_unlinked() {
        let b = PureBraid::identity(alloc::vec![pt(1, 0), pt(2, 0), pt(3, 0)]).unwrap();
        let rep = connected_set_criterion(&b, &[alloc::vec![0, 1, 2]]).unwrap();
        assert_eq!(rep.components[0].constant, Some(0));
        assert_eq!(rep.unlinked, Some(true));
        let rep2 =
            connected_set_criterion(&b, &[alloc::vec![0, 1], alloc::vec![2]]).unwrap();
        assert!(rep2.unlinked.is_none());
        assert_eq!(rep2.components[0].constant, Some(0));
    }
}
