//! Shared test support: the geometric transport oracle for the Artin
//! action, and corpus generators used by the acceptance suite.
#![allow(dead_code)]

use bigonkit::braid::BraidWord;
use bigonkit::curves::{crossing_word, validate_general_position, PLPath, PunctureSet};
use bigonkit::freegroup::Word;
use bigonkit::geom::{rat, ratio, Point, Rational, Segment};
use num_traits::{Signed, Zero};

/// The canonical slab motion of a braid word on `n` points based at
/// `(1,0) … (n,0)`: a list of phases; each phase moves some punctures
/// simultaneously along straight segments.
pub struct Phase {
    /// (puncture slot occupant index, from, to); punctures not listed stay.
    pub moves: Vec<(usize, Point, Point)>,
}

pub fn word_motion(word: &BraidWord, n: usize) -> (Vec<Point>, Vec<Phase>) {
    let bases: Vec<Point> = (1..=n as i64).map(|i| Point::from_ints(i, 0)).collect();
    let mut slot_of: Vec<usize> = (0..n).collect(); // slot_of[strand] = slot
    let mut phases = Vec::new();
    for l in &word.letters {
        let li = l.index - 1;
        let left = slot_of.iter().position(|&s| s == li).unwrap();
        let right = slot_of.iter().position(|&s| s == li + 1).unwrap();
        let (yl, yr) = if l.positive {
            (ratio(1, 2), ratio(-1, 2))
        } else {
            (ratio(-1, 2), ratio(1, 2))
        };
        let xm = ratio(2 * li as i64 + 3, 2);
        let a_l = Point::from_ints(li as i64 + 1, 0);
        let m_l = Point::new(xm.clone(), yl);
        let b_l = Point::from_ints(li as i64 + 2, 0);
        let a_r = Point::from_ints(li as i64 + 2, 0);
        let m_r = Point::new(xm, yr);
        let b_r = Point::from_ints(li as i64 + 1, 0);
        phases.push(Phase {
            moves: vec![(left, a_l, m_l.clone()), (right, a_r, m_r.clone())],
        });
        phases.push(Phase {
            moves: vec![(left, m_l, b_l), (right, m_r, b_r)],
        });
        slot_of.swap(left, right);
    }
    (bases, phases)
}

/// Transport the curve through one straight push of a single point from
/// `a` to `b`, by the star map of the box around the displacement.
pub fn star_push(curve: &mut Vec<Point>, a: &Point, b: &Point, margin: &Rational) {
    if a == b {
        return;
    }
    // Axis box around {a, b} inflated by margin, corners counterclockwise
    // from the bottom-left.
    let (lo_x, hi_x) = ordered(&a.x, &b.x);
    let (lo_y, hi_y) = ordered(&a.y, &b.y);
    let lo_x = lo_x - margin;
    let hi_x = hi_x + margin;
    let lo_y = lo_y - margin;
    let hi_y = hi_y + margin;
    let corners = [
        Point::new(lo_x.clone(), lo_y.clone()),
        Point::new(hi_x.clone(), lo_y.clone()),
        Point::new(hi_x.clone(), hi_y.clone()),
        Point::new(lo_x.clone(), hi_y.clone()),
    ];
    let outside_box = |p: &Point| -> bool {
        p.x < lo_x || p.x > hi_x || p.y < lo_y || p.y > hi_y
    };
    // Split the curve at crossings with the box sides and the four spokes
    // from `a`; segments with both ends outside the box and a bounding box
    // disjoint from it are untouched.
    let mut lines: Vec<Segment> = Vec::new();
    for i in 0..4 {
        lines.push(Segment::new(corners[i].clone(), corners[(i + 1) % 4].clone()));
        lines.push(Segment::new(a.clone(), corners[i].clone()));
    }
    let mut split: Vec<Point> = Vec::new();
    let n = curve.len();
    for i in 0..n {
        let p0 = &curve[i];
        let p1 = &curve[(i + 1) % n];
        let seg_clear = {
            let (sx0, sx1) = ordered(&p0.x, &p1.x);
            let (sy0, sy1) = ordered(&p0.y, &p1.y);
            sx1 < lo_x || sx0 > hi_x || sy1 < lo_y || sy0 > hi_y
        };
        if seg_clear {
            if split.last() != Some(p0) {
                split.push(p0.clone());
            }
            continue;
        }
        let s = Segment::new(p0.clone(), p1.clone());
        let mut ts: Vec<Rational> = vec![Rational::zero()];
        for l in &lines {
            match bigonkit::geom::intersect_segments(&s, l) {
                bigonkit::geom::SegSegIntersection::Point { t, .. } => {
                    if t > Rational::zero() && t < rat(1) {
                        ts.push(t);
                    }
                }
                bigonkit::geom::SegSegIntersection::Overlap { from, to } => {
                    for p in [&from, &to] {
                        let d = s.dir();
                        let t = if d.x.abs() >= d.y.abs() {
                            (&p.x - &s.a.x) / &d.x
                        } else {
                            (&p.y - &s.a.y) / &d.y
                        };
                        if t > Rational::zero() && t < rat(1) {
                            ts.push(t);
                        }
                    }
                }
                bigonkit::geom::SegSegIntersection::Disjoint => {}
            }
        }
        ts.sort();
        ts.dedup();
        for t in ts {
            let p = s.a.lerp(&s.b, &t);
            if split.last() != Some(&p) {
                split.push(p);
            }
        }
    }
    while split.len() >= 2 && split.first() == split.last() {
        split.pop();
    }
    // Map every point; points outside the box are fixed.
    let mapped: Vec<Point> = split
        .iter()
        .map(|p| {
            if outside_box(p) {
                p.clone()
            } else {
                star_map(p, a, b, &corners)
            }
        })
        .collect();
    *curve = mapped;
}

pub fn ordered(u: &Rational, v: &Rational) -> (Rational, Rational) {
    if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

/// The star map: identity outside the box; inside, the triangle
/// `(a, ci, cj)` maps affinely onto `(b, ci, cj)`.
pub fn star_map(p: &Point, a: &Point, b: &Point, corners: &[Point; 4]) -> Point {
    // Outside or on the boundary of the box: fixed.
    let inside = p.x > corners[0].x
        && p.x < corners[2].x
        && p.y > corners[0].y
        && p.y < corners[2].y;
    if !inside || p == a {
        return if p == a { b.clone() } else { p.clone() };
    }
    for i in 0..4 {
        let ci = &corners[i];
        let cj = &corners[(i + 1) % 4];
        // Barycentric coordinates of p in triangle (a, ci, cj).
        let v0 = ci.sub(a);
        let v1 = cj.sub(a);
        let vp = p.sub(a);
        let det = v0.cross(&v1);
        let beta = vp.cross(&v1) / &det;
        let gamma = v0.cross(&vp) / &det;
        let alpha = rat(1) - &beta - &gamma;
        if beta.is_negative() || gamma.is_negative() || alpha.is_negative() {
            continue;
        }
        return Point::new(
            &(&alpha * &b.x) + &(&beta * &ci.x) + &(&gamma * &cj.x),
            &(&alpha * &b.y) + &(&beta * &ci.y) + &(&gamma * &cj.y),
        );
    }
    unreachable!("box interior is covered by the four star triangles");
}

pub fn merge_collinear_cyclic(pts: &[Point]) -> Vec<Point> {
    let mut cur: Vec<Point> = pts.to_vec();
    loop {
        let n = cur.len();
        if n < 4 {
            return cur;
        }
        let mut removed = false;
        let mut out: Vec<Point> = Vec::with_capacity(n);
        for i in 0..n {
            let prev = &cur[(i + n - 1) % n];
            let v = &cur[i];
            let next = &cur[(i + 1) % n];
            let d1 = v.sub(prev);
            let d2 = next.sub(v);
            if !removed && d1.cross(&d2).is_zero() && d1.dot(&d2).is_positive() {
                removed = true;
                continue;
            }
            out.push(v.clone());
        }
        if !removed {
            return out;
        }
        cur = out;
    }
}

/// Transport the loop through the whole motion; returns the final loop.
///
/// Punctures are pushed one at a time. A whole phase displacement is done
/// in one push when its inflated box provably avoids every other puncture;
/// otherwise that displacement falls back to fine sub-steps.
pub fn transport(mut curve: Vec<Point>, phases: &[Phase], n: usize, bases: &[Point]) -> Vec<Point> {
    let mut pos: Vec<Point> = bases.to_vec();
    for phase in phases {
        for (k, from, to) in &phase.moves {
            pos[*k] = to.clone();
            if from == to {
                continue;
            }
            // Clearance of the other punctures from the displacement box.
            let (lo_x, hi_x) = ordered(&from.x, &to.x);
            let (lo_y, hi_y) = ordered(&from.y, &to.y);
            let mut clear: Option<Rational> = None;
            for (o, p) in pos.iter().enumerate() {
                if o == *k {
                    continue;
                }
                let dx = if p.x < lo_x {
                    lo_x.clone() - &p.x
                } else if p.x > hi_x {
                    p.x.clone() - &hi_x
                } else {
                    Rational::zero()
                };
                let dy = if p.y < lo_y {
                    lo_y.clone() - &p.y
                } else if p.y > hi_y {
                    p.y.clone() - &hi_y
                } else {
                    Rational::zero()
                };
                let d = if dx >= dy { dx } else { dy };
                if clear.as_ref().map(|c| d < *c).unwrap_or(true) {
                    clear = Some(d);
                }
            }
            let clear = clear.unwrap_or_else(|| rat(1));
            if clear.is_positive() {
                // One push with margin strictly inside the clearance.
                let margin = clear / rat(2);
                star_push(&mut curve, from, to, &margin);
            } else {
                // Fine sub-steps: shrink until each step box is clear of
                // the (static) other punctures.
                let others: Vec<Point> = pos
                    .iter()
                    .enumerate()
                    .filter(|(o, _)| o != k)
                    .map(|(_, p)| p.clone())
                    .collect();
                let mut dmin: Option<Rational> = None;
                for p in &others {
                    let dseg = Segment::new(from.clone(), to.clone()).dist_sq_to_point(p);
                    if dmin.as_ref().map(|m| dseg < *m).unwrap_or(true) {
                        dmin = Some(dseg);
                    }
                }
                let gap = bigonkit::geom::quarter_sqrt_lower_bound(
                    &dmin.expect("another puncture exists"),
                );
                assert!(gap.is_positive(), "puncture motion hits another puncture");
                let d = from.sub(to);
                let len = if d.x.abs() >= d.y.abs() { d.x.abs() } else { d.y.abs() };
                let q = (len / &gap).ceil();
                let steps = num_traits::ToPrimitive::to_usize(q.numer()).unwrap().max(1);
                for step in 0..steps {
                    let t0 = ratio(step as i64, steps as i64);
                    let t1 = ratio(step as i64 + 1, steps as i64);
                    let a = from.lerp(to, &t0);
                    let b = from.lerp(to, &t1);
                    star_push(&mut curve, &a, &b, &(gap.clone() / rat(2)));
                }
            }
        }
        let pruned = merge_collinear_cyclic(&curve);
        curve = pruned;
    }
    curve
}

/// Ensure the final loop is in general position against the punctures;
/// corner-cut any vertex sitting on a ray (class-preserving, the cut
/// triangle avoids every puncture).
pub fn fix_general_position(curve: &mut Vec<Point>, punctures: &PunctureSet) {
    'outer: for _ in 0..64 {
        let n = curve.len();
        for i in 0..n {
            let v = &curve[i];
            let offending = punctures
                .iter()
                .any(|p| v.x == p.x && v.y > p.y);
            if offending {
                let prev = curve[(i + n - 1) % n].clone();
                let next = curve[(i + 1) % n].clone();
                let mut eps = ratio(1, 4);
                for _ in 0..64 {
                    let a = v.lerp(&prev, &eps);
                    let b = v.lerp(&next, &eps);
                    let tri = [a.clone(), v.clone(), b.clone()];
                    let clean = punctures.iter().all(|p| {
                        !bigonkit::geom::polygon_contains_on_boundary(&tri, p)
                            && bigonkit::geom::winding_number(&tri, p) == 0
                    }) && a != b;
                    if clean {
                        let mut out = curve.clone();
                        out[i] = a;
                        out.insert(i + 1, b);
                        *curve = out;
                        continue 'outer;
                    }
                    eps /= rat(2);
                }
                panic!("could not cut the offending corner");
            }
        }
        return;
    }
    panic!("general position fixer did not converge");
}

/// The geometric generator loop around puncture `k` (1-based), based
/// below: the *clockwise* loop, whose class is the braid-action generator.
/// (With upward rays the compactly supported motions preserve the product
/// of the clockwise letters read left to right, which is exactly what the
/// substitution rules preserve.)
pub fn generator_loop(k: usize, n: usize) -> Vec<Point> {
    let m = n as i64 + 1;
    let third = ratio(1, 3);
    let k = k as i64;
    vec![
        Point::new(ratio(1, 2), rat(-m)),
        Point::new(rat(k) - &third, rat(-1)),
        Point::new(rat(k) - &third, third.clone()),
        Point::new(rat(k) + &third, third),
        Point::new(rat(k) + &ratio(1, 3), rat(-1)),
    ]
}

/// Express a crossing word in the clockwise generators: flip every letter.
pub fn to_cw_generators(w: &Word) -> Word {
    Word::reduce(w.letters().iter().map(|l| l.inverse()))
}

/// Oracle: the image of every generator under the braid word, by geometric
/// transport. Returns words over the free group on `n` generators.
pub fn oracle_images(word: &BraidWord, n: usize) -> Vec<Word> {
    let (bases, phases) = word_motion(word, n);
    let punctures = PunctureSet::new(bases.clone()).unwrap();
    (1..=n)
        .map(|k| {
            let loop0 = generator_loop(k, n);
            let mut moved = transport(loop0, &phases, n, &bases);
            fix_general_position(&mut moved, &punctures);
            // Read the based word: close the loop back to its basepoint.
            let mut path_pts = moved.clone();
            path_pts.push(moved[0].clone());
            let path = PLPath::new(path_pts).unwrap();
            validate_general_position((&path).into(), &punctures).unwrap();
            to_cw_generators(&crossing_word((&path).into(), &punctures).unwrap())
        })
        .collect()
}

