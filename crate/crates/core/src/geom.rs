//! Exact planar primitives over arbitrary-precision rationals.


use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The coordinate type used everywhere in this crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for a rational fraction `p/q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn sub(&self, other: &Point) -> Vector {
        Vector {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn add(&self, v: &Vector) -> Point {
        Point {
            x: &self.x + &v.x,
            y: &self.y + &v.y,
        }
    }

    /// Affine interpolation `(1-t)·self + t·other`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        let s = Rational::one() - t;
        Point {
            x: &s * &self.x + t * &other.x,
            y: &s * &self.y + t * &other.y,
        }
    }
}

/// An exact displacement vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    pub x: Rational,
    pub y: Rational,
}

impl Vector {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vector { x, y }
    }

    pub fn cross(&self, other: &Vector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Left-hand perpendicular (rotation by +90°).
    pub fn perp(&self) -> Vector {
        Vector {
            x: -self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector {
            x: &self.x * s,
            y: &self.y * s,
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    /// L1 norm, used as a rational stand-in for length when scaling offsets.
    pub fn l1(&self) -> Rational {
        self.x.abs() + self.y.abs()
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }
}

/// Orientation of the triple `(a, b, c)`: positive = counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    b.sub(a).cross(&c.sub(a)).cmp(&Rational::zero())
}

/// A closed segment with exact endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn dir(&self) -> Vector {
        self.b.sub(&self.a)
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    /// Does the closed segment contain `p`?
    pub fn contains_point(&self, p: &Point) -> bool {
        let d = self.dir();
        let ap = p.sub(&self.a);
        if !d.cross(&ap).is_zero() {
            return false;
        }
        let t = ap.dot(&d);
        !t.is_negative() && t <= d.norm_sq()
    }

    /// Squared Euclidean distance from `p` to the segment.
    pub fn dist_sq_to_point(&self, p: &Point) -> Rational {
        let d = self.dir();
        let n2 = d.norm_sq();
        if n2.is_zero() {
            return p.sub(&self.a).norm_sq();
        }
        let t = p.sub(&self.a).dot(&d) / &n2;
        let t = clamp01(t);
        p.sub(&self.a.lerp(&self.b, &t)).norm_sq()
    }

    /// Squared distance between two segments (0 when they intersect).
    pub fn dist_sq_to_segment(&self, other: &Segment) -> Rational {
        if !matches!(
            intersect_segments(self, other),
            SegSegIntersection::Disjoint
        ) {
            return Rational::zero();
        }
        let mut best = self.dist_sq_to_point(&other.a);
        for d in [
            self.dist_sq_to_point(&other.b),
            other.dist_sq_to_point(&self.a),
            other.dist_sq_to_point(&self.b),
        ] {
            if d < best {
                best = d;
            }
        }
        best
    }
}

fn clamp01(t: Rational) -> Rational {
    if t.is_negative() {
        Rational::zero()
    } else if t > Rational::one() {
        Rational::one()
    } else {
        t
    }
}

/// Classification of a segment/segment intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegSegIntersection {
    Disjoint,
    /// A single intersection point, with the parameters along each segment.
    Point {
        p: Point,
        t: Rational,
        u: Rational,
    },
    /// Collinear segments sharing a positive-length overlap.
    Overlap {
        from: Point,
        to: Point,
    },
}

/// Quick bounding-box rejection for segment pairs.
pub fn bboxes_may_touch(s1: &Segment, s2: &Segment) -> bool {
    let (a1x, b1x) = if s1.a.x <= s1.b.x { (&s1.a.x, &s1.b.x) } else { (&s1.b.x, &s1.a.x) };
    let (a2x, b2x) = if s2.a.x <= s2.b.x { (&s2.a.x, &s2.b.x) } else { (&s2.b.x, &s2.a.x) };
    if b1x < a2x || b2x < a1x {
        return false;
    }
    let (a1y, b1y) = if s1.a.y <= s1.b.y { (&s1.a.y, &s1.b.y) } else { (&s1.b.y, &s1.a.y) };
    let (a2y, b2y) = if s2.a.y <= s2.b.y { (&s2.a.y, &s2.b.y) } else { (&s2.b.y, &s2.a.y) };
    !(b1y < a2y || b2y < a1y)
}

/// Exact intersection of two closed segments.
pub fn intersect_segments(s1: &Segment, s2: &Segment) -> SegSegIntersection {
    let d1 = s1.dir();
    let d2 = s2.dir();
    let w = s2.a.sub(&s1.a);
    let denom = d1.cross(&d2);
    if !denom.is_zero() {
        let t = w.cross(&d2) / &denom;
        let u = w.cross(&d1) / &denom;
        let zero = Rational::zero();
        let one = Rational::one();
        if t >= zero && t <= one && u >= zero && u <= one {
            let p = s1.a.lerp(&s1.b, &t);
            return SegSegIntersection::Point { p, t, u };
        }
        return SegSegIntersection::Disjoint;
    }
    // Parallel.
    if !w.cross(&d1).is_zero() {
        return SegSegIntersection::Disjoint;
    }
    // Collinear: project onto the dominant axis of d1 (or handle points).
    if d1.is_zero() && d2.is_zero() {
        if s1.a == s2.a {
            return SegSegIntersection::Point {
                p: s1.a.clone(),
                t: Rational::zero(),
                u: Rational::zero(),
            };
        }
        return SegSegIntersection::Disjoint;
    }
    let key = |p: &Point| -> Rational {
        if d1.x.is_zero() && d1.y.is_zero() {
            if d2.x.abs() >= d2.y.abs() {
                p.x.clone()
            } else {
                p.y.clone()
            }
        } else if d1.x.abs() >= d1.y.abs() {
            p.x.clone()
        } else {
            p.y.clone()
        }
    };
    let (lo1, hi1) = minmax(key(&s1.a), key(&s1.b));
    let (lo2, hi2) = minmax(key(&s2.a), key(&s2.b));
    let lo = if lo1 >= lo2 { lo1 } else { lo2 };
    let hi = if hi1 <= hi2 { hi1 } else { hi2 };
    match lo.cmp(&hi) {
        Ordering::Greater => SegSegIntersection::Disjoint,
        Ordering::Equal => {
            let p = point_at_key(s1, &lo);
            SegSegIntersection::Point {
                p,
                t: Rational::zero(),
                u: Rational::zero(),
            }
        }
        Ordering::Less => {
            let from = point_at_key(s1, &lo);
            let to = point_at_key(s1, &hi);
            SegSegIntersection::Overlap { from, to }
        }
    }
}

fn minmax(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Point on a (non-degenerate) segment whose dominant-axis coordinate is `k`.
fn point_at_key(s: &Segment, k: &Rational) -> Point {
    let d = s.dir();
    if d.is_zero() {
        return s.a.clone();
    }
    let t = if d.x.abs() >= d.y.abs() {
        (k - &s.a.x) / &d.x
    } else {
        (k - &s.a.y) / &d.y
    };
    s.a.lerp(&s.b, &t)
}

/// Angular comparison of two nonzero vectors, counterclockwise from the
/// positive x axis. Exact: quadrant class first, then a cross product.
pub fn cmp_angle(u: &Vector, v: &Vector) -> Ordering {
    let hu = half(u);
    let hv = half(v);
    hu.cmp(&hv).then_with(|| {
        let c = u.cross(v);
        // c > 0 means u is angularly before v.
        Rational::zero().cmp(&c)
    })
}

fn half(v: &Vector) -> u8 {
    debug_assert!(!v.is_zero());
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Winding number of a closed polygonal chain around `p`.
///
/// `poly` is interpreted cyclically. The point must not lie on the chain
/// (use [`polygon_contains_on_boundary`] first when unsure). Crossings of
/// the upward vertical ray of `p` are counted with the half-open rule, with
/// sign +1 for a right-to-left crossing, so counterclockwise loops get +1.
pub fn winding_number(poly: &[Point], p: &Point) -> i64 {
    let mut w = 0i64;
    let n = poly.len();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        w += ray_crossing(a, b, p);
    }
    w
}

/// Signed upward-ray crossing contribution of the segment `a -> b` for the
/// ray based at `p`. +1 when the segment crosses right-to-left above `p`.
pub fn ray_crossing(a: &Point, b: &Point, p: &Point) -> i64 {
    let la = a.x <= p.x;
    let lb = b.x <= p.x;
    if la == lb {
        return 0;
    }
    // The segment straddles the vertical line x = p.x; find the crossing height.
    let d = b.sub(a);
    let t = (&p.x - &a.x) / &d.x;
    let y = &a.y + &(&t * &d.y);
    if y > p.y {
        // Crossing above the point: left-to-right (x increasing) is clockwise.
        if la {
            -1
        } else {
            1
        }
    } else {
        0
    }
}

/// Does `p` lie on the closed polygonal chain (cyclic)?
pub fn polygon_contains_on_boundary(poly: &[Point], p: &Point) -> bool {
    let n = poly.len();
    for i in 0..n {
        let s = Segment::new(poly[i].clone(), poly[(i + 1) % n].clone());
        if s.contains_point(p) {
            return true;
        }
    }
    false
}

/// Twice the signed area of a closed polygonal chain.
pub fn signed_area2(poly: &[Point]) -> Rational {
    let mut acc = Rational::zero();
    let n = poly.len();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

/// A point in the strict interior of a simple polygon.
///
/// Standard construction: take the lowest-then-leftmost vertex `v` (convex
/// there), and either the centroid of the ear `(prev, v, next)` or the
/// midpoint towards the deepest reflex vertex inside that ear.
pub fn interior_point_of_simple_polygon(poly: &[Point]) -> Point {
    let n = poly.len();
    debug_assert!(n >= 3);
    let mut vi = 0;
    for i in 1..n {
        let better = (&poly[i].y, &poly[i].x) < (&poly[vi].y, &poly[vi].x);
        if better {
            vi = i;
        }
    }
    let prev = &poly[(vi + n - 1) % n];
    let v = &poly[vi];
    let next = &poly[(vi + 1) % n];
    // Deepest other vertex strictly inside triangle (prev, v, next).
    let mut best: Option<(Rational, &Point)> = None;
    for (i, q) in poly.iter().enumerate() {
        if i == vi || i == (vi + 1) % n || i == (vi + n - 1) % n {
            continue;
        }
        if point_strictly_in_triangle(prev, v, next, q) {
            // Distance from the chord prev-next, up to a common positive factor.
            let d = next.sub(prev).cross(&q.sub(prev)).abs();
            if best.as_ref().map(|(bd, _)| d > *bd).unwrap_or(true) {
                best = Some((d, q));
            }
        }
    }
    let half = ratio(1, 2);
    match best {
        Some((_, q)) => v.lerp(q, &half),
        None => {
            let third = ratio(1, 3);
            Point {
                x: (&prev.x + &v.x + &next.x) * &third,
                y: (&prev.y + &v.y + &next.y) * &third,
            }
        }
    }
}

fn point_strictly_in_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    let o = orient(a, b, c);
    if o == Ordering::Equal {
        return false;
    }
    let s1 = orient(a, b, p);
    let s2 = orient(b, c, p);
    let s3 = orient(c, a, p);
    s1 == o && s2 == o && s3 == o
}

/// Minimum of `1` and `v`, divided by 4: a cheap rational lower bound `r`
/// with `r² ≤ v/4`, i.e. `r ≤ sqrt(v)/2`, for positive `v`.
pub fn quarter_sqrt_lower_bound(v: &Rational) -> Rational {
    let one = Rational::one();
    let m = if *v >= one { one } else { v.clone() };
    m / rat(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn segment_intersection_point() {
        let s1 = Segment::new(pt(0, 0), pt(2, 2));
        let s2 = Segment::new(pt(0, 2), pt(2, 0));
        match intersect_segments(&s1, &s2) {
            SegSegIntersection::Point { p, .. } => assert_eq!(p, Point::new(rat(1), rat(1))),
            other => panic!("expected point intersection, got {other:?}"),
        }
    }

    #[test]
    fn segment_intersection_overlap() {
        let s1 = Segment::new(pt(0, 0), pt(4, 0));
        let s2 = Segment::new(pt(2, 0), pt(6, 0));
        match intersect_segments(&s1, &s2) {
            SegSegIntersection::Overlap { from, to } => {
                assert_eq!(from, pt(2, 0));
                assert_eq!(to, pt(4, 0));
            }
            other => panic!("expected overlap, got {other:?}"),
        }
    }

    #[test]
    fn segment_touch_is_point() {
        let s1 = Segment::new(pt(0, 0), pt(2, 0));
        let s2 = Segment::new(pt(2, 0), pt(4, 0));
        match intersect_segments(&s1, &s2) {
            SegSegIntersection::Point { p, .. } => assert_eq!(p, pt(2, 0)),
            other => panic!("expected touch point, got {other:?}"),
        }
    }

    #[test]
    fn winding_ccw_square() {
        let sq = [pt(1, -1), pt(1, 1), pt(-1, 1), pt(-1, -1)];
        assert_eq!(winding_number(&sq, &pt(0, 0)), 1);
        assert_eq!(winding_number(&sq, &pt(3, 0)), 0);
        let cw: Vec<Point> = sq.iter().rev().cloned().collect();
        assert_eq!(winding_number(&cw, &pt(0, 0)), -1);
    }

    #[test]
    fn winding_vertex_on_line_counts_once() {
        // Diamond whose top vertex is exactly on the ray of the origin.
        let poly = [pt(1, 0), pt(0, 2), pt(-1, 0), pt(0, -2)];
        assert_eq!(winding_number(&poly, &pt(0, 0)), 1);
    }

    #[test]
    fn angle_order() {
        let e = Vector::new(rat(1), rat(0));
        let n = Vector::new(rat(0), rat(1));
        let w = Vector::new(rat(-1), rat(0));
        let s = Vector::new(rat(0), rat(-1));
        assert_eq!(cmp_angle(&e, &n), Ordering::Less);
        assert_eq!(cmp_angle(&n, &w), Ordering::Less);
        assert_eq!(cmp_angle(&w, &s), Ordering::Less);
        assert_eq!(cmp_angle(&e, &e), Ordering::Equal);
    }

    #[test]
    fn interior_point_nonconvex() {
        // L-shaped polygon.
        let poly = [pt(0, 0), pt(4, 0), pt(4, 1), pt(1, 1), pt(1, 4), pt(0, 4)];
        let p = interior_point_of_simple_polygon(&poly);
        assert_eq!(winding_number(&poly, &p).abs(), 1);
        assert!(!polygon_contains_on_boundary(&poly, &p));
    }

    #[test]
    fn area_sign() {
        let sq = [pt(1, -1), pt(1, 1), pt(-1, 1), pt(-1, -1)];
        assert!(signed_area2(&sq).is_positive());
    }
}
