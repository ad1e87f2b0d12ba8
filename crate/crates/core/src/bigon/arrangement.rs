//! Exact planar arrangements of PL curves.
//!
//! Input curves are split at every pairwise intersection; the resulting
//! graph is traced into boundary cycles with the interior kept on the left,
//! and cycles are grouped into faces (an outer cycle plus hole cycles).
//! Everything is rational; face identity is deterministic because vertices
//! and edges are numbered in sorted order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::PunctureSet;
use crate::geom::{
    cmp_angle, intersect_segments, signed_area2, winding_number, Point, Rational,
    SegSegIntersection, Segment, Vector,
};
use num_traits::{Signed, Zero};

/// One input curve: a vertex chain, open or closed.
#[derive(Clone, Debug)]
pub struct InputCurve {
    pub vertices: Vec<Point>,
    pub closed: bool,
}

impl InputCurve {
    pub fn segments(&self) -> Vec<Segment> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        let m = if self.closed { n } else { n - 1 };
        for i in 0..m {
            out.push(Segment::new(
                self.vertices[i].clone(),
                self.vertices[(i + 1) % n].clone(),
            ));
        }
        out
    }
}

/// An undirected arrangement edge: a straight subsegment between vertices.
#[derive(Clone, Debug)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Indices of the input curves this edge lies on (sorted, deduplicated).
    pub owners: Vec<usize>,
}

/// A traced boundary cycle of half-edges (interior on the left).
#[derive(Clone, Debug)]
pub struct Cycle {
    pub half_edges: Vec<usize>,
    pub area2: Rational,
}

/// A face of the arrangement.
#[derive(Clone, Debug)]
pub struct Face {
    /// Outer boundary cycle (positive area); `None` for the unbounded face.
    pub outer: Option<usize>,
    /// Cycles bounding holes or degenerate features inside this face.
    pub holes: Vec<usize>,
    /// Isolated (degree-0) vertices inside this face.
    pub isolated_vertices: Vec<usize>,
    /// Punctures strictly inside this face.
    pub punctures: Vec<usize>,
}

impl Face {
    pub fn bounded(&self) -> bool {
        self.outer.is_some()
    }
}

/// Result of locating a point in the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    OnVertex(usize),
    OnEdge(usize),
    InFace(usize),
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    pub vertices: Vec<Point>,
    pub edges: Vec<Edge>,
    pub cycles: Vec<Cycle>,
    pub faces: Vec<Face>,
    /// Face id of each cycle.
    pub face_of_cycle: Vec<usize>,
    /// For each input curve, its walk as (edge id, forward?) in curve order.
    pub curve_walks: Vec<Vec<(usize, bool)>>,
    /// Cycle id of each half-edge.
    pub cycle_of_half_edge: Vec<usize>,
    /// Sorted curve ids incident to each vertex.
    pub vertex_curves: Vec<Vec<usize>>,
}

/// Half-edge helpers: half-edge `2e` runs a→b of edge `e`, `2e+1` runs b→a.
pub fn he_edge(h: usize) -> usize {
    h / 2
}

pub fn he_twin(h: usize) -> usize {
    h ^ 1
}

impl Arrangement {
    pub fn he_source(&self, h: usize) -> usize {
        let e = &self.edges[he_edge(h)];
        if h % 2 == 0 {
            e.a
        } else {
            e.b
        }
    }

    pub fn he_target(&self, h: usize) -> usize {
        self.he_source(he_twin(h))
    }

    /// Build the arrangement of a set of curves and isolated points.
    pub fn build(curves: &[InputCurve], isolated_points: &[Point]) -> Arrangement {
        // Collect original segments tagged by curve.
        let mut segs: Vec<(usize, Segment)> = Vec::new();
        for (ci, c) in curves.iter().enumerate() {
            for s in c.segments() {
                segs.push((ci, s));
            }
        }
        let n = segs.len();
        // Cut parameters along each original segment.
        let mut cuts: Vec<Vec<Rational>> = vec![Vec::new(); n];
        for item in cuts.iter_mut() {
            item.push(Rational::zero());
            item.push(Rational::from_integer(1.into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !crate::geom::bboxes_may_touch(&segs[i].1, &segs[j].1) {
                    continue;
                }
                match intersect_segments(&segs[i].1, &segs[j].1) {
                    SegSegIntersection::Disjoint => {}
                    SegSegIntersection::Point { t, u, .. } => {
                        cuts[i].push(t);
                        cuts[j].push(u);
                    }
                    SegSegIntersection::Overlap { from, to } => {
                        for p in [&from, &to] {
                            cuts[i].push(param_on_segment(&segs[i].1, p));
                            cuts[j].push(param_on_segment(&segs[j].1, p));
                        }
                    }
                }
            }
        }
        // Deduplicated, sorted vertex points.
        let mut vertex_set: BTreeSet<Point> = BTreeSet::new();
        let mut sub: Vec<Vec<Point>> = Vec::with_capacity(n);
        for i in 0..n {
            cuts[i].sort();
            cuts[i].dedup();
            let pts: Vec<Point> = cuts[i]
                .iter()
                .map(|t| segs[i].1.a.lerp(&segs[i].1.b, t))
                .collect();
            for p in &pts {
                vertex_set.insert(p.clone());
            }
            sub.push(pts);
        }
        for p in isolated_points {
            vertex_set.insert(p.clone());
        }
        let vertices: Vec<Point> = vertex_set.into_iter().collect();
        let vid: BTreeMap<&Point, usize> =
            vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();

        // Deduplicated, sorted undirected edges.
        let mut edge_keys: BTreeSet<(usize, usize)> = BTreeSet::new();
        for pts in &sub {
            for w in pts.windows(2) {
                let a = vid[&w[0]];
                let b = vid[&w[1]];
                if a != b {
                    edge_keys.insert((a.min(b), a.max(b)));
                }
            }
        }
        let edge_list: Vec<(usize, usize)> = edge_keys.into_iter().collect();
        let eid: BTreeMap<(usize, usize), usize> = edge_list
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        let mut edges: Vec<Edge> = edge_list
            .iter()
            .map(|&(a, b)| Edge {
                a,
                b,
                owners: Vec::new(),
            })
            .collect();

        // Curve walks and edge ownership.
        let mut curve_walks: Vec<Vec<(usize, bool)>> = vec![Vec::new(); curves.len()];
        for (si, pts) in sub.iter().enumerate() {
            let ci = segs[si].0;
            for w in pts.windows(2) {
                let a = vid[&w[0]];
                let b = vid[&w[1]];
                if a == b {
                    continue;
                }
                let e = eid[&(a.min(b), a.max(b))];
                if !edges[e].owners.contains(&ci) {
                    edges[e].owners.push(ci);
                }
                curve_walks[ci].push((e, a < b));
            }
        }
        for e in &mut edges {
            e.owners.sort_unstable();
        }

        let mut vertex_curve_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertices.len()];
        for e in &edges {
            for &c in &e.owners {
                vertex_curve_sets[e.a].insert(c);
                vertex_curve_sets[e.b].insert(c);
            }
        }
        let vertex_curves: Vec<Vec<usize>> = vertex_curve_sets
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();

        // Outgoing half-edges per vertex, sorted by angle.
        let he_count = edges.len() * 2;
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
        for (e, edge) in edges.iter().enumerate() {
            out[edge.a].push(2 * e);
            out[edge.b].push(2 * e + 1);
        }
        let he_dir = |h: usize| -> Vector {
            let e = &edges[he_edge(h)];
            let (s, t) = if h % 2 == 0 { (e.a, e.b) } else { (e.b, e.a) };
            vertices[t].sub(&vertices[s])
        };
        for list in out.iter_mut() {
            list.sort_by(|&x, &y| cmp_angle(&he_dir(x), &he_dir(y)).then(x.cmp(&y)));
        }
        let mut pos: Vec<usize> = vec![0; he_count];
        for list in &out {
            for (i, &h) in list.iter().enumerate() {
                pos[h] = i;
            }
        }
        let he_source_of = |h: usize| -> usize {
            let e = &edges[he_edge(h)];
            if h % 2 == 0 {
                e.a
            } else {
                e.b
            }
        };
        // next(h): at the target of h, take the CCW-predecessor of twin(h).
        // This traces every face with its interior on the left.
        let mut next: Vec<usize> = vec![usize::MAX; he_count];
        for h in 0..he_count {
            let r = he_twin(h);
            let v = he_source_of(r);
            let list = &out[v];
            let i = pos[r];
            next[h] = list[(i + list.len() - 1) % list.len()];
        }

        // Trace cycles.
        let mut cycle_of_half_edge: Vec<usize> = vec![usize::MAX; he_count];
        let mut cycles: Vec<Cycle> = Vec::new();
        for start in 0..he_count {
            if cycle_of_half_edge[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut hes = Vec::new();
            let mut h = start;
            loop {
                cycle_of_half_edge[h] = id;
                hes.push(h);
                h = next[h];
                if h == start {
                    break;
                }
            }
            let poly: Vec<Point> = hes
                .iter()
                .map(|&h| vertices[he_source_of(h)].clone())
                .collect();
            let area2 = signed_area2(&poly);
            cycles.push(Cycle {
                half_edges: hes,
                area2,
            });
        }

        // Faces: one per positive cycle, plus the unbounded face.
        let mut faces: Vec<Face> = Vec::new();
        let mut face_of_cycle: Vec<usize> = vec![usize::MAX; cycles.len()];
        let mut positive: Vec<usize> = Vec::new();
        for (ci, c) in cycles.iter().enumerate() {
            if c.area2.is_positive() {
                face_of_cycle[ci] = faces.len();
                positive.push(ci);
                faces.push(Face {
                    outer: Some(ci),
                    holes: Vec::new(),
                    isolated_vertices: Vec::new(),
                    punctures: Vec::new(),
                });
            }
        }
        let unbounded = faces.len();
        faces.push(Face {
            outer: None,
            holes: Vec::new(),
            isolated_vertices: Vec::new(),
            punctures: Vec::new(),
        });

        let cycle_poly = |ci: usize| -> Vec<Point> {
            cycles[ci]
                .half_edges
                .iter()
                .map(|&h| vertices[he_source_of(h)].clone())
                .collect()
        };
        // Assign non-positive cycles to the smallest positive cycle strictly
        // containing a representative point, else to the unbounded face.
        let locate_in_positive = |p: &Point| -> Option<usize> {
            let mut best: Option<(Rational, usize)> = None;
            for &ci in &positive {
                let poly = cycle_poly(ci);
                if crate::geom::polygon_contains_on_boundary(&poly, p) {
                    continue;
                }
                if winding_number(&poly, p) != 0 {
                    let a = cycles[ci].area2.clone();
                    if best.as_ref().map(|(ba, _)| a < *ba).unwrap_or(true) {
                        best = Some((a, ci));
                    }
                }
            }
            best.map(|(_, ci)| ci)
        };
        for (ci, c) in cycles.iter().enumerate() {
            if c.area2.is_positive() {
                continue;
            }
            let rep = c
                .half_edges
                .iter()
                .map(|&h| he_source_of(h))
                .min_by(|&x, &y| vertices[x].cmp(&vertices[y]))
                .unwrap();
            let f = locate_in_positive(&vertices[rep].clone())
                .map(|pc| face_of_cycle[pc])
                .unwrap_or(unbounded);
            face_of_cycle[ci] = f;
            faces[f].holes.push(ci);
        }
        // Isolated vertices.
        let mut degree: Vec<usize> = vec![0; vertices.len()];
        for e in &edges {
            degree[e.a] += 1;
            degree[e.b] += 1;
        }
        for v in 0..vertices.len() {
            if degree[v] == 0 {
                let f = locate_in_positive(&vertices[v].clone())
                    .map(|pc| face_of_cycle[pc])
                    .unwrap_or(unbounded);
                faces[f].isolated_vertices.push(v);
            }
        }

        let arr = Arrangement {
            vertices,
            edges,
            cycles,
            faces,
            face_of_cycle,
            curve_walks,
            cycle_of_half_edge,
            vertex_curves,
        };
        arr.check_euler();
        arr
    }

    /// Record which punctures live in which face. Punctures must be off the
    /// curves (validated by callers).
    pub fn assign_punctures(&mut self, punctures: &PunctureSet) {
        for f in &mut self.faces {
            f.punctures.clear();
        }
        for (pi, p) in punctures.iter().enumerate() {
            match self.locate(p) {
                Location::InFace(f) => self.faces[f].punctures.push(pi),
                loc => panic!("puncture {pi} lies on the arrangement: {loc:?}"),
            }
        }
    }

    /// Euler formula sanity check: V − E + F = 1 + C.
    fn check_euler(&self) {
        let v = self.vertices.len() as i64;
        let e = self.edges.len() as i64;
        let f = self.faces.len() as i64;
        let c = self.component_count() as i64;
        debug_assert_eq!(v - e + f, 1 + c, "Euler formula violated");
    }

    /// Connected components of the arrangement graph (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != c {
                let nxt = parent[c];
                parent[c] = r;
                c = nxt;
            }
            r
        }
        for e in &self.edges {
            let ra = find(&mut parent, e.a);
            let rb = find(&mut parent, e.b);
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut roots: BTreeSet<usize> = BTreeSet::new();
        for v in 0..n {
            roots.insert(find(&mut parent, v));
        }
        roots.len()
    }

    pub fn cycle_polygon(&self, ci: usize) -> Vec<Point> {
        self.cycles[ci]
            .half_edges
            .iter()
            .map(|&h| self.vertices[self.he_source(h)].clone())
            .collect()
    }

    /// Is the cycle a simple closed walk (no repeated vertices)?
    pub fn cycle_is_simple(&self, ci: usize) -> bool {
        let mut seen = BTreeSet::new();
        self.cycles[ci]
            .half_edges
            .iter()
            .all(|&h| seen.insert(self.he_source(h)))
    }

    /// Exact point location.
    pub fn locate(&self, p: &Point) -> Location {
        if let Ok(i) = self.vertices.binary_search(p) {
            return Location::OnVertex(i);
        }
        for (ei, e) in self.edges.iter().enumerate() {
            let s = Segment::new(self.vertices[e.a].clone(), self.vertices[e.b].clone());
            if s.contains_point(p) {
                return Location::OnEdge(ei);
            }
        }
        // Not on the 1-skeleton: inside the face whose outer cycle contains
        // it (minimal by area); else in the unbounded face.
        let mut best: Option<(Rational, usize)> = None;
        for (fi, f) in self.faces.iter().enumerate() {
            if let Some(oc) = f.outer {
                let poly = self.cycle_polygon(oc);
                if winding_number(&poly, p) != 0 {
                    let a = self.cycles[oc].area2.clone();
                    if best.as_ref().map(|(ba, _)| a < *ba).unwrap_or(true) {
                        best = Some((a, fi));
                    }
                }
            }
        }
        match best {
            Some((_, fi)) => Location::InFace(fi),
            None => Location::InFace(self.unbounded_face()),
        }
    }

    pub fn unbounded_face(&self) -> usize {
        self.faces
            .iter()
            .position(|f| f.outer.is_none())
            .expect("arrangement always has an unbounded face")
    }

    /// A point in the open interior of a bounded face.
    pub fn face_interior_point(&self, fi: usize) -> Point {
        let f = &self.faces[fi];
        let oc = f.outer.expect("interior point of the unbounded face");
        let h = self.cycles[oc].half_edges[0];
        let a = &self.vertices[self.he_source(h)];
        let b = &self.vertices[self.he_target(h)];
        let mid = a.lerp(b, &crate::geom::ratio(1, 2));
        let d = b.sub(a);
        let lperp = d.perp();
        let scale = lperp.l1();
        let mut delta = crate::geom::ratio(1, 2);
        for _ in 0..256 {
            let cand = mid.add(&lperp.scale(&(&delta / &scale)));
            if self.locate(&cand) == Location::InFace(fi) {
                return cand;
            }
            delta /= crate::geom::rat(2);
        }
        panic!("could not find an interior point for face {fi}");
    }

    /// Edge ids on the boundary of face `fi` (outer + holes), deduplicated.
    pub fn face_boundary_edges(&self, fi: usize) -> BTreeSet<usize> {
        let f = &self.faces[fi];
        let mut out = BTreeSet::new();
        if let Some(oc) = f.outer {
            for &h in &self.cycles[oc].half_edges {
                out.insert(he_edge(h));
            }
        }
        for &hc in &f.holes {
            for &h in &self.cycles[hc].half_edges {
                out.insert(he_edge(h));
            }
        }
        out
    }

    pub fn edge_segment(&self, ei: usize) -> Segment {
        let e = &self.edges[ei];
        Segment::new(self.vertices[e.a].clone(), self.vertices[e.b].clone())
    }

    pub fn edge_midpoint(&self, ei: usize) -> Point {
        let e = &self.edges[ei];
        self.vertices[e.a].lerp(&self.vertices[e.b], &crate::geom::ratio(1, 2))
    }
}

fn param_on_segment(s: &Segment, p: &Point) -> Rational {
    let d = s.dir();
    if d.x.abs() >= d.y.abs() {
        (&p.x - &s.a.x) / &d.x
    } else {
        (&p.y - &s.a.y) / &d.y
    }
}

/// A filled region: the input set together with the bounded, puncture-free
/// complementary faces.
#[derive(Clone, Debug)]
pub struct Region {
    pub arrangement: Arrangement,
    /// Per-face inclusion flags.
    pub included: Vec<bool>,
}

impl Region {
    pub fn included_faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.included
            .iter()
            .enumerate()
            .filter(|(_, &inc)| inc)
            .map(|(i, _)| i)
    }

    /// Is the point in the region (on the input set or in an included face)?
    pub fn contains(&self, p: &Point) -> bool {
        match self.arrangement.locate(p) {
            Location::OnVertex(_) | Location::OnEdge(_) => true,
            Location::InFace(f) => self.included[f],
        }
    }
}

/// The filling of a set of curves and points in the punctured plane: the set
/// plus every bounded complementary face containing no puncture. Faces with
/// a puncture are not relatively compact in the punctured plane and stay out.
pub fn fill(curves: &[InputCurve], points: &[Point], punctures: &PunctureSet) -> Region {
    let mut arr = Arrangement::build(curves, points);
    arr.assign_punctures(punctures);
    let included = arr
        .faces
        .iter()
        .map(|f| f.bounded() && f.punctures.is_empty())
        .collect();
    Region {
        arrangement: arr,
        included,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn closed(pts: &[(i64, i64)]) -> InputCurve {
        InputCurve {
            vertices: pts.iter().map(|&(x, y)| pt(x, y)).collect(),
            closed: true,
        }
    }

    fn open(pts: &[(i64, i64)]) -> InputCurve {
        InputCurve {
            vertices: pts.iter().map(|&(x, y)| pt(x, y)).collect(),
            closed: false,
        }
    }

    #[test]
    fn square_arrangement() {
        let arr = Arrangement::build(&[closed(&[(0, 0), (2, 0), (2, 2), (0, 2)])], &[]);
        assert_eq!(arr.vertices.len(), 4);
        assert_eq!(arr.edges.len(), 4);
        assert_eq!(arr.faces.len(), 2);
        let inside = arr.faces.iter().position(|f| f.bounded()).expect("bounded");
        assert_eq!(arr.locate(&pt(1, 1)), Location::InFace(inside));
        assert_eq!(
            arr.locate(&pt(5, 5)),
            Location::InFace(arr.unbounded_face())
        );
        let v0 = arr.vertices.binary_search(&pt(0, 0)).unwrap();
        assert_eq!(arr.locate(&pt(0, 0)), Location::OnVertex(v0));
    }

    #[test]
    fn crossing_diagonals() {
        let arr = Arrangement::build(&[open(&[(0, 0), (2, 2)]), open(&[(0, 2), (2, 0)])], &[]);
        assert_eq!(arr.vertices.len(), 5);
        assert_eq!(arr.edges.len(), 4);
        assert_eq!(arr.faces.len(), 1);
        assert!(arr.vertices.binary_search(&pt(1, 1)).is_ok());
    }

    #[test]
    fn nested_squares_annulus() {
        let arr = Arrangement::build(
            &[
                closed(&[(0, 0), (6, 0), (6, 6), (0, 6)]),
                closed(&[(2, 2), (4, 2), (4, 4), (2, 4)]),
            ],
            &[],
        );
        assert_eq!(arr.faces.len(), 3);
        let inner = match arr.locate(&pt(3, 3)) {
            Location::InFace(f) => f,
            other => panic!("{other:?}"),
        };
        let annulus = match arr.locate(&pt(1, 1)) {
            Location::InFace(f) => f,
            other => panic!("{other:?}"),
        };
        assert_ne!(inner, annulus);
        assert!(arr.faces[inner].holes.is_empty());
        assert_eq!(arr.faces[annulus].holes.len(), 1);
        let p = arr.face_interior_point(annulus);
        assert_eq!(arr.locate(&p), Location::InFace(annulus));
    }

    #[test]
    fn overlapping_segments_merge() {
        let arr = Arrangement::build(&[open(&[(0, 0), (4, 0)]), open(&[(2, 0), (6, 0)])], &[]);
        assert_eq!(arr.vertices.len(), 4);
        assert_eq!(arr.edges.len(), 3);
        let shared = arr
            .edges
            .iter()
            .find(|e| e.owners.len() == 2)
            .expect("shared edge");
        assert_eq!(
            (
                arr.vertices[shared.a].clone(),
                arr.vertices[shared.b].clone()
            ),
            (pt(2, 0), pt(4, 0))
        );
    }

    #[test]
    fn fill_examples() {
        let f1 = PunctureSet::new(vec![pt(1, 1)]).unwrap();
        let square = closed(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let r = fill(core::slice::from_ref(&square), &[], &PunctureSet::empty());
        assert!(r.contains(&pt(1, 1)));
        assert!(!r.contains(&pt(5, 5)));
        let r = fill(core::slice::from_ref(&square), &[], &f1);
        assert!(!r.contains(&Point::new(rat(1), rat(3) / rat(2))));
        assert!(r.contains(&pt(0, 0)));
        let seg = open(&[(0, 0), (2, 0)]);
        let r = fill(&[seg], &[], &PunctureSet::empty());
        assert!(r.contains(&pt(1, 0)));
        assert!(!r.contains(&pt(1, 1)));
    }

    #[test]
    fn euler_formula_connected() {
        let arr = Arrangement::build(
            &[
                closed(&[(0, 0), (4, 0), (4, 4), (0, 4)]),
                closed(&[(2, 2), (6, 2), (6, 6), (2, 6)]),
            ],
            &[],
        );
        assert_eq!(arr.component_count(), 1);
        let v = arr.vertices.len() as i64;
        let e = arr.edges.len() as i64;
        let f = arr.faces.len() as i64;
        assert_eq!(v - e + f, 2);
    }

    #[test]
    fn whisker_polygon() {
        // A square with a whisker poking inside keeps one bounded face whose
        // outer cycle is no longer simple.
        let arr = Arrangement::build(
            &[
                closed(&[(0, 0), (4, 0), (4, 4), (0, 4)]),
                open(&[(0, 0), (2, 2)]),
            ],
            &[],
        );
        let inside = match arr.locate(&pt(1, 3)) {
            Location::InFace(f) => f,
            other => panic!("{other:?}"),
        };
        assert!(arr.faces[inside].bounded());
        let oc = arr.faces[inside].outer.unwrap();
        assert!(!arr.cycle_is_simple(oc));
    }
}
