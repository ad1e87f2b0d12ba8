//! Braid words from the x-projection, and slab realizations of words.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{rat, ratio, Point, Rational};
use num_traits::{Signed, Zero};

use super::{merge_times, BraidError, PureBraid, Strand};

/// One letter `σ_i^{±1}`; `index` is the 1-based x-rank of the left strand
/// of the exchanged pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

/// A word in the Artin generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BraidWord {
    pub letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(letters: Vec<BraidLetter>) -> BraidWord {
        BraidWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Net permutation on `n` strand positions.
    pub fn permutation(&self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            perm.swap(l.index - 1, l.index);
        }
        perm
    }

    /// Text form `s1 s2^-1 s1`; the empty word is `e`.
    pub fn display(&self) -> String {
        if self.letters.is_empty() {
            return String::from("e");
        }
        let mut out = String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&format!("s{}", l.index));
            if !l.positive {
                out.push_str("^-1");
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let rest = tok.strip_prefix('s').ok_or_else(|| {
                BraidError::Malformed(format!("unrecognized braid token `{tok}`"))
            })?;
            let (num, positive) = match rest.strip_suffix("^-1") {
                Some(n) => (n, false),
                None => (rest, true),
            };
            let index: usize = num.parse().map_err(|_| {
                BraidError::Malformed(format!("unrecognized braid token `{tok}`"))
            })?;
            if index == 0 {
                return Err(BraidError::Malformed(String::from(
                    "braid generators are 1-based",
                )));
            }
            letters.push(BraidLetter { index, positive });
        }
        Ok(BraidWord { letters })
    }

    /// Realize the word as a slab-by-slab motion of `n` points based at
    /// `(1,0) … (n,0)`. The word's permutation must be the identity, or the
    /// strands would not return to their bases.
    pub fn realize(&self, n: usize) -> Result<PureBraid, BraidError> {
        for l in &self.letters {
            if l.index + 1 > n {
                return Err(BraidError::Malformed(format!(
                    "letter s{} needs at least {} strands",
                    l.index,
                    l.index + 1
                )));
            }
        }
        if self.permutation(n) != (0..n).collect::<Vec<_>>() {
            return Err(BraidError::Malformed(String::from(
                "only pure words (identity permutation) realize as pure braids",
            )));
        }
        let slabs = self.letters.len().max(1) as i64;
        // slot_of[s] = current x-slot (0-based) of strand s.
        let mut slot_of: Vec<usize> = (0..n).collect();
        let mut times: Vec<Vec<Rational>> = vec![vec![rat(0)]; n];
        let mut points: Vec<Vec<Point>> = (0..n)
            .map(|s| vec![Point::from_ints(s as i64 + 1, 0)])
            .collect();
        for (k, l) in self.letters.iter().enumerate() {
            let t0 = ratio(k as i64, slabs);
            let t1 = ratio(k as i64 + 1, slabs);
            // Mid-waypoints at 2/5 and 3/5 of the slab, so the x-crossing
            // lands at the slab middle, away from every breakpoint.
            let tm_left = &t0 + &((&t1 - &t0) * ratio(2, 5));
            let tm_right = &t0 + &((&t1 - &t0) * ratio(3, 5));
            let li = l.index - 1; // left slot, 0-based
            let left = slot_of.iter().position(|&s| s == li).unwrap();
            let right = slot_of.iter().position(|&s| s == li + 1).unwrap();
            let (y_left, y_right) = if l.positive {
                (ratio(1, 2), ratio(-1, 2))
            } else {
                (ratio(-1, 2), ratio(1, 2))
            };
            let xm = ratio(2 * li as i64 + 3, 2);
            // Left strand moves one slot right over/under; right moves left.
            times[left].push(t0.clone());
            points[left].push(Point::from_ints(li as i64 + 1, 0));
            times[left].push(tm_left);
            points[left].push(Point::new(xm.clone(), y_left));
            times[left].push(t1.clone());
            points[left].push(Point::from_ints(li as i64 + 2, 0));
            times[right].push(t0.clone());
            points[right].push(Point::from_ints(li as i64 + 2, 0));
            times[right].push(tm_right);
            points[right].push(Point::new(xm, y_right));
            times[right].push(t1);
            points[right].push(Point::from_ints(li as i64 + 1, 0));
            slot_of.swap(left, right);
        }
        let mut strands = Vec::with_capacity(n);
        for s in 0..n {
            if *times[s].last().unwrap() != rat(1) {
                times[s].push(rat(1));
                let home = points[s][0].clone();
                points[s].push(home);
            }
            // Drop duplicate time entries introduced by adjacent slabs.
            let mut ts: Vec<Rational> = Vec::new();
            let mut ps: Vec<Point> = Vec::new();
            for (t, p) in times[s].iter().zip(points[s].iter()) {
                if ts.last() == Some(t) {
                    continue;
                }
                ts.push(t.clone());
                ps.push(p.clone());
            }
            strands.push(Strand::new(ts, ps)?);
        }
        PureBraid::new(strands)
    }
}

/// Extract the chronological braid word of a braid from its x-projection.
///
/// Genericity: no two strands may share an x-coordinate at a grid time or
/// over a whole interval, and no three strands at once; violations are
/// reported with a witness time. The word's permutation is the identity.
pub fn braid_word(braid: &PureBraid) -> Result<BraidWord, BraidError> {
    let n = braid.len();
    if n < 2 {
        return Ok(BraidWord::default());
    }
    // Common refinement of all breakpoint times.
    let mut grid: Vec<Rational> = Vec::new();
    for s in braid.strands() {
        grid = merge_times(&grid, s.times());
    }
    // Events per pair.
    struct Event {
        t: Rational,
        i: usize,
        j: usize,
    }
    let mut events: Vec<Event> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = &braid.strands()[i];
            let b = &braid.strands()[j];
            for w in grid.windows(2) {
                let (t0, t1) = (&w[0], &w[1]);
                let dx0 = b.position(t0).x - a.position(t0).x;
                let dx1 = b.position(t1).x - a.position(t1).x;
                if dx0.is_zero() {
                    return Err(BraidError::NonGenericProjection {
                        t: t0.clone(),
                        detail: format!("strands {i} and {j} share x at a breakpoint"),
                    });
                }
                if dx1.is_zero() && *t1 == rat(1) {
                    return Err(BraidError::NonGenericProjection {
                        t: t1.clone(),
                        detail: format!("strands {i} and {j} share x at a breakpoint"),
                    });
                }
                if dx0.is_positive() != dx1.is_positive() && !dx1.is_zero() {
                    let s = -&dx0 / (&dx1 - &dx0);
                    let t = t0 + &(&s * &(t1 - t0));
                    events.push(Event { t, i, j });
                }
            }
        }
    }
    events.sort_by(|a, b| a.t.cmp(&b.t).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
    // Triple points: two events at the same time sharing a strand.
    for w in events.windows(2) {
        if w[0].t == w[1].t {
            let shares = w[0].i == w[1].i
                || w[0].i == w[1].j
                || w[0].j == w[1].i
                || w[0].j == w[1].j;
            if shares {
                return Err(BraidError::NonGenericProjection {
                    t: w[0].t.clone(),
                    detail: String::from("three strands share an x-coordinate"),
                });
            }
        }
    }
    // Initial x-order.
    let zero = Rational::zero();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        braid.strands()[a]
            .position(&zero)
            .x
            .cmp(&braid.strands()[b].position(&zero).x)
    });
    let mut letters = Vec::new();
    for e in &events {
        let pa = order.iter().position(|&s| s == e.i).unwrap();
        let pb = order.iter().position(|&s| s == e.j).unwrap();
        let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
        if hi - lo != 1 {
            return Err(BraidError::NonGenericProjection {
                t: e.t.clone(),
                detail: String::from("swapping strands are not x-adjacent"),
            });
        }
        let left = order[lo];
        let right = order[hi];
        let y_left = braid.strands()[left].position(&e.t).y;
        let y_right = braid.strands()[right].position(&e.t).y;
        if y_left == y_right {
            return Err(BraidError::NonGenericProjection {
                t: e.t.clone(),
                detail: String::from("strands meet at the crossing"),
            });
        }
        letters.push(BraidLetter {
            index: lo + 1,
            positive: y_left > y_right,
        });
        order.swap(lo, hi);
    }
    let word = BraidWord::new(letters);
    debug_assert_eq!(
        word.permutation(n),
        (0..n).collect::<Vec<_>>(),
        "pure braids have identity x-order permutation"
    );
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_braid_empty_word() {
        let b = PureBraid::identity(alloc::vec![
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
        ])
        .unwrap();
        assert!(braid_word(&b).unwrap().is_empty());
    }

    #[test]
    fn sigma_squared_round_trip() {
        let w = BraidWord::parse("s1 s1").unwrap();
        let b = w.realize(2).unwrap();
        assert_eq!(braid_word(&b).unwrap(), w);
        // One full mutual turn; sign fixed by the left-over-front rule.
        assert_eq!(super::super::linking_number(&b, 0, 1).unwrap().abs(), 1);
    }

    #[test]
    fn parse_display_round_trip() {
        for text in ["e", "s1", "s1 s2^-1 s1", "s3 s3"] {
            let w = BraidWord::parse(text).unwrap();
            assert_eq!(w.display(), text.replace("e", "e"));
            assert_eq!(BraidWord::parse(&w.display()).unwrap(), w);
        }
        assert!(BraidWord::parse("x1").is_err());
        assert!(BraidWord::parse("s0").is_err());
    }

    #[test]
    fn realization_round_trips_words() {
        for text in ["s1 s1", "s1 s1^-1", "s1 s2 s2 s1", "s2^-1 s1 s1 s2"] {
            let w = BraidWord::parse(text).unwrap();
            let b = w.realize(3).unwrap();
            assert_eq!(braid_word(&b).unwrap(), w, "word {text}");
        }
        // Non-pure words do not realize.
        assert!(BraidWord::parse("s1").unwrap().realize(2).is_err());
    }

    #[test]
    fn non_generic_projection_reported() {
        // Two strands vertically aligned share x for all time.
        let b = PureBraid::new(alloc::vec![
            Strand::constant(Point::from_ints(0, 0)),
            Strand::constant(Point::from_ints(0, 2)),
        ])
        .unwrap();
        assert!(matches!(
            braid_word(&b),
            Err(BraidError::NonGenericProjection { .. })
        ));
    }
}
