//! Incidence-graph levelling for families of arcs and their images.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::PLPath;
use crate::geom::{intersect_segments, SegSegIntersection};

use super::BigonError;

fn curves_meet(a: &PLPath, b: &PLPath) -> bool {
    for sa in a.segments() {
        for sb in b.segments() {
            if !matches!(intersect_segments(&sa, &sb), SegSegIntersection::Disjoint) {
                return true;
            }
        }
    }
    false
}

/// Partition arc indices into BFS levels of the incidence graph.
///
/// There is an edge between `i` and `j` when `images[i]` meets `arcs[j]` or
/// `images[j]` meets `arcs[i]`. Each connected component is levelled from
/// its smallest-index arc, so no edge ever joins levels whose indices
/// differ by more than one. Requires the arcs to be pairwise disjoint and
/// each image to meet its own arc.
pub fn incidence_levels(
    arcs: &[PLPath],
    images: &[PLPath],
) -> Result<Vec<Vec<usize>>, BigonError> {
    if arcs.len() != images.len() {
        return Err(BigonError::InvalidInput(String::from(
            "arcs and images must pair up",
        )));
    }
    let n = arcs.len();
    for i in 0..n {
        for j in i + 1..n {
            if curves_meet(&arcs[i], &arcs[j]) {
                return Err(BigonError::InvalidInput(String::from(
                    "arcs must be pairwise disjoint",
                )));
            }
        }
    }
    for i in 0..n {
        if !curves_meet(&images[i], &arcs[i]) {
            return Err(BigonError::InvalidInput(String::from(
                "every image must meet its own arc",
            )));
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if curves_meet(&images[i], &arcs[j]) || curves_meet(&images[j], &arcs[i]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut level: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if level[root].is_some() {
            continue;
        }
        level[root] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let lu = level[u].unwrap();
            for &v in &adj[u] {
                if level[v].is_none() {
                    level[v] = Some(lu + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    let max_level = level.iter().map(|l| l.unwrap()).max().unwrap_or(0);
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); max_level + 1];
    for (i, l) in level.iter().enumerate() {
        out[l.unwrap()].push(i);
    }
    // The BFS guarantee, re-checked exactly.
    for i in 0..n {
        for &j in &adj[i] {
            let d = level[i].unwrap().abs_diff(level[j].unwrap());
            debug_assert!(d <= 1, "incidence edge {i}-{j} spans levels too far");
        }
    }
    Ok(out)
}
