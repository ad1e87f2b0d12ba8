//! Straightening drivers: arcs rel pinned tails, loops (optionally pinned
//! at a basepoint), and geometric intersection numbers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::{PLLoop, PLPath, PunctureSet};

use crate::geom::{Point, Segment};

use super::pairs::{transversalize, PairKind, PairState, PerturbMove};
use super::removal::{find_minimal_bigon, remove_bigon, rotate_to, AvoidSets};
use super::{
    check_general_position, BigonError, FeatureSet, IsotopyStep, LinePair, StepKind,
    StraighteningTrace, SupportLocation,
};

/// Perturb `alpha_prime` so the pair becomes quasi-transverse; `alpha` is
/// untouched and the homotopy class of `alpha_prime` rel tails is
/// preserved. Idempotent on already quasi-transverse pairs.
pub fn make_quasi_transverse(
    pair: &LinePair,
    punctures: &PunctureSet,
) -> Result<(LinePair, Vec<IsotopyStep>), BigonError> {
    let mut state = pair.state();
    check_general_position(
        &[(&state.alpha, false), (&state.prime, false)],
        punctures,
    )?;
    let moves = transversalize(&mut state, punctures)?;
    Ok((LinePair::from_state(&state), perturb_steps(moves)))
}

fn perturb_steps(moves: Vec<PerturbMove>) -> Vec<IsotopyStep> {
    moves
        .into_iter()
        .map(|m| IsotopyStep {
            kind: StepKind::Perturb,
            support: m.support,
            before: m.before,
            after: m.after,
        })
        .collect()
}

/// Straighten `alpha_prime` onto `alpha` rel the pinned tails.
///
/// Preconditions: the arcs are homotopic rel tails in the punctured plane
/// (checked; `NotHomotopic` carries the two crossing words); the static
/// constraint set avoids `alpha` and the moving one avoids `alpha_prime`.
///
/// The trace removes one minimal bigon at a time; intersection component
/// counts strictly decrease; every support avoids the punctures; the moving
/// constraint set is never swept, so its intersection with the static set
/// never grows.
pub fn straighten_arc(
    pair: &LinePair,
    punctures: &PunctureSet,
    c_static: &FeatureSet,
    c_moving: &FeatureSet,
) -> Result<StraighteningTrace, BigonError> {
    let state = pair.state();
    check_general_position(
        &[(&state.alpha, false), (&state.prime, false)],
        punctures,
    )?;
    if c_static.meets_polyline(&state.alpha, false) {
        return Err(BigonError::InvalidInput(String::from(
            "static constraint set meets alpha",
        )));
    }
    if c_moving.meets_polyline(&state.prime, false) {
        return Err(BigonError::InvalidInput(String::from(
            "moving constraint set meets alpha_prime",
        )));
    }
    let w_alpha = state.curve_word(&state.alpha, punctures)?;
    let w_prime = state.curve_word(&state.prime, punctures)?;
    if w_alpha != w_prime {
        return Err(BigonError::NotHomotopic {
            alpha_word: w_alpha,
            prime_word: w_prime,
        });
    }
    let avoid = AvoidSets {
        c_static: c_static.clone(),
        c_moving: c_moving.clone(),
        pin: None,
    };
    drive(state, punctures, avoid)
}

/// Straighten the loop `c_prime` onto `c`.
///
/// Both loops must be essential in the punctured plane and freely
/// homotopic. With a pinned basepoint the point must lie on both loops, the
/// based classes must agree, and no step moves the pin.
pub fn straighten_loop(
    c: &PLLoop,
    c_prime: &PLLoop,
    punctures: &PunctureSet,
    basepoint_pin: Option<Point>,
) -> Result<StraighteningTrace, BigonError> {
    let mut alpha = c.vertices().to_vec();
    let mut prime = c_prime.vertices().to_vec();
    check_general_position(&[(&alpha, true), (&prime, true)], punctures)?;
    if !c.is_embedded() || !c_prime.is_embedded() {
        return Err(BigonError::InvalidInput(String::from(
            "loops must be embedded",
        )));
    }
    let wa = crate::curves::cyclic_crossing_word(c, punctures).map_err(BigonError::curve)?;
    let wp = crate::curves::cyclic_crossing_word(c_prime, punctures).map_err(BigonError::curve)?;
    if wa.is_empty() || wp.is_empty() {
        return Err(BigonError::Inessential);
    }
    if wa != wp {
        return Err(BigonError::NotFreelyHomotopic {
            alpha_word: wa.to_word(),
            prime_word: wp.to_word(),
        });
    }
    if let Some(pin) = &basepoint_pin {
        alpha = insert_vertex_on_loop(&alpha, pin).ok_or_else(|| {
            BigonError::InvalidInput(String::from("pin does not lie on the first loop"))
        })?;
        prime = insert_vertex_on_loop(&prime, pin).ok_or_else(|| {
            BigonError::InvalidInput(String::from("pin does not lie on the second loop"))
        })?;
        let based_a = based_word(&alpha, pin, punctures)?;
        let based_p = based_word(&prime, pin, punctures)?;
        if based_a != based_p {
            return Err(BigonError::PinClassNontrivial {
                alpha_word: based_a,
                prime_word: based_p,
            });
        }
    }
    let state = PairState {
        alpha,
        prime,
        alpha_closed: true,
        prime_closed: true,
        kind: PairKind::Loops {
            pin: basepoint_pin.clone(),
        },
    };
    let avoid = AvoidSets {
        c_static: FeatureSet::default(),
        c_moving: FeatureSet::default(),
        pin: basepoint_pin,
    };
    drive(state, punctures, avoid)
}

fn based_word(
    vertices: &[Point],
    pin: &Point,
    punctures: &PunctureSet,
) -> Result<crate::freegroup::Word, BigonError> {
    let rotated = rotate_to(vertices, pin);
    let mut v = rotated;
    v.push(pin.clone());
    let path = PLPath::new(v).map_err(BigonError::curve)?;
    crate::curves::crossing_word((&path).into(), punctures).map_err(BigonError::curve)
}

/// Ensure `p` is a vertex of the loop, splitting a segment if it lies in a
/// segment interior; `None` when `p` is not on the loop at all.
fn insert_vertex_on_loop(vertices: &[Point], p: &Point) -> Option<Vec<Point>> {
    if vertices.contains(p) {
        return Some(vertices.to_vec());
    }
    let n = vertices.len();
    for i in 0..n {
        let seg = Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone());
        if seg.contains_point(p) {
            let mut out = vertices.to_vec();
            out.insert(i + 1, p.clone());
            return Some(out);
        }
    }
    None
}

/// The common straightening loop: transversalize, remove minimal bigons
/// while any crossing remains, then close with the final coincidence step.
fn drive(
    mut state: PairState,
    punctures: &PunctureSet,
    avoid: AvoidSets,
) -> Result<StraighteningTrace, BigonError> {
    let mut steps: Vec<IsotopyStep> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    let mut states: Vec<Vec<Point>> = vec![state.prime.clone()];

    let initial_components = state.intersection_components();
    let moves = transversalize(&mut state, punctures)?;
    for mv in &moves {
        counts.push(initial_components);
        states.push(mv.state_after.clone());
    }
    steps.extend(perturb_steps(moves));

    let budget = state.alpha.len() + state.prime.len() + state.intersection_components() + 8;
    for _ in 0..budget {
        if state.curves_equal() {
            break;
        }
        let comps = state
            .component_count_fast()
            .unwrap_or_else(|| state.intersection_components());
        let crossings = state.crossings().map_err(super::removal::violation_to_error)?;
        if crossings.is_empty() {
            let step = final_coincidence(&state, punctures, &avoid)?;
            counts.push(comps);
            steps.push(step);
            state.prime = state.alpha.clone();
            states.push(state.prime.clone());
            break;
        }
        let _ = &crossings;
        let cert = find_minimal_bigon(&state, punctures)?.ok_or_else(|| {
            BigonError::internal("no minimal bigon although crossings remain")
        })?;
        let (new_state, step) = remove_bigon(&state, &cert, punctures, &avoid)?;
        let new_comps = new_state
            .component_count_fast()
            .unwrap_or_else(|| new_state.intersection_components());
        if new_comps >= comps {
            return Err(BigonError::internal(
                "bigon removal failed to decrease the component count",
            ));
        }
        counts.push(comps);
        steps.push(step);
        state = new_state;
        states.push(state.prime.clone());
    }
    if !state.curves_equal() {
        return Err(BigonError::internal("straightening budget exhausted"));
    }
    counts.push(state.intersection_components());
    debug_assert_eq!(states.len(), steps.len() + 1);
    Ok(StraighteningTrace {
        steps,
        component_counts: counts,
        states,
        final_curve: state.alpha.clone(),
    })
}

/// The last step: the curves are disjoint apart from their anchors, so the
/// region between them is swept and the moving curve lands exactly on the
/// static one.
fn final_coincidence(
    state: &PairState,
    punctures: &PunctureSet,
    avoid: &AvoidSets,
) -> Result<IsotopyStep, BigonError> {
    let step = match &state.kind {
        PairKind::PinnedArcs => {
            let n = state.alpha.len();
            let m = state.prime.len();
            // Middles share the two junction vertices only.
            let before: Vec<Point> = state.prime[1..m - 1].to_vec();
            let after: Vec<Point> = state.alpha[1..n - 1].to_vec();
            let mut poly = after.clone();
            for p in before[1..before.len() - 1].iter().rev() {
                poly.push(p.clone());
            }
            let support = if poly.len() >= 3 {
                vec![poly]
            } else {
                Vec::new() // middles already coincide as segments
            };
            IsotopyStep {
                kind: StepKind::FinalCoincidence,
                support,
                before,
                after,
            }
        }
        PairKind::Loops { pin } => {
            let (before, after) = match pin {
                Some(p) => {
                    let mut b = rotate_to(&state.prime, p);
                    b.push(p.clone());
                    let mut a = rotate_to(&state.alpha, p);
                    a.push(p.clone());
                    (b, a)
                }
                None => {
                    let mut b = state.prime.clone();
                    b.push(state.prime[0].clone());
                    let mut a = state.alpha.clone();
                    a.push(state.alpha[0].clone());
                    (b, a)
                }
            };
            // Symmetric difference of the two disc interiors, represented by
            // even-odd semantics over the two loop polygons.
            IsotopyStep {
                kind: StepKind::FinalCoincidence,
                support: vec![state.alpha.clone(), state.prime.clone()],
                before,
                after,
            }
        }
        PairKind::FreeArcs => {
            return Err(BigonError::internal(
                "free pairs have no final coincidence step",
            ))
        }
    };
    // The swept region avoids the punctures (equal classes guarantee it,
    // and it is re-checked here) and must not hit the moving constraints.
    for p in punctures.iter() {
        if step.support_contains(p) != SupportLocation::Outside {
            return Err(BigonError::internal(
                "puncture insideized the final sweep region",
            ));
        }
    }
    for p in avoid.c_moving.sample_points() {
        if step.support_contains(&p) == SupportLocation::Inside {
            return Err(BigonError::ConstraintConflict {
                detail: String::from("moving constraint inside the final sweep region"),
            });
        }
    }
    if let Some(pin) = &avoid.pin {
        if step.support_contains(pin) == SupportLocation::Inside {
            return Err(BigonError::internal("pin inside the final sweep region"));
        }
    }
    Ok(step)
}

/// Either kind of curve for intersection-number queries.
#[derive(Clone, Debug)]
pub enum GinCurve {
    Arc(PLPath),
    Loop(PLLoop),
}

impl GinCurve {
    fn vertices(&self) -> Vec<Point> {
        match self {
            GinCurve::Arc(p) => p.vertices().to_vec(),
            GinCurve::Loop(l) => l.vertices().to_vec(),
        }
    }

    fn closed(&self) -> bool {
        matches!(self, GinCurve::Loop(_))
    }

    fn embedded(&self) -> bool {
        match self {
            GinCurve::Arc(p) => p.is_embedded(),
            GinCurve::Loop(l) => l.is_embedded(),
        }
    }
}

impl From<PLPath> for GinCurve {
    fn from(p: PLPath) -> Self {
        GinCurve::Arc(p)
    }
}

impl From<PLLoop> for GinCurve {
    fn from(l: PLLoop) -> Self {
        GinCurve::Loop(l)
    }
}

/// Geometric intersection number: the crossing count after exhaustive bigon
/// removal. Loops must be essential. The first curve stays fixed; only the
/// second is deformed, and its class (free for loops, rel endpoints for
/// arcs) never changes.
pub fn geometric_intersection_number(
    c1: &GinCurve,
    c2: &GinCurve,
    punctures: &PunctureSet,
) -> Result<usize, BigonError> {
    if !c1.embedded() || !c2.embedded() {
        return Err(BigonError::InvalidInput(String::from(
            "curves must be embedded",
        )));
    }
    for c in [c1, c2] {
        if let GinCurve::Loop(l) = c {
            if crate::curves::is_contractible(l, punctures).map_err(BigonError::curve)? {
                return Err(BigonError::Inessential);
            }
        }
    }
    let mut state = PairState {
        alpha: c1.vertices(),
        prime: c2.vertices(),
        alpha_closed: c1.closed(),
        prime_closed: c2.closed(),
        kind: PairKind::FreeArcs,
    };
    check_general_position(
        &[
            (&state.alpha, state.alpha_closed),
            (&state.prime, state.prime_closed),
        ],
        punctures,
    )?;
    transversalize(&mut state, punctures)?;
    let avoid = AvoidSets::default();
    let budget = 4 + state.crossings().map_err(super::removal::violation_to_error)?.len();
    for _ in 0..budget {
        match find_minimal_bigon(&state, punctures)? {
            Some(cert) => {
                let (new_state, _) = remove_bigon(&state, &cert, punctures, &avoid)?;
                state = new_state;
            }
            None => break,
        }
    }
    if find_minimal_bigon(&state, punctures)?.is_some() {
        return Err(BigonError::internal("bigon removal budget exhausted"));
    }
    Ok(state
        .crossings()
        .map_err(super::removal::violation_to_error)?
        .len())
}
