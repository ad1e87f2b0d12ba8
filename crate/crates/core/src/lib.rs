//! Exact computational topology for curves in the punctured plane.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point in any predicate. The crate has four public layers:
//!
//! * [`freegroup`] — reduced words, conjugacy, roots and centralizers in
//!   finitely generated free groups, plus detection of inner automorphisms
//!   among generator-conjugating endomorphisms.
//! * [`curves`] — piecewise-linear paths and loops with rational vertices,
//!   and their crossing words relative to a finite puncture set. The
//!   crossing word is a complete homotopy invariant.
//! * [`bigon`] — planar arrangements of two curves, minimal bigons, bigon
//!   removal under support constraints, arc/loop straightening traces,
//!   fillings, geometric intersection numbers and incidence levelling.
//! * [`braid`] — geometric pure braids: validity, linking numbers, braid
//!   words from the x-projection, the Artin action on the free group, and
//!   unlinkedness decisions.
//!
//! The crate is `no_std` compatible (with `alloc`); the `std` feature only
//! adds `std::error::Error` impls for the error types.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod braid;
pub mod curves;
pub mod freegroup;
pub mod geom;

pub mod bigon;

pub use geom::{Point, Rational};
