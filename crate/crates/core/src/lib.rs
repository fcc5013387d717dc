//! Exact-arithmetic kernels for genus-0 Gromov-Witten invariants of
//! complete intersections X_a in P^{n-1} via mirror formulas.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. The main entry point is
//! [`Engine`], which owns all per-geometry caches (hypergeometric series,
//! asymptotic-expansion data, structure-constant memo tables) and exposes
//! the invariant extraction, the two structure-constant constructions, and
//! the BPS transform.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod asym;
pub mod bps;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod hyper;
pub mod invariants;
pub mod poly;
pub mod rat;
pub mod series;
pub mod structconst;
pub mod trees;
pub mod wlaurent;

pub use engine::Engine;
pub use error::{Error, Result};
pub use geometry::CIGeometry;
pub use poly::{Poly, RationalFn};
pub use rat::Rat;
pub use series::QSeries;
pub use trees::MarkedTree;
pub use wlaurent::WLaurent;
