//! Geometry of depletion shells around hard bodies.
//!
//! A hard body `C` dilated by a shell radius `delta` is its outer parallel
//! body `C(delta) = { x : dist(x, C) <= delta }`. For three non-overlapping
//! bodies there is a unique maximal shell radius at which the three dilations
//! first share a common point; below it the union volume of the shells is an
//! exact pairwise (inclusion-exclusion) expression, which is what makes the
//! effective pair description of an Asakura-Oosawa mixture exact.
//!
//! The crate provides:
//!
//! - [`geom`]: n-dimensional points, balls, half-spaces, triangle geometry
//!   and the plane reduction for triplets of balls.
//! - [`delta_max`]: the maximal shell radius for a ball triplet via the
//!   threshold/tangent-circle dichotomy, Descartes' contact formula, an
//!   angle-equation bisection cross-check, and the hard-wall variant.
//! - [`criteria`]: rolling radii of convex shapes and the sufficient
//!   triple-overlap criteria for mixtures, walls, and inner-body refinements.
//! - [`oracle`]: independent brute force - convex minimax of the distance
//!   objective, grid emptiness tests, Monte Carlo union volumes, and exact
//!   two-ball lens overlaps.
//! - [`potential`]: the Asakura-Oosawa effective depletion pair potential
//!   and CSV potential tables.
//! - [`sample`]: reproducible random configuration generators for the
//!   verification campaigns.

pub mod criteria;
pub mod delta_max;
mod error;
pub mod geom;
pub mod oracle;
pub mod potential;
pub mod sample;
pub mod tol;

pub use error::{Error, Result};
pub use geom::{Ball, ConfigurationTriplet, HalfSpace, PlaneMap, Point, TriangleGeometry};

/// The ratio `2/sqrt(3) - 1` of the critical shell radius to the ball radius
/// for equal balls at mutual contact.
pub fn critical_ratio() -> f64 {
    2.0 / 3.0_f64.sqrt() - 1.0
}
