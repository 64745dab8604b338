//! Maximal shell radius for a triplet of balls.
//!
//! Growing a common shell radius `delta` around three non-overlapping balls,
//! the three dilations first share a point at a unique radius `delta_max`.
//! The solver follows the two-case structure of the problem:
//!
//! 1. **Boundary contact** - the two dilated balls of the pair with the
//!    largest pairwise threshold touch in a point already covered by the
//!    third dilation; then `delta_max` equals that threshold and the witness
//!    lies on a triangle side.
//! 2. **Interior tangency** - otherwise `delta_max` is the radius of the
//!    circle externally tangent to all three disks whose center lies inside
//!    the triangle of centers (an Apollonius circle).
//!
//! The production path solves the tangency system algebraically; a bisection
//! on the strictly increasing corner-angle equation provides an independent
//! cross-check, and Descartes' circle theorem gives the closed form at
//! mutual contact.

mod apollonius;
mod bisection;
mod descartes;
mod solve;
mod thresholds;
mod wall;

pub use apollonius::{apollonius_solve, apollonius_solve_signed, ApolloniusCircle, Tangency};
pub use bisection::{angle_split, delta_star_by_bisection, AngleSplit};
pub use descartes::descartes_contact_radius;
pub use solve::{delta_max, CaseTag, DeltaMaxResult};
pub use thresholds::{pairwise_thresholds, PairwiseThresholds};
pub use wall::delta_max_wall;
