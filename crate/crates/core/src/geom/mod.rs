//! Foundational n-dimensional geometry: points, balls, half-space walls,
//! triangle geometry from ball centers, and the plane reduction that turns
//! an n-dimensional ball triplet into a coplanar disk problem.

mod ball;
mod plane;
mod point;
mod triangle;
mod triplet;

pub use ball::{dist_point_ball, in_dilation, Ball, HalfSpace};
pub use plane::{reduce_to_plane, PlaneMap};
pub use point::Point;
pub use triangle::{triangle_from_centers, TriangleGeometry};
pub use triplet::ConfigurationTriplet;
