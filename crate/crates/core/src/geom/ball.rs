use super::Point;
use crate::{Error, Result};

/// A closed ball `B(center, radius)` in `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    center: Point,
    radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    /// Distance from `x` to the closed ball; zero inside.
    pub fn distance_to(&self, x: &Point) -> f64 {
        (x.dist(&self.center) - self.radius).max(0.0)
    }
}

/// A closed half-space `{ x : x . normal <= offset }`, modeling a hard wall.
///
/// The normal is stored with unit length; the wall surface is the hyperplane
/// `x . normal = offset` and the solid wall extends to the `-normal` side.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpace {
    normal: Point,
    offset: f64,
}

impl HalfSpace {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::NonFinite);
        }
        let normal = normal.normalized()?;
        Ok(Self { normal, offset })
    }

    pub fn normal(&self) -> &Point {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// Signed height of `x` above the wall surface (negative inside the
    /// wall).
    pub fn height(&self, x: &Point) -> f64 {
        x.dot(&self.normal) - self.offset
    }

    /// Distance from `x` to the wall body; zero inside.
    pub fn distance_to(&self, x: &Point) -> f64 {
        self.height(x).max(0.0)
    }
}

/// Distance from a point to a closed ball, zero inside the ball.
pub fn dist_point_ball(x: &Point, b: &Ball) -> Result<f64> {
    x.check_dim(b.dim())?;
    Ok(b.distance_to(x))
}

/// Whether `x` lies in the dilation `B(center, radius + delta)`.
pub fn in_dilation(x: &Point, b: &Ball, delta: f64) -> Result<bool> {
    if !(delta >= 0.0) {
        return Err(Error::NegativeDelta(delta));
    }
    Ok(dist_point_ball(x, b)? <= delta)
}
