use crate::geom::{triangle_from_centers, ConfigurationTriplet};
use crate::tol::clamped_acos;
use crate::{Error, Result};

/// How the interior angle at corner 0 splits at the tangency point, plus the
/// apex angle the tangency point sees between corners 1 and 2.
///
/// When the triple intersection point lies in the interior of the triangle,
/// the two split angles sum to the full corner angle, and the apex angle
/// equals `2*pi` minus the corner angle minus the two complementary splits
/// at corners 1 and 2.
#[derive(Debug, Clone, Copy)]
pub struct AngleSplit {
    /// Angle at corner 0 between the ray to corner 1 and the ray to the
    /// tangency point.
    pub toward_corner1: f64,
    /// Angle at corner 0 between the ray to corner 2 and the ray to the
    /// tangency point.
    pub toward_corner2: f64,
    /// Interior angle at the tangency point in the triangle spanned by the
    /// point and corners 1 and 2.
    pub apex: f64,
}

/// Split angle at a corner: the angle between the triangle side of length
/// `side` leaving the corner and the ray to the tangency point, when the
/// corner ball has radius `r_self` and the ball across that side has radius
/// `r_other`. Cosine rule in the triangle (corner, other corner, tangency
/// point) whose sides are `side`, `r_self + delta`, `r_other + delta`.
fn corner_split(side: f64, r_self: f64, r_other: f64, delta: f64) -> Result<f64> {
    let a = r_self + delta;
    let b = r_other + delta;
    clamped_acos((side * side + a * a - b * b) / (2.0 * side * a))
}

/// Full corner-0 angle subtended by the tangency point at shell radius
/// `delta`: strictly increasing in `delta`.
fn corner_angle(cfg: &ConfigurationTriplet, delta: f64) -> Result<f64> {
    let b = cfg.balls();
    let s2 = b[0].center().dist(b[1].center());
    let s1 = b[0].center().dist(b[2].center());
    let a1 = corner_split(s2, b[0].radius(), b[1].radius(), delta)?;
    let a2 = corner_split(s1, b[0].radius(), b[2].radius(), delta)?;
    Ok(a1 + a2)
}

/// Angle data at the tangency of radius `delta_star` (interior case).
pub fn angle_split(cfg: &ConfigurationTriplet, delta_star: f64) -> Result<AngleSplit> {
    let b = cfg.balls();
    let s2 = b[0].center().dist(b[1].center());
    let s1 = b[0].center().dist(b[2].center());
    let s0 = b[1].center().dist(b[2].center());
    let toward_corner1 = corner_split(s2, b[0].radius(), b[1].radius(), delta_star)?;
    let toward_corner2 = corner_split(s1, b[0].radius(), b[2].radius(), delta_star)?;
    let d1 = b[1].radius() + delta_star;
    let d2 = b[2].radius() + delta_star;
    let apex = clamped_acos((d1 * d1 + d2 * d2 - s0 * s0) / (2.0 * d1 * d2))?;
    Ok(AngleSplit {
        toward_corner1,
        toward_corner2,
        apex,
    })
}

/// Interior-case shell radius by bisection on the corner-angle equation.
///
/// Solves `corner_angle(delta) = alpha_0` (the triangle angle at corner 0)
/// over the bracket `[lo, hi]`; the map is strictly increasing, so the root
/// is unique. The upper end is expanded a bounded number of times if it does
/// not yet bracket the root. This is a cross-check for the algebraic
/// tangency solver, not the production path.
pub fn delta_star_by_bisection(cfg: &ConfigurationTriplet, bracket: (f64, f64)) -> Result<f64> {
    if cfg.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: cfg.dim(),
        });
    }
    let b = cfg.balls();
    let tri = triangle_from_centers(b[0].center(), b[1].center(), b[2].center())?;
    let target = tri.angles[0];
    let scale = cfg.max_radius() + tri.sides.iter().cloned().fold(0.0, f64::max);

    // Both arccos arguments are <= 1 only above the adjacent pairwise
    // thresholds; clamp the bracket bottom there.
    let t01 = 0.5 * (tri.sides[2] - b[0].radius() - b[1].radius()).max(0.0);
    let t02 = 0.5 * (tri.sides[1] - b[0].radius() - b[2].radius()).max(0.0);
    let mut lo = bracket.0.max(t01).max(t02);
    let mut hi = bracket.1.max(lo);

    let g = |d: f64| -> Result<f64> { Ok(corner_angle(cfg, d)? - target) };

    let glo = g(lo)?;
    if glo >= 0.0 {
        if glo < 1e-9 {
            return Ok(lo); // root at the bracket edge
        }
        return Err(Error::Numerical(format!(
            "bisection bracket starts past the root (angle excess {glo:.3e})"
        )));
    }
    let mut expansions = 0;
    while g(hi)? < 0.0 {
        expansions += 1;
        if expansions > 80 {
            return Err(Error::Numerical(
                "bisection bracket expansion failed".into(),
            ));
        }
        hi = 2.0 * hi.max(0.5 * scale);
    }

    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * scale {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}
