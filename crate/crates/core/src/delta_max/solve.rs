use super::apollonius::apollonius_solve;
use super::thresholds::{pairwise_thresholds, PairwiseThresholds};
use crate::geom::{reduce_to_plane, Ball, ConfigurationTriplet, Point};
use crate::tol::{geom_tol, COLLINEAR_TOL};
use crate::{Error, Result};

/// Which branch of the case split produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// The triple intersection first appears on a triangle side, at the
    /// contact point of the pair with the largest pairwise threshold.
    BoundaryContact,
    /// The triple intersection first appears strictly inside the triangle,
    /// at the center of the externally tangent solution circle.
    ApolloniusInterior,
}

/// Maximal shell radius of a ball triplet, with its witness point.
#[derive(Debug, Clone)]
pub struct DeltaMaxResult {
    pub delta_max: f64,
    /// The unique point of the triple intersection at `delta_max`, in the
    /// ambient dimension of the input.
    pub witness: Point,
    pub case: CaseTag,
    /// Tangent-circle radius when the interior case applies.
    pub apollonius_radius: Option<f64>,
    /// Set for collinear centers, which are handled by the degenerate path.
    pub collinear: bool,
}

/// Contact point of the dilated pair opposite `corner` at shell radius
/// `delta`, on the segment between the other two centers.
fn pair_contact_point(balls: &[Ball; 3], corner: usize, delta: f64) -> Point {
    let j = (corner + 1) % 3;
    let k = (corner + 2) % 3;
    let (bj, bk) = (&balls[j], &balls[k]);
    let d = bk.center().sub(bj.center());
    let l = d.norm();
    bj.center().add_scaled(&d, (bj.radius() + delta) / l)
}

fn centers_collinear(balls: &[Ball; 3]) -> bool {
    let d1 = balls[1].center().sub(balls[0].center());
    let d2 = balls[2].center().sub(balls[0].center());
    let double_area = (d1.coord(0) * d2.coord(1) - d1.coord(1) * d2.coord(0)).abs();
    let max_side = d1
        .norm()
        .max(d2.norm())
        .max(balls[1].center().dist(balls[2].center()));
    double_area < COLLINEAR_TOL * max_side * max_side
}

/// Barycentric coordinates of `p` with respect to the (2D) triangle.
fn barycentric(p: &Point, corners: [&Point; 3]) -> [f64; 3] {
    let cross = |a: &Point, b: &Point| a.coord(0) * b.coord(1) - a.coord(1) * b.coord(0);
    let v0 = corners[1].sub(corners[0]);
    let v1 = corners[2].sub(corners[0]);
    let area = cross(&v0, &v1);
    let w0 = cross(&corners[1].sub(p), &corners[2].sub(p)) / area;
    let w1 = cross(&corners[2].sub(p), &corners[0].sub(p)) / area;
    [w0, w1, 1.0 - w0 - w1]
}

/// The maximal shell radius: the unique `delta` at which the three dilated
/// balls first share a common point.
///
/// For inputs in more than two dimensions the problem is first reduced to
/// the plane through the centers and the witness lifted back. Collinear
/// centers take a degenerate path: on the center line the intersection
/// condition is an interval intersection, so the answer is exactly the
/// largest pairwise threshold, attained at the contact point of the outer
/// pair.
pub fn delta_max(cfg: &ConfigurationTriplet) -> Result<DeltaMaxResult> {
    let (flat, map) = reduce_to_plane(cfg)?;
    let mut result = delta_max_2d(&flat)?;
    if cfg.dim() != 2 {
        result.witness = map.lift(&result.witness);
    }
    Ok(result)
}

fn delta_max_2d(cfg: &ConfigurationTriplet) -> Result<DeltaMaxResult> {
    let balls = cfg.balls();
    let thresholds = pairwise_thresholds(cfg)?;
    let tol = geom_tol(cfg.max_radius());

    if centers_collinear(balls) {
        return collinear_delta_max(cfg, &thresholds);
    }

    // Boundary-contact test: the contact point of every pair realizing the
    // largest threshold, in index order, against the remaining dilation.
    let d3 = thresholds.max();
    for s in (0..3).rev() {
        if thresholds.sorted[s] < d3 - tol {
            break;
        }
    }
    let mut max_corners: Vec<usize> = (0..3)
        .filter(|&c| thresholds.opposite(c) >= d3 - tol)
        .collect();
    max_corners.sort_unstable();
    for corner in max_corners {
        let p = pair_contact_point(balls, corner, d3);
        if balls[corner].distance_to(&p) <= d3 + tol {
            return Ok(DeltaMaxResult {
                delta_max: d3,
                witness: p,
                case: CaseTag::BoundaryContact,
                apollonius_radius: None,
                collinear: false,
            });
        }
    }

    // Interior case: the externally tangent circle with center inside the
    // triangle.
    let corners = [
        balls[0].center(),
        balls[1].center(),
        balls[2].center(),
    ];
    let mut best: Option<(f64, Point)> = None;
    for sol in apollonius_solve(cfg)? {
        if sol.radius < d3 - tol {
            continue;
        }
        let bary = barycentric(&sol.center, corners);
        if bary.iter().all(|&w| w >= -1e-9) {
            match &best {
                Some((r, _)) if *r <= sol.radius => {}
                _ => best = Some((sol.radius, sol.center)),
            }
        }
    }
    if let Some((radius, center)) = best {
        return Ok(DeltaMaxResult {
            delta_max: radius,
            witness: center,
            case: CaseTag::ApolloniusInterior,
            apollonius_radius: Some(radius),
            collinear: false,
        });
    }

    // No qualifying tangent circle: numerically at the case boundary, where
    // the contact point misses the third dilation by no more than roundoff.
    let corner = thresholds.perm[2];
    let p = pair_contact_point(balls, corner, d3);
    let miss = balls[corner].distance_to(&p) - d3;
    if miss <= 16.0 * tol {
        return Ok(DeltaMaxResult {
            delta_max: d3,
            witness: p,
            case: CaseTag::BoundaryContact,
            apollonius_radius: None,
            collinear: false,
        });
    }
    Err(Error::Numerical(format!(
        "no tangent circle found and the boundary case misses by {miss:.3e}"
    )))
}

/// Collinear centers: the minimax objective is symmetric under reflection
/// across the center line and convex, so its minimum is attained on the
/// line, where the dilations are intervals. Intervals intersect exactly when
/// `delta` reaches the largest pairwise threshold, and the outer pair's
/// contact point is always covered by the middle dilation.
fn collinear_delta_max(
    cfg: &ConfigurationTriplet,
    thresholds: &PairwiseThresholds,
) -> Result<DeltaMaxResult> {
    let balls = cfg.balls();
    let d3 = thresholds.max();
    let corner = thresholds.perm[2];
    let p = pair_contact_point(balls, corner, d3);
    let tol = geom_tol(cfg.max_radius());
    let miss = balls[corner].distance_to(&p) - d3;
    if miss > tol {
        return Err(Error::Numerical(format!(
            "degenerate path: middle dilation misses the contact point by {miss:.3e}"
        )));
    }
    Ok(DeltaMaxResult {
        delta_max: d3,
        witness: p,
        case: CaseTag::BoundaryContact,
        apollonius_radius: None,
        collinear: true,
    })
}
