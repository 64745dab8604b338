use crate::geom::{ConfigurationTriplet, Point};
use crate::tol::COLLINEAR_TOL;
use crate::{Error, Result};

/// Tangency type of a solution circle with respect to one of the given
/// disks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tangency {
    /// Solution circle and disk touch from the outside:
    /// `|p - r_i| = R_i + delta`.
    External,
    /// Solution circle contains the disk: `|p - r_i| = delta - R_i`.
    Internal,
}

/// One solution of the Apollonius tangency problem.
#[derive(Debug, Clone)]
pub struct ApolloniusCircle {
    pub center: Point,
    pub radius: f64,
    pub signs: [Tangency; 3],
}

/// All externally tangent solution circles (radius > 0) for three disks
/// with disjoint interiors and non-collinear centers. Returns zero, one, or
/// two circles.
pub fn apollonius_solve(cfg: &ConfigurationTriplet) -> Result<Vec<ApolloniusCircle>> {
    apollonius_solve_signed(cfg, [Tangency::External; 3])
}

/// Solution circles for an arbitrary tangency sign choice.
///
/// The three tangency conditions `|p - r_i| = rho_i + delta` (with
/// `rho_i = +R_i` external, `-R_i` internal) are quadratic in the center
/// `p`; subtracting them pairwise leaves two linear equations, so `p` is an
/// affine function of `delta` and one quadratic in `delta` remains. Roots
/// with `delta <= 0` or a negative tangent distance are discarded.
pub fn apollonius_solve_signed(
    cfg: &ConfigurationTriplet,
    signs: [Tangency; 3],
) -> Result<Vec<ApolloniusCircle>> {
    if cfg.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: cfg.dim(),
        });
    }
    let balls = cfg.balls();
    let c: Vec<&Point> = balls.iter().map(|b| b.center()).collect();
    let rho: Vec<f64> = balls
        .iter()
        .zip(&signs)
        .map(|(b, s)| match s {
            Tangency::External => b.radius(),
            Tangency::Internal => -b.radius(),
        })
        .collect();

    let d10 = c[1].sub(c[0]);
    let d20 = c[2].sub(c[0]);
    let det = 4.0 * (d10.coord(0) * d20.coord(1) - d10.coord(1) * d20.coord(0));
    let max_side = d10
        .norm()
        .max(d20.norm())
        .max(c[1].dist(c[2]));
    // |det| = 8 * triangle area; the same collinearity threshold as the
    // triangle geometry keeps the two code paths consistent.
    if det.abs() < 4.0 * COLLINEAR_TOL * max_side * max_side {
        return Err(Error::CollinearCenters);
    }

    // Row i of the linear system: 2 (c_i - c_0) . p + 2 (rho_i - rho_0) delta
    //   = |c_i|^2 - |c_0|^2 + rho_0^2 - rho_i^2
    let a11 = 2.0 * d10.coord(0);
    let a12 = 2.0 * d10.coord(1);
    let a21 = 2.0 * d20.coord(0);
    let a22 = 2.0 * d20.coord(1);
    let b1 = c[1].dot(c[1]) - c[0].dot(c[0]) + rho[0] * rho[0] - rho[1] * rho[1];
    let b2 = c[2].dot(c[2]) - c[0].dot(c[0]) + rho[0] * rho[0] - rho[2] * rho[2];
    let e1 = 2.0 * (rho[1] - rho[0]);
    let e2 = 2.0 * (rho[2] - rho[0]);

    let solve2 = |r1: f64, r2: f64| -> (f64, f64) {
        let d = a11 * a22 - a12 * a21;
        ((r1 * a22 - r2 * a12) / d, (a11 * r2 - a21 * r1) / d)
    };
    let (p0x, p0y) = solve2(b1, b2);
    let (p1x, p1y) = solve2(-e1, -e2);

    // Substitute p(delta) = p0 + p1 delta into the first tangency equation.
    let wx = p0x - c[0].coord(0);
    let wy = p0y - c[0].coord(1);
    let qa = p1x * p1x + p1y * p1y - 1.0;
    let qb = 2.0 * (wx * p1x + wy * p1y - rho[0]);
    let qc = wx * wx + wy * wy - rho[0] * rho[0];

    let mut roots: Vec<f64> = Vec::new();
    if qa.abs() < 1e-14 {
        if qb.abs() > 0.0 {
            roots.push(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        let disc_tol = 1e-12 * (qb * qb + (4.0 * qa * qc).abs());
        if disc >= -disc_tol {
            let s = disc.max(0.0).sqrt();
            if qb == 0.0 {
                let r = (-qc / qa).max(0.0).sqrt();
                roots.extend([r, -r]);
            } else {
                let q = -0.5 * (qb + qb.signum() * s);
                roots.push(q / qa);
                if q != 0.0 {
                    roots.push(qc / q);
                }
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * (a.abs() + b.abs() + 1.0));

    let mut out = Vec::new();
    for delta in roots {
        if !(delta > 0.0 && delta.is_finite()) {
            continue;
        }
        // Each tangent distance rho_i + delta must be a true (nonnegative)
        // distance, otherwise the root belongs to a different sign family.
        if rho.iter().any(|&r| r + delta < 0.0) {
            continue;
        }
        let center = Point::xy(p0x + p1x * delta, p0y + p1y * delta);
        out.push(ApolloniusCircle {
            center,
            radius: delta,
            signs,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical_ratio;
    use crate::delta_max::descartes_contact_radius;
    use crate::geom::Ball;

    fn cfg(centers: [[f64; 2]; 3], radii: [f64; 3]) -> ConfigurationTriplet {
        let balls = [
            Ball::new(Point::xy(centers[0][0], centers[0][1]), radii[0]).unwrap(),
            Ball::new(Point::xy(centers[1][0], centers[1][1]), radii[1]).unwrap(),
            Ball::new(Point::xy(centers[2][0], centers[2][1]), radii[2]).unwrap(),
        ];
        ConfigurationTriplet::new(balls).unwrap()
    }

    #[test]
    fn unit_disks_at_contact() {
        let c = cfg(
            [[0.0, 0.0], [2.0, 0.0], [1.0, 1.7320508075688772]],
            [1.0, 1.0, 1.0],
        );
        let sols = apollonius_solve(&c).unwrap();
        assert_eq!(sols.len(), 1);
        assert!((sols[0].radius - critical_ratio()).abs() < 1e-14);
        let centroid = Point::xy(1.0, 1.7320508075688772 / 3.0);
        assert!(sols[0].center.dist(&centroid) < 1e-12);
    }

    #[test]
    fn mixed_radii_at_contact_match_descartes() {
        // radii (1,2,3) at contact: right triangle with sides 3, 4, 5
        let c = cfg([[0.0, 0.0], [3.0, 0.0], [0.0, 4.0]], [1.0, 2.0, 3.0]);
        let sols = apollonius_solve(&c).unwrap();
        let expect = descartes_contact_radius(1.0, 2.0, 3.0).unwrap();
        assert!(sols.iter().any(|s| (s.radius - expect).abs() < 1e-12));
    }

    #[test]
    fn collinear_centers_are_rejected() {
        let c = cfg([[0.0, 0.0], [2.0, 0.0], [4.0, 0.0]], [1.0, 1.0, 1.0]);
        assert!(matches!(
            apollonius_solve(&c),
            Err(Error::CollinearCenters)
        ));
    }

    #[test]
    fn tangent_distances_are_consistent() {
        let c = cfg([[0.0, 0.0], [3.1, 0.2], [1.0, 2.9]], [1.0, 0.8, 1.3]);
        for s in apollonius_solve(&c).unwrap() {
            for (b, _) in c.balls().iter().zip(s.signs) {
                let d = s.center.dist(b.center());
                assert!((d - (b.radius() + s.radius)).abs() < 1e-10);
            }
        }
    }
}
