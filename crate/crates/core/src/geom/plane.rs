use super::{Ball, ConfigurationTriplet, Point};
use crate::tol::COLLINEAR_TOL;
use crate::{Error, Result};

/// Record of the affine map between a 2D reduction plane and the ambient
/// space `R^n`: `lift((a, b)) = origin + a * u + b * v` with `u, v`
/// orthonormal.
#[derive(Debug, Clone)]
pub struct PlaneMap {
    origin: Point,
    u: Point,
    v: Point,
}

impl PlaneMap {
    /// The identity map of the plane itself.
    pub fn identity_2d() -> Self {
        Self {
            origin: Point::xy(0.0, 0.0),
            u: Point::xy(1.0, 0.0),
            v: Point::xy(0.0, 1.0),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    /// In-plane coordinates of an ambient point (orthogonal projection).
    pub fn to_plane(&self, x: &Point) -> Point {
        let d = x.sub(&self.origin);
        Point::xy(d.dot(&self.u), d.dot(&self.v))
    }

    /// Ambient point for in-plane coordinates.
    pub fn lift(&self, p2: &Point) -> Point {
        self.origin
            .add_scaled(&self.u, p2.coord(0))
            .add_scaled(&self.v, p2.coord(1))
    }

    /// Orthogonal projection of an ambient point onto the plane, as an
    /// ambient point.
    pub fn project(&self, x: &Point) -> Point {
        self.lift(&self.to_plane(x))
    }
}

/// Reduces a triplet of balls in `R^n` to coplanar disks.
///
/// Returns disks with the same radii and pairwise center distances as the
/// input, together with the map for lifting in-plane points back to the
/// ambient space. A 2D input maps to itself. For collinear centers the plane
/// is completed deterministically with the canonical basis vector of
/// smallest index that is not parallel to the center line.
pub fn reduce_to_plane(cfg: &ConfigurationTriplet) -> Result<(ConfigurationTriplet, PlaneMap)> {
    let n = cfg.dim();
    if n == 2 {
        return Ok((cfg.clone(), PlaneMap::identity_2d()));
    }
    let [b1, b2, b3] = cfg.balls();
    let (r1, r2, r3) = (b1.center(), b2.center(), b3.center());

    let origin = r1.clone();
    let d12 = r2.sub(r1);
    let u = d12.normalized()?;

    let d13 = r3.sub(r1);
    let mut v_raw = d13.add_scaled(&u, -d13.dot(&u));
    let scale = d12.norm().max(d13.norm());
    if v_raw.norm() < COLLINEAR_TOL * scale {
        // Collinear centers: complete with the lowest-index canonical basis
        // vector not parallel to the line.
        let mut best = None;
        for k in 0..n {
            let mut e = vec![0.0; n];
            e[k] = 1.0;
            let e = Point::new(e)?;
            let w = e.add_scaled(&u, -e.dot(&u));
            if w.norm() > 0.5 {
                best = Some(w);
                break;
            }
        }
        v_raw = best.ok_or(Error::CoincidentPoints)?;
    }
    let v = v_raw.normalized()?;

    let map = PlaneMap { origin, u, v };
    let disks = [
        Ball::new(map.to_plane(r1), b1.radius())?,
        Ball::new(map.to_plane(r2), b2.radius())?,
        Ball::new(map.to_plane(r3), b3.radius())?,
    ];
    Ok((ConfigurationTriplet::new(disks)?, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triplet(centers: [[f64; 3]; 3], radii: [f64; 3]) -> ConfigurationTriplet {
        let balls = [
            Ball::new(Point::new(centers[0].to_vec()).unwrap(), radii[0]).unwrap(),
            Ball::new(Point::new(centers[1].to_vec()).unwrap(), radii[1]).unwrap(),
            Ball::new(Point::new(centers[2].to_vec()).unwrap(), radii[2]).unwrap(),
        ];
        ConfigurationTriplet::new(balls).unwrap()
    }

    #[test]
    fn two_d_is_identity() {
        let balls = [
            Ball::new(Point::xy(0.0, 0.0), 1.0).unwrap(),
            Ball::new(Point::xy(3.0, 0.0), 1.0).unwrap(),
            Ball::new(Point::xy(0.0, 3.0), 1.0).unwrap(),
        ];
        let cfg = ConfigurationTriplet::new(balls).unwrap();
        let (disks, map) = reduce_to_plane(&cfg).unwrap();
        for (d, b) in disks.balls().iter().zip(cfg.balls()) {
            assert_eq!(d.center(), b.center());
            assert_eq!(d.radius(), b.radius());
        }
        let p = Point::xy(0.25, -1.5);
        assert_eq!(map.lift(&p), p);
    }

    #[test]
    fn coplanar_3d_drops_third_coordinate() {
        let cfg = triplet(
            [[0.0, 0.0, 0.0], [4.0, 0.0, 0.0], [0.0, 4.0, 0.0]],
            [1.0, 1.0, 1.0],
        );
        let (disks, _) = reduce_to_plane(&cfg).unwrap();
        let c: Vec<_> = disks.balls().iter().map(|b| b.center().clone()).collect();
        assert!(c[0].dist(&Point::xy(0.0, 0.0)) < 1e-12);
        assert!(c[1].dist(&Point::xy(4.0, 0.0)) < 1e-12);
        assert!(c[2].dist(&Point::xy(0.0, 4.0)) < 1e-12);
    }

    #[test]
    fn distances_preserved_for_skew_centers() {
        let cfg = triplet(
            [[0.0, 0.0, 0.0], [4.0, 0.0, 0.0], [2.0, 3.0, 5.0]],
            [1.0, 1.0, 1.0],
        );
        let (disks, map) = reduce_to_plane(&cfg).unwrap();
        let c: Vec<_> = disks.balls().iter().map(|b| b.center().clone()).collect();
        assert!((c[0].dist(&c[1]) - 4.0).abs() < 1e-12);
        assert!((c[0].dist(&c[2]) - 38.0_f64.sqrt()).abs() < 1e-12);
        assert!((c[1].dist(&c[2]) - 38.0_f64.sqrt()).abs() < 1e-12);
        // lifting the plane coordinates recovers the ambient centers
        for (d, b) in disks.balls().iter().zip(cfg.balls()) {
            assert!(map.lift(d.center()).dist(b.center()) < 1e-12);
        }
    }

    #[test]
    fn collinear_centers_get_a_deterministic_plane() {
        let cfg = triplet(
            [[0.0, 0.0, 0.0], [2.0, 0.0, 0.0], [5.0, 0.0, 0.0]],
            [1.0, 1.0, 1.0],
        );
        let (disks, map) = reduce_to_plane(&cfg).unwrap();
        let c: Vec<_> = disks.balls().iter().map(|b| b.center().clone()).collect();
        assert!((c[0].dist(&c[1]) - 2.0).abs() < 1e-12);
        assert!((c[1].dist(&c[2]) - 3.0).abs() < 1e-12);
        // line direction is e_x, so e_y is the completion
        assert!(map.lift(&Point::xy(0.0, 1.0)).dist(&Point::xyz(0.0, 1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn projection_never_increases_ball_distance() {
        let cfg = triplet(
            [[0.0, 0.0, 0.0], [4.0, 0.5, 0.0], [2.0, 3.0, 5.0]],
            [1.0, 1.5, 2.0],
        );
        let (_, map) = reduce_to_plane(&cfg).unwrap();
        let x = Point::xyz(1.0, -2.0, 7.0);
        let xp = map.project(&x);
        for b in cfg.balls() {
            assert!(b.distance_to(&xp) <= b.distance_to(&x) + 1e-12);
        }
    }
}
