use super::Point;
use crate::tol::{clamped_acos, COLLINEAR_TOL};
use crate::{Error, Result};

/// Side lengths and interior angles of the triangle spanned by three ball
/// centers.
///
/// Indexing follows the usual convention: `sides[i]` is the length of the
/// side opposite corner `i`, and `angles[i]` is the interior angle at corner
/// `i`, in radians. Degenerate (collinear) triangles are flagged rather than
/// rejected; their angles come out as `{0, pi, 0}`.
#[derive(Debug, Clone)]
pub struct TriangleGeometry {
    pub corners: [Point; 3],
    pub sides: [f64; 3],
    pub angles: [f64; 3],
    pub collinear: bool,
}

impl TriangleGeometry {
    /// Twice the (unsigned) triangle area, via Kahan's numerically stable
    /// form of Heron's formula.
    pub fn double_area(&self) -> f64 {
        let mut s = self.sides;
        s.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let (a, b, c) = (s[0], s[1], s[2]);
        let t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
        0.5 * t.max(0.0).sqrt()
    }
}

/// Builds the triangle geometry from three coplanar centers.
///
/// For centers in `R^n` with `n > 2`, apply the plane reduction first; side
/// lengths and angles only depend on pairwise distances, so the function
/// accepts any common dimension.
pub fn triangle_from_centers(r1: &Point, r2: &Point, r3: &Point) -> Result<TriangleGeometry> {
    let n = r1.dim();
    r2.check_dim(n)?;
    r3.check_dim(n)?;

    let sides = [r2.dist(r3), r1.dist(r3), r1.dist(r2)];
    if sides.iter().any(|&l| l == 0.0) {
        return Err(Error::CoincidentPoints);
    }

    let max_side = sides.iter().cloned().fold(0.0, f64::max);
    let [l1, l2, l3] = sides;

    // Cosine rule at each corner; arguments may leave [-1,1] by roundoff for
    // flat triangles, which the clamp absorbs.
    let a1 = clamped_acos((l2 * l2 + l3 * l3 - l1 * l1) / (2.0 * l2 * l3))?;
    let a2 = clamped_acos((l1 * l1 + l3 * l3 - l2 * l2) / (2.0 * l1 * l3))?;
    let a3 = clamped_acos((l1 * l1 + l2 * l2 - l3 * l3) / (2.0 * l1 * l2))?;

    let tri = TriangleGeometry {
        corners: [r1.clone(), r2.clone(), r3.clone()],
        sides,
        angles: [a1, a2, a3],
        collinear: false,
    };
    let collinear = tri.double_area() < COLLINEAR_TOL * max_side * max_side;
    Ok(TriangleGeometry { collinear, ..tri })
}
