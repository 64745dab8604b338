use crate::{Error, Result};

/// Radius of the inner Soddy circle for three mutually tangent circles of
/// radii `r1, r2, r3` (Descartes' circle theorem).
///
/// This is the critical shell radius of three balls at mutual contact: the
/// smallest maximal shell radius over all non-overlapping configurations
/// with these radii, and it is strictly increasing in each radius.
pub fn descartes_contact_radius(r1: f64, r2: f64, r3: f64) -> Result<f64> {
    for r in [r1, r2, r3] {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidRadius(r));
        }
    }
    let sum_inv = 1.0 / r1 + 1.0 / r2 + 1.0 / r3;
    let cross = 1.0 / (r1 * r2) + 1.0 / (r2 * r3) + 1.0 / (r1 * r3);
    Ok(1.0 / (sum_inv + 2.0 * cross.sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical_ratio;

    #[test]
    fn equal_radii_reduce_to_the_critical_ratio() {
        for r in [0.25, 1.0, 7.5] {
            let d = descartes_contact_radius(r, r, r).unwrap();
            assert!((d - critical_ratio() * r).abs() < 1e-14 * r);
        }
        assert!((descartes_contact_radius(1.0, 1.0, 1.0).unwrap() - 0.1547005383792515).abs() < 1e-15);
    }

    #[test]
    fn one_two_three_gives_six_twentythirds() {
        let d = descartes_contact_radius(1.0, 2.0, 3.0).unwrap();
        assert!((d - 6.0 / 23.0).abs() < 1e-15);
    }

    #[test]
    fn huge_third_radius_approaches_the_wall_limit() {
        let d = descartes_contact_radius(1.0, 1.0, 1e6).unwrap();
        assert!((d - 0.25).abs() / 0.25 < 1e-5);
    }

    #[test]
    fn invalid_radii() {
        assert!(descartes_contact_radius(0.0, 1.0, 1.0).is_err());
        assert!(descartes_contact_radius(1.0, -2.0, 1.0).is_err());
    }

    #[test]
    fn strictly_increasing_in_each_radius() {
        let base = [0.7, 1.3, 4.2];
        let d0 = descartes_contact_radius(base[0], base[1], base[2]).unwrap();
        for i in 0..3 {
            let mut r = base;
            r[i] += 1e-6;
            let d1 = descartes_contact_radius(r[0], r[1], r[2]).unwrap();
            assert!(d1 > d0);
        }
    }
}
