use crate::geom::ConfigurationTriplet;
use crate::tol::geom_tol;
use crate::{Error, Result};

/// The pairwise shell-radius thresholds of a ball triplet, sorted ascending.
///
/// `sorted[s]` is the smallest `delta` at which the dilations of the pair
/// *opposite* corner `perm[s]` touch: half the surface gap of that pair.
/// Gaps below tolerance count as contact and clamp to zero.
#[derive(Debug, Clone)]
pub struct PairwiseThresholds {
    pub sorted: [f64; 3],
    /// `perm[s]` is the original opposite-corner index of `sorted[s]`.
    pub perm: [usize; 3],
}

impl PairwiseThresholds {
    /// Largest threshold (the last pair to touch).
    pub fn max(&self) -> f64 {
        self.sorted[2]
    }

    /// Threshold for the pair opposite the given corner.
    pub fn opposite(&self, corner: usize) -> f64 {
        let s = self.perm.iter().position(|&p| p == corner).unwrap();
        self.sorted[s]
    }
}

/// Computes the three pairwise thresholds `(l_i - R_j - R_k) / 2`.
pub fn pairwise_thresholds(cfg: &ConfigurationTriplet) -> Result<PairwiseThresholds> {
    let balls = cfg.balls();
    let tol = geom_tol(cfg.max_radius());
    let mut raw = [0.0; 3];
    for i in 0..3 {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        let gap = balls[j].center().dist(balls[k].center()) - balls[j].radius() - balls[k].radius();
        if gap < -tol {
            return Err(Error::Overlap {
                i: j,
                j: k,
                penetration: -gap,
            });
        }
        raw[i] = if gap < tol { 0.0 } else { 0.5 * gap };
    }
    let mut perm = [0usize, 1, 2];
    perm.sort_by(|&a, &b| raw[a].total_cmp(&raw[b]));
    Ok(PairwiseThresholds {
        sorted: [raw[perm[0]], raw[perm[1]], raw[perm[2]]],
        perm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Ball, Point};

    fn cfg(centers: [[f64; 2]; 3], radii: [f64; 3]) -> ConfigurationTriplet {
        let balls = [
            Ball::new(Point::xy(centers[0][0], centers[0][1]), radii[0]).unwrap(),
            Ball::new(Point::xy(centers[1][0], centers[1][1]), radii[1]).unwrap(),
            Ball::new(Point::xy(centers[2][0], centers[2][1]), radii[2]).unwrap(),
        ];
        ConfigurationTriplet::new(balls).unwrap()
    }

    #[test]
    fn unit_disks_at_mutual_contact() {
        let t = pairwise_thresholds(&cfg(
            [[0.0, 0.0], [2.0, 0.0], [1.0, 1.7320508075688772]],
            [1.0, 1.0, 1.0],
        ))
        .unwrap();
        assert_eq!(t.sorted, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn separated_unit_disks() {
        let t = pairwise_thresholds(&cfg([[0.0, 0.0], [3.0, 0.0], [0.0, 3.0]], [1.0, 1.0, 1.0]))
            .unwrap();
        // the (0,0)-(3,0) pair is opposite corner 2 and has gap 1
        assert!((t.opposite(2) - 0.5).abs() < 1e-15);
        assert!((t.opposite(1) - 0.5).abs() < 1e-15);
        // the (3,0)-(0,3) pair is opposite corner 0 with gap 3*sqrt(2)-2
        assert!((t.opposite(0) - 0.5 * (3.0 * 2.0_f64.sqrt() - 2.0)).abs() < 1e-12);
        assert_eq!(t.perm[2], 0);
    }

    #[test]
    fn mixed_radii_contact_clamps_to_zero() {
        // radii (1,2,3) at mutual contact: sides 3, 4, 5
        let t = pairwise_thresholds(&cfg([[0.0, 0.0], [3.0, 0.0], [0.0, 4.0]], [1.0, 2.0, 3.0]))
            .unwrap();
        assert_eq!(t.sorted, [0.0, 0.0, 0.0]);
    }
}
