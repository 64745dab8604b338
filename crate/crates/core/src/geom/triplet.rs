use super::Ball;
use crate::tol::geom_tol;
use crate::{Error, Result};

/// Three balls with pairwise disjoint interiors (contact allowed).
#[derive(Debug, Clone)]
pub struct ConfigurationTriplet {
    balls: [Ball; 3],
}

impl ConfigurationTriplet {
    pub fn new(balls: [Ball; 3]) -> Result<Self> {
        let n = balls[0].dim();
        for b in &balls[1..] {
            b.center().check_dim(n)?;
        }
        let tol = geom_tol(balls.iter().map(Ball::radius).fold(0.0, f64::max));
        for i in 0..3 {
            for j in (i + 1)..3 {
                let gap = balls[i].center().dist(balls[j].center())
                    - balls[i].radius()
                    - balls[j].radius();
                if gap < -tol {
                    return Err(Error::Overlap {
                        i,
                        j,
                        penetration: -gap,
                    });
                }
            }
        }
        Ok(Self { balls })
    }

    pub fn balls(&self) -> &[Ball; 3] {
        &self.balls
    }

    pub fn dim(&self) -> usize {
        self.balls[0].dim()
    }

    pub fn max_radius(&self) -> f64 {
        self.balls.iter().map(Ball::radius).fold(0.0, f64::max)
    }

    pub fn min_radius(&self) -> f64 {
        self.balls.iter().map(Ball::radius).fold(f64::INFINITY, f64::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    #[test]
    fn rejects_overlap_and_allows_contact() {
        let unit = |x: f64, y: f64| Ball::new(Point::xy(x, y), 1.0).unwrap();
        assert!(ConfigurationTriplet::new([unit(0.0, 0.0), unit(1.5, 0.0), unit(5.0, 0.0)]).is_err());
        // mutual contact is fine
        let c = ConfigurationTriplet::new([
            unit(0.0, 0.0),
            unit(2.0, 0.0),
            unit(1.0, 3.0_f64.sqrt()),
        ]);
        assert!(c.is_ok());
    }

    #[test]
    fn names_the_offending_pair() {
        let unit = |x: f64, y: f64| Ball::new(Point::xy(x, y), 1.0).unwrap();
        let err =
            ConfigurationTriplet::new([unit(0.0, 0.0), unit(5.0, 0.0), unit(5.5, 0.0)]).unwrap_err();
        match err {
            Error::Overlap { i, j, .. } => assert_eq!((i, j), (1, 2)),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
