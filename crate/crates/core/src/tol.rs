//! Shared numerical tolerances.
//!
//! All geometric predicates work in double precision with absolute
//! tolerances scaled by the largest input radius (or side length where no
//! radius exists). There is deliberately a single knob per predicate class.

/// Absolute tolerance for geometric predicates, in units of the largest
/// input radius.
pub const GEOM_TOL: f64 = 1e-9;

/// A triangle counts as collinear when twice its area is below
/// `COLLINEAR_TOL * (max side)^2`.
pub const COLLINEAR_TOL: f64 = 1e-9;

/// Maximum amount an arccos argument may fall outside `[-1, 1]` before the
/// clamp is treated as a numerical failure instead of roundoff.
pub const ACOS_CLAMP_TOL: f64 = 1e-9;

/// Relative step-size threshold below which the derivative-free minimax
/// descent is considered converged.
pub const MINIMAX_STEP_TOL: f64 = 1e-12;

/// Scale-aware absolute tolerance.
pub fn geom_tol(scale: f64) -> f64 {
    GEOM_TOL * scale.max(1e-300)
}

/// Clamp `x` into `[-1, 1]`, failing if it lies further than
/// [`ACOS_CLAMP_TOL`] outside.
pub fn clamped_acos(x: f64) -> crate::Result<f64> {
    if x > 1.0 + ACOS_CLAMP_TOL || x < -1.0 - ACOS_CLAMP_TOL {
        return Err(crate::Error::Numerical(format!(
            "arccos argument {x} outside [-1, 1] beyond tolerance"
        )));
    }
    Ok(x.clamp(-1.0, 1.0).acos())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn acos_clamps_roundoff() {
        assert_eq!(clamped_acos(1.0 + 1e-12).unwrap(), 0.0);
        assert_eq!(clamped_acos(-1.0 - 1e-12).unwrap(), std::f64::consts::PI);
        assert!(clamped_acos(1.1).is_err());
    }
}
