use serde::{Deserialize, Serialize};

/// The single numeric-policy value behind every validity check in the crate.
///
/// A `Tolerance` carries one base value (default `1e-10`). Checks against
/// quantities that scale with the data (Hermiticity defects, completeness
/// sums, trace deviations) use [`Tolerance::scaled`], which is relative to
/// the magnitude of the operator being checked; rank decisions use
/// [`Tolerance::rank_cut`], relative to the largest eigenvalue or singular
/// value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    base: f64,
}

impl Tolerance {
    pub const DEFAULT_BASE: f64 = 1e-10;

    pub fn new(base: f64) -> Self {
        assert!(base > 0.0 && base.is_finite(), "tolerance must be positive");
        Self { base }
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    /// Absolute threshold for a quantity whose natural scale is `scale`.
    /// Never tighter than the base value itself.
    pub fn scaled(&self, scale: f64) -> f64 {
        self.base * scale.max(1.0)
    }

    /// Threshold separating numerical zeros from genuine spectrum,
    /// relative to the dominant eigenvalue or singular value.
    pub fn rank_cut(&self, largest: f64) -> f64 {
        self.base * largest.max(self.base)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            base: Self::DEFAULT_BASE,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_is_relative_but_floored() {
        let tol = Tolerance::default();
        assert_eq!(tol.scaled(100.0), 1e-8);
        assert_eq!(tol.scaled(0.001), 1e-10);
    }

    #[test]
    #[should_panic]
    fn rejects_nonpositive_base() {
        Tolerance::new(0.0);
    }
}
