use serde::{Deserialize, Serialize};

use crate::geometry::Vector;

/// Absolute-plus-relative comparison tolerance, `tol(s) = eps_abs + eps_rel * s`
/// where `s` is the magnitude of the quantities being compared.
///
/// Every membership and equality check in the crate goes through one of these,
/// so a single `Tolerance` value controls the numerics of a whole run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_abs: f64,
    pub eps_rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_abs: 1e-9,
            eps_rel: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(eps_abs: f64, eps_rel: f64) -> Self {
        Self { eps_abs, eps_rel }
    }

    /// Tolerance at the given magnitude.
    pub fn at(&self, scale: f64) -> f64 {
        self.eps_abs + self.eps_rel * scale.abs()
    }

    /// Tolerance scaled to a vector's norm.
    pub fn for_vec(&self, x: &Vector) -> f64 {
        self.at(x.norm())
    }

    /// Strict-violation threshold: residuals must exceed this to count as a
    /// refutation, residuals in `(at(scale), band(scale)]` are ambiguous.
    pub fn band(&self, scale: f64) -> f64 {
        10.0 * self.at(scale)
    }

    /// Scale-aware vector equality.
    pub fn vec_eq(&self, a: &Vector, b: &Vector) -> bool {
        if a.len() != b.len() {
            return false;
        }
        (a - b).norm() <= self.at(a.norm().max(b.norm()))
    }
}
