//! Vectors, hyperplanes and halfspaces with their closed-form projections.
//!
//! A hyperplane is `H(u, a) = {x : <u, x> = <u, a>}` and the halfspace it
//! bounds is `H_-(u, a) = {x : <u, x> <= <u, a>}`. Normals are kept exactly
//! as supplied; formulas that assume a unit normal normalize internally.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::tol::Tolerance;

/// Dense coordinate vector over f64.
pub type Vector = DVector<f64>;

/// Build a vector from a slice, rejecting non-finite entries.
pub fn vector_from_slice(coords: &[f64]) -> Result<Vector> {
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(Vector::from_column_slice(coords))
}

pub(crate) fn ensure_finite(x: &Vector) -> Result<()> {
    if x.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

pub(crate) fn ensure_dim(expected: usize, x: &Vector) -> Result<()> {
    if x.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: x.len(),
        });
    }
    Ok(())
}

/// Standard inner product `sum_i x^i y^i`.
pub fn inner(x: &Vector, y: &Vector) -> Result<f64> {
    ensure_dim(x.len(), y)?;
    Ok(x.dot(y))
}

/// Hyperplane `H(u, a)` with normal `u` and anchor point `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: Vector,
    anchor: Vector,
}

impl Hyperplane {
    pub fn new(normal: Vector, anchor: Vector) -> Result<Self> {
        ensure_finite(&normal)?;
        ensure_finite(&anchor)?;
        ensure_dim(normal.len(), &anchor)?;
        if normal.norm() == 0.0 {
            return Err(Error::ZeroNormal);
        }
        Ok(Self { normal, anchor })
    }

    pub fn through_origin(normal: Vector) -> Result<Self> {
        let dim = normal.len();
        Self::new(normal, Vector::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn anchor(&self) -> &Vector {
        &self.anchor
    }

    /// Right-hand side `<u, a>` of the defining equation.
    pub fn offset(&self) -> f64 {
        self.normal.dot(&self.anchor)
    }

    /// Signed excess `<u, x> - <u, a>`, normalized by `||u||`.
    pub fn signed_distance(&self, x: &Vector) -> f64 {
        (self.normal.dot(x) - self.offset()) / self.normal.norm()
    }

    pub fn contains(&self, x: &Vector, tol: &Tolerance) -> bool {
        self.signed_distance(x).abs() <= tol.at(x.norm().max(self.anchor.norm()))
    }

    /// Orthogonal projection `x - (<u, x - a> / ||u||^2) u`.
    pub fn project(&self, x: &Vector) -> Result<Vector> {
        ensure_dim(self.dim(), x)?;
        let u = &self.normal;
        let excess = u.dot(&(x - &self.anchor)) / u.norm_squared();
        Ok(x - u * excess)
    }

    /// Orthonormal basis of the tangent space (the orthogonal complement of
    /// the normal), built from the Householder reflector that maps the unit
    /// normal onto a coordinate axis.
    pub fn tangent_basis(&self) -> Vec<Vector> {
        let m = self.dim();
        let v = self.normal.normalize();
        let k = v.iamax();
        let sign = if v[k] >= 0.0 { 1.0 } else { -1.0 };
        let mut w = v.clone();
        w[k] += sign;
        let wnorm2 = w.norm_squared();
        let mut basis = Vec::with_capacity(m - 1);
        for j in 0..m {
            if j == k {
                continue;
            }
            // column j of H = I - 2 w w^T / ||w||^2
            let mut col = Vector::zeros(m);
            col[j] = 1.0;
            let coeff = 2.0 * w[j] / wnorm2;
            col -= &w * coeff;
            basis.push(col);
        }
        basis
    }

    /// The halfspace `H_-` bounded by this hyperplane.
    pub fn lower_halfspace(&self) -> Halfspace {
        Halfspace {
            normal: self.normal.clone(),
            anchor: self.anchor.clone(),
        }
    }
}

/// Closed halfspace `H_-(u, a) = {x : <u, x> <= <u, a>}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    normal: Vector,
    anchor: Vector,
}

impl Halfspace {
    pub fn new(normal: Vector, anchor: Vector) -> Result<Self> {
        let h = Hyperplane::new(normal, anchor)?;
        Ok(h.lower_halfspace())
    }

    /// Halfspace `{x : <u, x> <= offset}` anchored on the boundary.
    pub fn from_offset(normal: Vector, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::NonFinite);
        }
        let norm2 = normal.norm_squared();
        if norm2 == 0.0 {
            return Err(Error::ZeroNormal);
        }
        let anchor = &normal * (offset / norm2);
        Self::new(normal, anchor)
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn anchor(&self) -> &Vector {
        &self.anchor
    }

    pub fn offset(&self) -> f64 {
        self.normal.dot(&self.anchor)
    }

    /// Positive when `x` lies outside, normalized by `||u||`.
    pub fn signed_distance(&self, x: &Vector) -> f64 {
        (self.normal.dot(x) - self.offset()) / self.normal.norm()
    }

    pub fn contains(&self, x: &Vector, tol: &Tolerance) -> bool {
        self.signed_distance(x) <= tol.at(x.norm().max(self.anchor.norm()))
    }

    /// Identity on feasible points, hyperplane projection otherwise.
    pub fn project(&self, x: &Vector) -> Result<Vector> {
        ensure_dim(self.dim(), x)?;
        if self.signed_distance(x) <= 0.0 {
            return Ok(x.clone());
        }
        self.boundary().project(x)
    }

    pub fn boundary(&self) -> Hyperplane {
        Hyperplane {
            normal: self.normal.clone(),
            anchor: self.anchor.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn v(coords: &[f64]) -> Vector {
        Vector::from_column_slice(coords)
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
        assert_eq!(inner(&v(&[1.0, 2.0]), &v(&[3.0, 4.0])).unwrap(), 11.0);
        assert_eq!(inner(&v(&[1.0, -1.0]), &v(&[1.0, -1.0])).unwrap(), 2.0);
        assert!(matches!(
            inner(&v(&[1.0]), &v(&[1.0, 2.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hyperplane_projection_drops_coordinate() {
        let h = Hyperplane::through_origin(v(&[0.0, 1.0])).unwrap();
        let p = h.project(&v(&[3.0, 5.0])).unwrap();
        assert_eq!(p, v(&[3.0, 0.0]));
    }

    #[test]
    fn hyperplane_projection_is_idempotent() {
        let h = Hyperplane::new(v(&[1.0, 2.0, -1.0]), v(&[0.5, 0.0, 1.0])).unwrap();
        let y = v(&[3.0, -2.0, 4.0]);
        let p = h.project(&y).unwrap();
        let pp = h.project(&p).unwrap();
        assert_relative_eq!((pp - &p).norm(), 0.0, epsilon = 1e-12);
        let tol = Tolerance::default();
        assert!(h.contains(&p, &tol));
    }

    // Correctness of the diagonal projection, certified against the nearest-
    // point characterization <p - y, p - z> <= 0 over sampled points z in H.
    #[test]
    fn hyperplane_projection_satisfies_characterization() {
        let s = 1.0 / 2.0_f64.sqrt();
        let h = Hyperplane::through_origin(v(&[s, s])).unwrap();
        let y = v(&[1.0, 0.0]);
        let p = h.project(&y).unwrap();
        assert_relative_eq!(p[0], 0.5, epsilon = 1e-12);
        assert_relative_eq!(p[1], -0.5, epsilon = 1e-12);
        for k in -50..=50 {
            let z = v(&[k as f64 * 0.3, -k as f64 * 0.3]);
            assert!(h.contains(&z, &Tolerance::default()));
            let lhs = (&p - &y).dot(&(&p - &z));
            assert!(lhs <= 1e-12, "characterization violated at z = {z}");
        }
    }

    #[test]
    fn halfspace_projection_examples() {
        let s = Halfspace::through(v(&[1.0, 0.0]));
        let inside = v(&[-1.0, 4.0]);
        assert_eq!(s.project(&inside).unwrap(), inside);
        let boundary = v(&[0.0, 2.0]);
        assert_eq!(s.project(&boundary).unwrap(), boundary);
        assert_eq!(s.project(&v(&[2.0, 7.0])).unwrap(), v(&[0.0, 7.0]));
    }

    impl Halfspace {
        fn through(normal: Vector) -> Self {
            let dim = normal.len();
            Halfspace::new(normal, Vector::zeros(dim)).unwrap()
        }
    }

    #[test]
    fn zero_normal_rejected_at_construction() {
        assert!(matches!(
            Hyperplane::through_origin(v(&[0.0, 0.0])),
            Err(Error::ZeroNormal)
        ));
        assert!(matches!(
            Halfspace::new(v(&[0.0]), v(&[1.0])),
            Err(Error::ZeroNormal)
        ));
    }

    #[test]
    fn tangent_basis_is_orthonormal_complement() {
        let h = Hyperplane::through_origin(v(&[1.0, -2.0, 0.5, 3.0])).unwrap();
        let basis = h.tangent_basis();
        assert_eq!(basis.len(), 3);
        for (i, bi) in basis.iter().enumerate() {
            assert_relative_eq!(bi.norm(), 1.0, epsilon = 1e-12);
            assert_relative_eq!(bi.dot(h.normal()), 0.0, epsilon = 1e-12);
            for bj in basis.iter().skip(i + 1) {
                assert_relative_eq!(bi.dot(bj), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn non_finite_rejected() {
        assert!(matches!(
            vector_from_slice(&[1.0, f64::NAN]),
            Err(Error::NonFinite)
        ));
        assert!(matches!(
            Hyperplane::through_origin(v(&[f64::INFINITY])),
            Err(Error::NonFinite)
        ));
    }
}
