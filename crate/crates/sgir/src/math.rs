//! 3-vectors (generic over the scalar type so the same shading code runs on
//! plain floats and on autodiff tape variables), unit vectors, and small
//! sphere-sampling helpers.

use crate::real::Real;
use std::ops::{Add, Deref, Div, Mul, Neg, Sub};

/// Generic 3-component vector. `V3<f64>` is the workhorse; `V3<Var>` carries
/// gradients through the differentiable shading path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct V3<R> {
    pub x: R,
    pub y: R,
    pub z: R,
}

pub type Vec3 = V3<f64>;

impl<R: Real> V3<R> {
    pub fn new(x: R, y: R, z: R) -> Self {
        V3 { x, y, z }
    }

    pub fn splat(v: R) -> Self {
        V3 { x: v, y: v, z: v }
    }

    /// Lift an f64 vector into the scalar type as constants.
    pub fn lift(v: Vec3) -> Self {
        V3::new(R::c(v.x), R::c(v.y), R::c(v.z))
    }

    pub fn dot(self, o: Self) -> R {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm_sq(self) -> R {
        self.dot(self)
    }

    pub fn norm(self) -> R {
        self.norm_sq().sqrt()
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        V3::new(self.x / n, self.y / n, self.z / n)
    }

    pub fn scale(self, s: R) -> Self {
        V3::new(self.x * s, self.y * s, self.z * s)
    }

    /// Componentwise product.
    pub fn mul_comp(self, o: Self) -> Self {
        V3::new(self.x * o.x, self.y * o.y, self.z * o.z)
    }

    pub fn cross(self, o: Self) -> Self {
        V3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn value(self) -> Vec3 {
        Vec3::new(self.x.val(), self.y.val(), self.z.val())
    }

    pub fn map<F: Fn(R) -> R>(self, f: F) -> Self {
        V3::new(f(self.x), f(self.y), f(self.z))
    }
}

impl Vec3 {
    pub const ZERO: Vec3 = V3 { x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Vec3 = V3 { x: 1.0, y: 1.0, z: 1.0 };

    pub fn min_comp(self) -> f64 {
        self.x.min(self.y).min(self.z)
    }

    pub fn max_comp(self) -> f64 {
        self.x.max(self.y).max(self.z)
    }

    pub fn abs(self) -> Vec3 {
        Vec3::new(self.x.abs(), self.y.abs(), self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Rec.709 luminance.
    pub fn luminance(self) -> f64 {
        0.2126 * self.x + 0.7152 * self.y + 0.0722 * self.z
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 3]) -> Vec3 {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl<R: Real> Add for V3<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        V3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Real> Sub for V3<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        V3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Real> Neg for V3<R> {
    type Output = Self;
    fn neg(self) -> Self {
        V3::new(-self.x, -self.y, -self.z)
    }
}

impl<R: Real> Mul<R> for V3<R> {
    type Output = Self;
    fn mul(self, s: R) -> Self {
        self.scale(s)
    }
}

impl<R: Real> Div<R> for V3<R> {
    type Output = Self;
    fn div(self, s: R) -> Self {
        V3::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Direction with unit Euclidean norm, enforced at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVec3(Vec3);

impl UnitVec3 {
    pub const TOLERANCE: f64 = 1e-6;

    /// Normalizes `v`. Returns `None` for a degenerate (near-zero) input.
    pub fn new(v: Vec3) -> Option<UnitVec3> {
        let n = v.norm();
        if !(n.is_finite() && n > 1e-12) {
            return None;
        }
        Some(UnitVec3(v.scale(1.0 / n)))
    }

    /// Wraps a vector already known to be unit length (debug-checked).
    pub fn from_unit(v: Vec3) -> UnitVec3 {
        debug_assert!((v.norm() - 1.0).abs() <= Self::TOLERANCE);
        UnitVec3(v)
    }

    pub fn as_vec(self) -> Vec3 {
        self.0
    }
}

impl Deref for UnitVec3 {
    type Target = Vec3;
    fn deref(&self) -> &Vec3 {
        &self.0
    }
}

/// Orthonormal basis with `w` as the third axis (Duff et al. branchless form).
pub fn onb(w: Vec3) -> (Vec3, Vec3) {
    let sign = if w.z >= 0.0 { 1.0 } else { -1.0 };
    let a = -1.0 / (sign + w.z);
    let b = w.x * w.y * a;
    let u = Vec3::new(1.0 + sign * w.x * w.x * a, sign * b, -sign * w.x);
    let v = Vec3::new(b, sign + w.y * w.y * a, -w.y);
    (u, v)
}

/// `n` roughly equidistributed directions on the unit sphere.
pub fn fibonacci_sphere(n: usize) -> Vec<Vec3> {
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = 2.0 * std::f64::consts::PI * (i as f64 / golden).fract();
            Vec3::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}

/// Snap each component to a multiple of `step` and renormalize. Used to make
/// sample-placement geometry piecewise constant under tiny parameter
/// perturbations so finite differences agree with analytic gradients.
pub fn quantize_axis(v: Vec3, step: f64) -> Vec3 {
    let q = Vec3::new(
        (v.x / step).round() * step,
        (v.y / step).round() * step,
        (v.z / step).round() * step,
    );
    if q.norm() < 1e-9 {
        Vec3::new(0.0, 0.0, 1.0)
    } else {
        q.normalized()
    }
}

/// Snap a positive scalar to ~1% logarithmic steps (same rationale as
/// `quantize_axis`).
pub fn quantize_log(v: f64, step: f64) -> f64 {
    ((v.max(1e-12).ln() / step).round() * step).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vec_normalizes() {
        let u = UnitVec3::new(Vec3::new(3.0, 0.0, 4.0)).unwrap();
        assert!((u.norm() - 1.0).abs() <= UnitVec3::TOLERANCE);
        assert!((u.x - 0.6).abs() < 1e-12);
    }

    #[test]
    fn unit_vec_rejects_zero() {
        assert!(UnitVec3::new(Vec3::ZERO).is_none());
    }

    #[test]
    fn onb_is_orthonormal() {
        for w in fibonacci_sphere(50) {
            let (u, v) = onb(w);
            assert!(u.dot(v).abs() < 1e-12);
            assert!(u.dot(w).abs() < 1e-12);
            assert!((u.norm() - 1.0).abs() < 1e-12);
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fibonacci_mean_is_near_zero() {
        let dirs = fibonacci_sphere(1000);
        let mean = dirs.iter().fold(Vec3::ZERO, |a, &d| a + d).scale(1.0 / 1000.0);
        assert!(mean.norm() < 1e-2);
    }

    #[test]
    fn quantize_axis_stable_under_tiny_shift() {
        let a = Vec3::new(0.3, -0.2, 0.93).normalized();
        let b = a + Vec3::new(1e-7, -1e-7, 1e-7);
        assert_eq!(quantize_axis(a, 5e-3), quantize_axis(b, 5e-3));
    }
}
