//! Numeric Levi-foliation laboratory in `ℂ²`.
//!
//! Leaves are traced as curves `{ρ^ℂ(z, q̄) = 0}` by predictor–corrector
//! continuation; transverses are real curves `γ = {t : ρ(c + tv) = 0}` cut from
//! the hypersurface by a complex line, extracted by contouring the `t`-plane.

mod contour;
pub(crate) mod trace;
pub(crate) mod transverse;

pub use contour::{marching_squares, Polyline};
pub use trace::{passes_through_origin, trace_leaf, LeafTrace, OriginVerdict, StopReason};
pub use transverse::{build_transverse, match_leaf_to_transverse, LeafMatch, Transverse, TransverseOptions, TransverseSample};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hermitian::RealBipoly;
use crate::point::conj_vec;
use crate::poly::{FloatPoly, Poly};

/// Polydisc `{z : |z_k − c_k| < r_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polydisc {
    pub center: Vec<Complex64>,
    pub radius: Vec<f64>,
}

impl Polydisc {
    pub fn new(center: Vec<Complex64>, radius: Vec<f64>) -> Result<Self> {
        if center.len() != radius.len() || radius.iter().any(|&r| !(r > 0.0 && r.is_finite())) {
            return Err(Error::Input("polydisc radii must be positive and match the dimension".into()));
        }
        Ok(Polydisc { center, radius })
    }

    /// Polydisc centred at the origin with equal radii.
    pub fn around_origin(n: usize, r: f64) -> Self {
        Polydisc::new(vec![Complex64::zero(); n], vec![r; n]).expect("positive radius")
    }

    pub fn contains(&self, z: &[Complex64]) -> bool {
        z.iter().zip(&self.center).zip(&self.radius).all(|((a, c), r)| (a - c).norm() < *r)
    }

    pub fn min_radius(&self) -> f64 {
        self.radius.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub(crate) fn require_plane(rho: &RealBipoly) -> Result<()> {
    if rho.n() != 2 {
        return Err(Error::Contract(format!("numeric foliation tools need n = 2, got n = {}", rho.n())));
    }
    Ok(())
}

/// The holomorphic function `z ↦ ρ^ℂ(z, w̄)` for a fixed `w`, with its gradient.
#[derive(Clone, Debug)]
pub(crate) struct SegreFunction {
    f: FloatPoly,
    grad: Vec<FloatPoly>,
    zero: Vec<Complex64>,
}

impl SegreFunction {
    pub(crate) fn new(rho: &RealBipoly, w: &[Complex64]) -> Self {
        let n = rho.n();
        let wbar = conj_vec(w);
        let assign: Vec<Option<Complex64>> = (0..2 * n).map(|k| (k >= n).then(|| wbar[k - n])).collect();
        let f = rho.complexification().to_float().partial_eval(&assign);
        let grad = (0..n).map(|k| f.diff_index(k)).collect();
        SegreFunction { f, grad, zero: vec![Complex64::zero(); n] }
    }

    pub(crate) fn value(&self, z: &[Complex64]) -> Complex64 {
        self.f.eval_split(z, &self.zero)
    }

    pub(crate) fn gradient(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.grad.iter().map(|g| g.eval_split(z, &self.zero)).collect()
    }

    pub(crate) fn is_identically_zero(&self) -> bool {
        self.f.max_abs_coeff() == 0.0
    }
}

/// Coefficients (ascending) of a polynomial in `z_1` alone, in a ring with `n = 1`.
pub(crate) fn univariate(p: &FloatPoly) -> Vec<Complex64> {
    debug_assert_eq!(p.n(), 1);
    p.coefficients_in_index(0).iter().map(|c| c.constant_value().unwrap_or_default()).collect()
}

/// `t ↦ p(c + t v, d̄)` with `d` fixed, as a univariate polynomial in `t`.
pub(crate) fn restrict_z_line(p: &FloatPoly, c: &[Complex64], v: &[Complex64], wbar: &[Complex64]) -> Vec<Complex64> {
    let n = p.n();
    let t = Poly::var(1, crate::poly::Var::Z(0));
    let mut subs = Vec::with_capacity(2 * n);
    for k in 0..n {
        subs.push(&Poly::constant(1, c[k]) + &t.scale(&v[k]));
    }
    for k in 0..n {
        subs.push(Poly::constant(1, wbar[k]));
    }
    univariate(&p.compose(&subs))
}

/// `u ↦ p(z, d̄ + ū)` along a conjugate line: substitutes `w̄ ← d̄ + u v̄` for a fixed `z`.
pub(crate) fn restrict_wbar_line(p: &FloatPoly, z: &[Complex64], dbar: &[Complex64], vbar: &[Complex64]) -> Vec<Complex64> {
    let n = p.n();
    let u = Poly::var(1, crate::poly::Var::Z(0));
    let mut subs = Vec::with_capacity(2 * n);
    for k in 0..n {
        subs.push(Poly::constant(1, z[k]));
    }
    for k in 0..n {
        subs.push(&Poly::constant(1, dbar[k]) + &u.scale(&vbar[k]));
    }
    univariate(&p.compose(&subs))
}
