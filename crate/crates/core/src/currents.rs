//! Uniformly laminar currents `T = Σ_k μ_k [Q_{s_k}]` in `ℂ²` at desk scale.
//!
//! Areas of complex curves are computed from projections: for a complex curve
//! `Z ⊂ ℂ²` the area form is `ω|_Z = (dA_{z₁} + dA_{z₂})|_Z`, so
//! `∫_Z φ dA = ∫_{ℂ} Σ_{z₂ : f = 0} φ dA(z₁) + ∫_{ℂ} Σ_{z₁ : f = 0} φ dA(z₂)`.
//! The sheet sums are continuous even at branch points, and no parametrization
//! of the curve is needed.
//!
//! Test forms are radial bumps `φ = A (1 − u²)³`, `u = |z − c|/R`, with
//! `A = 4/(πR²)` so that a complex line through `c` has `φ`-mass 1. In `ℝ⁴`,
//! `Δφ = (24A/R²)(1 − u²)(2u² − 1)` for `u < 1`.

use num_complex::Complex64;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::foliation::Transverse;
use crate::hermitian::RealBipoly;
use crate::point::{conj_vec, norm};
use crate::roots::{polynomial_roots, trim};

/// Radial bump test form on the ball `|z − c| < R`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestForm {
    pub center: Vec<(f64, f64)>,
    pub radius: f64,
}

impl TestForm {
    pub fn new(center: &[Complex64], radius: f64) -> Result<Self> {
        if center.len() != 2 || !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Input("test form needs a point of C^2 and a positive radius".into()));
        }
        Ok(TestForm { center: center.iter().map(|c| (c.re, c.im)).collect(), radius })
    }

    pub fn center(&self) -> Vec<Complex64> {
        self.center.iter().map(|&(re, im)| Complex64::new(re, im)).collect()
    }

    pub fn amplitude(&self) -> f64 {
        4.0 / (std::f64::consts::PI * self.radius * self.radius)
    }

    fn u2(&self, z: &[Complex64]) -> f64 {
        let c = self.center();
        z.iter().zip(&c).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>() / (self.radius * self.radius)
    }

    pub fn value(&self, z: &[Complex64]) -> f64 {
        let u2 = self.u2(z);
        if u2 >= 1.0 {
            0.0
        } else {
            self.amplitude() * (1.0 - u2).powi(3)
        }
    }

    /// Euclidean Laplacian on `ℝ⁴`.
    pub fn laplacian(&self, z: &[Complex64]) -> f64 {
        let u2 = self.u2(z);
        if u2 >= 1.0 {
            0.0
        } else {
            24.0 * self.amplitude() / (self.radius * self.radius) * (1.0 - u2) * (2.0 * u2 - 1.0)
        }
    }
}

/// A holomorphic polynomial in `(z₁, z₂)` stored as flat terms for fast evaluation.
#[derive(Clone, Debug, PartialEq)]
struct Curve {
    terms: Vec<(u32, u32, Complex64)>,
    deg: [u32; 2],
}

impl Curve {
    /// `z ↦ ρ^ℂ(z, s̄)`.
    fn segre(rho: &RealBipoly, s: &[Complex64]) -> Self {
        let sbar = conj_vec(s);
        let p = rho.complexification().to_float().partial_eval(&[None, None, Some(sbar[0]), Some(sbar[1])]);
        let terms: Vec<(u32, u32, Complex64)> = p.terms().map(|(m, c)| (m.0[0], m.0[1], *c)).collect();
        let deg = [terms.iter().map(|t| t.0).max().unwrap_or(0), terms.iter().map(|t| t.1).max().unwrap_or(0)];
        Curve { terms, deg }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn value(&self, z: &[Complex64]) -> Complex64 {
        self.terms.iter().map(|&(a, b, c)| c * z[0].powu(a) * z[1].powu(b)).sum()
    }

    fn gradient(&self, z: &[Complex64]) -> [Complex64; 2] {
        let mut g = [Complex64::zero(); 2];
        for &(a, b, c) in &self.terms {
            if a > 0 {
                g[0] += c * a as f64 * z[0].powu(a - 1) * z[1].powu(b);
            }
            if b > 0 {
                g[1] += c * b as f64 * z[0].powu(a) * z[1].powu(b - 1);
            }
        }
        g
    }

    /// Coefficients in the free coordinate `k` after fixing the other one to `x`.
    fn coeffs_in(&self, k: usize, x: Complex64) -> Vec<Complex64> {
        let mut out = vec![Complex64::zero(); self.deg[k] as usize + 1];
        for &(a, b, c) in &self.terms {
            let (free, fixed) = if k == 1 { (b, a) } else { (a, b) };
            out[free as usize] += c * x.powu(fixed);
        }
        out
    }

    /// Points of the curve above `x` in the projection forgetting coordinate `k`.
    fn fibre(&self, k: usize, x: Complex64) -> Vec<[Complex64; 2]> {
        let free = 1 - k;
        let c = trim(&self.coeffs_in(free, x), 1e-14);
        if c.len() < 2 {
            return Vec::new();
        }
        polynomial_roots(&c)
            .map(|roots| {
                roots
                    .into_iter()
                    .map(|r| if free == 1 { [x, r] } else { [r, x] })
                    .collect()
            })
            .unwrap_or_default()
    }
}

/// Result of an adaptive quadrature.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Quadrature {
    pub value: f64,
    /// Relative change between the last two refinements.
    pub change: f64,
    pub converged: bool,
    pub nodes: usize,
}

pub(crate) const QUAD_TOL: f64 = 1e-4;
const MAX_LEVELS: usize = 6;

/// `∫_{|x − c| < R} F(x) dA` in polar coordinates: composite Simpson in the
/// radius, trapezoid in the angle; both counts double until the relative change
/// drops below `1e-4`.
fn polar_integral(c: Complex64, radius: f64, f: &(dyn Fn(Complex64) -> f64 + Sync)) -> Quadrature {
    let rule = |nr: usize, nt: usize| -> f64 {
        let h = radius / nr as f64;
        (0..=nr)
            .into_par_iter()
            .map(|i| {
                // the outer node is taken just inside, as the limit of indicator integrands
                let r = if i == nr { radius * (1.0 - 1e-12) } else { i as f64 * h };
                if r == 0.0 {
                    return 0.0;
                }
                let w = if i == 0 || i == nr { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
                let ring: f64 = (0..nt)
                    .map(|j| f(c + Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / nt as f64)))
                    .sum::<f64>()
                    * std::f64::consts::TAU
                    / nt as f64;
                w * r * ring
            })
            .collect::<Vec<f64>>()
            .iter()
            .sum::<f64>()
            * h
            / 3.0
    };
    let (mut nr, mut nt) = (16, 32);
    let mut prev = rule(nr, nt);
    let mut nodes = (nr + 1) * nt;
    for _ in 0..MAX_LEVELS {
        nr *= 2;
        nt *= 2;
        let cur = rule(nr, nt);
        nodes += (nr + 1) * nt;
        let change = (cur - prev).abs() / cur.abs().max(1e-300);
        if change < QUAD_TOL || (cur - prev).abs() < 1e-14 {
            return Quadrature { value: cur, change, converged: true, nodes };
        }
        prev = cur;
    }
    let last = rule(nr, nt);
    let change = (last - prev).abs() / last.abs().max(1e-300);
    Quadrature { value: last, change, converged: change < QUAD_TOL, nodes }
}

/// `∫_Z F dA` over the part of the curve `Z` inside the ball `|z − c| < R`, `F`
/// vanishing outside the ball.
fn curve_integral(curve: &Curve, c: &[Complex64], radius: f64, f: &(dyn Fn(&[Complex64]) -> f64 + Sync)) -> Quadrature {
    let mut total = Quadrature { value: 0.0, change: 0.0, converged: true, nodes: 0 };
    for k in 0..2 {
        let integrand = |x: Complex64| -> f64 { curve.fibre(1 - k, x).iter().map(|z| f(z)).sum() };
        let q = polar_integral(c[k], radius, &integrand);
        total.value += q.value;
        total.change = total.change.max(q.change);
        total.converged &= q.converged;
        total.nodes += q.nodes;
    }
    total
}

/// A weighted leaf `μ [Q_s]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Atom {
    /// The point `s` whose Segre variety carries the atom.
    pub point: Vec<(f64, f64)>,
    pub weight: f64,
    /// Transverse parameter, when built from one.
    pub parameter: Option<(f64, f64)>,
}

impl Atom {
    pub fn point(&self) -> Vec<Complex64> {
        self.point.iter().map(|&(re, im)| Complex64::new(re, im)).collect()
    }
}

/// `T = Σ μ_k [Q_{s_k}]` with `μ_k ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaminarCurrent {
    rho: RealBipoly,
    atoms: Vec<Atom>,
    curves: Vec<Curve>,
}

impl LaminarCurrent {
    /// Atoms are given by their points `s ∈ Γ` and weights.
    pub fn new(rho: &RealBipoly, atoms: &[(Vec<Complex64>, f64)]) -> Result<Self> {
        if rho.n() != 2 {
            return Err(Error::Contract("laminar currents are implemented for n = 2".into()));
        }
        let mut out = LaminarCurrent { rho: rho.clone(), atoms: Vec::new(), curves: Vec::new() };
        for (s, mu) in atoms {
            out.push(s, *mu, None)?;
        }
        Ok(out)
    }

    /// Atoms at transverse parameters `t` with weights `μ`.
    pub fn from_transverse(rho: &RealBipoly, tv: &Transverse, atoms: &[(Complex64, f64)]) -> Result<Self> {
        let mut out = Self::new(rho, &[])?;
        for &(t, mu) in atoms {
            out.push(&tv.point_at(t), mu, Some((t.re, t.im)))?;
        }
        Ok(out)
    }

    fn push(&mut self, s: &[Complex64], mu: f64, parameter: Option<(f64, f64)>) -> Result<()> {
        if !(mu >= 0.0 && mu.is_finite()) {
            return Err(Error::Input(format!("atom weight must be non-negative, got {mu}")));
        }
        if s.len() != 2 {
            return Err(Error::Input("atom point must lie in C^2".into()));
        }
        if self.rho.eval_on_diagonal(s).norm() >= 1e-8 {
            return Err(Error::Contract("atom point does not lie on the hypersurface".into()));
        }
        let curve = Curve::segre(&self.rho, s);
        if curve.is_zero() {
            return Err(Error::SegreDegenerateCenter);
        }
        self.atoms.push(Atom { point: s.iter().map(|c| (c.re, c.im)).collect(), weight: mu, parameter });
        self.curves.push(curve);
        Ok(())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn rho(&self) -> &RealBipoly {
        &self.rho
    }

    /// Sum of currents on the same hypersurface.
    pub fn add(&self, other: &LaminarCurrent) -> Result<LaminarCurrent> {
        if self.rho != other.rho {
            return Err(Error::Contract("currents live on different hypersurfaces".into()));
        }
        let mut out = self.clone();
        out.atoms.extend(other.atoms.iter().cloned());
        out.curves.extend(other.curves.iter().cloned());
        Ok(out)
    }

    /// Multiplies every weight by `c ≥ 0`.
    pub fn scale(&self, c: f64) -> Result<LaminarCurrent> {
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::Input("scaling factor must be non-negative".into()));
        }
        let mut out = self.clone();
        out.atoms.iter_mut().for_each(|a| a.weight *= c);
        Ok(out)
    }
}

/// `T(φ ω) = Σ μ_k ∫_{Q_{s_k}} φ dA`.
pub fn pair(t: &LaminarCurrent, phi: &TestForm) -> Quadrature {
    let c = phi.center();
    let mut total = Quadrature { value: 0.0, change: 0.0, converged: true, nodes: 0 };
    for (atom, curve) in t.atoms.iter().zip(&t.curves) {
        if atom.weight == 0.0 {
            continue;
        }
        let q = curve_integral(curve, &c, phi.radius, &|z| phi.value(z));
        total.value += atom.weight * q.value;
        total.change = total.change.max(q.change);
        total.converged &= q.converged;
        total.nodes += q.nodes;
    }
    total
}

/// `Σ μ_k · area(Q_{s_k} ∩ B(a, r))`.
pub fn ball_mass(t: &LaminarCurrent, a: &[Complex64], r: f64) -> Quadrature {
    let mut total = Quadrature { value: 0.0, change: 0.0, converged: true, nodes: 0 };
    let inside = |z: &[Complex64]| -> f64 {
        let d2: f64 = z.iter().zip(a).map(|(x, y)| (x - y).norm_sqr()).sum();
        if d2 < r * r {
            1.0
        } else {
            0.0
        }
    };
    for (atom, curve) in t.atoms.iter().zip(&t.curves) {
        if atom.weight == 0.0 {
            continue;
        }
        let q = curve_integral(curve, a, r, &inside);
        total.value += atom.weight * q.value;
        total.change = total.change.max(q.change);
        total.converged &= q.converged;
        total.nodes += q.nodes;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LelongEstimate {
    pub radii: Vec<f64>,
    /// `ball_mass / (π r²)` per radius.
    pub sequence: Vec<f64>,
    /// Extrapolation to `r → 0` assuming `ν(r) = ν + c r²`.
    pub limit: f64,
    /// Set when the sequence grows as the radius shrinks by more than `1e-3`.
    pub non_monotone: bool,
}

/// Lelong number at `a`, normalized so that a complex line through `a` has number 1.
pub fn lelong_estimate(t: &LaminarCurrent, a: &[Complex64], radii: &[f64]) -> Result<LelongEstimate> {
    if radii.is_empty() || radii.iter().any(|&r| !(r > 0.0)) {
        return Err(Error::Input("radii must be positive".into()));
    }
    if radii.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Input("radii must be strictly decreasing".into()));
    }
    let sequence: Vec<f64> = radii.iter().map(|&r| ball_mass(t, a, r).value / (std::f64::consts::PI * r * r)).collect();
    let non_monotone = sequence.windows(2).any(|w| w[1] > w[0] + 1e-3);
    let limit = if radii.len() == 1 {
        sequence[0]
    } else {
        // least-squares line in r²
        let xs: Vec<f64> = radii.iter().map(|r| r * r).collect();
        let m = xs.len() as f64;
        let (sx, sy) = (xs.iter().sum::<f64>(), sequence.iter().sum::<f64>());
        let sxx: f64 = xs.iter().map(|x| x * x).sum();
        let sxy: f64 = xs.iter().zip(&sequence).map(|(x, y)| x * y).sum();
        let den = m * sxx - sx * sx;
        if den.abs() < 1e-300 {
            sy / m
        } else {
            (sxx * sy - sx * sxy) / den
        }
    };
    Ok(LelongEstimate { radii: radii.to_vec(), sequence, limit, non_monotone })
}

/// How the four-dimensional integral of the Poincaré–Lelong check is sampled.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Sampler {
    MonteCarlo { samples: usize, seed: u64 },
    /// Midpoint rule on a cube grid with `per_axis` nodes per real axis.
    Grid { per_axis: usize },
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::MonteCarlo { samples: 2_000_000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoincareLelong {
    /// `(1/2π) ∫ log|f| Δφ dV`.
    pub lhs: f64,
    /// `∫_{Q_s} φ dA`.
    pub rhs: f64,
    /// `|lhs − rhs| / |rhs|`, or the absolute difference when `|rhs| ≤ 1e-3`.
    pub gap: f64,
    /// Standard error of `lhs` (zero for the grid sampler).
    pub std_error: f64,
    /// Standard error above 1% of `max(|lhs|, |rhs|, 0.1)`.
    pub flagged: bool,
    pub sampler: Sampler,
}

const BLOCK: usize = 1 << 15;
const GAP_FLOOR: f64 = 1e-3;
const FLAG_FLOOR: f64 = 0.1;

/// Checks `[Q_s] = (i/π) ∂∂̄ log|ρ^ℂ(·, s̄)|` against the test form `φ`.
///
/// The left side is integrated over the support ball. A harmonic control
/// variate `L = log|f(c)| + Re(∇f(c)·(z − c)/f(c))` (when `f(c) ≠ 0`) and an
/// optimal constant are subtracted from `log|f|`; both integrate to zero
/// against `Δφ`.
pub fn poincare_lelong_check(rho: &RealBipoly, s: &[Complex64], phi: &TestForm, sampler: Sampler) -> Result<PoincareLelong> {
    let current = LaminarCurrent::new(rho, &[(s.to_vec(), 1.0)])?;
    let curve = &current.curves[0];
    let rhs = pair(&current, phi).value;
    let c = phi.center();
    let r = phi.radius;
    let fc = curve.value(&c);
    let gc = curve.gradient(&c);
    let c0 = [c[0], c[1]];
    let control = move |z: &[Complex64]| -> f64 {
        if fc.norm() > 1e-12 {
            let lin: Complex64 = (gc[0] * (z[0] - c0[0]) + gc[1] * (z[1] - c0[1])) / fc;
            fc.norm().ln() + lin.re
        } else {
            0.0
        }
    };
    let g = |z: &[Complex64]| -> f64 {
        let v = curve.value(z).norm();
        if v == 0.0 {
            0.0
        } else {
            v.ln() - control(z)
        }
    };
    let ball_volume = std::f64::consts::PI.powi(2) * r.powi(4) / 2.0;
    let (lhs, std_error) = match sampler {
        Sampler::MonteCarlo { samples, seed } => {
            if samples < 2 {
                return Err(Error::Input("Monte Carlo budget must be at least 2 samples".into()));
            }
            let blocks = samples.div_ceil(BLOCK);
            let draw = |b: usize| -> Vec<(f64, f64)> {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(b as u64);
                let unif = Uniform::new(0.0f64, 1.0).expect("valid range");
                let m = BLOCK.min(samples - b * BLOCK);
                (0..m)
                    .map(|_| {
                        let x: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
                        let len = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                        let rad = r * unif.sample(&mut rng).powf(0.25) / len;
                        let z = [
                            c[0] + Complex64::new(x[0] * rad, x[1] * rad),
                            c[1] + Complex64::new(x[2] * rad, x[3] * rad),
                        ];
                        (g(&z), phi.laplacian(&z))
                    })
                    .collect()
            };
            let draws: Vec<Vec<(f64, f64)>> = (0..blocks).into_par_iter().map(draw).collect();
            let all: Vec<(f64, f64)> = draws.into_iter().flatten().collect();
            // optimal constant shift: argmin Var((g − K) Δφ)
            let (num, den) = all.iter().fold((0.0, 0.0), |(a, b), (gv, l)| (a + gv * l * l, b + l * l));
            let k = if den > 0.0 { num / den } else { 0.0 };
            let m = all.len() as f64;
            let vals: Vec<f64> = all.iter().map(|(gv, l)| (gv - k) * l).collect();
            let mean = vals.iter().sum::<f64>() / m;
            let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (m - 1.0);
            let scale = ball_volume / std::f64::consts::TAU;
            (scale * mean, scale * (var / m).sqrt())
        }
        Sampler::Grid { per_axis } => {
            if per_axis < 2 {
                return Err(Error::Input("grid sampler needs at least 2 nodes per axis".into()));
            }
            let h = 2.0 * r / per_axis as f64;
            let coord = |k: usize| -r + (k as f64 + 0.5) * h;
            let total: f64 = (0..per_axis)
                .into_par_iter()
                .map(|i| {
                    let mut acc = 0.0;
                    for j in 0..per_axis {
                        for k in 0..per_axis {
                            for l in 0..per_axis {
                                let z = [c[0] + Complex64::new(coord(i), coord(j)), c[1] + Complex64::new(coord(k), coord(l))];
                                let lap = phi.laplacian(&z);
                                if lap != 0.0 {
                                    acc += g(&z) * lap;
                                }
                            }
                        }
                    }
                    acc
                })
                .collect::<Vec<f64>>()
                .iter()
                .sum();
            (total * h.powi(4) / std::f64::consts::TAU, 0.0)
        }
    };
    let gap = if rhs.abs() > GAP_FLOOR { (lhs - rhs).abs() / rhs.abs() } else { (lhs - rhs).abs() };
    let flagged = std_error > 0.01 * lhs.abs().max(rhs.abs()).max(FLAG_FLOOR);
    Ok(PoincareLelong { lhs, rhs, gap, std_error, flagged, sampler })
}

/// `|∇_z ρ^ℂ(s, s̄)|`, used to check an atom is regular.
pub fn atom_gradient(rho: &RealBipoly, s: &[Complex64]) -> f64 {
    norm(&crate::hermitian::holomorphic_gradient(rho, s))
}
