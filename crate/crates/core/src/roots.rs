//! Univariate complex root finding (Aberth–Ehrlich) with multiplicity clustering.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// A cluster of numerically coincident roots.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RootCluster {
    pub value: (f64, f64),
    pub multiplicity: usize,
}

impl RootCluster {
    pub fn root(&self) -> Complex64 {
        Complex64::new(self.value.0, self.value.1)
    }
}

/// `(p(x), p'(x))` by Horner; `coeffs` ascending.
pub fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// `|p(x)| / Σ |a_i| |x|^i`, the relative backward error of a root.
pub fn relative_residual(coeffs: &[Complex64], x: Complex64) -> f64 {
    let (p, _) = horner(coeffs, x);
    let r = x.norm();
    let scale: f64 = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Strips leading coefficients that are negligible against the largest one.
pub fn trim(coeffs: &[Complex64], rel_tol: f64) -> Vec<Complex64> {
    let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut v = coeffs.to_vec();
    while v.last().is_some_and(|c| c.norm() <= rel_tol * max) {
        v.pop();
    }
    v
}

/// All roots of `Σ coeffs[i] xⁱ`, repeated by multiplicity.
///
/// Zero roots from vanishing low-order coefficients are split off exactly. Fails
/// on the zero polynomial.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let c = trim(coeffs, 0.0);
    if c.is_empty() {
        return Err(Error::IdenticallyZero);
    }
    let zeros = c.iter().take_while(|a| a.norm() == 0.0).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let c = &c[zeros..];
    let d = c.len() - 1;
    match d {
        0 => {}
        1 => roots.push(-c[0] / c[1]),
        2 => roots.extend(quadratic(c[0], c[1], c[2])),
        _ => roots.extend(aberth(c)),
    }
    Ok(roots)
}

/// Roots of `a x² + b x + c` without cancellation.
fn quadratic(c: Complex64, b: Complex64, a: Complex64) -> [Complex64; 2] {
    let disc = (b * b - 4.0 * a * c).sqrt();
    // pick the sign that avoids subtracting nearly equal numbers
    let q = if (b.conj() * disc).re >= 0.0 { -0.5 * (b + disc) } else { -0.5 * (b - disc) };
    if q.norm() == 0.0 {
        return [Complex64::new(0.0, 0.0); 2];
    }
    [q / a, c / q]
}

fn aberth(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|a| a / lead).collect();
    // Fujiwara-type radius, halved: a safe scale for the initial circle.
    let radius = (0..d).map(|i| monic[i].norm().powf(1.0 / (d - i) as f64)).fold(0.0, f64::max).max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect();
    let mut converged = vec![false; d];
    for _ in 0..1000 {
        let mut moved = false;
        for k in 0..d {
            if converged[k] {
                continue;
            }
            let (p, dp) = horner(&monic, z[k]);
            if p.norm() == 0.0 {
                converged[k] = true;
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..d).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = ratio / (1.0 - ratio * s);
            if step.is_finite() {
                z[k] -= step;
            }
            if step.norm() <= 1e-15 * (1.0 + z[k].norm()) || !step.is_finite() {
                converged[k] = true;
            } else {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    // Newton polish, kept only where it lowers the residual.
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let cand = *r - p / dp;
            if relative_residual(&monic, cand) < relative_residual(&monic, *r) {
                *r = cand;
            } else {
                break;
            }
        }
    }
    z
}

/// Groups roots closer than `tol` (single linkage), averaging each group.
pub fn cluster_roots(roots: &[Complex64], tol: f64) -> Vec<RootCluster> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() < tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<(usize, Complex64, usize)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match out.iter_mut().find(|(root, _, _)| *root == r) {
            Some(e) => {
                e.1 += roots[i];
                e.2 += 1;
            }
            None => out.push((r, roots[i], 1)),
        }
    }
    let mut clusters: Vec<RootCluster> = out
        .into_iter()
        .map(|(_, s, m)| {
            let v = s / m as f64;
            RootCluster { value: (v.re, v.im), multiplicity: m }
        })
        .collect();
    clusters.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap_or(std::cmp::Ordering::Equal));
    clusters
}
