use num_complex::Complex64;
use serde::Serialize;

use super::{require_plane, Polydisc, SegreFunction};
use crate::error::{Error, Result};
use crate::hermitian::RealBipoly;
use crate::point::{norm, Point};
use crate::segre::{Classifier, PointClass};

pub(crate) const CORRECTOR_TOL: f64 = 1e-12;
pub(crate) const ACCEPT_TOL: f64 = 1e-8;
pub(crate) const NEAR_SINGULAR: f64 = 1e-6;
pub(crate) const MAX_HALVINGS: usize = 8;
pub(crate) const MAX_STEPS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StopReason {
    BoxExit,
    NearSingular,
    StepLimit,
    /// The path returned to its start; the leaf piece is a closed loop.
    Closed,
}

/// A traced piece of the leaf through `basepoint`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeafTrace {
    pub basepoint: Vec<(f64, f64)>,
    /// Points in path order; the basepoint sits at index `base_index`.
    #[serde(skip)]
    pub points: Vec<Vec<Complex64>>,
    pub base_index: usize,
    /// `|ρ^ℂ(z, q̄)|` per point.
    pub segre_residuals: Vec<f64>,
    /// `|ρ(z, z̄)|` per point.
    pub gamma_residuals: Vec<f64>,
    /// Continuation points dropped for exceeding the acceptance residual.
    pub rejected: usize,
    pub stops: [StopReason; 2],
}

impl LeafTrace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn basepoint(&self) -> Vec<Complex64> {
        self.basepoint.iter().map(|&(re, im)| Complex64::new(re, im)).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.segre_residuals.iter().chain(&self.gamma_residuals).copied().fold(0.0, f64::max)
    }
}

/// Minimal-norm Newton projection onto `{f = 0}`.
fn correct(f: &SegreFunction, mut z: Vec<Complex64>) -> Option<Vec<Complex64>> {
    for _ in 0..30 {
        let v = f.value(&z);
        if v.norm() < CORRECTOR_TOL {
            return Some(z);
        }
        let g = f.gradient(&z);
        let g2: f64 = g.iter().map(|c| c.norm_sqr()).sum();
        if g2 == 0.0 {
            return None;
        }
        for (zk, gk) in z.iter_mut().zip(&g) {
            *zk -= v * gk.conj() / g2;
        }
    }
    (f.value(&z).norm() < CORRECTOR_TOL).then_some(z)
}

/// Unit complex tangent `(−f_{z2}, f_{z1})/|∇f|`.
fn tangent(g: &[Complex64]) -> Option<Vec<Complex64>> {
    let gn = norm(g);
    (gn > 0.0).then(|| vec![-g[1] / gn, g[0] / gn])
}

fn march(
    rho: &RealBipoly,
    f: &SegreFunction,
    start: &[Complex64],
    dir0: Vec<Complex64>,
    bx: &Polydisc,
    step: f64,
    out: &mut Vec<Vec<Complex64>>,
) -> Result<StopReason> {
    let mut z = start.to_vec();
    let mut dir = dir0;
    let mut h = step;
    let mut left = false;
    for _ in 0..MAX_STEPS {
        let g = f.gradient(&z);
        if norm(&g) < NEAR_SINGULAR {
            return Ok(StopReason::NearSingular);
        }
        let mut t = tangent(&g).expect("gradient is nonzero");
        // keep the real direction of travel continuous
        let dot: Complex64 = t.iter().zip(&dir).map(|(a, b)| a.conj() * b).sum();
        if dot.norm() > 0.0 {
            let phase = dot / dot.norm();
            t.iter_mut().for_each(|c| *c *= phase);
        }
        let mut halvings = 0;
        let next = loop {
            let pred: Vec<Complex64> = z.iter().zip(&t).map(|(a, b)| a + b * h).collect();
            match correct(f, pred) {
                Some(c) if norm(&c.iter().zip(&z).map(|(a, b)| a - b).collect::<Vec<_>>()) < 2.0 * h => break c,
                _ => {
                    halvings += 1;
                    if halvings > MAX_HALVINGS {
                        return Err(Error::CorrectorDivergence(MAX_HALVINGS));
                    }
                    h *= 0.5;
                }
            }
        };
        if !bx.contains(&next) {
            return Ok(StopReason::BoxExit);
        }
        let away = norm(&next.iter().zip(start).map(|(a, b)| a - b).collect::<Vec<_>>());
        if left && away < 0.75 * step {
            return Ok(StopReason::Closed);
        }
        left |= away > 2.0 * step;
        dir = t;
        z = next;
        if rho.eval_on_diagonal(&z).norm() < ACCEPT_TOL {
            out.push(z.clone());
        } else {
            out.push(Vec::new());
        }
        h = (2.0 * h).min(step);
    }
    Ok(StopReason::StepLimit)
}

/// Traces the leaf through a regular point `q` of a Levi-flat hypersurface in `ℂ²`.
///
/// Follows a real path on the complex curve `{ρ^ℂ(z, q̄) = 0}` in both directions
/// from `q`, stopping at the polydisc boundary, where the curve's gradient drops
/// below `1e-6`, or when the path closes up. Only points with both residuals below `1e-8` are kept.
pub fn trace_leaf(rho: &RealBipoly, q: &Point, bx: &Polydisc, step: f64) -> Result<LeafTrace> {
    require_plane(rho)?;
    if !(step > 0.0) {
        return Err(Error::Input("step must be positive".into()));
    }
    let class = Classifier::assume_levi_flat(rho).classify(q);
    if class.class != PointClass::Regular {
        return Err(Error::NotRegular(format!("{:?} at {:?}", class.class, q.labels())));
    }
    let q = q.to_complex();
    let f = SegreFunction::new(rho, &q);
    let t0 = tangent(&f.gradient(&q)).expect("regular point");
    let mut fwd = Vec::new();
    let mut bwd = Vec::new();
    let s1 = march(rho, &f, &q, t0.clone(), bx, step, &mut fwd)?;
    let s0 = if s1 == StopReason::Closed {
        StopReason::Closed
    } else {
        march(rho, &f, &q, t0.iter().map(|c| -c).collect(), bx, step, &mut bwd)?
    };
    let rejected = fwd.iter().chain(&bwd).filter(|p| p.is_empty()).count();
    let mut points: Vec<Vec<Complex64>> = bwd.into_iter().rev().filter(|p| !p.is_empty()).collect();
    let base_index = points.len();
    points.push(q.clone());
    points.extend(fwd.into_iter().filter(|p| !p.is_empty()));
    let segre_residuals = points.iter().map(|z| f.value(z).norm()).collect();
    let gamma_residuals = points.iter().map(|z| rho.eval_on_diagonal(z).norm()).collect();
    Ok(LeafTrace {
        basepoint: q.iter().map(|c| (c.re, c.im)).collect(),
        points,
        base_index,
        segre_residuals,
        gamma_residuals,
        rejected,
        stops: [s0, s1],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OriginVerdict {
    Yes,
    No,
    Unknown,
}

/// Does the component of `Q_w` through `seed` reach the origin?
///
/// `No` when `0 ∉ Q_w`. Otherwise descends `|z|` along the curve from the seed;
/// reaching distance `1e-6` gives `Yes`, anything else `Unknown`.
pub fn passes_through_origin(rho: &RealBipoly, w: &[Complex64], seed: &[Complex64], bx: &Polydisc) -> Result<OriginVerdict> {
    require_plane(rho)?;
    let f = SegreFunction::new(rho, w);
    if f.is_identically_zero() {
        return Err(Error::Contract("Segre variety of w is degenerate".into()));
    }
    let origin = vec![Complex64::new(0.0, 0.0); 2];
    if f.value(&origin).norm() > 1e-10 {
        return Ok(OriginVerdict::No);
    }
    let Some(mut z) = correct(&f, seed.to_vec()) else {
        return Ok(OriginVerdict::Unknown);
    };
    let hmax = bx.min_radius() / 20.0;
    for _ in 0..MAX_STEPS {
        let dist = norm(&z);
        if dist < 1e-6 {
            return Ok(OriginVerdict::Yes);
        }
        if !bx.contains(&z) {
            return Ok(OriginVerdict::Unknown);
        }
        let g = f.gradient(&z);
        let Some(t) = tangent(&g) else {
            return Ok(OriginVerdict::Unknown);
        };
        let c: Complex64 = z.iter().zip(&t).map(|(a, b)| -a * b.conj()).sum();
        let d: Vec<Complex64> = t.iter().map(|b| b * c).collect();
        let dn = norm(&d);
        if dn < 1e-9 * dist.max(1.0) {
            return Ok(OriginVerdict::Unknown);
        }
        let mut alpha = (hmax / dn).min(1.0);
        let mut moved = false;
        for _ in 0..=MAX_HALVINGS {
            let pred: Vec<Complex64> = z.iter().zip(&d).map(|(a, b)| a + b * alpha).collect();
            if let Some(next) = correct(&f, pred) {
                if norm(&next) < dist {
                    z = next;
                    moved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if !moved {
            return Ok(OriginVerdict::Unknown);
        }
    }
    Ok(OriginVerdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn flat_leaf() {
        let rho = corpus::cartan_hyperplane();
        let bx = Polydisc::around_origin(2, 2.0);
        let tr = trace_leaf(&rho, &Point::exact_ints(&[(0, 0), (0, 1)]), &bx, 0.05).unwrap();
        assert!(tr.len() > 20);
        assert!(tr.points.iter().all(|z| (z[1] - c(0.0, 1.0)).norm() < 1e-10));
        assert_eq!(tr.stops, [StopReason::BoxExit, StopReason::BoxExit]);
    }

    #[test]
    fn hyperbola_leaf() {
        let rho = corpus::im_z1z2();
        let bx = Polydisc::around_origin(2, 2.0);
        let tr = trace_leaf(&rho, &Point::exact_ints(&[(1, 0), (1, 0)]), &bx, 0.05).unwrap();
        assert!(tr.len() > 20);
        for z in &tr.points {
            assert!((z[0] * z[1] - 1.0).norm() < 1e-8);
        }
        assert!(tr.max_residual() < 1e-8);
    }

    #[test]
    fn closed_leaf_stops_after_one_loop() {
        // the real path through (1, 1) on z1 z2 = 1 runs around |z1| = 1
        let rho = corpus::im_z1z2();
        let bx = Polydisc::around_origin(2, 2.0);
        let tr = trace_leaf(&rho, &Point::exact_ints(&[(1, 0), (1, 0)]), &bx, 0.05).unwrap();
        assert_eq!(tr.stops, [StopReason::Closed, StopReason::Closed]);
        let loop_len = 2.0 * std::f64::consts::PI * 2f64.sqrt();
        assert!((tr.len() as f64 - loop_len / 0.05).abs() < 3.0, "{}", tr.len());
    }

    #[test]
    fn pencil_leaf_is_a_line() {
        let rho = corpus::pencil_of_lines();
        let bx = Polydisc::around_origin(2, 2.0);
        let tr = trace_leaf(&rho, &Point::exact_ints(&[(1, 0), (0, 1)]), &bx, 0.05).unwrap();
        for z in &tr.points {
            assert!((z[1] - c(0.0, 1.0) * z[0]).norm() < 1e-7);
        }
        assert!(tr.stops.contains(&StopReason::NearSingular) || tr.len() > 10);
    }

    #[test]
    fn singular_start_is_rejected() {
        let bx = Polydisc::around_origin(2, 1.0);
        assert!(matches!(trace_leaf(&corpus::im_z1z2(), &Point::origin(2), &bx, 0.05), Err(Error::NotRegular(_))));
    }

    #[test]
    fn origin_membership() {
        let bx = Polydisc::around_origin(2, 2.0);
        let v = passes_through_origin(&corpus::pencil_of_lines(), &[c(1.0, 0.0), c(0.0, 0.0)], &[c(0.7, 0.3), c(0.0, 0.0)], &bx).unwrap();
        assert_eq!(v, OriginVerdict::Yes);
        let v = passes_through_origin(&corpus::cartan_hyperplane(), &[c(0.0, 0.0), c(1.0, 0.0)], &[c(0.0, 0.0), c(-1.0, 0.0)], &bx).unwrap();
        assert_eq!(v, OriginVerdict::No);
        let v = passes_through_origin(&corpus::im_z1z2(), &[c(1.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(1.0, 0.0)], &bx).unwrap();
        assert_eq!(v, OriginVerdict::No);
        // Q_0 of Im(z1 z2) is the union of the axes
        let v = passes_through_origin(&corpus::im_z1z2(), &[c(0.0, 0.0), c(0.0, 0.0)], &[c(0.9, -0.4), c(0.0, 0.0)], &bx).unwrap();
        assert_eq!(v, OriginVerdict::Yes);
    }
}
