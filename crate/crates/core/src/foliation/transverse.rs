use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{marching_squares, require_plane, restrict_wbar_line, restrict_z_line, LeafTrace, Polydisc};
use crate::error::{Error, Result};
use crate::hermitian::RealBipoly;
use crate::point::{conj_vec, norm, Point};
use crate::poly::{FloatPoly, Poly, Var};
use crate::roots::{cluster_roots, polynomial_roots, trim};
use crate::segre::{Classifier, PointClass};

pub(crate) const MATCH_TOL: f64 = 1e-7;
pub(crate) const ON_GAMMA_TOL: f64 = 1e-8;
pub(crate) const DEDUP_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct TransverseOptions {
    pub trials: usize,
    pub seed: u64,
    /// Grid nodes per side of the `t`-plane contour grid; rounded up to even.
    pub grid: usize,
    pub refine_tol: f64,
}

impl Default for TransverseOptions {
    fn default() -> Self {
        TransverseOptions { trials: 64, seed: 0, grid: 512, refine_tol: 1e-10 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TransverseSample {
    pub t: (f64, f64),
    pub branch: usize,
    /// `|ρ(c + tv)|`.
    pub residual: f64,
}

impl TransverseSample {
    pub fn param(&self) -> Complex64 {
        Complex64::new(self.t.0, self.t.1)
    }
}

/// `γ = {t : ρ(c + tv) = 0}` inside the parameter disc `|t| < t_radius`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Transverse {
    pub center: Vec<(f64, f64)>,
    pub direction: Vec<(f64, f64)>,
    pub t_radius: f64,
    pub center_class: PointClass,
    /// Order of vanishing of `t ↦ ρ^ℂ(c + tv, c̄)` at `0`.
    pub zero_order: usize,
    /// Zeros of the same function inside the disc, counted by the argument principle.
    pub winding: i64,
    pub branches: usize,
    pub samples: Vec<TransverseSample>,
    /// Fraction of samples per branch where the holomorphic gradient exceeds `1e-8`.
    pub regular_fraction: Vec<f64>,
    /// Every branch is mostly made of regular points.
    pub branches_regular: bool,
    pub directions_tried: usize,
}

fn cx(p: (f64, f64)) -> Complex64 {
    Complex64::new(p.0, p.1)
}

fn pairs(v: &[Complex64]) -> Vec<(f64, f64)> {
    v.iter().map(|c| (c.re, c.im)).collect()
}

impl Transverse {
    pub fn center(&self) -> Vec<Complex64> {
        self.center.iter().copied().map(cx).collect()
    }

    pub fn direction(&self) -> Vec<Complex64> {
        self.direction.iter().copied().map(cx).collect()
    }

    /// `c + t v`.
    pub fn point_at(&self, t: Complex64) -> Vec<Complex64> {
        self.center().iter().zip(self.direction()).map(|(c, v)| c + t * v).collect()
    }

    pub fn branch_samples(&self, b: usize) -> impl Iterator<Item = &TransverseSample> {
        self.samples.iter().filter(move |s| s.branch == b)
    }
}

/// `h(t, t̄) = ρ(c + tv, conj(c + tv))` in a ring with one variable pair.
fn restrict_real(p: &FloatPoly, c: &[Complex64], v: &[Complex64]) -> FloatPoly {
    let n = p.n();
    let t = Poly::var(1, Var::Z(0));
    let tb = Poly::var(1, Var::WBar(0));
    let mut subs = Vec::with_capacity(2 * n);
    for k in 0..n {
        subs.push(&Poly::constant(1, c[k]) + &t.scale(&v[k]));
    }
    for k in 0..n {
        subs.push(&Poly::constant(1, c[k].conj()) + &tb.scale(&v[k].conj()));
    }
    p.compose(&subs)
}

fn winding_number(g: &[Complex64], r: f64) -> i64 {
    let m = 4096;
    let mut total = 0.0;
    let val = |k: usize| {
        let t = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / m as f64);
        crate::roots::horner(g, t).0
    };
    let mut prev = val(0);
    for k in 1..=m {
        let cur = val(k % m);
        total += (cur / prev).arg();
        prev = cur;
    }
    (total / std::f64::consts::TAU).round() as i64
}

struct Candidate {
    v: Vec<Complex64>,
    t_radius: f64,
    zero_order: usize,
    winding: i64,
}

fn check_direction(p: &FloatPoly, c: &[Complex64], v: Vec<Complex64>, bx: &Polydisc) -> Option<Candidate> {
    let t_radius = v.iter().zip(&bx.radius).filter(|(vk, _)| vk.norm() > 0.0).map(|(vk, r)| r / vk.norm()).fold(f64::INFINITY, f64::min);
    if !t_radius.is_finite() {
        return None;
    }
    let g = trim(&restrict_z_line(p, c, &v, &conj_vec(c)), 1e-14);
    if g.is_empty() {
        return None;
    }
    let roots = polynomial_roots(&g).ok()?;
    let zero_order = roots.iter().filter(|r| r.norm() < DEDUP_TOL).count();
    if roots.iter().any(|r| r.norm() >= DEDUP_TOL && r.norm() <= t_radius * (1.0 + 1e-9)) {
        return None;
    }
    if roots.iter().any(|r| (r.norm() - t_radius).abs() < 1e-6 * t_radius) {
        return None;
    }
    let winding = winding_number(&g, t_radius);
    (winding == zero_order as i64).then_some(Candidate { v, t_radius, zero_order, winding })
}

/// Builds a transverse through the centre of `bx`.
///
/// The centre must be a nondicritical singular point or a regular point of a
/// Levi-flat hypersurface. A direction `v` is accepted when `t = 0` is the only
/// root of `ρ^ℂ(c + tv, c̄)` in the parameter disc. The real curve `γ` is then
/// contoured on a grid, refined by Newton's method and split into branches
/// through the centre.
pub fn build_transverse(rho: &RealBipoly, bx: &Polydisc, opts: &TransverseOptions) -> Result<Transverse> {
    require_plane(rho)?;
    let c = bx.center.clone();
    let center_point = if c.iter().all(|z| *z == Complex64::new(0.0, 0.0)) { Point::origin(2) } else { Point::float(&c) };
    let class = Classifier::new(rho)?.classify(&center_point).class;
    match class {
        PointClass::SingularDicritical => return Err(Error::Hypothesis("centre is a dicritical singularity".into())),
        PointClass::NotOnGamma => return Err(Error::Hypothesis("centre does not lie on the hypersurface".into())),
        _ => {}
    }
    let p = rho.complexification().to_float();

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut candidates = vec![vec![zero, one], vec![one, zero], vec![one, one]];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while candidates.len() < opts.trials.max(3) {
        let v: Vec<Complex64> = (0..2)
            .map(|_| Complex64::new(rng.random_range(-8i64..=8) as f64 / rng.random_range(1i64..=8) as f64, 0.0))
            .collect();
        if norm(&v) > 0.0 {
            candidates.push(v);
        }
    }
    let mut tried = 0;
    let mut chosen = None;
    for v in candidates.into_iter().take(opts.trials) {
        tried += 1;
        if let Some(cand) = check_direction(&p, &c, v, bx) {
            chosen = Some(cand);
            break;
        }
    }
    let cand = chosen.ok_or(Error::NoGenericDirection(tried))?;
    let v = cand.v.clone();
    let r = cand.t_radius;

    let h = restrict_real(&p, &c, &v);
    let ht = h.diff_index(0);
    let eval_h = |t: Complex64| h.eval_split(&[t], &[t.conj()]).re;

    let nodes = opts.grid.max(8).div_ceil(2) * 2;
    let delta = 2.0 * r / nodes as f64;
    let xs: Vec<f64> = (0..nodes).map(|k| -r + (k as f64 + 0.5) * delta).collect();
    let values: Vec<Vec<f64>> = xs.par_iter().map(|&x| xs.iter().map(|&y| eval_h(Complex64::new(x, y))).collect()).collect();
    let cut = 2.5 * delta;
    let keep = |i: usize, j: usize| {
        let corners = [(xs[i], xs[j]), (xs[i + 1], xs[j]), (xs[i], xs[j + 1]), (xs[i + 1], xs[j + 1])];
        let (mx, my) = (0.5 * (xs[i] + xs[i + 1]), 0.5 * (xs[j] + xs[j + 1]));
        corners.iter().all(|(x, y)| x.hypot(*y) < r) && mx.hypot(my) > cut
    };
    let lines = marching_squares(&xs, &xs, &values, keep);

    let refine = |t0: Complex64| -> Option<(Complex64, f64)> {
        let mut t = t0;
        for _ in 0..40 {
            let hv = eval_h(t);
            if hv.abs() < opts.refine_tol {
                return (t.norm() < r).then_some((t, hv.abs()));
            }
            let d = ht.eval_split(&[t], &[t.conj()]);
            let (gx, gy) = (2.0 * d.re, -2.0 * d.im);
            let g2 = gx * gx + gy * gy;
            if g2 == 0.0 {
                return None;
            }
            t -= Complex64::new(gx, gy) * (hv / g2);
        }
        None
    };

    // arms leaving the centre are paired by opposite tangents
    let near_center = cut + 2.0 * delta;
    struct Arm {
        pts: Vec<Complex64>,
        dir: Option<Complex64>,
    }
    let arms: Vec<Arm> = lines
        .iter()
        .map(|l| {
            let mut pts: Vec<Complex64> = l.points.iter().map(|&(x, y)| Complex64::new(x, y)).collect();
            let first = pts.first().copied().unwrap_or_default();
            let last = pts.last().copied().unwrap_or_default();
            if !l.closed && last.norm() < first.norm() {
                pts.reverse();
            }
            let start = pts.first().copied().unwrap_or_default();
            let dir = (!l.closed && start.norm() < near_center).then(|| start / start.norm());
            Arm { pts, dir }
        })
        .collect();
    let mut branch_of = vec![usize::MAX; arms.len()];
    let mut order: Vec<usize> = (0..arms.len()).collect();
    order.sort_by(|&a, &b| {
        let key = |k: usize| arms[k].dir.map(|d| d.arg()).unwrap_or(f64::INFINITY);
        key(a).partial_cmp(&key(b)).unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut branches = 0;
    for &a in &order {
        if branch_of[a] != usize::MAX {
            continue;
        }
        branch_of[a] = branches;
        if let Some(da) = arms[a].dir {
            let partner = order
                .iter()
                .copied()
                .filter(|&b| b != a && branch_of[b] == usize::MAX)
                .filter_map(|b| arms[b].dir.map(|db| (b, (da.conj() * db).re)))
                .filter(|&(_, dot)| dot < -0.9)
                .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(std::cmp::Ordering::Equal));
            if let Some((b, _)) = partner {
                branch_of[b] = branches;
            }
        }
        branches += 1;
    }

    let mut samples = Vec::new();
    for (k, arm) in arms.iter().enumerate() {
        for &t0 in &arm.pts {
            if let Some((t, res)) = refine(t0) {
                samples.push(TransverseSample { t: (t.re, t.im), branch: branch_of[k], residual: res });
            }
        }
    }
    samples.sort_by(|a, b| (a.branch, a.t.0, a.t.1).partial_cmp(&(b.branch, b.t.0, b.t.1)).unwrap_or(std::cmp::Ordering::Equal));

    let grad: Vec<FloatPoly> = (0..2).map(|k| p.diff_index(k)).collect();
    let regular_fraction: Vec<f64> = (0..branches)
        .map(|b| {
            let own: Vec<&TransverseSample> = samples.iter().filter(|s| s.branch == b).collect();
            if own.is_empty() {
                return 0.0;
            }
            let good = own
                .iter()
                .filter(|s| {
                    let z: Vec<Complex64> = c.iter().zip(&v).map(|(ck, vk)| ck + s.param() * vk).collect();
                    let zb = conj_vec(&z);
                    norm(&grad.iter().map(|g| g.eval_split(&z, &zb)).collect::<Vec<_>>()) > 1e-8
                })
                .count();
            good as f64 / own.len() as f64
        })
        .collect();
    let branches_regular = regular_fraction.iter().all(|&f| f > 0.5);

    Ok(Transverse {
        center: pairs(&c),
        direction: pairs(&v),
        t_radius: r,
        center_class: class,
        zero_order: cand.zero_order,
        winding: cand.winding,
        branches,
        samples,
        regular_fraction,
        branches_regular,
        directions_tried: tried,
    })
}

/// Parameters `s ∈ γ` whose Segre variety contains the traced leaf.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeafMatch {
    pub parameters: Vec<(f64, f64)>,
    /// Branch of the nearest transverse sample, if any lies within `1e-2`.
    pub branches: Vec<Option<usize>>,
    /// `max_z |ρ^ℂ(z, conj(c + s v))|` over the trace.
    pub max_residuals: Vec<f64>,
}

impl LeafMatch {
    pub fn len(&self) -> usize {
        self.parameters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parameters.is_empty()
    }
}

/// Finds the transverse parameters whose Segre varieties contain the leaf.
///
/// Candidates are the roots `t` of `ρ^ℂ(q, conj(c + tv)) = 0` for the trace's
/// basepoint `q`; a candidate is kept when it lies on `γ` (`|ρ| < 1e-8`) and the
/// whole trace lies in its Segre variety (`< 1e-7`). Results are deduplicated at
/// `1e-6`. An empty result contradicts the existence of a matching leaf.
pub fn match_leaf_to_transverse(rho: &RealBipoly, trace: &LeafTrace, tv: &Transverse) -> Result<LeafMatch> {
    require_plane(rho)?;
    let p = rho.complexification().to_float();
    let c = tv.center();
    let v = tv.direction();
    let q = trace.basepoint();
    let k = trim(&restrict_wbar_line(&p, &q, &conj_vec(&c), &conj_vec(&v)), 1e-14);
    if k.is_empty() {
        return Err(Error::Inconclusive("the basepoint lies in every Segre variety along the transverse".into()));
    }
    let roots = polynomial_roots(&k)?;
    let mut kept = Vec::new();
    for u in roots {
        let t = u.conj();
        if t.norm() > tv.t_radius * (1.0 + 1e-9) {
            continue;
        }
        let s = tv.point_at(t);
        if rho.eval_on_diagonal(&s).norm() >= ON_GAMMA_TOL {
            continue;
        }
        let sbar = conj_vec(&s);
        let worst = trace.points.iter().map(|z| p.eval_split(z, &sbar).norm()).fold(0.0, f64::max);
        if worst < MATCH_TOL {
            kept.push((t, worst));
        }
    }
    let clusters = cluster_roots(&kept.iter().map(|(t, _)| *t).collect::<Vec<_>>(), DEDUP_TOL);
    let mut out = LeafMatch { parameters: Vec::new(), branches: Vec::new(), max_residuals: Vec::new() };
    for cl in clusters {
        let t = cl.root();
        let worst = kept.iter().filter(|(s, _)| (s - t).norm() < DEDUP_TOL).map(|(_, w)| *w).fold(0.0, f64::max);
        let branch = tv
            .samples
            .iter()
            .map(|s| ((s.param() - t).norm(), s.branch))
            .filter(|(d, _)| *d < 1e-2)
            .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal))
            .map(|(_, b)| b);
        out.parameters.push((t.re, t.im));
        out.branches.push(branch);
        out.max_residuals.push(worst);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::foliation::trace_leaf;

    fn opts() -> TransverseOptions {
        TransverseOptions { grid: 128, ..Default::default() }
    }

    #[test]
    fn hyperbolic_transverse_has_two_branches() {
        let tv = build_transverse(&corpus::im_z1z2(), &Polydisc::around_origin(2, 1.0), &opts()).unwrap();
        assert_eq!(tv.direction, vec![(1.0, 0.0), (1.0, 0.0)]);
        assert_eq!(tv.directions_tried, 3);
        assert_eq!(tv.branches, 2);
        assert_eq!(tv.zero_order, 2);
        assert_eq!(tv.winding, 2);
        assert!(tv.branches_regular);
        for s in &tv.samples {
            assert!(s.residual < 1e-10);
            // Im(t^2) = 2xy vanishes on the axes
            assert!(s.t.0.abs() < 1e-9 || s.t.1.abs() < 1e-9);
        }
    }

    #[test]
    fn regular_centre_has_one_branch() {
        let tv = build_transverse(&corpus::im_z2_plus_z1_squared(), &Polydisc::around_origin(2, 1.0), &opts()).unwrap();
        assert_eq!(tv.direction, vec![(0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(tv.branches, 1);
        assert!(tv.samples.iter().all(|s| s.t.1.abs() < 1e-9));
    }

    #[test]
    fn dicritical_centre_is_rejected() {
        let r = build_transverse(&corpus::pencil_of_lines(), &Polydisc::around_origin(2, 1.0), &opts());
        assert!(matches!(r, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn matches() {
        let bx = Polydisc::around_origin(2, 1.0);
        let rho = corpus::im_z1z2();
        let tv = build_transverse(&rho, &bx, &opts()).unwrap();
        let q = Point::float(&[Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)]);
        let tr = trace_leaf(&rho, &q, &bx, 0.05).unwrap();
        let m = match_leaf_to_transverse(&rho, &tr, &tv).unwrap();
        assert_eq!(m.len(), 2);
        for &(re, im) in &m.parameters {
            assert!((re.abs() - 0.5).abs() < 1e-9 && im.abs() < 1e-9);
        }

        let rho = corpus::im_z2_plus_z1_squared();
        let tv = build_transverse(&rho, &bx, &opts()).unwrap();
        let q = Point::float(&[Complex64::new(0.0, 0.0), Complex64::new(0.3, 0.0)]);
        let tr = trace_leaf(&rho, &q, &bx, 0.05).unwrap();
        let m = match_leaf_to_transverse(&rho, &tr, &tv).unwrap();
        assert_eq!(m.len(), 1);
        assert!((cx(m.parameters[0]) - Complex64::new(0.3, 0.0)).norm() < 1e-9);

        let rho = corpus::cartan_hyperplane();
        let tv = build_transverse(&rho, &bx, &opts()).unwrap();
        let q = Point::float(&[Complex64::new(0.2, 0.1), Complex64::new(0.0, 0.4)]);
        let tr = trace_leaf(&rho, &q, &bx, 0.05).unwrap();
        let m = match_leaf_to_transverse(&rho, &tr, &tv).unwrap();
        assert_eq!(m.len(), 1);
        assert!((cx(m.parameters[0]) - Complex64::new(0.0, 0.4)).norm() < 1e-9);
    }
}
