//! Slices of the complexified hypersurface along a distinguished axis.
//!
//! A [`SliceFrame`] puts a chosen complex line through a center at the last
//! coordinate axis: `z = c + M ζ` with the direction as the last column of `M`.
//! The `w̄` variables are left in the original coordinates. Substituting the frame
//! into `ρ^ℂ` and collecting powers of `ζ_n` gives
//! `ρ^ℂ = s · Σ_i a_i(ζ', w̄) ζ_nⁱ`, where `s` is a constant that makes the
//! polynomial monic whenever its leading coefficient is constant.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::RealBipoly;
use crate::point::{conj_vec, Point};
use crate::poly::{derivative_resultant, substitute_affine, Block, CPoly, GaussianRational, LinearMap, Var};
use crate::roots::{cluster_roots, polynomial_roots, relative_residual, trim, RootCluster};

/// Default number of direction trials.
pub const DEFAULT_TRIALS: usize = 64;
/// Largest numerator/denominator of random direction entries.
pub const DIRECTION_HEIGHT: i64 = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct SliceFrame {
    pub center: Vec<GaussianRational>,
    pub map: LinearMap,
}

impl SliceFrame {
    /// Frame whose last axis is `direction`; the remaining axes are coordinate vectors.
    pub fn along(center: Vec<GaussianRational>, direction: &[GaussianRational]) -> Result<Self> {
        let n = direction.len();
        let pivot = (0..n).rev().find(|&k| !direction[k].is_zero()).ok_or(Error::SingularMap)?;
        let mut cols: Vec<Vec<GaussianRational>> = (0..n)
            .filter(|&k| k != pivot)
            .map(|k| (0..n).map(|i| if i == k { GaussianRational::one() } else { GaussianRational::zero() }).collect())
            .collect();
        cols.push(direction.to_vec());
        let rows = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        Ok(SliceFrame { center, map: LinearMap::new(rows) })
    }

    pub fn origin_along(direction: &[GaussianRational]) -> Result<Self> {
        Self::along(vec![GaussianRational::zero(); direction.len()], direction)
    }

    /// Coordinate axis `e_k` (0-based) through the origin.
    pub fn axis(n: usize, k: usize) -> Self {
        let v: Vec<GaussianRational> = (0..n).map(|i| if i == k { GaussianRational::one() } else { GaussianRational::zero() }).collect();
        Self::origin_along(&v).expect("axis is nonzero")
    }

    pub fn n(&self) -> usize {
        self.center.len()
    }

    pub fn direction(&self) -> Vec<GaussianRational> {
        self.map.column(self.n() - 1)
    }

    /// `z = c + M ζ`.
    pub fn to_ambient(&self, zeta: &[Complex64]) -> Vec<Complex64> {
        self.map.apply_f64(zeta).iter().zip(&self.center).map(|(a, c)| a + c.to_complex()).collect()
    }

    /// `ρ^ℂ(c + t v, w̄)` as a polynomial in `t = ζ_n` (other `ζ` set to 0).
    pub fn restrict_to_axis(&self, p: &CPoly) -> Result<CPoly> {
        let q = substitute_affine(p, Block::Z, &self.map, &self.center)?;
        let n = self.n();
        let assign: Vec<Option<GaussianRational>> =
            (0..2 * n).map(|k| (k < n - 1).then(GaussianRational::zero)).collect();
        Ok(q.partial_eval(&assign))
    }
}

fn random_rational<R: Rng>(rng: &mut R) -> GaussianRational {
    let num = rng.random_range(-DIRECTION_HEIGHT..=DIRECTION_HEIGHT);
    let den = rng.random_range(1..=DIRECTION_HEIGHT);
    GaussianRational::from_fracs(num, den, 0, 1)
}

/// Searches for a line through the origin meeting `Q_{w0}` discretely.
///
/// Tries the coordinate axes `e_n, …, e_1`, then `(1, …, 1)`, then random
/// rational directions drawn from `seed`.
pub fn find_generic_direction(rho: &RealBipoly, w0: &Point, trials: usize, seed: u64) -> Result<SliceFrame> {
    let n = rho.n();
    let w = w0.exact().ok_or_else(|| Error::Contract("direction search needs an exact reference point".into()))?;
    let wbar: Vec<Option<GaussianRational>> = (0..2 * n).map(|k| (k >= n).then(|| w[k - n].conj())).collect();
    let segre = rho.complexification().partial_eval(&wbar);
    if segre.is_zero() {
        return Err(Error::SegreDegenerateCenter);
    }
    let mut candidates: Vec<Vec<GaussianRational>> = (0..n)
        .rev()
        .map(|k| (0..n).map(|i| if i == k { GaussianRational::one() } else { GaussianRational::zero() }).collect())
        .collect();
    candidates.push(vec![GaussianRational::one(); n]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while candidates.len() < trials.max(n + 1) {
        let v: Vec<GaussianRational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            candidates.push(v);
        }
    }
    for v in candidates.into_iter().take(trials) {
        let frame = SliceFrame::origin_along(&v)?;
        if !frame.restrict_to_axis(&segre)?.is_zero() {
            return Ok(frame);
        }
    }
    Err(Error::NoGenericDirection(trials))
}

/// `s · Σ a_i ζ_nⁱ` with coefficients in `(ζ', w̄)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicePolynomial {
    pub frame: SliceFrame,
    /// `a_0, …, a_d`.
    pub coeffs: Vec<CPoly>,
    /// Leading coefficient is constant and has been divided out.
    pub normalized: bool,
    /// Constant factor `s` with `ρ^ℂ ∘ frame = s · Σ a_i ζ_nⁱ`.
    pub scale: GaussianRational,
}

impl SlicePolynomial {
    pub fn d(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    /// Vanishing locus of a nonconstant leading coefficient, where roots escape.
    pub fn leading_locus(&self) -> Option<&CPoly> {
        (!self.normalized).then(|| &self.coeffs[self.d()])
    }

    /// `Σ a_i ζ_nⁱ`.
    pub fn as_cpoly(&self) -> CPoly {
        CPoly::from_coefficients_in_index(self.n(), self.n() - 1, &self.coeffs)
    }

    /// `s · Σ a_i ζ_nⁱ`, which equals the frame-substituted `ρ^ℂ`.
    pub fn reconstruct(&self) -> CPoly {
        self.as_cpoly().scale(&self.scale)
    }

    /// Builds a slice polynomial from a polynomial already written in frame coordinates.
    pub fn from_cpoly(p: &CPoly) -> Result<Self> {
        let n = p.n();
        Self::collect(p, SliceFrame::axis(n, n - 1))
    }

    fn collect(p: &CPoly, frame: SliceFrame) -> Result<Self> {
        let n = p.n();
        let mut coeffs = p.coefficients_in_index(n - 1);
        if coeffs.len() < 2 {
            return Err(Error::DegenerateFrame);
        }
        let lead = coeffs.last().expect("nonempty");
        let (normalized, scale) = match lead.constant_value() {
            Some(c) => (true, c),
            None => (false, GaussianRational::one()),
        };
        if normalized {
            let inv = scale.inv().expect("leading coefficient is nonzero");
            coeffs = coeffs.iter().map(|a| a.scale(&inv)).collect();
        }
        Ok(SlicePolynomial { frame, coeffs, normalized, scale })
    }
}

/// Substitutes the frame into `ρ^ℂ` and collects powers of `ζ_n`.
pub fn slice_polynomial(rho: &RealBipoly, frame: &SliceFrame) -> Result<SlicePolynomial> {
    if frame.n() != rho.n() {
        return Err(Error::VariableMismatch { left: rho.n(), right: frame.n() });
    }
    let q = substitute_affine(rho.complexification(), Block::Z, &frame.map, &frame.center)?;
    SlicePolynomial::collect(&q, frame.clone())
}

/// Resultant in `ζ_n` of the slice polynomial and its derivative.
pub fn discriminant_set(sp: &SlicePolynomial) -> Result<CPoly> {
    if sp.d() == 0 {
        return Err(Error::Contract("discriminant needs degree at least 1".into()));
    }
    derivative_resultant(&sp.as_cpoly(), Var::Z(sp.n() - 1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebroidSlice {
    /// `a_i(0', w̄)` for all `i`.
    pub coeffs_at_center: Vec<CPoly>,
    /// Smallest `j` with `a_j(0', w̄) ≢ 0`.
    pub j: usize,
    /// `a_j(0', w̄), …, a_d(0', w̄)`: the polynomial divided by `ζ^j`.
    pub reduced: Vec<CPoly>,
    /// `a_j(0', w̄)`, whose zero set is the locus where extra roots reach `ζ = 0`.
    pub a_generator: CPoly,
}

impl AlgebroidSlice {
    /// `Σ_{i≥j} a_i(0', w̄) ζ^{i-j}` with `ζ = z_n`.
    pub fn reduced_cpoly(&self) -> CPoly {
        let n = self.a_generator.n();
        CPoly::from_coefficients_in_index(n, n - 1, &self.reduced)
    }
}

/// Sets `ζ' = 0` and strips the trailing power of `ζ`.
pub fn algebroid_slice(sp: &SlicePolynomial) -> Result<AlgebroidSlice> {
    let n = sp.n();
    let assign: Vec<Option<GaussianRational>> = (0..2 * n).map(|k| (k < n - 1).then(GaussianRational::zero)).collect();
    let coeffs_at_center: Vec<CPoly> = sp.coeffs.iter().map(|a| a.partial_eval(&assign)).collect();
    let j = coeffs_at_center.iter().position(|a| !a.is_zero()).ok_or(Error::SegreDegenerateCenter)?;
    let reduced = coeffs_at_center[j..].to_vec();
    Ok(AlgebroidSlice { a_generator: coeffs_at_center[j].clone(), j, reduced, coeffs_at_center })
}

/// Roots in `ζ_n` at `ζ' = 0`, `w̄ = conj(w)`.
pub fn slice_roots(sp: &SlicePolynomial, w: &[Complex64]) -> Result<Vec<RootCluster>> {
    slice_roots_at(sp, &vec![Complex64::zero(); sp.n() - 1], w)
}

/// Roots in `ζ_n` at the given `ζ'` and `w̄ = conj(w)`; residual below `1e-9`,
/// clustered at `1e-6`.
pub fn slice_roots_at(sp: &SlicePolynomial, zeta_prime: &[Complex64], w: &[Complex64]) -> Result<Vec<RootCluster>> {
    let n = sp.n();
    let mut z = zeta_prime.to_vec();
    z.push(Complex64::zero());
    let wbar = conj_vec(w);
    let raw: Vec<Complex64> = sp.coeffs.iter().map(|a| a.to_float().eval_split(&z, &wbar)).collect();
    let c = trim(&raw, 1e-14);
    if c.is_empty() {
        return Err(Error::IdenticallyZero);
    }
    debug_assert_eq!(z.len(), n);
    let roots = polynomial_roots(&c)?;
    if let Some(bad) = roots.iter().map(|r| relative_residual(&c, *r)).find(|&r| r >= 1e-9) {
        return Err(Error::Inconclusive(format!("root residual {bad:e} exceeds 1e-9")));
    }
    Ok(cluster_roots(&roots, 1e-6))
}

/// Summary of the slice data at one frame, for reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SliceSummary {
    pub direction: Vec<String>,
    pub d: usize,
    pub normalized: bool,
    pub coefficients: Vec<String>,
    pub discriminant: String,
    pub trailing_index: Option<usize>,
    pub a_generator: Option<String>,
}

pub fn summarize(sp: &SlicePolynomial) -> Result<SliceSummary> {
    let alg = algebroid_slice(sp).ok();
    Ok(SliceSummary {
        direction: sp.frame.direction().iter().map(|c| c.to_string()).collect(),
        d: sp.d(),
        normalized: sp.normalized,
        coefficients: sp.coeffs.iter().map(|a| a.to_string()).collect(),
        discriminant: discriminant_set(sp)?.to_string(),
        trailing_index: alg.as_ref().map(|a| a.j),
        a_generator: alg.map(|a| a.a_generator.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::segre::is_segre_degenerate;

    fn gr(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    fn wb(k: usize) -> CPoly {
        CPoly::var(2, Var::WBar(k))
    }

    fn ones() -> Vec<GaussianRational> {
        vec![gr(1, 0), gr(1, 0)]
    }

    #[test]
    fn direction_search() {
        let f = find_generic_direction(&corpus::im_z1z2(), &Point::origin(2), DEFAULT_TRIALS, 0).unwrap();
        assert_eq!(f.direction(), ones());
        assert_eq!(f.map, LinearMap::from_ints(&[&[1, 1], &[0, 1]]));
        let f = find_generic_direction(&corpus::cartan_hyperplane(), &Point::origin(2), DEFAULT_TRIALS, 0).unwrap();
        assert_eq!(f.direction(), vec![gr(0, 0), gr(1, 0)]);
        let f = find_generic_direction(&corpus::im_z2_squared(), &Point::origin(2), DEFAULT_TRIALS, 0).unwrap();
        assert_eq!(f.direction(), vec![gr(0, 0), gr(1, 0)]);
        assert_eq!(
            find_generic_direction(&corpus::pencil_of_lines(), &Point::origin(2), DEFAULT_TRIALS, 0),
            Err(Error::SegreDegenerateCenter)
        );
        // the (1,0) axis lies inside Q_0 = {z1 z2 = 0}
        let e1 = SliceFrame::axis(2, 0);
        let seg = corpus::im_z1z2().complexification().partial_eval(&[None, None, Some(gr(0, 0)), Some(gr(0, 0))]);
        assert!(e1.restrict_to_axis(&seg).unwrap().is_zero());
    }

    #[test]
    fn slice_examples() {
        let b = slice_polynomial(&corpus::im_z1z2(), &SliceFrame::origin_along(&ones()).unwrap()).unwrap();
        assert_eq!(b.d(), 2);
        assert!(b.normalized);
        assert_eq!(b.coeffs[2], CPoly::one(2));
        let alg = algebroid_slice(&b).unwrap();
        assert_eq!(alg.j, 0);
        assert_eq!(alg.a_generator, -&(&wb(0) * &wb(1)));

        let c = slice_polynomial(&corpus::cartan_hyperplane(), &SliceFrame::axis(2, 1)).unwrap();
        assert_eq!(c.d(), 1);
        assert_eq!(c.coeffs[0], wb(1));
        assert_eq!(algebroid_slice(&c).unwrap().j, 0);

        let a = slice_polynomial(&corpus::pencil_of_lines(), &SliceFrame::origin_along(&ones()).unwrap()).unwrap();
        assert_eq!(a.d(), 1);
        assert!(!a.normalized);
        let half = GaussianRational::from_fracs(1, 2, 0, 1);
        assert_eq!(a.coeffs[1], (&wb(0) + &wb(1)).scale(&half));
        let alg = algebroid_slice(&a).unwrap();
        assert!(alg.coeffs_at_center[0].is_zero());
        assert_eq!(alg.j, 1);
        assert_eq!(alg.a_generator, (&wb(0) + &wb(1)).scale(&half));
        assert_eq!(a.leading_locus(), Some(&(&wb(0) + &wb(1)).scale(&half)));
    }

    #[test]
    fn reconstruction_on_corpus() {
        let frames = [SliceFrame::axis(2, 1), SliceFrame::origin_along(&ones()).unwrap(), SliceFrame::along(vec![gr(1, 2), gr(0, -1)], &[gr(3, 0), gr(-2, 1)]).unwrap()];
        for (_, rho) in corpus::all() {
            for f in &frames {
                let sp = slice_polynomial(&rho, f).unwrap();
                let direct = substitute_affine(rho.complexification(), Block::Z, &f.map, &f.center).unwrap();
                assert_eq!(sp.reconstruct(), direct);
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        let d = slice_polynomial(&corpus::im_z2_squared(), &SliceFrame::axis(2, 1)).unwrap();
        let r = discriminant_set(&d).unwrap();
        assert_eq!(r, wb(1).pow(2).scale(&gr(-4, 0)));
        let c = slice_polynomial(&corpus::cartan_hyperplane(), &SliceFrame::axis(2, 1)).unwrap();
        assert!(discriminant_set(&c).unwrap().is_constant());
        let formal = SlicePolynomial::from_cpoly(&(&CPoly::var(2, Var::Z(1)).pow(2) + &wb(1))).unwrap();
        let r = discriminant_set(&formal).unwrap();
        assert!(r.constant_ratio(&wb(1)).is_some());
    }

    #[test]
    fn root_examples() {
        let c = slice_polynomial(&corpus::cartan_hyperplane(), &SliceFrame::axis(2, 1)).unwrap();
        let r = slice_roots(&c, &[Complex64::zero(), Complex64::new(0.0, 3.0)]).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].root() - Complex64::new(0.0, 3.0)).norm() < 1e-12);

        let d = slice_polynomial(&corpus::im_z2_squared(), &SliceFrame::axis(2, 1)).unwrap();
        let r = slice_roots(&d, &[Complex64::zero(), Complex64::new(1.0, 0.0)]).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].root() + 1.0).norm() < 1e-12 && (r[1].root() - 1.0).norm() < 1e-12);
        let r = slice_roots(&d, &[Complex64::zero(), Complex64::zero()]).unwrap();
        assert_eq!(r, vec![RootCluster { value: (0.0, 0.0), multiplicity: 2 }]);

        let a = slice_polynomial(&corpus::pencil_of_lines(), &SliceFrame::origin_along(&ones()).unwrap()).unwrap();
        assert_eq!(slice_roots(&a, &[Complex64::zero(), Complex64::zero()]), Err(Error::IdenticallyZero));
    }

    #[test]
    fn trailing_coefficient_tracks_degeneracy() {
        for (_, rho) in corpus::all() {
            let sp = slice_polynomial(&rho, &SliceFrame::axis(2, 1)).unwrap();
            let a0 = algebroid_slice(&sp).map(|a| a.coeffs_at_center[0].is_zero()).unwrap_or(true);
            assert_eq!(a0, is_segre_degenerate(&rho, &Point::origin(2)));
        }
    }
}
