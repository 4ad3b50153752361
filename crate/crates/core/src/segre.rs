//! Segre varieties `Q_w = {z : ρ(z, w̄) = 0}`, Segre degeneracy and the
//! dicritical/nondicritical classification of singular points.
//!
//! On a Levi-flat hypersurface a singular point is dicritical exactly when it is
//! Segre degenerate, i.e. when `ρ(·, q̄)` vanishes identically. Classification
//! therefore reduces to an identity test on one polynomial.

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::{is_levi_flat, RealBipoly};
use crate::point::{conj_vec, norm, Point};
use crate::poly::{gcd_poly, substitute_affine, Block, CPoly, FloatPoly, GaussianRational, LinearMap};

/// Tolerance for identity tests at floating basepoints.
pub const FLOAT_TOL: f64 = 1e-10;

/// `ρ^ℂ(·, w̄)` as a polynomial in `z` alone.
#[derive(Clone, Debug, PartialEq)]
pub enum SegrePoly {
    Exact(CPoly),
    Float(FloatPoly),
}

impl SegrePoly {
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        let n = z.len();
        let zero = vec![Complex64::zero(); n];
        match self {
            SegrePoly::Exact(p) => p.to_float().eval_split(z, &zero),
            SegrePoly::Float(p) => p.eval_split(z, &zero),
        }
    }

    pub fn exact(&self) -> Option<&CPoly> {
        match self {
            SegrePoly::Exact(p) => Some(p),
            SegrePoly::Float(_) => None,
        }
    }

    pub fn to_float(&self) -> FloatPoly {
        match self {
            SegrePoly::Exact(p) => p.to_float(),
            SegrePoly::Float(p) => p.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SegreSlice {
    pub basepoint: Point,
    pub poly: SegrePoly,
    /// `poly ≡ 0`, exactly or within [`FLOAT_TOL`] for float basepoints.
    pub degenerate: bool,
    /// Set when `degenerate` was decided numerically.
    pub numerically_degenerate: bool,
}

fn wbar_assignment<C: Clone>(n: usize, wbar: &[C]) -> Vec<Option<C>> {
    (0..2 * n).map(|k| (k >= n).then(|| wbar[k - n].clone())).collect()
}

/// Substitutes `w̄ ← conj(w)` into `ρ^ℂ`.
pub fn segre_of(rho: &RealBipoly, w: &Point) -> SegreSlice {
    let n = rho.n();
    assert_eq!(w.dim(), n, "basepoint dimension");
    let p = rho.complexification();
    match w {
        Point::Exact(c) => {
            let wbar: Vec<GaussianRational> = c.iter().map(GaussianRational::conj).collect();
            let s = p.partial_eval(&wbar_assignment(n, &wbar));
            SegreSlice { basepoint: w.clone(), degenerate: s.is_zero(), numerically_degenerate: false, poly: SegrePoly::Exact(s) }
        }
        Point::Float(c) => {
            let s = p.to_float().partial_eval(&wbar_assignment(n, &conj_vec(c)));
            let degenerate = s.max_abs_coeff() < FLOAT_TOL;
            SegreSlice { basepoint: w.clone(), degenerate, numerically_degenerate: degenerate, poly: SegrePoly::Float(s) }
        }
    }
}

/// `ρ^ℂ(q, q̄)`, exactly when `q` is exact.
pub fn gamma_value(rho: &RealBipoly, q: &Point) -> Complex64 {
    match q {
        Point::Exact(c) => rho.eval_exact(c).to_complex(),
        Point::Float(c) => rho.eval_on_diagonal(c),
    }
}

/// `q ∈ Γ`: exact test for exact points, `|ρ(q, q̄)| < 1e-10` otherwise.
pub fn on_gamma(rho: &RealBipoly, q: &Point) -> bool {
    match q {
        Point::Exact(c) => rho.eval_exact(c).is_zero(),
        Point::Float(c) => rho.eval_on_diagonal(c).norm() < FLOAT_TOL,
    }
}

/// `q ∈ Q_q`, which is equivalent to [`on_gamma`].
pub fn in_own_segre(rho: &RealBipoly, q: &Point) -> bool {
    let s = segre_of(rho, q);
    match (&s.poly, q) {
        (SegrePoly::Exact(p), Point::Exact(c)) => {
            let zero = vec![GaussianRational::zero(); c.len()];
            p.eval_split(c, &zero).is_zero()
        }
        (poly, _) => poly.eval(&q.to_complex()).norm() < FLOAT_TOL,
    }
}

pub fn is_segre_degenerate(rho: &RealBipoly, q: &Point) -> bool {
    segre_of(rho, q).degenerate
}

/// Coefficients `g_I(w̄)` of `ρ^ℂ = Σ_I z^I g_I(w̄)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegenerateLocus {
    pub n: usize,
    pub generators: Vec<(Vec<u32>, CPoly)>,
}

pub fn degenerate_locus(rho: &RealBipoly) -> DegenerateLocus {
    let generators = rho.complexification().collect_coefficients(Block::Z).into_iter().collect();
    DegenerateLocus { n: rho.n(), generators }
}

impl DegenerateLocus {
    /// `Σ_I z^I g_I(w̄)`.
    pub fn reconstruct(&self) -> CPoly {
        let n = self.n;
        let mut acc = CPoly::zero(n);
        for (i, g) in &self.generators {
            let zi = CPoly::monomial(n, crate::poly::MultiIndex::join(i, &vec![0; n]), GaussianRational::from(1));
            acc = &acc + &(&zi * g);
        }
        acc
    }

    /// Values `g_I(q̄)`.
    pub fn evaluate_at(&self, q: &[Complex64]) -> Vec<Complex64> {
        let zero = vec![Complex64::zero(); self.n];
        let qbar = conj_vec(q);
        self.generators.iter().map(|(_, g)| g.to_float().eval_split(&zero, &qbar)).collect()
    }

    /// Exact membership: all `g_I(q̄) = 0`.
    pub fn contains_exact(&self, q: &[GaussianRational]) -> bool {
        let zero = vec![GaussianRational::zero(); self.n];
        let qbar: Vec<GaussianRational> = q.iter().map(GaussianRational::conj).collect();
        self.generators.iter().all(|(_, g)| g.eval_split(&zero, &qbar).is_zero())
    }

    /// True when some generator is a nonzero constant.
    pub fn is_empty(&self) -> bool {
        self.generators.iter().any(|(_, g)| g.is_constant() && !g.is_zero())
    }

    /// GCD of all generators; a constant means no common hypersurface component.
    pub fn common_factor(&self) -> CPoly {
        self.generators.iter().fold(CPoly::zero(self.n), |acc, (_, g)| gcd_poly(&acc, g))
    }

    /// For `n = 2`: the zero set is finite iff the generators share no nonconstant factor.
    pub fn is_finite(&self) -> bool {
        self.common_factor().is_constant()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PointClass {
    NotOnGamma,
    Regular,
    SingularNondicritical,
    SingularDicritical,
}

/// A classification with its evidence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub point: Point,
    pub class: PointClass,
    pub gradient_norm: f64,
    pub degenerate: bool,
    /// `|g_I(q̄)|` for each generator of the degenerate locus.
    pub generators_evaluated: Vec<f64>,
    /// False when Levi-flatness was assumed rather than verified.
    pub levi_flat_verified: bool,
    pub numerically_degenerate: bool,
}

/// Classifies points of one hypersurface, caching the derivative data.
#[derive(Clone, Debug)]
pub struct Classifier {
    rho: RealBipoly,
    gradient: Vec<CPoly>,
    locus: DegenerateLocus,
    levi_flat_verified: bool,
}

impl Classifier {
    /// Verifies Levi-flatness first; refuses non-Levi-flat inputs.
    pub fn new(rho: &RealBipoly) -> Result<Self> {
        if !is_levi_flat(rho)?.levi_flat {
            return Err(Error::NotLeviFlat);
        }
        Ok(Self::build(rho, true))
    }

    /// Skips the Levi-flatness check; results are recorded as unverified.
    pub fn assume_levi_flat(rho: &RealBipoly) -> Self {
        Self::build(rho, false)
    }

    fn build(rho: &RealBipoly, verified: bool) -> Self {
        let p = rho.complexification();
        let gradient = (0..p.nvars()).map(|k| p.diff_index(k)).collect();
        Classifier { rho: rho.clone(), gradient, locus: degenerate_locus(rho), levi_flat_verified: verified }
    }

    pub fn rho(&self) -> &RealBipoly {
        &self.rho
    }

    pub fn classify(&self, q: &Point) -> Classification {
        let n = self.rho.n();
        let qc = q.to_complex();
        let (on, singular, gradient_norm) = match q {
            Point::Exact(c) => {
                let cbar: Vec<GaussianRational> = c.iter().map(GaussianRational::conj).collect();
                let grad: Vec<GaussianRational> = self.gradient.iter().map(|g| g.eval_split(c, &cbar)).collect();
                let gn = norm(&grad.iter().map(GaussianRational::to_complex).collect::<Vec<_>>());
                (on_gamma(&self.rho, q), grad.iter().all(Zero::is_zero), gn)
            }
            Point::Float(c) => {
                let cbar = conj_vec(c);
                let grad: Vec<Complex64> = self.gradient.iter().map(|g| g.to_float().eval_split(c, &cbar)).collect();
                let gn = norm(&grad);
                (on_gamma(&self.rho, q), gn < FLOAT_TOL, gn)
            }
        };
        let slice = segre_of(&self.rho, q);
        let generators_evaluated = self.locus.evaluate_at(&qc).iter().map(|v| v.norm()).collect();
        let class = if !on {
            PointClass::NotOnGamma
        } else if !singular {
            PointClass::Regular
        } else if slice.degenerate {
            PointClass::SingularDicritical
        } else {
            PointClass::SingularNondicritical
        };
        debug_assert_eq!(qc.len(), n);
        Classification {
            point: q.clone(),
            class,
            gradient_norm,
            degenerate: slice.degenerate,
            generators_evaluated,
            levi_flat_verified: self.levi_flat_verified,
            numerically_degenerate: slice.numerically_degenerate,
        }
    }
}

/// Classifies `q` after verifying Levi-flatness.
pub fn classify_point(rho: &RealBipoly, q: &Point) -> Result<Classification> {
    Ok(Classifier::new(rho)?.classify(q))
}

/// `z ∈ Q_w ⟺ w ∈ Q_z` at one pair of points.
pub fn segre_symmetry_check(rho: &RealBipoly, z: &Point, w: &Point) -> bool {
    match (z, w) {
        (Point::Exact(a), Point::Exact(b)) => {
            let p = rho.complexification();
            let abar: Vec<GaussianRational> = a.iter().map(GaussianRational::conj).collect();
            let bbar: Vec<GaussianRational> = b.iter().map(GaussianRational::conj).collect();
            p.eval_split(a, &bbar).is_zero() == p.eval_split(b, &abar).is_zero()
        }
        _ => {
            let p = rho.complexification().to_float();
            let (a, b) = (z.to_complex(), w.to_complex());
            let l = p.eval_split(&a, &conj_vec(&b)).norm() < FLOAT_TOL;
            let r = p.eval_split(&b, &conj_vec(&a)).norm() < FLOAT_TOL;
            l == r
        }
    }
}

/// Checks that `M(Q_w)` is the Segre variety of `Mw` for `ρ ∘ M⁻¹`, up to a constant factor.
pub fn linear_covariance_check(rho: &RealBipoly, m: &LinearMap, w: &Point) -> Result<bool> {
    let w = w.exact().ok_or_else(|| Error::Contract("linear covariance needs an exact basepoint".into()))?;
    let minv = m.inverse()?;
    let transformed = rho.pullback_linear(&minv)?;
    let lhs = segre_of(&transformed, &Point::Exact(m.apply(w)));
    let rhs = segre_of(rho, &Point::Exact(w.to_vec()));
    let (SegrePoly::Exact(l), SegrePoly::Exact(r)) = (&lhs.poly, &rhs.poly) else { unreachable!() };
    let zero = vec![GaussianRational::zero(); rho.n()];
    let image = substitute_affine(r, Block::Z, &minv, &zero)?;
    Ok(match (l.is_zero(), image.is_zero()) {
        (true, true) => true,
        (false, false) => l.constant_ratio(&image).is_some(),
        _ => false,
    })
}
