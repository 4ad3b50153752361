//! Hermitian-symmetric real defining polynomials and their complexification.
//!
//! A real polynomial `ρ(z, z̄) = Σ c_IJ z^I z̄^J` is stored through the coefficients
//! `c_IJ`; the same coefficients read as a polynomial in independent variables
//! `(z, w̄)` give the complexification `ρ(z, w̄)`. Reality of `ρ` is the symmetry
//! `c_IJ = conj(c_JI)`.
//!
//! "Vanishes on Γ" is decided as exact divisibility by the squarefree
//! complexification. For an irreducible complexification this is exact; for
//! reducible inputs it is a surrogate, and reports say so.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::norm;
use crate::poly::{is_squarefree, squarefree_part, Block, CPoly, GaussianRational, LinearMap, MultiIndex};

/// Raw coefficient data `c_IJ` of a candidate real polynomial, not yet validated.
#[derive(Clone, Debug, PartialEq)]
pub struct Bipoly(CPoly);

impl Bipoly {
    pub fn from_cpoly(p: CPoly) -> Self {
        Bipoly(p)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// `(I, J, c_IJ)` triples in graded-lex order of `(I, J)`.
    pub fn coeffs(&self) -> impl Iterator<Item = (Vec<u32>, Vec<u32>, &GaussianRational)> + '_ {
        let n = self.0.n();
        self.0.terms().map(move |(m, c)| {
            let (i, j) = m.split(n);
            (i.to_vec(), j.to_vec(), c)
        })
    }

    pub fn as_cpoly(&self) -> &CPoly {
        &self.0
    }
}

/// Outcome of the Hermitian-symmetry check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HermitianCheck {
    pub hermitian: bool,
    /// `(I, J)` pairs with `c_IJ ≠ conj(c_JI)`; each unordered pair is listed once.
    pub violations: Vec<(Vec<u32>, Vec<u32>)>,
}

/// True iff `c_IJ = conj(c_JI)` for every pair.
pub fn check_hermitian(rho: &Bipoly) -> HermitianCheck {
    let p = &rho.0;
    let n = p.n();
    let mut violations = Vec::new();
    for (m, c) in p.terms() {
        let (i, j) = m.split(n);
        let swapped = MultiIndex::join(j, i);
        if &swapped < m {
            // already visited from the other side, unless the mirror is missing
            if !p.coeff(&swapped).is_zero() {
                continue;
            }
        }
        if p.coeff(&swapped) != c.conj() {
            violations.push((i.to_vec(), j.to_vec()));
        }
    }
    HermitianCheck { hermitian: violations.is_empty(), violations }
}

/// `σ(F)_{I,J} = conj(F_{J,I})`. `F` is Hermitian iff `σ(F) = F`.
pub fn hermitian_involution(f: &CPoly) -> CPoly {
    let n = f.n();
    CPoly::from_terms(
        n,
        f.terms().map(|(m, c)| {
            let (i, j) = m.split(n);
            (MultiIndex::join(j, i), c.conj())
        }),
    )
}

/// A validated real (Hermitian-symmetric, nonzero) defining polynomial.
#[derive(Clone, PartialEq)]
pub struct RealBipoly {
    complexified: CPoly,
}

impl RealBipoly {
    pub fn new(raw: Bipoly) -> Result<Self> {
        if raw.0.is_zero() {
            return Err(Error::ZeroDefiningFunction);
        }
        let check = check_hermitian(&raw);
        if !check.hermitian {
            return Err(Error::NotHermitian(check.violations.len()));
        }
        Ok(RealBipoly { complexified: raw.0 })
    }

    /// Validates a polynomial in `(z, w̄)` as the complexification of a real polynomial.
    pub fn from_complexified(p: CPoly) -> Result<Self> {
        Self::new(Bipoly(p))
    }

    pub fn n(&self) -> usize {
        self.complexified.n()
    }

    /// `ρ(z, w̄)`.
    pub fn complexification(&self) -> &CPoly {
        &self.complexified
    }

    pub fn as_bipoly(&self) -> Bipoly {
        Bipoly(self.complexified.clone())
    }

    /// `ρ(q, q̄)`, real up to rounding.
    pub fn eval_real(&self, q: &[Complex64]) -> f64 {
        self.eval_on_diagonal(q).re
    }

    /// `ρ(q, q̄)` as a complex number (its imaginary part is rounding noise).
    pub fn eval_on_diagonal(&self, q: &[Complex64]) -> Complex64 {
        let qbar: Vec<Complex64> = q.iter().map(|c| c.conj()).collect();
        self.complexified.to_float().eval_split(q, &qbar)
    }

    /// `ρ(q, q̄)` exactly.
    pub fn eval_exact(&self, q: &[GaussianRational]) -> GaussianRational {
        let qbar: Vec<GaussianRational> = q.iter().map(GaussianRational::conj).collect();
        self.complexified.eval_split(q, &qbar)
    }

    /// Pulls back by a linear change of coordinates: `ρ'(z, z̄) = ρ(Mz, conj(M) z̄)`.
    pub fn pullback_linear(&self, m: &LinearMap) -> Result<Self> {
        let n = self.n();
        let zero = vec![GaussianRational::zero(); n];
        let p = crate::poly::substitute_affine(&self.complexified, Block::Z, m, &zero)?;
        let p = crate::poly::substitute_affine(&p, Block::WBar, &m.conj(), &zero)?;
        Self::from_complexified(p)
    }

    /// Shifts the origin: `ρ'(z) = ρ(z + a)`.
    pub fn translate(&self, a: &[GaussianRational]) -> Result<Self> {
        let n = self.n();
        let id = LinearMap::identity(n);
        let p = crate::poly::substitute_affine(&self.complexified, Block::Z, &id, a)?;
        let abar: Vec<GaussianRational> = a.iter().map(GaussianRational::conj).collect();
        let p = crate::poly::substitute_affine(&p, Block::WBar, &id, &abar)?;
        Self::from_complexified(p)
    }

    pub fn scale(&self, c: &num_rational::BigRational) -> Result<Self> {
        Self::from_complexified(self.complexified.scale(&GaussianRational::real(c.clone())))
    }
}

impl fmt::Display for RealBipoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.complexified)
    }
}

impl fmt::Debug for RealBipoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealBipoly({})", self.complexified)
    }
}

/// The complexification `Γ^ℂ = {ρ(z, w̄) = 0}` with its squarefree flag.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaComplex {
    pub defining: CPoly,
    pub squarefree: bool,
}

impl GammaComplex {
    /// Restriction `w̄ ← z̄`, giving back the real polynomial's coefficients.
    pub fn restrict_to_diagonal(&self) -> Bipoly {
        Bipoly(self.defining.clone())
    }
}

/// Replaces `z̄` by the independent block `w̄`.
pub fn complexify(rho: &Bipoly) -> Result<GammaComplex> {
    let check = check_hermitian(rho);
    if !check.hermitian {
        return Err(Error::NotHermitian(check.violations.len()));
    }
    if rho.0.is_zero() {
        return Err(Error::ZeroDefiningFunction);
    }
    Ok(GammaComplex { defining: rho.0.clone(), squarefree: is_squarefree(&rho.0)? })
}

/// Extracts a real defining polynomial from a (squarefree) complex one.
///
/// Splits `F = f̂ + i ĝ` with `f̂ = (F + σF)/2`, `ĝ = (F − σF)/(2i)`, both Hermitian,
/// and returns whichever part is a nonzero constant multiple of `F`.
pub fn minimal_real_defining(f: &CPoly) -> Result<RealBipoly> {
    if f.is_zero() {
        return Err(Error::ZeroDefiningFunction);
    }
    if !is_squarefree(f)? {
        return Err(Error::Contract("input must be squarefree".into()));
    }
    let s = hermitian_involution(f);
    let half = GaussianRational::from_fracs(1, 2, 0, 1);
    let inv_2i = GaussianRational::from_fracs(0, 1, -1, 2);
    let f_hat = (f + &s).scale(&half);
    let g_hat = (f - &s).scale(&inv_2i);
    for part in [f_hat, g_hat] {
        if part.constant_ratio(f).is_some() {
            return RealBipoly::from_complexified(part);
        }
    }
    Err(Error::NoRealForm)
}

/// Levi matrix `(ρ_{z_k z̄_j}(q))_{k,j}`, row `k`, column `j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeviFormMatrix {
    pub entries: Vec<Vec<(f64, f64)>>,
}

impl LeviFormMatrix {
    pub fn get(&self, k: usize, j: usize) -> Complex64 {
        let (re, im) = self.entries[k][j];
        Complex64::new(re, im)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `Σ_{k,j} L_kj v_k conj(u_j)`.
    pub fn sesquilinear(&self, v: &[Complex64], u: &[Complex64]) -> Complex64 {
        let n = self.dim();
        let mut acc = Complex64::zero();
        for k in 0..n {
            for j in 0..n {
                acc += self.get(k, j) * v[k] * u[j].conj();
            }
        }
        acc
    }

    /// Largest deviation from Hermitian symmetry.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let mut d: f64 = 0.0;
        for k in 0..n {
            for j in 0..n {
                d = d.max((self.get(k, j) - self.get(j, k).conj()).norm());
            }
        }
        d
    }
}

pub fn levi_form_at(rho: &RealBipoly, q: &[Complex64]) -> LeviFormMatrix {
    let n = rho.n();
    let p = rho.complexification();
    let qbar: Vec<Complex64> = q.iter().map(|c| c.conj()).collect();
    let entries = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    let d = p.diff_index(k).diff_index(n + j);
                    let v = d.to_float().eval_split(q, &qbar);
                    (v.re, v.im)
                })
                .collect()
        })
        .collect();
    LeviFormMatrix { entries }
}

/// `v^{(jk)} = ρ_{z_k} e_j − ρ_{z_j} e_k`, a complex tangent field of Γ.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentGenerator {
    pub j: usize,
    pub k: usize,
    pub components: Vec<CPoly>,
}

impl TangentGenerator {
    pub fn eval(&self, q: &[Complex64]) -> Vec<Complex64> {
        let qbar: Vec<Complex64> = q.iter().map(|c| c.conj()).collect();
        self.components.iter().map(|c| c.to_float().eval_split(q, &qbar)).collect()
    }
}

pub fn complex_tangent_generators(rho: &RealBipoly) -> Vec<TangentGenerator> {
    let n = rho.n();
    let p = rho.complexification();
    let grads: Vec<CPoly> = (0..n).map(|k| p.diff_index(k)).collect();
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let mut components = vec![CPoly::zero(n); n];
            components[j] = grads[k].clone();
            components[k] = -&grads[j];
            out.push(TangentGenerator { j, k, components });
        }
    }
    out
}

/// One Levi-form value on a pair of generators, with its divisibility certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct LeviCertificate {
    pub pair: ((usize, usize), (usize, usize)),
    /// Complexified `L(v, v')`.
    pub lambda: CPoly,
    /// `Λ / ρ^ℂ` when divisible.
    pub quotient: Option<CPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeviFlatVerdict {
    pub levi_flat: bool,
    pub certificates: Vec<LeviCertificate>,
    /// The squarefree Hermitian polynomial actually tested when the input was not squarefree.
    pub reduced: Option<RealBipoly>,
}

/// Decides Levi-flatness by exact divisibility of the complexified Levi form values.
pub fn is_levi_flat(rho: &RealBipoly) -> Result<LeviFlatVerdict> {
    let p = rho.complexification();
    if p.is_zero() {
        return Err(Error::ZeroDefiningFunction);
    }
    let (work, reduced) = if is_squarefree(p)? {
        (rho.clone(), None)
    } else {
        let r = minimal_real_defining(&squarefree_part(p)?)?;
        (r.clone(), Some(r))
    };
    let n = work.n();
    let wp = work.complexification();
    let gens = complex_tangent_generators(&work);
    let hess: Vec<Vec<CPoly>> = (0..n).map(|a| (0..n).map(|b| wp.diff_index(a).diff_index(n + b)).collect()).collect();
    let conj_gens: Vec<Vec<CPoly>> = gens.iter().map(|g| g.components.iter().map(hermitian_involution).collect()).collect();
    let mut certificates = Vec::new();
    let mut flat = true;
    for g in &gens {
        for (hi, h) in gens.iter().enumerate() {
            let mut lambda = CPoly::zero(n);
            for a in 0..n {
                for b in 0..n {
                    if hess[a][b].is_zero() {
                        continue;
                    }
                    lambda = &lambda + &(&hess[a][b] * &(&g.components[a] * &conj_gens[hi][b]));
                }
            }
            let quotient = lambda.divide_exact(wp).ok();
            flat &= quotient.is_some();
            certificates.push(LeviCertificate { pair: ((g.j, g.k), (h.j, h.k)), lambda, quotient });
        }
    }
    Ok(LeviFlatVerdict { levi_flat: flat, certificates, reduced })
}

/// `{ρ^ℂ, ∂ρ^ℂ/∂z_k, ∂ρ^ℂ/∂w̄_k}`; `q` is a defining-function singularity iff all vanish at `(q, q̄)`.
pub fn singular_system(rho: &RealBipoly) -> Vec<CPoly> {
    let p = rho.complexification();
    let mut out = vec![p.clone()];
    out.extend((0..p.nvars()).map(|k| p.diff_index(k)));
    out
}

/// Holomorphic gradient `(∂ρ^ℂ/∂z_k)(q, q̄)`.
pub fn holomorphic_gradient(rho: &RealBipoly, q: &[Complex64]) -> Vec<Complex64> {
    let p = rho.complexification();
    let n = p.n();
    let qbar: Vec<Complex64> = q.iter().map(|c| c.conj()).collect();
    (0..n).map(|k| p.diff_index(k).to_float().eval_split(q, &qbar)).collect()
}

/// Largest `|L(v, v)|` over the normalized generators evaluated at `q`.
///
/// Generators that vanish at `q` (relative size below `1e-12`) are skipped.
pub fn levi_form_on_tangent(rho: &RealBipoly, q: &[Complex64]) -> f64 {
    let lm = levi_form_at(rho, q);
    complex_tangent_generators(rho)
        .iter()
        .filter_map(|g| {
            let v = g.eval(q);
            let nv = norm(&v);
            (nv > 1e-12).then(|| {
                let u: Vec<Complex64> = v.iter().map(|c| c / nv).collect();
                lm.sesquilinear(&u, &u).norm()
            })
        })
        .fold(0.0, f64::max)
}

/// Random points of Γ inside the polydisc of the given radius, found by bisection
/// of `t ↦ ρ(p + t u)` along random real lines. Points with a holomorphic gradient
/// below `min_grad` are discarded, so the result consists of regular points.
pub fn sample_points_on_gamma<R: Rng>(rho: &RealBipoly, count: usize, radius: f64, min_grad: f64, rng: &mut R) -> Vec<Vec<Complex64>> {
    let n = rho.n();
    let fp = rho.complexification().to_float();
    let f = |z: &[Complex64]| {
        let zb: Vec<Complex64> = z.iter().map(|c| c.conj()).collect();
        fp.eval_split(z, &zb).re
    };
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) {
        attempts += 1;
        let p: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.random_range(-radius..radius), rng.random_range(-radius..radius)) * 0.7)
            .collect();
        let u: Vec<Complex64> = (0..n).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let nu = norm(&u);
        if nu < 1e-3 {
            continue;
        }
        let u: Vec<Complex64> = u.iter().map(|c| c / nu).collect();
        let at = |t: f64| -> Vec<Complex64> { p.iter().zip(&u).map(|(a, b)| a + b * t).collect() };
        let steps = 64;
        let span = radius;
        let mut prev_t = -span;
        let mut prev_v = f(&at(prev_t));
        for s in 1..=steps {
            let t = -span + 2.0 * span * s as f64 / steps as f64;
            let v = f(&at(t));
            if prev_v == 0.0 || prev_v.signum() != v.signum() {
                let (mut lo, mut hi, mut flo) = (prev_t, t, prev_v);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    let fm = f(&at(mid));
                    if fm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                let z = at(0.5 * (lo + hi));
                let inside = z.iter().all(|c| c.norm() < radius);
                if inside && norm(&holomorphic_gradient(rho, &z)) > min_grad {
                    out.push(z);
                }
                break;
            }
            prev_t = t;
            prev_v = v;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::poly::Var;
    use rand::SeedableRng;

    fn c(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::from_fracs(re.0, re.1, im.0, im.1)
    }

    fn term(n: usize, i: &[u32], j: &[u32], c: GaussianRational) -> CPoly {
        CPoly::monomial(n, MultiIndex::join(i, j), c)
    }

    #[test]
    fn hermitian_examples() {
        let re_z1z2bar = Bipoly::from_cpoly(&term(2, &[1, 0], &[0, 1], c((1, 2), (0, 1))) + &term(2, &[0, 1], &[1, 0], c((1, 2), (0, 1))));
        assert!(check_hermitian(&re_z1z2bar).hermitian);

        let single = Bipoly::from_cpoly(term(2, &[1, 0], &[0, 1], GaussianRational::from(1)));
        let chk = check_hermitian(&single);
        assert!(!chk.hermitian);
        assert_eq!(chk.violations, vec![(vec![1, 0], vec![0, 1])]);

        let im_z1z2 = Bipoly::from_cpoly(&term(2, &[1, 1], &[0, 0], c((0, 1), (-1, 2))) + &term(2, &[0, 0], &[1, 1], c((0, 1), (1, 2))));
        assert!(check_hermitian(&im_z1z2).hermitian);
    }

    #[test]
    fn complexify_examples() {
        let cart = complexify(&corpus::cartan_hyperplane().as_bipoly()).unwrap();
        assert_eq!(cart.defining.to_string(), "z2 + conj(z2)");
        assert!(cart.squarefree);
        let a = complexify(&corpus::pencil_of_lines().as_bipoly()).unwrap();
        assert_eq!(a.defining.to_string(), "1/2*z1*conj(z2) + 1/2*z2*conj(z1)");
        let b = complexify(&corpus::im_z1z2().as_bipoly()).unwrap();
        assert_eq!(b.defining.to_string(), "-1/2*i*z1*z2 + 1/2*i*conj(z1)*conj(z2)");
        let bad = Bipoly::from_cpoly(term(2, &[1, 0], &[0, 1], GaussianRational::from(1)));
        assert_eq!(complexify(&bad), Err(Error::NotHermitian(1)));
    }

    #[test]
    fn involution_examples() {
        let t = |i: &[u32], j: &[u32], c: GaussianRational| term(2, i, j, c);
        assert_eq!(hermitian_involution(&t(&[1, 0], &[0, 1], 1.into())), t(&[0, 1], &[1, 0], 1.into()));
        assert_eq!(hermitian_involution(&t(&[1, 1], &[0, 0], GaussianRational::i())), t(&[0, 0], &[1, 1], GaussianRational::from_ints(0, -1)));
        let cart = corpus::cartan_hyperplane().complexification().clone();
        assert_eq!(hermitian_involution(&cart), cart);
    }

    #[test]
    fn minimal_real_defining_examples() {
        let cart = corpus::cartan_hyperplane();
        assert_eq!(minimal_real_defining(cart.complexification()).unwrap(), cart);

        let z1z2 = term(2, &[1, 1], &[0, 0], 1.into());
        let w1w2 = term(2, &[0, 0], &[1, 1], 1.into());
        let f = (&z1z2 - &w1w2).scale(&GaussianRational::i());
        let r = minimal_real_defining(&f).unwrap();
        assert!(r.complexification().constant_ratio(corpus::im_z1z2().complexification()).is_some());

        let z1 = term(2, &[1, 0], &[0, 0], 1.into());
        assert_eq!(minimal_real_defining(&z1), Err(Error::NoRealForm));
    }

    #[test]
    fn levi_form_examples() {
        let q = [Complex64::new(0.3, -1.1), Complex64::new(2.0, 0.5)];
        let e = levi_form_at(&corpus::unit_sphere(), &q);
        assert_eq!(e.get(0, 0), Complex64::new(1.0, 0.0));
        assert_eq!(e.get(0, 1), Complex64::zero());
        let a = levi_form_at(&corpus::pencil_of_lines(), &q);
        assert_eq!(a.get(0, 1), Complex64::new(0.5, 0.0));
        assert_eq!(a.get(1, 0), Complex64::new(0.5, 0.0));
        assert_eq!(a.get(0, 0), Complex64::zero());
        let cz = levi_form_at(&corpus::cartan_hyperplane(), &q);
        assert!(cz.entries.iter().flatten().all(|&(re, im)| re == 0.0 && im == 0.0));
        assert!(a.hermitian_defect() < 1e-12);
    }

    #[test]
    fn tangent_generator_examples() {
        let g = complex_tangent_generators(&corpus::cartan_hyperplane());
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].components, vec![CPoly::one(2), CPoly::zero(2)]);
        let g = complex_tangent_generators(&corpus::pencil_of_lines());
        let half = GaussianRational::from_fracs(1, 2, 0, 1);
        assert_eq!(g[0].components[0], CPoly::var(2, Var::WBar(0)).scale(&half));
        assert_eq!(g[0].components[1], CPoly::var(2, Var::WBar(1)).scale(&-half));
        let three = RealBipoly::from_complexified(
            &(&CPoly::var(3, Var::Z(0)) * &CPoly::var(3, Var::WBar(0))) + &(&CPoly::var(3, Var::Z(2)) * &CPoly::var(3, Var::WBar(2))),
        )
        .unwrap();
        assert_eq!(complex_tangent_generators(&three).len(), 3);
    }

    #[test]
    fn levi_flat_examples() {
        let a = is_levi_flat(&corpus::pencil_of_lines()).unwrap();
        assert!(a.levi_flat);
        let quarter = GaussianRational::from_fracs(-1, 4, 0, 1);
        assert_eq!(a.certificates[0].quotient, Some(CPoly::constant(2, quarter)));
        let e = is_levi_flat(&corpus::unit_sphere()).unwrap();
        assert!(!e.levi_flat);
        let cz = is_levi_flat(&corpus::cartan_hyperplane()).unwrap();
        assert!(cz.levi_flat);
        assert!(cz.certificates.iter().all(|c| c.lambda.is_zero()));
    }

    #[test]
    fn non_squarefree_input_is_reduced() {
        let cart = corpus::cartan_hyperplane();
        let sq = RealBipoly::from_complexified(cart.complexification().pow(2)).unwrap();
        let v = is_levi_flat(&sq).unwrap();
        assert!(v.levi_flat);
        assert!(v.reduced.is_some());
        let sphere_sq = RealBipoly::from_complexified(corpus::unit_sphere().complexification().pow(2)).unwrap();
        assert!(!is_levi_flat(&sphere_sq).unwrap().levi_flat);
    }

    #[test]
    fn singular_system_examples() {
        let b = corpus::im_z1z2();
        let sys = singular_system(&b);
        let origin = vec![GaussianRational::zero(); 4];
        assert!(sys.iter().all(|p| p.eval(&origin).is_zero()));
        let one = vec![GaussianRational::from(1); 4];
        let dz1 = &sys[1];
        assert_eq!(dz1.eval(&one), GaussianRational::from_fracs(0, 1, -1, 2));
        let cart = singular_system(&corpus::cartan_hyperplane());
        assert!(cart.iter().any(|p| p.is_constant() && !p.is_zero()));
    }

    #[test]
    fn sampled_points_lie_on_gamma() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rho = corpus::im_z1z2();
        let pts = sample_points_on_gamma(&rho, 20, 1.5, 1e-3, &mut rng);
        assert_eq!(pts.len(), 20);
        for p in &pts {
            assert!(rho.eval_real(p).abs() < 1e-12);
        }
    }
}
