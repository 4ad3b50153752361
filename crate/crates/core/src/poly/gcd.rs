//! Exact division, multivariate GCD and squarefree parts over ℚ(i).
//!
//! The GCD works on a recursive univariate view: the smallest-index variable that
//! occurs is the main variable, coefficients live in the ring of the remaining
//! variables, and the primitive parts are combined through a primitive
//! pseudo-remainder sequence.

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::monomial::MultiIndex;
use super::sparse::CPoly;
use crate::error::{Error, Result};

impl CPoly {
    /// Returns `h` with `self = h · q`, or [`Error::NotDivisible`].
    pub fn divide_exact(&self, q: &CPoly) -> Result<CPoly> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n() != q.n() {
            return Err(Error::VariableMismatch { left: self.n(), right: q.n() });
        }
        let (lm_q, lc_q) = q.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lc_inv = lc_q.inv().unwrap();
        let mut r = self.clone();
        let mut h = CPoly::zero(self.n());
        // grlex is a monomial order: if q | r then LT(q) | LT(r) at every step.
        while let Some((lm_r, lc_r)) = r.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let m = lm_r.checked_div(&lm_q).ok_or(Error::NotDivisible)?;
            let c = &lc_r * &lc_inv;
            h.add_term(m.clone(), c.clone());
            let t = CPoly::monomial(self.n(), m, c);
            r = &r - &(&t * q);
        }
        Ok(h)
    }

    /// `Some(c)` when `self = c · q` for a nonzero constant `c`.
    pub fn constant_ratio(&self, q: &CPoly) -> Option<GaussianRational> {
        if self.is_zero() || q.is_zero() {
            return None;
        }
        let h = self.divide_exact(q).ok()?;
        h.constant_value().filter(|c| !c.is_zero())
    }

    /// True when `q` divides `self` exactly.
    pub fn is_divisible_by(&self, q: &CPoly) -> bool {
        self.divide_exact(q).is_ok()
    }
}

fn first_var(p: &CPoly, q: &CPoly) -> Option<usize> {
    (0..p.nvars()).find(|&k| p.degree_in_index(k) > 0 || q.degree_in_index(k) > 0)
}

/// GCD of all coefficients of `p` viewed as a polynomial in variable `k`.
fn content_in(p: &CPoly, k: usize) -> CPoly {
    let mut g = CPoly::zero(p.n());
    for c in p.coefficients_in_index(k) {
        if c.is_zero() {
            continue;
        }
        g = gcd_poly(&g, &c);
        if g.is_constant() {
            return CPoly::one(p.n());
        }
    }
    g
}

fn primitive_part_in(p: &CPoly, k: usize) -> CPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, k);
    p.divide_exact(&c).expect("content divides").monic()
}

/// Pseudo-remainder of `a` by `b` in variable `k`, up to a power of `lc_k(b)`.
fn pseudo_rem(a: &CPoly, b: &CPoly, k: usize) -> CPoly {
    let n = a.n();
    let db = b.degree_in_index(k);
    let bc = b.coefficients_in_index(k);
    let lc_b = bc.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in_index(k) >= db {
        let dr = r.degree_in_index(k);
        let lc_r = r.coefficients_in_index(k).pop().unwrap();
        let shift = CPoly::monomial(n, {
            let mut m = MultiIndex::zero(2 * n);
            m.0[k] = dr - db;
            m
        }, GaussianRational::one());
        r = &(&lc_b * &r) - &(&(&lc_r * &shift) * b);
    }
    r
}

/// Greatest common divisor, made monic in graded-lex order. `gcd(0, 0) = 0`.
pub fn gcd_poly(p: &CPoly, q: &CPoly) -> CPoly {
    assert_eq!(p.n(), q.n(), "gcd of polynomials from different rings");
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return CPoly::one(p.n());
    }
    let k = first_var(p, q).expect("nonconstant input has a variable");
    let (dp, dq) = (p.degree_in_index(k), q.degree_in_index(k));
    if dp == 0 {
        return gcd_poly(p, &content_in(q, k));
    }
    if dq == 0 {
        return gcd_poly(&content_in(p, k), q);
    }
    let cp = content_in(p, k);
    let cq = content_in(q, k);
    let g_cont = gcd_poly(&cp, &cq);
    let mut a = primitive_part_in(p, k);
    let mut b = primitive_part_in(q, k);
    if a.degree_in_index(k) < b.degree_in_index(k) {
        std::mem::swap(&mut a, &mut b);
    }
    let g_prim = loop {
        let r = pseudo_rem(&a, &b, k);
        if r.is_zero() {
            break b;
        }
        if r.degree_in_index(k) == 0 {
            break CPoly::one(p.n());
        }
        a = b;
        b = primitive_part_in(&r, k);
    };
    (&g_cont * &g_prim).monic()
}

/// Product of the distinct irreducible factors: `p / gcd(p, ∂p/∂x_1, …)`.
pub fn squarefree_part(p: &CPoly) -> Result<CPoly> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("squarefree part of the zero polynomial"));
    }
    let mut g = p.clone();
    for k in 0..p.nvars() {
        if g.is_constant() {
            break;
        }
        let d = p.diff_index(k);
        if !d.is_zero() {
            g = gcd_poly(&g, &d);
        }
    }
    if g.is_constant() {
        return Ok(p.clone());
    }
    p.divide_exact(&g)
}

/// True when `p` equals its squarefree part up to a constant.
pub fn is_squarefree(p: &CPoly) -> Result<bool> {
    Ok(squarefree_part(p)?.total_degree() == p.total_degree())
}
