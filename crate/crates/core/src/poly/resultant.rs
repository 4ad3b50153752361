//! Sylvester resultants by fraction-free (Bareiss) elimination.
//!
//! Sign convention: for `p = Σ a_i x^i` of degree `m` and `q = Σ b_i x^i` of
//! degree `l`, the Sylvester matrix has `l` shifted rows `a_m … a_0` followed by
//! `m` shifted rows `b_l … b_0`, and `Res_x(p, q)` is its determinant. With this
//! convention `Res_z(z − a, z − b) = a − b` and `Res_z(z² + bz + c, 2z + b) = 4c − b²`.

use super::sparse::{CPoly, Var};
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials by Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<CPoly>>, n_ring: usize) -> CPoly {
    let size = m.len();
    if size == 0 {
        return CPoly::one(n_ring);
    }
    let mut negate = false;
    let mut prev = CPoly::one(n_ring);
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return CPoly::zero(n_ring),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.divide_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = CPoly::zero(n_ring);
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `p` and `q` with respect to variable index `k`.
pub(crate) fn sylvester_matrix(p: &CPoly, q: &CPoly, k: usize) -> Vec<Vec<CPoly>> {
    let n = p.n();
    let a = p.coefficients_in_index(k);
    let b = q.coefficients_in_index(k);
    let (dm, dl) = (a.len() - 1, b.len() - 1);
    let size = dm + dl;
    let mut m = vec![vec![CPoly::zero(n); size]; size];
    for r in 0..dl {
        for (i, c) in a.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..dm {
        for (i, c) in b.iter().rev().enumerate() {
            m[dl + r][r + i] = c.clone();
        }
    }
    m
}

/// Resultant of `p` and `q` with respect to `v`; both must have positive degree in `v`.
pub fn resultant_in(p: &CPoly, q: &CPoly, v: Var) -> Result<CPoly> {
    if p.n() != q.n() {
        return Err(Error::VariableMismatch { left: p.n(), right: q.n() });
    }
    let k = v.index(p.n());
    if k >= p.nvars() {
        return Err(Error::UnknownVariable(v.name()));
    }
    if p.degree_in_index(k) == 0 || q.degree_in_index(k) == 0 {
        return Err(Error::Contract(format!(
            "resultant needs positive degree in {} for both inputs",
            v.name()
        )));
    }
    Ok(bareiss_det(sylvester_matrix(p, q, k), p.n()))
}

/// Discriminant-style resultant `Res_v(p, ∂p/∂v)`; for degree one it is the leading coefficient.
pub fn derivative_resultant(p: &CPoly, v: Var) -> Result<CPoly> {
    let k = v.index(p.n());
    let d = p.degree_in_index(k);
    if d == 0 {
        return Err(Error::Contract(format!("degree 0 in {}", v.name())));
    }
    let dp = p.diff_index(k);
    if d == 1 {
        // Sylvester matrix of a degree-1 and a degree-0 polynomial is the 1×1 matrix [a_1].
        return Ok(dp);
    }
    resultant_in(p, &dp, v)
}
