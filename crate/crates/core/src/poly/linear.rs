use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::monomial::MultiIndex;
use super::sparse::{Block, CPoly, Var};
use crate::error::{Error, Result};

/// Square matrix with exact Gaussian-rational entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    rows: Vec<Vec<GaussianRational>>,
}

impl LinearMap {
    pub fn new(rows: Vec<Vec<GaussianRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "linear map must be square");
        LinearMap { rows }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { GaussianRational::one() } else { GaussianRational::zero() }).collect())
                .collect(),
        )
    }

    pub fn diag(d: &[GaussianRational]) -> Self {
        let n = d.len();
        let mut m = Self::identity(n);
        for (i, x) in d.iter().enumerate() {
            m.rows[i][i] = x.clone();
        }
        m
    }

    /// Transposition of coordinates `a` and `b`.
    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::identity(n);
        m.rows.swap(a, b);
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussianRational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.rows.iter().map(|r| r.iter().map(GaussianRational::conj).collect()).collect())
    }

    pub fn apply(&self, x: &[GaussianRational]) -> Vec<GaussianRational> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn apply_f64(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a.to_complex() * b).sum())
            .collect()
    }

    pub fn compose(&self, o: &LinearMap) -> LinearMap {
        let n = self.dim();
        Self::new(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).fold(GaussianRational::zero(), |acc, k| acc + &self.rows[i][k] * &o.rows[k][j]))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn determinant(&self) -> GaussianRational {
        let n = self.dim();
        let mut a = self.rows.clone();
        let mut det = GaussianRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return GaussianRational::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            det = &det * &a[col][col];
            let inv = a[col][col].inv().unwrap();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= &t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        let n = self.dim();
        let mut a: Vec<Vec<GaussianRational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { GaussianRational::one() } else { GaussianRational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMap)?;
            a.swap(piv, col);
            let inv = a[col][col].inv().unwrap();
            for c in 0..2 * n {
                a[col][c] = &a[col][c] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &a[col][c];
                    a[r][c] -= &t;
                }
            }
        }
        Ok(LinearMap::new(a.into_iter().map(|r| r[n..].to_vec()).collect()))
    }
}

/// Composes `p` with the affine substitution `x ← M x + shift` on one variable block.
///
/// For the `z` block this is `p(Mz + b, w̄)`; the other block is left alone.
pub fn substitute_affine(p: &CPoly, block: Block, map: &LinearMap, shift: &[GaussianRational]) -> Result<CPoly> {
    let n = p.n();
    if map.dim() != n || shift.len() != n {
        return Err(Error::Contract(format!("affine map must be {n}×{n} with a length-{n} shift")));
    }
    if map.determinant().is_zero() {
        return Err(Error::SingularMap);
    }
    Ok(substitute_affine_unchecked(p, block, map, shift))
}

pub(crate) fn substitute_affine_unchecked(p: &CPoly, block: Block, map: &LinearMap, shift: &[GaussianRational]) -> CPoly {
    let n = p.n();
    let var = |i: usize| match block {
        Block::Z => Var::Z(i),
        Block::WBar => Var::WBar(i),
    };
    let subs: Vec<CPoly> = (0..2 * n)
        .map(|k| {
            let v = Var::from_index(k, n);
            let in_block = matches!((block, v), (Block::Z, Var::Z(_)) | (Block::WBar, Var::WBar(_)));
            if !in_block {
                return CPoly::var(n, v);
            }
            let i = match v {
                Var::Z(i) | Var::WBar(i) => i,
            };
            let mut s = CPoly::constant(n, shift[i].clone());
            for j in 0..n {
                s.add_term(MultiIndex::unit(2 * n, var(j).index(n)), map.entry(i, j).clone());
            }
            s
        })
        .collect();
    p.compose(&subs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: usize) -> CPoly {
        CPoly::var(2, Var::Z(k))
    }

    #[test]
    fn shear_substitution() {
        let m = LinearMap::from_ints(&[&[1, 1], &[0, 1]]);
        let got = substitute_affine(&(&z(0) * &z(1)), Block::Z, &m, &[0.into(), 0.into()]).unwrap();
        assert_eq!(got, &(&z(0) * &z(1)) + &z(1).pow(2));
    }

    #[test]
    fn identity_and_swap() {
        let p = &(&z(0).pow(3) * &CPoly::var(2, Var::WBar(1))) + &z(1);
        let zero = [GaussianRational::zero(), GaussianRational::zero()];
        assert_eq!(substitute_affine(&p, Block::Z, &LinearMap::identity(2), &zero).unwrap(), p);
        assert_eq!(substitute_affine(&z(1), Block::Z, &LinearMap::swap(2, 0, 1), &zero).unwrap(), z(0));
    }

    #[test]
    fn singular_map_rejected() {
        let m = LinearMap::from_ints(&[&[1, 2], &[2, 4]]);
        let zero = [GaussianRational::zero(), GaussianRational::zero()];
        assert_eq!(substitute_affine(&z(0), Block::Z, &m, &zero), Err(Error::SingularMap));
        assert_eq!(m.inverse(), Err(Error::SingularMap));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = LinearMap::new(vec![
            vec![GaussianRational::from_ints(1, 1), GaussianRational::from_fracs(1, 2, 0, 1)],
            vec![GaussianRational::from(3), GaussianRational::from_ints(0, -2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), LinearMap::identity(2));
        assert_eq!(m.determinant(), GaussianRational::from_fracs(1, 2, -2, 1));
    }
}
