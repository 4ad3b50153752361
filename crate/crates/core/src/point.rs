use num_complex::Complex64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::poly::GaussianRational;

/// A point of ℂⁿ, either exact (Gaussian rationals) or floating point.
///
/// Exact points get exact identity tests; float points get tolerance-based ones.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Exact(Vec<GaussianRational>),
    Float(Vec<Complex64>),
}

impl Point {
    pub fn origin(n: usize) -> Self {
        Point::Exact(vec![GaussianRational::zero(); n])
    }

    pub fn exact_ints(coords: &[(i64, i64)]) -> Self {
        Point::Exact(coords.iter().map(|&(a, b)| GaussianRational::from_ints(a, b)).collect())
    }

    pub fn float(coords: &[Complex64]) -> Self {
        Point::Float(coords.to_vec())
    }

    pub fn dim(&self) -> usize {
        match self {
            Point::Exact(v) => v.len(),
            Point::Float(v) => v.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Point::Exact(_))
    }

    pub fn exact(&self) -> Option<&[GaussianRational]> {
        match self {
            Point::Exact(v) => Some(v),
            Point::Float(_) => None,
        }
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        match self {
            Point::Exact(v) => v.iter().map(GaussianRational::to_complex).collect(),
            Point::Float(v) => v.clone(),
        }
    }

    /// Human-readable coordinates, used in reports.
    pub fn labels(&self) -> Vec<String> {
        match self {
            Point::Exact(v) => v.iter().map(|c| c.to_string()).collect(),
            Point::Float(v) => v.iter().map(|c| format!("{}{:+}i", c.re, c.im)).collect(),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// Euclidean norm of a complex vector.
pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub fn conj_vec(v: &[Complex64]) -> Vec<Complex64> {
    v.iter().map(|c| c.conj()).collect()
}
