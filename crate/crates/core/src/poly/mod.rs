//! Exact sparse polynomials in `z_1..z_n, w̄_1..w̄_n` over the Gaussian rationals.

mod gaussian;
mod gcd;
mod linear;
mod monomial;
mod resultant;
pub mod serial;
mod sparse;

pub use gaussian::GaussianRational;
pub use gcd::{gcd_poly, is_squarefree, squarefree_part};
pub use linear::{substitute_affine, LinearMap};
pub use monomial::MultiIndex;
pub use resultant::{bareiss_det, derivative_resultant, resultant_in};
pub use sparse::{Block, CPoly, Coeff, FloatPoly, Poly, Var};
