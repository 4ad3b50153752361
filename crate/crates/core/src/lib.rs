//! Exact-symbolic and numeric analysis of singular real-algebraic Levi-flat
//! hypersurfaces in ℂⁿ.
//!
//! A hypersurface is given by a real polynomial `ρ(z, z̄)`. The crate decides
//! Levi-flatness exactly, computes Segre varieties `Q_w = {z : ρ(z, w̄) = 0}`,
//! classifies singular points as dicritical (Segre degenerate) or nondicritical,
//! exposes the slice/discriminant machinery used to study Segre varieties near a
//! point, and offers a numeric laboratory for `n = 2`: leaf tracing, transverses
//! and uniformly laminar currents.
//!
//! ```
//! use leviflat::{corpus, segre::{classify_point, PointClass}, Point};
//!
//! let rho = corpus::pencil_of_lines();
//! let class = classify_point(&rho, &Point::origin(2)).unwrap();
//! assert_eq!(class.class, PointClass::SingularDicritical);
//! ```

pub mod config;
pub mod corpus;
pub mod currents;
pub mod error;
pub mod expr;
pub mod foliation;
pub mod hermitian;
pub mod poly;
pub mod point;
pub mod report;
pub mod roots;
pub mod segre;
pub mod slice;

pub use error::{Error, Result};
pub use hermitian::RealBipoly;
pub use point::Point;
pub use poly::{CPoly, GaussianRational};
