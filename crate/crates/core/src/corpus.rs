//! Reference hypersurfaces used throughout the examples and tests.

use crate::hermitian::RealBipoly;
use crate::poly::{CPoly, GaussianRational, Var};

fn z(n: usize, k: usize) -> CPoly {
    CPoly::var(n, Var::Z(k))
}

fn wb(n: usize, k: usize) -> CPoly {
    CPoly::var(n, Var::WBar(k))
}

fn half() -> GaussianRational {
    GaussianRational::from_fracs(1, 2, 0, 1)
}

/// `1/(2i) = -i/2`.
fn inv_2i() -> GaussianRational {
    GaussianRational::from_fracs(0, 1, -1, 2)
}

fn real(p: CPoly) -> RealBipoly {
    RealBipoly::from_complexified(p).expect("corpus entries are Hermitian")
}

/// `Re(z₁ z̄₂)`: the cone over a pencil of complex lines, dicritical at the origin.
pub fn pencil_of_lines() -> RealBipoly {
    real((&(&z(2, 0) * &wb(2, 1)) + &(&z(2, 1) * &wb(2, 0))).scale(&half()))
}

/// `Im(z₁ z₂)`: singular and nondicritical at the origin.
pub fn im_z1z2() -> RealBipoly {
    real((&(&z(2, 0) * &z(2, 1)) - &(&wb(2, 0) * &wb(2, 1))).scale(&inv_2i()))
}

/// `z₂ + z̄₂`: the flat model, regular everywhere.
pub fn cartan_hyperplane() -> RealBipoly {
    real(&z(2, 1) + &wb(2, 1))
}

/// `Im(z₂²)`: a union of two real hyperplanes meeting along `z₂ = 0`.
pub fn im_z2_squared() -> RealBipoly {
    real((&z(2, 1).pow(2) - &wb(2, 1).pow(2)).scale(&inv_2i()))
}

/// `|z₁|² + |z₂|² − 1`: strictly pseudoconvex, not Levi-flat.
pub fn unit_sphere() -> RealBipoly {
    let p = &(&(&z(2, 0) * &wb(2, 0)) + &(&z(2, 1) * &wb(2, 1))) - &CPoly::one(2);
    real(p)
}

/// `Im(z₂ + z₁²)`: regular at the origin, leaves `z₂ + z₁² = const`.
pub fn im_z2_plus_z1_squared() -> RealBipoly {
    let hol = &z(2, 1) + &z(2, 0).pow(2);
    let anti = &wb(2, 1) + &wb(2, 0).pow(2);
    real((&hol - &anti).scale(&inv_2i()))
}

/// All corpus entries with their short names.
pub fn all() -> Vec<(&'static str, RealBipoly)> {
    vec![
        ("pencil", pencil_of_lines()),
        ("im_z1z2", im_z1z2()),
        ("cartan", cartan_hyperplane()),
        ("im_z2_sq", im_z2_squared()),
        ("sphere", unit_sphere()),
        ("im_z2_z1sq", im_z2_plus_z1_squared()),
    ]
}

/// Levi-flat corpus entries.
pub fn levi_flat() -> Vec<(&'static str, RealBipoly)> {
    all().into_iter().filter(|(name, _)| *name != "sphere").collect()
}

/// Looks up a corpus entry by short name.
pub fn by_name(name: &str) -> Option<RealBipoly> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, r)| r)
}
