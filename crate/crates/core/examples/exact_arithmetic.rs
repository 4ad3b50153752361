//! Exact arithmetic over Q(i): division, gcd, squarefree parts and resultants.

use leviflat::poly::{derivative_resultant, gcd_poly, resultant_in, squarefree_part, CPoly, GaussianRational, Var};

fn main() -> leviflat::Result<()> {
    let z = |k| CPoly::var(2, Var::Z(k));
    let w = |k| CPoly::var(2, Var::WBar(k));
    let i = CPoly::constant(2, GaussianRational::i());

    let p = &(&z(0) + &i) * &(&z(0) - &i);
    println!("(z1 + i)(z1 - i) = {p}");

    let diff = &z(1).pow(2) - &w(1).pow(2);
    let q = diff.divide_exact(&(&z(1) - &w(1)))?;
    println!("(z2^2 - w2^2) / (z2 - w2) = {q}");

    let a = &z(0).pow(2) * &z(1);
    let b = &z(0) * &z(1).pow(2);
    println!("gcd({a}, {b}) = {}", gcd_poly(&a, &b));

    let cube = &z(0).pow(2) * &(&z(1) - &w(1)).pow(3);
    println!("squarefree part of {cube} = {}", squarefree_part(&cube)?);

    let quad = &(&z(1).pow(2) + &(&w(0) * &z(1))) + &w(1);
    println!("Res_z2(p, dp/dz2) for p = {quad}: {}", resultant_in(&quad, &quad.differentiate(Var::Z(1))?, Var::Z(1))?);
    println!("derivative_resultant agrees: {}", derivative_resultant(&quad, Var::Z(1))?);
    Ok(())
}
