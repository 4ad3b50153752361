//! Parsing defining functions, lowering Re/Im/conj exactly, and rejecting non-real input.

use leviflat::expr::{parse_expression, parse_real};

fn main() {
    for text in ["Re(z1*conj(z2))", "Im(z1*z2)", "z2 + conj(z2)", "Im(z2 + z1^2)", "0.5*(z1*conj(z1) - 1)", "z1*conj(z2)", "Re(z1 +* z2)"] {
        match parse_real(text, None) {
            Ok(rho) => println!("{text:<24} -> rho(z, wbar) = {rho}"),
            Err(e) => println!("{text:<24} -> error: {e}"),
        }
    }
    let ast = parse_expression("-z1^2 + 1/4*conj(z2)").expect("valid");
    println!("tree printed back: {ast}");
}
