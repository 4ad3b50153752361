//! Slice polynomials along a generic direction, discriminants and the algebroid slice.

use leviflat::poly::GaussianRational;
use leviflat::slice::{algebroid_slice, discriminant_set, find_generic_direction, slice_polynomial, slice_roots, SliceFrame};
use leviflat::{corpus, Point};
use num_complex::Complex64;

fn main() -> leviflat::Result<()> {
    let one = GaussianRational::from(1);
    let pencil = corpus::pencil_of_lines();
    let frame = SliceFrame::origin_along(&[one.clone(), one])?;
    let sp = slice_polynomial(&pencil, &frame)?;
    let alg = algebroid_slice(&sp)?;
    println!("pencil along (1,1): coefficients {:?}", sp.coeffs.iter().map(|a| a.to_string()).collect::<Vec<_>>());
    println!("  trailing index j = {}, A generated by {}", alg.j, alg.a_generator);

    for (name, rho) in [("im_z1z2", corpus::im_z1z2()), ("im_z2_sq", corpus::im_z2_squared())] {
        let frame = find_generic_direction(&rho, &Point::origin(2), 64, 0)?;
        let sp = slice_polynomial(&rho, &frame)?;
        println!("{name}: direction {:?}, d = {}, discriminant {}", frame.direction(), sp.d(), discriminant_set(&sp)?);
        let w = [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)];
        for r in slice_roots(&sp, &w)? {
            println!("  root at w = (0.3+0.1i, -0.2+0.4i): {:?} x{}", r.value, r.multiplicity);
        }
    }
    Ok(())
}
