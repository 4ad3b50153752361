//! Tracing Levi leaves by continuation and checking they stay in Gamma and in Q_q.

use leviflat::foliation::{passes_through_origin, trace_leaf, Polydisc};
use leviflat::{corpus, Point};
use num_complex::Complex64;

fn main() -> leviflat::Result<()> {
    let bx = Polydisc::around_origin(2, 2.0);
    for (name, rho, q) in [
        ("im_z1z2", corpus::im_z1z2(), Point::exact_ints(&[(1, 0), (1, 0)])),
        ("im_z2_z1sq", corpus::im_z2_plus_z1_squared(), Point::exact_ints(&[(0, 0), (1, 0)])),
        ("pencil", corpus::pencil_of_lines(), Point::exact_ints(&[(1, 0), (0, 1)])),
    ] {
        let tr = trace_leaf(&rho, &q, &bx, 0.05)?;
        println!("{name:<11} {} points, stops {:?}, max residual {:.2e}", tr.len(), tr.stops, tr.max_residual());
    }
    let c = |re, im| Complex64::new(re, im);
    let v = passes_through_origin(&corpus::pencil_of_lines(), &[c(1.0, 0.0), c(0.0, 0.0)], &[c(0.7, 0.3), c(0.0, 0.0)], &bx)?;
    println!("pencil: leaf of Q_(1,0) through (0.7+0.3i, 0) reaches the origin: {v:?}");
    Ok(())
}
