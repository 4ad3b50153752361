//! Transverses at the origin and matching traced leaves to transverse parameters.

use leviflat::foliation::{build_transverse, match_leaf_to_transverse, trace_leaf, Polydisc, TransverseOptions};
use leviflat::{corpus, Point};
use num_complex::Complex64;

fn main() -> leviflat::Result<()> {
    let bx = Polydisc::around_origin(2, 1.0);
    let opts = TransverseOptions { grid: 256, ..Default::default() };
    for (name, rho, leaf) in [
        ("im_z2_z1sq", corpus::im_z2_plus_z1_squared(), [0.1, 0.3]),
        ("im_z1z2", corpus::im_z1z2(), [0.5, 0.5]),
    ] {
        let tv = build_transverse(&rho, &bx, &opts)?;
        println!("{name}: direction {:?}, {} branch(es), {} samples", tv.direction, tv.branches, tv.samples.len());
        let q = Point::float(&[Complex64::new(leaf[0], 0.0), Complex64::new(leaf[1], 0.0)]);
        let tr = trace_leaf(&rho, &q, &bx, 0.05)?;
        let m = match_leaf_to_transverse(&rho, &tr, &tv)?;
        println!("  leaf through {leaf:?} meets the transverse at {:?}", m.parameters);
    }
    match build_transverse(&corpus::pencil_of_lines(), &bx, &opts) {
        Err(e) => println!("pencil: {e}"),
        Ok(_) => unreachable!("dicritical centres are refused"),
    }
    Ok(())
}
