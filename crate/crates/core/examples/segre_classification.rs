//! Segre varieties and the dicritical/nondicritical classification at the origin.

use leviflat::segre::{classify_point, degenerate_locus, segre_of, SegrePoly};
use leviflat::{corpus, Point};

fn main() {
    let origin = Point::origin(2);
    for (name, rho) in corpus::all() {
        let s = segre_of(&rho, &origin);
        let q0 = match &s.poly {
            SegrePoly::Exact(p) => p.to_string(),
            SegrePoly::Float(_) => unreachable!("exact basepoint"),
        };
        let verdict = match classify_point(&rho, &origin) {
            Ok(c) => format!("{:?}", c.class),
            Err(e) => format!("refused ({e})"),
        };
        let locus = degenerate_locus(&rho);
        println!("{name:<11} Q_0 = {q0:<28} {verdict:<24} degenerate locus finite: {}", locus.is_finite());
    }
}
