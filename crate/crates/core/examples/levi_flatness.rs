//! Levi-flatness by exact divisibility, with a numeric Levi-form cross-check.

use leviflat::corpus;
use leviflat::hermitian::{is_levi_flat, levi_form_on_tangent, sample_points_on_gamma};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> leviflat::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, rho) in corpus::all() {
        let verdict = is_levi_flat(&rho)?;
        let worst = sample_points_on_gamma(&rho, 50, 1.0, 1e-3, &mut rng)
            .iter()
            .map(|q| levi_form_on_tangent(&rho, q))
            .fold(0.0, f64::max);
        println!("{name:<11} levi_flat = {:<5} max |L(v,v)| on 50 samples = {worst:.3e}", verdict.levi_flat);
        for c in &verdict.certificates {
            match &c.quotient {
                Some(q) => println!("    Lambda = {}  =  ({q}) * rho", c.lambda),
                None => println!("    Lambda = {}  is not a multiple of rho", c.lambda),
            }
        }
    }
    Ok(())
}
