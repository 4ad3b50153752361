//! Laminar currents: pairings, ball masses, Lelong numbers and the Poincaré–Lelong check.

use leviflat::corpus;
use leviflat::currents::{ball_mass, lelong_estimate, pair, poincare_lelong_check, LaminarCurrent, Sampler, TestForm};
use num_complex::Complex64;

fn main() -> leviflat::Result<()> {
    let c = |re, im| Complex64::new(re, im);
    let origin = [c(0.0, 0.0), c(0.0, 0.0)];
    let cartan = corpus::cartan_hyperplane();
    let phi = TestForm::new(&origin, 1.0)?;

    for b in [0.0, 0.5] {
        let t = LaminarCurrent::new(&cartan, &[(vec![c(0.0, 0.0), c(0.0, b)], 1.0)])?;
        let oracle = (1.0f64 - b * b).powi(4);
        println!("[z2 = {b}i] paired with the bump: {:.6} (closed form {oracle:.6})", pair(&t, &phi).value);
    }

    let double = LaminarCurrent::new(&cartan, &[(origin.to_vec(), 2.0)])?;
    let r = 0.5;
    println!("ball mass of 2[z2 = 0] at r = {r}: {:.6} (2 pi r^2 = {:.6})", ball_mass(&double, &origin, r).value, 2.0 * std::f64::consts::PI * r * r);
    let l = lelong_estimate(&double, &origin, &[0.5, 0.25, 0.125])?;
    println!("Lelong number of 2[z2 = 0] at 0: {:.4}", l.limit);

    let rho = corpus::im_z1z2();
    let s = [c(1.0, 0.0), c(1.0, 0.0)];
    let hyperbola = LaminarCurrent::new(&rho, &[(s.to_vec(), 1.0)])?;
    println!("[z1 z2 = 1] Lelong sequence at 0: {:?}", lelong_estimate(&hyperbola, &origin, &[0.5, 0.25])?.sequence);

    let phi_s = TestForm::new(&s, 1.0)?;
    let pl = poincare_lelong_check(&rho, &s, &phi_s, Sampler::MonteCarlo { samples: 400_000, seed: 1 })?;
    println!("Poincare-Lelong at s = (1,1): lhs {:.4} +- {:.4}, rhs {:.4}, gap {:.2}%", pl.lhs, pl.std_error, pl.rhs, 100.0 * pl.gap);
    Ok(())
}
