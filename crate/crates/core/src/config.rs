//! Run settings and the table of built-in tolerances.
//!
//! Everything a report depends on is recorded in it: the tunable settings of
//! [`Settings`] and the fixed tolerances of [`tolerance_table`].

use serde::Serialize;

use crate::currents::Sampler;
use crate::error::{Error, Result};

/// Largest `n` accepted by the command-line front end.
pub const MAX_SYMBOLIC_N: usize = 3;

/// Tunable settings with their defaults.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Settings {
    /// Radius of the polydisc around the working center.
    pub box_radius: f64,
    /// Arclength step of leaf tracing.
    pub trace_step: f64,
    /// Contour grid nodes per side for transverses.
    pub transverse_grid: usize,
    /// Direction trials for slice frames and transverses.
    pub trials: usize,
    pub seed: u64,
    /// Monte Carlo budget of the Poincaré–Lelong check.
    pub mc_samples: usize,
    /// Use the grid sampler with this many nodes per real axis instead of Monte Carlo.
    pub grid_sampler: Option<usize>,
    /// Support radius of the bump test form.
    pub test_form_radius: f64,
    pub lelong_radii: Vec<f64>,
    /// Random points of the hypersurface examined by `scan`.
    pub scan_samples: usize,
    /// Lattice step of the exact `scan` grid is `1/scan_denominator`.
    pub scan_denominator: i64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            box_radius: 2.0,
            trace_step: 0.05,
            transverse_grid: 512,
            trials: 64,
            seed: 0,
            mc_samples: 2_000_000,
            grid_sampler: None,
            test_form_radius: 1.0,
            lelong_radii: vec![0.5, 0.25, 0.125],
            scan_samples: 200,
            scan_denominator: 2,
        }
    }
}

impl Settings {
    pub fn validate(&self) -> Result<()> {
        let positive = [("box radius", self.box_radius), ("trace step", self.trace_step), ("test form radius", self.test_form_radius)];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Input(format!("{name} must be positive, got {v}")));
            }
        }
        if self.trials == 0 || self.transverse_grid < 8 || self.mc_samples < 2 || self.scan_denominator < 1 {
            return Err(Error::Input("trials, grid, sample budget and scan denominator must be positive (grid >= 8)".into()));
        }
        if self.lelong_radii.is_empty() || self.lelong_radii.iter().any(|&r| !(r > 0.0)) || self.lelong_radii.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Input("Lelong radii must be positive and strictly decreasing".into()));
        }
        Ok(())
    }

    pub fn sampler(&self) -> Sampler {
        match self.grid_sampler {
            Some(per_axis) => Sampler::Grid { per_axis },
            None => Sampler::MonteCarlo { samples: self.mc_samples, seed: self.seed },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tolerance {
    pub name: &'static str,
    pub value: f64,
    pub meaning: &'static str,
}

/// Fixed numerical tolerances used by the library.
pub fn tolerance_table() -> Vec<Tolerance> {
    use crate::foliation::{trace, transverse};
    let t = |name, value, meaning| Tolerance { name, value, meaning };
    vec![
        t("float_zero", crate::segre::FLOAT_TOL, "float point on the hypersurface, singular, or Segre degenerate"),
        t("corrector", trace::CORRECTOR_TOL, "Newton corrector target |rho(z, conj q)|"),
        t("accept", trace::ACCEPT_TOL, "trace point kept when |rho(z, conj z)| is below this"),
        t("near_singular", trace::NEAR_SINGULAR, "trace stops when the curve gradient drops below this"),
        t("max_halvings", trace::MAX_HALVINGS as f64, "step halvings before the corrector is declared divergent"),
        t("max_steps", trace::MAX_STEPS as f64, "continuation steps per direction"),
        t("match", transverse::MATCH_TOL, "leaf contained in Q_s when residuals stay below this"),
        t("transverse_on_gamma", transverse::ON_GAMMA_TOL, "matched parameter lies on the hypersurface"),
        t("dedup", transverse::DEDUP_TOL, "parameters and roots closer than this are merged"),
        t("quadrature", crate::currents::QUAD_TOL, "relative change that stops quadrature refinement"),
        t("root_residual", 1e-9, "largest relative backward error of a slice root"),
    ]
}
