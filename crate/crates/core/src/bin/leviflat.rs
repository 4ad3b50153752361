use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use leviflat::config::Settings;
use leviflat::report::{self, parse_point, Input, Output, Source};
use leviflat::{Error, Point, Result};

/// Analysis of singular real-algebraic Levi-flat hypersurfaces.
///
/// Exit codes: 0 success, 2 input or parse error, 3 hypothesis violation,
/// 4 numerically inconclusive.
#[derive(Parser)]
#[command(name = "leviflat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Levi-flatness certificate, degenerate locus and point classification.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Point to classify, e.g. "0, 1/2*i" (repeatable; default: origin).
        #[arg(long = "point")]
        points: Vec<String>,
    },
    /// Segre variety of a point.
    Segre {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: Option<String>,
    },
    /// Classify random points of the hypersurface and an exact lattice in the box.
    Scan {
        #[command(flatten)]
        common: Common,
    },
    /// Slice polynomial, discriminant and algebroid data along a generic direction.
    Slice {
        #[command(flatten)]
        common: Common,
        /// Reference point of the direction search (default: origin).
        #[arg(long)]
        point: Option<String>,
        /// Report the slice roots at this point.
        #[arg(long)]
        roots_at: Option<String>,
    },
    /// Trace the Levi leaf through a regular point.
    Trace {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: String,
    },
    /// Build a transverse and match leaves to it.
    Transverse {
        #[command(flatten)]
        common: Common,
        /// Center of the transverse (default: origin).
        #[arg(long)]
        center: Option<String>,
        /// Basepoint of a leaf to trace and match (repeatable).
        #[arg(long = "leaf")]
        leaves: Vec<String>,
    },
    /// Pair a laminar current with a test form and check Lelong numbers.
    Current {
        #[command(flatten)]
        common: Common,
        /// Atom "POINT@WEIGHT", e.g. "0, 0.3*i@2" (weight defaults to 1; repeatable).
        #[arg(long = "atom")]
        atoms: Vec<String>,
        /// Center of the test form (default: origin).
        #[arg(long)]
        form_center: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Defining function, e.g. "Im(z1*z2)".
    #[arg(long)]
    expr: Option<String>,
    /// Coefficient file (JSON) or a text file holding an expression.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in example: pencil, im_z1z2, cartan, im_z2_sq, sphere, im_z2_z1sq.
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: SourceArgs,
    /// Number of variables (default: highest index used).
    #[arg(long)]
    n: Option<usize>,
    /// Report path (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Run classifications on non-Levi-flat input; the report is watermarked.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    box_radius: Option<f64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Leaf-tracing step.
    #[arg(long)]
    step: Option<f64>,
    /// Contour grid nodes per side for transverses.
    #[arg(long)]
    grid: Option<usize>,
    /// Monte Carlo budget of the Poincaré–Lelong check.
    #[arg(long)]
    samples: Option<usize>,
    /// Use a grid sampler with this many nodes per real axis.
    #[arg(long)]
    grid_sampler: Option<usize>,
    #[arg(long)]
    form_radius: Option<f64>,
    /// Comma-separated decreasing radii for the Lelong estimate.
    #[arg(long, value_delimiter = ',')]
    radii: Option<Vec<f64>>,
    #[arg(long)]
    scan_samples: Option<usize>,
    #[arg(long)]
    scan_denominator: Option<i64>,
}

impl Common {
    fn source(&self) -> Source {
        match (&self.source.expr, &self.source.input, &self.source.corpus) {
            (Some(e), _, _) => Source::Expression(e.clone()),
            (_, Some(p), _) => Source::File(p.clone()),
            (_, _, Some(c)) => Source::Corpus(c.clone()),
            _ => unreachable!("clap enforces one source"),
        }
    }

    fn settings(&self) -> Settings {
        let d = Settings::default();
        Settings {
            box_radius: self.box_radius.unwrap_or(d.box_radius),
            trace_step: self.step.unwrap_or(d.trace_step),
            transverse_grid: self.grid.unwrap_or(d.transverse_grid),
            trials: self.trials.unwrap_or(d.trials),
            seed: self.seed.unwrap_or(d.seed),
            mc_samples: self.samples.unwrap_or(d.mc_samples),
            grid_sampler: self.grid_sampler.or(d.grid_sampler),
            test_form_radius: self.form_radius.unwrap_or(d.test_form_radius),
            lelong_radii: self.radii.clone().unwrap_or(d.lelong_radii),
            scan_samples: self.scan_samples.unwrap_or(d.scan_samples),
            scan_denominator: self.scan_denominator.unwrap_or(d.scan_denominator),
        }
    }
}

fn point_or_origin(text: &Option<String>, n: usize) -> Result<Point> {
    text.as_deref().map(|t| parse_point(t, n)).unwrap_or_else(|| Ok(Point::origin(n)))
}

fn parse_atom(text: &str, n: usize) -> Result<(Point, f64)> {
    let (p, w) = match text.rsplit_once('@') {
        Some((p, w)) => (p, w.trim().parse::<f64>().map_err(|_| Error::Input(format!("bad atom weight {w:?}")))?),
        None => (text, 1.0),
    };
    Ok((parse_point(p, n)?, w))
}

fn run(cmd: Command) -> Result<()> {
    let (common, out) = match &cmd {
        Command::Analyze { common, .. }
        | Command::Segre { common, .. }
        | Command::Scan { common }
        | Command::Slice { common, .. }
        | Command::Trace { common, .. }
        | Command::Transverse { common, .. }
        | Command::Current { common, .. } => {
            let input = Input::load(&common.source(), common.n)?;
            (common, dispatch(&cmd, &input, common)?)
        }
    };
    let json = out.report.to_json();
    match &common.out {
        Some(path) => report::write_atomic(path, &json)?,
        None => print!("{json}"),
    }
    if let (Some(path), Some(csv)) = (&common.csv, &out.csv) {
        report::write_atomic(path, csv)?;
    }
    if let (Some(path), Some(svg)) = (&common.svg, &out.svg) {
        report::write_atomic(path, svg)?;
    }
    Ok(())
}

fn dispatch(cmd: &Command, input: &Input, common: &Common) -> Result<Output> {
    let n = input.rho.n();
    let s = common.settings();
    match cmd {
        Command::Analyze { points, .. } => {
            let pts = if points.is_empty() { vec![Point::origin(n)] } else { points.iter().map(|p| parse_point(p, n)).collect::<Result<_>>()? };
            report::cmd_analyze(input, &s, &pts, common.force)
        }
        Command::Segre { point, .. } => report::cmd_segre(input, &s, &point_or_origin(point, n)?),
        Command::Scan { .. } => report::cmd_scan(input, &s, common.force),
        Command::Slice { point, roots_at, .. } => {
            let at = roots_at.as_deref().map(|t| parse_point(t, n)).transpose()?;
            report::cmd_slice(input, &s, &point_or_origin(point, n)?, at.as_ref())
        }
        Command::Trace { point, .. } => report::cmd_trace(input, &s, &parse_point(point, n)?, common.force),
        Command::Transverse { center, leaves, .. } => {
            let leaves = leaves.iter().map(|p| parse_point(p, n)).collect::<Result<Vec<_>>>()?;
            report::cmd_transverse(input, &s, &point_or_origin(center, n)?, &leaves)
        }
        Command::Current { atoms, form_center, .. } => {
            let atoms = atoms.iter().map(|a| parse_atom(a, n)).collect::<Result<Vec<_>>>()?;
            report::cmd_current(input, &s, &atoms, &point_or_origin(form_center, n)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
