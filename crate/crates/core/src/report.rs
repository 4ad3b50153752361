//! Orchestration behind the command-line subcommands.
//!
//! Each `cmd_*` function returns an [`Output`]: a JSON report tagged with
//! [`REPORT_SCHEMA`], plus optional CSV and SVG attachments. Reports contain no
//! timings or paths, so identical inputs and settings give identical bytes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{tolerance_table, Settings, Tolerance, MAX_SYMBOLIC_N};
use crate::corpus;
use crate::currents::{ball_mass, lelong_estimate, pair, poincare_lelong_check, LaminarCurrent, TestForm};
use crate::error::{Error, Result};
use crate::expr::{parse_expression, parse_real};
use crate::foliation::{build_transverse, match_leaf_to_transverse, trace_leaf, Polydisc, TransverseOptions};
use crate::hermitian::{check_hermitian, is_levi_flat, levi_form_on_tangent, sample_points_on_gamma, RealBipoly};
use crate::point::Point;
use crate::poly::{serial, GaussianRational};
use crate::segre::{degenerate_locus, in_own_segre, on_gamma, segre_of, Classifier, PointClass, SegrePoly};
use crate::slice::{discriminant_set, find_generic_direction, slice_polynomial, slice_roots, summarize};

pub const REPORT_SCHEMA: &str = "leviflat.report/1";
pub const CSV_SCHEMA: &str = "leviflat.csv/1";
pub const SVG_SCHEMA: &str = "leviflat.svg/1";

/// Where the defining function comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Expression(String),
    /// A serialized coefficient file, or a text file holding an expression.
    File(PathBuf),
    Corpus(String),
}

/// A loaded defining function.
#[derive(Clone, Debug, PartialEq)]
pub struct Input {
    pub rho: RealBipoly,
    pub source: String,
}

impl Input {
    pub fn load(source: &Source, n: Option<usize>) -> Result<Input> {
        let (rho, label) = match source {
            Source::Expression(text) => (parse_real(text, n)?, format!("expr:{text}")),
            Source::Corpus(name) => {
                let rho = corpus::by_name(name).ok_or_else(|| {
                    let names: Vec<&str> = corpus::all().iter().map(|(k, _)| *k).collect();
                    Error::Input(format!("unknown corpus entry {name:?}; known: {}", names.join(", ")))
                })?;
                (rho, format!("corpus:{name}"))
            }
            Source::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                if text.trim_start().starts_with('{') {
                    let p = serial::from_json(&text)?;
                    (RealBipoly::from_complexified(p)?, format!("file:{name}"))
                } else {
                    (parse_real(text.trim(), n)?, format!("file:{name}"))
                }
            }
        };
        if rho.n() > MAX_SYMBOLIC_N {
            return Err(Error::TooLarge(rho.n()));
        }
        Ok(Input { rho, source: label })
    }

    pub fn from_rho(rho: RealBipoly, source: impl Into<String>) -> Input {
        Input { rho, source: source.into() }
    }
}

/// Parses `"a, b, ..."` where each coordinate is a constant expression, e.g. `"1/2, 0.3*i - 1"`.
pub fn parse_point(text: &str, n: usize) -> Result<Point> {
    let coords: Vec<GaussianRational> = text
        .split(',')
        .map(|part| {
            let e = parse_expression(part)?;
            if e.arity() > 0 {
                return Err(Error::Input(format!("point coordinate {part:?} is not a constant")));
            }
            let p = e.lower(1)?;
            p.constant_value().filter(|_| p.is_constant()).ok_or_else(|| Error::Input(format!("coordinate {part:?} is not a constant")))
        })
        .collect::<Result<_>>()?;
    if coords.len() != n {
        return Err(Error::Input(format!("point {text:?} has {} coordinates, expected {n}", coords.len())));
    }
    Ok(Point::Exact(coords))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputSummary {
    pub source: String,
    pub n: usize,
    /// `ρ^ℂ(z, w̄)` with `w̄_k` printed as `conj(zk)`.
    pub complexification: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputSummary,
    pub settings: Settings,
    pub tolerances: Vec<Tolerance>,
    /// Present when a hypothesis was bypassed with `force`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub watermark: Option<String>,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub report: Report,
    pub csv: Option<String>,
    pub svg: Option<String>,
}

fn output(command: &'static str, input: &Input, settings: &Settings, result: Value) -> Output {
    let report = Report {
        schema: REPORT_SCHEMA,
        command,
        input: InputSummary { source: input.source.clone(), n: input.rho.n(), complexification: input.rho.complexification().to_string() },
        settings: settings.clone(),
        tolerances: tolerance_table(),
        watermark: None,
        result,
    };
    Output { report, csv: None, svg: None }
}

fn pairs(z: &[Complex64]) -> Vec<[f64; 2]> {
    z.iter().map(|c| [c.re, c.im]).collect()
}

/// Classifier that either verified Levi-flatness or was forced.
fn classifier(rho: &RealBipoly, force: bool) -> Result<(Option<Classifier>, Option<String>)> {
    match Classifier::new(rho) {
        Ok(c) => Ok((Some(c), None)),
        Err(Error::NotLeviFlat) if force => {
            Ok((Some(Classifier::assume_levi_flat(rho)), Some("forced: hypersurface is not Levi-flat; classifications are not meaningful".into())))
        }
        Err(Error::NotLeviFlat) => Ok((None, None)),
        Err(e) => Err(e),
    }
}

/// Hermitian check, Levi-flat verdict with certificates, degenerate locus and
/// classifications. Non-Levi-flat inputs get `"classification": "refused"` unless forced.
pub fn cmd_analyze(input: &Input, settings: &Settings, points: &[Point], force: bool) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    check_points(rho, points)?;
    let herm = check_hermitian(&rho.as_bipoly());
    let verdict = is_levi_flat(rho)?;
    let certificates: Vec<Value> = verdict
        .certificates
        .iter()
        .map(|c| {
            json!({
                "pair": [[c.pair.0 .0 + 1, c.pair.0 .1 + 1], [c.pair.1 .0 + 1, c.pair.1 .1 + 1]],
                "lambda": c.lambda.to_string(),
                "quotient": c.quotient.as_ref().map(|q| q.to_string()),
            })
        })
        .collect();
    let locus = degenerate_locus(rho);
    let generators: Vec<Value> = locus.generators.iter().map(|(i, g)| json!({"z_exponents": i, "g": g.to_string()})).collect();
    let (cls, watermark) = classifier(rho, force)?;
    let classification = match &cls {
        Some(c) => Value::Array(points.iter().map(|q| serde_json::to_value(c.classify(q)).expect("serializes")).collect()),
        None => Value::String("refused".into()),
    };
    let result = json!({
        "hermitian": herm.hermitian,
        "levi_flat": verdict.levi_flat,
        "reduced": verdict.reduced.as_ref().map(|r| r.complexification().to_string()),
        "certificates": certificates,
        "degenerate_locus": {
            "generators": generators,
            "common_factor": locus.common_factor().to_string(),
            "finite": (rho.n() == 2).then(|| locus.is_finite()),
        },
        "classification": classification,
    });
    let mut out = output("analyze", input, settings, result);
    out.report.watermark = watermark;
    Ok(out)
}

fn check_points(rho: &RealBipoly, points: &[Point]) -> Result<()> {
    match points.iter().find(|p| p.dim() != rho.n()) {
        Some(p) => Err(Error::Input(format!("point has dimension {} but n = {}", p.dim(), rho.n()))),
        None => Ok(()),
    }
}

/// The Segre variety of `w` and its basic properties.
pub fn cmd_segre(input: &Input, settings: &Settings, w: &Point) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    check_points(rho, std::slice::from_ref(w))?;
    let s = segre_of(rho, w);
    let poly = match &s.poly {
        SegrePoly::Exact(p) => p.to_string(),
        SegrePoly::Float(p) => format!("{p:?}"),
    };
    let (cls, _) = classifier(rho, false)?;
    let result = json!({
        "point": w,
        "segre_polynomial": poly,
        "degenerate": s.degenerate,
        "on_gamma": on_gamma(rho, w),
        "in_own_segre": in_own_segre(rho, w),
        "classification": cls.map(|c| c.classify(w).class),
    });
    Ok(output("segre", input, settings, result))
}

const MAX_LATTICE: usize = 20_000;

/// Classifies random points of the hypersurface and all exact lattice points
/// of the box; the CSV lists the random points with their Levi-form values.
pub fn cmd_scan(input: &Input, settings: &Settings, force: bool) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    let n = rho.n();
    let (cls, watermark) = classifier(rho, force)?;
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let samples = sample_points_on_gamma(rho, settings.scan_samples, settings.box_radius, 0.0, &mut rng);
    let mut csv = format!("# {CSV_SCHEMA} scan\n");
    let header: Vec<String> = (1..=n).flat_map(|k| [format!("re_z{k}"), format!("im_z{k}")]).collect();
    writeln!(csv, "index,{},gamma_residual,levi_form,class", header.join(",")).expect("string write");
    let mut counts = std::collections::BTreeMap::new();
    let mut max_levi: f64 = 0.0;
    for (k, z) in samples.iter().enumerate() {
        let levi = levi_form_on_tangent(rho, z);
        max_levi = max_levi.max(levi);
        let class = cls.as_ref().map(|c| c.classify(&Point::float(z)).class);
        if let Some(c) = class {
            *counts.entry(format!("{c:?}")).or_insert(0usize) += 1;
        }
        let coords: Vec<String> = z.iter().flat_map(|c| [c.re.to_string(), c.im.to_string()]).collect();
        let class = class.map(|c| format!("{c:?}")).unwrap_or_else(|| "refused".into());
        writeln!(csv, "{k},{},{},{levi},{class}", coords.join(","), rho.eval_on_diagonal(z).norm()).expect("string write");
    }

    let den = settings.scan_denominator;
    let reach = (settings.box_radius * den as f64).floor() as i64;
    let side = (2 * reach + 1) as usize;
    let total = side.checked_pow(2 * n as u32).unwrap_or(usize::MAX);
    if total > MAX_LATTICE {
        return Err(Error::Input(format!("exact lattice has {total} points (limit {MAX_LATTICE}); lower the box radius or denominator")));
    }
    let values: Vec<GaussianRational> = (-reach..=reach)
        .flat_map(|a| (-reach..=reach).map(move |b| GaussianRational::from_fracs(a, den, b, den)))
        .collect();
    let mut singular = Vec::new();
    let mut on_count = 0usize;
    if let Some(c) = &cls {
        for idx in 0..values.len().pow(n as u32) {
            let mut r = idx;
            let q: Vec<GaussianRational> = (0..n)
                .map(|_| {
                    let v = values[r % values.len()].clone();
                    r /= values.len();
                    v
                })
                .collect();
            let q = Point::Exact(q);
            let cl = c.classify(&q);
            if cl.class != PointClass::NotOnGamma {
                on_count += 1;
            }
            if matches!(cl.class, PointClass::SingularDicritical | PointClass::SingularNondicritical) {
                singular.push(json!({"point": q, "class": cl.class}));
            }
        }
    }
    let result = json!({
        "samples": samples.len(),
        "class_counts": counts,
        "max_levi_form": max_levi,
        "lattice": {
            "denominator": den,
            "points": total,
            "on_gamma": on_count,
            "singular": singular,
        },
    });
    let mut out = output("scan", input, settings, result);
    out.report.watermark = watermark;
    out.csv = Some(csv);
    Ok(out)
}

/// Slice frame, slice coefficients, discriminant and algebroid data at `w0`,
/// with the slice roots at `w` when given.
pub fn cmd_slice(input: &Input, settings: &Settings, w0: &Point, roots_at: Option<&Point>) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    check_points(rho, std::slice::from_ref(w0))?;
    let frame = find_generic_direction(rho, w0, settings.trials, settings.seed)?;
    let sp = slice_polynomial(rho, &frame)?;
    let summary = summarize(&sp)?;
    let disc = discriminant_set(&sp)?;
    let reconstruction_exact = sp.reconstruct() == crate::poly::substitute_affine(rho.complexification(), crate::poly::Block::Z, &frame.map, &frame.center)?;
    let roots = match roots_at {
        Some(w) => {
            check_points(rho, std::slice::from_ref(w))?;
            Some(serde_json::to_value(slice_roots(&sp, &w.to_complex())?).expect("serializes"))
        }
        None => None,
    };
    let result = json!({
        "reference_point": w0,
        "summary": summary,
        "discriminant_is_zero": disc.is_zero(),
        "reconstruction_exact": reconstruction_exact,
        "roots": roots,
    });
    Ok(output("slice", input, settings, result))
}

fn require_levi_flat(rho: &RealBipoly, force: bool) -> Result<Option<String>> {
    match classifier(rho, force)? {
        (Some(_), w) => Ok(w),
        (None, _) => Err(Error::NotLeviFlat),
    }
}

/// Traces the leaf through `q` inside the box around the origin; the CSV holds
/// the trace with both residuals per point.
pub fn cmd_trace(input: &Input, settings: &Settings, q: &Point, force: bool) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    check_points(rho, std::slice::from_ref(q))?;
    let watermark = require_levi_flat(rho, force)?;
    let bx = Polydisc::around_origin(rho.n(), settings.box_radius);
    if !bx.contains(&q.to_complex()) {
        return Err(Error::Input(format!("basepoint lies outside the box of radius {}", settings.box_radius)));
    }
    let tr = trace_leaf(rho, q, &bx, settings.trace_step)?;
    let mut csv = format!("# {CSV_SCHEMA} trace\nindex,re_z1,im_z1,re_z2,im_z2,segre_residual,gamma_residual\n");
    for (k, z) in tr.points.iter().enumerate() {
        writeln!(csv, "{k},{},{},{},{},{},{}", z[0].re, z[0].im, z[1].re, z[1].im, tr.segre_residuals[k], tr.gamma_residuals[k]).expect("string write");
    }
    let panels = [
        Panel { title: "z1".into(), series: vec![Series::line(tr.points.iter().map(|z| (z[0].re, z[0].im)).collect(), 0)] },
        Panel { title: "z2".into(), series: vec![Series::line(tr.points.iter().map(|z| (z[1].re, z[1].im)).collect(), 0)] },
    ];
    let result = json!({
        "basepoint": q,
        "points": tr.len(),
        "base_index": tr.base_index,
        "rejected": tr.rejected,
        "stops": tr.stops,
        "max_segre_residual": tr.segre_residuals.iter().copied().fold(0.0, f64::max),
        "max_gamma_residual": tr.gamma_residuals.iter().copied().fold(0.0, f64::max),
    });
    let mut out = output("trace", input, settings, result);
    out.report.watermark = watermark;
    out.csv = Some(csv);
    out.svg = Some(svg(&panels));
    Ok(out)
}

/// Builds a transverse at `center` and matches the leaves through `leaves` to it.
pub fn cmd_transverse(input: &Input, settings: &Settings, center: &Point, leaves: &[Point]) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    check_points(rho, std::slice::from_ref(center))?;
    check_points(rho, leaves)?;
    let bx = Polydisc::new(center.to_complex(), vec![settings.box_radius; rho.n()])?;
    let opts = TransverseOptions { trials: settings.trials, seed: settings.seed, grid: settings.transverse_grid, ..Default::default() };
    let tv = build_transverse(rho, &bx, &opts)?;
    let mut matches = Vec::new();
    for q in leaves {
        let tr = trace_leaf(rho, q, &bx, settings.trace_step)?;
        let m = match_leaf_to_transverse(rho, &tr, &tv)?;
        matches.push(json!({"leaf": q, "parameters": m.parameters, "branches": m.branches, "max_residuals": m.max_residuals}));
    }
    let mut csv = format!("# {CSV_SCHEMA} transverse\nre_t,im_t,branch,residual\n");
    for s in &tv.samples {
        writeln!(csv, "{},{},{},{}", s.t.0, s.t.1, s.branch, s.residual).expect("string write");
    }
    let series = (0..tv.branches).map(|b| Series::points(tv.branch_samples(b).map(|s| s.t).collect(), b)).collect();
    let result = json!({
        "center": pairs(&tv.center()),
        "direction": pairs(&tv.direction()),
        "t_radius": tv.t_radius,
        "center_class": tv.center_class,
        "zero_order": tv.zero_order,
        "winding": tv.winding,
        "branches": tv.branches,
        "samples": tv.samples.len(),
        "max_sample_residual": tv.samples.iter().map(|s| s.residual).fold(0.0, f64::max),
        "regular_fraction": tv.regular_fraction,
        "branches_regular": tv.branches_regular,
        "directions_tried": tv.directions_tried,
        "matches": matches,
    });
    let mut out = output("transverse", input, settings, result);
    out.csv = Some(csv);
    out.svg = Some(svg(&[Panel { title: "t".into(), series }]));
    Ok(out)
}

/// Pairs the current `Σ μ_k [Q_{s_k}]` with the bump at `form_center`, estimates
/// its Lelong number there and runs the Poincaré–Lelong check for every atom.
pub fn cmd_current(input: &Input, settings: &Settings, atoms: &[(Point, f64)], form_center: &Point) -> Result<Output> {
    settings.validate()?;
    let rho = &input.rho;
    check_points(rho, std::slice::from_ref(form_center))?;
    check_points(rho, &atoms.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>())?;
    let list: Vec<(Vec<Complex64>, f64)> = atoms.iter().map(|(p, mu)| (p.to_complex(), *mu)).collect();
    let t = LaminarCurrent::new(rho, &list)?;
    let a = form_center.to_complex();
    let phi = TestForm::new(&a, settings.test_form_radius)?;
    let paired = pair(&t, &phi);
    let mass = ball_mass(&t, &a, settings.test_form_radius);
    let lelong = lelong_estimate(&t, &a, &settings.lelong_radii)?;
    let sampler = settings.sampler();
    let checks = list
        .iter()
        .map(|(s, _)| poincare_lelong_check(rho, s, &phi, sampler))
        .collect::<Result<Vec<_>>>()?;
    let result = json!({
        "atoms": t.atoms(),
        "test_form": phi,
        "pair": paired,
        "ball_mass": mass,
        "lelong": lelong,
        "poincare_lelong": checks,
        "sampler": sampler,
    });
    Ok(output("current", input, settings, result))
}

struct Series {
    pts: Vec<(f64, f64)>,
    line: bool,
    color: usize,
}

impl Series {
    fn line(pts: Vec<(f64, f64)>, color: usize) -> Self {
        Series { pts, line: true, color }
    }

    fn points(pts: Vec<(f64, f64)>, color: usize) -> Self {
        Series { pts, line: false, color }
    }
}

struct Panel {
    title: String,
    series: Vec<Series>,
}

const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Side-by-side square panels in the plane coordinates of each series.
fn svg(panels: &[Panel]) -> String {
    let size = 320.0;
    let pad = 24.0;
    let width = panels.len() as f64 * (size + pad) + pad;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{}" data-schema="{SVG_SCHEMA}">"#, size + 2.0 * pad).expect("string write");
    for (k, p) in panels.iter().enumerate() {
        let all: Vec<(f64, f64)> = p.series.iter().flat_map(|s| s.pts.iter().copied()).collect();
        let ext = all.iter().map(|(x, y)| x.abs().max(y.abs())).fold(1e-9, f64::max) * 1.05;
        let x0 = pad + k as f64 * (size + pad);
        let map = |(x, y): (f64, f64)| (x0 + (x / ext + 1.0) * size / 2.0, pad + (1.0 - y / ext) * size / 2.0);
        writeln!(s, r##"<rect x="{x0}" y="{pad}" width="{size}" height="{size}" fill="none" stroke="#888"/>"##).expect("string write");
        writeln!(s, r#"<text x="{}" y="{}" font-size="12">{} (half-width {:.3})</text>"#, x0 + 4.0, pad - 6.0, p.title, ext).expect("string write");
        for series in &p.series {
            let color = COLORS[series.color % COLORS.len()];
            if series.line {
                let pts: Vec<String> = series.pts.iter().map(|&q| map(q)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                writeln!(s, r#"<polyline fill="none" stroke="{color}" stroke-width="1" points="{}"/>"#, pts.join(" ")).expect("string write");
            } else {
                for &q in &series.pts {
                    let (x, y) = map(q);
                    writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="1" fill="{color}"/>"#).expect("string write");
                }
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| Error::Io(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, contents).map_err(|e| Error::Io(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Settings {
        Settings { mc_samples: 20_000, transverse_grid: 128, scan_samples: 20, ..Settings::default() }
    }

    #[test]
    fn points_parse_exactly() {
        let p = parse_point("1/2, 0.3*i - 1", 2).unwrap();
        assert_eq!(p, Point::Exact(vec![GaussianRational::from_fracs(1, 2, 0, 1), GaussianRational::from_fracs(-1, 1, 3, 10)]));
        assert!(parse_point("z1, 0", 2).is_err());
        assert!(parse_point("0", 2).is_err());
    }

    #[test]
    fn analyze_refuses_sphere() {
        let input = Input::load(&Source::Corpus("sphere".into()), None).unwrap();
        let out = cmd_analyze(&input, &small(), &[Point::origin(2)], false).unwrap();
        assert_eq!(out.report.result["levi_flat"], json!(false));
        assert_eq!(out.report.result["classification"], json!("refused"));
        let forced = cmd_analyze(&input, &small(), &[Point::origin(2)], true).unwrap();
        assert!(forced.report.watermark.is_some());
    }

    #[test]
    fn analyze_pencil() {
        let input = Input::load(&Source::Expression("Re(z1*conj(z2))".into()), None).unwrap();
        let out = cmd_analyze(&input, &small(), &[Point::origin(2)], false).unwrap();
        assert_eq!(out.report.result["classification"][0]["class"], json!("SingularDicritical"));
        assert_eq!(out.report.schema, REPORT_SCHEMA);
    }

    #[test]
    fn size_limit() {
        let r = Input::load(&Source::Expression("Re(z4)".into()), None);
        assert_eq!(r, Err(Error::TooLarge(4)));
    }

    #[test]
    fn scan_finds_the_singular_origin() {
        let input = Input::load(&Source::Corpus("im_z1z2".into()), None).unwrap();
        let out = cmd_scan(&input, &small(), false).unwrap();
        let singular = out.report.result["lattice"]["singular"].as_array().unwrap().clone();
        assert_eq!(singular.len(), 1);
        assert_eq!(singular[0]["class"], json!("SingularNondicritical"));
        assert!(out.report.result["max_levi_form"].as_f64().unwrap() < 1e-8);
    }
}
