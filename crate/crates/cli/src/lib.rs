//! The `horopoly` command line.
//!
//! Every verb prints a table or summary to stdout and writes JSON to
//! `--out` when given. Verbs whose result is itself a JSON document
//! (`hull`, `dual`, `limit-ray`) print it to stdout when `--out` is absent.
//! Relative `--out` paths are resolved against `HOROPOLY_OUT_DIR` when set.
//!
//! Exit codes: 0 success, 1 failed numeric test, 2 invalid input,
//! 3 violated precondition, 4 inconclusive numeric test.

pub mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use horopoly::flatspace::{
    flat_limit_consistency, invariance_suite, ConsistencyReport, FlatNorm, FlatRay, InvarianceConfig, InvarianceReport,
    Outcome,
};
use horopoly::horoboundary::{enumerate_strata, limit_of_ray, walsh_criterion};
use horopoly::rational::{frac, int, parse_scalar};
use horopoly::rootsys::RootSystem;
use horopoly::satake::{classify, dual_satake_ball, same_compactification, satake_ball, weight_hull, WeightSpec};
use horopoly::{Error, PolyhedralNorm, Polytope, Scalar, Vector};
use serde::{Deserialize, Serialize};

pub use render::{render, Format, Overlay};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("test failed: {0}")]
    Failed(String),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) | CliError::Write { .. } => 1,
            CliError::Invalid(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Inconclusive(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::OriginNotInterior
            | Error::NotFullDimensional { .. }
            | Error::NotDominant
            | Error::NotWeylInvariant
            | Error::Unbounded
            | Error::Infeasible
            | Error::IllConditioned(_)
            | Error::BoundedSequence
            | Error::NotProper
            | Error::MismatchedNorms
            | Error::MismatchedRootSystems
            | Error::DistinctLimits
            | Error::WeylGroupTooLarge(_)
            | Error::DegenerateSample(_)
            | Error::ZeroDirection => CliError::Precondition(msg),
            _ => CliError::Invalid(msg),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "horopoly", version, about = "Polyhedral norms, their horofunction boundaries and weight polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convex hull of a list of points.
    Hull(IoArgs),
    /// Polar dual `{y : <y|x> >= -1}` of a polytope.
    Dual(IoArgs),
    /// Weight polytope `D` and Satake ball `B = -D°`.
    Satake(SatakeArgs),
    /// Combinatorial report of a weight polytope.
    Classify(ClassifyArgs),
    /// Strata of the horofunction boundary of a polyhedral norm.
    Strata(IoArgs),
    /// Limit horofunction of the ray `q + t u`.
    LimitRay(LimitRayArgs),
    /// SVG picture of a polygon or OFF file of a 3-polytope.
    Render(RenderArgs),
    /// Numeric checks on `SL(n,R)/SO(n)` with a polyhedral Finsler metric.
    FlatTest(FlatTestArgs),
    /// Whether two weight specs give the same compactification.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Input JSON file, `-` for stdin.
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RootArgs {
    /// Root system type `A`-`D`, or a full label such as `A3`.
    #[arg(long = "type")]
    pub kind: String,
    #[arg(long)]
    pub rank: Option<usize>,
}

impl RootArgs {
    fn build(&self) -> Result<RootSystem> {
        let kind = self.kind.trim();
        let label = match (kind.len(), self.rank) {
            (1, Some(rank)) => format!("{kind}{rank}"),
            (1, None) => return Err(CliError::Invalid(format!("--type {kind} needs --rank"))),
            (_, None) => kind.to_string(),
            (_, Some(rank)) => {
                let rs: RootSystem = kind.parse()?;
                if rs.rank() != rank {
                    return Err(CliError::Invalid(format!("--type {kind} conflicts with --rank {rank}")));
                }
                return Ok(rs);
            }
        };
        Ok(label.parse()?)
    }
}

#[derive(Debug, Args)]
pub struct SatakeArgs {
    #[command(flatten)]
    pub root: RootArgs,
    /// `;`-separated highest weights: presets or comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    #[arg(long, default_value = "1")]
    pub scale: String,
    /// Use `B = D`, the ball of the dual compactification.
    #[arg(long)]
    pub dual: bool,
    /// Where to write the weight polytope `D`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the ball `B`.
    #[arg(long)]
    pub ball: Option<PathBuf>,
    /// Where to write the report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub root: RootArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    #[arg(long, default_value = "1")]
    pub scale: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LimitRayArgs {
    #[arg(long)]
    pub ball: PathBuf,
    /// Start of the ray, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
    /// Direction of the ray, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    /// Defaults to svg for polygons and off for 3-polytopes.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Draw the walls of a root system given as a label such as `A2`.
    #[arg(long)]
    pub walls: Option<String>,
    #[arg(long)]
    pub points: bool,
    #[arg(long)]
    pub labels: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Svg,
    Off,
}

#[derive(Debug, Args)]
pub struct FlatTestArgs {
    #[arg(long)]
    pub n: usize,
    /// `W`-invariant ball in the trace-zero hyperplane of `R^n`.
    #[arg(long)]
    pub ball: PathBuf,
    #[arg(long, default_value_t = 1e4)]
    pub tmax: f64,
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub root: RootArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub first: String,
    #[arg(long, allow_hyphen_values = true)]
    pub second: String,
    #[arg(long, default_value = "1")]
    pub first_scale: String,
    #[arg(long, default_value = "1")]
    pub second_scale: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a verb produced: text for stdout and JSON for `--out`.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub files: Vec<(PathBuf, String)>,
}

impl Output {
    fn json_or_stdout(out: &Option<PathBuf>, json: String, summary: String) -> Self {
        match out {
            Some(path) => Output { stdout: summary, files: vec![(path.clone(), json)] },
            None => Output { stdout: json + "\n", files: Vec::new() },
        }
    }

    fn with_file(mut self, path: &Option<PathBuf>, contents: String) -> Self {
        if let Some(p) = path {
            self.files.push((p.clone(), contents));
        }
        self
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn read_polytope(path: &Path) -> Result<Polytope> {
    Ok(Polytope::from_json(&read_input(path)?)?)
}

fn read_norm(path: &Path) -> Result<PolyhedralNorm> {
    Ok(PolyhedralNorm::new(read_polytope(path)?)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointList {
    Bare(Vec<Vector>),
    Points { points: Vec<Vector> },
    Vertices { vertices: Vec<Vector> },
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn scalar(s: &str) -> Result<Scalar> {
    Ok(parse_scalar(s)?)
}

fn polytope_summary(p: &Polytope) -> String {
    let mut s = String::new();
    writeln!(s, "dimension {} in R^{}", p.affine_dim(), p.ambient_dim()).unwrap();
    writeln!(s, "f-vector  {:?}", p.f_vector()).unwrap();
    for v in p.vertices() {
        writeln!(s, "  {v}").unwrap();
    }
    s
}

pub fn run(command: &Command) -> Result<Output> {
    match command {
        Command::Hull(a) => {
            let points = match serde_json::from_str::<PointList>(&read_input(&a.input)?)
                .map_err(|e| CliError::Invalid(format!("expected a list of points: {e}")))?
            {
                PointList::Bare(p) | PointList::Points { points: p } | PointList::Vertices { vertices: p } => p,
            };
            let hull = Polytope::convex_hull(&points)?;
            Ok(Output::json_or_stdout(&a.out, hull.to_json(), polytope_summary(&hull)))
        }
        Command::Dual(a) => {
            let polar = read_polytope(&a.input)?.polar_dual()?;
            Ok(Output::json_or_stdout(&a.out, polar.to_json(), polytope_summary(&polar)))
        }
        Command::Satake(a) => {
            let spec = WeightSpec::parse(a.root.build()?, &a.weights, scalar(&a.scale)?)?;
            let d = weight_hull(&spec)?;
            let ball = if a.dual { dual_satake_ball(&d)? } else { satake_ball(&d)? };
            let report = classify(&spec)?;
            let mut stdout = format!("{report}\n");
            writeln!(stdout, "ball ({})", if a.dual { "D" } else { "-D°" }).unwrap();
            stdout.push_str(&polytope_summary(&ball));
            Ok(Output { stdout, files: Vec::new() }
                .with_file(&a.out, d.to_json())
                .with_file(&a.ball, ball.to_json())
                .with_file(&a.report, to_json(&report)))
        }
        Command::Classify(a) => {
            let spec = WeightSpec::parse(a.root.build()?, &a.weights, scalar(&a.scale)?)?;
            let report = classify(&spec)?;
            Ok(Output { stdout: format!("{report}\n"), files: Vec::new() }.with_file(&a.out, to_json(&report)))
        }
        Command::Strata(a) => strata(a),
        Command::LimitRay(a) => {
            let norm = read_norm(&a.ball)?;
            let h = limit_of_ray(&norm, &Vector::parse(&a.q)?, &Vector::parse(&a.u)?)?;
            let raw = h.to_json();
            let summary = format!("face {:?}\nbasepoint {}\n", raw.face, raw.p);
            Ok(Output::json_or_stdout(&a.out, to_json(&raw), summary))
        }
        Command::Render(a) => {
            let p = read_polytope(&a.input)?;
            let format = match a.format {
                Some(FormatArg::Svg) => Format::Svg,
                Some(FormatArg::Off) => Format::Off,
                None => render::format_for(&p)?,
            };
            let walls = a.walls.as_deref().map(str::parse::<RootSystem>).transpose()?;
            let text = render(&p, format, &Overlay { walls, points: a.points, labels: a.labels })?;
            Ok(match &a.out {
                Some(path) => Output { stdout: String::new(), files: vec![(path.clone(), text)] },
                None => Output { stdout: text, files: Vec::new() },
            })
        }
        Command::FlatTest(a) => flat_test(a),
        Command::Compare(a) => {
            let rs = a.root.build()?;
            let first = WeightSpec::parse(rs.clone(), &a.first, scalar(&a.first_scale)?)?;
            let second = WeightSpec::parse(rs, &a.second, scalar(&a.second_scale)?)?;
            let same = same_compactification(&first, &second)?;
            let stdout = format!("{}\n", if same { "same compactification" } else { "different compactifications" });
            Ok(Output { stdout, files: Vec::new() }.with_file(&a.out, to_json(&serde_json::json!({ "same": same }))))
        }
    }
}

#[derive(Serialize)]
struct StratumJson {
    face: Vec<usize>,
    parameter_dim: usize,
    dual_point: Vec<f64>,
}

fn strata(a: &IoArgs) -> Result<Output> {
    let norm = read_norm(&a.input)?;
    let dual = norm.dual_ball();
    let strata: Vec<StratumJson> = enumerate_strata(&norm)
        .into_iter()
        .map(|s| StratumJson {
            dual_point: dual.relative_interior_point(&s.face).to_f64(),
            face: s.face.vertex_indices().to_vec(),
            parameter_dim: s.parameter_dim,
        })
        .collect();
    let walsh = walsh_criterion(&norm);
    let mut stdout = String::new();
    writeln!(stdout, "{:<4} {:<20} dual point", "dim", "face").unwrap();
    for s in &strata {
        let point: Vec<String> = s.dual_point.iter().map(|x| render::fmt_num(*x)).collect();
        writeln!(stdout, "{:<4} {:<20} ({})", s.parameter_dim, format!("{:?}", s.face), point.join(", ")).unwrap();
    }
    writeln!(stdout, "{} strata, {} extreme sets, every horofunction Busemann: {}", strata.len(), walsh.extreme_set_count, walsh.satisfied).unwrap();
    let json = to_json(&serde_json::json!({ "strata": strata, "walsh": walsh }));
    Ok(Output { stdout, files: Vec::new() }.with_file(&a.out, json))
}

/// Rays for `flat-test`: a regular ray and, for `n >= 3`, a wall ray of
/// type `{α_1}`. Their diagonal entries spread by about 26 at time
/// `t_ref`, which keeps `exp(H(t_ref))` inside the conditioning limit of
/// the Cartan projection.
fn flat_rays(n: usize, t_ref: i64) -> [FlatRay; 2] {
    let m = n as i64;
    let c = frac(13, (m - 1) * t_ref);
    let regular = Vector::new((0..m).map(|i| c.clone() * int(m - 1 - 2 * i)).collect());
    let w = frac(24, m * t_ref);
    let wall = Vector::new((0..m).map(|i| w.clone() * if i + 1 < m { int(1) } else { int(1 - m) }).collect());
    let mut start = vec![int(0); n];
    start[0] = frac(1, 2);
    start[n - 1] = frac(-1, 2);
    [FlatRay::new(Vector::zeros(n), regular), FlatRay::new(Vector::new(start), wall)]
}

/// Calibration times of the consistency and decay rays.
const T_CONSISTENCY: i64 = 10_000;
const T_DECAY: i64 = 1_000;

fn flat_grid(n: usize) -> Vec<Vector> {
    let range: Vec<i64> = if n <= 3 { (-2..=2).collect() } else { (-1..=1).collect() };
    let mut out = vec![Vec::new()];
    for _ in 0..n - 1 {
        out = out.into_iter().flat_map(|p| range.iter().map(move |&k| [p.clone(), vec![k]].concat())).collect();
    }
    out.into_iter()
        .map(|ks| {
            let last = -ks.iter().sum::<i64>();
            Vector::new(ks.into_iter().chain([last]).map(|k| frac(k, 2)).collect())
        })
        .collect()
}

#[derive(Serialize)]
struct FlatReport {
    n: usize,
    consistency: Vec<ConsistencyReport>,
    invariance: InvarianceReport,
}

fn flat_test(a: &FlatTestArgs) -> Result<Output> {
    if !(2..=4).contains(&a.n) {
        return Err(CliError::Invalid(format!("--n must be 2, 3 or 4, got {}", a.n)));
    }
    if !(a.tmax.is_finite() && a.tmax > 0.0 && a.tol > 0.0) {
        return Err(CliError::Invalid("--tmax and --tol must be positive".into()));
    }
    let norm = read_norm(&a.ball)?;
    if norm.ambient_dim() != a.n {
        return Err(CliError::Invalid(format!("ball lives in R^{}, not R^{}", norm.ambient_dim(), a.n)));
    }
    let norm = FlatNorm::new(norm)?;
    let [regular, wall] = flat_rays(a.n, T_CONSISTENCY);
    let grid = flat_grid(a.n);
    let mut consistency = vec![flat_limit_consistency(&norm, &regular, &grid, a.tmax, a.tol)?];
    if a.n >= 3 {
        consistency.push(flat_limit_consistency(&norm, &wall, &grid, a.tmax, a.tol)?);
    }
    let t_decay = a.tmax / 10.0;
    let [decay_ray, _] = flat_rays(a.n, T_DECAY);
    let config = InvarianceConfig {
        samples: a.samples,
        tolerance: 1e-9,
        seed: a.seed,
        ray: decay_ray,
        schedule: [0.1, 0.25, 0.5, 0.75, 1.0].iter().map(|f| f * t_decay).collect(),
        decay_threshold: 1e-3,
        decay_samples: 5,
    };
    let invariance = invariance_suite(&norm, &config)?;

    let mut stdout = String::new();
    for (name, r) in ["regular ray", "wall ray"].iter().zip(&consistency) {
        let (t, d) = r.defects.last().expect("four times");
        writeln!(stdout, "{name:<12} {:?} (defect {d:.3e} at t = {t})", r.outcome).unwrap();
    }
    writeln!(stdout, "K-invariance {} ({:.3e})", pass(invariance.k_invariance_passed), invariance.k_invariance).unwrap();
    writeln!(stdout, "equivariance {} ({:.3e})", pass(invariance.equivariance_passed), invariance.equivariance).unwrap();
    for c in &invariance.decay {
        writeln!(stdout, "decay {:<8?} {} (defect {:.3e} at t = {t_decay})", c.group, pass(c.is_monotone() && c.last() <= config.decay_threshold), c.last()).unwrap();
    }
    let report = FlatReport { n: a.n, consistency, invariance };
    let json = to_json(&report);
    let output = Output { stdout, files: Vec::new() }.with_file(&a.out, json);

    let outcomes: Vec<Outcome> = report.consistency.iter().map(|r| r.outcome).collect();
    let inv = &report.invariance;
    let decay_broken = inv.decay.iter().any(|c| !c.is_monotone());
    if outcomes.contains(&Outcome::Failed) || !inv.k_invariance_passed || !inv.equivariance_passed || decay_broken {
        Err(CliError::Failed(output.stdout))
    } else if outcomes.contains(&Outcome::Inconclusive) || !inv.decay_passed {
        Err(CliError::Inconclusive(output.stdout))
    } else {
        Ok(output)
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os("HOROPOLY_OUT_DIR") {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Writes the files of `output` and returns the text for stdout.
pub fn emit(output: &Output) -> Result<()> {
    for (path, contents) in &output.files {
        let path = resolve(path);
        fs::write(&path, contents).map_err(|source| CliError::Write { path: path.clone(), source })?;
    }
    print!("{}", output.stdout);
    Ok(())
}
