//! Command-line front end: evaluation, extendibility checks, decomposition,
//! margins, simulation, estimation, and scatter-figure emission.
//!
//! Exit codes: 0 success or PASS verdict, 1 FAIL verdict, 2 parse error,
//! 3 invariant violation, 4 sampler/numerics failure, 5 I/O failure.

use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use evcopula::io::{
    read_batch_csv, write_batch_csv, write_estimate_csv, write_scatter_svg, BatchMeta, CondIIDDoc,
    NuMeasureDoc, PickandsDoc, QLawDoc, SpectralMeasureDoc, UnitMeanDFDoc,
};
use evcopula::{
    check_necessary_discrete, estimate_pickands, sample_condiid, sample_maxlinear, singular_paths,
    uniform_grid, CondIIDSpec, DiscreteSpectralMeasure, DiscreteUnitMeanDF, Error,
    PiecewiseLinearPickands, QLaw, RngStream, SampleBatch, SimplexVector,
};

/// Fixed default seed; every simulation is reproducible by default.
const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "evcopula",
    version,
    about = "Exchangeable extreme-value copulas: evaluate, check, decompose, simulate, estimate"
)]
struct Cli {
    /// RNG seed for the simulation commands.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Number of samples (simulate, figure).
    #[arg(long, global = true, default_value_t = 2500)]
    n: usize,

    /// Output path (simulate, estimate) or prefix (figure); stdout/defaults
    /// otherwise.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format where a choice exists.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the stable tail dependence function, copula, or dependence
    /// function of a model file.
    Eval {
        /// JSON model: spectral measure, conditionally-iid spec, dependence
        /// function, law of Q, or unit-mean distribution.
        model: PathBuf,
        /// Argument vector for the stable tail dependence function; a single
        /// value evaluates the bivariate dependence function instead.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        x: Option<Vec<f64>>,
        /// Copula argument vector in [0,1]^d.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        u: Option<Vec<f64>>,
    },
    /// Run the extendibility necessary-condition check; exits 0 on PASS and
    /// 1 on FAIL, printing the verdict as JSON.
    Check {
        /// JSON input: symmetric dependence function, law of Q, unit-mean
        /// distribution, bivariate spectral measure, or conditionally-iid
        /// spec.
        input: PathBuf,
    },
    /// Decompose a symmetric dependence function over the symmetric
    /// two-atom family.
    Decompose { input: PathBuf },
    /// Project a spectral measure to a lower-dimensional margin.
    Margin {
        measure: PathBuf,
        /// Target dimension (2 <= dim < d).
        #[arg(long)]
        dim: usize,
    },
    /// Simulate a batch and write CSV plus a metadata sidecar.
    Simulate {
        model: PathBuf,
        /// Dimension for conditionally-iid models (spectral measures carry
        /// their own).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Estimate the dependence function of two batch coordinates.
    Estimate {
        /// Batch CSV (header u1,...,ud).
        batch: PathBuf,
        /// First coordinate (1-based).
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Second coordinate (1-based).
        #[arg(long, default_value_t = 2)]
        j: usize,
        /// Number of interior grid points.
        #[arg(long, default_value_t = 9)]
        grid: usize,
    },
    /// Emit the reference trivariate scatter: the extremal measure of the
    /// class [(1/6, 1/3, 1/2)], its bivariate projection, and the
    /// singular-path report.
    Figure,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::Invariant(_)
            | Error::DimensionMismatch { .. }
            | Error::DimensionTooLarge { .. }
            | Error::Asymmetric(_)
            | Error::NonConvex(_)
            | Error::InvalidArgument(_) => 3,
            Error::QuadratureDidNotConverge { .. }
            | Error::EnumerationCapExceeded { .. }
            | Error::EventCapExceeded { .. } => 4,
        };
        Self::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::new(5, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::new(2, e.to_string())
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Eval {
            ref model,
            ref x,
            ref u,
        } => cmd_eval(model, x.as_deref(), u.as_deref()),
        Command::Check { ref input } => cmd_check(input),
        Command::Decompose { ref input } => cmd_decompose(input, cli.out.as_deref()),
        Command::Margin { ref measure, dim } => cmd_margin(measure, dim, cli.out.as_deref()),
        Command::Simulate { ref model, dim } => {
            cmd_simulate(model, dim, cli.n, cli.seed, cli.out.as_deref(), cli.format)
        }
        Command::Estimate {
            ref batch,
            i,
            j,
            grid,
        } => cmd_estimate(batch, i, j, grid, cli.out.as_deref(), cli.format),
        Command::Figure => cmd_figure(cli.out.as_deref(), cli.n, cli.seed, cli.format),
    }
}

/// Any of the JSON model documents the commands accept, detected by keys.
enum Model {
    Spectral(DiscreteSpectralMeasure),
    CondIID(CondIIDSpec),
    Pickands(PiecewiseLinearPickands),
    QLaw(QLaw),
    UnitMeanDF(DiscreteUnitMeanDF),
}

fn load_model(path: &Path) -> Result<Model, CliError> {
    let text = fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::new(2, "model file must contain a JSON object"))?;
    if obj.contains_key("b") && obj.contains_key("lambda") {
        let doc: CondIIDDoc = serde_json::from_value(value)?;
        return Ok(Model::CondIID(doc.try_into()?));
    }
    if obj.contains_key("d") && obj.contains_key("atoms") {
        let doc: SpectralMeasureDoc = serde_json::from_value(value)?;
        return Ok(Model::Spectral(doc.try_into()?));
    }
    if obj.contains_key("kinks") && obj.contains_key("values") {
        let doc: PickandsDoc = serde_json::from_value(value)?;
        return Ok(Model::Pickands(doc.try_into()?));
    }
    if let Some(atoms) = obj.get("atoms").and_then(|a| a.as_array()) {
        if let Some(first) = atoms.first().and_then(|a| a.as_object()) {
            if first.contains_key("x") {
                let doc: UnitMeanDFDoc = serde_json::from_value(value)?;
                return Ok(Model::UnitMeanDF(doc.try_into()?));
            }
            if first.contains_key("q") {
                let doc: QLawDoc = serde_json::from_value(value)?;
                return Ok(Model::QLaw(doc.try_into()?));
            }
        }
    }
    Err(CliError::new(
        2,
        format!("unrecognized model document in {}", path.display()),
    ))
}

fn fmt15(v: f64) -> String {
    format!("{v:.15}")
}

fn cmd_eval(path: &Path, x: Option<&[f64]>, u: Option<&[f64]>) -> Result<i32, CliError> {
    let model = load_model(path)?;
    if x.is_none() && u.is_none() {
        return Err(CliError::new(2, "nothing to evaluate: pass --x and/or --u"));
    }
    if let Some(x) = x {
        match (&model, x.len()) {
            (Model::Pickands(a), 1) => println!("A = {}", fmt15(a.eval(x[0]))),
            (Model::QLaw(law), 1) => println!("A = {}", fmt15(law.pickands_value(x[0])?)),
            (Model::UnitMeanDF(f), 1) => {
                println!("A = {}", fmt15(f.pickands_function()?.eval(x[0])))
            }
            (Model::Spectral(m), 1) if m.dim() == 2 => {
                println!("A = {}", fmt15(m.stdf(&[x[0], 1.0 - x[0]])?))
            }
            (Model::CondIID(spec), 1) => {
                println!("A = {}", fmt15(spec.stdf(&[x[0], 1.0 - x[0]])?))
            }
            (Model::Spectral(m), _) => println!("ell = {}", fmt15(m.stdf(x)?)),
            (Model::CondIID(spec), _) => println!("ell = {}", fmt15(spec.stdf(x)?)),
            _ => {
                return Err(CliError::new(
                    3,
                    "this model only evaluates a bivariate dependence function (single --x value)",
                ))
            }
        }
    }
    if let Some(u) = u {
        match &model {
            Model::Spectral(m) => println!("C = {}", fmt15(m.copula(u)?)),
            Model::CondIID(spec) => println!("C = {}", fmt15(condiid_copula(spec, u)?)),
            _ => {
                return Err(CliError::new(
                    3,
                    "--u needs a spectral measure or conditionally-iid model",
                ))
            }
        }
    }
    Ok(0)
}

fn condiid_copula(spec: &CondIIDSpec, u: &[f64]) -> Result<f64, Error> {
    if u.iter().any(|v| !(*v >= 0.0 && *v <= 1.0)) {
        return Err(Error::InvalidArgument(format!(
            "copula arguments must lie in [0,1], got {u:?}"
        )));
    }
    if u.contains(&0.0) {
        return Ok(0.0);
    }
    let x: Vec<f64> = u.iter().map(|v| -v.ln()).collect();
    Ok((-spec.stdf(&x)?).exp())
}

fn model_q_law(model: &Model) -> Result<QLaw, CliError> {
    match model {
        Model::QLaw(law) => Ok(law.clone()),
        Model::Pickands(a) => {
            if !a.is_symmetric() {
                return Err(CliError::new(
                    3,
                    "asymmetric dependence function: the check needs a symmetric input",
                ));
            }
            Ok(a.q_law()?)
        }
        Model::UnitMeanDF(f) => Ok(f.q_law()),
        Model::Spectral(m) => Ok(m.bivariate_q_law()?),
        Model::CondIID(spec) => Ok(spec.pickands_function()?.q_law()?),
    }
}

fn cmd_check(path: &Path) -> Result<i32, CliError> {
    let law = model_q_law(&load_model(path)?)?;
    let verdict = check_necessary_discrete(&law)?;
    println!("{}", serde_json::to_string(&verdict)?);
    Ok(if verdict.pass { 0 } else { 1 })
}

fn cmd_decompose(path: &Path, out: Option<&Path>) -> Result<i32, CliError> {
    let model = load_model(path)?;
    let a = match &model {
        Model::Pickands(a) => a.clone(),
        Model::QLaw(law) => law.pickands_function()?,
        Model::UnitMeanDF(f) => f.pickands_function()?,
        Model::Spectral(m) => m.pickands_function()?,
        Model::CondIID(spec) => spec.pickands_function()?,
    };
    let nu = a.decompose()?;
    emit_json(&NuMeasureDoc::from(&nu), out)?;
    Ok(0)
}

fn cmd_margin(path: &Path, dim: usize, out: Option<&Path>) -> Result<i32, CliError> {
    let model = load_model(path)?;
    let m = match model {
        Model::Spectral(m) => m,
        _ => return Err(CliError::new(2, "margin needs a spectral-measure document")),
    };
    let margin = m.margin(dim)?;
    emit_json(&SpectralMeasureDoc::from(&margin), out)?;
    Ok(0)
}

fn cmd_simulate(
    path: &Path,
    dim: Option<usize>,
    n: usize,
    seed: u64,
    out: Option<&Path>,
    format: Format,
) -> Result<i32, CliError> {
    if format != Format::Csv {
        return Err(CliError::new(2, "simulate only writes CSV"));
    }
    let stream = RngStream::new(seed, 0);
    let (batch, descriptor) = match load_model(path)? {
        Model::Spectral(m) => {
            if let Some(dim) = dim {
                if dim != m.dim() {
                    return Err(CliError::new(
                        2,
                        format!(
                            "--dim {dim} conflicts with the measure dimension {}",
                            m.dim()
                        ),
                    ));
                }
            }
            let batch = sample_maxlinear(&m, n, &stream)?;
            (batch, format!("max-linear spectral(d={})", m.dim()))
        }
        Model::CondIID(spec) => {
            let d = dim.unwrap_or(2);
            let batch = sample_condiid(&spec, d, n, &stream)?;
            (
                batch,
                format!("conditionally-iid(b={}, d={d})", spec.drift()),
            )
        }
        _ => {
            return Err(CliError::new(
                2,
                "simulate needs a spectral measure or conditionally-iid model",
            ))
        }
    };
    let csv_path = csv_target(out.unwrap_or(Path::new("out")));
    write_batch_files(&batch, &csv_path, &descriptor)?;
    println!(
        "wrote {} ({} rows, d={})",
        csv_path.display(),
        batch.len(),
        batch.dim()
    );
    Ok(0)
}

fn cmd_estimate(
    path: &Path,
    i: usize,
    j: usize,
    grid: usize,
    out: Option<&Path>,
    format: Format,
) -> Result<i32, CliError> {
    if i == 0 || j == 0 {
        return Err(CliError::new(2, "coordinates are 1-based"));
    }
    let file = fs::File::open(path)?;
    let (dim, rows) = read_batch_csv(BufReader::new(file))?;
    let batch = SampleBatch::from_rows(dim, rows, 0, 0, "external")?;
    let est = estimate_pickands(&batch, i - 1, j - 1, &uniform_grid(grid))?;
    match format {
        Format::Csv => match out {
            Some(p) => {
                let mut w = fs::File::create(p)?;
                write_estimate_csv(&mut w, &est)?;
            }
            None => {
                let stdout = std::io::stdout();
                write_estimate_csv(&mut stdout.lock(), &est)?;
            }
        },
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                x: f64,
                raw: f64,
                clipped: f64,
            }
            let rows: Vec<Row> = est
                .grid()
                .iter()
                .zip(est.raw())
                .zip(est.clipped())
                .map(|((&x, &raw), &clipped)| Row { x, raw, clipped })
                .collect();
            emit_json(&rows, out)?;
        }
        Format::Svg => return Err(CliError::new(2, "estimate only writes CSV or JSON")),
    }
    Ok(0)
}

fn cmd_figure(out: Option<&Path>, n: usize, seed: u64, format: Format) -> Result<i32, CliError> {
    let point = SimplexVector::new(vec![1.0 / 6.0, 1.0 / 3.0, 0.5])?;
    let measure = DiscreteSpectralMeasure::exchangeable_from_atoms(3, &[(point, 1.0)])?;
    let batch = sample_maxlinear(&measure, n, &RngStream::new(seed, 0))?;

    let prefix = out.unwrap_or(Path::new("figure"));
    let prefix_str = prefix.to_string_lossy();
    let tri_path = PathBuf::from(format!("{prefix_str}_trivariate.csv"));
    write_batch_files(&batch, &tri_path, "max-linear extremal[(1/6,1/3,1/2)] d=3")?;

    let mut projected = Vec::with_capacity(batch.len() * 2);
    for row in batch.rows() {
        projected.push(row[0]);
        projected.push(row[1]);
    }
    let projection = SampleBatch::from_rows(
        2,
        projected,
        batch.seed(),
        batch.stream(),
        batch.generator(),
    )?;
    let bi_path = PathBuf::from(format!("{prefix_str}_bivariate.csv"));
    write_batch_files(
        &projection,
        &bi_path,
        "max-linear extremal[(1/6,1/3,1/2)] (u1,u2) margin",
    )?;

    let clusters = singular_paths(&batch, 0, 1)?;
    let paths_path = PathBuf::from(format!("{prefix_str}_paths.json"));
    let mut w = fs::File::create(&paths_path)?;
    serde_json::to_writer_pretty(&mut w, &clusters)?;
    writeln!(w)?;

    if format == Format::Svg {
        let svg_path = PathBuf::from(format!("{prefix_str}.svg"));
        let points: Vec<(f64, f64)> = batch.rows().map(|r| (r[0], r[1])).collect();
        let mut w = fs::File::create(&svg_path)?;
        write_scatter_svg(&mut w, &points)?;
        println!("wrote {}", svg_path.display());
    }
    println!("wrote {} ({} rows)", tri_path.display(), batch.len());
    println!("wrote {}", bi_path.display());
    println!(
        "wrote {} ({} ratio clusters)",
        paths_path.display(),
        clusters.len()
    );
    Ok(0)
}

fn csv_target(out: &Path) -> PathBuf {
    if out.extension().is_some_and(|e| e == "csv") {
        out.to_path_buf()
    } else {
        out.with_extension("csv")
    }
}

fn write_batch_files(batch: &SampleBatch, csv_path: &Path, model: &str) -> Result<(), CliError> {
    let mut w = fs::File::create(csv_path)?;
    write_batch_csv(&mut w, batch)?;
    let meta = BatchMeta::for_batch(batch, model);
    let meta_path = csv_path.with_extension("meta.json");
    let mut w = fs::File::create(meta_path)?;
    serde_json::to_writer_pretty(&mut w, &meta)?;
    writeln!(w)?;
    Ok(())
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => {
            let mut w = fs::File::create(p)?;
            writeln!(w, "{text}")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}
