//! `figdist`: compare straight-edge planar figures, build corpus
//! distance matrices, and rank nearest neighbors.
//!
//! Exit codes: 0 on success, 1 when a requested distance is undefined
//! (adjacency graphs not isomorphic), 2 on parse or validation errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use figdist::corpus::{self, CorpusError, FigureCorpus, Precision, INCOMPARABLE};
use figdist::distance::{distance, DistanceOutcome, DistanceReport};
use figdist::figure::FigurePair;
use figdist::{ipfp, DEFAULT_BETA, DEFAULT_TOLERANCE};

#[derive(Parser)]
#[command(name = "figdist", version, about = "Distance between straight-edge planar figures")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum PrecisionArg {
    /// Four decimal places (the precision of the reference tables).
    #[default]
    #[value(name = "4")]
    Four,
    /// Shortest round-trip representation.
    Full,
}

impl From<PrecisionArg> for Precision {
    fn from(arg: PrecisionArg) -> Precision {
        match arg {
            PrecisionArg::Four => Precision::Four,
            PrecisionArg::Full => Precision::Full,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the distance between two figure documents.
    Compare {
        /// First figure document (.figure.json).
        first: PathBuf,
        /// Second figure document (.figure.json).
        second: PathBuf,
        /// Weight of the angular component, in [0, 1].
        #[arg(long, default_value_t = DEFAULT_BETA)]
        beta: f64,
        /// Stopping tolerance for the iterative proportional fit.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Print every table of the iterative proportional fit.
        #[arg(long)]
        trace_ipfp: bool,
        /// Write scatter-plot data to PREFIX_angles.csv and PREFIX_edges.csv.
        #[arg(long, value_name = "PREFIX")]
        emit_scatter: Option<PathBuf>,
        /// Decimal places in the report.
        #[arg(long, value_enum, default_value_t = PrecisionArg::Four)]
        precision: PrecisionArg,
    },
    /// Compute the pairwise distance matrix over a directory of figures.
    Matrix {
        /// Directory containing *.figure.json documents.
        dir: PathBuf,
        /// Write the CSV here instead of standard output.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Weight of the angular component, in [0, 1].
        #[arg(long, default_value_t = DEFAULT_BETA)]
        beta: f64,
        /// Stopping tolerance for the iterative proportional fit.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Rank the corpus figures closest to a query figure.
    Nearest {
        /// Query figure document (.figure.json).
        query: PathBuf,
        /// Directory containing *.figure.json documents.
        dir: PathBuf,
        /// How many neighbors to report.
        #[arg(short, default_value_t = 5)]
        k: usize,
        /// Weight of the angular component, in [0, 1].
        #[arg(long, default_value_t = DEFAULT_BETA)]
        beta: f64,
    },
}

/// Writes to standard output, treating a closed pipe (e.g. piping
/// into `head`) as a normal early exit rather than an error.
fn print_out(body: &str) {
    use std::io::Write;
    let result = std::io::stdout().lock().write_all(body.as_bytes());
    if let Err(error) = result {
        if error.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to standard output: {error}");
        std::process::exit(i32::from(EXIT_INVALID));
    }
}

/// Exit status 1: the requested distance is undefined.
const EXIT_UNDEFINED: u8 = 1;
/// Exit status 2: input could not be parsed or validated.
const EXIT_INVALID: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Distance(#[from] figdist::distance::DistanceError),
    #[error("figures have mismatched arity: {0}")]
    Arity(figdist::figure::PairError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Compare {
            first,
            second,
            beta,
            tolerance,
            trace_ipfp,
            emit_scatter,
            precision,
        } => compare(
            cli.format,
            first,
            second,
            *beta,
            *tolerance,
            *trace_ipfp,
            emit_scatter.as_deref(),
            (*precision).into(),
        ),
        Command::Matrix {
            dir,
            output,
            beta,
            tolerance,
        } => matrix(cli.format, dir, output.as_deref(), *beta, *tolerance),
        Command::Nearest { query, dir, k, beta } => {
            nearest(cli.format, query, dir, *k, *beta)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn compare(
    format: Format,
    first_path: &std::path::Path,
    second_path: &std::path::Path,
    beta: f64,
    tolerance: f64,
    trace_ipfp: bool,
    emit_scatter: Option<&std::path::Path>,
    precision: Precision,
) -> Result<ExitCode, CliError> {
    let first = corpus::load_figure(first_path)?;
    let second = corpus::load_figure(second_path)?;

    // The isomorphism gate comes before arity checks: a hexagon and a
    // triangle are "undefined" (exit 1), not malformed input (exit 2).
    let first_graph = figdist::Graph::from_figure(&first);
    let second_graph = figdist::Graph::from_figure(&second);
    if !first_graph.is_isomorphic(&second_graph) {
        let outcome = DistanceOutcome::Undefined {
            first: first_graph.summary(),
            second: second_graph.summary(),
        };
        match format {
            Format::Json => {
                print_out(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&outcome).unwrap()
                ));
            }
            Format::Text => {
                eprintln!("distance undefined: adjacency graphs not isomorphic");
                for (figure, graph) in [(&first, &first_graph), (&second, &second_graph)] {
                    let summary = graph.summary();
                    eprintln!(
                        "  {}: {} vertices, {} edges, degrees {:?}",
                        figure.name,
                        summary.vertex_count,
                        summary.edge_count,
                        summary.degree_sequence
                    );
                }
            }
        }
        return Ok(ExitCode::from(EXIT_UNDEFINED));
    }

    let pair = FigurePair::new(first, second).map_err(CliError::Arity)?;
    let outcome = distance(&pair, beta, tolerance)?;
    let report = match &outcome {
        DistanceOutcome::Defined(report) => report,
        DistanceOutcome::Undefined { .. } => unreachable!("gate already passed"),
    };

    if let Some(prefix) = emit_scatter {
        corpus::emit_scatter(report, &pair, prefix, precision).map_err(|source| {
            CliError::Write {
                path: prefix.to_path_buf(),
                source,
            }
        })?;
    }

    match format {
        Format::Json => {
            print_out(&format!(
                "{}\n",
                serde_json::to_string_pretty(&outcome).unwrap()
            ));
        }
        Format::Text => {
            let mut body = render_report(&pair, report, precision);
            if trace_ipfp {
                body.push_str(&render_trace(&pair, tolerance)?);
            }
            print_out(&body);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_report(pair: &FigurePair, report: &DistanceReport, precision: Precision) -> String {
    let p = |v: f64| precision.format(v);
    let list = |values: &[f64]| {
        values
            .iter()
            .map(|&v| precision.format(v))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "comparing {} and {}", pair.first().name, pair.second().name);
    let _ = writeln!(out, "angular shifts: [{}]", list(&report.alpha_result.shifts));
    let _ = writeln!(out, "shift sum: {}", p(report.alpha_result.shift_sum));
    let _ = writeln!(out, "alpha: {}", p(report.alpha_result.alpha));
    let _ = writeln!(out, "fitted slope m: {}", p(report.edge_result.line.slope));
    let _ = writeln!(out, "edge deviations: [{}]", list(&report.edge_result.deviations));
    let _ = writeln!(out, "deviation sum: {}", p(report.edge_result.deviation_sum));
    let _ = writeln!(out, "rho: {}", p(report.edge_result.rho));
    let _ = writeln!(out, "beta: {}", p(report.beta));
    let _ = writeln!(out, "d: {}", p(report.d));
    out
}

fn render_trace(pair: &FigurePair, tolerance: f64) -> Result<String, CliError> {
    let (_, tables) = ipfp::ipfp_fit_traced(
        &pair.first().edge_lengths,
        &pair.second().edge_lengths,
        tolerance,
        true,
    )
    .map_err(figdist::distance::DistanceError::from)?;
    let mut out = String::new();
    for table in &tables {
        let _ = writeln!(out, "ipfp table {}:", table.label);
        let _ = writeln!(out, "h,left,right,total");
        for (h, &(left, right)) in table.rows.iter().enumerate() {
            let _ = writeln!(out, "{},{left},{right},{}", h + 1, left + right);
        }
    }
    Ok(out)
}

fn matrix(
    format: Format,
    dir: &std::path::Path,
    output: Option<&std::path::Path>,
    beta: f64,
    tolerance: f64,
) -> Result<ExitCode, CliError> {
    let figures = corpus::load_directory(dir)?;
    let corpus = FigureCorpus::build(figures, beta, tolerance)?;
    let body = match format {
        Format::Text => corpus.matrix_csv(Precision::Four),
        Format::Json => {
            let mut cells = Vec::new();
            for row in corpus.figures() {
                for column in corpus.figures() {
                    let cell = match corpus.entry(&row.name, &column.name) {
                        Some(DistanceOutcome::Defined(report)) => {
                            serde_json::json!(report.d)
                        }
                        _ => serde_json::json!(INCOMPARABLE),
                    };
                    cells.push(serde_json::json!({
                        "first": row.name,
                        "second": column.name,
                        "d": cell,
                    }));
                }
            }
            let document = serde_json::json!({
                "iso_classes": corpus.iso_classes(),
                "matrix": cells,
            });
            format!("{}\n", serde_json::to_string_pretty(&document).unwrap())
        }
    };
    match output {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        })?,
        None => print_out(&body),
    }
    Ok(ExitCode::SUCCESS)
}

fn nearest(
    format: Format,
    query_path: &std::path::Path,
    dir: &std::path::Path,
    k: usize,
    beta: f64,
) -> Result<ExitCode, CliError> {
    let query = corpus::load_figure(query_path)?;
    let figures = corpus::load_directory(dir)?;
    let ranked = corpus::nearest(&query, &figures, beta, DEFAULT_TOLERANCE, k)?;
    if ranked.is_empty() {
        eprintln!(
            "warning: no corpus figure is comparable to `{}` (adjacency graphs differ)",
            query.name
        );
    }
    match format {
        Format::Json => {
            let entries: Vec<_> = ranked
                .iter()
                .map(|(name, d)| serde_json::json!({ "name": name, "d": d }))
                .collect();
            print_out(&format!(
                "{}\n",
                serde_json::to_string_pretty(&entries).unwrap()
            ));
        }
        Format::Text => {
            let mut body = String::new();
            for (rank, (name, d)) in ranked.iter().enumerate() {
                let _ = writeln!(body, "{}. {} d={}", rank + 1, name, Precision::Four.format(*d));
            }
            print_out(&body);
        }
    }
    Ok(ExitCode::SUCCESS)
}
