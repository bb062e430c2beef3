//! Figure corpora: ingestion, pairwise distance matrices partitioned
//! by isomorphism class, nearest-neighbor ranking, and plot-data
//! emission.
//!
//! Cells for figures in different isomorphism classes are reported as
//! incomparable rather than silently skipped, so the gate stays
//! visible in corpus output. All output orderings are lexicographic by
//! figure name, which makes serialized matrices byte-identical across
//! runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::distance::{self, DistanceError, DistanceOutcome, DistanceReport};
use crate::figure::{Figure, FigurePair, ParseError, ValidationErrors};
use crate::graph::Graph;

/// Literal written into matrix CSV cells for cross-class pairs.
pub const INCOMPARABLE: &str = "incomparable";

/// How many decimals reports carry when serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Four decimal places, the precision the reference tables use.
    #[default]
    Four,
    /// Shortest round-trip representation.
    Full,
}

impl Precision {
    pub fn format(&self, value: f64) -> String {
        match self {
            Precision::Four => format!("{value:.4}"),
            Precision::Full => format!("{value}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: PathBuf,
        source: ParseError,
    },
    #[error("figure `{name}` ({path}): {source}")]
    Invalid {
        name: String,
        path: PathBuf,
        source: ValidationErrors,
    },
    #[error("duplicate figure name `{name}` (in {path})")]
    DuplicateName { name: String, path: PathBuf },
    #[error("no figure documents found in {0}")]
    EmptyDirectory(PathBuf),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// Reads and validates one `.figure.json` document.
pub fn load_figure(path: &Path) -> Result<Figure, CorpusError> {
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let figure = Figure::parse(&text).map_err(|source| CorpusError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    figure.validate().map_err(|source| CorpusError::Invalid {
        name: figure.name.clone(),
        path: path.to_path_buf(),
        source,
    })?;
    Ok(figure)
}

/// Loads every `*.figure.json` in a directory, sorted by figure name.
/// Any invalid figure aborts the load with its name and violations.
pub fn load_directory(dir: &Path) -> Result<Vec<Figure>, CorpusError> {
    let entries = fs::read_dir(dir).map_err(|source| CorpusError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| {
            path.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.ends_with(".figure.json"))
        })
        .collect();
    paths.sort();

    let mut figures = Vec::new();
    let mut seen = BTreeMap::new();
    for path in paths {
        let figure = load_figure(&path)?;
        if let Some(_previous) = seen.insert(figure.name.clone(), path.clone()) {
            return Err(CorpusError::DuplicateName {
                name: figure.name,
                path,
            });
        }
        figures.push(figure);
    }
    if figures.is_empty() {
        return Err(CorpusError::EmptyDirectory(dir.to_path_buf()));
    }
    figures.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(figures)
}

/// A named figure collection with its isomorphism-class partition and
/// pairwise distance matrix.
#[derive(Debug)]
pub struct FigureCorpus {
    figures: Vec<Figure>,
    /// Figure names partitioned by pairwise adjacency-graph isomorphism.
    iso_classes: Vec<Vec<String>>,
    /// Unordered name pairs (stored with the lexicographically smaller
    /// name first) mapped to their outcome.
    matrix: BTreeMap<(String, String), DistanceOutcome>,
}

impl FigureCorpus {
    /// Computes all within-class pairwise distances for a set of
    /// validated figures. Figures are ordered by name; cross-class
    /// cells are marked incomparable.
    pub fn build(
        mut figures: Vec<Figure>,
        beta: f64,
        tolerance: f64,
    ) -> Result<FigureCorpus, CorpusError> {
        figures.sort_by(|a, b| a.name.cmp(&b.name));
        let graphs: Vec<Graph> = figures.iter().map(Graph::from_figure).collect();

        // partition by isomorphism against each class representative
        let mut iso_classes: Vec<Vec<String>> = Vec::new();
        let mut representatives: Vec<&Graph> = Vec::new();
        let mut class_of = Vec::with_capacity(figures.len());
        for (figure, graph) in figures.iter().zip(&graphs) {
            let class = representatives
                .iter()
                .position(|rep| graph.is_isomorphic(rep));
            let class = match class {
                Some(index) => index,
                None => {
                    representatives.push(graph);
                    iso_classes.push(Vec::new());
                    iso_classes.len() - 1
                }
            };
            iso_classes[class].push(figure.name.clone());
            class_of.push(class);
        }

        let mut matrix = BTreeMap::new();
        for (i, first) in figures.iter().enumerate() {
            for (j, second) in figures.iter().enumerate().skip(i) {
                let key = (first.name.clone(), second.name.clone());
                let outcome = if class_of[i] == class_of[j] {
                    // same class; arity can still diverge (e.g. angle counts)
                    match FigurePair::new(first.clone(), second.clone()) {
                        Ok(pair) => distance::distance(&pair, beta, tolerance)?,
                        Err(_) => DistanceOutcome::Undefined {
                            first: graphs[i].summary(),
                            second: graphs[j].summary(),
                        },
                    }
                } else {
                    DistanceOutcome::Undefined {
                        first: graphs[i].summary(),
                        second: graphs[j].summary(),
                    }
                };
                matrix.insert(key, outcome);
            }
        }

        Ok(FigureCorpus {
            figures,
            iso_classes,
            matrix,
        })
    }

    pub fn figures(&self) -> &[Figure] {
        &self.figures
    }

    pub fn iso_classes(&self) -> &[Vec<String>] {
        &self.iso_classes
    }

    /// The matrix entry for an unordered name pair.
    pub fn entry(&self, a: &str, b: &str) -> Option<&DistanceOutcome> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.matrix.get(&(key.0.to_string(), key.1.to_string()))
    }

    /// Serializes the matrix as CSV: header row of figure names, cells
    /// holding `d` or the literal `incomparable`.
    pub fn matrix_csv(&self, precision: Precision) -> String {
        let mut csv = String::from("figure");
        for figure in &self.figures {
            write!(csv, ",{}", figure.name).unwrap();
        }
        csv.push('\n');
        for row in &self.figures {
            write!(csv, "{}", row.name).unwrap();
            for column in &self.figures {
                let cell = match self.entry(&row.name, &column.name) {
                    Some(DistanceOutcome::Defined(report)) => precision.format(report.d),
                    _ => INCOMPARABLE.to_string(),
                };
                write!(csv, ",{cell}").unwrap();
            }
            csv.push('\n');
        }
        csv
    }
}

/// The `k` comparable corpus figures closest to the query, ascending by
/// distance with ties broken lexicographically by name. Incomparable
/// figures are skipped; an empty result means nothing was comparable.
pub fn nearest(
    query: &Figure,
    corpus: &[Figure],
    beta: f64,
    tolerance: f64,
    k: usize,
) -> Result<Vec<(String, f64)>, CorpusError> {
    let mut ranked = Vec::new();
    for candidate in corpus {
        let pair = match FigurePair::new(query.clone(), candidate.clone()) {
            Ok(pair) => pair,
            Err(_) => continue,
        };
        if let DistanceOutcome::Defined(report) = distance::distance(&pair, beta, tolerance)? {
            ranked.push((candidate.name.clone(), report.d));
        }
    }
    ranked.sort_by(|(name_a, d_a), (name_b, d_b)| {
        d_a.total_cmp(d_b).then_with(|| name_a.cmp(name_b))
    });
    ranked.truncate(k);
    Ok(ranked)
}

/// Writes the scatter-plot data behind a report: `<prefix>_angles.csv`
/// with each angle pair and its reference point on the `y = x` line,
/// and `<prefix>_edges.csv` with each edge-length pair, its fitted
/// point, and the slope.
pub fn emit_scatter(
    report: &DistanceReport,
    pair: &FigurePair,
    out_prefix: &Path,
    precision: Precision,
) -> io::Result<(PathBuf, PathBuf)> {
    let prefix = out_prefix.to_string_lossy();
    let angles_path = PathBuf::from(format!("{prefix}_angles.csv"));
    let edges_path = PathBuf::from(format!("{prefix}_edges.csv"));

    let mut angles = String::from("u,theta_i,theta_j,line_x,line_y\n");
    for (u, (&theta_i, &theta_j)) in pair
        .first()
        .angles
        .iter()
        .zip(&pair.second().angles)
        .enumerate()
    {
        writeln!(
            angles,
            "{},{},{},{},{}",
            u + 1,
            precision.format(theta_i),
            precision.format(theta_j),
            precision.format(theta_i),
            precision.format(theta_i),
        )
        .unwrap();
    }
    fs::write(&angles_path, angles)?;

    let mut edges = String::from("h,l_i,l_j,l_i_fitted,l_j_fitted,m\n");
    let line = &report.edge_result.line;
    for (h, ((&l_i, &l_j), &(fit_i, fit_j))) in pair
        .first()
        .edge_lengths
        .iter()
        .zip(&pair.second().edge_lengths)
        .zip(&line.fitted)
        .enumerate()
    {
        writeln!(
            edges,
            "{},{},{},{},{},{}",
            h + 1,
            precision.format(l_i),
            precision.format(l_j),
            precision.format(fit_i),
            precision.format(fit_j),
            precision.format(line.slope),
        )
        .unwrap();
    }
    fs::write(&edges_path, edges)?;

    Ok((angles_path, edges_path))
}
