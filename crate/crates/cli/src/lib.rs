//! Command-line front end: every expansion route by name, the homology
//! reports, and the verification sweeps, with JSON or TSV output.

pub mod verify;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use plethyx::chern::{
    coeff_alternating, coeff_column, coeff_column_jacobi_trudi, coeff_single_row, coeff_two_rows,
    coeff_two_rows_monomial, expand_column_case, expand_row_case, sbar_alternating, sbar_direct, AltForm,
    ColumnVariant,
};
use plethyx::homology::{check_vanishing, ComplexKind, VanishingReport};
use plethyx::paths::{lgv_matrix, nonintersecting_tuples, GraphVariant, PathGraph};
use plethyx::sympoly::SchurExpansion;
use plethyx::{Expansion, Partition};

/// Default bound on the total dimension of a chain complex.
pub const DEFAULT_GUARD: usize = 100_000;
/// `auto` cross-checks against direct substitution up to this weight.
pub const AUTO_CHECK_WEIGHT: usize = 6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISCREPANCY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "plethyx", version, about = "Schur expansions of Chern plethysm polynomials")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for sweeps; 0 picks the number of cores.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Full Schur expansion of sbar_lambda in n variables.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// A single Schur coefficient of sbar_lambda.
    Coeff {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Height parameter of the column routes; defaults to the smallest valid one.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum)]
        variant: Option<Variant>,
    },
    /// Path counts, the LGV matrix and the nonintersecting tuples of a column coefficient.
    Paths {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value_t = Variant::Split)]
        variant: Variant,
        /// Print the graph in Graphviz format instead.
        #[arg(long)]
        emit_dot: bool,
    },
    /// Homology of the injective-word complexes.
    Homology {
        #[command(subcommand)]
        kind: HomologyKind,
    },
    /// Cross-check the routes against each other over a range of instances.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug, Clone)]
pub enum HomologyKind {
    /// Column complex with |A| = k and |M| = n - k + 1.
    Column {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        characters: bool,
    },
    /// Row complex with |A| = a and |M| = m.
    Row {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        characters: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 4)]
    pub max_weight: usize,
    #[arg(long, default_value_t = 4)]
    pub max_vars: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Tsv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Alternating,
    HookContent,
    Column,
    Row,
    OneRow,
    TwoRow,
    TwoRowMonomial,
    Fillings,
    Lgv,
    Tuples,
    JacobiTrudi,
    Auto,
}

/// `corrected` and `split` both name the repaired construction; `printed`
/// the one with the two known defects.
#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Printed,
    Split,
    Corrected,
}

impl Variant {
    fn graph(self) -> GraphVariant {
        match self {
            Variant::Printed => GraphVariant::Printed,
            Variant::Split | Variant::Corrected => GraphVariant::Split,
        }
    }

    fn columns(self) -> ColumnVariant {
        match self {
            Variant::Printed => ColumnVariant::Printed,
            Variant::Split | Variant::Corrected => ColumnVariant::Corrected,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Routes,
    Column,
    Row,
    Paths,
    Homology,
    All,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: plethyx::Error| e.to_string())
}

/// Everything a command needs once flags and environment are read.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub jobs: usize,
    pub guard: usize,
}

impl RunConfig {
    /// Reads `PLETHYX_GUARD` for the dimension guard.
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let guard = match std::env::var("PLETHYX_GUARD") {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(g) if g > 0 => g,
                _ => return Err(format!("PLETHYX_GUARD must be a positive integer, got {v:?}")),
            },
            Err(_) => DEFAULT_GUARD,
        };
        Ok(RunConfig { command: cli.command, format: cli.format, jobs: cli.jobs, guard })
    }
}

/// What a command produced: text for stdout, an optional note for stderr,
/// and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub note: Option<String>,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, note: None, code: EXIT_OK }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), note: Some(msg.into()), code: EXIT_USAGE }
    }
}

/// One Schur term as it appears in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub mu: Vec<usize>,
    pub coeff: String,
}

pub fn terms(e: &Expansion) -> Vec<Term> {
    e.iter().map(|(mu, c)| Term { mu: mu.parts().to_vec(), coeff: c.to_string() }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandOutput {
    pub lambda: Vec<usize>,
    pub n: usize,
    pub method: Method,
    pub expansion: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffOutput {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub n: usize,
    pub method: Method,
    pub coeff: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathsOutput {
    pub lambda: Vec<usize>,
    pub n: usize,
    pub p: usize,
    pub variant: Variant,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    /// Images of the nonintersecting tuples as column fillings; split graph only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tuples: Option<Vec<Vec<Vec<u32>>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyOutput {
    pub kind: String,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "M")]
    pub m: Vec<u32>,
    pub dims: Vec<usize>,
    pub homology: Vec<usize>,
    pub vanishing_below_top: bool,
    pub conjecture_hypothesis: Option<bool>,
    pub certificate: String,
    pub status: String,
    pub ch_top: Option<Vec<Term>>,
}

impl From<&VanishingReport> for HomologyOutput {
    fn from(r: &VanishingReport) -> Self {
        let tag = |v: serde_json::Value| v.as_str().unwrap_or_default().to_string();
        HomologyOutput {
            kind: tag(serde_json::to_value(r.kind).unwrap()),
            a: r.a.clone(),
            m: r.m.clone(),
            dims: r.dims.clone(),
            homology: r.homology.clone(),
            vanishing_below_top: r.vanishing_below_top,
            conjecture_hypothesis: r.conjecture_hypothesis,
            certificate: tag(serde_json::to_value(r.certificate).unwrap()),
            status: tag(serde_json::to_value(r.status).unwrap()),
            ch_top: r.ch_top.as_ref().map(terms),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn expansion_tsv(e: &[Term]) -> String {
    e.iter().map(|t| format!("{}\t{}\n", join(&t.mu), t.coeff)).collect()
}

pub fn run(config: &RunConfig) -> Outcome {
    match &config.command {
        Command::Expand { lambda, n, method } => cmd_expand(lambda, *n, *method, config.format),
        Command::Coeff { lambda, mu, n, method, p, variant } => {
            cmd_coeff(lambda, mu, *n, *method, *p, *variant, config.format)
        }
        Command::Paths { lambda, n, p, variant, emit_dot } => {
            cmd_paths(lambda, *n, *p, *variant, *emit_dot, config.format)
        }
        Command::Homology { kind } => cmd_homology(kind, config.guard, config.format),
        Command::Verify(args) => verify::cmd_verify(args, config),
    }
}

/// The expansion by a whole-polynomial route.
pub fn expansion_by(lambda: &Partition, n: usize, method: Method) -> Result<Expansion, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    match method {
        Method::Direct => Ok(sbar_direct(lambda, n)),
        Method::Alternating => Ok(sbar_alternating(lambda, n)),
        Method::HookContent => {
            let mut out = SchurExpansion::zero(n);
            for mu in plethyx::shapes::partitions_of(lambda.size(), n) {
                out.add(mu.clone(), coeff_alternating(lambda, &mu, n, AltForm::HookContent));
            }
            Ok(out)
        }
        Method::Column => {
            if !lambda.is_column() || lambda.is_empty() {
                return Err(format!("the column method needs lambda = (1^k), got {lambda}"));
            }
            expand_column_case(lambda.size(), n).map_err(|e| e.to_string())
        }
        Method::Row => {
            if !lambda.is_row() || lambda.is_empty() {
                return Err(format!("the row method needs lambda = (k), got {lambda}"));
            }
            expand_row_case(lambda.size(), n).map_err(|e| e.to_string())
        }
        Method::Auto => {
            let k = lambda.size();
            let (used, e) = if k > 0 && lambda.is_column() && k <= n {
                (Method::Column, expansion_by(lambda, n, Method::Column)?)
            } else if k > 0 && lambda.is_row() {
                (Method::Row, expansion_by(lambda, n, Method::Row)?)
            } else {
                (Method::Alternating, sbar_alternating(lambda, n))
            };
            if k <= AUTO_CHECK_WEIGHT && used != Method::Direct {
                let direct = sbar_direct(lambda, n);
                if direct != e {
                    return Err(format!("auto route {used:?} disagrees with direct substitution: {e} vs {direct}"));
                }
            }
            Ok(e)
        }
        other => Err(format!("{other:?} computes single coefficients; use the coeff command")),
    }
}

/// Smallest height parameter the column routes accept.
pub fn default_p(lambda: &Partition) -> usize {
    lambda.len().max(1)
}

/// One coefficient by any route. Degree and length mismatches give 0 and a note.
pub fn coeff_by(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    method: Method,
    p: Option<usize>,
    variant: Option<Variant>,
) -> Result<(BigInt, Option<String>), String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    if lambda.size() != mu.size() {
        return Ok((BigInt::from(0), Some(format!("|lambda| = {} differs from |mu| = {}", lambda.size(), mu.size()))));
    }
    if mu.len() > n {
        return Ok((BigInt::from(0), Some(format!("mu has more than {n} parts, so s_mu vanishes"))));
    }
    let err = |e: plethyx::Error| e.to_string();
    let need_column = || {
        if mu.is_column() && !mu.is_empty() {
            Ok(())
        } else {
            Err(format!("{method:?} computes the coefficient of a column, got mu = {mu}"))
        }
    };
    let p = p.unwrap_or_else(|| default_p(lambda));
    let c = match method {
        Method::Direct | Method::Column | Method::Row => expansion_by(lambda, n, method)?.coeff(mu),
        Method::Alternating => coeff_alternating(lambda, mu, n, AltForm::Skew),
        Method::HookContent => coeff_alternating(lambda, mu, n, AltForm::HookContent),
        Method::OneRow => {
            if !mu.is_row() {
                return Err(format!("one-row needs mu = (k), got {mu}"));
            }
            coeff_single_row(lambda, n).map_err(err)?
        }
        Method::TwoRow | Method::TwoRowMonomial => {
            if mu.len() > 2 {
                return Err(format!("{method:?} needs at most two rows in mu, got {mu}"));
            }
            let (a, b) = (mu.part(0), mu.part(1));
            if method == Method::TwoRow {
                coeff_two_rows(lambda, a, b, n).map_err(err)?
            } else {
                coeff_two_rows_monomial(lambda, a, b, n).map_err(err)?
            }
        }
        Method::Fillings => {
            need_column()?;
            coeff_column(lambda, n, p, variant.unwrap_or(Variant::Corrected).columns()).map_err(err)?
        }
        Method::Lgv => {
            need_column()?;
            plethyx::paths::lgv_determinant(lambda, p, n, variant.unwrap_or(Variant::Split).graph()).map_err(err)?
        }
        Method::Tuples => {
            need_column()?;
            if variant == Some(Variant::Printed) {
                return Err("tuples are enumerated on the split graph only".into());
            }
            BigInt::from(nonintersecting_tuples(lambda, p, n).map_err(err)?.len())
        }
        Method::JacobiTrudi => {
            need_column()?;
            coeff_column_jacobi_trudi(lambda, n)
        }
        Method::Auto => {
            let chosen = if lambda.is_column() && lambda.size() <= n {
                Method::Column
            } else if lambda.is_row() {
                Method::Row
            } else if mu.is_row() {
                Method::OneRow
            } else if mu.len() <= 2 {
                Method::TwoRow
            } else if mu.is_column() {
                Method::JacobiTrudi
            } else {
                Method::Alternating
            };
            let (c, _) = coeff_by(lambda, mu, n, chosen, None, None)?;
            if lambda.size() <= AUTO_CHECK_WEIGHT {
                let direct = sbar_direct(lambda, n).coeff(mu);
                if direct != c {
                    return Err(format!("auto route {chosen:?} gives {c} but direct substitution gives {direct}"));
                }
            }
            c
        }
    };
    Ok((c, None))
}

fn cmd_expand(lambda: &Partition, n: usize, method: Method, format: Format) -> Outcome {
    let e = match expansion_by(lambda, n, method) {
        Ok(e) => e,
        Err(msg) => return Outcome::usage(msg),
    };
    let out = ExpandOutput { lambda: lambda.parts().to_vec(), n, method, expansion: terms(&e) };
    Outcome::ok(match format {
        Format::Json => to_json(&out),
        Format::Tsv => expansion_tsv(&out.expansion),
    })
}

fn cmd_coeff(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    method: Method,
    p: Option<usize>,
    variant: Option<Variant>,
    format: Format,
) -> Outcome {
    let (c, note) = match coeff_by(lambda, mu, n, method, p, variant) {
        Ok(r) => r,
        Err(msg) => return Outcome::usage(msg),
    };
    let out = CoeffOutput {
        lambda: lambda.parts().to_vec(),
        mu: mu.parts().to_vec(),
        n,
        method,
        coeff: c.to_string(),
        note: note.clone(),
    };
    let stdout = match format {
        Format::Json => to_json(&out),
        Format::Tsv => format!("{c}\n"),
    };
    Outcome { stdout, note, code: EXIT_OK }
}

fn cmd_paths(lambda: &Partition, n: usize, p: Option<usize>, variant: Variant, emit_dot: bool, format: Format) -> Outcome {
    if n == 0 {
        return Outcome::usage("n must be at least 1");
    }
    if emit_dot {
        return Outcome::ok(PathGraph::new(n, variant.graph()).to_dot());
    }
    let p = p.unwrap_or_else(|| default_p(lambda));
    let matrix = match lgv_matrix(lambda, p, n, variant.graph()) {
        Ok(m) => m,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let det = plethyx::linalg::determinant(&matrix);
    let tuples = match variant.graph() {
        GraphVariant::Split => match nonintersecting_tuples(lambda, p, n) {
            Ok(ts) => Some(ts.iter().map(|t| t.to_filling().rows().to_vec()).collect()),
            Err(e) => return Outcome::usage(e.to_string()),
        },
        GraphVariant::Printed => None,
    };
    let out = PathsOutput {
        lambda: lambda.parts().to_vec(),
        n,
        p,
        variant,
        matrix: matrix.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        determinant: det.to_string(),
        tuples,
    };
    Outcome::ok(match format {
        Format::Json => to_json(&out),
        Format::Tsv => {
            let mut s = String::new();
            for row in &out.matrix {
                writeln!(s, "{}", row.join("\t")).unwrap();
            }
            writeln!(s, "determinant\t{}", out.determinant).unwrap();
            if let Some(ts) = &out.tuples {
                for t in ts {
                    let cols: Vec<String> = t.iter().map(|r| join(r)).collect();
                    writeln!(s, "tuple\t{}", cols.join("/")).unwrap();
                }
            }
            s
        }
    })
}

fn cmd_homology(kind: &HomologyKind, guard: usize, format: Format) -> Outcome {
    let (ck, a, m, characters) = match *kind {
        HomologyKind::Column { k, n, characters } => {
            if k == 0 || n < k {
                return Outcome::usage(format!("the column complex needs n >= k >= 1, got k={k}, n={n}"));
            }
            (ComplexKind::Column, k, n - k + 1, characters)
        }
        HomologyKind::Row { a, m, characters } => (ComplexKind::Row, a, m, characters),
    };
    let report = match check_vanishing(ck, a, m, guard, characters) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let out = HomologyOutput::from(&report);
    Outcome::ok(match format {
        Format::Json => to_json(&out),
        Format::Tsv => {
            let mut s = String::new();
            writeln!(s, "kind\t{}", out.kind).unwrap();
            writeln!(s, "A\t{}", join(&out.a)).unwrap();
            writeln!(s, "M\t{}", join(&out.m)).unwrap();
            writeln!(s, "dims\t{}", join(&out.dims)).unwrap();
            writeln!(s, "homology\t{}", join(&out.homology)).unwrap();
            writeln!(s, "vanishing_below_top\t{}", out.vanishing_below_top).unwrap();
            let hyp = out.conjecture_hypothesis.map_or("null".to_string(), |b| b.to_string());
            writeln!(s, "conjecture_hypothesis\t{hyp}").unwrap();
            writeln!(s, "certificate\t{}", out.certificate).unwrap();
            writeln!(s, "status\t{}", out.status).unwrap();
            if let Some(ch) = &out.ch_top {
                for t in ch {
                    writeln!(s, "ch_top\t{}\t{}", join(&t.mu), t.coeff).unwrap();
                }
            }
            s
        }
    })
}
