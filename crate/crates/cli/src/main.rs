//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input parse error, 3 violated precondition,
//! 4 solver non-convergence (a partial report is still emitted).
//!
//! Human-readable tables go to stdout by default; `--json` switches stdout
//! to the report envelope, `-o FILE` writes the envelope to a file. All
//! randomized commands take `--seed` (default 0) and echo the full solver
//! configuration in the report, so identical invocations produce
//! byte-identical `results` payloads.

mod formats;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use hyperspec_core::charpoly::{
    charpoly_n2, cospectrality_check, shift_spectrum_check, CharPolyError,
};
use hyperspec_core::tensor::DEFAULT_ENTRY_CAP;
use hyperspec_core::{
    analytic_connectivity, bound_report, cartesian_product, h_power, verify_known_pairs, z_shss,
    EigenError, Hypergraph, ShiftPolicy, SolverConfig, TensorError, TensorKind, TensorOperator,
};

use formats::{digest, parse_hypergraph, to_json, Format, ParseError};
use report::{
    bounds_out, charpoly_core, connectivity_out, rational_str, verify_out, ConfigEcho, EigResult,
    InfoResult, PairOut, ProductResult, Report, SpectrumCheckOut, TensorEntryOut, TensorResult,
};

#[derive(Parser)]
#[command(
    name = "hyperspec",
    version,
    about = "Connectivity hypermatrices and eigenpairs of general hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Lines,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Auto => Format::Auto,
            FormatArg::Lines => Format::Lines,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Adjacency,
    Laplacian,
    Signless,
    NormalizedRw,
    NormalizedSym,
    NormalizedAdjacency,
}

impl From<KindArg> for TensorKind {
    fn from(k: KindArg) -> TensorKind {
        match k {
            KindArg::Adjacency => TensorKind::Adjacency,
            KindArg::Laplacian => TensorKind::Laplacian,
            KindArg::Signless => TensorKind::SignlessLaplacian,
            KindArg::NormalizedRw => TensorKind::NormalizedLaplacianRW,
            KindArg::NormalizedSym => TensorKind::NormalizedLaplacianSym,
            KindArg::NormalizedAdjacency => TensorKind::NormalizedAdjacency,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EigTypeArg {
    H,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Cospectral,
    Shift,
}

#[derive(Args)]
struct IoArgs {
    /// Input format (auto sniffs JSON by a leading brace).
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Emit the JSON report on stdout instead of the human table.
    #[arg(long)]
    json: bool,
    /// Write the JSON report to a file.
    #[arg(short, long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    restarts: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 10000)]
    max_iter: usize,
    /// Power-method perturbation; set around 1e-12 to restore convergence
    /// on disconnected inputs.
    #[arg(long, default_value_t = 0.0)]
    perturb: f64,
    /// Shift for the Z iteration: "auto" or a number.
    #[arg(long, default_value = "auto")]
    shift: String,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, AppError> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(AppError::precondition("--tol must be positive"));
        }
        if self.restarts < 1 {
            return Err(AppError::precondition("--restarts must be at least 1"));
        }
        let shift_policy = if self.shift == "auto" {
            ShiftPolicy::Auto
        } else {
            let g: f64 = self.shift.parse().map_err(|_| {
                AppError::precondition(format!("bad --shift value {:?}", self.shift))
            })?;
            ShiftPolicy::Fixed(g)
        };
        Ok(SolverConfig {
            tol: self.tol,
            max_iter: self.max_iter,
            restarts: self.restarts,
            seed: self.seed,
            shift_policy,
            perturbation: self.perturb,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structure summary: sizes, degrees, regularity, components.
    Info {
        file: std::path::PathBuf,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Stream the nonzero entries of a connectivity hypermatrix.
    Tensor {
        file: std::path::PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Tensor order; defaults to the maximum edge cardinality.
        #[arg(long)]
        order: Option<usize>,
        /// Print exact rational values (errors when entries are irrational).
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        io: IoArgs,
    },
    /// H- or Z-eigenpairs with residuals and bound checks.
    Eig {
        file: std::path::PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "type", value_enum)]
        eig_type: EigTypeArg,
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Closed-form Laplacian eigenpair certification.
    Verify {
        file: std::path::PathBuf,
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Analytic connectivity by projected gradient, cross-checked against
    /// the component count.
    Connectivity {
        file: std::path::PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Cartesian product of two hypergraphs with its vertex index map.
    Product {
        file_g: std::path::PathBuf,
        file_h: std::path::PathBuf,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Exact characteristic polynomial for 2-vertex inputs.
    Charpoly {
        file: std::path::PathBuf,
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: KindArg,
        #[arg(long)]
        order: Option<usize>,
        /// Extra spectrum checks: cospectrality of the two normalized
        /// Laplacians, or the 1-λ shift between normalized adjacency and
        /// Laplacian.
        #[arg(long, value_enum)]
        check: Option<CheckArg>,
        #[command(flatten)]
        io: IoArgs,
    },
}

struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    fn precondition(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<ParseError> for AppError {
    fn from(e: ParseError) -> Self {
        Self {
            code: 2,
            message: format!("parse error: {e}"),
        }
    }
}

impl From<TensorError> for AppError {
    fn from(e: TensorError) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}

impl From<CharPolyError> for AppError {
    fn from(e: CharPolyError) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn load(path: &std::path::Path, format: FormatArg) -> Result<Hypergraph, AppError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_hypergraph(&text, format.into())?)
}

fn emit<T: Serialize>(io: &IoArgs, report: &Report<T>, human: &str) -> Result<(), AppError> {
    if let Some(path) = &io.output {
        std::fs::write(path, report.to_json())?;
    }
    if io.json {
        println!("{}", report.to_json());
    } else {
        print!("{human}");
    }
    Ok(())
}

fn envelope<T: Serialize>(
    command: &str,
    h: &Hypergraph,
    results: T,
    warnings: Vec<String>,
    started: Instant,
) -> Report<T> {
    Report {
        command: command.to_string(),
        input_digest: digest(h),
        results,
        warnings,
        timing_ms: started.elapsed().as_millis() as u64,
    }
}

fn default_order(h: &Hypergraph, requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| h.mce().unwrap_or(0).max(2))
}

fn entry_cap() -> u64 {
    std::env::var("HYPERSPEC_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENTRY_CAP)
}

fn run(command: Command) -> Result<u8, AppError> {
    match command {
        Command::Info { file, io } => cmd_info(&file, &io),
        Command::Tensor {
            file,
            kind,
            order,
            exact,
            io,
        } => cmd_tensor(&file, kind, order, exact, &io),
        Command::Eig {
            file,
            kind,
            eig_type,
            order,
            solver,
            io,
        } => cmd_eig(&file, kind, eig_type, order, &solver, &io),
        Command::Verify { file, order, io } => cmd_verify(&file, order, &io),
        Command::Connectivity { file, solver, io } => cmd_connectivity(&file, &solver, &io),
        Command::Product { file_g, file_h, io } => cmd_product(&file_g, &file_h, &io),
        Command::Charpoly {
            file,
            kind,
            order,
            check,
            io,
        } => cmd_charpoly(&file, kind, order, check, &io),
    }
}

fn cmd_info(file: &std::path::Path, io: &IoArgs) -> Result<u8, AppError> {
    let started = Instant::now();
    let h = load(file, io.format)?;
    let degrees = h.degrees();
    let components: Vec<Vec<usize>> = h.components().iter().map(|c| c.vertices.clone()).collect();
    let results = InfoResult {
        n: h.vertex_count(),
        edge_count: h.edge_count(),
        mce: h.mce().ok(),
        degrees: degrees.degrees().to_vec(),
        max_degree: degrees.delta_max(),
        regular_k: degrees.regular_k(),
        components: components.clone(),
    };

    let mut human = String::new();
    human.push_str(&format!("vertices: {}\n", results.n));
    human.push_str(&format!("edges: {}\n", results.edge_count));
    match results.mce {
        Some(m) => human.push_str(&format!("mce: {m}\n")),
        None => human.push_str("mce: (no edges)\n"),
    }
    let deg_strs: Vec<String> = results.degrees.iter().map(|d| d.to_string()).collect();
    human.push_str(&format!("degrees: {}\n", deg_strs.join(" ")));
    human.push_str(&format!("max degree: {}\n", results.max_degree));
    match results.regular_k {
        Some(k) => human.push_str(&format!("regular: k={k}\n")),
        None => human.push_str("regular: no\n"),
    }
    human.push_str(&format!("components: {}\n", components.len()));
    for (i, comp) in components.iter().enumerate() {
        let ids: Vec<String> = comp.iter().map(|v| v.to_string()).collect();
        human.push_str(&format!("  component {}: {}\n", i + 1, ids.join(" ")));
    }

    let report = envelope("info", &h, results, Vec::new(), started);
    emit(io, &report, &human)?;
    Ok(0)
}

fn cmd_tensor(
    file: &std::path::Path,
    kind: KindArg,
    order: Option<usize>,
    exact: bool,
    io: &IoArgs,
) -> Result<u8, AppError> {
    let started = Instant::now();
    let h = load(file, io.format)?;
    let kind: TensorKind = kind.into();
    let m = default_order(&h, order);
    let op = TensorOperator::new(&h, kind, m)?;
    if exact && !op.has_rational_entries() {
        return Err(TensorError::IrrationalEntries.into());
    }

    let mut entries = Vec::new();
    let mut human = String::new();
    for entry in op.entries_with_cap(entry_cap())? {
        let value = entry.value.to_f64();
        let exact_str = entry.value.exact().map(rational_str);
        let ids: Vec<String> = entry.indices.iter().map(|v| v.to_string()).collect();
        if exact {
            human.push_str(&format!(
                "{} {}\n",
                ids.join(" "),
                exact_str.as_deref().expect("rational entries checked")
            ));
        } else {
            human.push_str(&format!("{} {}\n", ids.join(" "), value));
        }
        entries.push(TensorEntryOut {
            indices: entry.indices,
            value,
            exact: exact_str,
        });
    }
    let results = TensorResult {
        kind: kind.name().to_string(),
        order: m,
        nonzeros: entries.len(),
        entries,
    };
    let report = envelope("tensor", &h, results, Vec::new(), started);
    emit(io, &report, &human)?;
    Ok(0)
}

fn cmd_eig(
    file: &std::path::Path,
    kind: KindArg,
    eig_type: EigTypeArg,
    order: Option<usize>,
    solver: &SolverArgs,
    io: &IoArgs,
) -> Result<u8, AppError> {
    let started = Instant::now();
    let h = load(file, io.format)?;
    let kind: TensorKind = kind.into();
    let m = default_order(&h, order);
    let op = TensorOperator::new(&h, kind, m)?;
    let cfg = solver.config()?;

    let mut warnings = Vec::new();
    let mut exit = 0u8;
    let (pairs, dropped, type_name) = match eig_type {
        EigTypeArg::H => match h_power(&op, &cfg) {
            Ok(pair) => (vec![pair], 0usize, "h"),
            Err(EigenError::NotConverged { best }) => {
                warnings.push(format!(
                    "power iteration did not converge; best residual {}",
                    best.residual
                ));
                exit = 4;
                (vec![*best], 0, "h")
            }
            Err(EigenError::KindUnsupported { operation, kind }) => {
                return Err(AppError::precondition(format!(
                    "{operation} does not support the {kind:?} kind"
                )));
            }
            Err(EigenError::Tensor(e)) => return Err(e.into()),
            Err(EigenError::Model(e)) => return Err(AppError::precondition(e.to_string())),
        },
        EigTypeArg::Z => match z_shss(&op, &cfg) {
            Ok(sweep) => {
                if sweep.dropped > 0 {
                    warnings.push(format!(
                        "{} runs dropped for non-convergence",
                        sweep.dropped
                    ));
                }
                (sweep.pairs, sweep.dropped, "z")
            }
            Err(EigenError::KindUnsupported { operation, kind }) => {
                return Err(AppError::precondition(format!(
                    "{operation} does not support the {kind:?} kind"
                )));
            }
            Err(EigenError::NotConverged { .. }) => unreachable!("sweep drops, never errors"),
            Err(EigenError::Tensor(e)) => return Err(e.into()),
            Err(EigenError::Model(e)) => return Err(AppError::precondition(e.to_string())),
        },
    };

    let bounds = bound_report(&op, &pairs);
    let results = EigResult {
        kind: kind.name().to_string(),
        order: m,
        eig_type: type_name.to_string(),
        pairs: pairs.iter().map(PairOut::from).collect(),
        dropped,
        bounds: bounds_out(&bounds),
        config: ConfigEcho::from(&cfg),
    };

    let mut human = String::new();
    human.push_str(&format!(
        "kind: {}  order: {}  type: {}  seed: {}\n",
        results.kind, m, type_name, cfg.seed
    ));
    for (i, p) in results.pairs.iter().enumerate() {
        let xs: Vec<String> = p.x.iter().map(|v| format!("{v:.10}")).collect();
        human.push_str(&format!(
            "pair {}: lambda = {:.12}  residual = {:.3e}  iterations = {}\n  x = [{}]\n",
            i,
            p.lambda,
            p.residual,
            p.iterations,
            xs.join(", ")
        ));
    }
    if results.pairs.is_empty() {
        human.push_str("no converged pairs\n");
    }
    human.push_str("bounds:\n");
    for b in &results.bounds {
        human.push_str(&format!(
            "  [{}] pair {}: {} (slack {:.3e})\n",
            if b.pass { "pass" } else { "FAIL" },
            b.pair_index,
            b.name,
            b.slack
        ));
    }
    for w in &warnings {
        human.push_str(&format!("warning: {w}\n"));
    }

    let report = envelope("eig", &h, results, warnings, started);
    emit(io, &report, &human)?;
    Ok(exit)
}

fn cmd_verify(file: &std::path::Path, order: Option<usize>, io: &IoArgs) -> Result<u8, AppError> {
    let started = Instant::now();
    let h = load(file, io.format)?;
    let m = default_order(&h, order);
    let op = TensorOperator::new(&h, TensorKind::Laplacian, m)?;
    let checks = match verify_known_pairs(&op) {
        Ok(r) => r,
        Err(EigenError::Tensor(e)) => return Err(e.into()),
        Err(e) => return Err(AppError::precondition(e.to_string())),
    };
    let results = verify_out("laplacian".into(), m, &checks);

    let mut human = String::new();
    human.push_str(&format!("laplacian closed-form pairs at order {m}:\n"));
    for c in &results.checks {
        human.push_str(&format!(
            "  [{}] {}  lambda = {}  residual = {:.3e}\n",
            if c.pass { "pass" } else { "FAIL" },
            c.pair,
            c.lambda,
            c.residual
        ));
    }
    let report = envelope("verify", &h, results, Vec::new(), started);
    emit(io, &report, &human)?;
    Ok(0)
}

fn cmd_connectivity(
    file: &std::path::Path,
    solver: &SolverArgs,
    io: &IoArgs,
) -> Result<u8, AppError> {
    let started = Instant::now();
    let h = load(file, io.format)?;
    if h.edge_count() == 0 {
        return Err(AppError::precondition(
            "connectivity needs at least one edge",
        ));
    }
    let cfg = solver.config()?;
    let result = match analytic_connectivity(&h, &cfg) {
        Ok(r) => r,
        Err(EigenError::Tensor(e)) => return Err(e.into()),
        Err(e) => return Err(AppError::precondition(e.to_string())),
    };
    let m = h.mce().unwrap_or(0).max(2);
    let component_count = h.components().len();
    let mut warnings = Vec::new();
    if !result.converged {
        warnings.push(format!(
            "optimizer hit the iteration cap; first-order residual {}",
            result.first_order_residual
        ));
    }
    let results = connectivity_out(m, &result, component_count, &cfg);

    let mut human = String::new();
    match results.alpha_g {
        Some(a) => human.push_str(&format!("analytic connectivity: {a:.12}\n")),
        None => human.push_str("analytic connectivity: +inf (no feasible slice)\n"),
    }
    human.push_str(&format!("argmin vertex: {}\n", results.argmin_j));
    human.push_str(&format!(
        "optimizer verdict: {} | components: {} ({})\n",
        results.optimizer_verdict, component_count, results.components_verdict
    ));
    if !results.verdicts_agree {
        human.push_str("WARNING: verdicts disagree\n");
    }
    for w in &warnings {
        human.push_str(&format!("warning: {w}\n"));
    }

    let report = envelope("connectivity", &h, results, warnings, started);
    emit(io, &report, &human)?;
    Ok(0)
}

fn cmd_product(
    file_g: &std::path::Path,
    file_h: &std::path::Path,
    io: &IoArgs,
) -> Result<u8, AppError> {
    let started = Instant::now();
    let g = load(file_g, io.format)?;
    let h = load(file_h, io.format)?;
    let (product, map) = cartesian_product(&g, &h);

    let mut warnings = Vec::new();
    let mce_match = match (g.mce(), h.mce()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    };
    if !mce_match {
        warnings.push(
            "factors have different maximum edge cardinalities; eigenvalue additivity does not apply"
                .to_string(),
        );
    }

    let mut index_map = Vec::with_capacity(map.len());
    for a in 1..=map.n1 {
        for b in 1..=map.n2 {
            index_map.push([a, b, map.product_id(a, b)]);
        }
    }
    let results = ProductResult {
        n: product.vertex_count(),
        edge_count: product.edge_count(),
        mce_match,
        hypergraph: serde_json::from_str(&to_json(&product)).expect("canonical json"),
        index_map,
    };

    let mut human = String::new();
    human.push_str(&format!(
        "product: {} vertices, {} edges\n",
        results.n, results.edge_count
    ));
    for w in &warnings {
        human.push_str(&format!("warning: {w}\n"));
    }

    // The digest in the envelope refers to the product itself.
    let report = envelope("product", &product, results, warnings, started);
    emit(io, &report, &human)?;
    Ok(0)
}

fn cmd_charpoly(
    file: &std::path::Path,
    kind: KindArg,
    order: Option<usize>,
    check: Option<CheckArg>,
    io: &IoArgs,
) -> Result<u8, AppError> {
    let started = Instant::now();
    let h = load(file, io.format)?;
    let kind: TensorKind = kind.into();
    let m = default_order(&h, order);
    let op = TensorOperator::new(&h, kind, m)?;
    let cp = charpoly_n2(&op)?;

    let diag_sum = op.diagonal_rational(1) + op.diagonal_rational(2);
    let expected = diag_sum * BigRational::from(BigInt::from(m as i64 - 1));
    let mut results = charpoly_core(kind.name().to_string(), m, &cp, &expected);

    results.check = match check {
        None => None,
        Some(CheckArg::Cospectral) => {
            let r = cospectrality_check(&h, m)?;
            Some(SpectrumCheckOut {
                name: "cospectral normalized laplacians".into(),
                pass: r.proportional,
                detail: format!(
                    "rw degree {} vs sym degree {}",
                    r.rw.degree(),
                    r.sym.degree()
                ),
            })
        }
        Some(CheckArg::Shift) => {
            let r = shift_spectrum_check(&h, m)?;
            Some(SpectrumCheckOut {
                name: "normalized adjacency spectrum equals 1 - laplacian spectrum".into(),
                pass: r.pass && r.exact_identity,
                detail: format!(
                    "exact identity {}, max root distance {:.3e}",
                    r.exact_identity, r.max_root_distance
                ),
            })
        }
    };

    let mut human = String::new();
    human.push_str(&format!(
        "kind: {}  order: {}  degree: {}\n",
        results.kind, m, results.degree
    ));
    human.push_str(&format!(
        "coefficients (ascending): {}\n",
        results.coefficients.join(", ")
    ));
    human.push_str("roots:\n");
    for r in &results.roots {
        if r.im.abs() > 1e-12 {
            human.push_str(&format!(
                "  {} + {}i (multiplicity {})\n",
                r.re, r.im, r.multiplicity
            ));
        } else {
            human.push_str(&format!("  {} (multiplicity {})\n", r.re, r.multiplicity));
        }
    }
    human.push_str(&format!(
        "trace identity: root sum {} vs (m-1)*diagonal {} -> {}\n",
        results.trace_identity.root_sum,
        results.trace_identity.expected,
        if results.trace_identity.pass {
            "pass"
        } else {
            "FAIL"
        }
    ));
    if let Some(c) = &results.check {
        human.push_str(&format!(
            "check {}: {} ({})\n",
            c.name,
            if c.pass { "pass" } else { "FAIL" },
            c.detail
        ));
    }

    let report = envelope("charpoly", &h, results, Vec::new(), started);
    emit(io, &report, &human)?;
    Ok(0)
}
