//! Machine-readable reports. Every command produces one [`Report`] envelope;
//! the `results` payload is deterministic for a fixed input, seed, and flag
//! set, while `timing_ms` is the only field allowed to vary between runs.

use hyperspec_core::charpoly::{CharPoly, CharRoot};
use hyperspec_core::{
    BoundReport, ConnectivityResult, EigenPair, KnownPairLabel, KnownPairsReport, SolverConfig,
};
use num_rational::BigRational;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub input_digest: String,
    pub results: T,
    pub warnings: Vec<String>,
    pub timing_ms: u64,
}

impl<T: Serialize> Report<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report payloads are plain data")
    }
}

#[derive(Debug, Serialize)]
pub struct InfoResult {
    pub n: usize,
    pub edge_count: usize,
    pub mce: Option<usize>,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub regular_k: Option<usize>,
    pub components: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct TensorEntryOut {
    pub indices: Vec<usize>,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct TensorResult {
    pub kind: String,
    pub order: usize,
    pub nonzeros: usize,
    pub entries: Vec<TensorEntryOut>,
}

#[derive(Debug, Serialize)]
pub struct ConfigEcho {
    pub tol: f64,
    pub max_iter: usize,
    pub restarts: usize,
    pub seed: u64,
    pub shift: String,
    pub perturbation: f64,
}

impl ConfigEcho {
    pub fn from(cfg: &SolverConfig) -> Self {
        Self {
            tol: cfg.tol,
            max_iter: cfg.max_iter,
            restarts: cfg.restarts,
            seed: cfg.seed,
            shift: match cfg.shift_policy {
                hyperspec_core::ShiftPolicy::Auto => "auto".into(),
                hyperspec_core::ShiftPolicy::Fixed(g) => format!("{g}"),
            },
            perturbation: cfg.perturbation,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PairOut {
    pub lambda: f64,
    pub x: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

impl PairOut {
    pub fn from(pair: &EigenPair) -> Self {
        Self {
            lambda: pair.lambda,
            x: pair.x.clone(),
            residual: pair.residual,
            iterations: pair.iterations,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundOut {
    pub name: String,
    pub pair_index: usize,
    pub value: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub slack: f64,
    pub pass: bool,
}

pub fn bounds_out(report: &BoundReport) -> Vec<BoundOut> {
    report
        .rows
        .iter()
        .map(|r| BoundOut {
            name: r.name.to_string(),
            pair_index: r.pair_index,
            value: r.value,
            lower: r.lower.is_finite().then_some(r.lower),
            upper: r.upper.is_finite().then_some(r.upper),
            slack: r.slack,
            pass: r.pass,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct EigResult {
    pub kind: String,
    pub order: usize,
    pub eig_type: String,
    pub pairs: Vec<PairOut>,
    pub dropped: usize,
    pub bounds: Vec<BoundOut>,
    pub config: ConfigEcho,
}

#[derive(Debug, Serialize)]
pub struct KnownPairOut {
    pub pair: String,
    pub lambda: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub kind: String,
    pub order: usize,
    pub checks: Vec<KnownPairOut>,
    pub all_pass: bool,
}

pub fn verify_out(kind: String, order: usize, report: &KnownPairsReport) -> VerifyResult {
    VerifyResult {
        kind,
        order,
        checks: report
            .checks
            .iter()
            .map(|c| KnownPairOut {
                pair: match c.label {
                    KnownPairLabel::Ones => "(0, ones)".into(),
                    KnownPairLabel::Basis(j) => format!("(d({j}), e^({j}))"),
                },
                lambda: c.lambda,
                residual: c.residual,
                pass: c.pass,
            })
            .collect(),
        all_pass: report.all_pass,
    }
}

#[derive(Debug, Serialize)]
pub struct ConnectivityOut {
    pub order: usize,
    /// `null` when every slice is infeasible (single-vertex input).
    pub alpha_g: Option<f64>,
    pub argmin_j: usize,
    pub x_min: Vec<f64>,
    pub per_j_values: Vec<Option<f64>>,
    pub first_order_residual: f64,
    pub converged: bool,
    pub optimizer_verdict: String,
    pub component_count: usize,
    pub components_verdict: String,
    pub verdicts_agree: bool,
    pub config: ConfigEcho,
}

pub fn connectivity_out(
    order: usize,
    result: &ConnectivityResult,
    component_count: usize,
    cfg: &SolverConfig,
) -> ConnectivityOut {
    let finite = |v: f64| v.is_finite().then_some(v);
    let optimizer_verdict = if !result.alpha_g.is_finite() || result.alpha_g > 1e-6 {
        "connected"
    } else if result.alpha_g <= 1e-8 {
        "disconnected"
    } else {
        "inconclusive"
    };
    let components_verdict = if component_count == 1 {
        "connected"
    } else {
        "disconnected"
    };
    ConnectivityOut {
        order,
        alpha_g: finite(result.alpha_g),
        argmin_j: result.argmin_j,
        x_min: result.x_min.clone(),
        per_j_values: result.per_j_values.iter().map(|&v| finite(v)).collect(),
        first_order_residual: result.first_order_residual,
        converged: result.converged,
        optimizer_verdict: optimizer_verdict.into(),
        component_count,
        components_verdict: components_verdict.into(),
        verdicts_agree: optimizer_verdict == components_verdict,
        config: ConfigEcho::from(cfg),
    }
}

#[derive(Debug, Serialize)]
pub struct ProductResult {
    pub n: usize,
    pub edge_count: usize,
    pub mce_match: bool,
    pub hypergraph: serde_json::Value,
    /// `[a, b, product_id]` triples.
    pub index_map: Vec<[usize; 3]>,
}

#[derive(Debug, Serialize)]
pub struct RootOut {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize)]
pub struct TraceIdentityOut {
    pub root_sum: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct CharpolyResult {
    pub kind: String,
    pub order: usize,
    pub degree: usize,
    /// Ascending exact coefficients, `p/q` strings.
    pub coefficients: Vec<String>,
    pub roots: Vec<RootOut>,
    pub trace_identity: TraceIdentityOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<SpectrumCheckOut>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumCheckOut {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

pub fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn charpoly_core(
    kind: String,
    order: usize,
    cp: &CharPoly,
    expected: &BigRational,
) -> CharpolyResult {
    let root_sum = cp.root_sum_exact();
    CharpolyResult {
        kind,
        order,
        degree: cp.degree(),
        coefficients: cp.coeffs().iter().map(rational_str).collect(),
        roots: cp
            .roots()
            .iter()
            .map(|r: &CharRoot| RootOut {
                re: r.value.re,
                im: r.value.im,
                multiplicity: r.multiplicity,
            })
            .collect(),
        trace_identity: TraceIdentityOut {
            root_sum: rational_str(&root_sum),
            expected: rational_str(expected),
            pass: &root_sum == expected,
        },
        check: None,
    }
}
