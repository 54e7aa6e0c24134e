//! Iterative H- and Z-eigenpair computation with residual certification.
//!
//! Two iterations are provided:
//!
//! - [`h_power`]: the higher-order power iteration for nonnegative tensors.
//!   The iterate is `x ← (T x^{m-1})^{[1/(m-1)]}` normalized in the max
//!   norm; the eigenvalue is bracketed by the min/max ratios
//!   `(T x^{m-1})_i / x_i^{m-1}`, and convergence is declared when that
//!   bracket closes below the tolerance.
//! - [`z_shss`]: the shifted symmetric power iteration
//!   `x ← normalize(T x^{m-1} + γ x)`. With `γ = m · max_i Σ |t_{i…}|` the
//!   shifted objective is convex on the sphere, and the Rayleigh value
//!   ascends monotonically. Each start is also run against `-T` so that
//!   eigenvalues at both ends of the spectrum are collected.
//!
//! Every returned pair carries a residual computed by a fresh contraction,
//! independent of the iteration that produced it.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use thiserror::Error;

use crate::model::ModelError;
use crate::rng::SplitMix64;
use crate::tensor::{TensorError, TensorKind, TensorOperator};

/// Residual threshold for the closed-form pairs checked by
/// [`verify_known_pairs`].
pub const KNOWN_PAIR_TOL: f64 = 1e-12;

/// Slack allowed when instantiating spectral bounds.
pub const BOUND_TOL: f64 = 1e-9;

/// Tolerance for merging Z-eigenpairs that agree up to sign.
pub const Z_DEDUP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    H,
    Z,
}

/// A certified eigenpair. For H-pairs the eigenvector is scaled to unit max
/// norm and the residual is `‖T x^{m-1} - λ x^{[m-1]}‖_∞`; for Z-pairs the
/// eigenvector has unit Euclidean norm and the residual is
/// `‖T x^{m-1} - λ x‖_∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub lambda: f64,
    pub x: Vec<f64>,
    pub kind: PairKind,
    pub residual: f64,
    pub iterations: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShiftPolicy {
    /// `γ = m · max_i Σ_{i_2..i_m} |t_{i i_2 … i_m}|`.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub restarts: usize,
    pub seed: u64,
    pub shift_policy: ShiftPolicy,
    /// Added to every coordinate of the power-method iterate; restores
    /// convergence on reducible tensors (disconnected hypergraphs) at the
    /// cost of an `O(ε)` residual.
    pub perturbation: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 10_000,
            restarts: 20,
            seed: 0,
            shift_policy: ShiftPolicy::Auto,
            perturbation: 0.0,
        }
    }
}

#[derive(Debug, Error)]
pub enum EigenError {
    #[error("{operation} does not support the {kind:?} kind")]
    KindUnsupported {
        operation: &'static str,
        kind: TensorKind,
    },
    #[error("iteration did not converge; best residual {}", best.residual)]
    NotConverged { best: Box<EigenPair> },
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

fn l2_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `‖T x^{m-1} - λ x^{[m-1]}‖_∞` after scaling `x` to unit max norm.
/// H-pairs are scale-invariant, so the normalization pins the metric.
pub fn h_residual(op: &TensorOperator, lambda: f64, x: &[f64]) -> f64 {
    let scale = inf_norm(x);
    if scale == 0.0 {
        return f64::INFINITY;
    }
    let xn: Vec<f64> = x.iter().map(|v| v / scale).collect();
    let y = match op.apply(&xn) {
        Ok(y) => y,
        Err(_) => return f64::INFINITY,
    };
    let p = (op.order() - 1) as i32;
    y.iter()
        .zip(&xn)
        .map(|(yi, xi)| (yi - lambda * xi.powi(p)).abs())
        .fold(0.0f64, f64::max)
}

/// `‖T x^{m-1} - λ x‖_∞`; the caller keeps `‖x‖_2 = 1`.
pub fn z_residual(op: &TensorOperator, lambda: f64, x: &[f64]) -> f64 {
    let y = match op.apply(x) {
        Ok(y) => y,
        Err(_) => return f64::INFINITY,
    };
    y.iter()
        .zip(x)
        .map(|(yi, xi)| (yi - lambda * xi).abs())
        .fold(0.0f64, f64::max)
}

/// Dominant H-eigenpair of a nonnegative operator by the higher-order power
/// iteration, with the eigenvalue bracketed by Collatz–Wielandt ratios.
pub fn h_power(op: &TensorOperator, cfg: &SolverConfig) -> Result<EigenPair, EigenError> {
    if !op.kind().is_nonnegative() {
        return Err(EigenError::KindUnsupported {
            operation: "h_power",
            kind: op.kind(),
        });
    }
    let n = op.dimension();
    let p = op.order() - 1;
    let mut x = vec![1.0f64; n];
    let mut best: Option<(f64, Vec<f64>, f64, usize)> = None; // (gap, x, lambda, iter)

    for it in 1..=cfg.max_iter {
        let mut y = op.apply(&x)?;
        if cfg.perturbation > 0.0 {
            for yi in &mut y {
                *yi += cfg.perturbation;
            }
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            if x[i] > 0.0 {
                let r = y[i] / x[i].powi(p as i32);
                lo = lo.min(r);
                hi = hi.max(r);
            }
        }
        if !lo.is_finite() || !hi.is_finite() {
            break;
        }
        let lambda = 0.5 * (lo + hi);
        let gap = hi - lo;
        if best.as_ref().map(|b| gap < b.0).unwrap_or(true) {
            best = Some((gap, x.clone(), lambda, it));
        }
        if gap <= cfg.tol {
            let residual = h_residual(op, lambda, &x);
            let pair = EigenPair {
                lambda,
                x,
                kind: PairKind::H,
                residual,
                iterations: it,
                seed: cfg.seed,
            };
            if residual <= cfg.tol.max(2.0 * cfg.perturbation) {
                return Ok(pair);
            }
            return Err(EigenError::NotConverged {
                best: Box::new(pair),
            });
        }
        // Next iterate: the (m-1)-th root restores the fixed-point scaling.
        let mut xn: Vec<f64> = y.iter().map(|&v| v.max(0.0).powf(1.0 / p as f64)).collect();
        let mx = inf_norm(&xn);
        if mx == 0.0 {
            // Zero image: the tensor annihilates this cone direction.
            let residual = h_residual(op, 0.0, &x);
            let pair = EigenPair {
                lambda: 0.0,
                x,
                kind: PairKind::H,
                residual,
                iterations: it,
                seed: cfg.seed,
            };
            if residual <= cfg.tol {
                return Ok(pair);
            }
            return Err(EigenError::NotConverged {
                best: Box::new(pair),
            });
        }
        for v in &mut xn {
            *v /= mx;
        }
        x = xn;
    }

    let (_, bx, blambda, bit) = best.expect("at least one iteration ran");
    let residual = h_residual(op, blambda, &bx);
    Err(EigenError::NotConverged {
        best: Box::new(EigenPair {
            lambda: blambda,
            x: bx,
            kind: PairKind::H,
            residual,
            iterations: bit,
            seed: cfg.seed,
        }),
    })
}

/// Result of a Z-eigenpair sweep: certified pairs sorted by eigenvalue
/// descending, plus the number of runs dropped for non-convergence.
#[derive(Debug, Clone)]
pub struct ZSweep {
    pub pairs: Vec<EigenPair>,
    pub dropped: usize,
}

/// Z-eigenpairs of a symmetric operator by the shifted symmetric power
/// iteration from the constant start plus `cfg.restarts` seeded random
/// starts, each run in both spectral directions.
pub fn z_shss(op: &TensorOperator, cfg: &SolverConfig) -> Result<ZSweep, EigenError> {
    if !op.kind().is_symmetric() {
        return Err(EigenError::KindUnsupported {
            operation: "z_shss",
            kind: op.kind(),
        });
    }
    let n = op.dimension();
    let gamma = match cfg.shift_policy {
        ShiftPolicy::Auto => (op.order() as f64 * op.max_abs_row_sum()).max(1.0),
        ShiftPolicy::Fixed(g) => g,
    };

    let mut rng = SplitMix64::new(cfg.seed);
    let constant = vec![1.0 / (n as f64).sqrt(); n];
    let mut starts = vec![constant];
    for _ in 0..cfg.restarts {
        starts.push(rng.unit_vector(n));
    }

    let mut found: Vec<EigenPair> = Vec::new();
    let mut dropped = 0usize;
    for x0 in &starts {
        for dir in [1.0f64, -1.0] {
            match ss_ascent(op, x0.clone(), gamma, dir, cfg) {
                Some((lambda, x, iterations)) => {
                    let residual = z_residual(op, lambda, &x);
                    if residual <= cfg.tol * 10.0 {
                        found.push(EigenPair {
                            lambda,
                            x,
                            kind: PairKind::Z,
                            residual,
                            iterations,
                            seed: cfg.seed,
                        });
                    } else {
                        dropped += 1;
                    }
                }
                None => dropped += 1,
            }
        }
    }

    // Deduplicate by (λ, ±x).
    let mut pairs: Vec<EigenPair> = Vec::new();
    for cand in found {
        let dup = pairs.iter().any(|p| {
            if (p.lambda - cand.lambda).abs() > Z_DEDUP_TOL {
                return false;
            }
            let d_minus: f64 =
                p.x.iter()
                    .zip(&cand.x)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
            let d_plus: f64 =
                p.x.iter()
                    .zip(&cand.x)
                    .map(|(a, b)| (a + b) * (a + b))
                    .sum::<f64>()
                    .sqrt();
            d_minus.min(d_plus) <= Z_DEDUP_TOL
        });
        if !dup {
            pairs.push(cand);
        }
    }
    pairs.sort_by(|a, b| b.lambda.total_cmp(&a.lambda));
    Ok(ZSweep { pairs, dropped })
}

/// One shifted ascent on `dir * T`; returns the eigenvalue with respect to
/// the original operator.
///
/// Degenerate eigenpairs (a tangent direction whose curvature matches the
/// eigenvalue itself) make the iteration stall with algebraic instead of
/// geometric decay, typically while a few coordinates creep toward zero.
/// When progress stagnates, near-zero coordinates are snapped to exact zero
/// and the ascent continues; zero sets of the contraction are invariant, so
/// the restricted iteration converges at the usual rate. The returned pair
/// is still certified by a fresh residual, so the heuristic can only help.
fn ss_ascent(
    op: &TensorOperator,
    mut x: Vec<f64>,
    gamma0: f64,
    dir: f64,
    cfg: &SolverConfig,
) -> Option<(f64, Vec<f64>, usize)> {
    let mut gamma = gamma0;
    let mut phi_prev = f64::NEG_INFINITY;
    let mut doublings = 0u32;
    let mut checkpoint_res = f64::INFINITY;
    let mut since_checkpoint = 0usize;
    let mut stagnant_checkpoints = 0u32;
    for it in 1..=cfg.max_iter {
        let ax = op.apply(&x).ok()?;
        let lambda = dot(&x, &ax);
        let residual = ax
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - lambda * xi).abs())
            .fold(0.0f64, f64::max);
        if residual <= cfg.tol {
            return Some((lambda, x, it));
        }
        since_checkpoint += 1;
        if since_checkpoint >= 400 {
            since_checkpoint = 0;
            if residual > 0.25 * checkpoint_res {
                stagnant_checkpoints += 1;
            } else {
                stagnant_checkpoints = 0;
            }
            checkpoint_res = residual;
            if stagnant_checkpoints >= 2 {
                stagnant_checkpoints = 0;
                let peak = inf_norm(&x);
                let mut snapped = false;
                for xi in &mut x {
                    if *xi != 0.0 && xi.abs() < 0.25 * peak {
                        *xi = 0.0;
                        snapped = true;
                    }
                }
                if snapped {
                    let nm = l2_norm(&x);
                    if nm < 1e-300 {
                        return None;
                    }
                    for xi in &mut x {
                        *xi /= nm;
                    }
                    phi_prev = f64::NEG_INFINITY;
                    checkpoint_res = f64::INFINITY;
                    continue;
                }
            }
        }
        let phi = dir * lambda;
        if phi < phi_prev - 1e-9 * (1.0 + phi.abs()) {
            // The shifted objective must not descend; enlarge the shift.
            if doublings >= 6 {
                return None;
            }
            gamma *= 2.0;
            doublings += 1;
            phi_prev = f64::NEG_INFINITY;
        } else {
            phi_prev = phi;
        }
        let u: Vec<f64> = ax
            .iter()
            .zip(&x)
            .map(|(a, xi)| dir * a + gamma * xi)
            .collect();
        let nm = l2_norm(&u);
        if nm < 1e-300 {
            return None;
        }
        x = u.iter().map(|v| v / nm).collect();
    }
    None
}

/// Labels for the closed-form Laplacian pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownPairLabel {
    /// `(0, (1,…,1))`.
    Ones,
    /// `(d(v_j), e^{(j)})`.
    Basis(crate::model::Vertex),
}

#[derive(Debug, Clone)]
pub struct KnownPairCheck {
    pub label: KnownPairLabel,
    pub lambda: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct KnownPairsReport {
    pub checks: Vec<KnownPairCheck>,
    pub all_pass: bool,
}

/// Certifies the Laplacian's closed-form H-pairs: `(0, 1)` and each
/// `(d(v_j), e^{(j)})`. The basis pairs satisfy the eigenvalue equation
/// exactly when every edge through `j` has three or more vertices; on
/// smaller edges the defect is reported honestly (a singleton at `j` shifts
/// the diagonal, a pair edge `{i, j}` leaks onto coordinate `i`).
pub fn verify_known_pairs(op: &TensorOperator) -> Result<KnownPairsReport, EigenError> {
    if op.kind() != TensorKind::Laplacian {
        return Err(EigenError::KindUnsupported {
            operation: "verify_known_pairs",
            kind: op.kind(),
        });
    }
    if op.order() < 3 {
        return Err(EigenError::Tensor(TensorError::OrderTooSmall {
            m: op.order(),
            required: 3,
        }));
    }
    let n = op.dimension();
    let mut checks = Vec::with_capacity(n + 1);

    let ones = vec![1.0; n];
    let r = h_residual(op, 0.0, &ones);
    checks.push(KnownPairCheck {
        label: KnownPairLabel::Ones,
        lambda: 0.0,
        residual: r,
        pass: r <= KNOWN_PAIR_TOL,
    });

    for j in 1..=n {
        let mut basis = vec![0.0; n];
        basis[j - 1] = 1.0;
        let lambda = op.degrees().degree(j) as f64;
        let r = h_residual(op, lambda, &basis);
        checks.push(KnownPairCheck {
            label: KnownPairLabel::Basis(j),
            lambda,
            residual: r,
            pass: r <= KNOWN_PAIR_TOL,
        });
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(KnownPairsReport { checks, all_pass })
}

/// One instantiated bound. `pass` allows [`BOUND_TOL`] slack; `slack` is
/// the distance to the nearest violated side (negative when violated).
#[derive(Debug, Clone)]
pub struct BoundRow {
    pub pair_index: usize,
    pub name: &'static str,
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    pub slack: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
    pub all_pass: bool,
}

/// Instantiates the applicable spectral bounds for each pair: degree bounds
/// for adjacency H-pairs, `[0, 2Δ]` for Laplacian H-pairs, `[0, 2]` for the
/// normalized Laplacians, `Δ / max|x_i|` for adjacency Z-pairs, and the
/// disk bound for every H-pair.
pub fn bound_report(op: &TensorOperator, pairs: &[EigenPair]) -> BoundReport {
    let delta = op.degrees().delta_max() as f64;
    let mut rows = Vec::new();

    for (idx, pair) in pairs.iter().enumerate() {
        let lam = pair.lambda;
        match (pair.kind, op.kind()) {
            (PairKind::H, TensorKind::Adjacency) => {
                rows.push(interval_row(
                    idx,
                    "adjacency H within max degree",
                    lam,
                    -delta,
                    delta,
                ));
            }
            (PairKind::H, TensorKind::Laplacian) => {
                rows.push(interval_row(
                    idx,
                    "laplacian H within [0, 2 max degree]",
                    lam,
                    0.0,
                    2.0 * delta,
                ));
            }
            (PairKind::H, TensorKind::NormalizedLaplacianRW)
            | (PairKind::H, TensorKind::NormalizedLaplacianSym) => {
                rows.push(interval_row(
                    idx,
                    "normalized laplacian H within [0, 2]",
                    lam,
                    0.0,
                    2.0,
                ));
            }
            (PairKind::H, TensorKind::NormalizedAdjacency) => {
                rows.push(interval_row(
                    idx,
                    "stochastic H within [-1, 1]",
                    lam,
                    -1.0,
                    1.0,
                ));
            }
            (PairKind::Z, TensorKind::Adjacency) => {
                let xp = inf_norm(&pair.x);
                if xp > 0.0 {
                    let b = delta / xp;
                    rows.push(interval_row(
                        idx,
                        "adjacency Z within max degree over peak",
                        lam,
                        -b,
                        b,
                    ));
                }
            }
            _ => {}
        }
        if pair.kind == PairKind::H {
            let (diag, radii) = op.gershgorin();
            let slack = diag
                .iter()
                .zip(&radii)
                .map(|(c, r)| r - (lam - c).abs())
                .fold(f64::NEG_INFINITY, f64::max);
            rows.push(BoundRow {
                pair_index: idx,
                name: "within a gershgorin disk",
                value: lam,
                lower: f64::NEG_INFINITY,
                upper: f64::INFINITY,
                slack,
                pass: slack >= -BOUND_TOL,
            });
        }
    }
    let all_pass = rows.iter().all(|r| r.pass);
    BoundReport { rows, all_pass }
}

fn interval_row(
    pair_index: usize,
    name: &'static str,
    value: f64,
    lower: f64,
    upper: f64,
) -> BoundRow {
    let slack = (value - lower).min(upper - value);
    BoundRow {
        pair_index,
        name,
        value,
        lower,
        upper,
        slack,
        pass: slack >= -BOUND_TOL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Hypergraph;

    fn three_regular() -> Hypergraph {
        Hypergraph::new(3, [vec![1, 2], vec![2, 3], vec![1, 3], vec![1, 2, 3]]).unwrap()
    }

    fn five_vertex_fixture() -> Hypergraph {
        Hypergraph::new(5, [vec![1], vec![2, 3], vec![1, 4, 5]]).unwrap()
    }

    #[test]
    fn h_power_on_regular_adjacency() {
        let op = TensorOperator::new(&three_regular(), TensorKind::Adjacency, 3).unwrap();
        let pair = h_power(&op, &SolverConfig::default()).unwrap();
        assert!((pair.lambda - 3.0).abs() < 1e-9);
        assert!(pair.residual <= 1e-10);
        for v in &pair.x {
            assert!((v - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn h_power_on_single_edge() {
        let h = Hypergraph::new(2, [vec![1, 2]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 3).unwrap();
        let pair = h_power(&op, &SolverConfig::default()).unwrap();
        assert!((pair.lambda - 1.0).abs() < 1e-10);
    }

    #[test]
    fn h_power_stochastic_fixed_point() {
        let op = TensorOperator::new(&five_vertex_fixture(), TensorKind::NormalizedAdjacency, 3)
            .unwrap();
        let pair = h_power(&op, &SolverConfig::default()).unwrap();
        assert!((pair.lambda - 1.0).abs() < 1e-12);
        assert!(pair.residual <= 1e-12);
    }

    #[test]
    fn h_power_rejects_signed_kinds() {
        let op = TensorOperator::new(&three_regular(), TensorKind::Laplacian, 3).unwrap();
        assert!(matches!(
            h_power(&op, &SolverConfig::default()),
            Err(EigenError::KindUnsupported { .. })
        ));
    }

    #[test]
    fn z_sweep_finds_regular_value() {
        let op = TensorOperator::new(&three_regular(), TensorKind::Adjacency, 3).unwrap();
        let sweep = z_shss(&op, &SolverConfig::default()).unwrap();
        let target = 3.0f64.sqrt();
        assert!(
            sweep.pairs.iter().any(|p| (p.lambda - target).abs() < 1e-6),
            "missing sqrt(3), found {:?}",
            sweep.pairs.iter().map(|p| p.lambda).collect::<Vec<_>>()
        );
    }

    #[test]
    fn z_sweep_laplacian_contains_zero() {
        let op = TensorOperator::new(&five_vertex_fixture(), TensorKind::Laplacian, 3).unwrap();
        let sweep = z_shss(&op, &SolverConfig::default()).unwrap();
        assert!(sweep.pairs.iter().any(|p| p.lambda.abs() < 1e-8));
    }

    #[test]
    fn z_sweep_matrix_case_finds_both_ends() {
        let h = Hypergraph::new(2, [vec![1, 2]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 2).unwrap();
        let sweep = z_shss(&op, &SolverConfig::default()).unwrap();
        assert!(sweep.pairs.iter().any(|p| (p.lambda - 1.0).abs() < 1e-8));
        assert!(sweep.pairs.iter().any(|p| (p.lambda + 1.0).abs() < 1e-8));
    }

    #[test]
    fn z_sweep_rejects_row_normalized_kind() {
        let op =
            TensorOperator::new(&three_regular(), TensorKind::NormalizedLaplacianRW, 3).unwrap();
        assert!(matches!(
            z_shss(&op, &SolverConfig::default()),
            Err(EigenError::KindUnsupported { .. })
        ));
    }

    #[test]
    fn known_pairs_hold_on_wide_edges() {
        let h = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Laplacian, 3).unwrap();
        let report = verify_known_pairs(&op).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.checks.len(), 4);
    }

    /// On the five-vertex fixture the small edges carry exact defects: the
    /// singleton at 1 lowers the diagonal (residual 1), the pair edge {2,3}
    /// leaks 1/3 onto the opposite coordinate.
    #[test]
    fn known_pairs_report_exact_defects_on_small_edges() {
        let op = TensorOperator::new(&five_vertex_fixture(), TensorKind::Laplacian, 3).unwrap();
        let report = verify_known_pairs(&op).unwrap();
        let by_label = |label: KnownPairLabel| {
            report
                .checks
                .iter()
                .find(|c| c.label == label)
                .unwrap()
                .residual
        };
        assert!(by_label(KnownPairLabel::Ones) <= 1e-12);
        assert!((by_label(KnownPairLabel::Basis(1)) - 1.0).abs() < 1e-12);
        assert!((by_label(KnownPairLabel::Basis(2)) - 1.0 / 3.0).abs() < 1e-12);
        assert!((by_label(KnownPairLabel::Basis(3)) - 1.0 / 3.0).abs() < 1e-12);
        assert!(by_label(KnownPairLabel::Basis(4)) <= 1e-12);
        assert!(by_label(KnownPairLabel::Basis(5)) <= 1e-12);
    }

    #[test]
    fn scale_invariance_of_h_residual() {
        let op = TensorOperator::new(&three_regular(), TensorKind::Adjacency, 3).unwrap();
        let pair = h_power(&op, &SolverConfig::default()).unwrap();
        let doubled: Vec<f64> = pair.x.iter().map(|v| 2.0 * v).collect();
        assert!(h_residual(&op, pair.lambda, &doubled) <= 1e-10);

        // Even order: the sign flip is an eigenvector for the same value.
        let h = Hypergraph::new(2, [vec![1, 2]]).unwrap();
        let even = TensorOperator::new(&h, TensorKind::Adjacency, 4).unwrap();
        let pair = h_power(&even, &SolverConfig::default()).unwrap();
        let flipped: Vec<f64> = pair.x.iter().map(|v| -v).collect();
        assert!(h_residual(&even, pair.lambda, &flipped) <= 1e-10);
    }

    #[test]
    fn z_pairs_are_unit_vectors() {
        let op = TensorOperator::new(&three_regular(), TensorKind::Adjacency, 3).unwrap();
        let sweep = z_shss(&op, &SolverConfig::default()).unwrap();
        assert!(!sweep.pairs.is_empty());
        for p in &sweep.pairs {
            let norm: f64 = p.x.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn bound_report_on_regular_fixture() {
        let op = TensorOperator::new(&three_regular(), TensorKind::Adjacency, 3).unwrap();
        let h_pair = h_power(&op, &SolverConfig::default()).unwrap();
        let sweep = z_shss(&op, &SolverConfig::default()).unwrap();
        let mut pairs = vec![h_pair];
        pairs.extend(sweep.pairs);
        let report = bound_report(&op, &pairs);
        assert!(report.all_pass, "{:?}", report.rows);
        assert!(report.rows.iter().any(|r| r.name.contains("gershgorin")));
    }
}
