//! Virtual symmetric connectivity hypermatrices.
//!
//! An operator is identified by `(hypergraph, kind, order m)` and is never
//! stored densely. An edge of cardinality `s` owns the `alpha(m, s)` index
//! tuples that use each of its vertices at least once; every such tuple
//! carries the coefficient `s / alpha(m, s)` (with kind-specific sign and
//! degree scaling). Diagonal positions hold the kind's diagonal plus any
//! singleton-edge contribution, merged additively so the entry stream yields
//! each nonzero position exactly once.
//!
//! Contractions do not enumerate tuples. For an edge `e` and a vertex
//! `v ∈ e`, the sum of `x_{p_2} … x_{p_m}` over all tuples from `e` whose
//! tail covers `e \ {v}` equals
//!
//! ```text
//! Σ_{T ⊆ e\{v}} (-1)^{|T|} (σ(e) - σ(T))^{m-1},    σ(S) = Σ_{u∈S} x_u,
//! ```
//!
//! a `2^{s-1}`-term inclusion–exclusion that is independent of `m` except
//! through the power. Coefficients are exact rationals; they are converted
//! to `f64` only at the contraction boundary.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::model::{DegreeProfile, Edge, Hypergraph, Vertex};

/// Default ceiling on the number of nonzeros an entry stream will agree to
/// enumerate. Contractions are not subject to it.
pub const DEFAULT_ENTRY_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("order {m} too small; this operator needs order >= {required}")]
    OrderTooSmall { m: usize, required: usize },
    #[error("normalized kinds require every vertex in an edge; vertex {vertex} is isolated")]
    IsolatedVertex { vertex: Vertex },
    #[error("vector length {got} does not match tensor dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("entry stream holds {nonzeros} nonzeros, above the cap {cap}")]
    CapExceeded { nonzeros: BigInt, cap: u64 },
    #[error("entries of this operator are irrational; exact values are unavailable")]
    IrrationalEntries,
}

/// The five connectivity hypermatrices (plus the stochastic normalized
/// adjacency, which is the identity shift of the row-normalized Laplacian).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TensorKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    /// Row-normalized Laplacian: edge entries scaled by `1/d(v_{p_1})`.
    /// Not symmetric.
    NormalizedLaplacianRW,
    /// Symmetric normalized Laplacian: edge entries scaled by
    /// `Π_j d(v_{p_j})^{-1/m}`.
    NormalizedLaplacianSym,
    /// `I - L_rw`; nonnegative with unit row sums.
    NormalizedAdjacency,
}

impl TensorKind {
    /// Entry values are invariant under index permutations. The two
    /// row-scaled kinds are not.
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            TensorKind::Adjacency
                | TensorKind::Laplacian
                | TensorKind::SignlessLaplacian
                | TensorKind::NormalizedLaplacianSym
        )
    }

    /// All entries nonnegative (power-method territory).
    pub fn is_nonnegative(self) -> bool {
        matches!(
            self,
            TensorKind::Adjacency | TensorKind::SignlessLaplacian | TensorKind::NormalizedAdjacency
        )
    }

    /// Kinds whose construction divides by vertex degrees.
    pub fn needs_positive_degrees(self) -> bool {
        matches!(
            self,
            TensorKind::NormalizedLaplacianRW
                | TensorKind::NormalizedLaplacianSym
                | TensorKind::NormalizedAdjacency
        )
    }

    /// Sign carried by edge entries: `+s/alpha` or `-s/alpha`.
    fn edge_sign(self) -> i32 {
        match self {
            TensorKind::Adjacency
            | TensorKind::SignlessLaplacian
            | TensorKind::NormalizedAdjacency => 1,
            TensorKind::Laplacian
            | TensorKind::NormalizedLaplacianRW
            | TensorKind::NormalizedLaplacianSym => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TensorKind::Adjacency => "adjacency",
            TensorKind::Laplacian => "laplacian",
            TensorKind::SignlessLaplacian => "signless-laplacian",
            TensorKind::NormalizedLaplacianRW => "normalized-laplacian-rw",
            TensorKind::NormalizedLaplacianSym => "normalized-laplacian-sym",
            TensorKind::NormalizedAdjacency => "normalized-adjacency",
        }
    }
}

/// Number of length-`m` tuples over an `s`-element alphabet that use every
/// element at least once, by inclusion–exclusion:
/// `Σ_{j=0}^{s} (-1)^j C(s,j) (s-j)^m`. Equals the multinomial sum over
/// compositions of `m` into `s` positive parts.
pub fn alpha(m: usize, s: usize) -> Result<BigInt, TensorError> {
    if s == 0 || s > m {
        return Err(TensorError::OrderTooSmall {
            m,
            required: s.max(2),
        });
    }
    Ok(surjection_sum(m, s, s))
}

/// Number of length-`m-1` tuples over the `s`-element alphabet of an edge
/// that cover a designated `s-1`-subset (the edge minus one fixed vertex).
/// This is the per-edge count of covering tuples with a fixed first index;
/// `s * beta(m, s) == alpha(m, s)`.
pub fn beta(m: usize, s: usize) -> Result<BigInt, TensorError> {
    if s == 0 || s > m {
        return Err(TensorError::OrderTooSmall {
            m,
            required: s.max(2),
        });
    }
    Ok(surjection_sum(m - 1, s, s - 1))
}

/// `Σ_{j=0}^{required} (-1)^j C(required, j) (s-j)^len`: length-`len` tuples
/// over an `s`-alphabet covering a designated `required`-subset.
fn surjection_sum(len: usize, s: usize, required: usize) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=required {
        let term = binomial(required, j) * BigInt::from(s - j).pow(len as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// One nonzero position of the virtual hypermatrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    /// 1-based vertex ids, length `m`.
    pub indices: Vec<Vertex>,
    pub value: EntryValue,
}

/// Exact where the kind permits it; the symmetric normalized Laplacian with
/// unequal degrees carries irrational m-th-root scalings and falls back to
/// `f64`.
#[derive(Debug, Clone, PartialEq)]
pub enum EntryValue {
    Exact(BigRational),
    Approx(f64),
}

impl EntryValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            EntryValue::Exact(r) => rational_to_f64(r),
            EntryValue::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            EntryValue::Exact(r) => Some(r),
            EntryValue::Approx(_) => None,
        }
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A virtual order-`m`, dimension-`n` connectivity hypermatrix.
#[derive(Debug, Clone)]
pub struct TensorOperator {
    hypergraph: Hypergraph,
    kind: TensorKind,
    m: usize,
    degrees: DegreeProfile,
    alpha_cache: BTreeMap<usize, BigInt>,
    /// Signed `±s/alpha` per edge, aligned with `hypergraph.edges()`.
    edge_coeff: Vec<BigRational>,
    edge_coeff_f64: Vec<f64>,
    /// `d(v)^{-1/m}` per vertex; used by the symmetric normalized kind.
    deg_root_inv: Vec<f64>,
    /// True when all degrees are equal, making the symmetric normalized
    /// kind's scaling rational (`1/d` per entry).
    equal_degrees: bool,
}

impl TensorOperator {
    pub fn new(hypergraph: &Hypergraph, kind: TensorKind, m: usize) -> Result<Self, TensorError> {
        let mce = hypergraph.mce().unwrap_or(0);
        let required = mce.max(2);
        if m < required {
            return Err(TensorError::OrderTooSmall { m, required });
        }
        let degrees = hypergraph.degrees();
        if kind.needs_positive_degrees() {
            if let Some(v) = degrees.degrees().iter().position(|&d| d == 0) {
                return Err(TensorError::IsolatedVertex { vertex: v + 1 });
            }
        }

        let mut alpha_cache = BTreeMap::new();
        for e in hypergraph.edges() {
            let s = e.cardinality();
            if let alloc::collections::btree_map::Entry::Vacant(slot) = alpha_cache.entry(s) {
                slot.insert(alpha(m, s)?);
            }
        }

        let sign = BigInt::from(kind.edge_sign());
        let edge_coeff: Vec<BigRational> = hypergraph
            .edges()
            .iter()
            .map(|e| {
                let s = e.cardinality();
                BigRational::new(&sign * BigInt::from(s), alpha_cache[&s].clone())
            })
            .collect();
        let edge_coeff_f64 = edge_coeff.iter().map(rational_to_f64).collect();

        let inv_m = 1.0 / m as f64;
        let deg_root_inv = degrees
            .degrees()
            .iter()
            .map(|&d| if d == 0 { 0.0 } else { (d as f64).powf(-inv_m) })
            .collect();
        let equal_degrees = degrees.is_regular();

        Ok(Self {
            hypergraph: hypergraph.clone(),
            kind,
            m,
            degrees,
            alpha_cache,
            edge_coeff,
            edge_coeff_f64,
            deg_root_inv,
            equal_degrees,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    /// Tensor order `m`.
    pub fn order(&self) -> usize {
        self.m
    }

    /// Tensor dimension `n`.
    pub fn dimension(&self) -> usize {
        self.hypergraph.vertex_count()
    }

    pub fn degrees(&self) -> &DegreeProfile {
        &self.degrees
    }

    pub fn alpha_of(&self, s: usize) -> Option<&BigInt> {
        self.alpha_cache.get(&s)
    }

    /// The signed base coefficient `±s/alpha(m,s)` an edge puts on each of
    /// its tuples. Degree scalings of the normalized kinds apply per entry
    /// on top of this.
    pub fn entry_coefficient(&self, e: &Edge) -> Option<BigRational> {
        let idx = self.hypergraph.edges().iter().position(|f| f == e)?;
        Some(self.edge_coeff[idx].clone())
    }

    /// Whether every entry of this operator is rational.
    pub fn has_rational_entries(&self) -> bool {
        self.kind != TensorKind::NormalizedLaplacianSym || self.equal_degrees
    }

    /// Exact value at one index tuple, computed from the definition: the
    /// tuple belongs to the edge equal to its support (if any), plus the
    /// merged diagonal. `None` when the value is irrational.
    pub fn entry_rational(&self, indices: &[Vertex]) -> Option<BigRational> {
        debug_assert_eq!(indices.len(), self.m);
        let mut support: Vec<Vertex> = indices.to_vec();
        support.sort_unstable();
        support.dedup();

        let mut value = BigRational::zero();
        if support.len() == 1 {
            value += self.diagonal_rational(support[0]);
            return Some(value);
        }
        if let Some(idx) = self
            .hypergraph
            .edges()
            .iter()
            .position(|e| e.vertices() == support.as_slice())
        {
            let base = &self.edge_coeff[idx];
            value += match self.kind {
                TensorKind::Adjacency | TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                    base.clone()
                }
                TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedAdjacency => {
                    base / BigInt::from(self.degrees.degree(indices[0]))
                }
                TensorKind::NormalizedLaplacianSym => {
                    if !self.equal_degrees {
                        return None;
                    }
                    base / BigInt::from(self.degrees.degree(indices[0]))
                }
            };
        }
        Some(value)
    }

    /// Merged diagonal value at `(v, v, …, v)`: the kind diagonal plus the
    /// contribution of a singleton edge `{v}` when present.
    pub fn diagonal_rational(&self, v: Vertex) -> BigRational {
        let d = self.degrees.degree(v);
        let singleton = self
            .hypergraph
            .edges()
            .iter()
            .any(|e| e.is_singleton() && e.vertices()[0] == v);
        let one = BigRational::one();
        let kind_diag = match self.kind {
            TensorKind::Adjacency | TensorKind::NormalizedAdjacency => BigRational::zero(),
            TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                BigRational::from(BigInt::from(d))
            }
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedLaplacianSym => one.clone(),
        };
        if !singleton {
            return kind_diag;
        }
        // alpha(m, 1) = 1, so a singleton contributes exactly ±1 before
        // degree scaling; every kind's scaling at the diagonal is 1/d, and
        // the product of m-th roots collapses to 1/d as well.
        let sing = match self.kind {
            TensorKind::Adjacency => one,
            TensorKind::Laplacian => -one,
            TensorKind::SignlessLaplacian => one,
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedLaplacianSym => {
                -one / BigInt::from(d)
            }
            TensorKind::NormalizedAdjacency => one / BigInt::from(d),
        };
        kind_diag + sing
    }

    pub fn diagonal_f64(&self, v: Vertex) -> f64 {
        rational_to_f64(&self.diagonal_rational(v))
    }

    /// Upper bound on the nonzero count: per-edge tuple counts plus at most
    /// `n` diagonal entries.
    pub fn nonzero_bound(&self) -> BigInt {
        let mut total = BigInt::from(self.dimension());
        for e in self.hypergraph.edges() {
            total += &self.alpha_cache[&e.cardinality()];
        }
        total
    }

    /// Lazy stream of all nonzero entries under the default cap.
    pub fn entries(&self) -> Result<EntryStream<'_>, TensorError> {
        self.entries_with_cap(DEFAULT_ENTRY_CAP)
    }

    pub fn entries_with_cap(&self, cap: u64) -> Result<EntryStream<'_>, TensorError> {
        let bound = self.nonzero_bound();
        if bound > BigInt::from(cap) {
            return Err(TensorError::CapExceeded {
                nonzeros: bound,
                cap,
            });
        }
        Ok(EntryStream::new(self))
    }

    fn check_dimension(&self, x: &[f64]) -> Result<(), TensorError> {
        if x.len() != self.dimension() {
            return Err(TensorError::DimensionMismatch {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// For the symmetric normalized kind the contraction runs over the
    /// degree-scaled coordinates; everything else uses `x` as is.
    fn scaled_input(&self, x: &[f64]) -> Vec<f64> {
        match self.kind {
            TensorKind::NormalizedLaplacianSym => x
                .iter()
                .zip(&self.deg_root_inv)
                .map(|(xi, r)| xi * r)
                .collect(),
            _ => x.to_vec(),
        }
    }

    /// `T x^{m-1}`: the vector whose i-th coordinate contracts the tensor
    /// against `x` in every slot but the first.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>, TensorError> {
        self.check_dimension(x)?;
        let n = self.dimension();
        let p = (self.m - 1) as i32;
        let xeff = self.scaled_input(x);
        let mut y = vec![0.0; n];

        for (e, &coeff) in self.hypergraph.edges().iter().zip(&self.edge_coeff_f64) {
            for (slot, &v) in e.vertices().iter().enumerate() {
                let cover = cover_sum_excluding(e, slot, p, &xeff);
                let c = coeff * cover;
                match self.kind {
                    TensorKind::Adjacency
                    | TensorKind::Laplacian
                    | TensorKind::SignlessLaplacian => y[v - 1] += c,
                    TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedAdjacency => {
                        y[v - 1] += c / self.degrees.degree(v) as f64
                    }
                    TensorKind::NormalizedLaplacianSym => y[v - 1] += c * self.deg_root_inv[v - 1],
                }
            }
        }

        match self.kind {
            TensorKind::Adjacency | TensorKind::NormalizedAdjacency => {}
            TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                for i in 0..n {
                    y[i] += self.degrees.degrees()[i] as f64 * x[i].powi(p);
                }
            }
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedLaplacianSym => {
                for i in 0..n {
                    y[i] += x[i].powi(p);
                }
            }
        }
        Ok(y)
    }

    /// The homogeneous degree-`m` form `F_T(x)`, evaluated per edge through
    /// the full-coverage sums. Numerically independent from `apply`; the two
    /// agree with `x · (T x^{m-1})` to rounding.
    pub fn quadratic_form(&self, x: &[f64]) -> Result<f64, TensorError> {
        self.check_dimension(x)?;
        let deg_m = self.m as i32;
        let xeff = self.scaled_input(x);
        let mut total = 0.0;

        match self.kind {
            TensorKind::Adjacency
            | TensorKind::Laplacian
            | TensorKind::SignlessLaplacian
            | TensorKind::NormalizedLaplacianSym => {
                for (e, &coeff) in self.hypergraph.edges().iter().zip(&self.edge_coeff_f64) {
                    total += coeff * cover_sum_full(e, deg_m, &xeff);
                }
            }
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedAdjacency => {
                // Row scaling depends on the leading index, so split each
                // edge's tuples by their first vertex.
                for (e, &coeff) in self.hypergraph.edges().iter().zip(&self.edge_coeff_f64) {
                    for (slot, &v) in e.vertices().iter().enumerate() {
                        let cover = cover_sum_excluding(e, slot, deg_m - 1, &xeff);
                        total += coeff * x[v - 1] / self.degrees.degree(v) as f64 * cover;
                    }
                }
            }
        }

        match self.kind {
            TensorKind::Adjacency | TensorKind::NormalizedAdjacency => {}
            TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                for (i, &xi) in x.iter().enumerate() {
                    total += self.degrees.degrees()[i] as f64 * xi.powi(deg_m);
                }
            }
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedLaplacianSym => {
                for &xi in x {
                    total += xi.powi(deg_m);
                }
            }
        }
        Ok(total)
    }

    /// Row sums `Σ_{i_2..i_m} t_{i i_2 … i_m}`, i.e. `T 1^{m-1}`.
    pub fn row_sums(&self) -> Vec<f64> {
        let ones = vec![1.0; self.dimension()];
        self.apply(&ones)
            .expect("dimension matches by construction")
    }

    /// Exact row sums for kinds with rational entries, computed from the
    /// fixed-first-index covering counts (`beta`), independently of `alpha`.
    pub fn row_sums_exact(&self) -> Result<Vec<BigRational>, TensorError> {
        if !self.has_rational_entries() {
            return Err(TensorError::IrrationalEntries);
        }
        let n = self.dimension();
        let mut sums = vec![BigRational::zero(); n];

        for i in 1..=n {
            let d = self.degrees.degree(i);
            let mut acc = match self.kind {
                TensorKind::Adjacency | TensorKind::NormalizedAdjacency => BigRational::zero(),
                TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                    BigRational::from(BigInt::from(d))
                }
                TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedLaplacianSym => {
                    BigRational::one()
                }
            };
            for (e, coeff) in self.hypergraph.edges().iter().zip(&self.edge_coeff) {
                if !e.contains(i) {
                    continue;
                }
                let count = beta(self.m, e.cardinality())?;
                let mut term = coeff * count;
                if self.kind.needs_positive_degrees() {
                    term /= BigInt::from(d);
                }
                acc += term;
            }
            sums[i - 1] = acc;
        }
        Ok(sums)
    }

    /// Gershgorin data: merged diagonal values and off-diagonal absolute
    /// row sums.
    pub fn gershgorin(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.dimension();
        let diag: Vec<f64> = (1..=n).map(|v| self.diagonal_f64(v)).collect();
        let w: Vec<f64> = if self.kind == TensorKind::NormalizedLaplacianSym {
            self.deg_root_inv.clone()
        } else {
            vec![1.0; n]
        };
        let mut radii = vec![0.0; n];
        for (e, &coeff) in self.hypergraph.edges().iter().zip(&self.edge_coeff_f64) {
            if e.is_singleton() {
                continue; // folded into the diagonal
            }
            for (slot, &v) in e.vertices().iter().enumerate() {
                let tuple_sum = match self.kind {
                    TensorKind::NormalizedLaplacianSym => {
                        cover_sum_excluding(e, slot, (self.m - 1) as i32, &w)
                            * self.deg_root_inv[v - 1]
                    }
                    _ => beta(self.m, e.cardinality())
                        .map(|b| b.to_f64().unwrap_or(f64::NAN))
                        .unwrap_or(f64::NAN),
                };
                let scale = if matches!(
                    self.kind,
                    TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedAdjacency
                ) {
                    1.0 / self.degrees.degree(v) as f64
                } else {
                    1.0
                };
                radii[v - 1] += coeff.abs() * scale * tuple_sum;
            }
        }
        (diag, radii)
    }

    /// `max_i Σ_{i_2..i_m} |t_{i i_2 … i_m}|`; the safe shift for the
    /// shifted symmetric power iteration is `m` times this.
    pub fn max_abs_row_sum(&self) -> f64 {
        let (diag, radii) = self.gershgorin();
        diag.iter()
            .zip(&radii)
            .map(|(d, r)| d.abs() + r)
            .fold(0.0, f64::max)
    }
}

/// `Σ_{T ⊆ e\{v}} (-1)^{|T|} (σ(e) - σ(T))^p` where `v` is the vertex at
/// position `slot` of the edge: the covering-tuple sum for tuples whose tail
/// must still cover the rest of the edge.
fn cover_sum_excluding(e: &Edge, slot: usize, p: i32, x: &[f64]) -> f64 {
    let vs = e.vertices();
    let s = vs.len();
    let sigma: f64 = vs.iter().map(|&u| x[u - 1]).sum();
    let mut total = 0.0;
    // Masks over the s-1 positions other than `slot`.
    for mask in 0..(1u32 << (s - 1)) {
        let mut sigma_t = 0.0;
        let mut bits = 0u32;
        let mut bit = 0;
        for (j, &u) in vs.iter().enumerate() {
            if j == slot {
                continue;
            }
            if mask & (1 << bit) != 0 {
                sigma_t += x[u - 1];
                bits += 1;
            }
            bit += 1;
        }
        let term = (sigma - sigma_t).powi(p);
        if bits.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `Σ_{T ⊆ e} (-1)^{|T|} (σ(e) - σ(T))^p`: the full-coverage tuple sum
/// `x^e_p`.
fn cover_sum_full(e: &Edge, p: i32, x: &[f64]) -> f64 {
    let vs = e.vertices();
    let s = vs.len();
    let sigma: f64 = vs.iter().map(|&u| x[u - 1]).sum();
    let mut total = 0.0;
    for mask in 0..(1u32 << s) {
        let mut sigma_t = 0.0;
        for (j, &u) in vs.iter().enumerate() {
            if mask & (1 << j) != 0 {
                sigma_t += x[u - 1];
            }
        }
        let term = (sigma - sigma_t).powi(p);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Lazy enumeration of all nonzero entries: merged diagonals first (vertex
/// order), then each edge's covering tuples in lexicographic order.
#[derive(Debug)]
pub struct EntryStream<'a> {
    op: &'a TensorOperator,
    next_diag: Vertex,
    edge_idx: usize,
    /// Odometer over tuple digits: digit `k` selects `edge.vertices()[k]`.
    digits: Vec<usize>,
    exhausted_edge: bool,
}

impl<'a> EntryStream<'a> {
    fn new(op: &'a TensorOperator) -> Self {
        Self {
            op,
            next_diag: 1,
            edge_idx: 0,
            digits: vec![0; op.order()],
            exhausted_edge: false,
        }
    }

    fn advance_odometer(&mut self, base: usize) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                return;
            }
            *d = 0;
        }
        self.exhausted_edge = true;
    }

    fn covers(&self, base: usize) -> bool {
        let mut seen = vec![false; base];
        for &d in &self.digits {
            seen[d] = true;
        }
        seen.iter().all(|&b| b)
    }

    fn tuple_value(&self, edge_idx: usize, first: Vertex) -> EntryValue {
        let op = self.op;
        let base = &op.edge_coeff[edge_idx];
        match op.kind {
            TensorKind::Adjacency | TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                EntryValue::Exact(base.clone())
            }
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedAdjacency => {
                EntryValue::Exact(base / BigInt::from(op.degrees.degree(first)))
            }
            TensorKind::NormalizedLaplacianSym => {
                if op.equal_degrees {
                    EntryValue::Exact(base / BigInt::from(op.degrees.degree(first)))
                } else {
                    let e = &op.hypergraph.edges()[edge_idx];
                    let mut v = rational_to_f64(base);
                    for &d in &self.digits {
                        v *= op.deg_root_inv[e.vertices()[d] - 1];
                    }
                    EntryValue::Approx(v)
                }
            }
        }
    }
}

impl<'a> Iterator for EntryStream<'a> {
    type Item = Entry;

    fn next(&mut self) -> Option<Entry> {
        let op = self.op;
        let n = op.dimension();
        // Phase 1: merged diagonals.
        while self.next_diag <= n {
            let v = self.next_diag;
            self.next_diag += 1;
            let value = op.diagonal_rational(v);
            if !value.is_zero() {
                return Some(Entry {
                    indices: vec![v; op.order()],
                    value: EntryValue::Exact(value),
                });
            }
        }
        // Phase 2: per-edge covering tuples (singletons are diagonal-only).
        loop {
            let edges = op.hypergraph.edges();
            if self.edge_idx >= edges.len() {
                return None;
            }
            let e = &edges[self.edge_idx];
            let s = e.cardinality();
            if s == 1 || self.exhausted_edge {
                self.edge_idx += 1;
                self.digits = vec![0; op.order()];
                self.exhausted_edge = false;
                continue;
            }
            if self.covers(s) {
                let indices: Vec<Vertex> = self.digits.iter().map(|&d| e.vertices()[d]).collect();
                let value = self.tuple_value(self.edge_idx, indices[0]);
                self.advance_odometer(s);
                return Some(Entry { indices, value });
            }
            self.advance_odometer(s);
        }
    }
}
