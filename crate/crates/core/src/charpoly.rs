//! Exact characteristic polynomials for dimension-2 operators, and dense
//! brute-force oracles for small instances.
//!
//! For `n = 2` the eigenvalue variety is cut out by the two component forms
//! `f_i(x_1, x_2) = (T x^{m-1})_i - λ x_i^{m-1}`, homogeneous of degree
//! `m - 1` with coefficients linear in `λ`. The characteristic polynomial is
//! their Sylvester resultant: a degree-`2(m-1)` polynomial in `λ` with
//! leading coefficient `±1`. It is computed exactly by evaluating the
//! resultant determinant at `2(m-1)+1` integer values of `λ` and
//! interpolating in rational arithmetic.
//!
//! Root extraction is the only approximate step. The polynomial is first
//! split into square-free factors (exact gcd arithmetic), so every root
//! handed to the numeric finder is simple; multiplicities come from the
//! decomposition, with a final clustering pass at relative gap `1e-8`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::model::{Hypergraph, Vertex};
use crate::poly::{complex_roots, determinant, interpolate, RatPoly};
use crate::tensor::{rational_to_f64, TensorError, TensorKind, TensorOperator};

/// Dense-oracle ceiling on `n^m`.
pub const BRUTE_CAP: u64 = 1_000_000;

/// Relative gap below which two numeric roots are considered equal.
pub const ROOT_CLUSTER_GAP: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CharPolyError {
    #[error("operator dimension is {n}; the resultant oracle requires n = 2")]
    DimensionNot2 { n: usize },
    #[error("operator entries are irrational; exact arithmetic is unavailable")]
    IrrationalEntries,
    #[error("dense materialization needs {size} entries, above the {cap} cap")]
    TooLarge { size: BigInt, cap: u64 },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// A numeric root with its exact multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct CharRoot {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Characteristic polynomial of a dimension-2 operator: exact ascending
/// coefficients of degree `2(m-1)`, plus the numeric root multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<BigRational>,
    roots: Vec<CharRoot>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn roots(&self) -> &[CharRoot] {
        &self.roots
    }

    /// `Σ m(λ) λ` from the coefficients: `-c_{d-1} / c_d`. Exact.
    pub fn root_sum_exact(&self) -> BigRational {
        let d = self.degree();
        -&self.coeffs[d - 1] / &self.coeffs[d]
    }

    pub fn poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    /// Roots repeated by multiplicity, sorted by real then imaginary part.
    pub fn flat_roots(&self) -> Vec<Complex64> {
        let mut out = Vec::new();
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                out.push(r.value);
            }
        }
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        out
    }
}

/// Coefficients of the component form `(T x^{m-1})_i` as a polynomial in
/// `x_1^a x_2^{m-1-a}`, indexed by `a`. For `n = 2` the tuples with a given
/// split land either on the diagonal or on the single possible edge
/// `{1, 2}`, counted by a binomial.
fn component_form(op: &TensorOperator, i: Vertex) -> Result<Vec<BigRational>, CharPolyError> {
    let m = op.order();
    let h = op.hypergraph();
    let edge_pair_value: Option<BigRational> =
        h.edges().iter().find(|e| e.vertices() == [1, 2]).map(|e| {
            let base = op.entry_coefficient(e).expect("edge of own hypergraph");
            if op.kind().needs_positive_degrees() {
                base / BigInt::from(op.degrees().degree(i))
            } else {
                base
            }
        });

    let mut comp = vec![BigRational::zero(); m];
    for (a, slot) in comp.iter_mut().enumerate() {
        // `a` ones among the m-1 trailing indices.
        let diagonal_bucket = (i == 1 && a == m - 1) || (i == 2 && a == 0);
        if diagonal_bucket {
            *slot = op.diagonal_rational(i);
        } else if let Some(v) = &edge_pair_value {
            *slot = v * binomial_big(m - 1, a);
        }
    }
    Ok(comp)
}

fn binomial_big(n: usize, k: usize) -> BigRational {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from(acc)
}

/// Exact characteristic polynomial via the Sylvester resultant of the two
/// dehomogenized component forms.
pub fn charpoly_n2(op: &TensorOperator) -> Result<CharPoly, CharPolyError> {
    if op.dimension() != 2 {
        return Err(CharPolyError::DimensionNot2 { n: op.dimension() });
    }
    if !op.has_rational_entries() {
        return Err(CharPolyError::IrrationalEntries);
    }
    let m = op.order();
    let deg = 2 * (m - 1);

    let comp1 = component_form(op, 1)?;
    let comp2 = component_form(op, 2)?;

    // f1 = Σ_a (comp1[a] - λ [a = m-1]) y^a, f2 = Σ_a (comp2[a] - λ [a = 0]) y^a,
    // both of formal degree m-1 in y = x1/x2. Each coefficient is c0 + c1 λ.
    let lin = |comp: &[BigRational], lambda_at: usize| -> Vec<(BigRational, BigRational)> {
        (0..m)
            .map(|a| {
                let c1 = if a == lambda_at {
                    -BigRational::one()
                } else {
                    BigRational::zero()
                };
                (comp[a].clone(), c1)
            })
            .collect()
    };
    let f1 = lin(&comp1, m - 1);
    let f2 = lin(&comp2, 0);

    // Evaluate the Sylvester determinant at deg+1 integer nodes and
    // interpolate; the determinant has λ-degree exactly deg with leading
    // coefficient ±1.
    let mut points = Vec::with_capacity(deg + 1);
    for t in 0..=deg {
        let lambda = BigRational::from(BigInt::from(t));
        let eval = |p: &[(BigRational, BigRational)]| -> Vec<BigRational> {
            // Descending order for the Sylvester layout.
            p.iter().rev().map(|(c0, c1)| c0 + c1 * &lambda).collect()
        };
        let r1 = eval(&f1);
        let r2 = eval(&f2);
        let size = 2 * (m - 1);
        let mut mat = vec![vec![BigRational::zero(); size]; size];
        for shift in 0..m - 1 {
            for (k, c) in r1.iter().enumerate() {
                mat[shift][shift + k] = c.clone();
            }
            for (k, c) in r2.iter().enumerate() {
                mat[m - 1 + shift][shift + k] = c.clone();
            }
        }
        points.push((lambda, determinant(mat)));
    }
    let poly = interpolate(&points);
    debug_assert_eq!(poly.degree(), Some(deg));
    debug_assert!(poly.leading().map(|l| l.abs().is_one()).unwrap_or(false));

    let roots = roots_with_multiplicity(&poly);
    Ok(CharPoly {
        coeffs: poly.coeffs().to_vec(),
        roots,
    })
}

fn roots_with_multiplicity(poly: &RatPoly) -> Vec<CharRoot> {
    let mut out: Vec<CharRoot> = Vec::new();
    for (factor, mult) in poly.squarefree_decomposition() {
        for value in complex_roots(&factor.to_f64_coeffs()) {
            out.push(CharRoot {
                value,
                multiplicity: mult,
            });
        }
    }
    // Clustering pass: exact factors are coprime, so this only merges
    // numerically indistinguishable roots.
    let mut merged: Vec<CharRoot> = Vec::new();
    out.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    for r in out {
        if let Some(last) = merged.last_mut() {
            let gap = (last.value - r.value).norm();
            if gap <= ROOT_CLUSTER_GAP * last.value.norm().max(1.0) {
                last.multiplicity += r.multiplicity;
                continue;
            }
        }
        merged.push(r);
    }
    merged
}

/// Report of the cospectrality of the two normalized Laplacians at `n = 2`.
#[derive(Debug, Clone)]
pub struct CospectralityReport {
    pub rw: CharPoly,
    pub sym: CharPoly,
    /// The two polynomials agree up to a nonzero constant, exactly.
    pub proportional: bool,
}

pub fn cospectrality_check(h: &Hypergraph, m: usize) -> Result<CospectralityReport, CharPolyError> {
    let rw = charpoly_n2(&TensorOperator::new(
        h,
        TensorKind::NormalizedLaplacianRW,
        m,
    )?)?;
    let sym = charpoly_n2(&TensorOperator::new(
        h,
        TensorKind::NormalizedLaplacianSym,
        m,
    )?)?;
    let p = rw.poly();
    let q = sym.poly();
    let proportional =
        p.scale(q.leading().expect("nonzero")) == q.scale(p.leading().expect("nonzero"));
    Ok(CospectralityReport {
        rw,
        sym,
        proportional,
    })
}

/// Report of the spectral shift `σ(A) = 1 - σ(L)` between the normalized
/// adjacency and the normalized Laplacian at `n = 2`.
#[derive(Debug, Clone)]
pub struct ShiftSpectrumReport {
    pub adjacency: CharPoly,
    pub laplacian: CharPoly,
    /// `charpoly_L(λ) == charpoly_A(1-λ)` as exact polynomials.
    pub exact_identity: bool,
    /// Largest distance when the mapped root multisets are matched in
    /// sorted order.
    pub max_root_distance: f64,
    pub pass: bool,
}

pub fn shift_spectrum_check(
    h: &Hypergraph,
    m: usize,
) -> Result<ShiftSpectrumReport, CharPolyError> {
    let adjacency = charpoly_n2(&TensorOperator::new(h, TensorKind::NormalizedAdjacency, m)?)?;
    let laplacian = charpoly_n2(&TensorOperator::new(
        h,
        TensorKind::NormalizedLaplacianRW,
        m,
    )?)?;

    let one_minus = RatPoly::new(vec![BigRational::one(), -BigRational::one()]);
    let exact_identity = adjacency.poly().compose(&one_minus) == laplacian.poly();

    let mut mapped: Vec<Complex64> = adjacency
        .flat_roots()
        .into_iter()
        .map(|z| Complex64::new(1.0 - z.re, -z.im))
        .collect();
    mapped.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let target = laplacian.flat_roots();
    let max_root_distance = mapped
        .iter()
        .zip(&target)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    let pass = mapped.len() == target.len() && max_root_distance <= 1e-8;
    Ok(ShiftSpectrumReport {
        adjacency,
        laplacian,
        exact_identity,
        max_root_distance,
        pass,
    })
}

fn brute_cap_check(op: &TensorOperator) -> Result<usize, CharPolyError> {
    let n = op.dimension();
    let size = BigInt::from(n).pow(op.order() as u32);
    if size > BigInt::from(BRUTE_CAP) {
        return Err(CharPolyError::TooLarge {
            size,
            cap: BRUTE_CAP,
        });
    }
    Ok(size.to_usize().expect("under cap"))
}

/// `alpha(m, s)` straight from the multinomial definition: the sum of
/// `m! / (k_1! … k_s!)` over positive compositions of `m` into `s` parts.
/// Deliberately independent of the inclusion–exclusion formula used by the
/// operator machinery.
fn alpha_multinomial(m: usize, s: usize) -> BigInt {
    let mut factorial = vec![BigInt::one(); m + 1];
    for k in 1..=m {
        factorial[k] = &factorial[k - 1] * BigInt::from(k);
    }
    let mut total = BigInt::zero();
    let mut parts = vec![0usize; s];
    fn rec(
        idx: usize,
        remaining: usize,
        parts: &mut Vec<usize>,
        factorial: &[BigInt],
        total: &mut BigInt,
        m: usize,
    ) {
        let s = parts.len();
        if idx == s {
            if remaining == 0 {
                let mut denom = BigInt::one();
                for &k in parts.iter() {
                    denom *= &factorial[k];
                }
                *total += &factorial[m] / denom;
            }
            return;
        }
        let slots_left = s - idx - 1;
        for k in 1..=remaining.saturating_sub(slots_left) {
            parts[idx] = k;
            rec(idx + 1, remaining - k, parts, factorial, total, m);
        }
    }
    rec(0, m, &mut parts, &factorial, &mut total, m);
    total
}

/// Exact entry at one decoded position, re-derived from the definition
/// (support lookup plus multinomial alpha); shared by the dense oracles.
fn brute_value(op: &TensorOperator, indices: &[Vertex]) -> Option<BigRational> {
    let h = op.hypergraph();
    let degrees = op.degrees();
    let m = op.order();
    let mut support = indices.to_vec();
    support.sort_unstable();
    support.dedup();

    let mut value = BigRational::zero();
    if support.len() == 1 {
        let v = support[0];
        value += match op.kind() {
            TensorKind::Adjacency | TensorKind::NormalizedAdjacency => BigRational::zero(),
            TensorKind::Laplacian | TensorKind::SignlessLaplacian => {
                BigRational::from(BigInt::from(degrees.degree(v)))
            }
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedLaplacianSym => {
                BigRational::one()
            }
        };
    }
    if let Some(e) = h
        .edges()
        .iter()
        .find(|e| e.vertices() == support.as_slice())
    {
        let s = e.cardinality();
        let sign = match op.kind() {
            TensorKind::Adjacency
            | TensorKind::SignlessLaplacian
            | TensorKind::NormalizedAdjacency => BigInt::one(),
            _ => -BigInt::one(),
        };
        let base = BigRational::new(sign * BigInt::from(s), alpha_multinomial(m, s));
        let scaled = match op.kind() {
            TensorKind::Adjacency | TensorKind::Laplacian | TensorKind::SignlessLaplacian => base,
            TensorKind::NormalizedLaplacianRW | TensorKind::NormalizedAdjacency => {
                base / BigInt::from(degrees.degree(indices[0]))
            }
            TensorKind::NormalizedLaplacianSym => {
                if !op.has_rational_entries() {
                    return None;
                }
                base / BigInt::from(degrees.degree(indices[0]))
            }
        };
        value += scaled;
    }
    Some(value)
}

fn decode(mut flat: usize, n: usize, m: usize) -> Vec<Vertex> {
    let mut idx = vec![0usize; m];
    for k in (0..m).rev() {
        idx[k] = flat % n + 1;
        flat /= n;
    }
    idx
}

/// Dense materialization of every entry in exact rationals, row-major over
/// 1-based index tuples. Independent of the lazy entry stream.
pub fn brute_entries(op: &TensorOperator) -> Result<Vec<BigRational>, CharPolyError> {
    let size = brute_cap_check(op)?;
    if !op.has_rational_entries() {
        return Err(CharPolyError::IrrationalEntries);
    }
    let n = op.dimension();
    let m = op.order();
    let mut out = Vec::with_capacity(size);
    for flat in 0..size {
        let idx = decode(flat, n, m);
        out.push(brute_value(op, &idx).expect("rational entries"));
    }
    Ok(out)
}

/// Dense materialization in `f64`; supports the irrational symmetric
/// normalized kind by applying the m-th-root degree scaling numerically.
pub fn brute_entries_f64(op: &TensorOperator) -> Result<Vec<f64>, CharPolyError> {
    let size = brute_cap_check(op)?;
    let n = op.dimension();
    let m = op.order();
    let rational = op.has_rational_entries();
    let mut out = Vec::with_capacity(size);
    for flat in 0..size {
        let idx = decode(flat, n, m);
        if rational {
            out.push(rational_to_f64(&brute_value(op, &idx).expect("rational")));
        } else {
            out.push(brute_value_f64_irrational(op, &idx));
        }
    }
    Ok(out)
}

fn brute_value_f64_irrational(op: &TensorOperator, indices: &[Vertex]) -> f64 {
    #[allow(unused_imports)]
    use num_traits::Float;
    let h = op.hypergraph();
    let degrees = op.degrees();
    let m = op.order();
    let mut support = indices.to_vec();
    support.sort_unstable();
    support.dedup();

    let mut value = 0.0;
    if support.len() == 1 {
        value += 1.0; // symmetric normalized kind diagonal
    }
    if let Some(e) = h
        .edges()
        .iter()
        .find(|e| e.vertices() == support.as_slice())
    {
        let s = e.cardinality();
        let base = -(s as f64) / alpha_multinomial(m, s).to_f64().unwrap_or(f64::NAN);
        let mut scale = 1.0;
        for &v in indices {
            scale *= (degrees.degree(v) as f64).powf(-1.0 / m as f64);
        }
        value += base * scale;
    }
    value
}

/// `T x^{m-1}` computed from the dense array by full tuple enumeration.
/// The independent slow path against which the inclusion–exclusion
/// contraction is checked.
pub fn brute_apply(op: &TensorOperator, x: &[f64]) -> Result<Vec<f64>, CharPolyError> {
    let entries = brute_entries_f64(op)?;
    let n = op.dimension();
    let m = op.order();
    if x.len() != n {
        return Err(CharPolyError::Tensor(TensorError::DimensionMismatch {
            expected: n,
            got: x.len(),
        }));
    }
    let mut y = vec![0.0; n];
    for (flat, t) in entries.iter().enumerate() {
        if *t == 0.0 {
            continue;
        }
        let idx = decode(flat, n, m);
        let mut prod = *t;
        for &v in &idx[1..] {
            prod *= x[v - 1];
        }
        y[idx[0] - 1] += prod;
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn pair_edge() -> Hypergraph {
        Hypergraph::new(2, [vec![1, 2]]).unwrap()
    }

    #[test]
    fn matrix_case_is_lambda_squared_minus_one() {
        let op = TensorOperator::new(&pair_edge(), TensorKind::Adjacency, 2).unwrap();
        let cp = charpoly_n2(&op).unwrap();
        assert_eq!(cp.coeffs(), &[rat(-1, 1), rat(0, 1), rat(1, 1)]);
        let roots = cp.flat_roots();
        assert!((roots[0].re + 1.0).abs() < 1e-12);
        assert!((roots[1].re - 1.0).abs() < 1e-12);
    }

    /// Hand-computed resultant for the order-3 adjacency of a single pair
    /// edge: λ^4 - (2/3)λ^2 - (8/27)λ - 1/27 = (λ-1)(λ+1/3)^3.
    #[test]
    fn order_three_adjacency_charpoly() {
        let op = TensorOperator::new(&pair_edge(), TensorKind::Adjacency, 3).unwrap();
        let cp = charpoly_n2(&op).unwrap();
        assert_eq!(
            cp.coeffs(),
            &[rat(-1, 27), rat(-8, 27), rat(-2, 3), rat(0, 1), rat(1, 1)]
        );
        assert_eq!(cp.root_sum_exact(), rat(0, 1));
        let roots = cp.roots();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].value.re + 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(roots[0].multiplicity, 3);
        assert!((roots[1].value.re - 1.0).abs() < 1e-12);
        assert_eq!(roots[1].multiplicity, 1);
    }

    #[test]
    fn order_three_normalized_rw_charpoly() {
        let op = TensorOperator::new(&pair_edge(), TensorKind::NormalizedLaplacianRW, 3).unwrap();
        let cp = charpoly_n2(&op).unwrap();
        assert_eq!(
            cp.coeffs(),
            &[rat(0, 1), rat(-64, 27), rat(16, 3), rat(-4, 1), rat(1, 1)]
        );
        // n (m-1)^{n-1} = 2 * 2 = 4.
        assert_eq!(cp.root_sum_exact(), rat(4, 1));
        let roots = cp.roots();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].value.norm() < 1e-12);
        assert_eq!(roots[0].multiplicity, 1);
        assert!((roots[1].value.re - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(roots[1].multiplicity, 3);
    }

    #[test]
    fn degree_and_leading_invariants() {
        for m in 2..=5 {
            for kind in [
                TensorKind::Adjacency,
                TensorKind::Laplacian,
                TensorKind::SignlessLaplacian,
                TensorKind::NormalizedLaplacianRW,
                TensorKind::NormalizedAdjacency,
            ] {
                let op = TensorOperator::new(&pair_edge(), kind, m).unwrap();
                let cp = charpoly_n2(&op).unwrap();
                assert_eq!(cp.degree(), 2 * (m - 1), "kind {kind:?} m {m}");
                assert!(cp.coeffs().last().unwrap().abs().is_one());
            }
        }
    }

    #[test]
    fn trace_identity_exact_per_kind() {
        // Root sum equals (m-1) * (t_{11..1} + t_{22..2}).
        let h = Hypergraph::new(2, [vec![1], vec![2], vec![1, 2]]).unwrap();
        for m in 2..=5 {
            for kind in [
                TensorKind::Adjacency,
                TensorKind::Laplacian,
                TensorKind::SignlessLaplacian,
                TensorKind::NormalizedLaplacianRW,
                TensorKind::NormalizedLaplacianSym,
                TensorKind::NormalizedAdjacency,
            ] {
                let op = TensorOperator::new(&h, kind, m).unwrap();
                let cp = charpoly_n2(&op).unwrap();
                let diag_sum = op.diagonal_rational(1) + op.diagonal_rational(2);
                let expected = diag_sum * BigRational::from(BigInt::from(m as i64 - 1));
                assert_eq!(cp.root_sum_exact(), expected, "kind {kind:?} m {m}");
            }
        }
    }

    #[test]
    fn dimension_guard() {
        let h = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 3).unwrap();
        assert!(matches!(
            charpoly_n2(&op),
            Err(CharPolyError::DimensionNot2 { n: 3 })
        ));
    }

    #[test]
    fn irrational_sym_guard() {
        // Degrees (2, 1) are unequal: the m-th-root scaling is irrational.
        let h = Hypergraph::new(2, [vec![1], vec![1, 2]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::NormalizedLaplacianSym, 3).unwrap();
        assert!(matches!(
            charpoly_n2(&op),
            Err(CharPolyError::IrrationalEntries)
        ));
    }

    #[test]
    fn cospectral_normalized_pair() {
        for m in [2usize, 3, 4] {
            let report = cospectrality_check(&pair_edge(), m).unwrap();
            assert!(report.proportional, "m = {m}");
        }
    }

    #[test]
    fn shift_spectrum_matrix_case() {
        let report = shift_spectrum_check(&pair_edge(), 2).unwrap();
        assert!(report.exact_identity);
        assert!(report.pass);
        // {1, -1} maps onto {0, 2}.
        let l_roots = report.laplacian.flat_roots();
        assert!((l_roots[0].re - 0.0).abs() < 1e-12);
        assert!((l_roots[1].re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn shift_spectrum_higher_orders() {
        for m in [3usize, 4] {
            let report = shift_spectrum_check(&pair_edge(), m).unwrap();
            assert!(report.exact_identity, "m = {m}");
            assert!(report.pass, "m = {m}");
        }
    }

    #[test]
    fn alpha_multinomial_agrees_with_inclusion_exclusion() {
        for m in 1..=8 {
            for s in 1..=m {
                assert_eq!(
                    alpha_multinomial(m, s),
                    crate::tensor::alpha(m, s).unwrap(),
                    "m={m} s={s}"
                );
            }
        }
    }

    #[test]
    fn brute_entries_match_stream_on_fixture() {
        let h = Hypergraph::new(5, [vec![1], vec![2, 3], vec![1, 4, 5]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 3).unwrap();
        let dense = brute_entries(&op).unwrap();
        let nonzero = dense.iter().filter(|v| !v.is_zero()).count();
        assert_eq!(nonzero, 13);

        // Rebuild from the stream and compare position by position.
        let mut from_stream = vec![BigRational::zero(); dense.len()];
        for entry in op.entries().unwrap() {
            let mut flat = 0usize;
            for &v in &entry.indices {
                flat = flat * 5 + (v - 1);
            }
            from_stream[flat] = entry.value.exact().unwrap().clone();
        }
        assert_eq!(dense, from_stream);
    }

    #[test]
    fn brute_entries_zero_for_edgeless() {
        let h = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 2).unwrap();
        assert!(brute_entries(&op).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn brute_cap_guard() {
        let h = Hypergraph::new(10, [vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 10).unwrap();
        assert!(matches!(
            brute_entries(&op),
            Err(CharPolyError::TooLarge { .. })
        ));
    }

    #[test]
    fn component_spectrum_union_for_two_singletons() {
        // Two singleton components embedded at order 3: every eigenvalue is 1
        // on both sides of the component decomposition.
        let h = Hypergraph::new(2, [vec![1], vec![2]]).unwrap();
        let op = TensorOperator::new(&h, TensorKind::Adjacency, 3).unwrap();
        let cp = charpoly_n2(&op).unwrap();
        let roots = cp.roots();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].value.re - 1.0).abs() < 1e-12);
        assert_eq!(roots[0].multiplicity, 4);
    }
}
