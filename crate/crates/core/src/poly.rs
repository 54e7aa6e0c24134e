//! Exact univariate polynomial arithmetic over the rationals, plus the
//! handful of numeric pieces the characteristic-polynomial oracle needs:
//! determinants of rational matrices, Newton interpolation, square-free
//! decomposition, and complex root finding.
//!
//! Coefficients are `BigRational` throughout; the only approximate step
//! anywhere is the final root extraction, which runs on square-free factors
//! where every root is simple.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, Zero};

use crate::tensor::rational_to_f64;

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
            .collect();
        Self::new(out)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let dlead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / dlead.clone();
            if !factor.is_zero() {
                let shift = k - dd;
                quot[shift] = factor.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let delta = c * &factor;
                    rem[shift + i] -= delta;
                }
            }
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = BigRational::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Substitutes `other` for the variable.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Yun's square-free decomposition: returns `(factor, multiplicity)`
    /// pairs with the factors monic, square-free, and pairwise coprime;
    /// the polynomial equals `leading * Π factor^multiplicity`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let p = self.monic();
        let Some(deg) = p.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let (mut c, _) = p.div_rem(&g);
        let (dp_over_g, _) = dp.div_rem(&g);
        let mut d = dp_over_g.sub(&c.derivative());
        let mut mult = 1usize;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), mult));
            }
            let (c_next, _) = c.div_rem(&a);
            let (d_over_a, _) = d.div_rem(&a);
            d = d_over_a.sub(&c_next.derivative());
            c = c_next;
            mult += 1;
        }
        out
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

/// Newton interpolation through exact points with distinct abscissas.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    let n = points.len();
    if n == 0 {
        return RatPoly::zero();
    }
    // Divided differences.
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
        coeffs.push(table[level].clone());
    }
    // Expand the Newton form.
    let mut poly = RatPoly::zero();
    let mut basis = RatPoly::constant(BigRational::one());
    for (i, c) in coeffs.iter().enumerate() {
        poly = poly.add(&basis.scale(c));
        let root = &points[i].0;
        basis = basis.mul(&RatPoly::new(vec![-root.clone(), BigRational::one()]));
    }
    poly
}

/// Determinant by rational Gaussian elimination with row pivoting.
pub fn determinant(mut mat: Vec<Vec<BigRational>>) -> BigRational {
    let n = mat.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pivot_val = mat[col][col].clone();
        det *= &pivot_val;
        let pivot_row = mat[col].clone();
        for row in mat.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_val;
            for (cell, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *cell -= &factor * pv;
            }
        }
    }
    det
}

/// All complex roots of a polynomial with real coefficients (ascending,
/// leading coefficient nonzero). Intended for square-free inputs; linear and
/// quadratic cases are closed-form, higher degrees use the Durand–Kerner
/// iteration polished by Newton steps.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return Vec::new();
    }
    let lead = coeffs[d];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();

    let mut roots = match d {
        1 => vec![Complex64::new(-monic[0], 0.0)],
        2 => {
            let (c, b) = (monic[0], monic[1]);
            let disc = Complex64::new(b * b - 4.0 * c, 0.0);
            let sq = disc.sqrt();
            let b = Complex64::new(b, 0.0);
            vec![(-b + sq) / 2.0, (-b - sq) / 2.0]
        }
        _ => durand_kerner(&monic),
    };
    for z in &mut roots {
        // Collapse signed zeros so output and ordering are stable.
        z.re += 0.0;
        z.im += 0.0;
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

fn poly_eval_complex(monic: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in monic.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn poly_eval_derivative_complex(monic: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &c) in monic.iter().enumerate().skip(1).rev() {
        acc = acc * z + c * k as f64;
    }
    acc
}

fn durand_kerner(monic: &[f64]) -> Vec<Complex64> {
    let d = monic.len() - 1;
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    // Asymmetric ring of starting points.
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = core::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            let r = radius * (0.5 + 0.4 * k as f64 / d as f64);
            Complex64::new(r * theta.cos(), r * theta.sin())
        })
        .collect();

    for _ in 0..600 {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if j != k {
                    den *= z[k] - z[j];
                }
            }
            if den.norm() < 1e-290 {
                z[k] += Complex64::new(1e-8, 1e-8);
                continue;
            }
            let step = poly_eval_complex(monic, z[k]) / den;
            z[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    // Newton polish: quadratic convergence near the simple roots this
    // function is meant for.
    for zk in z.iter_mut() {
        for _ in 0..4 {
            let dp = poly_eval_derivative_complex(monic, *zk);
            if dp.norm() < 1e-290 {
                break;
            }
            *zk -= poly_eval_complex(monic, *zk) / dp;
        }
    }
    z
}
