//! Laplacian matrices, the involution block split, and the floating-point
//! spectral formulas for the Kirchhoff indices and the spanning-tree count.
//!
//! Everything here is a cross-check for [`crate::exact`]; values are `f64`.

use std::ops::{Add, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Copy> DenseMatrix<T> {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        DenseMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.order).map(|i| self.get(i, i)).collect()
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&v| f(v)).collect(),
        }
    }
}

impl DenseMatrix<i64> {
    pub fn to_f64(&self) -> DenseMatrix<f64> {
        self.map(|v| v as f64)
    }

    pub fn scaled(&self, k: i64) -> DenseMatrix<i64> {
        self.map(|v| v * k)
    }
}

/// `L = D - A` with integer entries.
pub fn laplacian(g: &Graph) -> DenseMatrix<i64> {
    let n = g.vertex_count();
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
        for &u in g.neighbors(v) {
            entries[v * n + u] = -1;
        }
    }
    DenseMatrix { order: n, entries }
}

/// `D^{-1/2} L D^{-1/2}`. Isolated vertices are rejected.
pub fn normalized_laplacian_f(g: &Graph) -> Result<DenseMatrix<f64>> {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::InvalidParameter(format!(
            "normalized Laplacian undefined: vertex {v} is isolated"
        )));
    }
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        entries[v * n + v] = 1.0;
        for &u in g.neighbors(v) {
            let prod = (g.degree(u) * g.degree(v)) as f64;
            entries[v * n + u] = -1.0 / prod.sqrt();
        }
    }
    Ok(DenseMatrix { order: n, entries })
}

/// Block decomposition of a matrix under a fixed-point-free involution.
///
/// With `V1 = {i : i < σ(i)}` and `V2 = σ(V1)`, the matrix has the form
/// `[[B11, B12], [B12, B11]]`, and its spectrum is the union of the spectra
/// of `block_a = B11 + B12` and `block_s = B11 - B12`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSplit<T> {
    /// `V1` in ascending order; row `k` of each block is vertex `half[k]`.
    pub half: Vec<usize>,
    pub block_11: DenseMatrix<T>,
    pub block_12: DenseMatrix<T>,
    pub block_a: DenseMatrix<T>,
    pub block_s: DenseMatrix<T>,
    pub eigs_a: Vec<f64>,
    pub eigs_s: Vec<f64>,
}

impl<T> SpectrumSplit<T> {
    /// Sorted union of both block spectra.
    pub fn combined_eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.eigs_a.iter().chain(&self.eigs_s).copied().collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

fn split_blocks<T>(
    m: &DenseMatrix<T>,
    g: &Graph,
    sigma: &[usize],
    to_f64: impl Fn(T) -> f64,
) -> Result<SpectrumSplit<T>>
where
    T: Copy + PartialEq + Add<Output = T> + Sub<Output = T>,
{
    let n = m.order();
    if sigma.len() != n || g.vertex_count() != n {
        return Err(Error::DecompositionInapplicable(format!(
            "permutation has length {}, matrix order is {n}",
            sigma.len()
        )));
    }
    if let Some(i) = (0..n).find(|&i| sigma[i] >= n || sigma[sigma[i]] != i) {
        return Err(Error::DecompositionInapplicable(format!(
            "not an involution at vertex {i}"
        )));
    }
    if let Some(i) = (0..n).find(|&i| sigma[i] == i) {
        return Err(Error::DecompositionInapplicable(format!(
            "vertex {i} is a fixed point"
        )));
    }
    if !g.is_automorphism(sigma) {
        return Err(Error::DecompositionInapplicable(
            "permutation is not a graph automorphism".into(),
        ));
    }

    let half: Vec<usize> = (0..n).filter(|&i| i < sigma[i]).collect();
    let h = half.len();
    let b11 = DenseMatrix::from_fn(h, |a, b| m.get(half[a], half[b]));
    let b22 = DenseMatrix::from_fn(h, |a, b| m.get(sigma[half[a]], sigma[half[b]]));
    let b12 = DenseMatrix::from_fn(h, |a, b| m.get(half[a], sigma[half[b]]));
    let b21 = DenseMatrix::from_fn(h, |a, b| m.get(sigma[half[a]], half[b]));
    if b11 != b22 || b12 != b21 {
        return Err(Error::DecompositionInapplicable(
            "diagonal or off-diagonal blocks differ".into(),
        ));
    }
    let block_a = DenseMatrix::from_fn(h, |a, b| b11.get(a, b) + b12.get(a, b));
    let block_s = DenseMatrix::from_fn(h, |a, b| b11.get(a, b) - b12.get(a, b));
    let eigs_a = eigenvalues_sym(&block_a.map(&to_f64))?;
    let eigs_s = eigenvalues_sym(&block_s.map(&to_f64))?;
    Ok(SpectrumSplit {
        half,
        block_11: b11,
        block_12: b12,
        block_a,
        block_s,
        eigs_a,
        eigs_s,
    })
}

/// Splits `L(g)` along the involution `sigma`.
pub fn involution_split(g: &Graph, sigma: &[usize]) -> Result<SpectrumSplit<i64>> {
    split_blocks(&laplacian(g), g, sigma, |v| v as f64)
}

/// Splits the normalized Laplacian `𝓛(g)` along the involution `sigma`.
pub fn involution_split_normalized(g: &Graph, sigma: &[usize]) -> Result<SpectrumSplit<f64>> {
    split_blocks(&normalized_laplacian_f(g)?, g, sigma, |v| v)
}

/// `4 sin²(πi/n)` for `i = 1..=n`; the last entry is exactly zero.
pub fn cycle_spectrum(n: usize) -> Result<Vec<f64>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok((1..=n)
        .map(|i| {
            if i == n {
                0.0
            } else {
                let s = (std::f64::consts::PI * i as f64 / n as f64).sin();
                4.0 * s * s
            }
        })
        .collect())
}

fn to_nalgebra(m: &DenseMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = m.order();
    let scale = m.entries.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let tol = 1e-12 * scale.max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (m.get(i, j) - m.get(j, i)).abs() > tol {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok(DMatrix::from_row_slice(n, n, &m.entries))
}

/// Eigenvalues and eigenvectors (as columns) of a symmetric matrix, in
/// ascending eigenvalue order.
pub fn eigen_sym(m: &DenseMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let a = to_nalgebra(m)?;
    let n = a.nrows();
    if n == 0 {
        return Ok((Vec::new(), a));
    }
    let eig = SymmetricEigen::new(a);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(n, n, |i, k| eig.eigenvectors[(i, order[k])]);
    Ok((values, vectors))
}

/// All eigenvalues of a symmetric matrix with multiplicity, ascending.
pub fn eigenvalues_sym(m: &DenseMatrix<f64>) -> Result<Vec<f64>> {
    Ok(eigen_sym(m)?.0)
}

/// Drops the single zero eigenvalue of a connected graph's (normalized)
/// Laplacian. A value counts as zero when `|ρ| < 1e-8 · max(1, ρ_max)`.
pub fn nonzero_eigenvalues(eigs: &[f64]) -> Result<Vec<f64>> {
    let top = eigs.iter().fold(0.0f64, |acc, v| acc.max(*v));
    let cutoff = 1e-8 * top.max(1.0);
    let (zeros, rest): (Vec<f64>, Vec<f64>) = eigs.iter().partition(|v| v.abs() < cutoff);
    if zeros.len() != 1 {
        return Err(Error::ZeroEigenvalueCount { found: zeros.len() });
    }
    Ok(rest)
}

/// `n · Σ 1/ρ_i` over the nonzero Laplacian eigenvalues.
pub fn spectral_kf(eigs: &[f64], n_vertices: usize) -> Result<f64> {
    let rest = nonzero_eigenvalues(eigs)?;
    Ok(n_vertices as f64 * rest.iter().map(|r| r.recip()).sum::<f64>())
}

/// `2m · Σ 1/λ_i` over the nonzero normalized-Laplacian eigenvalues.
pub fn spectral_kf_star(eigs: &[f64], m_edges: usize) -> Result<f64> {
    let rest = nonzero_eigenvalues(eigs)?;
    Ok(2.0 * m_edges as f64 * rest.iter().map(|l| l.recip()).sum::<f64>())
}

/// Spanning-tree count from the Laplacian spectrum, kept in log space
/// because the product overflows `f64` for moderately large graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTreeCount {
    /// Natural log of the count.
    pub ln: f64,
    /// The rounded count, present only when it fits in an `f64`.
    pub rounded: Option<f64>,
}

impl SpectralTreeCount {
    /// Relative difference from an exact count, measured through logs so it
    /// works past the `f64` range.
    pub fn relative_error(&self, exact: &BigInt) -> f64 {
        (self.ln - ln_bigint(exact)).exp_m1().abs()
    }
}

/// `(1/n) · Π ρ_i` over the nonzero Laplacian eigenvalues.
pub fn spectral_tree_count(eigs: &[f64], n_vertices: usize) -> Result<SpectralTreeCount> {
    let rest = nonzero_eigenvalues(eigs)?;
    let ln = rest.iter().map(|r| r.ln()).sum::<f64>() - (n_vertices as f64).ln();
    let value = ln.exp();
    Ok(SpectralTreeCount {
        ln,
        rounded: value.is_finite().then(|| value.round()),
    })
}

/// Natural log of a positive big integer.
pub fn ln_bigint(x: &BigInt) -> f64 {
    if !x.is_positive() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map_or(f64::NAN, f64::ln);
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().map_or(f64::NAN, f64::ln) + shift as f64 * std::f64::consts::LN_2
}

/// Floating-point estimates of Kf, Kf* and τ from the two spectra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralReport {
    pub kf: f64,
    pub kf_star: f64,
    pub tree_count: SpectralTreeCount,
}

pub fn spectral_report(g: &Graph) -> Result<SpectralReport> {
    let n = g.vertex_count();
    let lap = eigenvalues_sym(&laplacian(g).to_f64())?;
    let norm = eigenvalues_sym(&normalized_laplacian_f(g)?)?;
    let map_err = |e: Error| match e {
        Error::ZeroEigenvalueCount { found } if found > 1 => Error::Disconnected,
        other => other,
    };
    Ok(SpectralReport {
        kf: spectral_kf(&lap, n).map_err(map_err)?,
        kf_star: spectral_kf_star(&norm, g.edge_count()).map_err(map_err)?,
        tree_count: spectral_tree_count(&lap, n).map_err(map_err)?,
    })
}
