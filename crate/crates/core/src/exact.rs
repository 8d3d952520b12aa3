//! Exact invariants of arbitrary connected graphs.
//!
//! Resistances come from the Laplacian grounded at vertex 0: deleting its row
//! and column leaves a nonsingular integer matrix whose adjugate (computed
//! fraction-free) gives every effective resistance over the common
//! denominator `det`, which by the matrix-tree theorem is the spanning-tree
//! count.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, IntRows};

/// Where a reported value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Exact,
    Spectral,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Spectral => "spectral",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value together with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tagged<T> {
    pub value: T,
    pub method: Method,
}

impl<T> Tagged<T> {
    pub fn exact(value: T) -> Self {
        Tagged {
            value,
            method: Method::Exact,
        }
    }

    pub fn closed_form(value: T) -> Self {
        Tagged {
            value,
            method: Method::ClosedForm,
        }
    }
}

/// All effective resistances of a connected graph, stored as integer
/// numerators over one shared positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResistanceMatrix {
    order: usize,
    denominator: BigInt,
    numerators: Vec<BigInt>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Shared denominator; equals the number of spanning trees.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn numerator(&self, i: usize, j: usize) -> &BigInt {
        &self.numerators[i * self.order + j]
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.numerator(i, j).clone(), self.denominator.clone())
    }

    pub fn to_f64(&self, i: usize, j: usize) -> f64 {
        use num_traits::ToPrimitive;
        self.get(i, j).to_f64().unwrap_or(f64::NAN)
    }

    /// `Σ_{i<j} w(i, j) · r_ij` with integer weights.
    fn weighted_pair_sum<F>(&self, weight: F) -> BigRational
    where
        F: Fn(usize, usize) -> u64,
    {
        let mut total = BigInt::zero();
        for i in 0..self.order {
            for j in i + 1..self.order {
                let w = weight(i, j);
                if w == 1 {
                    total += self.numerator(i, j);
                } else {
                    total += self.numerator(i, j) * BigInt::from(w);
                }
            }
        }
        BigRational::new(total, self.denominator.clone())
    }
}

fn grounded_laplacian(g: &Graph) -> IntRows {
    let n = g.vertex_count();
    let mut rows = vec![vec![BigInt::zero(); n - 1]; n - 1];
    for v in 1..n {
        rows[v - 1][v - 1] = BigInt::from(g.degree(v));
        for &u in g.neighbors(v) {
            if u != 0 {
                rows[v - 1][u - 1] = BigInt::from(-1);
            }
        }
    }
    rows
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Exact effective resistance between every pair of vertices.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "resistance needs at least two vertices".into(),
        ));
    }
    require_connected(g)?;
    let (det, adj) = linalg::adjugate(grounded_laplacian(g)).ok_or(Error::Disconnected)?;

    // Extended inverse scaled by det; vertex 0 contributes zeros.
    let x = |i: usize, j: usize| -> BigInt {
        if i == 0 || j == 0 {
            BigInt::zero()
        } else {
            adj[i - 1][j - 1].clone()
        }
    };
    let mut numerators = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let v: BigInt = x(i, i) + x(j, j) - x(i, j) * 2;
            numerators[i * n + j] = v.clone();
            numerators[j * n + i] = v;
        }
    }
    Ok(ResistanceMatrix {
        order: n,
        denominator: det,
        numerators,
    })
}

/// Sum of resistance distances over unordered pairs.
pub fn kirchhoff_index(g: &Graph) -> Result<BigRational> {
    Ok(resistance_matrix(g)?.weighted_pair_sum(|_, _| 1))
}

/// `Σ_{i<j} d_i d_j r_ij`.
pub fn mult_deg_kirchhoff(g: &Graph) -> Result<BigRational> {
    let r = resistance_matrix(g)?;
    Ok(kf_star_from(g, &r))
}

fn kf_star_from(g: &Graph, r: &ResistanceMatrix) -> BigRational {
    let d = g.degrees();
    r.weighted_pair_sum(|i, j| (d[i] * d[j]) as u64)
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Shortest-path distances between all pairs.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.vertex_count())
        .map(|s| {
            bfs_distances(g, s)
                .into_iter()
                .collect::<Option<Vec<usize>>>()
                .ok_or(Error::Disconnected)
        })
        .collect()
}

/// `Σ_j d(i, j)` for a single vertex.
pub fn vertex_distance_sum(g: &Graph, i: usize) -> Result<u64> {
    if i >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!("no vertex {i}")));
    }
    bfs_distances(g, i)
        .into_iter()
        .try_fold(0u64, |acc, d| d.map(|d| acc + d as u64))
        .ok_or(Error::Disconnected)
}

fn pair_sum(dist: &[Vec<usize>], weight: impl Fn(usize, usize) -> u128) -> BigInt {
    let mut total: u128 = 0;
    for (i, row) in dist.iter().enumerate() {
        for (j, &d) in row.iter().enumerate().skip(i + 1) {
            total += weight(i, j) * d as u128;
        }
    }
    BigInt::from(total)
}

/// Wiener index.
pub fn wiener(g: &Graph) -> Result<BigInt> {
    Ok(pair_sum(&distance_matrix(g)?, |_, _| 1))
}

/// Gutman index, `Σ_{i<j} d_i d_j d(i, j)`.
pub fn gutman(g: &Graph) -> Result<BigInt> {
    let deg = g.degrees();
    Ok(pair_sum(&distance_matrix(g)?, |i, j| {
        (deg[i] * deg[j]) as u128
    }))
}

/// Number of spanning trees; zero for disconnected graphs.
pub fn spanning_trees(g: &Graph) -> BigInt {
    if g.vertex_count() == 1 {
        return BigInt::one();
    }
    if !g.is_connected() {
        return BigInt::zero();
    }
    linalg::determinant(grounded_laplacian(g))
}

/// The five invariants of a connected graph, all computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub kf: Tagged<BigRational>,
    pub kf_star: Tagged<BigRational>,
    pub wiener: Tagged<BigInt>,
    pub gutman: Tagged<BigInt>,
    pub tree_count: Tagged<BigInt>,
}

pub fn full_report(g: &Graph) -> Result<InvariantReport> {
    let r = resistance_matrix(g)?;
    let dist = distance_matrix(g)?;
    let deg = g.degrees();
    Ok(InvariantReport {
        kf: Tagged::exact(r.weighted_pair_sum(|_, _| 1)),
        kf_star: Tagged::exact(kf_star_from(g, &r)),
        wiener: Tagged::exact(pair_sum(&dist, |_, _| 1)),
        gutman: Tagged::exact(pair_sum(&dist, |i, j| (deg[i] * deg[j]) as u128)),
        tree_count: Tagged::exact(r.denominator().clone()),
    })
}
