//! Independent oracles shared by the integration tests. Nothing here calls
//! into the solvers it is used to check.

#![allow(dead_code)]

use invkit::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn is_spanning_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    edges.len() + 1 == n
}

/// Counts spanning trees by testing every (n-1)-edge subset.
pub fn brute_force_spanning_trees(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if n == 1 {
        return 1;
    }
    let k = n - 1;
    if edges.len() < k {
        return 0;
    }
    let mut count = 0;
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen = Vec::with_capacity(k);
    loop {
        chosen.clear();
        chosen.extend(idx.iter().map(|&i| edges[i]));
        if is_spanning_tree(n, &chosen) {
            count += 1;
        }
        let m = edges.len();
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + m - k) else {
            return count;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All-pairs distances by Floyd-Warshall; `None` marks unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn brute_wiener(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d[i][j].unwrap()).sum()
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] * cofactor_det(&minor);
    }
    total
}

fn laplacian_without(g: &Graph, drop: &[usize]) -> Vec<Vec<i64>> {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|v| !drop.contains(v)).collect();
    keep.iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    if i == j {
                        g.degree(i) as i64
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// `r_ij = det L[{i,j}^c] / det L[{i}^c]`, both by cofactor expansion.
pub fn cofactor_resistance(g: &Graph, i: usize, j: usize) -> BigRational {
    if i == j {
        return BigRational::from(BigInt::from(0));
    }
    let num = cofactor_det(&laplacian_without(g, &[i, j]));
    let den = cofactor_det(&laplacian_without(g, &[i]));
    BigRational::new(num.into(), den.into())
}

/// Random labeled tree: vertex `v` attaches to a uniformly random earlier
/// vertex, then labels are shuffled.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut labels: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        labels.swap(i, j);
    }
    (1..n).map(|v| (labels[v], labels[rng.gen_range(0..v)])).collect()
}

/// Random connected graph: a random tree plus each other pair with
/// probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = random_tree(n, rng);
    let mut present = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        present[u][v] = true;
        present[v][u] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labeled simple graph on `n` vertices, as edge lists.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}
