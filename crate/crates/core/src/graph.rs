//! Simple undirected graphs, the generators used throughout the crate, and
//! the edge-list text format.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple undirected graph stored as sorted neighbor lists.
///
/// Vertices are `0..vertex_count()`. Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({u}, {})",
                    w[0]
                )));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|n| n.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// True when `perm` maps edges onto edges.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertex_count();
        if perm.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || hit[p] {
                return false;
            }
            hit[p] = true;
        }
        self.edges().all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }

    /// Parses the whitespace-separated edge-list format: a header `n m`
    /// followed by `m` lines `u v` (0-based). Blank lines and lines starting
    /// with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let [n, m] = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(Error::Parse {
                line: header_line,
                message: "vertex count must be positive".into(),
            });
        }

        let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut seen_edges = 0;
        let mut last_line = header_line;
        for (line, content) in lines {
            last_line = line;
            if seen_edges == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let [u, v] = parse_pair(line, content)?;
            let err = |message: String| Err(Error::Parse { line, message });
            if u >= n || v >= n {
                return err(format!("vertex out of range 0..{n}"));
            }
            if u == v {
                return err(format!("self-loop at vertex {u}"));
            }
            if !adjacency[u].insert(v) {
                return err(format!("duplicate edge {u} {v}"));
            }
            adjacency[v].insert(u);
            seen_edges += 1;
        }
        if seen_edges != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("expected {m} edges, found {seen_edges}"),
            });
        }
        Ok(Graph {
            adjacency: adjacency.into_iter().map(|s| s.into_iter().collect()).collect(),
            edge_count: m,
        })
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got {:?}", content),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {s:?}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// The cycle `C_n` on vertices `0..n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `P_n` on vertices `0..n`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Strong product `g ⊠ h`, vertex `(u, v)` at index `u * |V(h)| + v`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let width = h.vertex_count();
    let index = |u: usize, v: usize| u * width + v;
    let mut edges = Vec::new();
    for u1 in 0..g.vertex_count() {
        for v1 in 0..width {
            let from = index(u1, v1);
            for u2 in std::iter::once(u1).chain(g.neighbors(u1).iter().copied()) {
                for v2 in std::iter::once(v1).chain(h.neighbors(v1).iter().copied()) {
                    let to = index(u2, v2);
                    if to > from {
                        edges.push((from, to));
                    }
                }
            }
        }
    }
    Graph::from_edges(g.vertex_count() * width, edges)
        .expect("strong product of simple graphs is simple")
}

/// Parameters of `P_2 ⊠ C_n` with a chosen set of vertical edges removed.
///
/// Rim vertices use 1-based labels: lower rim `i` is index `i - 1`, upper
/// rim `i'` is index `n + i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrismSpec {
    n: usize,
    deleted: BTreeSet<usize>,
}

impl PrismSpec {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, deleted: I) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("prism needs n >= 3, got {n}")));
        }
        let deleted: BTreeSet<usize> = deleted.into_iter().collect();
        if let Some(&bad) = deleted.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidParameter(format!(
                "deleted vertical edge {bad} outside 1..={n}"
            )));
        }
        Ok(PrismSpec { n, deleted })
    }

    /// The undeleted family member `G_n`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.deleted.len()
    }

    /// Deleted vertical edges as 1-based labels.
    pub fn deleted(&self) -> &BTreeSet<usize> {
        &self.deleted
    }

    pub fn lower(&self, label: usize) -> usize {
        label - 1
    }

    pub fn upper(&self, label: usize) -> usize {
        self.n + label - 1
    }

    /// The swap `i <-> i'`, which is an automorphism for every deletion set.
    pub fn involution(&self) -> Vec<usize> {
        let n = self.n;
        (0..2 * n).map(|v| if v < n { v + n } else { v - n }).collect()
    }
}

/// Builds `G_n` minus the vertical edges in `spec.deleted()`.
pub fn prism_family(spec: &PrismSpec) -> Graph {
    let n = spec.n;
    let mut edges = Vec::with_capacity(5 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((i, j));
        edges.push((n + i, n + j));
        edges.push((i, n + j));
        edges.push((n + i, j));
        if !spec.deleted.contains(&(i + 1)) {
            edges.push((i, n + i));
        }
    }
    Graph::from_edges(2 * n, edges).expect("prism construction is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_symmetric(g: &Graph) {
        for u in 0..g.vertex_count() {
            for &v in g.neighbors(u) {
                assert!(g.has_edge(v, u), "asymmetric pair ({u}, {v})");
                assert_ne!(u, v);
            }
        }
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn cycle_basics() {
        let c3 = cycle(3).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert!(c3.degrees().iter().all(|&d| d == 2));
        assert!(matches!(cycle(2), Err(Error::InvalidParameter(_))));
        assert_symmetric(&cycle(10).unwrap());
    }

    #[test]
    fn path_basics() {
        let p1 = path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        assert!(p1.is_connected());
        let p2 = path(2).unwrap();
        assert_eq!(p2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(path(0).is_err());
    }

    #[test]
    fn strong_product_small_cases() {
        let k6 = strong_product(&path(2).unwrap(), &cycle(3).unwrap());
        assert_eq!((k6.vertex_count(), k6.edge_count()), (6, 15));
        assert!(k6.degrees().iter().all(|&d| d == 5));

        let h = cycle(7).unwrap();
        assert_eq!(strong_product(&path(1).unwrap(), &h), h);
    }

    #[test]
    fn strong_product_matches_definition() {
        let g = path(3).unwrap();
        let h = cycle(5).unwrap();
        let p = strong_product(&g, &h);
        let w = h.vertex_count();
        for a in 0..p.vertex_count() {
            for b in 0..p.vertex_count() {
                let (u1, v1, u2, v2) = (a / w, a % w, b / w, b % w);
                let expected = a != b
                    && (u1 == u2 || g.has_edge(u1, u2))
                    && (v1 == v2 || h.has_edge(v1, v2));
                assert_eq!(p.has_edge(a, b), expected, "pair ({a}, {b})");
            }
        }
    }

    #[test]
    fn prism_matches_strong_product_when_nothing_deleted() {
        for n in 3..12 {
            let spec = PrismSpec::full(n).unwrap();
            let direct = prism_family(&spec);
            let product = strong_product(&path(2).unwrap(), &cycle(n).unwrap());
            assert_eq!(direct, product, "n = {n}");
            assert_eq!(direct.edge_count(), 5 * n);
        }
    }

    #[test]
    fn prism_with_one_deletion() {
        let spec = PrismSpec::new(5, [2]).unwrap();
        let g = prism_family(&spec);
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 24));
        let deg = g.degrees();
        let fours: Vec<usize> = (0..10).filter(|&v| deg[v] == 4).collect();
        assert_eq!(fours, vec![spec.lower(2), spec.upper(2)]);
        assert!(deg.iter().all(|&d| d == 4 || d == 5));

        let deg6 = prism_family(&PrismSpec::new(6, [1]).unwrap()).degrees();
        assert_eq!(deg6.iter().filter(|&&d| d == 4).count(), 2);
        assert_eq!(deg6.iter().filter(|&&d| d == 5).count(), 10);
    }

    #[test]
    fn prism_all_deleted_stays_connected() {
        let g = prism_family(&PrismSpec::new(4, 1..=4).unwrap());
        assert_eq!(g.edge_count(), 16);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert!(g.is_connected());
    }

    #[test]
    fn prism_spec_validation() {
        assert!(PrismSpec::new(2, []).is_err());
        assert!(PrismSpec::new(5, [0]).is_err());
        assert!(PrismSpec::new(5, [6]).is_err());
        assert_eq!(PrismSpec::new(5, [1, 1, 3]).unwrap().r(), 2);
    }

    #[test]
    fn involution_is_automorphism() {
        let spec = PrismSpec::new(7, [2, 5]).unwrap();
        let g = prism_family(&spec);
        assert!(g.is_automorphism(&spec.involution()));
        assert!(!g.is_automorphism(&[0, 1, 2]));
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).unwrap().is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn parse_triangle() {
        let g = Graph::parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g, cycle(3).unwrap());
    }

    #[test]
    fn parse_with_comments_and_blank_lines() {
        let g = Graph::parse_edge_list("# triangle\n\n3 3\n0 1\n# mid\n1 2\n0 2\n").unwrap();
        assert_eq!(g, cycle(3).unwrap());
    }

    #[test]
    fn parse_rejections() {
        let line_of = |text: &str| match Graph::parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("2 1\n0 0"), 2);
        assert_eq!(line_of("3 2\n0 1\n1 0"), 3);
        assert_eq!(line_of("3 1\n0 3"), 2);
        assert_eq!(line_of("3 1\n0 x"), 2);
        assert_eq!(line_of("3 1 7\n0 1"), 1);
        assert_eq!(line_of("3 2\n0 1"), 2);
        assert_eq!(line_of("3 1\n0 1\n1 2"), 3);
        assert_eq!(line_of(""), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let c4 = cycle(4).unwrap();
        assert_eq!(Graph::parse_edge_list(&c4.to_edge_list()).unwrap(), c4);
        let g = prism_family(&PrismSpec::new(6, [1, 4]).unwrap());
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_symmetric(&back);
        assert_eq!(back, g);
    }
}
