//! Undirected multigraphs with parallel edges and loops, the graph families
//! used throughout the crate, and their Laplacians.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;

/// Largest hypercube dimension the constructor accepts.
pub const MAX_HYPERCUBE_DIMENSION: u32 = 20;

/// Undirected multigraph on dense vertex indices. Parallel edges are
/// repeated pairs, loops are pairs `(v, v)`. The edge list order is part of
/// the representation but never of any result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Multigraph {
    /// Edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: Vec::new(),
            labels: None,
        }
    }

    pub fn from_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut g = Multigraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        self.edges.push((u, v));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Cosmetic vertex labels; ignored by every computation.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.vertex_count {
            return Err(Error::invalid(format!(
                "expected {} labels, got {}",
                self.vertex_count,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Degree of `v`, counting multiplicity; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Degrees sorted ascending. Handy for cheap isomorphy screens.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// Two vertices joined by `n` parallel edges (generalized theta graph).
    pub fn theta(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("theta graph needs at least one edge"));
        }
        let mut g = Multigraph::new(2);
        for _ in 0..n {
            g.edges.push((0, 1));
        }
        g.labels = Some(vec!["x".into(), "y".into()]);
        Ok(g)
    }

    /// Bipartite 4-vertex multigraph: `a` parallel edges on each straight
    /// pair (x1-y1, x2-y2) and `b` on each crossed pair (x1-y2, x2-y1).
    /// Vertex order is (x1, x2, y1, y2). The result is (a+b)-regular with
    /// 2(a+b) edges.
    pub fn b_graph(a: usize, b: usize) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::invalid("b_graph needs a + b >= 1"));
        }
        let mut g = Multigraph::new(4);
        let (x1, x2, y1, y2) = (0, 1, 2, 3);
        for _ in 0..a {
            g.edges.push((x1, y1));
            g.edges.push((x2, y2));
        }
        for _ in 0..b {
            g.edges.push((x1, y2));
            g.edges.push((x2, y1));
        }
        g.labels = Some(vec!["x1".into(), "x2".into(), "y1".into(), "y2".into()]);
        Ok(g)
    }

    /// The n-cube: vertices are the 2^n bitstrings, edges join pairs at
    /// Hamming distance 1.
    pub fn hypercube(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("hypercube dimension must be at least 1"));
        }
        if n > MAX_HYPERCUBE_DIMENSION {
            return Err(Error::size_limit(format!(
                "hypercube dimension {n} exceeds the maximum of {MAX_HYPERCUBE_DIMENSION}"
            )));
        }
        let size = 1usize << n;
        let mut g = Multigraph::new(size);
        for v in 0..size {
            for bit in 0..n {
                let u = v | (1 << bit);
                if u != v {
                    g.edges.push((v, u));
                }
            }
        }
        g.labels = Some(
            (0..size)
                .map(|v| format!("{v:0width$b}", width = n as usize))
                .collect(),
        );
        Ok(g)
    }

    /// Laplacian D - A. Off-diagonal (u, v) is minus the u-v edge
    /// multiplicity; the diagonal carries degrees. Loops cancel.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.vertex_count;
        let mut m = IntMatrix::zeros(n, n);
        for &(u, v) in &self.edges {
            if u == v {
                continue;
            }
            *m.get_mut(u, u) += 1;
            *m.get_mut(v, v) += 1;
            *m.get_mut(u, v) -= 1;
            *m.get_mut(v, u) -= 1;
        }
        m
    }

    /// True iff there is exactly one connected component. The one-vertex
    /// graph is connected; the empty graph is not (it has no components).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Multiset of edges with each pair normalized to (min, max), sorted.
    /// Equal results mean equal graphs up to edge order.
    pub fn sorted_edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Parse the plain edge-list format: `#` comments, a `vertices N`
    /// header, then one `u v` pair per line (repeats for multiplicity,
    /// `v v` for loops).
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut graph: Option<Multigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match graph.as_mut() {
                None => {
                    if tokens.len() != 2 || tokens[0] != "vertices" {
                        return Err(Error::parse(line_no, "expected header `vertices N`"));
                    }
                    let n = parse_count(tokens[1], line_no)?;
                    graph = Some(Multigraph::new(n));
                }
                Some(g) => {
                    if tokens.len() != 2 {
                        return Err(Error::parse(line_no, "expected edge line `u v`"));
                    }
                    let u = parse_count(tokens[0], line_no)?;
                    let v = parse_count(tokens[1], line_no)?;
                    g.add_edge(u, v).map_err(|_| {
                        Error::parse(
                            line_no,
                            format!(
                                "endpoint out of range: ({u}, {v}) with {} vertices",
                                g.vertex_count
                            ),
                        )
                    })?;
                }
            }
        }
        graph.ok_or_else(|| Error::parse(1, "missing `vertices N` header"))
    }

    /// Inverse of `parse_edge_list` up to comments and edge order.
    pub fn serialize_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.vertex_count);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

pub(crate) fn parse_count(token: &str, line_no: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| {
        Error::parse(
            line_no,
            format!("expected a nonnegative integer, got `{token}`"),
        )
    })
}
