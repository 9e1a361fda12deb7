//! Voltage graphs over (Z/2Z)^m, their derived covers, characters of the
//! deck group, and the twisted-Laplacian route to spanning-tree counts.
//!
//! Every group element is an involution, so voltages and characters are
//! plain bit masks and edge orientation never matters. A canonical
//! orientation (smaller endpoint first) is fixed anyway.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;
use crate::multigraph::{parse_count, Multigraph};
use crate::spanning::{self, TreeCount};

/// Largest supported rank of the voltage group (Z/2Z)^m. Character
/// enumeration and cover products walk all 2^m - 1 nontrivial characters.
pub const MAX_RANK: u32 = 24;

/// A character of (Z/2Z)^m, encoded as the m-bit mask of its kernel
/// complement: chi(g) = (-1)^<mask, g> with the mod-2 dot product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    mask: u32,
}

impl Character {
    pub fn new(mask: u32) -> Self {
        Character { mask }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// The trivial character is the one with the zero mask.
    pub fn is_trivial(&self) -> bool {
        self.mask == 0
    }

    /// chi(voltage) as +1 or -1.
    pub fn eval(&self, voltage: u32) -> i8 {
        if self.is_negative_on(voltage) {
            -1
        } else {
            1
        }
    }

    pub fn is_negative_on(&self, voltage: u32) -> bool {
        (self.mask & voltage).count_ones() % 2 == 1
    }
}

/// All 2^m - 1 nontrivial characters of (Z/2Z)^m, mask ascending.
pub fn enumerate_characters(m: u32) -> Result<Vec<Character>> {
    if m > MAX_RANK {
        return Err(Error::size_limit(format!(
            "rank {m} exceeds the maximum of {MAX_RANK}"
        )));
    }
    Ok((1..(1u32 << m)).map(Character::new).collect())
}

/// A base multigraph with a voltage in (Z/2Z)^m on every edge, aligned
/// with the base edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageGraph {
    base: Multigraph,
    rank: u32,
    voltages: Vec<u32>,
}

impl VoltageGraph {
    pub fn new(base: Multigraph, rank: u32, voltages: Vec<u32>) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::size_limit(format!(
                "rank {rank} exceeds the maximum of {MAX_RANK}"
            )));
        }
        if voltages.len() != base.edge_count() {
            return Err(Error::invalid(format!(
                "{} voltages for {} edges",
                voltages.len(),
                base.edge_count()
            )));
        }
        let group_mask = ((1u64 << rank) - 1) as u32;
        if let Some(v) = voltages.iter().find(|&&v| v & !group_mask != 0) {
            return Err(Error::invalid(format!(
                "voltage {v:#b} is not an element of (Z/2Z)^{rank}"
            )));
        }
        Ok(VoltageGraph {
            base,
            rank,
            voltages,
        })
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    /// Rank m of the voltage group (Z/2Z)^m.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn voltages(&self) -> &[u32] {
        &self.voltages
    }

    fn check_character(&self, chi: &Character) -> Result<()> {
        if u64::from(chi.mask()) >= (1u64 << self.rank) {
            return Err(Error::invalid(format!(
                "character mask {:#b} is not in the dual of (Z/2Z)^{}",
                chi.mask(),
                self.rank
            )));
        }
        Ok(())
    }

    /// The voltage graph whose derived graph is the n-cube: base theta(n),
    /// rank n-1, the i-th basis vector on edge i and zero on the last edge.
    pub fn cube(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cube dimension must be at least 1"));
        }
        if n - 1 > MAX_RANK {
            return Err(Error::size_limit(format!(
                "cube dimension {n} needs rank {} > {MAX_RANK}",
                n - 1
            )));
        }
        let base = Multigraph::theta(n as usize)?;
        let voltages = (0..n)
            .map(|i| if i < n - 1 { 1u32 << i } else { 0 })
            .collect();
        VoltageGraph::new(base, n - 1, voltages)
    }

    /// Number of vertices of the derived graph: 2^rank * |V(base)|.
    pub fn derived_vertex_count(&self) -> usize {
        (1usize << self.rank) * self.base.vertex_count()
    }

    /// The derived cover: vertices are (base vertex, group element) pairs
    /// with id `v * 2^rank + g`; a base edge {u, v} with voltage s lifts to
    /// the 2^rank edges {(u, g), (v, g xor s)}.
    pub fn derived_graph(&self) -> Multigraph {
        let sheets = 1usize << self.rank;
        let mut derived = Multigraph::new(self.derived_vertex_count());
        for (&(a, b), &voltage) in self.base.edges().iter().zip(&self.voltages) {
            let (u, v) = (a.min(b), a.max(b));
            for g in 0..sheets {
                let lifted_u = u * sheets + g;
                let lifted_v = v * sheets + (g ^ voltage as usize);
                derived
                    .add_edge(lifted_u, lifted_v)
                    .expect("lift stays in range");
            }
        }
        if let Some(labels) = self.base.labels() {
            let lifted = (0..self.base.vertex_count())
                .flat_map(|v| {
                    (0..sheets).map(move |g| {
                        if self.rank == 0 {
                            labels[v].clone()
                        } else {
                            format!("{}|{}", labels[v], group_bits(g as u32, self.rank))
                        }
                    })
                })
                .collect();
            derived.set_labels(lifted).expect("one label per lift");
        }
        derived
    }

    /// The double cover attached to a nontrivial character: voltages are
    /// collapsed to one bit, set exactly where chi is -1.
    pub fn intermediate_double_cover(&self, chi: &Character) -> Result<Multigraph> {
        self.check_character(chi)?;
        if chi.is_trivial() {
            return Err(Error::invalid(
                "the trivial character yields the base graph, not a double cover",
            ));
        }
        let voltages = self
            .voltages
            .iter()
            .map(|&v| chi.is_negative_on(v) as u32)
            .collect();
        let double = VoltageGraph::new(self.base.clone(), 1, voltages)?;
        Ok(double.derived_graph())
    }

    /// Laplacian twisted by a character: each u-v edge contributes
    /// chi(voltage) to the (u, v) adjacency instead of 1. Symmetric since
    /// the group has exponent 2. The trivial character recovers the plain
    /// Laplacian.
    pub fn twisted_laplacian(&self, chi: &Character) -> Result<IntMatrix> {
        self.check_character(chi)?;
        let n = self.base.vertex_count();
        let mut m = IntMatrix::zeros(n, n);
        for (&(u, v), &voltage) in self.base.edges().iter().zip(&self.voltages) {
            let sign = i64::from(chi.eval(voltage));
            if u == v {
                // Degree 2 minus twice the twisted self-adjacency.
                *m.get_mut(u, u) += 2 - 2 * sign;
            } else {
                *m.get_mut(u, u) += 1;
                *m.get_mut(v, v) += 1;
                *m.get_mut(u, v) -= sign;
                *m.get_mut(v, u) -= sign;
            }
        }
        Ok(m)
    }

    /// det of the twisted Laplacian for a nontrivial character. Always
    /// nonnegative; zero exactly when the character kills a cycle that the
    /// cover needs for connectivity.
    pub fn twisted_determinant(&self, chi: &Character) -> Result<BigInt> {
        if chi.is_trivial() {
            return Err(Error::invalid(
                "the twisted determinant of the trivial character is the singular Laplacian",
            ));
        }
        self.twisted_laplacian(chi)?.determinant()
    }

    /// Spanning-tree count of the derived graph via the character product:
    /// kappa(base) * prod over nontrivial chi of det L_chi, divided by
    /// 2^rank. The division is exact; a remainder is a bug.
    pub fn kappa_via_characters(&self) -> Result<TreeCount> {
        let base_kappa = spanning::kappa(&self.base)?;
        let mut product = BigInt::from(base_kappa.0);
        for chi in enumerate_characters(self.rank)? {
            product *= self.twisted_determinant(&chi)?;
        }
        let (quotient, remainder) = product.div_rem(&(BigInt::one() << self.rank));
        if !remainder.is_zero() {
            return Err(Error::Internal(format!(
                "character product not divisible by 2^{}: remainder {remainder}",
                self.rank
            )));
        }
        match quotient.to_biguint() {
            Some(q) => Ok(TreeCount(q)),
            None => Err(Error::Internal(
                "negative character product for a spanning-tree count".into(),
            )),
        }
    }

    /// Parse the voltage-graph format: `#` comments, `vertices N` and
    /// `rank M` headers, then `u v g` edge lines where g is an M-character
    /// binary string (leftmost character = basis vector 0), or `-` when
    /// the rank is 0.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_count: Option<usize> = None;
        let mut graph: Option<VoltageGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if vertex_count.is_none() {
                if tokens.len() != 2 || tokens[0] != "vertices" {
                    return Err(Error::parse(line_no, "expected header `vertices N`"));
                }
                vertex_count = Some(parse_count(tokens[1], line_no)?);
                continue;
            }
            match graph.as_mut() {
                None => {
                    if tokens.len() != 2 || tokens[0] != "rank" {
                        return Err(Error::parse(line_no, "expected header `rank M`"));
                    }
                    let rank = parse_count(tokens[1], line_no)? as u32;
                    let base = Multigraph::new(vertex_count.unwrap());
                    graph = Some(
                        VoltageGraph::new(base, rank, Vec::new())
                            .map_err(|e| Error::parse(line_no, e.to_string()))?,
                    );
                }
                Some(vg) => {
                    if tokens.len() != 3 {
                        return Err(Error::parse(line_no, "expected edge line `u v g`"));
                    }
                    let u = parse_count(tokens[0], line_no)?;
                    let v = parse_count(tokens[1], line_no)?;
                    let voltage = parse_voltage(tokens[2], vg.rank, line_no)?;
                    vg.base.add_edge(u, v).map_err(|_| {
                        Error::parse(
                            line_no,
                            format!(
                                "endpoint out of range: ({u}, {v}) with {} vertices",
                                vg.base.vertex_count()
                            ),
                        )
                    })?;
                    vg.voltages.push(voltage);
                }
            }
        }
        match (vertex_count, graph) {
            (_, Some(vg)) => Ok(vg),
            (Some(_), None) => Err(Error::parse(1, "missing `rank M` header")),
            (None, _) => Err(Error::parse(1, "missing `vertices N` header")),
        }
    }

    /// Inverse of `parse` up to comments.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.base.vertex_count());
        let _ = writeln!(out, "rank {}", self.rank);
        for (&(u, v), &voltage) in self.base.edges().iter().zip(&self.voltages) {
            let _ = writeln!(out, "{u} {v} {}", group_bits_or_dash(voltage, self.rank));
        }
        out
    }
}

/// m-character binary rendering of a group element; character j is bit j,
/// so basis vector 0 prints leftmost.
pub fn group_bits(g: u32, rank: u32) -> String {
    (0..rank)
        .map(|j| if g >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn group_bits_or_dash(g: u32, rank: u32) -> String {
    if rank == 0 {
        "-".to_string()
    } else {
        group_bits(g, rank)
    }
}

/// Parse a group element in the same convention as `group_bits`. Rank 0
/// has a single element, written `-`.
pub fn parse_group_element(token: &str, rank: u32) -> Result<u32> {
    if rank == 0 {
        if token == "-" {
            return Ok(0);
        }
        return Err(Error::invalid(format!(
            "rank 0 group elements are written `-`, got `{token}`"
        )));
    }
    if token.len() != rank as usize {
        return Err(Error::invalid(format!(
            "group element `{token}` must have exactly {rank} binary digits"
        )));
    }
    let mut value = 0u32;
    for (j, c) in token.chars().enumerate() {
        match c {
            '1' => value |= 1 << j,
            '0' => {}
            _ => {
                return Err(Error::invalid(format!(
                    "group element `{token}` contains a non-binary character"
                )))
            }
        }
    }
    Ok(value)
}

fn parse_voltage(token: &str, rank: u32, line_no: usize) -> Result<u32> {
    parse_group_element(token, rank).map_err(|e| match e {
        Error::InvalidParameter(msg) => Error::parse(line_no, msg),
        other => other,
    })
}
