//! Random-input generators shared by the integration suites.

use covertrees::{Multigraph, VoltageGraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Connected multigraph: a random spanning tree plus random extra edges
/// (parallels and loops allowed).
pub fn random_connected_multigraph(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let extra = rng.gen_range(0..=max_edges.saturating_sub(edges.len()));
    for _ in 0..extra {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    Multigraph::from_edges(n, edges).unwrap()
}

/// Voltage graph over a random (not necessarily connected) base.
pub fn random_voltage_graph(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
    max_rank: u32,
) -> VoltageGraph {
    let n = rng.gen_range(1..=max_vertices);
    let e = rng.gen_range(0..=max_edges);
    let edges = (0..e)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    let base = Multigraph::from_edges(n, edges).unwrap();
    let rank = rng.gen_range(0..=max_rank);
    let voltages = (0..base.edge_count())
        .map(|_| rng.gen_range(0..(1u32 << rank)))
        .collect();
    VoltageGraph::new(base, rank, voltages).unwrap()
}
