//! Exact spanning-tree counts: Matrix-Tree via the Laplacian cofactor, a
//! deletion-contraction oracle, and closed forms for the built-in families.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Edge budget for the deletion-contraction oracle; each edge can double
/// the recursion.
pub const MAX_BRUTEFORCE_EDGES: usize = 16;

/// Largest cube dimension `kappa_cube_closed` accepts.
pub const MAX_CUBE_CLOSED_DIMENSION: u32 = 64;

/// Number of spanning trees of some graph. Nonnegative by construction;
/// zero exactly for disconnected graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCount(pub BigUint);

impl TreeCount {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for TreeCount {
    fn from(v: u64) -> Self {
        TreeCount(BigUint::from(v))
    }
}

impl std::fmt::Display for TreeCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Spanning-tree count by Matrix-Tree: the (last, last) principal cofactor
/// of the Laplacian. 1 for the one-vertex graph, 0 when disconnected.
pub fn kappa(g: &Multigraph) -> Result<TreeCount> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::invalid("kappa needs at least one vertex"));
    }
    let cofactor = g.laplacian().first_cofactor(n - 1, n - 1)?;
    bigint_to_count(cofactor)
}

fn bigint_to_count(value: BigInt) -> Result<TreeCount> {
    match value.to_biguint() {
        Some(v) => Ok(TreeCount(v)),
        None => Err(Error::Internal(format!(
            "negative spanning-tree count {value} from a Laplacian cofactor"
        ))),
    }
}

/// Independent oracle: kappa(G) = kappa(G - e) + kappa(G / e) over non-loop
/// edges, loops dropped. Exponential, hence the edge budget.
pub fn kappa_bruteforce(g: &Multigraph) -> Result<TreeCount> {
    if g.vertex_count() == 0 {
        return Err(Error::invalid("kappa needs at least one vertex"));
    }
    if g.edge_count() > MAX_BRUTEFORCE_EDGES {
        return Err(Error::size_limit(format!(
            "{} edges exceed the deletion-contraction budget of {MAX_BRUTEFORCE_EDGES}",
            g.edge_count()
        )));
    }
    Ok(TreeCount(count_by_deletion_contraction(
        g.vertex_count(),
        g.edges().to_vec(),
    )))
}

fn count_by_deletion_contraction(vertex_count: usize, edges: Vec<(usize, usize)>) -> BigUint {
    let non_loop = edges.iter().position(|&(u, v)| u != v);
    let Some(idx) = non_loop else {
        // Only loops (or nothing) left: a tree exists iff one vertex remains.
        return if vertex_count == 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    let (u, v) = edges[idx];

    let mut deleted = edges.clone();
    deleted.remove(idx);
    let without = count_by_deletion_contraction(vertex_count, deleted);

    // Contract v into u: the contracted endpoint disappears, later indices
    // shift down, parallel edges survive and may become loops.
    let (keep, gone) = (u.min(v), u.max(v));
    let remap = |w: usize| {
        if w == gone {
            keep
        } else if w > gone {
            w - 1
        } else {
            w
        }
    };
    let mut contracted = Vec::with_capacity(edges.len() - 1);
    for (i, &(a, b)) in edges.iter().enumerate() {
        if i == idx {
            continue;
        }
        contracted.push((remap(a), remap(b)));
    }
    let with = count_by_deletion_contraction(vertex_count - 1, contracted);

    without + with
}

/// Closed form for the theta graph: n parallel edges give n spanning trees.
pub fn kappa_theta(n: usize) -> Result<TreeCount> {
    if n == 0 {
        return Err(Error::invalid("theta graph needs at least one edge"));
    }
    Ok(TreeCount(BigUint::from(n)))
}

/// Closed form for `b_graph(a, b)`: 2ab(a+b).
pub fn kappa_b(a: usize, b: usize) -> Result<TreeCount> {
    if a == 0 && b == 0 {
        return Err(Error::invalid("b_graph needs a + b >= 1"));
    }
    let value = BigUint::from(2u32) * BigUint::from(a) * BigUint::from(b) * BigUint::from(a + b);
    Ok(TreeCount(value))
}

/// Closed form for the n-cube: 2^(2^n - n - 1) * prod_{i=1..n} i^C(n, i).
pub fn kappa_cube_closed(n: u32) -> Result<TreeCount> {
    if n == 0 || n > MAX_CUBE_CLOSED_DIMENSION {
        return Err(Error::invalid(format!(
            "cube dimension must be in 1..={MAX_CUBE_CLOSED_DIMENSION}, got {n}"
        )));
    }
    let two_exp = (1u128 << n) - u128::from(n) - 1;
    let mut value = BigUint::one() << usize::try_from(two_exp).expect("shift fits usize");
    let binomials = pascal_row(u64::from(n));
    for i in 2..=u64::from(n) {
        value *= Pow::pow(BigUint::from(i), binomials[i as usize]);
    }
    Ok(TreeCount(value))
}

/// Row n of Pascal's triangle, computed by the additive recursion.
/// Fits u64 for n <= 64.
pub(crate) fn pascal_row(n: u64) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(1);
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(1);
        row = next;
    }
    row
}

/// True iff `d` divides `k` exactly. `d` must be nonzero.
pub fn divides(d: &TreeCount, k: &TreeCount) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::invalid("division by a zero tree count"));
    }
    Ok(k.0.is_multiple_of(&d.0))
}
