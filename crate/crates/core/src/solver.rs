//! Game semantics: a pattern `p` solves a configuration `c` on `G` iff
//! `N(G) p = c` over GF(2).

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::graph::Graph;

/// Largest kernel dimension for which [`SolutionSet::enumerate`] will
/// materialize every solution.
pub const MAX_ENUMERATED_NULLITY: usize = 20;

/// All solving patterns of one configuration: `particular + span(kernel_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: BitVec,
    pub kernel_basis: Vec<BitVec>,
}

impl SolutionSet {
    pub fn nullity(&self) -> usize {
        self.kernel_basis.len()
    }

    /// Number of solving patterns, `2^ν`, when it fits in a `u128`.
    pub fn count(&self) -> Option<u128> {
        1u128.checked_shl(self.nullity() as u32)
    }

    /// Lists every solution. The `i`-th entry adds the basis vectors
    /// selected by the bits of `i`.
    pub fn enumerate(&self) -> Result<Vec<BitVec>> {
        let k = self.nullity();
        if k > MAX_ENUMERATED_NULLITY {
            return Err(Error::UnsupportedSize {
                what: "solution set nullity",
                size: k,
                limit: MAX_ENUMERATED_NULLITY,
            });
        }
        let mut out = Vec::with_capacity(1 << k);
        let mut current = self.particular.clone();
        out.push(current.clone());
        // Gray code order: one XOR per step.
        for i in 1u64..(1 << k) {
            current.xor_assign(&self.kernel_basis[i.trailing_zeros() as usize]);
            out.push(current.clone());
        }
        Ok(out)
    }
}

fn check_len(g: &Graph, v: &BitVec, what: &str) -> Result<()> {
    if v.len() == g.n() {
        Ok(())
    } else {
        Err(Error::contract(format!(
            "{what} has length {} but the graph has {} vertices",
            v.len(),
            g.n()
        )))
    }
}

/// ν(G) = dim Ker N(G). ν(K₀) = 0.
pub fn nullity(g: &Graph) -> usize {
    g.n() - g.closed_neighborhood_matrix().rank()
}

pub fn rank(g: &Graph) -> usize {
    g.closed_neighborhood_matrix().rank()
}

pub fn is_always_solvable(g: &Graph) -> bool {
    nullity(g) == 0
}

/// Canonical kernel basis of N(G).
pub fn null_patterns(g: &Graph) -> Vec<BitVec> {
    g.closed_neighborhood_matrix().nullspace_basis()
}

/// `c` is solvable iff it is orthogonal to every null pattern.
pub fn is_solvable(g: &Graph, c: &BitVec) -> Result<bool> {
    check_len(g, c, "configuration")?;
    Ok(null_patterns(g).iter().all(|l| !l.dot(c)))
}

pub fn solve_config(g: &Graph, c: &BitVec) -> Result<Option<SolutionSet>> {
    check_len(g, c, "configuration")?;
    let (particular, kernel_basis) = gf2::solve_with_kernel(&g.closed_neighborhood_matrix(), c)?;
    Ok(particular.map(|particular| SolutionSet {
        particular,
        kernel_basis,
    }))
}

/// Solves the all-ones configuration, which has a solution on every graph.
pub fn solve_all_ones(g: &Graph) -> Result<SolutionSet> {
    if g.is_empty() {
        return Err(Error::contract(
            "the all-ones problem needs at least one vertex",
        ));
    }
    solve_config(g, &BitVec::ones(g.n()))?.ok_or_else(|| {
        Error::invariant(format!(
            "all-ones configuration reported unsolvable on graph:\n{}",
            g.to_edge_list()
        ))
    })
}

/// State after pushing every vertex of `p` starting from `c`: `c + N(G) p`.
pub fn apply_pattern(g: &Graph, c: &BitVec, p: &BitVec) -> Result<BitVec> {
    check_len(g, c, "configuration")?;
    check_len(g, p, "pattern")?;
    let mut out = c.clone();
    for v in p.iter_ones() {
        out.flip(v);
        for &x in g.neighbors(v) {
            out.flip(x);
        }
    }
    Ok(out)
}

/// `N(G − e) p`, obtained from `N(G) p` by flipping `u` when `w` is pushed
/// and `w` when `u` is pushed.
pub fn transported_config(g: &Graph, u: usize, w: usize, p: &BitVec) -> Result<BitVec> {
    if !g.has_edge(u, w) {
        return Err(Error::contract(format!(
            "edge ({u},{w}) is not in the graph"
        )));
    }
    check_len(g, p, "pattern")?;
    let mut c = g.closed_neighborhood_matrix().mul_vec(p)?;
    if p.get(w) {
        c.flip(u);
    }
    if p.get(u) {
        c.flip(w);
    }
    Ok(c)
}
