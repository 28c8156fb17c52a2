//! Partitions into always-solvable subgraphs (PASS).
//!
//! Every block must induce a connected, always-solvable subgraph. Allowing
//! disconnected blocks would make any independent set a block, and the two
//! colour classes of a tree would then always form a PASS of size 2.

use serde::{Deserialize, Serialize};

use super::Verdict;
use crate::classify::{ActivationClass, AllOnesAnalysis};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver;

/// Largest graph accepted by [`pi_exact`].
pub const PI_EXACT_MAX_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PassCertificate {
    pub blocks: Vec<Vec<usize>>,
}

/// Minimum PASS of a tree: cut edges between two half-activated vertices
/// (lowest edge first) until the forest has nullity zero. Each cut lowers
/// the nullity by exactly one, giving `ν(T) + 1` blocks.
pub fn min_pass_tree(t: &Graph) -> Result<PassCertificate> {
    if !t.is_tree() {
        return Err(Error::contract("minimal PASS construction requires a tree"));
    }
    let mut forest = t.clone();
    loop {
        // The kernel of a forest splits over its components, so classifying
        // the whole forest classifies each component.
        let analysis = AllOnesAnalysis::new(&forest)?;
        if analysis.kernel_basis.is_empty() {
            break;
        }
        let half = |v| analysis.activation(v) == ActivationClass::HalfActivated;
        let e = forest
            .edges()
            .iter()
            .find(|e| half(e.u) && half(e.w))
            .copied()
            .ok_or_else(|| {
                Error::invariant(format!(
                    "forest with positive nullity has no edge between half-activated vertices:\n{}",
                    forest.to_edge_list()
                ))
            })?;
        forest = forest.delete_edge(e.u, e.w)?;
    }
    let blocks: Vec<Vec<usize>> = forest.components().into_iter().map(|c| c.labels).collect();
    let nu = solver::nullity(t);
    if blocks.len() != nu + 1 {
        return Err(Error::invariant(format!(
            "tree of nullity {nu} split into {} blocks",
            blocks.len()
        )));
    }
    Ok(PassCertificate { blocks })
}

/// Checks that the blocks partition `V(G)` and each induces a connected,
/// always-solvable subgraph. With `claim_minimal`, also checks the block
/// count: `ν(T) + 1` on trees, [`pi_exact`] otherwise (small graphs only).
pub fn verify_pass(g: &Graph, cert: &PassCertificate, claim_minimal: bool) -> Result<Verdict> {
    if let Err(reason) = check_partition(g, cert) {
        return Ok(Verdict::Invalid(reason));
    }
    if claim_minimal {
        let optimum = if g.is_tree() {
            solver::nullity(g) + 1
        } else {
            pi_exact(g)?
        };
        if cert.blocks.len() != optimum {
            return Ok(Verdict::Invalid(format!(
                "{} blocks claimed minimal, but the minimum is {optimum}",
                cert.blocks.len()
            )));
        }
    }
    Ok(Verdict::Valid)
}

fn check_partition(g: &Graph, cert: &PassCertificate) -> std::result::Result<(), String> {
    let n = g.n();
    let mut owner = vec![None; n];
    for (i, block) in cert.blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(format!("block {i} is empty"));
        }
        for &v in block {
            if v >= n {
                return Err(format!(
                    "block {i} names vertex {v}, graph has {n} vertices"
                ));
            }
            if let Some(j) = owner[v].replace(i) {
                return Err(format!("vertex {v} appears in blocks {j} and {i}"));
            }
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(format!("vertex {v} is not covered"));
    }
    for (i, block) in cert.blocks.iter().enumerate() {
        let sub = g.induced_subgraph(block).map_err(|e| e.to_string())?;
        if !sub.graph.is_connected() {
            return Err(format!("block {i} induces a disconnected subgraph"));
        }
        let nu = solver::nullity(&sub.graph);
        if nu != 0 {
            return Err(format!("block {i} induces a subgraph of nullity {nu}"));
        }
    }
    Ok(())
}

/// π(G): the fewest blocks in any PASS, by dynamic programming over vertex
/// subsets. Only for `n ≤ PI_EXACT_MAX_N`.
pub fn pi_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > PI_EXACT_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "graph for exact π",
            size: n,
            limit: PI_EXACT_MAX_N,
        });
    }
    let full = (1usize << n) - 1;
    let solvable: Vec<bool> = (0..=full)
        .map(|mask| {
            let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let sub = g.induced_subgraph(&vs).expect("subset of valid vertices");
            sub.graph.is_connected() && solver::is_always_solvable(&sub.graph)
        })
        .collect();
    // best[mask] = π of the subgraph induced by `mask`; the block holding
    // the lowest vertex of `mask` is enumerated as a submask.
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if solvable[block] && best[mask ^ block] != usize::MAX {
                best[mask] = best[mask].min(best[mask ^ block] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[full])
}
