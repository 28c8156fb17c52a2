use serde::{Deserialize, Serialize};

use super::Verdict;
use crate::classify::{ActivationClass, AllOnesAnalysis};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver;

/// A vertex removal order whose nullities drop by one per step until they
/// reach zero, then stay there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainCertificate {
    /// Original vertex labels, in removal order.
    #[serde(rename = "order")]
    pub removal_order: Vec<usize>,
    /// ν(G₀), …, ν(Gₙ) where G₀ = G and Gₙ = K₀.
    #[serde(rename = "nullities")]
    pub expected_nullities: Vec<usize>,
}

/// `max(ν − k, 0)` for `k = 0..=n`.
fn schedule(nu: usize, n: usize) -> Vec<usize> {
    (0..=n).map(|k| nu.saturating_sub(k)).collect()
}

/// Removes the lowest half-activated vertex while the nullity is positive,
/// then the lowest always-activated vertex until nothing is left.
pub fn build_chain(g: &Graph) -> Result<ChainCertificate> {
    if g.is_empty() {
        return Err(Error::contract(
            "chain construction needs at least one vertex",
        ));
    }
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let mut order = Vec::with_capacity(g.n());
    let mut nullities = Vec::with_capacity(g.n() + 1);
    while !current.is_empty() {
        let analysis = AllOnesAnalysis::new(&current)?;
        nullities.push(analysis.kernel_basis.len());
        let wanted = if analysis.kernel_basis.is_empty() {
            ActivationClass::AlwaysActivated
        } else {
            ActivationClass::HalfActivated
        };
        let v = (0..current.n())
            .find(|&v| analysis.activation(v) == wanted)
            .ok_or_else(|| {
                Error::invariant(format!(
                    "no {wanted:?} vertex in subgraph:\n{}",
                    current.to_edge_list()
                ))
            })?;
        order.push(labels.remove(v));
        current = current.delete_vertex(v)?.0;
    }
    nullities.push(0);
    if nullities != schedule(nullities[0], g.n()) {
        return Err(Error::invariant(format!(
            "realized nullities {nullities:?} do not follow the chain schedule"
        )));
    }
    Ok(ChainCertificate {
        removal_order: order,
        expected_nullities: nullities,
    })
}

/// Replays the removals, recomputing every nullity from scratch.
pub fn verify_chain(g: &Graph, cert: &ChainCertificate) -> Verdict {
    check_chain(g, cert).into()
}

fn check_chain(g: &Graph, cert: &ChainCertificate) -> std::result::Result<(), String> {
    let n = g.n();
    if cert.removal_order.len() != n {
        return Err(format!(
            "removal order has {} entries, graph has {n} vertices",
            cert.removal_order.len()
        ));
    }
    let mut seen = vec![false; n];
    for &v in &cert.removal_order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(format!("removal order is not a permutation (entry {v})"));
        }
    }
    if cert.expected_nullities.len() != n + 1 {
        return Err(format!(
            "expected {} nullities, found {}",
            n + 1,
            cert.expected_nullities.len()
        ));
    }
    let nu = solver::nullity(g);
    if cert.expected_nullities != schedule(nu, n) {
        return Err(format!(
            "claimed nullities {:?} differ from the schedule max(ν−k,0) with ν = {nu}",
            cert.expected_nullities
        ));
    }
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..n).collect();
    for (k, &v) in cert.removal_order.iter().enumerate() {
        let local = labels
            .iter()
            .position(|&l| l == v)
            .expect("permutation checked");
        labels.remove(local);
        current = current
            .delete_vertex(local)
            .expect("local index in range")
            .0;
        let realized = solver::nullity(&current);
        if realized != cert.expected_nullities[k + 1] {
            return Err(format!(
                "after removing {v} (step {}), nullity is {realized}, claimed {}",
                k + 1,
                cert.expected_nullities[k + 1]
            ));
        }
    }
    Ok(())
}
