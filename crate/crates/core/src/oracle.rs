//! Brute-force ground truth by exhaustive enumeration.
//!
//! Nothing here touches the elimination code: closed neighborhoods are
//! packed into integer masks straight from the adjacency lists and every
//! pattern is tried.

use serde::Serialize;

use crate::classify::ActivationClass;
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::graph::Graph;
use crate::structure::PassCertificate;

/// Largest graph for pattern enumeration (`2^n` patterns).
pub const ENUMERATION_MAX_N: usize = 20;
/// Largest graph for set-partition enumeration (Bell(10) = 115975).
pub const PARTITION_MAX_N: usize = 10;

fn guard(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.n() > limit {
        Err(Error::UnsupportedSize {
            what,
            size: g.n(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Closed neighborhood of each vertex as a bit mask.
fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &x| m | 1 << x))
        .collect()
}

/// Every pattern `p` with `N(G) p = c`, in ascending order of the integer
/// whose bit `i` is `p(i)`.
pub fn enumerate_solutions(g: &Graph, c: &BitVec) -> Result<Vec<BitVec>> {
    guard(g, ENUMERATION_MAX_N, "graph for solution enumeration")?;
    if c.len() != g.n() {
        return Err(Error::contract(format!(
            "configuration has length {} but the graph has {} vertices",
            c.len(),
            g.n()
        )));
    }
    let n = g.n();
    let masks = closed_masks(g);
    let target = c.to_mask() as u32;
    // Gray-code walk: consecutive patterns differ in one pushed vertex.
    let mut hits = Vec::new();
    let mut pattern = 0u32;
    let mut image = 0u32;
    for step in 0u32..(1u32 << n) {
        if step > 0 {
            let v = step.trailing_zeros() as usize;
            pattern ^= 1 << v;
            image ^= masks[v];
        }
        if image == target {
            hits.push(pattern);
        }
    }
    hits.sort_unstable();
    Ok(hits
        .into_iter()
        .map(|p| BitVec::from_mask(n, u64::from(p)))
        .collect())
}

/// How often each vertex is pushed across all all-ones solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivationStats {
    pub total_solutions: usize,
    pub activated_count: Vec<usize>,
}

impl ActivationStats {
    /// Class of `v` from its count: all, none or exactly half of the
    /// solutions. `None` if the count is anything else.
    pub fn class_of(&self, v: usize) -> Option<ActivationClass> {
        let (k, total) = (self.activated_count[v], self.total_solutions);
        if k == total && total > 0 {
            Some(ActivationClass::AlwaysActivated)
        } else if k == 0 {
            Some(ActivationClass::NeverActivated)
        } else if 2 * k == total {
            Some(ActivationClass::HalfActivated)
        } else {
            None
        }
    }

    /// Classification of every vertex, or `None` if any count breaks the
    /// all/none/half dichotomy.
    pub fn classes(&self) -> Option<Vec<ActivationClass>> {
        (0..self.activated_count.len())
            .map(|v| self.class_of(v))
            .collect()
    }
}

pub fn activation_stats(g: &Graph) -> Result<ActivationStats> {
    let solutions = enumerate_solutions(g, &BitVec::ones(g.n()))?;
    let activated_count = (0..g.n())
        .map(|v| solutions.iter().filter(|p| p.get(v)).count())
        .collect();
    Ok(ActivationStats {
        total_solutions: solutions.len(),
        activated_count,
    })
}

fn subset_connected(masks: &[u32], subset: u32) -> bool {
    if subset == 0 {
        return false;
    }
    let mut reached = subset & subset.wrapping_neg();
    loop {
        let grown = (0..masks.len())
            .filter(|&v| reached >> v & 1 == 1)
            .fold(reached, |acc, v| acc | (masks[v] & subset));
        if grown == reached {
            return reached == subset;
        }
        reached = grown;
    }
}

/// Whether the subgraph induced by `subset` has only the zero null
/// pattern, by trying every nonempty pattern inside it.
fn subset_always_solvable(masks: &[u32], subset: u32) -> bool {
    let members: Vec<usize> = (0..masks.len()).filter(|&v| subset >> v & 1 == 1).collect();
    let mut image = 0u32;
    for step in 1u32..(1u32 << members.len()) {
        image ^= masks[members[step.trailing_zeros() as usize]] & subset;
        if image == 0 {
            return false;
        }
    }
    true
}

/// π(G) by enumerating every set partition as a restricted growth string.
/// Blocks must induce connected always-solvable subgraphs. The witness is
/// the first minimum found in that order.
pub fn pi_partition_oracle(g: &Graph) -> Result<(usize, PassCertificate)> {
    guard(g, PARTITION_MAX_N, "graph for partition enumeration")?;
    let n = g.n();
    let masks = closed_masks(g);
    let solvable: Vec<bool> = (0..1u32 << n)
        .map(|s| subset_connected(&masks, s) && subset_always_solvable(&masks, s))
        .collect();

    struct Search<'a> {
        n: usize,
        solvable: &'a [bool],
        blocks: Vec<u32>,
        best: Option<Vec<u32>>,
    }

    impl Search<'_> {
        fn run(&mut self, v: usize) {
            if let Some(best) = &self.best {
                if self.blocks.len() >= best.len() {
                    return;
                }
            }
            if v == self.n {
                if self.blocks.iter().all(|&b| self.solvable[b as usize]) {
                    self.best = Some(self.blocks.clone());
                }
                return;
            }
            for i in 0..self.blocks.len() {
                self.blocks[i] |= 1 << v;
                self.run(v + 1);
                self.blocks[i] &= !(1 << v);
            }
            self.blocks.push(1 << v);
            self.run(v + 1);
            self.blocks.pop();
        }
    }

    let mut search = Search {
        n,
        solvable: &solvable,
        blocks: Vec::new(),
        best: None,
    };
    search.run(0);
    let best = search.best.unwrap_or_default();
    let blocks = best
        .iter()
        .map(|&b| (0..n).filter(|&v| b >> v & 1 == 1).collect())
        .collect();
    Ok((best.len(), PassCertificate { blocks }))
}

/// Every labeled graph on `n` vertices (one per edge subset), `n ≤ 8`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "2^(n choose 2) graphs is too many beyond n = 8");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are distinct and in range")
    })
}
