//! Seeded generators and Prüfer-sequence tree enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Decodes a Prüfer sequence of length `n - 2` (entries in `0..n`) into
/// the labeled tree it encodes.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::contract(format!(
            "Prüfer entry {bad} out of range for {n} vertices"
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` may
    // jump back below it when a parent becomes a leaf.
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a tree has a leaf");
    let mut leaf = ptr;
    for &parent in seq {
        edges.push(Edge::new(leaf, parent));
        degree[parent] -= 1;
        if degree[parent] == 1 && parent < ptr {
            leaf = parent;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push(Edge::new(leaf, n - 1));
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Every labeled tree on `n ≥ 1` vertices, each exactly once
/// (`n^(n-2)` of them, by Prüfer enumeration in lexicographic order).
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tree = if n == 1 {
            Graph::empty(1)
        } else {
            prufer_decode(&seq).expect("entries stay in range")
        };
        // Odometer increment; finishing the last sequence ends the stream.
        done = true;
        for digit in seq.iter_mut().rev() {
            *digit += 1;
            if *digit < n {
                done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    })
}

/// Uniform random labeled tree: K₁ and P₂ for `n ≤ 2`, otherwise a uniform
/// Prüfer sequence.
pub fn random_tree_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    match n {
        0 => Err(Error::contract("a tree needs at least one vertex")),
        1 => Ok(Graph::empty(1)),
        2 => Ok(Graph::path(2)),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}

/// Erdős–Rényi G(n, p): each pair independently with probability `p`.
pub fn random_graph_with<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::contract(format!(
            "edge probability {p} is outside [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push(Edge::new(a, b));
            }
        }
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_graph_with(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}
