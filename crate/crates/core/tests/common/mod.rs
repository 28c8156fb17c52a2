#![allow(dead_code)]

use lightsout::graph::{random_graph_with, random_tree_with};
use lightsout::{solver, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random G(n, p) with `n` uniform in `min_n..=max_n` and `p` uniform in [0, 1].
pub fn random_graph_between(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.0..=1.0);
    random_graph_with(rng, n, p).unwrap()
}

/// Rejection-samples an always-solvable random tree with `n` uniform in
/// `1..=max_n`, skipping `n = 2`: P₂ is the only tree there and has nullity 1.
pub fn random_always_solvable_tree(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = loop {
        let n = rng.gen_range(1..=max_n);
        if n != 2 {
            break n;
        }
    };
    loop {
        let t = random_tree_with(rng, n).unwrap();
        if solver::is_always_solvable(&t) {
            return t;
        }
    }
}

/// Isomorphism-invariant encoding of a tree: the smallest AHU string over
/// its (one or two) centers.
pub fn canonical_tree_form(t: &Graph) -> String {
    let n = t.n();
    if n == 1 {
        return "()".into();
    }
    // Peel leaves layer by layer; the last layer holds the centers.
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &x in t.neighbors(v) {
                degree[x] -= 1;
                if degree[x] == 1 {
                    next.push(x);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(t, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&x| x != parent)
        .map(|&x| encode(t, x, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Bit mask of a pattern's support.
pub fn mask_of(p: &lightsout::BitVec) -> u64 {
    p.to_mask()
}
