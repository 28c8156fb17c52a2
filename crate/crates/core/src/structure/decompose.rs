//! Decomposition of always-solvable trees into always-solvable subtrees
//! glued by Type-(0,1) and Type-(1,1,1) connections.

use serde::{Deserialize, Serialize};

use super::Verdict;
use crate::classify::{ActivationClass, AllOnesAnalysis};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{Graph, Subgraph};

/// A recursive recipe for rebuilding a tree. All labels are vertices of
/// the original tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum DecompositionCertificate {
    Leaf {
        vertex: usize,
    },
    /// `left` and `right` joined by the edge `u–w`, with `A(u) = 0` in
    /// `left` and `A(w) = 1` in `right`.
    Join01 {
        left: Box<DecompositionCertificate>,
        u: usize,
        w: usize,
        right: Box<DecompositionCertificate>,
    },
    /// Edges `x–y` and `y–z`, with `x`, `y`, `z` always-activated in
    /// `first`, `middle` and `last` respectively.
    Join111 {
        first: Box<DecompositionCertificate>,
        x: usize,
        middle: Box<DecompositionCertificate>,
        y: usize,
        last: Box<DecompositionCertificate>,
        z: usize,
    },
}

impl DecompositionCertificate {
    /// Number of leaves, i.e. vertices covered.
    pub fn size(&self) -> usize {
        match self {
            DecompositionCertificate::Leaf { .. } => 1,
            DecompositionCertificate::Join01 { left, right, .. } => left.size() + right.size(),
            DecompositionCertificate::Join111 {
                first,
                middle,
                last,
                ..
            } => first.size() + middle.size() + last.size(),
        }
    }
}

pub fn decompose_tree(t: &Graph) -> Result<DecompositionCertificate> {
    if !t.is_tree() {
        return Err(Error::contract("decomposition requires a tree"));
    }
    let root = analyzed(Subgraph {
        graph: t.clone(),
        labels: (0..t.n()).collect(),
    })?;
    if !root.is_always_solvable() {
        return Err(Error::contract(
            "decomposition requires an always-solvable tree",
        ));
    }
    decompose(&root)
}

/// A piece of the tree together with its all-ones analysis, computed once.
struct Part {
    sub: Subgraph,
    analysis: AllOnesAnalysis,
}

impl Part {
    fn is_always_solvable(&self) -> bool {
        self.analysis.kernel_basis.is_empty()
    }

    fn label(&self, local: usize) -> usize {
        self.sub.labels[local]
    }
}

fn analyzed(sub: Subgraph) -> Result<Part> {
    let analysis = AllOnesAnalysis::new(&sub.graph)?;
    Ok(Part { sub, analysis })
}

/// Splits `part` at a local edge, with both sides relabelled to the tree.
fn split(part: &Part, a: usize, b: usize) -> Result<(Part, Part)> {
    let relabel = |mut s: Subgraph| {
        for l in &mut s.labels {
            *l = part.label(*l);
        }
        s
    };
    let (sa, sb) = part.sub.graph.split_at_edge(a, b)?;
    Ok((analyzed(relabel(sa))?, analyzed(relabel(sb))?))
}

fn decompose(part: &Part) -> Result<DecompositionCertificate> {
    let g = &part.sub.graph;
    if g.n() == 1 {
        return Ok(DecompositionCertificate::Leaf {
            vertex: part.label(0),
        });
    }
    let act = |v: usize| part.analysis.activation(v);
    let (u, w) = g
        .edges()
        .iter()
        .find_map(|e| {
            use ActivationClass::*;
            match (act(e.u), act(e.w)) {
                (NeverActivated, AlwaysActivated) => Some((e.u, e.w)),
                (AlwaysActivated, NeverActivated) => Some((e.w, e.u)),
                _ => None,
            }
        })
        .ok_or_else(|| stuck("no adjacent never/always-activated pair", &part.sub))?;
    let (u_side, s_side) = split(part, u, w)?;
    if u_side.is_always_solvable() && s_side.is_always_solvable() {
        return Ok(DecompositionCertificate::Join01 {
            left: Box::new(decompose(&u_side)?),
            u: part.label(u),
            w: part.label(w),
            right: Box::new(decompose(&s_side)?),
        });
    }
    // Type-(1,−1): w is half-activated in S and has a half-activated
    // neighbor z; cutting w–z leaves two always-solvable pieces.
    let w_label = part.label(w);
    let w_local = s_side.sub.local(w_label).expect("w lies in its own side");
    let z_local = s_side
        .sub
        .graph
        .neighbors(w_local)
        .iter()
        .copied()
        .find(|&z| s_side.analysis.activation(z) == ActivationClass::HalfActivated)
        .ok_or_else(|| stuck("no half-activated neighbor of w", &s_side.sub))?;
    let (w_side, z_side) = split(&s_side, w_local, z_local)?;
    if !u_side.is_always_solvable() || !w_side.is_always_solvable() || !z_side.is_always_solvable()
    {
        return Err(stuck(
            "Type-(1,1,1) split produced a piece with positive nullity",
            &part.sub,
        ));
    }
    Ok(DecompositionCertificate::Join111 {
        first: Box::new(decompose(&u_side)?),
        x: part.label(u),
        middle: Box::new(decompose(&w_side)?),
        y: w_label,
        last: Box::new(decompose(&z_side)?),
        z: s_side.label(z_local),
    })
}

fn stuck(what: &str, part: &Subgraph) -> Error {
    Error::invariant(format!(
        "{what} in always-solvable subtree on labels {:?}:\n{}",
        part.labels,
        part.graph.to_edge_list()
    ))
}

/// Vertices (sorted) and edges (normalized, sorted) of a rebuilt piece.
struct Piece {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Piece {
    fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Closed neighborhood matrix in local indices, with the row and
    /// column of `skip` left zero. Its rank is that of `N(piece − skip)`.
    fn matrix(&self, skip: Option<usize>) -> BitMatrix {
        let local = |v: usize| {
            self.vertices
                .binary_search(&v)
                .expect("edge endpoint in piece")
        };
        let k = self.vertices.len();
        let mut m = BitMatrix::zeros(k, k);
        for i in (0..k).filter(|&i| Some(i) != skip) {
            m.set(i, i, true);
        }
        for &(a, b) in &self.edges {
            let (a, b) = (local(a), local(b));
            if Some(a) != skip && Some(b) != skip {
                m.set(a, b, true);
                m.set(b, a, true);
            }
        }
        m
    }

    /// Activation number of `v` in this piece, which must be always
    /// solvable: `A(v) = 1 − ν(piece − v)`.
    fn activation(&self, v: usize, role: &str) -> std::result::Result<i8, String> {
        let k = self.vertices.len();
        let nu = k - self.matrix(None).rank();
        if nu != 0 {
            return Err(format!(
                "piece containing {role} = {v} has nullity {nu}, expected an always-solvable subtree"
            ));
        }
        let local = self.vertices.binary_search(&v).expect("membership checked");
        let nu_minus = (k - 1) - self.matrix(Some(local)).rank();
        Ok(1 - nu_minus as i8)
    }

    fn merge(pieces: &[Piece], new_edges: &[(usize, usize)]) -> std::result::Result<Piece, String> {
        let mut vertices = Vec::with_capacity(pieces.iter().map(|p| p.vertices.len()).sum());
        for p in pieces {
            vertices.extend_from_slice(&p.vertices);
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(format!("vertex {} appears in two sibling pieces", w[0]));
        }
        let mut edges = Vec::with_capacity(vertices.len());
        for p in pieces {
            edges.extend_from_slice(&p.edges);
        }
        edges.extend(new_edges.iter().map(|&(a, b)| (a.min(b), a.max(b))));
        edges.sort_unstable();
        Ok(Piece { vertices, edges })
    }
}

/// Rebuilds the tree bottom-up, recomputing every activation constraint on
/// the rebuilt pieces, and checks that the result is exactly `t`.
pub fn verify_decomposition(t: &Graph, cert: &DecompositionCertificate) -> Verdict {
    check(t, cert).into()
}

fn check(t: &Graph, cert: &DecompositionCertificate) -> std::result::Result<(), String> {
    let root = rebuild(t.n(), cert)?;
    if root.vertices != (0..t.n()).collect::<Vec<_>>() {
        return Err(format!(
            "certificate covers {} vertices, tree has {}",
            root.vertices.len(),
            t.n()
        ));
    }
    let tree_edges: Vec<(usize, usize)> = t.edges().iter().map(|e| (e.u, e.w)).collect();
    if root.edges != tree_edges {
        return Err("rebuilt edge set differs from the tree".into());
    }
    Ok(())
}

fn expect_activation(
    piece: &Piece,
    v: usize,
    role: &str,
    want: i8,
) -> std::result::Result<(), String> {
    if !piece.contains(v) {
        return Err(format!("{role} = {v} is not in its piece"));
    }
    let got = piece.activation(v, role)?;
    if got != want {
        return Err(format!(
            "{role} = {v} has activation number {got}, expected {want}"
        ));
    }
    Ok(())
}

fn rebuild(n: usize, node: &DecompositionCertificate) -> std::result::Result<Piece, String> {
    match node {
        DecompositionCertificate::Leaf { vertex } => {
            if *vertex >= n {
                return Err(format!("leaf vertex {vertex} out of range"));
            }
            Ok(Piece {
                vertices: vec![*vertex],
                edges: Vec::new(),
            })
        }
        DecompositionCertificate::Join01 { left, u, w, right } => {
            let l = rebuild(n, left)?;
            let r = rebuild(n, right)?;
            expect_activation(&l, *u, "u", 0)?;
            expect_activation(&r, *w, "w", 1)?;
            Piece::merge(&[l, r], &[(*u, *w)])
        }
        DecompositionCertificate::Join111 {
            first,
            x,
            middle,
            y,
            last,
            z,
        } => {
            let f = rebuild(n, first)?;
            let m = rebuild(n, middle)?;
            let l = rebuild(n, last)?;
            expect_activation(&f, *x, "x", 1)?;
            expect_activation(&m, *y, "y", 1)?;
            expect_activation(&l, *z, "z", 1)?;
            Piece::merge(&[f, m, l], &[(*x, *y), (*y, *z)])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DecompositionCertificate::*;

    fn leaf(v: usize) -> Box<DecompositionCertificate> {
        Box::new(Leaf { vertex: v })
    }

    #[test]
    fn single_vertex() {
        assert_eq!(
            decompose_tree(&Graph::empty(1)).unwrap(),
            Leaf { vertex: 0 }
        );
    }

    #[test]
    fn path_three_is_a_triple_join() {
        let cert = decompose_tree(&Graph::path(3)).unwrap();
        assert_eq!(
            cert,
            Join111 {
                first: leaf(0),
                x: 0,
                middle: leaf(1),
                y: 1,
                last: leaf(2),
                z: 2
            }
        );
        assert!(verify_decomposition(&Graph::path(3), &cert).is_valid());
    }

    #[test]
    fn path_four_is_a_zero_one_join() {
        let p4 = Graph::path(4);
        let cert = decompose_tree(&p4).unwrap();
        let Join01 { left, u, w, right } = &cert else {
            panic!("expected join01, got {cert:?}");
        };
        assert_eq!((*u, *w), (1, 0));
        assert_eq!(**right, Leaf { vertex: 0 });
        assert_eq!(left.size(), 3);
        assert!(verify_decomposition(&p4, &cert).is_valid());

        let swapped = Join01 {
            left: left.clone(),
            u: *w,
            w: *u,
            right: right.clone(),
        };
        assert!(!verify_decomposition(&p4, &swapped).is_valid());
    }

    #[test]
    fn non_solvable_child_is_rejected() {
        // P₃ with the middle leaf replaced by a two-vertex piece.
        let bogus = Join111 {
            first: leaf(0),
            x: 0,
            middle: Box::new(Join01 {
                left: leaf(1),
                u: 1,
                w: 2,
                right: leaf(2),
            }),
            y: 1,
            last: leaf(2),
            z: 2,
        };
        assert!(!verify_decomposition(&Graph::path(3), &bogus).is_valid());
    }

    #[test]
    fn wrong_tree_is_rejected() {
        let cert = decompose_tree(&Graph::path(3)).unwrap();
        let other = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(!verify_decomposition(&other, &cert).is_valid());
    }

    #[test]
    fn preconditions() {
        assert!(decompose_tree(&Graph::path(2)).is_err());
        assert!(decompose_tree(&Graph::cycle(3)).is_err());
    }

    #[test]
    fn json_shape() {
        let cert = decompose_tree(&Graph::path(4)).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(
            json.starts_with(r#"{"kind":"join01","left":{"kind":"join111""#),
            "{json}"
        );
        let back: DecompositionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
