//! Simple undirected graphs on vertices `0..n`.
//!
//! Graphs are immutable values; every edit returns a new graph. Edges are
//! stored normalized (`u < w`) and sorted, neighbor lists are sorted, so
//! iteration order is deterministic everywhere.

mod io;
mod random;

pub use random::{
    labeled_trees, prufer_decode, random_graph, random_graph_with, random_tree, random_tree_with,
};

use std::collections::VecDeque;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// An undirected edge, normalized so that `u < w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub w: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        Edge {
            u: a.min(b),
            w: a.max(b),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// Neighbors of `v` are `nbrs[offsets[v]..offsets[v + 1]]`, ascending.
    offsets: Vec<usize>,
    nbrs: Vec<usize>,
}

/// A graph carved out of a parent, with `labels[i]` the parent label of
/// vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Subgraph {
    /// Local index of the parent vertex `label`, if it belongs here.
    pub fn local(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Output of [`Graph::join`]: the joined graph and the new labels of the
/// two joined vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Join {
    pub graph: Graph,
    pub u: usize,
    pub w: usize,
}

/// Output of [`Graph::join3`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Join3 {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Graph {
    /// Builds a simple graph. Self-loops, repeated edges and endpoints
    /// outside `0..n` are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::contract(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::contract(format!("self-loop at vertex {a}")));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::contract(format!(
                "duplicate edge ({},{})",
                pair[0].u, pair[0].w
            )));
        }
        Ok(Self::from_sorted_edges(n, list))
    }

    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut offsets = vec![0; n + 1];
        for e in &edges {
            offsets[e.u + 1] += 1;
            offsets[e.w + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        // offsets[v] serves as the fill cursor of v and ends up at the start
        // of v + 1; edges are sorted by (u, w), so every list fills ascending.
        let mut nbrs = vec![0; 2 * edges.len()];
        for e in &edges {
            nbrs[offsets[e.u]] = e.w;
            offsets[e.u] += 1;
            nbrs[offsets[e.w]] = e.u;
            offsets[e.w] += 1;
        }
        offsets.copy_within(0..n, 1);
        offsets[0] = 0;
        Graph {
            n,
            edges,
            offsets,
            nbrs,
        }
    }

    /// `n` isolated vertices. `Graph::empty(0)` is K₀.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted_edges(n, (1..n).map(|i| Edge::new(i - 1, i)).collect())
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|i| Edge::new(i - 1, i)).collect();
        edges.push(Edge::new(0, n - 1));
        edges.sort_unstable();
        Self::from_sorted_edges(n, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
            .collect();
        Self::from_sorted_edges(n, edges)
    }

    /// K₁,ₖ with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_edges(leaves + 1, (1..=leaves).map(|i| Edge::new(0, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.neighbors(a).binary_search(&b).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.n
            )))
        }
    }

    /// N(G): adjacency plus identity. Column `i` is the characteristic
    /// vector of the closed neighborhood of vertex `i`.
    pub fn closed_neighborhood_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::identity(self.n);
        for e in &self.edges {
            m.set(e.u, e.w, true);
            m.set(e.w, e.u, true);
        }
        m
    }

    /// Removes `v` and its edges. Labels above `v` shift down by one; the
    /// returned map sends each old label to its new label.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertex(v)?;
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|x| match x.cmp(&v) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some(Edge::new(map[e.u]?, map[e.w]?)))
            .collect();
        Ok((Self::from_sorted_edges(self.n - 1, edges), map))
    }

    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Graph> {
        if !self.has_edge(a, b) {
            return Err(Error::contract(format!(
                "edge ({a},{b}) is not in the graph"
            )));
        }
        let gone = Edge::new(a, b);
        let edges = self.edges.iter().copied().filter(|&e| e != gone).collect();
        Ok(Self::from_sorted_edges(self.n, edges))
    }

    /// Adds an edge that is not yet present.
    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b || self.has_edge(a, b) {
            return Err(Error::contract(format!("cannot add edge ({a},{b})")));
        }
        let mut edges = self.edges.clone();
        let e = Edge::new(a, b);
        let at = edges.binary_search(&e).unwrap_err();
        edges.insert(at, e);
        Ok(Self::from_sorted_edges(self.n, edges))
    }

    /// Disjoint union; `other`'s labels are offset by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge::new(e.u + off, e.w + off)));
        Self::from_sorted_edges(self.n + other.n, edges)
    }

    /// Joins vertex `u` of `g1` to vertex `w` of `g2` by a new edge.
    /// `g1` keeps its labels; `g2` is offset by `g1.n()`.
    pub fn join(g1: &Graph, u: usize, g2: &Graph, w: usize) -> Result<Join> {
        if g1.is_empty() || g2.is_empty() {
            return Err(Error::contract("join operands must be nonempty"));
        }
        g1.check_vertex(u)?;
        g2.check_vertex(w)?;
        let w_new = w + g1.n;
        let graph = g1.disjoint_union(g2).add_edge(u, w_new)?;
        Ok(Join { graph, u, w: w_new })
    }

    /// Disjoint union of three graphs plus the edges `x–y` and `y–z`.
    pub fn join3(
        g1: &Graph,
        x: usize,
        g2: &Graph,
        y: usize,
        g3: &Graph,
        z: usize,
    ) -> Result<Join3> {
        if g1.is_empty() || g2.is_empty() || g3.is_empty() {
            return Err(Error::contract("join operands must be nonempty"));
        }
        g1.check_vertex(x)?;
        g2.check_vertex(y)?;
        g3.check_vertex(z)?;
        let y_new = y + g1.n;
        let z_new = z + g1.n + g2.n;
        let graph = g1
            .disjoint_union(g2)
            .disjoint_union(g3)
            .add_edge(x, y_new)?
            .add_edge(y_new, z_new)?;
        Ok(Join3 {
            graph,
            x,
            y: y_new,
            z: z_new,
        })
    }

    /// Subgraph induced by `vertices` (any order, no repeats). Local labels
    /// follow the ascending order of the given vertices.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        if labels.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::contract("repeated vertex in induced subgraph"));
        }
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            self.check_vertex(v)?;
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u] != usize::MAX && local[e.w] != usize::MAX)
            .map(|e| Edge::new(local[e.u], local[e.w]))
            .collect();
        Ok(Subgraph {
            graph: Self::from_sorted_edges(labels.len(), edges),
            labels,
        })
    }

    /// Component index of every vertex; components are numbered in order
    /// of their smallest vertex.
    pub fn component_ids(&self) -> (usize, Vec<usize>) {
        let mut id = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if id[s] != usize::MAX {
                continue;
            }
            id[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &x in self.neighbors(v) {
                    if id[x] == usize::MAX {
                        id[x] = count;
                        queue.push_back(x);
                    }
                }
            }
            count += 1;
        }
        (count, id)
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().0
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Subgraph> {
        let (count, id) = self.component_ids();
        let mut members = vec![Vec::new(); count];
        for v in 0..self.n {
            members[id[v]].push(v);
        }
        members
            .iter()
            .map(|vs| {
                self.induced_subgraph(vs)
                    .expect("component vertices are valid")
            })
            .collect()
    }

    /// K₀ is not connected; K₁ is.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Whether removing the edge `a–b` disconnects its endpoints.
    pub fn is_cut_edge(&self, a: usize, b: usize) -> Result<bool> {
        if !self.has_edge(a, b) {
            return Err(Error::contract(format!(
                "edge ({a},{b}) is not in the graph"
            )));
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(v) = stack.pop() {
            for &x in self.neighbors(v) {
                if (v == a && x == b) || (v == b && x == a) {
                    continue;
                }
                if x == b {
                    return Ok(false);
                }
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        Ok(true)
    }

    /// Deletes the edge `a–b` of a graph in which it is a cut edge and
    /// returns the components containing `a` and `b`, labelled relative to
    /// `self`.
    pub fn split_at_edge(&self, a: usize, b: usize) -> Result<(Subgraph, Subgraph)> {
        if !self.has_edge(a, b) {
            return Err(Error::contract(format!(
                "edge ({a},{b}) is not in the graph"
            )));
        }
        let mut side: SmallVec<[u8; 64]> = smallvec![0; self.n];
        let mut stack: SmallVec<[usize; 64]> = SmallVec::new();
        for (root, mark) in [(a, 1), (b, 2)] {
            side[root] = mark;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &x in self.neighbors(v) {
                    if (v == a && x == b) || (v == b && x == a) || side[x] == mark {
                        continue;
                    }
                    if side[x] != 0 {
                        return Err(Error::contract(format!("edge ({a},{b}) is not a cut edge")));
                    }
                    side[x] = mark;
                    stack.push(x);
                }
            }
        }
        // One pass assigns local indices and distributes the edges.
        let mut local: SmallVec<[usize; 64]> = smallvec![0; self.n];
        let mut labels = (Vec::with_capacity(self.n), Vec::with_capacity(self.n));
        for v in 0..self.n {
            let list = match side[v] {
                1 => &mut labels.0,
                2 => &mut labels.1,
                _ => continue,
            };
            local[v] = list.len();
            list.push(v);
        }
        let mut edges = (
            Vec::with_capacity(labels.0.len()),
            Vec::with_capacity(labels.1.len()),
        );
        for e in &self.edges {
            let list = match (side[e.u], side[e.w]) {
                (1, 1) => &mut edges.0,
                (2, 2) => &mut edges.1,
                _ => continue,
            };
            list.push(Edge::new(local[e.u], local[e.w]));
        }
        let sub = |labels: Vec<usize>, edges: Vec<Edge>| Subgraph {
            graph: Self::from_sorted_edges(labels.len(), edges),
            labels,
        };
        Ok((sub(labels.0, edges.0), sub(labels.1, edges.1)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.w)).collect();
        write!(f, "Graph {{ n: {}, edges: {:?} }}", self.n, edges)
    }
}
