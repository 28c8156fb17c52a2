//! Lights Out on simple graphs, solved over GF(2).
//!
//! Pushing a vertex toggles it and its neighbors; a pattern `p` clears a
//! configuration `c` exactly when `N(G) p = c`, where `N(G)` is the closed
//! neighborhood matrix. On top of that linear algebra this crate
//! classifies vertices by their activation numbers and builds certificates
//! for vertex-removal chains, minimal partitions of trees into
//! always-solvable subtrees, and decompositions of always-solvable trees.
//! Every certificate has a verifier that recomputes its claims from
//! scratch, and [`oracle`] provides exhaustive ground truth for small
//! graphs.
//!
//! ```
//! use lightsout::{classify, graph::Graph, solver};
//!
//! let p4 = Graph::path(4);
//! assert!(solver::is_always_solvable(&p4));
//! let a: Vec<i8> = classify::activation_vector(&p4)
//!     .unwrap()
//!     .into_iter()
//!     .map(|c| c.value())
//!     .collect();
//! assert_eq!(a, vec![1, 0, 0, 1]);
//! ```

pub mod classify;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use graph::Graph;
