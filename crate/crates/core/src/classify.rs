//! Per-vertex classification: half-activated vs fixed, activation numbers
//! and null differences.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::graph::Graph;
use crate::solver;

/// Activation number of a vertex with respect to the all-ones problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActivationClass {
    /// Pushed in exactly half of the all-ones solutions (−1).
    HalfActivated,
    /// Pushed in none of them (0).
    NeverActivated,
    /// Pushed in all of them (+1).
    AlwaysActivated,
}

impl ActivationClass {
    pub fn value(self) -> i8 {
        match self {
            ActivationClass::HalfActivated => -1,
            ActivationClass::NeverActivated => 0,
            ActivationClass::AlwaysActivated => 1,
        }
    }

    pub fn from_value(v: i8) -> Option<Self> {
        match v {
            -1 => Some(ActivationClass::HalfActivated),
            0 => Some(ActivationClass::NeverActivated),
            1 => Some(ActivationClass::AlwaysActivated),
            _ => None,
        }
    }

    pub fn is_fixed(self) -> bool {
        self != ActivationClass::HalfActivated
    }
}

impl fmt::Display for ActivationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for ActivationClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for ActivationClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i8::deserialize(d)?;
        ActivationClass::from_value(v).ok_or_else(|| {
            serde::de::Error::custom(format!("activation number must be -1, 0 or 1, got {v}"))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexProfile {
    pub vertex: usize,
    pub activation: ActivationClass,
    pub null_difference: i8,
    pub fixed: bool,
}

/// `c_v`: only vertex `v` is on.
pub fn unit_config(n: usize, v: usize) -> BitVec {
    BitVec::unit(n, v)
}

/// `c̄ = c + 1`.
pub fn inverse_config(c: &BitVec) -> BitVec {
    c.xor(&BitVec::ones(c.len()))
}

/// One elimination of `[N | 1]`: a canonical all-ones solution plus the
/// kernel basis, enough to classify every vertex.
#[derive(Clone, Debug)]
pub struct AllOnesAnalysis {
    pub solution: BitVec,
    pub kernel_basis: Vec<BitVec>,
    /// Union of the supports of the kernel basis.
    pub half_activated: BitVec,
}

impl AllOnesAnalysis {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        let (solution, kernel_basis) =
            gf2::solve_with_kernel(&g.closed_neighborhood_matrix(), &BitVec::ones(n))?;
        let solution = match solution {
            Some(s) => s,
            None if n == 0 => BitVec::zeros(0),
            None => {
                return Err(Error::invariant(format!(
                    "all-ones configuration reported unsolvable on graph:\n{}",
                    g.to_edge_list()
                )))
            }
        };
        let mut half_activated = BitVec::zeros(n);
        for l in &kernel_basis {
            for v in l.iter_ones() {
                half_activated.set(v, true);
            }
        }
        Ok(AllOnesAnalysis {
            solution,
            kernel_basis,
            half_activated,
        })
    }

    pub fn activation(&self, v: usize) -> ActivationClass {
        if self.half_activated.get(v) {
            ActivationClass::HalfActivated
        } else if self.solution.get(v) {
            ActivationClass::AlwaysActivated
        } else {
            ActivationClass::NeverActivated
        }
    }

    pub fn activations(&self) -> Vec<ActivationClass> {
        (0..self.solution.len())
            .map(|v| self.activation(v))
            .collect()
    }
}

/// Whether some null pattern pushes `v`. Checking the basis suffices: if
/// every basis vector vanishes at `v`, so does their span.
pub fn is_half_activated(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(solver::null_patterns(g).iter().any(|l| l.get(v)))
}

pub fn activation_number(g: &Graph, v: usize) -> Result<ActivationClass> {
    g.check_vertex(v)?;
    Ok(AllOnesAnalysis::new(g)?.activation(v))
}

/// Activation numbers of all vertices from a single elimination.
pub fn activation_vector(g: &Graph) -> Result<Vec<ActivationClass>> {
    Ok(AllOnesAnalysis::new(g)?.activations())
}

/// nd(v) = ν(G − v) − ν(G).
pub fn null_difference(g: &Graph, v: usize) -> Result<i8> {
    let (h, _) = g.delete_vertex(v)?;
    let nd = solver::nullity(&h) as i64 - solver::nullity(g) as i64;
    if !(-1..=1).contains(&nd) {
        return Err(Error::invariant(format!(
            "null difference {nd} at vertex {v}"
        )));
    }
    Ok(nd as i8)
}

/// `v` is fixed iff `c_v` is solvable.
pub fn is_fixed(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    solver::is_solvable(g, &unit_config(g.n(), v))
}

/// Activation number, null difference and fixedness for every vertex.
///
/// Fails with an invariant violation if the correspondence
/// `A = 1 ⇔ nd = 0`, `A = 0 ⇔ nd = 1`, `A = −1 ⇔ nd = −1`, or the agreement
/// between fixedness and solvability of `c_v`, is ever broken.
pub fn profile(g: &Graph) -> Result<Vec<VertexProfile>> {
    let analysis = AllOnesAnalysis::new(g)?;
    let mut out = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let activation = analysis.activation(v);
        let null_difference = null_difference(g, v)?;
        let fixed = analysis
            .kernel_basis
            .iter()
            .all(|l| !l.dot(&unit_config(g.n(), v)));
        let expected_nd = match activation {
            ActivationClass::AlwaysActivated => 0,
            ActivationClass::NeverActivated => 1,
            ActivationClass::HalfActivated => -1,
        };
        if null_difference != expected_nd || fixed != activation.is_fixed() {
            return Err(Error::invariant(format!(
                "vertex {v}: activation {activation}, null difference {null_difference}, fixed {fixed} on graph:\n{}",
                g.to_edge_list()
            )));
        }
        out.push(VertexProfile {
            vertex: v,
            activation,
            null_difference,
            fixed,
        });
    }
    Ok(out)
}
