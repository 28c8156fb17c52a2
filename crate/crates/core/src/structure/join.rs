//! Joining two graphs by a single edge and how activation numbers and
//! nullity respond.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{activation_vector, ActivationClass, AllOnesAnalysis};
use crate::error::{Error, Result};
use crate::graph::{random_graph_with, Graph};
use crate::solver;

/// One row of the join table: operand activation numbers `(a, b)` at the
/// joined vertices, post-join activation numbers, and the nullity change
/// `ν(H) − ν(G₁) − ν(G₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub a: i8,
    pub b: i8,
    pub post_u: i8,
    pub post_w: i8,
    pub delta_nu: i32,
}

/// The six connection types; the remaining three follow by swapping sides.
pub const TABLE: [TableRow; 6] = [
    TableRow {
        a: 0,
        b: 0,
        post_u: 0,
        post_w: 0,
        delta_nu: 0,
    },
    TableRow {
        a: 0,
        b: 1,
        post_u: 0,
        post_w: 1,
        delta_nu: 0,
    },
    TableRow {
        a: 0,
        b: -1,
        post_u: 0,
        post_w: -1,
        delta_nu: 0,
    },
    TableRow {
        a: 1,
        b: 1,
        post_u: -1,
        post_w: -1,
        delta_nu: 1,
    },
    TableRow {
        a: 1,
        b: -1,
        post_u: 0,
        post_w: 1,
        delta_nu: -1,
    },
    TableRow {
        a: -1,
        b: -1,
        post_u: 0,
        post_w: 0,
        delta_nu: -2,
    },
];

/// The table row for `(a, b)`, with the post-join values swapped back when
/// the row is stored as `(b, a)`.
pub fn table_row(a: i8, b: i8) -> TableRow {
    if let Some(row) = TABLE.iter().find(|r| r.a == a && r.b == b) {
        return *row;
    }
    let row = TABLE
        .iter()
        .find(|r| r.a == b && r.b == a)
        .unwrap_or_else(|| panic!("activation pair ({a},{b}) outside {{-1,0,1}}"));
    TableRow {
        a,
        b,
        post_u: row.post_w,
        post_w: row.post_u,
        delta_nu: row.delta_nu,
    }
}

/// The order of `(a, b)` under which it appears in [`TABLE`].
pub fn canonical_type(a: i8, b: i8) -> (i8, i8) {
    if TABLE.iter().any(|r| r.a == a && r.b == b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// −2 when both joined vertices are half-activated, `a·b` otherwise.
pub fn predicted_delta_nu(a: i8, b: i8) -> i32 {
    if a == -1 && b == -1 {
        -2
    } else {
        i32::from(a) * i32::from(b)
    }
}

/// `a(1+b) mod 3` and `b(1+a) mod 3`, with residue 2 read as −1.
pub fn predicted_post_activation(a: i8, b: i8) -> (i8, i8) {
    let signed_mod3 = |x: i32| match x.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    };
    let (a32, b32) = (i32::from(a), i32::from(b));
    (signed_mod3(a32 * (1 + b32)), signed_mod3(b32 * (1 + a32)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinReport {
    /// `(A_G1(u), A_G2(w))`.
    pub type_pair: (i8, i8),
    pub delta_nu: i32,
    /// `(A_H(u'), A_H(w'))`.
    pub post_activation: (i8, i8),
    /// Whether all observations match the table row, the compact nullity
    /// formula and the mod-3 activation formulas.
    pub table_row_ok: bool,
}

/// Joins `u ∈ G1` to `w ∈ G2` and measures the outcome against the table.
pub fn join_report(g1: &Graph, u: usize, g2: &Graph, w: usize) -> Result<JoinReport> {
    let joined = Graph::join(g1, u, g2, w)?;
    let before1 = AllOnesAnalysis::new(g1)?;
    let before2 = AllOnesAnalysis::new(g2)?;
    let after = AllOnesAnalysis::new(&joined.graph)?;
    let a = before1.activation(u).value();
    let b = before2.activation(w).value();
    let delta_nu = after.kernel_basis.len() as i32
        - before1.kernel_basis.len() as i32
        - before2.kernel_basis.len() as i32;
    let post = (
        after.activation(joined.u).value(),
        after.activation(joined.w).value(),
    );
    let row = table_row(a, b);
    let table_row_ok = row.delta_nu == delta_nu
        && (row.post_u, row.post_w) == post
        && predicted_delta_nu(a, b) == delta_nu
        && predicted_post_activation(a, b) == post;
    Ok(JoinReport {
        type_pair: (a, b),
        delta_nu,
        post_activation: post,
        table_row_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarJoin {
    pub graph: Graph,
    pub predicted: bool,
    pub observed: bool,
}

/// Joins vertex `v_i` of every attachment `G_i` to `u ∈ F`. With all
/// operands always solvable, the result is always solvable iff `A_F(u) = 0`
/// or an even number of the `v_i` are always-activated.
pub fn star_join_check(f: &Graph, u: usize, attachments: &[(Graph, usize)]) -> Result<StarJoin> {
    f.check_vertex(u)?;
    if !solver::is_always_solvable(f) {
        return Err(Error::contract("the hub graph must be always solvable"));
    }
    let hub = activation_vector(f)?[u];
    let mut always_count = 0;
    let mut graph = f.clone();
    for (i, (g, v)) in attachments.iter().enumerate() {
        g.check_vertex(*v)?;
        if !solver::is_always_solvable(g) {
            return Err(Error::contract(format!(
                "attachment {i} is not always solvable"
            )));
        }
        if activation_vector(g)?[*v] == ActivationClass::AlwaysActivated {
            always_count += 1;
        }
        graph = Graph::join(&graph, u, g, *v)?.graph;
    }
    let predicted = match hub {
        ActivationClass::NeverActivated => true,
        ActivationClass::AlwaysActivated => always_count % 2 == 0,
        ActivationClass::HalfActivated => {
            return Err(Error::invariant(
                "half-activated vertex in an always-solvable graph",
            ))
        }
    };
    let observed = solver::is_always_solvable(&graph);
    Ok(StarJoin {
        graph,
        predicted,
        observed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowStats {
    pub type_pair: (i8, i8),
    pub hits: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableViolation {
    pub trial: usize,
    pub report: JoinReport,
    pub g1: String,
    pub u: usize,
    pub g2: String,
    pub w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCheckSummary {
    pub trials: usize,
    pub max_size: usize,
    pub seed: u64,
    pub rows: Vec<RowStats>,
    pub violation_count: usize,
    /// First few violating joins, with operands as edge lists.
    pub violations: Vec<TableViolation>,
}

impl TableCheckSummary {
    pub fn ok(&self) -> bool {
        self.violation_count == 0
    }

    pub fn min_row_hits(&self) -> usize {
        self.rows.iter().map(|r| r.hits).min().unwrap_or(0)
    }
}

const MAX_REPORTED_VIOLATIONS: usize = 10;

/// Runs `trials` random joins of random graph pairs with at most
/// `max_size` vertices each. Deterministic in `seed`.
pub fn run_table_check(trials: usize, max_size: usize, seed: u64) -> Result<TableCheckSummary> {
    if trials == 0 || max_size == 0 {
        return Err(Error::contract("trials and max size must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<RowStats> = TABLE
        .iter()
        .map(|r| RowStats {
            type_pair: (r.a, r.b),
            hits: 0,
            violations: 0,
        })
        .collect();
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for trial in 0..trials {
        let (g1, u) = random_operand(&mut rng, max_size)?;
        let (g2, w) = random_operand(&mut rng, max_size)?;
        let report = join_report(&g1, u, &g2, w)?;
        let key = canonical_type(report.type_pair.0, report.type_pair.1);
        let row = rows
            .iter_mut()
            .find(|r| r.type_pair == key)
            .expect("every pair maps to a row");
        row.hits += 1;
        if !report.table_row_ok {
            row.violations += 1;
            violation_count += 1;
            if violations.len() < MAX_REPORTED_VIOLATIONS {
                violations.push(TableViolation {
                    trial,
                    report,
                    g1: g1.to_edge_list(),
                    u,
                    g2: g2.to_edge_list(),
                    w,
                });
            }
        }
    }
    Ok(TableCheckSummary {
        trials,
        max_size,
        seed,
        rows,
        violation_count,
        violations,
    })
}

fn random_operand(rng: &mut ChaCha8Rng, max_size: usize) -> Result<(Graph, usize)> {
    let n = rng.gen_range(1..=max_size);
    let p = rng.gen_range(0.0..=1.0);
    let g = random_graph_with(rng, n, p)?;
    let v = rng.gen_range(0..n);
    Ok((g, v))
}
