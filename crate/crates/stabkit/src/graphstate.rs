//! Graph states and conversion of arbitrary stabilizer groups to graph form.
//!
//! A graph state has generator matrix [theta; I] for the adjacency matrix
//! theta of a simple graph. Every stabilizer group is locally Clifford
//! equivalent to a (non-unique) graph state; the conversion here is made
//! deterministic by smallest-index pivot and swap choices.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, SpanBasis};
use crate::lclifford::{fix_signs, Gl2, LocalCliffordOp};
use crate::pauli::PauliOperator;
use crate::stabilizer::StabilizerGroup;

/// A simple undirected graph: symmetric adjacency matrix, zero diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    theta: BitMatrix,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            theta: BitMatrix::zeros(n, n),
        }
    }

    /// Builds a graph from 0-based vertex pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut theta = BitMatrix::zeros(n, n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({}, {}) out of range for {n} vertices",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {}", u + 1)));
            }
            theta.set(u, v, true);
            theta.set(v, u, true);
        }
        Ok(Graph { n, theta })
    }

    /// Validates an explicit adjacency matrix.
    pub fn from_adjacency(theta: BitMatrix) -> Result<Self> {
        if theta.rows() != theta.cols() {
            return Err(Error::Domain("adjacency matrix is not square".to_string()));
        }
        let n = theta.rows();
        for i in 0..n {
            if theta.get(i, i) {
                return Err(Error::Domain(format!("self-loop at vertex {}", i + 1)));
            }
            for j in i + 1..n {
                if theta.get(i, j) != theta.get(j, i) {
                    return Err(Error::Domain(format!(
                        "adjacency matrix is asymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Graph { n, theta })
    }

    /// The cycle graph on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.theta
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.theta.get(u, v)
    }

    /// Edges as 0-based pairs (u < v), sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.theta.get(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Standard reachability check.
    pub fn is_connected(&self) -> bool {
        self.disconnected_component().is_none()
    }

    /// The component of vertex 0 when the graph is disconnected (a proper
    /// nonempty vertex subset), `None` when connected. Empty graphs on one
    /// vertex count as connected.
    pub fn disconnected_component(&self) -> Option<BitVec> {
        if self.n == 0 {
            return None;
        }
        let mut seen = BitVec::zeros(self.n);
        let mut stack = vec![0usize];
        seen.set(0, true);
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if self.theta.get(u, v) && !seen.get(v) {
                    seen.set(v, true);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        if count == self.n {
            None
        } else {
            Some(seen)
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The stabilizer group with generator matrix [theta; I]: generator j is
/// X at vertex j and Z on its neighbors, all signs +.
pub fn graph_state(graph: &Graph) -> StabilizerGroup {
    let n = graph.num_vertices();
    let gens: Vec<PauliOperator> = (0..n)
        .map(|j| {
            let z = graph.theta.column(j);
            let x = BitVec::from_indices(n, &[j]);
            PauliOperator::from_parts(z, x, 0).expect("lengths match")
        })
        .collect();
    StabilizerGroup::build(gens).expect("a valid adjacency matrix yields a valid group")
}

/// Graph form of a stabilizer group with a certifying local Clifford
/// operation: `apply(op, g)` equals `graph_state(graph)` as signed groups.
pub fn to_graph_form(g: &StabilizerGroup) -> Result<(Graph, LocalCliffordOp)> {
    let (graph, factors) = graph_form_factors(g);
    let target = graph_state(&graph);
    let op = LocalCliffordOp::from_factors(factors);
    let layer = fix_signs(&op, g, &target)?;
    let op = op.with_layer(layer);
    if !op.apply(g)?.same_signed_group(&target) {
        return Err(Error::Internal(
            "to_graph_form: certificate fails signed-group check".to_string(),
        ));
    }
    Ok((graph, op))
}

/// Bit-level graph form: the adjacency matrix and the per-qubit factors,
/// without sign fixing. Used directly by connectivity-based checks.
pub(crate) fn graph_form_factors(g: &StabilizerGroup) -> (Graph, Vec<Gl2>) {
    let n = g.num_qubits();
    let s = g.gen_matrix();

    // Greedy maximal independent set of x-rows, smallest index first. The
    // complement is the minimal set of qubits that need a z/x swap.
    let mut span = SpanBasis::new();
    let in_t: Vec<bool> = (0..n).map(|i| span.insert(s.row(n + i))).collect();

    let hadamard = Gl2::from_index(1);
    let mut factors: Vec<Gl2> = (0..n)
        .map(|i| if in_t[i] { Gl2::identity() } else { hadamard })
        .collect();

    // Apply the swaps row-wise: for swapped qubits the z and x rows trade
    // places.
    let mut z_rows: Vec<BitVec> = (0..n).map(|i| s.row(i).clone()).collect();
    let mut x_rows: Vec<BitVec> = (0..n).map(|i| s.row(n + i).clone()).collect();
    for ((z, x), kept) in z_rows.iter_mut().zip(&mut x_rows).zip(&in_t) {
        if !kept {
            std::mem::swap(z, x);
        }
    }

    // Change the generator basis so the x block becomes the identity.
    let x_block = BitMatrix::from_rows(x_rows);
    let basis_change = x_block
        .inverse()
        .expect("swap set choice makes the x block invertible");
    let theta = BitMatrix::from_rows(z_rows).mul(&basis_change);

    // Clear any diagonal entries (a Y on the diagonal) with the phase-type
    // factor [[1,1],[0,1]], which adds the x row into the z row.
    let clear = Gl2::from_index(2);
    let mut theta = theta;
    for (i, factor) in factors.iter_mut().enumerate() {
        if theta.get(i, i) {
            *factor = clear.compose(*factor);
            theta.set(i, i, false);
        }
    }

    let graph = Graph::from_adjacency(theta)
        .expect("normalized generator matrix yields a symmetric zero-diagonal adjacency");
    (graph, factors)
}
