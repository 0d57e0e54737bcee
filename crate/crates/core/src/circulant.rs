//! Circulant graphs `Cay(Z_n, S)` and the Andrásfai family.
//!
//! A graph stores only its order and connection set. The dense adjacency
//! matrix is built on demand, mostly for the eigensolver oracle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::DenseMatrix;

/// A negation-closed subset of `Z_n \ {0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSet {
    n: usize,
    members: Vec<usize>,
}

impl ConnectionSet {
    /// Validates and normalizes (sorts, dedups) a set of residues.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("group order must be at least 2, got {n}")));
        }
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&residue) = members.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::ResidueOutOfRange { n, residue });
        }
        for &s in &members {
            let negated = n - s;
            if members.binary_search(&negated).is_err() {
                return Err(Error::NotNegationClosed { n, residue: s, missing: negated });
            }
        }
        Ok(Self { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.members.binary_search(&residue).is_ok()
    }
}

/// The Andrásfai connection set `{x in Z_{3k-1} : x ≡ 1 (mod 3)}`.
pub fn andrasfai_connection_set(k: usize) -> Result<ConnectionSet> {
    if k == 0 {
        return Err(Error::InvalidParameter("Andrásfai parameter k must be at least 1".into()));
    }
    let n = 3 * k - 1;
    ConnectionSet::new(n, (1..n).step_by(3))
}

/// `Cay(Z_n, S)`: vertices are residues, `u ~ v` iff `(v - u) mod n ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    connection: ConnectionSet,
    k_param: Option<usize>,
}

impl CirculantGraph {
    /// Wraps an already validated connection set, checking that its order is `n`.
    pub fn from_connection(n: usize, connection: ConnectionSet) -> Result<Self> {
        if connection.n() != n {
            return Err(Error::OrderMismatch { graph: n, connection: connection.n() });
        }
        Ok(Self { connection, k_param: None })
    }

    /// Recovers the circulant graph described by an undirected edge list on `n` vertices.
    ///
    /// The connection set is read off the neighbourhood of vertex 0, and every
    /// edge is then checked against it; a non-circulant edge set is rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut neighbours_of_zero = Vec::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), n });
            }
            if u == v {
                return Err(Error::NotCirculant(format!("self-loop at {u}")));
            }
            if u == 0 {
                neighbours_of_zero.push(v);
            } else if v == 0 {
                neighbours_of_zero.push(u);
            }
        }
        let connection = ConnectionSet::new(n, neighbours_of_zero)?;
        let graph = Self { connection, k_param: None };

        // Edge {u, v} with u < v is keyed by (u, index of v - u in S). Every key
        // seen once and the count matching n|S|/2 means the edge set is the
        // rotation closure of vertex 0's neighbourhood.
        let members = graph.connection.members();
        let mut seen = vec![false; n * members.len()];
        for &(u, v) in edges {
            let (lo, hi) = (u.min(v), u.max(v));
            let slot = members
                .binary_search(&(hi - lo))
                .map_err(|_| Error::NotCirculant(format!("edge ({u}, {v}) is not a rotation of an edge at 0")))?;
            let flag = &mut seen[lo * members.len() + slot];
            if *flag {
                return Err(Error::NotCirculant(format!("duplicate edge ({u}, {v})")));
            }
            *flag = true;
        }
        if edges.len() != graph.edge_count() {
            return Err(Error::NotCirculant(format!(
                "edge set is not invariant under rotation (got {} edges, rotation closure has {})",
                edges.len(),
                graph.edge_count()
            )));
        }
        Ok(graph)
    }

    pub fn n(&self) -> usize {
        self.connection.n()
    }

    pub fn connection(&self) -> &ConnectionSet {
        &self.connection
    }

    /// `Some(k)` when the graph was built as `And(k)`.
    pub fn k_param(&self) -> Option<usize> {
        self.k_param
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        let n = self.n();
        self.connection.contains((v + n - u % n) % n)
    }

    /// Number of undirected edges, `n·|S| / 2`.
    pub fn edge_count(&self) -> usize {
        self.n() * self.degree() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        let members = self.connection.members();
        // With S sorted, the neighbours above u are u + s for s < n - u, already ascending.
        (0..n).flat_map(move |u| members.iter().take_while(move |&&s| s < n - u).map(move |&s| (u, u + s)))
    }

    /// Row 0 of the adjacency matrix.
    pub fn first_row(&self) -> Vec<u8> {
        let mut row = vec![0u8; self.n()];
        for &s in self.connection.members() {
            row[s] = 1;
        }
        row
    }

    /// Breadth-first search from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        visited[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &s in self.connection.members() {
                let v = (u + s) % n;
                if !visited[v] {
                    visited[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }
}

/// Builds `Cay(Z_n, S)` from raw residues, rejecting sets that are not negation-closed.
pub fn build_circulant(n: usize, connection: &[usize]) -> Result<CirculantGraph> {
    let set = ConnectionSet::new(n, connection.iter().copied())?;
    CirculantGraph::from_connection(n, set)
}

/// The Andrásfai graph `And(k)` on `3k - 1` vertices.
pub fn andrasfai(k: usize) -> Result<CirculantGraph> {
    let connection = andrasfai_connection_set(k)?;
    Ok(CirculantGraph { connection, k_param: Some(k) })
}

/// Dense 0/1 adjacency matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.row(i).iter().map(|&a| a as usize).sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let data = self.entries.iter().map(|&a| f64::from(a)).collect();
        DenseMatrix::from_row_major(self.n, data).expect("n*n entries")
    }
}

/// Materializes the adjacency matrix: `entries[i][j] = 1` iff `(j - i) mod n ∈ S`.
pub fn adjacency_matrix(graph: &CirculantGraph) -> AdjacencyMatrix {
    let n = graph.n();
    let first = graph.first_row();
    let mut entries = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = first[(j + n - i) % n];
        }
    }
    AdjacencyMatrix { n, entries }
}
