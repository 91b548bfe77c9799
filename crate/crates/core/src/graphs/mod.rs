//! Concrete graphs: constructions, graph6 input/output, distance-regularity
//! checks, adjacency spectra and a small-instance geometricity test.

mod clique;
pub mod construct;
mod distreg;
pub mod graph6;
pub mod manifest;

use fixedbitset::FixedBitSet;
use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

pub use clique::{is_geometric_small, maximal_cliques_at_least, GeometricVerdict};
pub use distreg::{
    c2one_structure_check, check_distance_regular, distance_matrix, DrCheck, DrViolation, LocalStructure,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    Trivial,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("parameters out of range: {0}")]
    Parameters(String),
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
}

/// Simple undirected graph with one adjacency bitset per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
    label: Option<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![FixedBitSet::with_capacity(n); n],
            label: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Graph on `n` vertices with `u ~ v` whenever `adjacent(u, v)` for `u < v`.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Ignores loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u].ones()
    }

    pub fn row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.rows[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Common valency, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.order()).all(|u| self.degree(u) == d).then_some(d)
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g.label = self.label.clone();
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen.put(v) {
                    stack.push(v);
                }
            }
        }
        seen.count_ones(..) == n
    }

    pub fn adjacency_f64(&self) -> DMatrix<f64> {
        let n = self.order();
        DMatrix::from_fn(n, n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }
}

/// Subgraph induced on the neighbours of `x`.
pub fn local_graph(g: &Graph, x: usize) -> Result<Graph, GraphError> {
    if x >= g.order() {
        return Err(GraphError::VertexOutOfRange(x));
    }
    let nbrs: Vec<usize> = g.neighbors(x).collect();
    Ok(g.induced(&nbrs))
}

/// All adjacency eigenvalues, descending.
pub fn adjacency_spectrum_numeric(g: &Graph) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(g.adjacency_f64()).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let mut g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert_eq!(g.regular_degree(), None);
        g.add_edge(3, 0);
        assert_eq!(g.regular_degree(), Some(2));
        g.remove_edge(1, 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
        let h = g.permuted(&[3, 2, 1, 0]);
        assert!(h.has_edge(3, 2) && h.has_edge(0, 1));
        g.remove_edge(0, 3);
        assert!(!g.is_connected());
    }

    #[test]
    fn k4_spectrum() {
        let k4 = Graph::from_fn(4, |_, _| true);
        let ev = adjacency_spectrum_numeric(&k4);
        let want = [3.0, -1.0, -1.0, -1.0];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn local_graph_range() {
        let c5 = Graph::from_fn(5, |u, v| (v - u) % 5 == 1 || (v - u) % 5 == 4);
        assert_eq!(local_graph(&c5, 0).unwrap().edge_count(), 0);
        assert_eq!(local_graph(&c5, 7), Err(GraphError::VertexOutOfRange(7)));
    }
}
