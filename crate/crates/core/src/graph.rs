use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::relation::Relation;

/// A finite directed graph on nodes `0..n` with a deduplicated edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        if let Some(&(row, col)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::PairOutOfRange { row, col, size: n });
        }
        Ok(Graph { n, edges })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Out-neighbour lists, ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }
}

/// The edge relation of `g`: `(u, v)` is related iff `g` has an edge `u → v`.
pub fn relation_from_graph(g: &Graph) -> Result<Relation> {
    Relation::from_pairs(g.n, g.edges())
}

pub fn graph_from_relation(r: &Relation) -> Graph {
    Graph {
        n: r.size(),
        edges: r.pairs().collect(),
    }
}
