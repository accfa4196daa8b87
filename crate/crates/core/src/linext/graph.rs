//! The linear extension graph with its swap colouring.

use std::collections::{HashMap, VecDeque};

use super::{enumerate, LinearExtension};
use crate::error::Result;
use crate::order::Poset;

/// An edge between two extensions that differ by one adjacent transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeEdge {
    pub a: usize,
    pub b: usize,
    /// The swapped pair, in the order it appears in vertex `a` (bottom first).
    pub swap: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct LeGraph {
    pub vertices: Vec<LinearExtension>,
    pub edges: Vec<LeEdge>,
    adjacency: Vec<Vec<usize>>,
}

impl LeGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Largest shortest-path distance (0 for a single vertex).
    pub fn diameter(&self) -> usize {
        (0..self.vertices.len())
            .map(|v| self.distances_from(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }
}

pub fn le_graph(p: &Poset, cap: u64) -> Result<LeGraph> {
    let vertices = enumerate(p, cap)?;
    let lookup: HashMap<&[usize], usize> = vertices.iter().enumerate().map(|(i, l)| (l.order(), i)).collect();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    let mut buf = Vec::new();
    for (a, le) in vertices.iter().enumerate() {
        let order = le.order();
        for t in 0..order.len().saturating_sub(1) {
            let (x, y) = (order[t], order[t + 1]);
            if !p.incomparable(x, y) {
                continue;
            }
            buf.clear();
            buf.extend_from_slice(order);
            buf.swap(t, t + 1);
            let b = lookup[buf.as_slice()];
            adjacency[a].push(b);
            if a < b {
                edges.push(LeEdge { a, b, swap: (x, y) });
            }
        }
    }
    Ok(LeGraph {
        vertices,
        edges,
        adjacency,
    })
}
