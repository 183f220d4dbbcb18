use std::collections::VecDeque;

use crate::graph::{Graph, GraphError, Vertex};

/// Hop count between two vertices.
pub type Distance = u16;

const UNREACHED: Distance = Distance::MAX;

/// Dense all-pairs shortest-path table for a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Distance {
        self.d[u * self.n + v]
    }

    /// Distances from `u` to every vertex.
    #[inline]
    pub fn row(&self, u: Vertex) -> &[Distance] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Distance {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex. Fails on a disconnected graph, naming a vertex that
/// vertex 0 cannot reach.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    if let Some(v) = g.first_unreachable() {
        return Err(GraphError::Disconnected(
            g.label(v).to_string(),
            g.label(0).to_string(),
        ));
    }
    let n = g.order();
    let mut d = vec![UNREACHED; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for (src, row) in d.chunks_mut(n.max(1)).enumerate().take(n) {
        row[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &v in g.neighbors(u) {
                if row[v] == UNREACHED {
                    row[v] = next;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(DistanceMatrix { n, d })
}
