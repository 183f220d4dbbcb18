//! Immutable simple undirected graphs with labelled vertices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

/// Dense vertex identifier in `0..n`.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty edge list")]
    Empty,
    #[error("self-loop on vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(String, String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(Vertex, usize),
    #[error("graph is disconnected: vertex {0:?} is unreachable from {1:?}")]
    Disconnected(String, String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Simple undirected graph, frozen after construction.
///
/// Vertices are `0..n`; each carries a unique display label. Adjacency lists
/// are sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Vec<String>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit labels and identifier pairs.
    pub fn from_parts(labels: Vec<String>, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut seen_labels = HashSet::with_capacity(n);
        for l in &labels {
            if !seen_labels.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange(w, n));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(labels[u].clone()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(labels[u].clone(), labels[v].clone()));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            adjacency,
            labels,
            edge_count: seen.len(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Every edge once, as `(u, v)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label_index(&self) -> HashMap<&str, Vertex> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// BFS order from vertex 0; neighbors are visited in ascending identifier
    /// order. Components are started from their smallest unvisited vertex.
    pub fn bfs_order(&self) -> Vec<Vertex> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        order
    }

    /// Renumbers vertices so that `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[Vertex]) -> Self {
        let n = self.order();
        assert_eq!(order.len(), n, "permutation length mismatch");
        let mut new_id = vec![usize::MAX; n];
        for (i, &old) in order.iter().enumerate() {
            new_id[old] = i;
        }
        let labels = order.iter().map(|&old| self.labels[old].clone()).collect();
        let adjacency = order
            .iter()
            .map(|&old| {
                let mut list: Vec<_> = self.adjacency[old].iter().map(|&v| new_id[v]).collect();
                list.sort_unstable();
                list
            })
            .collect();
        Self {
            adjacency,
            labels,
            edge_count: self.edge_count,
        }
    }

    /// Relabels identifiers into BFS order. In the result every vertex except
    /// the first of each component has a lower-numbered neighbor, which is the
    /// condition for [`Graph::to_edge_list`] to round-trip identifiers exactly.
    pub fn into_bfs_order(self) -> Self {
        let order = self.bfs_order();
        if order.iter().enumerate().all(|(i, &v)| i == v) {
            return self;
        }
        self.permuted(&order)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// A vertex not reachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<Vertex> {
        let n = self.order();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// Serializes to the `p`/`e` edge-list format. Edges are written sorted by
    /// `(max, min)` endpoint so that first-appearance order of labels matches
    /// identifier order whenever the graph is in BFS order.
    pub fn to_edge_list(&self) -> String {
        let mut edges: Vec<_> = self.edges().collect();
        edges.sort_unstable_by_key(|&(u, v)| (v, u));
        let mut out = String::new();
        writeln!(out, "p {} {}", self.order(), self.size()).unwrap();
        for (u, v) in edges {
            writeln!(out, "e {} {}", self.labels[u], self.labels[v]).unwrap();
        }
        out
    }

    /// Parses the edge-list format written by [`Graph::to_edge_list`].
    ///
    /// Lines starting with `c` are comments. The `p` header is required and
    /// its counts must agree with the edges that follow.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let err = |msg: String| GraphError::Parse { line: line_no, msg };
            match fields.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(err("repeated header".into()));
                    }
                    let mut num = |what: &str| -> Result<usize, GraphError> {
                        fields
                            .next()
                            .ok_or_else(|| err(format!("missing {what}")))?
                            .parse()
                            .map_err(|e| err(format!("bad {what}: {e}")))
                    };
                    let n = num("vertex count")?;
                    let m = num("edge count")?;
                    header = Some((n, m, line_no));
                }
                Some("e") => {
                    if header.is_none() {
                        return Err(err("edge before header".into()));
                    }
                    let a = fields.next().ok_or_else(|| err("missing endpoint".into()))?;
                    let b = fields.next().ok_or_else(|| err("missing endpoint".into()))?;
                    pairs.push((a.to_string(), b.to_string()));
                }
                Some(other) => return Err(err(format!("unknown line type {other:?}"))),
                None => unreachable!(),
            }
            if fields.next().is_some() {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: "trailing fields".into(),
                });
            }
        }
        let (n, m, line) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let g = build_graph(pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
        if g.order() != n || g.size() != m {
            return Err(GraphError::Parse {
                line,
                msg: format!(
                    "header declares {n} vertices and {m} edges, found {} and {}",
                    g.order(),
                    g.size()
                ),
            });
        }
        Ok(g)
    }
}

/// Builds a graph from label pairs, assigning identifiers in first-appearance
/// order of labels.
pub fn build_graph<'a, I>(edges: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut index: HashMap<&str, Vertex> = HashMap::new();
    let mut labels = Vec::new();
    let mut ids = Vec::new();
    for (a, b) in edges {
        if a == b {
            return Err(GraphError::SelfLoop(a.to_string()));
        }
        let mut id = |l: &'a str| {
            *index.entry(l).or_insert_with(|| {
                labels.push(l.to_string());
                labels.len() - 1
            })
        };
        let pair = (id(a), id(b));
        ids.push(pair);
    }
    if ids.is_empty() {
        return Err(GraphError::Empty);
    }
    Graph::from_parts(labels, &ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_triangle() {
        let p = build_graph([("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!((p.degree(0), p.degree(1), p.degree(2)), (1, 2, 1));
        let t = build_graph([("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert!(t.vertices().all(|v| t.degree(v) == 2));
        assert!(t.is_connected());
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert_eq!(
            build_graph([("a", "b"), ("a", "b")]),
            Err(GraphError::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            build_graph([("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge("b".into(), "a".into()))
        );
        assert_eq!(build_graph([("a", "a")]), Err(GraphError::SelfLoop("a".into())));
        assert_eq!(build_graph(std::iter::empty()), Err(GraphError::Empty));
    }

    #[test]
    fn disconnected_detection() {
        let g = build_graph([("a", "b"), ("c", "d")]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.first_unreachable(), Some(2));
    }

    #[test]
    fn edge_list_round_trip_keeps_ids() {
        let g = Graph::from_parts(
            ["x", "y", "z", "w"].map(String::from).to_vec(),
            &[(0, 3), (3, 1), (1, 2)],
        )
        .unwrap()
        .into_bfs_order();
        let text = g.to_edge_list();
        assert!(text.starts_with("p 4 3\n"));
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn parser_tolerates_comments_and_checks_header() {
        let text = "c hello\np 3 2\ne a b\nc mid\ne b c\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        assert!(matches!(
            Graph::parse_edge_list("p 4 2\ne a b\ne b c\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("e a b\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }
}
