//! Twin detection.
//!
//! Two vertices are twins when their closed neighborhoods agree (true twins,
//! necessarily adjacent) or their open neighborhoods agree (false twins,
//! necessarily non-adjacent).

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    True,
    False,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    pub kind: TwinKind,
    /// Ascending identifiers.
    pub members: Vec<Vertex>,
}

/// Partition of the vertex set into twin classes, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
    class_of: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwinStructureError {
    #[error("vertex {0} has both a true twin and a false twin")]
    MixedClass(Vertex),
    #[error("true-twin class containing {0} is not a clique")]
    TrueClassNotClique(Vertex),
    #[error("false-twin class containing {0} is not independent")]
    FalseClassNotIndependent(Vertex),
    #[error("edges between the classes of {0} and {1} are neither all present nor all absent")]
    PartialJoin(Vertex, Vertex),
}

/// For each vertex, the id of its key group when that group has at least two
/// members.
fn nontrivial_groups(keys: impl Iterator<Item = Vec<Vertex>>) -> Vec<Option<usize>> {
    let mut groups: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
    let ids: Vec<usize> = keys
        .map(|k| {
            let next = groups.len();
            *groups.entry(k).or_insert(next)
        })
        .collect();
    let mut sizes = vec![0usize; groups.len()];
    for &id in &ids {
        sizes[id] += 1;
    }
    ids.into_iter().map(|id| (sizes[id] > 1).then_some(id)).collect()
}

impl TwinPartition {
    pub fn class_of(&self, v: Vertex) -> &TwinClass {
        &self.classes[self.class_of[v]]
    }

    pub fn is_twin_vertex(&self, v: Vertex) -> bool {
        self.class_of(v).kind != TwinKind::Singleton
    }

    pub fn non_singleton(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.kind != TwinKind::Singleton)
    }

    /// Number of unordered twin pairs.
    pub fn pair_count(&self) -> usize {
        self.non_singleton().map(|c| c.members.len() * (c.members.len() - 1) / 2).sum()
    }

    /// Checks the structure every twin partition must have: classes are
    /// cliques (true) or independent sets (false), and between any two classes
    /// either all edges are present or none.
    pub fn check_structure(&self, g: &Graph) -> Result<(), TwinStructureError> {
        for class in &self.classes {
            let m = &class.members;
            for (i, &a) in m.iter().enumerate() {
                for &b in &m[i + 1..] {
                    match class.kind {
                        TwinKind::True if !g.has_edge(a, b) => {
                            return Err(TwinStructureError::TrueClassNotClique(m[0]))
                        }
                        TwinKind::False if g.has_edge(a, b) => {
                            return Err(TwinStructureError::FalseClassNotIndependent(m[0]))
                        }
                        _ => {}
                    }
                }
            }
        }
        for (i, ca) in self.classes.iter().enumerate() {
            for cb in &self.classes[i + 1..] {
                let present = ca
                    .members
                    .iter()
                    .map(|&a| cb.members.iter().filter(|&&b| g.has_edge(a, b)).count())
                    .sum::<usize>();
                if present != 0 && present != ca.members.len() * cb.members.len() {
                    return Err(TwinStructureError::PartialJoin(ca.members[0], cb.members[0]));
                }
            }
        }
        Ok(())
    }
}

/// Computes the twin partition.
///
/// Fails only if some vertex has both a true twin and a false twin, which
/// cannot happen in a simple graph; the check guards the class tagging.
pub fn twin_partition(g: &Graph) -> Result<TwinPartition, TwinStructureError> {
    let n = g.order();
    let closed = nontrivial_groups(g.vertices().map(|v| {
        let mut k = g.neighbors(v).to_vec();
        let pos = k.binary_search(&v).unwrap_err();
        k.insert(pos, v);
        k
    }));
    let open = nontrivial_groups(g.vertices().map(|v| g.neighbors(v).to_vec()));

    let mut key_of = Vec::with_capacity(n);
    for v in 0..n {
        let key = match (closed[v], open[v]) {
            (None, None) => (TwinKind::Singleton, v),
            (Some(c), None) => (TwinKind::True, c),
            (None, Some(o)) => (TwinKind::False, o),
            (Some(_), Some(_)) => return Err(TwinStructureError::MixedClass(v)),
        };
        key_of.push(key);
    }

    let mut index: BTreeMap<(u8, usize), usize> = BTreeMap::new();
    let mut classes: Vec<TwinClass> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for (v, &(kind, group)) in key_of.iter().enumerate() {
        let tag = match kind {
            TwinKind::True => 0,
            TwinKind::False => 1,
            TwinKind::Singleton => 2,
        };
        let id = *index.entry((tag, group)).or_insert_with(|| {
            classes.push(TwinClass { kind, members: Vec::new() });
            classes.len() - 1
        });
        classes[id].members.push(v);
        class_of.push(id);
    }
    Ok(TwinPartition { classes, class_of })
}

/// All vertices that have a twin.
pub fn twin_vertices(g: &Graph) -> Result<VertexSet, TwinStructureError> {
    let p = twin_partition(g)?;
    Ok(VertexSet::from_iter_with_capacity(
        g.order(),
        p.non_singleton().flat_map(|c| c.members.iter().copied()),
    ))
}

/// `true` iff every vertex has a twin; exactly the graphs whose
/// fault-tolerant metric dimension equals their order.
pub fn all_vertices_twins(g: &Graph) -> Result<bool, TwinStructureError> {
    Ok(twin_vertices(g)?.len() == g.order())
}
