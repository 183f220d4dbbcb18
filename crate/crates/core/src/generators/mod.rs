//! Constructors for the graph families used throughout the crate.
//!
//! Every generator returns its graph in BFS identifier order (see
//! [`Graph::into_bfs_order`]), so the edge-list text round-trips exactly.

mod butterfly;
mod classical;
mod hexagonal;
mod random;

pub use butterfly::{benes, butterfly, BenesLabel, ButterflyLabel, LeveledNetwork, RowLevel};
pub use classical::{classical, Classical};
pub use hexagonal::{
    circumcoronene, hex_radius, silicate, HexagonalNetwork, SilicateKind, SilicateNetwork,
    SilicateRole,
};
pub use random::random_connected;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{family}: parameter {name} = {value} is out of range (minimum {min})")]
    OutOfRange {
        family: &'static str,
        name: &'static str,
        value: u32,
        min: u32,
    },
    #[error("{family}: parameter {name} = {value} is too large (maximum {max})")]
    TooLarge {
        family: &'static str,
        name: &'static str,
        value: u32,
        max: u32,
    },
}

pub(crate) fn check_min(family: &'static str, name: &'static str, value: u32, min: u32) -> Result<(), GeneratorError> {
    if value < min {
        return Err(GeneratorError::OutOfRange { family, name, value, min });
    }
    Ok(())
}

pub(crate) fn check_max(family: &'static str, name: &'static str, value: u32, max: u32) -> Result<(), GeneratorError> {
    if value > max {
        return Err(GeneratorError::TooLarge { family, name, value, max });
    }
    Ok(())
}

/// A named, parameterized family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Butterfly(u32),
    Benes(u32),
    Circumcoronene(u32),
    Silicate(u32),
    Classical(Classical),
    /// Random connected graph on `n` vertices with extra-edge probability in
    /// percent, drawn from the given seed.
    Random { n: u32, percent: u32, seed: u64 },
}

impl Family {
    pub fn generate(&self) -> Result<Graph, GeneratorError> {
        Ok(match *self {
            Family::Butterfly(r) => butterfly(r)?.graph,
            Family::Benes(r) => benes(r)?.graph,
            Family::Circumcoronene(n) => circumcoronene(n)?.graph,
            Family::Silicate(n) => silicate(n)?.graph,
            Family::Classical(c) => classical(c)?,
            Family::Random { n, percent, seed } => {
                check_max("random", "percent", percent, 100)?;
                random_connected(n as usize, f64::from(percent) / 100.0, seed)?
            }
        })
    }
}

/// Builds the graph, moves it into BFS order and permutes per-vertex metadata
/// to match.
pub(crate) fn finish<T: Clone>(
    labels: Vec<String>,
    meta: Vec<T>,
    edges: &[(Vertex, Vertex)],
) -> (Graph, Vec<T>) {
    debug_assert_eq!(labels.len(), meta.len());
    let g = Graph::from_parts(labels, edges).expect("generator produced an invalid graph");
    let order = g.bfs_order();
    let meta = order.iter().map(|&v| meta[v].clone()).collect();
    (g.permuted(&order), meta)
}
