use std::fmt;

use super::{check_max, check_min, finish, GeneratorError};
use crate::graph::{Graph, Vertex};

/// Vertex `[s, j]` of a butterfly or Benes network: an `bits`-bit row string
/// and a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowLevel {
    pub row: u32,
    pub level: u32,
    pub bits: u32,
}

pub type ButterflyLabel = RowLevel;
pub type BenesLabel = RowLevel;

impl RowLevel {
    /// Bit `j` of the row, 1-indexed from the most significant end.
    pub fn bit(&self, j: u32) -> bool {
        self.row >> (self.bits - j) & 1 == 1
    }
}

impl fmt::Display for RowLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:0width$b},{}]", self.row, self.level, width = self.bits as usize)
    }
}

/// A butterfly or Benes network together with its `[row, level]` labels.
#[derive(Debug, Clone)]
pub struct LeveledNetwork {
    pub graph: Graph,
    pub labels: Vec<RowLevel>,
    pub dimension: u32,
    /// Set when the dimension is below 3, the smallest one the closed forms
    /// are stated for.
    pub below_theorem_range: bool,
}

impl LeveledNetwork {
    pub fn max_level(&self) -> u32 {
        self.labels.iter().map(|l| l.level).max().unwrap_or(0)
    }

    /// Vertices on any of the given levels, ascending by identifier.
    pub fn vertices_at_levels(&self, levels: &[u32]) -> Vec<Vertex> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| levels.contains(&l.level))
            .map(|(v, _)| v)
            .collect()
    }
}

const MAX_DIMENSION: u32 = 12;

/// Mask toggling bit `j` (1-indexed from the most significant end).
#[inline]
fn bit_mask(r: u32, j: u32) -> u32 {
    1 << (r - j)
}

fn leveled(r: u32, levels: u32, edge_bit: impl Fn(u32) -> u32) -> LeveledNetwork {
    let rows = 1u32 << r;
    let id = |row: u32, level: u32| (level * rows + row) as Vertex;
    let mut labels = Vec::with_capacity((rows * (levels + 1)) as usize);
    for level in 0..=levels {
        for row in 0..rows {
            labels.push(RowLevel { row, level, bits: r });
        }
    }
    let mut edges = Vec::with_capacity((2 * rows * levels) as usize);
    for level in 0..levels {
        let mask = bit_mask(r, edge_bit(level));
        for row in 0..rows {
            edges.push((id(row, level), id(row, level + 1)));
            edges.push((id(row, level), id(row ^ mask, level + 1)));
        }
    }
    let names = labels.iter().map(ToString::to_string).collect();
    let (graph, labels) = finish(names, labels, &edges);
    LeveledNetwork {
        graph,
        labels,
        dimension: r,
        below_theorem_range: r < 3,
    }
}

/// The `r`-dimensional butterfly `BF(r)`: levels `0..=r`, and the edges
/// between levels `j-1` and `j` join equal rows and rows differing in bit `j`.
pub fn butterfly(r: u32) -> Result<LeveledNetwork, GeneratorError> {
    check_min("bf", "r", r, 2)?;
    check_max("bf", "r", r, MAX_DIMENSION)?;
    // level pair (j, j+1) toggles bit j+1
    Ok(leveled(r, r, |level| level + 1))
}

/// The `r`-dimensional Benes network `B(r)`: levels `0..=2r`, a butterfly up
/// to level `r` and its mirror image beyond it.
pub fn benes(r: u32) -> Result<LeveledNetwork, GeneratorError> {
    check_min("benes", "r", r, 2)?;
    check_max("benes", "r", r, MAX_DIMENSION)?;
    // level pair (i, i+1) for i >= r mirrors pair (2r-i-1, 2r-i)
    Ok(leveled(r, 2 * r, |level| if level < r { level + 1 } else { 2 * r - level }))
}
