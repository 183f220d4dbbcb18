//! Distinguisher sets and resolving-set verification.
//!
//! For a pair `{x, y}` the distinguisher set `D(x, y)` holds every `w` with
//! `d(w, x) != d(w, y)`. A set `S` is `k`-resolving when every pair has at
//! least `k` distinguishers in `S`; `k = 1` is an ordinary resolving set and
//! `k = 2` a fault-tolerant one.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::{intersection_len, words_for, VertexSet};
use crate::distance::DistanceMatrix;
use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolveError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(Vertex, usize),
    #[error("multiplicity k must be at least 1")]
    ZeroMultiplicity,
    #[error("no {k}-resolving set exists: pair ({x}, {y}) has only {distinguishers} distinguishers")]
    Infeasible {
        k: usize,
        x: Vertex,
        y: Vertex,
        distinguishers: usize,
    },
    #[error("a single-vertex graph has no vertex pairs; only k = 1 (value 0) is meaningful")]
    SingleVertex,
    #[error("exhaustive search is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Index of the unordered pair `{x, y}`, `x < y`, in row-major upper
/// triangular order.
#[inline]
pub fn pair_index(n: usize, x: Vertex, y: Vertex) -> usize {
    debug_assert!(x < y && y < n);
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

/// Bitset `D(x, y)` for every unordered pair, stored contiguously.
#[derive(Debug, Clone)]
pub struct DistinguisherTable {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    sizes: Vec<u32>,
}

impl DistinguisherTable {
    pub fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.order();
        let words = words_for(n);
        let pairs = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; pairs * words];
        let mut sizes = vec![0u32; pairs];
        let mut p = 0;
        for x in 0..n {
            let rx = dm.row(x);
            for y in x + 1..n {
                let ry = dm.row(y);
                let chunk = &mut bits[p * words..(p + 1) * words];
                let mut count = 0;
                for (w, (a, b)) in rx.iter().zip(ry).enumerate() {
                    if a != b {
                        chunk[w / 64] |= 1 << (w % 64);
                        count += 1;
                    }
                }
                sizes[p] = count;
                p += 1;
            }
        }
        Self { n, words, bits, sizes }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pair_count(&self) -> usize {
        self.sizes.len()
    }

    /// All pairs `(x, y)`, `x < y`, in index order.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> {
        let n = self.n;
        (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
    }

    #[inline]
    pub(crate) fn words_of(&self, p: usize) -> &[u64] {
        &self.bits[p * self.words..(p + 1) * self.words]
    }

    #[inline]
    pub(crate) fn size_of(&self, p: usize) -> usize {
        self.sizes[p] as usize
    }

    /// `D(x, y)` as a set; argument order does not matter.
    pub fn get(&self, x: Vertex, y: Vertex) -> VertexSet {
        let (a, b) = (x.min(y), x.max(y));
        assert!(a != b, "distinguishers of a vertex with itself");
        VertexSet::from_words(self.n, self.words_of(pair_index(self.n, a, b)))
    }

    pub fn len_of(&self, x: Vertex, y: Vertex) -> usize {
        let (a, b) = (x.min(y), x.max(y));
        self.size_of(pair_index(self.n, a, b))
    }

    /// Number of members of `set` that distinguish `x` and `y`.
    pub fn covered(&self, x: Vertex, y: Vertex, set: &VertexSet) -> usize {
        let (a, b) = (x.min(y), x.max(y));
        intersection_len(self.words_of(pair_index(self.n, a, b)), set.words())
    }

    /// The pair with the fewest distinguishers (first in index order on ties).
    pub fn weakest_pair(&self) -> Option<((Vertex, Vertex), usize)> {
        self.pairs()
            .zip(&self.sizes)
            .min_by_key(|&(_, &s)| s)
            .map(|(p, &s)| (p, s as usize))
    }
}

/// A pair that `S` fails to distinguish `k` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub x: Vertex,
    pub y: Vertex,
    /// `|D(x, y) ∩ S|`
    pub covered: usize,
}

pub(crate) fn validate_set(n: usize, set: &[Vertex]) -> Result<VertexSet, ResolveError> {
    let mut s = VertexSet::new(n);
    for &v in set {
        if v >= n {
            return Err(ResolveError::VertexOutOfRange(v, n));
        }
        s.insert(v);
    }
    Ok(s)
}

/// Checks whether `set` is `k`-resolving. Returns the first violating pair in
/// pair-index order, or `None` when every pair has `k` distinguishers in `set`.
pub fn is_k_resolving(
    table: &DistinguisherTable,
    set: &[Vertex],
    k: usize,
) -> Result<Option<Violation>, ResolveError> {
    if k == 0 {
        return Err(ResolveError::ZeroMultiplicity);
    }
    let s = validate_set(table.order(), set)?;
    Ok(first_violation(table, &s, k))
}

pub(crate) fn first_violation(table: &DistinguisherTable, s: &VertexSet, k: usize) -> Option<Violation> {
    table.pairs().enumerate().find_map(|(p, (x, y))| {
        let covered = intersection_len(table.words_of(p), s.words());
        (covered < k).then_some(Violation { x, y, covered })
    })
}

/// Largest `k` admitting a `k`-resolving set: the minimum `|D(x, y)|`.
pub fn kappa(table: &DistinguisherTable) -> Result<usize, ResolveError> {
    table
        .weakest_pair()
        .map(|(_, s)| s)
        .ok_or(ResolveError::SingleVertex)
}

/// Resolvability straight from the definition: the distance vectors to the
/// members of `set` are pairwise distinct. Independent of the table.
pub fn is_resolving_by_vectors(dm: &DistanceMatrix, set: &[Vertex]) -> bool {
    let n = dm.order();
    let mut vectors: Vec<Vec<u16>> = (0..n).map(|v| set.iter().map(|&s| dm.get(v, s)).collect()).collect();
    vectors.sort_unstable();
    vectors.windows(2).all(|w| w[0] != w[1])
}

/// Fault tolerance by removal: `set` resolves, and so does `set` minus any
/// single member.
pub fn is_fault_tolerant_by_removal(dm: &DistanceMatrix, set: &[Vertex]) -> bool {
    is_resolving_by_vectors(dm, set)
        && (0..set.len()).all(|i| {
            let rest: Vec<_> = set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            is_resolving_by_vectors(dm, &rest)
        })
}
