//! Exact `k`-metric dimension.
//!
//! The problem is a set multicover: every vertex pair `{x, y}` must be covered
//! `k` times by members of `D(x, y)`. The solver first forces every member of
//! a distinguisher set of size exactly `k` (for `k = 2` these are precisely
//! the twin pairs), then runs include/exclude branch-and-bound on the pairs
//! that remain deficient. Among minimum solutions it returns the
//! lexicographically least one by sorted identifiers.

use serde::Serialize;

use crate::bitset::{intersection_len, VertexSet};
use crate::distance::DistanceMatrix;
use crate::graph::Vertex;
use crate::resolving::{DistinguisherTable, ResolveError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub k: usize,
    /// Minimum cardinality, or the best upper bound when `complete` is false.
    pub value: usize,
    /// Ascending identifiers.
    pub witness: Vec<Vertex>,
    /// Vertices every `k`-resolving set must contain.
    pub forced: Vec<Vertex>,
    pub nodes_explored: u64,
    pub complete: bool,
}

#[derive(Clone)]
struct Node {
    chosen: VertexSet,
    excluded: VertexSet,
}

#[derive(Clone, Copy)]
enum Goal {
    /// Keep searching for strictly smaller solutions than the incumbent.
    Minimize,
    /// Stop at the first solution of at most this size.
    AtMost(usize),
}

struct Search<'a> {
    table: &'a DistinguisherTable,
    k: usize,
    /// Pairs still deficient after root forcing.
    active: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    best: VertexSet,
    found: Option<VertexSet>,
}

impl<'a> Search<'a> {
    fn avail_words(&self, p: usize, node: &Node) -> Vec<u64> {
        self.table
            .words_of(p)
            .iter()
            .zip(node.chosen.words())
            .zip(node.excluded.words())
            .map(|((d, c), x)| d & !c & !x)
            .collect()
    }

    /// Forces vertices into `chosen` while some deficient pair has exactly as
    /// many available distinguishers as it still needs. Returns the remaining
    /// `(pair, deficiency)` list, or `None` if a pair can no longer be covered.
    fn propagate(&self, node: &mut Node) -> Option<Vec<(usize, usize)>> {
        let mut deficient = Vec::new();
        loop {
            let mut changed = false;
            deficient.clear();
            for &p in &self.active {
                let covered = intersection_len(self.table.words_of(p), node.chosen.words());
                if covered >= self.k {
                    continue;
                }
                let need = self.k - covered;
                let avail = self.avail_words(p, node);
                let have: usize = avail.iter().map(|w| w.count_ones() as usize).sum();
                if have < need {
                    return None;
                }
                if have == need {
                    node.chosen.union_with(&VertexSet::from_words(node.chosen.capacity(), &avail));
                    changed = true;
                } else {
                    deficient.push((p, need));
                }
            }
            if !changed {
                return Some(deficient);
            }
        }
    }

    fn dfs(&mut self, mut node: Node, goal: Goal) -> bool {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return true;
        }
        self.nodes += 1;
        let limit = match goal {
            Goal::Minimize => self.best.len() - 1,
            Goal::AtMost(t) => t,
        };
        let Some(deficient) = self.propagate(&mut node) else {
            return false;
        };
        let size = node.chosen.len();
        if size > limit {
            return false;
        }
        if deficient.is_empty() {
            return match goal {
                Goal::Minimize => {
                    self.best = node.chosen;
                    false
                }
                Goal::AtMost(_) => {
                    self.found = Some(node.chosen);
                    true
                }
            };
        }

        let n = self.table.order();
        let mut coverage = vec![0usize; n];
        let mut total_need = 0;
        let mut max_need = 0;
        for &(p, need) in &deficient {
            total_need += need;
            max_need = max_need.max(need);
            for v in VertexSet::from_words(n, &self.avail_words(p, &node)).iter() {
                coverage[v] += 1;
            }
        }
        // Each added vertex lowers the total deficiency by at most its
        // coverage, so the largest coverages bound the number still needed.
        let mut sorted: Vec<usize> = coverage.iter().copied().filter(|&c| c > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut acc = 0;
        let mut needed = 0;
        for c in sorted {
            if acc >= total_need {
                break;
            }
            acc += c;
            needed += 1;
        }
        if size + needed.max(max_need) > limit {
            return false;
        }

        let branch = (0..n)
            .filter(|&v| coverage[v] > 0)
            .max_by(|&a, &b| coverage[a].cmp(&coverage[b]).then(b.cmp(&a)))
            .expect("deficient pairs always have available vertices");
        let mut with = node.clone();
        with.chosen.insert(branch);
        if self.dfs(with, goal) {
            return true;
        }
        node.excluded.insert(branch);
        self.dfs(node, goal)
    }

    fn greedy(&self, forced: &VertexSet) -> VertexSet {
        let n = self.table.order();
        let mut node = Node {
            chosen: forced.clone(),
            excluded: VertexSet::new(n),
        };
        loop {
            let mut gain = vec![0usize; n];
            let mut any = false;
            for &p in &self.active {
                if intersection_len(self.table.words_of(p), node.chosen.words()) >= self.k {
                    continue;
                }
                any = true;
                for v in VertexSet::from_words(n, &self.avail_words(p, &node)).iter() {
                    gain[v] += 1;
                }
            }
            if !any {
                return node.chosen;
            }
            let v = (0..n)
                .max_by(|&a, &b| gain[a].cmp(&gain[b]).then(b.cmp(&a)))
                .unwrap();
            node.chosen.insert(v);
        }
    }
}

fn check_multiplicity(table: &DistinguisherTable, k: usize) -> Result<(), ResolveError> {
    if k == 0 {
        return Err(ResolveError::ZeroMultiplicity);
    }
    if table.order() == 1 && k > 1 {
        return Err(ResolveError::SingleVertex);
    }
    if let Some(((x, y), size)) = table.weakest_pair() {
        if size < k {
            return Err(ResolveError::Infeasible {
                k,
                x,
                y,
                distinguishers: size,
            });
        }
    }
    Ok(())
}

/// Exact minimum `k`-resolving set by forcing plus branch-and-bound.
///
/// `budget` caps the number of search nodes; when it runs out the result
/// carries the best set found so far and `complete = false`. On a
/// single-vertex graph `k = 1` yields the empty set.
pub fn solve_k_metric_dimension(
    table: &DistinguisherTable,
    k: usize,
    budget: Option<u64>,
) -> Result<SolveResult, ResolveError> {
    check_multiplicity(table, k)?;
    let n = table.order();

    let mut forced = VertexSet::new(n);
    for p in 0..table.pair_count() {
        if table.size_of(p) == k {
            forced.union_with(&VertexSet::from_words(n, table.words_of(p)));
        }
    }
    let active: Vec<usize> = (0..table.pair_count())
        .filter(|&p| intersection_len(table.words_of(p), forced.words()) < k)
        .collect();

    let mut search = Search {
        table,
        k,
        active,
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
        exhausted: false,
        best: VertexSet::new(n),
        found: None,
    };

    let witness = if search.active.is_empty() {
        search.nodes = 1;
        forced.clone()
    } else {
        search.best = search.greedy(&forced);
        let root = Node {
            chosen: forced.clone(),
            excluded: VertexSet::new(n),
        };
        search.dfs(root.clone(), Goal::Minimize);
        if search.exhausted {
            search.best.clone()
        } else {
            lex_least(&mut search, root)
        }
    };

    Ok(SolveResult {
        k,
        value: witness.len(),
        witness: witness.to_vec(),
        forced: forced.to_vec(),
        nodes_explored: search.nodes,
        complete: !search.exhausted,
    })
}

/// Decides vertices in ascending order, including each one whenever an
/// optimal solution extending the decisions so far still exists.
fn lex_least(search: &mut Search<'_>, mut node: Node) -> VertexSet {
    let opt = search.best.len();
    for v in 0..search.table.order() {
        if node.chosen.len() == opt {
            return node.chosen;
        }
        if node.chosen.contains(v) {
            continue;
        }
        let mut trial = node.clone();
        trial.chosen.insert(v);
        search.found = None;
        let stopped = search.dfs(trial, Goal::AtMost(opt));
        if search.exhausted {
            return search.best.clone();
        }
        if stopped {
            node.chosen.insert(v);
        } else {
            node.excluded.insert(v);
        }
    }
    debug_assert_eq!(node.chosen.len(), opt);
    node.chosen
}

/// Largest graph the exhaustive oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 16;

/// Reference solver: tries every subset in order of increasing size, each
/// size in lexicographic order, counting distinguishers straight from the
/// distance matrix.
pub fn solve_exhaustive_oracle(dm: &DistanceMatrix, k: usize) -> Result<SolveResult, ResolveError> {
    let n = dm.order();
    if n > ORACLE_MAX_ORDER {
        return Err(ResolveError::TooLarge {
            n,
            max: ORACLE_MAX_ORDER,
        });
    }
    if k == 0 {
        return Err(ResolveError::ZeroMultiplicity);
    }
    if n == 1 && k > 1 {
        return Err(ResolveError::SingleVertex);
    }
    let separates = |w: Vertex, x: Vertex, y: Vertex| dm.get(w, x) != dm.get(w, y);
    let resolves = |set: &[Vertex]| {
        (0..n).all(|x| (x + 1..n).all(|y| set.iter().filter(|&&w| separates(w, x, y)).count() >= k))
    };
    let mut nodes = 0;
    for size in 0..=n {
        let mut comb: Vec<Vertex> = (0..size).collect();
        loop {
            nodes += 1;
            if resolves(&comb) {
                return Ok(SolveResult {
                    k,
                    value: size,
                    witness: comb,
                    forced: Vec::new(),
                    nodes_explored: nodes,
                    complete: true,
                });
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| comb[i] < n - size + i) else {
                break;
            };
            comb[i] += 1;
            for j in i + 1..size {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    let (x, y, distinguishers) = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .map(|(x, y)| (x, y, (0..n).filter(|&w| separates(w, x, y)).count()))
        .min_by_key(|&(_, _, c)| c)
        .expect("n >= 2 here");
    Err(ResolveError::Infeasible { k, x, y, distinguishers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::generators::{butterfly, classical, Classical};
    use crate::graph::Graph;

    fn both(g: &Graph, k: usize) -> (SolveResult, SolveResult) {
        let dm = all_pairs_distances(g).unwrap();
        let t = DistinguisherTable::new(&dm);
        (
            solve_k_metric_dimension(&t, k, None).unwrap(),
            solve_exhaustive_oracle(&dm, k).unwrap(),
        )
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=7 {
            let g = classical(Classical::Complete(n)).unwrap();
            let (bb, oracle) = both(&g, 2);
            assert_eq!(bb.value, n as usize);
            assert_eq!(oracle.value, n as usize);
            assert_eq!(bb.forced.len(), n as usize);
            let (bb1, oracle1) = both(&g, 1);
            assert_eq!((bb1.value, oracle1.value), (n as usize - 1, n as usize - 1));
        }
    }

    #[test]
    fn paths_need_both_leaves() {
        for n in 2..=10 {
            let g = classical(Classical::Path(n)).unwrap();
            let (bb, oracle) = both(&g, 2);
            assert_eq!(bb.value, 2);
            assert_eq!(oracle.value, 2);
            let leaves: Vec<_> = g.vertices().filter(|&v| g.degree(v) <= 1).collect();
            assert_eq!(bb.witness, leaves);
            assert_eq!(bb.witness, oracle.witness);
        }
    }

    #[test]
    fn path_four_metric_dimension_one() {
        let g = classical(Classical::Path(4)).unwrap();
        let (bb, oracle) = both(&g, 1);
        assert_eq!((bb.value, oracle.value), (1, 1));
        assert_eq!(bb.witness, oracle.witness);
        assert_eq!(g.degree(bb.witness[0]), 1);
    }

    #[test]
    fn cycles_have_ftmd_three() {
        // C_4 is all twins (opposite vertices), so its value is 4
        let (bb, oracle) = both(&classical(Classical::Cycle(4)).unwrap(), 2);
        assert_eq!((bb.value, oracle.value), (4, 4));
        for n in 5..=9 {
            let g = classical(Classical::Cycle(n)).unwrap();
            let (bb, oracle) = both(&g, 2);
            assert_eq!(oracle.value, 3, "C_{n}");
            assert_eq!(bb.value, 3, "C_{n}");
            assert_eq!(bb.witness, oracle.witness);
        }
    }

    #[test]
    fn star_metric_dimension() {
        let g = classical(Classical::CompleteBipartite(1, 3)).unwrap();
        let (bb, oracle) = both(&g, 1);
        assert_eq!((bb.value, oracle.value), (2, 2));
    }

    #[test]
    fn complete_bipartite_value_is_order_iff_all_twins() {
        for s in 1..=4u32 {
            for t in 1..=4u32 {
                let g = classical(Classical::CompleteBipartite(s, t)).unwrap();
                let (bb, oracle) = both(&g, 2);
                assert_eq!(bb.value, oracle.value);
                // a star's center has no twin
                let all_twins = (s >= 2 && t >= 2) || (s == 1 && t == 1);
                assert_eq!(crate::twins::all_vertices_twins(&g).unwrap(), all_twins);
                assert_eq!(bb.value == (s + t) as usize, all_twins, "K_{{{s},{t}}}");
            }
        }
    }

    #[test]
    fn infeasible_multiplicity_names_weak_pair() {
        let g = classical(Classical::Path(3)).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let t = DistinguisherTable::new(&dm);
        match solve_k_metric_dimension(&t, 3, None) {
            Err(ResolveError::Infeasible { k: 3, distinguishers: 2, x, y }) => {
                assert_eq!(t.len_of(x, y), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(solve_exhaustive_oracle(&dm, 3), Err(ResolveError::Infeasible { .. })));
    }

    #[test]
    fn single_vertex() {
        let g = classical(Classical::Path(1)).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let t = DistinguisherTable::new(&dm);
        let r = solve_k_metric_dimension(&t, 1, None).unwrap();
        assert_eq!((r.value, r.witness.len()), (0, 0));
        assert_eq!(solve_k_metric_dimension(&t, 2, None), Err(ResolveError::SingleVertex));
        assert_eq!(solve_exhaustive_oracle(&dm, 1).unwrap().value, 0);
    }

    #[test]
    fn two_vertices() {
        let g = classical(Classical::Complete(2)).unwrap();
        let (bb, oracle) = both(&g, 2);
        assert_eq!((bb.value, oracle.value), (2, 2));
        let (bb1, _) = both(&g, 1);
        assert_eq!(bb1.value, 1);
    }

    #[test]
    fn butterfly_closed_by_forcing() {
        let bf = butterfly(3).unwrap();
        let dm = all_pairs_distances(&bf.graph).unwrap();
        let t = DistinguisherTable::new(&dm);
        let r = solve_k_metric_dimension(&t, 2, None).unwrap();
        assert_eq!(r.value, 16);
        assert_eq!(r.forced, r.witness);
        assert_eq!(r.nodes_explored, 1);
        assert_eq!(r.witness, bf.vertices_at_levels(&[0, 3]));
    }

    #[test]
    fn exhausted_budget_reports_incomplete_upper_bound() {
        let g = classical(Classical::Cycle(9)).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let t = DistinguisherTable::new(&dm);
        let r = solve_k_metric_dimension(&t, 2, Some(1)).unwrap();
        assert!(!r.complete);
        assert!(r.value >= 3);
        assert_eq!(crate::resolving::is_k_resolving(&t, &r.witness, 2).unwrap(), None);
    }

    #[test]
    fn oracle_rejects_large_graphs() {
        let g = classical(Classical::Path(17)).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        assert_eq!(
            solve_exhaustive_oracle(&dm, 1),
            Err(ResolveError::TooLarge { n: 17, max: 16 })
        );
    }
}
