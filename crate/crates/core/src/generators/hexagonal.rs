//! Circumcoronene benzenoids and the silicate networks built on them.
//!
//! Lattice points use coordinates `(x, y)` on a triangular lattice with basis
//! vectors 60 degrees apart. Hexagon centers form the index-3 sublattice
//! `x ≡ y (mod 3)`; the six corners of a hexagon are its center plus the six
//! unit directions, so honeycomb vertices are exactly the other two cosets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{check_max, check_min, finish, GeneratorError};
use crate::graph::{Graph, Vertex};

type Point = (i32, i32);

/// Unit directions in counterclockwise order starting east.
const DIRS: [Point; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

const MAX_LAYERS: u32 = 40;

/// Hexagonal (axial) distance of a lattice point from the origin.
pub fn hex_radius((x, y): Point) -> i32 {
    x.abs().max(y.abs()).max((x + y).abs())
}

fn add((a, b): Point, (c, d): Point) -> Point {
    (a + c, b + d)
}

fn direction_index(from: Point, to: Point) -> usize {
    let delta = (to.0 - from.0, to.1 - from.1);
    DIRS.iter().position(|&d| d == delta).expect("points are not lattice neighbors")
}

/// Angle in `[0, 2π)` of a lattice point, counterclockwise from east.
fn angle((x, y): Point) -> f64 {
    let (cx, cy) = (f64::from(x) + f64::from(y) / 2.0, f64::from(y) * 3f64.sqrt() / 2.0);
    cy.atan2(cx).rem_euclid(std::f64::consts::TAU)
}

/// The honeycomb skeleton of `H_n`: lattice points and edges, before any
/// graph identifiers are assigned.
struct Honeycomb {
    points: Vec<Point>,
    edges: Vec<(Point, Point)>,
}

impl Honeycomb {
    fn new(layers: u32) -> Self {
        let radius = layers as i32 - 1;
        let mut points = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for q in -radius..=radius {
            for r in -radius..=radius {
                if hex_radius((q, r)) > radius {
                    continue;
                }
                let center = (2 * q + r, r - q);
                let corners: Vec<Point> = DIRS.iter().map(|&d| add(center, d)).collect();
                for i in 0..6 {
                    let (a, b) = (corners[i], corners[(i + 1) % 6]);
                    points.insert(a);
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
        Self {
            points: points.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    fn neighbors(&self) -> BTreeMap<Point, Vec<Point>> {
        let mut adj: BTreeMap<Point, Vec<Point>> = self.points.iter().map(|&p| (p, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        adj
    }
}

/// Circumcoronene `H_n` with the lattice position of every vertex.
#[derive(Debug, Clone)]
pub struct HexagonalNetwork {
    pub graph: Graph,
    pub positions: Vec<Point>,
}

/// `H_n`: a central hexagon surrounded by `n - 1` layers of hexagons.
pub fn circumcoronene(n: u32) -> Result<HexagonalNetwork, GeneratorError> {
    check_min("hn", "n", n, 1)?;
    check_max("hn", "n", n, MAX_LAYERS)?;
    let hc = Honeycomb::new(n);
    let index: BTreeMap<Point, Vertex> = hc.points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let labels = hc.points.iter().map(|&(x, y)| format!("hn:({x},{y})")).collect();
    let edges: Vec<_> = hc.edges.iter().map(|(a, b)| (index[a], index[b])).collect();
    let (graph, positions) = finish(labels, hc.points.clone(), &edges);
    Ok(HexagonalNetwork { graph, positions })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SilicateKind {
    /// An original vertex of `H_n`.
    Hexagon,
    /// The vertex subdividing an edge of `H_n`.
    Subdivision,
    /// The extra corner completing the tetrahedron at a degree-2 vertex of `H_n`.
    Apex,
}

/// Role and lattice position of a silicate vertex. A subdivision vertex is
/// addressed by the endpoint with `x - y ≡ 1 (mod 3)` and the direction
/// towards the other endpoint; an apex shares its host's position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SilicateRole {
    pub kind: SilicateKind,
    pub position: Point,
    pub direction: Option<u8>,
}

impl SilicateRole {
    /// Lattice radius used to rank vertices outward. Subdivision vertices sit
    /// halfway along their edge and apexes one step beyond their host, so
    /// radii are in half-steps.
    pub fn radius2(&self) -> i32 {
        let base = hex_radius(self.position);
        match self.kind {
            SilicateKind::Hexagon => 2 * base,
            SilicateKind::Subdivision => {
                let other = add(self.position, DIRS[self.direction.unwrap() as usize]);
                base + hex_radius(other)
            }
            SilicateKind::Apex => 2 * base + 2,
        }
    }
}

impl fmt::Display for SilicateRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.position;
        match self.kind {
            SilicateKind::Hexagon => write!(f, "sl:hex:({x},{y})"),
            SilicateKind::Subdivision => write!(f, "sl:sub:({x},{y},{})", self.direction.unwrap()),
            SilicateKind::Apex => write!(f, "sl:apex:({x},{y})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SilicateNetwork {
    pub graph: Graph,
    pub roles: Vec<SilicateRole>,
    pub layers: u32,
    /// Set for `n = 1`, below the range the closed forms are stated for.
    pub below_theorem_range: bool,
}

impl SilicateNetwork {
    pub fn vertices_of_kind(&self, kind: SilicateKind) -> Vec<Vertex> {
        (0..self.roles.len()).filter(|&v| self.roles[v].kind == kind).collect()
    }

    /// Apex vertices in counterclockwise order starting from the easternmost.
    pub fn apexes_counterclockwise(&self) -> Vec<Vertex> {
        let mut apexes = self.vertices_of_kind(SilicateKind::Apex);
        apexes.sort_by(|&a, &b| {
            let (pa, pb) = (self.roles[a].position, self.roles[b].position);
            angle(pa).total_cmp(&angle(pb)).then(pa.cmp(&pb))
        });
        apexes
    }
}

/// `SL(n)`: subdivide every edge of `H_n` and complete a tetrahedron around
/// each original vertex, adding an apex where the vertex has degree 2.
pub fn silicate(n: u32) -> Result<SilicateNetwork, GeneratorError> {
    check_min("sl", "n", n, 1)?;
    check_max("sl", "n", n, MAX_LAYERS)?;
    let hc = Honeycomb::new(n);
    let adj = hc.neighbors();

    let mut roles: Vec<SilicateRole> = Vec::new();
    let mut index: BTreeMap<SilicateRole, Vertex> = BTreeMap::new();
    let mut intern = |role: SilicateRole| {
        *index.entry(role).or_insert_with(|| {
            roles.push(role);
            roles.len() - 1
        })
    };

    let subdivision = |a: Point, b: Point| {
        let (base, other) = if (a.0 - a.1).rem_euclid(3) == 1 { (a, b) } else { (b, a) };
        SilicateRole {
            kind: SilicateKind::Subdivision,
            position: base,
            direction: Some(direction_index(base, other) as u8),
        }
    };

    let mut edges = Vec::new();
    for (&p, nbrs) in &adj {
        let mut corners = vec![intern(SilicateRole {
            kind: SilicateKind::Hexagon,
            position: p,
            direction: None,
        })];
        corners.extend(nbrs.iter().map(|&q| intern(subdivision(p, q))));
        if nbrs.len() == 2 {
            corners.push(intern(SilicateRole {
                kind: SilicateKind::Apex,
                position: p,
                direction: None,
            }));
        }
        debug_assert_eq!(corners.len(), 4);
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((corners[i], corners[j]));
            }
        }
    }

    let labels = roles.iter().map(ToString::to_string).collect();
    let (graph, roles) = finish(labels, roles, &edges);
    Ok(SilicateNetwork {
        graph,
        roles,
        layers: n,
        below_theorem_range: n < 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_k4(g: &Graph) -> usize {
        let mut count = 0;
        for a in g.vertices() {
            let na: Vec<_> = g.neighbors(a).iter().copied().filter(|&x| x > a).collect();
            for (i, &b) in na.iter().enumerate() {
                for (j, &c) in na.iter().enumerate().skip(i + 1) {
                    if !g.has_edge(b, c) {
                        continue;
                    }
                    for &d in &na[j + 1..] {
                        if g.has_edge(b, d) && g.has_edge(c, d) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn circumcoronene_counts() {
        let h1 = circumcoronene(1).unwrap();
        assert_eq!((h1.graph.order(), h1.graph.size()), (6, 6));
        assert!(h1.graph.vertices().all(|v| h1.graph.degree(v) == 2));
        for n in 1..=6u32 {
            let h = circumcoronene(n).unwrap();
            let n = n as usize;
            assert_eq!(h.graph.order(), 6 * n * n);
            assert_eq!(h.graph.size(), 9 * n * n - 3 * n);
            let deg2 = h.graph.vertices().filter(|&v| h.graph.degree(v) == 2).count();
            assert_eq!(deg2, 6 * n);
            assert!(h.graph.vertices().all(|v| matches!(h.graph.degree(v), 2 | 3)));
            assert!(h.graph.is_connected());
        }
    }

    #[test]
    fn circumcoronene_two_and_three() {
        let h2 = circumcoronene(2).unwrap();
        assert_eq!((h2.graph.order(), h2.graph.size()), (24, 30));
        let h3 = circumcoronene(3).unwrap();
        assert_eq!((h3.graph.order(), h3.graph.size()), (54, 72));
    }

    #[test]
    fn silicate_counts() {
        for n in 1..=4u32 {
            let sl = silicate(n).unwrap();
            let n = n as usize;
            assert_eq!(sl.graph.order(), 15 * n * n + 3 * n);
            assert_eq!(sl.graph.size(), 36 * n * n);
            assert_eq!(count_k4(&sl.graph), 6 * n * n);
            assert_eq!(sl.vertices_of_kind(SilicateKind::Apex).len(), 6 * n);
            assert!(sl.graph.is_connected());
        }
    }

    #[test]
    fn silicate_two_by_role() {
        let sl = silicate(2).unwrap();
        assert_eq!(sl.graph.order(), 66);
        assert_eq!(count_k4(&sl.graph), 24);
        let apexes = sl.vertices_of_kind(SilicateKind::Apex);
        assert_eq!(apexes.len(), 12);
        assert!(apexes.iter().all(|&a| sl.graph.degree(a) == 3));
        for (v, role) in sl.roles.iter().enumerate() {
            let expected = match role.kind {
                SilicateKind::Subdivision => 6,
                _ => 3,
            };
            assert_eq!(sl.graph.degree(v), expected, "{role}");
            assert_eq!(sl.graph.label(v), role.to_string());
        }
    }

    #[test]
    fn apexes_sorted_by_angle() {
        let sl = silicate(3).unwrap();
        let order = sl.apexes_counterclockwise();
        assert_eq!(order.len(), 18);
        let angles: Vec<f64> = order.iter().map(|&v| angle(sl.roles[v].position)).collect();
        assert!(angles.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn rejects_zero_layers() {
        assert!(circumcoronene(0).is_err());
        assert!(silicate(0).is_err());
    }
}
