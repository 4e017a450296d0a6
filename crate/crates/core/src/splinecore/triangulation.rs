use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactla::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriError {
    #[error("not a topological disk: {0}")]
    NotADisk(&'static str),
    #[error("triangle {index} is degenerate")]
    DegenerateTriangle { index: usize },
    #[error("edge ({0}, {1}) lies in more than two triangles")]
    DanglingEdge(usize, usize),
    #[error("triangle {triangle} refers to missing vertex {vertex}")]
    InvalidIndex { triangle: usize, vertex: usize },
    #[error("vertex {0} is not an interior vertex")]
    NotInterior(usize),
}

pub type Point = (Rational, Rational);

/// An edge `(a, b)` with `a < b` and the triangles containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub triangles: Vec<usize>,
}

impl Edge {
    pub fn is_interior(&self) -> bool {
        self.triangles.len() == 2
    }
}

/// A planar simplicial complex homeomorphic to a disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    vertices: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    interior_edges: Vec<usize>,
    interior_vertices: Vec<usize>,
}

/// Twice the signed area of `(p, q, s)`.
pub fn signed_area2(p: &Point, q: &Point, s: &Point) -> Rational {
    (&q.0 - &p.0) * (&s.1 - &p.1) - (&q.1 - &p.1) * (&s.0 - &p.0)
}

impl Triangulation {
    pub fn new(vertices: Vec<Point>, triangles: Vec<[usize; 3]>) -> Result<Self, TriError> {
        if triangles.is_empty() {
            return Err(TriError::NotADisk("no triangles"));
        }
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                if v >= vertices.len() {
                    return Err(TriError::InvalidIndex { triangle: t, vertex: v });
                }
            }
            let [a, b, c] = *tri;
            if a == b || b == c || a == c || signed_area2(&vertices[a], &vertices[b], &vertices[c]).is_zero() {
                return Err(TriError::DegenerateTriangle { index: t });
            }
        }
        let mut seen = BTreeMap::new();
        for tri in &triangles {
            let mut key = *tri;
            key.sort_unstable();
            if seen.insert(key, ()).is_some() {
                return Err(TriError::NotADisk("repeated triangle"));
            }
        }

        let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                let (a, b) = (tri[i].min(tri[j]), tri[i].max(tri[j]));
                by_pair.entry((a, b)).or_default().push(t);
            }
        }
        let mut edges = Vec::with_capacity(by_pair.len());
        for ((a, b), ts) in by_pair {
            if ts.len() > 2 {
                return Err(TriError::DanglingEdge(a, b));
            }
            edges.push(Edge { a, b, triangles: ts });
        }

        let mut used = vec![false; vertices.len()];
        for tri in &triangles {
            for &v in tri {
                used[v] = true;
            }
        }
        if used.iter().any(|u| !u) {
            return Err(TriError::NotADisk("vertex not in any triangle"));
        }
        if !dual_connected(triangles.len(), &edges) {
            return Err(TriError::NotADisk("triangles are not edge-connected"));
        }
        let euler = vertices.len() as i64 - edges.len() as i64 + triangles.len() as i64;
        if euler != 1 {
            return Err(TriError::NotADisk("Euler characteristic is not 1"));
        }

        let mut boundary_degree = vec![0usize; vertices.len()];
        for e in edges.iter().filter(|e| !e.is_interior()) {
            boundary_degree[e.a] += 1;
            boundary_degree[e.b] += 1;
        }
        for (v, &bd) in boundary_degree.iter().enumerate() {
            if bd != 0 && bd != 2 {
                return Err(TriError::NotADisk("boundary is not a simple closed curve"));
            }
            if !link_connected(v, &triangles) {
                return Err(TriError::NotADisk("vertex link is disconnected"));
            }
        }

        let interior_edges = (0..edges.len()).filter(|&i| edges[i].is_interior()).collect();
        let interior_vertices = (0..vertices.len()).filter(|&v| boundary_degree[v] == 0).collect();
        Ok(Triangulation {
            vertices,
            triangles,
            edges,
            interior_edges,
            interior_vertices,
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Indices into [`Self::edges`] of the edges shared by two triangles.
    pub fn interior_edges(&self) -> &[usize] {
        &self.interior_edges
    }

    pub fn interior_vertices(&self) -> &[usize] {
        &self.interior_vertices
    }

    /// `f_2`.
    pub fn f2(&self) -> usize {
        self.triangles.len()
    }

    /// `f_1^0`.
    pub fn f1_interior(&self) -> usize {
        self.interior_edges.len()
    }

    /// `f_0^0`.
    pub fn f0_interior(&self) -> usize {
        self.interior_vertices.len()
    }

    /// Index of the edge `{a, b}`, in either order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search_by(|e| (e.a, e.b).cmp(&key)).ok()
    }

    /// Vertex triple of triangle `t` reordered counterclockwise, starting
    /// from its smallest index.
    pub fn ccw(&self, t: usize) -> [usize; 3] {
        let mut tri = self.triangles[t];
        tri.sort_unstable();
        let [a, b, c] = tri;
        if signed_area2(&self.vertices[a], &self.vertices[b], &self.vertices[c]).is_negative() {
            [a, c, b]
        } else {
            [a, b, c]
        }
    }

    /// `+1` when triangle `t` lies to the left of the edge directed from its
    /// smaller to its larger endpoint, `-1` otherwise.
    pub fn incidence_sign(&self, edge: usize, t: usize) -> i64 {
        let e = &self.edges[edge];
        let o = self.ccw(t);
        let forward = (0..3).any(|i| o[i] == e.a && o[(i + 1) % 3] == e.b);
        if forward {
            1
        } else {
            -1
        }
    }

    /// Number of distinct lines through interior vertex `v` carrying an edge.
    pub fn slope_count(&self, v: usize) -> Result<usize, TriError> {
        if !self.interior_vertices.contains(&v) {
            return Err(TriError::NotInterior(v));
        }
        let mut dirs: Vec<(Rational, Rational)> = Vec::new();
        for e in self.edges.iter().filter(|e| e.a == v || e.b == v) {
            let w = if e.a == v { e.b } else { e.a };
            let dx = &self.vertices[w].0 - &self.vertices[v].0;
            let dy = &self.vertices[w].1 - &self.vertices[v].1;
            let d = normalize_direction(dx, dy);
            if !dirs.contains(&d) {
                dirs.push(d);
            }
        }
        Ok(dirs.len())
    }
}

/// Direction up to nonzero scaling: first nonzero component made 1.
fn normalize_direction(dx: Rational, dy: Rational) -> (Rational, Rational) {
    if dx.is_zero() {
        (Rational::zero(), Rational::from_integer(1.into()))
    } else {
        let s = dy / &dx;
        (Rational::from_integer(1.into()), s)
    }
}

fn dual_connected(f: usize, edges: &[Edge]) -> bool {
    let mut parent: Vec<usize> = (0..f).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in edges.iter().filter(|e| e.is_interior()) {
        let (a, b) = (find(&mut parent, e.triangles[0]), find(&mut parent, e.triangles[1]));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..f).all(|t| find(&mut parent, t) == root)
}

/// Whether the triangles around `v` form a single fan (connected through
/// edges at `v`).
fn link_connected(v: usize, triangles: &[[usize; 3]]) -> bool {
    let star: Vec<[usize; 2]> = triangles
        .iter()
        .filter(|t| t.contains(&v))
        .map(|t| {
            let mut o = t.iter().copied().filter(|&w| w != v);
            [o.next().unwrap_or(v), o.next().unwrap_or(v)]
        })
        .collect();
    if star.is_empty() {
        return true;
    }
    let mut reached = vec![false; star.len()];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..star.len() {
            if !reached[j] && star[j].iter().any(|w| star[i].contains(w)) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.iter().all(|&r| r)
}

/// `(b1 - b2) x + (a2 - a1) y + (a1 b2 - a2 b1) z` for the line through two
/// points, scaled to coprime integers with positive leading coefficient.
pub fn line_coefficients(p: &Point, q: &Point) -> [num_bigint::BigInt; 3] {
    let raw = [
        &p.1 - &q.1,
        &q.0 - &p.0,
        &p.0 * &q.1 - &q.0 * &p.1,
    ];
    let lcm = raw
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = raw.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        -g
    } else {
        g
    };
    [&ints[0] / &sign, &ints[1] / &sign, &ints[2] / &sign]
}
