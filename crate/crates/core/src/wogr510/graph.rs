//! The spinor graph: the 5-cube modulo the antipodal map.
//!
//! A vertex is stored as the even subset of `{0..4}` in its antipodal class,
//! so `x` is the empty set, `x_ij` is `{i, j}` and `x_i` is the complement of `{i}`.

use serde::{Serialize, Serializer};

use crate::wgrass25::PAIRS;

pub const VERTEX_COUNT: usize = 16;

/// Even-subset bitmask of vertex `v`, in the order `x, x1..x5, x12..x45`.
pub fn vertex_subset(v: usize) -> u8 {
    match v {
        0 => 0,
        1..=5 => 0b11111 ^ (1 << (v - 1)),
        6..=15 => {
            let (i, j) = PAIRS[v - 6];
            (1 << i) | (1 << j)
        }
        _ => panic!("vertex index {v} out of range"),
    }
}

pub fn vertex_of_subset(mask: u8) -> usize {
    (0..VERTEX_COUNT)
        .find(|&v| vertex_subset(v) == mask)
        .unwrap_or_else(|| panic!("{mask:#07b} is not an even subset"))
}

/// Short name: `x`, `x3`, `x25`.
pub fn vertex_name(v: usize) -> String {
    match v {
        0 => "x".to_string(),
        1..=5 => format!("x{v}"),
        _ => {
            let (i, j) = PAIRS[v - 6];
            format!("x{}{}", i + 1, j + 1)
        }
    }
}

pub fn parse_vertex(name: &str) -> Option<usize> {
    (0..VERTEX_COUNT).find(|&v| vertex_name(v) == name)
}

/// Vertex at `E` xor `{i, j}`: the local coordinates of the chart at `E`.
pub fn pair_shift(v: usize, i: usize, j: usize) -> usize {
    vertex_of_subset(vertex_subset(v) ^ ((1 << i) | (1 << j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinorVertex(pub usize);

impl SpinorVertex {
    pub fn name(&self) -> String {
        vertex_name(self.0)
    }

    /// Short representative, 1-based, of size at most 2.
    pub fn short_subset(&self) -> Vec<usize> {
        let m = vertex_subset(self.0);
        let m = if m.count_ones() > 2 { 0b11111 ^ m } else { m };
        (0..5).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect()
    }
}

impl Serialize for SpinorVertex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: SpinorVertex,
    pub b: SpinorVertex,
    /// 0-based; the edge adds this index.
    pub direction: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinorGraph {
    pub vertices: Vec<SpinorVertex>,
    pub edges: Vec<Edge>,
    /// Per direction, two quads of pairwise remote edges (indices into `edges`).
    pub quads: Vec<[Vec<usize>; 2]>,
}

/// Direction of the edge `u v`, if there is one.
pub fn edge_direction(u: usize, v: usize) -> Option<usize> {
    let diff = vertex_subset(u) ^ vertex_subset(v);
    (diff.count_ones() == 4).then(|| (0..5).find(|i| diff & (1 << i) == 0).unwrap())
}

pub fn neighbours(v: usize) -> Vec<usize> {
    (0..VERTEX_COUNT).filter(|&u| edge_direction(u, v).is_some()).collect()
}

impl SpinorGraph {
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        edge_direction(u, v).is_some()
    }

    pub fn remote(&self, e: &Edge, f: &Edge) -> bool {
        let ends = |x: &Edge| [x.a.0, x.b.0];
        ends(e)
            .iter()
            .all(|&p| ends(f).iter().all(|&q| p != q && !self.adjacent(p, q)))
    }

    pub fn edges_in_direction(&self, k: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].direction == k).collect()
    }
}

pub fn spinor_graph() -> SpinorGraph {
    let vertices = (0..VERTEX_COUNT).map(SpinorVertex).collect();
    let mut edges = Vec::new();
    for u in 0..VERTEX_COUNT {
        for v in u + 1..VERTEX_COUNT {
            if let Some(direction) = edge_direction(u, v) {
                edges.push(Edge {
                    a: SpinorVertex(u),
                    b: SpinorVertex(v),
                    direction,
                });
            }
        }
    }
    let mut g = SpinorGraph {
        vertices,
        edges,
        quads: Vec::new(),
    };
    for k in 0..5 {
        let par = g.edges_in_direction(k);
        // Remote edges within a direction fall into two cliques; grow one from the first edge.
        let first: Vec<usize> = par
            .iter()
            .copied()
            .filter(|&e| e == par[0] || g.remote(&g.edges[par[0]], &g.edges[e]))
            .collect();
        let second: Vec<usize> = par.iter().copied().filter(|e| !first.contains(e)).collect();
        g.quads.push([first, second]);
    }
    g
}
