//! Combinatorial recognition of closed 3-manifolds: purity, connectivity,
//! triangle cofaces, and the link conditions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::SimplicialComplex;

/// Outcome of [`is_closed_3_manifold`]: either the complex is a closed
/// 3-manifold or the first failing condition, checked in the order purity,
/// connectivity, triangle cofaces, edge links, vertex links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldVerdict {
    ClosedManifold,
    /// A maximal simplex has dimension below 3 (or the complex is empty).
    NotPure { simplex: Vec<u32> },
    NotConnected,
    /// A triangle lies in `count` tetrahedra instead of exactly two.
    TriangleCofaceCount { triangle: Vec<u32>, count: usize },
    /// The link of this edge is not a single cycle.
    EdgeLinkNotCircle { edge: Vec<u32> },
    /// The link of this vertex is not a 2-sphere.
    VertexLinkNotSphere { vertex: u32 },
}

impl ManifoldVerdict {
    pub fn is_closed(&self) -> bool {
        matches!(self, ManifoldVerdict::ClosedManifold)
    }
}

impl fmt::Display for ManifoldVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldVerdict::ClosedManifold => write!(f, "closed 3-manifold"),
            ManifoldVerdict::NotPure { simplex } if simplex.is_empty() => {
                write!(f, "complex is empty")
            }
            ManifoldVerdict::NotPure { simplex } => write!(
                f,
                "maximal simplex {simplex:?} has dimension {}, not 3",
                simplex.len() - 1
            ),
            ManifoldVerdict::NotConnected => write!(f, "complex is not connected"),
            ManifoldVerdict::TriangleCofaceCount { triangle, count } => {
                write!(f, "triangle {triangle:?} lies in {count} tetrahedra, not 2")
            }
            ManifoldVerdict::EdgeLinkNotCircle { edge } => {
                write!(f, "link of edge {edge:?} is not a single cycle")
            }
            ManifoldVerdict::VertexLinkNotSphere { vertex } => {
                write!(f, "link of vertex {vertex} is not a 2-sphere")
            }
        }
    }
}

fn graph_is_single_cycle(vertices: &[u32], edges: &[(u32, u32)]) -> bool {
    if vertices.len() < 3 || edges.len() != vertices.len() {
        return false;
    }
    let mut degree: BTreeMap<u32, usize> = vertices.iter().map(|&v| (v, 0)).collect();
    for &(a, b) in edges {
        *degree.get_mut(&a).unwrap() += 1;
        *degree.get_mut(&b).unwrap() += 1;
    }
    if degree.values().any(|&d| d != 2) {
        return false;
    }
    graph_is_connected(vertices, edges)
}

fn graph_is_connected(vertices: &[u32], edges: &[(u32, u32)]) -> bool {
    let Some(&start) = vertices.first() else {
        return false;
    };
    let mut adjacency: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(a, b) in edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for &u in adjacency.get(&v).into_iter().flatten() {
            if seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen.len() == vertices.len()
}

fn sorted_with(base: &[u32], extra: &[u32]) -> Vec<u32> {
    let mut s: Vec<u32> = base.iter().chain(extra).copied().collect();
    s.sort_unstable();
    s
}

/// Check whether the complex is a combinatorial closed 3-manifold: pure of
/// dimension 3, connected, every triangle in exactly two tetrahedra, every
/// edge link a single cycle, every vertex link a 2-sphere.
pub fn is_closed_3_manifold(complex: &SimplicialComplex) -> ManifoldVerdict {
    if complex.is_empty() {
        return ManifoldVerdict::NotPure { simplex: vec![] };
    }
    for simplex in complex.maximal_simplices() {
        if simplex.len() != 4 {
            return ManifoldVerdict::NotPure { simplex };
        }
    }
    if !complex.is_connected() {
        return ManifoldVerdict::NotConnected;
    }

    let vertices: Vec<u32> = complex.simplices_of_dim(0).iter().map(|s| s[0]).collect();
    let tetrahedra = complex.simplices_of_dim(3);

    for triangle in complex.simplices_of_dim(2) {
        let count = tetrahedra
            .iter()
            .filter(|t| triangle.iter().all(|v| t.contains(v)))
            .count();
        if count != 2 {
            return ManifoldVerdict::TriangleCofaceCount { triangle, count };
        }
    }

    for edge in complex.simplices_of_dim(1) {
        // Link vertices: v with edge+v a triangle; link edges: pairs whose
        // union with the edge is a tetrahedron.
        let link_vertices: Vec<u32> = vertices
            .iter()
            .copied()
            .filter(|&v| !edge.contains(&v) && complex.contains(&sorted_with(&edge, &[v])))
            .collect();
        let mut link_edges: Vec<(u32, u32)> = Vec::new();
        for (i, &u) in link_vertices.iter().enumerate() {
            for &v in &link_vertices[i + 1..] {
                if complex.contains(&sorted_with(&edge, &[u, v])) {
                    link_edges.push((u, v));
                }
            }
        }
        if !graph_is_single_cycle(&link_vertices, &link_edges) {
            return ManifoldVerdict::EdgeLinkNotCircle { edge };
        }
    }

    for &vertex in &vertices {
        // With the earlier conditions verified, the vertex link is a closed
        // surface; it remains to pin its type down to the sphere.
        let link_vertices: Vec<u32> = vertices
            .iter()
            .copied()
            .filter(|&u| u != vertex && complex.contains(&sorted_with(&[vertex], &[u])))
            .collect();
        let mut link_edges: Vec<(u32, u32)> = Vec::new();
        for (i, &a) in link_vertices.iter().enumerate() {
            for &b in &link_vertices[i + 1..] {
                if complex.contains(&sorted_with(&[vertex], &[a, b])) {
                    link_edges.push((a, b));
                }
            }
        }
        let link_faces = tetrahedra.iter().filter(|t| t.contains(&vertex)).count();
        let chi =
            link_vertices.len() as i64 - link_edges.len() as i64 + link_faces as i64;
        if chi != 2 || !graph_is_connected(&link_vertices, &link_edges) {
            return ManifoldVerdict::VertexLinkNotSphere { vertex };
        }
    }

    ManifoldVerdict::ClosedManifold
}
