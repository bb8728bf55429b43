//! Simplicial complexes of dimension at most three, and the pipeline built
//! on them: Euler characteristic, boundary matrices, integer Smith normal
//! form, homology, edge-path fundamental-group presentations, the
//! combinatorial closed-3-manifold check, and bounded enumeration of
//! complexes generated by tetrahedra.

mod enumerate;
mod homology;
mod manifold;
mod matrix;
mod pi1;

pub use enumerate::{
    complex_from_mask, complex_isomorphism_classes, enumerate_complexes, tetrahedra_on,
    ComplexEnumerator, ComplexFilter,
};
pub use homology::{boundary_matrix, homology, HomologyGroup, HomologyResult};
pub use manifold::{is_closed_3_manifold, ManifoldVerdict};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithNormalForm};
pub use pi1::{
    abelianization, fundamental_group_presentation, AbelianGroup, Pi1Error, Presentation,
};

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Malformed simplex input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("malformed simplex {tuple:?}: {message}")]
    MalformedTuple {
        tuple: Vec<u32>,
        message: &'static str,
    },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// A finite simplicial complex of dimension <= 3: a set of strictly
/// increasing vertex tuples of length 1..=4, closed under taking faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: u32,
    simplices: BTreeSet<Vec<u32>>,
}

fn validate_simplex(tuple: &[u32]) -> Result<(), ComplexError> {
    let err = |message| ComplexError::MalformedTuple {
        tuple: tuple.to_vec(),
        message,
    };
    if tuple.is_empty() {
        return Err(err("a simplex needs at least one vertex"));
    }
    if tuple.len() > 4 {
        return Err(err("a simplex has at most four vertices (dimension <= 3)"));
    }
    if tuple.windows(2).any(|w| w[0] >= w[1]) {
        return Err(err("vertices must be strictly increasing"));
    }
    Ok(())
}

impl SimplicialComplex {
    /// The smallest complex containing the given simplices.
    pub fn face_closure(maximal: &[Vec<u32>]) -> Result<Self, ComplexError> {
        let mut simplices = BTreeSet::new();
        for tuple in maximal {
            validate_simplex(tuple)?;
            let n = tuple.len();
            for mask in 1u32..1 << n {
                let face: Vec<u32> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| tuple[i])
                    .collect();
                simplices.insert(face);
            }
        }
        let vertex_count = simplices
            .iter()
            .flat_map(|s| s.iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        Ok(Self {
            vertex_count,
            simplices,
        })
    }

    /// One more than the largest vertex index present; 0 for the empty complex.
    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Largest simplex dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.simplices.iter()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        self.simplices.contains(simplex)
    }

    /// All `k`-simplices in lexicographic order.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<Vec<u32>> {
        self.simplices
            .iter()
            .filter(|s| s.len() == k + 1)
            .cloned()
            .collect()
    }

    /// Simplex counts by dimension 0..=3.
    pub fn simplex_counts(&self) -> [usize; 4] {
        let mut counts = [0usize; 4];
        for s in &self.simplices {
            counts[s.len() - 1] += 1;
        }
        counts
    }

    /// Simplices not properly contained in any other simplex, in
    /// lexicographic order.
    pub fn maximal_simplices(&self) -> Vec<Vec<u32>> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.len() > s.len() && is_subset(s, t))
            })
            .cloned()
            .collect()
    }

    pub(crate) fn adjacency(&self) -> BTreeMap<u32, Vec<u32>> {
        let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for s in &self.simplices {
            if let [a, b] = s[..] {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
        adj
    }

    /// True iff the 1-skeleton has exactly one connected component.
    /// The empty complex is not connected.
    pub fn is_connected(&self) -> bool {
        let verts = self.simplices_of_dim(0);
        let Some(start) = verts.first() else {
            return false;
        };
        let adj = self.adjacency();
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start[0]);
        queue.push_back(start[0]);
        while let Some(v) = queue.pop_front() {
            for &u in adj.get(&v).into_iter().flatten() {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == verts.len()
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    // Both sorted strictly increasing.
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Alternating sum of simplex counts by dimension.
pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    let counts = k.simplex_counts();
    counts
        .iter()
        .enumerate()
        .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// Parse a complex from lines of simplices given as space-separated vertex
/// indices. `#` starts a comment; blank lines are skipped. The result is the
/// face closure of the listed simplices.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let mut generators: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let mut tuple = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let v: u32 = tok.parse().map_err(|_| ComplexError::Format {
                line,
                message: format!("bad vertex index '{tok}'"),
            })?;
            tuple.push(v);
        }
        validate_simplex(&tuple).map_err(|e| ComplexError::Format {
            line,
            message: e.to_string(),
        })?;
        generators.push(tuple);
    }
    SimplicialComplex::face_closure(&generators)
}

/// Render a complex as its maximal simplices, one per line.
pub fn render_complex(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for s in k.maximal_simplices() {
        let words: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_complex(self))
    }
}

/// Small named complexes: the worked examples of the module, shared by
/// the test suites and handy as demo inputs.
pub mod fixtures {
    use super::SimplicialComplex;

    fn closure(maximal: &[&[u32]]) -> SimplicialComplex {
        let owned: Vec<Vec<u32>> = maximal.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::face_closure(&owned).unwrap()
    }

    pub fn single_vertex() -> SimplicialComplex {
        closure(&[&[0]])
    }

    pub fn two_points() -> SimplicialComplex {
        closure(&[&[0], &[1]])
    }

    pub fn path() -> SimplicialComplex {
        closure(&[&[0, 1], &[1, 2]])
    }

    /// Triangle boundary: the smallest circle.
    pub fn circle() -> SimplicialComplex {
        closure(&[&[0, 1], &[1, 2], &[0, 2]])
    }

    pub fn solid_triangle() -> SimplicialComplex {
        closure(&[&[0, 1, 2]])
    }

    /// Boundary of the 3-simplex: a 2-sphere.
    pub fn sphere2() -> SimplicialComplex {
        closure(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    pub fn solid_tetrahedron() -> SimplicialComplex {
        closure(&[&[0, 1, 2, 3]])
    }

    /// Boundary of the 4-simplex: a 3-sphere.
    pub fn sphere3() -> SimplicialComplex {
        closure(&[
            &[0, 1, 2, 3],
            &[0, 1, 2, 4],
            &[0, 1, 3, 4],
            &[0, 2, 3, 4],
            &[1, 2, 3, 4],
        ])
    }

    /// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    pub fn torus7() -> SimplicialComplex {
        let mut tris: Vec<Vec<u32>> = Vec::new();
        for i in 0u32..7 {
            for offsets in [[0u32, 1, 3], [0, 2, 3]] {
                let mut t: Vec<u32> = offsets.iter().map(|o| (i + o) % 7).collect();
                t.sort_unstable();
                tris.push(t);
            }
        }
        SimplicialComplex::face_closure(&tris).unwrap()
    }

    /// Six-vertex projective plane; its first homology is Z/2.
    pub fn projective_plane6() -> SimplicialComplex {
        closure(&[
            &[0, 1, 2],
            &[0, 1, 3],
            &[0, 2, 4],
            &[0, 3, 5],
            &[0, 4, 5],
            &[1, 2, 5],
            &[1, 3, 4],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
        ])
    }

    /// Connected fixtures, each with a name for test diagnostics.
    pub fn connected_fixtures() -> Vec<(&'static str, SimplicialComplex)> {
        vec![
            ("single_vertex", single_vertex()),
            ("path", path()),
            ("circle", circle()),
            ("solid_triangle", solid_triangle()),
            ("sphere2", sphere2()),
            ("solid_tetrahedron", solid_tetrahedron()),
            ("sphere3", sphere3()),
            ("torus7", torus7()),
            ("projective_plane6", projective_plane6()),
        ]
    }

    pub fn all_fixtures() -> Vec<(&'static str, SimplicialComplex)> {
        let mut fixtures = connected_fixtures();
        fixtures.push(("two_points", two_points()));
        fixtures
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_solid_tetrahedron_has_fifteen_faces() {
        let k = fixtures::solid_tetrahedron();
        assert_eq!(k.simplices().count(), 15);
        assert_eq!(k.simplex_counts(), [4, 6, 4, 1]);
        assert_eq!(k.vertex_count(), 4);
        assert_eq!(k.dim(), Some(3));
    }

    #[test]
    fn closure_of_sphere3_has_thirty_faces() {
        let k = fixtures::sphere3();
        assert_eq!(k.simplex_counts(), [5, 10, 10, 5]);
        assert_eq!(k.simplices().count(), 30);
    }

    #[test]
    fn closure_of_single_vertex() {
        let k = fixtures::single_vertex();
        assert_eq!(k.simplices().count(), 1);
        assert_eq!(k.dim(), Some(0));
    }

    #[test]
    fn malformed_tuples_are_rejected() {
        let too_long = vec![vec![0u32, 1, 2, 3, 4]];
        assert!(matches!(
            SimplicialComplex::face_closure(&too_long),
            Err(ComplexError::MalformedTuple { .. })
        ));
        let unsorted = vec![vec![2u32, 1]];
        assert!(matches!(
            SimplicialComplex::face_closure(&unsorted),
            Err(ComplexError::MalformedTuple { .. })
        ));
        let repeated = vec![vec![1u32, 1, 2]];
        assert!(matches!(
            SimplicialComplex::face_closure(&repeated),
            Err(ComplexError::MalformedTuple { .. })
        ));
        let empty = vec![vec![]];
        assert!(matches!(
            SimplicialComplex::face_closure(&empty),
            Err(ComplexError::MalformedTuple { .. })
        ));
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic(&fixtures::single_vertex()), 1);
        assert_eq!(euler_characteristic(&fixtures::sphere3()), 0);
        assert_eq!(euler_characteristic(&fixtures::sphere2()), 2);
        assert_eq!(euler_characteristic(&fixtures::torus7()), 0);
        assert_eq!(euler_characteristic(&fixtures::projective_plane6()), 1);
        let empty = SimplicialComplex::face_closure(&[]).unwrap();
        assert_eq!(euler_characteristic(&empty), 0);
    }

    #[test]
    fn torus_fixture_is_a_twenty_one_edge_surface() {
        let k = fixtures::torus7();
        assert_eq!(k.simplex_counts(), [7, 21, 14, 0]);
        // Every pair of vertices is an edge and every edge lies in exactly
        // two triangles.
        let triangles = k.simplices_of_dim(2);
        for e in k.simplices_of_dim(1) {
            let count = triangles.iter().filter(|t| is_subset(&e, t)).count();
            assert_eq!(count, 2, "edge {e:?}");
        }
    }

    #[test]
    fn projective_plane_fixture_is_a_surface() {
        let k = fixtures::projective_plane6();
        assert_eq!(k.simplex_counts(), [6, 15, 10, 0]);
        let triangles = k.simplices_of_dim(2);
        for e in k.simplices_of_dim(1) {
            let count = triangles.iter().filter(|t| is_subset(&e, t)).count();
            assert_eq!(count, 2, "edge {e:?}");
        }
    }

    #[test]
    fn parse_and_render_roundtrip() {
        for (name, k) in fixtures::all_fixtures() {
            let text = render_complex(&k);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back, k, "{name}");
        }
    }

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let text = "# a triangle plus a stray vertex\n0 1 2\n\n4   # isolated\n";
        let k = parse_complex(text).unwrap();
        assert_eq!(k.simplex_counts(), [4, 3, 1, 0]);
        assert_eq!(k.vertex_count(), 5);
    }

    #[test]
    fn parse_rejects_bad_lines() {
        let bad_token = parse_complex("0 x 2\n");
        assert!(matches!(bad_token, Err(ComplexError::Format { line: 1, .. })));
        let unsorted = parse_complex("0 1\n2 1\n");
        assert!(matches!(unsorted, Err(ComplexError::Format { line: 2, .. })));
        let too_long = parse_complex("0 1 2 3 4\n");
        assert!(matches!(too_long, Err(ComplexError::Format { line: 1, .. })));
    }

    #[test]
    fn torus_fixture_file_matches_construction() {
        let text = include_str!("../../fixtures/torus7.cmplx");
        assert_eq!(parse_complex(text).unwrap(), fixtures::torus7());
    }

    #[test]
    fn projective_plane_fixture_file_matches_construction() {
        let text = include_str!("../../fixtures/rp2.cmplx");
        assert_eq!(parse_complex(text).unwrap(), fixtures::projective_plane6());
    }

    #[test]
    fn maximal_simplices_of_a_surface_are_its_triangles() {
        let k = fixtures::sphere2();
        let maximal = k.maximal_simplices();
        assert_eq!(maximal.len(), 4);
        assert!(maximal.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn connectivity() {
        assert!(fixtures::circle().is_connected());
        assert!(fixtures::single_vertex().is_connected());
        assert!(!fixtures::two_points().is_connected());
        let empty = SimplicialComplex::face_closure(&[]).unwrap();
        assert!(!empty.is_connected());
    }
}
