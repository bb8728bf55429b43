//! Bounded enumeration of complexes generated by tetrahedra on a labeled
//! vertex set, with closed-manifold and homology-sphere filters.
//!
//! The code of an enumerated complex is its tetrahedron bitmask: bit `i`
//! set means the `i`-th 4-subset of the vertex range, in lexicographic
//! order, is a maximal simplex. Masks are emitted in increasing order.

use super::homology::homology;
use super::manifold::is_closed_3_manifold;
use super::SimplicialComplex;
use crate::reductions::GuardViolation;
use crate::sets::{Enumerator, Pull, PullError};

/// Which enumerated complexes to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexFilter {
    All,
    ClosedManifold,
    /// Closed manifolds whose homology matches the 3-sphere pattern.
    HomologySphereCandidates,
}

/// All 4-subsets of `0..vertex_count` in lexicographic order.
pub fn tetrahedra_on(vertex_count: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..vertex_count {
        for b in a + 1..vertex_count {
            for c in b + 1..vertex_count {
                for d in c + 1..vertex_count {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Decode a tetrahedron bitmask into the complex it generates.
///
/// Panics if the mask has bits beyond the tetrahedron list.
pub fn complex_from_mask(mask: u64, vertex_count: u32) -> SimplicialComplex {
    let tetrahedra = tetrahedra_on(vertex_count);
    assert!(
        tetrahedra.len() >= 64 || mask < 1 << tetrahedra.len(),
        "mask out of range for {vertex_count} vertices"
    );
    let chosen: Vec<Vec<u32>> = tetrahedra
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, t)| t.to_vec())
        .collect();
    SimplicialComplex::face_closure(&chosen).expect("4-subsets are valid simplices")
}

fn sphere_homology(complex: &SimplicialComplex) -> bool {
    let h = homology(complex);
    let betti: Vec<usize> = h.groups.iter().map(|g| g.betti).collect();
    betti == [1, 0, 0, 1] && h.groups.iter().all(|g| g.torsion.is_empty())
}

fn passes(complex: &SimplicialComplex, filter: ComplexFilter) -> bool {
    match filter {
        ComplexFilter::All => true,
        ComplexFilter::ClosedManifold => is_closed_3_manifold(complex).is_closed(),
        ComplexFilter::HomologySphereCandidates => {
            is_closed_3_manifold(complex).is_closed() && sphere_homology(complex)
        }
    }
}

/// Cursor over tetrahedron bitmasks on a fixed vertex set; each pull costs
/// one work unit per mask examined.
#[derive(Debug)]
pub struct ComplexEnumerator {
    vertex_count: u32,
    filter: ComplexFilter,
    next_mask: u64,
    limit: u64,
    work: u64,
}

impl ComplexEnumerator {
    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }
}

impl Enumerator for ComplexEnumerator {
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError> {
        for _ in 0..budget {
            if self.next_mask >= self.limit {
                return Ok(Pull::Exhausted);
            }
            let mask = self.next_mask;
            self.next_mask += 1;
            self.work += 1;
            let complex = complex_from_mask(mask, self.vertex_count);
            if passes(&complex, self.filter) {
                return Ok(Pull::Item(mask));
            }
        }
        Ok(Pull::BudgetExceeded)
    }

    fn work_done(&self) -> u64 {
        self.work
    }
}

/// Enumerate the face closures of tetrahedron sets on at most `max_vertices`
/// labeled vertices, in bitmask order. Guard: `max_vertices <= 6`.
pub fn enumerate_complexes(
    max_vertices: u32,
    filter: ComplexFilter,
) -> Result<ComplexEnumerator, GuardViolation> {
    if max_vertices > 6 {
        return Err(GuardViolation {
            operation: "enumerate_complexes",
            limit: 6,
            got: max_vertices,
        });
    }
    let tetrahedra = tetrahedra_on(max_vertices);
    Ok(ComplexEnumerator {
        vertex_count: max_vertices,
        filter,
        next_mask: 0,
        limit: 1u64 << tetrahedra.len(),
        work: 0,
    })
}

/// Group masks by complex isomorphism under vertex relabeling. Classes are
/// keyed by their least member and returned in increasing order of that key.
/// Guard: `vertex_count <= 5`.
pub fn complex_isomorphism_classes(
    masks: &[u64],
    vertex_count: u32,
) -> Result<Vec<Vec<u64>>, GuardViolation> {
    if vertex_count > 5 {
        return Err(GuardViolation {
            operation: "complex_isomorphism_classes",
            limit: 5,
            got: vertex_count,
        });
    }
    let tetrahedra = tetrahedra_on(vertex_count);
    let index = |t: &[u32; 4]| -> usize {
        tetrahedra
            .iter()
            .position(|u| u == t)
            .expect("permuted tetrahedron stays in range")
    };
    let canonical = |mask: u64| -> u64 {
        let mut best = u64::MAX;
        permute(vertex_count, &mut |perm| {
            let mut image = 0u64;
            for (i, t) in tetrahedra.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let mut mapped = [perm[t[0] as usize], perm[t[1] as usize], perm[t[2] as usize], perm[t[3] as usize]];
                    mapped.sort_unstable();
                    image |= 1 << index(&mapped);
                }
            }
            best = best.min(image);
        });
        best
    };
    let mut classes: std::collections::BTreeMap<u64, Vec<u64>> = std::collections::BTreeMap::new();
    for &mask in masks {
        classes.entry(canonical(mask)).or_default().push(mask);
    }
    Ok(classes
        .into_values()
        .map(|mut members| {
            members.sort_unstable();
            members.dedup();
            members
        })
        .collect())
}

fn permute(n: u32, visit: &mut impl FnMut(&[u32])) {
    let mut perm: Vec<u32> = (0..n).collect();
    heap_permutations(&mut perm, n as usize, visit);
}

fn heap_permutations(perm: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k {
        heap_permutations(perm, k - 1, visit);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}
