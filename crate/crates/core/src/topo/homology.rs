//! Boundary matrices and integral simplicial homology.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::matrix::{smith_normal_form, IntegerMatrix};
use super::SimplicialComplex;

/// The matrix of the boundary map from `k`-chains to `(k-1)`-chains, with
/// entries +-1 under the alternating-face sign convention. Rows are indexed
/// by the `(k-1)`-simplices and columns by the `k`-simplices, both in
/// lexicographic order.
///
/// Panics unless `1 <= k <= 3`.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> IntegerMatrix {
    assert!((1..=3).contains(&k), "boundary matrix defined for k in 1..=3");
    let row_simplices = complex.simplices_of_dim(k - 1);
    let col_simplices = complex.simplices_of_dim(k);
    let row_index: HashMap<Vec<u32>, usize> = row_simplices
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut m = IntegerMatrix::zero(row_simplices.len(), col_simplices.len());
    for (c, s) in col_simplices.iter().enumerate() {
        for drop in 0..s.len() {
            let mut face = s.clone();
            face.remove(drop);
            let r = row_index[&face];
            let sign = if drop % 2 == 0 { 1 } else { -1 };
            m.set(r, c, BigInt::from(sign));
        }
    }
    m
}

/// One homology group: free rank plus torsion coefficients, each greater
/// than 1 and dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology in degrees 0..=3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: [HomologyGroup; 4],
}

impl HomologyResult {
    pub fn group(&self, degree: usize) -> &HomologyGroup {
        &self.groups[degree]
    }
}

/// H_k = ker boundary_k / im boundary_{k+1}, via Smith normal forms:
/// betti_k = dim ker - rank im, torsion_k = invariant factors > 1 of the
/// (k+1)-st boundary matrix.
pub fn homology(complex: &SimplicialComplex) -> HomologyResult {
    let counts = complex.simplex_counts();
    // rank[k] = rank of boundary_k; boundary_0 and boundary_4 are zero maps.
    let mut rank = [0usize; 5];
    let mut torsion: [Vec<BigUint>; 4] = Default::default();
    for k in 1..=3 {
        let snf = smith_normal_form(&boundary_matrix(complex, k));
        rank[k] = snf.rank;
        torsion[k - 1] = snf
            .invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .map(|f| f.to_biguint().expect("invariant factors are positive"))
            .collect();
    }
    let groups = std::array::from_fn(|k| {
        let kernel = counts[k] - rank[k];
        HomologyGroup {
            betti: kernel - rank[k + 1],
            torsion: torsion[k].clone(),
        }
    });
    HomologyResult { groups }
}

#[cfg(test)]
mod tests {
    use super::super::{fixtures, euler_characteristic};
    use super::*;
    use num_traits::Zero;

    fn betti(result: &HomologyResult) -> [usize; 4] {
        std::array::from_fn(|k| result.group(k).betti)
    }

    fn torsion_free(result: &HomologyResult) -> bool {
        result.groups.iter().all(|g| g.torsion.is_empty())
    }

    #[test]
    fn single_edge_boundary_column() {
        let k = SimplicialComplex::face_closure(&[vec![0, 1]]).unwrap();
        let m = boundary_matrix(&k, 1);
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert_eq!(m.get(0, 0), &BigInt::from(-1));
        assert_eq!(m.get(1, 0), &BigInt::from(1));
    }

    #[test]
    fn boundary_composition_vanishes_on_solid_triangle() {
        let k = fixtures::solid_triangle();
        let product = boundary_matrix(&k, 1).mul(&boundary_matrix(&k, 2));
        assert!(product.is_zero());
    }

    #[test]
    fn boundary_of_sphere3_is_ten_by_five() {
        let m = boundary_matrix(&fixtures::sphere3(), 3);
        assert_eq!((m.rows(), m.cols()), (10, 5));
    }

    #[test]
    fn boundary_composition_vanishes_on_corpus() {
        for (name, k) in fixtures::all_fixtures() {
            for deg in 2..=3 {
                let product = boundary_matrix(&k, deg - 1).mul(&boundary_matrix(&k, deg));
                assert!(product.is_zero(), "d{} . d{} on {name}", deg - 1, deg);
            }
        }
    }

    #[test]
    fn sphere3_has_the_three_sphere_pattern() {
        let h = homology(&fixtures::sphere3());
        assert_eq!(betti(&h), [1, 0, 0, 1]);
        assert!(torsion_free(&h));
    }

    #[test]
    fn cones_are_acyclic() {
        let h = homology(&fixtures::solid_tetrahedron());
        assert_eq!(betti(&h), [1, 0, 0, 0]);
        assert!(torsion_free(&h));
        let h = homology(&fixtures::solid_triangle());
        assert_eq!(betti(&h), [1, 0, 0, 0]);
        assert!(torsion_free(&h));
    }

    #[test]
    fn torus_has_betti_one_two_one() {
        let h = homology(&fixtures::torus7());
        assert_eq!(betti(&h), [1, 2, 1, 0]);
        assert!(torsion_free(&h));
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let h = homology(&fixtures::projective_plane6());
        assert_eq!(betti(&h), [1, 0, 0, 0]);
        assert_eq!(h.group(1).torsion, vec![BigUint::from(2u32)]);
        assert!(h.group(0).torsion.is_empty());
        assert!(h.group(2).torsion.is_empty());
        assert!(h.group(3).torsion.is_empty());
    }

    #[test]
    fn sphere_pattern_for_each_boundary_simplex() {
        // Boundary of the (n+1)-simplex is the n-sphere.
        assert_eq!(betti(&homology(&fixtures::circle())), [1, 1, 0, 0]);
        assert_eq!(betti(&homology(&fixtures::sphere2())), [1, 0, 1, 0]);
        assert_eq!(betti(&homology(&fixtures::sphere3())), [1, 0, 0, 1]);
    }

    #[test]
    fn disconnected_complex_doubles_betti_zero() {
        let h = homology(&fixtures::two_points());
        assert_eq!(betti(&h), [2, 0, 0, 0]);
    }

    #[test]
    fn empty_complex_has_trivial_homology() {
        let empty = SimplicialComplex::face_closure(&[]).unwrap();
        let h = homology(&empty);
        assert_eq!(betti(&h), [0, 0, 0, 0]);
        assert!(torsion_free(&h));
    }

    #[test]
    fn euler_characteristic_equals_alternating_betti_sum() {
        // Torsion never contributes to the characteristic.
        for (name, k) in fixtures::all_fixtures() {
            let h = homology(&k);
            let alternating: i64 = (0..4)
                .map(|d| {
                    let b = h.group(d).betti as i64;
                    if d % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                })
                .sum();
            assert_eq!(alternating, euler_characteristic(&k), "{name}");
        }
    }

    #[test]
    fn torsion_chain_is_divisible() {
        for (_, k) in fixtures::all_fixtures() {
            let h = homology(&k);
            for g in &h.groups {
                assert!(g.torsion.iter().all(|t| t > &BigUint::from(1u32)));
                for w in g.torsion.windows(2) {
                    assert!((&w[1] % &w[0]).is_zero());
                }
            }
        }
    }
}
