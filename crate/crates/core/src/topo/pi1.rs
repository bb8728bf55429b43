//! Edge-path fundamental-group presentations and their abelianizations.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::matrix::{smith_normal_form, IntegerMatrix};
use super::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Pi1Error {
    #[error("complex is not connected")]
    NotConnected,
}

/// Finite presentation of the edge-path group: one generator per non-tree
/// edge, one relator per triangle. Relators are freely reduced sequences of
/// signed 1-based generator indices; empty relators are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    /// The non-tree edge each generator traverses, in lexicographic order.
    pub generators: Vec<(u32, u32)>,
    pub relators: Vec<Vec<i64>>,
}

fn free_reduce(word: Vec<i64>) -> Vec<i64> {
    let mut stack: Vec<i64> = Vec::with_capacity(word.len());
    for x in word {
        if stack.last() == Some(&-x) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

/// Edge-path presentation of the fundamental group of a connected complex.
///
/// The spanning tree is grown breadth-first from the least vertex; each
/// triangle (a, b, c) contributes the loop a -> b -> c -> a with tree edges
/// dropped.
pub fn fundamental_group_presentation(
    complex: &SimplicialComplex,
) -> Result<Presentation, Pi1Error> {
    let vertices: Vec<u32> = complex.simplices_of_dim(0).iter().map(|s| s[0]).collect();
    let Some(&root) = vertices.first() else {
        return Err(Pi1Error::NotConnected);
    };
    let adjacency = complex.adjacency();
    let mut tree: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(root);
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        for &u in adjacency.get(&v).into_iter().flatten() {
            if seen.insert(u) {
                tree.insert((v.min(u), v.max(u)));
                queue.push_back(u);
            }
        }
    }
    if seen.len() != vertices.len() {
        return Err(Pi1Error::NotConnected);
    }

    let generators: Vec<(u32, u32)> = complex
        .simplices_of_dim(1)
        .iter()
        .map(|e| (e[0], e[1]))
        .filter(|e| !tree.contains(e))
        .collect();
    let index: HashMap<(u32, u32), usize> = generators
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();

    let mut relators = Vec::new();
    for t in complex.simplices_of_dim(2) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut word = Vec::new();
        for (edge, sign) in [((a, b), 1i64), ((b, c), 1), ((a, c), -1)] {
            if let Some(&g) = index.get(&edge) {
                word.push(sign * (g as i64 + 1));
            }
        }
        let word = free_reduce(word);
        if !word.is_empty() {
            relators.push(word);
        }
    }

    Ok(Presentation {
        generator_count: generators.len(),
        generators,
        relators,
    })
}

/// Invariants of the abelianized group: free rank and torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

/// Abelianization via the Smith normal form of the relator-exponent matrix
/// (rows indexed by generators, columns by relators).
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let mut m = IntegerMatrix::zero(p.generator_count, p.relators.len());
    for (c, relator) in p.relators.iter().enumerate() {
        for &x in relator {
            let r = (x.unsigned_abs() - 1) as usize;
            let v = m.get(r, c) + BigInt::from(x.signum());
            m.set(r, c, v);
        }
    }
    let snf = smith_normal_form(&m);
    AbelianGroup {
        free_rank: p.generator_count - snf.rank,
        torsion: snf
            .invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .map(|f| f.to_biguint().expect("invariant factors are positive"))
            .collect(),
    }
}
