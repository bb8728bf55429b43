//! Real algebraic numbers and the verdicts attached to their symmetry.
//!
//! A number is pinned down by its minimal polynomial together with an index
//! into the increasing list of real roots.  The symmetry report derives the
//! three classical verdicts from the group of the minimal polynomial:
//! constructible numbers are exactly those whose group order is a power of
//! two, radical expressions reach exactly the solvable groups, and finite
//! Fourier series with rational coefficients reach exactly the abelian ones.

use std::fmt;

use super::factor::{factor_integer_poly, FactorError};
use super::galois::{galois_group, GaloisError, SymmetryProfile};
use super::unipoly::{
    content_primitive, isolate_real_roots, refine_root_interval, Rational, UniPolynomial,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraicError {
    #[error("constants define no algebraic number")]
    ConstantPolynomial,
    #[error("minimal polynomial must be irreducible, input has {factor_count} factors")]
    NotIrreducible { factor_count: usize },
    #[error("no real root {requested}: the polynomial has {real_roots} real roots")]
    NoSuchRealRoot { real_roots: usize, requested: usize },
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// A real algebraic number: the root_index-th real root, in increasing
/// order, of a primitive integer irreducible polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    min_poly: UniPolynomial,
    root_index: usize,
    isolating: (Rational, Rational),
}

impl AlgebraicNumber {
    /// Validates irreducibility and the root index, normalizing the
    /// polynomial to its primitive integer form with positive leading
    /// coefficient.
    pub fn new(poly: &UniPolynomial, root_index: usize) -> Result<AlgebraicNumber, AlgebraicError> {
        if poly.is_zero() || poly.is_constant() {
            return Err(AlgebraicError::ConstantPolynomial);
        }
        let (_, primitive) = content_primitive(poly);
        let factored = factor_integer_poly(&primitive)?;
        if factored.factors.len() != 1 {
            return Err(AlgebraicError::NotIrreducible {
                factor_count: factored.factors.len(),
            });
        }
        let intervals = isolate_real_roots(&primitive);
        let Some(isolating) = intervals.get(root_index).cloned() else {
            return Err(AlgebraicError::NoSuchRealRoot {
                real_roots: intervals.len(),
                requested: root_index,
            });
        };
        Ok(AlgebraicNumber {
            min_poly: primitive,
            root_index,
            isolating,
        })
    }

    pub fn min_poly(&self) -> &UniPolynomial {
        &self.min_poly
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree()
    }

    /// An interval (a, b] containing this root and no other.
    pub fn isolating_interval(&self) -> &(Rational, Rational) {
        &self.isolating
    }

    /// Shrinks the isolating interval below the requested width.
    pub fn approximate(&self, width: &Rational) -> (Rational, Rational) {
        refine_root_interval(&self.min_poly, self.isolating.clone(), width)
    }
}

/// The symmetry group of the number plus the three verdicts it decides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub profile: SymmetryProfile,
    /// Reachable by ruler and compass: the group order is a power of two.
    pub constructible: bool,
    /// Expressible in nested radicals: the group is solvable.
    pub radical_expressible: bool,
    /// Expressible as a finite Fourier series with rational coefficients:
    /// the group is abelian.
    pub finite_fourier: bool,
}

impl fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "group={} order={} constructible={} radical={} fourier={}",
            self.profile.group, self.profile.order, self.constructible, self.radical_expressible,
            self.finite_fourier
        )
    }
}

/// Classifies the symmetry group of the number's minimal polynomial and
/// derives the geometric verdicts.  Degree at most 4.
pub fn symmetry_profile(a: &AlgebraicNumber) -> Result<SymmetryReport, GaloisError> {
    let profile = galois_group(a.min_poly())?;
    Ok(SymmetryReport {
        constructible: profile.two_group,
        radical_expressible: profile.solvable,
        finite_fourier: profile.abelian,
        profile,
    })
}
