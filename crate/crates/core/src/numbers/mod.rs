//! The symmetry group of a number: exact polynomial arithmetic,
//! factorization over the rationals, Galois-group identification through
//! degree 4, constructibility and solvability verdicts, and cyclotomic
//! arithmetic with quadratic Gauss sums.

pub mod algebraic;
pub mod cyclotomic;
pub mod factor;
pub mod galois;
pub mod splitting;
pub mod unipoly;

pub use algebraic::{symmetry_profile, AlgebraicError, AlgebraicNumber, SymmetryReport};
pub use cyclotomic::{
    cyclotomic_polynomial, numeric_eval, quadratic_gauss_sum, sqrt_as_cyclotomic, ComplexApprox,
    CyclotomicElement, CyclotomicError,
};
pub use factor::{factor_integer_poly, is_irreducible, FactorError, Factorization};
pub use galois::{galois_group, GaloisError, GroupName, SymmetryProfile};
pub use splitting::{splitting_field_degree, SplitError};
pub use unipoly::{
    content_primitive, discriminant, is_rational_square, isolate_real_roots, monic_integer_form,
    poly_gcd, real_root_count, refine_root_interval, resultant, squarefree_part, PolyError,
    PolyParseError, Rational, UniPolynomial,
};
