//! Galois-group identification for irreducible polynomials of degree <= 4.
//!
//! Degree 3 splits on whether the discriminant is a rational square.
//! Degree 4 uses the resolvent cubic: its factorization pattern separates
//! {S4, A4} / {C4, D4} / V4, the discriminant separates S4 from A4, and the
//! Kappe-Warren quadratic test separates C4 from D4.  The classifier is
//! cross-checked elsewhere against an independent splitting-degree oracle.

use num_traits::Zero;

use super::factor::{factor_integer_poly, FactorError};
use super::unipoly::{
    content_primitive, discriminant, is_rational_square, monic_integer_form, Rational,
    UniPolynomial,
};

/// The nine transitive symmetry groups arising in degree <= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    C1,
    C2,
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl GroupName {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupName::C1 => "C1",
            GroupName::C2 => "C2",
            GroupName::C3 => "C3",
            GroupName::S3 => "S3",
            GroupName::C4 => "C4",
            GroupName::V4 => "V4",
            GroupName::D4 => "D4",
            GroupName::A4 => "A4",
            GroupName::S4 => "S4",
        }
    }

    pub fn order(self) -> u64 {
        match self {
            GroupName::C1 => 1,
            GroupName::C2 => 2,
            GroupName::C3 => 3,
            GroupName::S3 => 6,
            GroupName::C4 | GroupName::V4 => 4,
            GroupName::D4 => 8,
            GroupName::A4 => 12,
            GroupName::S4 => 24,
        }
    }

    pub fn abelian(self) -> bool {
        matches!(
            self,
            GroupName::C1 | GroupName::C2 | GroupName::C3 | GroupName::C4 | GroupName::V4
        )
    }

    /// Every group of degree <= 4 is solvable; S5 would be the first failure.
    pub fn solvable(self) -> bool {
        true
    }

    pub fn two_group(self) -> bool {
        self.order().is_power_of_two()
    }
}

impl std::fmt::Display for GroupName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The symmetry group of a number together with its structural flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryProfile {
    pub group: GroupName,
    pub order: u64,
    pub abelian: bool,
    pub solvable: bool,
    pub two_group: bool,
}

impl SymmetryProfile {
    pub fn for_group(group: GroupName) -> SymmetryProfile {
        SymmetryProfile {
            group,
            order: group.order(),
            abelian: group.abelian(),
            solvable: group.solvable(),
            two_group: group.two_group(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaloisError {
    #[error("group identification supports degree 1 through {limit}, got {got}")]
    DegreeOutOfRange { limit: usize, got: usize },
    #[error("polynomial is not irreducible: it has {factor_count} irreducible factors")]
    NotIrreducible { factor_count: usize },
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// Degree cap for group identification: all transitive groups of degree
/// <= 4 are covered; degree 5 needs resolvent machinery we do not build.
pub const GALOIS_DEGREE_LIMIT: usize = 4;

/// Identifies the Galois group of the splitting field of an irreducible
/// polynomial of degree 1 through 4.  Scaling by a nonzero rational does
/// not change the answer.
pub fn galois_group(p: &UniPolynomial) -> Result<SymmetryProfile, GaloisError> {
    if p.is_zero() || p.is_constant() {
        return Err(GaloisError::DegreeOutOfRange {
            limit: GALOIS_DEGREE_LIMIT,
            got: p.degree(),
        });
    }
    if p.degree() > GALOIS_DEGREE_LIMIT {
        return Err(GaloisError::DegreeOutOfRange {
            limit: GALOIS_DEGREE_LIMIT,
            got: p.degree(),
        });
    }
    let (_, q) = content_primitive(p);
    let factored = factor_integer_poly(&q)?;
    if factored.factors.len() != 1 {
        return Err(GaloisError::NotIrreducible {
            factor_count: factored.factors.len(),
        });
    }
    let group = match q.degree() {
        1 => GroupName::C1,
        2 => GroupName::C2,
        3 => {
            if is_rational_square(&discriminant(&q)) {
                GroupName::C3
            } else {
                GroupName::S3
            }
        }
        4 => quartic_group(&q)?,
        _ => unreachable!("degree bounded above"),
    };
    Ok(SymmetryProfile::for_group(group))
}

/// Rescales the roots by the leading coefficient: lc^(n-1) * q(x / lc) is
/// monic with integer coefficients and the same splitting field.
fn quartic_group(q: &UniPolynomial) -> Result<GroupName, GaloisError> {
    let f = monic_integer_form(q);
    let a = f.coeff(3);
    let b = f.coeff(2);
    let c = f.coeff(1);
    let d = f.coeff(0);

    // Resolvent cubic with roots x1x2+x3x4, x1x3+x2x4, x1x4+x2x3.
    let resolvent = UniPolynomial::from_coeffs(vec![
        -(&a * &a * &d - Rational::from_integer(4.into()) * &b * &d + &c * &c),
        &a * &c - Rational::from_integer(4.into()) * &d,
        -b.clone(),
        Rational::from_integer(1.into()),
    ]);
    let disc = discriminant(&f);
    debug_assert!(!disc.is_zero(), "irreducible quartics are squarefree");

    let resolvent_factors = factor_integer_poly(&resolvent)?;
    let rational_roots: Vec<Rational> = resolvent_factors
        .factors
        .iter()
        .filter(|g| g.degree() == 1)
        .map(|g| -g.coeff(0) / g.coeff(1))
        .collect();

    Ok(match rational_roots.len() {
        0 => {
            if is_rational_square(&disc) {
                GroupName::A4
            } else {
                GroupName::S4
            }
        }
        3 => GroupName::V4,
        1 => {
            // Kappe-Warren: with beta the rational resolvent root, the group
            // is C4 exactly when both x^2 - beta x + d and
            // x^2 + a x + (b - beta) split over Q(sqrt(disc)); a rational u
            // is a square there iff u or u*disc is a rational square.
            let beta = &rational_roots[0];
            let four = Rational::from_integer(4.into());
            let u1 = beta * beta - &four * &d;
            let u2 = &a * &a - &four * (&b - beta);
            let splits =
                |u: &Rational| is_rational_square(u) || is_rational_square(&(u * &disc));
            if splits(&u1) && splits(&u2) {
                GroupName::C4
            } else {
                GroupName::D4
            }
        }
        n => unreachable!("a squarefree cubic has 0, 1, or 3 rational roots, not {n}"),
    })
}

/// The pinned classification corpus: twenty irreducible polynomials
/// covering all nine group labels.  Shared by unit tests, the oracle
/// cross-check, and the acceptance gate.
pub fn classification_corpus() -> Vec<(&'static str, GroupName)> {
    vec![
        ("x - 1", GroupName::C1),
        ("2*x - 3", GroupName::C1),
        ("x^2 - 5", GroupName::C2),
        ("x^2 + 1", GroupName::C2),
        ("x^2 + x + 1", GroupName::C2),
        ("x^3 - 3*x - 1", GroupName::C3),
        ("x^3 + x^2 - 2*x - 1", GroupName::C3),
        ("x^3 - 2", GroupName::S3),
        ("x^3 + x + 1", GroupName::S3),
        ("x^3 - x - 1", GroupName::S3),
        ("x^4 + x^3 + x^2 + x + 1", GroupName::C4),
        ("x^4 - 4*x^2 + 2", GroupName::C4),
        ("x^4 + 1", GroupName::V4),
        ("x^4 - x^2 + 1", GroupName::V4),
        ("x^4 - 2", GroupName::D4),
        ("x^4 - 5", GroupName::D4),
        ("x^4 + 8*x + 12", GroupName::A4),
        ("x^4 + 4*x^3 + 6*x^2 + 12*x + 21", GroupName::A4),
        ("x^4 - x - 1", GroupName::S4),
        ("x^4 - 4*x + 2", GroupName::S4),
    ]
}
