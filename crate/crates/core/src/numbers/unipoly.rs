//! Exact univariate polynomial arithmetic over the rationals.
//!
//! Coefficients are stored low degree first with the leading coefficient
//! nonzero (the zero polynomial is the empty coefficient list).  On top of
//! the ring operations this module provides the classical exact toolkit:
//! content/primitive-part splitting, monic gcd, squarefree part, resultants,
//! discriminants, and Sturm sequences for real root counting and isolation.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dioph::{IntPolynomial, Monomial, PolySyntaxError};

/// Exact rational scalar used throughout the numbers layer.
pub type Rational = BigRational;

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A univariate polynomial with rational coefficients, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPolynomial {
    coeffs: Vec<Rational>,
}

/// Arithmetic error for polynomial division.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Error from [`UniPolynomial::parse`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyParseError {
    #[error(transparent)]
    Syntax(#[from] PolySyntaxError),
    #[error("univariate polynomials admit only the variable x, found {variable}")]
    ForeignVariable { variable: String },
}

impl UniPolynomial {
    pub fn zero() -> UniPolynomial {
        UniPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> UniPolynomial {
        UniPolynomial::constant(rat(1))
    }

    /// The monomial x.
    pub fn x() -> UniPolynomial {
        UniPolynomial::from_coeffs(vec![rat(0), rat(1)])
    }

    pub fn constant(c: Rational) -> UniPolynomial {
        UniPolynomial::from_coeffs(vec![c])
    }

    /// Builds a polynomial from coefficients, low degree first, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> UniPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPolynomial { coeffs }
    }

    /// Convenience constructor from integer coefficients, low degree first.
    pub fn from_integers(coeffs: &[i64]) -> UniPolynomial {
        UniPolynomial::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> UniPolynomial {
        UniPolynomial::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// Coefficients low degree first; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the convention that the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(|| rat(0))
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficient vector, low degree first, if all coefficients are
    /// integers.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPolynomial) -> UniPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPolynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UniPolynomial {
        UniPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &UniPolynomial) -> UniPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPolynomial) -> UniPolynomial {
        if self.is_zero() || other.is_zero() {
            return UniPolynomial::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> UniPolynomial {
        UniPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> UniPolynomial {
        let mut base = self.clone();
        let mut acc = UniPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> UniPolynomial {
        if self.is_zero() {
            return UniPolynomial::zero();
        }
        let inv = self.leading_coeff().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> UniPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        UniPolynomial::from_coeffs(coeffs)
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg remainder < deg divisor.
    pub fn divrem(&self, divisor: &UniPolynomial) -> Result<(UniPolynomial, UniPolynomial), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let d = divisor.degree();
        let lead_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat(0); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && rem.len() >= divisor.coeffs.len() {
            let k = rem.len() - divisor.coeffs.len();
            let factor = rem.last().unwrap() * &lead_inv;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &factor * b;
                rem[k + j] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = factor;
        }
        Ok((UniPolynomial::from_coeffs(quot), UniPolynomial::from_coeffs(rem)))
    }

    /// Parses the shared polynomial grammar restricted to the variable x.
    pub fn parse(text: &str) -> Result<UniPolynomial, PolyParseError> {
        let poly = IntPolynomial::parse(text)?;
        for var in poly.variables() {
            if var != "x" {
                return Err(PolyParseError::ForeignVariable { variable: var });
            }
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        for (mono, c) in poly.terms() {
            let e = mono.exponents().get("x").copied().unwrap_or(0) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, rat(0));
            }
            coeffs[e] = Rational::from_integer(c.clone());
        }
        Ok(UniPolynomial::from_coeffs(coeffs))
    }

    /// Renders in the shared polynomial grammar.  Polynomials with integer
    /// coefficients round-trip through [`UniPolynomial::parse`] bit-exactly;
    /// other coefficients are written as num/den fractions.
    pub fn render(&self) -> String {
        if let Some(ints) = self.to_integer_coeffs() {
            let terms = ints.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
                let mono = if e == 0 {
                    Monomial::one()
                } else {
                    Monomial::var("x", e as u32)
                };
                (mono, c)
            });
            return IntPolynomial::from_terms(terms).render();
        }
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            let body = if var.is_empty() {
                format!("{mag}")
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}*{var}")
            };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl std::fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Splits p as content * primitive, where the primitive part has coprime
/// integer coefficients and a positive leading coefficient.  The content
/// carries the sign and any denominators: content_primitive(2x^2+4) is
/// (2, x^2+2).  The zero polynomial splits as (0, 0).
pub fn content_primitive(p: &UniPolynomial) -> (Rational, UniPolynomial) {
    if p.is_zero() {
        return (rat(0), UniPolynomial::zero());
    }
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if ints.last().unwrap().sign() == Sign::Minus {
        g = -g;
    }
    let primitive = UniPolynomial::from_bigint_coeffs(ints.iter().map(|c| c / &g).collect());
    (Rational::new(g, den), primitive)
}

/// Monic integer polynomial whose roots are the roots of p scaled by its
/// (primitive) leading coefficient: lc^(n-1) * p(x / lc) after stripping
/// content.  Field properties of the roots are unchanged.  Requires a
/// nonconstant p.
pub fn monic_integer_form(p: &UniPolynomial) -> UniPolynomial {
    assert!(!p.is_zero() && !p.is_constant());
    let (_, prim) = content_primitive(p);
    let n = prim.degree();
    let lc = prim.leading_coeff();
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..n {
        // coefficient of x^i picks up lc^(n-1-i)
        let mut c = prim.coeff(i);
        for _ in 0..(n - 1 - i) {
            c *= &lc;
        }
        coeffs.push(c);
    }
    coeffs.push(Rational::one());
    let monic = UniPolynomial::from_coeffs(coeffs);
    debug_assert!(monic.is_integer());
    monic
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
pub fn poly_gcd(a: &UniPolynomial, b: &UniPolynomial) -> UniPolynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b).expect("divisor is nonzero");
        a = b;
        b = r;
    }
    a.monic()
}

/// The product of the distinct irreducible factors of p, normalized to a
/// primitive integer polynomial with positive leading coefficient.
pub fn squarefree_part(p: &UniPolynomial) -> UniPolynomial {
    if p.is_zero() || p.is_constant() {
        return p.clone();
    }
    let g = poly_gcd(p, &p.derivative());
    let (q, r) = p.divrem(&g).expect("gcd of a nonzero polynomial is nonzero");
    debug_assert!(r.is_zero(), "gcd must divide exactly");
    content_primitive(&q).1
}

/// The resultant of a and b, via the Euclidean remainder sequence.
pub fn resultant(a: &UniPolynomial, b: &UniPolynomial) -> Rational {
    if a.is_zero() || b.is_zero() {
        return rat(0);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = rat(1);
    loop {
        if b.is_constant() {
            return acc * num_traits::pow::Pow::pow(b.leading_coeff(), a.degree() as u64);
        }
        let (_, r) = a.divrem(&b).expect("nonconstant divisor");
        if r.is_zero() {
            return rat(0);
        }
        let da = a.degree();
        let db = b.degree();
        let dr = r.degree();
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow::Pow::pow(b.leading_coeff(), (da - dr) as u64);
        a = b;
        b = r;
    }
}

/// The discriminant, via Res(p, p') with the standard sign and
/// leading-coefficient normalization.  Panics on constants.
pub fn discriminant(p: &UniPolynomial) -> Rational {
    assert!(p.degree() >= 1, "discriminant requires degree >= 1");
    let n = p.degree();
    let res = resultant(p, &p.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 1 { rat(-1) } else { rat(1) };
    sign * res / p.leading_coeff()
}

/// True when q is the square of a rational (zero counts).
pub fn is_rational_square(q: &Rational) -> bool {
    if q.is_zero() {
        return true;
    }
    if q.is_negative() {
        return false;
    }
    let num = q.numer();
    let den = q.denom();
    &num.sqrt() * &num.sqrt() == *num && &den.sqrt() * &den.sqrt() == *den
}

fn sign_of(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

/// The canonical Sturm sequence of p: p, p', then negated remainders, with
/// the final zero dropped.
pub fn sturm_sequence(p: &UniPolynomial) -> Vec<UniPolynomial> {
    let mut seq = vec![p.clone()];
    if p.degree() >= 1 {
        seq.push(p.derivative());
    }
    loop {
        let n = seq.len();
        if n < 2 || seq[n - 1].is_zero() {
            break;
        }
        let (_, r) = seq[n - 2].divrem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last: Option<i8> = None;
    for s in signs {
        if s == 0 {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

fn variations_at(seq: &[UniPolynomial], x: &Rational) -> usize {
    variations(seq.iter().map(|p| sign_of(&p.eval(x))))
}

fn variations_at_infinity(seq: &[UniPolynomial], positive: bool) -> usize {
    variations(seq.iter().map(|p| {
        if p.is_zero() {
            return 0;
        }
        let lead = sign_of(&p.leading_coeff());
        if positive || p.degree() % 2 == 0 {
            lead
        } else {
            -lead
        }
    }))
}

/// Number of distinct real roots of p (any nonzero polynomial).
pub fn real_root_count(p: &UniPolynomial) -> usize {
    assert!(!p.is_zero(), "the zero polynomial has no root count");
    let sf = squarefree_part(p);
    if sf.is_constant() {
        return 0;
    }
    let seq = sturm_sequence(&sf);
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Number of distinct real roots of squarefree p in the half-open
/// interval (a, b].
fn roots_in(seq: &[UniPolynomial], a: &Rational, b: &Rational) -> usize {
    variations_at(seq, a) - variations_at(seq, b)
}

/// A strict bound on the absolute value of every root.
pub fn root_bound(p: &UniPolynomial) -> Rational {
    assert!(p.degree() >= 1, "root bound requires degree >= 1");
    let lead = p.leading_coeff().abs();
    let mut max = rat(0);
    for c in &p.coeffs()[..p.degree()] {
        let t = c.abs() / &lead;
        if t > max {
            max = t;
        }
    }
    max + rat(1)
}

/// Disjoint isolating intervals (a, b] for the distinct real roots of p,
/// in increasing order; each interval contains exactly one root.
pub fn isolate_real_roots(p: &UniPolynomial) -> Vec<(Rational, Rational)> {
    assert!(!p.is_zero(), "the zero polynomial has no roots to isolate");
    let sf = squarefree_part(p);
    if sf.is_constant() {
        return Vec::new();
    }
    let seq = sturm_sequence(&sf);
    let bound = root_bound(&sf);
    let mut stack = vec![(-bound.clone(), bound)];
    let mut found = Vec::new();
    while let Some((a, b)) = stack.pop() {
        match roots_in(&seq, &a, &b) {
            0 => {}
            1 => found.push((a, b)),
            _ => {
                let mid = (&a + &b) / rat(2);
                // Push the left half last so intervals come out in order
                // once found is sorted below; splitting preserves counts.
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    found
}

/// Shrinks an isolating interval (a, b] of squarefree p below the given
/// width; the root stays inside.
pub fn refine_root_interval(
    p: &UniPolynomial,
    mut interval: (Rational, Rational),
    width: &Rational,
) -> (Rational, Rational) {
    let seq = sturm_sequence(p);
    debug_assert_eq!(roots_in(&seq, &interval.0, &interval.1), 1);
    while &interval.1 - &interval.0 > *width {
        let mid = (&interval.0 + &interval.1) / rat(2);
        if roots_in(&seq, &interval.0, &mid) == 1 {
            interval = (interval.0, mid);
        } else {
            interval = (mid, interval.1);
        }
    }
    interval
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> UniPolynomial {
        UniPolynomial::parse(text).expect("test polynomial parses")
    }

    #[test]
    fn parse_and_render_roundtrip() {
        for text in [
            "0",
            "1",
            "-1",
            "x",
            "x^2 - 5",
            "2*x^2 + 4",
            "x^4 - x - 1",
            "-3*x^3 + x^2 - 7",
        ] {
            let poly = p(text);
            assert_eq!(p(&poly.render()), poly, "roundtrip through {text}");
        }
    }

    #[test]
    fn parse_rejects_foreign_variables() {
        let err = UniPolynomial::parse("x*y + 1").unwrap_err();
        assert_eq!(
            err,
            PolyParseError::ForeignVariable { variable: "y".to_string() }
        );
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("x^2 - 1");
        let b = p("x - 1");
        assert_eq!(a.sub(&b.mul(&p("x + 1"))), UniPolynomial::zero());
        assert_eq!(a.eval(&rat(3)), rat(8));
        assert_eq!(p("x^3 - 2").derivative(), p("3*x^2"));
        assert_eq!(b.pow(2), p("x^2 - 2*x + 1"));
    }

    #[test]
    fn divrem_is_euclidean() {
        let a = p("x^5 - 3*x^2 + 4");
        let b = p("2*x^2 - 1");
        let (q, r) = a.divrem(&b).unwrap();
        assert!(r.degree() < b.degree());
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(a.divrem(&UniPolynomial::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn content_primitive_examples() {
        let (c, q) = content_primitive(&p("2*x^2 + 4"));
        assert_eq!(c, rat(2));
        assert_eq!(q, p("x^2 + 2"));

        let (c, q) = content_primitive(&p("-2*x^2 - 4"));
        assert_eq!(c, rat(-2));
        assert_eq!(q, p("x^2 + 2"));

        let half = Rational::new(BigInt::from(3), BigInt::from(2));
        let (c, q) = content_primitive(&p("x").scale(&half));
        assert_eq!(c, half);
        assert_eq!(q, p("x"));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p("x^2 - 1"), &p("x - 1")), p("x - 1"));
        assert_eq!(poly_gcd(&p("x^2 + 1"), &p("x - 1")), p("1"));
        assert_eq!(poly_gcd(&UniPolynomial::zero(), &UniPolynomial::zero()), UniPolynomial::zero());
        // gcd is monic even when the inputs are not.
        assert_eq!(poly_gcd(&p("2*x^2 - 2"), &p("4*x - 4")), p("x - 1"));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let cube = p("x - 1").pow(3).mul(&p("x + 2"));
        assert_eq!(squarefree_part(&cube), p("x^2 + x - 2"));
        assert_eq!(squarefree_part(&p("x^2 - 5")), p("x^2 - 5"));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p("x^2 - 5")), rat(20));
        assert_eq!(discriminant(&p("x^3 - 3*x - 1")), rat(81));
        assert_eq!(discriminant(&p("x^3 - 2")), rat(-108));
        // General quadratic: b^2 - 4ac.
        assert_eq!(discriminant(&p("4*x^2 + 2*x - 1")), rat(20));
        assert_eq!(discriminant(&p("x^4 + x^3 + x^2 + x + 1")), rat(125));
    }

    #[test]
    fn resultant_detects_common_roots() {
        assert_eq!(resultant(&p("x^2 - 1"), &p("x - 1")), rat(0));
        // Res(x^2-2, x^2-3) = (2-3)^2 ... product over root pairs = 1.
        assert_eq!(resultant(&p("x^2 - 2"), &p("x^2 - 3")), rat(1));
    }

    #[test]
    fn rational_square_test() {
        assert!(is_rational_square(&rat(0)));
        assert!(is_rational_square(&rat(81)));
        assert!(is_rational_square(&Rational::new(BigInt::from(4), BigInt::from(9))));
        assert!(!is_rational_square(&rat(20)));
        assert!(!is_rational_square(&rat(-4)));
    }

    #[test]
    fn real_root_counts() {
        assert_eq!(real_root_count(&p("x^2 - 5")), 2);
        assert_eq!(real_root_count(&p("x^2 + 1")), 0);
        assert_eq!(real_root_count(&p("x^3 - 2")), 1);
        assert_eq!(real_root_count(&p("x^3 - 3*x - 1")), 3);
        assert_eq!(real_root_count(&p("x^4 + 1")), 0);
        // Multiplicity does not inflate the count.
        assert_eq!(real_root_count(&p("x - 1").pow(3)), 1);
    }

    #[test]
    fn isolation_separates_roots() {
        let poly = p("x^3 - 3*x - 1");
        let intervals = isolate_real_roots(&poly);
        assert_eq!(intervals.len(), 3);
        for window in intervals.windows(2) {
            assert!(window[0].1 <= window[1].0, "intervals stay disjoint and ordered");
        }
        // 2cos(2pi/9) = 1.532..., the largest root, lands in the last interval.
        let last = &intervals[2];
        let approx = Rational::new(BigInt::from(1532), BigInt::from(1000));
        assert!(last.0 < approx && approx <= last.1);
    }

    #[test]
    fn refinement_narrows_to_the_root() {
        let poly = p("x^2 - 2");
        let intervals = isolate_real_roots(&poly);
        let eps = Rational::new(BigInt::from(1), BigInt::from(1_000_000));
        let (lo, hi) = refine_root_interval(&poly, intervals[1].clone(), &eps);
        let sqrt2 = Rational::new(BigInt::from(14142135), BigInt::from(10000000));
        assert!(&hi - &lo <= eps);
        assert!(lo < sqrt2 && sqrt2 <= hi + eps);
    }
}
