//! Factorization over the rationals for polynomials of degree at most 8.
//!
//! The method is deliberately elementary: extract rational roots by trying
//! every candidate u/v with u dividing the constant term and v dividing the
//! leading coefficient, then look for higher-degree factors by exhaustive
//! search over integer coefficient vectors bounded by the Mignotte bound.
//! Slower than Hensel lifting but auditable line by line at this scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::unipoly::{content_primitive, Rational, UniPolynomial};

/// Cap on the input degree; the exhaustive search is desk-scale only.
pub const FACTOR_DEGREE_LIMIT: usize = 8;

/// A complete factorization over the rationals: content times the product
/// of the factors reconstructs the input exactly.  Factors are primitive
/// integer polynomials with positive leading coefficients, listed with
/// multiplicity in a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<UniPolynomial>,
}

impl Factorization {
    /// Content times the product of all factors.
    pub fn product(&self) -> UniPolynomial {
        let mut acc = UniPolynomial::constant(self.content.clone());
        for f in &self.factors {
            acc = acc.mul(f);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("factorization supports degree at most {limit}, got {got}")]
    DegreeTooLarge { limit: usize, got: usize },
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
}

/// Factors a polynomial with rational coefficients into irreducible integer
/// factors over the rationals.  Degree is capped at 8.
pub fn factor_integer_poly(p: &UniPolynomial) -> Result<Factorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if p.degree() > FACTOR_DEGREE_LIMIT {
        return Err(FactorError::DegreeTooLarge {
            limit: FACTOR_DEGREE_LIMIT,
            got: p.degree(),
        });
    }
    let (content, primitive) = content_primitive(p);
    let mut factors = Vec::new();
    if !primitive.is_constant() {
        factor_primitive(primitive, &mut factors);
    }
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    for f in &factors {
        debug_assert!(verify_irreducible(f), "emitted factor must be irreducible");
    }
    Ok(Factorization { content, factors })
}

/// True when p is irreducible over the rationals (constants are not).
pub fn is_irreducible(p: &UniPolynomial) -> Result<bool, FactorError> {
    let f = factor_integer_poly(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].degree() == p.degree())
}

/// Splits a primitive integer polynomial (positive leading coefficient,
/// degree >= 1) into irreducible primitive factors.
fn factor_primitive(mut q: UniPolynomial, out: &mut Vec<UniPolynomial>) {
    // Powers of x first: they are the roots at zero.
    while q.coeff(0).is_zero() {
        out.push(UniPolynomial::x());
        let (quot, rem) = q.divrem(&UniPolynomial::x()).expect("x is nonzero");
        debug_assert!(rem.is_zero());
        q = quot;
    }
    // Rational roots u/v with u | constant and v | leading.
    'roots: loop {
        if q.is_constant() {
            return;
        }
        let const_divs = positive_divisors(&q.coeff(0).to_integer());
        let lead_divs = positive_divisors(&q.leading_coeff().to_integer());
        for v in &lead_divs {
            for u in &const_divs {
                if u.gcd(v) != BigInt::one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let root = Rational::new(u * BigInt::from(sign), v.clone());
                    if q.eval(&root).is_zero() {
                        // v*x - u*sign is the primitive linear factor.
                        let linear = UniPolynomial::from_bigint_coeffs(vec![
                            -(u * BigInt::from(sign)),
                            v.clone(),
                        ]);
                        out.push(linear.clone());
                        let (quot, rem) = q.divrem(&linear).expect("linear factor is nonzero");
                        debug_assert!(rem.is_zero());
                        q = content_primitive(&quot).1;
                        continue 'roots;
                    }
                }
            }
        }
        break;
    }
    // No rational roots left.  Degrees 2 and 3 are now irreducible.
    if q.degree() <= 3 {
        out.push(q);
        return;
    }
    for d in 2..=q.degree() / 2 {
        if let Some(g) = find_factor_of_degree(&q, d) {
            let (quot, rem) = q.divrem(&g).expect("found factor is nonzero");
            debug_assert!(rem.is_zero());
            // Found at the smallest degree, so g has no proper divisor.
            out.push(g);
            factor_primitive(content_primitive(&quot).1, out);
            return;
        }
    }
    out.push(q);
}

/// Searches for an integer factor of q with the given degree, scanning
/// leading/constant coefficients over divisor pairs and interior
/// coefficients over the Mignotte box.  Returns the first hit in a fixed
/// deterministic order.
fn find_factor_of_degree(q: &UniPolynomial, d: usize) -> Option<UniPolynomial> {
    let bound = mignotte_bound(q, d);
    let q_lead = q.leading_coeff().to_integer();
    let q_const = q.coeff(0).to_integer();
    let q_at_1 = q.eval(&Rational::one()).to_integer();
    let q_at_m1 = q.eval(&-Rational::one()).to_integer();
    debug_assert!(!q_const.is_zero() && !q_at_1.is_zero() && !q_at_m1.is_zero());

    let lead_divs: Vec<BigInt> = positive_divisors(&q_lead)
        .into_iter()
        .filter(|l| *l <= bound)
        .collect();
    let const_divs: Vec<BigInt> = signed_divisors(&q_const)
        .into_iter()
        .filter(|c| c.abs() <= bound)
        .collect();
    let sum_targets = signed_divisors(&q_at_1);

    // Interior coefficients b_1..b_{d-2} run over the box; the last one is
    // solved from g(1), which must divide q(1).
    let free = d.saturating_sub(2);
    let lo = -&bound;
    for lead in &lead_divs {
        for constant in &const_divs {
            let mut odometer = vec![lo.clone(); free];
            loop {
                for target in &sum_targets {
                    let partial: BigInt = lead + constant + odometer.iter().sum::<BigInt>();
                    let last = target - &partial;
                    if last.abs() > bound {
                        continue;
                    }
                    let mut coeffs = Vec::with_capacity(d + 1);
                    coeffs.push(constant.clone());
                    coeffs.extend(odometer.iter().cloned());
                    coeffs.push(last);
                    coeffs.push(lead.clone());
                    if !accept_candidate(q, &coeffs, &q_at_m1) {
                        continue;
                    }
                    let g = UniPolynomial::from_bigint_coeffs(coeffs);
                    if g.degree() != d {
                        continue;
                    }
                    if let Ok((_, rem)) = q.divrem(&g) {
                        if rem.is_zero() {
                            return Some(g);
                        }
                    }
                }
                // Advance the odometer through [-B, B]^free.
                let mut i = 0;
                loop {
                    if i == free {
                        break;
                    }
                    odometer[i] += 1;
                    if odometer[i] <= bound {
                        break;
                    }
                    odometer[i] = lo.clone();
                    i += 1;
                }
                if free == 0 || i == free {
                    break;
                }
            }
        }
    }
    None
}

/// Cheap filters before trial division: primitivity and g(-1) | q(-1).
fn accept_candidate(q: &UniPolynomial, coeffs: &[BigInt], q_at_m1: &BigInt) -> bool {
    let mut g = BigInt::zero();
    for c in coeffs {
        g = g.gcd(c);
    }
    if g != BigInt::one() {
        return false;
    }
    let mut at_m1 = BigInt::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if i % 2 == 0 {
            at_m1 += c;
        } else {
            at_m1 -= c;
        }
    }
    if at_m1.is_zero() {
        // q has no root at -1, so a candidate vanishing there cannot divide.
        return false;
    }
    let _ = q;
    q_at_m1.is_multiple_of(&at_m1)
}

/// Mignotte: any degree-d integer divisor g of q has |g|_1 <= 2^d |q|_2,
/// because lc(g) divides lc(q).
fn mignotte_bound(q: &UniPolynomial, d: usize) -> BigInt {
    let norm_sq: BigInt = q
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            let n = c.to_integer();
            &n * &n
        })
        .sum();
    (norm_sq.sqrt() + 1) << d as u32
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero are not enumerable");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All divisors of n, negative first at each magnitude, ascending magnitude.
fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    for d in positive_divisors(n) {
        out.push(-&d);
        out.push(d);
    }
    out
}

/// Re-runs the search machinery to confirm a factor is irreducible.
fn verify_irreducible(f: &UniPolynomial) -> bool {
    let mut parts = Vec::new();
    factor_primitive(content_primitive(f).1, &mut parts);
    parts.len() == 1 && parts[0].degree() == f.degree()
}
