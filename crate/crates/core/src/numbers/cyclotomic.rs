//! Cyclotomic fields, quadratic Gauss sums, and finite Fourier series.
//!
//! Elements of Q(zeta_n) live on the power basis 1, zeta, ...,
//! zeta^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial, so
//! equality is plain coordinate comparison.  The Gauss sum
//! g = sum chi(j) zeta_p^j squares to +p or -p, which turns square roots
//! into finite Fourier series with rational coefficients: the concrete
//! face of the fact that numbers with abelian symmetry live in cyclotomic
//! fields.  Numeric evaluation runs in exact rational interval arithmetic,
//! so the reported error bound is rigorous, not a float estimate.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::unipoly::{Rational, UniPolynomial};

/// Largest index accepted by [`cyclotomic_polynomial`].
pub const CYCLOTOMIC_INDEX_LIMIT: usize = 200;
/// Largest index an element may use as its modulus; square-root synthesis
/// needs lcm(8, n) style moduli, hence the wider bound.
pub const ELEMENT_MODULUS_LIMIT: usize = 800;
/// Largest prime accepted by [`quadratic_gauss_sum`].
pub const GAUSS_PRIME_LIMIT: usize = 100;
/// Largest radicand accepted by [`sqrt_as_cyclotomic`].
pub const SQRT_LIMIT: usize = 100;
/// Largest decimal precision accepted by [`numeric_eval`].
pub const EVAL_PRECISION_LIMIT: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CyclotomicError {
    #[error("index must be between 1 and {limit}, got {got}")]
    IndexOutOfRange { limit: usize, got: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("{got} is not an odd prime at most {limit}")]
    NotOddPrime { limit: usize, got: usize },
    #[error("{got} is not squarefree")]
    NotSquarefree { got: usize },
}

fn euler_phi(n: usize) -> usize {
    let mut remaining = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if remaining > 1 {
        phi = phi / remaining * (remaining - 1);
    }
    phi
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Phi_n by the division method, memoized: x^n - 1 divided by Phi_d over
/// the proper divisors d of n.
fn phi_poly(n: usize) -> UniPolynomial {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, UniPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        UniPolynomial::from_integers(&[-1, 1])
    } else {
        // x^n - 1
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[0] = -Rational::one();
        coeffs[n] = Rational::one();
        let mut num = UniPolynomial::from_coeffs(coeffs);
        for d in 1..n {
            if n % d == 0 {
                let (q, r) = num.divrem(&phi_poly(d)).expect("divisor is nonzero");
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num
    };
    debug_assert_eq!(result.degree(), euler_phi(n));
    debug_assert!(result.is_integer());
    cache.lock().expect("cache lock").insert(n, result.clone());
    result
}

/// The n-th cyclotomic polynomial, for 1 <= n <= 200.
pub fn cyclotomic_polynomial(n: usize) -> Result<UniPolynomial, CyclotomicError> {
    if n == 0 || n > CYCLOTOMIC_INDEX_LIMIT {
        return Err(CyclotomicError::IndexOutOfRange {
            limit: CYCLOTOMIC_INDEX_LIMIT,
            got: n,
        });
    }
    Ok(phi_poly(n))
}

/// An element of Q(zeta_n) on the power basis of length phi(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    modulus: usize,
    coords: Vec<Rational>,
}

impl CyclotomicElement {
    fn check_index(n: usize) -> Result<(), CyclotomicError> {
        if n == 0 || n > ELEMENT_MODULUS_LIMIT {
            return Err(CyclotomicError::IndexOutOfRange {
                limit: ELEMENT_MODULUS_LIMIT,
                got: n,
            });
        }
        Ok(())
    }

    /// The rational q viewed inside Q(zeta_n).
    pub fn embed_rational(n: usize, q: Rational) -> Result<CyclotomicElement, CyclotomicError> {
        Self::check_index(n)?;
        let mut coords = vec![Rational::zero(); euler_phi(n)];
        coords[0] = q;
        Ok(CyclotomicElement { modulus: n, coords })
    }

    /// zeta_n^k, reduced to the power basis.
    pub fn zeta_pow(n: usize, k: usize) -> Result<CyclotomicElement, CyclotomicError> {
        Self::check_index(n)?;
        let mut coeffs = vec![Rational::zero(); k % n + 1];
        let top = coeffs.len() - 1;
        coeffs[top] = Rational::one();
        Self::from_polynomial(n, &UniPolynomial::from_coeffs(coeffs))
    }

    /// Reduces an arbitrary rational polynomial in zeta_n to the power
    /// basis.
    pub fn from_polynomial(n: usize, p: &UniPolynomial) -> Result<CyclotomicElement, CyclotomicError> {
        Self::check_index(n)?;
        let modpoly = phi_poly(n);
        let reduced = if p.degree() < modpoly.degree() || p.is_zero() {
            p.clone()
        } else {
            p.divrem(&modpoly).expect("modulus is nonzero").1
        };
        let mut coords = reduced.coeffs().to_vec();
        coords.resize(euler_phi(n), Rational::zero());
        Ok(CyclotomicElement { modulus: n, coords })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Some(q) when the element is the embedded rational q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn as_polynomial(&self) -> UniPolynomial {
        UniPolynomial::from_coeffs(self.coords.clone())
    }

    fn check_same(&self, other: &CyclotomicElement) -> Result<(), CyclotomicError> {
        if self.modulus != other.modulus {
            return Err(CyclotomicError::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CyclotomicElement) -> Result<CyclotomicElement, CyclotomicError> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicElement {
            modulus: self.modulus,
            coords,
        })
    }

    pub fn sub(&self, other: &CyclotomicElement) -> Result<CyclotomicElement, CyclotomicError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CyclotomicElement {
        CyclotomicElement {
            modulus: self.modulus,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> CyclotomicElement {
        CyclotomicElement {
            modulus: self.modulus,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn mul(&self, other: &CyclotomicElement) -> Result<CyclotomicElement, CyclotomicError> {
        self.check_same(other)?;
        CyclotomicElement::from_polynomial(
            self.modulus,
            &self.as_polynomial().mul(&other.as_polynomial()),
        )
    }

    /// Structural equality after reduction; both operands must share a
    /// modulus.
    pub fn equals(&self, other: &CyclotomicElement) -> Result<bool, CyclotomicError> {
        self.check_same(other)?;
        Ok(self.coords == other.coords)
    }

    /// The same number inside the bigger field Q(zeta_m), for n | m:
    /// zeta_n maps to zeta_m^(m/n).
    pub fn raise_modulus(&self, m: usize) -> Result<CyclotomicElement, CyclotomicError> {
        Self::check_index(m)?;
        if m % self.modulus != 0 {
            return Err(CyclotomicError::ModulusMismatch {
                left: self.modulus,
                right: m,
            });
        }
        let step = m / self.modulus;
        let mut coeffs = vec![Rational::zero(); (self.coords.len() - 1) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        CyclotomicElement::from_polynomial(m, &UniPolynomial::from_coeffs(coeffs))
    }
}

/// Legendre symbol via Euler's criterion.
fn legendre(j: usize, p: usize) -> i64 {
    let mut acc: u64 = 1;
    let mut base = (j % p) as u64;
    let mut e = (p as u64 - 1) / 2;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else if acc == m - 1 {
        -1
    } else {
        0
    }
}

/// The quadratic Gauss sum g = sum_{j=1}^{p-1} chi(j) zeta_p^j for an odd
/// prime p <= 100.  Verified internally: g^2 = p for p = 1 mod 4 and
/// g^2 = -p for p = 3 mod 4, exactly.
pub fn quadratic_gauss_sum(p: usize) -> Result<CyclotomicElement, CyclotomicError> {
    if !is_prime(p) || p == 2 || p > GAUSS_PRIME_LIMIT {
        return Err(CyclotomicError::NotOddPrime {
            limit: GAUSS_PRIME_LIMIT,
            got: p,
        });
    }
    let mut coeffs = vec![Rational::zero(); p];
    for (j, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = Rational::from_integer(BigInt::from(legendre(j, p)));
    }
    let g = CyclotomicElement::from_polynomial(p, &UniPolynomial::from_coeffs(coeffs))?;
    let expected = if p % 4 == 1 {
        BigInt::from(p)
    } else {
        -BigInt::from(p)
    };
    let square = g.mul(&g)?;
    let target = CyclotomicElement::embed_rational(p, Rational::from_integer(expected))?;
    assert!(
        square.equals(&target)?,
        "Gauss sum law must hold for p = {p}"
    );
    Ok(g)
}

/// A finite Fourier series for the positive square root of a squarefree
/// n <= 100: an element of Q(zeta_m) with m | 8n squaring to n exactly,
/// assembled multiplicatively from Gauss sums.  The factor for 2 is
/// zeta_8 + zeta_8^-1; a prime p = 3 mod 4 contributes zeta_4^-1 times its
/// Gauss sum, turning i*sqrt(p) into sqrt(p).
pub fn sqrt_as_cyclotomic(n: usize) -> Result<CyclotomicElement, CyclotomicError> {
    if n == 0 || n > SQRT_LIMIT {
        return Err(CyclotomicError::IndexOutOfRange {
            limit: SQRT_LIMIT,
            got: n,
        });
    }
    let mut primes = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return Err(CyclotomicError::NotSquarefree { got: n });
            }
            primes.push(p);
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }

    // Each part is a positive real square root in its own small field.
    let mut parts: Vec<CyclotomicElement> = Vec::new();
    for &q in &primes {
        if q == 2 {
            // zeta_8 + zeta_8^-1 = sqrt 2.
            let part = CyclotomicElement::zeta_pow(8, 1)?.add(&CyclotomicElement::zeta_pow(8, 7)?)?;
            parts.push(part);
        } else if q % 4 == 1 {
            parts.push(quadratic_gauss_sum(q)?);
        } else {
            // zeta_4^-1 * g_q lives in Q(zeta_{4q}).
            let m = 4 * q;
            let g = quadratic_gauss_sum(q)?.raise_modulus(m)?;
            let correction = CyclotomicElement::zeta_pow(m, 3 * q)?;
            parts.push(g.mul(&correction)?);
        }
    }

    let modulus = parts.iter().fold(1usize, |m, part| m.lcm(&part.modulus()));
    let mut result = CyclotomicElement::embed_rational(modulus, Rational::one())?;
    for part in &parts {
        result = result.mul(&part.raise_modulus(modulus)?)?;
    }
    let target = CyclotomicElement::embed_rational(modulus, Rational::from_integer(BigInt::from(n)))?;
    assert!(
        result.mul(&result)?.equals(&target)?,
        "the assembled series must square to {n}"
    );
    Ok(result)
}

// ---------------------------------------------------------------------------
// Rigorous numeric evaluation: exact rational intervals end to end.
// ---------------------------------------------------------------------------

/// An approximate complex value with a proven bound: each of the real and
/// imaginary parts is within error_bound of the true component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexApprox {
    pub real: Rational,
    pub imag: Rational,
    pub error_bound: Rational,
}

type Interval = (Rational, Rational);

fn iv_add(a: &Interval, b: &Interval) -> Interval {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn iv_neg(a: &Interval) -> Interval {
    (-&a.1, -&a.0)
}

fn iv_scale(a: &Interval, q: &Rational) -> Interval {
    if q.is_negative() {
        (&a.1 * q, &a.0 * q)
    } else {
        (&a.0 * q, &a.1 * q)
    }
}

/// atan(1/inv) bracketed by alternating partial sums.
fn atan_recip_interval(inv: u64, eps: &Rational) -> Interval {
    let x = Rational::new(BigInt::one(), BigInt::from(inv));
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = Rational::zero();
    let mut k = 0u32;
    loop {
        let term = &power / Rational::from_integer(BigInt::from(2 * k + 1));
        let positive = k % 2 == 0;
        if positive {
            sum += &term;
        } else {
            sum -= &term;
        }
        power = &power * &x2;
        let next = &power / Rational::from_integer(BigInt::from(2 * k + 3));
        if &next < eps {
            // The remainder has the sign opposite to the last added term.
            return if positive {
                (&sum - &next, sum)
            } else {
                (sum.clone(), &sum + &next)
            };
        }
        k += 1;
    }
}

/// Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239).
fn pi_interval(eps: &Rational) -> Interval {
    let tight = eps / Rational::from_integer(BigInt::from(32));
    let a = atan_recip_interval(5, &tight);
    let b = atan_recip_interval(239, &tight);
    let sixteen = Rational::from_integer(BigInt::from(16));
    let four = Rational::from_integer(BigInt::from(4));
    iv_add(&iv_scale(&a, &sixteen), &iv_neg(&iv_scale(&b, &four)))
}

/// cos over a nonnegative interval theta contained in [0, 1.6], by Taylor
/// terms evaluated in interval arithmetic with a geometric tail bound.
fn taylor_cos(theta: &Interval, eps: &Rational) -> Interval {
    taylor_alternating(theta, eps, true)
}

fn taylor_sin(theta: &Interval, eps: &Rational) -> Interval {
    taylor_alternating(theta, eps, false)
}

fn taylor_alternating(theta: &Interval, eps: &Rational, cosine: bool) -> Interval {
    let (a, b) = theta;
    debug_assert!(!a.is_negative() && b >= a);
    let a2 = a * a;
    let b2 = b * b;
    // Powers a^m, b^m and factorial m! advance two steps per term.
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    let mut m: u64 = if cosine { 0 } else { 1 };
    let mut pow_a = rat_pow(a, m);
    let mut pow_b = rat_pow(b, m);
    let mut fact = factorial(m);
    let mut k = 0u64;
    loop {
        let t_lo = &pow_a / Rational::from_integer(fact.clone());
        let t_hi = &pow_b / Rational::from_integer(fact.clone());
        if k % 2 == 0 {
            lo += &t_lo;
            hi += &t_hi;
        } else {
            lo -= &t_hi;
            hi -= &t_lo;
        }
        // Advance to the next term.
        pow_a = &pow_a * &a2;
        pow_b = &pow_b * &b2;
        fact *= BigInt::from((m + 1) * (m + 2));
        m += 2;
        k += 1;
        let next = &pow_b / Rational::from_integer(fact.clone());
        // Ratio of consecutive terms is below 1/2 from here on.
        let ratio_ok = &b2 * Rational::from_integer(BigInt::from(2))
            <= Rational::from_integer(BigInt::from((m + 1) * (m + 2)));
        if &next < eps && ratio_ok {
            let tail = &next * Rational::from_integer(BigInt::from(2));
            return (lo - &tail, hi + &tail);
        }
    }
}

fn rat_pow(x: &Rational, e: u64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn factorial(m: u64) -> BigInt {
    (1..=m).map(BigInt::from).product::<BigInt>()
}

/// cos and sin of the angle 2*pi*frac for frac in [0, 1), reduced exactly
/// into the first quadrant before any series runs.
fn eval_unit_angle(frac: &Rational, two_pi: &Interval, eps: &Rational) -> (Interval, Interval) {
    let four = Rational::from_integer(BigInt::from(4));
    let scaled = frac * &four;
    let quadrant = scaled.floor().to_integer();
    let r = (&scaled - Rational::from_integer(quadrant.clone())) / &four;
    let theta = iv_scale(two_pi, &r);
    let c = taylor_cos(&theta, eps);
    let s = taylor_sin(&theta, eps);
    match quadrant.to_u8().expect("quadrant is 0..4") {
        0 => (c, s),
        1 => (iv_neg(&s), c),
        2 => (iv_neg(&c), iv_neg(&s)),
        _ => (s, iv_neg(&c)),
    }
}

/// Evaluates the element at zeta_n = exp(2 pi i / n) to at least the
/// requested number of decimal digits; the returned bound is exact.
pub fn numeric_eval(e: &CyclotomicElement, precision: usize) -> ComplexApprox {
    assert!(
        precision <= EVAL_PRECISION_LIMIT,
        "precision capped at {EVAL_PRECISION_LIMIT} digits"
    );
    let target = Rational::new(BigInt::one(), BigInt::from(10u8).pow(precision as u32));
    let n = e.modulus();
    let mut eps = &target / Rational::from_integer(BigInt::from(10u64).pow(8));
    for _attempt in 0..24 {
        let two_pi = {
            let pi = pi_interval(&eps);
            iv_scale(&pi, &Rational::from_integer(BigInt::from(2)))
        };
        let mut re: Interval = (Rational::zero(), Rational::zero());
        let mut im: Interval = (Rational::zero(), Rational::zero());
        for (j, q) in e.coords().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let frac = Rational::new(BigInt::from(j), BigInt::from(n));
            let (c, s) = eval_unit_angle(&frac, &two_pi, &eps);
            re = iv_add(&re, &iv_scale(&c, q));
            im = iv_add(&im, &iv_scale(&s, q));
        }
        let two = Rational::from_integer(BigInt::from(2));
        let re_halfwidth = (&re.1 - &re.0) / &two;
        let im_halfwidth = (&im.1 - &im.0) / &two;
        let bound = re_halfwidth.max(im_halfwidth);
        if bound <= target {
            return ComplexApprox {
                real: (&re.0 + &re.1) / &two,
                imag: (&im.0 + &im.1) / &two,
                error_bound: bound,
            };
        }
        eps = &eps / Rational::from_integer(BigInt::from(10u64).pow(10));
    }
    unreachable!("interval widths shrink linearly with eps");
}
