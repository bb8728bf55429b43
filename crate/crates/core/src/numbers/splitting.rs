//! Splitting-field degree by iterated factorization over simple extensions.
//!
//! This is the independent oracle behind the group classifier: the order of
//! the symmetry group equals the degree of the splitting field, computed
//! here without any resolvent or discriminant shortcuts.  The tower starts
//! at the rationals; while some factor of the input stays nonlinear, one of
//! its roots is adjoined and everything is refactored over the bigger field.
//!
//! Factoring over an extension K = Q(gamma) uses squarefree norms: for a
//! suitable integer shift s, N(x) = Res_y(m(y), f(x - s y)) is squarefree,
//! its irreducible integer factors correspond one to one to the irreducible
//! factors of f over K, and the minimal polynomial of beta + s gamma comes
//! out for free when a root beta of an irreducible factor is adjoined.
//! Integer factorization underneath is Berlekamp modulo a small prime,
//! Hensel lifting, and bounded subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::unipoly::{
    monic_integer_form, poly_gcd, resultant, squarefree_part, Rational, UniPolynomial,
};

/// Degree cap mirroring the group classifier: towers above quartics would
/// need splitting degrees beyond 24.
pub const SPLITTING_DEGREE_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error("splitting degree supports degree 1 through {limit}, got {got}")]
    DegreeOutOfRange { limit: usize, got: usize },
}

/// Degree of the splitting field of p over the rationals, for nonconstant
/// p of degree at most 4.  Repeated factors and rational scaling do not
/// change the answer.
pub fn splitting_field_degree(p: &UniPolynomial) -> Result<u64, SplitError> {
    if p.is_zero() || p.is_constant() || p.degree() > SPLITTING_DEGREE_LIMIT {
        return Err(SplitError::DegreeOutOfRange {
            limit: SPLITTING_DEGREE_LIMIT,
            got: p.degree(),
        });
    }
    let reduced = squarefree_part(p);
    let monic = monic_integer_form(&reduced);

    let mut tower = NumberField::rationals();
    let mut worklist: Vec<KPoly> = vec![kp_from_rational_poly(&monic)];
    loop {
        // Refactor every pending polynomial over the current field.
        let mut pieces: Vec<(TragerPiece, i64)> = Vec::new();
        for w in &worklist {
            if kp_degree(w) < 2 {
                continue;
            }
            let (s, parts) = trager_factor(&tower, w);
            pieces.extend(parts.into_iter().map(|piece| (piece, s)));
        }
        pieces.retain(|(piece, _)| kp_degree(&piece.factor) >= 2);
        if pieces.is_empty() {
            return Ok(tower.degree() as u64);
        }

        // Adjoin a root of the smallest nonlinear factor.
        let pick_at = (0..pieces.len())
            .min_by_key(|&i| kp_degree(&pieces[i].0.factor))
            .expect("pieces is nonempty");
        let (pick, shift) = pieces.remove(pick_at);
        let next = NumberField {
            modulus: pick.minimal.clone(),
        };

        if pieces.is_empty() && kp_degree(&pick.factor) == 2 {
            // The quotient by the adjoined root is linear and nothing else
            // is pending, so the new field already splits everything.
            tower = next;
            worklist = Vec::new();
            continue;
        }

        // Express the old generator inside the new field, then carry the
        // remaining factors and the quotient of the adjoined one across.
        let old_gen_image = embed_generator(&tower, &next, &pick.factor, shift);
        let new_gen = next.reduce(&UniPolynomial::x());
        let root_image = next.sub(&new_gen, &next.scale_int(&old_gen_image, shift));

        let mut carried: Vec<KPoly> = Vec::new();
        for (piece, _) in &pieces {
            carried.push(kp_map_coeffs(&next, &piece.factor, &old_gen_image));
        }
        let adjoined_image = kp_map_coeffs(&next, &pick.factor, &old_gen_image);
        let linear = vec![next.neg(&root_image), next.one()];
        let (quotient, rem) = kp_divrem(&next, &adjoined_image, &linear);
        assert!(kp_is_zero(&rem), "the adjoined root must divide its factor");
        if kp_degree(&quotient) >= 2 {
            carried.push(quotient);
        }
        tower = next;
        worklist = carried;
    }
}

// ---------------------------------------------------------------------------
// Arithmetic in a simple extension K = Q[y]/(m), with m monic and integer.
// Elements are rational polynomials in the generator, reduced below deg m.
// The rationals themselves are the degenerate tower floor m = y.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct NumberField {
    modulus: UniPolynomial,
}

type Elt = UniPolynomial;

impl NumberField {
    fn rationals() -> NumberField {
        NumberField {
            modulus: UniPolynomial::x(),
        }
    }

    fn degree(&self) -> usize {
        self.modulus.degree()
    }

    fn reduce(&self, e: &UniPolynomial) -> Elt {
        if e.degree() < self.degree() || e.is_zero() {
            return e.clone();
        }
        let (_, r) = e.divrem(&self.modulus).expect("modulus is nonzero");
        r
    }

    fn zero(&self) -> Elt {
        UniPolynomial::zero()
    }

    fn one(&self) -> Elt {
        UniPolynomial::one()
    }

    fn add(&self, a: &Elt, b: &Elt) -> Elt {
        a.add(b)
    }

    fn sub(&self, a: &Elt, b: &Elt) -> Elt {
        a.sub(b)
    }

    fn neg(&self, a: &Elt) -> Elt {
        a.neg()
    }

    fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        self.reduce(&a.mul(b))
    }

    fn scale_int(&self, a: &Elt, k: i64) -> Elt {
        a.scale(&Rational::from_integer(BigInt::from(k)))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm; the
    /// modulus is irreducible, so every nonzero element is a unit.
    fn inv(&self, a: &Elt) -> Elt {
        assert!(!a.is_zero(), "inverse of zero in a number field");
        let (g, u, _) = ext_gcd_rational(a, &self.modulus);
        assert!(g.is_constant() && !g.is_zero(), "modulus must be irreducible");
        self.reduce(&u.scale(&g.leading_coeff().recip()))
    }
}

/// Extended Euclid over Q[y]: returns (g, u, v) with u*a + v*b = g.
fn ext_gcd_rational(a: &UniPolynomial, b: &UniPolynomial) -> (UniPolynomial, UniPolynomial, UniPolynomial) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPolynomial::one(), UniPolynomial::zero());
    let (mut t0, mut t1) = (UniPolynomial::zero(), UniPolynomial::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

// Polynomials over K: coefficient vectors of field elements, low first.
type KPoly = Vec<Elt>;

fn kp_trim(mut v: KPoly) -> KPoly {
    while v.last().is_some_and(|e| e.is_zero()) {
        v.pop();
    }
    v
}

fn kp_is_zero(f: &KPoly) -> bool {
    f.is_empty()
}

fn kp_degree(f: &KPoly) -> usize {
    f.len().saturating_sub(1)
}

fn kp_from_rational_poly(p: &UniPolynomial) -> KPoly {
    p.coeffs()
        .iter()
        .map(|c| UniPolynomial::constant(c.clone()))
        .collect()
}

fn kp_add(field: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    let n = a.len().max(b.len());
    let zero = field.zero();
    kp_trim(
        (0..n)
            .map(|i| field.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

fn kp_mul(field: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = field.mul(x, y);
            out[i + j] = field.add(&out[i + j], &t);
        }
    }
    kp_trim(out)
}

fn kp_divrem(field: &NumberField, a: &KPoly, b: &KPoly) -> (KPoly, KPoly) {
    assert!(!kp_is_zero(b), "division by the zero polynomial over K");
    let db = kp_degree(b);
    let lead_inv = field.inv(b.last().expect("nonzero divisor"));
    let mut rem = a.clone();
    let mut quot = vec![field.zero(); a.len().saturating_sub(db)];
    while rem.len() > db && rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let factor = field.mul(rem.last().expect("nonempty"), &lead_inv);
        for (j, c) in b.iter().enumerate() {
            let t = field.mul(&factor, c);
            rem[k + j] = field.sub(&rem[k + j], &t);
        }
        debug_assert!(rem.last().expect("nonempty").is_zero());
        rem.pop();
        rem = kp_trim(rem);
        quot[k] = factor;
    }
    (kp_trim(quot), rem)
}

fn kp_monic(field: &NumberField, f: &KPoly) -> KPoly {
    if kp_is_zero(f) {
        return Vec::new();
    }
    let inv = field.inv(f.last().expect("nonzero"));
    kp_trim(f.iter().map(|c| field.mul(c, &inv)).collect())
}

fn kp_gcd_monic(field: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !kp_is_zero(&b) {
        let (_, r) = kp_divrem(field, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
    kp_monic(field, &a)
}

/// Applies the generator substitution gamma -> image to every coefficient,
/// landing the polynomial in the target field.
fn kp_map_coeffs(target: &NumberField, f: &KPoly, image: &Elt) -> KPoly {
    kp_trim(
        f.iter()
            .map(|c| {
                // Horner evaluation of the coefficient polynomial at image.
                let mut acc = target.zero();
                for coeff in c.coeffs().iter().rev() {
                    acc = target.mul(&acc, image);
                    acc = target.add(&acc, &UniPolynomial::constant(coeff.clone()));
                }
                acc
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Trager factorization over the current field.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct TragerPiece {
    /// Monic irreducible factor over the field.
    factor: KPoly,
    /// Monic integer minimal polynomial over Q of beta + s*gamma, where
    /// beta is any root of the factor; adjoining beta lands in exactly
    /// this field.
    minimal: UniPolynomial,
}

/// Factors a monic squarefree polynomial of degree >= 1 into monic
/// irreducible factors over the field, returning the shift used.
fn trager_factor(field: &NumberField, f: &KPoly) -> (i64, Vec<TragerPiece>) {
    debug_assert!(kp_degree(f) >= 1);
    debug_assert!(f.last().expect("nonzero") == &field.one(), "input must be monic");

    let (shift, norm) = squarefree_norm(field, f);
    let factors = zassenhaus_factor_monic(&norm);
    if factors.len() == 1 {
        return (
            shift,
            vec![TragerPiece {
                factor: f.clone(),
                minimal: norm,
            }],
        );
    }

    let mut pieces = Vec::new();
    let mut degree_seen = 0;
    for g in factors {
        // gcd(f, G(z + s*gamma)) carves out the piece matched to G.
        let image = compose_shifted(field, &g, shift, f);
        let h = kp_gcd_monic(field, f, &image);
        assert!(
            kp_degree(&h) >= 1,
            "every norm factor must meet a factor over the field"
        );
        degree_seen += kp_degree(&h);
        pieces.push(TragerPiece { factor: h, minimal: g });
    }
    assert_eq!(degree_seen, kp_degree(f), "pieces must partition the factor");
    (shift, pieces)
}

/// Finds a shift s making N(x) = Res_y(m(y), f(x - s y)) squarefree and
/// returns (s, N).  N is monic with integer coefficients because the tower
/// is built from algebraic integers.
fn squarefree_norm(field: &NumberField, f: &KPoly) -> (i64, UniPolynomial) {
    for magnitude in 0..64i64 {
        for s in if magnitude == 0 { vec![0] } else { vec![magnitude, -magnitude] } {
            let norm = norm_of_shifted(field, f, s);
            let deriv = norm.derivative();
            if poly_gcd(&norm, &deriv).is_constant() {
                return (s, norm);
            }
        }
    }
    unreachable!("only finitely many shifts give a repeated resultant root");
}

/// Evaluates N(x) = Res_y(m(y), f~(x - s y, y)) pointwise and interpolates.
/// f~ replaces the generator inside each coefficient by the variable y.
fn norm_of_shifted(field: &NumberField, f: &KPoly, s: i64) -> UniPolynomial {
    let m = &field.modulus;
    let degree = field.degree() * kp_degree(f);
    let mut points = Vec::with_capacity(degree + 1);
    let mut values = Vec::with_capacity(degree + 1);
    let mut k = 0i64;
    while points.len() <= degree {
        for x0 in if k == 0 { vec![0] } else { vec![k, -k] } {
            if points.len() > degree {
                break;
            }
            let x0_rat = Rational::from_integer(BigInt::from(x0));
            // Build G(y) = sum_j c_j(y) * (x0 - s y)^j.
            let lin = UniPolynomial::from_coeffs(vec![
                x0_rat.clone(),
                Rational::from_integer(BigInt::from(-s)),
            ]);
            let mut acc = UniPolynomial::zero();
            let mut power = UniPolynomial::one();
            for c in f {
                acc = acc.add(&c.mul(&power));
                power = power.mul(&lin);
            }
            points.push(x0_rat);
            values.push(resultant(m, &acc));
        }
        k += 1;
    }
    let norm = lagrange_interpolate(&points, &values);
    assert_eq!(norm.degree(), degree, "the norm has full degree");
    assert!(norm.is_integer(), "norms down an algebraic-integer tower are integral");
    assert!(norm.leading_coeff().is_one(), "norms of monic polynomials are monic");
    norm
}

/// G(z + s*gamma) reduced modulo f, computed by Horner in K[z]/(f).
fn compose_shifted(field: &NumberField, g: &UniPolynomial, s: i64, f: &KPoly) -> KPoly {
    let gamma = field.reduce(&UniPolynomial::x());
    let shifted_gen = field.scale_int(&gamma, s);
    let t: KPoly = kp_trim(vec![shifted_gen, field.one()]);
    let mut acc: KPoly = Vec::new();
    for c in g.coeffs().iter().rev() {
        acc = kp_mul(field, &acc, &t);
        if acc.len() >= f.len() {
            let (_, r) = kp_divrem(field, &acc, f);
            acc = r;
        }
        acc = kp_add(field, &acc, &vec![UniPolynomial::constant(c.clone())]);
    }
    acc
}

fn lagrange_interpolate(points: &[Rational], values: &[Rational]) -> UniPolynomial {
    assert_eq!(points.len(), values.len());
    // Full product prod (x - x_j), divided back out per point.
    let mut master = UniPolynomial::one();
    for x in points {
        master = master.mul(&UniPolynomial::from_coeffs(vec![-x.clone(), Rational::one()]));
    }
    let mut acc = UniPolynomial::zero();
    for (x_i, y_i) in points.iter().zip(values) {
        if y_i.is_zero() {
            continue;
        }
        let linear = UniPolynomial::from_coeffs(vec![-x_i.clone(), Rational::one()]);
        let (basis, rem) = master.divrem(&linear).expect("linear divisor");
        debug_assert!(rem.is_zero());
        let denom = basis.eval(x_i);
        acc = acc.add(&basis.scale(&(y_i / denom)));
    }
    acc
}

/// Image of the old generator inside the new field: the unique common root
/// of the old modulus and the adjoined factor's defining relation.
fn embed_generator(old: &NumberField, new: &NumberField, factor: &KPoly, s: i64) -> Elt {
    // P1(y) = old modulus, constants lifted into the new field.
    let p1: KPoly = kp_from_rational_poly(&old.modulus);
    // P2(y) = factor~(gamma_new - s y, y): coefficients of the factor are
    // polynomials in the old generator, reread as polynomials in y.
    let gamma_new = new.reduce(&UniPolynomial::x());
    let lin: KPoly = kp_trim(vec![
        gamma_new,
        UniPolynomial::constant(Rational::from_integer(BigInt::from(-s))),
    ]);
    let mut p2: KPoly = Vec::new();
    let mut power: KPoly = vec![new.one()];
    for c in factor {
        p2 = kp_add(new, &p2, &kp_mul(new, &kp_from_rational_poly(c), &power));
        power = kp_mul(new, &power, &lin);
    }
    let g = kp_gcd_monic(new, &p1, &p2);
    assert_eq!(kp_degree(&g), 1, "the generator image must be unique");
    new.neg(&g[0])
}

// ---------------------------------------------------------------------------
// Integer factorization of monic squarefree polynomials: Berlekamp modulo a
// small prime, Hensel lifting, subset recombination.
// ---------------------------------------------------------------------------

/// Factors a monic squarefree integer polynomial into monic irreducible
/// integer factors, in a deterministic order.
fn zassenhaus_factor_monic(f: &UniPolynomial) -> Vec<UniPolynomial> {
    debug_assert!(f.is_integer() && f.leading_coeff().is_one());
    if f.degree() <= 1 {
        return vec![f.clone()];
    }
    let fz: Vec<BigInt> = f.to_integer_coeffs().expect("integer input");
    let p = choose_prime(&fz);
    let parts = berlekamp_split(&reduce_mod_p(&fz, p), p);
    if parts.len() == 1 {
        return vec![f.clone()];
    }

    // Modulus big enough to recover any true factor from its residues.
    let norm_sq: BigInt = fz.iter().map(|c| c * c).sum();
    let bound: BigInt = (norm_sq.sqrt() + 1u8) << fz.len() as u32;
    let mut modulus = BigInt::from(p);
    while modulus <= &bound * 2 {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_list(&fz, &parts, p, &modulus);
    debug_assert_eq!(lifted.len(), parts.len());

    let mut found = recombine(fz, lifted, &modulus);
    found.sort();
    found
        .into_iter()
        .map(UniPolynomial::from_bigint_coeffs)
        .collect()
}

fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    loop {
        if c >= 2 && (2..).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            return c;
        }
        c += 1;
    }
}

/// Picks a prime where f stays squarefree, preferring few modular factors:
/// fewer factors means cheaper recombination.
fn choose_prime(f: &[BigInt]) -> u64 {
    let mut best: Option<(usize, u64)> = None;
    let mut valid = 0;
    let mut p = 1;
    loop {
        p = next_prime(p);
        let fp = reduce_mod_p(f, p);
        if fp.len() != f.len() {
            continue; // cannot happen for monic input, kept for safety
        }
        let deriv = mp_derivative(&fp, p);
        if mp_degree(&mp_gcd_monic(&fp, &deriv, p)) != 0 {
            continue; // not squarefree mod p
        }
        let r = modular_factor_count(&fp, p);
        if best.is_none() || r < best.expect("some").0 {
            best = Some((r, p));
        }
        valid += 1;
        let (r_best, p_best) = best.expect("just set");
        if r_best <= 3 || valid >= 8 {
            return p_best;
        }
    }
}

// Dense polynomials over F_p: Vec<u64>, low degree first, trimmed.

fn reduce_mod_p(f: &[BigInt], p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    mp_trim(
        f.iter()
            .map(|c| c.mod_floor(&m).to_u64().expect("reduced below p"))
            .collect(),
    )
}

fn mp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mp_degree(f: &[u64]) -> usize {
    f.len().saturating_sub(1)
}

fn mp_derivative(f: &[u64], p: u64) -> Vec<u64> {
    mp_trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (c * (i as u64 % p)) % p)
            .collect(),
    )
}

fn mp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    mp_trim(out)
}

fn mp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    mp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2); p is prime and a nonzero mod p.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn mp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero mod p");
    let db = mp_degree(b);
    let lead_inv = inv_mod_p(*b.last().expect("nonzero"), p);
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len().saturating_sub(db)];
    while rem.len() > db && rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let factor = rem.last().expect("nonempty") * lead_inv % p;
        for (j, &c) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - factor * c % p) % p;
        }
        debug_assert_eq!(*rem.last().expect("nonempty"), 0);
        rem.pop();
        while rem.last() == Some(&0) {
            rem.pop();
        }
        quot[k] = factor;
    }
    (mp_trim(quot), mp_trim(rem))
}

fn mp_make_monic(f: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() {
        return Vec::new();
    }
    let inv = inv_mod_p(*f.last().expect("nonzero"), p);
    f.iter().map(|&c| c * inv % p).collect()
}

fn mp_gcd_monic(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = mp_divrem(&a, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    mp_make_monic(&a, p)
}

fn mp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let prod = mp_mul(a, b, p);
    mp_divrem(&prod, f, p).1
}

/// x^p mod f by binary exponentiation.
fn mp_x_pow_p(f: &[u64], p: u64) -> Vec<u64> {
    let x = vec![0, 1];
    let mut acc = vec![1];
    let mut base = mp_divrem(&x, f, p).1;
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mp_mulmod(&acc, &base, f, p);
        }
        base = mp_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// Rows of the Frobenius matrix: row i holds x^(p*i) mod f, padded to n.
fn frobenius_rows(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = mp_degree(f);
    let xp = mp_x_pow_p(f, p);
    let mut rows = Vec::with_capacity(n);
    let mut current = vec![1u64];
    for _ in 0..n {
        let mut padded = current.clone();
        padded.resize(n, 0);
        rows.push(padded);
        current = mp_mulmod(&current, &xp, f, p);
    }
    rows
}

/// Basis of the kernel of (M^T - I) over F_p: the Berlekamp subalgebra.
fn berlekamp_kernel(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = mp_degree(f);
    let rows = frobenius_rows(f, p);
    let mut a = vec![vec![0u64; n]; n];
    for j in 0..n {
        for i in 0..n {
            a[j][i] = rows[i][j] % p;
        }
        a[j][j] = (a[j][j] + p - 1) % p;
    }
    // Gaussian elimination to reduced row echelon form.
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = inv_mod_p(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c2 in 0..n {
                    a[r][c2] = (a[r][c2] + p - factor * a[row][c2] % p) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - a[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

fn modular_factor_count(f: &[u64], p: u64) -> usize {
    berlekamp_kernel(f, p).len()
}

/// Complete factorization of a monic squarefree polynomial over F_p into
/// distinct monic irreducible factors.
fn berlekamp_split(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let f = mp_make_monic(f, p);
    if mp_degree(&f) <= 1 {
        return vec![f];
    }
    let basis = berlekamp_kernel(&f, p);
    let r = basis.len();
    let mut factors = vec![f];
    'refine: for v in &basis {
        if factors.len() == r {
            break;
        }
        if mp_degree(&mp_trim(v.clone())) == 0 {
            continue; // the constants separate nothing
        }
        for c in 0..p {
            let mut shifted = v.clone();
            shifted[0] = (shifted[0] + p - c % p) % p;
            let shifted = mp_trim(shifted);
            let mut next = Vec::with_capacity(factors.len());
            for u in &factors {
                if mp_degree(u) <= 1 {
                    next.push(u.clone());
                    continue;
                }
                let g = mp_gcd_monic(u, &shifted, p);
                let dg = mp_degree(&g);
                if dg == 0 || dg == mp_degree(u) {
                    next.push(u.clone());
                } else {
                    let (q, rem) = mp_divrem(u, &g, p);
                    debug_assert!(rem.is_empty());
                    next.push(g);
                    next.push(mp_make_monic(&q, p));
                }
            }
            factors = next;
            if factors.len() == r {
                break 'refine;
            }
        }
    }
    assert_eq!(factors.len(), r, "Berlekamp must reach the full factor count");
    factors.sort();
    factors
}

// Hensel lifting: from a factorization mod p to one mod the target modulus.

fn bp_reduce(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = f.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn bp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    bp_reduce(&out, m)
}

fn bp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    bp_reduce(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect::<Vec<_>>(),
        m,
    )
}

fn bp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    bp_reduce(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect::<Vec<_>>(),
        m,
    )
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn bp_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let k = rem.len() - b.len();
        let factor = rem.last().expect("nonempty").clone();
        if !factor.is_zero() {
            for (j, c) in b.iter().enumerate() {
                let t = &factor * c;
                rem[k + j] = (&rem[k + j] - t).mod_floor(m);
            }
            quot[k] = factor;
        }
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    (bp_reduce(&quot, m), bp_reduce(&rem, m))
}

/// Extended gcd of coprime monic polynomials over F_p, with the Bezout
/// degrees normalized: s*g + t*h = 1, deg s < deg h, deg t < deg g.
fn ext_gcd_mod_p(g: &[u64], h: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (g.to_vec(), h.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = mp_divrem(&r0, &r1, p);
        let s = mp_sub(&s0, &mp_mul(&q, &s1, p), p);
        let t = mp_sub(&t0, &mp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(mp_degree(&r0), 0, "factors must be coprime mod p");
    let inv = inv_mod_p(r0[0], p);
    let s = mp_trim(s0.iter().map(|&c| c * inv % p).collect());
    let t = mp_trim(t0.iter().map(|&c| c * inv % p).collect());
    // Normalize degrees: s mod h, and fold the quotient into t.
    let (q, s_red) = mp_divrem(&s, h, p);
    let t_adj = mp_sub(&t, &mp_mul(&q, g, p), p).to_vec();
    let t_red = mp_trim(t_adj);
    (s_red, t_red)
}

fn bp_from_modp(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Quadratic Hensel lifting of a coprime monic pair from mod p up to at
/// least the target modulus.
fn hensel_pair(
    f: &[BigInt],
    g0: &[u64],
    h0: &[u64],
    p: u64,
    target: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s0, t0) = ext_gcd_mod_p(g0, h0, p);
    let mut modulus = BigInt::from(p);
    let mut g = bp_from_modp(g0);
    let mut h = bp_from_modp(h0);
    let mut s = bp_from_modp(&s0);
    let mut t = bp_from_modp(&t0);
    while &modulus < target {
        let m2 = &modulus * &modulus;
        let f_red = bp_reduce(f, &m2);
        let e = bp_sub(&f_red, &bp_mul(&g, &h, &m2), &m2);
        let (q, r) = bp_divrem_monic(&bp_mul(&s, &e, &m2), &h, &m2);
        let g_next = bp_add(&bp_add(&g, &bp_mul(&t, &e, &m2), &m2), &bp_mul(&q, &g, &m2), &m2);
        let h_next = bp_add(&h, &r, &m2);
        let one = vec![BigInt::one()];
        let b = bp_sub(
            &bp_add(&bp_mul(&s, &g_next, &m2), &bp_mul(&t, &h_next, &m2), &m2),
            &one,
            &m2,
        );
        let (c, d) = bp_divrem_monic(&bp_mul(&s, &b, &m2), &h_next, &m2);
        let s_next = bp_sub(&s, &d, &m2);
        let t_next = bp_sub(&bp_sub(&t, &bp_mul(&t, &b, &m2), &m2), &bp_mul(&c, &g_next, &m2), &m2);
        g = g_next;
        h = h_next;
        s = s_next;
        t = t_next;
        modulus = m2;
        debug_assert!(h.last().is_some_and(|c| c.is_one()), "h stays monic");
        debug_assert!(g.last().is_some_and(|c| c.is_one()), "g stays monic");
    }
    (bp_reduce(&g, target), bp_reduce(&h, target))
}

/// Lifts the whole modular factor list to the target modulus by a balanced
/// product tree of pair lifts.
fn hensel_list(f: &[BigInt], parts: &[Vec<u64>], p: u64, target: &BigInt) -> Vec<Vec<BigInt>> {
    if parts.len() == 1 {
        return vec![bp_reduce(f, target)];
    }
    let (left, right) = parts.split_at(parts.len() / 2);
    let mut g0 = vec![1u64];
    for part in left {
        g0 = mp_mul(&g0, part, p);
    }
    let mut h0 = vec![1u64];
    for part in right {
        h0 = mp_mul(&h0, part, p);
    }
    let (g, h) = hensel_pair(f, &g0, &h0, p, target);
    let mut out = hensel_list(&g, left, p, target);
    out.extend(hensel_list(&h, right, p, target));
    out
}

fn center(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    v.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

/// Exact division over the integers by a monic candidate; None if it does
/// not divide.
fn try_divide_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.len() > f.len() {
        return None;
    }
    let mut rem = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    while rem.len() >= g.len() && !rem.is_empty() {
        let k = rem.len() - g.len();
        let factor = rem.last().expect("nonempty").clone();
        for (j, c) in g.iter().enumerate() {
            let t = &factor * c;
            rem[k + j] -= t;
        }
        debug_assert!(rem.last().expect("nonempty").is_zero());
        rem.pop();
        quot[k] = factor;
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if rem.len() < g.len() {
            break;
        }
    }
    if rem.is_empty() {
        Some(quot)
    } else {
        None
    }
}

/// Assembles true integer factors as subset products of the lifted modular
/// factors, smallest subsets first.
fn recombine(f: Vec<BigInt>, pool: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut remaining = f;
    let mut pool = pool;
    let mut size = 1;
    while 2 * size <= pool.len() {
        let hit = find_subset_factor(&remaining, &pool, modulus, size);
        match hit {
            Some((indices, factor, quotient)) => {
                out.push(factor);
                remaining = quotient;
                for &i in indices.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if !remaining.is_empty() && remaining.len() > 1 {
        out.push(remaining);
    }
    out
}

fn find_subset_factor(
    remaining: &[BigInt],
    pool: &[Vec<BigInt>],
    modulus: &BigInt,
    size: usize,
) -> Option<(Vec<usize>, Vec<BigInt>, Vec<BigInt>)> {
    let n = pool.len();
    let mut indices: Vec<usize> = (0..size).collect();
    let f_const = remaining.first().cloned().unwrap_or_default();
    loop {
        // Constant-term screen before the full product.
        let mut const_prod = BigInt::one();
        for &i in &indices {
            const_prod = (&const_prod * pool[i].first().cloned().unwrap_or_default()).mod_floor(modulus);
        }
        let const_centered = {
            let half = modulus / 2;
            if const_prod > half {
                &const_prod - modulus
            } else {
                const_prod
            }
        };
        let screen_ok = if f_const.is_zero() {
            const_centered.is_zero()
        } else {
            !const_centered.is_zero() && f_const.is_multiple_of(&const_centered)
        };
        if screen_ok {
            let mut prod = vec![BigInt::one()];
            for &i in &indices {
                prod = bp_mul(&prod, &pool[i], modulus);
            }
            let candidate = center(&prod, modulus);
            if let Some(quotient) = try_divide_exact(remaining, &candidate) {
                return Some((indices, candidate, quotient));
            }
        }
        // Next combination in lexicographic order.
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if indices[i] != i + n - size {
                indices[i] += 1;
                for j in i + 1..size {
                    indices[j] = indices[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::galois::{classification_corpus, galois_group};

    fn p(text: &str) -> UniPolynomial {
        UniPolynomial::parse(text).expect("test polynomial parses")
    }

    fn degree_of(text: &str) -> u64 {
        splitting_field_degree(&p(text)).expect("in range")
    }

    #[test]
    fn small_fields() {
        assert_eq!(degree_of("x - 7"), 1);
        assert_eq!(degree_of("x^2 - 5"), 2);
        assert_eq!(degree_of("x^2 + 1"), 2);
        assert_eq!(degree_of("x^2 - 4"), 1); // splits already
    }

    #[test]
    fn cubic_fields() {
        assert_eq!(degree_of("x^3 - 3*x - 1"), 3);
        assert_eq!(degree_of("x^3 - 2"), 6);
        assert_eq!(degree_of("x^3 - x"), 1);
    }

    #[test]
    fn quartic_fields() {
        assert_eq!(degree_of("x^4 + x^3 + x^2 + x + 1"), 4);
        assert_eq!(degree_of("x^4 + 1"), 4);
        assert_eq!(degree_of("x^4 - 2"), 8);
    }

    #[test]
    fn a4_quartic() {
        assert_eq!(degree_of("x^4 + 8*x + 12"), 12);
    }

    #[test]
    fn s4_quartic() {
        assert_eq!(degree_of("x^4 - x - 1"), 24);
    }

    #[test]
    fn guards_fire() {
        assert!(matches!(
            splitting_field_degree(&p("x^5 - 2")),
            Err(SplitError::DegreeOutOfRange { limit: 4, got: 5 })
        ));
        assert!(matches!(
            splitting_field_degree(&p("3")),
            Err(SplitError::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            splitting_field_degree(&UniPolynomial::zero()),
            Err(SplitError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn scaling_and_multiplicity_do_not_matter() {
        let scaled = p("x^3 - 2").scale(&Rational::new(BigInt::from(-5), BigInt::from(3)));
        assert_eq!(splitting_field_degree(&scaled).unwrap(), 6);
        let squared = p("x^2 - 5").mul(&p("x^2 - 5"));
        assert_eq!(splitting_field_degree(&squared).unwrap(), 2);
        // Primitive with leading coefficient 8: roots of x^4 - 2 halved.
        assert_eq!(degree_of("8*x^4 - 1"), 8);
    }

    #[test]
    fn reducible_inputs_work_too() {
        // (x^2 - 2)(x^2 - 3): compositum of two quadratics.
        assert_eq!(degree_of("x^4 - 5*x^2 + 6"), 4);
        // (x - 1)(x^3 - 2): the linear part adds nothing.
        assert_eq!(degree_of("x^4 - x^3 - 2*x + 2"), 6);
    }

    #[test]
    fn corpus_orders_match_the_classifier() {
        for (text, _) in classification_corpus() {
            let poly = p(text);
            let profile = galois_group(&poly).expect("corpus entries are irreducible");
            let oracle = splitting_field_degree(&poly).expect("degree in range");
            assert_eq!(profile.order, oracle, "order vs splitting degree for {text}");
        }
    }

    #[test]
    fn zassenhaus_agrees_with_the_exhaustive_search() {
        use crate::numbers::factor::factor_integer_poly;
        // Monic squarefree products within both methods' reach.
        for text in [
            "x^4 - 1",
            "x^4 + x^2 + 1",
            "x^6 - 1",
            "x^5 - x - 1",
            "x^8 - x^2 - 2*x - 1",
        ] {
            let poly = p(text);
            let mut direct = factor_integer_poly(&poly)
                .expect("degree within the exhaustive cap")
                .factors;
            let mut modular = zassenhaus_factor_monic(&poly);
            direct.sort();
            modular.sort();
            assert_eq!(direct, modular, "factorizations of {text}");
        }
    }
}
