//! Diophantine families `f(t, x1, ..., xn)` over the integers: polynomial
//! arithmetic and parsing, bounded and dovetailed solution search, the three
//! built-in representations (even, square, composite), the exponential-triple
//! membership oracle, and a harness that checks a family against a reference
//! predicate at desk scale.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::sets::{self, DecidablePredicate, DecideError, Enumerator, Pull, PullError};

/// A power product of variables. The empty product is the constant monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exponents: BTreeMap<String, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// `var^exp`; exp 0 gives the constant monomial.
    pub fn var(name: &str, exp: u32) -> Monomial {
        let mut exponents = BTreeMap::new();
        if exp > 0 {
            exponents.insert(name.to_string(), exp);
        }
        Monomial { exponents }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            *exponents.entry(v.clone()).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn exponents(&self) -> &BTreeMap<String, u32> {
        &self.exponents
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.is_empty()
    }
}

/// Multivariate polynomial with integer coefficients, kept canonical:
/// no zero coefficients, monomials deduplicated. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Error from [`IntPolynomial::eval`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unbound variable {variable}")]
pub struct UnboundVariable {
    pub variable: String,
}

/// Error from [`IntPolynomial::parse`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct PolySyntaxError {
    pub position: usize,
    pub message: String,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> IntPolynomial {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        IntPolynomial { terms }
    }

    pub fn var(name: &str) -> IntPolynomial {
        IntPolynomial::term(1, Monomial::var(name, 1))
    }

    pub fn term(coeff: impl Into<BigInt>, m: Monomial) -> IntPolynomial {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        IntPolynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (m, c) in terms {
            out.add_term(&m, &c);
        }
        out
    }

    fn add_term(&mut self, m: &Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Variables occurring with nonzero exponent.
    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().keys().cloned())
            .collect()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(&m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    /// Exact value at a full assignment of the occurring variables.
    pub fn eval(&self, assignment: &BTreeMap<String, BigInt>) -> Result<BigInt, UnboundVariable> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut product = c.clone();
            for (v, &e) in m.exponents() {
                let value = assignment.get(v).ok_or_else(|| UnboundVariable {
                    variable: v.clone(),
                })?;
                product *= value.pow(e);
            }
            total += product;
        }
        Ok(total)
    }

    /// Parse the polynomial grammar:
    /// `expression ::= term (('+'|'-') term)*`,
    /// `term ::= factor ('*' factor)*`,
    /// `factor ::= integer | variable | variable '^' natural | '(' expression ')'`,
    /// unary minus allowed at expression head, variables `[a-z][a-z0-9]*`.
    pub fn parse(text: &str) -> Result<IntPolynomial, PolySyntaxError> {
        let mut p = PolyParser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let poly = p.expression()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(p.error("trailing input"));
        }
        Ok(poly)
    }

    /// Canonical text form; `IntPolynomial::parse(p.render()) == p`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Highest degree first, then monomial order, for a stable reading.
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| m2.degree().cmp(&m1.degree()).then(m1.cmp(m2)));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.magnitude();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut pieces: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_constant() {
                pieces.push(abs.to_string());
            }
            for (v, &e) in m.exponents() {
                if e == 1 {
                    pieces.push(v.clone());
                } else {
                    pieces.push(format!("{v}^{e}"));
                }
            }
            out.push_str(&pieces.join("*"));
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct PolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn error(&self, message: &str) -> PolySyntaxError {
        PolySyntaxError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<IntPolynomial, PolySyntaxError> {
        let mut negate_head = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate_head = true;
        }
        let mut acc = self.term()?;
        if negate_head {
            acc = acc.neg();
        }
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPolynomial, PolySyntaxError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPolynomial, PolySyntaxError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPolynomial::constant(self.natural()?)),
            Some(c) if c.is_ascii_lowercase() => {
                let name = self.variable_name();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let exp = self.natural()?;
                    let exp = exp.to_u32().ok_or_else(|| self.error("exponent too large"))?;
                    Ok(IntPolynomial::term(1, Monomial::var(&name, exp)))
                } else {
                    Ok(IntPolynomial::var(&name))
                }
            }
            _ => Err(self.error("expected integer, variable, or '('")),
        }
    }

    fn natural(&mut self) -> Result<BigInt, PolySyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural literal"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn variable_name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        self.pos += 1;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().to_string()
    }
}

/// A polynomial with one designated parameter slot and ordered unknowns:
/// the carrier of `f(t, x1, ..., xn) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineFamily {
    poly: IntPolynomial,
    parameter: String,
    unknowns: Vec<String>,
}

/// Error constructing a [`DiophantineFamily`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("parameter {0} also listed as an unknown")]
    ParameterIsUnknown(String),
    #[error("unknown {0} listed twice")]
    DuplicateUnknown(String),
    #[error("variable {0} is neither the parameter nor an unknown")]
    StrayVariable(String),
}

impl DiophantineFamily {
    pub fn new(
        poly: IntPolynomial,
        parameter: &str,
        unknowns: &[&str],
    ) -> Result<DiophantineFamily, FamilyError> {
        let mut seen = BTreeSet::new();
        for u in unknowns {
            if *u == parameter {
                return Err(FamilyError::ParameterIsUnknown(u.to_string()));
            }
            if !seen.insert(u.to_string()) {
                return Err(FamilyError::DuplicateUnknown(u.to_string()));
            }
        }
        for v in poly.variables() {
            if v != parameter && !seen.contains(&v) {
                return Err(FamilyError::StrayVariable(v));
            }
        }
        Ok(DiophantineFamily {
            poly,
            parameter: parameter.to_string(),
            unknowns: unknowns.iter().map(|u| u.to_string()).collect(),
        })
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn parameter(&self) -> &str {
        &self.parameter
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    /// Substitute the parameter, leaving a polynomial in the unknowns with
    /// exponent-vector terms ready for fast evaluation.
    fn specialize(&self, t: u64) -> SpecializedPoly {
        let t = BigInt::from(t);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; self.unknowns.len()];
            for (v, &e) in m.exponents() {
                if *v == self.parameter {
                    coeff *= t.pow(e);
                } else {
                    let i = self.unknowns.iter().position(|u| u == v).unwrap();
                    exps[i] = e;
                }
            }
            let entry = terms.entry(exps).or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        SpecializedPoly::new(terms.into_iter().collect())
    }

    /// Compile over the variable order `[parameter, unknowns...]` without
    /// substituting anything; used by the dovetailed enumerator.
    fn compile_full(&self) -> SpecializedPoly {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let mut exps = vec![0u32; self.unknowns.len() + 1];
            for (v, &e) in m.exponents() {
                if *v == self.parameter {
                    exps[0] = e;
                } else {
                    let i = self.unknowns.iter().position(|u| u == v).unwrap();
                    exps[i + 1] = e;
                }
            }
            let entry = terms.entry(exps).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        SpecializedPoly::new(terms.into_iter().collect())
    }
}

/// Sign behavior of the unknown-involving terms after substituting the
/// parameter; grounds the pruning in box search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Monotonicity {
    /// All unknown-involving coefficients >= 0: value nondecreasing in
    /// every unknown, minimized at the zero tail.
    Nondecreasing,
    /// All <= 0: value nonincreasing, maximized at the zero tail.
    Nonincreasing,
    Mixed,
}

struct SpecializedPoly {
    /// (coefficient, exponent vector over the unknowns), exact.
    terms: Vec<(BigInt, Vec<u32>)>,
    /// Same terms with i128 coefficients when they all fit.
    fast: Option<Vec<(i128, Vec<u32>)>>,
    monotonicity: Monotonicity,
}

impl SpecializedPoly {
    fn new(terms: Vec<(Vec<u32>, BigInt)>) -> SpecializedPoly {
        let terms: Vec<(BigInt, Vec<u32>)> =
            terms.into_iter().map(|(e, c)| (c, e)).collect();
        let fast = terms
            .iter()
            .map(|(c, e)| c.to_i128().map(|c| (c, e.clone())))
            .collect();
        let nonconstant: Vec<&BigInt> = terms
            .iter()
            .filter(|(_, e)| e.iter().any(|&x| x > 0))
            .map(|(c, _)| c)
            .collect();
        let monotonicity = if nonconstant.iter().all(|c| !c.is_negative()) {
            Monotonicity::Nondecreasing
        } else if nonconstant.iter().all(|c| !c.is_positive()) {
            Monotonicity::Nonincreasing
        } else {
            Monotonicity::Mixed
        };
        SpecializedPoly {
            terms,
            fast,
            monotonicity,
        }
    }

    /// Sign of the value at `xs` (-1, 0, +1), exact.
    fn sign(&self, xs: &[u64]) -> i32 {
        if let Some(fast) = &self.fast {
            if let Some(v) = eval_i128(fast, xs) {
                return match v {
                    0 => 0,
                    v if v > 0 => 1,
                    _ => -1,
                };
            }
        }
        let v = self.eval_big(xs);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn eval_big(&self, xs: &[u64]) -> BigInt {
        let mut total = BigInt::zero();
        for (c, exps) in &self.terms {
            let mut product = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    product *= BigInt::from(xs[i]).pow(e);
                }
            }
            total += product;
        }
        total
    }
}

fn eval_i128(terms: &[(i128, Vec<u32>)], xs: &[u64]) -> Option<i128> {
    let mut total: i128 = 0;
    for (c, exps) in terms {
        let mut product = *c;
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                product = product.checked_mul(xs[i] as i128)?;
            }
        }
        total = total.checked_add(product)?;
    }
    Some(total)
}

/// How to search for unknowns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Scan every assignment with each unknown <= bound; exhaustive for
    /// the box.
    Box { bound: u64 },
    /// Scan assignments in dovetail (tuple-decode) order, trying at most
    /// `budget` tuples.
    Dovetail { budget: u64 },
}

/// Verdict of a solution search at one parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Solvable { witness: Vec<u64> },
    NoSolutionWithinBound { bound: u64 },
}

/// Search for natural-number unknowns solving `fam` at parameter `t`.
///
/// Box search visits assignments lexicographically and reports the least
/// witness; when every unknown-involving coefficient (after substituting
/// `t`) has one sign, subtrees whose best value already has the wrong sign
/// are skipped without losing exhaustiveness.
pub fn search_solution(fam: &DiophantineFamily, t: u64, strategy: SearchStrategy) -> SearchResult {
    let spec = fam.specialize(t);
    let n = fam.unknowns().len();
    let found = match strategy {
        SearchStrategy::Box { bound } => {
            let mut xs = vec![0u64; n];
            box_scan(&spec, bound, 0, &mut xs)
        }
        SearchStrategy::Dovetail { budget } => {
            if n == 0 {
                (spec.sign(&[]) == 0).then(Vec::new)
            } else {
                let mut found = None;
                for code in 0..budget {
                    let xs = sets::tuple_decode(code, n);
                    if spec.sign(&xs) == 0 {
                        found = Some(xs);
                        break;
                    }
                }
                found
            }
        }
    };
    match found {
        Some(witness) => {
            // Soundness: a claimed witness must evaluate to exactly zero.
            assert!(spec.eval_big(&witness).is_zero(), "witness fails to verify");
            SearchResult::Solvable { witness }
        }
        None => SearchResult::NoSolutionWithinBound {
            bound: match strategy {
                SearchStrategy::Box { bound } => bound,
                SearchStrategy::Dovetail { budget } => budget,
            },
        },
    }
}

fn box_scan(spec: &SpecializedPoly, bound: u64, level: usize, xs: &mut Vec<u64>) -> Option<Vec<u64>> {
    if level == xs.len() {
        return (spec.sign(xs) == 0).then(|| xs.clone());
    }
    for v in 0..=bound {
        xs[level] = v;
        // Value with the remaining unknowns at zero bounds the whole
        // subtree under a one-sided certificate, and is monotone in v.
        let tail_zero_sign = {
            for x in xs[level + 1..].iter_mut() {
                *x = 0;
            }
            spec.sign(&xs[..])
        };
        match spec.monotonicity {
            Monotonicity::Nondecreasing if tail_zero_sign > 0 => break,
            Monotonicity::Nonincreasing if tail_zero_sign < 0 => break,
            _ => {}
        }
        if level + 1 == xs.len() {
            if tail_zero_sign == 0 {
                return Some(xs.clone());
            }
        } else if let Some(w) = box_scan(spec, bound, level + 1, xs) {
            return Some(w);
        }
    }
    xs[level] = 0;
    None
}

/// Enumerates the set `{ t : f(t, x) = 0 solvable }` by dovetailing over
/// `(t, x)` tuples; each solvable `t` is emitted exactly once, in first
/// discovery order. One work unit per tuple examined.
pub struct DiophantineEnumerator {
    arity: usize,
    compiled: SpecializedPoly,
    next_code: u64,
    seen: HashSet<u64>,
    work: u64,
}

impl Enumerator for DiophantineEnumerator {
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError> {
        for _ in 0..budget {
            let code = self.next_code;
            self.next_code += 1;
            self.work += 1;
            let tuple = sets::tuple_decode(code, self.arity);
            let t = tuple[0];
            if self.seen.contains(&t) {
                continue;
            }
            if self.compiled.sign(&tuple) == 0 {
                self.seen.insert(t);
                return Ok(Pull::Item(t));
            }
        }
        Ok(Pull::BudgetExceeded)
    }

    fn work_done(&self) -> u64 {
        self.work
    }
}

/// Dovetail `fam` into an enumerator of its represented set.
pub fn diophantine_enumerator(fam: &DiophantineFamily) -> DiophantineEnumerator {
    DiophantineEnumerator {
        arity: fam.unknowns().len() + 1,
        compiled: fam.compile_full(),
        next_code: 0,
        seen: HashSet::new(),
        work: 0,
    }
}

/// The three representations quoted with the listable/Diophantine
/// equivalence: even `t - 2x`, square `t - x^2`, composite
/// `t - (x+2)(y+2)`.
pub fn builtin_families() -> BTreeMap<&'static str, DiophantineFamily> {
    let parse = |text: &str| IntPolynomial::parse(text).unwrap();
    let mut out = BTreeMap::new();
    out.insert(
        "even",
        DiophantineFamily::new(parse("t - 2*x"), "t", &["x"]).unwrap(),
    );
    out.insert(
        "square",
        DiophantineFamily::new(parse("t - x^2"), "t", &["x"]).unwrap(),
    );
    out.insert(
        "composite",
        DiophantineFamily::new(parse("t - (x+2)*(y+2)"), "t", &["x", "y"]).unwrap(),
    );
    out
}

/// Membership in `{ (a, b, c) : c = a^b }`, with `0^0 = 1`. Exact
/// big-integer exponentiation, cutting off once the partial power
/// exceeds `c`.
pub fn exp_triple_member(a: u64, b: u64, c: u64) -> bool {
    let target = BigInt::from(c);
    let base = BigInt::from(a);
    let mut power = BigInt::one();
    for _ in 0..b {
        power *= &base;
        if power > target {
            return false;
        }
    }
    power == target
}

/// Classification of one parameter value in [`verify_representation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AgreementClass {
    /// Reference says member and a witness was found.
    AgreePositive,
    /// Reference says non-member and the box is exhaustively empty.
    AgreeNegative,
    /// Reference says non-member but a witness was found: always a bug.
    Disagree,
    /// Reference says member but no witness within the bound.
    Unresolved,
}

/// Desk-scale check of a Diophantine representation against a reference
/// predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub t_lo: u64,
    pub t_hi: u64,
    pub witness_bound: u64,
    pub agree_positive: u64,
    pub agree_negative: u64,
    /// Parameter values in each problem class, in increasing order.
    pub disagreements: Vec<u64>,
    pub unresolved: Vec<u64>,
}

impl VerificationReport {
    pub fn clean(&self) -> bool {
        self.disagreements.is_empty() && self.unresolved.is_empty()
    }
}

/// For each `t` in `[t_lo, t_hi]`, compare box-search solvability (bound
/// `witness_bound`) with the reference predicate and tally the four
/// agreement classes.
pub fn verify_representation(
    fam: &DiophantineFamily,
    reference: &DecidablePredicate,
    t_lo: u64,
    t_hi: u64,
    witness_bound: u64,
) -> Result<VerificationReport, DecideError> {
    let mut report = VerificationReport {
        t_lo,
        t_hi,
        witness_bound,
        agree_positive: 0,
        agree_negative: 0,
        disagreements: Vec::new(),
        unresolved: Vec::new(),
    };
    for t in t_lo..=t_hi {
        let member = reference.decide(t)?;
        let solved = matches!(
            search_solution(fam, t, SearchStrategy::Box { bound: witness_bound }),
            SearchResult::Solvable { .. }
        );
        match (member, solved) {
            (true, true) => report.agree_positive += 1,
            (false, false) => report.agree_negative += 1,
            (false, true) => report.disagreements.push(t),
            (true, false) => report.unresolved.push(t),
        }
    }
    Ok(report)
}
