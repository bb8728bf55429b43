//! Listable sets made concrete: budgeted pull-based enumerators, the Cantor
//! pairing bijection and tuple codecs built on it, predicate-driven
//! enumeration, and dovetailing over tuple spaces.
//!
//! An enumerator is allowed to run forever in principle; here every pull
//! carries an explicit work budget so that each call terminates. Running out
//! of budget is a normal outcome ([`Pull::BudgetExceeded`]), not an error.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::machine::{self, Program, RunStatus};

/// Outcome of pulling on an [`Enumerator`] with a work budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pull {
    /// The next element of the enumerated set.
    Item(u64),
    /// The enumerator has emitted everything it ever will. Absorbing.
    Exhausted,
    /// The budget ran out before the next item was found. Pulling again
    /// resumes where this pull stopped.
    BudgetExceeded,
}

/// Error raised by a pull, distinct from running out of budget.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PullError {
    /// A program-backed decider hit its fuel bound, so membership of `input`
    /// could not be decided either way.
    #[error("decider exhausted its fuel on input {input}")]
    DeciderFuelExhausted { input: u64 },
}

/// A resumable cursor over a set of naturals.
///
/// Successive pulls with adequate budget reproduce one fixed output sequence;
/// the cursor owns its state and may be moved between threads but not shared.
pub trait Enumerator: Send {
    /// Produce the next item, spending at most `budget` work units.
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError>;

    /// Total work units this cursor has consumed since creation.
    fn work_done(&self) -> u64;
}

/// Cantor pairing: `pair(x, y) = (x + y)(x + y + 1)/2 + y`, a bijection
/// from pairs of naturals onto the naturals.
pub fn pair(x: u64, y: u64) -> u64 {
    let s = x as u128 + y as u128;
    let n = s * (s + 1) / 2 + y as u128;
    u64::try_from(n).expect("cantor pair overflows u64")
}

/// Inverse of [`pair`]: `unpair(pair(x, y)) == (x, y)`.
pub fn unpair(n: u64) -> (u64, u64) {
    // Largest w with w(w+1)/2 <= n.
    let w = ((8 * n as u128 + 1).isqrt() - 1) / 2;
    let t = w * (w + 1) / 2;
    let y = (n as u128 - t) as u64;
    (w as u64 - y, y)
}

/// Right-nested iterated pairing. `encode([]) = 0`, `encode([x]) = x`,
/// `encode([x, rest..]) = pair(x, encode(rest))`.
pub fn tuple_encode(xs: &[u64]) -> u64 {
    match xs {
        [] => 0,
        [x] => *x,
        [x, rest @ ..] => pair(*x, tuple_encode(rest)),
    }
}

/// Decode `n` as a `k`-tuple. Inverse of [`tuple_encode`] for `k >= 1`.
///
/// Panics if `k == 0`.
pub fn tuple_decode(n: u64, k: usize) -> Vec<u64> {
    assert!(k >= 1, "tuple_decode requires k >= 1");
    let mut out = Vec::with_capacity(k);
    let mut rest = n;
    for _ in 0..k - 1 {
        let (x, r) = unpair(rest);
        out.push(x);
        rest = r;
    }
    out.push(rest);
    out
}

/// Cantor pairing over arbitrary-precision naturals, for Gödel numberings
/// whose codes outgrow a machine word.
pub fn pair_big(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

/// Inverse of [`pair_big`].
pub fn unpair_big(n: &BigUint) -> (BigUint, BigUint) {
    let w = ((n * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let y = n - t;
    let x = &w - &y;
    (x, y)
}

/// Right-nested iterated pairing over big naturals.
pub fn tuple_encode_big(xs: &[BigUint]) -> BigUint {
    match xs {
        [] => BigUint::zero(),
        [x] => x.clone(),
        [x, rest @ ..] => pair_big(x, &tuple_encode_big(rest)),
    }
}

/// Decode a big natural as a `k`-tuple. Panics if `k == 0`.
pub fn tuple_decode_big(n: &BigUint, k: usize) -> Vec<BigUint> {
    assert!(k >= 1, "tuple_decode requires k >= 1");
    let mut out = Vec::with_capacity(k);
    let mut rest = n.clone();
    for _ in 0..k - 1 {
        let (x, r) = unpair_big(&rest);
        out.push(x);
        rest = r;
    }
    out.push(rest);
    out
}

/// Error from [`DecidablePredicate::decide`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecideError {
    /// A program-backed decider ran out of fuel; it refuses to guess.
    #[error("decider exhausted its fuel on input {input}")]
    FuelExhausted { input: u64 },
}

enum Decider {
    Native(Box<dyn Fn(u64) -> bool + Send + Sync>),
    /// Run the program on `[n]`; the answer is `Y != 0`. Fuel exhaustion is
    /// reported as an error rather than treated as either answer.
    Machine { program: Program, fuel: u64 },
}

/// A total membership test for a subset of the naturals, backed either by
/// native code or by a register-machine program with a per-call fuel bound.
pub struct DecidablePredicate {
    name: &'static str,
    decider: Decider,
}

impl DecidablePredicate {
    pub fn native(
        name: &'static str,
        f: impl Fn(u64) -> bool + Send + Sync + 'static,
    ) -> Self {
        DecidablePredicate {
            name,
            decider: Decider::Native(Box::new(f)),
        }
    }

    /// Decide by running `program` on input `[n]` with the given fuel;
    /// nonzero `Y` means membership.
    pub fn from_program(name: &'static str, program: Program, fuel: u64) -> Self {
        DecidablePredicate {
            name,
            decider: Decider::Machine { program, fuel },
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn decide(&self, n: u64) -> Result<bool, DecideError> {
        match &self.decider {
            Decider::Native(f) => Ok(f(n)),
            Decider::Machine { program, fuel } => {
                let outcome = machine::run(program, &[n], *fuel);
                match outcome.status {
                    RunStatus::Halted => Ok(outcome.output != 0),
                    RunStatus::FuelExhausted => Err(DecideError::FuelExhausted { input: n }),
                }
            }
        }
    }

    /// The even numbers.
    pub fn even() -> Self {
        Self::native("even", |n| n % 2 == 0)
    }

    /// The primes, by trial division.
    pub fn prime() -> Self {
        Self::native("prime", is_prime)
    }

    /// The composite numbers (a product of two factors both at least 2).
    pub fn composite() -> Self {
        Self::native("composite", is_composite)
    }

    /// The perfect squares.
    pub fn square() -> Self {
        Self::native("square", |n| {
            let r = n.isqrt();
            r * r == n
        })
    }

    pub fn constant(name: &'static str, value: bool) -> Self {
        Self::native(name, move |_| value)
    }
}

impl std::fmt::Debug for DecidablePredicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DecidablePredicate({})", self.name)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_composite(n: u64) -> bool {
    n >= 4 && !is_prime(n)
}

/// Enumerates `{ n : p(n) }` in strictly increasing order by walking the
/// naturals and testing each one. One work unit per candidate tested.
pub struct PredicateEnumerator {
    predicate: DecidablePredicate,
    next_candidate: u64,
    work: u64,
}

impl Enumerator for PredicateEnumerator {
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError> {
        for _ in 0..budget {
            let n = self.next_candidate;
            self.work += 1;
            let verdict = self.predicate.decide(n).map_err(|e| match e {
                DecideError::FuelExhausted { input } => PullError::DeciderFuelExhausted { input },
            })?;
            self.next_candidate += 1;
            if verdict {
                return Ok(Pull::Item(n));
            }
        }
        Ok(Pull::BudgetExceeded)
    }

    fn work_done(&self) -> u64 {
        self.work
    }
}

/// Wrap a decidable predicate as an enumerator of the set it decides.
pub fn enumerator_from_predicate(p: DecidablePredicate) -> PredicateEnumerator {
    PredicateEnumerator {
        predicate: p,
        next_candidate: 0,
        work: 0,
    }
}

/// Enumerates every `k`-tuple of naturals exactly once, as the codes
/// `0, 1, 2, ...` read through [`tuple_decode`]. One work unit per tuple.
pub struct DovetailTuples {
    k: usize,
    next_code: u64,
    work: u64,
}

impl DovetailTuples {
    pub fn arity(&self) -> usize {
        self.k
    }
}

impl Enumerator for DovetailTuples {
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError> {
        if budget == 0 {
            return Ok(Pull::BudgetExceeded);
        }
        let code = self.next_code;
        self.next_code += 1;
        self.work += 1;
        Ok(Pull::Item(code))
    }

    fn work_done(&self) -> u64 {
        self.work
    }
}

/// Dovetail over all `k`-tuples. Panics if `k == 0`.
pub fn dovetail_tuples(k: usize) -> DovetailTuples {
    assert!(k >= 1, "dovetail_tuples requires k >= 1");
    DovetailTuples {
        k,
        next_code: 0,
        work: 0,
    }
}

/// Verdict of a budgeted membership semi-decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Found,
    NotFoundWithinBudget,
    ExhaustedWithoutFinding,
}

/// Pull `e` until `n` appears, the total budget runs out, or the enumerator
/// exhausts. Never reports `Found` for a value the enumerator did not emit.
pub fn member_semidecide(
    e: &mut dyn Enumerator,
    n: u64,
    budget: u64,
) -> Result<Membership, PullError> {
    let mut remaining = budget;
    loop {
        if remaining == 0 {
            return Ok(Membership::NotFoundWithinBudget);
        }
        let before = e.work_done();
        let pull = e.pull(remaining)?;
        let spent = e.work_done().saturating_sub(before);
        remaining = remaining.saturating_sub(spent);
        match pull {
            Pull::Item(m) if m == n => return Ok(Membership::Found),
            Pull::Item(_) => continue,
            Pull::Exhausted => return Ok(Membership::ExhaustedWithoutFinding),
            Pull::BudgetExceeded => return Ok(Membership::NotFoundWithinBudget),
        }
    }
}

/// Drain up to `max_items` items from `e`, spending at most `budget` work in
/// total. Convenience used by the search harnesses and the CLI.
pub fn collect_items(
    e: &mut dyn Enumerator,
    max_items: usize,
    budget: u64,
) -> Result<Vec<u64>, PullError> {
    let mut out = Vec::new();
    let mut remaining = budget;
    while out.len() < max_items && remaining > 0 {
        let before = e.work_done();
        let pull = e.pull(remaining)?;
        remaining = remaining.saturating_sub(e.work_done().saturating_sub(before));
        match pull {
            Pull::Item(n) => out.push(n),
            Pull::Exhausted | Pull::BudgetExceeded => break,
        }
    }
    Ok(out)
}
