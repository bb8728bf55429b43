//! The MIU string-rewriting system standing in for "a formalizable theory":
//! countable alphabet {M, I, U}, axiom MI, four inference rules. Sentences
//! are put in bijection with the naturals length-lexicographically, and the
//! theorem set is exposed as a listable set of sentence indices.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::sets::{Enumerator, Pull, PullError};

/// Sentence-length cap that keeps the breadth-first closure finite.
pub const DEFAULT_LENGTH_CAP: usize = 12;

/// Longest sentence whose length-lex index fits in a u64.
const MAX_INDEXABLE_LEN: usize = 39;

/// A nonempty string over the alphabet {M, I, U}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sentence {
    text: String,
}

/// Error constructing a [`Sentence`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SentenceError {
    #[error("sentence must be nonempty")]
    Empty,
    #[error("character {0:?} is not in the alphabet M, I, U")]
    BadCharacter(char),
}

impl Sentence {
    pub fn new(text: &str) -> Result<Sentence, SentenceError> {
        if text.is_empty() {
            return Err(SentenceError::Empty);
        }
        for c in text.chars() {
            if !matches!(c, 'M' | 'I' | 'U') {
                return Err(SentenceError::BadCharacter(c));
            }
        }
        Ok(Sentence {
            text: text.to_string(),
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Count of 'I' characters; the MIU invariant tracks it modulo 3.
    pub fn i_count(&self) -> usize {
        self.text.bytes().filter(|&b| b == b'I').count()
    }
}

impl std::fmt::Display for Sentence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

fn digit_of(b: u8) -> u64 {
    match b {
        b'M' => 0,
        b'I' => 1,
        _ => 2,
    }
}

fn char_of(d: u64) -> char {
    match d {
        0 => 'M',
        1 => 'I',
        _ => 'U',
    }
}

/// Index `n` in the length-lexicographic order of nonempty sentences with
/// alphabet order M < I < U: M, I, U, MM, MI, MU, IM, ...
pub fn sentence_of_index(n: u64) -> Sentence {
    // Strings of length k occupy indices [(3^k - 3)/2, (3^{k+1} - 3)/2).
    let mut k = 1usize;
    let mut start: u64 = 0;
    let mut block: u64 = 3;
    while n >= start + block {
        start += block;
        block *= 3;
        k += 1;
    }
    let mut offset = n - start;
    let mut chars = vec!['M'; k];
    for i in (0..k).rev() {
        chars[i] = char_of(offset % 3);
        offset /= 3;
    }
    Sentence {
        text: chars.into_iter().collect(),
    }
}

/// Inverse of [`sentence_of_index`]. Panics for sentences longer than 39
/// characters, whose indices do not fit in a u64.
pub fn index_of_sentence(s: &Sentence) -> u64 {
    let k = s.len();
    assert!(
        k <= MAX_INDEXABLE_LEN,
        "sentence length {k} exceeds the u64 index range"
    );
    let mut start: u64 = 0;
    let mut block: u64 = 3;
    for _ in 1..k {
        start += block;
        block *= 3;
    }
    let mut offset: u64 = 0;
    for b in s.text.bytes() {
        offset = offset * 3 + digit_of(b);
    }
    start + offset
}

/// All rule applications to `s`, in rule order, positions left to right:
/// append U after a trailing I; double everything after a leading M;
/// replace one occurrence of III by U; delete one occurrence of UU.
fn successors(s: &Sentence, length_cap: usize) -> Vec<Sentence> {
    let text = s.text.as_bytes();
    let mut out = Vec::new();
    let mut push = |t: String| {
        if !t.is_empty() && t.len() <= length_cap {
            out.push(Sentence { text: t });
        }
    };
    if text.ends_with(b"I") {
        push(format!("{}U", s.text));
    }
    if let Some(rest) = s.text.strip_prefix('M') {
        push(format!("M{rest}{rest}"));
    }
    for i in 0..text.len().saturating_sub(2) {
        if &text[i..i + 3] == b"III" {
            push(format!("{}U{}", &s.text[..i], &s.text[i + 3..]));
        }
    }
    for i in 0..text.len().saturating_sub(1) {
        if &text[i..i + 2] == b"UU" {
            push(format!("{}{}", &s.text[..i], &s.text[i + 2..]));
        }
    }
    out
}

/// Breadth-first closure of the axiom MI under the four rules, truncated
/// at `depth` derivation steps and at sentences longer than `length_cap`.
pub fn miu_theorems_capped(depth: u32, length_cap: usize) -> BTreeSet<Sentence> {
    let axiom = Sentence::new("MI").unwrap();
    let mut known: HashSet<Sentence> = HashSet::new();
    known.insert(axiom.clone());
    let mut frontier = vec![axiom];
    for _ in 0..depth {
        let mut next = Vec::new();
        for s in &frontier {
            for t in successors(s, length_cap) {
                if known.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    known.into_iter().collect()
}

/// [`miu_theorems_capped`] at the default length cap of 12.
pub fn miu_theorems(depth: u32) -> BTreeSet<Sentence> {
    miu_theorems_capped(depth, DEFAULT_LENGTH_CAP)
}

/// Emits the length-lex indices of MIU theorems in discovery order of the
/// capped breadth-first search, then exhausts. One work unit per sentence
/// expansion.
pub struct TheoremEnumerator {
    length_cap: usize,
    queue: VecDeque<Sentence>,
    known: HashSet<Sentence>,
    ready: VecDeque<Sentence>,
    work: u64,
}

impl Enumerator for TheoremEnumerator {
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError> {
        if let Some(s) = self.ready.pop_front() {
            return Ok(Pull::Item(index_of_sentence(&s)));
        }
        for _ in 0..budget {
            let Some(s) = self.queue.pop_front() else {
                return Ok(Pull::Exhausted);
            };
            self.work += 1;
            for t in successors(&s, self.length_cap) {
                if self.known.insert(t.clone()) {
                    self.queue.push_back(t.clone());
                    self.ready.push_back(t);
                }
            }
            if let Some(s) = self.ready.pop_front() {
                return Ok(Pull::Item(index_of_sentence(&s)));
            }
        }
        Ok(Pull::BudgetExceeded)
    }

    fn work_done(&self) -> u64 {
        self.work
    }
}

/// The theorem set as a listable set, at the default length cap. The first
/// item is the axiom's own index.
pub fn theorem_set_enumerator() -> TheoremEnumerator {
    let axiom = Sentence::new("MI").unwrap();
    let mut known = HashSet::new();
    known.insert(axiom.clone());
    let mut queue = VecDeque::new();
    queue.push_back(axiom.clone());
    let mut ready = VecDeque::new();
    ready.push_back(axiom);
    TheoremEnumerator {
        length_cap: DEFAULT_LENGTH_CAP,
        queue,
        known,
        ready,
        work: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets;

    #[test]
    fn sentence_validation() {
        assert!(Sentence::new("MIU").is_ok());
        assert_eq!(Sentence::new(""), Err(SentenceError::Empty));
        assert_eq!(Sentence::new("MIX"), Err(SentenceError::BadCharacter('X')));
    }

    #[test]
    fn index_examples() {
        assert_eq!(sentence_of_index(0).text(), "M");
        assert_eq!(sentence_of_index(1).text(), "I");
        assert_eq!(sentence_of_index(2).text(), "U");
        assert_eq!(sentence_of_index(3).text(), "MM");
        assert_eq!(sentence_of_index(4).text(), "MI");
    }

    #[test]
    fn index_bijection() {
        for n in 0..10_000u64 {
            assert_eq!(index_of_sentence(&sentence_of_index(n)), n);
        }
    }

    #[test]
    fn index_order_is_length_lex() {
        // Lexicographic in the alphabet order M < I < U, not in ASCII.
        let key = |s: &Sentence| -> (usize, Vec<u64>) {
            (s.len(), s.text().bytes().map(digit_of).collect())
        };
        let mut prev = sentence_of_index(0);
        for n in 1..2_000u64 {
            let cur = sentence_of_index(n);
            assert!(key(&prev) < key(&cur), "order break at {n}");
            prev = cur;
        }
    }

    #[test]
    fn depth_zero_is_axiom() {
        let t = miu_theorems(0);
        assert_eq!(t.len(), 1);
        assert!(t.contains(&Sentence::new("MI").unwrap()));
    }

    #[test]
    fn depth_one_contains_miu() {
        let t = miu_theorems(1);
        assert!(t.contains(&Sentence::new("MIU").unwrap()));
        assert!(t.contains(&Sentence::new("MII").unwrap()));
    }

    #[test]
    fn rules_apply_at_every_position() {
        let s = Sentence::new("MUUIUU").unwrap();
        let next = successors(&s, 12);
        assert!(next.contains(&Sentence::new("MIUU").unwrap()));
        assert!(next.contains(&Sentence::new("MUUI").unwrap()));
        let s = Sentence::new("MIIII").unwrap();
        let next = successors(&s, 12);
        assert!(next.contains(&Sentence::new("MUI").unwrap()));
        assert!(next.contains(&Sentence::new("MIU").unwrap()));
    }

    #[test]
    fn i_count_never_divisible_by_three() {
        for s in miu_theorems(8) {
            assert!(s.i_count() % 3 != 0, "invariant broken by {s}");
        }
    }

    #[test]
    fn mu_is_never_derived() {
        let mu = Sentence::new("MU").unwrap();
        assert!(!miu_theorems(8).contains(&mu));
    }

    #[test]
    fn enumerator_matches_closure() {
        let mut e = theorem_set_enumerator();
        let mut emitted = BTreeSet::new();
        loop {
            match e.pull(10_000).unwrap() {
                Pull::Item(i) => {
                    assert!(emitted.insert(i), "duplicate emission {i}");
                }
                Pull::Exhausted => break,
                Pull::BudgetExceeded => continue,
            }
        }
        // Unlimited depth runs the capped closure to its fixpoint.
        let expected: BTreeSet<u64> =
            miu_theorems(u32::MAX).iter().map(index_of_sentence).collect();
        assert_eq!(emitted, expected);
    }

    #[test]
    fn enumerator_first_item_is_axiom() {
        let mut e = theorem_set_enumerator();
        let first = sets::collect_items(&mut e, 1, 100).unwrap();
        assert_eq!(first, vec![index_of_sentence(&Sentence::new("MI").unwrap())]);
    }
}
