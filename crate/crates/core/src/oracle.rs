//! Brute-force reference implementations.
//!
//! These generate every word of a given length and filter by a naive subset
//! simulation. They share nothing with the table-driven enumerator beyond the
//! automaton type, and refuse inputs larger than a configurable cap.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::alphabet::{Symbol, Word};
use crate::automaton::{Nfa, StateId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("brute force over {sigma}^{length} words exceeds the cap of {cap}")]
pub struct CapExceeded {
    pub sigma: usize,
    pub length: usize,
    pub cap: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Largest |Σ|^ℓ the brute-force routines will enumerate.
    pub max_enumeration: u64,
}

impl Default for OracleConfig {
    fn default() -> OracleConfig {
        OracleConfig { max_enumeration: 1_000_000 }
    }
}

impl OracleConfig {
    fn check(&self, sigma: usize, length: usize) -> Result<(), CapExceeded> {
        let err = CapExceeded { sigma, length, cap: self.max_enumeration };
        let mut total: u64 = 1;
        for _ in 0..length {
            total = total.checked_mul(sigma as u64).ok_or_else(|| err.clone())?;
            if total > self.max_enumeration {
                return Err(err);
            }
        }
        Ok(())
    }

    /// All words of length `length` accepted by `nfa`, in lexicographic
    /// order.
    pub fn cross_section(&self, nfa: &Nfa, length: usize) -> Result<Vec<Word>, CapExceeded> {
        let start: BTreeSet<StateId> = nfa.initial().iter().collect();
        self.accepted_from(nfa, &start, length)
    }

    /// The lexicographically least word of length `length` accepted from
    /// state `q`.
    pub fn min_word(&self, nfa: &Nfa, q: StateId, length: usize) -> Result<Option<Word>, CapExceeded> {
        let start: BTreeSet<StateId> = [q].into_iter().collect();
        self.check(nfa.alphabet().len(), length)?;
        let rel = Relation::new(nfa);
        Ok(Odometer::new(nfa.alphabet().len(), length).find(|w| rel.accepts(&start, w)))
    }

    fn accepted_from(&self, nfa: &Nfa, start: &BTreeSet<StateId>, length: usize) -> Result<Vec<Word>, CapExceeded> {
        self.check(nfa.alphabet().len(), length)?;
        let rel = Relation::new(nfa);
        Ok(Odometer::new(nfa.alphabet().len(), length)
            .filter(|w| rel.accepts(start, w))
            .collect())
    }
}

/// Whether `nfa` accepts `word`.
pub fn member(nfa: &Nfa, word: &Word) -> bool {
    let start: BTreeSet<StateId> = nfa.initial().iter().collect();
    accepts_from(nfa, &start, word)
}

/// See [`OracleConfig::cross_section`]; uses the default cap.
pub fn cross_section_bruteforce(nfa: &Nfa, length: usize) -> Result<Vec<Word>, CapExceeded> {
    OracleConfig::default().cross_section(nfa, length)
}

/// See [`OracleConfig::min_word`]; uses the default cap.
pub fn min_word_oracle(nfa: &Nfa, q: StateId, length: usize) -> Result<Option<Word>, CapExceeded> {
    OracleConfig::default().min_word(nfa, q, length)
}

/// Transition relation as a plain `(state, symbol) -> targets` table, rebuilt
/// from the triples so it does not depend on the automaton's own index.
struct Relation {
    sigma: usize,
    table: Vec<Vec<StateId>>,
    finals: Vec<bool>,
}

impl Relation {
    fn new(nfa: &Nfa) -> Relation {
        let sigma = nfa.alphabet().len();
        let mut table = vec![Vec::new(); nfa.state_count() * sigma];
        for (p, a, q) in nfa.transitions() {
            table[p * sigma + a.index()].push(q);
        }
        let finals = (0..nfa.state_count()).map(|q| nfa.is_final(q)).collect();
        Relation { sigma, table, finals }
    }

    fn accepts(&self, start: &BTreeSet<StateId>, word: &Word) -> bool {
        let mut current = start.clone();
        for a in word.iter() {
            let mut next = BTreeSet::new();
            for &p in &current {
                next.extend(self.table[p * self.sigma + a.index()].iter().copied());
            }
            current = next;
        }
        current.iter().any(|&q| self.finals[q])
    }
}

fn accepts_from(nfa: &Nfa, start: &BTreeSet<StateId>, word: &Word) -> bool {
    Relation::new(nfa).accepts(start, word)
}

/// All words of a fixed length over `0..sigma`, in lexicographic order.
struct Odometer {
    digits: Vec<usize>,
    sigma: usize,
    done: bool,
}

impl Odometer {
    fn new(sigma: usize, length: usize) -> Odometer {
        Odometer { digits: vec![0; length], sigma, done: sigma == 0 && length > 0 }
    }
}

impl Iterator for Odometer {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out: Word = self.digits.iter().map(|&d| Symbol::new(d)).collect();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.sigma {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}
