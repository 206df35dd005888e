//! Nondeterministic automata in an adjacency layout suited to enumeration.
//!
//! States are `0..state_count`. For each state `q` the outgoing transitions
//! are grouped into pairs `(a, targets)` sorted by increasing symbol, with no
//! empty and no duplicate target lists. A dense `(q, a)` index gives
//! constant-time access to a single target list.

use thiserror::Error;

use crate::alphabet::{Alphabet, Symbol};
use crate::counters;
use crate::state_set::SparseStateSet;

pub type StateId = usize;

const NO_PAIR: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("symbol '{0}' appears more than once in the alphabet")]
    DuplicateSymbol(char),
    #[error("state {state} is out of range (the automaton has {count} states)")]
    StateOutOfRange { state: StateId, count: usize },
    #[error("symbol index {index} is out of range (the alphabet has {size} symbols)")]
    SymbolOutOfRange { index: usize, size: usize },
    #[error("automaton too large: {0}")]
    TooLarge(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pair {
    symbol: Symbol,
    start: u32,
    end: u32,
}

#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: SparseStateSet,
    is_final: Vec<bool>,
    finals: Vec<StateId>,
    /// `pairs[offsets[q]..offsets[q + 1]]` is the adjacency of `q`.
    offsets: Vec<usize>,
    pairs: Vec<Pair>,
    targets: Vec<StateId>,
    /// `q * |Σ| + a` to an index into `pairs`, or `NO_PAIR`.
    by_symbol: Vec<u32>,
}

impl Nfa {
    /// Validates raw components and lays them out. Duplicate transitions,
    /// initial states and final states are collapsed.
    ///
    /// Transitions are `(from, symbol index, to)`. Runs in
    /// O(|Δ| + |Σ|·|Q|).
    pub fn build(
        glyphs: Vec<char>,
        state_count: usize,
        initial: &[StateId],
        finals: &[StateId],
        transitions: &[(StateId, usize, StateId)],
    ) -> Result<Nfa, BuildError> {
        let alphabet = Alphabet::new(glyphs).map_err(BuildError::DuplicateSymbol)?;
        Nfa::with_alphabet(alphabet, state_count, initial, finals, transitions)
    }

    pub fn with_alphabet(
        alphabet: Alphabet,
        state_count: usize,
        initial: &[StateId],
        finals: &[StateId],
        transitions: &[(StateId, usize, StateId)],
    ) -> Result<Nfa, BuildError> {
        let sigma = alphabet.len();
        let check_state = |q: StateId| {
            if q < state_count {
                Ok(q)
            } else {
                Err(BuildError::StateOutOfRange { state: q, count: state_count })
            }
        };
        for &q in initial.iter().chain(finals) {
            check_state(q)?;
        }
        for &(p, a, q) in transitions {
            check_state(p)?;
            check_state(q)?;
            if a >= sigma {
                return Err(BuildError::SymbolOutOfRange { index: a, size: sigma });
            }
        }
        if transitions.len() >= NO_PAIR as usize {
            return Err(BuildError::TooLarge("more than 2^32 - 1 transitions"));
        }
        let keys = state_count
            .checked_mul(sigma)
            .ok_or(BuildError::TooLarge("|Q|·|Σ| overflows"))?;

        // Counting sort of the triples by (from, symbol).
        let mut start = vec![0usize; keys + 1];
        for &(p, a, _) in transitions {
            start[p * sigma + a + 1] += 1;
        }
        for k in 0..keys {
            start[k + 1] += start[k];
        }
        let mut fill = start.clone();
        let mut sorted = vec![0; transitions.len()];
        for &(p, a, q) in transitions {
            let k = p * sigma + a;
            sorted[fill[k]] = q;
            fill[k] += 1;
        }

        // Deduplicate each bucket with a stamp per target state.
        let mut stamp = vec![usize::MAX; state_count];
        let mut targets = Vec::with_capacity(transitions.len());
        let mut pairs = Vec::new();
        let mut offsets = Vec::with_capacity(state_count + 1);
        let mut by_symbol = vec![NO_PAIR; keys];
        for q in 0..state_count {
            offsets.push(pairs.len());
            for a in 0..sigma {
                let k = q * sigma + a;
                let begin = targets.len();
                for &t in &sorted[start[k]..start[k + 1]] {
                    if stamp[t] != k {
                        stamp[t] = k;
                        targets.push(t);
                    }
                }
                if targets.len() > begin {
                    by_symbol[k] = pairs.len() as u32;
                    pairs.push(Pair {
                        symbol: Symbol::new(a),
                        start: begin as u32,
                        end: targets.len() as u32,
                    });
                }
            }
        }
        offsets.push(pairs.len());

        let initial = SparseStateSet::from_states(state_count, initial.iter().copied());
        let mut is_final = vec![false; state_count];
        let mut final_list = Vec::new();
        for &q in finals {
            if !is_final[q] {
                is_final[q] = true;
                final_list.push(q);
            }
        }

        Ok(Nfa {
            alphabet,
            state_count,
            initial,
            is_final,
            finals: final_list,
            offsets,
            pairs,
            targets,
            by_symbol,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    /// Number of distinct transitions, |Δ|.
    pub fn transition_count(&self) -> usize {
        self.targets.len()
    }

    pub fn initial(&self) -> &SparseStateSet {
        &self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.is_final[q]
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    /// Δ(q): the pairs `(a, Δ(q, a))` with non-empty target lists, by
    /// increasing `a`.
    pub fn delta(&self, q: StateId) -> Adjacency<'_> {
        Adjacency {
            pairs: self.pairs[self.offsets[q]..self.offsets[q + 1]].iter(),
            targets: &self.targets,
        }
    }

    /// Δ(q, a) in constant time; empty if there is no such transition.
    pub fn delta_on(&self, q: StateId, a: Symbol) -> &[StateId] {
        match self.by_symbol[q * self.alphabet.len() + a.index()] {
            NO_PAIR => &[],
            i => {
                let p = self.pairs[i as usize];
                &self.targets[p.start as usize..p.end as usize]
            }
        }
    }

    /// All transitions as `(from, symbol, to)`, grouped by source state and
    /// then by symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        (0..self.state_count)
            .flat_map(move |q| self.delta(q).flat_map(move |(a, ts)| ts.iter().map(move |&t| (q, a, t))))
    }

    /// Adds Δ(q, symbol) into `into` for every `q` in `from`.
    ///
    /// `into` is expected to be empty; the result is the union of the target
    /// lists, without duplicates.
    pub fn step_into(&self, from: &SparseStateSet, symbol: Symbol, into: &mut SparseStateSet) {
        debug_assert!(into.is_empty());
        for q in from {
            let ts = self.delta_on(q, symbol);
            counters::count(1);
            for &t in ts {
                into.insert(t);
            }
        }
    }

    /// Returns a fresh set holding Δ(from, symbol).
    pub fn step(&self, from: &SparseStateSet, symbol: Symbol) -> SparseStateSet {
        let mut out = SparseStateSet::new(self.state_count);
        self.step_into(from, symbol, &mut out);
        out
    }
}

/// Iterator over Δ(q).
#[derive(Clone)]
pub struct Adjacency<'a> {
    pairs: std::slice::Iter<'a, Pair>,
    targets: &'a [StateId],
}

impl<'a> Iterator for Adjacency<'a> {
    type Item = (Symbol, &'a [StateId]);

    fn next(&mut self) -> Option<Self::Item> {
        self.pairs
            .next()
            .map(|p| (p.symbol, &self.targets[p.start as usize..p.end as usize]))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.pairs.size_hint()
    }
}

impl DoubleEndedIterator for Adjacency<'_> {
    fn next_back(&mut self) -> Option<Self::Item> {
        self.pairs
            .next_back()
            .map(|p| (p.symbol, &self.targets[p.start as usize..p.end as usize]))
    }
}

impl ExactSizeIterator for Adjacency<'_> {}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{BTreeMap, BTreeSet};

    /// Σ = [a, b], I = {0}, F = {1}, Δ = {(0,a,0), (0,b,1), (1,a,1)}; L = a*ba*.
    pub(crate) fn a1() -> Nfa {
        Nfa::build(vec!['a', 'b'], 2, &[0], &[1], &[(0, 0, 0), (0, 1, 1), (1, 0, 1)]).unwrap()
    }

    fn sym(i: usize) -> Symbol {
        Symbol::new(i)
    }

    #[test]
    fn a1_layout() {
        let nfa = a1();
        let d0: Vec<_> = nfa.delta(0).map(|(a, ts)| (a.index(), ts.to_vec())).collect();
        let d1: Vec<_> = nfa.delta(1).map(|(a, ts)| (a.index(), ts.to_vec())).collect();
        assert_eq!(d0, vec![(0, vec![0]), (1, vec![1])]);
        assert_eq!(d1, vec![(0, vec![1])]);
        assert_eq!(nfa.transition_count(), 3);
    }

    #[test]
    fn no_transitions_gives_empty_adjacency() {
        let nfa = Nfa::build(vec!['a'], 1, &[0], &[0], &[]).unwrap();
        assert_eq!(nfa.delta(0).len(), 0);
    }

    #[test]
    fn duplicate_transitions_collapse() {
        let nfa = Nfa::build(vec!['a'], 2, &[0], &[1], &[(0, 0, 1), (0, 0, 1)]).unwrap();
        assert_eq!(nfa.delta_on(0, sym(0)), &[1]);
        assert_eq!(nfa.transition_count(), 1);
    }

    #[test]
    fn rejects_bad_references() {
        assert_eq!(
            Nfa::build(vec!['a'], 2, &[2], &[], &[]).unwrap_err(),
            BuildError::StateOutOfRange { state: 2, count: 2 }
        );
        assert_eq!(
            Nfa::build(vec!['a'], 2, &[], &[], &[(0, 1, 0)]).unwrap_err(),
            BuildError::SymbolOutOfRange { index: 1, size: 1 }
        );
        assert_eq!(
            Nfa::build(vec!['a', 'a'], 1, &[], &[], &[]).unwrap_err(),
            BuildError::DuplicateSymbol('a')
        );
    }

    #[test]
    fn zero_states() {
        let nfa = Nfa::build(vec!['a'], 0, &[], &[], &[]).unwrap();
        assert_eq!(nfa.state_count(), 0);
        assert!(Nfa::build(vec!['a'], 0, &[0], &[], &[]).is_err());
        assert!(Nfa::build(vec!['a'], 0, &[], &[0], &[]).is_err());
    }

    #[test]
    fn step_examples() {
        let nfa = a1();
        let s0 = SparseStateSet::from_states(2, [0]);
        let s1 = SparseStateSet::from_states(2, [1]);
        let s01 = SparseStateSet::from_states(2, [0, 1]);
        assert_eq!(nfa.step(&s0, sym(1)).as_slice(), &[1]);
        assert!(nfa.step(&s1, sym(1)).is_empty());
        let mut both: Vec<_> = nfa.step(&s01, sym(0)).iter().collect();
        both.sort_unstable();
        assert_eq!(both, vec![0, 1]);
    }

    prop_compose! {
        fn raw_nfa()(q in 1usize..7, s in 1usize..4)
            (triples in proptest::collection::vec((0..q, 0..s, 0..q), 0..40), q in Just(q), s in Just(s))
            -> (usize, usize, Vec<(usize, usize, usize)>) {
            (q, s, triples)
        }
    }

    proptest! {
        #[test]
        fn adjacency_matches_naive_map((q, s, triples) in raw_nfa()) {
            let glyphs: Vec<char> = "abc".chars().take(s).collect();
            let nfa = Nfa::build(glyphs, q, &[0], &[], &triples).unwrap();
            let mut naive: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
            for &(p, a, t) in &triples {
                naive.entry((p, a)).or_default().insert(t);
            }
            for p in 0..q {
                let ids: Vec<usize> = nfa.delta(p).map(|(a, _)| a.index()).collect();
                prop_assert!(ids.windows(2).all(|w| w[0] < w[1]));
                for (a, ts) in nfa.delta(p) {
                    prop_assert!(!ts.is_empty());
                    let set: BTreeSet<usize> = ts.iter().copied().collect();
                    prop_assert_eq!(set.len(), ts.len());
                    prop_assert_eq!(Some(&set), naive.get(&(p, a.index())));
                }
                for a in 0..s {
                    let got: BTreeSet<usize> = nfa.delta_on(p, sym(a)).iter().copied().collect();
                    prop_assert_eq!(got, naive.get(&(p, a)).cloned().unwrap_or_default());
                }
            }
            let distinct: BTreeSet<_> = triples.iter().collect();
            prop_assert_eq!(nfa.transition_count(), distinct.len());
        }

        #[test]
        fn step_matches_naive_double_loop((q, s, triples) in raw_nfa(), bits in 0u32..128, a in 0usize..3) {
            prop_assume!(a < s);
            let glyphs: Vec<char> = "abc".chars().take(s).collect();
            let nfa = Nfa::build(glyphs, q, &[], &[], &triples).unwrap();
            let from: Vec<usize> = (0..q).filter(|i| bits & (1 << i) != 0).collect();
            let set = SparseStateSet::from_states(q, from.iter().copied());
            let got: BTreeSet<usize> = nfa.step(&set, sym(a)).iter().collect();
            let mut want = BTreeSet::new();
            for &p in &from {
                for &(x, b, t) in &triples {
                    if x == p && b == a {
                        want.insert(t);
                    }
                }
            }
            prop_assert_eq!(got, want);
        }
    }
}
