//! Lexicographic enumeration of a cross-section, and radix order on top.
//!
//! The cursor keeps nothing between outputs except the last word: each step
//! replays the run of that word ([`RunStack::rebuild`]) and then searches
//! for the rightmost position that can be bumped to a larger letter
//! ([`next_word`]). Each output costs O(ℓ·|Δ|) once the tables exist (for
//! automata with |Σ| ≤ |Δ| and |Q| ≤ |Δ|).

use std::borrow::Cow;
use std::iter::FusedIterator;

use crate::alphabet::{Symbol, Word};
use crate::automaton::{Nfa, StateId};
use crate::counters;
use crate::preprocess::{preprocess, MinArrow, Tables};
use crate::state_set::SparseStateSet;

/// Appends to `out` the least word of length `k` accepted from some state in
/// `from`. Returns `false`, leaving `out` untouched, if there is none.
///
/// O(|from|) when nothing is found, O(k + |from|) otherwise.
pub fn min_word_into(k: usize, from: &SparseStateSet, tables: &Tables, out: &mut Word) -> bool {
    let Some(mut best) = from.first() else {
        return false;
    };
    let mut found = false;
    // One pass both detects an accepting state and selects a minimal one.
    for q in from {
        if !tables.min_arrow.get(k, q).is_bottom() {
            found = true;
        }
        if tables.comp.get(k, q, best) {
            best = q;
        }
    }
    if !found {
        return false;
    }
    let mut level = k;
    let mut state = best;
    loop {
        match tables.min_arrow.get(level, state) {
            MinArrow::Epsilon => return true,
            MinArrow::Arrow { symbol, target } => {
                out.push(symbol);
                state = target;
                level -= 1;
            }
            MinArrow::Bottom => unreachable!("minimal-word chain ends in bottom"),
        }
    }
}

/// The least word of length `k` accepted from some state in `from`.
pub fn min_word(k: usize, from: &SparseStateSet, tables: &Tables) -> Option<Word> {
    let mut w = Word::with_capacity(k);
    min_word_into(k, from, tables, &mut w).then_some(w)
}

/// The subset run of a word: level `i` holds the states reachable from the
/// initial states after reading the first `i` letters.
#[derive(Clone, Debug)]
pub struct RunStack {
    levels: Vec<SparseStateSet>,
    depth: usize,
}

impl RunStack {
    /// Allocates room for words of up to `length` letters.
    pub fn with_capacity(state_count: usize, length: usize) -> RunStack {
        RunStack {
            levels: (0..=length).map(|_| SparseStateSet::new(state_count)).collect(),
            depth: 0,
        }
    }

    pub fn build(word: &Word, nfa: &Nfa) -> RunStack {
        let mut stack = RunStack::with_capacity(nfa.state_count(), word.len());
        stack.rebuild(word, nfa);
        stack
    }

    /// Recomputes the run of `word`, reusing the existing allocations.
    /// O(|w|·(|Q| + |Δ|)).
    pub fn rebuild(&mut self, word: &Word, nfa: &Nfa) {
        while self.levels.len() <= word.len() {
            self.levels.push(SparseStateSet::new(nfa.state_count()));
        }
        let top = self.depth.max(word.len());
        for level in &mut self.levels[..=top] {
            level.clear();
        }
        self.levels[0].copy_from(nfa.initial());
        for (i, a) in word.iter().enumerate() {
            let (done, rest) = self.levels.split_at_mut(i + 1);
            nfa.step_into(&done[i], a, &mut rest[0]);
        }
        self.depth = word.len();
    }

    /// Number of levels, |w| + 1.
    pub fn len(&self) -> usize {
        self.depth + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn level(&self, i: usize) -> &SparseStateSet {
        assert!(i <= self.depth, "level {i} above the top of the run stack");
        &self.levels[i]
    }

    pub fn top(&self) -> &SparseStateSet {
        &self.levels[self.depth]
    }
}

/// Reusable working memory for [`next_word`]. Empty between calls.
#[derive(Clone, Debug)]
pub struct Scratch {
    set: SparseStateSet,
    /// For each symbol, the states of the current level with a transition on
    /// it.
    buckets: Vec<Vec<StateId>>,
}

impl Scratch {
    pub fn new(nfa: &Nfa) -> Scratch {
        counters::count(nfa.alphabet().len() as u64);
        Scratch {
            set: SparseStateSet::new(nfa.state_count()),
            buckets: vec![Vec::new(); nfa.alphabet().len()],
        }
    }

    pub fn is_clean(&self) -> bool {
        self.set.is_empty() && self.buckets.iter().all(Vec::is_empty)
    }
}

/// Rewrites `word` in place into its successor in the cross-section.
/// Returns `false` when `word` is the last one, in which case `word` is left
/// truncated to an unspecified prefix.
///
/// `stack` must be the run of `word`; `scratch` must be clean, and is clean
/// again on return.
pub fn advance(word: &mut Word, nfa: &Nfa, stack: &RunStack, tables: &Tables, scratch: &mut Scratch) -> bool {
    let length = word.len();
    debug_assert!(scratch.is_clean());
    debug_assert_eq!(stack.len(), length + 1);
    let sigma = nfa.alphabet().len();

    // The top level (after the whole word) is never needed.
    for i in (0..length).rev() {
        let cur = stack.level(i);
        let old = word[i];

        // Group the states of `cur` by the letters above `old` they can read.
        for q in cur {
            counters::count(1);
            for (a, _) in nfa.delta(q).rev() {
                counters::count(1);
                if a <= old {
                    break;
                }
                scratch.buckets[a.index()].push(q);
            }
        }

        for ai in old.index() + 1..sigma {
            counters::count(1);
            if scratch.buckets[ai].is_empty() {
                continue;
            }
            let a = Symbol::new(ai);
            let mut sources = std::mem::take(&mut scratch.buckets[ai]);
            for &q in &sources {
                counters::count(1);
                for &t in nfa.delta_on(q, a) {
                    scratch.set.insert(t);
                }
            }
            counters::count(sources.len() as u64);
            sources.clear();
            scratch.buckets[ai] = sources;

            let suffix = length - i - 1;
            word.truncate(i);
            word.push(a);
            let found = min_word_into(suffix, &scratch.set, tables, word);
            scratch.set.clear();
            if found {
                for rest in &mut scratch.buckets[ai + 1..] {
                    counters::count(rest.len() as u64);
                    rest.clear();
                }
                return true;
            }
            word.truncate(i);
        }
    }
    false
}

/// The least accepted word of the same length strictly greater than `word`,
/// or `None`.
pub fn next_word(word: &Word, nfa: &Nfa, stack: &RunStack, tables: &Tables, scratch: &mut Scratch) -> Option<Word> {
    let mut next = word.clone();
    advance(&mut next, nfa, stack, tables, scratch).then_some(next)
}

#[derive(Clone, Debug)]
enum Position {
    Start,
    At(Word),
    Exhausted,
}

/// Iterator over the accepted words of one length, in lexicographic order.
pub struct CrossSection<'a> {
    nfa: &'a Nfa,
    tables: Cow<'a, Tables>,
    length: usize,
    position: Position,
    stack: RunStack,
    scratch: Scratch,
}

impl<'a> CrossSection<'a> {
    /// Builds the tables for `length` and positions the cursor before the
    /// first word.
    pub fn new(nfa: &'a Nfa, length: usize) -> CrossSection<'a> {
        let tables = preprocess(nfa, length);
        CrossSection::from_cow(nfa, Cow::Owned(tables), length, Position::Start)
    }

    /// Uses tables computed elsewhere. `length` may be at most the tables'
    /// length.
    pub fn with_tables(nfa: &'a Nfa, tables: &'a Tables, length: usize) -> CrossSection<'a> {
        assert!(length <= tables.length(), "tables only cover lengths up to {}", tables.length());
        CrossSection::from_cow(nfa, Cow::Borrowed(tables), length, Position::Start)
    }

    /// A cursor whose next output is the successor of `last`. Since the
    /// enumeration carries no other state, this reproduces exactly the tail
    /// an uninterrupted cursor would produce after `last`.
    pub fn resume_after(nfa: &'a Nfa, tables: &'a Tables, last: Word) -> CrossSection<'a> {
        let length = last.len();
        assert!(length <= tables.length(), "tables only cover lengths up to {}", tables.length());
        CrossSection::from_cow(nfa, Cow::Borrowed(tables), length, Position::At(last))
    }

    fn from_cow(nfa: &'a Nfa, tables: Cow<'a, Tables>, length: usize, position: Position) -> CrossSection<'a> {
        assert_eq!(tables.state_count(), nfa.state_count(), "tables built for another automaton");
        CrossSection {
            nfa,
            tables,
            length,
            position,
            stack: RunStack::with_capacity(nfa.state_count(), length),
            scratch: Scratch::new(nfa),
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    /// The last word produced, if any.
    pub fn current(&self) -> Option<&Word> {
        match &self.position {
            Position::At(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.position, Position::Exhausted)
    }

    #[cfg(test)]
    pub(crate) fn scratch_is_clean(&self) -> bool {
        self.scratch.is_clean()
    }
}

impl Iterator for CrossSection<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        match &mut self.position {
            Position::Exhausted => None,
            Position::Start => {
                let mut w = Word::with_capacity(self.length);
                if min_word_into(self.length, self.nfa.initial(), &self.tables, &mut w) {
                    self.position = Position::At(w.clone());
                    Some(w)
                } else {
                    self.position = Position::Exhausted;
                    None
                }
            }
            Position::At(w) => {
                self.stack.rebuild(w, self.nfa);
                if advance(w, self.nfa, &self.stack, &self.tables, &mut self.scratch) {
                    Some(w.clone())
                } else {
                    self.position = Position::Exhausted;
                    None
                }
            }
        }
    }
}

impl FusedIterator for CrossSection<'_> {}

/// Iterator over an automaton's language in radix (shortlex) order, one
/// cross-section at a time.
///
/// Stops after `max_length` or `limit`, whichever comes first, and also as
/// soon as no longer word can be accepted. Without either bound it runs
/// forever on an infinite language.
pub struct RadixOrder<'a> {
    nfa: &'a Nfa,
    max_length: Option<usize>,
    remaining: Option<usize>,
    length: usize,
    section: Option<CrossSection<'a>>,
    productive: Vec<bool>,
    /// Productive states reachable by exactly `length` letters.
    frontier: SparseStateSet,
    spare: SparseStateSet,
    done: bool,
}

impl<'a> RadixOrder<'a> {
    pub fn new(nfa: &'a Nfa, max_length: Option<usize>, limit: Option<usize>) -> RadixOrder<'a> {
        let productive = productive_states(nfa);
        let mut frontier = SparseStateSet::new(nfa.state_count());
        for q in nfa.initial() {
            if productive[q] {
                frontier.insert(q);
            }
        }
        RadixOrder {
            nfa,
            max_length,
            remaining: limit,
            length: 0,
            section: None,
            productive,
            frontier,
            spare: SparseStateSet::new(nfa.state_count()),
            done: false,
        }
    }

    fn advance_frontier(&mut self) {
        self.spare.clear();
        for q in &self.frontier {
            for (_, targets) in self.nfa.delta(q) {
                for &t in targets {
                    if self.productive[t] {
                        self.spare.insert(t);
                    }
                }
            }
        }
        std::mem::swap(&mut self.frontier, &mut self.spare);
    }
}

impl Iterator for RadixOrder<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        loop {
            if let Some(section) = &mut self.section {
                if let Some(w) = section.next() {
                    if let Some(r) = &mut self.remaining {
                        *r -= 1;
                    }
                    return Some(w);
                }
                self.section = None;
                self.length += 1;
                self.advance_frontier();
            }
            if self.frontier.is_empty() || self.max_length.is_some_and(|m| self.length > m) {
                self.done = true;
                return None;
            }
            self.section = Some(CrossSection::new(self.nfa, self.length));
        }
    }
}

impl FusedIterator for RadixOrder<'_> {}

/// States from which some word is accepted.
fn productive_states(nfa: &Nfa) -> Vec<bool> {
    let n = nfa.state_count();
    let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (p, _, q) in nfa.transitions() {
        reverse[q].push(p);
    }
    let mut productive = vec![false; n];
    let mut queue: Vec<StateId> = Vec::new();
    for &q in nfa.finals() {
        productive[q] = true;
        queue.push(q);
    }
    while let Some(q) = queue.pop() {
        for &p in &reverse[q] {
            if !productive[p] {
                productive[p] = true;
                queue.push(p);
            }
        }
    }
    productive
}
