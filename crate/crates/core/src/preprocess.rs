//! Minimal-word tables.
//!
//! For every length `k ≤ ℓ` and state `q`, let `w(k, q)` be the
//! lexicographically least word of length `k` accepted from `q`, if any.
//! [`MinArrowTable`] records the first transition of a run spelling
//! `w(k, q)`, so the word can be read back in O(k) by following arrows.
//! [`CompTable`] orders states by their minimal words: `comp(k, q, q')`
//! holds when some length-`k` word is accepted from `q`, and either none is
//! accepted from `q'` or `w(k, q) ≤ w(k, q')`. It is a preorder on the states
//! that accept something at length `k`; it is neither total nor
//! antisymmetric.
//!
//! Both tables are built level by level in O(ℓ·|Δ| + ℓ·|Q|²).

use crate::alphabet::Symbol;
use crate::automaton::{Nfa, StateId};
use crate::counters;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinArrow {
    /// No word of this length is accepted from the state.
    Bottom,
    /// Level 0 only: the state is final.
    Epsilon,
    /// First transition of a run spelling the minimal word.
    Arrow { symbol: Symbol, target: StateId },
}

impl MinArrow {
    pub fn is_bottom(self) -> bool {
        self == MinArrow::Bottom
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinArrowTable {
    length: usize,
    states: usize,
    cells: Vec<MinArrow>,
}

impl MinArrowTable {
    fn new(length: usize, states: usize) -> MinArrowTable {
        let n = (length + 1) * states;
        counters::count(n as u64);
        MinArrowTable { length, states, cells: vec![MinArrow::Bottom; n] }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn get(&self, k: usize, q: StateId) -> MinArrow {
        counters::count(1);
        self.cells[k * self.states + q]
    }

    #[inline]
    fn set(&mut self, k: usize, q: StateId, v: MinArrow) {
        counters::count(1);
        self.cells[k * self.states + q] = v;
    }

    /// Level `k` as a slice indexed by state.
    pub fn level(&self, k: usize) -> &[MinArrow] {
        &self.cells[k * self.states..(k + 1) * self.states]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompTable {
    length: usize,
    states: usize,
    cells: Vec<bool>,
}

impl CompTable {
    fn new(length: usize, states: usize) -> CompTable {
        let n = (length + 1) * states * states;
        counters::count(n as u64);
        CompTable { length, states, cells: vec![false; n] }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Whether `q` precedes (or ties with) `r` at level `k`.
    #[inline]
    pub fn get(&self, k: usize, q: StateId, r: StateId) -> bool {
        counters::count(1);
        self.cells[(k * self.states + q) * self.states + r]
    }

    #[inline]
    fn set(&mut self, k: usize, q: StateId, r: StateId, v: bool) {
        counters::count(1);
        self.cells[(k * self.states + q) * self.states + r] = v;
    }
}

/// The pair of tables for one automaton and one maximal length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tables {
    pub min_arrow: MinArrowTable,
    pub comp: CompTable,
}

impl Tables {
    pub fn length(&self) -> usize {
        self.min_arrow.length
    }

    pub fn state_count(&self) -> usize {
        self.min_arrow.states
    }

    /// Flat byte encoding of both tables, for identity checks.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + self.min_arrow.cells.len() * 9 + self.comp.cells.len());
        out.extend_from_slice(&(self.min_arrow.length as u64).to_le_bytes());
        out.extend_from_slice(&(self.min_arrow.states as u64).to_le_bytes());
        for cell in &self.min_arrow.cells {
            match *cell {
                MinArrow::Bottom => out.push(0),
                MinArrow::Epsilon => out.push(1),
                MinArrow::Arrow { symbol, target } => {
                    out.push(2);
                    out.extend_from_slice(&(symbol.index() as u32).to_le_bytes());
                    out.extend_from_slice(&(target as u32).to_le_bytes());
                }
            }
        }
        out.extend(self.comp.cells.iter().map(|&b| b as u8));
        out
    }
}

/// Builds the tables for all lengths `0..=length`.
pub fn preprocess(nfa: &Nfa, length: usize) -> Tables {
    let n = nfa.state_count();
    let mut min_arrow = MinArrowTable::new(length, n);
    let mut comp = CompTable::new(length, n);

    for &q in nfa.finals() {
        min_arrow.set(0, q, MinArrow::Epsilon);
        for r in 0..n {
            comp.set(0, q, r, true);
        }
    }

    for k in 1..=length {
        for q in 0..n {
            for (a, targets) in nfa.delta(q) {
                counters::count(1);
                let mut best = targets[0];
                for &r in targets {
                    if comp.get(k - 1, r, best) {
                        best = r;
                    }
                }
                if !min_arrow.get(k - 1, best).is_bottom() {
                    min_arrow.set(k, q, MinArrow::Arrow { symbol: a, target: best });
                    // Δ(q) is sorted, so `a` is the least usable letter.
                    break;
                }
            }
        }
        for q in 0..n {
            let t = min_arrow.get(k, q);
            let (a, p) = match t {
                MinArrow::Arrow { symbol, target } => (symbol, target),
                MinArrow::Bottom => continue,
                MinArrow::Epsilon => unreachable!("epsilon above level 0"),
            };
            for r in 0..n {
                let v = match min_arrow.get(k, r) {
                    MinArrow::Bottom => true,
                    MinArrow::Arrow { symbol: b, target: s } => a < b || (a == b && comp.get(k - 1, p, s)),
                    MinArrow::Epsilon => unreachable!("epsilon above level 0"),
                };
                if v {
                    comp.set(k, q, r, true);
                }
            }
        }
    }

    Tables { min_arrow, comp }
}

/// Reads back the minimal word of length `k` accepted from `q` by following
/// arrows. `None` when the entry is bottom.
pub fn spell_min_word(tables: &Tables, k: usize, q: StateId) -> Option<Vec<Symbol>> {
    let mut out = Vec::with_capacity(k);
    let mut level = k;
    let mut state = q;
    loop {
        match tables.min_arrow.get(level, state) {
            MinArrow::Bottom => return None,
            MinArrow::Epsilon => return Some(out),
            MinArrow::Arrow { symbol, target } => {
                out.push(symbol);
                state = target;
                level -= 1;
            }
        }
    }
}
