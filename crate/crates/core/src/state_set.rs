use crate::automaton::StateId;
use crate::counters;

/// A subset of `{0, …, n-1}` with O(1) insert and O(|S|) iteration and
/// clear. Creation is O(n).
///
/// Elements iterate in insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseStateSet {
    membership: Vec<bool>,
    elements: Vec<StateId>,
}

impl SparseStateSet {
    pub fn new(state_count: usize) -> SparseStateSet {
        counters::count(state_count as u64);
        SparseStateSet {
            membership: vec![false; state_count],
            elements: Vec::new(),
        }
    }

    /// Builds a set from `states`, ignoring repeats.
    pub fn from_states<I>(state_count: usize, states: I) -> SparseStateSet
    where
        I: IntoIterator<Item = StateId>,
    {
        let mut set = SparseStateSet::new(state_count);
        for q in states {
            set.insert(q);
        }
        set
    }

    /// Size of the universe this set ranges over.
    pub fn capacity(&self) -> usize {
        self.membership.len()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.membership[q]
    }

    /// Inserts `q`. Returns `false` if it was already present.
    ///
    /// Panics if `q` is outside the universe.
    #[inline]
    pub fn insert(&mut self, q: StateId) -> bool {
        counters::count(1);
        if self.membership[q] {
            return false;
        }
        self.membership[q] = true;
        self.elements.push(q);
        true
    }

    /// First element in iteration order.
    pub fn first(&self) -> Option<StateId> {
        self.elements.first().copied()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, StateId>> {
        self.elements.iter().copied()
    }

    pub fn as_slice(&self) -> &[StateId] {
        &self.elements
    }

    pub fn clear(&mut self) {
        counters::count(self.elements.len() as u64);
        for &q in &self.elements {
            self.membership[q] = false;
        }
        self.elements.clear();
    }

    /// Replaces the contents with a copy of `other`, in O(|self| + |other|).
    pub fn copy_from(&mut self, other: &SparseStateSet) {
        self.clear();
        for q in other.iter() {
            self.insert(q);
        }
    }

    #[cfg(test)]
    pub(crate) fn is_consistent(&self) -> bool {
        let marked = self.membership.iter().filter(|&&m| m).count();
        marked == self.elements.len() && self.elements.iter().all(|&q| self.membership[q])
    }
}

impl<'a> IntoIterator for &'a SparseStateSet {
    type Item = StateId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, StateId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}
