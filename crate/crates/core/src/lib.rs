//! Enumerate the words of a regular language in lexicographic order, one
//! length at a time, or in radix (shortlex) order across lengths.
//!
//! Given an NFA and a length `ℓ`, [`preprocess`] builds two tables in
//! O(ℓ·|Δ| + ℓ·|Q|²) and [`CrossSection`] then yields every accepted word
//! of length `ℓ` in increasing order, with O(ℓ·|Δ|) work between two
//! outputs. The enumerator keeps no state beyond the last word it produced.
//!
//! ```
//! use lexenum::{compile_regex, CrossSection};
//!
//! let nfa = compile_regex("a*ba*").unwrap();
//! let words: Vec<String> = CrossSection::new(&nfa, 3)
//!     .map(|w| nfa.alphabet().spell(&w))
//!     .collect();
//! assert_eq!(words, ["aab", "aba", "baa"]);
//! ```

pub mod alphabet;
pub mod automaton;
pub mod bench;
pub mod counters;
pub mod enumerate;
pub mod family;
pub mod format;
pub mod oracle;
pub mod preprocess;
pub mod regex;
pub mod state_set;

pub use alphabet::{radix_cmp, Alphabet, Symbol, Word};
pub use automaton::{BuildError, Nfa, StateId};
pub use enumerate::{min_word, next_word, CrossSection, RadixOrder, RunStack, Scratch};
pub use format::{parse_automaton, write_automaton, ParseError};
pub use preprocess::{preprocess, CompTable, MinArrow, MinArrowTable, Tables};
pub use regex::{compile_regex, RegexError};
pub use state_set::SparseStateSet;
