use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A letter, identified by its position in the alphabet declaration.
///
/// Symbols compare by position, which is the order used for lexicographic
/// and radix order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

impl Symbol {
    pub fn new(index: usize) -> Symbol {
        Symbol(u32::try_from(index).expect("symbol index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of single-character glyphs.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    glyphs: Vec<char>,
    lookup: HashMap<char, Symbol>,
}

impl Alphabet {
    /// Builds an alphabet from glyphs in declaration order. Returns the first
    /// repeated glyph as the error.
    pub fn new(glyphs: Vec<char>) -> Result<Alphabet, char> {
        let mut lookup = HashMap::with_capacity(glyphs.len());
        for (i, &g) in glyphs.iter().enumerate() {
            if lookup.insert(g, Symbol::new(i)).is_some() {
                return Err(g);
            }
        }
        Ok(Alphabet { glyphs, lookup })
    }

    pub fn len(&self) -> usize {
        self.glyphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glyphs.is_empty()
    }

    pub fn symbol(&self, glyph: char) -> Option<Symbol> {
        self.lookup.get(&glyph).copied()
    }

    pub fn glyph(&self, symbol: Symbol) -> char {
        self.glyphs[symbol.index()]
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn symbols(&self) -> impl DoubleEndedIterator<Item = Symbol> + ExactSizeIterator {
        (0..self.glyphs.len()).map(Symbol::new)
    }

    /// Converts a string into a word, or returns the first unknown glyph.
    pub fn parse_word(&self, text: &str) -> Result<Word, char> {
        text.chars()
            .map(|c| self.symbol(c).ok_or(c))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from)
    }

    /// Renders `word` as concatenated glyphs.
    pub fn spell(&self, word: &Word) -> String {
        word.iter().map(|s| self.glyph(s)).collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Alphabet) -> bool {
        self.glyphs == other.glyphs
    }
}

impl Eq for Alphabet {}

/// A finite sequence of symbols.
///
/// The derived `Ord` is lexicographic order (a proper prefix sorts first);
/// on words of equal length it is the usual dictionary order. Use
/// [`radix_cmp`] for shortlex order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn with_capacity(n: usize) -> Word {
        Word(Vec::with_capacity(n))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Symbol> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    /// Symbol ids as plain indices, for display and debugging.
    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.index()).collect()
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Symbol;

    fn index(&self, i: usize) -> &Symbol {
        &self.0[i]
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Word {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s.0)?;
        }
        f.write_str("]")
    }
}

/// Shortlex order: by length first, then lexicographically.
pub fn radix_cmp(a: &Word, b: &Word) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}
