//! Line-oriented automaton files.
//!
//! ```text
//! # comment lines allowed anywhere
//! alphabet a b          # symbol order = lexicographic order
//! states 2
//! initial 0             # zero or more states
//! final 1
//! 0 a 0                 # transitions: from symbol to
//! 0 b 1
//! 1 a 1
//! ```
//!
//! `#` starts a comment anywhere on a line, so it cannot be a symbol.
//! `alphabet` must precede transitions and `states` must precede any state
//! reference. `initial` and `final` may repeat; their lists accumulate.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::automaton::{BuildError, Nfa, StateId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; one past the last line for errors detected at end of input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownDirective(String),
    UnknownSymbol(String),
    StateOutOfRange { state: StateId, count: usize },
    MissingHeader(&'static str),
    DuplicateHeader(&'static str),
    BadNumber(String),
    BadGlyph(String),
    Invalid(BuildError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownDirective(d) => write!(f, "unknown directive '{d}'"),
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol '{s}'"),
            ParseErrorKind::StateOutOfRange { state, count } => {
                write!(f, "state {state} out of range (declared {count} states)")
            }
            ParseErrorKind::MissingHeader(h) => write!(f, "missing '{h}' header"),
            ParseErrorKind::DuplicateHeader(h) => write!(f, "'{h}' declared twice"),
            ParseErrorKind::BadNumber(s) => write!(f, "expected a state number, found '{s}'"),
            ParseErrorKind::BadGlyph(s) => write!(f, "symbol '{s}' is not a single character"),
            ParseErrorKind::Invalid(e) => write!(f, "{e}"),
        }
    }
}

/// Parses the text format into an automaton.
pub fn parse_automaton(text: &str) -> Result<Nfa, ParseError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial = Vec::new();
    let mut finals = Vec::new();
    let mut transitions = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, rest)) = tokens.split_first() else {
            continue;
        };

        let state = |tok: &str, states: Option<usize>| -> Result<StateId, ParseError> {
            let count = states.ok_or(err(ParseErrorKind::MissingHeader("states")))?;
            let q: StateId = tok.parse().map_err(|_| err(ParseErrorKind::BadNumber(tok.to_string())))?;
            if q >= count {
                return Err(err(ParseErrorKind::StateOutOfRange { state: q, count }));
            }
            Ok(q)
        };

        match head {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader("alphabet")));
                }
                let mut glyphs = Vec::with_capacity(rest.len());
                for tok in rest {
                    let mut chars = tok.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => glyphs.push(c),
                        _ => return Err(err(ParseErrorKind::BadGlyph(tok.to_string()))),
                    }
                }
                let alpha = Alphabet::new(glyphs)
                    .map_err(|c| err(ParseErrorKind::Invalid(BuildError::DuplicateSymbol(c))))?;
                alphabet = Some(alpha);
            }
            "states" => {
                if states.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader("states")));
                }
                match rest {
                    [n] => {
                        let n = n.parse().map_err(|_| err(ParseErrorKind::BadNumber(n.to_string())))?;
                        states = Some(n);
                    }
                    _ => return Err(err(ParseErrorKind::BadNumber(rest.join(" ")))),
                }
            }
            "initial" => {
                for tok in rest {
                    initial.push(state(tok, states)?);
                }
            }
            "final" => {
                for tok in rest {
                    finals.push(state(tok, states)?);
                }
            }
            _ if tokens.len() == 3 && head.chars().all(|c| c.is_ascii_digit()) => {
                let alpha = alphabet.as_ref().ok_or(err(ParseErrorKind::MissingHeader("alphabet")))?;
                let from = state(tokens[0], states)?;
                let sym = {
                    let tok = tokens[1];
                    let mut chars = tok.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => alpha.symbol(c),
                        _ => None,
                    }
                    .ok_or(err(ParseErrorKind::UnknownSymbol(tok.to_string())))?
                };
                let to = state(tokens[2], states)?;
                transitions.push((from, sym.index(), to));
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }

    let end = |kind| ParseError { line: last_line + 1, kind };
    let alphabet = alphabet.ok_or(end(ParseErrorKind::MissingHeader("alphabet")))?;
    let states = states.ok_or(end(ParseErrorKind::MissingHeader("states")))?;
    Nfa::with_alphabet(alphabet, states, &initial, &finals, &transitions)
        .map_err(|e| end(ParseErrorKind::Invalid(e)))
}

/// Renders an automaton in the text format. Transitions are listed by
/// source state, then symbol.
pub fn write_automaton(nfa: &Nfa) -> String {
    let mut out = String::new();
    let glyphs: Vec<String> = nfa.alphabet().glyphs().iter().map(|c| c.to_string()).collect();
    let join = |xs: &mut dyn Iterator<Item = StateId>| xs.map(|q| q.to_string()).collect::<Vec<_>>().join(" ");
    let line = |out: &mut String, head: &str, body: &str| {
        if body.is_empty() {
            writeln!(out, "{head}").unwrap();
        } else {
            writeln!(out, "{head} {body}").unwrap();
        }
    };
    line(&mut out, "alphabet", &glyphs.join(" "));
    writeln!(out, "states {}", nfa.state_count()).unwrap();
    line(&mut out, "initial", &join(&mut nfa.initial().iter()));
    line(&mut out, "final", &join(&mut nfa.finals().iter().copied()));
    for (p, a, q) in nfa.transitions() {
        writeln!(out, "{p} {} {q}", nfa.alphabet().glyph(a)).unwrap();
    }
    out
}
