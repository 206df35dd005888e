//! A small regular-expression frontend.
//!
//! Supported syntax: literal characters, concatenation, `|`, `*`, `+`, `?`
//! and parentheses. A backslash makes the next character literal. The
//! alphabet is the set of literals, in code-point order.
//!
//! Patterns go through a Thompson construction and the resulting ε-moves are
//! removed immediately, so the automaton handed back has only lettered
//! transitions.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::automaton::{Nfa, StateId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("regex syntax error at position {position}: {message}")]
pub struct RegexError {
    /// 0-based character offset.
    pub position: usize,
    pub message: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ast {
    Empty,
    Literal(char),
    Concat(Vec<Ast>),
    Alt(Vec<Ast>),
    Star(Box<Ast>),
    Plus(Box<Ast>),
    Optional(Box<Ast>),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &'static str) -> RegexError {
        RegexError { position: self.pos, message }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn alternation(&mut self) -> Result<Ast, RegexError> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 { branches.pop().unwrap() } else { Ast::Alt(branches) })
    }

    fn concat(&mut self) -> Result<Ast, RegexError> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            items.push(self.repeat()?);
        }
        Ok(match items.len() {
            0 => Ast::Empty,
            1 => items.pop().unwrap(),
            _ => Ast::Concat(items),
        })
    }

    fn repeat(&mut self) -> Result<Ast, RegexError> {
        let mut node = self.atom()?;
        while let Some(c) = self.peek() {
            node = match c {
                '*' => Ast::Star(Box::new(node)),
                '+' => Ast::Plus(Box::new(node)),
                '?' => Ast::Optional(Box::new(node)),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Ast, RegexError> {
        match self.peek() {
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.alternation()?;
                if self.peek() != Some(')') {
                    return Err(RegexError { position: open, message: "unclosed '('" });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('*' | '+' | '?') => Err(self.error("quantifier with nothing to repeat")),
            Some('\\') => {
                self.pos += 1;
                let c = self.peek().ok_or_else(|| self.error("trailing backslash"))?;
                self.pos += 1;
                Ok(Ast::Literal(c))
            }
            Some(c) => {
                self.pos += 1;
                Ok(Ast::Literal(c))
            }
            None => Err(self.error("unexpected end of pattern")),
        }
    }
}

fn parse(pattern: &str) -> Result<Ast, RegexError> {
    let mut p = Parser { chars: pattern.chars().collect(), pos: 0 };
    let ast = p.alternation()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unmatched ')'"));
    }
    Ok(ast)
}

/// Thompson automaton with ε-moves. State 0 is the start.
#[derive(Default)]
struct Thompson {
    eps: Vec<Vec<usize>>,
    lettered: Vec<Vec<(char, usize)>>,
}

impl Thompson {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.lettered.push(Vec::new());
        self.eps.len() - 1
    }

    /// Compiles `ast` between fresh states, returning `(entry, exit)`.
    fn fragment(&mut self, ast: &Ast) -> (usize, usize) {
        match ast {
            Ast::Empty => {
                let s = self.state();
                (s, s)
            }
            Ast::Literal(c) => {
                let s = self.state();
                let t = self.state();
                self.lettered[s].push((*c, t));
                (s, t)
            }
            Ast::Concat(items) => {
                let (entry, mut exit) = self.fragment(&items[0]);
                for item in &items[1..] {
                    let (s, t) = self.fragment(item);
                    self.eps[exit].push(s);
                    exit = t;
                }
                (entry, exit)
            }
            Ast::Alt(branches) => {
                let s = self.state();
                let t = self.state();
                for b in branches {
                    let (bs, bt) = self.fragment(b);
                    self.eps[s].push(bs);
                    self.eps[bt].push(t);
                }
                (s, t)
            }
            Ast::Star(inner) | Ast::Plus(inner) | Ast::Optional(inner) => {
                let s = self.state();
                let t = self.state();
                let (is, it) = self.fragment(inner);
                self.eps[s].push(is);
                self.eps[it].push(t);
                if !matches!(ast, Ast::Plus(_)) {
                    self.eps[s].push(t);
                }
                if !matches!(ast, Ast::Optional(_)) {
                    self.eps[it].push(is);
                }
                (s, t)
            }
        }
    }

    fn closure(&self, from: usize) -> Vec<usize> {
        let mut seen = vec![false; self.eps.len()];
        let mut stack = vec![from];
        let mut out = Vec::new();
        seen[from] = true;
        while let Some(s) = stack.pop() {
            out.push(s);
            for &t in &self.eps[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        out
    }
}

/// Compiles `pattern` into an ε-free automaton recognising the same
/// language.
pub fn compile_regex(pattern: &str) -> Result<Nfa, RegexError> {
    let ast = parse(pattern)?;
    let mut th = Thompson::default();
    let (entry, accept) = th.fragment(&ast);

    let glyphs: Vec<char> = th
        .lettered
        .iter()
        .flatten()
        .map(|&(c, _)| c)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let alphabet = Alphabet::new(glyphs).expect("distinct glyphs");

    // Keep the entry and every target of a lettered move.
    let mut index: Vec<Option<StateId>> = vec![None; th.eps.len()];
    let mut kept = vec![entry];
    index[entry] = Some(0);
    for moves in &th.lettered {
        for &(_, t) in moves {
            if index[t].is_none() {
                index[t] = Some(kept.len());
                kept.push(t);
            }
        }
    }

    let mut transitions = Vec::new();
    let mut finals = Vec::new();
    for (new_p, &p) in kept.iter().enumerate() {
        for s in th.closure(p) {
            if s == accept {
                finals.push(new_p);
            }
            for &(c, t) in &th.lettered[s] {
                let a = alphabet.symbol(c).expect("literal in alphabet").index();
                transitions.push((new_p, a, index[t].expect("kept target")));
            }
        }
    }

    Ok(Nfa::with_alphabet(alphabet, kept.len(), &[0], &finals, &transitions).expect("valid construction"))
}
