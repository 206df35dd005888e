//! Browser bindings for the enumerator.
//!
//! Every exported function takes the language as `source` plus a flag saying
//! whether it is a regular expression or an automaton in the line format. The
//! plain-Rust functions underneath return `Result<_, String>` so they can be
//! tested on the host.

use lexenum::counters::{self, Counting};
use lexenum::{compile_regex, parse_automaton, CrossSection, Nfa, RadixOrder};
use wasm_bindgen::prelude::*;

const MAX_LIMIT: usize = 100_000;

fn load(source: &str, is_regex: bool) -> Result<Nfa, String> {
    if is_regex {
        compile_regex(source).map_err(|e| e.to_string())
    } else {
        parse_automaton(source).map_err(|e| e.to_string())
    }
}

fn cap(limit: usize) -> usize {
    limit.min(MAX_LIMIT)
}

pub fn cross_section_words(source: &str, is_regex: bool, length: usize, limit: usize) -> Result<Vec<String>, String> {
    let nfa = load(source, is_regex)?;
    let words = CrossSection::new(&nfa, length).take(cap(limit)).map(|w| nfa.alphabet().spell(&w)).collect();
    Ok(words)
}

pub fn radix_words(source: &str, is_regex: bool, max_length: usize, limit: usize) -> Result<Vec<String>, String> {
    let nfa = load(source, is_regex)?;
    let words = RadixOrder::new(&nfa, Some(max_length), Some(cap(limit)))
        .map(|w| nfa.alphabet().spell(&w))
        .collect();
    Ok(words)
}

/// Operation counts for one cross-section run: preprocessing, then one entry
/// per output. `exhausted` is set when the run reached the last word, in which
/// case `tail_ops` is the cost of finding out.
#[wasm_bindgen]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    preproc_ops: u64,
    delays: Vec<u32>,
    words: Vec<String>,
    exhausted: bool,
    tail_ops: u64,
    states: usize,
    transitions: usize,
}

#[wasm_bindgen]
impl Profile {
    #[wasm_bindgen(getter)]
    pub fn preproc_ops(&self) -> f64 {
        self.preproc_ops as f64
    }

    #[wasm_bindgen(getter)]
    pub fn delays(&self) -> Vec<u32> {
        self.delays.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn words(&self) -> String {
        self.words.join("\n")
    }

    #[wasm_bindgen(getter)]
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    #[wasm_bindgen(getter)]
    pub fn tail_ops(&self) -> f64 {
        self.tail_ops as f64
    }

    #[wasm_bindgen(getter)]
    pub fn states(&self) -> usize {
        self.states
    }

    #[wasm_bindgen(getter)]
    pub fn transitions(&self) -> usize {
        self.transitions
    }
}

// Same bookkeeping as the CLI's bench, minus wall time (no clock in wasm32).
pub fn profile(source: &str, is_regex: bool, length: usize, limit: usize) -> Result<Profile, String> {
    let nfa = load(source, is_regex)?;
    let _guard = Counting::start();
    let mut cursor = CrossSection::new(&nfa, length);
    let preproc_ops = counters::take();
    let mut delays = Vec::new();
    let mut words = Vec::new();
    let mut exhausted = false;
    let mut tail_ops = 0;
    while words.len() < cap(limit) {
        let next = cursor.next();
        let ops = counters::take();
        match next {
            Some(w) => {
                delays.push(ops.min(u32::MAX as u64) as u32);
                words.push(nfa.alphabet().spell(&w));
            }
            None => {
                exhausted = true;
                tail_ops = ops;
                break;
            }
        }
    }
    Ok(Profile {
        preproc_ops,
        delays,
        words,
        exhausted,
        tail_ops,
        states: nfa.state_count(),
        transitions: nfa.transition_count(),
    })
}

#[wasm_bindgen]
pub fn enumerate(source: &str, is_regex: bool, length: usize, limit: usize) -> Result<String, JsValue> {
    cross_section_words(source, is_regex, length, limit)
        .map(|w| w.join("\n"))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn radix(source: &str, is_regex: bool, max_length: usize, limit: usize) -> Result<String, JsValue> {
    radix_words(source, is_regex, max_length, limit)
        .map(|w| w.join("\n"))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn delay_profile(source: &str, is_regex: bool, length: usize, limit: usize) -> Result<Profile, JsValue> {
    profile(source, is_regex, length, limit).map_err(|e| JsValue::from_str(&e))
}
