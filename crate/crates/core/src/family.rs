//! Seeded random automata for tests and scaling studies.

use std::collections::HashSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::Nfa;

/// Shape of a random automaton. `transitions` distinct triples are drawn
/// uniformly (capped at |Q|²·|Σ|); each state is initial or final
/// independently with the given probabilities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomNfa {
    pub states: usize,
    pub symbols: usize,
    pub transitions: usize,
    pub initial_prob: f64,
    pub final_prob: f64,
}

impl Default for RandomNfa {
    fn default() -> RandomNfa {
        RandomNfa { states: 20, symbols: 4, transitions: 100, initial_prob: 0.1, final_prob: 0.3 }
    }
}

impl RandomNfa {
    pub fn generate(&self, seed: u64) -> Nfa {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.generate_with(&mut rng)
    }

    pub fn generate_with<R: Rng>(&self, rng: &mut R) -> Nfa {
        let (n, s) = (self.states, self.symbols);
        let total = n * n * s;
        let want = self.transitions.min(total);
        let decode = |i: usize| (i / (n * s), (i / n) % s, i % n);
        let triples: Vec<(usize, usize, usize)> = if want * 2 > total {
            index::sample(rng, total, want).into_iter().map(decode).collect()
        } else {
            let mut seen = HashSet::with_capacity(want);
            let mut out = Vec::with_capacity(want);
            while out.len() < want {
                let i = rng.gen_range(0..total);
                if seen.insert(i) {
                    out.push(decode(i));
                }
            }
            out
        };
        let initial: Vec<usize> = (0..n).filter(|_| rng.gen_bool(self.initial_prob)).collect();
        let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(self.final_prob)).collect();
        Nfa::build(glyphs(s), n, &initial, &finals, &triples).expect("generated automaton is valid")
    }
}

/// `count` distinct printable glyphs: `a`–`z`, then `A`–`Z`, then digits,
/// then Latin Extended letters.
pub fn glyphs(count: usize) -> Vec<char> {
    let mut out: Vec<char> = ('a'..='z').chain('A'..='Z').chain('0'..='9').take(count).collect();
    let mut code = 0x100u32;
    while out.len() < count {
        if let Some(c) = char::from_u32(code) {
            out.push(c);
        }
        code += 1;
    }
    out
}
