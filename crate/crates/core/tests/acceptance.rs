//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p lexenum --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lexenum::bench::measure;
use lexenum::family::RandomNfa;
use lexenum::oracle::{cross_section_bruteforce, min_word_oracle};
use lexenum::preprocess::spell_min_word;
use lexenum::{compile_regex, preprocess, CrossSection, MinArrow, Nfa, RadixOrder, Word};

const CORPUS_SIZE: usize = 1000;
const MAX_LENGTH: usize = 7;

/// Per-output operation budget is `DELAY_C · ℓ · |Δ|`.
///
/// From the counter taxonomy, one output costs at most
/// `(ℓ+3)|Q| + ℓ(|Q|+|Δ|)` to replay the run plus, per position,
/// `|Q| + |Σ| + 7|Δ|` for the successor search, plus `2|Q| + ℓ + |Δ|` for the
/// final minimal-word read-out and cleanup. With |Q|, |Σ| ≤ |Δ| and ℓ ≥ 1
/// that is below `16·ℓ·|Δ|`.
const DELAY_C: f64 = 16.0;

/// Preprocessing budget is `PREPROC_C · (ℓ|Q|² + ℓ|Δ| + |Σ||Q|)`.
///
/// Table creation is `(ℓ+1)(|Q| + |Q|²)`, level zero `|F|(|Q|+1)`, each
/// further level `3|Δ| + 3|Q|² + 2|Q|`, and the cursor's working memory
/// `(ℓ+2)|Q| + |Σ|`: below `8·(ℓ|Q|² + ℓ|Δ| + |Σ||Q|)` for ℓ ≥ 1.
const PREPROC_C: f64 = 8.0;

const DOUBLING_RATIO: f64 = 2.5;

fn report(id: u32, name: &str, ok: bool, detail: &str) {
    println!("[{}] criterion {id}: {name} ({detail})", if ok { "PASS" } else { "FAIL" });
}

fn corpus() -> Vec<Nfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    (0..CORPUS_SIZE)
        .map(|_| {
            let states = rng.gen_range(1..=6);
            let symbols = rng.gen_range(1..=3);
            let max_density = (1.5 * (states * symbols) as f64).floor() as usize;
            let spec = RandomNfa {
                states,
                symbols,
                transitions: rng.gen_range(0..=max_density),
                initial_prob: rng.gen_range(0.1..0.7),
                final_prob: rng.gen_range(0.1..0.7),
            };
            spec.generate_with(&mut rng)
        })
        .collect()
}

fn spell(nfa: &Nfa, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| nfa.alphabet().spell(w)).collect()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let mut mismatches = 0;
    let mut cases = 0;
    for (i, nfa) in corpus().iter().enumerate() {
        for l in 0..=MAX_LENGTH {
            cases += 1;
            let want = cross_section_bruteforce(nfa, l).unwrap();
            let got: Vec<Word> = CrossSection::new(nfa, l).collect();
            if got != want {
                mismatches += 1;
                if mismatches <= 3 {
                    eprintln!("instance {i}, l={l}: got {:?}, want {:?}", spell(nfa, &got), spell(nfa, &want));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches == 0 && elapsed < Duration::from_secs(60);
    report(1, "oracle equivalence", ok, &format!("{cases} cases, {mismatches} mismatches, {elapsed:.2?}"));
    assert!(ok);
}

#[test]
fn criterion_2_table_semantics() {
    let mut bad = 0;
    let mut checked = 0u64;
    for nfa in corpus() {
        let n = nfa.state_count();
        // oracle[k][q] = least accepted word of length k from q.
        let oracle: Vec<Vec<Option<Word>>> = (0..=MAX_LENGTH)
            .map(|k| (0..n).map(|q| min_word_oracle(&nfa, q, k).unwrap()).collect())
            .collect();
        for l in 0..=MAX_LENGTH {
            let t = preprocess(&nfa, l);
            for (k, least) in oracle.iter().enumerate().take(l + 1) {
                for q in 0..n {
                    checked += 1;
                    let spelled = spell_min_word(&t, k, q).map(Word::from);
                    if spelled != least[q] {
                        bad += 1;
                    }
                    if (t.min_arrow.get(k, q) == MinArrow::Epsilon) != (k == 0 && nfa.is_final(q)) {
                        bad += 1;
                    }
                    for r in 0..n {
                        checked += 1;
                        let want = match (&least[q], &least[r]) {
                            (None, _) => false,
                            (Some(_), None) => true,
                            (Some(x), Some(y)) => x <= y,
                        };
                        if t.comp.get(k, q, r) != want {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    report(2, "table semantics", bad == 0, &format!("{checked} cells, {bad} wrong"));
    assert_eq!(bad, 0);
}

const FAMILY_LENGTHS: [usize; 3] = [4, 8, 16];
const FAMILY_DELTAS: [usize; 4] = [50, 100, 200, 400];
const FAMILY_SEEDS: u64 = 20;
const OUTPUTS_PER_INSTANCE: usize = 1000;

/// |Q| = 20, |Σ| = 4, exactly `delta` distinct transitions; I and F are
/// uniformly random subsets.
fn family(l: usize, delta: usize, seed: u64) -> Nfa {
    RandomNfa { states: 20, symbols: 4, transitions: delta, initial_prob: 0.5, final_prob: 0.5 }
        .generate(seed * 1_000 + (l * 10_000 + delta) as u64)
}

#[test]
fn criterion_3_delay_bound() {
    let start = Instant::now();
    let mut worst_ratio: f64 = 0.0;
    let mut max_ops = vec![vec![0u64; FAMILY_DELTAS.len()]; FAMILY_LENGTHS.len()];
    let mut outputs = 0usize;
    for (li, &l) in FAMILY_LENGTHS.iter().enumerate() {
        for (di, &delta) in FAMILY_DELTAS.iter().enumerate() {
            for seed in 0..FAMILY_SEEDS {
                let nfa = family(l, delta, seed);
                assert_eq!(nfa.transition_count(), delta);
                let r = measure(&nfa, l, Some(OUTPUTS_PER_INSTANCE));
                outputs += r.records.len();
                let m = r.max_delay_ops();
                max_ops[li][di] = max_ops[li][di].max(m);
                worst_ratio = worst_ratio.max(m as f64 / (l * delta) as f64);
            }
        }
    }
    let mut worst_doubling: f64 = 0.0;
    for row in &max_ops {
        for pair in row.windows(2) {
            worst_doubling = worst_doubling.max(pair[1] as f64 / pair[0].max(1) as f64);
        }
    }
    for (li, &l) in FAMILY_LENGTHS.iter().enumerate() {
        eprintln!("l={l}: max per-output ops by |Δ| {FAMILY_DELTAS:?} = {:?}", max_ops[li]);
    }
    let elapsed = start.elapsed();
    let bound_ok = worst_ratio <= DELAY_C;
    let doubling_ok = worst_doubling <= DOUBLING_RATIO;
    let ok = bound_ok && doubling_ok && elapsed < Duration::from_secs(120);
    report(
        3,
        "delay bound",
        ok,
        &format!(
            "{outputs} outputs, max ops/(l·|Δ|) = {worst_ratio:.3} ≤ {DELAY_C}, worst doubling ratio = {worst_doubling:.3} ≤ {DOUBLING_RATIO}, {elapsed:.2?}"
        ),
    );
    assert!(bound_ok, "delay ratio {worst_ratio} exceeds {DELAY_C}");
    assert!(doubling_ok, "doubling |Δ| grew max delay by {worst_doubling}");
}

#[test]
fn criterion_4_preprocessing_bound() {
    let mut worst: f64 = 0.0;
    for &l in &FAMILY_LENGTHS {
        for &delta in &FAMILY_DELTAS {
            for seed in 0..FAMILY_SEEDS {
                let nfa = family(l, delta, seed);
                let r = measure(&nfa, l, Some(0));
                let (q, s) = (nfa.state_count(), nfa.alphabet().len());
                let budget = (l * q * q + l * delta + s * q) as f64;
                worst = worst.max(r.preproc_ops as f64 / budget);
            }
        }
    }
    let ok = worst <= PREPROC_C;
    report(4, "preprocessing bound", ok, &format!("max ops/(l|Q|²+l|Δ|+|Σ||Q|) = {worst:.3} ≤ {PREPROC_C}"));
    assert!(ok);
}

#[test]
fn criterion_5_memorylessness() {
    let corpus = corpus();
    let mut tables_changed = 0;
    for nfa in corpus.iter().take(200) {
        let t = preprocess(nfa, MAX_LENGTH);
        let before = t.to_bytes();
        CrossSection::with_tables(nfa, &t, MAX_LENGTH).for_each(drop);
        if t.to_bytes() != before {
            tables_changed += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut pairs = 0;
    let mut tail_mismatch = 0;
    while pairs < 100 {
        let nfa = &corpus[rng.gen_range(0..corpus.len())];
        let l = rng.gen_range(1..=MAX_LENGTH);
        let t = preprocess(nfa, l);
        let all: Vec<Word> = CrossSection::with_tables(nfa, &t, l).collect();
        if all.is_empty() {
            continue;
        }
        let i = rng.gen_range(0..all.len());
        let tail: Vec<Word> = CrossSection::resume_after(nfa, &t, all[i].clone()).collect();
        if tail != all[i + 1..] {
            tail_mismatch += 1;
        }
        pairs += 1;
    }
    let ok = tables_changed == 0 && tail_mismatch == 0;
    report(
        5,
        "memorylessness",
        ok,
        &format!("{tables_changed} of 200 table sets changed; {tail_mismatch} of {pairs} resumed tails differ"),
    );
    assert!(ok);
}

#[test]
fn criterion_6_degenerate_cases() {
    let mut failures = Vec::new();

    // ℓ = 0 with I ∩ F ≠ ∅ yields exactly ε.
    let eps = Nfa::build(vec!['a', 'b'], 2, &[0, 1], &[1], &[(0, 0, 1)]).unwrap();
    let got: Vec<Word> = CrossSection::new(&eps, 0).collect();
    if got != vec![Word::new()] {
        failures.push("l=0 with I∩F non-empty");
    }

    // F = ∅ or I = ∅ yields nothing at any length.
    let no_final = Nfa::build(vec!['a', 'b'], 2, &[0], &[], &[(0, 0, 1), (1, 1, 0), (0, 1, 0)]).unwrap();
    let no_initial = Nfa::build(vec!['a', 'b'], 2, &[], &[0, 1], &[(0, 0, 1), (1, 1, 0), (0, 1, 0)]).unwrap();
    for l in 0..=10 {
        if CrossSection::new(&no_final, l).next().is_some() || CrossSection::new(&no_initial, l).next().is_some() {
            failures.push("empty I or F");
        }
    }
    if RadixOrder::new(&no_final, Some(10), None).next().is_some() {
        failures.push("radix over empty language");
    }

    // Unary alphabet: one word per reachable length. L = (aaa)* ∪ {a}
    let unary = Nfa::build(vec!['a'], 5, &[0, 3], &[0, 4], &[(0, 0, 1), (1, 0, 2), (2, 0, 0), (3, 0, 4)]).unwrap();
    for l in 0..=12 {
        let got: Vec<Word> = CrossSection::new(&unary, l).collect();
        let want = cross_section_bruteforce(&unary, l).unwrap();
        let expected_len = usize::from(l % 3 == 0 || l == 1);
        if got != want || got.len() != expected_len {
            failures.push("unary alphabet");
        }
    }

    let ok = failures.is_empty();
    report(6, "epsilon and degenerate cases", ok, &format!("failures: {failures:?}"));
    assert!(ok);
}

#[test]
fn criterion_7_worked_example() {
    let a1 = Nfa::build(vec!['a', 'b'], 2, &[0], &[1], &[(0, 0, 0), (0, 1, 1), (1, 0, 1)]).unwrap();
    let from_regex = compile_regex("a*ba*").unwrap();
    let expected: [&[&str]; 3] = [&["b"], &["ab", "ba"], &["aab", "aba", "baa"]];
    let mut ok = true;
    for nfa in [&a1, &from_regex] {
        for (i, want) in expected.iter().enumerate() {
            let l = i + 1;
            let got: Vec<Word> = CrossSection::new(nfa, l).collect();
            ok &= spell(nfa, &got) == *want;
            ok &= got == cross_section_bruteforce(nfa, l).unwrap();
        }
        let radix: Vec<Word> = RadixOrder::new(nfa, Some(3), None).collect();
        ok &= spell(nfa, &radix) == ["b", "ab", "ba", "aab", "aba", "baa"];
    }
    report(7, "worked example a*ba*", ok, "cross-sections l=1..3 and radix prefix");
    assert!(ok);
}

#[test]
fn criterion_8_streaming() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lexenum"))
        .args(["enum", "--regex", "(a|b)*", "--length", "40", "--limit", "1"])
        .output()
        .expect("run lexenum");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().collect();
    let ok = out.status.success()
        && lines == ["a".repeat(40)]
        && elapsed < Duration::from_secs(1);
    report(8, "streaming --limit 1 at l=40", ok, &format!("{} line(s) in {elapsed:.2?}", lines.len()));
    assert!(ok);
}
