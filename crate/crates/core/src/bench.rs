//! Per-output cost measurement.

use std::io::{self, Write};
use std::time::Instant;

use crate::automaton::Nfa;
use crate::counters::{self, Counting};
use crate::enumerate::CrossSection;
use crate::preprocess::preprocess;

/// Cost of producing one output, measured from the previous output (or from
/// the end of preprocessing, for the first one).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub index: usize,
    pub word_len: usize,
    pub op_count: u64,
    pub wall_nanos: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelayReport {
    pub length: usize,
    pub states: usize,
    pub sigma: usize,
    pub delta: usize,
    pub preproc_ops: u64,
    pub preproc_nanos: u64,
    pub records: Vec<OutputRecord>,
    /// Cost of discovering that the last output was the last one. `None` when
    /// the run stopped at the limit.
    pub tail: Option<(u64, u64)>,
}

impl DelayReport {
    /// Largest operation count between consecutive outputs, including the
    /// first output and the final exhaustion check.
    pub fn max_delay_ops(&self) -> u64 {
        let tail = self.tail.map_or(0, |(ops, _)| ops);
        self.records.iter().map(|r| r.op_count).max().unwrap_or(0).max(tail)
    }

    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(
            out,
            "# l={}, Q={}, sigma={}, delta={}, preproc_ops={}, preproc_nanos={}",
            self.length, self.states, self.sigma, self.delta, self.preproc_ops, self.preproc_nanos
        )?;
        match self.tail {
            Some((ops, nanos)) => writeln!(out, "# exhausted=true, tail_ops={ops}, tail_nanos={nanos}")?,
            None => writeln!(out, "# exhausted=false")?,
        }
        writeln!(out, "index,word_len,op_count,wall_nanos")?;
        for r in &self.records {
            writeln!(out, "{},{},{},{}", r.index, r.word_len, r.op_count, r.wall_nanos)?;
        }
        Ok(())
    }
}

fn nanos_since(t: Instant) -> u64 {
    t.elapsed().as_nanos().min(u64::MAX as u128) as u64
}

/// Enumerates the cross-section of `nfa` at `length`, recording operation
/// counts and wall time for preprocessing and for every output.
pub fn measure(nfa: &Nfa, length: usize, limit: Option<usize>) -> DelayReport {
    let _guard = Counting::start();

    let start = Instant::now();
    let tables = preprocess(nfa, length);
    let mut cursor = CrossSection::with_tables(nfa, &tables, length);
    let preproc_ops = counters::take();
    let preproc_nanos = nanos_since(start);

    let mut records = Vec::new();
    let mut tail = None;
    loop {
        if limit.is_some_and(|l| records.len() >= l) {
            break;
        }
        let t = Instant::now();
        let next = cursor.next();
        let op_count = counters::take();
        let wall_nanos = nanos_since(t);
        match next {
            Some(w) => records.push(OutputRecord { index: records.len(), word_len: w.len(), op_count, wall_nanos }),
            None => {
                tail = Some((op_count, wall_nanos));
                break;
            }
        }
    }

    DelayReport {
        length,
        states: nfa.state_count(),
        sigma: nfa.alphabet().len(),
        delta: nfa.transition_count(),
        preproc_ops,
        preproc_nanos,
        records,
        tail,
    }
}
