//! Reconstruction from several t-deletion channel outputs: with
//! `N(n, d, t) + 1` distinct reads of a codeword from a code of minimum
//! distance `d`, exactly one codeword is consistent with all of them.

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

use crate::delball::{ball_size, is_subsequence, lcs_bitparallel, LcsMasks};
use crate::error::{Error, Result};
use crate::formulas::{self, construct_extremal};
use crate::intersect::intersection_elements;
use crate::search::{nvalue_search, SearchOptions};
use crate::seqcore::{all_words, BinarySequence};

pub const REPORT_SCHEMA_VERSION: u32 = 1;
pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha 0.3) via seed_from_u64(seed), stream = trial index";
pub const MAX_CODE_LEN: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Codebook {
    pub n: usize,
    pub d: usize,
    pub words: Vec<BinarySequence>,
}

/// Lexicographic greedy code: scan `F_2^n` in order, keeping a word when it
/// is at distance at least `d` from everything kept so far.
pub fn greedy_code(n: usize, d: usize) -> Result<Codebook> {
    greedy_code_seeded(n, d, &[])
}

/// Greedy code that starts from `seeds`, which must themselves be pairwise
/// at distance at least `d`.
pub fn greedy_code_seeded(n: usize, d: usize, seeds: &[BinarySequence]) -> Result<Codebook> {
    if n > MAX_CODE_LEN {
        return Err(Error::OutOfRange(format!("greedy codes need n <= {MAX_CODE_LEN}, got {n}")));
    }
    if let Some(bad) = seeds.iter().find(|s| s.len() != n) {
        return Err(Error::LengthMismatch(bad.len(), n));
    }
    let mut kept: Vec<(BinarySequence, LcsMasks)> = Vec::new();
    let far = |x: &BinarySequence, kept: &[(BinarySequence, LcsMasks)]| {
        kept.iter().all(|(_, m)| n - lcs_bitparallel(x, m) >= d)
    };
    for s in seeds {
        if !far(s, &kept) {
            return Err(Error::Precondition(format!("seed {s} is closer than {d} to another seed")));
        }
        kept.push((*s, LcsMasks::new(s)));
    }
    for x in all_words(n) {
        if !seeds.contains(&x) && far(&x, &kept) {
            kept.push((x, LcsMasks::new(&x)));
        }
    }
    let mut words: Vec<_> = kept.into_iter().map(|(w, _)| w).collect();
    words.sort();
    Ok(Codebook { n, d, words })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadSet {
    pub t: i64,
    /// Distinct reads in the order they were drawn.
    pub reads: Vec<BinarySequence>,
}

/// `count` distinct outputs of a channel deleting exactly `t` uniformly
/// chosen positions of `x`; duplicates are redrawn.
pub fn channel_reads(x: &BinarySequence, t: i64, count: usize, seed: u64) -> Result<ReadSet> {
    channel_reads_stream(x, t, count, seed, 0)
}

/// [`channel_reads`] on an independent generator stream, so trial `i` of an
/// experiment is reproducible on its own.
pub fn channel_reads_stream(
    x: &BinarySequence,
    t: i64,
    count: usize,
    seed: u64,
    stream: u64,
) -> Result<ReadSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    draw_reads(x, t, count, &mut rng)
}

fn draw_reads(x: &BinarySequence, t: i64, count: usize, rng: &mut ChaCha8Rng) -> Result<ReadSet> {
    let available = ball_size(x, t);
    if count as u64 > available {
        return Err(Error::Precondition(format!(
            "{count} distinct reads requested but |D_{t}({x})| = {available}"
        )));
    }
    let mut seen = BTreeSet::new();
    let mut reads = Vec::with_capacity(count);
    while reads.len() < count {
        let positions = sample(rng, x.len(), t as usize).into_vec();
        let z = x.delete_positions(&positions);
        if seen.insert(z) {
            reads.push(z);
        }
    }
    Ok(ReadSet { t, reads })
}

/// Every codeword whose deletion ball contains all reads, in code order.
pub fn decode(reads: &ReadSet, code: &Codebook) -> Result<Vec<BinarySequence>> {
    if reads.reads.is_empty() {
        return Err(Error::Precondition("decode needs at least one read".into()));
    }
    let expect = code.n as i64 - reads.t;
    if let Some(bad) = reads.reads.iter().find(|r| r.len() as i64 != expect) {
        return Err(Error::LengthMismatch(bad.len(), expect.max(0) as usize));
    }
    Ok(code
        .words
        .iter()
        .filter(|c| reads.reads.iter().all(|r| is_subsequence(r, c)))
        .copied()
        .collect())
}

/// `N(n, d, t)` from a closed form where one applies, otherwise by search.
/// Returns the value and where it came from.
pub fn known_nvalue(n: usize, d: usize, t: i64) -> Result<(u64, &'static str)> {
    if let Some((value, _)) = formulas::closed_form(n, d, t) {
        return Ok((value, "formula"));
    }
    if let Some(value) = formulas::tabulated(n, d, t) {
        return Ok((value, "table"));
    }
    Ok((nvalue_search(n, d, t, &SearchOptions::default())?.value, "search"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentParams {
    pub n: usize,
    pub d: usize,
    pub t: i64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    /// `N(n, d, t)`.
    pub nvalue: u64,
    pub source: &'static str,
    /// Reads per trial, `N(n, d, t) + 1`.
    pub reads: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub kind: &'static str,
    pub size: usize,
    /// Codewords whose ball holds at least `N + 1` distinct reads.
    pub eligible: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessWitness {
    pub x: BinarySequence,
    pub y: BinarySequence,
    pub reads_count: usize,
    pub candidates: Vec<BinarySequence>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub schema_version: u32,
    pub params: ExperimentParams,
    pub generator: &'static str,
    pub threshold: Threshold,
    pub code: CodeSummary,
    pub trials_run: usize,
    /// Trials without an eligible codeword to transmit.
    pub trials_skipped: usize,
    pub unique_decodes: usize,
    pub positive_pass_rate: f64,
    pub sharpness_witness: Option<SharpnessWitness>,
}

impl ThresholdReport {
    /// Every trial decoded uniquely and a failure at `N` reads was exhibited.
    pub fn confirms_threshold(&self) -> bool {
        self.trials_run > 0
            && self.unique_decodes == self.trials_run
            && self.sharpness_witness.as_ref().is_some_and(|w| w.candidates.len() >= 2)
    }
}

/// A pair at distance at least `d` whose radius-`t` balls share exactly
/// `value` words.
fn extremal_pair(n: usize, d: usize, t: i64, value: u64) -> Result<Option<(BinarySequence, BinarySequence)>> {
    if let Ok(w) = construct_extremal(n, d, t) {
        if w.intersection == value {
            return Ok(Some((w.x, w.y)));
        }
    }
    let report = nvalue_search(n, d, t, &SearchOptions::default())?;
    Ok(report
        .witness
        .filter(|w| w.intersection == value)
        .map(|w| (w.x, w.y)))
}

/// Greedy code whose scan visits first the words able to emit `need`
/// distinct reads. The plain lexicographic code starts from low-run words
/// whose balls are too small to transmit at the threshold at all.
fn rich_first_code(n: usize, d: usize, t: i64, need: u64) -> Result<Codebook> {
    let rich: Vec<BinarySequence> = all_words(n).filter(|x| ball_size(x, t) >= need).collect();
    let seeds = greedy_code_from(n, d, &rich);
    greedy_code_seeded(n, d, &seeds)
}

/// Lexicographic greedy selection restricted to `pool`.
fn greedy_code_from(n: usize, d: usize, pool: &[BinarySequence]) -> Vec<BinarySequence> {
    let mut kept: Vec<(BinarySequence, LcsMasks)> = Vec::new();
    for x in pool {
        if kept.iter().all(|(_, m)| n - lcs_bitparallel(x, m) >= d) {
            kept.push((*x, LcsMasks::new(x)));
        }
    }
    kept.into_iter().map(|(w, _)| w).collect()
}

/// Transmits random codewords of a greedy `(n, d)` code through
/// `N(n, d, t) + 1` channels and checks the decoder returns only the
/// transmitted word; then exhibits `N` reads shared by two codewords.
pub fn threshold_experiment(n: usize, d: usize, t: i64, trials: usize, seed: u64) -> Result<ThresholdReport> {
    if t < 0 || t > n as i64 {
        return Err(Error::OutOfRange(format!("needs 0 <= t <= n, got n={n}, t={t}")));
    }
    let (nvalue, source) = known_nvalue(n, d, t)?;
    let need = nvalue + 1;
    let code = rich_first_code(n, d, t, need)?;
    let eligible: Vec<BinarySequence> = code
        .words
        .iter()
        .filter(|c| ball_size(c, t) >= need)
        .copied()
        .collect();

    let outcomes: Vec<Option<bool>> = (0..trials as u64)
        .into_par_iter()
        .map(|trial| -> Result<Option<bool>> {
            if eligible.is_empty() {
                return Ok(None);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let sent = eligible[rng.gen_range(0..eligible.len())];
            let reads = draw_reads(&sent, t, need as usize, &mut rng)?;
            Ok(Some(decode(&reads, &code)? == [sent]))
        })
        .collect::<Result<_>>()?;
    let trials_run = outcomes.iter().flatten().count();
    let unique_decodes = outcomes.iter().flatten().filter(|ok| **ok).count();

    let sharpness_witness = match extremal_pair(n, d, t, nvalue)? {
        Some((x, y)) => {
            let code = greedy_code_seeded(n, d, &[x, y])?;
            let reads = ReadSet {
                t,
                reads: intersection_elements(&x, t, &y, t),
            };
            let candidates = if reads.reads.is_empty() { Vec::new() } else { decode(&reads, &code)? };
            Some(SharpnessWitness {
                x,
                y,
                reads_count: reads.reads.len(),
                candidates,
            })
        }
        None => None,
    };

    Ok(ThresholdReport {
        schema_version: REPORT_SCHEMA_VERSION,
        params: ExperimentParams { n, d, t, trials, seed },
        generator: GENERATOR,
        threshold: Threshold {
            nvalue,
            source,
            reads: need,
        },
        code: CodeSummary {
            kind: "greedy-rich-first",
            size: code.words.len(),
            eligible: eligible.len(),
        },
        trials_run,
        trials_skipped: trials - trials_run,
        unique_decodes,
        positive_pass_rate: if trials_run == 0 { 0.0 } else { unique_decodes as f64 / trials_run as f64 },
        sharpness_witness,
    })
}
