//! Seeded q-ary symmetric-channel simulation driving the fuzzy decoder.
//!
//! Trial `t` derives its randomness from `(seed, t)` alone — the base seed
//! picks the key and the trial index picks the stream — so reports are
//! byte-identical across runs and insensitive to trial order.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fuzzcode::{FuzzyDecoder, FuzzyLinearCode, Rational};

use crate::{failure, usage, CliError};

pub struct SimReport {
    pub trials: u64,
    pub seed: u64,
    pub channel_p: f64,
    pub alpha1: Rational,
    pub cut_dimension: usize,
    /// Arrived unchanged (still a codeword of the cut).
    pub clean: u64,
    /// Changed by the channel but still inside the cut: the decoder never
    /// sees these as errors.
    pub undetected: u64,
    /// Fell below the confidence level and went through the table.
    pub decoded: u64,
    /// Decoded trials that recovered the transmitted word exactly.
    pub corrected: u64,
    /// Decoded trials whose corrected membership equals the transmitted
    /// word's membership (the level was restored even if the word was not).
    pub membership_corrected: u64,
    pub total_error_weight: u64,
}

impl fmt::Display for SimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials: {}", self.trials)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "channel_p: {:.6}", self.channel_p)?;
        writeln!(f, "alpha1: {}", self.alpha1)?;
        writeln!(f, "cut_dimension: {}", self.cut_dimension)?;
        writeln!(f, "clean: {}", self.clean)?;
        writeln!(f, "undetected: {}", self.undetected)?;
        writeln!(f, "decoded: {}", self.decoded)?;
        writeln!(f, "corrected: {}", self.corrected)?;
        writeln!(f, "membership_corrected: {}", self.membership_corrected)?;
        let trials = self.trials as f64;
        writeln!(
            f,
            "frame_success_rate: {:.6}",
            (self.clean + self.corrected) as f64 / trials
        )?;
        let mcr = if self.decoded == 0 {
            1.0
        } else {
            self.membership_corrected as f64 / self.decoded as f64
        };
        writeln!(f, "membership_correction_rate: {mcr:.6}")?;
        writeln!(
            f,
            "avg_error_weight: {:.6}",
            self.total_error_weight as f64 / trials
        )
    }
}

pub fn run(
    chain: &FuzzyLinearCode,
    alpha1: Rational,
    channel_p: f64,
    trials: u64,
    seed: u64,
    cap: u128,
) -> Result<SimReport, CliError> {
    if !(0.0..1.0).contains(&channel_p) {
        return Err(usage(format!("channel-p must lie in [0, 1), got {channel_p}")));
    }
    if trials == 0 {
        return Err(usage("trials must be at least 1"));
    }
    let cut = chain
        .cut(alpha1)
        .ok_or_else(|| failure(format!("cut at level {alpha1} is empty")))?;
    if cut.dim() == 0 {
        return Err(failure(format!("cut at level {alpha1} is the zero code")));
    }
    let p = chain.field().modulus();
    let n = chain.n();
    let mut decoder = FuzzyDecoder::with_cap(chain.clone(), cap);

    let mut report = SimReport {
        trials,
        seed,
        channel_p,
        alpha1,
        cut_dimension: cut.dim(),
        clean: 0,
        undetected: 0,
        decoded: 0,
        corrected: 0,
        membership_corrected: 0,
        total_error_weight: 0,
    };

    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);

        let msg: Vec<u64> = (0..cut.dim()).map(|_| rng.random_range(0..p)).collect();
        let msg = fuzzcode::FieldVector::new(chain.field(), msg).map_err(|e| failure(e.to_string()))?;
        let x = cut.encode(&msg).map_err(|e| failure(e.to_string()))?;

        // q-ary symmetric channel: each coordinate is replaced, with
        // probability channel_p, by a uniformly chosen different symbol.
        let mut y_entries = x.entries().to_vec();
        for slot in y_entries.iter_mut().take(n) {
            if rng.random::<f64>() < channel_p {
                let shift = rng.random_range(1..p);
                *slot = (*slot + shift) % p;
            }
        }
        let y = fuzzcode::FieldVector::new(chain.field(), y_entries).map_err(|e| failure(e.to_string()))?;
        report.total_error_weight += y.distance(&x).map_err(|e| failure(e.to_string()))? as u64;

        let membership = chain.membership(&y).map_err(|e| failure(e.to_string()))?;
        if membership >= alpha1 {
            if y == x {
                report.clean += 1;
            } else {
                report.undetected += 1;
            }
            continue;
        }
        let result = decoder.decode(alpha1, &y).map_err(|e| failure(e.to_string()))?;
        report.decoded += 1;
        if result.codeword == x {
            report.corrected += 1;
        }
        if result.corrected_membership == chain.membership(&x).map_err(|e| failure(e.to_string()))? {
            report.membership_corrected += 1;
        }
    }
    Ok(report)
}
