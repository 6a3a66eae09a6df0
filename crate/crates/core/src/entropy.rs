//! Growth-rate estimates from iterated lamination coordinates.
//!
//! Each seed curve is pushed through `w` repeatedly; the increments
//! `g_k = log ‖c_{k+1}‖₁ − log ‖c_k‖₁` are averaged over non-overlapping
//! windows and the estimate is the last window mean, maximised over seeds.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{entropy_family_word, BraidWord, LinkFamily};
use crate::error::{Error, Result};
use crate::lamination::{Chart, LamCoords};

pub const WINDOW: usize = 10;
/// Growth increments below this count as no exponential growth.
pub const EXPONENTIAL_FLOOR: f64 = 1e-3;
/// Windows of positive growth needed before calling growth exponential.
pub const MIN_EVIDENCE_WINDOWS: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyOptions {
    pub max_iter: usize,
    pub tol: f64,
    /// Seed curves; empty means the adjacent-pair curves.
    pub seeds: Vec<LamCoords>,
}

impl Default for EntropyOptions {
    fn default() -> Self {
        Self {
            max_iter: 200,
            tol: 1e-8,
            seeds: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Growth {
    Exponential,
    SubExponential,
    Inconclusive,
}

impl Growth {
    pub fn tag(self) -> &'static str {
        match self {
            Growth::Exponential => "exponential",
            Growth::SubExponential => "sub-exponential",
            Growth::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub strands: usize,
    pub word_length: usize,
    /// Iterations of the word, maximum over seeds.
    pub iterations: usize,
    pub log_lambda: f64,
    /// Trailing window means of the winning seed, oldest first.
    pub windows: Vec<f64>,
    pub converged: bool,
    pub classification: Growth,
}

/// Result of iterating one seed.
#[derive(Debug, Clone)]
struct SeedRun {
    iterations: usize,
    windows: Vec<f64>,
    converged: bool,
}

impl SeedRun {
    fn estimate(&self) -> f64 {
        self.windows.last().copied().unwrap_or(0.0).max(0.0)
    }
}

fn window_converged(prev: f64, last: f64, tol: f64) -> bool {
    (last - prev).abs() <= tol * last.abs()
}

fn run_seed(w: &BraidWord, seed: &LamCoords, opts: &EntropyOptions) -> SeedRun {
    let mut chart = Chart::from_coords(seed);
    let mut log_prev = chart.log_norm();
    let mut windows = Vec::new();
    let mut acc = 0.0;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iter {
        chart.apply(w.letters());
        let log_next = chart.log_norm();
        acc += log_next - log_prev;
        log_prev = log_next;
        iterations += 1;
        if iterations % WINDOW == 0 {
            windows.push(acc / WINDOW as f64);
            acc = 0.0;
            let k = windows.len();
            if k >= MIN_EVIDENCE_WINDOWS
                && window_converged(windows[k - 3], windows[k - 2], opts.tol)
                && window_converged(windows[k - 2], windows[k - 1], opts.tol)
            {
                converged = true;
                break;
            }
        }
    }
    SeedRun {
        iterations,
        windows,
        converged,
    }
}

fn classify(run: &SeedRun, strands: usize) -> Growth {
    let w = &run.windows;
    let tail = &w[w.len().saturating_sub(MIN_EVIDENCE_WINDOWS)..];
    if run.converged
        && tail.len() == MIN_EVIDENCE_WINDOWS
        && tail.iter().all(|&g| g > EXPONENTIAL_FLOOR)
    {
        return Growth::Exponential;
    }
    // Polynomial growth of degree d has g_k ≈ d/k, and d < strands.
    let Some(&last) = w.last() else {
        return Growth::Inconclusive;
    };
    let k = run.iterations as f64 - WINDOW as f64 / 2.0;
    let settled = w.len() >= 2 && w[w.len() - 1] <= w[w.len() - 2] + 1e-12;
    if last.abs() * k <= strands as f64 && settled {
        Growth::SubExponential
    } else {
        Growth::Inconclusive
    }
}

/// Estimates `log λ(w)` for `w ∈ B_m`, `m ≥ 3`.
pub fn entropy_estimate(w: &BraidWord, opts: &EntropyOptions) -> Result<EntropyReport> {
    let m = w.strands();
    if m < 3 {
        return Err(Error::TooFewStrands { strands: m, min: 3 });
    }
    let seeds = if opts.seeds.is_empty() {
        (1..m)
            .map(|p| LamCoords::adjacent_pair(m, p))
            .collect::<Result<Vec<_>>>()?
    } else {
        for s in &opts.seeds {
            if s.punctures() != m {
                return Err(Error::StrandMismatch {
                    left: m,
                    right: s.punctures(),
                });
            }
        }
        opts.seeds.clone()
    };
    let runs: Vec<SeedRun> = seeds.iter().map(|s| run_seed(w, s, opts)).collect();
    let best = runs
        .iter()
        .max_by(|a, b| a.estimate().total_cmp(&b.estimate()))
        .expect("at least two seeds");
    let classification = classify(best, m);
    let keep = best.windows.len().saturating_sub(MIN_EVIDENCE_WINDOWS);
    Ok(EntropyReport {
        strands: m,
        word_length: w.len(),
        iterations: runs.iter().map(|r| r.iterations).max().unwrap_or(0),
        log_lambda: best.estimate(),
        windows: best.windows[keep..].to_vec(),
        converged: best.converged,
        classification,
    })
}

/// Penner's bound `log 2 / (4m − 12)` for pseudo-Anosov classes on the
/// `m`-punctured sphere, `m ≥ 4`.
pub fn penner_lower_bound(m: usize) -> Result<f64> {
    if m < 4 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m as i64,
            expected: "m >= 4",
        });
    }
    Ok(std::f64::consts::LN_2 / (4 * m - 12) as f64)
}

/// Iteration cap used by the family sweep.
pub const SWEEP_MAX_ITER: usize = 5000;

/// Note attached to sweep output.
pub const SWEEP_CAVEAT: &str =
    "disk estimates; for small n the spherical entropy of the family may differ";

impl EntropyOptions {
    /// Defaults with the larger sweep iteration cap.
    pub fn for_sweep() -> Self {
        Self {
            max_iter: SWEEP_MAX_ITER,
            ..Self::default()
        }
    }
}

/// Largest family index accepted by [`family_sweep`].
pub const SWEEP_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub family: LinkFamily,
    pub n: usize,
    pub strands: usize,
    pub log_lambda: f64,
    pub normalized: f64,
    pub penner_bound: f64,
    pub converged: bool,
}

/// Runs [`entropy_estimate`] on the family members `n ∈ range`, in parallel,
/// returning rows ordered by `n`.
pub fn family_sweep(
    which: LinkFamily,
    range: std::ops::RangeInclusive<usize>,
    opts: &EntropyOptions,
) -> Result<Vec<SweepRecord>> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo < 1 || hi > SWEEP_CAP || lo > hi {
        return Err(Error::OutOfRange {
            name: "n",
            value: if lo < 1 || lo > hi {
                lo as i64
            } else {
                hi as i64
            },
            expected: "1 <= from <= to <= 12",
        });
    }
    range
        .into_par_iter()
        .map(|n| {
            let w = entropy_family_word(which, n)?;
            let report = entropy_estimate(&w, opts)?;
            let strands = w.strands();
            Ok(SweepRecord {
                family: which,
                n,
                strands,
                log_lambda: report.log_lambda,
                normalized: strands as f64 * report.log_lambda,
                penner_bound: penner_lower_bound(strands)?,
                converged: report.converged,
            })
        })
        .collect()
}
