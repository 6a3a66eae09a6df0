//! Dehornoy handle reduction for the word problem in `B_n`.
//!
//! A `σ_i`-handle is a factor `σ_i^e u σ_i^{-e}` where `u` has no letter of
//! index `≤ i`. Reducing it replaces each `σ_{i+1}^d` of `u` with
//! `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e` and drops the two ends. We always reduce the
//! handle whose right end comes first; its interior then contains no handle at
//! all, so the reduction is permitted and the process terminates.

use crate::artin::artin_action;
use crate::braid::{free_reduce, BraidWord};
use crate::error::{Error, Result};

/// Default cap on handle reductions.
pub const DEFAULT_MAX_STEPS: u64 = 10_000_000;

/// Outcome of a full reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Handle-free word equal to the input; empty iff the input is trivial.
    pub word: Vec<i32>,
    pub steps: u64,
}

/// Reduces `letters` (strand count `strands`) until no handle is left.
pub fn handle_reduce(strands: usize, letters: &[i32], max_steps: u64) -> Result<Reduction> {
    let mut word = free_reduce(letters.to_vec());
    let mut steps = 0u64;
    // last[i]: position of the latest letter with index <= i+1 seen so far.
    let mut last: Vec<Option<usize>> = vec![None; strands];
    loop {
        let Some((p, q)) = first_handle(&word, &mut last) else {
            return Ok(Reduction { word, steps });
        };
        if steps >= max_steps {
            return Err(Error::ResourceExhausted { steps });
        }
        steps += 1;
        let i = word[p].abs();
        let e = word[p].signum();
        let mut replaced = Vec::with_capacity(word.len() + 2 * (q - p));
        replaced.extend_from_slice(&word[..p]);
        for &l in &word[p + 1..q] {
            if l.abs() == i + 1 {
                replaced.push(-e * (i + 1));
                replaced.push(l.signum() * i);
                replaced.push(e * (i + 1));
            } else {
                replaced.push(l);
            }
        }
        replaced.extend_from_slice(&word[q + 1..]);
        word = free_reduce(replaced);
    }
}

/// Finds the handle `(p, q)` with the smallest right end `q`.
fn first_handle(word: &[i32], last: &mut [Option<usize>]) -> Option<(usize, usize)> {
    last.iter_mut().for_each(|s| *s = None);
    for (q, &l) in word.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        if let Some(p) = last[i - 1] {
            if word[p] == -l {
                return Some((p, q));
            }
        }
        for slot in last[i - 1..].iter_mut() {
            *slot = Some(q);
        }
    }
    None
}

/// `true` iff the word is the identity of `B_n`.
pub fn is_trivial(w: &BraidWord, max_steps: u64) -> Result<bool> {
    Ok(handle_reduce(w.strands(), w.letters(), max_steps)?
        .word
        .is_empty())
}

/// Equality in `B_n` by handle reduction of `a · b⁻¹`.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    braid_equal_capped(a, b, DEFAULT_MAX_STEPS)
}

pub fn braid_equal_capped(a: &BraidWord, b: &BraidWord, max_steps: u64) -> Result<bool> {
    a.check_same(b)?;
    is_trivial(&a.compose(&b.inverse())?, max_steps)
}

/// Equality in `B_n` decided by the (faithful) Artin representation.
pub fn braid_equal_artin(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_same(b)?;
    Ok(artin_action(a) == artin_action(b))
}

/// Handle-free representative of `w`, the `braid normalize` output.
pub fn normalize(w: &BraidWord, max_steps: u64) -> Result<BraidWord> {
    let r = handle_reduce(w.strands(), w.letters(), max_steps)?;
    BraidWord::new(w.strands(), r.word)
}
