//! Shared inputs for the criterion benchmarks.

use goeritz_core::braid::{entropy_family_word, half_twist, BraidWord, LinkFamily};

/// The trivial five-strand word `η⁻¹(αΔ⁻²)ηγ⁻¹` used as a word-problem load.
pub fn eta_identity_word() -> BraidWord {
    goeritz_core::named::eta_identity_word()
}

/// `Δ²` as a word that handle reduction must prove non-trivial.
pub fn full_twist_word(strands: usize) -> BraidWord {
    let d = half_twist(strands).expect("strands >= 2");
    d.compose(&d).expect("same strands")
}

pub fn family(which: LinkFamily, n: usize) -> BraidWord {
    entropy_family_word(which, n).expect("n >= 1")
}
