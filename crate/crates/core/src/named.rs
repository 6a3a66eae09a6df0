//! Explicit five-strand words behind the pseudo-Anosov seed `α = XZ`.

use crate::braid::{family_word, full_twist, BraidWord, FamilyGenerator};

fn b5(letters: &[i32]) -> BraidWord {
    BraidWord::new(5, letters.to_vec()).expect("valid five-strand word")
}

/// `α = X·Z ∈ B₅`.
pub fn alpha() -> BraidWord {
    let x = family_word(FamilyGenerator::X, 5).expect("m = 5");
    let z = family_word(FamilyGenerator::Z, 5).expect("2n-1 = 5");
    x.compose(&z).expect("same strands")
}

/// `α·Δ⁻²` computed from the definitions.
pub fn alpha_times_inverse_full_twist() -> BraidWord {
    alpha()
        .compose(&full_twist(5).expect("5 strands").inverse())
        .expect("same strands")
}

/// The short positive/negative word claimed equal to `α·Δ⁻²`.
pub fn alpha_times_inverse_full_twist_short() -> BraidWord {
    b5(&[2, 3, 3, 2, -4, -3, -3, -4, -2, -1, -3, -2])
}

/// `γ = σ₁σ₂σ₄⁻¹σ₃⁻²σ₄⁻¹σ₂⁻¹σ₃⁻¹`; dropping strands 3 and 4 leaves `σ₁σ₂⁻²`.
pub fn gamma() -> BraidWord {
    b5(&[1, 2, -4, -3, -3, -4, -2, -3])
}

/// The conjugator `η` with `η⁻¹(αΔ⁻²)η = γ`.
pub fn eta() -> BraidWord {
    b5(&[
        1, 2, 1, 3, 2, 1, 4, //
        1, 2, 1, 4, 3, 2, 1, //
        2, 3, 2, 1, 4, 3, //
        3, 4, 3, 2, 1,
    ])
}

/// `η⁻¹ (αΔ⁻²) η γ⁻¹`, which must be the identity of `B₅`.
pub fn eta_identity_word() -> BraidWord {
    let e = eta();
    e.inverse()
        .compose(&alpha_times_inverse_full_twist())
        .and_then(|w| w.compose(&e))
        .and_then(|w| w.compose(&gamma().inverse()))
        .expect("same strands")
}

/// `σ₁σ₂⁻² ∈ B₃`.
pub fn three_strand_seed() -> BraidWord {
    BraidWord::new(3, vec![1, -2, -2]).expect("valid")
}
