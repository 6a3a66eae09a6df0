//! The Artin action of `B_n` on the free group `F_n` of puncture meridians.
//!
//! `σ_i`: `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, other generators fixed.
//! A word acts rightmost letter first, so `φ_{ab} = φ_a ∘ φ_b`.

use crate::braid::BraidWord;
use crate::free::{FreeEndo, FreeWord};

/// `φ_w` on the free group of rank `w.strands()`.
pub fn artin_action(w: &BraidWord) -> FreeEndo {
    let n = w.strands();
    let mut phi = FreeEndo::identity(n);
    // φ ← φ ∘ φ_letter, reading left to right.
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let images = phi.images_mut();
        let a = images[i].clone();
        let b = images[i + 1].clone();
        if l > 0 {
            images[i] = a.mul(&b).mul(&a.inverse());
            images[i + 1] = a;
        } else {
            images[i] = b.clone();
            images[i + 1] = b.inverse().mul(&a).mul(&b);
        }
    }
    phi
}

/// `x₁x₂⋯x_n`, fixed by every `φ_w`.
pub fn boundary_word(rank: usize) -> FreeWord {
    FreeWord::new(rank, (1..=rank as i32).collect())
}
