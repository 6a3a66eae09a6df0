//! Equality of mapping classes of the `m`-punctured sphere.
//!
//! `Γ(a) = Γ(b)` in `MCG(Σ_{0,m})` iff the permutations agree and
//! `φ_a ∘ φ_b⁻¹` becomes inner on `F_m / ⟨⟨x₁⋯x_m⟩⟩ ≅ F_{m−1}`, where the
//! last generator is eliminated as `x_m = (x₁⋯x_{m−1})⁻¹`.

use crate::artin::artin_action;
use crate::braid::SphericalBraid;
use crate::error::{Error, Result};
use crate::free::{is_inner, FreeEndo, FreeWord};

/// Pushes an endomorphism fixing `x₁⋯x_m` down to the sphere quotient.
pub fn sphere_quotient(e: &FreeEndo) -> FreeEndo {
    let m = e.rank();
    let r = m - 1;
    let last_inv: Vec<i32> = (1..=r as i32).rev().map(|i| -i).collect();
    let images = (1..=r)
        .map(|i| {
            let mut letters = Vec::new();
            for &l in e.image(i).letters() {
                if l.unsigned_abs() as usize == m {
                    if l > 0 {
                        letters.extend_from_slice(&last_inv);
                    } else {
                        letters.extend(last_inv.iter().rev().map(|x| -x));
                    }
                } else {
                    letters.push(l);
                }
            }
            FreeWord::new(r, letters)
        })
        .collect();
    FreeEndo::from_images(images)
}

/// `Γ(a) = Γ(b)` in `MCG(Σ_{0,m})`, `m ≥ 3`.
pub fn mcg_equal(a: &SphericalBraid, b: &SphericalBraid) -> Result<bool> {
    a.word().check_same(b.word())?;
    let m = a.strands();
    if m < 3 {
        return Err(Error::TooFewStrands { strands: m, min: 3 });
    }
    if a.word().permutation() != b.word().permutation() {
        return Ok(false);
    }
    let quotient = a.word().compose(&b.word().inverse())?;
    let psi = sphere_quotient(&artin_action(&quotient));
    Ok(is_inner(&psi).is_some())
}

/// `Γ(w) = 1`.
pub fn mcg_trivial(w: &SphericalBraid) -> Result<bool> {
    let id = SphericalBraid::new(crate::braid::BraidWord::identity(w.strands())?);
    mcg_equal(w, &id)
}
