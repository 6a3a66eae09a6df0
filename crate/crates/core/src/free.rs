//! Reduced words in a free group and endomorphisms given by generator images.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::free_reduce;

/// A freely reduced word over `x₁, …, x_rank`; letter `k > 0` is `x_k`,
/// `k < 0` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// Reduces `letters`. Panics on a letter outside the rank.
    pub fn new(rank: usize, letters: Vec<i32>) -> Self {
        for &l in &letters {
            assert!(
                l != 0 && (l.unsigned_abs() as usize) <= rank,
                "free letter {l} out of range for rank {rank}"
            );
        }
        Self {
            rank,
            letters: free_reduce(letters),
        }
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        Self::new(rank, vec![i as i32])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            rank: self.rank,
            letters: out,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Splits the word as `v · c · v⁻¹` with `c` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (Self, Self) {
        let l = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < l.len() && l[k] == -l[l.len() - 1 - k] {
            k += 1;
        }
        let v = Self {
            rank: self.rank,
            letters: l[..k].to_vec(),
        };
        let core = Self {
            rank: self.rank,
            letters: l[k..l.len() - k].to_vec(),
        };
        (v, core)
    }

    /// Exponent sums per generator (abelianization).
    pub fn abelianization(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.rank];
        for &l in &self.letters {
            out[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        out
    }

    /// Image under the letter substitution `x_k ↦ map(k)`.
    pub fn map_letters(&self, target_rank: usize, map: impl Fn(i32) -> i32) -> Self {
        Self::new(target_rank, self.letters.iter().map(|&l| map(l)).collect())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An endomorphism of the free group of rank `rank`, stored as the images of
/// the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            images: (1..=rank).map(|i| FreeWord::generator(rank, i)).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Self {
        let rank = images.len();
        assert!(images.iter().all(|w| w.rank() == rank));
        Self { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub(crate) fn images_mut(&mut self) -> &mut Vec<FreeWord> {
        &mut self.images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut acc = FreeWord::identity(self.rank);
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                acc = acc.mul(img);
            } else {
                acc = acc.mul(&img.inverse());
            }
        }
        acc
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Total letter count of the images.
    pub fn size(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

/// Returns `u` with `e(x_i) = u x_i u⁻¹` for every generator, if one exists.
pub fn is_inner(e: &FreeEndo) -> Option<FreeWord> {
    let rank = e.rank();
    if rank == 0 {
        return Some(FreeWord::identity(0));
    }
    let (v, core) = e.image(1).cyclic_decomposition();
    if core.letters() != [1] {
        return None;
    }
    let u = if rank == 1 {
        v
    } else {
        // e(x₂) = v x₁^k x₂ x₁^-k v⁻¹ pins k.
        let w2 = e.image(2).conjugate_by(&v.inverse());
        let l = w2.letters();
        let mut k: i64 = 0;
        let lead = l.first().copied();
        if lead == Some(1) || lead == Some(-1) {
            let s = lead.unwrap();
            while (k.unsigned_abs() as usize) < l.len() && l[k.unsigned_abs() as usize] == s {
                k += s as i64;
            }
        }
        v.mul(&FreeWord::generator(rank, 1).pow(k))
    };
    let ok = (1..=rank).all(|i| e.image(i) == &FreeWord::generator(rank, i).conjugate_by(&u));
    ok.then_some(u)
}
