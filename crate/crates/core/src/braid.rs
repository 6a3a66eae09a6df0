//! Braid words and the fixed words used throughout the crate.
//!
//! A letter `k > 0` is `σ_k`, `k < 0` is `σ_{|k|}⁻¹`. The word `l₁ l₂ … l_m`
//! is the product `b₁ b₂ ⋯ b_m`; in every left action (tangles, free groups,
//! lamination coordinates) the rightmost letter acts first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates the letters against the strand count. No rewriting is done.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands { strands, min: 2 });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated signed integers, e.g. `"3 3 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>().map_err(|_| Error::Parse {
                    what: "braid letter",
                    input: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    /// Product `self · other`, freely reduced.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters: free_reduce(letters),
        })
    }

    /// Reversed word with every sign flipped.
    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            strands: self.strands,
            letters: free_reduce(letters),
        }
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        u.compose(self)?.compose(&u.inverse())
    }

    pub fn freely_reduced(&self) -> Self {
        Self {
            strands: self.strands,
            letters: free_reduce(self.letters.clone()),
        }
    }

    /// Same letters read with more strands (the only sanctioned widening
    /// besides [`s_plus`]).
    pub fn widen(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: strands,
            });
        }
        Self::new(strands, self.letters.clone())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Induced permutation of endpoint labels; `permutation_of(ab) =
    /// permutation_of(a) ∘ permutation_of(b)`.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.strands).collect();
        for img in images.iter_mut() {
            for &l in self.letters.iter().rev() {
                let k = l.unsigned_abs() as usize;
                if *img == k {
                    *img = k + 1;
                } else if *img == k + 1 {
                    *img = k;
                }
            }
        }
        Permutation::from_images(&images).expect("braid permutation is a bijection")
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Cancels adjacent `k, -k` pairs until none remain.
pub(crate) fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A planar word read as an element of the spherical braid group.
///
/// Equality of the wrapped words implies equality in `SB_n`; the converse
/// fails, use [`crate::mcg::mcg_equal`] for the mapping class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SphericalBraid {
    word: BraidWord,
}

impl SphericalBraid {
    pub fn new(word: BraidWord) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.word.strands
    }

    pub fn into_word(self) -> BraidWord {
        self.word
    }
}

/// `s: B_n → SB_n`, same word and strand count.
pub fn s_map(word: &BraidWord) -> SphericalBraid {
    SphericalBraid::new(word.clone())
}

/// `s₊: B_n → SB_{n+1}`, same letters plus a straight last strand.
pub fn s_plus(word: &BraidWord) -> SphericalBraid {
    SphericalBraid::new(BraidWord {
        strands: word.strands + 1,
        letters: word.letters.clone(),
    })
}

/// `δ_j = σ₁σ₂⋯σ_{j−1}` in `B_n`.
pub fn delta_j(strands: usize, j: usize) -> Result<BraidWord> {
    if j < 2 || j > strands {
        return Err(Error::OutOfRange {
            name: "j",
            value: j as i64,
            expected: "2 <= j <= strands",
        });
    }
    BraidWord::new(strands, (1..j as i32).collect())
}

/// Half twist `Δ = δ_n δ_{n−1} ⋯ δ₂`.
pub fn half_twist(strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands { strands, min: 2 });
    }
    let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
    for j in (2..=strands).rev() {
        letters.extend(1..j as i32);
    }
    BraidWord::new(strands, letters)
}

/// Full twist `Δ²`.
pub fn full_twist(strands: usize) -> Result<BraidWord> {
    let d = half_twist(strands)?;
    d.compose(&d)
}

/// Sphere relator `σ₁σ₂⋯σ_{m−1}σ_{m−1}⋯σ₂σ₁`, trivial in `SB_m`.
pub fn sphere_relator(strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands { strands, min: 2 });
    }
    let m = strands as i32;
    let letters: Vec<i32> = (1..m).chain((1..m).rev()).collect();
    BraidWord::new(strands, letters)
}

/// The generating words `X`, `Y`, `Z` of the entropy families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyGenerator {
    /// `X_m = (σ₂σ₃)³` written as `σ₃²σ₂σ₃²σ₂`, `m ≥ 5`.
    X,
    /// `Y_{2n} = σ₁²σ₂⋯σ_{2n−1}σ₁⋯σ_{2n−2}`, even strand count `2n ≥ 6`.
    Y,
    /// `Z_{2n−1} = σ₁²σ₂⋯σ_{2n−2}σ₁⋯σ_{2n−3}σ_{2n−3}σ_{2n−2}`, odd strand count `2n−1 ≥ 5`.
    Z,
}

/// `X`, `Y` or `Z` on the given strand count.
pub fn family_word(which: FamilyGenerator, strands: usize) -> Result<BraidWord> {
    let m = strands as i32;
    match which {
        FamilyGenerator::X => {
            if strands < 5 {
                return Err(Error::OutOfRange {
                    name: "strands",
                    value: strands as i64,
                    expected: "X needs m >= 5",
                });
            }
            BraidWord::new(strands, vec![3, 3, 2, 3, 3, 2])
        }
        FamilyGenerator::Y => {
            if strands < 6 || !strands.is_multiple_of(2) {
                return Err(Error::OutOfRange {
                    name: "strands",
                    value: strands as i64,
                    expected: "Y needs an even strand count 2n with n >= 3",
                });
            }
            let mut letters = vec![1];
            letters.extend(1..m);
            letters.extend(1..m - 1);
            BraidWord::new(strands, letters)
        }
        FamilyGenerator::Z => {
            if strands < 5 || strands % 2 != 1 {
                return Err(Error::OutOfRange {
                    name: "strands",
                    value: strands as i64,
                    expected: "Z needs an odd strand count 2n-1 with n >= 3",
                });
            }
            let mut letters = vec![1];
            letters.extend(1..m);
            letters.extend(1..m - 1);
            letters.extend([m - 2, m - 1]);
            BraidWord::new(strands, letters)
        }
    }
}

/// Which link the entropy family lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkFamily {
    /// `X·Y^{2n+1} ∈ B_{4n+6}` (trivial knot).
    Unknot,
    /// `X·Z^{2n+1} ∈ B_{4n+7}` (Hopf link).
    Hopf,
}

impl LinkFamily {
    pub fn tag(self) -> &'static str {
        match self {
            LinkFamily::Unknot => "unknot",
            LinkFamily::Hopf => "hopf",
        }
    }
}

impl std::str::FromStr for LinkFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unknot" => Ok(LinkFamily::Unknot),
            "hopf" => Ok(LinkFamily::Hopf),
            _ => Err(Error::Parse {
                what: "family",
                input: s.to_string(),
            }),
        }
    }
}

/// Family member at index `n ≥ 1`: `X·Y^{2n+1}` or `X·Z^{2n+1}`.
pub fn entropy_family_word(which: LinkFamily, n: usize) -> Result<BraidWord> {
    family_member(which, n, false)
}

/// Squared variant: `X·Y·X·Y^{2n+1} ∈ B_{4n+8}` or `X·Z·X·Z^{2n+1} ∈ B_{4n+9}`.
pub fn entropy_family_word_squared(which: LinkFamily, n: usize) -> Result<BraidWord> {
    family_member(which, n, true)
}

fn family_member(which: LinkFamily, n: usize, squared: bool) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as i64,
            expected: "n >= 1",
        });
    }
    let (strands, gen) = match (which, squared) {
        (LinkFamily::Unknot, false) => (4 * n + 6, FamilyGenerator::Y),
        (LinkFamily::Hopf, false) => (4 * n + 7, FamilyGenerator::Z),
        (LinkFamily::Unknot, true) => (4 * n + 8, FamilyGenerator::Y),
        (LinkFamily::Hopf, true) => (4 * n + 9, FamilyGenerator::Z),
    };
    let x = family_word(FamilyGenerator::X, strands)?;
    let g = family_word(gen, strands)?;
    let tail = g.pow(2 * n as i32 + 1);
    if squared {
        x.compose(&g)?.compose(&x)?.compose(&tail)
    } else {
        x.compose(&tail)
    }
}
