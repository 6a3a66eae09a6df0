//! Component count and linking number of plat closures.
//!
//! The diagram has standard caps on top, the braid letters read top to bottom
//! (leftmost letter on top), and the bottom pairing as cups.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A fixed-point-free involution of `{1..2n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    /// `(1 2)(3 4)⋯(2n−1 2n)`.
    pub fn standard(size: usize) -> Result<Self> {
        if !size.is_multiple_of(2) {
            return Err(Error::OddStrands(size));
        }
        Ok(Self {
            partner: (0..size).map(|i| i ^ 1).collect(),
        })
    }

    /// From 1-based partner images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let bad = || Error::InvalidPairing(format!("{images:?}"));
        let mut partner = Vec::with_capacity(size);
        for (i, &j) in images.iter().enumerate() {
            if j == 0 || j > size || j - 1 == i || images[j - 1] != i + 1 {
                return Err(bad());
            }
            partner.push(j - 1);
        }
        Ok(Self { partner })
    }

    /// Pushes the pairing forward: `{p(a), p(b)}` for each pair `{a, b}`.
    pub fn conjugated(&self, p: &Permutation) -> Self {
        assert_eq!(p.size(), self.size());
        let img = p.images0();
        let mut partner = vec![0; self.size()];
        for (a, &b) in self.partner.iter().enumerate() {
            partner[img[a]] = img[b];
        }
        Self { partner }
    }

    pub fn size(&self) -> usize {
        self.partner.len()
    }

    /// Partner of the 1-based point `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] + 1
    }

    /// The pairs `(a, b)` with `a < b`, 1-based, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| a < b)
            .map(|(a, &b)| (a + 1, b + 1))
            .collect()
    }

    pub fn as_permutation(&self) -> Permutation {
        let images: Vec<usize> = self.partner.iter().map(|&j| j + 1).collect();
        Permutation::from_images(&images).expect("involution")
    }
}

/// Invariants of a plat diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatInvariants {
    pub components: usize,
    /// Absolute linking number, present only for two-component links.
    pub linking: Option<u64>,
    pub crossings: usize,
}

fn check_size(p: &Pairing, strands: usize) -> Result<()> {
    if p.size() != strands {
        return Err(Error::StrandMismatch {
            left: p.size(),
            right: strands,
        });
    }
    Ok(())
}

/// Number of link components of the plat `top | braid | bottom`.
pub fn component_count(top: &Pairing, braid: &BraidWord, bottom: &Pairing) -> Result<usize> {
    check_size(top, braid.strands())?;
    check_size(bottom, braid.strands())?;
    let pushed = bottom.conjugated(&braid.permutation());
    let product = top.as_permutation().compose(&pushed.as_permutation());
    Ok(product.cycles().len() / 2)
}

/// Invariants of the plat with standard caps and cups around the word
/// `top · bottom` of a bridge decomposition.
pub fn plat_invariants(top: &BraidWord, bottom: &BraidWord) -> Result<PlatInvariants> {
    top.check_same(bottom)?;
    let mut letters = top.letters().to_vec();
    letters.extend_from_slice(bottom.letters());
    plat_diagram(top.strands(), &letters)
}

/// Traces every component of the plat of `letters` between standard caps
/// and cups.
pub fn plat_diagram(strands: usize, letters: &[i32]) -> Result<PlatInvariants> {
    if !strands.is_multiple_of(2) {
        return Err(Error::OddStrands(strands));
    }
    BraidWord::new(strands, letters.to_vec())?;
    let len = letters.len();
    let mut visited = vec![false; strands];
    // Per crossing: (component, direction) of the two strands passing through it.
    let mut through: Vec<Vec<(usize, i64)>> = vec![Vec::new(); len];
    let mut components = 0;
    for start in 0..strands {
        if visited[start] {
            continue;
        }
        let comp = components;
        components += 1;
        let mut pos = start;
        loop {
            // Down from level 0 to level len.
            visited[pos] = true;
            for (k, &l) in letters.iter().enumerate() {
                let i = l.unsigned_abs() as usize - 1;
                if pos == i {
                    pos = i + 1;
                    through[k].push((comp, 1));
                } else if pos == i + 1 {
                    pos = i;
                    through[k].push((comp, 1));
                }
            }
            pos ^= 1;
            // Up from level len to level 0.
            for (k, &l) in letters.iter().enumerate().rev() {
                let i = l.unsigned_abs() as usize - 1;
                if pos == i {
                    pos = i + 1;
                    through[k].push((comp, -1));
                } else if pos == i + 1 {
                    pos = i;
                    through[k].push((comp, -1));
                }
            }
            visited[pos] = true;
            pos ^= 1;
            if pos == start {
                break;
            }
        }
    }
    let linking = (components == 2).then(|| {
        let twice: i64 = letters
            .iter()
            .zip(&through)
            .filter(|(_, t)| t[0].0 != t[1].0)
            .map(|(&l, t)| l.signum() as i64 * t[0].1 * t[1].1)
            .sum();
        (twice / 2).unsigned_abs()
    });
    Ok(PlatInvariants {
        components,
        linking,
        crossings: len,
    })
}
