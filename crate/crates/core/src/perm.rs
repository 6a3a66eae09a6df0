use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., size}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size];
        let mut zero_based = Vec::with_capacity(size);
        for &img in images {
            if img == 0 || img > size || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Self { images: zero_based })
    }

    /// The transposition `(i i+1)` of `{1..size}`, `i` 1-based.
    pub fn adjacent_transposition(size: usize, i: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(i - 1, i);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 0-based image table.
    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Self {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles with 1-based entries, each starting at its smallest
    /// point; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}
