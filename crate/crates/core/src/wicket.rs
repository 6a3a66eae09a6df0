//! Wicket-group membership and Goeritz elements of plat-presented bridge
//! decompositions.
//!
//! `b ∈ SW_{2n}` iff `φ_b` maps every wicket loop `x_{2i−1}x_{2i}` into the
//! normal closure of the wicket loops. That closure is the kernel of
//! `q_A: F_{2n} → F_n`, `x_{2j−1} ↦ g_j`, `x_{2j} ↦ g_j⁻¹`.

use serde::{Deserialize, Serialize};

use crate::artin::artin_action;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::plat::Pairing;

/// The trivial tangle `^cA` for a conjugator `c ∈ SB_{2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialTangle {
    n: usize,
    conjugator: BraidWord,
    pairing: Pairing,
}

impl TrivialTangle {
    pub fn new(conjugator: BraidWord) -> Result<Self> {
        let strands = conjugator.strands();
        if !strands.is_multiple_of(2) {
            return Err(Error::OddStrands(strands));
        }
        let pairing = Pairing::standard(strands)?.conjugated(&conjugator.permutation());
        Ok(Self {
            n: strands / 2,
            conjugator,
            pairing,
        })
    }

    /// The standard tangle `A` with `n` arcs.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new(BraidWord::identity(2 * n)?)
    }

    pub fn arcs(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> usize {
        2 * self.n
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    /// Endpoints joined by the arcs.
    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    /// Parses `A`, `B`, `C` or `conj:<word>` for `n` arcs.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        match text.trim() {
            "A" => Self::standard(n),
            "B" => tangle_b(n),
            "C" => tangle_c(n),
            other => match other.strip_prefix("conj:") {
                Some(word) => Self::new(BraidWord::parse(2 * n, word)?),
                None => Err(Error::Parse {
                    what: "tangle",
                    input: text.to_string(),
                }),
            },
        }
    }
}

/// `Ā^d ∪_S ^bA`: top word `d`, bottom word `b`, both on `2n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeDecomposition {
    n: usize,
    top: BraidWord,
    bottom: BraidWord,
}

impl BridgeDecomposition {
    pub fn new(top: BraidWord, bottom: BraidWord) -> Result<Self> {
        top.check_same(&bottom)?;
        if !top.strands().is_multiple_of(2) {
            return Err(Error::OddStrands(top.strands()));
        }
        Ok(Self {
            n: top.strands() / 2,
            top,
            bottom,
        })
    }

    /// `(O_n; n)`: the `n`-component trivial link.
    pub fn trivial_link(n: usize) -> Result<Self> {
        let id = BraidWord::identity(2 * n)?;
        Self::new(id.clone(), id)
    }

    /// `(O; n) = Ā ∪ B_n`.
    pub fn unknot(n: usize) -> Result<Self> {
        Self::new(BraidWord::identity(2 * n)?, tangle_b(n)?.conjugator)
    }

    /// `(H; S_{(p,n−2)}) = Ā ∪ C_n`.
    pub fn hopf(n: usize) -> Result<Self> {
        Self::new(BraidWord::identity(2 * n)?, tangle_c(n)?.conjugator)
    }

    pub fn bridge_number(&self) -> usize {
        self.n
    }

    pub fn top(&self) -> &BraidWord {
        &self.top
    }

    pub fn bottom(&self) -> &BraidWord {
        &self.bottom
    }

    /// The tangles `^{d⁻¹}A` and `^bA` whose common wicket group gives the
    /// Goeritz group.
    pub fn tangles(&self) -> Result<(TrivialTangle, TrivialTangle)> {
        Ok((
            TrivialTangle::new(self.top.inverse())?,
            TrivialTangle::new(self.bottom.clone())?,
        ))
    }
}

/// Work done by one membership test.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCost {
    /// Braid letters pushed through the Artin action.
    pub letters: usize,
    /// Total length of the generator images after the last letter.
    pub image_size: usize,
}

/// A non-trivial quotient image proving non-membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index `i` of the wicket loop `x_{2i−1}x_{2i}`, 1-based.
    pub index: usize,
    /// `q_A(φ(x_{2i−1}x_{2i}))` over `g_1, …, g_n`.
    pub image: FreeWord,
}

impl Witness {
    /// `g2 g1^-1 g2^-1 g1`.
    pub fn image_text(&self) -> String {
        self.image
            .letters()
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("g{l}")
                } else {
                    format!("g{}^-1", -l)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub cost: MembershipCost,
}

/// `q_A` on one free word.
pub fn quotient_a(n: usize, w: &FreeWord) -> FreeWord {
    w.map_letters(n, |l| {
        let k = l.unsigned_abs() as i32;
        let g = (k + 1) / 2;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        l.signum() * sign * g
    })
}

/// Membership in the standard wicket group `SW_{2n} = SW_{2n}(A)`.
pub fn member_sw_standard(w: &BraidWord) -> Result<MembershipReport> {
    let strands = w.strands();
    if !strands.is_multiple_of(2) {
        return Err(Error::OddStrands(strands));
    }
    let n = strands / 2;
    let phi = artin_action(w);
    let cost = MembershipCost {
        letters: w.len(),
        image_size: phi.size(),
    };
    for i in 1..=n {
        let loop_image = phi.image(2 * i - 1).mul(phi.image(2 * i));
        let image = quotient_a(n, &loop_image);
        if !image.is_empty() {
            return Ok(MembershipReport {
                verdict: false,
                witness: Some(Witness { index: i, image }),
                cost,
            });
        }
    }
    Ok(MembershipReport {
        verdict: true,
        witness: None,
        cost,
    })
}

/// Membership in `SW_{2n}(^cA) = c·SW_{2n}·c⁻¹`.
pub fn member_sw(w: &BraidWord, t: &TrivialTangle) -> Result<MembershipReport> {
    w.check_same(&t.conjugator)?;
    let c = &t.conjugator;
    member_sw_standard(&c.inverse().compose(w)?.compose(c)?)
}

/// Membership in `SW_{2n}(T, U) = SW_{2n}(T) ∩ SW_{2n}(U)`.
pub fn member_sw_pair(
    w: &BraidWord,
    t: &TrivialTangle,
    u: &TrivialTangle,
) -> Result<MembershipReport> {
    t.conjugator.check_same(&u.conjugator)?;
    let first = member_sw(w, t)?;
    if !first.verdict {
        return Ok(first);
    }
    let mut second = member_sw(w, u)?;
    second.cost.letters += first.cost.letters;
    second.cost.image_size = second.cost.image_size.max(first.cost.image_size);
    Ok(second)
}

/// `Γ(w) ∈ 𝓖(Ā^d ∪ ^bA)` iff `w ∈ SW_{2n}(^{d⁻¹}A, ^bA)`.
pub fn is_goeritz_element(dec: &BridgeDecomposition, w: &BraidWord) -> Result<MembershipReport> {
    w.check_same(&dec.top)?;
    let (t, u) = dec.tangles()?;
    member_sw_pair(w, &t, &u)
}

/// The tangle `B_n` of the trivial-knot decomposition `(O; n) = Ā ∪ B_n`.
pub fn tangle_b(n: usize) -> Result<TrivialTangle> {
    check_arcs(n)?;
    TrivialTangle::new(BraidWord::new(2 * n, b_conjugator(n))?)
}

/// The tangle `C_n` of the Hopf-link decomposition `Ā ∪ C_n`.
pub fn tangle_c(n: usize) -> Result<TrivialTangle> {
    check_arcs(n)?;
    TrivialTangle::new(BraidWord::new(2 * n, c_conjugator(n))?)
}

fn check_arcs(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as i64,
            expected: "n >= 2",
        });
    }
    Ok(())
}

/// `σ₁σ₂⋯σ_{2n−1}`: rotates the endpoints one step.
fn b_conjugator(n: usize) -> Vec<i32> {
    (1..2 * n as i32).collect()
}

/// `σ₁σ₂⋯σ_{2n−3}·σ_{2n−2}²`: a shift followed by a clasp of the last two arcs.
fn c_conjugator(n: usize) -> Vec<i32> {
    let k = 2 * n as i32 - 2;
    let mut letters: Vec<i32> = (1..k).collect();
    letters.extend([k, k]);
    letters
}
