//! Integer lamination coordinates on the punctured disk and the
//! piecewise-linear action of braids on them.
//!
//! A lamination of `D_m` has coordinates `(a₁, b₁, …, a_{m−2}, b_{m−2})`.
//! Adding a puncture at each end of the row embeds `D_m` in `D_{m+2}`, where
//! every `σ_i` of `B_m` is an interior generator and acts on the coordinate
//! pairs `i` and `i+1` of the `m` middle punctures by one uniform rule. The
//! end pairs of the embedded lamination are `(0, −β₁/2)` and `(0, β_{m−1}/2)`,
//! with `β_i` the number of crossings with the vertical line between
//! punctures `i` and `i+1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Coordinates `(a₁, b₁, …, a_{m−2}, b_{m−2})` of a lamination of `D_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LamCoords {
    punctures: usize,
    coords: Vec<BigInt>,
}

impl LamCoords {
    pub fn new(punctures: usize, coords: Vec<BigInt>) -> Result<Self> {
        if punctures < 3 {
            return Err(Error::TooFewStrands {
                strands: punctures,
                min: 3,
            });
        }
        if coords.len() != 2 * punctures - 4 {
            return Err(Error::InvalidCoords(format!(
                "expected {} coordinates for {punctures} punctures, got {}",
                2 * punctures - 4,
                coords.len()
            )));
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidCoords(
                "the zero vector is not a lamination".into(),
            ));
        }
        Ok(Self { punctures, coords })
    }

    pub fn from_i64(punctures: usize, coords: &[i64]) -> Result<Self> {
        Self::new(punctures, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The curve enclosing punctures `p` and `p+1`, `1 ≤ p < m`.
    pub fn adjacent_pair(punctures: usize, p: usize) -> Result<Self> {
        if punctures < 3 || p == 0 || p >= punctures {
            return Err(Error::OutOfRange {
                name: "p",
                value: p as i64,
                expected: "1 <= p < punctures",
            });
        }
        let mut coords = vec![0i64; 2 * punctures - 4];
        if p >= 2 {
            coords[2 * (p - 2) + 1] = -1;
        }
        if p <= punctures - 2 {
            coords[2 * (p - 1) + 1] = 1;
        }
        Self::from_i64(punctures, &coords)
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> &BigInt {
        &self.coords[2 * (i - 1)]
    }

    /// `b_i`, 1-based.
    pub fn b(&self, i: usize) -> &BigInt {
        &self.coords[2 * (i - 1) + 1]
    }

    /// `log ‖c‖₁`.
    pub fn log_norm(&self) -> f64 {
        log_sum_abs(self.coords.iter().map(log_abs_big))
    }

    /// `β_i` for `i = 1..m−1`: crossings with the vertical line between
    /// punctures `i` and `i+1`.
    pub fn crossings(&self) -> Vec<BigInt> {
        betas(&self.coords)
    }
}

impl fmt::Display for LamCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn betas(coords: &[BigInt]) -> Vec<BigInt> {
    let k = coords.len() / 2;
    let mut best: Option<BigInt> = None;
    let mut prefix = BigInt::zero();
    for j in 0..k {
        let (a, b) = (&coords[2 * j], &coords[2 * j + 1]);
        let cand = a.abs() + pos(b) + &prefix;
        if best.as_ref().is_none_or(|m| cand > *m) {
            best = Some(cand);
        }
        prefix += b;
    }
    let mut beta: BigInt = best.unwrap_or_default() * 2;
    let mut out = Vec::with_capacity(k + 1);
    out.push(beta.clone());
    for j in 0..k {
        beta -= &coords[2 * j + 1] * 2;
        out.push(beta.clone());
    }
    out
}

fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn log_abs_big(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

fn log_sum_abs(logs: impl Iterator<Item = f64> + Clone) -> f64 {
    let max = logs.clone().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + logs.map(|l| (l - max).exp()).sum::<f64>().ln()
}

/// Integers the update rule can run on; fixed-width types report overflow.
pub(crate) trait Coord: Clone + Sized {
    fn nil() -> Self;
    fn plus(&self, o: &Self) -> Option<Self>;
    fn minus(&self, o: &Self) -> Option<Self>;
    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;

    fn pos_part(&self) -> Self {
        if self.is_pos() {
            self.clone()
        } else {
            Self::nil()
        }
    }

    fn neg_part(&self) -> Self {
        if self.is_neg() {
            self.clone()
        } else {
            Self::nil()
        }
    }
}

impl Coord for i128 {
    fn nil() -> Self {
        0
    }
    fn plus(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn minus(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn is_pos(&self) -> bool {
        *self > 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
}

impl Coord for BigInt {
    fn nil() -> Self {
        <BigInt as Zero>::zero()
    }
    fn plus(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn minus(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
}

/// One letter on the pairs `(x₁, y₁)`, `(x₂, y₂)` of the extended chart.
/// Returns `None` on fixed-width overflow; the inputs are left untouched.
fn letter_update<T: Coord>(positive: bool, q: [&T; 4]) -> Option<[T; 4]> {
    let [x1, y1, x2, y2] = q;
    if positive {
        // z = x1 − y1⁻ − x2 + y2⁺
        let z = x1.minus(&y1.neg_part())?.minus(x2)?.plus(&y2.pos_part())?;
        let zp = z.pos_part();
        Some([
            x1.plus(&y1.pos_part())?
                .plus(&y2.pos_part().minus(&z)?.pos_part())?,
            y2.minus(&zp)?,
            x2.plus(&y2.neg_part())?
                .plus(&y1.neg_part().plus(&z)?.neg_part())?,
            y1.plus(&zp)?,
        ])
    } else {
        // z = x1 + y1⁻ − x2 − y2⁺
        let z = x1.plus(&y1.neg_part())?.minus(x2)?.minus(&y2.pos_part())?;
        let zn = z.neg_part();
        Some([
            x1.minus(&y1.pos_part())?
                .minus(&y2.pos_part().plus(&z)?.pos_part())?,
            y2.plus(&zn)?,
            x2.minus(&y2.neg_part())?
                .minus(&y1.neg_part().minus(&z)?.neg_part())?,
            y1.minus(&zn)?,
        ])
    }
}

/// [`letter_update`] in place on big integers, with few temporaries.
fn letter_update_big(positive: bool, q: &mut [BigInt]) {
    let [x1, y1, x2, y2] = q else {
        unreachable!("four coordinates")
    };
    let zero = BigInt::zero();
    if positive {
        let mut z = &*x1 - &*x2;
        if y1.is_negative() {
            z -= &*y1;
        }
        if y2.is_positive() {
            z += &*y2;
        }
        // x1 += y1⁺ + (y2⁺ − z)⁺
        let t = if y2.is_positive() { &*y2 - &z } else { -&z };
        if t.is_positive() {
            *x1 += t;
        }
        if y1.is_positive() {
            *x1 += &*y1;
        }
        // x2 += y2⁻ + (y1⁻ + z)⁻
        let u = if y1.is_negative() {
            &*y1 + &z
        } else {
            z.clone()
        };
        if u.is_negative() {
            *x2 += u;
        }
        if y2.is_negative() {
            *x2 += &*y2;
        }
        if z > zero {
            *y2 -= &z;
            *y1 += &z;
        }
    } else {
        let mut z = &*x1 - &*x2;
        if y1.is_negative() {
            z += &*y1;
        }
        if y2.is_positive() {
            z -= &*y2;
        }
        // x1 −= y1⁺ + (y2⁺ + z)⁺
        let t = if y2.is_positive() {
            &*y2 + &z
        } else {
            z.clone()
        };
        if t.is_positive() {
            *x1 -= t;
        }
        if y1.is_positive() {
            *x1 -= &*y1;
        }
        // x2 −= y2⁻ + (y1⁻ − z)⁻
        let u = if y1.is_negative() { &*y1 - &z } else { -&z };
        if u.is_negative() {
            *x2 -= u;
        }
        if y2.is_negative() {
            *x2 -= &*y2;
        }
        if z < zero {
            *y2 += &z;
            *y1 -= &z;
        }
    }
    std::mem::swap(y1, y2);
}

/// Applies `letters` rightmost first to the extended chart `ext`, starting
/// at letter index `upto` (exclusive) and going down. Returns the number of
/// letters still to apply when a fixed-width overflow stopped the loop.
fn run_letters<T: Coord>(ext: &mut [T], letters: &[i32], upto: usize) -> usize {
    for k in (0..upto).rev() {
        let l = letters[k];
        let i = l.unsigned_abs() as usize - 1;
        let base = 2 * i;
        let res = letter_update(
            l > 0,
            [&ext[base], &ext[base + 1], &ext[base + 2], &ext[base + 3]],
        );
        match res {
            Some(v) => {
                let [a, b, c, d] = v;
                ext[base] = a;
                ext[base + 1] = b;
                ext[base + 2] = c;
                ext[base + 3] = d;
            }
            None => return k + 1,
        }
    }
    0
}

/// The extended chart of `D_{m+2}` holding the iterate.
#[derive(Debug, Clone)]
pub(crate) enum Chart {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl Chart {
    pub(crate) fn from_coords(c: &LamCoords) -> Self {
        let beta = betas(&c.coords);
        let m = c.punctures;
        let mut ext: Vec<BigInt> = Vec::with_capacity(2 * m);
        ext.push(BigInt::zero());
        ext.push(-(&beta[0] / 2i32));
        ext.extend(c.coords.iter().cloned());
        ext.push(BigInt::zero());
        ext.push(&beta[m - 2] / 2i32);
        let small: Option<Vec<i128>> = ext.iter().map(|x| x.to_i128()).collect();
        match small {
            Some(v) => Chart::Small(v),
            None => Chart::Big(ext),
        }
    }

    pub(crate) fn apply(&mut self, letters: &[i32]) {
        let mut upto = letters.len();
        if let Chart::Small(v) = self {
            upto = run_letters(v, letters, upto);
            if upto == 0 {
                return;
            }
            *self = Chart::Big(v.iter().map(|&x| BigInt::from(x)).collect());
        }
        if let Chart::Big(v) = self {
            for &l in letters[..upto].iter().rev() {
                let base = 2 * (l.unsigned_abs() as usize - 1);
                letter_update_big(l > 0, &mut v[base..base + 4]);
            }
        }
    }

    /// `log ‖c‖₁` over the coordinates of `D_m` (the end pairs excluded).
    pub(crate) fn log_norm(&self) -> f64 {
        match self {
            Chart::Small(v) => {
                let inner = &v[2..v.len() - 2];
                log_sum_abs(inner.iter().map(|&x| {
                    if x == 0 {
                        f64::NEG_INFINITY
                    } else {
                        (x.unsigned_abs() as f64).ln()
                    }
                }))
            }
            Chart::Big(v) => log_sum_abs(v[2..v.len() - 2].iter().map(log_abs_big)),
        }
    }

    pub(crate) fn to_coords(&self, punctures: usize) -> LamCoords {
        let inner: Vec<BigInt> = match self {
            Chart::Small(v) => v[2..v.len() - 2].iter().map(|&x| BigInt::from(x)).collect(),
            Chart::Big(v) => v[2..v.len() - 2].to_vec(),
        };
        LamCoords {
            punctures,
            coords: inner,
        }
    }

    /// Full extended vector, for consistency checks.
    #[cfg(test)]
    pub(crate) fn extended(&self) -> Vec<BigInt> {
        match self {
            Chart::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            Chart::Big(v) => v.clone(),
        }
    }
}

/// The image of `c` under `w`, rightmost letter first.
pub fn act(w: &BraidWord, c: &LamCoords) -> Result<LamCoords> {
    if w.strands() != c.punctures {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: c.punctures,
        });
    }
    let mut chart = Chart::from_coords(c);
    chart.apply(w.letters());
    Ok(chart.to_coords(c.punctures))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(m: usize, v: &[i64]) -> LamCoords {
        LamCoords::from_i64(m, v).unwrap()
    }

    fn w(m: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(m, l.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(LamCoords::from_i64(3, &[0, 0]).is_err());
        assert!(LamCoords::from_i64(3, &[0, 1, 2]).is_err());
        assert!(LamCoords::from_i64(2, &[]).is_err());
        assert!(LamCoords::adjacent_pair(4, 4).is_err());
    }

    #[test]
    fn adjacent_pair_crossings() {
        let c = LamCoords::adjacent_pair(5, 2).unwrap();
        let betas: Vec<i64> = c.crossings().iter().map(|b| b.to_i64().unwrap()).collect();
        assert_eq!(betas, vec![0, 2, 0, 0]);
        let c = LamCoords::adjacent_pair(5, 4).unwrap();
        let betas: Vec<i64> = c.crossings().iter().map(|b| b.to_i64().unwrap()).collect();
        assert_eq!(betas, vec![0, 0, 0, 2]);
    }

    #[test]
    fn empty_word_is_identity() {
        let c = lc(4, &[1, -2, 0, 3]);
        assert_eq!(act(&BraidWord::identity(4).unwrap(), &c).unwrap(), c);
    }

    #[test]
    fn half_twist_swaps_pair_curves() {
        // σ₁ fixes the curve around punctures 1, 2; σ₁σ₂ (σ₂ first) moves
        // it to the curve around 2, 3, while σ₂ alone leaves a curve around
        // 1 and 3 passing on one side of 2.
        let c12 = LamCoords::adjacent_pair(4, 1).unwrap();
        let c23 = LamCoords::adjacent_pair(4, 2).unwrap();
        assert_eq!(act(&w(4, &[1]), &c12).unwrap(), c12);
        assert_eq!(act(&w(4, &[-1]), &c12).unwrap(), c12);
        assert_eq!(act(&w(4, &[1, 2]), &c12).unwrap(), c23);
        assert_eq!(act(&w(4, &[-1, -2]), &c12).unwrap(), c23);
        let side = act(&w(4, &[2]), &c12).unwrap();
        assert_eq!(side.a(1).abs(), BigInt::from(1));
    }

    #[test]
    fn braid_relation_on_pairs() {
        for m in 3..=6 {
            for p in 1..m {
                let c = LamCoords::adjacent_pair(m, p).unwrap();
                for i in 1..(m as i32 - 1) {
                    let lhs = act(&w(m, &[i, i + 1, i]), &c).unwrap();
                    let rhs = act(&w(m, &[i + 1, i, i + 1]), &c).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn inverse_undoes() {
        let c = lc(5, &[2, -1, 0, 3, -4, 1]);
        let word = w(5, &[1, -2, 3, 4, -1, 2, 2, -3]);
        let there = act(&word, &c).unwrap();
        assert_eq!(act(&word.inverse(), &there).unwrap(), c);
    }

    #[test]
    fn end_pairs_stay_canonical() {
        let c = lc(5, &[1, 2, -3, 0, 2, -1]);
        let word = w(5, &[1, 2, -4, 3, -1, 4, 2, -3, 1, 1]);
        let mut chart = Chart::from_coords(&c);
        chart.apply(word.letters());
        let rebuilt = Chart::from_coords(&chart.to_coords(5));
        assert_eq!(chart.extended(), rebuilt.extended());
    }

    #[test]
    fn promotion_to_big_is_exact() {
        let word = w(3, &[1, -2]);
        let mut small = Chart::from_coords(&LamCoords::adjacent_pair(3, 1).unwrap());
        let mut big = match &small {
            Chart::Small(v) => Chart::Big(v.iter().map(|&x| BigInt::from(x)).collect()),
            Chart::Big(_) => unreachable!(),
        };
        for _ in 0..120 {
            small.apply(word.letters());
            big.apply(word.letters());
        }
        assert!(matches!(small, Chart::Big(_)));
        assert_eq!(small.extended(), big.extended());
    }

    #[test]
    fn in_place_update_matches_generic() {
        let vals = [-3i64, -1, 0, 1, 2, 5];
        for positive in [true, false] {
            for &a in &vals {
                for &b in &vals {
                    for &c in &vals {
                        for &d in &vals {
                            let q: Vec<BigInt> =
                                [a, b, c, d].iter().map(|&x| BigInt::from(x)).collect();
                            let generic =
                                letter_update(positive, [&q[0], &q[1], &q[2], &q[3]]).unwrap();
                            let mut inplace = q.clone();
                            letter_update_big(positive, &mut inplace);
                            assert_eq!(inplace, generic.to_vec(), "{positive} {a} {b} {c} {d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn log_norm_matches_direct() {
        let c = lc(4, &[3, -4, 0, 5]);
        assert!((c.log_norm() - 12f64.ln()).abs() < 1e-12);
        assert!((Chart::from_coords(&c).log_norm() - 12f64.ln()).abs() < 1e-12);
    }
}
