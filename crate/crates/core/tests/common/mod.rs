//! Strategies and property checks shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use goeritz_core::artin::{artin_action, boundary_word};
use goeritz_core::braid::{
    family_word, full_twist, s_map, s_plus, sphere_relator, BraidWord, FamilyGenerator,
    SphericalBraid,
};
use goeritz_core::free::FreeWord;
use goeritz_core::handle::{braid_equal, braid_equal_artin};
use goeritz_core::lamination::{act, LamCoords};
use goeritz_core::mcg::mcg_equal;
use goeritz_core::wicket::{member_sw_pair, member_sw_standard, tangle_b, tangle_c, TrivialTangle};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn letters(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let k = strands as i32 - 1;
    prop::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(i, neg)| if neg { -i } else { i })
            .collect()
    })
}

pub fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(strands, max_len).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

pub fn word_in(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = BraidWord> {
    strands.prop_flat_map(move |m| word(m, max_len))
}

pub fn word_pair(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    strands.prop_flat_map(move |m| (word(m, max_len), word(m, max_len)))
}

/// `x`, `y`, `z` of the wicket lemmas in `SB_{2n}`.
pub fn xyz(n: usize) -> (BraidWord, BraidWord, BraidWord) {
    let m = 2 * n;
    let x = s_plus(&family_word(FamilyGenerator::X, m - 1).unwrap()).into_word();
    let y = s_map(&family_word(FamilyGenerator::Y, m).unwrap()).into_word();
    let z = s_plus(&family_word(FamilyGenerator::Z, m - 1).unwrap()).into_word();
    (x, y, z)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

// Artin action.

pub fn artin_homomorphism((a, b): (BraidWord, BraidWord)) -> Result<(), TestCaseError> {
    let lhs = artin_action(&a.compose(&b).unwrap());
    let rhs = artin_action(&a).compose(&artin_action(&b));
    check(lhs == rhs, || format!("φ(ab) ≠ φ(a)∘φ(b) for {a} | {b}"))
}

pub fn artin_preserves_product(w: BraidWord) -> Result<(), TestCaseError> {
    let u = boundary_word(w.strands());
    check(artin_action(&w).apply(&u) == u, || {
        format!("boundary moved by {w}")
    })
}

pub fn artin_conjugacy_shape(w: BraidWord) -> Result<(), TestCaseError> {
    let phi = artin_action(&w);
    let perm = w.permutation();
    for i in 1..=w.strands() {
        let (_, core) = phi.image(i).cyclic_decomposition();
        let target = FreeWord::generator(w.strands(), perm.apply(i));
        check(core == target, || {
            format!("φ(x{i}) not conjugate to x{} for {w}", perm.apply(i))
        })?;
    }
    Ok(())
}

// Handle reduction against the Artin oracle.

/// A word and a second word: either random, or the first with a relator
/// inserted somewhere (so the two are equal).
pub fn equality_case(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    strands.prop_flat_map(move |m| {
        (
            word(m, max_len),
            word(m, max_len),
            0..=max_len,
            1..m,
            1..m,
            0..4u8,
        )
            .prop_map(move |(a, b, pos, i, j, kind)| {
                let (i, j) = (i as i32, j as i32);
                let relator: Vec<i32> = match kind {
                    0 if i + 1 < m as i32 => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
                    1 if (i - j).abs() >= 2 => vec![i, j, -i, -j],
                    2 => vec![i, -i],
                    _ => return (a, b),
                };
                let mut l = a.letters().to_vec();
                let pos = pos.min(l.len());
                l.splice(pos..pos, relator);
                let b = BraidWord::new(m, l).unwrap();
                (a, b)
            })
    })
}

pub fn handle_matches_artin((a, b): (BraidWord, BraidWord)) -> Result<(), TestCaseError> {
    let h = braid_equal(&a, &b).unwrap();
    let o = braid_equal_artin(&a, &b).unwrap();
    check(h == o, || format!("handle {h} vs artin {o} on {a} | {b}"))
}

pub fn sphere_relator_absorbed(w: BraidWord) -> Result<(), TestCaseError> {
    let r = sphere_relator(w.strands()).unwrap();
    let wr = w.compose(&r).unwrap();
    let eq = mcg_equal(&SphericalBraid::new(wr), &SphericalBraid::new(w.clone())).unwrap();
    check(eq, || format!("w·R ≠ w in MCG for {w}"))
}

// Lamination chart.

pub fn lam_vector(m: usize) -> impl Strategy<Value = LamCoords> {
    prop::collection::vec(-40i64..=40, 2 * m - 4)
        .prop_filter("non-zero", |v| v.iter().any(|&x| x != 0))
        .prop_map(move |v| LamCoords::from_i64(m, &v).unwrap())
}

pub fn chart_case() -> impl Strategy<Value = (LamCoords, i32, i32)> {
    (3usize..=8).prop_flat_map(|m| (lam_vector(m), 1..(m as i32), 1..(m as i32)))
}

/// Braid relation or far commutation (whichever applies to `i`, `j`) as
/// coordinate maps, both signs.
pub fn chart_relations((c, i, j): (LamCoords, i32, i32)) -> Result<(), TestCaseError> {
    let m = c.punctures();
    let w = |l: Vec<i32>| BraidWord::new(m, l).unwrap();
    for s in [1, -1] {
        if i + 1 < m as i32 {
            let lhs = act(&w(vec![s * i, s * (i + 1), s * i]), &c).unwrap();
            let rhs = act(&w(vec![s * (i + 1), s * i, s * (i + 1)]), &c).unwrap();
            check(lhs == rhs, || format!("braid relation at {i} fails on {c}"))?;
        }
        if (i - j).abs() >= 2 {
            let lhs = act(&w(vec![s * i, j]), &c).unwrap();
            let rhs = act(&w(vec![j, s * i]), &c).unwrap();
            check(lhs == rhs, || format!("commutation {i},{j} fails on {c}"))?;
        }
    }
    Ok(())
}

pub fn chart_inverse_case() -> impl Strategy<Value = (BraidWord, LamCoords)> {
    (3usize..=8).prop_flat_map(|m| (word(m, 12), lam_vector(m)))
}

pub fn chart_inverse((w, c): (BraidWord, LamCoords)) -> Result<(), TestCaseError> {
    let there = act(&w, &c).unwrap();
    let back = act(&w.inverse(), &there).unwrap();
    check(back == c, || format!("w⁻¹·w·c ≠ c for {w} on {c}"))?;
    let nonzero = there.coords().iter().any(|x| *x != BigInt::from(0));
    check(nonzero, || "image collapsed to zero".into())
}

// Wicket predicates.

pub fn wicket_sphere_invariance(w: BraidWord) -> Result<(), TestCaseError> {
    let r = sphere_relator(w.strands()).unwrap();
    let a = member_sw_standard(&w).unwrap().verdict;
    let b = member_sw_standard(&w.compose(&r).unwrap()).unwrap().verdict;
    let c = member_sw_standard(&r.compose(&w).unwrap()).unwrap().verdict;
    check(a == b && a == c, || {
        format!("sphere relator changes the verdict of {w}")
    })
}

/// Products of generator indices (sign = inverse) into a word.
pub fn product(gens: &[BraidWord], picks: &[(usize, bool)]) -> BraidWord {
    let strands = gens[0].strands();
    picks
        .iter()
        .fold(BraidWord::identity(strands).unwrap(), |acc, &(k, inv)| {
            let g = &gens[k % gens.len()];
            acc.compose(&if inv { g.inverse() } else { g.clone() })
                .unwrap()
        })
}

/// Family flag and two products of generator indices with inversion flags.
pub type ClosureCase = (bool, Vec<(usize, bool)>, Vec<(usize, bool)>);

pub fn closure_case() -> impl Strategy<Value = ClosureCase> {
    (
        any::<bool>(),
        prop::collection::vec((0usize..3, any::<bool>()), 1..=3),
        prop::collection::vec((0usize..3, any::<bool>()), 1..=3),
    )
}

/// Products and inverses of `{x, y, Δ²}` stay in `SW₆(A, B)`; of
/// `{x, z, Δ²}` in `SW₆(A, C)`.
pub fn subgroup_closure((hopf, p1, p2): ClosureCase) -> Result<(), TestCaseError> {
    let n = 3;
    let (x, y, z) = xyz(n);
    let d2 = full_twist(2 * n).unwrap();
    let (gens, t) = if hopf {
        (vec![x, z, d2], tangle_c(n).unwrap())
    } else {
        (vec![x, y, d2], tangle_b(n).unwrap())
    };
    let a = TrivialTangle::standard(n).unwrap();
    let w1 = product(&gens, &p1);
    let w2 = product(&gens, &p2);
    for w in [w1.compose(&w2).unwrap(), w1.inverse()] {
        check(member_sw_pair(&w, &a, &t).unwrap().verdict, || {
            format!("closure fails on {w}")
        })?;
    }
    Ok(())
}

pub fn coherence_case(
) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord, Vec<(usize, bool)>, bool)> {
    prop_oneof![Just(2usize), Just(3usize)].prop_flat_map(|n| {
        (
            word(2 * n, 5),
            word(2 * n, 5),
            word(2 * n, 6),
            prop::collection::vec((0usize..4, any::<bool>()), 1..=3),
            any::<bool>(),
        )
    })
}

/// `member_sw_pair(w, ^bA, ^dA) = member_sw_pair(b⁻¹wb, A, ^{b⁻¹d}A)`;
/// half the cases use `w ∈ SW(^bA)` so both verdicts get exercised.
pub fn conjugation_coherence(
    (b, d, w, picks, inside): (BraidWord, BraidWord, BraidWord, Vec<(usize, bool)>, bool),
) -> Result<(), TestCaseError> {
    let m = b.strands();
    let w = if inside {
        // b g b⁻¹ with g a product of standard wicket elements.
        let gens = vec![
            BraidWord::new(m, vec![1]).unwrap(),
            BraidWord::new(m, vec![m as i32 - 1]).unwrap(),
            BraidWord::new(m, vec![2, 1, 3, 2]).unwrap(),
            full_twist(m).unwrap(),
        ];
        let g = product(&gens, &picks);
        b.compose(&g).unwrap().compose(&b.inverse()).unwrap()
    } else {
        w
    };
    let tb = TrivialTangle::new(b.clone()).unwrap();
    let td = TrivialTangle::new(d.clone()).unwrap();
    let lhs = member_sw_pair(&w, &tb, &td).unwrap().verdict;
    let conj = b.inverse().compose(&w).unwrap().compose(&b).unwrap();
    let a = TrivialTangle::new(BraidWord::identity(m).unwrap()).unwrap();
    let bd = TrivialTangle::new(b.inverse().compose(&d).unwrap()).unwrap();
    let rhs = member_sw_pair(&conj, &a, &bd).unwrap().verdict;
    check(lhs == rhs, || format!("coherence fails: b={b} d={d} w={w}"))?;
    if inside {
        check(member_sw_pair(&w, &tb, &tb).unwrap().verdict, || {
            format!("b g b⁻¹ ∉ SW(^bA) for b={b}")
        })?;
    }
    Ok(())
}
