//! Exact computations on braids, wicket groups and Goeritz groups of
//! plat-presented bridge decompositions, plus dilatation estimates for braid
//! families through integer lamination coordinates.

pub mod artin;
pub mod braid;
pub mod constants;
pub mod entropy;
pub mod error;
pub mod free;
pub mod handle;
pub mod lamination;
pub mod mcg;
pub mod named;
pub mod perm;
pub mod plat;
pub mod wicket;

pub use artin::artin_action;
pub use braid::{BraidWord, LinkFamily, SphericalBraid};
pub use constants::{finiteness_constant, solve_r, ConstantsReport};
pub use entropy::{
    entropy_estimate, family_sweep, penner_lower_bound, EntropyOptions, EntropyReport, Growth,
    SweepRecord,
};
pub use error::{Error, Result};
pub use free::{is_inner, FreeEndo, FreeWord};
pub use handle::braid_equal;
pub use lamination::{act, LamCoords};
pub use mcg::mcg_equal;
pub use perm::Permutation;
pub use plat::{component_count, plat_invariants, Pairing, PlatInvariants};
pub use wicket::{
    is_goeritz_element, member_sw, member_sw_pair, member_sw_standard, tangle_b, tangle_c,
    BridgeDecomposition, MembershipReport, TrivialTangle,
};
