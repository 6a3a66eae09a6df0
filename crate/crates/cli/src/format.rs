//! Output records and text formatting.

use goeritz_core::braid::BraidWord;
use goeritz_core::constants::ConstantsReport;
use goeritz_core::entropy::SweepRecord;
use goeritz_core::plat::PlatInvariants;
use goeritz_core::wicket::MembershipReport;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct EqualityOutput {
    pub strands: usize,
    pub left: String,
    pub right: String,
    pub equal: bool,
    pub steps: u64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct NormalizeOutput {
    pub strands: usize,
    pub input: String,
    pub normalized: String,
    pub trivial: bool,
    pub steps: u64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct WitnessOutput {
    pub index: usize,
    pub image: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct MembershipOutput {
    pub word: String,
    pub strands: usize,
    pub tangles: Vec<String>,
    pub verdict: bool,
    pub witness: Option<WitnessOutput>,
    pub letters: usize,
    pub image_size: usize,
}

impl MembershipOutput {
    pub fn new(w: &BraidWord, tangles: Vec<String>, r: &MembershipReport) -> Self {
        Self {
            word: w.to_string(),
            strands: w.strands(),
            tangles,
            verdict: r.verdict,
            witness: r.witness.as_ref().map(|wit| WitnessOutput {
                index: wit.index,
                image: wit.image_text(),
            }),
            letters: r.cost.letters,
            image_size: r.cost.image_size,
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PlatOutput {
    pub components: usize,
    pub linking: Option<u64>,
    pub crossings: usize,
}

impl From<&PlatInvariants> for PlatOutput {
    fn from(p: &PlatInvariants) -> Self {
        Self {
            components: p.components,
            linking: p.linking,
            crossings: p.crossings,
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ConstantsOutput {
    #[serde(flatten)]
    pub report: ConstantsReport,
    pub k_input: f64,
    pub delta: f64,
    pub n: f64,
}

/// `x` with six significant digits, fixed notation for moderate exponents.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.5e}");
    let exp: i32 = sci
        .split('e')
        .nth(1)
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-5..=5).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

pub const TSV_COLUMNS: [&str; 7] = [
    "family",
    "n",
    "strands",
    "logLambda",
    "normalized",
    "pennerBound",
    "converged",
];

/// Sweep rows as TSV with a caveat line first and the band summary last.
pub fn sweep_tsv(rows: &[SweepRecord], caveat: &str) -> String {
    let mut out = format!("# {caveat}\n{}\n", TSV_COLUMNS.join("\t"));
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.family.tag(),
            r.n,
            r.strands,
            sig6(r.log_lambda),
            sig6(r.normalized),
            sig6(r.penner_bound),
            r.converged
        ));
    }
    let normalized: Vec<f64> = rows.iter().map(|r| r.normalized).collect();
    if let (Some(max), Some(min)) = (
        normalized.iter().cloned().reduce(f64::max),
        normalized.iter().cloned().reduce(f64::min),
    ) {
        out.push_str(&format!(
            "# empirical P = {}\tband ratio = {}\n",
            sig6(max),
            sig6(max / min)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.382245086), "0.382245");
        assert_eq!(sig6(5.351430), "5.35143");
        assert_eq!(sig6(0.015753295), "0.0157533");
        assert_eq!(sig6(9.9999996), "10.0000");
        assert_eq!(sig6(3796.0), "3796.00");
        assert_eq!(sig6(1.5e-9), "1.50000e-9");
        assert_eq!(sig6(0.0), "0");
    }
}
