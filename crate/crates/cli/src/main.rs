//! `goeritz`: command-line front end for braid, wicket-group and entropy
//! computations.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage error, 3 resource
//! exhaustion.

mod format;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use goeritz_core::braid::{BraidWord, LinkFamily};
use goeritz_core::constants::{finiteness_constant, solve_r};
use goeritz_core::entropy::{
    entropy_estimate, family_sweep, EntropyOptions, SWEEP_CAVEAT, SWEEP_MAX_ITER,
};
use goeritz_core::handle::{handle_reduce, DEFAULT_MAX_STEPS};
use goeritz_core::plat::plat_invariants;
use goeritz_core::wicket::{
    is_goeritz_element, member_sw, member_sw_pair, BridgeDecomposition, MembershipReport,
    TrivialTangle,
};
use goeritz_core::Error;
use serde::Serialize;

use crate::format::{
    sig6, sweep_tsv, ConstantsOutput, EqualityOutput, MembershipOutput, NormalizeOutput, PlatOutput,
};

const MAX_STEPS_ENV: &str = "GOERITZ_MAX_STEPS";

#[derive(Parser, Debug)]
#[command(
    name = "goeritz",
    version,
    about = "Braids, wicket groups, Goeritz elements and dilatation estimates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Word problem in the braid group.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Membership in wicket groups SW_2n(T) and SW_2n(T, U).
    #[command(subcommand)]
    Wicket(WicketCmd),
    /// Goeritz elements of a plat-presented bridge decomposition.
    #[command(subcommand)]
    Goeritz(GoeritzCmd),
    /// Growth-rate estimate of a braid on integer laminations.
    Entropy(EntropyArgs),
    /// Normalized entropies along the unknot or Hopf family.
    Sweep(SweepArgs),
    /// Invariants of plat closures.
    #[command(subcommand)]
    Plat(PlatCmd),
    /// The constants R(h), 2R+2 and N.
    Constants(ConstantsArgs),
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Decide whether two words are equal in B_n.
    Eq {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Handle-free representative of a word.
    Normalize {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        word: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WicketCmd {
    /// Test w ∈ SW_2n(T) (one tangle) or w ∈ SW_2n(T, U) (two tangles).
    Member {
        /// Number of arcs n; words live on 2n strands.
        #[arg(short = 'n', long = "arcs")]
        arcs: usize,
        #[arg(long)]
        word: String,
        /// A, B, C or conj:<word>; repeat for a pair. Defaults to A.
        #[arg(long = "tangle")]
        tangles: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Decomposition {
    /// Bridge number n; words live on 2n strands.
    #[arg(long)]
    bridge: usize,
    /// Top conjugator d of Ā^d ∪ ^bA.
    #[arg(long, default_value = "")]
    top: String,
    /// Bottom conjugator b of Ā^d ∪ ^bA.
    #[arg(long, default_value = "")]
    bottom: String,
}

#[derive(Subcommand, Debug)]
enum GoeritzCmd {
    /// Certify Γ(w) as an element of the Goeritz group.
    Member {
        #[command(flatten)]
        dec: Decomposition,
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PlatCmd {
    /// Components, |linking| and crossing count of the plat.
    Info {
        #[command(flatten)]
        dec: Decomposition,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct EntropyArgs {
    #[arg(short = 'n', long = "strands")]
    strands: usize,
    #[arg(long)]
    word: String,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    family: LinkFamily,
    #[arg(long, default_value_t = 2)]
    from: usize,
    #[arg(long, default_value_t = 8)]
    to: usize,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Tab-separated rows (the default).
    #[arg(long)]
    tsv: bool,
}

#[derive(Args, Debug)]
struct ConstantsArgs {
    #[arg(long, default_value_t = 32.0)]
    h: f64,
    /// K for N = max(2K+4, 2K+2δ); defaults to 1796.
    #[arg(long = "k", default_value_t = 1796.0)]
    k: f64,
    #[arg(long, default_value_t = 102.0)]
    delta: f64,
    #[arg(long)]
    json: bool,
}

/// Why a command did not succeed.
enum Failure {
    Negative,
    Usage(String),
    Exhausted(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExhausted { .. } => Failure::Exhausted(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn env_cap() -> Result<Option<u64>, Failure> {
    match std::env::var(MAX_STEPS_ENV) {
        Ok(v) => v.trim().parse::<u64>().map(Some).map_err(|_| {
            Failure::Usage(format!(
                "{MAX_STEPS_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(None),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn braid(cmd: BraidCmd) -> Outcome {
    let cap = env_cap()?.unwrap_or(DEFAULT_MAX_STEPS);
    match cmd {
        BraidCmd::Eq {
            strands,
            left,
            right,
            json,
        } => {
            let a = BraidWord::parse(strands, &left)?;
            let b = BraidWord::parse(strands, &right)?;
            let r = handle_reduce(strands, a.compose(&b.inverse())?.letters(), cap)?;
            let out = EqualityOutput {
                strands,
                left: a.to_string(),
                right: b.to_string(),
                equal: r.word.is_empty(),
                steps: r.steps,
            };
            if json {
                print_json(&out);
            } else {
                println!("{}", if out.equal { "equal" } else { "not equal" });
            }
            verdict(out.equal)
        }
        BraidCmd::Normalize {
            strands,
            word,
            json,
        } => {
            let w = BraidWord::parse(strands, &word)?;
            let r = handle_reduce(strands, w.letters(), cap)?;
            let normal = BraidWord::new(strands, r.word)?;
            let out = NormalizeOutput {
                strands,
                input: w.to_string(),
                normalized: normal.to_string(),
                trivial: normal.is_empty(),
                steps: r.steps,
            };
            if json {
                print_json(&out);
            } else if out.trivial {
                println!("(identity)");
            } else {
                println!("{}", out.normalized);
            }
            Ok(())
        }
    }
}

fn report_membership(out: MembershipOutput, json: bool) -> Outcome {
    if json {
        print_json(&out);
    } else if out.verdict {
        println!("member");
    } else {
        println!("not a member");
        if let Some(w) = &out.witness {
            println!("witness: loop {} maps to {}", w.index, w.image);
        }
    }
    verdict(out.verdict)
}

fn wicket(cmd: WicketCmd) -> Outcome {
    let WicketCmd::Member {
        arcs,
        word,
        tangles,
        json,
    } = cmd;
    let w = BraidWord::parse(2 * arcs, &word)?;
    let literals = if tangles.is_empty() {
        vec!["A".to_string()]
    } else {
        tangles
    };
    let parsed = literals
        .iter()
        .map(|t| TrivialTangle::parse(arcs, t))
        .collect::<Result<Vec<_>, _>>()?;
    let report: MembershipReport = match parsed.as_slice() {
        [t] => member_sw(&w, t)?,
        [t, u] => member_sw_pair(&w, t, u)?,
        _ => return Err(Failure::Usage("give one or two --tangle values".into())),
    };
    report_membership(MembershipOutput::new(&w, literals, &report), json)
}

fn decomposition(d: &Decomposition) -> Result<BridgeDecomposition, Failure> {
    let strands = 2 * d.bridge;
    Ok(BridgeDecomposition::new(
        BraidWord::parse(strands, &d.top)?,
        BraidWord::parse(strands, &d.bottom)?,
    )?)
}

fn goeritz(cmd: GoeritzCmd) -> Outcome {
    let GoeritzCmd::Member { dec, word, json } = cmd;
    let decomposition = decomposition(&dec)?;
    let w = BraidWord::parse(2 * dec.bridge, &word)?;
    let report = is_goeritz_element(&decomposition, &w)?;
    let tangles = vec![
        format!("conj:{}", dec.top_inverse_text()),
        format!("conj:{}", dec.bottom),
    ];
    report_membership(MembershipOutput::new(&w, tangles, &report), json)
}

impl Decomposition {
    fn top_inverse_text(&self) -> String {
        BraidWord::parse(2 * self.bridge, &self.top)
            .map(|w| w.inverse().to_string())
            .unwrap_or_default()
    }
}

fn plat(cmd: PlatCmd) -> Outcome {
    let PlatCmd::Info { dec, json } = cmd;
    let d = decomposition(&dec)?;
    let inv = plat_invariants(d.top(), d.bottom())?;
    let out = PlatOutput::from(&inv);
    if json {
        print_json(&out);
    } else {
        println!("components: {}", out.components);
        println!(
            "linking: {}",
            out.linking
                .map_or_else(|| "-".to_string(), |l| l.to_string())
        );
        println!("crossings: {}", out.crossings);
    }
    Ok(())
}

fn iteration_cap(flag: Option<usize>, default: usize) -> Result<usize, Failure> {
    Ok(match flag {
        Some(v) => v,
        None => env_cap()?.map_or(default, |v| v as usize),
    })
}

fn entropy(args: EntropyArgs) -> Outcome {
    let w = BraidWord::parse(args.strands, &args.word)?;
    let opts = EntropyOptions {
        max_iter: iteration_cap(args.max_iter, EntropyOptions::default().max_iter)?,
        tol: args.tol,
        seeds: Vec::new(),
    };
    let r = entropy_estimate(&w, &opts)?;
    if args.json {
        print_json(&r);
    } else {
        println!("strands: {}", r.strands);
        println!("word length: {}", r.word_length);
        println!("iterations: {}", r.iterations);
        println!("log lambda: {}", sig6(r.log_lambda));
        println!("lambda: {}", sig6(r.log_lambda.exp()));
        println!("converged: {}", r.converged);
        println!("classification: {}", r.classification.tag());
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Outcome {
    let opts = EntropyOptions {
        max_iter: iteration_cap(args.max_iter, SWEEP_MAX_ITER)?,
        tol: args.tol,
        seeds: Vec::new(),
    };
    let rows = family_sweep(args.family, args.from..=args.to, &opts)?;
    if args.json {
        print_json(&rows);
    } else {
        print!("{}", sweep_tsv(&rows, SWEEP_CAVEAT));
    }
    Ok(())
}

fn constants(args: ConstantsArgs) -> Outcome {
    let rep = solve_r(args.h)?;
    if !(args.k > 0.0 && args.delta > 0.0) {
        return Err(Failure::Usage("K and delta must be positive".into()));
    }
    let out = ConstantsOutput {
        report: rep,
        k_input: args.k,
        delta: args.delta,
        n: finiteness_constant(args.k, args.delta),
    };
    if args.json {
        print_json(&out);
    } else {
        let r = &out.report;
        println!("h: {}", r.h);
        println!("m: {:.9}", r.m);
        println!("R(h): {:.9}", r.r);
        println!("ceil R(h): {}", r.r_ceil);
        println!("2R+2: {:.9}", r.k);
        println!("K: {}", out.k_input);
        println!("delta: {}", out.delta);
        println!("N: {}", out.n);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Braid(c) => braid(c),
        Command::Wicket(c) => wicket(c),
        Command::Goeritz(c) => goeritz(c),
        Command::Entropy(a) => entropy(a),
        Command::Sweep(a) => sweep(a),
        Command::Plat(c) => plat(c),
        Command::Constants(a) => constants(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Exhausted(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
