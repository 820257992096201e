use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use zf_core::dsl::{parse_index, parse_tree};
use zf_core::tree::{cap_phi, cap_phi_hat, harvestable_form, w_word};
use zf_core::verify::{run_suite, RunConfig, SUITES};
use zf_core::zeta::{z_m_eval, zeta_index, zeta_shat_tree, zeta_tree};
use zf_core::{phi, phi_hat, HElem};

/// t-adic symmetrization maps on words and 2-colored rooted trees.
///
/// Trees are written as `b(2:b(1:b()))`: a color `b` or `w`, then the
/// children in parentheses, each prefixed by its edge index. Indices are
/// comma-separated positive integers; the empty string is the empty index.
#[derive(Parser)]
#[command(name = "zf", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Truncation order N of t-series
    #[arg(long, global = true, env = "ZF_T_ORDER", default_value_t = 8)]
    t_order: usize,
    /// Bound M of the truncated sums (largest M for `verify`)
    #[arg(
        short = 'M',
        long = "modulus-bound",
        global = true,
        default_value_t = 10
    )]
    m: u32,
    /// Weight bound for suites that enumerate indices
    #[arg(long, global = true, default_value_t = 4)]
    weight_max: u32,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random cases for randomized suites
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetrization map on z_k
    Phi {
        #[arg(long)]
        index: String,
    },
    /// t-adic symmetrization map on z_k, truncated at --t-order
    PhiHat {
        #[arg(long)]
        index: String,
    },
    /// Word of a harvestable pair
    W {
        #[arg(long)]
        tree: String,
    },
    /// Harvestable form of a tree
    Harvest {
        #[arg(long)]
        tree: String,
    },
    /// Tree-level symmetrization map
    CapPhi {
        #[arg(long)]
        tree: String,
    },
    /// Tree-level t-adic symmetrization map, truncated at --t-order
    CapPhiHat {
        #[arg(long)]
        tree: String,
    },
    /// Multiple harmonic sum zeta_M(k)
    Zeta {
        #[arg(long)]
        index: String,
    },
    /// Tree sum zeta_M(X; k)
    ZetaTree {
        #[arg(long)]
        tree: String,
    },
    /// t-adic tree sum, truncated at --t-order
    ZetaShat {
        #[arg(long)]
        tree: String,
    },
    /// Z_M of a z-word
    Zm {
        #[arg(long)]
        index: String,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

enum Output {
    Text(String),
    Json(Value),
}

fn pick(json: bool, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Output {
    if json {
        Output::Json(value())
    } else {
        Output::Text(text())
    }
}

fn run(cli: &Cli) -> zf_core::Result<(Output, bool)> {
    let o = &cli.opts;
    let ok = |out| Ok((out, true));
    match &cli.command {
        Command::Phi { index } => {
            let v = phi(&HElem::z(&parse_index(index)?))?;
            ok(pick(o.json, || v.to_string(), || v.to_json()))
        }
        Command::PhiHat { index } => {
            let v = phi_hat(&HElem::z(&parse_index(index)?), o.t_order)?;
            ok(pick(o.json, || v.to_string(), || v.to_json()))
        }
        Command::W { tree } => {
            let v = w_word(&parse_tree(tree)?)?;
            ok(pick(o.json, || v.to_string(), || v.to_json()))
        }
        Command::Harvest { tree } => {
            let h = harvestable_form(&parse_tree(tree)?)?;
            ok(pick(o.json, || h.to_string(), || h.to_json()))
        }
        Command::CapPhi { tree } => {
            let v = cap_phi(&parse_tree(tree)?)?;
            ok(pick(o.json, || v.to_string(), || v.to_json()))
        }
        Command::CapPhiHat { tree } => {
            let v = cap_phi_hat(&parse_tree(tree)?, o.t_order)?;
            ok(pick(o.json, || v.to_string(), || v.to_json()))
        }
        Command::Zeta { index } => {
            let v = zeta_index(&parse_index(index)?, o.m);
            ok(pick(
                o.json,
                || v.to_string(),
                || json!({ "value": v.to_string() }),
            ))
        }
        Command::ZetaTree { tree } => {
            let v = zeta_tree(&parse_tree(tree)?, o.m)?;
            ok(pick(
                o.json,
                || v.to_string(),
                || json!({ "value": v.to_string() }),
            ))
        }
        Command::ZetaShat { tree } => {
            let v = zeta_shat_tree(&parse_tree(tree)?, o.m, o.t_order)?;
            ok(pick(o.json, || v.to_string(), || v.to_json()))
        }
        Command::Zm { index } => {
            let v = z_m_eval(&HElem::z(&parse_index(index)?), o.m)?;
            ok(pick(
                o.json,
                || v.to_string(),
                || json!({ "value": v.to_string() }),
            ))
        }
        Command::Verify { suite } => {
            let cfg = RunConfig {
                t_order: o.t_order,
                m_max: o.m,
                weight_max: o.weight_max,
                seed: o.seed,
                count: o.count,
            };
            let report = run_suite(suite, &cfg)?;
            let passed = report.passed();
            Ok((
                pick(o.json, || report.to_string(), || report.to_json()),
                passed,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.opts.t_order == 0 || cli.opts.weight_max == 0 {
        eprintln!("error: --t-order and --weight-max must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok((out, passed)) => {
            match out {
                Output::Text(s) => println!("{s}"),
                Output::Json(v) => println!("{v}"),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
