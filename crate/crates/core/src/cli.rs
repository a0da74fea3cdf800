//! The `abext` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::abelian::{parse_group, AbelianGroup};
use crate::error::Error;
use crate::extensions::{brute_force_is_extension, extension_set, is_extension, OracleConfig, DEFAULT_ORACLE_BOUND};
use crate::families::{enumerate_family, render_tables_text, tables, Family};
use crate::lr::{lr_coefficient, lr_expand};
use crate::partition::Partition;
use crate::verify::{Verifier, CLAIMS, DEFAULT_BOUND, DEFAULT_SEED};

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_VACUOUS: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "abext", version, about = "Abelian extensions of finite abelian groups and the families they fall into")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Worker threads for sweeps (default: available parallelism)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Littlewood-Richardson expansion of λ·ν
    LrExpand { lambda: Partition, nu: Partition },
    /// Single coefficient c^μ_{λν}
    LrCoeff { lambda: Partition, nu: Partition, mu: Partition },
    /// All extensions of K by H, or a single membership check
    Ext {
        h: String,
        k: String,
        /// Decide whether this group is an extension instead of listing
        #[arg(long, value_name = "G")]
        check: Option<String>,
        /// Confirm --check with the element-level search
        #[arg(long, requires = "check")]
        oracle: bool,
        /// Largest p-part order the element-level search may build
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND as u64, value_parser = clap::value_parser!(u64).range(1..))]
        oracle_bound: u64,
    },
    /// Whether a group lies in a named family
    Member {
        group: String,
        #[arg(long)]
        family: String,
    },
    /// Members of a family up to an order bound
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// The six family tables
    Tables,
    /// Check a claim at bounded order
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CLAIMS))]
        claim: String,
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        /// Seed for the randomized property sweep
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn group(s: &str) -> Result<AbelianGroup, Error> {
    Ok(parse_group(s)?)
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json value") + "\n"
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    let json = cli.format == Format::Json;
    Ok(match &cli.command {
        Command::LrExpand { lambda, nu } => {
            let e = lr_expand(lambda, nu);
            if json {
                let terms: Vec<_> = e.terms().iter().map(|(mu, c)| json!({"shape": mu, "coefficient": c})).collect();
                Output::ok(pretty(json!(terms)))
            } else {
                Output::ok(lines(e.terms().iter().map(|(mu, c)| format!("{mu} {c}"))))
            }
        }
        Command::LrCoeff { lambda, nu, mu } => {
            let c = lr_coefficient(lambda, nu, mu);
            Output::ok(if json { pretty(json!({"coefficient": c})) } else { format!("{c}\n") })
        }
        Command::Ext { h, k, check: None, .. } => {
            let set = extension_set(&group(h)?, &group(k)?);
            Output::ok(if json { pretty(json!(set)) } else { lines(set.to_strings()) })
        }
        Command::Ext { h, k, check: Some(g), oracle, oracle_bound } => {
            let (g, h, k) = (group(g)?, group(h)?, group(k)?);
            let answer = is_extension(&g, &h, &k);
            let confirmed = if *oracle {
                let cfg = OracleConfig { max_p_part_order: u128::from(*oracle_bound) };
                Some(brute_force_is_extension(&g, &h, &k, cfg)?)
            } else {
                None
            };
            let agree = confirmed.is_none_or(|c| c == answer);
            let text = if json {
                pretty(json!({"extension": answer, "oracle": confirmed}))
            } else {
                let mut t = format!("{answer}\n");
                if let Some(c) = confirmed {
                    t += &format!("oracle: {c}\n");
                }
                t
            };
            Output { text, code: if agree { 0 } else { EXIT_FAIL } }
        }
        Command::Member { group: g, family } => {
            let f = Family::builtin(family)?;
            let g = group(g)?;
            let rows: Vec<usize> =
                f.patterns().iter().enumerate().filter(|(_, p)| p.matches(&g)).map(|(i, _)| i + 1).collect();
            let member = f.contains(&g);
            if json {
                Output::ok(pretty(json!({"group": g.to_string(), "family": f.name(), "member": member, "rows": rows})))
            } else {
                Output::ok(format!("{member}\n"))
            }
        }
        Command::Enumerate { family, bound } => {
            let set = enumerate_family(&Family::builtin(family)?, u128::from(*bound))?;
            Output::ok(if json { pretty(json!(set)) } else { lines(set.to_strings()) })
        }
        Command::Tables => {
            let t = tables();
            Output::ok(if json { pretty(json!(t)) } else { render_tables_text(&t) })
        }
        Command::Verify { claim, bound, seed } => {
            let report = Verifier::default().run(claim, *bound, *seed)?;
            for note in &report.notes {
                eprintln!("note: {note}");
            }
            let text = if json { report.to_json() + "\n" } else { report.to_string() };
            Output { text, code: report.exit_code() }
        }
    })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Input(_) => EXIT_USAGE,
        Error::Resource(_) => EXIT_RESOURCE,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(usize::from(n)).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => {
                eprintln!("error: cannot start worker pool: {e}");
                return EXIT_RESOURCE;
            }
        },
        None => execute(&cli),
    };
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.text),
        None => std::io::stdout().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_RESOURCE;
    }
    output.code
}
