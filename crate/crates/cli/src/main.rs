use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use comtuples::formula::{count_table, orbifold_chis, sym_series, Family};
use comtuples::verify::{run_suite, CheckReport, ExponentFault, Options, Suite, Sweep};
use comtuples::{Error, Guards};
use num_bigint::BigInt;
use num_traits::One;
use num_rational::BigRational;
use serde_json::json;

mod output;

use output::{Format, Table};

/// Commuting m-tuples in S_n and C_i Wr S_n, and orbifold Euler
/// characteristics of symmetric products, in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "comtuples", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// |Com(S_n, m)| (or |Com(C_i Wr S_n, m)|) for n = 0..=max-n.
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_n: usize,
        /// Count in C_i Wr S_n instead of S_n.
        #[arg(long)]
        wreath_i: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// chi_m(M^n, S_n) for n = 0..=max-n, where chi(M) = --chi.
    Chi {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients of the generating function up to u^order.
    Series {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
        chi: i64,
        #[arg(long)]
        order: usize,
        /// Print n! times each coefficient over n!.
        #[arg(long)]
        egf: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run cross-check suites; exit 1 if any comparison fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Eq1,
    T1,
    Induction,
    Structure,
    Partitions,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest n (series order for t1).
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest tuple length (eq1, t1).
    #[arg(long)]
    max_m: Option<usize>,
    /// Euler characteristics to sweep (eq1, t1).
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    chi: Option<Vec<i64>>,
    /// Base orders i (induction, structure).
    #[arg(long = "i", num_args = 1..)]
    is: Option<Vec<u64>>,
    /// Tuple lengths (induction).
    #[arg(long = "m", num_args = 1..)]
    ms: Option<Vec<usize>>,
    #[command(flatten)]
    guards: GuardArgs,
    /// Add one to the exponent E(D) on the series route (fault injection).
    #[arg(long, hide = true)]
    inject_exponent_fault: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct GuardArgs {
    /// Largest wreath-product order for brute-force tuple counting.
    #[arg(long)]
    max_group_order: Option<u128>,
    /// Node budget of the centralizer recursion.
    #[arg(long)]
    node_budget: Option<u64>,
    /// Largest degree for brute-force tuple enumeration in S_n.
    #[arg(long)]
    max_tuple_degree: Option<usize>,
}

impl GuardArgs {
    fn resolve(&self) -> Guards {
        let mut g = Guards::default();
        let mut overridden = Vec::new();
        if let Some(v) = self.max_group_order {
            g.max_group_order = v;
            overridden.push(format!("--max-group-order {v}"));
        }
        if let Some(v) = self.node_budget {
            g.node_budget = v;
            overridden.push(format!("--node-budget {v}"));
        }
        if let Some(v) = self.max_tuple_degree {
            g.max_tuple_degree = v;
            g.max_enumeration_degree = g.max_enumeration_degree.max(v);
            overridden.push(format!("--max-tuple-degree {v}"));
        }
        if !overridden.is_empty() {
            eprintln!("WARNING: enumeration guards overridden ({})", overridden.join(", "));
            eprintln!("WARNING: brute-force work grows factorially; this may not finish");
        }
        g
    }
}

fn family_name(family: Family, m: usize) -> String {
    match family {
        Family::Symmetric => format!("|Com(S_n, {m})|"),
        Family::Wreath(i) => format!("|Com(C_{i} Wr S_n, {m})|"),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mut out = std::io::stdout().lock();
    let written = match cli.command {
        Command::Count {
            m,
            max_n,
            wreath_i,
            format,
        } => {
            let family = wreath_i.map_or(Family::Symmetric, Family::Wreath);
            let table = count_table(family, m, max_n)?;
            let mut params = json!({ "m": m, "max_n": max_n, "family": "symmetric" });
            if let Some(i) = wreath_i {
                params["family"] = json!("wreath");
                params["i"] = json!(i);
            }
            let t = Table {
                title: family_name(family, m),
                params,
                columns: vec!["n", "count"],
                rows: table
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(n, c)| vec![n.to_string(), c.to_string()])
                    .collect(),
            };
            t.write(&mut out, format)
        }
        Command::Chi {
            m,
            chi,
            max_n,
            format,
        } => {
            let values = orbifold_chis(m, chi, max_n)?;
            let t = Table {
                title: format!("chi_{m}(M^n, S_n) with chi(M) = {chi}"),
                params: json!({ "m": m, "chi": chi, "max_n": max_n }),
                columns: vec!["n", "chi"],
                rows: values
                    .iter()
                    .enumerate()
                    .map(|(n, v)| vec![n.to_string(), v.to_string()])
                    .collect(),
            };
            t.write(&mut out, format)
        }
        Command::Series {
            m,
            chi,
            order,
            egf,
            format,
        } => {
            let s = sym_series(m, chi, order)?;
            let params = json!({ "m": m, "chi": chi, "order": order, "egf": egf });
            let t = if egf {
                let mut fact = BigInt::one();
                let mut rows = Vec::new();
                for (n, c) in s.coeffs().iter().enumerate() {
                    if n > 0 {
                        fact *= n;
                    }
                    let scaled = c * BigRational::from_integer(fact.clone());
                    rows.push(vec![n.to_string(), scaled.to_string(), fact.to_string()]);
                }
                Table {
                    title: format!("EGF coefficients of the m = {m} series, chi = {chi}"),
                    params,
                    columns: vec!["n", "numerator", "denominator"],
                    rows,
                }
            } else {
                Table {
                    title: format!("coefficients of the m = {m} series, chi = {chi}"),
                    params,
                    columns: vec!["n", "coefficient"],
                    rows: s
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(n, c)| vec![n.to_string(), c.to_string()])
                        .collect(),
                }
            };
            t.write(&mut out, format)
        }
        Command::Verify(args) => {
            let opts = Options {
                guards: args.guards.resolve(),
                fault: args.inject_exponent_fault.map(|degree| ExponentFault {
                    degree,
                    delta: 1,
                }),
            };
            let sweep = Sweep {
                max_n: args.max_n,
                max_m: args.max_m,
                chis: args.chi,
                is: args.is,
                ms: args.ms,
            };
            let suites: Vec<Suite> = match args.suite {
                SuiteArg::Eq1 => vec![Suite::Eq1],
                SuiteArg::T1 => vec![Suite::T1],
                SuiteArg::Induction => vec![Suite::Induction],
                SuiteArg::Structure => vec![Suite::Structure],
                SuiteArg::Partitions => vec![Suite::Partitions],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let reports: Vec<CheckReport> = suites
                .into_iter()
                .map(|s| run_suite(s, &sweep, &opts))
                .collect::<Result<_, _>>()?;
            tolerate_closed_pipe(output::write_reports(&mut out, &reports, args.format))?;
            let pass = reports.iter().all(|r| r.pass);
            return Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    tolerate_closed_pipe(written)?;
    out.flush().ok();
    Ok(ExitCode::SUCCESS)
}

/// A reader that hangs up early (`| head`) is not an error.
fn tolerate_closed_pipe(r: std::io::Result<()>) -> Result<(), Error> {
    match r {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Error::InvalidArgument(format!("writing output: {e}")))
        }
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::GuardExceeded { .. } => ExitCode::from(3),
                Error::Integrality(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
