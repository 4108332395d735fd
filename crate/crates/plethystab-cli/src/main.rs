//! Command-line front end: parse one query, dispatch to the engine, print
//! the result as a table, as canonical JSON, or as CSV.
//!
//! Verbs:
//! - `tableaux`: list the semistandard tableaux of a shape, optionally with
//!   their weight matrix
//! - `b`: one coefficient of `x^ν` in `h_λ[s_μ]`
//! - `a`: one Schur-expansion coefficient of `s_λ[s_μ]`, with term statistics
//! - `expand`: the full Schur expansion of `s_λ[s_μ]`
//! - `stability`: a one-parameter coefficient family over a window of `n`
//! - `sweep`: the bulk self-checks, one pass/fail line per property
//!
//! Exit codes: 0 on success, 1 on usage errors (malformed partitions
//! included), 2 when an internal assertion fires or a self-check fails.

mod render;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plethystab::sweep::{run_all, SweepConfig};
use plethystab::{
    a_coeff_with_stats, b_coeff, enumerate_ssyt, run_report, schur_expand, weight_matrix, Family,
    FamilySpec, Partition, PlethysmQuery, Which,
};

/// Exact plethysm coefficients, Schur expansions, and stability reports.
#[derive(Parser)]
#[command(name = "plethystab", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads; 0 or unset means one per core.
    #[arg(long, global = true, env = "PLETHYSTAB_THREADS")]
    threads: Option<usize>,

    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Verb {
    /// List the semistandard tableaux of a shape over an alphabet.
    Tableaux(TableauxArgs),
    /// Print the coefficient of x^nu in h_lambda[s_mu].
    B(TripleArgs),
    /// Print the coefficient of s_nu in s_lambda[s_mu], with term statistics.
    A(TripleArgs),
    /// Print the full Schur expansion of s_lambda[s_mu].
    Expand(PairArgs),
    /// Evaluate a coefficient family over n = 0..=n_max and report bounds.
    Stability(StabilityArgs),
    /// Run the bulk self-checks and print one line per property.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct TableauxArgs {
    /// Shape: comma-separated weakly decreasing parts, e.g. 2,1.
    #[arg(long, value_parser = parse_partition)]
    shape: Partition,

    /// Alphabet size: entries run over 1..=N.
    #[arg(long, value_name = "N")]
    alphabet: usize,

    /// Also print the weight matrix, one row per tableau.
    #[arg(long)]
    matrix: bool,
}

#[derive(Args)]
struct TripleArgs {
    /// Outer shape.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,

    /// Inner shape.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,

    /// Target weight or shape.
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
}

#[derive(Args)]
struct PairArgs {
    /// Outer shape.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,

    /// Inner shape.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
}

#[derive(Args)]
struct StabilityArgs {
    /// Family tag: P1, Q1, R1, or R2.
    #[arg(long, value_parser = parse_family)]
    family: Family,

    /// Outer shape of the base triple.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,

    /// Inner shape of the base triple.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,

    /// Target of the base triple.
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,

    /// Direction partition, required by R2 and dropped by other families.
    #[arg(long, value_parser = parse_partition)]
    pi: Option<Partition>,

    /// Largest n to evaluate; the window is n = 0..=n_max.
    #[arg(long)]
    n_max: i64,

    /// Which coefficient to track: a or b.
    #[arg(long, value_parser = parse_which, default_value = "b")]
    which: Which,
}

#[derive(Args)]
struct SweepArgs {
    /// Cap on |lambda|*|mu| for the oracle sweeps.
    #[arg(long, default_value_t = 8)]
    max_weight: i64,

    /// Extra window terms past each stability bound (at least 3 are used).
    #[arg(long, default_value_t = 4)]
    n_pad: i64,

    /// Keep roughly one in this many instances, pseudorandomly by seed.
    #[arg(long)]
    sample: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    /// Human-readable lines.
    Table,
    /// Canonical single-line JSON with decimal-string integers.
    Json,
    /// Comma-separated rows (expand and stability only).
    Csv,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::from_str(s).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn parse_which(s: &str) -> Result<Which, String> {
    Which::from_str(s).map_err(|e| e.to_string())
}

fn csv_unsupported(verb: &str) -> String {
    format!("--format csv applies to expand and stability, not to {verb}")
}

/// Renders one verb; the second component is the process exit code.
fn run(cli: &Cli) -> Result<(String, u8), String> {
    match &cli.verb {
        Verb::Tableaux(args) => {
            let list = enumerate_ssyt(&args.shape, args.alphabet);
            let wm = args
                .matrix
                .then(|| weight_matrix(&args.shape, args.alphabet));
            match cli.format {
                Format::Table => Ok((render::tableaux_table(&list, wm.as_ref()), 0)),
                Format::Json => {
                    let v = render::tableaux_json(&args.shape, args.alphabet, &list, wm.as_ref());
                    Ok((render::json_line(&v), 0))
                }
                Format::Csv => Err(csv_unsupported("tableaux")),
            }
        }
        Verb::B(args) => {
            let nvars = args.lambda.fake_len().max(args.nu.fake_len());
            let count = b_coeff(&args.lambda.as_seq(), &args.mu, &args.nu.as_seq());
            match cli.format {
                Format::Table => Ok((format!("{count}\n"), 0)),
                Format::Json => {
                    let v =
                        render::b_json(&args.lambda, &args.mu, &args.nu, nvars, &count.to_string());
                    Ok((render::json_line(&v), 0))
                }
                Format::Csv => Err(csv_unsupported("b")),
            }
        }
        Verb::A(args) => {
            let query = PlethysmQuery::new(
                args.lambda.clone(),
                args.mu.clone(),
                args.nu.clone(),
            );
            let (value, stats) = a_coeff_with_stats(&query);
            match cli.format {
                Format::Table => Ok((render::a_table(&value.to_string(), stats), 0)),
                Format::Json => {
                    let v = render::a_json(
                        &args.lambda,
                        &args.mu,
                        &args.nu,
                        &value.to_string(),
                        stats,
                    );
                    Ok((render::json_line(&v), 0))
                }
                Format::Csv => Err(csv_unsupported("a")),
            }
        }
        Verb::Expand(args) => {
            let expansion = schur_expand(&args.lambda, &args.mu);
            match cli.format {
                Format::Table => Ok((render::expand_table(&expansion), 0)),
                Format::Json => Ok((render::json_line(&expansion.to_json()), 0)),
                Format::Csv => Ok((render::expand_csv(&expansion), 0)),
            }
        }
        Verb::Stability(args) => {
            let spec = FamilySpec::new(
                args.family,
                args.lambda.clone(),
                args.mu.clone(),
                args.nu.clone(),
                args.pi.clone(),
            )
            .map_err(|e| e.to_string())?;
            let report = run_report(&spec, args.n_max, args.which).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Table => Ok((render::stability_table(&report), 0)),
                Format::Json => Ok((render::json_line(&report.to_json()), 0)),
                Format::Csv => Ok((render::stability_csv(&report), 0)),
            }
        }
        Verb::Sweep(args) => {
            let cfg = SweepConfig {
                max_product: args.max_weight,
                n_pad: args.n_pad,
                sample: args.sample,
                seed: cli.seed,
            };
            let results = run_all(&cfg);
            let code = if results.iter().all(|r| r.passed()) { 0 } else { 2 };
            match cli.format {
                Format::Table => Ok((render::sweep_table(&results), code)),
                Format::Json => Ok((render::json_line(&render::sweep_json(&results)), code)),
                Format::Csv => Err(csv_unsupported("sweep")),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land here too; only real parse
            // failures are usage errors.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
        if let Err(e) = pool {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match panic::catch_unwind(AssertUnwindSafe(|| run(&cli))) {
        Ok(Ok((output, code))) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Ok(Err(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(_) => ExitCode::from(2),
    }
}
