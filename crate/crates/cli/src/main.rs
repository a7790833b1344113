//! Command-line front end: exact Kronecker coefficients, refined
//! multimahonian distributions, identity verification suites, and the
//! persistent coefficient cache.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3
//! enumeration budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use multimahonian::budget::DEFAULT_BUDGET_STEPS;
use multimahonian::distributions::{count_tuples_with_descents, refined_multimahonian};
use multimahonian::kronecker::{
    kronecker_character, verify_oracle_equivalence, CacheError, CharacterTable, Provenance,
};
use multimahonian::permstat::verify_mahonian_equidistribution;
use multimahonian::symmetry::{verify_dcac, verify_sym};
use multimahonian::tableaux::verify_rs_correspondence;
use multimahonian::{
    distributions, Budget, BudgetError, DescentSet, KroneckerTable, Partition, VerifyReport, Window,
};
use num_bigint::BigUint;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "multimahonian",
    version,
    about = "Exact Kronecker coefficients and descent-statistic distributions of the symmetric group"
)]
struct Cli {
    /// Output format for results and reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Enumeration budget in steps; oversized requests fail cleanly
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_STEPS)]
    budget: u64,

    /// Seed for the sampled verification sweeps
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Kronecker coefficient cache file (JSON)
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    /// Character-free descent-set recursion
    Recursion,
    /// Class-weighted character sums
    Character,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// maj/inv equidistribution against the q-factorial
    Macmahon,
    /// Windowed diagonal-invariant series against the distribution times the product series
    Ggen,
    /// k-partite partition counts per multidegree
    Parpar,
    /// Profile counts under coordinate permutation
    Sym,
    /// Mixed-statistic counts under the parity rule
    Dcac,
    /// Recursion against the character oracle on every key
    Oracle,
    /// Row insertion as a descent-preserving bijection
    Rs,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficient of the given shapes (comma-separated parts)
    Kron {
        /// Shapes, e.g. `3,1 2,2 2,1,1`
        #[arg(required = true)]
        shapes: Vec<String>,
        /// Implementation to use
        #[arg(long, value_enum, default_value_t = Oracle::Recursion)]
        oracle: Oracle,
        /// Compute with both implementations and fail on mismatch
        #[arg(long)]
        both: bool,
        /// Decompose the tensor product of exactly two shapes
        #[arg(long)]
        decompose: bool,
    },
    /// Refined multimahonian distribution for S_n over k-tuples
    Dist {
        n: usize,
        k: usize,
        /// Collapse each variable block to one variable
        #[arg(long)]
        coarse: bool,
        /// Print a single coefficient, addressed by a descent profile like "{3};{2};{2,3}"
        #[arg(long)]
        coeff: Option<String>,
    },
    /// Run a verification suite and exit nonzero on failure
    Verify {
        suite: Suite,
        n: Option<usize>,
        k: Option<usize>,
        /// Exponent window for the series suites
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Inspect or move the coefficient cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Entry counts of the cache file
    Stats,
    /// Copy the validated cache to FILE
    Export { file: PathBuf },
    /// Merge validated entries of FILE into the cache
    Import { file: PathBuf },
}

enum CliError {
    Usage(String),
    Verification(String),
    Budget(BudgetError),
}

impl From<BudgetError> for CliError {
    fn from(e: BudgetError) -> Self {
        CliError::Budget(e)
    }
}

impl From<CacheError> for CliError {
    fn from(e: CacheError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let budget = Budget::new(cli.budget.max(1));
    match &cli.command {
        Command::Kron {
            shapes,
            oracle,
            both,
            decompose,
        } => cmd_kron(&cli, shapes, *oracle, *both, *decompose),
        Command::Dist {
            n,
            k,
            coarse,
            coeff,
        } => cmd_dist(&cli, &budget, *n, *k, *coarse, coeff.as_deref()),
        Command::Verify { suite, n, k, cap } => cmd_verify(&cli, &budget, *suite, *n, *k, *cap),
        Command::Cache { action } => cmd_cache(&cli, action),
    }
}

// ---------------------------------------------------------------------------
// kron
// ---------------------------------------------------------------------------

fn parse_shapes(raw: &[String]) -> Result<Vec<Partition>, CliError> {
    let shapes: Vec<Partition> = raw
        .iter()
        .map(|s| s.parse::<Partition>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let n = shapes[0].sum();
    if shapes.iter().any(|s| s.sum() != n) {
        return Err(CliError::Usage(format!(
            "all shapes must partition the same integer; got sizes {:?}",
            shapes.iter().map(Partition::sum).collect::<Vec<_>>()
        )));
    }
    Ok(shapes)
}

fn load_table(path: Option<&Path>, n: usize) -> Result<KroneckerTable, CliError> {
    match path {
        Some(p) if p.exists() => {
            let table = KroneckerTable::load(p)?;
            if table.n() != n {
                return Err(CliError::Usage(format!(
                    "cache {} holds coefficients for n={}, this computation needs n={n}",
                    p.display(),
                    table.n()
                )));
            }
            Ok(table)
        }
        _ => Ok(KroneckerTable::new(n)),
    }
}

fn cmd_kron(
    cli: &Cli,
    raw_shapes: &[String],
    oracle: Oracle,
    both: bool,
    decompose: bool,
) -> Result<(), CliError> {
    let shapes = parse_shapes(raw_shapes)?;
    let n = shapes[0].sum();

    if decompose {
        if shapes.len() != 2 {
            return Err(CliError::Usage(
                "--decompose needs exactly two shapes".to_string(),
            ));
        }
        let mut table = load_table(cli.cache.as_deref(), n)?;
        let mut rows: Vec<(Partition, BigUint)> = Vec::new();
        for rho in Partition::partitions_of(n) {
            let d = table.coefficient(&[shapes[0].clone(), shapes[1].clone(), rho.clone()]);
            if d != BigUint::from(0u32) {
                rows.push((rho, d));
            }
        }
        if let Some(path) = cli.cache.as_deref() {
            table.save(path)?;
        }
        match cli.format {
            Format::Text => {
                for (rho, d) in &rows {
                    println!("{rho}: {d}");
                }
            }
            Format::Json => {
                let items: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(rho, d)| {
                        serde_json::json!({ "shape": rho.parts(), "multiplicity": d.to_string() })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "shapes": [shapes[0].parts(), shapes[1].parts()],
                    "decomposition": items,
                });
                println!("{}", serde_json::to_string(&doc).expect("serializable"));
            }
            Format::Csv => {
                println!("shape,multiplicity");
                for (rho, d) in &rows {
                    println!("\"{rho}\",{d}");
                }
            }
        }
        return Ok(());
    }

    let recursion_value = |cli: &Cli| -> Result<BigUint, CliError> {
        let mut table = load_table(cli.cache.as_deref(), n)?;
        let v = table.coefficient(&shapes);
        if let Some(path) = cli.cache.as_deref() {
            table.save(path)?;
        }
        Ok(v)
    };
    let character_value = || -> BigUint {
        let chartab = CharacterTable::build(n);
        kronecker_character(&chartab, &shapes)
    };

    let (value, used) = if both {
        let rec = recursion_value(cli)?;
        let chr = character_value();
        if rec != chr {
            return Err(CliError::Verification(format!(
                "recursion gives {rec} but characters give {chr} for {raw_shapes:?}"
            )));
        }
        (rec, "both")
    } else {
        match oracle {
            Oracle::Recursion => (recursion_value(cli)?, "recursion"),
            Oracle::Character => (character_value(), "character"),
        }
    };

    match cli.format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let doc = serde_json::json!({
                "shapes": shapes.iter().map(|s| s.parts().to_vec()).collect::<Vec<_>>(),
                "value": value.to_string(),
                "oracle": used,
            });
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
        Format::Csv => {
            println!("value");
            println!("{value}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

fn parse_profile(raw: &str, n: usize, k: usize) -> Result<Vec<DescentSet>, CliError> {
    let pieces: Vec<&str> = raw.split(';').collect();
    if pieces.len() != k {
        return Err(CliError::Usage(format!(
            "profile {raw:?} has {} components, expected k={k}",
            pieces.len()
        )));
    }
    pieces
        .iter()
        .map(|p| DescentSet::parse_with_n(p, n).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

fn cmd_dist(
    cli: &Cli,
    budget: &Budget,
    n: usize,
    k: usize,
    coarse: bool,
    coeff: Option<&str>,
) -> Result<(), CliError> {
    if n == 0 || k == 0 {
        return Err(CliError::Usage("n and k must be positive".to_string()));
    }
    if let Some(raw) = coeff {
        let profile = parse_profile(raw, n, k)?;
        let mut cost: u128 = 1;
        for d in &profile[..k - 1] {
            cost = cost
                .saturating_mul(multimahonian::permstat::descent_class_size(n, d).max(1) as u128);
        }
        budget.check(cost, "descent-class tuple count")?;
        let count = count_tuples_with_descents(n, &profile);
        match cli.format {
            Format::Text | Format::Csv => println!("{count}"),
            Format::Json => {
                let doc = serde_json::json!({
                    "n": n, "k": k, "profile": raw, "coefficient": count.to_string(),
                });
                println!("{}", serde_json::to_string(&doc).expect("serializable"));
            }
        }
        return Ok(());
    }

    let mut poly = refined_multimahonian(n, k, budget)?;
    if coarse {
        poly = poly.specialize_coarse();
    }
    match cli.format {
        Format::Text => println!("{poly}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&poly.to_json()).expect("serializable")
        ),
        Format::Csv => print!("{}", poly.to_csv()),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    cli: &Cli,
    budget: &Budget,
    suite: Suite,
    n: Option<usize>,
    k: Option<usize>,
    cap: Option<u32>,
) -> Result<(), CliError> {
    let report: VerifyReport = match suite {
        Suite::Macmahon => verify_mahonian_equidistribution(n.unwrap_or(8)),
        Suite::Rs => verify_rs_correspondence(n.unwrap_or(7)),
        Suite::Oracle => verify_oracle_equivalence(n.unwrap_or(5), k.unwrap_or(3)),
        Suite::Sym => verify_sym(n.unwrap_or(4), k.unwrap_or(3), budget, cli.seed)?,
        Suite::Dcac => verify_dcac(n.unwrap_or(4), k.unwrap_or(3), budget, cli.seed)?,
        Suite::Ggen => distributions::verify_refined_quotient_identity(
            n.unwrap_or(2),
            k.unwrap_or(2),
            Window::new(cap.unwrap_or(2)),
            budget,
        )?,
        Suite::Parpar => distributions::verify_multipartite_count(
            n.unwrap_or(2),
            k.unwrap_or(2),
            cap.unwrap_or(2),
            budget,
        )?,
    };
    match cli.format {
        Format::Text | Format::Csv => println!("{report}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&report.to_json()).expect("serializable")
        ),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "suite {} reported failures",
            report.suite
        )))
    }
}

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

fn cmd_cache(cli: &Cli, action: &CacheAction) -> Result<(), CliError> {
    let cache_path = cli
        .cache
        .as_deref()
        .ok_or_else(|| CliError::Usage("cache commands need --cache PATH".to_string()))?;
    match action {
        CacheAction::Stats => {
            if !cache_path.exists() {
                match cli.format {
                    Format::Text | Format::Csv => println!("entries: 0"),
                    Format::Json => println!("{}", serde_json::json!({ "entries": 0 })),
                }
                return Ok(());
            }
            let table = KroneckerTable::load(cache_path)?;
            let by_recursion = table
                .entries()
                .filter(|(_, e)| e.provenance == Provenance::Recursion)
                .count();
            match cli.format {
                Format::Text | Format::Csv => {
                    println!("n: {}", table.n());
                    println!("entries: {}", table.len());
                    println!("recursion: {by_recursion}");
                    println!("character: {}", table.len() - by_recursion);
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "n": table.n(),
                        "entries": table.len(),
                        "recursion": by_recursion,
                        "character": table.len() - by_recursion,
                    });
                    println!("{}", serde_json::to_string(&doc).expect("serializable"));
                }
            }
            Ok(())
        }
        CacheAction::Export { file } => {
            if !cache_path.exists() {
                return Err(CliError::Usage(format!(
                    "no cache at {}",
                    cache_path.display()
                )));
            }
            let table = KroneckerTable::load(cache_path)?;
            table.save(file)?;
            println!("exported {} entries to {}", table.len(), file.display());
            Ok(())
        }
        CacheAction::Import { file } => {
            let incoming = KroneckerTable::load(file)?;
            let mut table = if cache_path.exists() {
                KroneckerTable::load(cache_path)?
            } else {
                KroneckerTable::new(incoming.n())
            };
            table.merge(&incoming)?;
            table.save(cache_path)?;
            println!(
                "imported {} entries; cache now holds {}",
                incoming.len(),
                table.len()
            );
            Ok(())
        }
    }
}
