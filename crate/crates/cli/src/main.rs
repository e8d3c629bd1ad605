//! Batch command-line interface: Witt tables, Hall bases, multiplier
//! dimensions, tau evaluation, direct-sum verification, and capability
//! reduction. Exit status 0 means the computation ran (a theorem mismatch is
//! a result, not an error), 2 means invalid input, 3 means the size budget
//! was exceeded.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nilmult::algebra::{catalog_with_budget, SCAlgebra};
use nilmult::capability::{reduce_capability, FactTable, Leaf, SumExpression, Verdict};
use nilmult::hall::{generate, mixed_filter, Alphabet};
use nilmult::multiplier::{
    multiplier_dim_with_budget, tau_dim_big, verify_direct_sum_with_budget, MultiplierReport,
};
use nilmult::witt::witt_big;

#[derive(Parser)]
#[command(
    name = "nilmult",
    version,
    about = "c-nilpotent multipliers of nilpotent Lie algebras: Hall bases, Witt numbers, exact verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on the free Hall frame dimension used by the pipeline.
    #[arg(long, global = true, default_value_t = nilmult::DEFAULT_BUDGET)]
    budget: usize,
    /// Print sizing diagnostics to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Witt number l_d(n), or a full table with --table.
    Witt {
        /// d and n (with --table: d_max and n_max).
        #[arg(num_args = 2)]
        args: Vec<u64>,
        /// Emit the whole l_d(n) grid for d <= d_max, n <= n_max.
        #[arg(long)]
        table: bool,
    },
    /// Basic commutators of one weight, one nested-bracket form per line.
    Hall {
        /// Either `d w` (one letter group) or `d1 d2 w` (two groups).
        #[arg(num_args = 2..=3)]
        args: Vec<usize>,
        /// Keep only commutators using both letter groups.
        #[arg(long)]
        mixed: bool,
    },
    /// Print an algebra in the JSON interchange schema.
    Algebra {
        /// Catalog name (A(n), H(m), f(d,k)) or a JSON algebra file.
        arg: String,
    },
    /// Dimension of the c-nilpotent multiplier of one algebra.
    Mult {
        /// Catalog name (A(n), H(m), f(d,k)) or a JSON algebra file.
        algebra: String,
        c: usize,
    },
    /// Dimension of tau(K, H)_c for abelian dimensions k and h.
    Tau { k: usize, h: usize, c: usize },
    /// Brute-force and closed-form multiplier dimensions for a direct sum.
    Verify {
        algebra1: String,
        algebra2: String,
        c: usize,
    },
    /// Capability verdict for a direct-sum expression, e.g. "H(1)+A(5)".
    Capability {
        /// `+`-separated leaves; each leaf is a catalog name or JSON file,
        /// optionally suffixed `=capable` or `=not-capable`.
        expr: String,
        c: usize,
        /// Verdict fact table to use instead of the built-in one.
        #[arg(long)]
        facts: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<nilmult::Error>() {
        Some(nilmult::Error::BudgetExceeded { .. }) => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<()> {
    if cli.budget == 0 {
        return Err(anyhow!("budget must be at least 1"));
    }
    match &cli.command {
        Command::Witt { args, table } => cmd_witt(&cli, args, *table),
        Command::Hall { args, mixed } => cmd_hall(&cli, args, *mixed),
        Command::Algebra { arg } => cmd_algebra(&cli, arg),
        Command::Mult { algebra, c } => cmd_mult(&cli, algebra, *c),
        Command::Tau { k, h, c } => cmd_tau(&cli, *k, *h, *c),
        Command::Verify {
            algebra1,
            algebra2,
            c,
        } => cmd_verify(&cli, algebra1, algebra2, *c),
        Command::Capability { expr, c, facts } => cmd_capability(&cli, expr, *c, facts.as_deref()),
    }
}

fn require_weight(n: u64) -> Result<()> {
    if n == 0 {
        return Err(anyhow!("weight must be at least 1"));
    }
    Ok(())
}

fn cmd_witt(cli: &Cli, args: &[u64], table: bool) -> Result<()> {
    let (d, n) = (args[0], args[1]);
    require_weight(n)?;
    if !table {
        let value = witt_big(d as usize, n as usize);
        match cli.format {
            Format::Text => println!("{value}"),
            Format::Csv => println!("d,n,value\n{d},{n},{value}"),
            Format::Json => println!(
                "{}",
                serde_json::json!({"d": d, "n": n, "value": value.to_string()})
            ),
            Format::Markdown => {
                println!("| d | n | l_d(n) |\n| --- | --- | --- |\n| {d} | {n} | {value} |")
            }
        }
        return Ok(());
    }
    let (d_max, n_max) = (d, n);
    if d_max == 0 {
        return Err(anyhow!("--table needs d_max >= 1"));
    }
    let rows: Vec<Vec<String>> = (1..=d_max)
        .map(|dd| {
            (1..=n_max)
                .map(|nn| witt_big(dd as usize, nn as usize).to_string())
                .collect()
        })
        .collect();
    match cli.format {
        Format::Text => {
            let width = rows
                .iter()
                .flatten()
                .map(String::len)
                .max()
                .unwrap_or(1)
                .max(format!("{n_max}").len());
            let mut header = format!("{:>4} |", "d\\n");
            for nn in 1..=n_max {
                let _ = write!(header, " {nn:>width$}");
            }
            println!("{header}");
            for (i, row) in rows.iter().enumerate() {
                let mut line = format!("{:>4} |", i + 1);
                for v in row {
                    let _ = write!(line, " {v:>width$}");
                }
                println!("{line}");
            }
        }
        Format::Csv => {
            let header: Vec<String> = (1..=n_max).map(|nn| nn.to_string()).collect();
            println!("d/n,{}", header.join(","));
            for (i, row) in rows.iter().enumerate() {
                println!("{},{}", i + 1, row.join(","));
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({"d_max": d_max, "n_max": n_max, "rows": rows})
        ),
        Format::Markdown => {
            let header: Vec<String> = (1..=n_max).map(|nn| nn.to_string()).collect();
            println!("| d\\n | {} |", header.join(" | "));
            println!("|{}|", vec![" --- "; n_max as usize + 1].join("|"));
            for (i, row) in rows.iter().enumerate() {
                println!("| {} | {} |", i + 1, row.join(" | "));
            }
        }
    }
    Ok(())
}

fn cmd_hall(cli: &Cli, args: &[usize], mixed: bool) -> Result<()> {
    let (alphabet, weight) = match args {
        [d, w] => (Alphabet::single(*d), *w),
        [d1, d2, w] => (Alphabet::grouped(&[*d1, *d2]), *w),
        _ => unreachable!("clap enforces arity"),
    };
    require_weight(weight as u64)?;
    if alphabet.total_letters() == 0 {
        return Err(anyhow!("alphabet must have at least one letter"));
    }
    let trees = generate(&alphabet, weight);
    let trees = if mixed {
        mixed_filter(&trees, &alphabet).map_err(anyhow::Error::from)?
    } else {
        trees
    };
    if cli.verbose {
        eprintln!("{} commutator(s) of weight {weight}", trees.len());
    }
    let lines: Vec<String> = trees.iter().map(|t| t.display(&alphabet)).collect();
    match cli.format {
        Format::Text => {
            for line in &lines {
                println!("{line}");
            }
        }
        Format::Csv => {
            println!("commutator");
            for line in &lines {
                println!("{line}");
            }
        }
        Format::Json => println!("{}", serde_json::json!(lines)),
        Format::Markdown => {
            println!("| commutator |\n| --- |");
            for line in &lines {
                println!("| {line} |");
            }
        }
    }
    Ok(())
}

/// Resolves an algebra argument: a strict `NAME(args)` catalog reference, or
/// otherwise a path to a JSON algebra file.
fn load_algebra(arg: &str, budget: usize) -> Result<SCAlgebra> {
    if arg.contains('(') && arg.trim_end().ends_with(')') {
        return catalog_with_budget(arg, budget).map_err(anyhow::Error::from);
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read algebra file `{arg}`"))?;
    let mut algebra = SCAlgebra::from_json(&text).map_err(anyhow::Error::from)?;
    if algebra.name() == "L" {
        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
            algebra.set_name(stem);
        }
    }
    Ok(algebra)
}

fn cmd_algebra(cli: &Cli, arg: &str) -> Result<()> {
    let algebra = load_algebra(arg, cli.budget)?;
    match cli.format {
        Format::Text => {
            println!("{} (dim {})", algebra.name(), algebra.dim());
            println!("labels: {}", algebra.labels().join(", "));
            for (i, j, coords) in algebra.nonzero_pairs() {
                let terms: Vec<String> = coords
                    .iter()
                    .map(|(k, c)| {
                        let coeff = nilmult::rational::format_rational(c);
                        if coeff == "1" {
                            algebra.labels()[*k].clone()
                        } else {
                            format!("{coeff}*{}", algebra.labels()[*k])
                        }
                    })
                    .collect();
                println!(
                    "[{}, {}] = {}",
                    algebra.labels()[i],
                    algebra.labels()[j],
                    terms.join(" + ")
                );
            }
        }
        _ => println!("{}", algebra.to_json()),
    }
    Ok(())
}

fn cmd_mult(cli: &Cli, arg: &str, c: usize) -> Result<()> {
    if c == 0 {
        return Err(anyhow!("c must be at least 1"));
    }
    let algebra = load_algebra(arg, cli.budget)?;
    if cli.verbose {
        eprintln!(
            "{}: dim {}, class {:?}",
            algebra.name(),
            algebra.dim(),
            algebra.nilpotency_class()
        );
    }
    let dim = multiplier_dim_with_budget(&algebra, c, cli.budget)?;
    match cli.format {
        Format::Text => println!("{dim}"),
        Format::Csv => println!("algebra,c,dim\n{},{c},{dim}", csv_field(algebra.name())),
        Format::Json => println!(
            "{}",
            serde_json::json!({"algebra": algebra.name(), "c": c, "dim": dim})
        ),
        Format::Markdown => println!(
            "| algebra | c | dim M^(c) |\n| --- | --- | --- |\n| {} | {c} | {dim} |",
            algebra.name()
        ),
    }
    Ok(())
}

fn cmd_tau(cli: &Cli, k: usize, h: usize, c: usize) -> Result<()> {
    if c == 0 {
        return Err(anyhow!("c must be at least 1"));
    }
    let value = tau_dim_big(k, h, c);
    match cli.format {
        Format::Text => println!("{value}"),
        Format::Csv => println!("k,h,c,dim\n{k},{h},{c},{value}"),
        Format::Json => println!(
            "{}",
            serde_json::json!({"k": k, "h": h, "c": c, "dim": value.to_string()})
        ),
        Format::Markdown => println!(
            "| k | h | c | dim tau |\n| --- | --- | --- | --- |\n| {k} | {h} | {c} | {value} |"
        ),
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, arg1: &str, arg2: &str, c: usize) -> Result<()> {
    if c == 0 {
        return Err(anyhow!("c must be at least 1"));
    }
    let l1 = load_algebra(arg1, cli.budget)?;
    let l2 = load_algebra(arg2, cli.budget)?;
    if cli.verbose {
        eprintln!(
            "verifying {} (dim {}) + {} (dim {}) at c={c}, budget {}",
            l1.name(),
            l1.dim(),
            l2.name(),
            l2.dim(),
            cli.budget
        );
    }
    let report = verify_direct_sum_with_budget(&l1, &l2, c, cli.budget)?;
    print_report(cli.format, &report);
    Ok(())
}

fn print_report(format: Format, r: &MultiplierReport) {
    match format {
        Format::Text => {
            println!("L1 = {}, L2 = {}, c = {}", r.l1, r.l2, r.c);
            println!("lhs_bruteforce  dim M^({})(L1+L2) = {}", r.c, r.lhs_bruteforce);
            println!("m1              dim M^({})(L1)    = {}", r.c, r.m1);
            println!("m2              dim M^({})(L2)    = {}", r.c, r.m2);
            println!("tau             weight {}         = {}", r.c + 1, r.tau);
            println!("closed_form     m1 + m2 + tau    = {}", r.closed_form);
            println!("mixed_hall      weight {}         = {}", r.c + 1, r.mixed_hall);
            println!("match_theorem = {}", r.match_theorem);
            println!("match_mixed   = {}", r.match_mixed);
        }
        Format::Csv => {
            println!("{}", MultiplierReport::CSV_HEADER);
            println!("{}", r.csv_row());
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(r).expect("report serializes"));
        }
        Format::Markdown => {
            println!("{}", MultiplierReport::markdown_header());
            println!("{}", r.markdown_row());
        }
    }
}

fn parse_leaf(text: &str, budget: usize) -> Result<Leaf> {
    let (algebra_arg, verdict) = if let Some(rest) = text.strip_suffix("=capable") {
        (rest, Some(Verdict::Capable))
    } else if let Some(rest) = text.strip_suffix("=not-capable") {
        (rest, Some(Verdict::NotCapable))
    } else {
        (text, None)
    };
    let algebra = load_algebra(algebra_arg.trim(), budget)?;
    let mut leaf = Leaf::new(algebra);
    if let Some(v) = verdict {
        leaf = leaf.with_verdict(v);
    }
    Ok(leaf)
}

fn cmd_capability(cli: &Cli, expr_text: &str, c: usize, facts_path: Option<&str>) -> Result<()> {
    if c == 0 {
        return Err(anyhow!("c must be at least 1"));
    }
    let facts = match facts_path {
        None => FactTable::builtin(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read fact table `{path}`"))?;
            FactTable::from_json(&text).map_err(anyhow::Error::from)?
        }
    };
    let mut expr: Option<SumExpression> = None;
    for part in expr_text.split('+') {
        let part = part.trim();
        if part.is_empty() {
            return Err(anyhow!("empty summand in expression `{expr_text}`"));
        }
        let leaf = SumExpression::leaf(parse_leaf(part, cli.budget)?);
        expr = Some(match expr {
            None => leaf,
            Some(acc) => SumExpression::sum(acc, leaf),
        });
    }
    let expr = expr.ok_or_else(|| anyhow!("empty expression"))?;
    let outcome = reduce_capability(&expr, c, &facts);
    match cli.format {
        Format::Text => {
            println!("verdict: {}", outcome.verdict);
            for step in &outcome.trace {
                println!("  {}: {}", step.rule, step.detail);
            }
        }
        Format::Csv => {
            println!("verdict,{}", outcome.verdict);
            println!("rule,detail");
            for step in &outcome.trace {
                println!("{},{}", step.rule, csv_field(&step.detail));
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&outcome).expect("outcome serializes")
        ),
        Format::Markdown => {
            println!("**verdict: {}**\n", outcome.verdict);
            println!("| rule | detail |\n| --- | --- |");
            for step in &outcome.trace {
                println!("| {} | {} |", step.rule, step.detail);
            }
        }
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
