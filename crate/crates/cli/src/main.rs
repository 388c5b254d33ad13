//! `meandric`: count meandric systems, rebuild the moment table of `ν`,
//! transform moment/cumulant sequences and run the identity suite.

mod verify;

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use meandric::analysis::{build_table1, table1_csv};
use meandric::enumeration::{
    checkpointed_count, count_all, count_b3, join_power_sum_full, mixed_join_sum, CountOptions,
    CountReport, Shard,
};
use meandric::freeprob::{
    cumulants_to_moments, moments_to_cumulants, nu_cumulants, r_transform, render_rational,
    CumulantSequence, MomentSequence,
};
use meandric::meander::MeandricSystem;
use meandric::nc_lattice::SetPartition;
use meandric::reference::{meander_numbers, parse_meander_table};
use num_bigint::BigInt;
use serde_json::json;

#[derive(Parser)]
#[command(name = "meandric", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count meanders, irreducible and strictly non-crossing systems,
    /// component histograms and meet-zero pairs over NC(n)².
    Count {
        #[command(flatten)]
        sizes: Sizes,
        #[command(flatten)]
        workers: Workers,
        /// Allow n above the default feasibility limit of 12.
        #[arg(long)]
        force: bool,
        /// Only count shard i of k (0-based); merge the pieces with `merge`.
        #[arg(long, value_name = "i/k")]
        shard: Option<Shard>,
        /// Include elapsed time and worker count in JSON output.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Merge JSON reports of all shards of one run.
    Merge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Even cumulants and moments of ν for n = 1..24 with the ratio to C_n².
    Table1 {
        /// Meander table to use instead of the bundled one.
        #[arg(long, value_name = "PATH")]
        meanders: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Run the identity suite; exits non-zero if any identity fails.
    Verify {
        /// Largest n for the enumerated checks.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[command(flatten)]
        workers: Workers,
        /// Allow max-n above the default feasibility limit.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Moment, cumulant or R-transform coefficients to a given order.
    Series {
        /// Truncation order (defaults to the full input).
        #[arg(long)]
        order: Option<usize>,
        /// What to emit.
        #[arg(long, value_enum, default_value_t = SeriesKind::Moments)]
        kind: SeriesKind,
        /// JSON sequence to start from; defaults to the cumulants of ν.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Whether `--input` holds moments or cumulants.
        #[arg(long, value_enum, default_value_t = InputKind::Cumulants)]
        input_kind: InputKind,
        #[command(flatten)]
        output: Output,
    },
    /// Describe the meandric system of two non-crossing partitions,
    /// written like "{1,3|2|4}".
    Show {
        top: String,
        bottom: String,
        #[command(flatten)]
        output: Output,
    },
    /// Count triples with π₁ ∧ π₂ = 0 and π₂ ∨ π₃ = 1 in NC(n).
    B3 {
        #[command(flatten)]
        sizes: Sizes,
        #[command(flatten)]
        output: Output,
    },
    /// Σ d^|π ∨ ρ| over NC(n)² with the join in the full partition lattice,
    /// or over NC(2n) × NCP(2n) with --mixed.
    Joinsum {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long)]
        mixed: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Sizes {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// Inclusive range such as 1..8.
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    n_range: Option<RangeInclusive<usize>>,
}

impl Sizes {
    fn values(&self) -> Vec<usize> {
        match (&self.n, &self.n_range) {
            (Some(n), _) => vec![*n as usize],
            (None, Some(r)) => r.clone().collect(),
            (None, None) => unreachable!("clap requires one of --n / --n-range"),
        }
    }

    fn is_single(&self) -> bool {
        self.n.is_some()
    }
}

#[derive(Args)]
struct Workers {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, env = "MEANDRIC_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

impl Workers {
    fn options(&self, force: bool) -> CountOptions {
        let mut opts = CountOptions::default();
        if let Some(w) = self.workers {
            opts.workers = w as usize;
        }
        opts.force = force;
        opts
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl Output {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn emit(&self, mut text: String) -> Result<()> {
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Moments,
    Cumulants,
    RTransform,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Moments,
    Cumulants,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound in {s:?}"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound in {s:?}"))?;
    if a == 0 || a > b {
        return Err(format!("need 1 <= A <= B, got {s:?}"));
    }
    Ok(a..=b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a verification ran but reported failures.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Count {
            sizes,
            workers,
            force,
            shard,
            timing,
            output,
        } => {
            let opts = workers.options(force);
            let mut reports = Vec::new();
            for n in sizes.values() {
                let r = match shard {
                    Some(s) => checkpointed_count(n, s, &opts)?,
                    None => count_all(n, &opts)?,
                };
                reports.push(r);
            }
            output.emit(render_reports(
                &reports,
                output.format_or(Format::Json),
                timing,
                sizes.is_single(),
            ))?;
        }
        Command::Merge {
            files,
            timing,
            output,
        } => {
            let mut parts = Vec::new();
            for f in &files {
                let text =
                    fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
                parts.push(
                    CountReport::from_json(&text)
                        .with_context(|| format!("parsing {}", f.display()))?,
                );
            }
            let merged = CountReport::merge(&parts)?;
            output.emit(render_reports(
                &[merged],
                output.format_or(Format::Json),
                timing,
                true,
            ))?;
        }
        Command::Table1 { meanders, output } => {
            let table = match meanders {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    parse_meander_table(&text)?
                }
                None => meander_numbers(),
            };
            let rows = build_table1(&table)?;
            let text = match output.format_or(Format::Csv) {
                Format::Csv => table1_csv(&rows),
                Format::Json => serde_json::to_string_pretty(
                    &rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n.to_string(),
                                "cumulant": r.cumulant.to_string(),
                                "moment": r.moment.to_string(),
                                "ratio": r.ratio,
                            })
                        })
                        .collect::<Vec<_>>(),
                )?,
                Format::Text => {
                    let mut out = format!(
                        "{:>3}  {:>24}  {:>28}  {}\n",
                        "n", "cumulant", "moment", "ratio"
                    );
                    for r in &rows {
                        out.push_str(&format!(
                            "{:>3}  {:>24}  {:>28}  {}\n",
                            r.n, r.cumulant, r.moment, r.ratio
                        ));
                    }
                    out
                }
            };
            output.emit(text)?;
        }
        Command::Verify {
            max_n,
            workers,
            force,
            output,
        } => {
            let checks = verify::run_suite(max_n as usize, &workers.options(force))?;
            let passed = checks.iter().all(|c| c.passed);
            output.emit(verify::render(&checks, output.format_or(Format::Text)))?;
            return Ok(passed);
        }
        Command::Series {
            order,
            kind,
            input,
            input_kind,
            output,
        } => {
            let (moments, cumulants) = load_series(input, input_kind)?;
            let available = moments.order();
            let order = order.unwrap_or(available);
            if order == 0 || order > available {
                bail!("order must be between 1 and {available}");
            }
            let values = match kind {
                SeriesKind::Moments => moments.truncate(order).values().to_vec(),
                SeriesKind::Cumulants => cumulants.truncate(order).values().to_vec(),
                SeriesKind::RTransform => r_transform(&cumulants.truncate(order))
                    .coefficients()
                    .to_vec(),
            };
            // R(z) carries a zero constant term; sequences start at index 1
            let first = usize::from(kind != SeriesKind::RTransform);
            let text = match output.format_or(Format::Json) {
                Format::Json => match kind {
                    SeriesKind::Moments => moments.truncate(order).to_json(),
                    SeriesKind::Cumulants => cumulants.truncate(order).to_json(),
                    SeriesKind::RTransform => json!({
                        "order": order,
                        "coefficients": values.iter().map(render_rational).collect::<Vec<_>>(),
                    })
                    .to_string(),
                },
                Format::Csv => {
                    let mut out = String::from("k,value\n");
                    for (i, v) in values.iter().enumerate() {
                        out.push_str(&format!("{},{}\n", i + first, render_rational(v)));
                    }
                    out
                }
                Format::Text => values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| format!("{:>3}: {}\n", i + first, render_rational(v)))
                    .collect(),
            };
            output.emit(text)?;
        }
        Command::Show {
            top,
            bottom,
            output,
        } => {
            let top: SetPartition = top.parse()?;
            let bottom: SetPartition = bottom.parse()?;
            let m = MeandricSystem::new(&top, &bottom)?;
            let text = match output.format_or(Format::Text) {
                Format::Text => m.render(),
                Format::Json | Format::Csv => json!({
                    "top": m.top().to_string(),
                    "bottom": m.bottom().to_string(),
                    "permutation": m.perm().images(),
                    "orbits": m.orbit_partition().to_string(),
                    "components": m.component_count(),
                    "meander": m.is_meander(),
                    "irreducible": m.is_irreducible_direct(),
                    "strictly_noncrossing": m.is_strictly_noncrossing(),
                })
                .to_string(),
            };
            output.emit(text)?;
        }
        Command::B3 { sizes, output } => {
            let mut rows = Vec::new();
            for n in sizes.values() {
                rows.push((n, BigInt::from(count_b3(n)?)));
            }
            output.emit(render_scalars(
                "b3",
                &rows,
                output.format_or(Format::Json),
                sizes.is_single(),
            ))?;
        }
        Command::Joinsum {
            sizes,
            d,
            mixed,
            output,
        } => {
            let mut rows = Vec::new();
            for n in sizes.values() {
                let v = if mixed {
                    mixed_join_sum(n, d)?
                } else {
                    join_power_sum_full(n, d)?
                };
                rows.push((n, BigInt::from(v)));
            }
            let label = if mixed {
                "mixed_join_sum"
            } else {
                "join_power_sum"
            };
            output.emit(render_scalars(
                label,
                &rows,
                output.format_or(Format::Json),
                sizes.is_single(),
            ))?;
        }
    }
    Ok(true)
}

fn load_series(
    input: Option<PathBuf>,
    kind: InputKind,
) -> Result<(MomentSequence, CumulantSequence)> {
    let Some(path) = input else {
        let k = nu_cumulants(&meander_numbers())?;
        return Ok((cumulants_to_moments(&k), k));
    };
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    Ok(match kind {
        InputKind::Moments => {
            let m = MomentSequence::from_json(&text)?;
            let k = moments_to_cumulants(&m);
            (m, k)
        }
        InputKind::Cumulants => {
            let k = CumulantSequence::from_json(&text)?;
            (cumulants_to_moments(&k), k)
        }
    })
}

fn render_reports(reports: &[CountReport], format: Format, timing: bool, single: bool) -> String {
    match format {
        Format::Json if single => reports[0].to_json(timing),
        Format::Json => {
            let items: Vec<String> = reports.iter().map(|r| r.to_json(timing)).collect();
            format!("[{}]", items.join(","))
        }
        Format::Csv => {
            let mut out = format!("{}\n", CountReport::CSV_HEADER);
            for r in reports {
                out.push_str(&r.to_csv_row());
                out.push('\n');
            }
            out
        }
        Format::Text => reports
            .iter()
            .map(CountReport::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn render_scalars(label: &str, rows: &[(usize, BigInt)], format: Format, single: bool) -> String {
    match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, v)| json!({"n": n.to_string(), label: v.to_string()}))
                .collect();
            if single {
                items[0].to_string()
            } else {
                serde_json::Value::Array(items).to_string()
            }
        }
        Format::Csv => {
            let mut out = format!("n,{label}\n");
            for (n, v) in rows {
                out.push_str(&format!("{n},{v}\n"));
            }
            out
        }
        Format::Text => rows
            .iter()
            .map(|(n, v)| format!("n = {n}: {v}\n"))
            .collect(),
    }
}
