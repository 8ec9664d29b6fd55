//! `gns`: command-line front end for generalized numerical semigroups.
//!
//! Exit status: 0 when every check holds, 1 when a violation witness was
//! found, 2 on invalid input.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gns_core::enumeration::{enumerate_genus, for_each_of_genus, random_gns, Parallelism};
use gns_core::families::{make_family_axis, make_family_box, make_family_e2d, make_ordinary};
use gns_core::io::{gns_from_json, gns_to_json, ideal_from_json, HoleSetFile};
use gns_core::monomial::{verify_colon_inequality, verify_monomial_wilf, verify_prop_ij};
use gns_core::report::{emit_report, ReportFormat};
use gns_core::sweep::{run_sweep, SweepConfig, SweepMode};
use gns_core::thickening::thicken;
use gns_core::wilf::{extended_wilf, generalized_wilf, order_frobenius, WilfReport};
use gns_core::{Gns, GnsError, MonomialIdeal, MonomialOrder, OrderKind, Point};

#[derive(Parser)]
#[command(
    name = "gns",
    version,
    about = "Generalized numerical semigroups in N^d"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a hole set and check the Wilf-type inequalities.
    Check {
        file: PathBuf,
        /// Order for the extended check; repeatable. Defaults to graded lex.
        #[arg(long = "order")]
        orders: Vec<String>,
        #[arg(long)]
        ewc_strict: bool,
    },
    /// Generators, region sets and the counting invariants.
    Invariants { file: PathBuf },
    /// Structural flags, pseudo-Frobenius elements and special gaps.
    Classify { file: PathBuf },
    /// k-thickening along a new axis.
    Thicken {
        file: PathBuf,
        /// 1-based position of the new axis.
        #[arg(long)]
        axis: usize,
        #[arg(short = 'k', default_value_t = 0)]
        k: u32,
    },
    /// Drop the axes on which every hole vanishes.
    Restrict { file: PathBuf },
    /// Enumerate all semigroups of one genus.
    Enumerate {
        #[arg(short = 'd')]
        dim: usize,
        #[arg(short = 'g')]
        genus: usize,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
        /// Stream every hole set as one JSON line (single worker).
        #[arg(long, conflicts_with = "count_only")]
        emit: bool,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// A random semigroup reached by a random descent of the tree.
    Random {
        #[arg(short = 'd')]
        dim: usize,
        #[arg(short = 'g')]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the inequalities over every or randomly chosen semigroups.
    Sweep(SweepArgs),
    /// Monomial ideal computations.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Explicit families.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(short = 'd')]
    dim: usize,
    #[arg(long)]
    max_genus: usize,
    #[arg(long, value_enum, default_value_t = Mode::All)]
    mode: Mode,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Also check the extended inequality, by default for every graded lex order.
    #[arg(long)]
    ewc: bool,
    /// Use the `+1` right-hand side in the extended check.
    #[arg(long)]
    ewc_strict: bool,
    /// Orders for the extended check, e.g. `grlex:2,1` or `grevlex:1,2,3`; repeatable.
    #[arg(long = "order")]
    orders: Vec<String>,
    /// Worker threads; 1 is serial, 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print one report row per semigroup instead of the summary.
    #[arg(long, value_enum)]
    report: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    All,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

#[derive(Subcommand)]
enum IdealCommand {
    /// `ℓ(I/I²) >= d ℓ(R/I)` and the associated semigroup.
    Wilf { file: PathBuf },
    /// Complete-intersection test, reduction number and colon inequalities.
    Reduction {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        cap: u32,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Holes are the nonzero points below `f`.
    Ordinary {
        /// Comma-separated coordinates.
        #[arg(long, value_delimiter = ',', required = true)]
        f: Vec<u32>,
    },
    /// Holes `e_i + t e_k`, `t < h`.
    Axis {
        #[arg(short = 'd')]
        dim: usize,
        #[arg(short = 'i')]
        i: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        h: u32,
    },
    /// Gaps of a numerical semigroup on axis `j`, boxed by `q` elsewhere.
    Box {
        #[arg(long, value_delimiter = ',')]
        gaps: Vec<u32>,
        #[arg(short = 'j')]
        j: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
    /// Generated by `a e_i, b e_i`, the other unit vectors and `e_i + h_j e_j`.
    E2d {
        #[arg(short = 'd')]
        dim: usize,
        #[arg(short = 'i')]
        i: usize,
        #[arg(short = 'a')]
        a: u32,
        #[arg(short = 'b')]
        b: u32,
        #[arg(long, value_delimiter = ',')]
        h: Vec<u32>,
    },
}

/// Outcome of a successful command.
enum Status {
    Holds,
    Violated,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Holds) => ExitCode::from(0),
        Ok(Status::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Status> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match command {
        Command::Check {
            file,
            orders,
            ewc_strict,
        } => check(&read_gns(&file)?, &orders, ewc_strict, &mut out)?,
        Command::Invariants { file } => {
            let s = read_gns(&file)?;
            let gens = s.minimal_generators();
            let (c, n) = s.region_sets();
            let inv = s.invariants_with_generators(gens.len());
            print_json(
                &mut out,
                &json!({
                    "dim": s.dim(),
                    "e": inv.e, "g": inv.g, "n": inv.n, "c": inv.c, "m": inv.m,
                    "generators": gens,
                    "n_set": n,
                    "c_set": c,
                    "fundamental_holes": s.fundamental_holes(),
                }),
            )?;
            Status::Holds
        }
        Command::Classify { file } => {
            let s = read_gns(&file)?;
            print_json(&mut out, &serde_json::to_value(s.classify())?)?;
            Status::Holds
        }
        Command::Thicken { file, axis, k } => {
            let t = thicken(&read_gns(&file)?, axis, k)?;
            writeln!(out, "{}", gns_to_json(&t))?;
            Status::Holds
        }
        Command::Restrict { file } => {
            let r = read_gns(&file)?.axes_and_restriction()?;
            print_json(
                &mut out,
                &json!({
                    "axes": r.axes,
                    "span_rank": r.span_rank,
                    "restricted": HoleSetFile::from(&r.restricted),
                }),
            )?;
            Status::Holds
        }
        Command::Enumerate {
            dim,
            genus,
            count_only,
            emit,
            jobs,
        } => {
            check_dim(dim)?;
            let lex = MonomialOrder::graded_lex(dim);
            if emit {
                let mut failure = None;
                let count = for_each_of_genus(dim, genus, &lex, |node| {
                    if failure.is_none() {
                        failure = writeln!(out, "{}", gns_to_json(&node.semigroup)).err();
                    }
                });
                if let Some(e) = failure {
                    return Err(e.into());
                }
                eprintln!("{count} semigroups");
            } else {
                let count = enumerate_genus(dim, genus, &lex, Parallelism::from_jobs(jobs), |_| {});
                if count_only {
                    writeln!(out, "{count}")?;
                } else {
                    print_json(
                        &mut out,
                        &json!({"dim": dim, "genus": genus, "count": count}),
                    )?;
                }
            }
            Status::Holds
        }
        Command::Random { dim, genus, seed } => {
            check_dim(dim)?;
            writeln!(out, "{}", gns_to_json(&random_gns(dim, genus, seed)?))?;
            Status::Holds
        }
        Command::Sweep(args) => sweep(args, &mut out)?,
        Command::Ideal { command } => ideal(command, &mut out)?,
        Command::Family { family } => {
            let s = match family {
                FamilyCommand::Ordinary { f } => make_ordinary(&Point::from(f))?,
                FamilyCommand::Axis { dim, i, k, h } => make_family_axis(dim, i, k, h)?,
                FamilyCommand::Box { gaps, j, q } => make_family_box(&gaps, j, &q)?,
                FamilyCommand::E2d { dim, i, a, b, h } => make_family_e2d(dim, i, a, b, &h)?,
            };
            writeln!(out, "{}", gns_to_json(&s))?;
            Status::Holds
        }
    };
    out.flush()?;
    Ok(status)
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        bail!(GnsError::ZeroDimension);
    }
    Ok(())
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn read_gns(path: &PathBuf) -> Result<Gns> {
    Ok(gns_from_json(&read_input(path)?)?)
}

fn read_ideal(path: &PathBuf) -> Result<MonomialIdeal> {
    Ok(ideal_from_json(&read_input(path)?)?)
}

fn print_json(out: &mut impl Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn parse_orders(dim: usize, names: &[String]) -> Result<Vec<MonomialOrder>> {
    names
        .iter()
        .map(|n| {
            let o: MonomialOrder = n.parse()?;
            if o.dim() != dim {
                bail!("order {n} has {} variables, expected {dim}", o.dim());
            }
            Ok(o)
        })
        .collect()
}

fn check(s: &Gns, orders: &[String], strict: bool, out: &mut impl Write) -> Result<Status> {
    let mut orders = parse_orders(s.dim(), orders)?;
    if orders.is_empty() {
        orders.push(MonomialOrder::graded_lex(s.dim()));
    }
    let gwc = generalized_wilf(s);
    let mut reports: Vec<WilfReport> = vec![gwc];
    let mut frobenius = Vec::new();
    for o in &orders {
        let (fb, n_order) = order_frobenius(s, o);
        frobenius.push(json!({"order": o.to_string(), "order_frobenius": fb, "n_order": n_order}));
        reports.push(extended_wilf(s, o, strict));
    }
    let holds = reports.iter().all(|r| r.holds);
    print_json(
        out,
        &json!({
            "dim": s.dim(),
            "genus": s.genus(),
            "holes": s.holes(),
            "valid": true,
            "reports": reports,
            "order_frobenius": frobenius,
        }),
    )?;
    if holds {
        Ok(Status::Holds)
    } else {
        for r in reports.iter().filter(|r| !r.holds) {
            eprintln!("violation: {r}");
        }
        eprintln!("witness: {}", gns_to_json(s));
        Ok(Status::Violated)
    }
}

fn sweep(args: SweepArgs, out: &mut impl Write) -> Result<Status> {
    check_dim(args.dim)?;
    let mut orders = parse_orders(args.dim, &args.orders)?;
    if orders.is_empty() && (args.ewc || args.ewc_strict) {
        orders = MonomialOrder::all_of_kind(OrderKind::GradedLex, args.dim);
    }
    let config = SweepConfig {
        dim: args.dim,
        max_genus: args.max_genus,
        mode: match args.mode {
            Mode::All => SweepMode::All,
            Mode::Random => SweepMode::Random {
                trials: args.trials,
                seed: args.seed,
            },
        },
        orders,
        ewc_strict: args.ewc_strict,
        jobs: args.jobs,
        collect_rows: args.report.is_some(),
    };
    let summary = run_sweep(&config)?;
    match args.report {
        Some(format) => {
            let format = match format {
                Format::Csv => ReportFormat::Csv,
                Format::Jsonl => ReportFormat::JsonLines,
            };
            emit_report(&summary.rows, &config.orders, format, &mut *out)?;
        }
        None => print_json(out, &serde_json::to_value(&summary)?)?,
    }
    if summary.all_hold() {
        Ok(Status::Holds)
    } else {
        eprintln!(
            "violations: {} generalized, {} extended",
            summary.gwc_violations, summary.ewc_violations
        );
        for w in &summary.witnesses {
            let holes = HoleSetFile {
                dim: config.dim,
                holes: w.holes.clone(),
            };
            eprintln!(
                "witness [{}] {} < {}: {}",
                w.check,
                w.lhs,
                w.rhs,
                serde_json::to_string(&holes)?
            );
        }
        Ok(Status::Violated)
    }
}

fn ideal(command: IdealCommand, out: &mut impl Write) -> Result<Status> {
    match command {
        IdealCommand::Wilf { file } => {
            let i = read_ideal(&file)?;
            let report = verify_monomial_wilf(&i)?;
            let ci = i.ci_analysis()?;
            print_json(
                out,
                &json!({
                    "vars": i.vars(),
                    "generators": i.generators(),
                    "colength": i.colength()?,
                    "cotangent_length": report.lhs,
                    "complete_intersection": ci.is_complete_intersection,
                    "report": report,
                }),
            )?;
            if report.holds {
                Ok(Status::Holds)
            } else {
                eprintln!("violation: {report}");
                Ok(Status::Violated)
            }
        }
        IdealCommand::Reduction { file, cap } => {
            let i = read_ideal(&file)?;
            let ci = i.ci_analysis()?;
            let j = &ci.pure_power_ideal;
            let reduction = i.reduction_number(j, cap)?;
            let identity = match verify_prop_ij(&i) {
                Ok(r) => serde_json::to_value(r)?,
                Err(GnsError::HypothesisFailed(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            let mut colon = Vec::new();
            for v in 1..=i.vars() {
                colon.push(serde_json::to_value(verify_colon_inequality(&i, v)?)?);
            }
            let holds = identity.get("holds").is_none_or(|h| h == true)
                && colon.iter().all(|c| c["holds"] == true);
            print_json(
                out,
                &json!({
                    "vars": i.vars(),
                    "generators": i.generators(),
                    "complete_intersection": ci.is_complete_intersection,
                    "pure_power_exponents": ci.exponents,
                    "reduction_number": reduction,
                    "reduction_cap": cap,
                    "identity": identity,
                    "colon": colon,
                }),
            )?;
            Ok(if holds {
                Status::Holds
            } else {
                Status::Violated
            })
        }
    }
}
