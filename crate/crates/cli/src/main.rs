use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pcmax_cli::algo::RunOptions;
use pcmax_cli::{compare, conformance, suite, verify, Algorithm};
use pcmax_core::generate::{benchmark_suite_specs, GenSpec, InstanceClass};
use pcmax_core::io::load;
use pcmax_core::model::rational_of;
use pcmax_core::{lower_bounds, Time};

#[derive(Parser)]
#[command(name = "pcmax", version, about = "Scheduling heuristics for P||Cmax")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Csv,
}

#[derive(clap::Args)]
struct RunFlags {
    /// Node limit of the exact solver
    #[arg(long, default_value_t = pcmax_core::exact::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    /// Capacity search iterations of MULTIFIT and COMBINE
    #[arg(long, default_value_t = pcmax_core::competitors::DEFAULT_ITERATIONS)]
    iterations: usize,
}

impl RunFlags {
    fn options(&self) -> RunOptions {
        RunOptions {
            iterations: self.iterations,
            node_limit: self.node_limit,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance suite and its manifest.csv into a directory.
    ///
    /// Without --class the 780-instance benchmark suite is written.
    Generate {
        #[arg(long, default_value = "suite")]
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        class: Option<InstanceClass>,
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Processing time range as a:b
        #[arg(long, default_value = "1:100", value_parser = parse_range)]
        range: (Time, Time),
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Run one algorithm on an instance file.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::LptRev)]
        algo: Algorithm,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Win/draw/loss table of one algorithm against another.
    Compare {
        /// Suite directory with a manifest; the benchmark suite for --seed
        /// is generated in memory when omitted
        #[arg(long)]
        suite: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Algorithm::Slack)]
        algo: Algorithm,
        #[arg(long, value_enum, default_value_t = Algorithm::Lpt)]
        baseline: Algorithm,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        out: Output,
        /// Leave elapsed_us empty so CSV output is reproducible
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Solve every ratio model exactly and check the closed-form certificates.
    VerifyLp {
        #[arg(long, default_value_t = 25)]
        m_max: usize,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
    },
    /// Check every worst-case bound on exhaustive and random small instances.
    Conformance {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse_range(s: &str) -> Result<(Time, Time), String> {
    let (a, b) = s.split_once(':').ok_or("expected a:b")?;
    let a = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    Ok((a, b))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let io = c.downcast_ref::<io::Error>().or_else(|| {
            match c.downcast_ref::<csv::Error>()?.kind() {
                csv::ErrorKind::Io(e) => Some(e),
                _ => None,
            }
        });
        io.is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn run(cli: Cli) -> Result<bool> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Generate {
            dir,
            seed,
            class,
            m,
            n,
            range: (a, b),
            count,
        } => {
            let specs = match class {
                None => benchmark_suite_specs(seed),
                Some(class) => vec![GenSpec {
                    class,
                    a,
                    b,
                    m,
                    n,
                    seed,
                    count,
                }],
            };
            let entries = suite::write_suite(&dir, &specs)?;
            writeln!(
                out,
                "wrote {} instances to {}",
                entries.len(),
                dir.display()
            )?;
        }
        Command::Solve {
            instance,
            algo,
            run,
        } => {
            let x = load(&instance).with_context(|| format!("loading {}", instance.display()))?;
            let r = pcmax_cli::run(algo, &x, run.options());
            let lb = lower_bounds(&x).lb_best;
            let ratio = rational_of(r.schedule.makespan()) / &lb;
            writeln!(
                out,
                "algo={algo} m={} n={} makespan={} lb_best={lb} ratio={ratio} ceiling={} elapsed_us={}",
                x.machines(),
                x.n(),
                r.schedule.makespan(),
                r.ceiling.map_or("-".to_string(), |c| c.to_string()),
                r.elapsed.as_micros()
            )?;
            if algo == Algorithm::Exact && !r.proven_optimal {
                writeln!(out, "node limit reached; makespan is an upper bound")?;
            }
        }
        Command::Compare {
            suite: dir,
            seed,
            algo,
            baseline,
            out: format,
            no_timing,
            run,
        } => {
            let instances = match dir {
                Some(dir) => suite::read_suite(&dir)?,
                None => suite::build_suite(&benchmark_suite_specs(seed))?,
            };
            if instances.is_empty() {
                bail!("empty suite");
            }
            let duels = compare::duel(&instances, algo, baseline, run.options());
            match format {
                Output::Text => {
                    compare::write_table(&mut out, &compare::table(&duels), algo, baseline)?
                }
                Output::Csv => compare::write_csv(&mut out, &duels, !no_timing)?,
            }
        }
        Command::VerifyLp { m_max, k_max } => {
            let checks = verify::verify_lp(m_max, k_max);
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let bad = checks.iter().filter(|c| !c.ok()).count();
            writeln!(out, "{} models, {bad} mismatches", checks.len())?;
            return Ok(bad == 0);
        }
        Command::Conformance { trials, seed } => {
            let report = conformance::conformance(trials, seed);
            for v in &report.violations {
                writeln!(out, "VIOLATION {v}")?;
            }
            writeln!(
                out,
                "{} exhaustive + {} random instances, {} violations",
                report.exhaustive,
                report.random,
                report.violations.len()
            )?;
            return Ok(report.passed());
        }
    }
    Ok(true)
}
