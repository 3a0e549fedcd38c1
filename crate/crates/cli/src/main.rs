use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sumset_forge_cli::bench::{run_bench, Kernel};
use sumset_forge_cli::report::{parse_report, render_checks, render_counts, render_report};
use sumset_forge_cli::{load_instance, run_campaign, verify, CampaignParams, Mode, Space, Span, Status};
use sumset_forge_core::ThresholdConfig;

#[derive(Parser)]
#[command(name = "sumset-forge", version, about = "Sumset structure checks on Z x Z/dZ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on one instance file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run checks over a generated or enumerated family of instances.
    Campaign {
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "layered")]
        space: Space,
        /// Modulus range, `N` or `LO..HI`.
        #[arg(long, default_value = "2..36")]
        d: Span,
        /// Layer count range.
        #[arg(long, default_value = "6..9")]
        s: Span,
        /// Range of max a_i for exhaustive spaces.
        #[arg(long, default_value = "1..12")]
        max_a: Span,
        /// Generated instances in random mode.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest exhaustive space accepted.
        #[arg(long, default_value_t = 2_000_000)]
        cap: u64,
        /// Chance of moving one element out of its coset.
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.6)]
        min_density: f64,
        /// Skip the fixed instances that open random campaigns.
        #[arg(long)]
        no_anchors: bool,
        /// Write the JSONL report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append wall-clock timings (the report is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Time the sumset kernels.
    Bench {
        #[arg(long, value_enum, default_value = "all")]
        kernel: Kernel,
        #[arg(long, value_delimiter = ',', default_value = "1024,16384,65536")]
        d: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.05,0.5,0.9")]
        density: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Summarise a campaign report.
    Report {
        file: PathBuf,
        /// Findings to list.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a check was violated.
fn run(command: Command) -> Result<bool, Box<dyn std::error::Error>> {
    match command {
        Command::Verify { file, format } => {
            let l = load_instance(&file)?;
            let records = verify(&l, &ThresholdConfig::default());
            let mut out = io::stdout().lock();
            match format {
                Format::Table => out.write_all(render_checks(&records).as_bytes())?,
                Format::Jsonl => {
                    for r in &records {
                        writeln!(out, "{}", serde_json::to_string(r)?)?;
                    }
                }
            }
            Ok(records.iter().all(|r| r.status != Status::Violated))
        }
        Command::Campaign {
            mode,
            space,
            d,
            s,
            max_a,
            count,
            seed,
            cap,
            epsilon,
            min_density,
            no_anchors,
            out,
            timings,
        } => {
            let params = CampaignParams {
                mode,
                space,
                d,
                s,
                max_a,
                count,
                seed,
                cap,
                epsilon,
                min_density,
                anchors: !no_anchors,
            };
            let report = run_campaign(&params)?;
            match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(&path)?);
                    report.write_jsonl(&mut w, timings)?;
                    w.flush()?;
                    eprint!("{}", render_counts(report.instances, &report.counts));
                }
                None => report.write_jsonl(io::stdout().lock(), timings)?,
            }
            Ok(report.violations() == 0)
        }
        Command::Bench { kernel, d, density, reps, seed } => {
            let rows = run_bench(kernel, &d, &density, reps, seed)?;
            let mut out = io::stdout().lock();
            writeln!(out, "{:>8} {:>8} {:<9} {:>14} {:>8}", "d", "density", "kernel", "median_ns", "|A+A|")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>8} {:>8} {:<9} {:>14} {:>8}",
                    r.d, r.density, r.kernel, r.median_ns, r.sumset_size
                )?;
            }
            if kernel == Kernel::All {
                for pair in rows.chunks(2) {
                    let speedup = pair[1].median_ns as f64 / pair[0].median_ns.max(1) as f64;
                    writeln!(
                        out,
                        "d={} density={}: shift-or is {speedup:.1}x naive",
                        pair[0].d, pair[0].density
                    )?;
                }
            }
            Ok(true)
        }
        Command::Report { file, limit } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let report = parse_report(&text)?;
            print!("{}", render_report(&report, limit));
            Ok(report.counts.values().all(|c| c.violated == 0))
        }
    }
}
