//! `section-ring`: presentations, oracle checks, conjecture runs and lattice
//! diagrams for section rings of ℚ-divisors on elliptic curves.
//!
//! Exit codes: 0 success or match, 1 verified mismatch, 2 usage error,
//! 3 torsion point difference, 4 internal failure.

mod job;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use job::{run_job, Fail, Format, JobCommand, JobConfig, SweepSpec, DEFAULT_CURVE};

#[derive(Parser)]
#[command(name = "section-ring", version, about = "Section rings of Q-divisors on elliptic curves")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Coefficient field, `q` or `fp:<prime>`; overrides SECTION_RING_FIELD.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Also write the job as JSON, for later use with `run`.
    #[arg(long, global = true, value_name = "PATH")]
    save_job: Option<PathBuf>,
}

#[derive(Args, Clone, Default)]
struct DivisorArgs {
    /// Multiplicity of a one-point divisor α·P.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["alpha1", "alpha2"])]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "alpha2")]
    alpha1: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "alpha1")]
    alpha2: Option<String>,
}

#[derive(Args, Clone)]
struct CurveArgs {
    /// Weierstrass coefficients a1,a2,a3,a4,a6.
    #[arg(long, allow_hyphen_values = true, default_value = DEFAULT_CURVE)]
    curve: String,
    #[arg(long, default_value = "O")]
    p1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    p2: String,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form generators and relation leading terms of an effective divisor.
    Present {
        #[command(flatten)]
        div: DivisorArgs,
        /// Use the two-point relation statements exactly as printed.
        #[arg(long)]
        printed: bool,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check closed forms against the lattice monoid or the curve.
    Verify {
        #[command(flatten)]
        div: DivisorArgs,
        #[arg(long)]
        max_degree: Option<i64>,
        /// `monoid` or `curve`.
        #[arg(long)]
        oracle: Option<String>,
        /// Sweep every α = p/q with q ≤ this bound.
        #[arg(long, conflicts_with_all = ["alpha", "alpha1", "alpha2"])]
        sweep_q: Option<i64>,
        #[arg(long, default_value = "6", requires = "sweep_q")]
        alpha_max: String,
        #[arg(long)]
        printed: bool,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute S_D for D = α1·P1 − α2·P2 and compare it with the conjectured generators.
    Explore {
        #[arg(long, allow_hyphen_values = true)]
        alpha1: String,
        /// Given positive; the divisor has −α2 at P2.
        #[arg(long, allow_hyphen_values = true)]
        alpha2: String,
        #[arg(long, default_value_t = 20)]
        max_degree: i64,
        #[command(flatten)]
        curve: CurveArgs,
        /// literal, as-drawn, or <plus-one|strict>,<literal|adjacent>,<2|3>.
        #[arg(long, default_value = "literal")]
        reading: String,
        /// Write a diagram: SVG for a .svg path, text otherwise.
        #[arg(long)]
        plot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Lattice diagram of a one-point divisor (--alpha) or of α1·P1 − α2·P2.
    Plot {
        #[command(flatten)]
        div: DivisorArgs,
        #[arg(long, default_value_t = 6)]
        max_degree: i64,
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value = "as-drawn")]
        reading: String,
        /// `svg` or `ascii`; by default SVG when --out ends in .svg.
        #[arg(long)]
        format: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Execute a job saved with --save-job.
    Run { job: PathBuf },
}

fn divisor(div: &DivisorArgs, negate_second: bool) -> Result<Vec<String>, Fail> {
    match (&div.alpha, &div.alpha1, &div.alpha2) {
        (Some(a), None, None) => Ok(vec![a.clone()]),
        (None, Some(a1), Some(a2)) if negate_second => Ok(vec![a1.clone(), negate(a2)]),
        (None, Some(a1), Some(a2)) => Ok(vec![a1.clone(), a2.clone()]),
        _ => Err(Fail::Usage("give --alpha, or --alpha1 and --alpha2".into())),
    }
}

fn negate(s: &str) -> String {
    match s.trim().strip_prefix('-') {
        Some(t) => t.to_string(),
        None => format!("-{}", s.trim()),
    }
}

fn format_of(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn build(cmd: Command, field: Option<String>) -> Result<JobConfig, Fail> {
    let mut job = JobConfig { field, ..JobConfig::default() };
    match cmd {
        Command::Present { div, printed, json, out } => {
            job.command = JobCommand::Present;
            job.divisor = job::parse_divisor(&divisor(&div, false)?)?;
            job.printed = printed;
            job.format = format_of(json);
            job.output = out;
        }
        Command::Verify { div, max_degree, oracle, sweep_q, alpha_max, printed, json, out } => {
            job.command = JobCommand::Verify;
            match sweep_q {
                Some(q_max) => {
                    let alpha_max = alpha_max.parse().map_err(|e| Fail::Usage(format!("--alpha-max: {e}")))?;
                    job.sweep = Some(SweepSpec { q_max, alpha_max });
                }
                None => job.divisor = job::parse_divisor(&divisor(&div, false)?)?,
            }
            job.max_degree = max_degree;
            job.oracle = oracle;
            job.printed = printed;
            job.format = format_of(json);
            job.output = out;
        }
        Command::Explore { alpha1, alpha2, max_degree, curve, reading, plot, json, out } => {
            job.command = JobCommand::Explore;
            job.divisor = job::parse_divisor(&[alpha1, negate(&alpha2)])?;
            job.max_degree = Some(max_degree);
            job.curve = Some(curve.curve);
            job.points = Some([curve.p1, curve.p2]);
            job.reading = Some(reading);
            job.plot = plot;
            job.format = format_of(json);
            job.output = out;
        }
        Command::Plot { div, max_degree, curve, reading, format, out } => {
            job.command = JobCommand::Plot;
            job.divisor = job::parse_divisor(&divisor(&div, true)?)?;
            job.max_degree = Some(max_degree);
            job.curve = Some(curve.curve);
            job.points = Some([curve.p1, curve.p2]);
            job.reading = Some(reading);
            job.format = match format.as_deref() {
                Some("svg") => Format::Svg,
                Some("ascii") => Format::Ascii,
                None if out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "svg")) => Format::Svg,
                None => Format::Ascii,
                Some(f) => return Err(Fail::Usage(format!("unknown plot format {f:?}"))),
            };
            job.output = out;
        }
        Command::Run { job: path } => {
            let text = std::fs::read_to_string(&path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
            let mut j: JobConfig = serde_json::from_str(&text).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
            if job.field.is_some() {
                j.field = job.field;
            }
            return Ok(j);
        }
    }
    Ok(job)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = build(cli.cmd, cli.field).and_then(|job| {
        if let Some(path) = &cli.save_job {
            std::fs::write(path, job.to_json()).map_err(Fail::Io)?;
        }
        run_job(&job)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("section-ring: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
