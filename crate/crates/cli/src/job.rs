//! A fully specified command, independent of how it was spelled on the
//! command line, and its execution.

use std::fmt;
use std::io::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use section_ring::curve::Curve;
use section_ring::error::Error;
use section_ring::explorer::{conjecture_check, ConjectureReport};
use section_ring::field::{Field, FieldChoice, Fp, Q};
use section_ring::plot::{ineffective_diagram, one_point_diagram, LatticeDiagram};
use section_ring::presentation::{present_one_point, present_two_point_as, Presentation, Transcription};
use section_ring::rational::Rational;
use section_ring::registry;
use section_ring::report::{parse_reading, ExploreReport, PresentationReport, SweepReport, SweepRow, SCHEMA};

pub const DEFAULT_CURVE: &str = "0,0,1,-1,0";

#[derive(Debug)]
pub enum Fail {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl Fail {
    pub fn exit_code(&self) -> u8 {
        match self {
            Fail::Usage(_) => 2,
            Fail::Core(Error::Parse(_) | Error::Domain(_) | Error::Unsupported(_)) => 2,
            Fail::Core(Error::Torsion { .. }) => 3,
            Fail::Core(_) | Fail::Io(_) => 4,
        }
    }
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fail::Usage(s) => write!(f, "{s}"),
            Fail::Core(e) => write!(f, "{e}"),
            Fail::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JobCommand {
    #[default]
    Present,
    Verify,
    Explore,
    Plot,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Svg,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub q_max: i64,
    pub alpha_max: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobConfig {
    pub command: JobCommand,
    /// Signed multiplicities at P1 and, if present, P2.
    pub divisor: Vec<Rational>,
    pub curve: Option<String>,
    pub points: Option<[String; 2]>,
    pub field: Option<String>,
    pub max_degree: Option<i64>,
    pub oracle: Option<String>,
    pub sweep: Option<SweepSpec>,
    pub reading: Option<String>,
    pub printed: bool,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub plot: Option<PathBuf>,
}

impl JobConfig {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job serializes") + "\n"
    }
}

pub fn parse_divisor(parts: &[String]) -> Result<Vec<Rational>, Fail> {
    parts.iter().map(|s| s.parse::<Rational>().map_err(|e| Fail::Usage(format!("bad multiplicity {s:?}: {e}")))).collect()
}

fn field_choice(job: &JobConfig) -> Result<FieldChoice, Fail> {
    Ok(match &job.field {
        Some(s) => s.parse()?,
        None => FieldChoice::from_env()?,
    })
}

fn emit(job: &JobConfig, text: &str) -> Result<(), Fail> {
    match &job.output {
        Some(p) => std::fs::write(p, text).map_err(Fail::Io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(Fail::Io)
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

fn present(job: &JobConfig) -> Result<Presentation, Fail> {
    let t = if job.printed { Transcription::Printed } else { Transcription::Corrected };
    match job.divisor.as_slice() {
        [a] if a.is_positive() => Ok(present_one_point(*a)?),
        [a1, a2] if a1.is_positive() && a2.is_positive() => Ok(present_two_point_as(*a1, *a2, t)?),
        [_, _] => Err(Fail::Usage("closed forms cover effective divisors only; for α1·P1 − α2·P2 use `explore`".into())),
        [_] => Err(Fail::Usage("the multiplicity must be positive".into())),
        _ => Err(Fail::Usage("give one or two multiplicities".into())),
    }
}

pub fn run_job(job: &JobConfig) -> Result<u8, Fail> {
    match job.command {
        JobCommand::Present => {
            let r = PresentationReport::new(&present(job)?);
            emit(job, &if job.format == Format::Json { json(&r) } else { r.to_text() })?;
            Ok(0)
        }
        JobCommand::Verify => verify(job),
        JobCommand::Explore => {
            let (report, diagram) = explore(job)?;
            if let Some(p) = &job.plot {
                let body = if p.extension().is_some_and(|e| e == "svg") { diagram.to_svg() } else { diagram.to_ascii() };
                std::fs::write(p, body).map_err(Fail::Io)?;
            }
            emit(job, &if job.format == Format::Json { json(&report) } else { report.to_text() })?;
            Ok(0)
        }
        JobCommand::Plot => {
            let dg = match job.divisor.as_slice() {
                [a] if a.is_positive() => one_point_diagram(*a, job.max_degree.unwrap_or(6))?,
                [a1, a2] if a1.is_positive() && !a2.is_positive() => explore(job)?.1,
                _ => return Err(Fail::Usage("plot takes --alpha, or --alpha1 and --alpha2 for α1·P1 − α2·P2".into())),
            };
            emit(job, &if job.format == Format::Svg { dg.to_svg() } else { dg.to_ascii() })?;
            Ok(0)
        }
    }
}

fn verify(job: &JobConfig) -> Result<u8, Fail> {
    let field = field_choice(job)?;
    if let Some(s) = job.sweep {
        let name = job.oracle.as_deref().unwrap_or("monoid");
        let oracle = registry::oracle(name, field)?;
        let mut rows = Vec::new();
        for q in 1..=s.q_max.max(0) {
            for p in 1..=s.alpha_max.floor_mul(q) {
                let a = Rational::new(p, q);
                if a.denom() != q {
                    continue;
                }
                let v = oracle.verify(&present_one_point(a)?, job.max_degree)?;
                rows.push(SweepRow { alphas: vec![a], verification: v });
            }
        }
        rows.sort_by_key(|r| r.alphas[0]);
        let r = SweepReport { schema: SCHEMA, oracle: name.into(), rows };
        emit(job, &if job.format == Format::Json { json(&r) } else { r.to_text() })?;
        return Ok(if r.mismatches() == 0 { 0 } else { 1 });
    }
    let p = present(job)?;
    let name = job.oracle.as_deref().unwrap_or("curve");
    let v = registry::oracle(name, field)?.verify(&p, job.max_degree)?;
    let ok = v.is_match();
    let curve = (name == "curve").then(|| DEFAULT_CURVE.to_string());
    let r = PresentationReport::new(&p).with_verification(v, curve, Some(field.to_string()));
    emit(job, &if job.format == Format::Json { json(&r) } else { r.to_text() })?;
    Ok(if ok { 0 } else { 1 })
}

fn explore(job: &JobConfig) -> Result<(ExploreReport, LatticeDiagram), Fail> {
    let choice = field_choice(job)?;
    match choice {
        FieldChoice::Q => explore_over(Q, choice, job),
        FieldChoice::Fp(p) => explore_over(Fp::new(p)?, choice, job),
    }
}

fn explore_over<F: Field>(field: F, choice: FieldChoice, job: &JobConfig) -> Result<(ExploreReport, LatticeDiagram), Fail> {
    let [a1, a2] = match job.divisor.as_slice() {
        [a1, a2] if !a2.is_positive() => [*a1, -*a2],
        _ => return Err(Fail::Usage("explore needs α1·P1 − α2·P2 with α1 > α2 > 0".into())),
    };
    let c = Curve::parse(field, job.curve.as_deref().unwrap_or(DEFAULT_CURVE))?;
    let [s1, s2] = job.points.clone().unwrap_or_else(|| ["O".into(), "0,0".into()]);
    let (p1, p2) = (c.parse_point(&s1)?, c.parse_point(&s2)?);
    let reading = parse_reading(job.reading.as_deref().unwrap_or("literal"))?;
    let report: ConjectureReport = conjecture_check(&c, &p1, &p2, a1, a2, job.max_degree.unwrap_or(20), reading)?;
    let diagram = ineffective_diagram(&report);
    let er = ExploreReport::new(report, c.render(), [c.render_point(&p1), c.render_point(&p2)], choice.to_string());
    Ok((er, diagram))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn job_round_trip() {
        let job = JobConfig {
            command: JobCommand::Explore,
            divisor: vec!["2/3".parse().unwrap(), "-3/5".parse().unwrap()],
            curve: Some(DEFAULT_CURVE.into()),
            points: Some(["O".into(), "0,0".into()]),
            field: Some("fp:32003".into()),
            max_degree: Some(40),
            reading: Some("as-drawn".into()),
            plot: Some("fig.svg".into()),
            ..JobConfig::default()
        };
        let back: JobConfig = serde_json::from_str(&job.to_json()).unwrap();
        assert_eq!(back, job);
        assert_eq!(back.to_json(), job.to_json());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Fail::Core(Error::Torsion { order: 2 }).exit_code(), 3);
        assert_eq!(Fail::Core(Error::Parse("x".into())).exit_code(), 2);
        assert_eq!(Fail::Usage("x".into()).exit_code(), 2);
    }
}
