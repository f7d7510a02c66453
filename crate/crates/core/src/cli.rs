//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code; the binary is a thin
//! wrapper around it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{RunConfig, DEFAULT_ENUMERATION_CAP, DEFAULT_SAMPLE_COUNT};
use crate::construct::{direct_sum_construct, f5_matrix, DirectSumPlan};
use crate::convert::{mle_to_perfect, perfect_to_mle, perfect_to_mle_streaming};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::formats;
use crate::metrics::{curve_csv, redundancy_curve, redundancy_report};
use crate::perfect::{
    golay_binary, golay_ternary, hamming_code, repetition_code, vasilev_code, verify_perfect,
    PerfectnessCertificate,
};
use crate::stegocode::{
    build_coding_table, embed, extract, is_stego_matrix, is_stego_partition, StegoMatrix,
    VerificationReport, Witness,
};

#[derive(Debug, Parser)]
#[command(name = "stegocode", about = "Steganographic codes over finite fields")]
pub struct Cli {
    /// Largest enumeration size attempted exhaustively.
    #[arg(long, global = true, env = "STEGOCODE_ENUM_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u128,
    /// Number of samples for probabilistic checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLE_COUNT)]
    pub samples: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a stego-coding matrix and verify it.
    Construct(ConstructArgs),
    /// Emit a perfect code as a code file (or check-matrix file).
    Code(CodeArgs),
    /// Embed a message into a cover word.
    Embed(EmbedArgs),
    /// Read the message carried by a stego word.
    Extract(ExtractArgs),
    /// Verify a matrix, partition or perfect code.
    Verify(VerifyArgs),
    /// Convert between perfect codes and MLE stego-codes.
    Convert(ConvertArgs),
    /// Redundancy report for a matrix, or the rate/distortion curve as CSV.
    Metrics(MetricsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFamily {
    F5,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: Option<MatrixFamily>,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Block sizes of the direct sum, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Also write the coding table here.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeFamily {
    Hamming,
    GolayBinary,
    GolayTernary,
    Repetition,
    Vasilev,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub family: CodeFamily,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    /// Redundancy `r` for Hamming codes, `m` for Vasil'ev codes.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Radius for repetition codes.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Write a check-matrix file instead of listing codewords.
    #[arg(long)]
    pub check_matrix: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub cover: String,
    #[arg(long)]
    pub message: String,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub stego: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Matrix,
    Partition,
    Perfect,
    /// Perfectness of a linear code given by a check-matrix file.
    Linear,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub kind: VerifyKind,
    #[arg(long)]
    pub input: PathBuf,
    /// Radius; defaults to the value stored in matrix and partition files.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    P2m,
    M2p,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long)]
    pub direction: Direction,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub t: Option<usize>,
    /// Treat the input as a check-matrix file and keep the partition implicit.
    #[arg(long)]
    pub streaming: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub leaders: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[arg(long, conflicts_with = "curve")]
    pub matrix: Option<PathBuf>,
    #[arg(long)]
    pub curve: bool,
    #[arg(long, default_value_t = 10)]
    pub kmax: u32,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(json) = error_attachment(&e) {
                let _ = writeln!(err, "{json}");
            }
            1
        }
    }
}

fn error_attachment(e: &Error) -> Option<String> {
    match e {
        Error::NotPerfect(cert) => serde_json::to_string_pretty(cert).ok(),
        Error::PartCertificateFailure { certificate, .. } => {
            serde_json::to_string_pretty(certificate).ok()
        }
        Error::NotStegoPartition(report) => serde_json::to_string_pretty(report).ok(),
        _ => None,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = RunConfig::new(cli.cap, cli.samples, cli.seed)?;
    match &cli.command {
        Command::Construct(a) => cmd_construct(a, &cfg, out, err),
        Command::Code(a) => cmd_code(a, &cfg, out),
        Command::Embed(a) => cmd_embed(a, &cfg, out),
        Command::Extract(a) => cmd_extract(a, out),
        Command::Verify(a) => cmd_verify(a, &cfg, out),
        Command::Convert(a) => cmd_convert(a, &cfg, out),
        Command::Metrics(a) => cmd_metrics(a, &cfg, out),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn exit_code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

pub fn cmd_construct(
    a: &ConstructArgs,
    cfg: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let h = match a.family {
        Some(MatrixFamily::F5) => f5_matrix(a.k)?,
        None => {
            let plan = match &a.parts {
                Some(parts) => DirectSumPlan::new(a.q, a.k, a.t, parts.clone())?,
                None => DirectSumPlan::balanced(a.q, a.k, a.t)?,
            };
            direct_sum_construct(&plan)?
        }
    };
    let report = is_stego_matrix(&h, cfg)?;
    emit(a.out.as_deref(), &formats::render_matrix(&h), out)?;
    if let Some(path) = &a.table {
        let table = build_coding_table(&h, cfg)?;
        emit(Some(path), &formats::render_table(&table), out)?;
    }
    let summary = format!(
        "verified={} q={} k={} n={} t={} work={}",
        if report.pass { "pass" } else { "fail" },
        h.field().q(),
        h.k(),
        h.n(),
        h.t(),
        report.work
    );
    // Keep stdout a clean matrix document when no output file is given.
    if a.out.is_some() {
        writeln!(out, "{summary}").map_err(io_err)?;
    } else {
        writeln!(err, "{summary}").map_err(io_err)?;
    }
    Ok(exit_code(report.pass))
}

pub fn cmd_code(a: &CodeArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let linear = match a.family {
        CodeFamily::Hamming => Some(hamming_code(a.r, &FieldSpec::new(a.q)?)?),
        CodeFamily::GolayBinary => Some(golay_binary()?),
        CodeFamily::GolayTernary => Some(golay_ternary()?),
        CodeFamily::Repetition | CodeFamily::Vasilev => None,
    };
    let text = match (linear, a.check_matrix) {
        (Some(code), true) => formats::render_check_matrix(&code),
        (Some(code), false) => formats::render_code(&code.codewords(cfg)?),
        (None, true) => {
            return Err(Error::InvalidRange(
                "only linear families have a check matrix".into(),
            ))
        }
        (None, false) => {
            let code = match a.family {
                CodeFamily::Repetition => repetition_code(a.t),
                _ => vasilev_code(a.r, cfg)?,
            };
            formats::render_code(&code)
        }
    };
    emit(a.out.as_deref(), &text, out)?;
    Ok(0)
}

fn load_verified_matrix(path: &Path, cfg: &RunConfig) -> Result<StegoMatrix> {
    formats::parse_matrix(&read(path)?)?.verify(cfg)
}

pub fn cmd_embed(a: &EmbedArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let h = load_verified_matrix(&a.matrix, cfg)?;
    let table = build_coding_table(&h, cfg)?;
    let f = h.field();
    let x = f.parse_word(&a.cover)?;
    let y = f.parse_word(&a.message)?;
    let stego = embed(&h, &table, &x, &y)?;
    writeln!(out, "{} changes={}", f.format_word(&stego), x.distance(&stego)?).map_err(io_err)?;
    Ok(0)
}

pub fn cmd_extract(a: &ExtractArgs, out: &mut dyn Write) -> Result<i32> {
    let h = formats::parse_matrix(&read(&a.matrix)?)?;
    let x = h.field().parse_word(&a.stego)?;
    let y = extract(&h, &x)?;
    writeln!(out, "{}", h.field().format_word(&y)).map_err(io_err)?;
    Ok(0)
}

fn render_report(f: &FieldSpec, r: &VerificationReport) -> String {
    let mut s = format!(
        "pass={} probabilistic={} work={}",
        r.pass, r.probabilistic, r.work
    );
    if let (Some(n), Some(seed)) = (r.samples, r.seed) {
        s.push_str(&format!(" samples={n} seed={seed}"));
    }
    match &r.witness {
        Some(Witness::UncoveredSyndrome { syndrome }) => {
            s.push_str(&format!(" witness_syndrome={}", f.format_word(syndrome)))
        }
        Some(Witness::FarFromPart { word, part }) => {
            s.push_str(&format!(" witness_word={} witness_part={part}", f.format_word(word)))
        }
        None => {}
    }
    s.push('\n');
    s
}

fn render_certificate(c: &PerfectnessCertificate) -> String {
    format!(
        "n={} M={} d={} t={} lhs={} q^n={} equal={} corrects_t={}\n",
        c.n,
        c.m,
        c.d.map_or("inf".to_string(), |d| d.to_string()),
        c.t,
        c.sphere_packing_lhs,
        c.space_size,
        c.equal,
        c.corrects_t
    )
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_verify(a: &VerifyArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let text = read(&a.input)?;
    let (body, pass) = match a.kind {
        VerifyKind::Matrix => {
            let mut h = formats::parse_matrix(&text)?;
            if let Some(t) = a.t {
                h = h.with_t(t)?;
            }
            let report = is_stego_matrix(&h, cfg)?;
            let body = if a.json {
                to_json(&report)
            } else {
                render_report(h.field(), &report)
            };
            (body, report.pass)
        }
        VerifyKind::Partition => {
            let mut s = formats::parse_partition(&text)?;
            if let Some(t) = a.t {
                s = s.with_t(t)?;
            }
            let report = is_stego_partition(&s, cfg);
            let body = if a.json {
                to_json(&report)
            } else {
                render_report(s.field(), &report)
            };
            (body, report.pass)
        }
        VerifyKind::Perfect | VerifyKind::Linear => {
            let t = a
                .t
                .ok_or_else(|| Error::InvalidRange("--t is required for perfect codes".into()))?;
            let cert = if a.kind == VerifyKind::Perfect {
                verify_perfect(&formats::parse_code(&text)?, t, cfg)?
            } else {
                formats::parse_check_matrix(&text)?.certificate(t, cfg)?
            };
            let body = if a.json {
                to_json(&cert)
            } else {
                render_certificate(&cert)
            };
            (body, cert.passes())
        }
    };
    out.write_all(body.as_bytes()).map_err(io_err)?;
    Ok(exit_code(pass))
}

pub fn cmd_convert(a: &ConvertArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let text = read(&a.input)?;
    match a.direction {
        Direction::P2m => {
            let t = a
                .t
                .ok_or_else(|| Error::InvalidRange("--t is required for p2m".into()))?;
            if a.streaming {
                let code = formats::parse_check_matrix(&text)?;
                let mle = perfect_to_mle_streaming(&code, t, cfg)?;
                if let Some(path) = &a.leaders {
                    emit(Some(path), &formats::render_leaders(code.field(), mle.leaders()), out)?;
                }
                let report = mle.verify_sampled(cfg)?;
                let body = if a.json {
                    to_json(&report)
                } else {
                    format!("parts={} mle={} {}", mle.m(), mle.is_mle(), render_report(code.field(), &report))
                };
                emit(a.out.as_deref(), &body, out)?;
                return Ok(exit_code(report.pass && mle.is_mle()));
            }
            let code = formats::parse_code(&text)?;
            let res = perfect_to_mle(&code, t, cfg)?;
            emit(a.out.as_deref(), &formats::render_partition(&res.partition), out)?;
            if let Some(path) = &a.leaders {
                emit(
                    Some(path),
                    &formats::render_leaders(code.field(), &res.coset_leaders),
                    out,
                )?;
            }
            Ok(0)
        }
        Direction::M2p => {
            let mut s = formats::parse_partition(&text)?;
            if let Some(t) = a.t {
                s = s.with_t(t)?;
            }
            let certs = mle_to_perfect(&s, cfg)?;
            let body = if a.json {
                to_json(&certs)
            } else {
                certs.iter().map(render_certificate).collect()
            };
            emit(a.out.as_deref(), &body, out)?;
            Ok(0)
        }
    }
}

pub fn cmd_metrics(a: &MetricsArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    if a.curve {
        let csv = curve_csv(&redundancy_curve(a.kmax)?);
        emit(a.out.as_deref(), &csv, out)?;
        return Ok(0);
    }
    let path = a
        .matrix
        .as_ref()
        .ok_or_else(|| Error::InvalidRange("either --matrix or --curve is required".into()))?;
    let h = load_verified_matrix(path, cfg)?;
    let table = build_coding_table(&h, cfg)?;
    let rep = redundancy_report(&h, &table)?;
    let body = if a.json {
        to_json(&rep)
    } else {
        format!(
            "n={} k={} t={} rate={:.9} density={}/{} capacity={:.9} redundancy={:.9} efficiency={:.9}\n",
            rep.n,
            rep.k,
            rep.t,
            rep.message_rate,
            rep.change_density_numer,
            rep.change_density_denom,
            rep.capacity,
            rep.redundancy,
            rep.embedding_efficiency
        )
    };
    emit(a.out.as_deref(), &body, out)?;
    Ok(0)
}
