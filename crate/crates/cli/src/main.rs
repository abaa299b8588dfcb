use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use resdet::ekm::{ekm_by_criterion, ekm_by_scan, EkmReport, DEFAULT_SCAN_BOUND};
use resdet::field::{chi_k, legendre, legendre_residue, CharacterValue, PrimeModulus};
use resdet::residue_matrix::{build_matrix, det_exact, det_mod_p, kth_residues, pfaffian_mod_p};
use resdet::selftest::{self, SuiteReport};
use resdet::verify::{sweep, Summary, SweepOptions, TheoremId, VerificationRecord};

mod output;

use output::Sink;

#[derive(Parser)]
#[command(name = "resdet", version, about = "Residue determinants S_{n,k}(d,p) and their closed forms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of [(α_i + d·α_j)^n] over the k-th power residues mod p.
    Det(DetArgs),
    /// Sweep one statement over a prime range.
    Verify(VerifyArgs),
    /// The exceptional set E_k(m).
    Ekm(EkmArgs),
    /// Legendre symbol and order-k character of d.
    Char(CharArgs),
    /// Run the property suites.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct DetArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// Also compute the integer determinant (dimension at most 12).
    #[arg(long)]
    exact: bool,
    /// Also compute the Pfaffian (skew-symmetric, even dimension).
    #[arg(long)]
    pfaffian: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// T1..T5, C63, C64, L23..L26, E1..E3 or QR.
    id: TheoremId,
    #[arg(long)]
    pmax: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    klist: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    mlist: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    dlist: Option<Vec<i64>>,
}

#[derive(Args)]
struct EkmArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    m: u64,
    /// Bound for the direct scan and for the restricted member list.
    #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
    bound: u64,
    #[arg(long, conflicts_with = "scan_only")]
    criterion_only: bool,
    #[arg(long)]
    scan_only: bool,
}

#[derive(Args)]
struct CharArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// Order of the character; omitted gives only the Legendre symbol.
    #[arg(long)]
    k: Option<u64>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run a single suite.
    #[arg(long)]
    suite: Option<String>,
}

#[derive(Serialize)]
struct DetRecord {
    p: u64,
    k: u64,
    n: u64,
    d: i64,
    det_mod_p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    det_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pfaffian: Option<u64>,
    legendre_of_det: i8,
}

#[derive(Serialize)]
struct EkmOutput {
    k: u64,
    m: u64,
    bound: u64,
    members: Vec<u64>,
    members_below_bound: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scan: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    routes_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "report")]
    criterion_report: Option<EkmReport>,
}

#[derive(Serialize)]
struct CharRecord {
    p: u64,
    d: i64,
    legendre: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_k: Option<CharacterValue>,
}

#[derive(Serialize)]
struct VerifySummary {
    theorem: TheoremId,
    #[serde(flatten)]
    counts: Summary,
}

#[derive(Serialize)]
struct SelftestSummary {
    suites: usize,
    failed: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let sink = Sink::new(cli.format);
    let result = match cli.command {
        Command::Det(a) => det(&sink, a),
        Command::Verify(a) => verify(&sink, a),
        Command::Ekm(a) => ekm(&sink, a),
        Command::Char(a) => character(&sink, a),
        Command::Selftest(a) => run_selftest(&sink, a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn det(sink: &Sink, a: DetArgs) -> anyhow::Result<bool> {
    let pm = PrimeModulus::new(a.p)?;
    let res = kth_residues(&pm, a.k)?;
    let matrix = build_matrix(&res, a.n, a.d)?;
    let det = det_mod_p(&matrix);
    let det_exact = a
        .exact
        .then(|| det_exact(&res, a.n, a.d))
        .transpose()?
        .map(|v| v.to_string());
    let pfaffian = a.pfaffian.then(|| pfaffian_mod_p(&matrix)).transpose()?;
    sink.one(&DetRecord {
        p: a.p,
        k: a.k,
        n: a.n,
        d: a.d,
        det_mod_p: det,
        det_exact,
        pfaffian,
        legendre_of_det: legendre_residue(det, &pm),
    })?;
    Ok(true)
}

fn verify(sink: &Sink, a: VerifyArgs) -> anyhow::Result<bool> {
    let opts = SweepOptions {
        pmax: a.pmax,
        klist: a.klist,
        mlist: a.mlist,
        dlist: a.dlist,
    };
    let records: Vec<VerificationRecord> = sweep(a.id, &opts)?;
    let counts = Summary::of(&records);
    sink.many(&records)?;
    sink.summary(&VerifySummary {
        theorem: a.id,
        counts,
    })?;
    Ok(counts.violated == 0)
}

fn ekm(sink: &Sink, a: EkmArgs) -> anyhow::Result<bool> {
    if a.k < 2 {
        bail!("k = {} must be at least 2", a.k);
    }
    if a.m % 2 == 0 {
        bail!("m = {} must be odd", a.m);
    }
    // The criterion needs m >= 3; E_k(1) is checked by scanning alone.
    let use_criterion = !a.scan_only && a.m >= 3;
    let use_scan = !a.criterion_only || a.m == 1;
    let report = use_criterion
        .then(|| ekm_by_criterion(a.k, a.m))
        .transpose()
        .context("criterion route")?;
    let scan = use_scan
        .then(|| ekm_by_scan(a.k, a.m, a.bound))
        .transpose()
        .context("scan route")?;
    let members = match (&report, &scan) {
        (Some(r), _) => r.members.clone(),
        (None, Some(s)) => s.clone(),
        (None, None) => Vec::new(),
    };
    let members_below_bound: Vec<u64> = members.iter().copied().filter(|&p| p <= a.bound).collect();
    let routes_agree = match (&report, &scan) {
        (Some(_), Some(s)) => Some(*s == members_below_bound),
        _ => None,
    };
    let ok = routes_agree != Some(false) && report.as_ref().map_or(true, EkmReport::is_clean);
    sink.one(&EkmOutput {
        k: a.k,
        m: a.m,
        bound: a.bound,
        members,
        members_below_bound,
        scan,
        routes_agree,
        criterion_report: report,
    })?;
    Ok(ok)
}

fn character(sink: &Sink, a: CharArgs) -> anyhow::Result<bool> {
    let pm = PrimeModulus::new(a.p)?;
    let chi = a.k.map(|k| chi_k(a.d, k, &pm)).transpose()?;
    sink.one(&CharRecord {
        p: a.p,
        d: a.d,
        legendre: legendre(a.d, &pm),
        k: a.k,
        chi_k: chi,
    })?;
    Ok(true)
}

fn run_selftest(sink: &Sink, a: SelftestArgs) -> anyhow::Result<bool> {
    let reports: Vec<SuiteReport> = match a.suite {
        Some(name) => match selftest::run(&name) {
            Some(r) => vec![r?],
            None => bail!(
                "unknown suite {name:?}; known: {}",
                selftest::suite_names().collect::<Vec<_>>().join(", ")
            ),
        },
        None => selftest::run_all()?,
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    sink.many(&reports)?;
    sink.summary(&SelftestSummary {
        suites: reports.len(),
        failed,
    })?;
    Ok(failed == 0)
}
