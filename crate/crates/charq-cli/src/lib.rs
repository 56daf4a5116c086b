//! The `charq` command line: exact complement counts, quasi-polynomial
//! fits, period and collapse reports, deletion classifiers, a
//! formula-versus-kernel verifier, and a box-and-circle demo, over either
//! the built-in type-B Shi family or an arrangement file.

pub mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use charq::arrangement::{Arrangement, Hyperplane};
use charq::bijection;
use charq::counting::{
    count_complement_naive_with_budget, count_complement_threaded,
    count_restricted_naive_with_budget, count_restricted_threaded, DEFAULT_NAIVE_BUDGET,
};
use charq::period::{
    collapse_report_with_period, lcm_period, PeriodError, DEFAULT_SUBSET_BIT_CAP,
};
use charq::polyalg::{build_quasipoly, SampleWindow};
use charq::shi::{
    base_closed_form, build_shi_b, is_deletion_polynomial, is_pair_deletion_polynomial,
    parse_hyperplane_expr, restriction_closed_form, ShiHyperplane,
};
use charq::unimodular::{random_unimodular, transform_left, XorShift64};

use report::{AuditRow, CountRow, Payload, Provenance, Report, VerifyCheck};

#[derive(Debug)]
pub struct CliError(String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

impl From<charq::shi::ShiError> for CliError {
    fn from(e: charq::shi::ShiError) -> Self {
        usage(e.to_string())
    }
}

impl From<charq::shi::ExprError> for CliError {
    fn from(e: charq::shi::ExprError) -> Self {
        usage(e.to_string())
    }
}

impl From<charq::arrangement::ArrangementError> for CliError {
    fn from(e: charq::arrangement::ArrangementError) -> Self {
        usage(e.to_string())
    }
}

impl From<charq::counting::CountError> for CliError {
    fn from(e: charq::counting::CountError) -> Self {
        usage(e.to_string())
    }
}

impl From<PeriodError> for CliError {
    fn from(e: PeriodError) -> Self {
        usage(e.to_string())
    }
}

impl From<charq::polyalg::PolyError> for CliError {
    fn from(e: charq::polyalg::PolyError) -> Self {
        usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "charq",
    version,
    about = "Exact characteristic quasi-polynomials of integral hyperplane arrangements over Z/qZ"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the counting kernels (never changes any number).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

/// Where the arrangement comes from: the built-in family or a file.
#[derive(Args, Debug)]
struct Source {
    /// Built-in family; currently `shi-b` (requires --m).
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// Ambient dimension for --family.
    #[arg(long, short)]
    m: Option<usize>,
    /// Arrangement text file: header `m n`, then rows `a_1 .. a_m b`.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Remove this hyperplane (repeatable); expressions use the
    /// `x<i>[+-x<j>]=0|1` grammar.
    #[arg(long = "delete", value_name = "EXPR")]
    deletes: Vec<String>,
}

impl Source {
    fn load(&self) -> Result<(Arrangement, String), CliError> {
        let (mut arr, mut name) = match (&self.family, &self.file) {
            (Some(fam), None) => {
                if fam != "shi-b" {
                    return Err(usage(format!("unknown family `{fam}` (expected `shi-b`)")));
                }
                let m = self.m.ok_or_else(|| usage("--family requires --m"))?;
                (build_shi_b(m)?, format!("shi-b m={m}"))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
                (Arrangement::parse_text(&text)?, path.display().to_string())
            }
            _ => return Err(usage("exactly one of --family or --file is required")),
        };
        for expr in &self.deletes {
            let idx = locate(&arr, expr)?;
            arr = arr.delete(idx).expect("located index is valid");
            write!(name, " \\ {{{expr}}}").unwrap();
        }
        Ok((arr, name))
    }
}

/// Resolve a hyperplane expression to its index in an arrangement.
fn locate(arr: &Arrangement, expr: &str) -> Result<usize, CliError> {
    let shi = parse_hyperplane_expr(expr, arr.dim())?;
    let (coeffs, offset) = shi.row(arr.dim())?;
    let h = Hyperplane::new(coeffs, offset).expect("family rows are nonzero");
    arr.position_of(&h)
        .ok_or_else(|| usage(format!("hyperplane {expr} is not in the arrangement")))
}

fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| usage(format!("`{text}` is not a range; expected `a..b`")))?;
    let lo: u64 = lo.trim().parse().map_err(|_| usage(format!("bad range start `{lo}`")))?;
    let hi: u64 = hi.trim().parse().map_err(|_| usage(format!("bad range end `{hi}`")))?;
    if lo < 1 || hi < lo {
        return Err(usage(format!("empty or invalid range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn to_u64(value: num_bigint::BigUint) -> Result<u64, CliError> {
    u64::try_from(&value)
        .map_err(|_| usage(format!("count {value} exceeds u64; use the library API")))
}

#[derive(Args, Debug)]
struct QArgs {
    /// Single modulus.
    #[arg(long, short)]
    q: Option<u64>,
    /// Inclusive modulus range `a..b`.
    #[arg(long, value_name = "A..B", conflicts_with = "q")]
    q_range: Option<String>,
}

impl QArgs {
    fn values(&self) -> Result<Vec<u64>, CliError> {
        match (self.q, &self.q_range) {
            (Some(q), None) => {
                if q < 1 {
                    return Err(usage("q must be at least 1"));
                }
                Ok(vec![q])
            }
            (None, Some(range)) => {
                let (lo, hi) = parse_range(range)?;
                Ok((lo..=hi).collect())
            }
            _ => Err(usage("exactly one of --q or --q-range is required")),
        }
    }

    fn describe(&self) -> String {
        match (&self.q, &self.q_range) {
            (Some(q), _) => q.to_string(),
            (_, Some(r)) => r.clone(),
            _ => String::new(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count complement points of the arrangement over Z_q^m.
    Count {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        q: QArgs,
        /// Use the full-enumeration oracle instead of the pruned kernel.
        #[arg(long)]
        naive: bool,
    },
    /// Count points on one hyperplane and off all others.
    RestrictCount {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        q: QArgs,
        /// The pivot hyperplane.
        #[arg(long, value_name = "EXPR")]
        hyperplane: String,
        #[arg(long)]
        naive: bool,
    },
    /// Fit the counting quasi-polynomial by exact interpolation.
    Quasipoly {
        #[command(flatten)]
        source: Source,
        /// Restrict onto this hyperplane instead of counting the full
        /// complement.
        #[arg(long, value_name = "EXPR")]
        restrict: Option<String>,
        /// Trial period (default: the computed lcm period).
        #[arg(long)]
        period: Option<u64>,
        /// Degree bound (default: dimension, or dimension - 1 when
        /// restricting).
        #[arg(long)]
        degree: Option<usize>,
        /// First sampled modulus (default 2m + 3).
        #[arg(long)]
        q_start: Option<u64>,
        /// Cap on columns for lcm-period subset enumeration.
        #[arg(long, default_value_t = DEFAULT_SUBSET_BIT_CAP)]
        max_subset_bits: u32,
    },
    /// Compute the lcm period by exact subset enumeration.
    Period {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BIT_CAP)]
        max_subset_bits: u32,
    },
    /// Full period-collapse report.
    Collapse {
        #[command(flatten)]
        source: Source,
        /// Skip subset enumeration and use this lcm period.
        #[arg(long)]
        assume_lcm_period: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BIT_CAP)]
        max_subset_bits: u32,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        q_start: Option<u64>,
    },
    /// Decide whether a deletion (one hyperplane, or a parallel pair) of
    /// the family has a polynomial counting function.
    Classify {
        /// Built-in family; only `shi-b` exists.
        #[arg(long, default_value = "shi-b")]
        family: String,
        /// Ambient dimension of the family.
        #[arg(long, short)]
        m: usize,
        /// One hyperplane for a single deletion, two for a parallel pair.
        #[arg(long, value_name = "EXPR", required = true)]
        hyperplane: Vec<String>,
    },
    /// Check every closed form against the counting kernel.
    Verify {
        #[arg(long, default_value = "shi-b")]
        family: String,
        #[arg(long, short)]
        m: usize,
        /// Moduli to check (default 2m+2..2m+12).
        #[arg(long, value_name = "A..B")]
        q_range: Option<String>,
        /// Seed for the randomized unimodular-invariance rounds.
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        /// Rounds of random unimodular transforms.
        #[arg(long, default_value_t = 3)]
        unimodular_rounds: usize,
        /// Corrupt this hyperplane's closed form (testing hook).
        #[arg(long, value_name = "EXPR", hide = true)]
        corrupt: Option<String>,
    },
    /// Measure the smallest modulus from which each restriction formula
    /// matches the kernel.
    Audit {
        #[arg(long, default_value = "shi-b")]
        family: String,
        #[arg(long, short)]
        m: usize,
        /// Largest modulus scanned.
        #[arg(long)]
        q_max: Option<u64>,
    },
    /// Render a box-and-circle placement and its decoded tuple.
    BijectionDemo {
        #[arg(long, short)]
        m: usize,
        #[arg(long, short)]
        q: u64,
        /// Encode this complement tuple (comma-separated).
        #[arg(long, conflicts_with = "index")]
        tuple: Option<String>,
        /// Render the n-th placement in enumeration order.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

fn kernel_name(naive: bool) -> &'static str {
    if naive {
        "naive-enumeration"
    } else {
        "pruned-backtracking"
    }
}

fn check_family(family: &str) -> Result<(), CliError> {
    if family == "shi-b" {
        Ok(())
    } else {
        Err(usage(format!("unknown family `{family}` (expected `shi-b`)")))
    }
}

fn run_count(
    source: &Source,
    q: &QArgs,
    naive: bool,
    threads: usize,
) -> Result<Report, CliError> {
    let (arr, name) = source.load()?;
    let mut rows = Vec::new();
    for q in q.values()? {
        let value = if naive {
            count_complement_naive_with_budget(&arr, q, DEFAULT_NAIVE_BUDGET)?.value
        } else {
            count_complement_threaded(&arr, q, threads).value
        };
        rows.push(CountRow { q, count: to_u64(value)? });
    }
    Ok(Report::new(
        "count",
        Payload::Counts { source: name, hyperplane: None, rows },
        Provenance {
            oracle: Some(kernel_name(naive).into()),
            q_range: Some(q.describe()),
            ..Default::default()
        },
    ))
}

fn run_restrict_count(
    source: &Source,
    q: &QArgs,
    expr: &str,
    naive: bool,
    threads: usize,
) -> Result<Report, CliError> {
    let (arr, name) = source.load()?;
    let pivot = locate(&arr, expr)?;
    // Surface the unit-coefficient requirement early.
    charq::arrangement::restriction_spec(&arr, pivot)?;
    let mut rows = Vec::new();
    for q in q.values()? {
        let value = if naive {
            count_restricted_naive_with_budget(&arr, pivot, q, DEFAULT_NAIVE_BUDGET)?.value
        } else {
            count_restricted_threaded(&arr, pivot, q, threads)?.value
        };
        rows.push(CountRow { q, count: to_u64(value)? });
    }
    Ok(Report::new(
        "restrict-count",
        Payload::Counts { source: name, hyperplane: Some(expr.to_string()), rows },
        Provenance {
            oracle: Some(kernel_name(naive).into()),
            q_range: Some(q.describe()),
            ..Default::default()
        },
    ))
}

fn resolve_period(
    arr: &Arrangement,
    requested: Option<u64>,
    cap: u32,
) -> Result<u64, CliError> {
    match requested {
        Some(p) if p >= 1 => Ok(p),
        Some(_) => Err(usage("period must be at least 1")),
        None => lcm_period(arr, cap).map_err(|e| match e {
            PeriodError::SubsetCapExceeded { columns, cap } => usage(format!(
                "{columns} columns exceed the subset cap {cap}; pass --period / \
                 --assume-lcm-period or raise --max-subset-bits"
            )),
            other => usage(other.to_string()),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_quasipoly(
    source: &Source,
    restrict: Option<&str>,
    period: Option<u64>,
    degree: Option<usize>,
    q_start: Option<u64>,
    cap: u32,
    threads: usize,
) -> Result<Report, CliError> {
    let (arr, name) = source.load()?;
    let m = arr.dim();
    let pivot = restrict.map(|expr| locate(&arr, expr)).transpose()?;
    let rho = resolve_period(&arr, period, cap)?;
    let degree = degree.unwrap_or(if pivot.is_some() { m.saturating_sub(1) } else { m });
    let q_start = q_start.unwrap_or(2 * m as u64 + 3);
    if q_start < 1 {
        return Err(usage("--q-start must be at least 1"));
    }
    let window = SampleWindow::new(q_start, degree);
    let qp = build_quasipoly(
        |q| match pivot {
            None => BigInt::from(count_complement_threaded(&arr, q, threads).value),
            Some(p) => BigInt::from(
                count_restricted_threaded(&arr, p, q, threads)
                    .expect("validated pivot")
                    .value,
            ),
        },
        rho as usize,
        window,
    )?;
    let min_period = qp.minimum_period() as u64;
    Ok(Report::new(
        "quasipoly",
        Payload::Quasipoly {
            source: name,
            hyperplane: restrict.map(str::to_string),
            min_period,
            monic: qp.is_monic(),
            gcd_property: qp.has_gcd_property(),
            polynomial: qp.is_polynomial(),
            quasipoly: qp,
        },
        Provenance {
            oracle: Some(kernel_name(false).into()),
            q_range: Some(format!(
                "sampled from {} (degree {degree}, period {rho})",
                window.q_start
            )),
            ..Default::default()
        },
    ))
}

fn run_period(source: &Source, cap: u32) -> Result<Report, CliError> {
    let (arr, name) = source.load()?;
    let rho = lcm_period(&arr, cap)?;
    Ok(Report::new(
        "period",
        Payload::Period { source: name, lcm_period: rho },
        Provenance::default(),
    ))
}

fn run_collapse(
    source: &Source,
    assume: Option<u64>,
    cap: u32,
    degree: Option<usize>,
    q_start: Option<u64>,
) -> Result<Report, CliError> {
    let (arr, name) = source.load()?;
    let m = arr.dim();
    let rho = resolve_period(&arr, assume, cap)?;
    let q_start = q_start.unwrap_or(2 * m as u64 + 3);
    if q_start < 1 {
        return Err(usage("--q-start must be at least 1"));
    }
    let window = SampleWindow::new(q_start, degree.unwrap_or(m));
    let report = collapse_report_with_period(&arr, rho, window)?;
    Ok(Report::new(
        "collapse",
        Payload::Collapse { source: name, report },
        Provenance {
            oracle: Some(kernel_name(false).into()),
            ..Default::default()
        },
    ))
}

fn run_classify(m: usize, exprs: &[String]) -> Result<Report, CliError> {
    let labeled: Vec<(String, ShiHyperplane)> = exprs
        .iter()
        .map(|e| Ok((e.clone(), parse_hyperplane_expr(e, m)?)))
        .collect::<Result<_, CliError>>()?;
    let polynomial = match labeled.as_slice() {
        [(_, h)] => is_deletion_polynomial(m, h)?,
        [(_, h1), (_, h2)] => is_pair_deletion_polynomial(m, h1, h2)?,
        _ => return Err(usage("--hyperplane must be given once or twice")),
    };
    Ok(Report::new(
        "classify",
        Payload::Classify {
            hyperplanes: labeled.into_iter().map(|(e, _)| e).collect(),
            polynomial,
        },
        Provenance {
            closed_forms: vec!["deletion-parity-equality".into()],
            ..Default::default()
        },
    ))
}

fn run_verify(
    m: usize,
    q_range: Option<&str>,
    seed: u64,
    unimodular_rounds: usize,
    corrupt: Option<&str>,
    threads: usize,
) -> Result<Report, CliError> {
    let (q_lo, q_hi) = match q_range {
        Some(text) => parse_range(text)?,
        None => (2 * m as u64 + 2, 2 * m as u64 + 12),
    };
    let family = build_shi_b(m)?;
    let corrupt_label = corrupt
        .map(|e| parse_hyperplane_expr(e, m).map(|h| h.label()))
        .transpose()?;
    let mut checks = Vec::new();

    let push_scan =
        |check: &str, subject: String, mismatch: Option<u64>, checks: &mut Vec<VerifyCheck>| {
            checks.push(VerifyCheck {
                check: check.into(),
                subject,
                q_lo,
                q_hi,
                ok: mismatch.is_none(),
                mismatch_q: mismatch,
            });
        };

    // Base closed form.
    let base = base_closed_form(m)?;
    let mismatch = (q_lo..=q_hi).find(|&q| {
        BigInt::from(count_complement_threaded(&family, q, threads).value) != base.eval(q)
    });
    push_scan("base", "(q-2m)^m".into(), mismatch, &mut checks);

    for h in ShiHyperplane::all(m) {
        let pivot = h.index_in(&family)?;
        let form = restriction_closed_form(m, &h)?;
        let corrupted = corrupt_label.as_deref() == Some(h.label().as_str());
        let mismatch = (q_lo..=q_hi).find(|&q| {
            let mut expected = form.eval(q);
            if corrupted {
                expected += 1;
            }
            BigInt::from(
                count_restricted_threaded(&family, pivot, q, threads)
                    .expect("valid pivot")
                    .value,
            ) != expected
        });
        push_scan("restriction", h.label(), mismatch, &mut checks);

        let deleted = family.delete(pivot).expect("valid pivot");
        let mismatch = (q_lo..=q_hi).find(|&q| {
            let full = BigInt::from(count_complement_threaded(&family, q, threads).value);
            let del = BigInt::from(count_complement_threaded(&deleted, q, threads).value);
            let restr = BigInt::from(
                count_restricted_threaded(&family, pivot, q, threads)
                    .expect("valid pivot")
                    .value,
            );
            full != del - restr
        });
        push_scan("deletion-restriction", h.label(), mismatch, &mut checks);
    }

    // Randomized unimodular invariance of the full count.
    let mut rng = XorShift64::new(seed);
    for round in 0..unimodular_rounds {
        let p = random_unimodular(m, 10, &mut rng);
        let moved = transform_left(&family, &p);
        let mismatch = (q_lo..=q_hi).find(|&q| {
            count_complement_threaded(&moved, q, threads).value
                != count_complement_threaded(&family, q, threads).value
        });
        push_scan("unimodular-invariance", format!("round {round}"), mismatch, &mut checks);
    }

    let failures = checks.iter().filter(|c| !c.ok).count();
    Ok(Report::new(
        "verify",
        Payload::Verify { m, passed: failures == 0, failures, checks },
        Provenance {
            closed_forms: vec![
                "base".into(),
                "restriction:xi0".into(),
                "restriction:xi1".into(),
                "restriction:diff0".into(),
                "restriction:diff1".into(),
                "restriction:sum0".into(),
                "restriction:sum1".into(),
            ],
            oracle: Some(kernel_name(false).into()),
            q_range: Some(format!("{q_lo}..{q_hi}")),
        },
    ))
}

fn run_audit(m: usize, q_max: Option<u64>) -> Result<Report, CliError> {
    let horizon = q_max.unwrap_or(2 * m as u64 + 12);
    if horizon < 2 {
        return Err(usage("--q-max must be at least 2"));
    }
    let rows = charq::shi::audit_restriction_forms(m, horizon)?
        .into_iter()
        .map(|(h, min_valid_q)| AuditRow { hyperplane: h.label(), min_valid_q })
        .collect();
    Ok(Report::new(
        "audit",
        Payload::Audit { m, horizon, rows },
        Provenance {
            closed_forms: vec!["restriction:all-six-families".into()],
            oracle: Some(kernel_name(false).into()),
            q_range: Some(format!("2..{horizon}")),
        },
    ))
}

fn run_bijection_demo(
    m: usize,
    q: u64,
    tuple: Option<&str>,
    index: usize,
) -> Result<Report, CliError> {
    let placement = match tuple {
        Some(text) => {
            let parsed: Result<Vec<u64>, _> =
                text.split(',').map(|tok| tok.trim().parse::<u64>()).collect();
            let x = parsed.map_err(|_| usage(format!("bad tuple `{text}`")))?;
            if x.len() != m {
                return Err(usage(format!("tuple has {} entries, expected {m}", x.len())));
            }
            bijection::encode(&x, q).map_err(|e| usage(e.to_string()))?
        }
        None => {
            if q < 2 * m as u64 + 2 {
                return Err(usage(format!("enumeration needs q >= {}", 2 * m + 2)));
            }
            bijection::enumerate_placements(m, q)
                .nth(index)
                .ok_or_else(|| usage(format!("placement index {index} out of range")))?
        }
    };
    let rendering = bijection::render(&placement).map_err(|e| usage(e.to_string()))?;
    let decoded = bijection::decode(&placement).map_err(|e| usage(e.to_string()))?;
    Ok(Report::new(
        "bijection-demo",
        Payload::BijectionDemo { m, q, tuple: decoded, rendering },
        Provenance::default(),
    ))
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Json => println!("{}", report.to_json()),
    }
}

/// Parse arguments, run, and print; returns the process exit code
/// (0 success, 1 verification failure, 2 usage error).
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.max(1);
    let result = match &cli.command {
        Command::Count { source, q, naive } => run_count(source, q, *naive, threads),
        Command::RestrictCount { source, q, hyperplane, naive } => {
            run_restrict_count(source, q, hyperplane, *naive, threads)
        }
        Command::Quasipoly { source, restrict, period, degree, q_start, max_subset_bits } => {
            run_quasipoly(
                source,
                restrict.as_deref(),
                *period,
                *degree,
                *q_start,
                *max_subset_bits,
                threads,
            )
        }
        Command::Period { source, max_subset_bits } => run_period(source, *max_subset_bits),
        Command::Collapse { source, assume_lcm_period, max_subset_bits, degree, q_start } => {
            run_collapse(source, *assume_lcm_period, *max_subset_bits, *degree, *q_start)
        }
        Command::Classify { family, m, hyperplane } => {
            check_family(family).and_then(|()| run_classify(*m, hyperplane))
        }
        Command::Verify { family, m, q_range, seed, unimodular_rounds, corrupt } => {
            check_family(family).and_then(|()| {
                run_verify(
                    *m,
                    q_range.as_deref(),
                    *seed,
                    *unimodular_rounds,
                    corrupt.as_deref(),
                    threads,
                )
            })
        }
        Command::Audit { family, m, q_max } => {
            check_family(family).and_then(|()| run_audit(*m, *q_max))
        }
        Command::BijectionDemo { m, q, tuple, index } => {
            run_bijection_demo(*m, *q, tuple.as_deref(), *index)
        }
    };
    match result {
        Ok(report) => {
            emit(&report, cli.format);
            if let Payload::Verify { passed: false, .. } = report.payload {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
