//! Record formats and the resumable scan behind the `riley` binary.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use riley_core::{enumerate, enumerate_dedup, Fraction, RileyError, VerificationReport, Verifier};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const INTERNAL: u8 = 3;
    pub const IO: u8 = 4;
}

/// One line of a scan file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub p: i64,
    pub q_input: i64,
    pub q_canonical: i64,
    pub n: usize,
    pub sigma: i64,
    pub determinant: i64,
    pub bound: usize,
    pub real_root_count: usize,
    pub satisfied: bool,
    /// Ascending decimal coefficients of `λ_K`.
    pub lambda_coeffs: Vec<String>,
    /// `[lo, hi]` per real root, as rational strings.
    pub root_intervals: Vec<[String; 2]>,
    pub squarefree: bool,
    pub congruence_ok: bool,
    pub timing_ms: Option<u64>,
}

impl ScanRecord {
    pub fn from_report(r: &VerificationReport, q_input: i64, timing: bool) -> Self {
        ScanRecord {
            p: r.fraction.p(),
            q_input,
            q_canonical: r.fraction.q(),
            n: r.n,
            sigma: r.sigma,
            determinant: r.determinant,
            bound: r.bound,
            real_root_count: r.real_root_count,
            satisfied: r.satisfied,
            lambda_coeffs: r.lambda.coeffs().iter().map(BigInt::to_string).collect(),
            root_intervals: r
                .roots
                .iter()
                .map(|iv| [iv.lo().to_string(), iv.hi().to_string()])
                .collect(),
            squarefree: r.squarefree,
            congruence_ok: r.congruence_ok,
            timing_ms: timing.then_some(r.timing.as_millis() as u64),
        }
    }

    pub fn key(&self) -> (i64, i64) {
        (self.p, self.q_input)
    }

    pub fn gap(&self) -> i64 {
        self.real_root_count as i64 - self.bound as i64
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub pmax: i64,
    pub jobs: usize,
    pub dedup: bool,
    pub out: PathBuf,
    pub resume: bool,
    pub timing: bool,
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: line {line} is not a valid record and is not the last line")]
    Corrupt { path: PathBuf, line: usize },
    #[error("bad configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Internal(#[from] RileyError),
}

impl ScanError {
    pub fn exit_code(&self) -> u8 {
        match self {
            ScanError::Io { .. } | ScanError::Corrupt { .. } => exit::IO,
            ScanError::Config(_) => exit::USAGE,
            ScanError::Internal(_) => exit::INTERNAL,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub records: usize,
    pub computed: usize,
    pub reused: usize,
    pub strict: usize,
    /// Largest `real_root_count - bound` and the first fraction attaining it.
    pub max_gap: Option<(i64, String)>,
    pub violations: Vec<String>,
    /// Records whose squarefree or congruence flag is false.
    pub anomalies: Vec<String>,
    pub dropped_tail: bool,
}

impl ScanSummary {
    fn add(&mut self, r: &ScanRecord) {
        self.records += 1;
        let name = format!("{}/{}", r.p, r.q_input);
        if !r.satisfied {
            self.violations.push(name.clone());
        }
        if !r.squarefree || !r.congruence_ok {
            self.anomalies.push(name.clone());
        }
        if r.gap() > 0 {
            self.strict += 1;
        }
        if self.max_gap.as_ref().is_none_or(|(g, _)| r.gap() > *g) {
            self.max_gap = Some((r.gap(), name));
        }
    }

    pub fn exit_code(&self) -> u8 {
        if !self.violations.is_empty() {
            exit::VIOLATION
        } else if !self.anomalies.is_empty() {
            exit::INTERNAL
        } else {
            exit::OK
        }
    }
}

impl std::fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "records {} (computed {}, reused {})", self.records, self.computed, self.reused)?;
        if self.dropped_tail {
            writeln!(f, "discarded a corrupt trailing line")?;
        }
        writeln!(f, "violations {}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  VIOLATION {v}")?;
        }
        if !self.anomalies.is_empty() {
            writeln!(f, "non-squarefree or congruence failures {}", self.anomalies.len())?;
            for a in &self.anomalies {
                writeln!(f, "  ANOMALY {a}")?;
            }
        }
        write!(f, "strict {}", self.strict)?;
        if let Some((g, k)) = &self.max_gap {
            write!(f, ", max gap {g} at {k}")?;
        }
        Ok(())
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> ScanError + '_ {
    move |source| ScanError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Valid lines of an existing scan file, in file order. A trailing line that
/// does not parse is dropped, any other bad line is an error.
fn read_existing(path: &Path) -> Result<(Vec<(ScanRecord, String)>, bool), ScanError> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok((Vec::new(), false)),
        Err(e) => return Err(io_err(path)(e)),
    };
    let mut lines = Vec::new();
    for line in BufReader::new(file).split(b'\n') {
        lines.push(line.map_err(io_err(path))?);
    }
    let mut out = Vec::with_capacity(lines.len());
    let mut dropped = false;
    let last = lines.len();
    for (i, raw) in lines.into_iter().enumerate() {
        let parsed = std::str::from_utf8(&raw)
            .ok()
            .and_then(|s| serde_json::from_str::<ScanRecord>(s).ok().map(|r| (r, s.to_string())));
        match parsed {
            Some(rec) => out.push(rec),
            None if i + 1 == last => dropped = true,
            None => {
                return Err(ScanError::Corrupt {
                    path: path.to_path_buf(),
                    line: i + 1,
                })
            }
        }
    }
    Ok((out, dropped))
}

fn targets(cfg: &ScanConfig) -> Result<Vec<Fraction>, ScanError> {
    let list = if cfg.dedup { enumerate_dedup(cfg.pmax) } else { enumerate(cfg.pmax) };
    list.map_err(|e| ScanError::Config(e.to_string()))
}

/// Verify every enumerated fraction and write one [`ScanRecord`] per line in
/// enumeration order. With `resume`, records already in the file are kept
/// byte for byte and only the missing fractions are computed.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanSummary, ScanError> {
    if cfg.jobs == 0 {
        return Err(ScanError::Config("jobs must be at least 1".into()));
    }
    let order = targets(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ScanError::Config(e.to_string()))?;

    let mut summary = ScanSummary::default();
    let (existing, dropped) = if cfg.resume { read_existing(&cfg.out)? } else { (Vec::new(), false) };
    summary.dropped_tail = dropped;

    // an interrupted run leaves a prefix of the target order, which is appended to
    let is_prefix = existing.len() <= order.len()
        && existing
            .iter()
            .zip(&order)
            .all(|((r, _), f)| r.key() == (f.p(), f.q()));
    let mut known: HashMap<(i64, i64), (ScanRecord, String)> = HashMap::new();
    let skip;
    let write_path;
    let mut writer;
    if is_prefix {
        skip = existing.len();
        let mut bytes = 0u64;
        for (rec, line) in existing {
            bytes += line.len() as u64 + 1;
            summary.add(&rec);
            summary.reused += 1;
        }
        let file = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(false)
            .open(&cfg.out)
            .map_err(io_err(&cfg.out))?;
        file.set_len(bytes).map_err(io_err(&cfg.out))?;
        writer = BufWriter::new(file);
        io::Seek::seek(&mut writer, io::SeekFrom::End(0)).map_err(io_err(&cfg.out))?;
        write_path = None;
    } else {
        skip = 0;
        known = existing.into_iter().map(|(r, l)| (r.key(), (r, l))).collect();
        let tmp = cfg.out.with_extension("jsonl.partial");
        writer = BufWriter::new(File::create(&tmp).map_err(io_err(&tmp))?);
        write_path = Some(tmp);
    }

    let mut rows: BTreeMap<i64, Vec<Fraction>> = BTreeMap::new();
    for f in order.into_iter().skip(skip) {
        rows.entry(f.p()).or_default().push(f);
    }
    let verifier = Verifier::new();
    for row in rows.values() {
        let missing: Vec<&Fraction> = row.iter().filter(|f| !known.contains_key(&(f.p(), f.q()))).collect();
        let fresh: Vec<VerificationReport> =
            pool.install(|| missing.par_iter().map(|f| verifier.verify(f)).collect::<Result<_, _>>())?;
        verifier.clear();
        let mut fresh = fresh.into_iter();
        for f in row {
            let line = match known.remove(&(f.p(), f.q())) {
                Some((rec, line)) => {
                    summary.add(&rec);
                    summary.reused += 1;
                    line
                }
                None => {
                    let report = fresh.next().expect("one report per missing fraction");
                    let rec = ScanRecord::from_report(&report, f.q(), cfg.timing);
                    summary.add(&rec);
                    summary.computed += 1;
                    serde_json::to_string(&rec).expect("records serialize")
                }
            };
            writer.write_all(line.as_bytes()).map_err(io_err(&cfg.out))?;
            writer.write_all(b"\n").map_err(io_err(&cfg.out))?;
        }
        writer.flush().map_err(io_err(&cfg.out))?;
    }
    drop(writer);
    if let Some(tmp) = write_path {
        fs::rename(&tmp, &cfg.out).map_err(io_err(&cfg.out))?;
    }
    Ok(summary)
}

/// Parses `a/b`, an integer, or a plain decimal such as `0.001` or `1e-6`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("not a rational number: {s:?}");
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Parses `a:b` into an inclusive range.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected a:b with 3 ≤ a ≤ b, got {s:?}");
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a < 3 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}
