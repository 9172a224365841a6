//! Exhaustive and parametrised sweeps with NDJSON persistence.
//!
//! Work items are evaluated in fixed-size batches with a rayon map; each
//! batch is collected in input order and then appended to the log by the
//! calling thread, so the record sequence does not depend on the worker
//! count. Resuming reads the log, skips every key already present and
//! recomputes the summary from the union of old and new records.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use seaweed_core::{
    build_meander, components, compositions_of, extend_tail, is_unimodal, verify_reverse_lemma,
    verify_swap_lemma, Composition, IntegerMultiset, SeaweedSpec, SpectrumReport,
};

use crate::error::{Error, Result};
use crate::format::{multiset_from_json, multiset_to_json};

const BATCH: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// Multiplicities of every Frobenius spectrum are unimodal.
    Unimodal,
    /// Appending `2k` blocks to a base ending in `k` adds no new eigenvalues.
    StabilityTail,
    /// `(2k)^r|1 / 2kr+1` has eigenvalues filling a fixed interval.
    StabilityParabolic,
    /// `(2k)^r|1 / 1|(2k)^r` has eigenvalues `[-k+1, k]` and shifted multiplicities.
    StabilitySymmetric,
    /// Only the proven checks.
    None,
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::Unimodal => "unimodal",
            Conjecture::StabilityTail => "tail",
            Conjecture::StabilityParabolic => "parabolic",
            Conjecture::StabilitySymmetric => "symmetric",
            Conjecture::None => "none",
        }
    }

    fn is_stability(self) -> bool {
        matches!(self, Conjecture::StabilityTail | Conjecture::StabilityParabolic | Conjecture::StabilitySymmetric)
    }
}

impl std::str::FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "unimodal" => Ok(Conjecture::Unimodal),
            "tail" => Ok(Conjecture::StabilityTail),
            "parabolic" => Ok(Conjecture::StabilityParabolic),
            "symmetric" => Ok(Conjecture::StabilitySymmetric),
            "none" => Ok(Conjecture::None),
            other => Err(format!("unknown conjecture {other:?} (expected unimodal, tail, parabolic, symmetric or none)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepJob {
    pub n_min: usize,
    pub n_max: usize,
    pub conjecture: Conjecture,
    pub k_max: usize,
    pub r_max: usize,
    /// Largest base size for the tail sweep.
    pub base_n_max: usize,
    /// NDJSON log; appended to, and read first when `resume` is set.
    pub output: Option<PathBuf>,
    pub resume: bool,
    pub workers: Option<usize>,
}

impl Default for SweepJob {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 10,
            conjecture: Conjecture::Unimodal,
            k_max: 8,
            r_max: 6,
            base_n_max: 6,
            output: None,
            resume: false,
            workers: None,
        }
    }
}

impl SweepJob {
    fn validate(&self) -> Result<()> {
        if self.resume && self.output.is_none() {
            return Err(Error::InvalidJob("resume needs an output path"));
        }
        if self.conjecture.is_stability() {
            if self.k_max == 0 || self.r_max == 0 {
                return Err(Error::InvalidJob("stability grids need k_max >= 1 and r_max >= 1"));
            }
            if self.conjecture == Conjecture::StabilityTail && self.base_n_max == 0 {
                return Err(Error::InvalidJob("base_n_max must be at least 1"));
            }
        } else if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidJob("need 1 <= n_min <= n_max"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// A theorem: failure means the engine is wrong.
    Proven,
    /// A conjecture: failure is a counterexample.
    Conjecture,
    /// Recorded for inspection only.
    Diagnostic,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Proven => "proven",
            CheckKind::Conjecture => "conjecture",
            CheckKind::Diagnostic => "diagnostic",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "proven" => Some(CheckKind::Proven),
            "conjecture" => Some(CheckKind::Conjecture),
            "diagnostic" => Some(CheckKind::Diagnostic),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub passed: bool,
}

impl Check {
    fn new(name: &str, kind: CheckKind, passed: bool) -> Self {
        Self { name: name.into(), kind, passed }
    }
}

/// One evaluated seaweed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    /// Resume key: the spec text, prefixed by the grid point for stability sweeps.
    pub key: String,
    pub spec: String,
    pub n: usize,
    pub index: usize,
    pub frobenius: bool,
    pub report: Option<ReportFields>,
    pub checks: Vec<Check>,
    /// Grid point for stability sweeps.
    pub params: Option<Value>,
    pub elapsed_us: u64,
}

/// The serialisable part of a [`SpectrumReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportFields {
    pub spectrum: IntegerMultiset,
    pub unbroken: bool,
    pub centered_half: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    pub symmetric_about_half: bool,
}

impl From<&SpectrumReport> for ReportFields {
    fn from(r: &SpectrumReport) -> Self {
        Self {
            spectrum: r.spectrum.clone(),
            unbroken: r.unbroken,
            centered_half: r.centered_half,
            unimodal: r.unimodal,
            log_concave: r.log_concave,
            symmetric_about_half: r.symmetric_about_half,
        }
    }
}

impl SweepRecord {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "key": self.key,
            "spec": self.spec,
            "n": self.n,
            "index": self.index,
            "frobenius": self.frobenius,
        });
        let obj = v.as_object_mut().expect("object literal");
        if let Some(p) = &self.params {
            obj.insert("params".into(), p.clone());
        }
        if let Some(r) = &self.report {
            obj.insert("spectrum".into(), multiset_to_json(&r.spectrum));
            obj.insert("unbroken".into(), r.unbroken.into());
            obj.insert("centered_half".into(), r.centered_half.into());
            obj.insert("unimodal".into(), r.unimodal.into());
            obj.insert("log_concave".into(), r.log_concave.into());
            obj.insert("symmetric_about_half".into(), r.symmetric_about_half.into());
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "kind": c.kind.name(), "pass": c.passed}))
            .collect();
        obj.insert("checks".into(), checks.into());
        obj.insert("elapsed_us".into(), self.elapsed_us.into());
        v
    }

    pub fn from_json(v: &Value) -> std::result::Result<Self, String> {
        let obj = v.as_object().ok_or("not a JSON object")?;
        let field = |name: &str| obj.get(name).ok_or_else(|| format!("missing field {name:?}"));
        let string = |name: &str| -> std::result::Result<String, String> {
            field(name)?.as_str().map(str::to_owned).ok_or_else(|| format!("{name:?} is not a string"))
        };
        let uint = |name: &str| -> std::result::Result<u64, String> {
            field(name)?.as_u64().ok_or_else(|| format!("{name:?} is not an unsigned integer"))
        };
        let boolean = |name: &str| -> std::result::Result<bool, String> {
            field(name)?.as_bool().ok_or_else(|| format!("{name:?} is not a boolean"))
        };

        let frobenius = boolean("frobenius")?;
        let report = match obj.get("spectrum") {
            Some(s) => Some(ReportFields {
                spectrum: multiset_from_json(s).ok_or("malformed spectrum")?,
                unbroken: boolean("unbroken")?,
                centered_half: boolean("centered_half")?,
                unimodal: boolean("unimodal")?,
                log_concave: boolean("log_concave")?,
                symmetric_about_half: boolean("symmetric_about_half")?,
            }),
            None => None,
        };
        let checks = field("checks")?
            .as_array()
            .ok_or("\"checks\" is not an array")?
            .iter()
            .map(|c| {
                let name = c.get("name").and_then(Value::as_str).ok_or("check without name")?;
                let kind = c.get("kind").and_then(Value::as_str).and_then(CheckKind::parse).ok_or("check without kind")?;
                let passed = c.get("pass").and_then(Value::as_bool).ok_or("check without pass")?;
                Ok(Check::new(name, kind, passed))
            })
            .collect::<std::result::Result<Vec<_>, &str>>()?;
        Ok(Self {
            key: string("key")?,
            spec: string("spec")?,
            n: uint("n")? as usize,
            index: uint("index")? as usize,
            frobenius,
            report,
            checks,
            params: obj.get("params").cloned(),
            elapsed_us: uint("elapsed_us")?,
        })
    }

    fn failures(&self, kind: CheckKind) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.kind == kind && !c.passed)
    }
}

/// A failed check, with the record it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub key: String,
    pub spec: String,
    pub check: String,
}

/// Totals over every record of a job, old and new.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub conjecture: Conjecture,
    pub records: usize,
    pub frobenius: usize,
    pub new_records: usize,
    pub proven_failures: Vec<Finding>,
    pub counterexamples: Vec<Finding>,
    /// Failed diagnostic checks by name, in name order.
    pub diagnostics: Vec<(String, usize)>,
}

impl SweepSummary {
    pub fn from_records(conjecture: Conjecture, records: &[SweepRecord], new_records: usize) -> Self {
        let finding = |r: &SweepRecord, c: &Check| Finding { key: r.key.clone(), spec: r.spec.clone(), check: c.name.clone() };
        let mut proven_failures = Vec::new();
        let mut counterexamples = Vec::new();
        let mut diagnostics = std::collections::BTreeMap::<String, usize>::new();
        for r in records {
            proven_failures.extend(r.failures(CheckKind::Proven).map(|c| finding(r, c)));
            counterexamples.extend(r.failures(CheckKind::Conjecture).map(|c| finding(r, c)));
            for c in r.failures(CheckKind::Diagnostic) {
                *diagnostics.entry(c.name.clone()).or_default() += 1;
            }
        }
        Self {
            conjecture,
            records: records.len(),
            frobenius: records.iter().filter(|r| r.frobenius).count(),
            new_records,
            proven_failures,
            counterexamples,
            diagnostics: diagnostics.into_iter().collect(),
        }
    }

    /// 1 if a proven statement failed, 2 if a conjecture failed, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.proven_failures.is_empty() {
            1
        } else if !self.counterexamples.is_empty() {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let list = |fs: &[Finding]| -> Value {
            fs.iter().map(|f| json!({"key": f.key, "spec": f.spec, "check": f.check})).collect()
        };
        let diagnostics: serde_json::Map<String, Value> =
            self.diagnostics.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
        json!({
            "conjecture": self.conjecture.name(),
            "records": self.records,
            "frobenius": self.frobenius,
            "new_records": self.new_records,
            "proven_failures": list(&self.proven_failures),
            "counterexamples": list(&self.counterexamples),
            "diagnostic_failures": diagnostics,
        })
    }
}

/// Every Frobenius `top / bottom` with both compositions of `n`, in
/// (top, bottom) cut-mask order.
pub fn enumerate_frobenius(n: usize) -> Vec<SeaweedSpec> {
    all_pairs(n).into_iter().filter(seaweed_core::is_frobenius).collect()
}

fn all_pairs(n: usize) -> Vec<SeaweedSpec> {
    let comps: Vec<Composition> = match compositions_of(n) {
        Ok(c) => c.collect(),
        Err(_) => return Vec::new(),
    };
    comps
        .iter()
        .flat_map(|a| comps.iter().map(move |b| SeaweedSpec::new(a.clone(), b.clone()).expect("same n")))
        .collect()
}

/// A unit of work: the spec plus whatever the checks need.
#[derive(Debug, Clone)]
enum Item {
    Exhaustive(SeaweedSpec),
    Tail { base: SeaweedSpec, k: usize, r: usize, plus: bool },
    Parabolic { k: usize, r: usize },
    Symmetric { k: usize, r: usize },
}

fn blocks(k: usize, r: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(2 * k, r)
}

fn parabolic_spec(k: usize, r: usize) -> SeaweedSpec {
    let top: Vec<usize> = blocks(k, r).chain([1]).collect();
    SeaweedSpec::from_parts(&top, &[2 * k * r + 1]).expect("balanced")
}

fn symmetric_spec(k: usize, r: usize) -> SeaweedSpec {
    let top: Vec<usize> = blocks(k, r).chain([1]).collect();
    let bottom: Vec<usize> = [1].into_iter().chain(blocks(k, r)).collect();
    SeaweedSpec::from_parts(&top, &bottom).expect("balanced")
}

impl Item {
    fn spec(&self) -> SeaweedSpec {
        match self {
            Item::Exhaustive(s) => s.clone(),
            Item::Tail { base, k, r, plus } => extend_tail(base, *k, 2 * k, *r, *plus).expect("base ends in k"),
            Item::Parabolic { k, r } => parabolic_spec(*k, *r),
            Item::Symmetric { k, r } => symmetric_spec(*k, *r),
        }
    }

    fn params(&self) -> Option<Value> {
        match self {
            Item::Exhaustive(_) => None,
            Item::Tail { base, k, r, plus } => Some(json!({
                "base": base.to_string(),
                "k": k,
                "r": r,
                "variant": if *plus { "plus" } else { "plain" },
            })),
            Item::Parabolic { k, r } | Item::Symmetric { k, r } => Some(json!({"k": k, "r": r})),
        }
    }

    fn key(&self, spec: &SeaweedSpec) -> String {
        match self {
            Item::Exhaustive(_) => spec.to_string(),
            Item::Tail { base, k, r, plus } => {
                format!("tail k={k} r={r} {} base={base}: {spec}", if *plus { "plus" } else { "plain" })
            }
            Item::Parabolic { k, r } => format!("parabolic k={k} r={r}: {spec}"),
            Item::Symmetric { k, r } => format!("symmetric k={k} r={r}: {spec}"),
        }
    }
}

fn items(job: &SweepJob) -> Vec<Item> {
    let grid = || (1..=job.k_max).flat_map(|k| (1..=job.r_max).map(move |r| (k, r)));
    match job.conjecture {
        Conjecture::Unimodal | Conjecture::None => {
            (job.n_min..=job.n_max).flat_map(all_pairs).map(Item::Exhaustive).collect()
        }
        Conjecture::StabilityParabolic => grid().map(|(k, r)| Item::Parabolic { k, r }).collect(),
        Conjecture::StabilitySymmetric => grid().map(|(k, r)| Item::Symmetric { k, r }).collect(),
        Conjecture::StabilityTail => {
            let bases: Vec<SeaweedSpec> = (1..=job.base_n_max).flat_map(enumerate_frobenius).collect();
            let mut out = Vec::new();
            for k in 1..=job.k_max {
                for base in bases.iter().filter(|b| b.top().parts().last() == Some(&k)) {
                    for r in 1..=job.r_max {
                        for plus in [false, true] {
                            out.push(Item::Tail { base: base.clone(), k, r, plus });
                        }
                    }
                }
            }
            out
        }
    }
}

fn distinct(s: &IntegerMultiset) -> Vec<i64> {
    s.values().collect()
}

fn interval(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).collect()
}

fn evaluate(item: &Item, conjecture: Conjecture) -> SweepRecord {
    let start = Instant::now();
    let spec = item.spec();
    let summary = components(&build_meander(&spec));
    let frobenius = summary.is_single_path();
    let mut checks = Vec::new();
    let mut report = None;

    if !frobenius && item_claims_frobenius(item) {
        checks.push(Check::new("frobenius", CheckKind::Conjecture, false));
    }
    if frobenius {
        let r = SpectrumReport::new(&spec).expect("frobenius");
        checks.push(Check::new("unbroken", CheckKind::Proven, r.unbroken));
        checks.push(Check::new("centered_half", CheckKind::Proven, r.centered_half));
        if let Item::Exhaustive(_) = item {
            let swap = verify_swap_lemma(&spec).expect("frobenius");
            let reverse = verify_reverse_lemma(&spec).expect("frobenius");
            checks.push(Check::new("swap_lemma", CheckKind::Proven, swap));
            checks.push(Check::new("reverse_lemma", CheckKind::Proven, reverse));
        }
        match item {
            Item::Exhaustive(_) => {
                let kind = if conjecture == Conjecture::Unimodal { CheckKind::Conjecture } else { CheckKind::Diagnostic };
                checks.push(Check::new("unimodal", kind, r.unimodal));
            }
            Item::Tail { base, k, plus, .. } => {
                let base_spectrum = seaweed_core::spectrum(base).expect("bases are frobenius");
                let first = extend_tail(base, *k, 2 * k, 1, *plus)
                    .and_then(|s| seaweed_core::spectrum(&s).ok());
                checks.push(Check::new("frobenius", CheckKind::Conjecture, true));
                checks.push(Check::new(
                    "stable_eigenvalues",
                    CheckKind::Conjecture,
                    first.is_some_and(|f| distinct(&f) == distinct(&r.spectrum)),
                ));
                checks.push(Check::new(
                    "values_within_base",
                    CheckKind::Diagnostic,
                    distinct(&r.spectrum).iter().all(|v| base_spectrum.count(*v) > 0),
                ));
                checks.push(Check::new(
                    "contains_base",
                    CheckKind::Conjecture,
                    base_spectrum.is_submultiset_of(&r.spectrum),
                ));
                if is_unimodal(&base_spectrum) {
                    checks.push(Check::new("unimodal", CheckKind::Conjecture, r.unimodal));
                }
            }
            Item::Parabolic { k, r: reps } => {
                let (k, reps) = (*k as i64, *reps);
                let expected = if reps % 2 == 1 { interval(-2 * k + 1, 2 * k) } else { interval(-k, k + 1) };
                checks.push(Check::new("frobenius", CheckKind::Conjecture, true));
                checks.push(Check::new("eigenvalue_interval", CheckKind::Conjecture, distinct(&r.spectrum) == expected));
                checks.push(Check::new("unimodal", CheckKind::Conjecture, r.unimodal));
            }
            Item::Symmetric { k, r: reps } => {
                let ki = *k as i64;
                checks.push(Check::new(
                    "eigenvalue_interval",
                    CheckKind::Conjecture,
                    distinct(&r.spectrum) == interval(-ki + 1, ki),
                ));
                checks.push(Check::new("log_concave", CheckKind::Conjecture, r.log_concave));
                let next = symmetric_spec(k + 1, *reps);
                let shift = match seaweed_core::spectrum(&next) {
                    Ok(next) => (-ki + 1..=ki).all(|i| {
                        let j = if i <= 0 { i - 1 } else { i + 1 };
                        r.spectrum.count(i) == next.count(j)
                    }),
                    Err(_) => false,
                };
                checks.push(Check::new("multiplicity_shift", CheckKind::Conjecture, shift));
            }
        }
        if conjecture == Conjecture::Unimodal || conjecture == Conjecture::None {
            checks.push(Check::new("log_concave", CheckKind::Diagnostic, r.log_concave));
        }
        checks.push(Check::new("symmetric_about_half", CheckKind::Diagnostic, r.symmetric_about_half));
        report = Some(ReportFields::from(&r));
    }

    SweepRecord {
        key: item.key(&spec),
        n: spec.n(),
        spec: spec.to_string(),
        index: summary.index_sl(),
        frobenius,
        report,
        checks,
        params: item.params(),
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

fn item_claims_frobenius(item: &Item) -> bool {
    matches!(item, Item::Tail { .. } | Item::Parabolic { .. } | Item::Symmetric { .. })
}

/// Reads an NDJSON log. A missing file is an empty log; a malformed line
/// is an error carrying its 1-based line number.
pub fn read_records(path: &Path) -> Result<Vec<SweepRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(Error::io(path)(e)),
    };
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(Error::io(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let corrupt = |reason: String| Error::CorruptRecord { path: path.to_owned(), line: i + 1, reason };
        let value: Value = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
        out.push(SweepRecord::from_json(&value).map_err(corrupt)?);
    }
    Ok(out)
}

/// Appends records to an NDJSON log, one line each.
pub fn persist_records(records: &[SweepRecord], path: &Path) -> Result<()> {
    let file = OpenOptions::new().create(true).append(true).open(path).map_err(Error::io(path))?;
    let mut w = BufWriter::new(file);
    for r in records {
        writeln!(w, "{}", r.to_json()).map_err(Error::io(path))?;
    }
    w.flush().map_err(Error::io(path))
}

/// Result of a job: the summary and every record (resumed ones first).
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
}

pub fn run(job: &SweepJob) -> Result<SweepOutcome> {
    run_limited(job, None)
}

/// Like [`run`], but stops after `limit` new records; used to simulate an
/// interrupted job.
pub fn run_limited(job: &SweepJob, limit: Option<usize>) -> Result<SweepOutcome> {
    job.validate()?;
    let mut records = match (&job.output, job.resume) {
        (Some(path), true) => read_records(path)?,
        _ => Vec::new(),
    };
    if let (Some(path), false) = (&job.output, job.resume) {
        File::create(path).map_err(Error::io(path))?;
    }
    let done: HashSet<String> = records.iter().map(|r| r.key.clone()).collect();
    let mut todo: Vec<Item> = items(job).into_iter().filter(|it| !done.contains(&it.key(&it.spec()))).collect();
    if let Some(limit) = limit {
        todo.truncate(limit);
    }

    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(w) = job.workers {
            b = b.num_threads(w);
        }
        b.build().map_err(|_| Error::InvalidJob("could not start worker pool"))?
    };
    let conjecture = job.conjecture;
    let mut new_records = 0;
    for chunk in todo.chunks(BATCH) {
        let batch: Vec<SweepRecord> = pool.install(|| chunk.par_iter().map(|it| evaluate(it, conjecture)).collect());
        if let Some(path) = &job.output {
            persist_records(&batch, path)?;
        }
        new_records += batch.len();
        records.extend(batch);
    }
    let summary = SweepSummary::from_records(conjecture, &records, new_records);
    Ok(SweepOutcome { summary, records })
}

/// Exhaustive sweep over every pair of compositions with `n_min <= n <= n_max`.
pub fn run_unimodality_sweep(job: &SweepJob) -> Result<SweepOutcome> {
    if !matches!(job.conjecture, Conjecture::Unimodal | Conjecture::None) {
        return Err(Error::InvalidJob("not an exhaustive sweep"));
    }
    run(job)
}

/// Parametrised sweep for one of the stability conjectures.
pub fn run_stability_sweep(job: &SweepJob) -> Result<SweepOutcome> {
    if !job.conjecture.is_stability() {
        return Err(Error::InvalidJob("not a stability sweep"));
    }
    run(job)
}
