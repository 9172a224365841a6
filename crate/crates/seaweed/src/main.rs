use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use seaweed::format::{self, Format};
use seaweed::svg::render_svg;
use seaweed::sweep::{self, Conjecture, SweepJob};
use seaweed::Error;
use seaweed_core::{
    compositions_of, extended_spectrum, extended_spectrum_matrix, family_extended_spectrum,
    family_spec, family_spectrum, is_frobenius, principal_element, spectrum,
    spectrum_matrix, components, build_meander, verify_block_lemmas, verify_reverse_lemma,
    verify_swap_lemma, FamilyId, SeaweedSpec,
};

const EXIT_ENGINE: u8 = 1;
const EXIT_NOT_FROBENIUS: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

/// Exact spectra, indices and meanders of type-A seaweed Lie algebras.
#[derive(Parser)]
#[command(name = "seaweed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Output format.
    #[arg(long, default_value = "plain")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Index of the seaweed (0 when Frobenius).
    Index {
        spec: String,
        #[command(flatten)]
        output: Output,
    },
    /// Spectrum in exponent notation.
    Spectrum {
        spec: String,
        #[command(flatten)]
        output: Output,
    },
    /// Extended spectrum in exponent notation.
    Extended {
        spec: String,
        #[command(flatten)]
        output: Output,
    },
    /// Diagonal of the principal element.
    Principal {
        spec: String,
        #[command(flatten)]
        output: Output,
    },
    /// Spectrum matrix, or the extended one with --extended.
    Matrix {
        spec: String,
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        output: Output,
    },
    /// SVG drawing of the oriented meander.
    Render {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a family's closed-form spectrum with the engine over a range.
    VerifyFamily {
        family: FamilyId,
        /// `A..B`, `A..B:odd` or a single value.
        #[arg(long, default_value = "1")]
        k: Range,
        #[arg(long, default_value = "1")]
        r: Range,
        #[command(flatten)]
        output: Output,
    },
    /// Check the reflection and block lemmas exhaustively.
    VerifyLemmas {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
    },
    /// Run a conjecture sweep; prints a JSON summary.
    Sweep {
        #[arg(long, default_value = "unimodal")]
        conjecture: Conjecture,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 6)]
        r_max: usize,
        /// Largest base seaweed for the tail sweep.
        #[arg(long, default_value_t = 6)]
        base_n_max: usize,
        /// NDJSON log to write (truncated first).
        #[arg(long, conflicts_with = "resume")]
        out: Option<PathBuf>,
        /// NDJSON log to resume from and append to.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Inclusive integer range, optionally restricted to odd values.
#[derive(Debug, Clone)]
struct Range {
    lo: usize,
    hi: usize,
    odd: bool,
}

impl Range {
    fn values(&self) -> impl Iterator<Item = usize> + '_ {
        (self.lo..=self.hi).filter(move |v| !self.odd || v % 2 == 1)
    }
}

impl std::str::FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (body, odd) = match s.strip_suffix(":odd") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range bound {t:?}"));
        let (lo, hi) = match body.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(body)?, num(body)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Range { lo, hi, odd })
    }
}

enum Failure {
    Engine(seaweed_core::Error),
    Io(String),
    Exit(u8),
}

impl From<seaweed_core::Error> for Failure {
    fn from(e: seaweed_core::Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Engine(e) => Failure::Engine(e),
            Error::InvalidJob(_) => {
                eprintln!("seaweed: {e}");
                Failure::Exit(EXIT_USAGE)
            }
            other => Failure::Io(other.to_string()),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn parse_spec(text: &str) -> Result<SeaweedSpec, Failure> {
    Ok(text.parse::<SeaweedSpec>()?)
}

fn cmd_index(spec: &str, output: &Output) -> Result<(), Failure> {
    let spec = parse_spec(spec)?;
    let s = components(&build_meander(&spec));
    let index = s.index_sl();
    let text = match output.format {
        Format::Plain => format!("{index}\n"),
        Format::Json => format!(
            "{}\n",
            json!({"spec": spec.to_string(), "index": index, "paths": s.paths, "cycles": s.cycles, "frobenius": s.is_single_path()})
        ),
        Format::Csv => format!("spec,index,paths,cycles,frobenius\n{spec},{index},{},{},{}\n", s.paths, s.cycles, s.is_single_path()),
    };
    emit(&text, output.out.as_ref())
}

fn verify_family(family: FamilyId, k: &Range, r: &Range, output: &Output) -> Result<(), Failure> {
    let ks: Vec<usize> = if family.uses_k() { k.values().collect() } else { vec![1] };
    let rs: Vec<usize> = if family.uses_r() { r.values().collect() } else { vec![1] };
    let mut rows = Vec::new();
    for &k in &ks {
        for &r in &rs {
            let spec = family_spec(family, k, r)?;
            let formula = family_spectrum(family, k, r)?;
            let engine = spectrum(&spec)?;
            let extended = if family.has_extended_formula() {
                Some(family_extended_spectrum(family, k)? == extended_spectrum(&spec)?)
            } else {
                None
            };
            let pass = formula == engine && extended != Some(false);
            rows.push((k, r, spec, formula, engine, extended, pass));
        }
    }
    let passed = rows.iter().filter(|row| row.6).count();
    let total = rows.len();
    let text = match output.format {
        Format::Plain => {
            let mut t = String::new();
            for (k, r, spec, formula, engine, extended, pass) in &rows {
                let verdict = if *pass { "pass" } else { "FAIL" };
                t.push_str(&format!("k={k} r={r} {spec}: {verdict}"));
                if !pass {
                    t.push_str(&format!(" formula {formula} engine {engine}"));
                    if *extended == Some(false) {
                        t.push_str(" (extended spectrum differs)");
                    }
                }
                t.push('\n');
            }
            t.push_str(&format!("{family}: {passed}/{total} pass\n"));
            t
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(k, r, spec, formula, engine, extended, pass)| {
                    json!({
                        "k": k, "r": r, "spec": spec.to_string(),
                        "formula": format::multiset_to_json(formula),
                        "engine": format::multiset_to_json(engine),
                        "extended_match": extended, "pass": pass,
                    })
                })
                .collect();
            format!("{}\n", json!({"family": family.name(), "passed": passed, "total": total, "rows": rows}))
        }
        Format::Csv => {
            let mut t = String::from("k,r,spec,formula,engine,extended_match,pass\n");
            for (k, r, spec, formula, engine, extended, pass) in &rows {
                let ext = extended.map(|e| e.to_string()).unwrap_or_default();
                t.push_str(&format!("{k},{r},{spec},\"{formula}\",\"{engine}\",{ext},{pass}\n"));
            }
            t
        }
    };
    emit(&text, output.out.as_ref())?;
    if passed == total {
        Ok(())
    } else {
        Err(Failure::Exit(EXIT_ENGINE))
    }
}

fn verify_lemmas(n_max: usize, k_max: usize, m_max: usize) -> Result<(), Failure> {
    let (mut checked, mut swap_fail, mut reverse_fail) = (0usize, 0usize, 0usize);
    for n in 1..=n_max {
        let comps: Vec<_> = compositions_of(n)?.collect();
        for a in &comps {
            for b in &comps {
                let spec = SeaweedSpec::new(a.clone(), b.clone())?;
                if !is_frobenius(&spec) {
                    continue;
                }
                checked += 1;
                if !verify_swap_lemma(&spec)? {
                    swap_fail += 1;
                    eprintln!("swap lemma fails on {spec}");
                }
                if !verify_reverse_lemma(&spec)? {
                    reverse_fail += 1;
                    eprintln!("reverse lemma fails on {spec}");
                }
            }
        }
    }
    let (mut grid, mut block_fail) = (0usize, 0usize);
    for k1 in 1..=k_max {
        for k2 in 1..=k_max {
            for m in 1..=m_max {
                match verify_block_lemmas(k1, k2, m) {
                    Ok(outcome) => {
                        grid += 1;
                        if !outcome.all_hold() {
                            block_fail += 1;
                            eprintln!("block lemmas fail at k1={k1} k2={k2} m={m}: {outcome:?}");
                        }
                    }
                    Err(seaweed_core::Error::NotCoprime { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    let text = format!(
        "swap lemma: {checked} specs, {swap_fail} failures\n\
         reverse lemma: {checked} specs, {reverse_fail} failures\n\
         block lemmas: {grid} parameter triples, {block_fail} failures\n"
    );
    emit(&text, None)?;
    if swap_fail + reverse_fail + block_fail == 0 {
        Ok(())
    } else {
        Err(Failure::Exit(EXIT_ENGINE))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Index { spec, output } => cmd_index(&spec, &output),
        Command::Spectrum { spec, output } => {
            let s = spectrum(&parse_spec(&spec)?)?;
            emit(&format::multiset(&s, output.format), output.out.as_ref())
        }
        Command::Extended { spec, output } => {
            let s = extended_spectrum(&parse_spec(&spec)?)?;
            emit(&format::multiset(&s, output.format), output.out.as_ref())
        }
        Command::Principal { spec, output } => {
            let p = principal_element(&parse_spec(&spec)?)?;
            emit(&format::principal(&p, output.format), output.out.as_ref())
        }
        Command::Matrix { spec, extended, output } => {
            let spec = parse_spec(&spec)?;
            let m = if extended { extended_spectrum_matrix(&spec)? } else { spectrum_matrix(&spec)? };
            emit(&format::matrix(&m, output.format), output.out.as_ref())
        }
        Command::Render { spec, out } => emit(&render_svg(&parse_spec(&spec)?), out.as_ref()),
        Command::VerifyFamily { family, k, r, output } => verify_family(family, &k, &r, &output),
        Command::VerifyLemmas { n_max, k_max, m_max } => verify_lemmas(n_max, k_max, m_max),
        Command::Sweep { conjecture, n_min, n_max, k_max, r_max, base_n_max, out, resume, workers } => {
            let job = SweepJob {
                n_min,
                n_max,
                conjecture,
                k_max,
                r_max,
                base_n_max,
                resume: resume.is_some(),
                output: resume.or(out),
                workers,
            };
            let outcome = sweep::run(&job)?;
            let summary = &outcome.summary;
            for f in &summary.proven_failures {
                eprintln!("engine invariant violated: {} fails {}", f.spec, f.check);
            }
            for f in &summary.counterexamples {
                eprintln!("counterexample ({}): {} fails {}; reproduce with: seaweed spectrum \"{}\"", f.key, f.spec, f.check, f.spec);
            }
            emit(&format!("{}\n", summary.to_json()), None)?;
            match summary.exit_code() {
                0 => Ok(()),
                code => Err(Failure::Exit(code as u8)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Exit(code)) => ExitCode::from(code),
        Err(Failure::Io(msg)) => {
            eprintln!("seaweed: {msg}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("seaweed: {e}");
            let code = match e {
                seaweed_core::Error::NotFrobenius { .. } => EXIT_NOT_FROBENIUS,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}
