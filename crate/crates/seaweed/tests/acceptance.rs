//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails. Expected values are either printed values from
//! worked examples or computed here from scratch.

use std::process::{Command, ExitCode};
use std::time::Instant;

use seaweed::sweep::{run, SweepJob};
use seaweed_core::{
    build_meander, compositions_of, extended_spectrum, extended_spectrum_matrix,
    family_extended_spectrum, family_grid, family_spec, family_spectrum, index_sl, is_log_concave,
    is_unimodal, orient, principal_element, spectrum, spectrum_matrix, verify_block_lemmas,
    verify_reverse_lemma, verify_swap_lemma, FamilyId, IntegerMultiset, PartialIntegerMatrix,
    SeaweedSpec,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(text: &str) -> SeaweedSpec {
    text.parse().unwrap()
}

fn ms(pairs: &[(i64, u64)]) -> IntegerMultiset {
    IntegerMultiset::from_counts(pairs.iter().copied())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn frobenius_specs(n_max: usize) -> Vec<SeaweedSpec> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let comps: Vec<_> = compositions_of(n).unwrap().collect();
        for a in &comps {
            for b in &comps {
                let g = SeaweedSpec::new(a.clone(), b.clone()).unwrap();
                if index_sl(&g) == 0 {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn golden_examples() -> Outcome {
    let g = spec("2|4 / 1|2|3");
    let s = spectrum(&g).map_err(|e| e.to_string())?;
    ensure(s == ms(&[(-2, 1), (-1, 2), (0, 5), (1, 5), (2, 2), (3, 1)]), || format!("spectrum {s}"))?;
    let e = extended_spectrum(&g).map_err(|e| e.to_string())?;
    ensure(e == ms(&[(-3, 2), (-2, 4), (-1, 7), (0, 9), (1, 7), (2, 4), (3, 2)]), || format!("extended {e}"))?;

    let top: [[i64; 7]; 5] = [
        [0, 1, -2, 0, -1, 2, 1],
        [-1, 0, -3, -1, -2, 1, 0],
        [2, 3, 0, 2, 1, 4, 3],
        [0, 1, -2, 0, -1, 2, 1],
        [1, 2, -1, 1, 0, 3, 2],
    ];
    let tail: [[i64; 2]; 2] = [[0, -1], [1, 0]];
    let expected = PartialIntegerMatrix::from_fn(7, |i, j| match (i, j) {
        (1..=5, _) => Some(top[i - 1][j - 1]),
        (_, 6..=7) => Some(tail[i - 6][j - 6]),
        _ => None,
    });
    let m = spectrum_matrix(&spec("5|2 / 7")).unwrap();
    ensure(m == expected, || format!("5|2 / 7 matrix:\n{}", m.to_text()))?;

    // Printed with +3 at (4,3); skew-symmetry and the block identity with
    // the matrix above both force -3.
    let hat: [[i64; 5]; 5] = [
        [0, 1, -1, 2, 1],
        [-1, 0, -2, 1, 0],
        [1, 2, 0, 3, 2],
        [-2, -1, -3, 0, -1],
        [-1, 0, -2, 1, 0],
    ];
    let expected = PartialIntegerMatrix::from_fn(5, |i, j| Some(hat[i - 1][j - 1]));
    let h = extended_spectrum_matrix(&spec("3|2 / 5")).unwrap();
    ensure(h == expected, || format!("3|2 / 5 extended matrix:\n{}", h.to_text()))?;
    ensure(m.block_values(1..=5, 1..=5) == h.values(), || "block identity".into())?;
    Ok("2 spectra, 2 matrices".into())
}

fn family_ranges() -> Outcome {
    let plan: [(FamilyId, usize, usize); 11] = [
        (FamilyId::K1, 40, 1),
        (FamilyId::K2, 39, 1),
        (FamilyId::K1K, 25, 1),
        (FamilyId::K2K, 25, 1),
        (FamilyId::TwoK1_12K, 20, 1),
        (FamilyId::TwoK11, 20, 1),
        (FamilyId::K2R, 15, 6),
        (FamilyId::K2RPlus1, 15, 6),
        (FamilyId::TwosR1, 1, 15),
        (FamilyId::K4R, 15, 5),
        (FamilyId::K4RPlus2, 15, 5),
    ];
    let mut cases = 0;
    for (f, k_max, r_max) in plan {
        for (k, r) in family_grid(f, k_max, r_max) {
            let g = family_spec(f, k, r).map_err(|e| format!("{f} k={k} r={r}: {e}"))?;
            let formula = family_spectrum(f, k, r).map_err(|e| e.to_string())?;
            let engine = spectrum(&g).map_err(|e| format!("{g}: {e}"))?;
            ensure(formula == engine, || format!("{f} k={k} r={r} {g}: formula {formula} engine {engine}"))?;
            if f.has_extended_formula() {
                let formula = family_extended_spectrum(f, k).unwrap();
                let engine = extended_spectrum(&g).unwrap();
                ensure(formula == engine, || format!("{f} k={k} extended: formula {formula} engine {engine}"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} family members"))
}

fn index_oracles() -> Outcome {
    let mut cases = 0;
    for a in 1..=80 {
        for b in 1..=80 {
            let g = SeaweedSpec::from_parts(&[a, b], &[a + b]).unwrap();
            ensure(index_sl(&g) == gcd(a, b) - 1, || format!("{g}"))?;
            cases += 1;
        }
    }
    for a in 1..=30 {
        for b in 1..=30 {
            for c in 1..=30 {
                let expected = gcd(a + b, b + c) - 1;
                let three = SeaweedSpec::from_parts(&[a, b, c], &[a + b + c]).unwrap();
                ensure(index_sl(&three) == expected, || format!("{three}"))?;
                cases += 1;
                if a + b > c {
                    let square = SeaweedSpec::from_parts(&[a, b], &[c, a + b - c]).unwrap();
                    ensure(index_sl(&square) == expected, || format!("{square}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} seaweeds"))
}

fn proven_lemmas() -> Outcome {
    let specs = frobenius_specs(10);
    for g in &specs {
        ensure(verify_swap_lemma(g).unwrap(), || format!("swap lemma on {g}"))?;
        ensure(verify_reverse_lemma(g).unwrap(), || format!("reverse lemma on {g}"))?;
        let m = extended_spectrum_matrix(g).unwrap();
        let n = g.n();
        for i in 1..=n {
            for j in 1..=n {
                ensure(m.get(i, j).map(|v| -v) == m.get(j, i), || format!("skew-symmetry of {g} at ({i},{j})"))?;
            }
        }
        let p = principal_element(g).unwrap();
        ensure(p.trace() == 0.into(), || format!("trace of {g}"))?;
        for &(u, v) in orient(&build_meander(g)).directed_edges() {
            ensure(p.entry(u) - p.entry(v) == 1.into(), || format!("edge ({u},{v}) of {g}"))?;
        }
    }
    let mut triples = 0;
    for k1 in 1..=8 {
        for k2 in 1..=8 {
            if gcd(k1, k2) != 1 {
                continue;
            }
            for m in 1..=4 {
                let outcome = verify_block_lemmas(k1, k2, m).map_err(|e| e.to_string())?;
                ensure(outcome.all_hold(), || format!("block lemmas k1={k1} k2={k2} m={m}: {outcome:?}"))?;
                triples += 1;
            }
        }
    }
    Ok(format!("{} Frobenius seaweeds, {triples} block triples", specs.len()))
}

fn conjecture_sweep() -> Outcome {
    let out = run(&SweepJob::default()).map_err(|e| e.to_string())?;
    let s = &out.summary;
    ensure(s.proven_failures.is_empty(), || format!("proven claims failed: {:?}", s.proven_failures))?;
    for f in &s.counterexamples {
        eprintln!("  counterexample: {} fails {} (exit code 2 expected from the CLI)", f.spec, f.check);
    }
    let cli = Command::new(env!("CARGO_BIN_EXE_seaweed")).args(["sweep", "--n-max", "10"]).output().unwrap();
    let expected_code = if s.counterexamples.is_empty() { 0 } else { 2 };
    ensure(cli.status.code() == Some(expected_code), || format!("CLI exit {:?}", cli.status.code()))?;
    Ok(format!(
        "{} pairs, {} Frobenius, 0 proven failures, {} unimodality counterexamples",
        s.records,
        s.frobenius,
        s.counterexamples.len()
    ))
}

fn log_concavity_witnesses() -> Outcome {
    let cases = [
        ("3|2|2 / 4|2|1", ms(&[(-2, 1), (-1, 2), (0, 6), (1, 6), (2, 2), (3, 1)])),
        ("5|4|4|2 / 7|4|4", ms(&[(-3, 1), (-2, 3), (-1, 10), (0, 21), (1, 21), (2, 10), (3, 3), (4, 1)])),
        (
            "8|8|8|1 / 25",
            ms(&[
                (-7, 2), (-6, 5), (-5, 8), (-4, 13), (-3, 23), (-2, 37), (-1, 52), (0, 64),
                (1, 64), (2, 52), (3, 37), (4, 23), (5, 13), (6, 8), (7, 5), (8, 2),
            ]),
        ),
    ];
    for (text, expected) in &cases {
        let s = spectrum(&spec(text)).map_err(|e| e.to_string())?;
        ensure(&s == expected, || format!("{text}: {s}"))?;
        ensure(!is_log_concave(&s), || format!("{text} is log-concave"))?;
    }
    let s = spectrum(&spec("8|8|8|1 / 25")).unwrap();
    let (left, mid, right) = (s.count(5), s.count(6), s.count(7));
    ensure((mid, left, right) == (8, 13, 5) && mid * mid < left * right, || "8^2 < 5*13 not witnessed".into())?;
    Ok("3 witnesses".into())
}

fn family_shape() -> Outcome {
    let log_concave = [
        (FamilyId::K1, 40, 1),
        (FamilyId::K2, 39, 1),
        (FamilyId::K1K, 25, 1),
        (FamilyId::K2K, 25, 1),
        (FamilyId::TwoK1_12K, 20, 1),
        (FamilyId::TwoK11, 20, 1),
        (FamilyId::TwosR1, 1, 15),
    ];
    let unimodal_only = [
        (FamilyId::K2R, 15, 6),
        (FamilyId::K2RPlus1, 15, 6),
        (FamilyId::K4R, 15, 5),
        (FamilyId::K4RPlus2, 15, 5),
    ];
    let mut cases = 0;
    for (families, need_lc) in [(&log_concave[..], true), (&unimodal_only[..], false)] {
        for &(f, k_max, r_max) in families {
            for (k, r) in family_grid(f, k_max, r_max) {
                let g = family_spec(f, k, r).unwrap();
                let s = spectrum(&g).unwrap();
                ensure(is_unimodal(&s), || format!("{g} not unimodal: {s}"))?;
                ensure(!need_lc || is_log_concave(&s), || format!("{g} not log-concave: {s}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} family members"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden examples", golden_examples),
        ("family formulas vs engine", family_ranges),
        ("index gcd oracles", index_oracles),
        ("proven lemmas", proven_lemmas),
        ("conjecture sweep n <= 10", conjecture_sweep),
        ("non-log-concave witnesses", log_concavity_witnesses),
        ("family unimodality and log-concavity", family_shape),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
