//! Acceptance run: evaluates the full suite on the standard instances and prints one
//! PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use whyd_cli::{emit_report, Format, ReportDocument};
use whyd_core::forge::standard_instances;
use whyd_core::suite::{run_standard, InstanceRun, Section, Selection};
use whyd_core::{Field, LinearMap};

const BUDGET: Duration = Duration::from_secs(60);

struct Criterion {
    title: &'static str,
    passed: bool,
    detail: String,
}

fn section<'a>(run: &'a InstanceRun, name: &str) -> Option<&'a Section> {
    run.section(name)
}

/// Sums `checked` and `failed` of one section over all runs that have it.
fn tally(runs: &[InstanceRun], name: &str) -> (usize, usize, usize) {
    let present: Vec<&Section> = runs.iter().filter_map(|r| section(r, name)).collect();
    (present.len(), present.iter().map(|s| s.checked).sum(), present.iter().map(|s| s.failed).sum())
}

fn corpus_size(run: &InstanceRun) -> usize {
    run.corpus.len()
}

/// Every run has the section, it passed, and its count matches `expected(corpus size)`.
fn exhaustive(runs: &[InstanceRun], name: &str, expected: impl Fn(usize) -> usize) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for r in runs {
        match section(r, name) {
            Some(s) => {
                let want = expected(corpus_size(r));
                ok &= s.passed() && s.checked == want;
                parts.push(format!("{} {}/{}", r.instance, s.checked - s.failed, want));
            }
            None => {
                ok = false;
                parts.push(format!("{} missing", r.instance));
            }
        }
    }
    (ok, parts.join(", "))
}

fn agreement_counts(runs: &[InstanceRun], name: &str) -> (usize, usize) {
    let mut failing_pairs = 0;
    let mut total = 0;
    for s in runs.iter().filter_map(|r| section(r, name)) {
        total += s.checked;
        failing_pairs += s.notes.iter().filter(|(k, _)| k.contains("fail")).map(|(_, v)| *v).sum::<usize>();
    }
    (total, failing_pairs)
}

fn half_sum_rmatrix() -> LinearMap {
    let f = Field::Rational;
    let half = |n| f.ratio(n, 2).unwrap();
    LinearMap::from_entries(f, &[], &[2, 2], [(0, 0, half(1)), (1, 0, half(1)), (2, 0, half(1)), (3, 0, half(-1))]).unwrap()
}

fn sign_form() -> LinearMap {
    let f = Field::Rational;
    LinearMap::from_entries(f, &[2, 2], &[], [(0, 0, f.int(1)), (0, 1, f.int(1)), (0, 2, f.int(1)), (0, 3, f.int(-1))]).unwrap()
}

fn structured(runs: &[InstanceRun]) -> Vec<u8> {
    let mut doc = ReportDocument::new("corpus");
    for r in runs {
        doc.add_run(r.clone(), None);
    }
    emit_report(&doc, Format::Structured)
}

fn evaluate(runs: &[InstanceRun], rerun: &[InstanceRun]) -> Vec<Criterion> {
    let mut out = Vec::new();
    let names: Vec<&str> = runs.iter().map(|r| r.instance.as_str()).collect();

    let wanted = ["kZ2", "kZ3/GF7", "kS3", "disc2", "pair2", "kZ2^id", "kZ4^inv"];
    let (ok, detail) = exhaustive(runs, "axioms", |_| 1);
    out.push(Criterion {
        title: "axiom certification on every corpus instance",
        passed: ok && wanted.iter().all(|w| names.contains(w)),
        detail,
    });

    let (pairs, failing) = agreement_counts(runs, "yd-equivalence");
    let (_, _, disagree) = tally(runs, "yd-equivalence");
    out.push(Criterion {
        title: "compatibility condition and split form agree on all pairs",
        passed: disagree == 0 && pairs >= 20 && failing > 0,
        detail: format!("{pairs} pairs ({failing} failing both forms), {disagree} disagreements"),
    });

    let (ok, detail) = exhaustive(runs, "coherence", |n| n.pow(4) + n * n + n);
    out.push(Criterion { title: "pentagons, triangles and unit constraints", passed: ok, detail });

    let (ok, detail) = exhaustive(runs, "braiding", |n| n * n + n.pow(3));
    let classical: Vec<&InstanceRun> = runs.iter().filter(|r| section(r, "classical-oracle").is_some()).collect();
    let oracle_ok =
        !classical.is_empty() && classical.iter().all(|r| section(r, "classical-oracle").is_some_and(|s| s.passed() && s.checked > 0));
    let oracle: Vec<String> =
        classical.iter().map(|r| format!("{} {}", r.instance, section(r, "classical-oracle").map_or(0, |s| s.checked))).collect();
    out.push(Criterion {
        title: "braidings are invertible morphisms with hexagons; classical oracle agrees",
        passed: ok && oracle_ok && ["kZ2", "kZ3/GF7", "kS3"].iter().all(|w| classical.iter().any(|r| r.instance == *w)),
        detail: format!("{detail}; oracle: {}", oracle.join(", ")),
    });

    let (ok, detail) = exhaustive(runs, "hom-yang-baxter", |n| n.pow(3));
    let twisted = ["kZ2^id", "kZ4^inv", "kS3^conj"].iter().all(|w| names.contains(w));
    out.push(Criterion { title: "Hom-Yang-Baxter equation on all triples", passed: ok && twisted, detail });

    let (ok, detail) = exhaustive(runs, "rigidity", |n| 2 * n);
    out.push(Criterion { title: "left and right duals with both snake identities", passed: ok, detail });

    let (ok, detail) = exhaustive(runs, "entwining", |_| 1);
    let (meta_pairs, _) = agreement_counts(runs, "entwining-metamorphic");
    let (_, _, meta_failed) = tally(runs, "entwining-metamorphic");
    out.push(Criterion {
        title: "canonical entwining certifies; entwined modules are the Yetter-Drinfeld modules",
        passed: ok && meta_failed == 0 && meta_pairs == pairs,
        detail: format!("{detail}; {meta_pairs} pairs, {meta_failed} disagreements"),
    });

    let instances = standard_instances().expect("instances build");
    let kz2 = instances.iter().find(|i| i.name == "kZ2").expect("kZ2 present");
    let r_ok = kz2.rmatrix.as_ref().is_some_and(|q| q.r == half_sum_rmatrix() && q.r_bar == q.r);
    let (present, checked, failed) = tally(runs, "quasitriangular");
    let kz2_qt = runs.iter().find(|r| r.instance == "kZ2").and_then(|r| section(r, "quasitriangular")).is_some_and(|s| s.passed());
    out.push(Criterion {
        title: "R-matrix axioms, induced coactions and R-braiding",
        passed: r_ok && kz2_qt && failed == 0,
        detail: format!("half-sum R on kZ2: {r_ok}; {present} instances, {checked} checks, {failed} failed"),
    });

    let s_ok = kz2.sigma.as_ref().is_some_and(|s| s.sigma == sign_form());
    let (present, checked, failed) = tally(runs, "coquasitriangular");
    let kz2_cqt = runs.iter().find(|r| r.instance == "kZ2").and_then(|r| section(r, "coquasitriangular")).is_some_and(|s| s.passed());
    out.push(Criterion {
        title: "form axioms, induced actions, form braiding and tilde tensor products",
        passed: s_ok && kz2_cqt && failed == 0,
        detail: format!("sign form on kZ2: {s_ok}; {present} instances, {checked} checks, {failed} failed"),
    });

    let (_, checked, missed) = tally(runs, "mutation-sensitivity");
    out.push(Criterion {
        title: "single-entry mutations are caught with witnesses",
        passed: checked >= 10 && missed == 0,
        detail: format!("{} of {checked} caught", checked - missed),
    });

    let a = structured(runs);
    let b = structured(rerun);
    out.push(Criterion {
        title: "structured reports are byte-identical across runs",
        passed: !a.is_empty() && a == b,
        detail: format!("{} bytes", a.len()),
    });
    out
}

fn main() -> ExitCode {
    let start = Instant::now();
    let selection = Selection::default();
    let first = run_standard(&selection).expect("suite runs");
    let first_time = start.elapsed();
    let second = run_standard(&selection).expect("suite runs");
    let criteria = evaluate(&first, &second);

    let mut all = true;
    for (i, c) in criteria.iter().enumerate() {
        all &= c.passed;
        println!("{} {:>2}. {} ({})", if c.passed { "PASS" } else { "FAIL" }, i + 1, c.title, c.detail);
    }
    let within = first_time < BUDGET;
    all &= within;
    println!(
        "{} full suite in {:.1} s (budget {} s); acceptance total {:.1} s",
        if within { "PASS" } else { "FAIL" },
        first_time.as_secs_f64(),
        BUDGET.as_secs(),
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
