use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use whyd_cli::spec::{self, to_text};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus(name: &str) -> PathBuf {
    corpus_dir().join(name)
}

fn whyd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whyd")).args(args).output().expect("binary runs")
}

fn whyd_path(args: &[&str], path: &Path, rest: &[&str]) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    all.push(p);
    all.extend_from_slice(rest);
    whyd(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn spec_files() -> Vec<PathBuf> {
    let mut files = Vec::new();
    for dir in [corpus_dir(), corpus_dir().join("generated")] {
        for entry in std::fs::read_dir(dir).unwrap() {
            let p = entry.unwrap().path();
            if p.extension().is_some_and(|e| e == "spec") {
                files.push(p);
            }
        }
    }
    files.sort();
    files
}

#[test]
fn hopf_check_on_kz2_passes() {
    let o = whyd_path(&["check", "hopf"], &corpus("kz2.spec"), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
}

#[test]
fn hom_yang_baxter_on_sign_passes() {
    let o = whyd_path(&["verify", "hybe"], &corpus("kz2.spec"), &["--modules", "sign,sign,sign"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn broken_fixture_fails_with_a_witness() {
    let o = whyd_path(&["check", "yd"], &corpus("kz2.spec"), &["--module", "broken_fixture"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL compatibility"), "{text}");
    assert!(text.contains("at [1, 0]: lhs = 1·[1, 1] rhs = 1·[1, 0]"), "{text}");
}

#[test]
fn witness_cap_limits_listed_tuples() {
    let o = whyd_path(&["check", "yd"], &corpus("kz2.spec"), &["--module", "broken_fixture", "--max-witnesses", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).matches("lhs =").count(), 1);
}

#[test]
fn zero_denominator_is_a_located_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.spec");
    std::fs::write(&p, "{\"version\": 1, \"field\": \"rational\", \"objects\": {\n  \"f\": {\"kind\": \"map\", \"domain\": [1], \"codomain\": [1], \"entries\": [[0, 0, \"1/0\"]]}}}\n")
        .unwrap();
    let o = whyd_path(&["check", "algebra"], &p, &[]);
    assert_eq!(o.status.code(), Some(3));
    let msg = stderr(&o);
    assert!(msg.contains("line 2"), "{msg}");
    assert!(msg.contains("zero denominator"), "{msg}");
}

#[test]
fn unknown_version_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("v.spec");
    std::fs::write(&p, r#"{"version": 2, "field": "rational", "objects": {}}"#).unwrap();
    let o = whyd_path(&["check", "hopf"], &p, &[]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("version"));
}

#[test]
fn non_prime_field_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("f.spec");
    std::fs::write(&p, r#"{"version": 1, "field": {"prime": 6}, "objects": {}}"#).unwrap();
    assert_eq!(whyd_path(&["check", "hopf"], &p, &[]).status.code(), Some(3));
}

#[test]
fn missing_file_is_an_io_error() {
    let o = whyd(&["check", "hopf", "/nonexistent/x.spec"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(whyd(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(whyd(&["check"]).status.code(), Some(2));
    assert_eq!(whyd(&["check", "widget", "x.spec"]).status.code(), Some(2));
    let ambiguous = whyd_path(&["check", "hopf"], &corpus("presentations.spec"), &[]);
    assert_eq!(ambiguous.status.code(), Some(2));
    let arity = whyd_path(&["verify", "pentagon"], &corpus("kz2.spec"), &["--modules", "sign,sign"]);
    assert_eq!(arity.status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let o = whyd(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("corpus"));
}

#[test]
fn unknown_object_is_a_document_error() {
    let o = whyd_path(&["check", "yd"], &corpus("kz2.spec"), &["--module", "nope"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn every_corpus_document_round_trips() {
    for p in spec_files() {
        let doc = spec::load(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        let again = spec::parse(&to_text(&doc)).unwrap();
        assert_eq!(doc, again, "{}", p.display());
        assert_eq!(to_text(&again), to_text(&doc));
    }
}

#[test]
fn every_corpus_document_certifies() {
    let hopf_kinds = ["weak_hopf", "group", "groupoid"];
    for p in spec_files() {
        let doc = spec::load(&p).unwrap();
        for (name, obj) in &doc.objects {
            let (args, flag, expected): (&[&str], &str, i32) = match obj.kind() {
                k if hopf_kinds.contains(&k) => (&["check", "hopf"], "--object", 0),
                "yd_module" => (&["check", "yd"], "--module", if name.starts_with("broken") { 1 } else { 0 }),
                "module" => (&["check", "module"], "--module", 0),
                "comodule" => (&["check", "comodule"], "--module", 0),
                "r_matrix" => (&["check", "rmatrix"], "--object", 0),
                "sigma_form" => (&["check", "sigma"], "--object", 0),
                _ => continue,
            };
            let o = whyd_path(args, &p, &[flag, name]);
            assert_eq!(o.status.code(), Some(expected), "{} {name}: {}{}", p.display(), stdout(&o), stderr(&o));
        }
    }
}

#[test]
fn emitted_corpus_matches_the_checked_in_documents() {
    let dir = tempfile::tempdir().unwrap();
    let o = whyd_path(&["corpus", "--section", "axioms", "--no-timings", "--emit"], dir.path(), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let generated = corpus_dir().join("generated");
    let mut count = 0;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let name = p.file_name().unwrap();
        let expected = std::fs::read_to_string(generated.join(name)).unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), expected, "{}", name.to_string_lossy());
        count += 1;
    }
    assert_eq!(count, std::fs::read_dir(&generated).unwrap().count());
}

#[test]
fn structured_reports_are_byte_identical_across_runs() {
    let args = ["corpus", "--instance", "kZ2", "--report", "structured", "--no-timings"];
    let first = whyd(&args);
    let second = whyd(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["passed"], serde_json::Value::Bool(true));
    assert_eq!(v["instances"][0]["instance"], "kZ2");
    assert!(v["instances"][0].get("millis").is_none());
}

#[test]
fn structured_failure_report_carries_witnesses() {
    let o = whyd_path(&["check", "yd"], &corpus("kz2.spec"), &["--module", "broken_fixture", "--report", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], serde_json::Value::Bool(false));
    let text = v.to_string();
    assert!(text.contains("compatibility"));
    assert!(text.contains("witnesses"), "{text}");
}

#[test]
fn report_file_receives_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = whyd_path(&["check", "hopf"], &corpus("kz2.spec"), &["--report", "structured", "--report-file", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["command"], "check hopf ".to_string() + corpus("kz2.spec").to_str().unwrap());
}

#[test]
fn built_objects_are_written_and_recertify() {
    let dir = tempfile::tempdir().unwrap();
    let kz2 = corpus("kz2.spec");
    let cases: [(&[&str], &str, &[&str]); 5] = [
        (&["build", "tensor"], "st", &["--modules", "sign,trivial"]),
        (&["build", "dual"], "sign_dual", &["--module", "sign", "--side", "right"]),
        (&["build", "unit"], "one", &[]),
        (&["build", "induce-coaction"], "regular_r", &["--module", "regular", "--object", "R"]),
        (&["build", "induce-action"], "graded_s", &["--module", "graded", "--object", "sigma"]),
    ];
    for (cmd, name, rest) in cases {
        let out = dir.path().join(format!("{name}.spec"));
        let mut extra = rest.to_vec();
        extra.extend(["--name", name, "--out", out.to_str().unwrap()]);
        let o = whyd_path(cmd, &kz2, &extra);
        assert_eq!(o.status.code(), Some(0), "{name}: {}{}", stdout(&o), stderr(&o));
        let doc = spec::load(&out).unwrap();
        assert_eq!(doc.objects[name].kind(), "yd_module");
        let check = whyd_path(&["check", "yd"], &out, &["--module", name]);
        assert_eq!(check.status.code(), Some(0), "{name}: {}", stdout(&check));
    }
}

#[test]
fn built_braiding_is_minus_the_flip_on_sign() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.spec");
    let o =
        whyd_path(&["build", "braiding"], &corpus("kz2.spec"), &["--modules", "sign,sign", "--name", "c", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let doc = spec::parse(&text).unwrap();
    let entries = match &doc.objects["c"] {
        spec::ObjectSpec::Map { entries, .. } => entries.clone(),
        other => panic!("unexpected {}", other.kind()),
    };
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0].index, vec![0, 0]);
    assert_eq!(entries[0].value, "-1");
}

#[test]
fn failed_build_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.spec");
    let o = whyd_path(&["build", "tensor"], &corpus("kz2.spec"), &["--modules", "broken_fixture,sign", "--out", out.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    assert!(!out.exists());
}

#[test]
fn presentations_certify_as_weak_hopf() {
    for name in ["Z4_inverted", "S3", "pair2"] {
        let o = whyd_path(&["check", "hopf"], &corpus("presentations.spec"), &["--object", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn corpus_listing_names_instances_and_sections() {
    let o = whyd(&["corpus", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in ["kZ2", "pair2", "mutation-sensitivity", "coquasitriangular"] {
        assert!(text.contains(needle), "{text}");
    }
}

#[test]
fn unknown_section_is_a_usage_error() {
    assert_eq!(whyd(&["corpus", "--section", "nope"]).status.code(), Some(2));
}
