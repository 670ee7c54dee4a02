//! Argument parsing and dispatch for the `whyd` binary.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use whyd_core::braiding::{braiding, check_braiding, check_duality, check_hexagons, check_hom_yang_baxter_triple, dual, Side};
use whyd_core::entwining::{canonical_psi, check_entwined_module, check_entwining};
use whyd_core::forge::{mutated_pairs, standard_instances, Instance};
use whyd_core::hom::{check_comodule, check_hom_algebra, check_hom_coalgebra, check_module};
use whyd_core::qt::{
    check_corep_braiding, check_corep_tensor, check_rep_braiding, check_rep_tensor, check_rmatrix, check_sigma, induced_action,
    induced_coaction,
};
use whyd_core::report::{set_witness_cap, CheckEntry};
use whyd_core::suite::{run_instance, Selection, SECTIONS};
use whyd_core::weak::{certify, check_weak_bialgebra};
use whyd_core::yd::{
    check_pentagon, check_triangle, check_unit_constraints, check_yd_31, check_yd_32_33, tilde_tensor, truncated_tensor, unit_object, Obj,
    Product, YDModule, YDObject,
};
use whyd_core::{CheckReport, Error, WeakHomHopfAlgebra};

use crate::error::{exit, CliError};
use crate::report::{emit_report, Format, ReportDocument};
use crate::spec::{self, hopf_spec, map_spec, rmatrix_spec, sigma_spec, yd_spec, FieldSpec, ObjectSpec, SpecDocument, Workspace};

#[derive(Debug, Parser)]
#[command(name = "whyd", version, about = "Exact certification of Yetter-Drinfeld structures over weak Hom-Hopf algebras")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub report: Format,
    /// Maximum number of witnesses listed per failing identity.
    #[arg(long, global = true)]
    pub max_witnesses: Option<usize>,
    /// Leave timings out of the report (for byte-identical reruns).
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub report_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify one structure from a specification document.
    Check(CheckArgs),
    /// Construct a structure, certify it and optionally write it out.
    Build(BuildArgs),
    /// Verify one structural property on named modules.
    Verify(VerifyArgs),
    /// Run the full suite on the built-in instances.
    Corpus(CorpusArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Module,
    Comodule,
    Yd,
    Entwining,
    Rmatrix,
    Sigma,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub kind: CheckKind,
    pub spec: PathBuf,
    /// The structure to check (defaults to the only candidate in the document).
    #[arg(long)]
    pub object: Option<String>,
    /// The module to check, for module-like kinds.
    #[arg(long)]
    pub module: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    Tensor,
    Tilde,
    Dual,
    Unit,
    Braiding,
    Psi,
    InduceCoaction,
    InduceAction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub kind: BuildKind,
    pub spec: PathBuf,
    /// Comma-separated module names.
    #[arg(long, value_delimiter = ',')]
    pub modules: Vec<String>,
    #[arg(long)]
    pub module: Option<String>,
    /// The algebra, R-matrix or form to build from.
    #[arg(long)]
    pub object: Option<String>,
    #[arg(long, value_enum, default_value = "left")]
    pub side: SideArg,
    /// Name of the new object.
    #[arg(long)]
    pub name: Option<String>,
    /// Write the input document extended by the new object here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Pentagon,
    Triangle,
    Hexagon,
    Hybe,
    Snake,
    /// The compatibility condition agrees with its split form.
    YdEquivalence,
    /// The canonical entwining certifies and its entwined modules are the Yetter-Drinfeld modules.
    Entwined,
    /// Coactions induced by an R-matrix certify and agree with tensor product coactions.
    RepInduced,
    /// The R-matrix braiding equals the Yetter-Drinfeld braiding.
    RepBraiding,
    /// Actions induced by a form certify, and the tilde tensor products re-certify.
    CorepInduced,
    /// The form braiding equals the Yetter-Drinfeld braiding on tilde tensor products, whose hexagons hold.
    CorepBraiding,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub claim: Claim,
    pub spec: PathBuf,
    /// Comma-separated module names.
    #[arg(long, value_delimiter = ',')]
    pub modules: Vec<String>,
    #[arg(long)]
    pub module: Option<String>,
    /// The algebra, R-matrix or form to use.
    #[arg(long)]
    pub object: Option<String>,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Restrict to these instances.
    #[arg(long = "instance")]
    pub instances: Vec<String>,
    /// Restrict to these sections.
    #[arg(long = "section")]
    pub sections: Vec<String>,
    /// List the instances and sections and exit.
    #[arg(long)]
    pub list: bool,
    /// Write a specification document for every instance into this directory.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "whyd: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(cap) = cli.output.max_witnesses {
        set_witness_cap(cap);
    }
    let timings = !cli.output.no_timings;
    let mut doc = match &cli.command {
        Command::Check(a) => check(a, timings)?,
        Command::Build(a) => build(a, timings)?,
        Command::Verify(a) => verify(a, timings)?,
        Command::Corpus(a) => match corpus(a, timings, out)? {
            Some(doc) => doc,
            None => return Ok(exit::PASS),
        },
    };
    if let Some(cap) = cli.output.max_witnesses {
        doc.cap_witnesses(cap);
    }
    let bytes = emit_report(&doc, cli.output.report);
    match &cli.output.report_file {
        Some(p) => std::fs::write(p, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => out.write_all(&bytes).map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(if doc.passed { exit::PASS } else { exit::CHECK_FAILED })
}

/// Collects reports, timing each one. Errors raised while checking become failing reports.
struct Recorder {
    doc: ReportDocument,
    timings: bool,
}

impl Recorder {
    fn new(command: String, timings: bool) -> Self {
        Recorder { doc: ReportDocument::new(command), timings }
    }

    fn record(&mut self, subject: &str, f: impl FnOnce() -> Result<CheckReport, Error>) {
        let t = Instant::now();
        let report = match f() {
            Ok(r) => r,
            Err(Error::Certification { report, .. }) => *report,
            Err(e) => {
                let mut r = CheckReport::new(subject);
                r.push(CheckEntry::fact("evaluation", "cli", "the check could be evaluated", false, Some(e.to_string())));
                r
            }
        };
        let millis = self.timings.then(|| t.elapsed().as_millis());
        self.doc.add(report, millis);
    }

    fn finish(self) -> ReportDocument {
        self.doc
    }
}

fn describe(kind: impl ValueEnum, spec: &Path) -> String {
    let name = kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    format!("{name} {}", spec.display())
}

const HOPF_KINDS: [&str; 4] = ["weak_hopf", "weak_bialgebra", "group", "groupoid"];

fn check(a: &CheckArgs, timings: bool) -> Result<ReportDocument, CliError> {
    let ws = Workspace::load(&a.spec)?;
    let mut rec = Recorder::new(format!("check {}", describe(a.kind, &a.spec)), timings);
    let object = a.object.as_deref();
    let module = a.module.as_deref().or(object);
    match a.kind {
        CheckKind::Algebra => {
            let name = ws.pick(object, &["algebra", "weak_bialgebra", "weak_hopf", "group", "groupoid"])?;
            let alg = ws.algebra(name)?;
            rec.record(name, || check_hom_algebra(&alg));
        }
        CheckKind::Coalgebra => {
            let name = ws.pick(object, &["coalgebra", "weak_bialgebra", "weak_hopf", "group", "groupoid"])?;
            let c = ws.coalgebra(name)?;
            rec.record(name, || check_hom_coalgebra(&c));
        }
        CheckKind::Bialgebra => {
            let h = ws.hopf(ws.pick(object, &HOPF_KINDS)?)?;
            rec.record("weak Hom-bialgebra", || check_weak_bialgebra(&h));
        }
        CheckKind::Hopf => {
            let h = ws.hopf(ws.pick(object, &HOPF_KINDS)?)?;
            rec.record("weak Hom-Hopf algebra", || certify(&h));
        }
        CheckKind::Module => {
            let name = ws.pick(module, &["module", "yd_module"])?;
            let alg = ws.algebra(ws.base_of(name)?)?;
            let m = ws.module(name)?;
            rec.record(name, || check_module(&alg, &m));
        }
        CheckKind::Comodule => {
            let name = ws.pick(module, &["comodule", "yd_module"])?;
            let c = ws.coalgebra(ws.base_of(name)?)?;
            let m = ws.comodule(name)?;
            rec.record(name, || check_comodule(&c, &m));
        }
        CheckKind::Yd => {
            let name = ws.pick(module, &["yd_module"])?;
            let h = ws.hopf(ws.base_of(name)?)?;
            let m = ws.yd_module(name)?;
            rec.record(name, || check_yd_31(&h, &m));
        }
        CheckKind::Entwining => {
            let explicit = match object {
                Some(n) => ws.get(n)?.kind() == "entwining",
                None => !ws.names_of(&["entwining"]).is_empty(),
            };
            if explicit {
                let e = ws.entwining(ws.pick(object, &["entwining"])?)?;
                rec.record("entwining structure", || check_entwining(&e));
            } else {
                let h = ws.hopf(ws.pick(object, &HOPF_KINDS)?)?;
                rec.record("canonical entwining", || canonical_psi(&h).map(|(_, r)| r));
            }
        }
        CheckKind::Rmatrix => {
            let name = ws.pick(object, &["r_matrix"])?;
            let h = ws.hopf(ws.base_of(name)?)?;
            let q = ws.rmatrix(name)?;
            rec.record(name, || check_rmatrix(&h, &q));
        }
        CheckKind::Sigma => {
            let name = ws.pick(object, &["sigma_form"])?;
            let h = ws.hopf(ws.base_of(name)?)?;
            let s = ws.sigma(name)?;
            rec.record(name, || check_sigma(&h, &s));
        }
    }
    Ok(rec.finish())
}

/// The listed modules, or the single `--module`, as module names.
fn module_names<'a>(modules: &'a [String], module: Option<&'a str>) -> Vec<&'a str> {
    let mut names: Vec<&str> = modules.iter().map(String::as_str).collect();
    names.extend(module);
    names
}

fn expect_count(names: &[&str], allowed: &[usize], what: &str) -> Result<(), CliError> {
    if allowed.contains(&names.len()) {
        return Ok(());
    }
    let wanted: Vec<String> = allowed.iter().map(|n| n.to_string()).collect();
    Err(CliError::Usage(format!("{what} takes {} module(s), got {}", wanted.join(" or "), names.len())))
}

/// The common base algebra of the named modules.
fn common_base<'a>(ws: &'a Workspace, names: &[&str]) -> Result<&'a str, CliError> {
    let mut base: Option<&str> = None;
    for n in names {
        let b = ws.base_of(n)?;
        if base.is_some_and(|x| x != b) {
            return Err(CliError::Document(format!("modules live over different algebras ({} and {b})", base.unwrap_or(""))));
        }
        base = Some(b);
    }
    base.ok_or_else(|| CliError::Usage("no modules given".into()))
}

/// Yetter-Drinfeld objects for the names, each certified first; the reports are recorded.
fn yd_objects(ws: &Workspace, h: &WeakHomHopfAlgebra, names: &[&str], rec: &mut Recorder) -> Result<Option<Vec<Obj>>, CliError> {
    let mut objs: Vec<Obj> = Vec::new();
    let mut ok = true;
    for n in names {
        if let Some(o) = objs.iter().find(|o| o.name == *n) {
            objs.push(o.clone());
            continue;
        }
        let m = ws.yd_module(n)?;
        let report = check_yd_31(h, &m)?;
        ok &= report.passed();
        rec.record(n, || Ok(report));
        objs.push(YDObject::plain(*n, m));
    }
    Ok(ok.then_some(objs))
}

fn build(a: &BuildArgs, timings: bool) -> Result<ReportDocument, CliError> {
    let ws = Workspace::load(&a.spec)?;
    let mut rec = Recorder::new(format!("build {}", describe(a.kind, &a.spec)), timings);
    let names = module_names(&a.modules, a.module.as_deref());
    let mut built: Option<(String, ObjectSpec)> = None;
    match a.kind {
        BuildKind::Tensor | BuildKind::Tilde | BuildKind::Braiding => {
            expect_count(&names, &[2], "this construction")?;
            let over = common_base(&ws, &names)?.to_string();
            let h = ws.hopf(&over)?;
            if let Some(objs) = yd_objects(&ws, &h, &names, &mut rec)? {
                let (l, r) = (&objs[0], &objs[1]);
                match a.kind {
                    BuildKind::Tensor | BuildKind::Tilde => {
                        let result = if a.kind == BuildKind::Tensor { truncated_tensor(&h, l, r) } else { tilde_tensor(&h, l, r) };
                        let sym = if a.kind == BuildKind::Tensor { "⊗" } else { "⊗̃" };
                        let subject = format!("{} {sym} {}", l.name, r.name);
                        if let Ok(t) = &result {
                            built = Some((t.name.clone(), yd_spec(&over, &t.module)));
                        }
                        rec.record(&subject, || result.and_then(|t| check_yd_31(&h, &t.module)));
                    }
                    _ => {
                        if let Ok(c) = braiding(&h, l, r) {
                            built = Some((format!("c[{},{}]", l.name, r.name), map_spec(&c.map)));
                        }
                        rec.record("braiding", || check_braiding(&h, l, r));
                    }
                }
            }
        }
        BuildKind::Dual => {
            expect_count(&names, &[1], "dual")?;
            let over = common_base(&ws, &names)?.to_string();
            let h = ws.hopf(&over)?;
            if let Some(objs) = yd_objects(&ws, &h, &names, &mut rec)? {
                let side = match a.side {
                    SideArg::Left => Side::Left,
                    SideArg::Right => Side::Right,
                };
                let unit = unit_object(&h)?;
                if let Ok(d) = dual(&h, &objs[0], side) {
                    built = Some((d.name.clone(), yd_spec(&over, &d.module)));
                }
                rec.record("duality", || check_duality(&h, &unit, &objs[0], side));
            }
        }
        BuildKind::Unit => {
            let over = ws.pick(a.object.as_deref(), &HOPF_KINDS)?.to_string();
            let h = ws.hopf(&over)?;
            let result = unit_object(&h);
            if let Ok(u) = &result {
                built = Some((u.name.clone(), yd_spec(&over, &u.module)));
            }
            rec.record("unit object", || result.and_then(|u| check_yd_31(&h, &u.module)));
        }
        BuildKind::Psi => {
            let over = ws.pick(a.object.as_deref(), &HOPF_KINDS)?.to_string();
            let h = ws.hopf(&over)?;
            let result = canonical_psi(&h);
            if let Ok((e, _)) = &result {
                let psi = spec::entries_of(&e.psi);
                built = Some(("psi".into(), ObjectSpec::Entwining { algebra: over.clone(), coalgebra: over.clone(), psi }));
            }
            rec.record("canonical entwining", || result.map(|(_, r)| r));
        }
        BuildKind::InduceCoaction => {
            expect_count(&names, &[1], "induce-coaction")?;
            let q_name = ws.pick(a.object.as_deref(), &["r_matrix"])?;
            let over = ws.base_of(q_name)?.to_string();
            let h = ws.hopf(&over)?;
            let q = ws.rmatrix(q_name)?;
            let m = ws.module(names[0])?;
            let result = induced_coaction(&h, &q, &m);
            if let Ok(y) = &result {
                built = Some((format!("{}^R", names[0]), yd_spec(&over, y)));
            }
            rec.record("induced coaction", || result.and_then(|y| check_yd_31(&h, &y)));
        }
        BuildKind::InduceAction => {
            expect_count(&names, &[1], "induce-action")?;
            let s_name = ws.pick(a.object.as_deref(), &["sigma_form"])?;
            let over = ws.base_of(s_name)?.to_string();
            let h = ws.hopf(&over)?;
            let s = ws.sigma(s_name)?;
            let m = ws.comodule(names[0])?;
            let result = induced_action(&h, &s, &m);
            if let Ok(y) = &result {
                built = Some((format!("{}^σ", names[0]), yd_spec(&over, y)));
            }
            rec.record("induced action", || result.and_then(|y| check_yd_31(&h, &y)));
        }
    }
    let doc = rec.finish();
    if let (Some(path), Some((default_name, obj))) = (&a.out, built) {
        if doc.passed {
            let mut out = ws.doc.clone();
            out.objects.insert(a.name.clone().unwrap_or(default_name), obj);
            spec::save(&out, path)?;
        }
    }
    Ok(doc)
}

fn agreement(subject: String, anchor: &str, statement: &str, a: (&str, bool), b: (&str, bool)) -> CheckReport {
    let verdict = |p: bool| if p { "pass" } else { "fail" };
    let mut r = CheckReport::new(subject);
    let note = format!("{} {}, {} {}", a.0, verdict(a.1), b.0, verdict(b.1));
    r.push(CheckEntry::fact("agree", anchor, statement, a.1 == b.1, Some(note)));
    r
}

fn verify(a: &VerifyArgs, timings: bool) -> Result<ReportDocument, CliError> {
    let ws = Workspace::load(&a.spec)?;
    let mut rec = Recorder::new(format!("verify {}", describe(a.claim, &a.spec)), timings);
    let names = module_names(&a.modules, a.module.as_deref());
    match a.claim {
        Claim::Pentagon | Claim::Triangle | Claim::Hexagon | Claim::Hybe | Claim::Snake => {
            let counts: &[usize] = match a.claim {
                Claim::Pentagon => &[4],
                Claim::Triangle => &[2],
                Claim::Hexagon => &[3],
                Claim::Hybe => &[1, 3],
                _ => &[1],
            };
            expect_count(&names, counts, "this claim")?;
            let h = ws.hopf(common_base(&ws, &names)?)?;
            let Some(objs) = yd_objects(&ws, &h, &names, &mut rec)? else {
                return Ok(rec.finish());
            };
            match a.claim {
                Claim::Pentagon => {
                    rec.record("pentagon", || check_pentagon(&h, Product::Truncated, [&objs[0], &objs[1], &objs[2], &objs[3]]))
                }
                Claim::Triangle => {
                    let unit = unit_object(&h)?;
                    rec.record("unit constraints", || check_unit_constraints(&h, &unit, &objs[0]));
                    rec.record("unit constraints", || check_unit_constraints(&h, &unit, &objs[1]));
                    rec.record("triangle", || check_triangle(&h, &unit, &objs[0], &objs[1]));
                }
                Claim::Hexagon => rec.record("hexagons", || check_hexagons(&h, &objs[0], &objs[1], &objs[2])),
                Claim::Hybe => {
                    let m = |i: usize| &objs[i.min(objs.len() - 1)].module;
                    rec.record("Hom-Yang-Baxter", || check_hom_yang_baxter_triple(&h, [m(0), m(1), m(2)]));
                }
                _ => {
                    let unit = unit_object(&h)?;
                    for side in [Side::Left, Side::Right] {
                        rec.record("duality", || check_duality(&h, &unit, &objs[0], side));
                    }
                }
            }
        }
        Claim::YdEquivalence | Claim::Entwined => {
            if names.is_empty() {
                return Err(CliError::Usage("name at least one module".into()));
            }
            let h = ws.hopf(common_base(&ws, &names)?)?;
            let psi = if a.claim == Claim::Entwined {
                let result = canonical_psi(&h);
                let e = result.as_ref().ok().map(|(e, _)| e.clone());
                rec.record("canonical entwining", || result.map(|(_, r)| r));
                match e {
                    Some(e) => Some(e),
                    None => return Ok(rec.finish()),
                }
            } else {
                None
            };
            for n in &names {
                let m = ws.yd_module(n)?;
                let compat = check_yd_31(&h, &m)?.passed();
                let report = match &psi {
                    None => {
                        let split = check_yd_32_33(&h, &m)?.passed();
                        agreement(
                            format!("module {n}"),
                            "yd-equivalence",
                            "compatibility condition ⇔ split form",
                            ("compatibility", compat),
                            ("split form", split),
                        )
                    }
                    Some(e) => {
                        let entwined = check_entwined_module(e, &m.as_module(), &m.as_comodule())?.passed();
                        agreement(
                            format!("module {n}"),
                            "entwined-module",
                            "compatibility condition ⇔ entwined module for the canonical entwining",
                            ("compatibility", compat),
                            ("entwined", entwined),
                        )
                    }
                };
                rec.record(n, || Ok(report));
            }
        }
        Claim::RepInduced | Claim::RepBraiding => {
            let q_name = ws.pick(a.object.as_deref(), &["r_matrix"])?;
            let h = ws.hopf(ws.base_of(q_name)?)?;
            let q = ws.rmatrix(q_name)?;
            if a.claim == Claim::RepBraiding {
                expect_count(&names, &[2], "rep-braiding")?;
            } else if names.is_empty() {
                return Err(CliError::Usage("name at least one module".into()));
            }
            rec.record(q_name, || check_rmatrix(&h, &q));
            let mut objs = Vec::new();
            for n in &names {
                let m = ws.module(n)?;
                let result = induced_coaction(&h, &q, &m);
                if let Ok(y) = &result {
                    objs.push(YDObject::plain(format!("{n}^R"), y.clone()));
                }
                rec.record(n, || result.and_then(|y| check_yd_31(&h, &y)));
            }
            if objs.len() == names.len() {
                if a.claim == Claim::RepBraiding {
                    rec.record("R-braiding", || check_rep_braiding(&h, &q, &objs[0], &objs[1]));
                } else {
                    for x in &objs {
                        for y in &objs {
                            rec.record("tensor coincidence", || check_rep_tensor(&h, &q, x, y));
                        }
                    }
                }
            }
        }
        Claim::CorepInduced | Claim::CorepBraiding => {
            let s_name = ws.pick(a.object.as_deref(), &["sigma_form"])?;
            let h = ws.hopf(ws.base_of(s_name)?)?;
            let s = ws.sigma(s_name)?;
            if a.claim == Claim::CorepBraiding {
                expect_count(&names, &[2, 3], "corep-braiding")?;
            } else if names.is_empty() {
                return Err(CliError::Usage("name at least one module".into()));
            }
            rec.record(s_name, || check_sigma(&h, &s));
            let mut objs: Vec<Obj> = Vec::new();
            for n in &names {
                let m = ws.comodule(n)?;
                let result = induced_action(&h, &s, &m);
                if let Ok(y) = &result {
                    objs.push(YDObject::plain(format!("{n}^σ"), y.clone()));
                }
                rec.record(n, || result.and_then(|y| check_yd_31(&h, &y)));
            }
            if objs.len() == names.len() {
                if a.claim == Claim::CorepBraiding {
                    let (x, y) = (&objs[0], &objs[1]);
                    let z = objs.get(2).unwrap_or(y);
                    rec.record("σ-braiding", || check_corep_braiding(&h, &s, x, y));
                    rec.record("braiding", || whyd_core::braiding::check_braiding_in(&h, Product::Tilde, x, y));
                    rec.record("hexagons", || whyd_core::braiding::check_hexagons_in(&h, Product::Tilde, x, y, z));
                } else {
                    for x in &objs {
                        for y in &objs {
                            rec.record("tilde tensor", || tilde_tensor(&h, x, y).and_then(|t| check_yd_31(&h, &t.module)));
                            rec.record("tensor coincidence", || check_corep_tensor(&h, &s, x, y));
                        }
                    }
                }
            }
        }
    }
    Ok(rec.finish())
}

/// File name for an instance's specification document.
pub fn slug(name: &str) -> String {
    let mut s: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '-' }).collect();
    while s.contains("--") {
        s = s.replace("--", "-");
    }
    s
}

/// The instance as a document: `H` with explicit tensors, its corpus modules, one failing fixture
/// and its R-matrix and form when present.
pub fn instance_document(inst: &Instance) -> Result<SpecDocument, CliError> {
    let h = &inst.h;
    let mut doc = SpecDocument { version: spec::FORMAT_VERSION, field: FieldSpec::of(h.field()), objects: Default::default() };
    doc.objects.insert("H".into(), hopf_spec(h));
    for o in inst.yd_corpus()? {
        doc.objects.insert(o.name.clone(), yd_spec("H", &o.module));
    }
    let broken: Option<(String, YDModule)> =
        mutated_pairs(inst)?.into_iter().find(|(_, m)| check_yd_31(h, m).map(|r| !r.passed()).unwrap_or(false));
    if let Some((_, m)) = broken {
        doc.objects.insert("broken_fixture".into(), yd_spec("H", &m));
    }
    if let Some(q) = &inst.rmatrix {
        doc.objects.insert("R".into(), rmatrix_spec("H", q));
    }
    if let Some(s) = &inst.sigma {
        doc.objects.insert("sigma".into(), sigma_spec("H", s));
    }
    Ok(doc)
}

fn corpus(a: &CorpusArgs, timings: bool, out: &mut dyn Write) -> Result<Option<ReportDocument>, CliError> {
    let instances = standard_instances()?;
    if a.list {
        let io = |e: std::io::Error| CliError::Io(e.to_string());
        for i in &instances {
            writeln!(out, "instance {}", i.name).map_err(io)?;
        }
        for s in SECTIONS {
            writeln!(out, "section {s}").map_err(io)?;
        }
        return Ok(None);
    }
    for n in &a.instances {
        if !instances.iter().any(|i| &i.name == n) {
            return Err(CliError::Usage(format!("unknown instance {n:?}")));
        }
    }
    let selection = if a.sections.is_empty() {
        Selection::default()
    } else {
        let names: Vec<&str> = a.sections.iter().map(String::as_str).collect();
        Selection::only(&names).map_err(|e| CliError::Usage(e.to_string()))?
    };
    let chosen: Vec<&Instance> = instances.iter().filter(|i| a.instances.is_empty() || a.instances.contains(&i.name)).collect();
    if let Some(dir) = &a.emit {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        for i in &chosen {
            spec::save(&instance_document(i)?, &dir.join(format!("{}.spec", slug(&i.name))))?;
        }
    }
    let mut doc = ReportDocument::new("corpus");
    for i in chosen {
        let t = Instant::now();
        let run = run_instance(i, &selection)?;
        doc.add_run(run, timings.then(|| t.elapsed().as_millis()));
    }
    Ok(Some(doc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("whyd").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn slugs_are_file_names() {
        assert_eq!(slug("kZ3/GF7"), "kz3-gf7");
        assert_eq!(slug("kZ4^inv"), "kz4-inv");
        assert_eq!(slug("pair2"), "pair2");
    }

    #[test]
    fn help_and_unknown_commands() {
        let (code, out, _) = invoke(&["--help"]);
        assert_eq!(code, exit::PASS);
        assert!(out.contains("corpus"));
        let (code, _, err) = invoke(&["frobnicate"]);
        assert_eq!(code, exit::USAGE);
        assert!(!err.is_empty());
    }

    #[test]
    fn corpus_list_names_every_instance() {
        let (code, out, _) = invoke(&["corpus", "--list"]);
        assert_eq!(code, exit::PASS);
        for name in ["kZ2", "kZ3/GF7", "kS3", "disc2", "pair2", "kZ4^inv"] {
            assert!(out.contains(name), "{name} missing from {out}");
        }
    }

    #[test]
    fn instance_documents_load_back() {
        for inst in whyd_core::forge::standard_instances().unwrap() {
            let doc = instance_document(&inst).unwrap();
            assert!(crate::spec::Workspace::new(doc).is_ok(), "{}", inst.name);
        }
    }
}
