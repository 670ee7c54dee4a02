//! The full certification run over an instance: axioms, the Yetter-Drinfeld corpus and its
//! monoidal, braided and rigid structure, entwinings, (co)quasitriangular structures and
//! mutation fixtures. Results are grouped into named sections in a fixed order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::braiding::{
    braiding, check_braiding, check_braiding_in, check_duality, check_hexagons_cached, check_hom_yang_baxter_triple, Side,
};
use crate::entwining::{canonical_psi, check_entwined_module};
use crate::error::{Error, Result};
use crate::forge::{mutated_pairs, standard_instances, structure_mutations, Instance};
use crate::linmap::LinearMap;
use crate::qt::{
    check_corep_braiding, check_corep_tensor, check_rep_braiding, check_rep_tensor, check_rmatrix, check_sigma, induced_action,
    induced_coaction,
};
use crate::report::{CheckEntry, CheckReport};
use crate::weak::{certify, WeakHomHopfAlgebra};
use crate::yd::{
    check_pentagon_cached, check_triangle, check_unit_constraints, check_yd_31, check_yd_32_33, tilde_tensor, unit_object, Obj, Product,
    TensorCache, YDModule, YDObject,
};

pub const SECTIONS: [&str; 12] = [
    "axioms",
    "yd-equivalence",
    "coherence",
    "braiding",
    "classical-oracle",
    "hom-yang-baxter",
    "rigidity",
    "entwining",
    "entwining-metamorphic",
    "quasitriangular",
    "coquasitriangular",
    "mutation-sensitivity",
];

/// Tally of one group of checks. Only failing reports are kept in full; `notes` counts the
/// distinct entry notes seen, passing or not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub deviations: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, usize>,
    pub failures: Vec<CheckReport>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section { name: name.into(), ..Default::default() }
    }

    pub fn record(&mut self, report: CheckReport) {
        self.checked += 1;
        for d in &report.deviations {
            if !self.deviations.contains(d) {
                self.deviations.push(d.clone());
            }
        }
        for n in report.entries.iter().filter_map(|e| e.note.as_ref()) {
            *self.notes.entry(n.clone()).or_default() += 1;
        }
        if !report.passed() {
            self.failed += 1;
            self.failures.push(report);
        }
    }

    /// Records a check that may not have produced a report; errors become failing facts.
    pub fn record_result(&mut self, subject: &str, result: Result<CheckReport>) {
        self.record(settle(subject, result));
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn settle(subject: &str, result: Result<CheckReport>) -> CheckReport {
    match result {
        Ok(r) => r,
        Err(Error::Certification { report, .. }) => *report,
        Err(e) => {
            let mut r = CheckReport::new(subject);
            r.push(CheckEntry::fact("evaluation", "suite", "the check could be evaluated", false, Some(e.to_string())));
            r
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRun {
    pub instance: String,
    pub field: String,
    pub dim: usize,
    pub corpus: Vec<String>,
    pub sections: Vec<Section>,
}

impl InstanceRun {
    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }
}

/// Which sections to evaluate; the default is all of them.
#[derive(Clone, Debug)]
pub struct Selection {
    pub sections: Vec<String>,
}

impl Default for Selection {
    fn default() -> Self {
        Selection { sections: SECTIONS.iter().map(|s| s.to_string()).collect() }
    }
}

impl Selection {
    pub fn only(names: &[&str]) -> Result<Self> {
        for n in names {
            if !SECTIONS.contains(n) {
                return Err(Error::Structural(format!("unknown section {n}")));
            }
        }
        Ok(Selection { sections: names.iter().map(|s| s.to_string()).collect() })
    }

    fn wants(&self, name: &str) -> bool {
        self.sections.iter().any(|s| s == name)
    }
}

/// Runs the selected sections on every standard instance.
pub fn run_standard(selection: &Selection) -> Result<Vec<InstanceRun>> {
    standard_instances()?.iter().map(|i| run_instance(i, selection)).collect()
}

pub fn run_instance(inst: &Instance, selection: &Selection) -> Result<InstanceRun> {
    let h = &inst.h;
    let corpus = inst.yd_corpus()?;
    let mut run = InstanceRun {
        instance: inst.name.clone(),
        field: h.field().to_string(),
        dim: h.dim(),
        corpus: corpus.iter().map(|o| format!("{}:{}", o.name, o.dim())).collect(),
        sections: Vec::new(),
    };
    let needs_pairs = selection.wants("yd-equivalence") || selection.wants("entwining-metamorphic");
    let pairs = if needs_pairs { fixture_pairs(inst)? } else { Vec::new() };
    for name in SECTIONS.iter().filter(|n| selection.wants(n)) {
        let section = match *name {
            "axioms" => axioms(h),
            "yd-equivalence" => yd_equivalence(h, &pairs)?,
            "coherence" => coherence(h, &corpus)?,
            "braiding" => braided(h, &corpus)?,
            "classical-oracle" => match classical(h, &corpus)? {
                Some(s) => s,
                None => continue,
            },
            "hom-yang-baxter" => hom_yang_baxter(h, &corpus),
            "rigidity" => rigidity(h, &corpus)?,
            "entwining" => entwining(h),
            "entwining-metamorphic" => entwining_metamorphic(h, &pairs)?,
            "quasitriangular" => match quasitriangular(inst, &corpus) {
                Some(s) => s,
                None => continue,
            },
            "coquasitriangular" => match coquasitriangular(inst, &corpus) {
                Some(s) => s,
                None => continue,
            },
            "mutation-sensitivity" => mutation_sensitivity(h)?,
            _ => unreachable!("section list is fixed"),
        };
        run.sections.push(section);
    }
    Ok(run)
}

/// All module-comodule candidates of the instance followed by the mutated adjoint pairs.
pub fn fixture_pairs(inst: &Instance) -> Result<Vec<(String, YDModule)>> {
    let mut pairs = inst.candidates()?;
    pairs.extend(mutated_pairs(inst)?);
    Ok(pairs)
}

fn axioms(h: &WeakHomHopfAlgebra) -> Section {
    let mut s = Section::new("axioms");
    s.record_result("weak Hom-Hopf algebra", certify(h));
    s
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn agreement(subject: String, anchor: &str, statement: &str, a: (&str, bool), b: (&str, bool)) -> CheckReport {
    let mut r = CheckReport::new(subject);
    let note = format!("{} {}, {} {}", a.0, verdict(a.1), b.0, verdict(b.1));
    r.push(CheckEntry::fact("agree", anchor, statement, a.1 == b.1, Some(note)));
    r
}

fn yd_equivalence(h: &WeakHomHopfAlgebra, pairs: &[(String, YDModule)]) -> Result<Section> {
    let mut s = Section::new("yd-equivalence");
    for (name, m) in pairs {
        let a = check_yd_31(h, m)?.passed();
        let b = check_yd_32_33(h, m)?.passed();
        s.record(agreement(
            format!("pair {name}"),
            "yd-equivalence",
            "compatibility condition ⇔ split form",
            ("compatibility", a),
            ("split form", b),
        ));
    }
    Ok(s)
}

fn coherence(h: &WeakHomHopfAlgebra, corpus: &[Obj]) -> Result<Section> {
    let mut s = Section::new("coherence");
    let unit = unit_object(h)?;
    let cache = TensorCache::new();
    for a in corpus {
        for b in corpus {
            for c in corpus {
                for d in corpus {
                    s.record_result("pentagon", check_pentagon_cached(h, &cache, Product::Truncated, [a, b, c, d]));
                }
            }
        }
    }
    for a in corpus {
        for b in corpus {
            s.record_result("triangle", check_triangle(h, &unit, a, b));
        }
    }
    for a in corpus {
        s.record_result("unit constraints", check_unit_constraints(h, &unit, a));
    }
    Ok(s)
}

fn braided(h: &WeakHomHopfAlgebra, corpus: &[Obj]) -> Result<Section> {
    let mut s = Section::new("braiding");
    for a in corpus {
        for b in corpus {
            s.record_result("braiding", check_braiding(h, a, b));
        }
    }
    let cache = TensorCache::new();
    for a in corpus {
        for b in corpus {
            for c in corpus {
                s.record_result("hexagons", check_hexagons_cached(h, &cache, Product::Truncated, a, b, c));
            }
        }
    }
    Ok(s)
}

/// `c(m ⊗ n) = Σ n_k ⊗ g·m` over the homogeneous parts `ρ(n) = Σ n_k ⊗ g` of a module over a
/// group algebra, evaluated entry by entry.
pub fn classical_braiding(h: &WeakHomHopfAlgebra, m: &YDModule, n: &YDModule) -> Result<LinearMap> {
    let (d, km, kn) = (h.dim(), m.dim(), n.dim());
    let mut entries = Vec::new();
    for i in 0..km {
        for j in 0..kn {
            let col = i * kn + j;
            for k in 0..kn {
                for g in 0..d {
                    let c = n.coaction.entry(k * d + g, j);
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..km {
                        let a = m.action.entry(l, g * km + i);
                        if !a.is_zero() {
                            entries.push((k * km + l, col, c.clone() * a));
                        }
                    }
                }
            }
        }
    }
    LinearMap::from_entries(h.field(), &[km, kn], &[kn, km], entries)
}

/// Pairs of corpus modules with `α_M = id` over a Hopf algebra with `α = id`.
fn classical(h: &WeakHomHopfAlgebra, corpus: &[Obj]) -> Result<Option<Section>> {
    if !(h.is_hopf() && h.alpha().is_identity()) {
        return Ok(None);
    }
    let mut s = Section::new("classical-oracle");
    let classical: Vec<&Obj> = corpus.iter().filter(|o| o.module.alpha.is_identity()).collect();
    for &a in &classical {
        for &b in &classical {
            let subject = format!("classical braiding ({}, {})", a.name, b.name);
            let result = (|| {
                let c = braiding(h, a, b)?;
                let (_, _, se) = c.source.tensor_parts()?;
                let (_, _, te) = c.target.tensor_parts()?;
                let oracle = classical_braiding(h, &a.module, &b.module)?.compose(&se.incl)?;
                let mut r = CheckReport::new(subject.clone());
                r.push(CheckEntry::compare(
                    "matches-oracle",
                    "braiding.classical",
                    "c(m ⊗ n) = n₀ ⊗ n₁·m",
                    &te.incl.compose(&c.map)?,
                    &oracle,
                )?);
                Ok(r)
            })();
            s.record_result(&subject, result);
        }
    }
    Ok(Some(s))
}

fn hom_yang_baxter(h: &WeakHomHopfAlgebra, corpus: &[Obj]) -> Section {
    let mut s = Section::new("hom-yang-baxter");
    for a in corpus {
        for b in corpus {
            for c in corpus {
                let subject = format!("Hom-Yang-Baxter ({}, {}, {})", a.name, b.name, c.name);
                s.record_result(&subject, check_hom_yang_baxter_triple(h, [&a.module, &b.module, &c.module]));
            }
        }
    }
    s
}

fn rigidity(h: &WeakHomHopfAlgebra, corpus: &[Obj]) -> Result<Section> {
    let mut s = Section::new("rigidity");
    let unit = unit_object(h)?;
    for a in corpus {
        for side in [Side::Left, Side::Right] {
            s.record_result("duality", check_duality(h, &unit, a, side));
        }
    }
    Ok(s)
}

fn entwining(h: &WeakHomHopfAlgebra) -> Section {
    let mut s = Section::new("entwining");
    s.record_result("canonical entwining", canonical_psi(h).map(|(_, r)| r));
    s
}

fn entwining_metamorphic(h: &WeakHomHopfAlgebra, pairs: &[(String, YDModule)]) -> Result<Section> {
    let mut s = Section::new("entwining-metamorphic");
    let e = match canonical_psi(h) {
        Ok((e, _)) => e,
        Err(err) => {
            s.record_result("canonical entwining", Err(err));
            return Ok(s);
        }
    };
    for (name, m) in pairs {
        let a = check_yd_31(h, m)?.passed();
        let b = check_entwined_module(&e, &m.as_module(), &m.as_comodule())?.passed();
        s.record(agreement(
            format!("pair {name}"),
            "entwined-module",
            "compatibility condition ⇔ entwined module for the canonical entwining",
            ("compatibility", a),
            ("entwined", b),
        ));
    }
    Ok(s)
}

fn quasitriangular(inst: &Instance, corpus: &[Obj]) -> Option<Section> {
    let h = &inst.h;
    let q = inst.rmatrix.as_ref()?;
    let mut s = Section::new("quasitriangular");
    s.record_result("R-matrix", check_rmatrix(h, q));
    let mut induced = Vec::new();
    for a in corpus {
        let subject = format!("coaction induced on {}", a.name);
        match induced_coaction(h, q, &a.module.as_module()) {
            Ok(m) => {
                s.record_result(&subject, check_yd_31(h, &m));
                induced.push(YDObject::plain(format!("{}^R", a.name), m));
            }
            Err(e) => s.record_result(&subject, Err(e)),
        }
    }
    for a in &induced {
        for b in &induced {
            s.record_result("tensor coincidence", check_rep_tensor(h, q, a, b));
            s.record_result("R-braiding", check_rep_braiding(h, q, a, b));
        }
    }
    Some(s)
}

fn coquasitriangular(inst: &Instance, corpus: &[Obj]) -> Option<Section> {
    let h = &inst.h;
    let form = inst.sigma.as_ref()?;
    let mut s = Section::new("coquasitriangular");
    s.record_result("form", check_sigma(h, form));
    let mut induced = Vec::new();
    for a in corpus {
        let subject = format!("action induced on {}", a.name);
        match induced_action(h, form, &a.module.as_comodule()) {
            Ok(m) => {
                s.record_result(&subject, check_yd_31(h, &m));
                induced.push(YDObject::plain(format!("{}^σ", a.name), m));
            }
            Err(e) => s.record_result(&subject, Err(e)),
        }
    }
    for a in &induced {
        for b in &induced {
            let subject = format!("tilde tensor ({}, {})", a.name, b.name);
            s.record_result(&subject, tilde_tensor(h, a, b).and_then(|t| check_yd_31(h, &t.module)));
            s.record_result("tensor coincidence", check_corep_tensor(h, form, a, b));
            s.record_result("σ-braiding", check_corep_braiding(h, form, a, b));
            s.record_result("braiding on tilde tensor", check_braiding_in(h, Product::Tilde, a, b));
        }
    }
    let cache = TensorCache::new();
    for a in &induced {
        for b in &induced {
            for c in &induced {
                s.record_result("tilde hexagons", check_hexagons_cached(h, &cache, Product::Tilde, a, b, c));
            }
        }
    }
    Some(s)
}

fn mutation_sensitivity(h: &WeakHomHopfAlgebra) -> Result<Section> {
    let mut s = Section::new("mutation-sensitivity");
    for (name, mutant) in structure_mutations(h)? {
        let mut r = CheckReport::new(format!("mutation {name}"));
        let entry = match certify(&mutant) {
            Ok(rep) => match rep.failed().find(|e| !e.witnesses.is_empty()) {
                Some(e) => CheckEntry::fact(
                    "caught",
                    "mutation",
                    "some axiom fails with a witness",
                    true,
                    Some(format!("{name}: {} fails at {:?}", e.id, e.witnesses[0].tuple)),
                ),
                None => {
                    CheckEntry::fact("caught", "mutation", "some axiom fails with a witness", false, Some(format!("{name}: no witness")))
                }
            },
            Err(e) => CheckEntry::fact("caught", "mutation", "some axiom fails with a witness", false, Some(format!("{name}: {e}"))),
        };
        r.push(entry);
        s.record(r);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncertifiable_results_become_failing_facts() {
        let r = settle("thing", Err(Error::Structural("boom".into())));
        assert!(!r.passed());
        assert_eq!(r.entries[0].id, "evaluation");
        assert_eq!(r.entries[0].note.as_deref(), Some("boom"));
    }

    #[test]
    fn certification_errors_keep_their_report() {
        let mut inner = CheckReport::new("inner");
        inner.push(CheckEntry::fact("x", "t", "s", false, None));
        let r = settle("outer", Err(Error::Certification { what: "w".into(), report: Box::new(inner.clone()) }));
        assert_eq!(r, inner);
    }

    #[test]
    fn sections_tally_notes_and_keep_only_failures() {
        let mut s = Section::new("s");
        s.record(agreement("a".into(), "t", "p ⇔ q", ("p", true), ("q", true)));
        s.record(agreement("b".into(), "t", "p ⇔ q", ("p", true), ("q", false)));
        assert_eq!((s.checked, s.failed), (2, 1));
        assert_eq!(s.notes.get("p pass, q pass"), Some(&1));
        assert_eq!(s.failures.len(), 1);
        assert!(!s.passed());
    }

    #[test]
    fn default_selection_covers_every_section_in_order() {
        assert_eq!(Selection::default().sections, SECTIONS.map(String::from).to_vec());
        assert!(Selection::only(&["braiding"]).unwrap().wants("braiding"));
    }
}
