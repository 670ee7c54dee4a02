//! The JSON specification format.
//!
//! A document names structures over one ground field. Every structure map is a sparse list of
//! entries `[inputs..., outputs..., "p/q"]`: the value is the coefficient of the output basis
//! tuple in the image of the input basis tuple. Vectors have no inputs and bilinear forms no
//! outputs.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use whyd_core::entwining::EntwiningStructure;
use whyd_core::forge::{group_algebra, groupoid_algebra, yau_twist, GroupPresentation, GroupoidPresentation};
use whyd_core::hom::{HComodule, HModule, HomAlgebra, HomCoalgebra};
use whyd_core::linmap::{flatten, unflatten};
use whyd_core::qt::{RMatrix, SigmaForm};
use whyd_core::yd::YDModule;
use whyd_core::{Field, LinearMap, Scalar, WeakHomHopfAlgebra};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub version: u32,
    pub field: FieldSpec,
    pub objects: BTreeMap<String, ObjectSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime { prime: u64 },
}

impl FieldSpec {
    pub fn of(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Named("rational".into()),
            Field::Prime(p) => FieldSpec::Prime { prime: p },
        }
    }

    pub fn field(&self) -> Result<Field, CliError> {
        match self {
            FieldSpec::Named(n) if n == "rational" => Ok(Field::Rational),
            FieldSpec::Named(n) => Err(CliError::Document(format!("unknown field {n:?}"))),
            FieldSpec::Prime { prime } => Ok(Field::prime(*prime)?),
        }
    }
}

/// One sparse entry: basis indices followed by an exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub index: Vec<usize>,
    pub value: String,
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.index.len() + 1))?;
        for i in &self.index {
            seq.serialize_element(i)?;
        }
        seq.serialize_element(&self.value)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;
        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of basis indices ending in a value string \"p/q\"")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Entry, A::Error> {
                let mut items: Vec<serde_json::Value> = Vec::new();
                while let Some(v) = seq.next_element()? {
                    items.push(v);
                }
                let value = match items.pop() {
                    Some(serde_json::Value::String(s)) => s,
                    Some(serde_json::Value::Number(n)) if n.is_i64() => n.to_string(),
                    _ => return Err(de::Error::custom("entry must end in a value string")),
                };
                Field::Rational.parse(&value).map_err(de::Error::custom)?;
                let index = items
                    .iter()
                    .map(|v| v.as_u64().map(|x| x as usize).ok_or_else(|| de::Error::custom("basis index must be a non-negative integer")))
                    .collect::<Result<_, _>>()?;
                Ok(Entry { index, value })
            }
        }
        d.deserialize_seq(EntryVisitor)
    }
}

pub type Entries = Vec<Entry>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectSpec {
    Algebra {
        dim: usize,
        mul: Entries,
        unit: Entries,
        alpha: Entries,
    },
    Coalgebra {
        dim: usize,
        comul: Entries,
        counit: Entries,
        alpha: Entries,
    },
    WeakBialgebra {
        dim: usize,
        mul: Entries,
        unit: Entries,
        comul: Entries,
        counit: Entries,
        alpha: Entries,
    },
    WeakHopf {
        dim: usize,
        mul: Entries,
        unit: Entries,
        comul: Entries,
        counit: Entries,
        alpha: Entries,
        antipode: Entries,
    },
    Module {
        over: String,
        dim: usize,
        action: Entries,
        alpha: Entries,
    },
    Comodule {
        over: String,
        dim: usize,
        coaction: Entries,
        alpha: Entries,
    },
    YdModule {
        over: String,
        dim: usize,
        action: Entries,
        coaction: Entries,
        alpha: Entries,
    },
    RMatrix {
        over: String,
        r: Entries,
        r_bar: Entries,
    },
    SigmaForm {
        over: String,
        sigma: Entries,
        sigma_prime: Entries,
    },
    Entwining {
        algebra: String,
        coalgebra: String,
        psi: Entries,
    },
    /// A group by its Cayley table; as an algebra it stands for the group algebra, Yau-twisted
    /// by the basis permutation `twist` when one is given.
    Group {
        table: Vec<Vec<usize>>,
        identity: usize,
        inverse: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<Vec<usize>>,
    },
    /// A groupoid by its partial composition table `compose[g][h] = g∘h`.
    Groupoid {
        objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<Vec<usize>>,
    },
    /// A plain linear map, e.g. a braiding written out by `build`.
    Map {
        domain: Vec<usize>,
        codomain: Vec<usize>,
        entries: Entries,
    },
}

impl ObjectSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ObjectSpec::Algebra { .. } => "algebra",
            ObjectSpec::Coalgebra { .. } => "coalgebra",
            ObjectSpec::WeakBialgebra { .. } => "weak_bialgebra",
            ObjectSpec::WeakHopf { .. } => "weak_hopf",
            ObjectSpec::Module { .. } => "module",
            ObjectSpec::Comodule { .. } => "comodule",
            ObjectSpec::YdModule { .. } => "yd_module",
            ObjectSpec::RMatrix { .. } => "r_matrix",
            ObjectSpec::SigmaForm { .. } => "sigma_form",
            ObjectSpec::Entwining { .. } => "entwining",
            ObjectSpec::Group { .. } => "group",
            ObjectSpec::Groupoid { .. } => "groupoid",
            ObjectSpec::Map { .. } => "map",
        }
    }
}

/// Parses a document, reporting the line and column of syntax and value errors.
pub fn parse(text: &str) -> Result<SpecDocument, CliError> {
    let doc: SpecDocument =
        serde_json::from_str(text).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: parse_message(&e) })?;
    if doc.version != FORMAT_VERSION {
        return Err(CliError::Document(format!("unsupported format version {}", doc.version)));
    }
    doc.field.field()?;
    Ok(doc)
}

fn parse_message(e: &serde_json::Error) -> String {
    let full = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let bare = full.strip_suffix(&suffix).unwrap_or(&full);
    bare.strip_prefix("parse error: ").unwrap_or(bare).to_string()
}

pub fn load(path: &Path) -> Result<SpecDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// Pretty JSON with every array of scalars (an entry, a table row) kept on one line.
pub fn to_text(doc: &SpecDocument) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(|x| serde_json::to_string(x).expect("scalars serialize")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
            }
            out.push('\n');
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push('{');
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(x, depth + 1, out);
            }
            out.push('\n');
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

pub fn save(doc: &SpecDocument, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, to_text(doc)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Sparse entries of `f`, inputs first.
pub fn entries_of(f: &LinearMap) -> Entries {
    f.entries()
        .into_iter()
        .map(|(r, c, v)| {
            let mut index = unflatten(c, f.domain());
            index.extend(unflatten(r, f.codomain()));
            Entry { index, value: v.to_string() }
        })
        .collect()
}

pub fn map_from(field: Field, domain: &[usize], codomain: &[usize], entries: &[Entry], what: &str) -> Result<LinearMap, CliError> {
    let arity = domain.len() + codomain.len();
    let mut triples = Vec::with_capacity(entries.len());
    for (k, e) in entries.iter().enumerate() {
        let bad = |msg: String| CliError::Document(format!("{what}, entry {k}: {msg}"));
        if e.index.len() != arity {
            return Err(bad(format!("expected {arity} indices, found {}", e.index.len())));
        }
        let (ins, outs) = e.index.split_at(domain.len());
        for (i, (&x, &n)) in ins.iter().chain(outs).zip(domain.iter().chain(codomain)).enumerate() {
            if x >= n {
                return Err(bad(format!("index {i} is {x}, outside 0..{n}")));
            }
        }
        let v: Scalar = field.parse(&e.value).map_err(|err| bad(err.to_string()))?;
        triples.push((flatten(outs, codomain), flatten(ins, domain), v));
    }
    Ok(LinearMap::from_entries(field, domain, codomain, triples)?)
}

/// A loaded document with its field, resolving names to checked structures.
pub struct Workspace {
    pub doc: SpecDocument,
    pub field: Field,
}

impl Workspace {
    pub fn new(doc: SpecDocument) -> Result<Self, CliError> {
        let field = doc.field.field()?;
        let ws = Workspace { doc, field };
        ws.validate()?;
        Ok(ws)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::new(load(path)?)
    }

    /// Builds every object once so that dangling names and inconsistent dimensions are load errors.
    fn validate(&self) -> Result<(), CliError> {
        for (name, obj) in &self.doc.objects {
            match obj {
                ObjectSpec::Algebra { .. } => drop(self.algebra(name)?),
                ObjectSpec::Coalgebra { .. } => drop(self.coalgebra(name)?),
                ObjectSpec::WeakBialgebra { .. } | ObjectSpec::WeakHopf { .. } => drop(self.hopf(name)?),
                ObjectSpec::Group { .. } | ObjectSpec::Groupoid { .. } => drop(self.hopf(name)?),
                ObjectSpec::Module { .. } => drop(self.module(name)?),
                ObjectSpec::Comodule { .. } => drop(self.comodule(name)?),
                ObjectSpec::YdModule { .. } => drop(self.yd_module(name)?),
                ObjectSpec::RMatrix { .. } => drop(self.rmatrix(name)?),
                ObjectSpec::SigmaForm { .. } => drop(self.sigma(name)?),
                ObjectSpec::Entwining { .. } => drop(self.entwining(name)?),
                ObjectSpec::Map { domain, codomain, entries } => drop(map_from(self.field, domain, codomain, entries, name)?),
            }
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&ObjectSpec, CliError> {
        self.doc.objects.get(name).ok_or_else(|| CliError::Document(format!("no object named {name:?}")))
    }

    /// Names of objects of the given kinds, in document order.
    pub fn names_of(&self, kinds: &[&str]) -> Vec<&str> {
        self.doc.objects.iter().filter(|(_, o)| kinds.contains(&o.kind())).map(|(n, _)| n.as_str()).collect()
    }

    /// The named object, or the only object of the given kinds when `name` is absent.
    pub fn pick<'a>(&'a self, name: Option<&'a str>, kinds: &[&str]) -> Result<&'a str, CliError> {
        if let Some(n) = name {
            return Ok(n);
        }
        match self.names_of(kinds).as_slice() {
            [one] => Ok(one),
            [] => Err(CliError::Usage(format!("the document has no {} object", kinds.join("/")))),
            many => Err(CliError::Usage(format!("several candidates ({}); name one", many.join(", ")))),
        }
    }

    fn wrong_kind(name: &str, obj: &ObjectSpec, wanted: &str) -> CliError {
        CliError::Document(format!("{name:?} is a {}, not {wanted}", obj.kind()))
    }

    fn square(&self, d: usize, e: &[Entry], what: &str) -> Result<LinearMap, CliError> {
        map_from(self.field, &[d], &[d], e, what)
    }

    fn algebra_parts(&self, name: &str, d: usize, mul: &[Entry], unit: &[Entry], alpha: &[Entry]) -> Result<HomAlgebra, CliError> {
        let f = self.field;
        Ok(HomAlgebra::new(
            map_from(f, &[d, d], &[d], mul, &format!("{name}.mul"))?,
            map_from(f, &[], &[d], unit, &format!("{name}.unit"))?,
            self.square(d, alpha, &format!("{name}.alpha"))?,
        )?)
    }

    fn coalgebra_parts(&self, name: &str, d: usize, comul: &[Entry], counit: &[Entry], alpha: &[Entry]) -> Result<HomCoalgebra, CliError> {
        let f = self.field;
        Ok(HomCoalgebra::new(
            map_from(f, &[d], &[d, d], comul, &format!("{name}.comul"))?,
            map_from(f, &[d], &[], counit, &format!("{name}.counit"))?,
            self.square(d, alpha, &format!("{name}.alpha"))?,
        )?)
    }

    pub fn algebra(&self, name: &str) -> Result<HomAlgebra, CliError> {
        match self.get(name)? {
            ObjectSpec::Algebra { dim, mul, unit, alpha } => self.algebra_parts(name, *dim, mul, unit, alpha),
            ObjectSpec::WeakBialgebra { .. } | ObjectSpec::WeakHopf { .. } | ObjectSpec::Group { .. } | ObjectSpec::Groupoid { .. } => {
                Ok(self.hopf(name)?.algebra().clone())
            }
            other => Err(Self::wrong_kind(name, other, "an algebra")),
        }
    }

    pub fn coalgebra(&self, name: &str) -> Result<HomCoalgebra, CliError> {
        match self.get(name)? {
            ObjectSpec::Coalgebra { dim, comul, counit, alpha } => self.coalgebra_parts(name, *dim, comul, counit, alpha),
            ObjectSpec::WeakBialgebra { .. } | ObjectSpec::WeakHopf { .. } | ObjectSpec::Group { .. } | ObjectSpec::Groupoid { .. } => {
                Ok(self.hopf(name)?.coalgebra().clone())
            }
            other => Err(Self::wrong_kind(name, other, "a coalgebra")),
        }
    }

    /// A weak Hom-bialgebra or weak Hom-Hopf algebra. A bialgebra is given the zero antipode.
    /// Group and groupoid presentations stand for their (twisted) algebras.
    pub fn hopf(&self, name: &str) -> Result<WeakHomHopfAlgebra, CliError> {
        let f = self.field;
        match self.get(name)? {
            ObjectSpec::WeakHopf { dim, mul, unit, comul, counit, alpha, antipode } => Ok(WeakHomHopfAlgebra::from_parts(
                self.algebra_parts(name, *dim, mul, unit, alpha)?,
                self.coalgebra_parts(name, *dim, comul, counit, alpha)?,
                self.square(*dim, antipode, &format!("{name}.antipode"))?,
            )?),
            ObjectSpec::WeakBialgebra { dim, mul, unit, comul, counit, alpha } => Ok(WeakHomHopfAlgebra::from_parts(
                self.algebra_parts(name, *dim, mul, unit, alpha)?,
                self.coalgebra_parts(name, *dim, comul, counit, alpha)?,
                LinearMap::zero(f, &[*dim], &[*dim]),
            )?),
            ObjectSpec::Group { table, identity, inverse, twist } => {
                let g = GroupPresentation::new(table.clone(), *identity, inverse.clone())?;
                twisted(group_algebra(f, &g)?, twist.as_deref())
            }
            ObjectSpec::Groupoid { objects, source, target, compose, twist } => {
                let g = GroupoidPresentation::new(*objects, source.clone(), target.clone(), compose.clone())?;
                twisted(groupoid_algebra(f, &g)?, twist.as_deref())
            }
            other => Err(Self::wrong_kind(name, other, "a weak Hom-bialgebra")),
        }
    }

    /// The name of the structure a module-like object lives over.
    pub fn base_of(&self, name: &str) -> Result<&str, CliError> {
        match self.get(name)? {
            ObjectSpec::Module { over, .. }
            | ObjectSpec::Comodule { over, .. }
            | ObjectSpec::YdModule { over, .. }
            | ObjectSpec::RMatrix { over, .. }
            | ObjectSpec::SigmaForm { over, .. } => Ok(over),
            ObjectSpec::Entwining { algebra, .. } => Ok(algebra),
            other => Err(Self::wrong_kind(name, other, "a structure over another object")),
        }
    }

    fn base_dim(&self, over: &str) -> Result<usize, CliError> {
        match self.get(over)? {
            ObjectSpec::Algebra { dim, .. }
            | ObjectSpec::Coalgebra { dim, .. }
            | ObjectSpec::WeakBialgebra { dim, .. }
            | ObjectSpec::WeakHopf { dim, .. } => Ok(*dim),
            ObjectSpec::Group { table, .. } => Ok(table.len()),
            ObjectSpec::Groupoid { source, .. } => Ok(source.len()),
            other => Err(Self::wrong_kind(over, other, "an algebra or coalgebra")),
        }
    }

    pub fn module(&self, name: &str) -> Result<HModule, CliError> {
        let f = self.field;
        match self.get(name)? {
            ObjectSpec::Module { over, dim, action, alpha } | ObjectSpec::YdModule { over, dim, action, alpha, .. } => {
                let d = self.base_dim(over)?;
                Ok(HModule::new(
                    d,
                    map_from(f, &[d, *dim], &[*dim], action, &format!("{name}.action"))?,
                    self.square(*dim, alpha, &format!("{name}.alpha"))?,
                )?)
            }
            other => Err(Self::wrong_kind(name, other, "a module")),
        }
    }

    pub fn comodule(&self, name: &str) -> Result<HComodule, CliError> {
        let f = self.field;
        match self.get(name)? {
            ObjectSpec::Comodule { over, dim, coaction, alpha } | ObjectSpec::YdModule { over, dim, coaction, alpha, .. } => {
                let d = self.base_dim(over)?;
                Ok(HComodule::new(
                    d,
                    map_from(f, &[*dim], &[*dim, d], coaction, &format!("{name}.coaction"))?,
                    self.square(*dim, alpha, &format!("{name}.alpha"))?,
                )?)
            }
            other => Err(Self::wrong_kind(name, other, "a comodule")),
        }
    }

    pub fn yd_module(&self, name: &str) -> Result<YDModule, CliError> {
        match self.get(name)? {
            ObjectSpec::YdModule { over, .. } => {
                let h = self.hopf(over)?;
                let m = self.module(name)?;
                let c = self.comodule(name)?;
                Ok(YDModule::new(&h, m.action, c.coaction, m.alpha)?)
            }
            other => Err(Self::wrong_kind(name, other, "a yd_module")),
        }
    }

    pub fn rmatrix(&self, name: &str) -> Result<RMatrix, CliError> {
        match self.get(name)? {
            ObjectSpec::RMatrix { over, r, r_bar } => {
                let h = self.hopf(over)?;
                let d = h.dim();
                Ok(RMatrix::new(
                    &h,
                    map_from(self.field, &[], &[d, d], r, &format!("{name}.r"))?,
                    map_from(self.field, &[], &[d, d], r_bar, &format!("{name}.r_bar"))?,
                )?)
            }
            other => Err(Self::wrong_kind(name, other, "an r_matrix")),
        }
    }

    pub fn sigma(&self, name: &str) -> Result<SigmaForm, CliError> {
        match self.get(name)? {
            ObjectSpec::SigmaForm { over, sigma, sigma_prime } => {
                let h = self.hopf(over)?;
                let d = h.dim();
                Ok(SigmaForm::new(
                    &h,
                    map_from(self.field, &[d, d], &[], sigma, &format!("{name}.sigma"))?,
                    map_from(self.field, &[d, d], &[], sigma_prime, &format!("{name}.sigma_prime"))?,
                )?)
            }
            other => Err(Self::wrong_kind(name, other, "a sigma_form")),
        }
    }

    pub fn entwining(&self, name: &str) -> Result<EntwiningStructure, CliError> {
        match self.get(name)? {
            ObjectSpec::Entwining { algebra, coalgebra, psi } => {
                let a = self.algebra(algebra)?;
                let c = self.coalgebra(coalgebra)?;
                let shape = [a.dim(), c.dim()];
                let psi = map_from(self.field, &shape, &shape, psi, &format!("{name}.psi"))?;
                Ok(EntwiningStructure::new(a, c, psi)?)
            }
            other => Err(Self::wrong_kind(name, other, "an entwining")),
        }
    }
}

fn twisted(h: WeakHomHopfAlgebra, twist: Option<&[usize]>) -> Result<WeakHomHopfAlgebra, CliError> {
    match twist {
        None => Ok(h),
        Some(beta) => Ok(yau_twist(&h, &LinearMap::basis_map(h.field(), h.dim(), beta)?)?),
    }
}

pub fn hopf_spec(h: &WeakHomHopfAlgebra) -> ObjectSpec {
    ObjectSpec::WeakHopf {
        dim: h.dim(),
        mul: entries_of(h.mul()),
        unit: entries_of(h.unit()),
        comul: entries_of(h.comul()),
        counit: entries_of(h.counit()),
        alpha: entries_of(h.alpha()),
        antipode: entries_of(h.antipode()),
    }
}

pub fn yd_spec(over: &str, m: &YDModule) -> ObjectSpec {
    ObjectSpec::YdModule {
        over: over.into(),
        dim: m.dim(),
        action: entries_of(&m.action),
        coaction: entries_of(&m.coaction),
        alpha: entries_of(&m.alpha),
    }
}

pub fn rmatrix_spec(over: &str, q: &RMatrix) -> ObjectSpec {
    ObjectSpec::RMatrix { over: over.into(), r: entries_of(&q.r), r_bar: entries_of(&q.r_bar) }
}

pub fn sigma_spec(over: &str, s: &SigmaForm) -> ObjectSpec {
    ObjectSpec::SigmaForm { over: over.into(), sigma: entries_of(&s.sigma), sigma_prime: entries_of(&s.sigma_prime) }
}

pub fn map_spec(f: &LinearMap) -> ObjectSpec {
    ObjectSpec::Map { domain: f.domain().to_vec(), codomain: f.codomain().to_vec(), entries: entries_of(f) }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KZ2: &str = r#"{
  "version": 1,
  "field": "rational",
  "objects": {
    "g": {"kind": "group", "table": [[0, 1], [1, 0]], "identity": 0, "inverse": [0, 1]},
    "f": {"kind": "map", "domain": [2], "codomain": [2], "entries": [[0, 1, "1/2"], [1, 0, -3]]}
  }
}"#;

    #[test]
    fn entries_accept_strings_and_integers() {
        let doc = parse(KZ2).unwrap();
        match &doc.objects["f"] {
            ObjectSpec::Map { entries, .. } => {
                assert_eq!(entries[0], Entry { index: vec![0, 1], value: "1/2".into() });
                assert_eq!(entries[1].value, "-3");
            }
            other => panic!("unexpected {}", other.kind()),
        }
    }

    #[test]
    fn compact_text_keeps_scalar_arrays_on_one_line_and_round_trips() {
        let doc = parse(KZ2).unwrap();
        let text = to_text(&doc);
        assert!(text.contains("[0, 1, \"1/2\"]"), "{text}");
        assert!(text.contains("\"table\": [\n"), "{text}");
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn bad_values_and_fields_are_rejected() {
        let bad = KZ2.replace("\"1/2\"", "\"x\"");
        match parse(&bad) {
            Err(CliError::Parse { message, .. }) => assert!(message.contains("\"x\""), "{message}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
        let negative = KZ2.replace("[1, 0, -3]", "[-1, 0, 1]");
        assert!(matches!(parse(&negative), Err(CliError::Parse { .. })));
        let field = KZ2.replace("\"rational\"", "\"complex\"");
        assert!(matches!(parse(&field), Err(CliError::Document(_))));
        assert_eq!(FieldSpec::of(Field::prime(5).unwrap()).field().unwrap(), Field::prime(5).unwrap());
    }

    #[test]
    fn maps_survive_entries_and_back() {
        let f = Field::Rational;
        let m = LinearMap::from_entries(f, &[2, 3], &[2], [(1, 5, f.ratio(-2, 3).unwrap()), (0, 0, f.one())]).unwrap();
        let entries = entries_of(&m);
        assert_eq!(entries[0].index, vec![0, 0, 0]);
        assert_eq!(map_from(f, &[2, 3], &[2], &entries, "m").unwrap(), m);
        assert!(map_from(f, &[2], &[2], &entries, "m").is_err());
    }

    #[test]
    fn workspace_picks_the_only_candidate_or_asks() {
        let ws = Workspace::new(parse(KZ2).unwrap()).unwrap();
        assert_eq!(ws.pick(None, &["group"]).unwrap(), "g");
        assert!(matches!(ws.pick(None, &["r_matrix"]), Err(CliError::Usage(_))));
        assert!(matches!(ws.get("nope"), Err(CliError::Document(_))));
        assert_eq!(ws.hopf("g").unwrap().dim(), 2);
    }
}
