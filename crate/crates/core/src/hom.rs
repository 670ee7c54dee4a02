//! Hom-algebras, Hom-coalgebras and their (co)modules, with exhaustive axiom checks.
//!
//! Every axiom is multilinear, so it is enough to compare both sides on basis tuples;
//! the checks build both sides as maps and compare them column by column.

use crate::error::{Error, Result};
use crate::linmap::{LinearMap, Wiring};
use crate::report::{CheckEntry, CheckReport};
use crate::scalar::Field;

fn expect_shape(op: &'static str, got: &[usize], want: &[usize]) -> Result<()> {
    if got != want {
        return Err(Error::shape(op, want, got));
    }
    Ok(())
}

fn invertibility(id: &str, anchor: &str, alpha: &LinearMap) -> CheckEntry {
    match alpha.invert() {
        Ok(_) => CheckEntry::fact(id, anchor, "structure map is bijective", true, None),
        Err(e) => CheckEntry::fact(id, anchor, "structure map is bijective", false, Some(e.to_string())),
    }
}

/// `(A, μ, η, α)`; `unit` is the map `k -> A` picking out `1_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    pub mul: LinearMap,
    pub unit: LinearMap,
    pub alpha: LinearMap,
}

impl HomAlgebra {
    pub fn new(mul: LinearMap, unit: LinearMap, alpha: LinearMap) -> Result<Self> {
        let d = alpha.dim_domain();
        expect_shape("Hom-algebra twist", alpha.codomain(), &[d])?;
        expect_shape("Hom-algebra twist", alpha.domain(), &[d])?;
        expect_shape("multiplication domain", mul.domain(), &[d, d])?;
        expect_shape("multiplication codomain", mul.codomain(), &[d])?;
        expect_shape("unit domain", unit.domain(), &[])?;
        expect_shape("unit codomain", unit.codomain(), &[d])?;
        for m in [&mul, &unit] {
            if m.field() != alpha.field() {
                return Err(Error::FieldMismatch(alpha.field(), m.field()));
            }
        }
        Ok(HomAlgebra { mul, unit, alpha })
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim_domain()
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }
}

/// `(C, Δ, ε, α)`; `counit` is the covector `C -> k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    pub comul: LinearMap,
    pub counit: LinearMap,
    pub alpha: LinearMap,
}

impl HomCoalgebra {
    pub fn new(comul: LinearMap, counit: LinearMap, alpha: LinearMap) -> Result<Self> {
        let d = alpha.dim_domain();
        expect_shape("Hom-coalgebra twist", alpha.codomain(), &[d])?;
        expect_shape("Hom-coalgebra twist", alpha.domain(), &[d])?;
        expect_shape("comultiplication domain", comul.domain(), &[d])?;
        expect_shape("comultiplication codomain", comul.codomain(), &[d, d])?;
        expect_shape("counit domain", counit.domain(), &[d])?;
        expect_shape("counit codomain", counit.codomain(), &[])?;
        for m in [&comul, &counit] {
            if m.field() != alpha.field() {
                return Err(Error::FieldMismatch(alpha.field(), m.field()));
            }
        }
        Ok(HomCoalgebra { comul, counit, alpha })
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim_domain()
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }
}

/// Left module `(M, θ, α_M)` with `θ: A ⊗ M -> M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub action: LinearMap,
    pub alpha: LinearMap,
}

impl HModule {
    pub fn new(algebra_dim: usize, action: LinearMap, alpha: LinearMap) -> Result<Self> {
        let m = alpha.dim_domain();
        expect_shape("module twist", alpha.codomain(), &[m])?;
        expect_shape("module twist", alpha.domain(), &[m])?;
        expect_shape("action domain", action.domain(), &[algebra_dim, m])?;
        expect_shape("action codomain", action.codomain(), &[m])?;
        if action.field() != alpha.field() {
            return Err(Error::FieldMismatch(alpha.field(), action.field()));
        }
        Ok(HModule { action, alpha })
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim_domain()
    }
}

/// Right comodule `(M, ρ, α_M)` with `ρ: M -> M ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComodule {
    pub coaction: LinearMap,
    pub alpha: LinearMap,
}

impl HComodule {
    pub fn new(coalgebra_dim: usize, coaction: LinearMap, alpha: LinearMap) -> Result<Self> {
        let m = alpha.dim_domain();
        expect_shape("comodule twist", alpha.codomain(), &[m])?;
        expect_shape("comodule twist", alpha.domain(), &[m])?;
        expect_shape("coaction domain", coaction.domain(), &[m])?;
        expect_shape("coaction codomain", coaction.codomain(), &[m, coalgebra_dim])?;
        if coaction.field() != alpha.field() {
            return Err(Error::FieldMismatch(alpha.field(), coaction.field()));
        }
        Ok(HComodule { coaction, alpha })
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim_domain()
    }
}

pub fn check_hom_algebra(a: &HomAlgebra) -> Result<CheckReport> {
    let f = a.field();
    let d = a.dim();
    let id = LinearMap::identity(f, &[d]);
    let anchor = "hom-algebra";
    let mut r = CheckReport::new("Hom-algebra");
    r.push(invertibility("alpha-invertible", anchor, &a.alpha));

    let lhs = a.alpha.compose(&a.mul)?;
    let rhs = a.mul.compose(&a.alpha.tensor(&a.alpha)?)?;
    r.push(CheckEntry::compare("alpha-multiplicative", anchor, "α(ab) = α(a)α(b)", &lhs, &rhs)?);

    let lhs = a.mul.compose(&a.alpha.tensor(&a.mul)?)?;
    let rhs = a.mul.compose(&a.mul.tensor(&a.alpha)?)?;
    r.push(CheckEntry::compare("hom-associativity", anchor, "α(a)(bc) = (ab)α(c)", &lhs, &rhs)?);

    r.push(CheckEntry::compare("unit-fixed", anchor, "α(1) = 1", &a.alpha.compose(&a.unit)?, &a.unit)?);

    let left = a.mul.compose(&a.unit.tensor(&id)?)?;
    let right = a.mul.compose(&id.tensor(&a.unit)?)?;
    r.push(CheckEntry::compare("left-unit", anchor, "1a = α(a)", &left, &a.alpha)?);
    r.push(CheckEntry::compare("right-unit", anchor, "a1 = α(a)", &right, &a.alpha)?);
    Ok(r)
}

pub fn check_hom_coalgebra(c: &HomCoalgebra) -> Result<CheckReport> {
    let f = c.field();
    let d = c.dim();
    let id = LinearMap::identity(f, &[d]);
    let anchor = "hom-coalgebra";
    let mut r = CheckReport::new("Hom-coalgebra");
    r.push(invertibility("alpha-invertible", anchor, &c.alpha));

    let lhs = c.comul.compose(&c.alpha)?;
    let rhs = c.alpha.tensor(&c.alpha)?.compose(&c.comul)?;
    r.push(CheckEntry::compare("alpha-comultiplicative", anchor, "Δ(α(c)) = α(c₁) ⊗ α(c₂)", &lhs, &rhs)?);

    let lhs = c.alpha.tensor(&c.comul)?.compose(&c.comul)?;
    let rhs = c.comul.tensor(&c.alpha)?.compose(&c.comul)?;
    r.push(CheckEntry::compare("hom-coassociativity", anchor, "α(c₁) ⊗ Δ(c₂) = Δ(c₁) ⊗ α(c₂)", &lhs, &rhs)?);

    r.push(CheckEntry::compare("counit-invariant", anchor, "ε∘α = ε", &c.counit.compose(&c.alpha)?, &c.counit)?);

    let left = c.counit.tensor(&id)?.compose(&c.comul)?;
    let right = id.tensor(&c.counit)?.compose(&c.comul)?;
    r.push(CheckEntry::compare("left-counit", anchor, "ε(c₁)c₂ = α(c)", &left, &c.alpha)?);
    r.push(CheckEntry::compare("right-counit", anchor, "c₁ε(c₂) = α(c)", &right, &c.alpha)?);
    Ok(r)
}

pub fn check_module(a: &HomAlgebra, m: &HModule) -> Result<CheckReport> {
    let f = a.field();
    expect_shape("module over algebra", m.action.domain(), &[a.dim(), m.dim()])?;
    if m.alpha.field() != f {
        return Err(Error::FieldMismatch(f, m.alpha.field()));
    }
    let anchor = "module";
    let mut r = CheckReport::new("module");
    r.push(invertibility("alpha-invertible", anchor, &m.alpha));

    let lhs = m.alpha.compose(&m.action)?;
    let rhs = m.action.compose(&a.alpha.tensor(&m.alpha)?)?;
    r.push(CheckEntry::compare("alpha-equivariant", anchor, "α_M(a·m) = α(a)·α_M(m)", &lhs, &rhs)?);

    let lhs = m.action.compose(&a.alpha.tensor(&m.action)?)?;
    let rhs = m.action.compose(&a.mul.tensor(&m.alpha)?)?;
    r.push(CheckEntry::compare("hom-action", anchor, "α(a)·(b·m) = (ab)·α_M(m)", &lhs, &rhs)?);

    let lhs = m.action.compose(&a.unit.tensor(&LinearMap::identity(f, &[m.dim()]))?)?;
    r.push(CheckEntry::compare("unit-action", anchor, "1·m = α_M(m)", &lhs, &m.alpha)?);
    Ok(r)
}

pub fn check_comodule(c: &HomCoalgebra, m: &HComodule) -> Result<CheckReport> {
    let f = c.field();
    expect_shape("comodule over coalgebra", m.coaction.codomain(), &[m.dim(), c.dim()])?;
    if m.alpha.field() != f {
        return Err(Error::FieldMismatch(f, m.alpha.field()));
    }
    let anchor = "comodule";
    let mut r = CheckReport::new("comodule");
    r.push(invertibility("alpha-invertible", anchor, &m.alpha));

    let lhs = m.coaction.compose(&m.alpha)?;
    let rhs = m.alpha.tensor(&c.alpha)?.compose(&m.coaction)?;
    r.push(CheckEntry::compare("alpha-equivariant", anchor, "ρ(α_M(m)) = α_M(m₀) ⊗ α(m₁)", &lhs, &rhs)?);

    let lhs = m.alpha.tensor(&c.comul)?.compose(&m.coaction)?;
    let rhs = m.coaction.tensor(&c.alpha)?.compose(&m.coaction)?;
    r.push(CheckEntry::compare("hom-coaction", anchor, "α_M(m₀) ⊗ Δ(m₁) = ρ(m₀) ⊗ α(m₁)", &lhs, &rhs)?);

    let lhs = LinearMap::identity(f, &[m.dim()]).tensor(&c.counit)?.compose(&m.coaction)?;
    r.push(CheckEntry::compare("counit-coaction", anchor, "m₀ε(m₁) = α_M(m)", &lhs, &m.alpha)?);
    Ok(r)
}

/// Source and target structures of a morphism check.
#[derive(Clone, Copy, Debug)]
pub enum MorphismEnds<'a> {
    Algebra(&'a HomAlgebra, &'a HomAlgebra),
    Coalgebra(&'a HomCoalgebra, &'a HomCoalgebra),
    Module(&'a HModule, &'a HModule),
    Comodule(&'a HComodule, &'a HComodule),
}

impl MorphismEnds<'_> {
    pub fn kind(&self) -> &'static str {
        match self {
            MorphismEnds::Algebra(..) => "algebra",
            MorphismEnds::Coalgebra(..) => "coalgebra",
            MorphismEnds::Module(..) => "module",
            MorphismEnds::Comodule(..) => "comodule",
        }
    }

    fn alphas(&self) -> (&LinearMap, &LinearMap) {
        match self {
            MorphismEnds::Algebra(s, t) => (&s.alpha, &t.alpha),
            MorphismEnds::Coalgebra(s, t) => (&s.alpha, &t.alpha),
            MorphismEnds::Module(s, t) => (&s.alpha, &t.alpha),
            MorphismEnds::Comodule(s, t) => (&s.alpha, &t.alpha),
        }
    }
}

pub fn check_morphism(f: &LinearMap, ends: MorphismEnds<'_>) -> Result<CheckReport> {
    let (sa, ta) = ends.alphas();
    expect_shape("morphism domain", f.domain(), sa.domain())?;
    expect_shape("morphism codomain", f.codomain(), ta.domain())?;
    let anchor = "morphism";
    let mut r = CheckReport::new(format!("{} morphism", ends.kind()));
    let lhs = ta.compose(f)?;
    let rhs = f.compose(sa)?;
    r.push(CheckEntry::compare("alpha-intertwining", anchor, "α_T∘f = f∘α_S", &lhs, &rhs)?);
    match ends {
        MorphismEnds::Algebra(s, t) => {
            r.push(CheckEntry::compare("unit", anchor, "f(1) = 1", &f.compose(&s.unit)?, &t.unit)?);
            let lhs = t.mul.compose(&f.tensor(f)?)?;
            let rhs = f.compose(&s.mul)?;
            r.push(CheckEntry::compare("multiplicative", anchor, "μ_T∘(f⊗f) = f∘μ_S", &lhs, &rhs)?);
        }
        MorphismEnds::Coalgebra(s, t) => {
            r.push(CheckEntry::compare("counit", anchor, "ε_T∘f = ε_S", &t.counit.compose(f)?, &s.counit)?);
            let lhs = t.comul.compose(f)?;
            let rhs = f.tensor(f)?.compose(&s.comul)?;
            r.push(CheckEntry::compare("comultiplicative", anchor, "Δ_T∘f = (f⊗f)∘Δ_S", &lhs, &rhs)?);
        }
        MorphismEnds::Module(s, t) => {
            let h = s.action.domain()[0];
            let lhs = Wiring::start(f.field(), &[h, f.dim_domain()]).apply(1, f)?.apply(0, &t.action)?.finish();
            let rhs = f.compose(&s.action)?;
            r.push(CheckEntry::compare("linear", anchor, "θ_T∘(id⊗f) = f∘θ_S", &lhs, &rhs)?);
        }
        MorphismEnds::Comodule(s, t) => {
            let h = s.coaction.codomain()[1];
            let lhs = t.coaction.compose(f)?;
            let rhs = f.tensor(&LinearMap::identity(f.field(), &[h]))?.compose(&s.coaction)?;
            r.push(CheckEntry::compare("colinear", anchor, "ρ_T∘f = (f⊗id)∘ρ_S", &lhs, &rhs)?);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    /// The two-dimensional algebra k[x]/(x²) with twist `alpha`.
    fn dual_numbers(alpha: LinearMap) -> HomAlgebra {
        let f = q();
        let mul = LinearMap::from_entries(f, &[2, 2], &[2], [(0, 0, f.one()), (1, 1, f.one()), (1, 2, f.one())]).unwrap();
        let unit = LinearMap::from_entries(f, &[], &[2], [(0, 0, f.one())]).unwrap();
        HomAlgebra::new(mul, unit, alpha).unwrap()
    }

    #[test]
    fn shapes_are_validated_on_construction() {
        let f = q();
        let id = LinearMap::identity(f, &[2]);
        let bad_unit = LinearMap::identity(f, &[2]);
        assert!(matches!(HomAlgebra::new(LinearMap::zero(f, &[2, 2], &[2]), bad_unit, id.clone()), Err(Error::ShapeMismatch { .. })));
        assert!(HomCoalgebra::new(LinearMap::zero(f, &[2], &[2]), LinearMap::zero(f, &[2], &[]), id).is_err());
    }

    #[test]
    fn untwisted_multiplication_needs_the_identity_twist() {
        let f = q();
        assert!(check_hom_algebra(&dual_numbers(LinearMap::identity(f, &[2]))).unwrap().passed());
        let scaled = LinearMap::from_entries(f, &[2], &[2], [(0, 0, f.one()), (1, 1, f.int(3))]).unwrap();
        let r = check_hom_algebra(&dual_numbers(scaled)).unwrap();
        let failed: Vec<&str> = r.failed().map(|e| e.id.as_str()).collect();
        assert_eq!(failed, vec!["hom-associativity", "left-unit", "right-unit"]);
        let doubling = LinearMap::identity(f, &[2]).scale(&f.int(2));
        let r = check_hom_algebra(&dual_numbers(doubling)).unwrap();
        assert!(!r.passed());
        assert!(r.failed().any(|e| e.id == "unit-fixed"));
    }

    #[test]
    fn singular_twist_is_reported_not_rejected() {
        let f = q();
        let e = invertibility("alpha-invertible", "t", &LinearMap::zero(f, &[2], &[2]));
        assert!(!e.passed);
        assert!(e.note.is_some());
    }
}
