//! Entwining structures `ψ(a ⊗ c) = ψ_a ⊗ c^ψ` between a Hom-algebra and a Hom-coalgebra,
//! entwined modules, and the canonical entwining of a weak Hom-Hopf algebra.
//!
//! Sweedler-style notation is compiled to wirings as follows. In `ψ_a φ_b ⊗ c^{ψφ}` the map
//! labelled `ψ` acts first, on `a` and `c`; then `φ` acts on `b` and `c^ψ`. In
//! `a_{φψ} ⊗ c₁^ψ ⊗ c₂^φ` the map meeting `c₁` acts first.

use crate::error::{Error, Result};
use crate::hom::{check_comodule, check_module, HComodule, HModule, HomAlgebra, HomCoalgebra};
use crate::linmap::{LinearMap, Wiring};
use crate::report::{CheckEntry, CheckReport};
use crate::weak::WeakHomHopfAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningStructure {
    pub algebra: HomAlgebra,
    pub coalgebra: HomCoalgebra,
    pub psi: LinearMap,
}

impl EntwiningStructure {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra, psi: LinearMap) -> Result<Self> {
        let shape = [algebra.dim(), coalgebra.dim()];
        if psi.domain() != shape || psi.codomain() != shape {
            return Err(Error::shape("entwining map", &shape, psi.domain()));
        }
        Ok(EntwiningStructure { algebra, coalgebra, psi })
    }
}

/// Both sides of each entwining condition, in order: multiplicativity, unit, comultiplicativity, counit.
pub fn entwining_sides(e: &EntwiningStructure) -> Result<[(LinearMap, LinearMap); 4]> {
    let (a, c) = (&e.algebra, &e.coalgebra);
    let f = a.field();
    let (da, dc) = (a.dim(), c.dim());
    let psi = &e.psi;

    // ψ_{ab} ⊗ α(c^ψ) = ψ_a φ_b ⊗ α(c)^{ψφ}
    let mult_l = Wiring::start(f, &[da, da, dc]).apply(0, &a.mul)?.apply(0, psi)?.apply(1, &c.alpha)?.finish();
    let mult_r = Wiring::start(f, &[da, da, dc])
        .apply(2, &c.alpha)?
        .apply(1, psi)?
        .permute(&[0, 2, 1])?
        .apply(0, psi)?
        .permute(&[0, 2, 1])?
        .apply(0, &a.mul)?
        .finish();

    // ψ(1 ⊗ α(c)) = ε(c₁^ψ) ψ_1 ⊗ c₂
    let unit_l = Wiring::start(f, &[dc]).apply(0, &c.alpha)?.apply(0, &a.unit)?.apply(0, psi)?.finish();
    let unit_r = Wiring::start(f, &[dc]).apply(0, &c.comul)?.apply(0, &a.unit)?.apply(0, psi)?.apply(1, &c.counit)?.finish();

    // α(ψ_a) ⊗ Δ(c^ψ) = α(a)_{φψ} ⊗ c₁^ψ ⊗ c₂^φ
    let comul_l = Wiring::start(f, &[da, dc]).apply(0, psi)?.apply(0, &a.alpha)?.apply(1, &c.comul)?.finish();
    let comul_r = Wiring::start(f, &[da, dc])
        .apply(1, &c.comul)?
        .apply(0, &a.alpha)?
        .apply(0, psi)?
        .permute(&[0, 2, 1])?
        .apply(0, psi)?
        .permute(&[0, 2, 1])?
        .finish();

    // ε(c^ψ) α(ψ_a) = ε(c^ψ) a ψ_1
    let counit_l = Wiring::start(f, &[da, dc]).apply(0, psi)?.apply(1, &c.counit)?.apply(0, &a.alpha)?.finish();
    let counit_r = Wiring::start(f, &[da, dc]).apply(1, &a.unit)?.apply(1, psi)?.apply(2, &c.counit)?.apply(0, &a.mul)?.finish();
    Ok([(mult_l, mult_r), (unit_l, unit_r), (comul_l, comul_r), (counit_l, counit_r)])
}

pub fn check_entwining(e: &EntwiningStructure) -> Result<CheckReport> {
    let anchor = "entwining";
    let mut r = CheckReport::new("entwining structure");
    let [m, u, c, k] = entwining_sides(e)?;
    r.push(CheckEntry::compare("multiplicative", anchor, "ψ_{ab} ⊗ α(c^ψ) = ψ_a φ_b ⊗ α(c)^{ψφ}", &m.0, &m.1)?);
    r.push(CheckEntry::compare("unit", anchor, "ψ(1 ⊗ α(c)) = ε(c₁^ψ) ψ_1 ⊗ c₂", &u.0, &u.1)?);
    r.push(CheckEntry::compare("comultiplicative", anchor, "α(ψ_a) ⊗ Δ(c^ψ) = α(a)_{φψ} ⊗ c₁^ψ ⊗ c₂^φ", &c.0, &c.1)?);
    r.push(CheckEntry::compare("counit", anchor, "ε(c^ψ)α(ψ_a) = ε(c^ψ) a ψ_1", &k.0, &k.1)?);
    let aa = e.algebra.alpha.tensor(&e.coalgebra.alpha)?;
    r.push(CheckEntry::compare("alpha-natural", anchor, "ψ∘(α⊗α) = (α⊗α)∘ψ", &e.psi.compose(&aa)?, &aa.compose(&e.psi)?)?);
    Ok(r)
}

/// `φ(a ⊗ c) = α⁻¹(a₂₁) ⊗ (α⁻²(a₂₂)α⁻¹(c))S⁻¹(a₁)`, as printed.
pub fn printed_psi_map(h: &WeakHomHopfAlgebra) -> Result<LinearMap> {
    let d = h.dim();
    Ok(Wiring::start(h.field(), &[d, d])
        .apply(0, h.comul())?
        .apply(1, h.comul())?
        .permute(&[1, 2, 3, 0])?
        .apply(0, h.alpha_inv()?)?
        .apply(1, &h.alpha_pow(-2)?)?
        .apply(2, h.alpha_inv()?)?
        .apply(1, h.mul())?
        .apply(2, h.antipode_inv()?)?
        .apply(1, h.mul())?
        .finish())
}

/// `(α⁻¹⊗α⁻¹)∘φ`: with it, `ρ(a·m) = α(ψ_a)·m₀ ⊗ α(m₁^ψ)` is exactly the Yetter-Drinfeld condition.
pub fn canonical_psi_map(h: &WeakHomHopfAlgebra) -> Result<LinearMap> {
    let a = h.alpha_inv()?;
    a.tensor(a)?.compose(&printed_psi_map(h)?)
}

pub const PSI_DEVIATION: &str = "canonical entwining is (α⁻¹⊗α⁻¹)∘φ; the printed φ fails the entwining conditions once α ≠ id";

/// `(H, H, ψ)` with `ψ = (α⁻¹⊗α⁻¹)∘φ`, certified with [`check_entwining`]. The report notes
/// whether the printed `φ` is an entwining as well.
pub fn canonical_psi(h: &WeakHomHopfAlgebra) -> Result<(EntwiningStructure, CheckReport)> {
    let e = EntwiningStructure::new(h.algebra().clone(), h.coalgebra().clone(), canonical_psi_map(h)?)?;
    let mut report = check_entwining(&e)?;
    if !report.passed() {
        return Err(Error::Certification { what: "canonical entwining".into(), report: Box::new(report) });
    }
    let printed = EntwiningStructure::new(h.algebra().clone(), h.coalgebra().clone(), printed_psi_map(h)?)?;
    if !check_entwining(&printed)?.passed() {
        report.deviation(PSI_DEVIATION);
    }
    Ok((e, report))
}

/// Both sides of `ρ(a·m) = α(ψ_a)·m₀ ⊗ α(m₁^ψ)` as maps `A ⊗ M -> M ⊗ C`.
pub fn entwined_sides(e: &EntwiningStructure, action: &LinearMap, coaction: &LinearMap) -> Result<(LinearMap, LinearMap)> {
    let f = e.algebra.field();
    let k = coaction.dim_domain();
    let lhs = coaction.compose(action)?;
    let rhs = Wiring::start(f, &[e.algebra.dim(), k])
        .apply(1, coaction)?
        .permute(&[0, 2, 1])?
        .apply(0, &e.psi)?
        .apply(0, &e.algebra.alpha)?
        .apply(1, &e.coalgebra.alpha)?
        .permute(&[0, 2, 1])?
        .apply(0, action)?
        .finish();
    Ok((lhs, rhs))
}

pub fn check_entwined_module(e: &EntwiningStructure, m: &HModule, c: &HComodule) -> Result<CheckReport> {
    let mut r = CheckReport::new("entwined module");
    if m.alpha != c.alpha {
        return Err(Error::Structural("module and comodule twists differ".into()));
    }
    r.absorb("module", check_module(&e.algebra, m)?);
    r.absorb("comodule", check_comodule(&e.coalgebra, c)?);
    let (lhs, rhs) = entwined_sides(e, &m.action, &c.coaction)?;
    r.push(CheckEntry::compare("compatibility", "entwined-module", "ρ(a·m) = α(ψ_a)·m₀ ⊗ α(m₁^ψ)", &lhs, &rhs)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forge::{group_algebra, yau_twist, GroupPresentation};
    use crate::Field;

    #[test]
    fn canonical_and_printed_coincide_without_a_twist() {
        let h = group_algebra(Field::Rational, &GroupPresentation::cyclic(3).unwrap()).unwrap();
        assert_eq!(canonical_psi_map(&h).unwrap(), printed_psi_map(&h).unwrap());
        let (_, report) = canonical_psi(&h).unwrap();
        assert!(report.deviations.is_empty());
    }

    #[test]
    fn twisted_instances_record_the_printed_failure() {
        let g = GroupPresentation::cyclic(3).unwrap();
        let h = group_algebra(Field::Rational, &g).unwrap();
        let t = yau_twist(&h, &LinearMap::basis_map(Field::Rational, 3, g.inverse()).unwrap()).unwrap();
        let (_, report) = canonical_psi(&t).unwrap();
        assert_eq!(report.deviations, vec![PSI_DEVIATION.to_string()]);
    }

    #[test]
    fn psi_shape_is_validated() {
        let h = group_algebra(Field::Rational, &GroupPresentation::cyclic(2).unwrap()).unwrap();
        let wrong = LinearMap::identity(h.field(), &[2]);
        assert!(EntwiningStructure::new(h.algebra().clone(), h.coalgebra().clone(), wrong).is_err());
    }
}
