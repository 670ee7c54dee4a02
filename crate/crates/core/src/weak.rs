//! Weak Hom-bialgebras and weak Hom-Hopf algebras.

use crate::error::{Error, Result};
use crate::hom::{check_hom_algebra, check_hom_coalgebra, HomAlgebra, HomCoalgebra};
use crate::linmap::{LinearMap, Wiring};
use crate::report::{CheckEntry, CheckReport};
use crate::scalar::Field;
use crate::subspace::Subspace;

/// The four counital maps and their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitalMaps {
    pub eps_t: LinearMap,
    pub eps_s: LinearMap,
    pub eps_t_hat: LinearMap,
    pub eps_s_hat: LinearMap,
    pub h_t: Subspace,
    pub h_s: Subspace,
    pub h_t_hat: Subspace,
    pub h_s_hat: Subspace,
}

/// `(H, μ, η, Δ, ε, S, α)`.
///
/// Only shapes are validated on construction; the axioms are certified by [`certify`].
/// Derived data (Δ(1), counital maps, α⁻¹ and S⁻¹ when they exist) is computed once here.
#[derive(Clone, Debug)]
pub struct WeakHomHopfAlgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
    antipode: LinearMap,
    delta_one: LinearMap,
    counital: CounitalMaps,
    alpha_inv: Option<LinearMap>,
    antipode_inv: Option<LinearMap>,
}

impl PartialEq for WeakHomHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra && self.antipode == other.antipode
    }
}

impl Eq for WeakHomHopfAlgebra {}

impl WeakHomHopfAlgebra {
    pub fn new(
        mul: LinearMap,
        unit: LinearMap,
        comul: LinearMap,
        counit: LinearMap,
        alpha: LinearMap,
        antipode: LinearMap,
    ) -> Result<Self> {
        let algebra = HomAlgebra::new(mul, unit, alpha.clone())?;
        let coalgebra = HomCoalgebra::new(comul, counit, alpha)?;
        Self::from_parts(algebra, coalgebra, antipode)
    }

    pub fn from_parts(algebra: HomAlgebra, coalgebra: HomCoalgebra, antipode: LinearMap) -> Result<Self> {
        if algebra.alpha != coalgebra.alpha {
            return Err(Error::Structural("algebra and coalgebra carry different structure maps".into()));
        }
        let d = algebra.dim();
        if antipode.domain() != [d] || antipode.codomain() != [d] {
            return Err(Error::shape("antipode", &[d], antipode.domain()));
        }
        if antipode.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), antipode.field()));
        }
        let delta_one = coalgebra.comul.compose(&algebra.unit)?;
        let counital = counital_maps_of(&algebra, &coalgebra, &delta_one)?;
        let alpha_inv = algebra.alpha.invert().ok();
        let antipode_inv = antipode.invert().ok();
        Ok(WeakHomHopfAlgebra { algebra, coalgebra, antipode, delta_one, counital, alpha_inv, antipode_inv })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn mul(&self) -> &LinearMap {
        &self.algebra.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.algebra.unit
    }

    pub fn comul(&self) -> &LinearMap {
        &self.coalgebra.comul
    }

    pub fn counit(&self) -> &LinearMap {
        &self.coalgebra.counit
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.algebra.alpha
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    /// `Δ(1) = 1₁ ⊗ 1₂` as a map `k -> H ⊗ H`.
    pub fn delta_one(&self) -> &LinearMap {
        &self.delta_one
    }

    pub fn counital(&self) -> &CounitalMaps {
        &self.counital
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.field(), &[self.dim()])
    }

    pub fn alpha_inv(&self) -> Result<&LinearMap> {
        self.alpha_inv.as_ref().ok_or_else(|| Error::Singular { rank: self.alpha().rank(), dim: self.dim() })
    }

    pub fn antipode_inv(&self) -> Result<&LinearMap> {
        self.antipode_inv.as_ref().ok_or_else(|| Error::Singular { rank: self.antipode.rank(), dim: self.dim() })
    }

    /// `α^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i32) -> Result<LinearMap> {
        let base = if k < 0 { self.alpha_inv()? } else { self.alpha() };
        let mut acc = self.id();
        for _ in 0..k.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `Δᵒᵖ = τ∘Δ`.
    pub fn comul_op(&self) -> LinearMap {
        let d = self.dim();
        LinearMap::flip(self.field(), d, d).compose(self.comul()).expect("shapes agree")
    }

    /// Whether `Δ(1) = 1 ⊗ 1`.
    pub fn is_hopf(&self) -> bool {
        self.unit().tensor(self.unit()).map(|u| u == self.delta_one).unwrap_or(false)
    }
}

fn counital_maps_of(a: &HomAlgebra, c: &HomCoalgebra, delta_one: &LinearMap) -> Result<CounitalMaps> {
    let f = a.field();
    let d = a.dim();
    // Wires after inserting Δ(1) in front of h: (1₁, 1₂, h).
    let start = || Wiring::start(f, &[d]).apply(0, delta_one);
    let eps_t = start()?.permute(&[0, 2, 1])?.apply(0, &a.mul)?.apply(0, &c.counit)?.finish();
    let eps_s = start()?.permute(&[0, 2, 1])?.apply(1, &a.mul)?.apply(1, &c.counit)?.finish();
    let eps_t_hat = start()?.permute(&[2, 0, 1])?.apply(0, &a.mul)?.apply(0, &c.counit)?.finish();
    let eps_s_hat = start()?.apply(1, &a.mul)?.apply(1, &c.counit)?.finish();
    Ok(CounitalMaps {
        h_t: Subspace::image(&eps_t),
        h_s: Subspace::image(&eps_s),
        h_t_hat: Subspace::image(&eps_t_hat),
        h_s_hat: Subspace::image(&eps_s_hat),
        eps_t,
        eps_s,
        eps_t_hat,
        eps_s_hat,
    })
}

pub fn counital_maps(h: &WeakHomHopfAlgebra) -> &CounitalMaps {
    h.counital()
}

/// The weak bialgebra identities, with the Hom-algebra and Hom-coalgebra axioms as prerequisites.
pub fn check_weak_bialgebra(h: &WeakHomHopfAlgebra) -> Result<CheckReport> {
    let f = h.field();
    let d = h.dim();
    let anchor = "weak-bialgebra";
    let mut r = CheckReport::new("weak Hom-bialgebra");
    r.absorb("algebra", check_hom_algebra(h.algebra())?);
    r.absorb("coalgebra", check_hom_coalgebra(h.coalgebra())?);
    let (mul, comul, eps) = (h.mul(), h.comul(), h.counit());

    let lhs = comul.compose(mul)?;
    let rhs = Wiring::start(f, &[d, d]).apply(1, comul)?.apply(0, comul)?.permute(&[0, 2, 1, 3])?.apply(0, mul)?.apply(1, mul)?.finish();
    r.push(CheckEntry::compare("comultiplicative", anchor, "Δ(ab) = Δ(a)Δ(b)", &lhs, &rhs)?);

    let id = h.id();
    let lhs = eps.compose(mul)?.compose(&mul.tensor(&id)?)?;
    let split = || Wiring::start(f, &[d, d, d]).apply(1, comul);
    let rhs = split()?.apply(0, mul)?.apply(0, eps)?.apply(0, mul)?.apply(0, eps)?.finish();
    r.push(CheckEntry::compare("counit-left", anchor, "ε((ab)c) = ε(ab₁)ε(b₂c)", &lhs, &rhs)?);

    let lhs = eps.compose(mul)?.compose(&id.tensor(mul)?)?;
    let rhs = split()?.permute(&[0, 2, 1, 3])?.apply(0, mul)?.apply(0, eps)?.apply(0, mul)?.apply(0, eps)?.finish();
    r.push(CheckEntry::compare("counit-right", anchor, "ε(a(bc)) = ε(ab₂)ε(b₁c)", &lhs, &rhs)?);

    let ones = || Wiring::start(f, &[]).apply(0, h.delta_one())?.apply(2, h.delta_one());
    let lhs = comul.tensor(&id)?.compose(h.delta_one())?;
    let rhs = ones()?.apply(1, mul)?.finish();
    r.push(CheckEntry::compare("unit-left", anchor, "(Δ⊗id)Δ(1) = 1₁ ⊗ 1₂1′₁ ⊗ 1′₂", &lhs, &rhs)?);

    let lhs = id.tensor(comul)?.compose(h.delta_one())?;
    let rhs = ones()?.permute(&[0, 2, 1, 3])?.apply(1, mul)?.finish();
    r.push(CheckEntry::compare("unit-right", anchor, "(id⊗Δ)Δ(1) = 1₁ ⊗ 1′₁1₂ ⊗ 1′₂", &lhs, &rhs)?);
    Ok(r)
}

/// The antipode identities plus invertibility of `S`.
pub fn check_antipode(h: &WeakHomHopfAlgebra) -> Result<CheckReport> {
    let f = h.field();
    let d = h.dim();
    let anchor = "antipode";
    let mut r = CheckReport::new("weak Hom-Hopf antipode");
    let (s, alpha, mul, comul) = (h.antipode(), h.alpha(), h.mul(), h.comul());
    let cm = h.counital();

    r.push(CheckEntry::compare("commutes-with-alpha", anchor, "S∘α = α∘S", &s.compose(alpha)?, &alpha.compose(s)?)?);

    let lhs = Wiring::start(f, &[d]).apply(0, comul)?.apply(1, s)?.apply(0, mul)?.finish();
    r.push(CheckEntry::compare("target-counital", anchor, "h₁S(h₂) = ε_t(h)", &lhs, &cm.eps_t)?);
    let lhs = Wiring::start(f, &[d]).apply(0, comul)?.apply(0, s)?.apply(0, mul)?.finish();
    r.push(CheckEntry::compare("source-counital", anchor, "S(h₁)h₂ = ε_s(h)", &lhs, &cm.eps_s)?);

    let lhs = s.compose(mul)?;
    let rhs = mul.compose(&s.tensor(s)?)?.compose(&LinearMap::flip(f, d, d))?;
    r.push(CheckEntry::compare("anti-multiplicative", anchor, "S(hg) = S(g)S(h)", &lhs, &rhs)?);
    r.push(CheckEntry::compare("unit", anchor, "S(1) = 1", &s.compose(h.unit())?, h.unit())?);

    let lhs = comul.compose(s)?;
    let rhs = LinearMap::flip(f, d, d).compose(&s.tensor(s)?)?.compose(comul)?;
    r.push(CheckEntry::compare("anti-comultiplicative", anchor, "Δ(S(h)) = S(h₂) ⊗ S(h₁)", &lhs, &rhs)?);
    r.push(CheckEntry::compare("counit", anchor, "ε∘S = ε", &h.counit().compose(s)?, h.counit())?);

    let inv = match h.antipode_inv() {
        Ok(_) => CheckEntry::fact("invertible", anchor, "S is bijective", true, None),
        Err(e) => CheckEntry::fact("invertible", anchor, "S is bijective", false, Some(e.to_string())),
    };
    r.push(inv);
    Ok(r)
}

/// Idempotence of the counital maps and stability of their images under α.
pub fn check_counital(h: &WeakHomHopfAlgebra) -> Result<CheckReport> {
    let anchor = "counital-maps";
    let mut r = CheckReport::new("counital maps");
    let cm = h.counital();
    for (name, e) in [("eps_t", &cm.eps_t), ("eps_s", &cm.eps_s)] {
        let id = format!("{name}-idempotent");
        r.push(CheckEntry::compare(&id, anchor, "ε∘ε = ε on counital maps", &e.compose(e)?, e)?);
    }
    for (name, sub) in [("target", &cm.h_t), ("source", &cm.h_s)] {
        let escapes = sub.first_escape(&h.alpha().compose(&sub.inclusion())?);
        let failures = escapes.map(|i| (vec![i], Vec::new())).into_iter().collect();
        let id = format!("alpha-preserves-{name}");
        r.push(CheckEntry::membership(&id, anchor, "α maps the counital subalgebra into itself", failures));
    }
    Ok(r)
}

/// The complete axiom suite: Hom-algebra, Hom-coalgebra, weak bialgebra, antipode, counital maps.
pub fn certify(h: &WeakHomHopfAlgebra) -> Result<CheckReport> {
    let mut r = CheckReport::new("weak Hom-Hopf algebra");
    r.absorb("bialgebra", check_weak_bialgebra(h)?);
    r.absorb("antipode", check_antipode(h)?);
    r.absorb("counital", check_counital(h)?);
    Ok(r)
}

/// Certifies `h`, turning a failing report into an error.
pub fn certified(h: WeakHomHopfAlgebra) -> Result<WeakHomHopfAlgebra> {
    let report = certify(&h)?;
    if !report.passed() {
        return Err(Error::Certification { what: "weak Hom-Hopf algebra".into(), report: Box::new(report) });
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forge::{group_algebra, groupoid_algebra, GroupPresentation, GroupoidPresentation};

    #[test]
    fn counital_maps_of_a_group_algebra_project_onto_the_unit() {
        let h = group_algebra(Field::Rational, &GroupPresentation::cyclic(3).unwrap()).unwrap();
        let cm = h.counital();
        assert_eq!(cm.h_t.dim(), 1);
        assert_eq!(cm.eps_t, cm.eps_s);
        assert_eq!(cm.eps_t, h.unit().compose(h.counit()).unwrap());
    }

    #[test]
    fn discrete_groupoid_counital_maps_are_the_identity() {
        let h = groupoid_algebra(Field::Rational, &GroupoidPresentation::discrete(3).unwrap()).unwrap();
        assert!(h.counital().eps_t.is_identity());
        assert!(h.counital().eps_s_hat.is_identity());
        assert!(!h.is_hopf());
    }

    #[test]
    fn opposite_comultiplication_of_a_cocommutative_algebra_is_unchanged() {
        let h = group_algebra(Field::Rational, &GroupPresentation::symmetric(3).unwrap()).unwrap();
        assert_eq!(&h.comul_op(), h.comul());
    }

    #[test]
    fn zero_antipode_fails_only_antipode_checks() {
        let h = group_algebra(Field::Rational, &GroupPresentation::cyclic(2).unwrap()).unwrap();
        let z = WeakHomHopfAlgebra::from_parts(h.algebra().clone(), h.coalgebra().clone(), LinearMap::zero(h.field(), &[2], &[2])).unwrap();
        assert!(check_weak_bialgebra(&z).unwrap().passed());
        assert!(!check_antipode(&z).unwrap().passed());
    }
}
