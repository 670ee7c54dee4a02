//! Yetter-Drinfeld modules, their truncated tensor products, the unit object and the
//! monoidal constraints.
//!
//! Objects built from other objects (tensor products, the unit, duals) live on subspaces.
//! A [`YDObject`] keeps its own structure maps in its own coordinates together with the
//! embedding into the ambient space its formulas are written in, so composite maps such as
//! associators can be evaluated on ambient tensors and then pulled back exactly.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{check_comodule, check_module, HComodule, HModule};
use crate::linmap::{LinearMap, Wiring};
use crate::report::{terms, CheckEntry, CheckReport};
use crate::subspace::Subspace;
use crate::weak::WeakHomHopfAlgebra;

/// A module and comodule over `H` sharing the twist `α_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub action: LinearMap,
    pub coaction: LinearMap,
    pub alpha: LinearMap,
    alpha_inv: Option<LinearMap>,
}

impl YDModule {
    pub fn new(h: &WeakHomHopfAlgebra, action: LinearMap, coaction: LinearMap, alpha: LinearMap) -> Result<Self> {
        let d = h.dim();
        let k = alpha.dim_domain();
        let module = HModule::new(d, action, alpha.clone())?;
        let comodule = HComodule::new(d, coaction, alpha)?;
        for f in [&module.action, &comodule.coaction] {
            if f.field() != h.field() {
                return Err(Error::FieldMismatch(h.field(), f.field()));
            }
        }
        debug_assert_eq!(module.dim(), k);
        let alpha_inv = module.alpha.invert().ok();
        Ok(YDModule { action: module.action, coaction: comodule.coaction, alpha: module.alpha, alpha_inv })
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim_domain()
    }

    pub fn as_module(&self) -> HModule {
        HModule { action: self.action.clone(), alpha: self.alpha.clone() }
    }

    pub fn as_comodule(&self) -> HComodule {
        HComodule { coaction: self.coaction.clone(), alpha: self.alpha.clone() }
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.alpha.field(), &[self.dim()])
    }

    pub fn alpha_inv(&self) -> Result<&LinearMap> {
        self.alpha_inv.as_ref().ok_or_else(|| Error::Singular { rank: self.alpha.rank(), dim: self.dim() })
    }

    pub fn alpha_pow(&self, k: i32) -> Result<LinearMap> {
        let base = if k < 0 { self.alpha_inv()? } else { &self.alpha };
        let mut acc = self.id();
        for _ in 0..k.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    /// The same data with the coaction replaced (used by mutation fixtures and induced structures).
    pub fn with_coaction(&self, h: &WeakHomHopfAlgebra, coaction: LinearMap) -> Result<Self> {
        YDModule::new(h, self.action.clone(), coaction, self.alpha.clone())
    }

    pub fn with_action(&self, h: &WeakHomHopfAlgebra, action: LinearMap) -> Result<Self> {
        YDModule::new(h, action, self.coaction.clone(), self.alpha.clone())
    }
}

/// Inclusion of a subspace and a left inverse of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub incl: LinearMap,
    pub proj: LinearMap,
}

impl Embedding {
    pub fn of(space: &Subspace) -> Self {
        Embedding { incl: space.inclusion(), proj: space.projection() }
    }

    pub fn identity(h_field: crate::Field, dim: usize) -> Self {
        let id = LinearMap::identity(h_field, &[dim]);
        Embedding { incl: id.clone(), proj: id }
    }

    pub fn dim(&self) -> usize {
        self.incl.dim_domain()
    }

    pub fn ambient(&self) -> &[usize] {
        self.incl.codomain()
    }

    /// `proj ∘ g` after checking that every column of `g` lies in the embedded subspace.
    pub fn land(&self, g: &LinearMap, what: &str) -> Result<LinearMap> {
        self.land_with(g, &[], what)
    }

    /// As [`Embedding::land`], for maps whose codomain carries extra trailing wires.
    pub fn land_with(&self, g: &LinearMap, extra: &[usize], what: &str) -> Result<LinearMap> {
        let f = g.field();
        let (incl, proj) = if extra.is_empty() {
            (self.incl.clone(), self.proj.clone())
        } else {
            let id = LinearMap::identity(f, extra);
            (self.incl.tensor(&id)?, self.proj.tensor(&id)?)
        };
        let coords = proj.compose(g)?;
        let back = incl.compose(&coords)?;
        if back != *g {
            let index = back.differing_columns(g)?[0];
            return Err(Error::EscapesSubspace { what: what.to_string(), index });
        }
        Ok(coords)
    }
}

/// How a composite object was formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// `M ⊗_t N = 1₁M ⊗ 1₂N`.
    Truncated,
    /// `M ⊗̃ N = span{m₀ ⊗ n₀ ε(m₁n₁)}`.
    Tilde,
}

#[derive(Clone, Debug)]
pub enum Shape {
    Plain,
    /// Sub-object of `H` (the unit object `H_s`).
    Unit(Embedding),
    Tensor {
        product: Product,
        left: Obj,
        right: Obj,
        embedding: Embedding,
    },
}

#[derive(Clone, Debug)]
pub struct YDObject {
    pub name: String,
    pub module: YDModule,
    pub shape: Shape,
}

pub type Obj = Arc<YDObject>;

impl YDObject {
    pub fn plain(name: impl Into<String>, module: YDModule) -> Obj {
        Arc::new(YDObject { name: name.into(), module, shape: Shape::Plain })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Factors and embedding of a tensor object.
    pub fn tensor_parts(&self) -> Result<(&Obj, &Obj, &Embedding)> {
        match &self.shape {
            Shape::Tensor { left, right, embedding, .. } => Ok((left, right, embedding)),
            _ => Err(Error::Structural(format!("{} is not a tensor product", self.name))),
        }
    }

    pub fn product(&self) -> Option<Product> {
        match &self.shape {
            Shape::Tensor { product, .. } => Some(*product),
            _ => None,
        }
    }
}

fn need(x: &Result<LinearMap>) -> Result<&LinearMap> {
    x.as_ref().map_err(|e| Error::Structural(format!("weak Hom-Hopf algebra is not invertible enough: {e}")))
}

/// Both sides of the compatibility condition
/// `(h·m)₀ ⊗ (h·m)₁ = α⁻¹(h₂₁)·m₀ ⊗ [α⁻²(h₂₂)α⁻¹(m₁)]S⁻¹(h₁)` as maps `H ⊗ M -> M ⊗ H`.
pub fn yd_sides(h: &WeakHomHopfAlgebra, m: &YDModule) -> Result<(LinearMap, LinearMap)> {
    let f = h.field();
    let (d, k) = (h.dim(), m.dim());
    let a1 = h.alpha_pow(-1);
    let a2 = h.alpha_pow(-2);
    let s_inv = h.antipode_inv().cloned();
    let lhs = m.coaction.compose(&m.action)?;
    let rhs = Wiring::start(f, &[d, k])
        .apply(0, h.comul())?
        .apply(1, h.comul())?
        .apply(3, &m.coaction)?
        // (h₁, h₂₁, h₂₂, m₀, m₁) -> (h₂₁, m₀, h₂₂, m₁, h₁)
        .permute(&[1, 3, 2, 4, 0])?
        .apply(0, need(&a1)?)?
        .apply(0, &m.action)?
        .apply(1, need(&a2)?)?
        .apply(2, need(&a1)?)?
        .apply(1, h.mul())?
        .apply(2, need(&s_inv)?)?
        .apply(1, h.mul())?
        .finish();
    Ok((lhs, rhs))
}

fn prerequisites(h: &WeakHomHopfAlgebra, m: &YDModule, r: &mut CheckReport) -> Result<()> {
    r.absorb("module", check_module(h.algebra(), &m.as_module())?);
    r.absorb("comodule", check_comodule(h.coalgebra(), &m.as_comodule())?);
    Ok(())
}

/// The defining compatibility condition, with the module and comodule axioms as prerequisites.
pub fn check_yd_31(h: &WeakHomHopfAlgebra, m: &YDModule) -> Result<CheckReport> {
    let mut r = CheckReport::new("Yetter-Drinfeld module");
    prerequisites(h, m, &mut r)?;
    let (lhs, rhs) = yd_sides(h, m)?;
    r.push(CheckEntry::compare(
        "compatibility",
        "yd-compatibility",
        "(h·m)₀ ⊗ (h·m)₁ = α⁻¹(h₂₁)·m₀ ⊗ [α⁻²(h₂₂)α⁻¹(m₁)]S⁻¹(h₁)",
        &lhs,
        &rhs,
    )?);
    Ok(r)
}

/// `m ⊗ h ↦ 1₁·m ⊗ 1₂h` on `M ⊗ H`.
pub fn comodule_projector(h: &WeakHomHopfAlgebra, m: &YDModule) -> Result<LinearMap> {
    Ok(Wiring::start(h.field(), &[m.dim(), h.dim()])
        .apply(0, h.delta_one())?
        .permute(&[0, 2, 1, 3])?
        .apply(0, &m.action)?
        .apply(1, h.mul())?
        .finish())
}

/// Every column of `f` that leaves `space`, with its value.
pub fn membership_entry(id: &str, anchor: &str, statement: &str, space: &Subspace, f: &LinearMap) -> CheckEntry {
    let failures = f
        .columns()
        .iter()
        .enumerate()
        .filter(|(_, c)| !space.contains(c))
        .map(|(j, c)| (crate::linmap::unflatten(j, f.domain()), terms(c, f.codomain())))
        .collect();
    CheckEntry::membership(id, anchor, statement, failures)
}

/// The split form of the compatibility condition: coaction lands in `M ⊗_t H`, plus the twisted
/// commutation `α(h₁)·m₀ ⊗ α²(h₂)α(m₁) = (h₂·m)₀ ⊗ (h₂·m)₁α²(h₁)`.
pub fn check_yd_32_33(h: &WeakHomHopfAlgebra, m: &YDModule) -> Result<CheckReport> {
    let f = h.field();
    let (d, k) = (h.dim(), m.dim());
    let mut r = CheckReport::new("Yetter-Drinfeld module (split form)");
    prerequisites(h, m, &mut r)?;
    let space = Subspace::image(&comodule_projector(h, m)?);
    r.push(membership_entry("coaction-truncated", "yd-split.truncation", "ρ(m) ∈ (1₁ ⊗ 1₂)·(M ⊗ H)", &space, &m.coaction));
    let a1 = h.alpha_pow(1)?;
    let a2 = h.alpha_pow(2)?;
    let lhs = Wiring::start(f, &[d, k])
        .apply(0, h.comul())?
        .apply(2, &m.coaction)?
        .permute(&[0, 2, 1, 3])?
        .apply(0, &a1)?
        .apply(0, &m.action)?
        .apply(1, &a2)?
        .apply(2, &a1)?
        .apply(1, h.mul())?
        .finish();
    let rhs = Wiring::start(f, &[d, k])
        .apply(0, h.comul())?
        .permute(&[1, 2, 0])?
        .apply(0, &m.action)?
        .apply(0, &m.coaction)?
        .apply(2, &a2)?
        .apply(1, h.mul())?
        .finish();
    r.push(CheckEntry::compare(
        "twisted-commutation",
        "yd-split.commutation",
        "α(h₁)·m₀ ⊗ α²(h₂)α(m₁) = (h₂·m)₀ ⊗ (h₂·m)₁α²(h₁)",
        &lhs,
        &rhs,
    )?);
    Ok(r)
}

fn certified(h: &WeakHomHopfAlgebra, name: &str, module: YDModule) -> Result<YDModule> {
    let report = check_yd_31(h, &module)?;
    if !report.passed() {
        return Err(Error::Certification { what: name.to_string(), report: Box::new(report) });
    }
    Ok(module)
}

/// Certifies a plain module and wraps it as an object.
pub fn certify_object(h: &WeakHomHopfAlgebra, name: &str, module: YDModule) -> Result<Obj> {
    Ok(YDObject::plain(name, certified(h, name, module)?))
}

/// `P(m ⊗ n) = 1₁·m ⊗ 1₂·n`.
pub fn truncation_projector(h: &WeakHomHopfAlgebra, m: &YDModule, n: &YDModule) -> Result<LinearMap> {
    Ok(Wiring::start(h.field(), &[m.dim(), n.dim()])
        .apply(0, h.delta_one())?
        .permute(&[0, 2, 1, 3])?
        .apply(0, &m.action)?
        .apply(1, &n.action)?
        .finish())
}

/// `Q(m ⊗ n) = m₀ ⊗ n₀ ε(m₁n₁)`.
pub fn tilde_projector(h: &WeakHomHopfAlgebra, m: &YDModule, n: &YDModule) -> Result<LinearMap> {
    Ok(Wiring::start(h.field(), &[m.dim(), n.dim()])
        .apply(0, &m.coaction)?
        .apply(2, &n.coaction)?
        .permute(&[0, 2, 1, 3])?
        .apply(2, h.mul())?
        .apply(2, h.counit())?
        .finish())
}

/// `h·(m ⊗ n) = α^k(h₁)·m ⊗ α^k(h₂)·n` on the full tensor product.
fn diagonal_action(h: &WeakHomHopfAlgebra, m: &YDModule, n: &YDModule, twist: i32) -> Result<LinearMap> {
    let a = h.alpha_pow(twist)?;
    Ok(Wiring::start(h.field(), &[h.dim(), m.dim(), n.dim()])
        .apply(0, h.comul())?
        .apply(0, &a)?
        .apply(1, &a)?
        .permute(&[0, 2, 1, 3])?
        .apply(0, &m.action)?
        .apply(1, &n.action)?
        .finish())
}

/// `m ⊗ n ↦ m₀ ⊗ n₀ ⊗ α^k(n₁m₁)` on the full tensor product.
fn product_coaction(h: &WeakHomHopfAlgebra, m: &YDModule, n: &YDModule, twist: i32) -> Result<LinearMap> {
    let a = h.alpha_pow(twist)?;
    Ok(Wiring::start(h.field(), &[m.dim(), n.dim()])
        .apply(0, &m.coaction)?
        .apply(2, &n.coaction)?
        .permute(&[0, 2, 3, 1])?
        .apply(2, h.mul())?
        .apply(2, &a)?
        .finish())
}

fn build_tensor(h: &WeakHomHopfAlgebra, product: Product, left: &Obj, right: &Obj) -> Result<Obj> {
    let (m, n) = (&left.module, &right.module);
    let (projector, action, coaction, sym) = match product {
        Product::Truncated => (truncation_projector(h, m, n)?, diagonal_action(h, m, n, 0)?, product_coaction(h, m, n, -2)?, "⊗"),
        Product::Tilde => (tilde_projector(h, m, n)?, diagonal_action(h, m, n, -2)?, product_coaction(h, m, n, 0)?, "⊗̃"),
    };
    let name = format!("({} {sym} {})", left.name, right.name);
    let space = Subspace::image(&projector);
    let emb = Embedding::of(&space);
    let id_h = h.id();
    let act = emb.land(&action.compose(&id_h.tensor(&emb.incl)?)?, &format!("action on {name}"))?;
    let coact = emb.land_with(&coaction.compose(&emb.incl)?, &[h.dim()], &format!("coaction on {name}"))?;
    let alpha = emb.land(&m.alpha.tensor(&n.alpha)?.compose(&emb.incl)?, &format!("twist on {name}"))?;
    let module = certified(h, &name, YDModule::new(h, act, coact, alpha)?)?;
    Ok(Arc::new(YDObject { name, module, shape: Shape::Tensor { product, left: left.clone(), right: right.clone(), embedding: emb } }))
}

/// `M ⊗_t N` with the diagonal action and the coaction `m₀ ⊗ n₀ ⊗ α⁻²(n₁m₁)`; re-certified.
pub fn truncated_tensor(h: &WeakHomHopfAlgebra, left: &Obj, right: &Obj) -> Result<Obj> {
    build_tensor(h, Product::Truncated, left, right)
}

/// `M ⊗̃ N` with the action `α⁻²(h₁)·m ⊗ α⁻²(h₂)·n` and coaction `m₀ ⊗ n₀ ⊗ n₁m₁`; re-certified.
pub fn tilde_tensor(h: &WeakHomHopfAlgebra, left: &Obj, right: &Obj) -> Result<Obj> {
    build_tensor(h, Product::Tilde, left, right)
}

pub fn tensor(h: &WeakHomHopfAlgebra, product: Product, left: &Obj, right: &Obj) -> Result<Obj> {
    build_tensor(h, product, left, right)
}

/// Memoised tensor objects, keyed by the identity of the operands. Each cached object keeps its
/// operands alive, so keys are never reused.
#[derive(Default)]
pub struct TensorCache {
    map: RefCell<HashMap<(Product, usize, usize), Obj>>,
}

impl TensorCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, h: &WeakHomHopfAlgebra, product: Product, left: &Obj, right: &Obj) -> Result<Obj> {
        let key = (product, Arc::as_ptr(left) as usize, Arc::as_ptr(right) as usize);
        if let Some(t) = self.map.borrow().get(&key) {
            return Ok(t.clone());
        }
        let t = build_tensor(h, product, left, right)?;
        self.map.borrow_mut().insert(key, t.clone());
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.map.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `H_s` with `h·x = ε̂_s(hx)`, `ρ = Δ|`, `α|`; re-certified. The report note flags `H_s ≠ H_t`.
pub fn unit_object(h: &WeakHomHopfAlgebra) -> Result<Obj> {
    let cm = h.counital();
    let emb = Embedding::of(&cm.h_s);
    let act = emb.land(&cm.eps_s_hat.compose(h.mul())?.compose(&h.id().tensor(&emb.incl)?)?, "unit action")?;
    let coact = emb.land_with(&h.comul().compose(&emb.incl)?, &[h.dim()], "Δ(H_s) ⊆ H_s ⊗ H")?;
    let alpha = emb.land(&h.alpha().compose(&emb.incl)?, "α(H_s) ⊆ H_s")?;
    let module = certified(h, "H_s", YDModule::new(h, act, coact, alpha)?)?;
    Ok(Arc::new(YDObject { name: "H_s".into(), module, shape: Shape::Unit(emb) }))
}

/// Whether the source and target counital subalgebras differ (the unit conventions then split).
pub fn unit_conventions_differ(h: &WeakHomHopfAlgebra) -> bool {
    !h.counital().h_s.same_space(&h.counital().h_t)
}

fn unit_embedding(unit: &Obj) -> Result<&Embedding> {
    match &unit.shape {
        Shape::Unit(e) => Ok(e),
        _ => Err(Error::Structural(format!("{} is not the unit object", unit.name))),
    }
}

/// `f ⊗ g` restricted to the given tensor objects.
pub fn tensor_maps(src: &Obj, dst: &Obj, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    let (_, _, se) = src.tensor_parts()?;
    let (_, _, de) = dst.tensor_parts()?;
    de.land(&f.tensor(g)?.compose(&se.incl)?, &format!("{} -> {}", src.name, dst.name))
}

/// Embedding of `(X ⊗ Y) ⊗ Z` into `X ⊗ Y ⊗ Z`.
fn left_nested(obj: &Obj) -> Result<Embedding> {
    let (xy, z, outer) = obj.tensor_parts()?;
    let (_, _, inner) = xy.tensor_parts()?;
    let id = z.module.id();
    Ok(Embedding { incl: inner.incl.tensor(&id)?.compose(&outer.incl)?, proj: outer.proj.compose(&inner.proj.tensor(&id)?)? })
}

/// Embedding of `X ⊗ (Y ⊗ Z)` into `X ⊗ Y ⊗ Z`.
fn right_nested(obj: &Obj) -> Result<Embedding> {
    let (x, yz, outer) = obj.tensor_parts()?;
    let (_, _, inner) = yz.tensor_parts()?;
    let id = x.module.id();
    Ok(Embedding { incl: id.tensor(&inner.incl)?.compose(&outer.incl)?, proj: outer.proj.compose(&id.tensor(&inner.proj)?)? })
}

/// `a((x ⊗ y) ⊗ z) = α⁻¹(x) ⊗ (y ⊗ α(z))` from `src = (X⊗Y)⊗Z` to `dst = X⊗(Y⊗Z)`.
pub fn associator_between(src: &Obj, dst: &Obj) -> Result<LinearMap> {
    let (xy, z, _) = src.tensor_parts()?;
    let (x, y, _) = xy.tensor_parts()?;
    let (x2, yz, _) = dst.tensor_parts()?;
    let (y2, z2, _) = yz.tensor_parts()?;
    if x.dim() != x2.dim() || y.dim() != y2.dim() || z.dim() != z2.dim() {
        return Err(Error::Structural(format!("{} and {} have different factors", src.name, dst.name)));
    }
    let ambient = x.module.alpha_inv()?.tensor(&y.module.id())?.tensor(&z.module.alpha)?;
    let se = left_nested(src)?;
    let de = right_nested(dst)?;
    de.land(&ambient.compose(&se.incl)?, &format!("associator {} -> {}", src.name, dst.name))
}

/// The associator `(M⊗N)⊗P -> M⊗(N⊗P)` for the given product, building both sides.
pub fn associator(h: &WeakHomHopfAlgebra, product: Product, m: &Obj, n: &Obj, p: &Obj) -> Result<Associator> {
    let mn = tensor(h, product, m, n)?;
    let np = tensor(h, product, n, p)?;
    let source = tensor(h, product, &mn, p)?;
    let target = tensor(h, product, m, &np)?;
    let map = associator_between(&source, &target)?;
    Ok(Associator { source, target, map })
}

#[derive(Clone, Debug)]
pub struct Associator {
    pub source: Obj,
    pub target: Obj,
    pub map: LinearMap,
}

/// Linearity `f(h·x) = h·f(x)`, colinearity `(f⊗id)ρ = ρf` and twist compatibility of a map between objects.
pub fn morphism_entries(
    h: &WeakHomHopfAlgebra,
    prefix: &str,
    anchor: &str,
    src: &YDModule,
    dst: &YDModule,
    f: &LinearMap,
) -> Result<Vec<CheckEntry>> {
    let lin_l = f.compose(&src.action)?;
    let lin_r = dst.action.compose(&h.id().tensor(f)?)?;
    let col_l = dst.coaction.compose(f)?;
    let col_r = f.tensor(&h.id())?.compose(&src.coaction)?;
    Ok(vec![
        CheckEntry::compare(&format!("{prefix}.linear"), anchor, "f(h·x) = h·f(x)", &lin_l, &lin_r)?,
        CheckEntry::compare(&format!("{prefix}.colinear"), anchor, "ρ(f(x)) = (f⊗id)ρ(x)", &col_l, &col_r)?,
        CheckEntry::compare(&format!("{prefix}.twist"), anchor, "α∘f = f∘α", &dst.alpha.compose(f)?, &f.compose(&src.alpha)?)?,
    ])
}

fn bijectivity(id: &str, anchor: &str, f: &LinearMap) -> CheckEntry {
    let ok = f.is_square() && f.rank() == f.dim_domain();
    CheckEntry::fact(id, anchor, "map is bijective", ok, (!ok).then(|| format!("rank {} of {}", f.rank(), f.dim_domain())))
}

/// Checks that the associator is a bijective morphism of Yetter-Drinfeld modules.
pub fn check_associator(h: &WeakHomHopfAlgebra, a: &Associator) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("associator {} -> {}", a.source.name, a.target.name));
    r.push(bijectivity("associator.bijective", "monoidal.associator", &a.map));
    for e in morphism_entries(h, "associator", "monoidal.associator", &a.source.module, &a.target.module, &a.map)? {
        r.push(e);
    }
    Ok(r)
}

/// `E = P∘(α⁻¹⊗α⁻¹)`, the idempotent onto `M ⊗_t N` that fixes it pointwise; used to read
/// `x ⊗_t y` for vectors built outside the subspace.
pub fn truncate(h: &WeakHomHopfAlgebra, m: &YDModule, n: &YDModule) -> Result<LinearMap> {
    truncation_projector(h, m, n)?.compose(&m.alpha_inv()?.tensor(n.alpha_inv()?)?)
}

/// The unit constraints `l: H_s ⊗_t M -> M`, `r: M ⊗_t H_s -> M` and their inverses.
#[derive(Clone, Debug)]
pub struct UnitConstraints {
    pub left_tensor: Obj,
    pub right_tensor: Obj,
    pub l: LinearMap,
    pub l_inv: LinearMap,
    pub r: LinearMap,
    pub r_inv: LinearMap,
    /// `r⁻¹` exactly as printed, `m ↦ ε(1₃)ε_s(1₂)·α_M(m) ⊗ 1₁`.
    pub r_inv_printed: LinearMap,
}

pub const R_INV_DEVIATION: &str = "right unit inverse uses r⁻¹(m) = ε(1₃)ε_s(1₂)·m ⊗_t 1₁; the printed α_M(m) makes r∘r⁻¹ = α_M";

pub fn unit_constraints(h: &WeakHomHopfAlgebra, unit: &Obj, m: &Obj) -> Result<UnitConstraints> {
    let f = h.field();
    let ue = unit_embedding(unit)?;
    let (k, s, d) = (m.dim(), unit.dim(), h.dim());
    let mm = &m.module;
    let left_tensor = truncated_tensor(h, unit, m)?;
    let right_tensor = truncated_tensor(h, m, unit)?;
    let (_, _, le) = left_tensor.tensor_parts()?;
    let (_, _, re) = right_tensor.tensor_parts()?;

    // l(x ⊗ m) = S(x)·α⁻²(m)
    let s_on_unit = h.antipode().compose(&ue.incl)?;
    let l_amb = mm.action.compose(&s_on_unit.tensor(&mm.alpha_pow(-2)?)?)?;
    let l = l_amb.compose(&le.incl)?;

    // l⁻¹(m) = 1 ⊗_t α(m)
    let one = ue.land(h.unit(), "1 ∈ H_s")?;
    let l_inv_amb = truncate(h, &unit.module, mm)?.compose(&one.tensor(&mm.alpha)?)?;
    let l_inv = le.land(&l_inv_amb, "l⁻¹")?;

    // r(m ⊗ x) = x·α⁻²(m)
    let r_amb =
        Wiring::start(f, &[k, s]).apply(0, &mm.alpha_pow(-2)?)?.apply(1, &ue.incl)?.permute(&[1, 0])?.apply(0, &mm.action)?.finish();
    let r = r_amb.compose(&re.incl)?;

    // 1₁ ⊗ 1₂ ⊗ 1₃ = (Δ⊗id)Δ(1); r⁻¹(m) = ε(1₃)ε_s(1₂)·m ⊗_t 1₁
    let ones3 = h.comul().tensor(&h.id())?.compose(h.delta_one())?;
    let r_inv_with = |twist: &LinearMap| -> Result<LinearMap> {
        let raw = Wiring::from_map(ones3.tensor(twist)?)
            .apply(2, h.counit())?
            .apply(1, &h.counital().eps_s)?
            .apply(1, &mm.action)?
            .permute(&[1, 0])?
            .finish();
        let in_unit = ue.land_with(&LinearMap::flip(f, k, d).compose(&raw)?, &[k], "1₁ ∈ H_s")?;
        let raw = LinearMap::flip(f, s, k).compose(&in_unit)?;
        re.land(&truncate(h, mm, &unit.module)?.compose(&raw)?, "r⁻¹")
    };
    let r_inv = r_inv_with(&mm.id())?;
    let r_inv_printed = r_inv_with(&mm.alpha)?;
    Ok(UnitConstraints { left_tensor, right_tensor, l, l_inv, r, r_inv, r_inv_printed })
}

/// Mutual inverseness of the unit constraints and their naturality data.
pub fn check_unit_constraints(h: &WeakHomHopfAlgebra, unit: &Obj, m: &Obj) -> Result<CheckReport> {
    let u = unit_constraints(h, unit, m)?;
    let anchor = "monoidal.unit";
    let mut r = CheckReport::new(format!("unit constraints of {}", m.name));
    let id_m = m.module.id();
    let id_l = u.left_tensor.module.id();
    let id_r = u.right_tensor.module.id();
    r.push(CheckEntry::compare("l-after-l-inverse", anchor, "l∘l⁻¹ = id", &u.l.compose(&u.l_inv)?, &id_m)?);
    r.push(CheckEntry::compare("l-inverse-after-l", anchor, "l⁻¹∘l = id", &u.l_inv.compose(&u.l)?, &id_l)?);
    r.push(CheckEntry::compare("r-after-r-inverse", anchor, "r∘r⁻¹ = id", &u.r.compose(&u.r_inv)?, &id_m)?);
    r.push(CheckEntry::compare("r-inverse-after-r", anchor, "r⁻¹∘r = id", &u.r_inv.compose(&u.r)?, &id_r)?);
    let printed = u.r.compose(&u.r_inv_printed)?;
    if printed != id_m {
        r.deviation(R_INV_DEVIATION);
    }
    for e in morphism_entries(h, "l", anchor, &u.left_tensor.module, &m.module, &u.l)? {
        r.push(e);
    }
    for e in morphism_entries(h, "r", anchor, &u.right_tensor.module, &m.module, &u.r)? {
        r.push(e);
    }
    if unit_conventions_differ(h) {
        r.deviation("source and target counital subalgebras differ; the unit object is H_s");
    }
    Ok(r)
}

/// `a_{M,N,P⊗Q} ∘ a_{M⊗N,P,Q} = (id_M ⊗ a_{N,P,Q}) ∘ a_{M,N⊗P,Q} ∘ (a_{M,N,P} ⊗ id_Q)`.
pub fn check_pentagon(h: &WeakHomHopfAlgebra, product: Product, objs: [&Obj; 4]) -> Result<CheckReport> {
    check_pentagon_cached(h, &TensorCache::new(), product, objs)
}

pub fn check_pentagon_cached(h: &WeakHomHopfAlgebra, cache: &TensorCache, product: Product, objs: [&Obj; 4]) -> Result<CheckReport> {
    let [m, n, p, q] = objs;
    let t = |a: &Obj, b: &Obj| cache.get(h, product, a, b);
    let mn = t(m, n)?;
    let np = t(n, p)?;
    let pq = t(p, q)?;
    let mn_p = t(&mn, p)?;
    let mn_p_q = t(&mn_p, q)?;
    let mn_pq = t(&mn, &pq)?;
    let n_pq = t(n, &pq)?;
    let m_n_pq = t(m, &n_pq)?;
    let m_np = t(m, &np)?;
    let m_np_q = t(&m_np, q)?;
    let np_q = t(&np, q)?;
    let m_npq = t(m, &np_q)?;

    let lhs = associator_between(&mn_pq, &m_n_pq)?.compose(&associator_between(&mn_p_q, &mn_pq)?)?;
    let a3 = tensor_maps(&mn_p_q, &m_np_q, &associator_between(&mn_p, &m_np)?, &q.module.id())?;
    let a4 = associator_between(&m_np_q, &m_npq)?;
    let a5 = tensor_maps(&m_npq, &m_n_pq, &m.module.id(), &associator_between(&np_q, &n_pq)?)?;
    let rhs = a5.compose(&a4)?.compose(&a3)?;
    let mut r = CheckReport::new(format!("pentagon ({}, {}, {}, {})", m.name, n.name, p.name, q.name));
    r.push(CheckEntry::compare("pentagon", "monoidal.pentagon", "a∘a = (id⊗a)∘a∘(a⊗id)", &lhs, &rhs)?);
    Ok(r)
}

/// `(r_M ⊗ id_N) = (id_M ⊗ l_N) ∘ a_{M,H_s,N}` on `(M ⊗_t H_s) ⊗_t N`.
pub fn check_triangle(h: &WeakHomHopfAlgebra, unit: &Obj, m: &Obj, n: &Obj) -> Result<CheckReport> {
    let um = unit_constraints(h, unit, m)?;
    let un = unit_constraints(h, unit, n)?;
    let mu = &um.right_tensor;
    let mu_n = truncated_tensor(h, mu, n)?;
    let un_t = &un.left_tensor;
    let m_un = truncated_tensor(h, m, un_t)?;
    let mn = truncated_tensor(h, m, n)?;
    let lhs = tensor_maps(&mu_n, &mn, &um.r, &n.module.id())?;
    let rhs = tensor_maps(&m_un, &mn, &m.module.id(), &un.l)?.compose(&associator_between(&mu_n, &m_un)?)?;
    let mut r = CheckReport::new(format!("triangle ({}, {})", m.name, n.name));
    r.push(CheckEntry::compare("triangle", "monoidal.triangle", "r⊗id = (id⊗l)∘a", &lhs, &rhs)?);
    if unit_conventions_differ(h) {
        r.deviation("source and target counital subalgebras differ; the unit object is H_s");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forge::{character_module, group_algebra, groupoid_algebra, GroupPresentation, GroupoidPresentation};
    use crate::Field;

    fn kz2() -> WeakHomHopfAlgebra {
        group_algebra(Field::Rational, &GroupPresentation::cyclic(2).unwrap()).unwrap()
    }

    #[test]
    fn landing_outside_the_subspace_names_the_column() {
        let f = Field::Rational;
        let line = Subspace::image(&LinearMap::from_entries(f, &[1], &[2], [(0, 0, f.one())]).unwrap());
        let e = Embedding::of(&line);
        assert_eq!(e.dim(), 1);
        let inside = LinearMap::from_entries(f, &[2], &[2], [(0, 1, f.int(3))]).unwrap();
        assert_eq!(e.land(&inside, "x").unwrap().entry(0, 1), f.int(3));
        let outside = LinearMap::identity(f, &[2]);
        assert!(matches!(e.land(&outside, "x"), Err(Error::EscapesSubspace { index: 1, .. })));
    }

    #[test]
    fn truncation_is_everything_over_a_hopf_algebra() {
        let h = kz2();
        let m = character_module(&h, &[h.field().one(), h.field().int(-1)], 1).unwrap();
        assert!(truncation_projector(&h, &m, &m).unwrap().is_identity());
        assert!(!unit_conventions_differ(&h));
    }

    #[test]
    fn diagonal_action_of_characters_multiplies_them() {
        let h = kz2();
        let f = h.field();
        let sign = character_module(&h, &[f.one(), f.int(-1)], 1).unwrap();
        let act = diagonal_action(&h, &sign, &sign, 0).unwrap();
        assert_eq!(act.entry(0, 1), f.one());
        let coact = product_coaction(&h, &sign, &sign, 0).unwrap();
        assert_eq!(coact.entry(0, 0), f.one());
    }

    #[test]
    fn plain_objects_have_no_tensor_parts() {
        let h = kz2();
        let m = character_module(&h, &[h.field().one(), h.field().one()], 0).unwrap();
        let o = YDObject::plain("m", m);
        assert!(o.tensor_parts().is_err());
        assert_eq!(o.product(), None);
    }

    #[test]
    fn groupoid_unit_object_acts_through_the_counital_map() {
        let h = groupoid_algebra(Field::Rational, &GroupoidPresentation::pair(2).unwrap()).unwrap();
        let unit = unit_object(&h).unwrap();
        assert!(matches!(unit.shape, Shape::Unit(_)));
        assert!(check_yd_31(&h, &unit.module).unwrap().passed());
    }
}
