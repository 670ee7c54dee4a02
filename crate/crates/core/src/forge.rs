//! Concrete instances: group and groupoid algebras, Yau twists, and the standard module corpus.

use crate::error::{Error, Result};
use crate::hom::{check_morphism, HomAlgebra, HomCoalgebra, MorphismEnds};
use crate::linmap::LinearMap;
use crate::qt::{RMatrix, SigmaForm};
use crate::report::{CheckEntry, CheckReport};
use crate::scalar::{Field, Scalar};
use crate::weak::{certified, WeakHomHopfAlgebra};
use crate::yd::{check_yd_31, unit_object, Obj, YDModule, YDObject};

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupPresentation {
    /// Validates associativity, the identity and the inverse table.
    pub fn new(table: Vec<Vec<usize>>, identity: usize, inverse: Vec<usize>) -> Result<Self> {
        let n = table.len();
        let bad = |m: String| Err(Error::Presentation(m));
        if n == 0 {
            return bad("a group needs at least one element".into());
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad(format!("Cayley table must be {n}×{n} with entries below {n}"));
        }
        if identity >= n || inverse.len() != n || inverse.iter().any(|&x| x >= n) {
            return bad("identity or inverse table out of range".into());
        }
        for g in 0..n {
            if table[identity][g] != g || table[g][identity] != g {
                return bad(format!("element {identity} is not an identity for {g}"));
            }
            if table[g][inverse[g]] != identity || table[inverse[g]][g] != identity {
                return bad(format!("{} is not an inverse of {g}", inverse[g]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("table is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(GroupPresentation { table, identity, inverse })
    }

    /// ℤ_n with generator `1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        Self::new(table, 0, inverse)
    }

    /// The symmetric group on `k` letters, elements in lexicographic order of their images.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut i = 0;
        while i < perms.len() {
            let p = perms[i].clone();
            for a in 0..k {
                for b in a + 1..k {
                    let mut q = p.clone();
                    q.swap(a, b);
                    if !perms.contains(&q) {
                        perms.push(q);
                    }
                }
            }
            i += 1;
        }
        perms.sort();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        // (στ)(x) = σ(τ(x))
        let table: Vec<Vec<usize>> =
            perms.iter().map(|s| perms.iter().map(|t| index(&t.iter().map(|&x| s[x]).collect())).collect()).collect();
        let inverse = perms
            .iter()
            .map(|s| {
                let mut inv = vec![0; k];
                for (x, &y) in s.iter().enumerate() {
                    inv[y] = x;
                }
                index(&inv)
            })
            .collect();
        Self::new(table, 0, inverse)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order()).all(|h| self.table[g][h] == self.table[h][g])
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][g];
            k += 1;
        }
        k
    }

    /// Conjugation by `g` as a permutation of the elements: `h ↦ g h g⁻¹`.
    pub fn conjugation(&self, g: usize) -> Vec<usize> {
        (0..self.order()).map(|h| self.mul(self.mul(g, h), self.inverse[g])).collect()
    }

    pub fn as_groupoid(&self) -> GroupoidPresentation {
        let n = self.order();
        GroupoidPresentation {
            objects: 1,
            source: vec![0; n],
            target: vec![0; n],
            compose: self.table.iter().map(|row| row.iter().map(|&x| Some(x)).collect()).collect(),
            identities: vec![self.identity],
            inverse: self.inverse.clone(),
        }
    }
}

/// A finite groupoid: morphisms with source and target, and a partial composition
/// `compose[g][h] = Some(g∘h)` exactly when `source(g) = target(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidPresentation {
    objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
    identities: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupoidPresentation {
    /// Validates the category axioms and invertibility; identities and inverses are derived.
    pub fn new(objects: usize, source: Vec<usize>, target: Vec<usize>, compose: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = source.len();
        let bad = |m: String| Err(Error::Presentation(m));
        if target.len() != n || compose.len() != n || compose.iter().any(|r| r.len() != n) {
            return bad("source, target and composition table sizes disagree".into());
        }
        if source.iter().chain(&target).any(|&o| o >= objects) {
            return bad("morphism endpoint out of range".into());
        }
        for g in 0..n {
            for h in 0..n {
                match compose[g][h] {
                    Some(gh) if source[g] == target[h] => {
                        if gh >= n || source[gh] != source[h] || target[gh] != target[g] {
                            return bad(format!("composite of {g} and {h} has wrong endpoints"));
                        }
                    }
                    None if source[g] != target[h] => {}
                    _ => return bad(format!("composability of ({g}, {h}) does not match endpoints")),
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = compose[a][b].and_then(|ab| compose[ab][c]);
                    let right = compose[b][c].and_then(|bc| compose[a][bc]);
                    if left != right {
                        return bad(format!("composition is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(objects);
        for o in 0..objects {
            let unit = (0..n).find(|&e| {
                source[e] == o
                    && target[e] == o
                    && (0..n).all(|g| (target[g] != o || compose[e][g] == Some(g)) && (source[g] != o || compose[g][e] == Some(g)))
            });
            match unit {
                Some(e) => identities.push(e),
                None => return bad(format!("object {o} has no identity morphism")),
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n).find(|&h| compose[g][h] == Some(identities[target[g]]) && compose[h][g] == Some(identities[source[g]]));
            match inv {
                Some(h) => inverse.push(h),
                None => return bad(format!("morphism {g} is not invertible")),
            }
        }
        Ok(GroupoidPresentation { objects, source, target, compose, identities, inverse })
    }

    /// `k` objects and only their identity morphisms.
    pub fn discrete(k: usize) -> Result<Self> {
        let compose = (0..k).map(|g| (0..k).map(|h| (g == h).then_some(g)).collect()).collect();
        Self::new(k, (0..k).collect(), (0..k).collect(), compose)
    }

    /// The pair groupoid on `k` objects: one morphism `e_ij: j -> i` for every ordered pair,
    /// indexed `i*k + j`, with `e_ij ∘ e_jl = e_il`.
    pub fn pair(k: usize) -> Result<Self> {
        let n = k * k;
        let source = (0..n).map(|g| g % k).collect();
        let target = (0..n).map(|g| g / k).collect();
        let compose = (0..n).map(|g| (0..n).map(|h| (g % k == h / k).then_some((g / k) * k + h % k)).collect()).collect();
        Self::new(k, source, target, compose)
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.source.len()
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn compose(&self) -> &[Vec<Option<usize>>] {
        &self.compose
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }
}

/// The group algebra `kG` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`, `α = id`; certified.
pub fn group_algebra(field: Field, g: &GroupPresentation) -> Result<WeakHomHopfAlgebra> {
    groupoid_algebra(field, &g.as_groupoid())
}

/// The groupoid algebra: morphism basis, `gh` = composite or `0`, `1` = sum of identities,
/// grouplike coproduct, `S(g) = g⁻¹`, `α = id`; certified.
pub fn groupoid_algebra(field: Field, g: &GroupoidPresentation) -> Result<WeakHomHopfAlgebra> {
    let n = g.morphisms();
    let one = field.one();
    let mul = LinearMap::from_entries(
        field,
        &[n, n],
        &[n],
        (0..n).flat_map(|a| (0..n).filter_map(move |b| g.compose[a][b].map(|ab| (ab, a * n + b, field.one())))),
    )?;
    let unit = LinearMap::from_entries(field, &[], &[n], g.identities.iter().map(|&e| (e, 0, one.clone())))?;
    let comul = LinearMap::from_entries(field, &[n], &[n, n], (0..n).map(|a| (a * n + a, a, field.one())))?;
    let counit = LinearMap::from_entries(field, &[n], &[], (0..n).map(|a| (0, a, field.one())))?;
    let antipode = LinearMap::basis_map(field, n, &g.inverse)?;
    let h = WeakHomHopfAlgebra::new(mul, unit, comul, counit, LinearMap::identity(field, &[n]), antipode)?;
    certified(h)
}

/// Checks that `beta` is a bialgebra automorphism of `h` commuting with `S` and `α`.
pub fn check_twist_map(h: &WeakHomHopfAlgebra, beta: &LinearMap) -> Result<CheckReport> {
    let anchor = "yau-twist";
    let mut r = CheckReport::new("Yau twist map");
    r.absorb("algebra", check_morphism(beta, MorphismEnds::Algebra(h.algebra(), h.algebra()))?);
    r.absorb("coalgebra", check_morphism(beta, MorphismEnds::Coalgebra(h.coalgebra(), h.coalgebra()))?);
    let inv = beta.invert();
    r.push(CheckEntry::fact("bijective", anchor, "β is bijective", inv.is_ok(), inv.err().map(|e| e.to_string())));
    let (s, a) = (h.antipode(), h.alpha());
    r.push(CheckEntry::compare("commutes-with-antipode", anchor, "β∘S = S∘β", &beta.compose(s)?, &s.compose(beta)?)?);
    r.push(CheckEntry::compare("commutes-with-alpha", anchor, "β∘α = α∘β", &beta.compose(a)?, &a.compose(beta)?)?);
    Ok(r)
}

/// `μ′ = β∘μ`, `Δ′ = Δ∘β`, `α′ = β∘α`, other structure unchanged. Fails if `β` is not an
/// admissible twist or if the result does not certify.
pub fn yau_twist(h: &WeakHomHopfAlgebra, beta: &LinearMap) -> Result<WeakHomHopfAlgebra> {
    let d = h.dim();
    if beta.domain() != [d] || beta.codomain() != [d] {
        return Err(Error::shape("twist map", &[d], beta.domain()));
    }
    let report = check_twist_map(h, beta)?;
    if !report.passed() {
        return Err(Error::Certification { what: "Yau twist map".into(), report: Box::new(report) });
    }
    let twisted = WeakHomHopfAlgebra::new(
        beta.compose(h.mul())?,
        h.unit().clone(),
        h.comul().compose(beta)?,
        h.counit().clone(),
        beta.compose(h.alpha())?,
        h.antipode().clone(),
    )?;
    certified(twisted)
}

/// Conjugation on the loops of a groupoid: `e_g·e_x = e_{β(gxg⁻¹)}` when composable,
/// `ρ(e_x) = e_{β(x)} ⊗ e_{β(x)}`, `α_M = β`. `beta` is the twist of `h` as a morphism permutation.
pub fn adjoint_module(h: &WeakHomHopfAlgebra, g: &GroupoidPresentation, beta: &[usize]) -> Result<YDModule> {
    let f = h.field();
    let n = g.morphisms();
    if h.dim() != n || beta.len() != n {
        return Err(Error::Structural(format!("adjoint module needs {n} morphisms, algebra has {}", h.dim())));
    }
    let loops: Vec<usize> = (0..n).filter(|&x| g.source[x] == g.target[x]).collect();
    let pos = |x: usize| loops.iter().position(|&y| y == x);
    let k = loops.len();
    let at = |x: usize| pos(beta[x]).ok_or_else(|| Error::Structural("twist does not preserve loops".into()));
    let mut action = Vec::new();
    for a in 0..n {
        for (j, &x) in loops.iter().enumerate() {
            if let Some(ax) = g.compose[a][x] {
                if let Some(c) = g.compose[ax][g.inverse[a]] {
                    action.push((at(c)?, a * k + j, f.one()));
                }
            }
        }
    }
    let mut coaction = Vec::new();
    let mut alpha = Vec::new();
    for (j, &x) in loops.iter().enumerate() {
        let i = at(x)?;
        coaction.push((i * n + beta[x], j, f.one()));
        alpha.push((i, j, f.one()));
    }
    YDModule::new(
        h,
        LinearMap::from_entries(f, &[n, k], &[k], action)?,
        LinearMap::from_entries(f, &[k], &[k, n], coaction)?,
        LinearMap::from_entries(f, &[k], &[k], alpha)?,
    )
}

/// The same module with action, coaction and twist all negated; again a Yetter-Drinfeld module.
pub fn negated(h: &WeakHomHopfAlgebra, m: &YDModule) -> Result<YDModule> {
    let minus = h.field().int(-1);
    YDModule::new(h, m.action.scale(&minus), m.coaction.scale(&minus), m.alpha.scale(&minus))
}

/// A one-dimensional module `h·v = χ(h)v`, `ρ(v) = c·v ⊗ x`, `α_M = χ(1)`.
pub fn character_module(h: &WeakHomHopfAlgebra, chi: &[Scalar], grade: usize) -> Result<YDModule> {
    let f = h.field();
    let d = h.dim();
    if chi.len() != d || grade >= d {
        return Err(Error::Structural("character or grade out of range".into()));
    }
    let scale = h.unit().column(0).iter().fold(f.zero(), |acc, (i, v)| acc + v.clone() * chi[*i].clone());
    let eps = h.counit().entry(0, grade);
    let c = eps.inverse().ok_or_else(|| Error::Structural("grade with zero counit".into()))? * scale.clone();
    YDModule::new(
        h,
        LinearMap::from_entries(f, &[d, 1], &[1], chi.iter().enumerate().map(|(i, v)| (0, i, v.clone())))?,
        LinearMap::from_entries(f, &[1], &[1, d], [(grade, 0, c)])?,
        LinearMap::from_entries(f, &[1], &[1], [(0, 0, scale)])?,
    )
}

/// Candidate characters: every assignment of `0` or a root of unity to the basis that is a
/// module structure with `α_M = χ(1) ≠ 0`.
pub fn characters(h: &WeakHomHopfAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let f = h.field();
    let d = h.dim();
    let mut values = vec![f.zero()];
    values.extend(f.roots_of_unity(d as u64));
    let mut out = Vec::new();
    let mut chi = vec![f.zero(); d];
    let total = values.len().pow(d as u32);
    for code in 0..total {
        let mut c = code;
        for slot in chi.iter_mut() {
            *slot = values[c % values.len()].clone();
            c /= values.len();
        }
        if is_character(h, &chi) {
            out.push(chi.clone());
        }
    }
    Ok(out)
}

fn is_character(h: &WeakHomHopfAlgebra, chi: &[Scalar]) -> bool {
    let f = h.field();
    let d = h.dim();
    let eval = |v: &[(usize, Scalar)]| v.iter().fold(f.zero(), |acc, (i, x)| acc + x.clone() * chi[*i].clone());
    let one = eval(&h.unit().column(0));
    if one.is_zero() {
        return false;
    }
    let alpha_cols = h.alpha().columns();
    let mul_cols = h.mul().columns();
    // χ(α(a))χ(b) = χ(ab)·χ(1) and χ(α(a)) = χ(a)
    for a in 0..d {
        let ca = eval(&alpha_cols[a]);
        if ca != chi[a] {
            return false;
        }
        for b in 0..d {
            if ca.clone() * chi[b].clone() != eval(&mul_cols[a * d + b]) * one.clone() {
                return false;
            }
        }
    }
    true
}

/// Basis elements usable as grades of a one-dimensional comodule: `Δ(x) = x⊗x`, `α(x) = x`, `ε(x) ≠ 0`.
pub fn grades(h: &WeakHomHopfAlgebra) -> Vec<usize> {
    let d = h.dim();
    let comul = h.comul().columns();
    let alpha = h.alpha().columns();
    (0..d)
        .filter(|&x| {
            let one = h.field().one();
            comul[x] == vec![(x * d + x, one.clone())] && alpha[x] == vec![(x, one)] && !h.counit().entry(0, x).is_zero()
        })
        .collect()
}

/// `R = (1/m) Σ ω^{ij} g^{ki} ⊗ g^{kj}` over `i, j < m` on a cyclic group algebra of order
/// `n = k·m` (basis `g^0, …, g^{n-1}`), with `R̄` the same sum over `ω^{-ij}`. `ω` must have order
/// dividing `m`.
pub fn cyclic_rmatrix(h: &WeakHomHopfAlgebra, step: usize, omega: &Scalar) -> Result<RMatrix> {
    let f = h.field();
    let n = h.dim();
    if step == 0 || !n.is_multiple_of(step) {
        return Err(Error::Structural(format!("step {step} does not divide {n}")));
    }
    let m = n / step;
    let inv_m = f.int(m as i64).inverse().ok_or_else(|| Error::Structural("order is zero in the field".into()))?;
    let omega_inv = omega.inverse().ok_or_else(|| Error::Structural("ω is zero".into()))?;
    let vector = |w: &Scalar| {
        let entries = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| ((step * i) * n + step * j, 0, w.pow((i * j) as u64) * inv_m.clone()));
        LinearMap::from_entries(f, &[], &[n, n], entries.collect::<Vec<_>>())
    };
    RMatrix::new(h, vector(omega)?, vector(&omega_inv)?)
}

/// `σ(g^a, g^b) = ω^{ab}` and `σ′(g^a, g^b) = ω^{-ab}` on a cyclic group algebra; `ω^n` must be `1`.
pub fn cyclic_form(h: &WeakHomHopfAlgebra, omega: &Scalar) -> Result<SigmaForm> {
    let f = h.field();
    let n = h.dim();
    let omega_inv = omega.inverse().ok_or_else(|| Error::Structural("ω is zero".into()))?;
    let form = |w: &Scalar| {
        let entries: Vec<_> = (0..n * n).map(|ab| (0, ab, w.pow(((ab / n) * (ab % n)) as u64))).collect();
        LinearMap::from_entries(f, &[n, n], &[], entries)
    };
    SigmaForm::new(h, form(omega)?, form(&omega_inv)?)
}

/// `R = R̄ = Δ(1)`: an R-matrix whenever `H` is cocommutative.
pub fn trivial_rmatrix(h: &WeakHomHopfAlgebra) -> Result<RMatrix> {
    RMatrix::new(h, h.delta_one().clone(), h.delta_one().clone())
}

/// `σ(a, b) = σ′(a, b) = ε(ab)`: a coquasitriangular form whenever `H` is commutative.
pub fn trivial_form(h: &WeakHomHopfAlgebra) -> Result<SigmaForm> {
    let e = h.counit().compose(h.mul())?;
    SigmaForm::new(h, e.clone(), e)
}

/// A certified algebra with the data the corpus is built from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub h: WeakHomHopfAlgebra,
    pub presentation: GroupoidPresentation,
    /// The twist of `h` as a permutation of the morphism basis.
    pub twist: Vec<usize>,
    /// Whether the negated adjoint module (twist `-β`) joins the corpus.
    pub negated_adjoint: bool,
    pub rmatrix: Option<RMatrix>,
    pub sigma: Option<SigmaForm>,
}

impl Instance {
    pub fn new(name: &str, h: WeakHomHopfAlgebra, presentation: GroupoidPresentation, twist: Vec<usize>) -> Self {
        Instance { name: name.into(), h, presentation, twist, negated_adjoint: false, rmatrix: None, sigma: None }
    }

    /// Every module-comodule candidate the corpus is drawn from, certified or not: the
    /// one-dimensional character/grade pairs and the adjoint module (and its negation).
    pub fn candidates(&self) -> Result<Vec<(String, YDModule)>> {
        let h = &self.h;
        let mut out = Vec::new();
        for (ci, chi) in characters(h)?.iter().enumerate() {
            for x in grades(h) {
                out.push((format!("chi{ci}@{x}"), character_module(h, chi, x)?));
            }
        }
        let adj = adjoint_module(h, &self.presentation, &self.twist)?;
        if self.negated_adjoint {
            out.push(("adjoint-neg".into(), negated(h, &adj)?));
        }
        out.push(("adjoint".into(), adj));
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// The certified candidates, preceded by the unit object when `H` is not a Hopf algebra.
    pub fn yd_corpus(&self) -> Result<Vec<Obj>> {
        let mut out = standard_yd_corpus(&self.h)?;
        for (name, m) in self.candidates()? {
            if (name == "adjoint" || name == "adjoint-neg") && check_yd_31(&self.h, &m)?.passed() {
                out.push(YDObject::plain(name, m));
            }
        }
        Ok(out)
    }
}

/// The unit object when `H` is not Hopf, then every one-dimensional module `h·x = χ(h)x`,
/// `ρ(x) = x ⊗ g` with `χ(1) = 1` that passes the compatibility condition.
pub fn standard_yd_corpus(h: &WeakHomHopfAlgebra) -> Result<Vec<Obj>> {
    let mut out = Vec::new();
    if !h.is_hopf() {
        out.push(unit_object(h)?);
    }
    let one = h.field().one();
    for (ci, chi) in characters(h)?.iter().enumerate() {
        if character_module(h, chi, 0)?.alpha.entry(0, 0) != one {
            continue;
        }
        for x in grades(h) {
            let m = character_module(h, chi, x)?;
            if check_yd_31(h, &m)?.passed() {
                out.push(YDObject::plain(format!("chi{ci}@{x}"), m));
            }
        }
    }
    Ok(out)
}

fn bump_first(f: &LinearMap) -> Result<(String, LinearMap)> {
    let one = f.field().one();
    let (r, c) = f.entries().first().map(|e| (e.0, e.1)).unwrap_or((0, 0));
    Ok((format!("[{r},{c}]"), f.bumped(r, c, &one)?))
}

/// Module-comodule pairs made from the adjoint modules by adding 1 to the first stored entry of
/// the coaction, the action or the twist.
pub fn mutated_pairs(inst: &Instance) -> Result<Vec<(String, YDModule)>> {
    let h = &inst.h;
    let mut out = Vec::new();
    for (name, m) in inst.candidates()? {
        if name != "adjoint" && name != "adjoint-neg" {
            continue;
        }
        let (at, coaction) = bump_first(&m.coaction)?;
        out.push((format!("{name}~coaction{at}"), YDModule::new(h, m.action.clone(), coaction, m.alpha.clone())?));
        let (at, action) = bump_first(&m.action)?;
        out.push((format!("{name}~action{at}"), YDModule::new(h, action, m.coaction.clone(), m.alpha.clone())?));
        let (at, alpha) = bump_first(&m.alpha)?;
        out.push((format!("{name}~twist{at}"), YDModule::new(h, m.action.clone(), m.coaction.clone(), alpha)?));
    }
    Ok(out)
}

/// `H` with one structure constant changed: 1 is added to the first stored entry of each of
/// μ, η, Δ, ε, S and α in turn.
pub fn structure_mutations(h: &WeakHomHopfAlgebra) -> Result<Vec<(String, WeakHomHopfAlgebra)>> {
    let maps = [h.mul(), h.unit(), h.comul(), h.counit(), h.antipode(), h.alpha()];
    let names = ["mul", "unit", "comul", "counit", "antipode", "alpha"];
    let mut out = Vec::new();
    for (k, name) in names.iter().enumerate() {
        let mut parts: Vec<LinearMap> = maps.iter().map(|m| (*m).clone()).collect();
        let (at, bumped) = bump_first(maps[k])?;
        parts[k] = bumped;
        let [mul, unit, comul, counit, antipode, alpha]: [LinearMap; 6] =
            parts.try_into().map_err(|_| Error::Structural("six structure maps".into()))?;
        let algebra = HomAlgebra::new(mul, unit, alpha.clone())?;
        let coalgebra = HomCoalgebra::new(comul, counit, alpha)?;
        out.push((format!("{name}{at}"), WeakHomHopfAlgebra::from_parts(algebra, coalgebra, antipode)?));
    }
    Ok(out)
}

fn twisted(h: &WeakHomHopfAlgebra, beta: &[usize]) -> Result<WeakHomHopfAlgebra> {
    yau_twist(h, &LinearMap::basis_map(h.field(), h.dim(), beta)?)
}

/// The standard instances: kℤ₂, kℤ₃ over GF(7), kS₃, the discrete and pair groupoids on two
/// objects, kℤ₂ twisted by its identity automorphism, kℤ₄ twisted by inversion and kS₃ twisted
/// by conjugation with a transposition.
pub fn standard_instances() -> Result<Vec<Instance>> {
    let q = Field::Rational;
    let gf7 = Field::prime(7)?;
    let mut out = Vec::new();

    let z2 = GroupPresentation::cyclic(2)?;
    let h = group_algebra(q, &z2)?;
    let mut i = Instance::new("kZ2", h.clone(), z2.as_groupoid(), vec![0, 1]);
    i.negated_adjoint = true;
    i.rmatrix = Some(cyclic_rmatrix(&h, 1, &q.int(-1))?);
    i.sigma = Some(cyclic_form(&h, &q.int(-1))?);
    out.push(i);

    let z3 = GroupPresentation::cyclic(3)?;
    let h = group_algebra(gf7, &z3)?;
    let mut i = Instance::new("kZ3/GF7", h.clone(), z3.as_groupoid(), vec![0, 1, 2]);
    i.rmatrix = Some(cyclic_rmatrix(&h, 1, &gf7.int(2))?);
    i.sigma = Some(cyclic_form(&h, &gf7.int(2))?);
    out.push(i);

    let s3 = GroupPresentation::symmetric(3)?;
    let h = group_algebra(q, &s3)?;
    let mut i = Instance::new("kS3", h.clone(), s3.as_groupoid(), (0..6).collect());
    i.rmatrix = Some(trivial_rmatrix(&h)?);
    out.push(i);

    for (name, g) in [("disc2", GroupoidPresentation::discrete(2)?), ("pair2", GroupoidPresentation::pair(2)?)] {
        let h = groupoid_algebra(q, &g)?;
        let twist = (0..h.dim()).collect();
        let mut i = Instance::new(name, h.clone(), g, twist);
        i.negated_adjoint = true;
        i.rmatrix = Some(trivial_rmatrix(&h)?);
        if name == "disc2" {
            i.sigma = Some(trivial_form(&h)?);
        }
        out.push(i);
    }

    let h = twisted(&group_algebra(q, &z2)?, &[0, 1])?;
    let mut i = Instance::new("kZ2^id", h.clone(), z2.as_groupoid(), vec![0, 1]);
    i.rmatrix = Some(cyclic_rmatrix(&h, 1, &q.int(-1))?);
    i.sigma = Some(cyclic_form(&h, &q.int(-1))?);
    out.push(i);

    let z4 = GroupPresentation::cyclic(4)?;
    let beta = z4.inverse().to_vec();
    let h = twisted(&group_algebra(q, &z4)?, &beta)?;
    let mut i = Instance::new("kZ4^inv", h.clone(), z4.as_groupoid(), beta);
    i.negated_adjoint = true;
    i.rmatrix = Some(cyclic_rmatrix(&h, 2, &q.int(-1))?);
    i.sigma = Some(cyclic_form(&h, &q.int(-1))?);
    out.push(i);

    let beta = s3.conjugation(1);
    let h = twisted(&group_algebra(q, &s3)?, &beta)?;
    let mut i = Instance::new("kS3^conj", h.clone(), s3.as_groupoid(), beta);
    i.rmatrix = Some(trivial_rmatrix(&h)?);
    out.push(i);
    Ok(out)
}
