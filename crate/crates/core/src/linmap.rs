//! Linear maps between tensor powers of finite-dimensional spaces.
//!
//! Basis index convention: a basis tuple `(i_0, .., i_{k-1})` over factor dimensions
//! `(n_0, .., n_{k-1})` has flat index `((i_0 * n_1 + i_1) * n_2 + ..) + i_{k-1}`, i.e.
//! row-major with the first factor most significant. An empty shape is the ground
//! field itself (dimension 1). Every Sweedler-style formula in this crate is compiled
//! down to this one convention through [`Wiring`].
//!
//! Storage is row-compressed: one sorted list of `(column, value)` pairs per codomain
//! basis vector, with no explicit zeros. Equality of maps is therefore structural.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn shape_dim(shape: &[usize]) -> usize {
    shape.iter().product()
}

/// Flat index to basis tuple.
pub fn unflatten(mut index: usize, shape: &[usize]) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for (slot, &n) in out.iter_mut().zip(shape).rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// Basis tuple to flat index.
pub fn flatten(tuple: &[usize], shape: &[usize]) -> usize {
    tuple.iter().zip(shape).fold(0, |acc, (&i, &n)| acc * n + i)
}

/// Output shape of a wire permutation and, for each output basis index, its input index.
fn wire_sources(shape: &[usize], perm: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut seen = vec![false; shape.len()];
    if perm.len() != shape.len() || perm.iter().any(|&p| p >= shape.len() || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Structural(format!("{perm:?} is not a permutation of {} wires", shape.len())));
    }
    let out_shape: Vec<usize> = perm.iter().map(|&p| shape[p]).collect();
    let n = shape_dim(shape);
    let mut strides = vec![1; shape.len()];
    for i in (0..shape.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * shape[i + 1];
    }
    let step: Vec<usize> = perm.iter().map(|&p| strides[p]).collect();
    let mut sources = Vec::with_capacity(n);
    let mut digits = vec![0; out_shape.len()];
    let mut src = 0;
    for _ in 0..n {
        sources.push(src);
        for i in (0..out_shape.len()).rev() {
            digits[i] += 1;
            src += step[i];
            if digits[i] < out_shape[i] {
                break;
            }
            src -= step[i] * out_shape[i];
            digits[i] = 0;
        }
    }
    Ok((out_shape, sources))
}

/// Dense scratch row used to sum sparse rows.
pub(crate) struct Accumulator {
    vals: Vec<Option<Scalar>>,
    touched: Vec<usize>,
}

impl Accumulator {
    pub(crate) fn new(width: usize) -> Self {
        Accumulator { vals: vec![None; width], touched: Vec::new() }
    }

    pub(crate) fn add_scaled(&mut self, coeff: &Scalar, row: &[(usize, Scalar)]) {
        for (j, v) in row {
            let term = coeff * v;
            match &mut self.vals[*j] {
                Some(acc) => *acc = &*acc + &term,
                slot @ None => {
                    *slot = Some(term);
                    self.touched.push(*j);
                }
            }
        }
    }

    pub(crate) fn add(&mut self, j: usize, v: Scalar) {
        match &mut self.vals[j] {
            Some(acc) => *acc = &*acc + &v,
            slot @ None => {
                *slot = Some(v);
                self.touched.push(j);
            }
        }
    }

    pub(crate) fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for j in self.touched.drain(..) {
            if let Some(v) = self.vals[j].take() {
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    domain: Vec<usize>,
    codomain: Vec<usize>,
    rows: Vec<SparseVec>,
}

impl LinearMap {
    pub fn zero(field: Field, domain: &[usize], codomain: &[usize]) -> Self {
        LinearMap { field, domain: domain.to_vec(), codomain: codomain.to_vec(), rows: vec![Vec::new(); shape_dim(codomain)] }
    }

    pub fn identity(field: Field, shape: &[usize]) -> Self {
        let n = shape_dim(shape);
        LinearMap { field, domain: shape.to_vec(), codomain: shape.to_vec(), rows: (0..n).map(|i| vec![(i, field.one())]).collect() }
    }

    /// Builds a map from `(row, column, value)` triples; repeated positions are summed.
    pub fn from_entries(
        field: Field,
        domain: &[usize],
        codomain: &[usize],
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let (nr, nc) = (shape_dim(codomain), shape_dim(domain));
        let mut by_row: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nr];
        for (r, c, v) in entries {
            if r >= nr || c >= nc {
                return Err(Error::Structural(format!("entry ({r}, {c}) outside a {nr}x{nc} map")));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            by_row[r].push((c, v));
        }
        let mut acc = Accumulator::new(nc);
        let rows = by_row
            .into_iter()
            .map(|row| {
                for (c, v) in row {
                    acc.add(c, v);
                }
                acc.drain()
            })
            .collect();
        Ok(LinearMap { field, domain: domain.to_vec(), codomain: codomain.to_vec(), rows })
    }

    /// Builds a map column by column: `image(j)` lists the image of domain basis vector `j`.
    pub fn from_columns<F>(field: Field, domain: &[usize], codomain: &[usize], mut image: F) -> Result<Self>
    where
        F: FnMut(usize) -> Vec<(usize, Scalar)>,
    {
        let mut entries = Vec::new();
        for c in 0..shape_dim(domain) {
            for (r, v) in image(c) {
                entries.push((r, c, v));
            }
        }
        Self::from_entries(field, domain, codomain, entries)
    }

    /// Dense row-major constructor; `rows[r][c]` is the coefficient of output `r` in the image of input `c`.
    pub fn from_dense(field: Field, domain: &[usize], codomain: &[usize], rows: &[Vec<Scalar>]) -> Result<Self> {
        if rows.len() != shape_dim(codomain) || rows.iter().any(|r| r.len() != shape_dim(domain)) {
            return Err(Error::Structural(format!("dense matrix does not match shape {domain:?} -> {codomain:?}")));
        }
        let entries = rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        Self::from_entries(field, domain, codomain, entries)
    }

    /// Covector `k^shape -> k` with the given coefficients.
    pub fn covector(field: Field, shape: &[usize], coeffs: &[Scalar]) -> Result<Self> {
        Self::from_dense(field, shape, &[], &[coeffs.to_vec()])
    }

    /// Vector as a map `k -> k^shape`.
    pub fn vector(field: Field, shape: &[usize], coeffs: &[Scalar]) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = coeffs.iter().map(|c| vec![c.clone()]).collect();
        Self::from_dense(field, &[], shape, &rows)
    }

    /// The factor permutation sending wire `perm[i]` of the input to wire `i` of the output.
    pub fn permutation(field: Field, shape: &[usize], perm: &[usize]) -> Result<Self> {
        let (out_shape, sources) = wire_sources(shape, perm)?;
        let rows = sources.into_iter().map(|j| vec![(j, field.one())]).collect();
        Ok(LinearMap { field, domain: shape.to_vec(), codomain: out_shape, rows })
    }

    /// `permutation(codomain, perm) ∘ self`, by moving rows.
    pub fn permute_codomain(self, perm: &[usize]) -> Result<Self> {
        let (out_shape, sources) = wire_sources(&self.codomain, perm)?;
        let mut old: Vec<Option<SparseVec>> = self.rows.into_iter().map(Some).collect();
        let rows = sources.into_iter().map(|j| old[j].take().unwrap_or_default()).collect();
        Ok(LinearMap { field: self.field, domain: self.domain, codomain: out_shape, rows })
    }

    /// The map on `k^n` sending basis vector `e_i` to `e_{images[i]}`.
    pub fn basis_map(field: Field, n: usize, images: &[usize]) -> Result<Self> {
        if images.len() != n || images.iter().any(|&j| j >= n) {
            return Err(Error::Structural(format!("{images:?} does not map {n} basis vectors into themselves")));
        }
        Self::from_entries(field, &[n], &[n], images.iter().enumerate().map(|(i, &j)| (j, i, field.one())))
    }

    /// The flip `a ⊗ b -> b ⊗ a`.
    pub fn flip(field: Field, a: usize, b: usize) -> Self {
        Self::permutation(field, &[a, b], &[1, 0]).expect("two-wire flip")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn codomain(&self) -> &[usize] {
        &self.codomain
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn dim_domain(&self) -> usize {
        shape_dim(&self.domain)
    }

    pub fn dim_codomain(&self) -> usize {
        shape_dim(&self.codomain)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        match self.rows[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// All nonzero entries as `(row, column, value)`, row-major.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v.clone()))).collect()
    }

    /// The same map with `delta` added to the entry at `(row, column)`.
    pub fn bumped(&self, row: usize, col: usize, delta: &Scalar) -> Result<Self> {
        let mut entries = self.entries();
        entries.push((row, col, delta.clone()));
        Self::from_entries(self.field, &self.domain, &self.codomain, entries)
    }

    pub fn is_square(&self) -> bool {
        self.dim_domain() == self.dim_codomain()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Reinterprets the factor shapes without touching entries; total dimensions must agree.
    pub fn reshape(&self, domain: &[usize], codomain: &[usize]) -> Result<Self> {
        if shape_dim(domain) != self.dim_domain() {
            return Err(Error::shape("reshape", &self.domain, domain));
        }
        if shape_dim(codomain) != self.dim_codomain() {
            return Err(Error::shape("reshape", &self.codomain, codomain));
        }
        Ok(LinearMap { field: self.field, domain: domain.to_vec(), codomain: codomain.to_vec(), rows: self.rows.clone() })
    }

    fn same_field(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<Self> {
        self.same_field(g)?;
        if g.codomain != self.domain {
            return Err(Error::shape("compose", &self.domain, &g.codomain));
        }
        let mut acc = Accumulator::new(g.dim_domain());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, v) in row {
                    acc.add_scaled(v, &g.rows[*k]);
                }
                acc.drain()
            })
            .collect();
        Ok(LinearMap { field: self.field, domain: g.domain.clone(), codomain: self.codomain.clone(), rows })
    }

    /// Kronecker product; factor shapes concatenate.
    pub fn tensor(&self, g: &LinearMap) -> Result<Self> {
        self.same_field(g)?;
        let gc = g.dim_domain();
        let mut rows = Vec::with_capacity(self.dim_codomain() * g.dim_codomain());
        for frow in &self.rows {
            for grow in &g.rows {
                let mut out = Vec::with_capacity(frow.len() * grow.len());
                for (j, a) in frow {
                    for (l, b) in grow {
                        out.push((j * gc + l, a * b));
                    }
                }
                rows.push(out);
            }
        }
        let mut domain = self.domain.clone();
        domain.extend_from_slice(&g.domain);
        let mut codomain = self.codomain.clone();
        codomain.extend_from_slice(&g.codomain);
        Ok(LinearMap { field: self.field, domain, codomain, rows })
    }

    pub fn add(&self, g: &LinearMap) -> Result<Self> {
        self.same_field(g)?;
        if self.domain != g.domain || self.codomain != g.codomain {
            return Err(Error::shape("add", &self.codomain, &g.codomain));
        }
        let one = self.field.one();
        let mut acc = Accumulator::new(self.dim_domain());
        let rows = self
            .rows
            .iter()
            .zip(&g.rows)
            .map(|(a, b)| {
                acc.add_scaled(&one, a);
                acc.add_scaled(&one, b);
                acc.drain()
            })
            .collect();
        Ok(LinearMap { field: self.field, domain: self.domain.clone(), codomain: self.codomain.clone(), rows })
    }

    pub fn sub(&self, g: &LinearMap) -> Result<Self> {
        self.add(&g.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let rows = if c.is_zero() {
            vec![Vec::new(); self.rows.len()]
        } else {
            self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, c * v)).collect()).collect()
        };
        LinearMap { field: self.field, domain: self.domain.clone(), codomain: self.codomain.clone(), rows }
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.dim_domain()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                cols[*j].push((i, v.clone()));
            }
        }
        LinearMap { field: self.field, domain: self.codomain.clone(), codomain: self.domain.clone(), rows: cols }
    }

    /// Image of domain basis vector `j`, as a sparse vector over the codomain.
    pub fn column(&self, j: usize) -> SparseVec {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.binary_search_by_key(&j, |(c, _)| *c).ok().map(|k| (i, r[k].1.clone())))
            .collect()
    }

    /// All columns at once (cheaper than repeated [`column`](Self::column) calls).
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    pub fn apply_sparse(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let t = self.transpose();
        let mut acc = Accumulator::new(self.dim_codomain());
        for (j, c) in v {
            acc.add_scaled(c, &t.rows[*j]);
        }
        acc.drain()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.dim_domain() {
            return Err(Error::shape("apply", &self.domain, &[v.len()]));
        }
        Ok(self.rows.iter().map(|row| row.iter().fold(self.field.zero(), |acc, (j, a)| &acc + &(a * &v[*j]))).collect())
    }

    /// Row rank by exact elimination.
    pub fn rank(&self) -> usize {
        crate::subspace::Subspace::span(self.field, &self.codomain, self.columns()).dim()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    /// Inverse of a map with exactly one nonzero entry in every row and column.
    fn monomial_inverse(&self) -> Option<Self> {
        let n = self.dim_domain();
        let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
        for (i, r) in self.rows.iter().enumerate() {
            match r.as_slice() {
                [(j, v)] if rows[*j].is_empty() => rows[*j].push((i, v.inverse()?)),
                _ => return None,
            }
        }
        Some(LinearMap { field: self.field, domain: self.codomain.clone(), codomain: self.domain.clone(), rows })
    }

    pub fn invert(&self) -> Result<Self> {
        let n = self.dim_codomain();
        if self.dim_domain() != n {
            return Err(Error::shape("invert", &self.domain, &self.codomain));
        }
        if let Some(inv) = self.monomial_inverse() {
            return Ok(inv);
        }
        // Rows of [A | I], sparse over 2n columns.
        let mut rows: Vec<SparseVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.push((n + i, self.field.one()));
                row
            })
            .collect();
        let mut acc = Accumulator::new(2 * n);
        let mut rank = 0;
        for col in 0..n {
            let at = |row: &SparseVec| row.binary_search_by_key(&col, |(j, _)| *j).ok();
            let Some(p) = (rank..n).find(|&i| at(&rows[i]).is_some()) else {
                continue;
            };
            rows.swap(rank, p);
            let k = at(&rows[rank]).expect("pivot row has the column");
            let inv = rows[rank][k].1.inverse().expect("pivot is nonzero");
            let pivot_row: SparseVec = rows[rank].iter().map(|(j, v)| (*j, &inv * v)).collect();
            rows[rank] = pivot_row.clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == rank {
                    continue;
                }
                if let Ok(k) = row.binary_search_by_key(&col, |(j, _)| *j) {
                    let factor = -&row[k].1;
                    acc.add_scaled(&self.field.one(), row);
                    acc.add_scaled(&factor, &pivot_row);
                    *row = acc.drain();
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(Error::Singular { rank: self.rank(), dim: n });
        }
        let rows = rows.into_iter().map(|r| r.into_iter().filter(|(j, _)| *j >= n).map(|(j, v)| (j - n, v)).collect()).collect();
        Ok(LinearMap { field: self.field, domain: self.codomain.clone(), codomain: self.domain.clone(), rows })
    }

    /// `self^k` for an endomorphism; negative `k` inverts first.
    pub fn power(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut acc = LinearMap::identity(self.field, &self.domain);
        if !self.is_square() || self.domain != self.codomain {
            return Err(Error::shape("power", &self.domain, &self.codomain));
        }
        for _ in 0..k.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Rows whose difference from `other` is nonzero, reported as domain columns.
    pub(crate) fn differing_columns(&self, other: &LinearMap) -> Result<Vec<usize>> {
        let d = self.sub(other)?;
        let mut cols: Vec<usize> = d.rows.iter().flat_map(|r| r.iter().map(|(j, _)| *j)).collect();
        cols.sort_unstable();
        cols.dedup();
        Ok(cols)
    }
}

/// String-diagram style builder: start from some input wires and apply maps at wire
/// positions, permute wires, and read off the composite. This is how Sweedler
/// expressions such as `h₁ ⊗ h₂₁ ⊗ h₂₂` become explicit contractions.
///
/// Intermediate states are stored by columns, so each step costs time proportional to the
/// number of nonzero entries rather than to the size of the intermediate tensor power.
#[derive(Clone, Debug)]
pub struct Wiring {
    field: Field,
    domain: Vec<usize>,
    wires: Vec<usize>,
    cols: Vec<SparseVec>,
}

fn combine(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
    terms.sort_unstable_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, v) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl Wiring {
    pub fn start(field: Field, shape: &[usize]) -> Self {
        Wiring::from_map(LinearMap::identity(field, shape))
    }

    pub fn from_map(map: LinearMap) -> Self {
        Wiring { field: map.field, domain: map.domain.clone(), wires: map.codomain.clone(), cols: map.columns() }
    }

    /// Applies `f` to the wires starting at `pos`; `f` may have an empty domain (inserting wires).
    pub fn apply(self, pos: usize, f: &LinearMap) -> Result<Self> {
        if f.field != self.field {
            return Err(Error::FieldMismatch(self.field, f.field));
        }
        let k = f.domain.len();
        if pos + k > self.wires.len() || self.wires[pos..pos + k] != f.domain[..] {
            return Err(Error::shape("wiring", &f.domain, self.wires.get(pos..).unwrap_or(&[])));
        }
        let right = shape_dim(&self.wires[pos + k..]);
        let (x, y) = (f.dim_domain(), f.dim_codomain());
        let fcols = f.columns();
        let cols = self
            .cols
            .iter()
            .map(|col| {
                let mut terms = Vec::with_capacity(col.len());
                for (idx, v) in col {
                    let (l, xx, r) = (idx / (x * right), (idx / right) % x, idx % right);
                    for (yy, w) in &fcols[xx] {
                        terms.push(((l * y + yy) * right + r, v * w));
                    }
                }
                combine(terms)
            })
            .collect();
        let mut wires = self.wires[..pos].to_vec();
        wires.extend_from_slice(&f.codomain);
        wires.extend_from_slice(&self.wires[pos + k..]);
        Ok(Wiring { field: self.field, domain: self.domain, wires, cols })
    }

    /// New wire `i` is old wire `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Result<Self> {
        let n = self.wires.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Structural(format!("{perm:?} is not a permutation of {n} wires")));
        }
        let out: Vec<usize> = perm.iter().map(|&p| self.wires[p]).collect();
        let mut new_stride = vec![0; n];
        let mut acc = 1;
        for i in (0..n).rev() {
            new_stride[perm[i]] = acc;
            acc *= out[i];
        }
        let wires = &self.wires;
        let cols = self
            .cols
            .into_iter()
            .map(|col| {
                let moved = col
                    .into_iter()
                    .map(|(mut idx, v)| {
                        let mut target = 0;
                        for w in (0..n).rev() {
                            target += (idx % wires[w]) * new_stride[w];
                            idx /= wires[w];
                        }
                        (target, v)
                    })
                    .collect();
                combine(moved)
            })
            .collect();
        Ok(Wiring { field: self.field, domain: self.domain, wires: out, cols })
    }

    pub fn wires(&self) -> &[usize] {
        &self.wires
    }

    pub fn finish(self) -> LinearMap {
        LinearMap { field: self.field, domain: self.wires, codomain: self.domain, rows: self.cols }.transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.int(n)
    }

    fn m(rows: &[&[i64]], domain: &[usize], codomain: &[usize]) -> LinearMap {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        LinearMap::from_dense(Field::Rational, domain, codomain, &rows).unwrap()
    }

    #[test]
    fn identity_composes_to_identity() {
        let id = LinearMap::identity(Field::Rational, &[2]);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn involution_squares_to_identity() {
        let f = m(&[&[0, 1], &[1, 0]], &[2], &[2]);
        assert!(f.compose(&f).unwrap().is_identity());
        assert_eq!(f.invert().unwrap(), f);
    }

    #[test]
    fn kronecker_of_identities() {
        let a = LinearMap::identity(Field::Rational, &[2]);
        let b = LinearMap::identity(Field::Rational, &[3]);
        let t = a.tensor(&b).unwrap();
        assert!(t.is_identity());
        assert_eq!(t.domain(), &[2, 3]);
    }

    #[test]
    fn one_by_one_scalars_multiply() {
        let a = m(&[&[2]], &[1], &[1]);
        let b = m(&[&[3]], &[1], &[1]);
        assert_eq!(a.tensor(&b).unwrap().entry(0, 0), q(6));
    }

    #[test]
    fn bump_cancels_an_entry() {
        let f = m(&[&[1, 2], &[0, 3]], &[2], &[2]);
        let g = f.bumped(0, 1, &q(-2)).unwrap();
        assert_eq!(g.nnz(), 2);
        assert_eq!(g.entries(), vec![(0, 0, q(1)), (1, 1, q(3))]);
    }

    #[test]
    fn compose_rejects_shape_mismatch() {
        let a = LinearMap::identity(Field::Rational, &[2]);
        let b = LinearMap::identity(Field::Rational, &[3]);
        let err = a.compose(&b).unwrap_err();
        assert!(err.to_string().contains("[2]") && err.to_string().contains("[3]"));
    }

    #[test]
    fn tensor_rejects_mixed_fields() {
        let a = LinearMap::identity(Field::Rational, &[2]);
        let b = LinearMap::identity(Field::prime(5).unwrap(), &[2]);
        assert!(matches!(a.tensor(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn singular_inverse_reports_rank() {
        let a = m(&[&[1, 2], &[2, 4]], &[2], &[2]);
        match a.invert() {
            Err(Error::Singular { rank, dim }) => assert_eq!((rank, dim), (1, 2)),
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn inverse_of_dense_rational_matrix() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]], &[3], &[3]);
        let inv = a.invert().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&a).unwrap().is_identity());
    }

    #[test]
    fn wiring_matches_kronecker_route() {
        let f = m(&[&[1, 2], &[0, 1], &[3, 0]], &[2], &[3]);
        let id2 = LinearMap::identity(Field::Rational, &[2]);
        let kron = id2.tensor(&f).unwrap().tensor(&id2).unwrap();
        let wired = Wiring::start(Field::Rational, &[2, 2, 2]).apply(1, &f).unwrap().finish();
        assert_eq!(wired, kron);
    }

    #[test]
    fn permutation_moves_wires() {
        // (a, b, c) -> (c, a, b)
        let p = LinearMap::permutation(Field::Rational, &[2, 3, 4], &[2, 0, 1]).unwrap();
        assert_eq!(p.codomain(), &[4, 2, 3]);
        let src = flatten(&[1, 2, 3], &[2, 3, 4]);
        let col = p.column(src);
        assert_eq!(col, vec![(flatten(&[3, 1, 2], &[4, 2, 3]), q(1))]);
    }

    #[test]
    fn index_round_trip() {
        let shape = [3, 1, 4, 2];
        for i in 0..shape_dim(&shape) {
            assert_eq!(flatten(&unflatten(i, &shape), &shape), i);
        }
    }
}
