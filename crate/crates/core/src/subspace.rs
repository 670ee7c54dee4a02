//! Subspaces of tensor spaces, held in fully reduced row-echelon form.

use crate::error::{Error, Result};
use crate::linmap::{shape_dim, Accumulator, LinearMap, SparseVec};
use crate::scalar::{Field, Scalar};

/// A subspace of `k^ambient` with an RREF basis.
///
/// Every basis row has a leading `1` in its pivot column and zeros in every other pivot
/// column, so the coordinates of a member vector are read off at the pivot columns. That
/// makes the projection a coordinate selection and `projection ∘ inclusion = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: Vec<usize>,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: &[usize]) -> Self {
        Subspace { field, ambient: ambient.to_vec(), basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: &[usize]) -> Self {
        let n = shape_dim(ambient);
        Subspace { field, ambient: ambient.to_vec(), basis: (0..n).map(|i| vec![(i, field.one())]).collect(), pivots: (0..n).collect() }
    }

    /// Span of sparse generating vectors.
    pub fn span(field: Field, ambient: &[usize], generators: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Subspace::zero(field, ambient);
        let mut acc = Accumulator::new(shape_dim(ambient));
        for g in generators {
            s.insert(g, &mut acc);
        }
        s.sort_rows();
        s
    }

    /// Column span of `f`.
    pub fn image(f: &LinearMap) -> Self {
        Self::span(f.field(), f.codomain(), f.columns())
    }

    fn reduce(&self, v: &[(usize, Scalar)], acc: &mut Accumulator) -> SparseVec {
        let one = self.field.one();
        acc.add_scaled(&one, v);
        // Basis rows vanish at other pivots, so one pass over v's pivot entries clears them all.
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if let Ok(k) = v.binary_search_by_key(&p, |(j, _)| *j) {
                acc.add_scaled(&-&v[k].1, row);
            }
        }
        acc.drain()
    }

    fn insert(&mut self, v: SparseVec, acc: &mut Accumulator) {
        let r = self.reduce(&v, acc);
        let Some((p, lead)) = r.first().cloned() else { return };
        let inv = lead.inverse().expect("nonzero lead");
        let row: SparseVec = r.iter().map(|(j, x)| (*j, &inv * x)).collect();
        let one = self.field.one();
        for b in &mut self.basis {
            if let Ok(k) = b.binary_search_by_key(&p, |(j, _)| *j) {
                let c = -&b[k].1;
                acc.add_scaled(&one, b);
                acc.add_scaled(&c, &row);
                *b = acc.drain();
            }
        }
        self.basis.push(row);
        self.pivots.push(p);
    }

    fn sort_rows(&mut self) {
        let mut order: Vec<usize> = (0..self.pivots.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        self.basis = order.iter().map(|&i| std::mem::take(&mut self.basis[i])).collect();
        self.pivots = order.iter().map(|&i| self.pivots[i]).collect();
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> &[usize] {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == shape_dim(&self.ambient)
    }

    /// Exact membership of a sparse vector.
    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        let mut acc = Accumulator::new(shape_dim(&self.ambient));
        self.reduce(v, &mut acc).is_empty()
    }

    /// Exact membership of a dense vector.
    pub fn member(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != shape_dim(&self.ambient) {
            return Err(Error::shape("member", &self.ambient, &[v.len()]));
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        let sparse: SparseVec = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
        Ok(self.contains(&sparse))
    }

    /// `[dim] -> ambient`, columns are the basis rows.
    pub fn inclusion(&self) -> LinearMap {
        let entries = self.basis.iter().enumerate().flat_map(|(c, row)| row.iter().map(move |(r, v)| (*r, c, v.clone())));
        LinearMap::from_entries(self.field, &[self.dim()], &self.ambient, entries).expect("basis fits ambient")
    }

    /// `ambient -> [dim]`, reading coordinates at pivot columns. A left inverse of the inclusion.
    pub fn projection(&self) -> LinearMap {
        let entries = self.pivots.iter().enumerate().map(|(r, &p)| (r, p, self.field.one()));
        LinearMap::from_entries(self.field, &self.ambient, &[self.dim()], entries).expect("pivots fit ambient")
    }

    /// Whether every column of `f` lies in this subspace; returns the first offending column.
    pub fn first_escape(&self, f: &LinearMap) -> Option<usize> {
        let mut acc = Accumulator::new(shape_dim(&self.ambient));
        f.columns().iter().position(|c| !self.reduce(c, &mut acc).is_empty())
    }

    /// `projection ∘ f`, after checking that `f` lands inside the subspace.
    pub fn corestrict(&self, f: &LinearMap, what: &str) -> Result<LinearMap> {
        if f.codomain() != self.ambient.as_slice() {
            return Err(Error::shape("corestrict", &self.ambient, f.codomain()));
        }
        if let Some(index) = self.first_escape(f) {
            return Err(Error::EscapesSubspace { what: what.to_string(), index });
        }
        self.projection().compose(f)
    }

    pub fn same_space(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }

    /// Whether this subspace is contained in `other`.
    pub fn is_within(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }
}
