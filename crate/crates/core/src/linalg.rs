//! Sparse exact linear algebra: fully reduced row echelon forms with
//! leftmost pivots, kernels and ranks.

use std::collections::HashMap;

use crate::field::Field;

/// Sparse vector: `(column, value)` pairs, columns strictly increasing,
/// values nonzero.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Row space of a set of vectors in k^ncols, kept in fully reduced row
/// echelon form. Each row is monic at its pivot (its first nonzero column)
/// and vanishes at every other pivot column, so the form is canonical.
#[derive(Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: HashMap<usize, usize>,
}

impl<F: Field> std::fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Echelon")
            .field("ncols", &self.ncols)
            .field("pivots", &self.pivots())
            .finish()
    }
}

impl<F: Field> PartialEq for Echelon<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ncols == other.ncols
            && self.dim() == other.dim()
            && self
                .pivots()
                .into_iter()
                .all(|p| match other.pivot_row.get(&p) {
                    Some(&j) => self.rows[self.pivot_row[&p]] == other.rows[j],
                    None => false,
                })
    }
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Self {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn from_rows<'a>(field: &F, ncols: usize, rows: impl IntoIterator<Item = &'a SparseVec<F::Elem>>) -> Self
    where
        F::Elem: 'a,
    {
        let mut e = Self::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Full space k^ncols.
    pub fn full(field: &F, ncols: usize) -> Self {
        let mut e = Self::new(field, ncols);
        for c in 0..ncols {
            e.rows.push(vec![(c, field.one())]);
            e.pivot_row.insert(c, c);
        }
        e
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Pivot columns, increasing.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row.contains_key(&c)
    }

    /// Non-pivot columns, increasing.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Rows ordered by pivot column.
    pub fn rows(&self) -> Vec<&SparseVec<F::Elem>> {
        self.pivots()
            .into_iter()
            .map(|p| &self.rows[self.pivot_row[&p]])
            .collect()
    }

    pub fn row_for_pivot(&self, c: usize) -> Option<&SparseVec<F::Elem>> {
        self.pivot_row.get(&c).map(|&i| &self.rows[i])
    }

    /// `v` minus its projection along the pivot rows; zero iff `v` lies in the
    /// row space. The result vanishes on every pivot column.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let k = &self.field;
        if v.iter().all(|(c, _)| !self.is_pivot(*c)) {
            return v.iter().filter(|(_, a)| !k.is_zero(a)).cloned().collect();
        }
        let mut acc: Vec<F::Elem> = vec![k.zero(); self.ncols];
        for (c, a) in v {
            acc[*c] = k.add(&acc[*c], a);
        }
        for (c, a) in v {
            if let Some(&i) = self.pivot_row.get(c) {
                if k.is_zero(a) {
                    continue;
                }
                for (j, b) in &self.rows[i] {
                    acc[*j] = k.sub(&acc[*j], &k.mul(a, b));
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|(_, a)| !k.is_zero(a))
            .collect()
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        self.insert_reduced(r);
        true
    }

    /// Inserts a vector that is already reduced and nonzero, pivoting at its
    /// first column.
    pub(crate) fn insert_reduced(&mut self, r: SparseVec<F::Elem>) {
        let p = r[0].0;
        self.insert_with_pivot(r, p);
    }

    /// Inserts a reduced nonzero vector pivoting at column `p`, which must be
    /// in its support. With pivots other than the first column the form is
    /// still reduced but no longer canonical.
    pub(crate) fn insert_with_pivot(&mut self, r: SparseVec<F::Elem>, p: usize) {
        let k = self.field.clone();
        let lead = &r[r.binary_search_by_key(&p, |(c, _)| *c).expect("pivot in support")].1;
        let inv = k.inv(lead).expect("nonzero pivot");
        let r: SparseVec<F::Elem> = r.into_iter().map(|(c, a)| (c, k.mul(&a, &inv))).collect();
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let a = row[pos].1.clone();
                *row = axpy(&k, row, &k.neg(&a), &r);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(r);
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Intersection of two row spaces.
    pub fn intersect(&self, other: &Self) -> Self {
        // Vectors a·A = b·B: kernel of the stacked matrix [A; -B] on the left.
        let mut stacked: Vec<SparseVec<F::Elem>> = self.rows.clone();
        stacked.extend(other.rows.iter().map(|r| r.iter().map(|(c, a)| (*c, self.field.neg(a))).collect()));
        let left = left_kernel(&self.field, self.ncols, &stacked);
        let mut out = Self::new(&self.field, self.ncols);
        for y in left {
            let mut v: SparseVec<F::Elem> = Vec::new();
            for (i, coef) in y.iter().filter(|(i, _)| *i < self.rows.len()) {
                v = axpy(&self.field, &v, coef, &self.rows[*i]);
            }
            out.insert(&v);
        }
        out
    }
}

/// `x + a·y` for sparse vectors.
pub fn axpy<F: Field>(k: &F, x: &[(usize, F::Elem)], a: &F::Elem, y: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = k.mul(a, &y[j].1);
            if !k.is_zero(&v) {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = k.add(&x[i].1, &k.mul(a, &y[j].1));
            if !k.is_zero(&v) {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn to_sparse<F: Field>(k: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, a)| !k.is_zero(a))
        .map(|(i, a)| (i, a.clone()))
        .collect()
}

pub fn to_dense<F: Field>(k: &F, v: &[(usize, F::Elem)], n: usize) -> Vec<F::Elem> {
    let mut out = vec![k.zero(); n];
    for (i, a) in v {
        out[*i] = a.clone();
    }
    out
}

/// Basis of {x : A x = 0} where A has the given sparse rows.
pub fn right_kernel<F: Field>(k: &F, ncols: usize, rows: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    let e = Echelon::from_rows(k, ncols, rows.iter());
    kernel_of_echelon(&e)
}

/// Right kernel of the matrix whose rows are the echelon rows.
pub fn kernel_of_echelon<F: Field>(e: &Echelon<F>) -> Vec<SparseVec<F::Elem>> {
    let k = e.field();
    let mut by_free: HashMap<usize, SparseVec<F::Elem>> = HashMap::new();
    for p in e.pivots() {
        let row = e.row_for_pivot(p).expect("pivot row");
        for (c, a) in row.iter().filter(|(c, _)| *c != p) {
            by_free.entry(*c).or_default().push((p, k.neg(a)));
        }
    }
    e.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = by_free.remove(&f).unwrap_or_default();
            v.push((f, k.one()));
            v.sort_by_key(|(c, _)| *c);
            v
        })
        .collect()
}

/// Transpose of an `m × ncols` sparse matrix.
pub fn transpose<E: Clone>(rows: &[SparseVec<E>], ncols: usize) -> Vec<SparseVec<E>> {
    let mut out: Vec<SparseVec<E>> = vec![Vec::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for (c, a) in r {
            out[*c].push((i, a.clone()));
        }
    }
    out
}

/// Basis of {y : y A = 0}, indexed by the rows of A.
pub fn left_kernel<F: Field>(k: &F, ncols: usize, rows: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    right_kernel(k, rows.len(), &transpose(rows, ncols))
}

pub fn rank<F: Field>(k: &F, ncols: usize, rows: &[SparseVec<F::Elem>]) -> usize {
    Echelon::from_rows(k, ncols, rows.iter()).dim()
}

pub fn rank_dense<F: Field>(k: &F, rows: &[Vec<F::Elem>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let sparse: Vec<_> = rows.iter().map(|r| to_sparse(k, r)).collect();
    rank(k, ncols, &sparse)
}
