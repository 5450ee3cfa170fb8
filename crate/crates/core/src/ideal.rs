//! Homogeneous ideals as degree-truncated graded subspaces.
//!
//! Every operation is degreewise linear algebra over the monomial bases
//! (Macaulay matrices): the degree-d component of an ideal is the row space
//! of `R_1 * I_{d-1}` together with the degree-d generators, kept in fully
//! reduced echelon form with lex-largest pivots first. The pivot monomials
//! are therefore the initial monomials.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::field::Field;
use crate::linalg::{self, Echelon, SparseVec};
use crate::ring::{substitution_images, Element, Monomial, Ring, RingError, RingKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generators belong to different rings")]
    MixedRings,
    #[error("generator `{0}` is not homogeneous")]
    Inhomogeneous(String),
    #[error("subspaces do not form an ideal: R_1 * I_{degree} is not contained in I_{next}", next = .degree + 1)]
    NotAnIdeal { degree: usize },
    #[error("saturation did not stabilize on degrees <= {bound} within slack {slack}")]
    SaturationDiverged { bound: usize, slack: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("point {0} is zero or has the wrong number of coordinates")]
    BadPoint(usize),
    #[error("matrix entry ({0}, {1}) is not a linear form")]
    NonLinearEntry(usize, usize),
    #[error("minor size {size} exceeds matrix shape {rows}x{cols}")]
    BadMinorSize { size: usize, rows: usize, cols: usize },
    #[error("operation requires a polynomial ring")]
    NeedsPolynomialRing,
    #[error("Hilbert function has no eventually-constant tail")]
    NotEventuallyConstant,
    #[error("bad Hilbert function `{0}`")]
    BadHilbertFunction(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Quotient dimensions `dim R_d - dim I_d` for `d = 0..=D`.
///
/// `tail` marks a value that is assumed constant from some degree on. When
/// produced by [`Ideal::hilbert_function`] this is a heuristic (the last few
/// computed values agree), not a proof.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    pub values: Vec<usize>,
    pub tail: Option<Tail>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tail {
    pub value: usize,
    pub from: usize,
}

pub const DEFAULT_TAIL_WINDOW: usize = 3;

impl HilbertFunction {
    pub fn finite(values: Vec<usize>) -> Self {
        Self { values, tail: None }
    }

    /// Values followed by the last value repeated forever.
    pub fn eventually_constant(values: Vec<usize>) -> Self {
        let value = *values.last().expect("nonempty");
        let from = values.iter().rposition(|&v| v != value).map_or(0, |i| i + 1);
        Self {
            values,
            tail: Some(Tail { value, from }),
        }
    }

    /// Sets a heuristic tail when the last `window` values agree.
    pub fn with_detected_tail(values: Vec<usize>, window: usize) -> Self {
        let n = values.len();
        if window > 0 && n >= window && values[n - window..].iter().all(|&v| v == values[n - 1]) {
            Self::eventually_constant(values)
        } else {
            Self::finite(values)
        }
    }

    /// Value at degree d, using the tail beyond the stored prefix.
    pub fn get(&self, d: usize) -> Option<usize> {
        match (self.values.get(d), self.tail) {
            (Some(&v), _) => Some(v),
            (None, Some(t)) => Some(t.value),
            (None, None) => None,
        }
    }

    /// The first `len` values, extending through the tail.
    pub fn prefix(&self, len: usize) -> Option<Vec<usize>> {
        (0..len).map(|d| self.get(d)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))?;
        if self.tail.is_some() {
            write!(f, "+")?;
        }
        Ok(())
    }
}

impl FromStr for HilbertFunction {
    type Err = IdealError;

    /// `1,3,4,4,3,3+` (trailing `+`: constant from the last value on) or a
    /// finite list.
    fn from_str(s: &str) -> Result<Self, IdealError> {
        let bad = || IdealError::BadHilbertFunction(s.to_string());
        let t = s.trim();
        let (body, constant) = match t.strip_suffix('+') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let values: Vec<usize> = body
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if values.is_empty() {
            return Err(bad());
        }
        Ok(if constant {
            Self::eventually_constant(values)
        } else {
            Self::finite(values)
        })
    }
}

/// h-vector: numerator of the reduced Hilbert series, trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Multiplies the Hilbert series by `(1 - T)^dim` with `dim` in {0, 1} chosen
/// minimal so that the result is a polynomial.
pub fn h_vector(hf: &HilbertFunction) -> Result<HVector, IdealError> {
    let strip = |mut v: Vec<i64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
        HVector(v)
    };
    match hf.tail {
        Some(t) if t.value > 0 => {
            let end = t.from.max(1);
            let mut h = Vec::with_capacity(end + 1);
            let mut prev = 0i64;
            for d in 0..=end {
                let cur = hf.get(d).expect("tail") as i64;
                h.push(cur - prev);
                prev = cur;
            }
            Ok(strip(h))
        }
        Some(_) => Ok(strip(hf.values.iter().map(|&v| v as i64).collect())),
        None if hf.values.last() == Some(&0) => Ok(strip(hf.values.iter().map(|&v| v as i64).collect())),
        None => Err(IdealError::NotEventuallyConstant),
    }
}

struct IdealInner<F: Field> {
    ring: Ring<F>,
    gens: Vec<Element<F>>,
    components: Mutex<Vec<Arc<Echelon<F>>>>,
}

/// A homogeneous ideal: ring, generators and lazily computed components.
pub struct Ideal<F: Field> {
    inner: Arc<IdealInner<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Self {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.inner.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Ring<F>, gens: Vec<Element<F>>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.ring() != ring {
                return Err(IdealError::MixedRings);
            }
            if !g.is_homogeneous() {
                return Err(IdealError::Inhomogeneous(g.to_string()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self::from_parts(ring, gens, Vec::new()))
    }

    fn from_parts(ring: &Ring<F>, gens: Vec<Element<F>>, components: Vec<Arc<Echelon<F>>>) -> Self {
        Self {
            inner: Arc::new(IdealInner {
                ring: ring.clone(),
                gens,
                components: Mutex::new(components),
            }),
        }
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Self::from_parts(ring, Vec::new(), Vec::new())
    }

    /// Ideal whose components in degrees `0..components.len()` are given.
    /// Checks closure under multiplication by variables. Beyond the given
    /// range the ideal is generated by the given part.
    pub fn from_components(ring: &Ring<F>, components: Vec<Echelon<F>>) -> Result<Self, IdealError> {
        for d in 1..components.len() {
            for row in components[d - 1].rows() {
                for v in 0..ring.n() {
                    if !components[d].contains(&ring.shift_sparse(d - 1, v, row)) {
                        return Err(IdealError::NotAnIdeal { degree: d - 1 });
                    }
                }
            }
        }
        let top = components.len();
        let comps: Vec<Arc<Echelon<F>>> = components.into_iter().map(Arc::new).collect();
        let scratch = Self::from_parts(ring, Vec::new(), comps.clone());
        let gens = scratch.minimal_generators(top.saturating_sub(1));
        Ok(Self::from_parts(ring, gens, comps))
    }

    /// Monomial ideal.
    pub fn monomial(ring: &Ring<F>, monomials: &[Monomial]) -> Self {
        let one = ring.field().one();
        let gens = monomials
            .iter()
            .map(|m| Element::from_monomial(ring, *m, one.clone()))
            .collect();
        Self::new(ring, gens).expect("monomials are homogeneous")
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.inner.ring
    }

    pub fn field(&self) -> &F {
        self.inner.ring.field()
    }

    pub fn generators(&self) -> &[Element<F>] {
        &self.inner.gens
    }

    pub fn max_generator_degree(&self) -> usize {
        self.inner.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Degree-d component in echelon form.
    pub fn component(&self, d: usize) -> Arc<Echelon<F>> {
        let mut cache = self.inner.components.lock().unwrap();
        while cache.len() <= d {
            let next = self.next_component(&cache);
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[d])
    }

    fn next_component(&self, cache: &[Arc<Echelon<F>>]) -> Echelon<F> {
        let ring = self.ring();
        let d = cache.len();
        let mut e = Echelon::new(ring.field(), ring.dim(d));
        if d > 0 {
            'outer: for row in cache[d - 1].rows() {
                for v in 0..ring.n() {
                    if e.is_full() {
                        break 'outer;
                    }
                    e.insert(&ring.shift_sparse(d - 1, v, row));
                }
            }
        }
        for g in self.inner.gens.iter().filter(|g| g.degree() == Some(d)) {
            if e.is_full() {
                break;
            }
            e.insert(&g.to_sparse(d));
        }
        e
    }

    pub fn components(&self, bound: usize) -> Vec<Arc<Echelon<F>>> {
        (0..=bound).map(|d| self.component(d)).collect()
    }

    pub fn dim_component(&self, d: usize) -> usize {
        self.component(d).dim()
    }

    /// Basis of `I_d` as elements.
    pub fn component_basis(&self, d: usize) -> Vec<Element<F>> {
        self.component(d)
            .rows()
            .into_iter()
            .map(|r| Element::from_sparse(self.ring(), d, r))
            .collect()
    }

    pub fn contains(&self, f: &Element<F>) -> bool {
        if f.is_zero() {
            return true;
        }
        match f.degree() {
            Some(d) => self.component(d).contains(&f.to_sparse(d)),
            None => {
                let mut degs: Vec<usize> = f.terms().map(|(m, _)| m.degree()).collect();
                degs.dedup();
                degs.into_iter().all(|d| self.component(d).contains(&f.to_sparse(d)))
            }
        }
    }

    pub fn hilbert_function(&self, bound: usize) -> HilbertFunction {
        self.hilbert_function_with_window(bound, DEFAULT_TAIL_WINDOW)
    }

    pub fn hilbert_function_with_window(&self, bound: usize, window: usize) -> HilbertFunction {
        let values = (0..=bound)
            .map(|d| self.ring().dim(d) - self.dim_component(d))
            .collect();
        HilbertFunction::with_detected_tail(values, window)
    }

    /// Same components in every degree `<= bound`.
    pub fn equal_up_to(&self, other: &Self, bound: usize) -> bool {
        (0..=bound).all(|d| *self.component(d) == *other.component(d))
    }

    /// `other_d ⊆ self_d` for every `d <= bound`.
    pub fn contains_up_to(&self, other: &Self, bound: usize) -> bool {
        (0..=bound).all(|d| other.component(d).is_subspace_of(&self.component(d)))
    }

    pub fn is_monomial(&self, bound: usize) -> bool {
        (0..=bound).all(|d| self.component(d).rows().iter().all(|r| r.len() == 1))
    }

    /// Span of the pivot monomials of each component up to `bound`.
    pub fn initial_ideal(&self, bound: usize) -> Self {
        let k = self.field();
        let comps = (0..=bound)
            .map(|d| {
                let c = self.component(d);
                let mut e = Echelon::new(k, c.ncols());
                for p in c.pivots() {
                    e.insert(&[(p, k.one())]);
                }
                e
            })
            .collect();
        Self::from_components(self.ring(), comps).expect("initial ideal is an ideal")
    }

    /// `R_1 * I_{d-1}` inside `R_d`.
    fn shifted_previous(&self, d: usize) -> Echelon<F> {
        let ring = self.ring();
        let mut e = Echelon::new(ring.field(), ring.dim(d));
        if d == 0 {
            return e;
        }
        'outer: for row in self.component(d - 1).rows() {
            for v in 0..ring.n() {
                if e.is_full() {
                    break 'outer;
                }
                e.insert(&ring.shift_sparse(d - 1, v, row));
            }
        }
        e
    }

    /// Minimal generators up to `bound`: original generators first, then
    /// echelon rows, each kept only if not in the span of lower-degree
    /// multiples and previously kept generators.
    pub fn minimal_generators(&self, bound: usize) -> Vec<Element<F>> {
        let ring = self.ring();
        let mut out = Vec::new();
        for d in 0..=bound {
            let comp = self.component(d);
            let mut span = self.shifted_previous(d);
            if span.dim() == comp.dim() {
                continue;
            }
            let originals = self
                .inner
                .gens
                .iter()
                .filter(|g| g.degree() == Some(d))
                .map(|g| g.to_sparse(d));
            let rows = comp.rows().into_iter().cloned();
            for v in originals.chain(rows) {
                if span.dim() == comp.dim() {
                    break;
                }
                if span.insert(&v) {
                    out.push(Element::from_sparse(ring, d, &v));
                }
            }
        }
        out
    }

    /// Number of minimal generators in each degree `0..=bound`.
    pub fn minimal_generator_counts(&self, bound: usize) -> Vec<usize> {
        (0..=bound)
            .map(|d| self.dim_component(d) - self.shifted_previous(d).dim())
            .collect()
    }

    /// `{f in R_d : f * g in I_{d+e}}` for each `d <= bound`, where each
    /// `g` in `multipliers` has degree `e`.
    fn colon_components(&self, multipliers: &[Element<F>], e: usize, bound: usize) -> Vec<Echelon<F>> {
        let ring = self.ring();
        let k = ring.field();
        (0..=bound)
            .map(|d| {
                let target = self.component(d + e);
                let width = ring.dim(d + e);
                let basis = ring.basis(d);
                let rows: Vec<SparseVec<F::Elem>> = basis
                    .monomials
                    .iter()
                    .map(|m| {
                        let mono = Element::from_monomial(ring, *m, k.one());
                        let mut row = Vec::new();
                        for (j, g) in multipliers.iter().enumerate() {
                            let prod = mono.mul(g);
                            let r = target.reduce(&prod.to_sparse(d + e));
                            row.extend(r.into_iter().map(|(c, a)| (j * width + c, a)));
                        }
                        row
                    })
                    .collect();
                let ker = linalg::left_kernel(k, multipliers.len() * width, &rows);
                Echelon::from_rows(k, basis.len(), ker.iter())
            })
            .collect()
    }

    /// `(I : (x_1..x_n))` in degrees `<= bound`; uses `I` up to `bound + 1`.
    pub fn colon_by_irrelevant(&self, bound: usize) -> Self {
        let comps = self.colon_components(&self.ring().vars(), 1, bound);
        Self::from_components(self.ring(), comps).expect("colon is an ideal")
    }

    /// `(I : f)` in degrees `<= bound` for homogeneous `f`.
    pub fn colon_by_element(&self, f: &Element<F>, bound: usize) -> Result<Self, IdealError> {
        let e = f
            .degree()
            .ok_or_else(|| IdealError::Inhomogeneous(f.to_string()))?;
        let comps = self.colon_components(std::slice::from_ref(f), e, bound);
        Self::from_components(self.ring(), comps)
    }

    /// Saturation on degrees `<= bound` with the default slack of 4.
    pub fn saturate(&self, bound: usize) -> Result<Self, IdealError> {
        self.saturate_with_slack(bound, 4)
    }

    /// Iterates `J -> (J : m)` starting from `I` known to `bound + slack`.
    /// The k-th iterate is exact up to `bound + slack - k`. Succeeds once
    /// three consecutive iterates agree on degrees `<= bound`.
    pub fn saturate_with_slack(&self, bound: usize, slack: usize) -> Result<Self, IdealError> {
        let mut chain = vec![self.clone()];
        for k in 1..=slack {
            let prev = &chain[k - 1];
            let next = prev.colon_by_irrelevant(bound + slack - k);
            chain.push(next);
            if k >= 2 && chain[k - 2].equal_up_to(&chain[k - 1], bound) && chain[k - 1].equal_up_to(&chain[k], bound) {
                let comps = chain[k].components(bound).iter().map(|c| (**c).clone()).collect();
                return Self::from_components(self.ring(), comps);
            }
        }
        Err(IdealError::SaturationDiverged { bound, slack })
    }

    pub fn is_saturated(&self, bound: usize) -> bool {
        self.colon_by_irrelevant(bound).equal_up_to(self, bound)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        let mut gens = self.inner.gens.clone();
        gens.extend(other.inner.gens.iter().cloned());
        Self::new(self.ring(), gens)
    }

    /// Image under the linear change of coordinates `v_i -> sum_j M_ij v_j`.
    pub fn apply_linear_substitution(&self, matrix: &[Vec<F::Elem>]) -> Result<Self, IdealError> {
        let images = substitution_images(self.ring(), matrix)?;
        let gens = self.inner.gens.iter().map(|g| g.substitute(&images)).collect();
        Self::new(self.ring(), gens)
    }

    /// The same generators over another coefficient field.
    pub fn map_coefficients<G: Field>(&self, ring: &Ring<G>, f: impl Fn(&F::Elem) -> G::Elem) -> Result<Ideal<G>, IdealError> {
        let gens = self.inner.gens.iter().map(|g| g.map_coefficients(ring, &f)).collect();
        Ideal::new(ring, gens)
    }
}

/// Ideal of the projective points, degree by degree as the kernel of
/// evaluation, up to `bound`.
pub fn vanishing_ideal<F: Field>(ring: &Ring<F>, points: &[Vec<F::Elem>], bound: usize) -> Result<Ideal<F>, IdealError> {
    if ring.kind() != RingKind::Polynomial {
        return Err(IdealError::NeedsPolynomialRing);
    }
    let k = ring.field();
    for (i, p) in points.iter().enumerate() {
        if p.len() != ring.n() || p.iter().all(|c| k.is_zero(c)) {
            return Err(IdealError::BadPoint(i));
        }
        for (j, q) in points.iter().enumerate().take(i) {
            if linalg::rank_dense(k, &[p.clone(), q.clone()]) < 2 {
                return Err(IdealError::DuplicatePoints(j, i));
            }
        }
    }
    let comps = (0..=bound)
        .map(|d| {
            let basis = ring.basis(d);
            let rows: Vec<SparseVec<F::Elem>> = basis
                .monomials
                .iter()
                .map(|m| {
                    let e = Element::from_monomial(ring, *m, k.one());
                    let vals: Vec<F::Elem> = points.iter().map(|p| e.evaluate(p)).collect();
                    linalg::to_sparse(k, &vals)
                })
                .collect();
            let ker = linalg::left_kernel(k, points.len(), &rows);
            Echelon::from_rows(k, basis.len(), ker.iter())
        })
        .collect();
    Ideal::from_components(ring, comps)
}

fn determinant<F: Field>(m: &[Vec<Element<F>>], rows: &[usize], cols: &[usize]) -> Element<F> {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let ring = m[0][0].ring();
    let mut acc = ring.zero();
    for (j, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = entry.mul(&determinant(m, &rows[1..], &rest));
        acc = if j % 2 == 0 { acc.add(&sub) } else { acc.sub(&sub) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Ideal of all `size x size` minors of a matrix of linear forms.
pub fn minors_ideal<F: Field>(ring: &Ring<F>, matrix: &[Vec<Element<F>>], size: usize) -> Result<Ideal<F>, IdealError> {
    if ring.kind() != RingKind::Polynomial {
        return Err(IdealError::NeedsPolynomialRing);
    }
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if size == 0 || size > rows.min(cols) || matrix.iter().any(|r| r.len() != cols) {
        return Err(IdealError::BadMinorSize { size, rows, cols });
    }
    for (i, r) in matrix.iter().enumerate() {
        for (j, e) in r.iter().enumerate() {
            if e.ring() != ring {
                return Err(IdealError::MixedRings);
            }
            if !e.is_zero() && e.degree() != Some(1) {
                return Err(IdealError::NonLinearEntry(i, j));
            }
        }
    }
    let mut gens = Vec::new();
    for rs in subsets(rows, size) {
        for cs in subsets(cols, size) {
            let det = determinant(matrix, &rs, &cs);
            if !det.is_zero() {
                gens.push(det);
            }
        }
    }
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::{parse_generators, parse_matrix};
    use proptest::prelude::*;

    fn s3() -> Ring<Rationals> {
        Ring::polynomial(3, Rationals).unwrap()
    }

    fn ideal(ring: &Ring<Rationals>, gens: &str) -> Ideal<Rationals> {
        Ideal::new(ring, parse_generators(ring, gens).unwrap()).unwrap()
    }

    #[test]
    fn components_and_hilbert_functions() {
        let r = s3();
        let l = ideal(&r, "x^2; x*y; x*z^2; y^4; y^3*z");
        assert_eq!(l.dim_component(2), 2);
        assert_eq!(l.hilbert_function(6).values, vec![1, 3, 4, 4, 3, 3, 3]);
        let zero = Ideal::zero(&r);
        assert_eq!(zero.dim_component(5), 0);
        let hf = ideal(&r, "x; y").hilbert_function(5);
        assert_eq!(hf.to_string(), "1,1,1,1,1,1+");
    }

    #[test]
    fn hilbert_function_text() {
        let hf: HilbertFunction = "1,3,4,4,3,3+".parse().unwrap();
        assert_eq!(hf.tail, Some(Tail { value: 3, from: 4 }));
        assert_eq!(hf.get(10), Some(3));
        assert_eq!(hf.to_string(), "1,3,4,4,3,3+");
        let fin: HilbertFunction = "1,5,7,2".parse().unwrap();
        assert_eq!(fin.tail, None);
        assert!("1,,2".parse::<HilbertFunction>().is_err());
    }

    #[test]
    fn h_vectors() {
        let h = |s: &str| h_vector(&s.parse().unwrap()).unwrap().0;
        assert_eq!(h("1,3,3+"), vec![1, 2]);
        assert_eq!(h("1,2,3,3+"), vec![1, 1, 1]);
        assert_eq!(h("1,3,4,4,3,3+"), vec![1, 2, 1, 0, -1]);
        assert_eq!(h("1,5,7,2,0"), vec![1, 5, 7, 2]);
        assert!(h_vector(&"1,2,3".parse().unwrap()).is_err());
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = s3();
        let i = ideal(&r, "x^2; x^3; x^2*y + x^2*z");
        let g = i.minimal_generators(4);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].to_string(), "x^2");
    }

    #[test]
    fn colon_examples() {
        let r = s3();
        assert_eq!(ideal(&r, "x^2; x*y").colon_by_irrelevant(3).dim_component(1), 0);
        let c = ideal(&r, "x^2; x*y; x*z").colon_by_irrelevant(3);
        assert_eq!(c.dim_component(1), 1);
        assert!(c.contains(&r.var(0)));
        let pts = ideal(&r, "x*y; x*z; y*z");
        assert!(pts.is_saturated(6));
    }

    #[test]
    fn saturation_of_points() {
        let r = s3();
        let pts = ideal(&r, "x*y; x*z; y*z");
        assert!(pts.saturate(6).unwrap().equal_up_to(&pts, 6));
    }

    #[test]
    fn points() {
        let r = s3();
        let k = Rationals;
        let e = |i: usize| (0..3).map(|j| k.from_int((i == j) as i64)).collect::<Vec<_>>();
        let v = vanishing_ideal(&r, &[e(0), e(1), e(2)], 6).unwrap();
        assert!(v.equal_up_to(&ideal(&r, "x*y; x*z; y*z"), 6));
        let one = vanishing_ideal(&r, &[e(0)], 6).unwrap();
        assert!(one.equal_up_to(&ideal(&r, "y; z"), 6));
        let dup = vec![e(0), e(0).iter().map(|c| c * k.from_int(2)).collect()];
        assert_eq!(vanishing_ideal(&r, &dup, 3).unwrap_err(), IdealError::DuplicatePoints(0, 1));
    }

    #[test]
    fn minors() {
        let r = s3();
        let m = parse_matrix(&r, "x, 0; 0, y").unwrap();
        let i = minors_ideal(&r, &m, 2).unwrap();
        assert!(i.equal_up_to(&ideal(&r, "x*y"), 5));
        let bad = parse_matrix(&r, "x^2, y; z, x").unwrap();
        assert_eq!(minors_ideal(&r, &bad, 2).unwrap_err(), IdealError::NonLinearEntry(0, 0));
        assert!(matches!(minors_ideal(&r, &m, 3), Err(IdealError::BadMinorSize { .. })));
    }

    #[test]
    fn monomial_ideal_is_its_own_initial_ideal() {
        let r = s3();
        let l = ideal(&r, "x^2; x*y; x*z^2; y^4; y^3*z");
        assert!(l.initial_ideal(7).equal_up_to(&l, 7));
    }

    #[test]
    fn from_components_rejects_non_ideals() {
        let r = s3();
        let k = Rationals;
        let mut c1 = Echelon::new(&k, 3);
        c1.insert(&[(0, k.one())]);
        let comps = vec![Echelon::new(&k, 1), c1, Echelon::new(&k, 6)];
        assert_eq!(
            Ideal::from_components(&r, comps).unwrap_err(),
            IdealError::NotAnIdeal { degree: 1 }
        );
    }

    fn gf5_ideal() -> impl Strategy<Value = Ideal<PrimeField>> {
        let r = Ring::polynomial(3, PrimeField::new(5).unwrap()).unwrap();
        prop::collection::vec((1usize..4, prop::collection::vec(0u64..5, 10)), 1..4).prop_map(move |gs| {
            let gens = gs
                .into_iter()
                .map(|(d, c)| Element::from_dense(&r, d, &c[..r.dim(d)]))
                .collect();
            Ideal::new(&r, gens).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn components_are_closed(i in gf5_ideal()) {
            let r = i.ring().clone();
            for d in 0..5 {
                let next = i.component(d + 1);
                for row in i.component(d).rows() {
                    for v in 0..3 {
                        prop_assert!(next.contains(&r.shift_sparse(d, v, row)));
                    }
                }
            }
        }

        #[test]
        fn initial_ideal_preserves_hilbert_function(i in gf5_ideal()) {
            prop_assert_eq!(i.initial_ideal(6).hilbert_function(6), i.hilbert_function(6));
        }

        #[test]
        fn saturation_is_idempotent_and_extensive(i in gf5_ideal()) {
            if let Ok(s) = i.saturate(4) {
                prop_assert!(s.contains_up_to(&i, 4));
                let ss = s.saturate(4).unwrap();
                prop_assert!(ss.equal_up_to(&s, 4));
                let hs = s.hilbert_function(4).values;
                let hi = i.hilbert_function(4).values;
                prop_assert!(hs.iter().zip(&hi).all(|(a, b)| a <= b));
            }
        }

        #[test]
        fn point_ideals(coords in prop::collection::vec(0u64..101, 3..=15)) {
            let k = PrimeField::new(101).unwrap();
            let r = Ring::polynomial(3, k.clone()).unwrap();
            let mut pts: Vec<Vec<u64>> = Vec::new();
            for c in coords.chunks_exact(3) {
                let p = c.to_vec();
                if p.iter().all(|&x| x == 0) { continue; }
                if pts.iter().all(|q| linalg::rank_dense(&k, &[p.clone(), q.clone()]) == 2) {
                    pts.push(p);
                }
            }
            prop_assume!(!pts.is_empty());
            let bound = 7;
            let v = vanishing_ideal(&r, &pts, bound).unwrap();
            prop_assert!(v.colon_by_irrelevant(bound - 1).equal_up_to(&v, bound - 1));
            let hf = v.hilbert_function(bound);
            prop_assert_eq!(hf.values[bound], pts.len());
            prop_assert_eq!(h_vector(&hf).unwrap().sum(), pts.len() as i64);
        }
    }
}
