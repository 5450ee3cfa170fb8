//! Syzygies of generator lists and the tangent space `Hom(I, R/I)_0`.
//!
//! A degree-0 homomorphism is fixed by the images `f_i` of the generators
//! `g_i`, with `f_i` in `(R/I)_{d_i}`; it is well defined iff
//! `sum a_i f_i = 0` in `R/I` for every syzygy `(a_i)`. In the exterior
//! algebra products are taken on the left, so these are left-module maps.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::{self, Echelon, SparseVec};
use crate::ring::{Element, Ring, RingKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error("tangent dimension changed from {low} to {high} when syzygies of degree {degree} were added; raise the bound")]
    Unstable { low: usize, high: usize, degree: usize },
    #[error("internal error: homomorphism violates a syzygy")]
    Verification,
}

/// Where the pair (generator i, monomial of degree e - d_i) sits in the
/// concatenated coefficient vector of a degree-e relation.
#[derive(Debug, Clone)]
struct Layout {
    offsets: Vec<usize>,
    width: usize,
}

impl Layout {
    fn new<F: Field>(ring: &Ring<F>, degrees: &[usize], e: usize) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut width = 0;
        for &d in degrees {
            offsets.push(width);
            if e >= d {
                width += ring.dim(e - d);
            }
        }
        Self { offsets, width }
    }
}

/// A relation `sum a_i g_i = 0` with homogeneous `a_i` of degree `degree - d_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Syzygy<F: Field> {
    pub degree: usize,
    pub coefficients: Vec<Element<F>>,
}

/// Relations among a fixed list of homogeneous generators, with minimal
/// generators of the relation module up to a degree bound.
#[derive(Debug, Clone)]
pub struct SyzygyModule<F: Field> {
    pub ring: Ring<F>,
    pub generators_of_ideal: Vec<Element<F>>,
    pub degrees: Vec<usize>,
    pub bound: usize,
    /// Dimension of the relation space in each degree.
    pub dimensions: BTreeMap<usize, usize>,
    /// Minimal generators of the relation module, by degree.
    pub generators: Vec<Syzygy<F>>,
}

impl<F: Field> SyzygyModule<F> {
    pub fn generator_degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|s| s.degree).collect()
    }

    pub fn generator_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for s in &self.generators {
            *out.entry(s.degree).or_insert(0) += 1;
        }
        out
    }
}

fn vec_to_syzygy<F: Field>(ring: &Ring<F>, v: &[(usize, F::Elem)], degrees: &[usize], layout: &Layout, e: usize) -> Syzygy<F> {
    let coefficients = (0..degrees.len())
        .map(|i| {
            if e < degrees[i] {
                return ring.zero();
            }
            let lo = layout.offsets[i];
            let hi = lo + ring.dim(e - degrees[i]);
            let part: SparseVec<F::Elem> = v
                .iter()
                .filter(|(c, _)| *c >= lo && *c < hi)
                .map(|(c, x)| (c - lo, x.clone()))
                .collect();
            Element::from_sparse(ring, e - degrees[i], &part)
        })
        .collect();
    Syzygy { degree: e, coefficients }
}

/// The rows `mu * g_i` of the degree-e Macaulay matrix, in layout order.
fn macaulay_rows<F: Field>(ring: &Ring<F>, gens: &[Element<F>], degrees: &[usize], e: usize) -> Vec<SparseVec<F::Elem>> {
    let k = ring.field();
    let mut rows = Vec::new();
    for (g, &d) in gens.iter().zip(degrees) {
        if e < d {
            continue;
        }
        for mu in ring.basis(e - d).monomials.iter() {
            let m = Element::from_monomial(ring, *mu, k.one());
            rows.push(m.mul(g).to_sparse(e));
        }
    }
    rows
}

/// Relations of degree `e` among `gens`: the kernel of
/// `(a_i) -> sum a_i g_i` from `sum R_{e-d_i}` to `R_e`.
pub fn syzygy_components<F: Field>(ring: &Ring<F>, gens: &[Element<F>], e: usize) -> Vec<Syzygy<F>> {
    let degrees: Vec<usize> = gens.iter().map(|g| g.degree().expect("homogeneous generator")).collect();
    let layout = Layout::new(ring, &degrees, e);
    let rows = macaulay_rows(ring, gens, &degrees, e);
    let ker = linalg::left_kernel(ring.field(), ring.dim(e), &rows);
    let space = Echelon::from_rows(ring.field(), layout.width, ker.iter());
    space
        .rows()
        .into_iter()
        .map(|v| vec_to_syzygy(ring, v, &degrees, &layout, e))
        .collect()
}

/// Minimal generators of the relation module in degrees `<= bound`: in each
/// degree, a complement of `R_1 * Syz_{e-1}` inside `Syz_e`.
pub fn syzygy_generators<F: Field>(ring: &Ring<F>, gens: &[Element<F>], bound: usize) -> SyzygyModule<F> {
    let k = ring.field();
    let degrees: Vec<usize> = gens.iter().map(|g| g.degree().expect("homogeneous generator")).collect();
    let min_deg = degrees.iter().copied().min().unwrap_or(0);
    let mut dimensions = BTreeMap::new();
    let mut generators = Vec::new();
    let mut previous: Option<(Layout, Echelon<F>)> = None;
    let top = match ring.kind() {
        RingKind::Polynomial => bound,
        RingKind::Exterior => bound.min(ring.n() + degrees.iter().copied().max().unwrap_or(0)),
    };
    for e in min_deg..=top {
        let layout = Layout::new(ring, &degrees, e);
        let rows = macaulay_rows(ring, gens, &degrees, e);
        let ker = linalg::left_kernel(k, ring.dim(e), &rows);
        let space = Echelon::from_rows(k, layout.width, ker.iter());
        dimensions.insert(e, space.dim());
        let mut span = Echelon::new(k, layout.width);
        if let Some((prev_layout, prev)) = &previous {
            'outer: for row in prev.rows() {
                for v in 0..ring.n() {
                    if span.dim() == space.dim() {
                        break 'outer;
                    }
                    span.insert(&shift_relation(ring, &degrees, prev_layout, &layout, e - 1, v, row));
                }
            }
        }
        for row in space.rows() {
            if span.dim() == space.dim() {
                break;
            }
            if span.insert(row) {
                generators.push(vec_to_syzygy(ring, row, &degrees, &layout, e));
            }
        }
        previous = Some((layout, space));
    }
    SyzygyModule {
        ring: ring.clone(),
        generators_of_ideal: gens.to_vec(),
        degrees,
        bound,
        dimensions,
        generators,
    }
}

/// `x_v * (a_i)` for a relation of degree `e` given in coordinates.
fn shift_relation<F: Field>(
    ring: &Ring<F>,
    degrees: &[usize],
    from: &Layout,
    to: &Layout,
    e: usize,
    v: usize,
    row: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        if e < d {
            continue;
        }
        let lo = from.offsets[i];
        let hi = lo + ring.dim(e - d);
        let part: SparseVec<F::Elem> = row
            .iter()
            .filter(|(c, _)| *c >= lo && *c < hi)
            .map(|(c, x)| (c - lo, x.clone()))
            .collect();
        if part.is_empty() {
            continue;
        }
        let shifted = ring.shift_sparse(e - d, v, &part);
        out.extend(shifted.into_iter().map(|(c, x)| (to.offsets[i] + c, x)));
    }
    out
}

/// Default syzygy bound: maximal generator degree plus `n` for polynomial
/// rings, `n` for exterior algebras.
pub fn default_syzygy_bound<F: Field>(ideal: &Ideal<F>) -> usize {
    let n = ideal.ring().n();
    match ideal.ring().kind() {
        RingKind::Polynomial => ideal.max_generator_degree() + n,
        RingKind::Exterior => n,
    }
}

/// Dimension and basis of `Hom(I, R/I)_0`.
#[derive(Debug, Clone)]
pub struct TangentReport<F: Field> {
    pub dimension: usize,
    /// Each entry lists the images `f_i` of the minimal generators.
    pub basis: Vec<Vec<Element<F>>>,
    pub generators: Vec<Element<F>>,
    pub generator_degrees: Vec<usize>,
    pub syzygy_degrees: Vec<usize>,
    /// Rows and columns of the constraint matrix.
    pub constraint_shape: (usize, usize),
    pub syzygy_bound: usize,
    pub convention: &'static str,
}

pub fn convention(kind: RingKind) -> &'static str {
    match kind {
        RingKind::Polynomial => "commutative",
        RingKind::Exterior => "left-module",
    }
}

struct HomSystem<F: Field> {
    /// `(generator, standard monomial column)` per unknown.
    unknowns: Vec<(usize, usize)>,
    /// One row per unknown, concatenated over the syzygies used.
    rows: Vec<SparseVec<F::Elem>>,
    width: usize,
    used: usize,
}

impl<F: Field> HomSystem<F> {
    fn new(ideal: &Ideal<F>, gens: &[Element<F>]) -> Self {
        let mut unknowns = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let d = g.degree().expect("homogeneous");
            for s in ideal.component(d).free_columns() {
                unknowns.push((i, s));
            }
        }
        let rows = vec![Vec::new(); unknowns.len()];
        Self {
            unknowns,
            rows,
            width: 0,
            used: 0,
        }
    }

    fn add(&mut self, ideal: &Ideal<F>, gens: &[Element<F>], syz: &Syzygy<F>) {
        let ring = ideal.ring();
        let k = ring.field();
        let e = syz.degree;
        let target = ideal.component(e);
        for (u, &(i, s)) in self.unknowns.iter().enumerate() {
            let a = &syz.coefficients[i];
            if a.is_zero() {
                continue;
            }
            let d = gens[i].degree().expect("homogeneous");
            let mono = Element::from_monomial(ring, ring.basis(d).monomials[s], k.one());
            let image = target.reduce(&a.mul(&mono).to_sparse(e));
            self.rows[u].extend(image.into_iter().map(|(c, x)| (self.width + c, x)));
        }
        self.width += ring.dim(e);
        self.used += 1;
    }

    fn solve(&self, k: &F) -> Vec<SparseVec<F::Elem>> {
        linalg::left_kernel(k, self.width, &self.rows)
    }
}

/// Computes `Hom(I, R/I)_0` using the minimal generators of `I` and the
/// minimal syzygies up to `syzygy_bound` (default
/// [`default_syzygy_bound`]). The result is recomputed with the syzygies
/// of degree `syzygy_bound + 1` added; a change is reported as an error.
pub fn tangent_dimension<F: Field>(ideal: &Ideal<F>, syzygy_bound: Option<usize>) -> Result<TangentReport<F>, TangentError> {
    let ring = ideal.ring();
    let k = ring.field();
    let bound = syzygy_bound.unwrap_or_else(|| default_syzygy_bound(ideal));
    let gens = ideal.minimal_generators(ideal.max_generator_degree());
    let syz = syzygy_generators(ring, &gens, bound + 1);
    let mut system = HomSystem::new(ideal, &gens);
    for s in syz.generators.iter().filter(|s| s.degree <= bound) {
        system.add(ideal, &gens, s);
    }
    let low = system.solve(k);
    let shape = (system.width, system.unknowns.len());
    let extra: Vec<&Syzygy<F>> = syz.generators.iter().filter(|s| s.degree == bound + 1).collect();
    if !extra.is_empty() {
        for s in &extra {
            system.add(ideal, &gens, s);
        }
        let high = system.solve(k);
        if high.len() != low.len() {
            return Err(TangentError::Unstable {
                low: low.len(),
                high: high.len(),
                degree: bound + 1,
            });
        }
    }
    let basis: Vec<Vec<Element<F>>> = low
        .iter()
        .map(|sol| {
            let mut parts: Vec<SparseVec<F::Elem>> = vec![Vec::new(); gens.len()];
            for (u, c) in sol {
                let (i, s) = system.unknowns[*u];
                parts[i].push((s, c.clone()));
            }
            parts
                .into_iter()
                .enumerate()
                .map(|(i, mut p)| {
                    p.sort_by_key(|(c, _)| *c);
                    Element::from_sparse(ring, gens[i].degree().expect("homogeneous"), &p)
                })
                .collect()
        })
        .collect();
    for tuple in &basis {
        for s in &syz.generators {
            let total = s
                .coefficients
                .iter()
                .zip(tuple)
                .fold(ring.zero(), |acc, (a, f)| acc.add(&a.mul(f)));
            if !ideal.contains(&total) {
                return Err(TangentError::Verification);
            }
        }
    }
    Ok(TangentReport {
        dimension: basis.len(),
        generator_degrees: gens.iter().map(|g| g.degree().expect("homogeneous")).collect(),
        generators: gens,
        basis,
        syzygy_degrees: syz.generator_degrees(),
        constraint_shape: shape,
        syzygy_bound: bound,
        convention: convention(ring.kind()),
    })
}
