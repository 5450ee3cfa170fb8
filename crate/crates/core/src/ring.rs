//! Monomials and homogeneous elements of the polynomial ring k[x1..xn] and the
//! exterior algebra over k^n, both with the lexicographic order in which the
//! first variable is largest.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::field::{Field, FieldError, FieldSpec};
use crate::linalg::{self, SparseVec};

/// Exponent vectors are dense and fixed-width.
pub const MAX_VARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("elements belong to different rings")]
    MixedRings,
    #[error("variable count {0} is outside 1..={MAX_VARS}")]
    BadVariableCount(usize),
    #[error("expected {expected} variable names, got {got}")]
    BadNames { expected: usize, got: usize },
    #[error("substitution matrix is not invertible")]
    SingularSubstitution,
    #[error("substitution matrix must be {0}x{0}")]
    BadMatrixShape(usize),
    #[error("unknown ring spec `{0}`")]
    BadSpec(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Polynomial,
    Exterior,
}

/// A monomial as a dense exponent vector. Exterior monomials have exponents
/// in {0, 1}.
///
/// The derived order compares degree first, then exponents left to right, so
/// within one degree a larger exponent on an earlier variable is larger: this
/// is the lex order with x1 > x2 > ... (and e1 > e2 > ... on subsets).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            deg: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent fits in u8");
        }
        m.deg = exps.iter().sum::<u32>() as u16;
        m
    }

    /// Exterior monomial from a bitmask (bit i = variable i).
    pub fn from_mask(mask: u32) -> Self {
        let mut m = Self::one();
        for i in 0..MAX_VARS {
            if mask >> i & 1 == 1 {
                m.exps[i] = 1;
            }
        }
        m.deg = mask.count_ones() as u16;
        m
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, n: usize) -> &[u8] {
        &self.exps[..n]
    }

    pub fn mask(&self) -> u32 {
        (0..MAX_VARS)
            .filter(|&i| self.exps[i] > 0)
            .fold(0, |m, i| m | 1 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn complement_in(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = other.exps[i] - self.exps[i];
        }
        m.deg = other.deg - self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u16).sum();
        m
    }

    fn mul_commutative(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    /// Wedge product of exterior monomials: `None` when an index repeats,
    /// otherwise the product and whether the Koszul sign is negative.
    fn mul_exterior(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let a = self.mask();
        let b = other.mask();
        if a & b != 0 {
            return None;
        }
        let mut inversions = 0;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros();
            inversions += (a >> (j + 1)).count_ones();
            rest &= rest - 1;
        }
        Some((Monomial::from_mask(a | b), inversions % 2 == 1))
    }

    /// Lex comparison within one degree (greater = lex-larger).
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..n])
    }
}

/// All degree-d monomials in lex-descending order plus their index.
#[derive(Debug)]
pub struct DegreeBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

struct RingInner<F: Field> {
    kind: RingKind,
    n: usize,
    field: F,
    names: Vec<String>,
    bases: RwLock<HashMap<usize, Arc<DegreeBasis>>>,
    actions: RwLock<HashMap<usize, Arc<VariableAction>>>,
}

/// `table[v][i]`: index of `x_v * m_i` in the next degree and whether the
/// sign is negative; `None` when the product vanishes.
pub type VariableAction = Vec<Vec<Option<(usize, bool)>>>;

/// Ring descriptor: kind, number of variables, coefficient field and variable
/// names. Cheap to clone; monomial bases are cached per degree.
pub struct Ring<F: Field> {
    inner: Arc<RingInner<F>>,
}

impl<F: Field> Clone for Ring<F> {
    fn clone(&self) -> Self {
        Self {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.kind == other.inner.kind
                && self.inner.n == other.inner.n
                && self.inner.field == other.inner.field
                && self.inner.names == other.inner.names)
    }
}

impl<F: Field> fmt::Debug for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind() {
            RingKind::Polynomial => "S",
            RingKind::Exterior => "E",
        };
        write!(f, "{k}:{}@{}", self.n(), self.field().name())
    }
}

pub fn default_names(kind: RingKind, n: usize) -> Vec<String> {
    match kind {
        RingKind::Polynomial if n <= 5 => ["x", "y", "z", "w", "v"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        RingKind::Polynomial => (1..=n).map(|i| format!("x{i}")).collect(),
        RingKind::Exterior => (1..=n).map(|i| format!("e{i}")).collect(),
    }
}

impl<F: Field> Ring<F> {
    pub fn new(kind: RingKind, n: usize, field: F) -> Result<Self, RingError> {
        Self::with_names(kind, field, default_names(kind, n))
    }

    pub fn polynomial(n: usize, field: F) -> Result<Self, RingError> {
        Self::new(RingKind::Polynomial, n, field)
    }

    pub fn exterior(n: usize, field: F) -> Result<Self, RingError> {
        Self::new(RingKind::Exterior, n, field)
    }

    pub fn with_names(kind: RingKind, field: F, names: Vec<String>) -> Result<Self, RingError> {
        let n = names.len();
        if n == 0 || n > MAX_VARS {
            return Err(RingError::BadVariableCount(n));
        }
        Ok(Self {
            inner: Arc::new(RingInner {
                kind,
                n,
                field,
                names,
                bases: RwLock::new(HashMap::new()),
                actions: RwLock::new(HashMap::new()),
            }),
        })
    }

    /// Same kind and names over another field.
    pub fn over<G: Field>(&self, field: G) -> Ring<G> {
        Ring::with_names(self.kind(), field, self.inner.names.clone()).expect("valid ring")
    }

    pub fn kind(&self) -> RingKind {
        self.inner.kind
    }

    pub fn is_exterior(&self) -> bool {
        self.inner.kind == RingKind::Exterior
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn field(&self) -> &F {
        &self.inner.field
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|s| s == name)
    }

    /// Degree-d monomials in strictly decreasing lex order.
    pub fn basis(&self, d: usize) -> Arc<DegreeBasis> {
        if let Some(b) = self.inner.bases.read().unwrap().get(&d) {
            return Arc::clone(b);
        }
        let mut monomials = match self.kind() {
            RingKind::Polynomial => {
                let mut out = Vec::new();
                let mut exps = vec![0u32; self.n()];
                compositions(d as u32, 0, &mut exps, &mut out);
                out
            }
            RingKind::Exterior => (0u32..1 << self.n())
                .filter(|m| m.count_ones() as usize == d)
                .map(Monomial::from_mask)
                .collect(),
        };
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let basis = Arc::new(DegreeBasis {
            degree: d,
            monomials,
            index,
        });
        self.inner
            .bases
            .write()
            .unwrap()
            .insert(d, Arc::clone(&basis));
        basis
    }

    /// Left multiplication by each variable from degree d to d + 1.
    pub fn variable_action(&self, d: usize) -> Arc<VariableAction> {
        if let Some(a) = self.inner.actions.read().unwrap().get(&d) {
            return Arc::clone(a);
        }
        let src = self.basis(d);
        let dst = self.basis(d + 1);
        let table: VariableAction = (0..self.n())
            .map(|v| {
                let x = Monomial::var(v);
                src.monomials
                    .iter()
                    .map(|m| {
                        self.multiply_monomials(&x, m)
                            .map(|(p, neg)| (dst.index_of(&p).expect("product in basis"), neg))
                    })
                    .collect()
            })
            .collect();
        let table = Arc::new(table);
        self.inner
            .actions
            .write()
            .unwrap()
            .insert(d, Arc::clone(&table));
        table
    }

    /// `x_v * f` for `f` given as a sparse vector in degree d.
    pub fn shift_sparse(&self, d: usize, v: usize, f: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let action = self.variable_action(d);
        let k = self.field();
        let mut out: SparseVec<F::Elem> = f
            .iter()
            .filter_map(|(i, c)| {
                action[v][*i].map(|(j, neg)| (j, if neg { k.neg(c) } else { c.clone() }))
            })
            .collect();
        out.sort_by_key(|(j, _)| *j);
        out
    }

    pub fn monomial_basis(&self, d: usize) -> Vec<Monomial> {
        self.basis(d).monomials.clone()
    }

    pub fn dim(&self, d: usize) -> usize {
        match self.kind() {
            RingKind::Polynomial => binomial(d + self.n() - 1, self.n() - 1),
            RingKind::Exterior => binomial(self.n(), d),
        }
    }

    /// Top degree with nonzero component, if any.
    pub fn top_degree(&self) -> Option<usize> {
        match self.kind() {
            RingKind::Polynomial => None,
            RingKind::Exterior => Some(self.n()),
        }
    }

    /// Product of monomials: `None` if zero, else the monomial and whether the
    /// sign is negative.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        match self.kind() {
            RingKind::Polynomial => Some((a.mul_commutative(b), false)),
            RingKind::Exterior => a.mul_exterior(b),
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.degree() == 0 {
            return "1".into();
        }
        let names = self.names();
        match self.kind() {
            RingKind::Exterior => (0..self.n())
                .filter(|&i| m.exponent(i) > 0)
                .map(|i| names[i].as_str())
                .collect::<Vec<_>>()
                .join("^"),
            RingKind::Polynomial => (0..self.n())
                .filter(|&i| m.exponent(i) > 0)
                .map(|i| match m.exponent(i) {
                    1 => names[i].clone(),
                    e => format!("{}^{e}", names[i]),
                })
                .collect::<Vec<_>>()
                .join("*"),
        }
    }

    pub fn zero(&self) -> Element<F> {
        Element::zero(self)
    }

    pub fn one(&self) -> Element<F> {
        Element::constant(self, self.field().one())
    }

    pub fn var(&self, i: usize) -> Element<F> {
        Element::from_monomial(self, Monomial::var(i), self.field().one())
    }

    pub fn vars(&self) -> Vec<Element<F>> {
        (0..self.n()).map(|i| self.var(i)).collect()
    }
}

fn compositions(d: u32, i: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = d;
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in 0..=d {
        exps[i] = e;
        compositions(d - e, i + 1, exps, out);
    }
    exps[i] = 0;
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// An element of a polynomial ring or exterior algebra: nonzero terms keyed
/// by monomial.
pub struct Element<F: Field> {
    ring: Ring<F>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Clone for Element<F> {
    fn clone(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl<F: Field> PartialEq for Element<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let k = self.ring.field();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut coeff = k.format(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = self.ring.format_monomial(m);
            if m.degree() == 0 {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Element<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        Self::from_monomial(ring, Monomial::one(), c)
    }

    pub fn from_monomial(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.field().is_zero(&c) {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Ring<F>, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut e = Self::zero(ring);
        for (m, c) in terms {
            e.add_term(m, &c);
        }
        e
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    /// Terms in lex-descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.terms.keys().next().map(|m| m.degree())
        }
    }

    fn add_term(&mut self, m: Monomial, c: &F::Elem) {
        let k = self.ring.field().clone();
        if k.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = k.add(v, c);
                if k.is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::MixedRings)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other).expect("same ring");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let k = self.field();
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, k.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = self.field();
        if k.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, k.mul(a, c))).collect(),
        }
    }

    /// Product in the ring; panics on mixed rings (see [`Element::multiply`]).
    pub fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("same ring")
    }

    /// Exact product. In the exterior algebra this is the wedge product with
    /// the Koszul sign of sorting the concatenated indices.
    pub fn multiply(&self, other: &Self) -> Result<Self, RingError> {
        self.check_ring(other)?;
        let k = self.field().clone();
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = self.ring.multiply_monomials(ma, mb) {
                    let c = k.mul(ca, cb);
                    out.add_term(m, &if negative { k.neg(&c) } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(self.ring.one(), |acc, _| acc.mul(self))
    }

    /// Coefficient vector over the degree-d monomial basis. Terms of other
    /// degrees are ignored.
    pub fn to_sparse(&self, d: usize) -> SparseVec<F::Elem> {
        let basis = self.ring.basis(d);
        let mut v: SparseVec<F::Elem> = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (basis.index_of(m).expect("monomial in basis"), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_sparse(ring: &Ring<F>, d: usize, v: &[(usize, F::Elem)]) -> Self {
        let basis = ring.basis(d);
        Self::from_terms(ring, v.iter().map(|(i, c)| (basis.monomials[*i], c.clone())))
    }

    pub fn from_dense(ring: &Ring<F>, d: usize, v: &[F::Elem]) -> Self {
        let basis = ring.basis(d);
        Self::from_terms(
            ring,
            v.iter().enumerate().map(|(i, c)| (basis.monomials[i], c.clone())),
        )
    }

    /// Ring map sending variable i to `images[i]`.
    pub fn substitute(&self, images: &[Element<F>]) -> Self {
        assert_eq!(images.len(), self.ring.n());
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut prod = self.ring.one();
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    prod = prod.mul(img);
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Replaces each variable v_i by sum_j M[i][j] v_j.
    pub fn apply_linear_substitution(&self, matrix: &[Vec<F::Elem>]) -> Result<Self, RingError> {
        let images = substitution_images(&self.ring, matrix)?;
        Ok(self.substitute(&images))
    }

    pub fn map_coefficients<G: Field>(
        &self,
        ring: &Ring<G>,
        f: impl Fn(&F::Elem) -> G::Elem,
    ) -> Element<G> {
        Element::from_terms(ring, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn try_map_coefficients<G: Field, E>(
        &self,
        ring: &Ring<G>,
        f: impl Fn(&F::Elem) -> Result<G::Elem, E>,
    ) -> Result<Element<G>, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Ok(Element::from_terms(ring, terms))
    }

    /// Value at a point of k^n (polynomial rings).
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let k = self.field();
        self.terms.iter().fold(k.zero(), |acc, (m, c)| {
            let v = (0..self.ring.n()).fold(c.clone(), |v, i| k.mul(&v, &k.pow(&point[i], m.exponent(i) as u64)));
            k.add(&acc, &v)
        })
    }
}

/// Images of the variables under v_i -> sum_j M[i][j] v_j, after checking
/// that M is square and invertible.
pub fn substitution_images<F: Field>(ring: &Ring<F>, matrix: &[Vec<F::Elem>]) -> Result<Vec<Element<F>>, RingError> {
    let n = ring.n();
    if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(RingError::BadMatrixShape(n));
    }
    if linalg::rank_dense(ring.field(), matrix) < n {
        return Err(RingError::SingularSubstitution);
    }
    Ok(matrix
        .iter()
        .map(|row| {
            Element::from_terms(
                ring,
                row.iter().enumerate().map(|(j, c)| (Monomial::var(j), c.clone())),
            )
        })
        .collect())
}

/// Parsed ring spec `S:3@QQ` or `E:5@GF(3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub kind: RingKind,
    pub n: usize,
    pub field: FieldSpec,
}

impl RingSpec {
    pub fn build<F: Field>(&self, field: F) -> Result<Ring<F>, RingError> {
        Ring::new(self.kind, self.n, field)
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        let bad = || RingError::BadSpec(s.to_string());
        let (head, field) = s.split_once('@').ok_or_else(bad)?;
        let (kind, n) = head.split_once(':').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "S" => RingKind::Polynomial,
            "E" => RingKind::Exterior,
            _ => return Err(bad()),
        };
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if n == 0 || n > MAX_VARS {
            return Err(RingError::BadVariableCount(n));
        }
        Ok(Self {
            kind,
            n,
            field: field.parse()?,
        })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            RingKind::Polynomial => "S",
            RingKind::Exterior => "E",
        };
        write!(f, "{k}:{}@{}", self.n, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn s3() -> Ring<Rationals> {
        Ring::polynomial(3, Rationals).unwrap()
    }

    fn e5() -> Ring<Rationals> {
        Ring::exterior(5, Rationals).unwrap()
    }

    #[test]
    fn polynomial_basis_is_lex_descending() {
        let r = s3();
        let names: Vec<_> = r.monomial_basis(2).iter().map(|m| r.format_monomial(m)).collect();
        assert_eq!(names, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        assert_eq!(r.dim(4), 15);
        assert_eq!(r.basis(4).len(), 15);
    }

    #[test]
    fn exterior_basis() {
        let r = e5();
        let b = r.monomial_basis(2);
        assert_eq!(b.len(), 10);
        let names: Vec<_> = b.iter().take(5).map(|m| r.format_monomial(m)).collect();
        assert_eq!(names, ["e1^e2", "e1^e3", "e1^e4", "e1^e5", "e2^e3"]);
        assert!(r.monomial_basis(6).is_empty());
        assert_eq!(r.monomial_basis(5).len(), 1);
    }

    #[test]
    fn wedge_signs() {
        let r = e5();
        let e1 = r.var(0);
        let e2 = r.var(1);
        assert_eq!(e2.mul(&e1), e1.mul(&e2).neg());
        assert!(e1.mul(&e1).is_zero());
        let q = e1.mul(&e2).add(&r.var(2).mul(&r.var(3)));
        let q2 = q.mul(&q);
        let expected = e1.mul(&e2).mul(&r.var(2)).mul(&r.var(3)).scale(&Rationals.from_int(2));
        assert_eq!(q2, expected);
        assert_eq!(q2.to_string(), "2*e1^e2^e3^e4");
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = s3().var(0);
        let b = Ring::polynomial(4, Rationals).unwrap().var(0);
        assert_eq!(a.multiply(&b), Err(RingError::MixedRings));
    }

    #[test]
    fn substitutions() {
        let r = s3();
        let k = Rationals;
        let id: Vec<Vec<_>> = (0..3)
            .map(|i| (0..3).map(|j| k.from_int((i == j) as i64)).collect())
            .collect();
        let f = r.var(0).mul(&r.var(1)).add(&r.var(2).pow(2));
        assert_eq!(f.apply_linear_substitution(&id).unwrap(), f);
        let swap = vec![
            vec![k.from_int(0), k.from_int(1), k.from_int(0)],
            vec![k.from_int(1), k.from_int(0), k.from_int(0)],
            vec![k.from_int(0), k.from_int(0), k.from_int(1)],
        ];
        assert_eq!(r.var(0).pow(2).apply_linear_substitution(&swap).unwrap(), r.var(1).pow(2));
        let singular = vec![vec![k.from_int(1); 3]; 3];
        assert_eq!(
            f.apply_linear_substitution(&singular),
            Err(RingError::SingularSubstitution)
        );
    }

    #[test]
    fn ring_specs() {
        let s: RingSpec = "S:3@QQ".parse().unwrap();
        assert_eq!(s.kind, RingKind::Polynomial);
        assert_eq!(s.to_string(), "S:3@QQ");
        let e: RingSpec = "E:5@GF(3)".parse().unwrap();
        assert_eq!(e.field, FieldSpec::Prime(3));
        assert!("T:3@QQ".parse::<RingSpec>().is_err());
        assert!("S:9@QQ".parse::<RingSpec>().is_err());
    }

    fn gf3_exterior() -> Ring<PrimeField> {
        Ring::exterior(5, PrimeField::new(3).unwrap()).unwrap()
    }

    fn homogeneous(ring: Ring<PrimeField>, d: usize) -> impl Strategy<Value = Element<PrimeField>> {
        let len = ring.dim(d);
        prop::collection::vec(0u64..3, len).prop_map(move |v| Element::from_dense(&ring, d, &v))
    }

    proptest! {
        #[test]
        fn lex_order_is_strict_within_degree(d in 0usize..5) {
            let r = Ring::polynomial(4, Rationals).unwrap();
            let b = r.monomial_basis(d);
            for w in b.windows(2) {
                prop_assert_eq!(w[0].lex_cmp(&w[1]), Ordering::Greater);
                prop_assert!(w[0] > w[1]);
            }
        }

        #[test]
        fn graded_anticommutativity(
            (da, db) in (0usize..4, 0usize..4),
            va in prop::collection::vec(0u64..3, 10),
            vb in prop::collection::vec(0u64..3, 10),
            vc in prop::collection::vec(0u64..3, 5),
        ) {
            let r = gf3_exterior();
            let a = Element::from_dense(&r, da, &va[..r.dim(da)]);
            let b = Element::from_dense(&r, db, &vb[..r.dim(db)]);
            let c = Element::from_dense(&r, 1, &vc);
            let ab = a.mul(&b);
            let ba = b.mul(&a);
            let expected = if (da * db) % 2 == 1 { ba.neg() } else { ba };
            prop_assert_eq!(&ab, &expected);
            prop_assert_eq!(ab.mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn substitution_is_a_homomorphism(
            a in homogeneous(gf3_exterior(), 2),
            b in homogeneous(gf3_exterior(), 1),
            m in prop::collection::vec(0u64..3, 25),
        ) {
            let r = gf3_exterior();
            let matrix: Vec<Vec<u64>> = m.chunks(5).map(|c| c.to_vec()).collect();
            if let Ok(images) = substitution_images(&r, &matrix) {
                let lhs = a.mul(&b).substitute(&images);
                let rhs = a.substitute(&images).mul(&b.substitute(&images));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
