//! Quadrics in the exterior algebra: ranks, kernels, rank-2 pencils,
//! contractions and `Λ²V` envelopes.

use thiserror::Error;

use crate::field::Field;
use crate::linalg::{self, Echelon, SparseVec};
use crate::ring::{Element, Monomial, Ring, RingKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("operation requires an exterior algebra")]
    NotExterior,
    #[error("expected an element of degree {expected}, got `{got}`")]
    WrongDegree { expected: usize, got: String },
    #[error("quadric is zero")]
    ZeroQuadric,
    #[error("quadrics are linearly dependent")]
    Dependent,
    #[error("enumeration needs a finite field")]
    InfiniteField,
    #[error("expected a space of dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
}

fn check_exterior<F: Field>(ring: &Ring<F>) -> Result<(), ExteriorError> {
    if ring.kind() == RingKind::Exterior {
        Ok(())
    } else {
        Err(ExteriorError::NotExterior)
    }
}

fn check_degree<F: Field>(e: &Element<F>, d: usize) -> Result<(), ExteriorError> {
    check_exterior(e.ring())?;
    if e.is_zero() || e.degree() == Some(d) {
        Ok(())
    } else {
        Err(ExteriorError::WrongDegree {
            expected: d,
            got: e.to_string(),
        })
    }
}

/// A linearly independent list of quadrics.
#[derive(Debug, Clone)]
pub struct QuadricSpace<F: Field> {
    ring: Ring<F>,
    basis: Vec<Element<F>>,
}

impl<F: Field> QuadricSpace<F> {
    pub fn new(ring: &Ring<F>, quadrics: Vec<Element<F>>) -> Result<Self, ExteriorError> {
        check_exterior(ring)?;
        let mut e = Echelon::new(ring.field(), ring.dim(2));
        for q in &quadrics {
            check_degree(q, 2)?;
            if !e.insert(&q.to_sparse(2)) {
                return Err(ExteriorError::Dependent);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            basis: quadrics,
        })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[Element<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Linear combination of the basis.
    pub fn combination(&self, coeffs: &[F::Elem]) -> Element<F> {
        self.basis
            .iter()
            .zip(coeffs)
            .fold(self.ring.zero(), |acc, (q, c)| acc.add(&q.scale(c)))
    }

    /// `dim (U ∧ E_1)`.
    pub fn wedge_linear_dim(&self) -> usize {
        let k = self.ring.field();
        let mut e = Echelon::new(k, self.ring.dim(3));
        for q in &self.basis {
            for v in self.ring.vars() {
                e.insert(&v.mul(q).to_sparse(3));
            }
        }
        e.dim()
    }
}

/// A linear functional on `E_1`, given by its values on `e_1..e_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVector<E>(pub Vec<E>);

impl<E: Clone> DualVector<E> {
    pub fn evaluate<F: Field<Elem = E>>(&self, l: &Element<F>) -> E {
        let k = l.field();
        l.terms().fold(k.zero(), |acc, (m, c)| {
            let i = (0..l.ring().n()).find(|&i| m.exponent(i) > 0).expect("linear monomial");
            k.add(&acc, &k.mul(c, &self.0[i]))
        })
    }
}

/// Contraction `ι_φ`: the degree −1 antiderivation with `ι_φ(e_i) = φ(e_i)`.
pub fn contract<F: Field>(phi: &DualVector<F::Elem>, e: &Element<F>) -> Element<F> {
    let ring = e.ring();
    let k = ring.field();
    let mut out = ring.zero();
    for (m, c) in e.terms() {
        let mut sign_negative = false;
        for i in 0..ring.n() {
            if m.exponent(i) == 0 {
                continue;
            }
            if !k.is_zero(&phi.0[i]) {
                let rest = Monomial::from_mask(m.mask() & !(1 << i));
                let coeff = k.mul(c, &phi.0[i]);
                let coeff = if sign_negative { k.neg(&coeff) } else { coeff };
                out = out.add(&Element::from_monomial(ring, rest, coeff));
            }
            sign_negative = !sign_negative;
        }
    }
    out
}

/// `2k` for the largest `k` with `q^k != 0`.
pub fn quadric_rank<F: Field>(q: &Element<F>) -> Result<usize, ExteriorError> {
    check_degree(q, 2)?;
    let mut power = q.clone();
    let mut k = 0;
    while !power.is_zero() {
        k += 1;
        power = power.mul(q);
    }
    Ok(2 * k)
}

/// Skew-symmetric matrix `A` with `q = sum_{i<j} A_ij e_i e_j`.
pub fn skew_matrix<F: Field>(q: &Element<F>) -> Result<Vec<Vec<F::Elem>>, ExteriorError> {
    check_degree(q, 2)?;
    let ring = q.ring();
    let k = ring.field();
    let n = ring.n();
    let mut a = vec![vec![k.zero(); n]; n];
    for (m, c) in q.terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| m.exponent(i) > 0).collect();
        a[idx[0]][idx[1]] = c.clone();
        a[idx[1]][idx[0]] = k.neg(c);
    }
    Ok(a)
}

/// Rank of the skew-symmetric matrix of `q`.
pub fn skew_rank<F: Field>(q: &Element<F>) -> Result<usize, ExteriorError> {
    Ok(linalg::rank_dense(q.field(), &skew_matrix(q)?))
}

/// Linear forms `l` with `l ∧ q^k = 0`, where `2k` is the rank of `q`.
pub fn quadric_kernel<F: Field>(q: &Element<F>) -> Result<Vec<Element<F>>, ExteriorError> {
    let rank = quadric_rank(q)?;
    if rank == 0 {
        return Err(ExteriorError::ZeroQuadric);
    }
    Ok(linear_kernel(&q.pow(rank / 2)))
}

/// Linear forms annihilating a homogeneous element under the wedge product.
pub fn linear_kernel<F: Field>(f: &Element<F>) -> Vec<Element<F>> {
    let ring = f.ring();
    let d = f.degree().unwrap_or(0) + 1;
    let rows: Vec<SparseVec<F::Elem>> = ring.vars().iter().map(|v| v.mul(f).to_sparse(d)).collect();
    let ker = linalg::left_kernel(ring.field(), ring.dim(d), &rows);
    Echelon::from_rows(ring.field(), ring.n(), ker.iter())
        .rows()
        .into_iter()
        .map(|r| Element::from_sparse(ring, 1, r))
        .collect()
}

/// `q1 = l1 ∧ l2`, `q2 = l1 ∧ l3`.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilWitness<F: Field> {
    pub l1: Element<F>,
    pub l2: Element<F>,
    pub l3: Element<F>,
}

fn span_echelon<F: Field>(ring: &Ring<F>, d: usize, elems: &[Element<F>]) -> Echelon<F> {
    let rows: Vec<_> = elems.iter().map(|e| e.to_sparse(d)).collect();
    Echelon::from_rows(ring.field(), ring.dim(d), rows.iter())
}

/// Solves `l ∧ x = target` for `x` among the given candidates' span,
/// returning the rescaled candidate.
fn factor_out<F: Field>(l: &Element<F>, candidate: &Element<F>, target: &Element<F>) -> Option<Element<F>> {
    let prod = l.mul(candidate);
    let (m, c) = target.leading_term()?;
    let p = prod.coefficient(m);
    let k = target.field();
    if k.is_zero(&p) {
        return None;
    }
    let scaled = candidate.scale(&k.div(c, &p).ok()?);
    (l.mul(&scaled) == *target).then_some(scaled)
}

/// Whether every member of `⟨q1, q2⟩` has rank at most 2, decided by
/// `q1² = q1 q2 = q2² = 0`. A positive answer carries a common-factor
/// witness.
pub fn is_rank2_pencil<F: Field>(q1: &Element<F>, q2: &Element<F>) -> Result<Option<PencilWitness<F>>, ExteriorError> {
    let ring = q1.ring();
    QuadricSpace::new(ring, vec![q1.clone(), q2.clone()])?;
    if !(q1.mul(q1).is_zero() && q1.mul(q2).is_zero() && q2.mul(q2).is_zero()) {
        return Ok(None);
    }
    let k1 = quadric_kernel(q1)?;
    let k2 = quadric_kernel(q2)?;
    let meet = span_echelon(ring, 1, &k1).intersect(&span_echelon(ring, 1, &k2));
    let l1 = Element::from_sparse(ring, 1, meet.rows()[0]);
    let pick = |ker: &[Element<F>], q: &Element<F>| {
        ker.iter()
            .find_map(|c| factor_out(&l1, c, q))
            .expect("rank-2 quadric factors through its kernel")
    };
    let l2 = pick(&k1, q1);
    let l3 = pick(&k2, q2);
    Ok(Some(PencilWitness { l1, l2, l3 }))
}

/// Normalized projective points of `k^3` (first nonzero coordinate 1).
fn projective_plane<F: Field>(k: &F) -> Result<Vec<[F::Elem; 3]>, ExteriorError> {
    let elems = k.elements().ok_or(ExteriorError::InfiniteField)?;
    let mut out = Vec::new();
    for a in &elems {
        for b in &elems {
            out.push([k.one(), a.clone(), b.clone()]);
        }
    }
    for b in &elems {
        out.push([k.zero(), k.one(), b.clone()]);
    }
    out.push([k.zero(), k.zero(), k.one()]);
    Ok(out)
}

/// All rank-2 pencils inside a 3-dimensional quadric space over a finite
/// field, each given by the reduced echelon basis of the pencil.
pub fn find_rank2_pencils<F: Field>(u: &QuadricSpace<F>) -> Result<Vec<[Element<F>; 2]>, ExteriorError> {
    if u.dim() != 3 {
        return Err(ExteriorError::WrongDimension {
            expected: 3,
            got: u.dim(),
        });
    }
    let ring = u.ring();
    let k = ring.field();
    let mut out = Vec::new();
    // Each pencil is the kernel of a functional (a, b, c) on U's coordinates.
    for [a, b, c] in projective_plane(k)? {
        let functional = vec![vec![a], vec![b], vec![c]];
        let ker = linalg::left_kernel(k, 1, &functional.iter().map(|r| linalg::to_sparse(k, r)).collect::<Vec<_>>());
        let members: Vec<Element<F>> = ker
            .iter()
            .map(|v| u.combination(&linalg::to_dense(k, v, 3)))
            .collect();
        if is_rank2_pencil(&members[0], &members[1])?.is_some() {
            let e = span_echelon(ring, 2, &members);
            let rows = e.rows();
            out.push([Element::from_sparse(ring, 2, rows[0]), Element::from_sparse(ring, 2, rows[1])]);
        }
    }
    out.sort_by_key(|p| format!("{} | {}", p[0], p[1]));
    Ok(out)
}

/// `{φ : ι_φ q = 0 for all q in U}`.
pub fn annihilator_space<F: Field>(u: &QuadricSpace<F>) -> Vec<DualVector<F::Elem>> {
    let ring = u.ring();
    let k = ring.field();
    let n = ring.n();
    let rows: Vec<SparseVec<F::Elem>> = (0..n)
        .map(|i| {
            let mut phi = vec![k.zero(); n];
            phi[i] = k.one();
            let phi = DualVector(phi);
            let mut row = Vec::new();
            for (j, q) in u.basis().iter().enumerate() {
                let c = contract(&phi, q).to_sparse(1);
                row.extend(c.into_iter().map(|(col, a)| (j * n + col, a)));
            }
            row
        })
        .collect();
    let ker = linalg::left_kernel(k, u.dim() * n, &rows);
    Echelon::from_rows(k, n, ker.iter())
        .rows()
        .into_iter()
        .map(|r| DualVector(linalg::to_dense(k, r, n)))
        .collect()
}

/// Common kernel of the annihilator: the smallest `V` with `U ⊆ Λ²V`.
pub fn envelope<F: Field>(u: &QuadricSpace<F>) -> Vec<Element<F>> {
    let ring = u.ring();
    let k = ring.field();
    let ann = annihilator_space(u);
    let rows: Vec<SparseVec<F::Elem>> = ann.iter().map(|phi| linalg::to_sparse(k, &phi.0)).collect();
    let ker = linalg::right_kernel(k, ring.n(), &rows);
    Echelon::from_rows(k, ring.n(), ker.iter())
        .rows()
        .into_iter()
        .map(|r| Element::from_sparse(ring, 1, r))
        .collect()
}

/// Whether `e` lies in `Λ^d V` for the span `V` of the given linear forms,
/// via contractions by functionals vanishing on `V`.
pub fn lies_in_exterior_power<F: Field>(e: &Element<F>, v: &[Element<F>]) -> bool {
    let ring = e.ring();
    let k = ring.field();
    let rows: Vec<SparseVec<F::Elem>> = v.iter().map(|l| l.to_sparse(1)).collect();
    let perp = linalg::right_kernel(k, ring.n(), &rows);
    perp.iter()
        .all(|phi| contract(&DualVector(linalg::to_dense(k, phi, ring.n())), e).is_zero())
}

/// `q_i ∧ q_j = 0` for all basis pairs.
pub fn u_squared_zero<F: Field>(u: &QuadricSpace<F>) -> bool {
    let b = u.basis();
    (0..b.len()).all(|i| (i..b.len()).all(|j| b[i].mul(&b[j]).is_zero()))
}
