//! Seeded randomness and random elements of graded rings.

use lexpoint_core::field::Field;
use lexpoint_core::linalg::Echelon;
use lexpoint_core::ring::{Element, Ring};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// FNV-1a, used to derive stable per-check seeds from names.
pub fn stable_hash(parts: &[&str]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for b in part.bytes().chain(std::iter::once(0xff)) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stable_hash(&[label]))
}

pub fn random_homogeneous<F: Field>(ring: &Ring<F>, d: usize, rng: &mut dyn RngCore) -> Element<F> {
    let k = ring.field();
    let coeffs: Vec<F::Elem> = (0..ring.dim(d)).map(|_| k.random(rng)).collect();
    Element::from_dense(ring, d, &coeffs)
}

pub fn random_linear<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> Element<F> {
    random_homogeneous(ring, 1, rng)
}

pub fn random_combination<F: Field>(ring: &Ring<F>, elems: &[Element<F>], rng: &mut dyn RngCore) -> Element<F> {
    let k = ring.field();
    elems
        .iter()
        .fold(ring.zero(), |acc, e| acc.add(&e.scale(&k.random(rng))))
}

/// Rank of a list of homogeneous elements of degree `d`.
pub fn span_dim<F: Field>(ring: &Ring<F>, d: usize, elems: &[Element<F>]) -> usize {
    let rows: Vec<_> = elems.iter().map(|e| e.to_sparse(d)).collect();
    Echelon::from_rows(ring.field(), ring.dim(d), rows.iter()).dim()
}

pub fn in_span<F: Field>(ring: &Ring<F>, d: usize, v: &Element<F>, basis: &[Element<F>]) -> bool {
    let rows: Vec<_> = basis.iter().map(|e| e.to_sparse(d)).collect();
    Echelon::from_rows(ring.field(), ring.dim(d), rows.iter()).contains(&v.to_sparse(d))
}

/// Random linearly independent linear forms, or `None` if the draw was
/// degenerate.
pub fn random_independent_linear<F: Field>(ring: &Ring<F>, count: usize, rng: &mut dyn RngCore) -> Option<Vec<Element<F>>> {
    let forms: Vec<_> = (0..count).map(|_| random_linear(ring, rng)).collect();
    (span_dim(ring, 1, &forms) == count).then_some(forms)
}

/// All products `v_i ∧ v_j`, `i < j`: a spanning set of `Λ²V`.
pub fn wedge_square_basis<F: Field>(v: &[Element<F>]) -> Vec<Element<F>> {
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            out.push(v[i].mul(&v[j]));
        }
    }
    out
}
