//! Classification helpers built from kernel operations.

use lexpoint_core::exterior::QuadricSpace;
use lexpoint_core::field::Field;
use lexpoint_core::ideal::{h_vector, HVector, Ideal};
use lexpoint_core::linalg::{left_kernel, rank};
use lexpoint_core::ring::Element;

/// The h-vector of `sat(I)` for an ideal whose saturation defines a
/// length-3 subscheme of the plane: `(1,2)` or `(1,1,1)`.
///
/// Ideals agreeing with their saturation only from degree 4 on need three
/// colon steps before stabilizing, hence the slack of 6.
pub fn classify_stratum_3points<F: Field>(ideal: &Ideal<F>, bound: usize) -> Result<HVector, String> {
    let sat = ideal.saturate_with_slack(bound, 6).map_err(|e| e.to_string())?;
    let hv = h_vector(&sat.hilbert_function(bound)).map_err(|e| e.to_string())?;
    if hv.sum() != 3 {
        return Err(format!("saturation has degree {} (h-vector {hv}), not 3", hv.sum()));
    }
    Ok(hv)
}

/// Exact uniqueness test for a known rank-2 pencil `P = ⟨p1, p2⟩` inside a
/// 3-dimensional quadric space `U`.
///
/// Any other rank-2 pencil meets `P` in a line and contains a member
/// `r = q + a p1 + b p2` of rank at most 2 outside `P`. Because
/// `(a p1 + b p2)² = 0`, the condition `r² = 0` is linear in `(a, b)`:
/// `q² + 2a q p1 + 2b q p2 = 0`. When that system has at most one solution
/// `r`, the only candidates are `⟨r, p⟩` with `p ∈ P`, which are rank-2
/// pencils iff `r ∧ p = 0` for some nonzero `p`. Returns `None` when the
/// linear system is underdetermined.
pub fn rank2_pencil_is_unique<F: Field>(u: &QuadricSpace<F>, p1: &Element<F>, p2: &Element<F>) -> Option<bool> {
    let ring = u.ring();
    let k = ring.field();
    let d2 = ring.dim(2);
    let d4 = ring.dim(4);
    let pencil_rank = rank(k, d2, &[p1.to_sparse(2), p2.to_sparse(2)]);
    let q = u
        .basis()
        .iter()
        .find(|q| rank(k, d2, &[p1.to_sparse(2), p2.to_sparse(2), q.to_sparse(2)]) > pencil_rank)?;
    let a = q.mul(q).to_sparse(4);
    let b = q.mul(p1).to_sparse(4);
    let c = q.mul(p2).to_sparse(4);
    let rank_bc = rank(k, d4, &[b.clone(), c.clone()]);
    let solvable = rank(k, d4, &[b.clone(), c.clone(), a.clone()]) == rank_bc;
    if !solvable {
        return Some(true);
    }
    if rank_bc < 2 {
        return None;
    }
    // unique (s, t) with a + 2 s b + 2 t c = 0, read off the left kernel
    let ker = left_kernel(k, d4, &[b, c, a]);
    let v = lexpoint_core::linalg::to_dense(k, &ker[0], 3);
    let two = k.from_int(2);
    let denom = k.mul(&two, &v[2]);
    let s = k.div(&v[0], &denom).ok()?;
    let t = k.div(&v[1], &denom).ok()?;
    let r = q.add(&p1.scale(&s)).add(&p2.scale(&t));
    let rp = rank(k, d4, &[r.mul(p1).to_sparse(4), r.mul(p2).to_sparse(4)]);
    Some(rp == 2)
}
