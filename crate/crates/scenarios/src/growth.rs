//! Brute-force checks of the growth bounds and of lex-ideal round trips.

use std::collections::HashSet;

use lexpoint_core::combinatorics::{is_admissible, kk_next_bound, lex_ideal, macaulay_next_bound};
use lexpoint_core::field::Field;
use lexpoint_core::ideal::{HilbertFunction, Ideal};
use lexpoint_core::ring::{Monomial, Ring, RingKind};
use rand::{Rng, RngCore};

/// Exponent vectors of degree `d` in `n` variables, lex descending.
fn exponent_vectors(n: usize, d: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d as u32]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponent_vectors(n - 1, d - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

/// Size of the degree-`d+1` part of the order ideal generated by the `a`
/// lex-smallest monomials of degree `d`, in `a` variables.
pub fn brute_macaulay_growth(a: usize, d: usize) -> usize {
    let n = a.max(1);
    let segment: HashSet<Vec<u32>> = exponent_vectors(n, d).into_iter().rev().take(a).collect();
    exponent_vectors(n, d + 1)
        .into_iter()
        .filter(|m| {
            (0..n).filter(|&i| m[i] > 0).all(|i| {
                let mut q = m.clone();
                q[i] -= 1;
                segment.contains(&q)
            })
        })
        .count()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Squarefree analogue, with subsets of `a + d + 1` letters. Subsets are
/// generated in increasing order of their sorted letter lists, which is lex
/// descending order on squarefree monomials.
pub fn brute_kruskal_katona_growth(a: usize, d: usize) -> usize {
    let n = a + d + 1;
    let segment: HashSet<Vec<usize>> = subsets(n, d).into_iter().rev().take(a).collect();
    subsets(n, d + 1)
        .into_iter()
        .filter(|m| {
            (0..m.len()).all(|i| {
                let mut q = m.clone();
                q.remove(i);
                segment.contains(&q)
            })
        })
        .count()
}

/// Mismatches between the closed-form bounds and brute force for
/// `a ≤ max_a`, `1 ≤ d ≤ max_d`.
pub fn growth_bound_mismatches(max_a: usize, max_d: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for d in 1..=max_d {
        for a in 0..=max_a {
            let (m, bm) = (macaulay_next_bound(a, d), brute_macaulay_growth(a, d));
            if m != bm {
                bad.push(format!("Macaulay a={a} d={d}: formula {m}, brute force {bm}"));
            }
            let (k, bk) = (kk_next_bound(a, d), brute_kruskal_katona_growth(a, d));
            if k != bk {
                bad.push(format!("Kruskal-Katona a={a} d={d}: formula {k}, brute force {bk}"));
            }
        }
    }
    bad
}

/// A random monomial ideal with up to 4 generators of degree `1..=max_deg`.
pub fn random_monomial_ideal<F: Field>(ring: &Ring<F>, max_deg: usize, rng: &mut dyn RngCore) -> Ideal<F> {
    let count = rng.gen_range(1..=4);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg.min(ring.top_degree().unwrap_or(max_deg)));
            let basis = ring.monomial_basis(d);
            basis[rng.gen_range(0..basis.len())]
        })
        .collect();
    Ideal::monomial(ring, &gens)
}

/// Lex round trip on `trials` random monomial ideals: the Hilbert function
/// is admissible and the lex ideal reproduces it up to `bound`.
pub fn lex_round_trip<F: Field>(field: &F, kind: RingKind, trials: usize, rng: &mut dyn RngCore) -> Vec<String> {
    let mut bad = Vec::new();
    for _ in 0..trials {
        let n = rng.gen_range(2..=5);
        let ring = Ring::new(kind, n, field.clone()).expect("small ring");
        let ideal = random_monomial_ideal(&ring, 5, rng);
        let bound = match kind {
            RingKind::Polynomial => 7,
            RingKind::Exterior => n,
        };
        let hf = ideal.hilbert_function(bound);
        let finite = HilbertFunction::finite(hf.values.clone());
        if !is_admissible(&finite, &ring) {
            bad.push(format!("{ideal}: Hilbert function {finite} flagged inadmissible"));
            continue;
        }
        match lex_ideal(&finite, &ring, Some(bound)) {
            Ok(lex) if lex.hilbert_function(bound).values == hf.values => {}
            Ok(lex) => bad.push(format!("{ideal}: lex ideal {lex} has Hilbert function {}", lex.hilbert_function(bound))),
            Err(e) => bad.push(format!("{ideal}: {e}")),
        }
    }
    bad
}
