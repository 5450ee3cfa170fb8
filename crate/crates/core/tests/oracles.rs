//! Independent brute-force oracles for tangent dimensions and growth bounds.

mod common;

use std::collections::HashMap;

use common::*;
use lexpoint_core::combinatorics::{is_admissible, kk_next_bound, lex_ideal, macaulay_next_bound};
use lexpoint_core::field::{Field, PrimeField, Rationals};
use lexpoint_core::ideal::{HilbertFunction, Ideal};
use lexpoint_core::ring::{Monomial, Ring};
use lexpoint_core::tangent::tangent_dimension;
use proptest::prelude::*;

const P: u64 = 1_000_003;

fn monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - a) {
            rest.insert(0, a as u32);
            out.push(rest);
        }
    }
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Tangent dimension of a monomial ideal of the polynomial ring, with the
/// relations generated by the pairwise (Taylor) syzygies.
fn taylor_tangent(n: usize, gens: &[Vec<u32>]) -> usize {
    let in_ideal = |m: &[u32]| gens.iter().any(|g| divides(g, m));
    let deg = |m: &[u32]| m.iter().sum::<u32>() as usize;
    let mut unknowns: Vec<(usize, Vec<u32>)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for s in monomials(n, deg(g)) {
            if !in_ideal(&s) {
                unknowns.push((i, s));
            }
        }
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let lcm: Vec<u32> = gens[i].iter().zip(&gens[j]).map(|(a, b)| *a.max(b)).collect();
            let ui: Vec<u32> = lcm.iter().zip(&gens[i]).map(|(a, b)| a - b).collect();
            let uj: Vec<u32> = lcm.iter().zip(&gens[j]).map(|(a, b)| a - b).collect();
            let mut targets: HashMap<Vec<u32>, usize> = HashMap::new();
            let mut block: Vec<Vec<u64>> = Vec::new();
            for (col, (g, s)) in unknowns.iter().enumerate() {
                let (u, sign) = if *g == i { (&ui, 1) } else if *g == j { (&uj, P - 1) } else { continue };
                let prod: Vec<u32> = u.iter().zip(s).map(|(a, b)| a + b).collect();
                if in_ideal(&prod) {
                    continue;
                }
                let next = targets.len();
                let r = *targets.entry(prod).or_insert(next);
                if r == block.len() {
                    block.push(vec![0; unknowns.len()]);
                }
                block[r][col] = (block[r][col] + sign) % P;
            }
            rows.extend(block);
        }
    }
    unknowns.len() - if rows.is_empty() { 0 } else { rank_mod_p(rows, P) }
}

fn wedge_sign(a: u32, b: u32) -> Option<u64> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    for i in 0..32 {
        if b >> i & 1 == 1 {
            swaps += (a >> (i + 1)).count_ones();
        }
    }
    Some(if swaps % 2 == 0 { 1 } else { P - 1 })
}

/// Degree-0 left-module homomorphisms `I -> E/I` of a monomial ideal of the
/// exterior algebra on `n` generators, straight from the definition: one
/// matrix per degree, commuting with left multiplication by each variable.
fn dense_exterior_tangent(n: usize, gens: &[u32]) -> usize {
    let in_ideal = |m: u32| gens.iter().any(|g| g & m == *g);
    let by_degree = |d: u32| (0u32..1 << n).filter(move |m| m.count_ones() == d);
    let mut unknown = HashMap::new();
    for d in 0..=n as u32 {
        for m in by_degree(d).filter(|&m| in_ideal(m)) {
            for s in by_degree(d).filter(|&s| !in_ideal(s)) {
                let k = unknown.len();
                unknown.insert((m, s), k);
            }
        }
    }
    let mut rows = Vec::new();
    for d in 0..n as u32 {
        for m in by_degree(d).filter(|&m| in_ideal(m)) {
            for k in 0..n {
                let v = 1u32 << k;
                // phi(v m) - v phi(m) = 0 in each standard monomial of degree d+1
                for t in by_degree(d + 1).filter(|&t| !in_ideal(t)) {
                    let mut row = vec![0u64; unknown.len()];
                    if let Some(sg) = wedge_sign(v, m) {
                        row[unknown[&(v | m, t)]] = sg;
                    }
                    if t & v != 0 {
                        let s = t & !v;
                        if let (Some(sg), Some(&c)) = (wedge_sign(v, s), unknown.get(&(m, s))) {
                            row[c] = (row[c] + P - sg) % P;
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    unknown.len() - if rows.is_empty() { 0 } else { rank_mod_p(rows, P) }
}

fn poly_ideal<F: Field>(ring: &Ring<F>, gens: &[Vec<u32>]) -> Ideal<F> {
    let ms: Vec<Monomial> = gens.iter().map(|g| Monomial::from_exponents(g)).collect();
    Ideal::monomial(ring, &ms)
}

fn ext_ideal<F: Field>(ring: &Ring<F>, gens: &[u32]) -> Ideal<F> {
    let ms: Vec<Monomial> = gens.iter().map(|&g| Monomial::from_mask(g)).collect();
    Ideal::monomial(ring, &ms)
}

fn lex3() -> Vec<Vec<u32>> {
    vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 2], vec![0, 4, 0], vec![0, 3, 1]]
}

fn lex4() -> Vec<Vec<u32>> {
    [[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1], [0, 2, 0, 0], [0, 1, 1, 0], [0, 1, 0, 2], [0, 0, 4, 0]]
        .iter()
        .map(|r| r.to_vec())
        .collect()
}

fn mask(idx: &[u32]) -> u32 {
    idx.iter().map(|i| 1 << (i - 1)).sum()
}

#[test]
fn tangent_at_three_variable_lex_point() {
    let oracle = taylor_tangent(3, &lex3());
    assert_eq!(oracle, 9);
    assert_eq!(tangent_dimension(&poly_ideal(&s(3), &lex3()), None).unwrap().dimension, oracle);
    let gfp = Ring::polynomial(3, PrimeField::new(P).unwrap()).unwrap();
    assert_eq!(tangent_dimension(&poly_ideal(&gfp, &lex3()), None).unwrap().dimension, oracle);
}

#[test]
fn tangent_at_four_variable_lex_point() {
    let oracle = taylor_tangent(4, &lex4());
    assert_eq!(oracle, 15);
    assert_eq!(tangent_dimension(&poly_ideal(&s(4), &lex4()), None).unwrap().dimension, oracle);
}

#[test]
fn tangent_at_exterior_lex_point() {
    let l = [mask(&[1, 2]), mask(&[1, 3]), mask(&[1, 4]), mask(&[2, 3, 4]), mask(&[2, 3, 5])];
    let oracle = dense_exterior_tangent(5, &l);
    assert_eq!(oracle, 17);
    assert_eq!(tangent_dimension(&ext_ideal(&e(5), &l), None).unwrap().dimension, oracle);
    let g3 = Ring::exterior(5, gf(3)).unwrap();
    assert_eq!(tangent_dimension(&ext_ideal(&g3, &l), None).unwrap().dimension, oracle);
}

#[test]
fn tangent_at_other_exterior_monomial_ideals() {
    let cases: Vec<Vec<u32>> = vec![
        vec![mask(&[1, 2]), mask(&[1, 3]), mask(&[1, 4]), mask(&[2, 3, 5]), mask(&[2, 4, 5])],
        vec![mask(&[1, 2])],
        vec![mask(&[1, 2]), mask(&[3, 4])],
        vec![mask(&[1]), mask(&[2, 3])],
    ];
    for gens in cases {
        for n in [4, 5] {
            if gens.iter().any(|g| *g >= 1 << n) {
                continue;
            }
            let oracle = dense_exterior_tangent(n, &gens);
            let r = e(n);
            assert_eq!(tangent_dimension(&ext_ideal(&r, &gens), None).unwrap().dimension, oracle, "{gens:?} n={n}");
        }
    }
}

#[test]
fn tangent_of_point_ideals_matches_taylor() {
    let cases: Vec<Vec<Vec<u32>>> = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0]],
        vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]],
        vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0]],
        vec![vec![1, 0, 0], vec![0, 3, 0]],
        vec![vec![2, 0], vec![1, 2], vec![0, 4]],
    ];
    for gens in cases {
        let n = gens[0].len();
        let oracle = taylor_tangent(n, &gens);
        assert_eq!(tangent_dimension(&poly_ideal(&s(n), &gens), None).unwrap().dimension, oracle, "{gens:?}");
    }
}

/// Largest `h_{d+1}` after the `a` lex-smallest degree-d monomials, by
/// enumeration in enough variables.
fn brute_macaulay(a: usize, d: usize) -> usize {
    let n = a.max(1);
    let mut low = monomials(n, d);
    low.reverse(); // lex ascending
    low.truncate(a);
    let keep: std::collections::HashSet<Vec<u32>> = low.into_iter().collect();
    monomials(n, d + 1)
        .into_iter()
        .filter(|m| {
            (0..n).filter(|&i| m[i] > 0).all(|i| {
                let mut q = m.clone();
                q[i] -= 1;
                keep.contains(&q)
            })
        })
        .count()
}

fn brute_kruskal_katona(a: usize, d: usize) -> usize {
    let n = a + d + 1;
    let mut subsets: Vec<Vec<usize>> = Vec::new();
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
    rec(0, n, d, &mut Vec::new(), &mut subsets);
    // lex descending on sorted index sequences: smaller first index is larger
    subsets.sort();
    let keep: std::collections::HashSet<Vec<usize>> = subsets.iter().rev().take(a).cloned().collect();
    let mut up = Vec::new();
    rec(0, n, d + 1, &mut Vec::new(), &mut up);
    up.into_iter()
        .filter(|m| {
            (0..m.len()).all(|i| {
                let mut q = m.clone();
                q.remove(i);
                keep.contains(&q)
            })
        })
        .count()
}

#[test]
fn macaulay_bound_matches_lex_segment_growth() {
    for d in 1..=4 {
        for a in 0..=20 {
            assert_eq!(macaulay_next_bound(a, d), brute_macaulay(a, d), "a={a} d={d}");
        }
    }
}

#[test]
fn kruskal_katona_bound_matches_squarefree_growth() {
    for d in 1..=4 {
        for a in 0..=20 {
            assert_eq!(kk_next_bound(a, d), brute_kruskal_katona(a, d), "a={a} d={d}");
        }
    }
}

fn monomial_ideal_strategy() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=5).prop_flat_map(|n| {
        let gen = prop::collection::vec(0u32..=3, n).prop_filter("degree 1..=5", |g| {
            let d: u32 = g.iter().sum();
            (1..=5).contains(&d)
        });
        (Just(n), prop::collection::vec(gen, 1..=4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lex_round_trip_polynomial((n, gens) in monomial_ideal_strategy()) {
        let r = s(n);
        let bound = 6;
        let hf = poly_ideal(&r, &gens).hilbert_function(bound);
        let finite = HilbertFunction::finite(hf.values.clone());
        prop_assert!(is_admissible(&finite, &r));
        let lex = lex_ideal(&finite, &r, Some(bound)).unwrap();
        prop_assert_eq!(lex.hilbert_function(bound).values, hf.values);
    }

    #[test]
    fn lex_round_trip_exterior((n, gens) in monomial_ideal_strategy()) {
        let r = e(n);
        let masks: Vec<u32> = gens
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| 1u32 << i).sum())
            .collect();
        let hf = ext_ideal(&r, &masks).hilbert_function(n);
        let finite = HilbertFunction::finite(hf.values.clone());
        prop_assert!(is_admissible(&finite, &r));
        let lex = lex_ideal(&finite, &r, None).unwrap();
        prop_assert_eq!(lex.hilbert_function(n).values, hf.values);
    }

    #[test]
    fn tangent_matches_taylor_on_random_monomial_ideals(
        gens in prop::collection::vec(
            prop::collection::vec(0u32..=3, 3).prop_filter("degree 2..=3", |g| (2..=3).contains(&g.iter().sum::<u32>())),
            1..=4,
        )
    ) {
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in &gens {
            if !gens.iter().any(|h| h != g && divides(h, g)) && !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        let i = poly_ideal(&Ring::polynomial(3, Rationals).unwrap(), &minimal);
        prop_assert_eq!(tangent_dimension(&i, None).unwrap().dimension, taylor_tangent(3, &minimal));
    }
}
