#![allow(dead_code)]

use lexpoint_core::field::{Field, PrimeField, RationalFunctions, Rationals};
use lexpoint_core::ideal::Ideal;
use lexpoint_core::parse::parse_generators;
use lexpoint_core::ring::Ring;

pub fn s(n: usize) -> Ring<Rationals> {
    Ring::polynomial(n, Rationals).unwrap()
}

pub fn e(n: usize) -> Ring<Rationals> {
    Ring::exterior(n, Rationals).unwrap()
}

pub fn s_t(n: usize) -> Ring<RationalFunctions<Rationals>> {
    Ring::polynomial(n, RationalFunctions::new(Rationals)).unwrap()
}

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn ideal<F: Field>(ring: &Ring<F>, gens: &str) -> Ideal<F> {
    Ideal::new(ring, parse_generators(ring, gens).unwrap()).unwrap()
}

/// One-parameter families from the stratum analysis of the 3-point case:
/// (name, generators of I(t), displayed limit), with `a`, `b` the two
/// nonzero parameters.
pub fn strata_families(a: i64, b: i64) -> Vec<(&'static str, String, String)> {
    let q = "(y^2 + x*z)";
    vec![
        (
            "stratum1",
            format!("x*y + t*y*({a}*y + {b}*z); x*z; y^3*z; y^2*z^2; y*z^3"),
            format!("x*z; x*y; y*z*({a}*y + {b}*z); y^3*z; y^2*z^2; y*z^3"),
        ),
        (
            "stratum2a",
            format!("y*z + t*x*({a}*x + {b}*z); x*y; x^4; x^3*z; x^2*z^2"),
            format!("y*z; x*y; x^2*({a}*x + {b}*z); x^4; x^3*z; x^2*z^2"),
        ),
        (
            "stratum2b",
            format!("x^2 + t*({a}*y + {b}*z)*z; x*y; y^3*z; y^2*z^2; y*z^3"),
            format!("x^2; x*y; y*z*({a}*y + {b}*z); y^3*z; y^2*z^2; y*z^3"),
        ),
        (
            "stratum3",
            format!(
                "x^2 + t*({a}*y^2 + {b}*z*y); x*y - t*({a}*y*z + {b}*z^2); \
                 {q}*x^2; {q}*x*y; {q}*x*z; {q}*y^2; {q}*y*z; {q}*z^2"
            ),
            format!("x^2; x*y; {q}*({a}*y + {b}*z); {q}*y^2; {q}*y*z; {q}*z^2"),
        ),
        (
            "stratum4",
            format!("x^2 + t*y*({a}*y + {b}*z); x*y; y^4; y^3*z; y^2*z^2"),
            format!("x^2; x*y; y^2*({a}*y + {b}*z); y^4; y^3*z; y^2*z^2"),
        ),
    ]
}

/// Dense Gaussian elimination mod a prime; returns the rank.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}
