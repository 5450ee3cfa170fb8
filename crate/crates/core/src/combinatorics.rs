//! Binomial expansions, Macaulay and Kruskal–Katona growth bounds,
//! admissibility of Hilbert functions and lexicographic ideals.

use thiserror::Error;

use crate::field::Field;
use crate::ideal::{HilbertFunction, Ideal, IdealError};
use crate::linalg::Echelon;
use crate::ring::{binomial, Ring, RingKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("Hilbert function is not admissible: first violation at degree {0}")]
    Inadmissible(usize),
    #[error("minimal generators still appear in degrees {0} or {1}; raise the degree bound")]
    UnstableGeneratorWindow(usize, usize),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// `a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)` with
/// `k_d > k_{d-1} > ... > k_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub degree: usize,
    /// `(k_i, i)` pairs, `i` decreasing.
    pub terms: Vec<(usize, usize)>,
}

impl MacaulayRep {
    pub fn value(&self) -> usize {
        self.terms.iter().map(|&(k, i)| binomial(k, i)).sum()
    }
}

pub fn macaulay_rep(a: usize, d: usize) -> MacaulayRep {
    assert!(d >= 1, "degree must be positive");
    let mut rest = a;
    let mut terms = Vec::new();
    let mut i = d;
    while rest > 0 && i >= 1 {
        let mut k = i;
        while binomial(k + 1, i) <= rest {
            k += 1;
        }
        terms.push((k, i));
        rest -= binomial(k, i);
        i -= 1;
    }
    MacaulayRep { degree: d, terms }
}

/// `a^<d>`: largest possible `h_{d+1}` after `h_d = a` in a polynomial ring.
pub fn macaulay_next_bound(a: usize, d: usize) -> usize {
    macaulay_rep(a, d)
        .terms
        .iter()
        .map(|&(k, i)| binomial(k + 1, i + 1))
        .sum()
}

/// Exterior analogue: largest possible `h_{d+1}` after `h_d = a`.
pub fn kk_next_bound(a: usize, d: usize) -> usize {
    macaulay_rep(a, d)
        .terms
        .iter()
        .map(|&(k, i)| binomial(k, i + 1))
        .sum()
}

fn growth_bound(kind: RingKind, a: usize, d: usize) -> usize {
    match kind {
        RingKind::Polynomial => macaulay_next_bound(a, d),
        RingKind::Exterior => kk_next_bound(a, d),
    }
}

/// Last degree to examine: far enough that tails and exterior top degrees
/// have been stepped through explicitly.
fn check_horizon<F: Field>(hf: &HilbertFunction, ring: &Ring<F>) -> usize {
    let mut top = hf.values.len();
    if let Some(t) = hf.tail {
        top = top.max(t.value + 1);
    }
    if let Some(n) = ring.top_degree() {
        top = top.max(n + 1);
    }
    top + 1
}

/// First degree at which `hf` cannot be a Hilbert function of a quotient
/// of `ring`, if any. Degrees past a finite prefix count as zero.
pub fn first_violation<F: Field>(hf: &HilbertFunction, ring: &Ring<F>) -> Option<usize> {
    let at = |d: usize| hf.get(d).unwrap_or(0);
    if at(0) != 1 {
        return Some(0);
    }
    for d in 1..=check_horizon(hf, ring) {
        if at(d) > ring.dim(d) {
            return Some(d);
        }
        if d >= 2 && at(d) > growth_bound(ring.kind(), at(d - 1), d - 1) {
            return Some(d);
        }
    }
    None
}

pub fn is_admissible<F: Field>(hf: &HilbertFunction, ring: &Ring<F>) -> bool {
    first_violation(hf, ring).is_none()
}

/// Default degree bound for [`lex_ideal`].
pub fn default_lex_bound(hf: &HilbertFunction) -> usize {
    let last = hf.max_degree();
    match hf.tail {
        Some(_) => 8.max(2 * last),
        None => last + 1,
    }
}

/// The lexicographic ideal with Hilbert function `hf`, built from lex
/// segments up to `bound` (default [`default_lex_bound`]). For eventually
/// constant tails the last two degrees must carry no minimal generators.
pub fn lex_ideal<F: Field>(hf: &HilbertFunction, ring: &Ring<F>, bound: Option<usize>) -> Result<Ideal<F>, LexError> {
    if let Some(d) = first_violation(hf, ring) {
        return Err(LexError::Inadmissible(d));
    }
    let bound = bound.unwrap_or_else(|| default_lex_bound(hf));
    let k = ring.field();
    let comps = (0..=bound)
        .map(|d| {
            let dim = ring.dim(d);
            let mut e = Echelon::new(k, dim);
            for c in 0..dim - hf.get(d).unwrap_or(0) {
                e.insert(&[(c, k.one())]);
            }
            e
        })
        .collect();
    let lex = Ideal::from_components(ring, comps)?;
    if hf.tail.is_some() && bound >= 1 {
        let counts = lex.minimal_generator_counts(bound);
        if counts[bound] > 0 || counts[bound - 1] > 0 {
            return Err(LexError::UnstableGeneratorWindow(bound - 1, bound));
        }
    }
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_generators;
    use proptest::prelude::*;

    #[test]
    fn expansions() {
        assert_eq!(macaulay_rep(5, 2).terms, vec![(3, 2), (2, 1)]);
        assert_eq!(macaulay_rep(1, 3).terms, vec![(3, 3)]);
        assert!(macaulay_rep(0, 2).terms.is_empty());
    }

    #[test]
    fn growth_bounds() {
        assert_eq!(macaulay_next_bound(5, 2), 7);
        for d in 1..6 {
            assert_eq!(macaulay_next_bound(1, d), 1);
            assert_eq!(kk_next_bound(1, d), 0);
        }
        assert_eq!(macaulay_next_bound(0, 3), 0);
        assert_eq!(kk_next_bound(7, 2), 4);
        assert_eq!(kk_next_bound(10, 2), 10);
    }

    #[test]
    fn admissibility() {
        let s3 = Ring::polynomial(3, Rationals).unwrap();
        let e5 = Ring::exterior(5, Rationals).unwrap();
        let s2 = Ring::polynomial(2, Rationals).unwrap();
        assert!(is_admissible(&"1,3,4,4,3,3,3".parse().unwrap(), &s3));
        assert!(is_admissible(&"1,3,4,4,3,3+".parse().unwrap(), &s3));
        assert!(is_admissible(&"1,5,7,2,0,0".parse().unwrap(), &e5));
        assert_eq!(first_violation(&"1,2,4".parse().unwrap(), &s2), Some(2));
        assert_eq!(first_violation(&"1,3,7".parse().unwrap(), &s3), Some(2));
        assert_eq!(first_violation(&"1,5,7,5".parse().unwrap(), &e5), Some(3));
        assert_eq!(first_violation(&"1,5,7,2+".parse().unwrap(), &e5), Some(4));
    }

    #[test]
    fn lex_ideal_in_three_variables() {
        let r = Ring::polynomial(3, Rationals).unwrap();
        let lex = lex_ideal(&"1,3,4,4,3,3+".parse().unwrap(), &r, None).unwrap();
        let expected = Ideal::new(&r, parse_generators(&r, "x^2; x*y; x*z^2; y^4; y^3*z").unwrap()).unwrap();
        assert!(lex.equal_up_to(&expected, 8));
        let gens: Vec<String> = lex.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["x^2", "x*y", "x*z^2", "y^4", "y^3*z"]);
    }

    #[test]
    fn unstable_window_is_reported() {
        let r = Ring::polynomial(3, Rationals).unwrap();
        let err = lex_ideal(&"1,3,4,4,3,3+".parse().unwrap(), &r, Some(4)).unwrap_err();
        assert_eq!(err, LexError::UnstableGeneratorWindow(3, 4));
        assert_eq!(
            lex_ideal(&"1,3,7".parse().unwrap(), &r, None).unwrap_err(),
            LexError::Inadmissible(2)
        );
    }

    proptest! {
        #[test]
        fn expansion_reconstructs(a in 0usize..5000, d in 1usize..7) {
            let rep = macaulay_rep(a, d);
            prop_assert_eq!(rep.value(), a);
            for w in rep.terms.windows(2) {
                prop_assert!(w[0].0 > w[1].0);
                prop_assert_eq!(w[0].1, w[1].1 + 1);
            }
            if let Some(&(k, i)) = rep.terms.last() {
                prop_assert!(k >= i);
            }
        }
    }
}
