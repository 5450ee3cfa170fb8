//! One-parameter families `I(t)` with coefficients in `k[t]`: specialization
//! and flat limits at `t = 0`.

use thiserror::Error;

use crate::field::{Field, FieldError, RatFunc, RationalFunctions};
use crate::ideal::{HilbertFunction, Ideal, IdealError};
use crate::linalg::{Echelon, SparseVec};
use crate::ring::{Element, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegenerationError {
    #[error("coefficient of `{0}` is not polynomial in t")]
    NotPolynomial(String),
    #[error("only {found} of the sampled nonzero t values give the generic Hilbert function (need {needed})")]
    NonFlatSample { found: usize, needed: usize },
    #[error("internal error: limit lost dimension in degree {0}")]
    DimensionDrop(usize),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type FamilyField<F> = RationalFunctions<F>;

/// Number of nonzero parameter values that must reproduce the generic
/// Hilbert function before a limit is taken.
pub const FLAT_SAMPLES: usize = 3;

/// Generators with coefficients in `k[t]`.
#[derive(Clone, Debug)]
pub struct FamilyIdeal<F: Field> {
    ring: Ring<FamilyField<F>>,
    base: Ring<F>,
    generic: Ideal<FamilyField<F>>,
}

/// Outcome of the flatness precondition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessSample<E> {
    pub good: Vec<E>,
    pub bad: Vec<E>,
    pub generic: HilbertFunction,
}

impl<F: Field> FamilyIdeal<F> {
    pub fn new(ring: &Ring<FamilyField<F>>, gens: Vec<Element<FamilyField<F>>>) -> Result<Self, DegenerationError> {
        let k = ring.field();
        for g in &gens {
            if g.terms().any(|(_, c)| !k.is_polynomial(c)) {
                return Err(DegenerationError::NotPolynomial(g.to_string()));
            }
        }
        Ok(Self {
            ring: ring.clone(),
            base: ring.over(k.base().clone()),
            generic: Ideal::new(ring, gens)?,
        })
    }

    /// Family constant in t.
    pub fn constant(ideal: &Ideal<F>) -> Self {
        let k = RationalFunctions::new(ideal.field().clone());
        let ring = ideal.ring().over(k.clone());
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.map_coefficients(&ring, |c| k.constant(c.clone())))
            .collect();
        Self::new(&ring, gens).expect("constant coefficients")
    }

    pub fn ring(&self) -> &Ring<FamilyField<F>> {
        &self.ring
    }

    pub fn base_ring(&self) -> &Ring<F> {
        &self.base
    }

    pub fn generic(&self) -> &Ideal<FamilyField<F>> {
        &self.generic
    }

    /// Generators evaluated at `t0`.
    pub fn specialize(&self, t0: &F::Elem) -> Ideal<F> {
        let k = self.ring.field();
        let gens = self
            .generic
            .generators()
            .iter()
            .map(|g| {
                g.try_map_coefficients(&self.base, |c| k.evaluate_at(c, t0))
                    .expect("polynomial coefficients have no poles")
            })
            .collect();
        Ideal::new(&self.base, gens).expect("specialization is homogeneous")
    }

    /// Compares Hilbert functions of fibers at `t = 1, 2, ...` with the
    /// generic one up to `bound`, stopping once `FLAT_SAMPLES` agree.
    pub fn sample_flatness(&self, bound: usize) -> FlatnessSample<F::Elem> {
        let generic = self.generic.hilbert_function(bound);
        let base = self.base.field();
        let mut good = Vec::new();
        let mut bad = Vec::new();
        let candidates: Vec<F::Elem> = match base.elements() {
            Some(all) => all.into_iter().filter(|c| !base.is_zero(c)).collect(),
            None => (1..=24).map(|i| base.from_int(i)).collect(),
        };
        for t0 in candidates {
            if good.len() == FLAT_SAMPLES {
                break;
            }
            if self.specialize(&t0).hilbert_function(bound).values == generic.values {
                good.push(t0);
            } else {
                bad.push(t0);
            }
        }
        FlatnessSample { good, bad, generic }
    }

    /// Limit at `t = 0` of the graded components up to `bound`.
    pub fn flat_limit(&self, bound: usize) -> Result<Ideal<F>, DegenerationError> {
        let sample = self.sample_flatness(bound);
        if sample.good.len() < FLAT_SAMPLES {
            return Err(DegenerationError::NonFlatSample {
                found: sample.good.len(),
                needed: FLAT_SAMPLES,
            });
        }
        let comps = (0..=bound)
            .map(|d| self.limit_component(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::from_components(&self.base, comps)?)
    }

    /// t-adic echelon reduction of the generic degree-d component.
    ///
    /// Each generic row is reduced against the rows kept so far, scaled by a
    /// power of t so that its smallest valuation is zero, and pivoted at its
    /// first entry that is a unit at `t = 0`. All kept rows then have
    /// nonnegative valuations and independent values at `t = 0`, so they form
    /// a basis of the saturated `k[t]_(t)`-lattice and their values at zero
    /// span the limit.
    fn limit_component(&self, d: usize) -> Result<Echelon<F>, DegenerationError> {
        let k = self.ring.field();
        let base = self.base.field();
        let generic = self.generic.component(d);
        let ncols = generic.ncols();
        let mut lattice = Echelon::new(k, ncols);
        for row in generic.rows() {
            let reduced = lattice.reduce(row);
            if reduced.is_empty() {
                return Err(DegenerationError::DimensionDrop(d));
            }
            let v = reduced
                .iter()
                .map(|(_, a)| k.valuation(a))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .min()
                .expect("nonzero row");
            let shifted: SparseVec<RatFunc<F::Elem>> = reduced.into_iter().map(|(c, a)| (c, k.shift(&a, -v))).collect();
            let unit = shifted
                .iter()
                .find(|(_, a)| k.valuation(a) == Ok(0))
                .map(|(c, _)| *c)
                .expect("some entry has valuation zero");
            lattice.insert_with_pivot(shifted, unit);
        }
        let mut limit = Echelon::new(base, ncols);
        for row in lattice.rows() {
            let at_zero: SparseVec<F::Elem> = row
                .iter()
                .map(|(c, a)| k.evaluate_at(a, &base.zero()).map(|x| (*c, x)))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .filter(|(_, x)| !base.is_zero(x))
                .collect::<Vec<_>>();
            let mut sorted = at_zero;
            sorted.sort_by_key(|(c, _)| *c);
            limit.insert(&sorted);
        }
        if limit.dim() != generic.dim() {
            return Err(DegenerationError::DimensionDrop(d));
        }
        Ok(limit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_generators;

    fn family(gens: &str) -> FamilyIdeal<Rationals> {
        let ring = Ring::polynomial(3, RationalFunctions::new(Rationals)).unwrap();
        FamilyIdeal::new(&ring, parse_generators(&ring, gens).unwrap()).unwrap()
    }

    fn ideal(gens: &str) -> Ideal<Rationals> {
        let r = Ring::polynomial(3, Rationals).unwrap();
        Ideal::new(&r, parse_generators(&r, gens).unwrap()).unwrap()
    }

    #[test]
    fn linear_family() {
        let f = family("x + t*y");
        assert!(f.flat_limit(4).unwrap().equal_up_to(&ideal("x"), 4));
    }

    #[test]
    fn limit_differs_from_naive_specialization() {
        let f = family("x + t*y; x + t*z");
        let lim = f.flat_limit(4).unwrap();
        assert!(lim.equal_up_to(&ideal("x; y - z"), 4));
        let naive = f.specialize(&Rationals.zero());
        assert!(naive.equal_up_to(&ideal("x"), 4));
        assert!(lim.contains_up_to(&naive, 4));
    }

    #[test]
    fn rejects_non_polynomial_coefficients() {
        let ring = Ring::polynomial(3, RationalFunctions::new(Rationals)).unwrap();
        let gens = parse_generators(&ring, "x/t").unwrap();
        assert!(matches!(
            FamilyIdeal::new(&ring, gens),
            Err(DegenerationError::NotPolynomial(_))
        ));
    }

    #[test]
    fn constant_family_limit() {
        let i = ideal("x^2; x*y + y*z; z^3");
        let f = FamilyIdeal::constant(&i);
        assert!(f.flat_limit(6).unwrap().equal_up_to(&i, 6));
        assert!(f.specialize(&Rationals.from_int(7)).equal_up_to(&i, 6));
    }

    #[test]
    fn cancelling_leading_terms() {
        // (x + t y, x) has generic fibre (x, y); the limit keeps dimension.
        let f = family("x + t*y; x");
        assert!(f.flat_limit(3).unwrap().equal_up_to(&ideal("x; y"), 3));
        // t x^2 and x^2 + t y^2: limit contains y^2 after dividing by t.
        let g = family("t*x^2; x^2 + t*y^2");
        let lim = g.flat_limit(4).unwrap();
        assert!(lim.contains(&ideal("y^2").generators()[0]));
        assert!(lim.contains_up_to(&g.specialize(&Rationals.zero()), 4));
    }
}
