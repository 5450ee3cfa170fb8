//! Random points of the loci that make up the three Hilbert schemes.
//!
//! Each sampler draws a construction, then re-verifies the locus predicates
//! through the public kernel operations on the resulting ideal, resampling
//! up to [`MAX_ATTEMPTS`] times.

use std::fmt;
use std::str::FromStr;

use lexpoint_core::exterior::{annihilator_space, is_rank2_pencil, u_squared_zero, QuadricSpace};
use lexpoint_core::field::Field;
use lexpoint_core::ideal::{vanishing_ideal, HVector, Ideal};
use lexpoint_core::ring::{Ring, RingKind};
use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::random::*;

pub const MAX_ATTEMPTS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Locus {
    X3,
    Y3,
    X5,
    Y5,
    Z4,
    PTS4,
}

impl Locus {
    pub const ALL: [Locus; 6] = [Locus::X3, Locus::Y3, Locus::X5, Locus::Y5, Locus::Z4, Locus::PTS4];

    pub fn ring_kind(self) -> RingKind {
        match self {
            Locus::X5 | Locus::Y5 => RingKind::Exterior,
            _ => RingKind::Polynomial,
        }
    }

    pub fn variables(self) -> usize {
        match self {
            Locus::X3 | Locus::Y3 => 3,
            Locus::X5 | Locus::Y5 => 5,
            Locus::Z4 | Locus::PTS4 => 4,
        }
    }

    /// Dimension of the parametrization the sampler draws from.
    pub fn parameter_dimension(self) -> usize {
        match self {
            Locus::X3 | Locus::Y3 => 8,
            Locus::X5 => 14,
            Locus::Y5 => 15,
            Locus::Z4 => 14,
            Locus::PTS4 => 12,
        }
    }

    /// Hilbert function prefix every sample must have, up to `bound()`.
    pub fn hilbert_function(self) -> Vec<usize> {
        let b = self.bound();
        match self {
            Locus::X3 | Locus::Y3 => (0..=b).map(|d| [1, 3, 4, 4].get(d).copied().unwrap_or(3)).collect(),
            Locus::X5 | Locus::Y5 => vec![1, 5, 7, 2, 0, 0],
            Locus::Z4 | Locus::PTS4 => (0..=b).map(|d| if d == 0 { 1 } else { 4 }).collect(),
        }
    }

    pub fn bound(self) -> usize {
        match self {
            Locus::X5 | Locus::Y5 => 5,
            _ => 8,
        }
    }

    pub fn ring<F: Field>(self, field: F) -> Ring<F> {
        Ring::new(self.ring_kind(), self.variables(), field).expect("valid ring")
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Locus::X3 => "X3",
            Locus::Y3 => "Y3",
            Locus::X5 => "X5",
            Locus::Y5 => "Y5",
            Locus::Z4 => "Z4",
            Locus::PTS4 => "PTS4",
        };
        f.write_str(s)
    }
}

impl FromStr for Locus {
    type Err = SampleError;

    fn from_str(s: &str) -> Result<Self, SampleError> {
        Locus::ALL
            .into_iter()
            .find(|l| l.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| SampleError::UnknownLocus(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("unknown locus `{0}` (expected X3, Y3, X5, Y5, Z4 or PTS4)")]
    UnknownLocus(String),
    #[error("{locus}: no valid sample after {attempts} attempts; last rejection: {reason}")]
    Exhausted {
        locus: Locus,
        attempts: usize,
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct Sample<F: Field> {
    pub locus: Locus,
    pub ideal: Ideal<F>,
    pub attempts: usize,
    /// Quantities recovered from the ideal while verifying the predicates.
    pub facts: Vec<(String, String)>,
}

type Facts = Vec<(String, String)>;

pub fn sample_locus<F: Field>(locus: Locus, seed: u64, field: &F) -> Result<Sample<F>, SampleError> {
    let mut rng = rng_for(seed, &format!("sample/{locus}/{}", field.name()));
    sample_with_rng(locus, field, &mut rng)
}

pub fn sample_with_rng<F: Field>(locus: Locus, field: &F, rng: &mut dyn RngCore) -> Result<Sample<F>, SampleError> {
    let ring = locus.ring(field.clone());
    let mut reason = String::new();
    for attempt in 1..=MAX_ATTEMPTS {
        let drawn = match locus {
            Locus::X3 => draw_x3(&ring, rng),
            Locus::Y3 => draw_y3(&ring, rng),
            Locus::X5 => draw_x5(&ring, rng),
            Locus::Y5 => draw_y5(&ring, rng),
            Locus::Z4 => draw_z4(&ring, rng),
            Locus::PTS4 => draw_points(&ring, 4, locus.bound(), rng),
        };
        let checked = drawn.and_then(|ideal| {
            let facts = verify_locus(locus, &ideal)?;
            Ok((ideal, facts))
        });
        match checked {
            Ok((ideal, facts)) => {
                return Ok(Sample {
                    locus,
                    ideal,
                    attempts: attempt,
                    facts,
                })
            }
            Err(r) => reason = r,
        }
    }
    Err(SampleError::Exhausted {
        locus,
        attempts: MAX_ATTEMPTS,
        reason,
    })
}

fn ideal_of<F: Field>(ring: &Ring<F>, gens: Vec<lexpoint_core::ring::Element<F>>) -> Result<Ideal<F>, String> {
    Ideal::new(ring, gens).map_err(|e| e.to_string())
}

/// Complete intersection of two quadrics in `I(3 points)`, plus the
/// points' ideal from degree 4 on.
fn draw_x3<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> Result<Ideal<F>, String> {
    let j = draw_points(ring, 3, 8, rng)?;
    let j2 = j.component_basis(2);
    let mut gens = vec![random_combination(ring, &j2, rng), random_combination(ring, &j2, rng)];
    gens.extend(j.component_basis(4));
    ideal_of(ring, gens)
}

/// `(l1 l2, l1 l3, c2) + J_{≥4}` with `J = (l1, c1)`.
fn draw_y3<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> Result<Ideal<F>, String> {
    let l: Vec<_> = (0..3).map(|_| random_linear(ring, rng)).collect();
    let c1 = random_homogeneous(ring, 3, rng);
    let j = ideal_of(ring, vec![l[0].clone(), c1])?;
    let c2 = random_combination(ring, &j.component_basis(3), rng);
    let mut gens = vec![l[0].mul(&l[1]), l[0].mul(&l[2]), c2];
    gens.extend(j.component_basis(4));
    ideal_of(ring, gens)
}

/// `(l1∧l2, l1∧l3, l1∧l6 + l7∧l8)`: the last quadric satisfies `l1∧q² = 0`.
fn draw_x5<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> Result<Ideal<F>, String> {
    let l: Vec<_> = (0..6).map(|_| random_linear(ring, rng)).collect();
    let q = l[0].mul(&l[3]).add(&l[4].mul(&l[5]));
    ideal_of(ring, vec![l[0].mul(&l[1]), l[0].mul(&l[2]), q])
}

/// Three quadrics in `Λ²V` for a random 4-dimensional `V`, plus a cubic.
fn draw_y5<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> Result<Ideal<F>, String> {
    let v = random_independent_linear(ring, 4, rng).ok_or("dependent V")?;
    let wedge = wedge_square_basis(&v);
    let mut gens: Vec<_> = (0..3).map(|_| random_combination(ring, &wedge, rng)).collect();
    gens.push(random_homogeneous(ring, 3, rng));
    ideal_of(ring, gens)
}

/// `(V) + (l1, l2)_3 + (q)` with `V` six general quadrics in `(l1, l2)`.
fn draw_z4<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> Result<Ideal<F>, String> {
    let l = random_independent_linear(ring, 2, rng).ok_or("dependent lines")?;
    let prime = ideal_of(ring, l)?;
    let i2 = prime.component_basis(2);
    let mut gens: Vec<_> = (0..6).map(|_| random_combination(ring, &i2, rng)).collect();
    gens.extend(prime.component_basis(3));
    gens.push(random_homogeneous(ring, 4, rng));
    ideal_of(ring, gens)
}

fn draw_points<F: Field>(ring: &Ring<F>, count: usize, bound: usize, rng: &mut dyn RngCore) -> Result<Ideal<F>, String> {
    let k = ring.field();
    let pts: Vec<Vec<F::Elem>> = (0..count)
        .map(|_| (0..ring.n()).map(|_| k.random(rng)).collect())
        .collect();
    vanishing_ideal(ring, &pts, bound).map_err(|e| e.to_string())
}

fn require(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// Checks the defining predicates of `locus` on `ideal`, returning the
/// recovered quantities.
pub fn verify_locus<F: Field>(locus: Locus, ideal: &Ideal<F>) -> Result<Facts, String> {
    let hf = ideal.hilbert_function(locus.bound());
    require(hf.values == locus.hilbert_function(), format!("Hilbert function {hf}"))?;
    let mut facts = vec![("hilbert_function".to_string(), hf.to_string())];
    match locus {
        Locus::X3 => {
            let quad = Ideal::new(ideal.ring(), ideal.component_basis(2)).map_err(|e| e.to_string())?;
            let qhf = quad.hilbert_function(6);
            require(qhf.values == [1, 3, 4, 4, 4, 4, 4], "quadrics are not a complete intersection")?;
            let hv = saturation_h_vector(ideal)?;
            require(hv == HVector(vec![1, 2]), format!("saturation h-vector {hv}"))?;
            facts.push(("saturation_h_vector".into(), hv.to_string()));
        }
        Locus::Y3 => {
            let hv = saturation_h_vector(ideal)?;
            require(hv == HVector(vec![1, 1, 1]), format!("saturation h-vector {hv}"))?;
            facts.push(("saturation_h_vector".into(), hv.to_string()));
        }
        Locus::X5 => {
            let quadrics: Vec<_> = ideal.generators().iter().filter(|g| g.degree() == Some(2)).cloned().collect();
            require(quadrics.len() == 3, "expected three quadric generators")?;
            let (w, q) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
                .iter()
                .find_map(|&(i, j, o)| {
                    is_rank2_pencil(&quadrics[i], &quadrics[j])
                        .ok()
                        .flatten()
                        .map(|w| (w, quadrics[o].clone()))
                })
                .ok_or("no rank-2 pencil among the quadric generators")?;
            require(w.l1.mul(&q).mul(&q).is_zero(), "l1 ∧ q² ≠ 0")?;
            let wd = quadric_space(ideal)?.wedge_linear_dim();
            require(wd == 8, format!("dim(I_2 ∧ E_1) = {wd}"))?;
            facts.push(("pencil_factor".into(), w.l1.to_string()));
            facts.push(("wedge_linear_dim".into(), wd.to_string()));
        }
        Locus::Y5 => {
            let u = quadric_space(ideal)?;
            let ann = annihilator_space(&u).len();
            require(ann >= 1, "I_2 lies in no Λ²V with dim V = 4")?;
            require(!u_squared_zero(&u), "I_2 lies in some Λ²W with dim W = 3")?;
            let wd = u.wedge_linear_dim();
            require(wd == 7, format!("dim(I_2 ∧ E_1) = {wd}"))?;
            facts.push(("annihilator_dim".into(), ann.to_string()));
            facts.push(("wedge_linear_dim".into(), wd.to_string()));
        }
        Locus::Z4 => {
            let bound = locus.bound();
            let ring = ideal.ring();
            let sat = ideal.saturate(bound).map_err(|e| e.to_string())?;
            let lines = sat.component_basis(1);
            require(lines.len() == 2, format!("saturation has {} linear forms", lines.len()))?;
            let prime = Ideal::new(ring, lines.clone()).map_err(|e| e.to_string())?;
            require(prime.contains_up_to(ideal, 3), "I_{≤3} is not inside (l1, l2)")?;
            require(ideal.dim_component(3) == prime.dim_component(3), "I_3 ≠ (l1, l2)_3")?;
            require(ideal.dim_component(2) == 6, "dim I_2 ≠ 6")?;
            let quartic = ideal
                .component_basis(4)
                .into_iter()
                .find(|f| !prime.contains(f))
                .ok_or("no quartic outside (l1, l2)")?;
            let colon = prime.colon_by_element(&quartic, bound).map_err(|e| e.to_string())?;
            require(colon.equal_up_to(&prime, bound - 4), "quartic is a zero divisor modulo (l1, l2)")?;
            let n = ring.n();
            let lines_params = 2 * (n - 2);
            let v_params = ideal.dim_component(2) * (prime.dim_component(2) - ideal.dim_component(2));
            let q_params = ring.dim(4) - prime.dim_component(4) - 1;
            let joined: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
            facts.push(("radical".into(), joined.join(", ")));
            facts.push(("recovered_parameters".into(), (lines_params + v_params + q_params).to_string()));
        }
        Locus::PTS4 => {
            require(ideal.is_saturated(locus.bound()), "not saturated")?;
        }
    }
    Ok(facts)
}

fn quadric_space<F: Field>(ideal: &Ideal<F>) -> Result<QuadricSpace<F>, String> {
    QuadricSpace::new(ideal.ring(), ideal.component_basis(2)).map_err(|e| e.to_string())
}

fn saturation_h_vector<F: Field>(ideal: &Ideal<F>) -> Result<HVector, String> {
    crate::geometry::classify_stratum_3points(ideal, 8)
}
