//! Randomized validators for the exterior quadric facts, run over small
//! finite fields.

use std::collections::BTreeMap;

use lexpoint_core::exterior::{
    annihilator_space, envelope, find_rank2_pencils, is_rank2_pencil, lies_in_exterior_power, quadric_kernel,
    quadric_rank, skew_rank, u_squared_zero, QuadricSpace,
};
use lexpoint_core::field::Field;
use lexpoint_core::ideal::{vanishing_ideal, Ideal};
use lexpoint_core::ring::{Element, Ring};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::geometry::rank2_pencil_is_unique;
use crate::random::*;
use crate::samplers::{sample_with_rng, Locus};

/// Outcome of a batch of random trials.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trials: usize,
    /// Trials whose draw met the hypotheses and was checked.
    pub checked: usize,
    /// Named counters: filtered draws and outcome breakdowns.
    pub counts: BTreeMap<String, usize>,
    pub counterexamples: Vec<String>,
}

impl TrialSummary {
    fn new(trials: usize) -> Self {
        Self {
            trials,
            ..Self::default()
        }
    }

    fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexamples.len() < 5 {
            self.counterexamples.push(describe());
        } else if !ok {
            self.bump("further_counterexamples");
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && !self.counts.contains_key("further_counterexamples")
            && !self.counts.contains_key("short_of_target")
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{} trials, {} checked", self.trials, self.checked);
        for (k, v) in &self.counts {
            s.push_str(&format!(", {k}={v}"));
        }
        if self.checked == 0 {
            s.push_str(", no coverage");
        }
        if !self.counterexamples.is_empty() {
            s.push_str(&format!("; counterexamples: {}", self.counterexamples.join(" | ")));
        }
        s
    }
}

fn quadric_of_rank<F: Field>(ring: &Ring<F>, rank: usize, rng: &mut dyn RngCore) -> Element<F> {
    let mut q = ring.zero();
    for _ in 0..rank / 2 {
        q = q.add(&random_linear(ring, rng).mul(&random_linear(ring, rng)));
    }
    q
}

/// Members of the pencil `⟨q1, q2⟩` up to scaling: all of them over a
/// finite field, `q1`, `q2` and `q1 + λ q2` for a few `λ` otherwise (the
/// square is quadratic in `λ`, so three members decide it).
fn pencil_members<F: Field>(q1: &Element<F>, q2: &Element<F>) -> Vec<Element<F>> {
    let k = q1.field();
    let lambdas: Vec<F::Elem> = match k.elements() {
        Some(all) => all,
        None => (0..4).map(|i| k.from_int(i)).collect(),
    };
    let mut out = vec![q2.clone()];
    out.extend(lambdas.iter().map(|l| q1.add(&q2.scale(l))));
    out
}

/// The five quadric facts, one item at a time.
pub fn verify_quadric_facts<F: Field>(item: u8, ring: &Ring<F>, trials: usize, rng: &mut dyn RngCore) -> TrialSummary {
    let mut sum = TrialSummary::new(trials);
    for _ in 0..trials {
        match item {
            1 => pencil_trial(ring, rng, &mut sum),
            2 => square_trial(ring, rng, &mut sum),
            3 => rank2_subspace_trial(ring, rng, &mut sum),
            4 => rank4_subspace_trial(ring, rng, &mut sum),
            _ => rank4_kernel_trial(ring, rng, &mut sum),
        }
    }
    sum
}

/// Rank-2 pencils are exactly the common-factor pencils.
fn pencil_trial<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore, sum: &mut TrialSummary) {
    let k = ring.field();
    let (q1, q2) = if rng.gen_bool(0.5) {
        let l: Vec<_> = (0..3).map(|_| random_linear(ring, rng)).collect();
        let (a, b) = (l[0].mul(&l[1]), l[0].mul(&l[2]));
        let m: Vec<F::Elem> = (0..4).map(|_| k.random(rng)).collect();
        (a.scale(&m[0]).add(&b.scale(&m[1])), a.scale(&m[2]).add(&b.scale(&m[3])))
    } else {
        let r = [0, 2, 2, 4][rng.gen_range(0..4)];
        (quadric_of_rank(ring, 2, rng), quadric_of_rank(ring, r.max(2), rng))
    };
    let exact = match is_rank2_pencil(&q1, &q2) {
        Ok(w) => w,
        Err(_) => return sum.bump("dependent"),
    };
    let brute = pencil_members(&q1, &q2).iter().all(|q| q.mul(q).is_zero());
    let witness_ok = exact.as_ref().is_none_or(|w| {
        let span_ok = span_dim(ring, 2, &[q1.clone(), q2.clone(), w.l1.mul(&w.l2), w.l1.mul(&w.l3)]) == 2;
        span_ok && span_dim(ring, 1, &[w.l1.clone(), w.l2.clone(), w.l3.clone()]) == 3
    });
    sum.bump(if brute { "rank2_pencils" } else { "other_pencils" });
    sum.record(exact.is_some() == brute && witness_ok, || format!("<{q1}, {q2}>"));
}

/// `rank(q) ≤ 2 ⟺ q² = 0`, with the skew-matrix rank as cross-check.
fn square_trial<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore, sum: &mut TrialSummary) {
    let q = match rng.gen_range(0..3) {
        0 => quadric_of_rank(ring, 2, rng),
        1 => quadric_of_rank(ring, 4, rng),
        _ => random_homogeneous(ring, 2, rng),
    };
    let r = quadric_rank(&q).expect("degree 2");
    sum.bump(&format!("rank{r}"));
    let ok = (r <= 2) == q.mul(&q).is_zero() && r == skew_rank(&q).expect("degree 2") && r % 2 == 0;
    sum.record(ok, || q.to_string());
}

fn span_contains<F: Field>(ring: &Ring<F>, sub: &[Element<F>], v: &[Element<F>]) -> bool {
    sub.iter().all(|s| in_span(ring, 1, s, v))
}

/// A rank-2 quadric lies in `Λ²V` iff both factors lie in `V`.
fn rank2_subspace_trial<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore, sum: &mut TrialSummary) {
    let dim = rng.gen_range(2..=4);
    let Some(v) = random_independent_linear(ring, dim, rng) else {
        return sum.bump("dependent_v");
    };
    let pick = |rng: &mut dyn RngCore| {
        if rng.gen_bool(0.6) {
            random_combination(ring, &v, rng)
        } else {
            random_linear(ring, rng)
        }
    };
    let (l1, l2) = (pick(rng), pick(rng));
    let q = l1.mul(&l2);
    if q.is_zero() {
        return sum.bump("zero_quadric");
    }
    let inside = lies_in_exterior_power(&q, &v);
    let factors_inside = span_contains(ring, &[l1.clone(), l2.clone()], &v);
    let kernel = quadric_kernel(&q).expect("nonzero quadric");
    let kernel_ok = !inside || span_contains(ring, &kernel, &v);
    sum.bump(if inside { "inside" } else { "outside" });
    sum.record(inside == factors_inside && kernel_ok, || format!("q = {q}, V dim {dim}"));
}

/// A rank-4 quadric lies in `Λ²V` iff its four factors span a subspace of
/// `V`; for `dim V = 4` its kernel is `V` itself.
fn rank4_subspace_trial<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore, sum: &mut TrialSummary) {
    let Some(v) = random_independent_linear(ring, 4, rng) else {
        return sum.bump("dependent_v");
    };
    let all_inside = rng.gen_bool(0.5);
    let l: Vec<_> = (0..4)
        .map(|i| {
            if all_inside || i < 3 {
                random_combination(ring, &v, rng)
            } else {
                random_linear(ring, rng)
            }
        })
        .collect();
    let q = l[0].mul(&l[1]).add(&l[2].mul(&l[3]));
    if quadric_rank(&q).expect("degree 2") != 4 {
        return sum.bump("rank_below_4");
    }
    let inside = lies_in_exterior_power(&q, &v);
    let factors_inside = span_contains(ring, &l, &v);
    let kernel = quadric_kernel(&q).expect("nonzero quadric");
    let kernel_ok = !inside || (kernel.len() == 4 && span_contains(ring, &kernel, &v));
    sum.bump(if inside { "inside" } else { "outside" });
    sum.record(inside == factors_inside && kernel_ok, || format!("q = {q}"));
}

/// For rank-4 `q = l1 l2 + l3 l4`: `l5 ∧ q² = 0 ⟺ l5 ∈ ⟨l1..l4⟩`.
fn rank4_kernel_trial<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore, sum: &mut TrialSummary) {
    let l: Vec<_> = (0..4).map(|_| random_linear(ring, rng)).collect();
    let q = l[0].mul(&l[1]).add(&l[2].mul(&l[3]));
    if quadric_rank(&q).expect("degree 2") != 4 {
        return sum.bump("rank_below_4");
    }
    let l5 = if rng.gen_bool(0.5) {
        random_combination(ring, &l, rng)
    } else {
        random_linear(ring, rng)
    };
    let kills = l5.mul(&q).mul(&q).is_zero();
    let in_factors = in_span(ring, 1, &l5, &l);
    let in_kernel = in_span(ring, 1, &l5, &quadric_kernel(&q).expect("nonzero quadric"));
    sum.bump(if kills { "annihilates" } else { "survives" });
    sum.record(kills == in_factors && kills == in_kernel, || format!("q = {q}, l5 = {l5}"));
}

/// Draws a 3-dimensional quadric space from a mixture that covers spaces
/// inside `Λ²V`, spaces with a common-factor pencil, `Λ²W` and random ones.
fn draw_quadric_space<F: Field>(ring: &Ring<F>, rng: &mut dyn RngCore) -> (&'static str, Vec<Element<F>>) {
    match rng.gen_range(0..4) {
        0 => {
            let v: Vec<_> = (0..4).map(|_| random_linear(ring, rng)).collect();
            let w = wedge_square_basis(&v);
            ("in_wedge_v", (0..3).map(|_| random_combination(ring, &w, rng)).collect())
        }
        1 => {
            let l: Vec<_> = (0..3).map(|_| random_linear(ring, rng)).collect();
            let q = random_homogeneous(ring, 2, rng);
            ("with_pencil", vec![l[0].mul(&l[1]), l[0].mul(&l[2]), q])
        }
        2 => {
            let w: Vec<_> = (0..3).map(|_| random_linear(ring, rng)).collect();
            ("wedge_w", wedge_square_basis(&w))
        }
        _ => ("random", (0..3).map(|_| random_homogeneous(ring, 2, rng)).collect()),
    }
}

/// Ideals with Hilbert function (1,5,7,2) whose quadrics contain no rank-2
/// pencil have their quadrics inside some `Λ²V`, `dim V = 4`.
///
/// Most draws fail the filters, so drawing continues until `trials` ideals
/// have been checked, up to `25 * trials` draws.
pub fn verify_no_pencil_envelope<F: Field>(ring: &Ring<F>, trials: usize, rng: &mut dyn RngCore) -> TrialSummary {
    let mut sum = TrialSummary::new(0);
    while sum.checked < trials && sum.trials < 25 * trials {
        sum.trials += 1;
        let (kind, quadrics) = draw_quadric_space(ring, rng);
        let Ok(u) = QuadricSpace::new(ring, quadrics.clone()) else {
            sum.bump("filtered_dependent");
            continue;
        };
        let w = u.wedge_linear_dim();
        if w > 8 {
            sum.bump("filtered_hilbert_function");
            continue;
        }
        let mut gens = quadrics;
        gens.extend((w..8).map(|_| random_homogeneous(ring, 3, rng)));
        let ideal = Ideal::new(ring, gens).expect("homogeneous");
        if ideal.hilbert_function(5).values != [1, 5, 7, 2, 0, 0] {
            sum.bump("filtered_hilbert_function");
            continue;
        }
        if !find_rank2_pencils(&u).expect("finite field").is_empty() {
            sum.bump("filtered_has_pencil");
            continue;
        }
        sum.bump(kind);
        let ann = annihilator_space(&u).len();
        sum.record(ann >= 1, || format!("I_2 = <{}>", join(u.basis())));
    }
    if sum.checked < trials {
        sum.bump("short_of_target");
    }
    sum
}

/// For `U` of dimension 3 with `dim(U ∧ E_1) ≥ 7`: `U² = 0` iff `U ⊆ Λ²W`
/// for some 3-dimensional `W`.
pub fn verify_open_condition<F: Field>(ring: &Ring<F>, trials: usize, rng: &mut dyn RngCore) -> TrialSummary {
    let mut sum = TrialSummary::new(trials);
    for _ in 0..trials {
        let (_, quadrics) = draw_quadric_space(ring, rng);
        let Ok(u) = QuadricSpace::new(ring, quadrics) else {
            sum.bump("filtered_dependent");
            continue;
        };
        if u.wedge_linear_dim() < 7 {
            sum.bump("filtered_small_wedge");
            continue;
        }
        let square_zero = u_squared_zero(&u);
        let in_wedge_w = annihilator_space(&u).len() >= 2;
        sum.bump(if square_zero { "both_true" } else { "both_false" });
        sum.record(square_zero == in_wedge_w, || format!("U = <{}>", join(u.basis())));
    }
    sum
}

/// Sampled points of the 14-dimensional exterior locus contain exactly one
/// rank-2 pencil (enumerated over a finite field).
pub fn verify_pencil_uniqueness<F: Field>(ring: &Ring<F>, trials: usize, rng: &mut dyn RngCore) -> TrialSummary {
    let mut sum = TrialSummary::new(trials);
    for _ in 0..trials {
        let s = match sample_with_rng(Locus::X5, ring.field(), rng) {
            Ok(s) => s,
            Err(e) => {
                sum.record(false, || e.to_string());
                continue;
            }
        };
        sum.bump(&format!("attempts_{}", s.attempts.min(5)));
        let u = QuadricSpace::new(ring, s.ideal.component_basis(2)).expect("three quadrics");
        let pencils = find_rank2_pencils(&u).expect("finite field");
        sum.record(pencils.len() == 1, || format!("{} pencils in {}", pencils.len(), s.ideal));
    }
    sum
}

/// Exact version over any field: the known pencil of each sample is
/// certified unique by [`rank2_pencil_is_unique`].
pub fn verify_pencil_uniqueness_exact<F: Field>(ring: &Ring<F>, trials: usize, rng: &mut dyn RngCore) -> TrialSummary {
    let mut sum = TrialSummary::new(trials);
    for _ in 0..trials {
        let s = match sample_with_rng(Locus::X5, ring.field(), rng) {
            Ok(s) => s,
            Err(e) => {
                sum.record(false, || e.to_string());
                continue;
            }
        };
        let g = s.ideal.generators();
        let u = QuadricSpace::new(ring, s.ideal.component_basis(2)).expect("three quadrics");
        let verdict = rank2_pencil_is_unique(&u, &g[0], &g[1]);
        sum.bump(match verdict {
            Some(true) => "unique",
            Some(false) => "not_unique",
            None => "undetermined",
        });
        sum.record(verdict == Some(true), || s.ideal.to_string());
    }
    sum
}

/// Sampled points of the 15-dimensional exterior locus have a unique
/// envelope `V`, and it is the one used to build them.
pub fn verify_envelope_uniqueness<F: Field>(ring: &Ring<F>, trials: usize, rng: &mut dyn RngCore) -> TrialSummary {
    let mut sum = TrialSummary::new(trials);
    for _ in 0..trials {
        let s = match sample_with_rng(Locus::Y5, ring.field(), rng) {
            Ok(s) => s,
            Err(e) => {
                sum.record(false, || e.to_string());
                continue;
            }
        };
        let u = QuadricSpace::new(ring, s.ideal.component_basis(2)).expect("three quadrics");
        let ann = annihilator_space(&u).len();
        let v = envelope(&u);
        let ok = ann == 1 && v.len() == 4 && u.basis().iter().all(|q| lies_in_exterior_power(q, &v));
        sum.record(ok, || format!("annihilator dim {ann} for {}", s.ideal));
    }
    sum
}

/// Initial ideals of the ideals of `trials` random 4-point sets in `P³`,
/// compared with `expected`; returns the number of matches.
pub fn generic_initial_of_points<F: Field>(
    ring: &Ring<F>,
    expected: &Ideal<F>,
    trials: usize,
    bound: usize,
    rng: &mut dyn RngCore,
) -> (usize, Vec<String>) {
    let k = ring.field();
    let mut hits = 0;
    let mut misses = Vec::new();
    for _ in 0..trials {
        let pts: Vec<Vec<F::Elem>> = (0..4).map(|_| (0..ring.n()).map(|_| k.random(rng)).collect()).collect();
        match vanishing_ideal(ring, &pts, bound) {
            Ok(i) if i.initial_ideal(bound).equal_up_to(expected, bound) => hits += 1,
            Ok(i) => misses.push(format!("in(I) generated by {}", join(&i.initial_ideal(bound).minimal_generators(bound)))),
            Err(e) => misses.push(e.to_string()),
        }
    }
    (hits, misses)
}

fn join<F: Field>(elems: &[Element<F>]) -> String {
    elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}
