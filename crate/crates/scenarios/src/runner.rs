//! Executes scenario files and assembles reports.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use lexpoint_core::combinatorics::lex_ideal;
use lexpoint_core::degeneration::FamilyIdeal;
use lexpoint_core::exterior::{annihilator_space, find_rank2_pencils, quadric_rank, u_squared_zero, QuadricSpace};
use lexpoint_core::field::{Field, FieldSpec, PrimeField, RationalFunctions, Rationals};
use lexpoint_core::ideal::{h_vector, minors_ideal, vanishing_ideal, HilbertFunction, Ideal};
use lexpoint_core::parse::{parse_generators, parse_homogeneous, parse_matrix};
use lexpoint_core::ring::{Ring, RingKind, RingSpec};
use lexpoint_core::tangent::tangent_dimension;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::classify_stratum_3points;
use crate::growth::{growth_bound_mismatches, lex_round_trip};
use crate::lemmas::*;
use crate::random::{rng_for, stable_hash};
use crate::report::{CheckResult, Status, VerificationReport};
use crate::samplers::{sample_locus, verify_locus, Locus};
use crate::scenario::{instantiate, Check, CheckKind, IdealRef, Scenario};

pub const SCENARIO_NAMES: [&str; 9] = [
    "thm3",
    "thm4",
    "thm5",
    "lemma3-5",
    "lemma5-1",
    "lemma5-2",
    "lemma5-4",
    "fixtures",
    "combinatorics",
];

pub fn builtin_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "thm3" => include_str!("../data/thm3.json"),
        "thm4" => include_str!("../data/thm4.json"),
        "thm5" => include_str!("../data/thm5.json"),
        "lemma3-5" => include_str!("../data/lemma3-5.json"),
        "lemma5-1" => include_str!("../data/lemma5-1.json"),
        "lemma5-2" => include_str!("../data/lemma5-2.json"),
        "lemma5-4" => include_str!("../data/lemma5-4.json"),
        "fixtures" => include_str!("../data/fixtures.json"),
        "combinatorics" => include_str!("../data/combinatorics.json"),
        _ => return None,
    })
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown scenario '{0}' (known: {known}, all)", known = SCENARIO_NAMES.join(", "))]
    Unknown(String),
    #[error("scenario '{scenario}' does not parse: {message}")]
    Parse { scenario: String, message: String },
    #[error("scenario '{scenario}', fixture '{fixture}': {message}")]
    Fixture {
        scenario: String,
        fixture: String,
        message: String,
    },
    #[error("scenario '{scenario}': unusable field '{field}' (expected QQ or GF(p))")]
    Field { scenario: String, field: String },
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub seed: u64,
    /// Replaces each scenario's default field.
    pub field: Option<FieldSpec>,
    pub timings: bool,
}

pub fn load_builtin(name: &str) -> Result<Scenario, ScenarioError> {
    let src = builtin_source(name).ok_or_else(|| ScenarioError::Unknown(name.to_string()))?;
    parse_scenario(name, src)
}

pub fn parse_scenario(label: &str, src: &str) -> Result<Scenario, ScenarioError> {
    Scenario::from_json(src).map_err(|e| ScenarioError::Parse {
        scenario: label.to_string(),
        message: e.to_string(),
    })
}

/// Runs a built-in scenario, or every one of them for `all` (check ids are
/// then prefixed with the scenario name).
pub fn run_scenario(name: &str, opts: &RunOptions) -> Result<VerificationReport, ScenarioError> {
    if name != "all" {
        return run(&load_builtin(name)?, opts);
    }
    let scenarios: Vec<Scenario> = SCENARIO_NAMES.iter().map(|n| load_builtin(n)).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    for s in &scenarios {
        let report = run(s, opts)?;
        checks.extend(report.checks.into_iter().map(|mut c| {
            c.id = format!("{}/{}", s.name, c.id);
            c
        }));
    }
    let field = opts.field.as_ref().map_or("scenario default".to_string(), |f| f.to_string());
    Ok(VerificationReport::new("all", opts.seed, field, checks))
}

/// Runs one parsed scenario. Fixtures are validated for every field in use
/// before the first check starts.
pub fn run(scn: &Scenario, opts: &RunOptions) -> Result<VerificationReport, ScenarioError> {
    let bad_field = |field: &str| ScenarioError::Field {
        scenario: scn.name.clone(),
        field: field.to_string(),
    };
    let default = match &opts.field {
        Some(f) => f.clone(),
        None => scn.field.parse::<FieldSpec>().map_err(|_| bad_field(&scn.field))?,
    };
    let mut groups: BTreeMap<String, (FieldSpec, Vec<&Check>)> = BTreeMap::new();
    for c in &scn.checks {
        let spec = match &c.field {
            Some(f) => f.parse::<FieldSpec>().map_err(|_| bad_field(f))?,
            None => default.clone(),
        };
        groups.entry(spec.to_string()).or_insert_with(|| (spec, Vec::new())).1.push(c);
    }
    groups.entry(default.to_string()).or_insert_with(|| (default.clone(), Vec::new()));
    let mut contexts: Vec<(Box<dyn Runner>, Vec<&Check>)> = Vec::new();
    for (name, (spec, checks)) in groups {
        let note = (spec != default).then(|| format!(" (over {name})"));
        let runner: Box<dyn Runner> = match spec {
            FieldSpec::Rationals => Box::new(Ctx::new(scn, Rationals, opts.seed, note)?),
            FieldSpec::Prime(p) => Box::new(Ctx::new(scn, PrimeField::new(p).map_err(|_| bad_field(&name))?, opts.seed, note)?),
            FieldSpec::Functions(_) => return Err(bad_field(&name)),
        };
        contexts.push((runner, checks));
    }
    let jobs: Vec<(&dyn Runner, &Check)> = contexts
        .iter()
        .flat_map(|(r, cs)| cs.iter().map(move |c| (r.as_ref(), *c)))
        .collect();
    let results = run_parallel(&jobs, opts.timings);
    Ok(VerificationReport::new(&scn.name, opts.seed, default.to_string(), results))
}

fn run_parallel(jobs: &[(&dyn Runner, &Check)], timings: bool) -> Vec<CheckResult> {
    let next = AtomicUsize::new(0);
    let out = Mutex::new(Vec::with_capacity(jobs.len()));
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len()).max(1);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(runner, check)) = jobs.get(i) else { break };
                let start = Instant::now();
                let outcome = match catch_unwind(AssertUnwindSafe(|| runner.run(check))) {
                    Ok(Ok(o)) => o,
                    Ok(Err(e)) => Outcome::fail("completion without error", format!("error: {e}")),
                    Err(p) => Outcome::fail("completion without error", format!("panic: {}", panic_text(&p))),
                };
                let result = CheckResult {
                    id: check.id.clone(),
                    status: outcome.status,
                    expected: outcome.expected,
                    actual: outcome.actual + runner.note(),
                    provenance: check.provenance.clone(),
                    ms: timings.then(|| start.elapsed().as_millis() as u64),
                };
                out.lock().expect("no worker panics while holding the lock").push(result);
            });
        }
    });
    out.into_inner().expect("workers joined")
}

fn panic_text(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown".into())
}

struct Outcome {
    status: Status,
    expected: String,
    actual: String,
}

impl Outcome {
    fn new(ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Self {
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    fn fail(expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Self::new(false, expected, actual)
    }

    fn skip(expected: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            status: Status::Skip,
            expected: expected.into(),
            actual: reason.into(),
        }
    }

    fn from_summary(expected: impl Into<String>, s: &TrialSummary) -> Self {
        Self::new(s.passed(), expected, s.describe())
    }
}

trait Runner: Sync {
    fn run(&self, check: &Check) -> Result<Outcome, String>;
    fn note(&self) -> &str;
}

struct Ctx<'a, F: Field> {
    scn: &'a Scenario,
    field: F,
    fixtures: BTreeMap<String, Ideal<F>>,
    seed: u64,
    note: String,
}

type R<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn join_values(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Agreement on degrees `0..=bound`; finite expectations are zero beyond
/// their last entry.
fn hf_matches(expected: &HilbertFunction, computed: &[usize]) -> bool {
    computed.iter().enumerate().all(|(d, &v)| expected.get(d).unwrap_or(0) == v)
}

fn generator_list<F: Field>(ideal: &Ideal<F>, bound: usize) -> Vec<String> {
    ideal.minimal_generators(bound).iter().map(|g| g.to_string()).collect()
}

impl<'a, F: Field> Ctx<'a, F> {
    fn new(scn: &'a Scenario, field: F, seed: u64, note: Option<String>) -> Result<Self, ScenarioError> {
        let mut ctx = Self {
            scn,
            field,
            fixtures: BTreeMap::new(),
            seed,
            note: note.unwrap_or_default(),
        };
        for (name, fx) in &scn.fixtures {
            let fail = |message: String| ScenarioError::Fixture {
                scenario: scn.name.clone(),
                fixture: name.clone(),
                message,
            };
            let ring = ctx.ring(fx.ring.as_deref()).map_err(fail)?;
            let gens = parse_generators(&ring, &fx.gens).map_err(|e| fail(e.to_string()))?;
            let ideal = Ideal::new(&ring, gens).map_err(|e| fail(e.to_string()))?;
            let declared: HilbertFunction = fx.hf.parse().map_err(|e: lexpoint_core::ideal::IdealError| fail(e.to_string()))?;
            let actual = ideal.hilbert_function(scn.bound);
            if !hf_matches(&declared, &actual.values) {
                return Err(fail(format!("declared Hilbert function {} but computed {actual}", fx.hf)));
            }
            ctx.fixtures.insert(name.clone(), ideal);
        }
        Ok(ctx)
    }

    fn bound(&self) -> usize {
        self.scn.bound
    }

    fn ring_with<G: Field>(&self, spec: Option<&str>, field: G) -> R<Ring<G>> {
        let text = spec.unwrap_or(&self.scn.ring);
        let parsed: RingSpec = format!("{text}@QQ").parse().map_err(err)?;
        parsed.build(field).map_err(err)
    }

    fn ring(&self, spec: Option<&str>) -> R<Ring<F>> {
        self.ring_with(spec, self.field.clone())
    }

    fn resolve(&self, r: &IdealRef) -> R<Ideal<F>> {
        match r {
            IdealRef::Fixture { fixture, max_degree } => {
                let ideal = self.fixtures.get(fixture).ok_or_else(|| format!("unknown fixture '{fixture}'"))?;
                match max_degree {
                    None => Ok(ideal.clone()),
                    Some(d) => {
                        let gens = ideal.generators().iter().filter(|g| g.degree().is_some_and(|e| e <= *d)).cloned().collect();
                        Ideal::new(ideal.ring(), gens).map_err(err)
                    }
                }
            }
            IdealRef::Gens { gens, ring } => {
                let ring = self.ring(ring.as_deref())?;
                Ideal::new(&ring, parse_generators(&ring, gens).map_err(err)?).map_err(err)
            }
            IdealRef::Minors { minors, size, ring } => {
                let ring = self.ring(ring.as_deref())?;
                minors_ideal(&ring, &parse_matrix(&ring, minors).map_err(err)?, *size).map_err(err)
            }
        }
    }

    fn family(&self, name: &str, a: i64, b: i64) -> R<(FamilyIdeal<F>, Ideal<F>)> {
        let fam = self.scn.families.get(name).ok_or_else(|| format!("unknown family '{name}'"))?;
        let values = [("a", a), ("b", b)];
        let ring_t = self.ring_with(fam.ring.as_deref(), RationalFunctions::new(self.field.clone()))?;
        let gens = parse_generators(&ring_t, &instantiate(&fam.gens, &values)).map_err(err)?;
        let family = FamilyIdeal::new(&ring_t, gens).map_err(err)?;
        let base = family.base_ring().clone();
        let limit = Ideal::new(&base, parse_generators(&base, &instantiate(&fam.limit, &values)).map_err(err)?).map_err(err)?;
        Ok((family, limit))
    }

    fn rng(&self, check: &Check) -> ChaCha8Rng {
        rng_for(self.seed, &check.id)
    }

    fn sample_seed(&self, check: &Check, i: usize) -> u64 {
        self.seed ^ stable_hash(&[&check.id, &i.to_string()])
    }

    fn finite(&self) -> bool {
        self.field.elements().is_some()
    }

    fn int(&self, n: i64) -> F::Elem {
        self.field.from_int(n)
    }

    fn execute(&self, check: &Check) -> R<Outcome> {
        let bound = self.bound();
        Ok(match &check.kind {
            CheckKind::LexIdeal { ring, hf, expected } => {
                let ring = self.ring(ring.as_deref())?;
                let hf: HilbertFunction = hf.parse().map_err(err)?;
                let lex = lex_ideal(&hf, &ring, None).map_err(err)?;
                let want = self.resolve(expected)?;
                let (got, exp) = (generator_list(&lex, bound), generator_list(&want, bound));
                Outcome::new(got == exp && lex.equal_up_to(&want, bound), exp.join(", "), got.join(", "))
            }
            CheckKind::HilbertFunction { ideal, expected } => {
                let hf = self.resolve(ideal)?.hilbert_function(bound);
                let want: HilbertFunction = expected.parse().map_err(err)?;
                Outcome::new(hf_matches(&want, &hf.values), expected.clone(), join_values(&hf.values))
            }
            CheckKind::GeneratorDegrees { ideal, expected } => {
                let i = self.resolve(ideal)?;
                let degs: Vec<usize> = i.minimal_generators(bound).iter().filter_map(|g| g.degree()).collect();
                Outcome::new(&degs == expected, join_values(expected), join_values(&degs))
            }
            CheckKind::InitialIdeal { ideal, expected } => {
                let init = self.resolve(ideal)?.initial_ideal(bound);
                let want = self.resolve(expected)?;
                Outcome::new(init.equal_up_to(&want, bound), expected.describe(), format!("({})", generator_list(&init, bound).join(", ")))
            }
            CheckKind::Saturation { ideal, expected } => {
                let sat = self.resolve(ideal)?.saturate(bound).map_err(err)?;
                let want = self.resolve(expected)?;
                Outcome::new(sat.equal_up_to(&want, bound), expected.describe(), format!("({})", generator_list(&sat, bound).join(", ")))
            }
            CheckKind::Saturated { ideal, expected } => {
                let s = self.resolve(ideal)?.is_saturated(bound);
                Outcome::new(s == *expected, format!("saturated: {expected}"), format!("saturated: {s}"))
            }
            CheckKind::HVector { ideal, expected } => {
                let hv = h_vector(&self.resolve(ideal)?.hilbert_function(bound)).map_err(err)?;
                Outcome::new(&hv.0 == expected, format!("{expected:?}"), format!("{:?}", hv.0))
            }
            CheckKind::Stratum { ideal, expected } => {
                let hv = classify_stratum_3points(&self.resolve(ideal)?, bound)?;
                Outcome::new(&hv.0 == expected, format!("{expected:?}"), format!("{:?}", hv.0))
            }
            CheckKind::Substitution { ideal, matrix, expected } => {
                let i = self.resolve(ideal)?;
                let m: Vec<Vec<F::Elem>> = matrix.iter().map(|row| row.iter().map(|&c| self.int(c)).collect()).collect();
                let moved = i.apply_linear_substitution(&m).map_err(err)?;
                let want = self.resolve(expected)?;
                let before = i.equal_up_to(&want, bound);
                let after = moved.equal_up_to(&want, bound);
                Outcome::new(
                    after,
                    format!("image equals {}", expected.describe()),
                    format!("image equal: {after}; equal before substitution: {before}"),
                )
            }
            CheckKind::VanishingIdeal { ring, points, expected, hf } => {
                let ring = self.ring(ring.as_deref())?;
                let pts: Vec<Vec<F::Elem>> = points.iter().map(|p| p.iter().map(|&c| self.int(c)).collect()).collect();
                let v = vanishing_ideal(&ring, &pts, bound).map_err(err)?;
                let mut ok = true;
                let mut exp = Vec::new();
                if let Some(e) = expected {
                    ok &= v.equal_up_to(&self.resolve(e)?, bound);
                    exp.push(e.describe());
                }
                let values = v.hilbert_function(bound).values;
                if let Some(h) = hf {
                    ok &= hf_matches(&h.parse().map_err(err)?, &values);
                    exp.push(format!("Hilbert function {h}"));
                }
                Outcome::new(ok, exp.join("; "), format!("({}); Hilbert function {}", generator_list(&v, bound).join(", "), join_values(&values)))
            }
            CheckKind::FlatLimit { family, params } => {
                let mut bad = Vec::new();
                for &[a, b] in params {
                    let (fam, want) = self.family(family, a, b)?;
                    let lim = fam.flat_limit(bound).map_err(err)?;
                    if !lim.equal_up_to(&want, bound) {
                        bad.push(format!("({a},{b}): ({})", generator_list(&lim, bound).join(", ")));
                    }
                }
                let exp = format!("flat limit equals the displayed limit for {} parameter pairs", params.len());
                Outcome::new(bad.is_empty(), exp, if bad.is_empty() { "all agree".into() } else { bad.join("; ") })
            }
            CheckKind::FiberHilbertFunction { family, params, t, expected, quadrics } => {
                let want: HilbertFunction = expected.parse().map_err(err)?;
                let want_q: Option<HilbertFunction> = quadrics.as_deref().map(str::parse).transpose().map_err(err)?;
                let mut bad = Vec::new();
                for &[a, b] in params {
                    let (fam, _) = self.family(family, a, b)?;
                    for &t0 in t {
                        let fiber = fam.specialize(&self.int(t0));
                        let hf = fiber.hilbert_function(bound).values;
                        if !hf_matches(&want, &hf) {
                            bad.push(format!("({a},{b}) t={t0}: {}", join_values(&hf)));
                        }
                        if let Some(wq) = &want_q {
                            let q = Ideal::new(fiber.ring(), fiber.component_basis(2)).map_err(err)?;
                            let hq = q.hilbert_function(bound).values;
                            if !hf_matches(wq, &hq) {
                                bad.push(format!("({a},{b}) t={t0} quadrics: {}", join_values(&hq)));
                            }
                        }
                    }
                }
                let mut exp = format!("every fiber has Hilbert function {expected}");
                if let Some(q) = quadrics {
                    exp.push_str(&format!(", its quadrics {q}"));
                }
                let n = params.len() * t.len();
                Outcome::new(bad.is_empty(), exp, if bad.is_empty() { format!("{n} fibers agree") } else { bad.join("; ") })
            }
            CheckKind::NaiveSpecialization { family, params, degree, naive, limit } => {
                let (fam, _) = self.family(family, params[0], params[1])?;
                let n0 = fam.specialize(&self.field.zero()).dim_component(*degree);
                let l0 = fam.flat_limit(bound).map_err(err)?.dim_component(*degree);
                Outcome::new(
                    n0 == *naive && l0 == *limit,
                    format!("dim I(0)_{degree} = {naive}, flat limit {limit}"),
                    format!("dim I(0)_{degree} = {n0}, flat limit {l0}"),
                )
            }
            CheckKind::FiberSaturation { family, params, t, expected, hf } => {
                let want_hf: HilbertFunction = hf.parse().map_err(err)?;
                let mut bad = Vec::new();
                for &[a, b] in params {
                    let (fam, _) = self.family(family, a, b)?;
                    for &t0 in t {
                        let sat = fam.specialize(&self.int(t0)).saturate(bound).map_err(err)?;
                        let want = self.resolve(&expected.instantiate(&[("a", a), ("b", b), ("t", t0)]))?;
                        let values = sat.hilbert_function(bound).values;
                        if !sat.equal_up_to(&want, bound) || !hf_matches(&want_hf, &values) {
                            bad.push(format!("({a},{b}) t={t0}: ({})", generator_list(&sat, bound).join(", ")));
                        }
                    }
                }
                Outcome::new(
                    bad.is_empty(),
                    format!("saturation equals {} with Hilbert function {hf}", expected.describe()),
                    if bad.is_empty() { format!("{} fibers agree", params.len() * t.len()) } else { bad.join("; ") },
                )
            }
            CheckKind::Tangent { ideal, at_least, pinned } => {
                let d = tangent_dimension(&self.resolve(ideal)?, None).map_err(err)?.dimension;
                let exp = match pinned {
                    Some(p) => format!(">= {at_least}, pinned {p}"),
                    None => format!(">= {at_least}"),
                };
                Outcome::new(d >= *at_least && pinned.is_none_or(|p| p == d), exp, d.to_string())
            }
            CheckKind::SampledTangent { locus, seeds, at_least } => {
                let mut dims = Vec::new();
                for i in 0..*seeds {
                    let s = sample_locus(*locus, self.sample_seed(check, i), &self.field).map_err(err)?;
                    dims.push(tangent_dimension(&s.ideal, None).map_err(err)?.dimension);
                }
                Outcome::new(
                    *seeds > 0 && dims.iter().all(|d| d >= at_least),
                    format!(">= {at_least} at {seeds} sampled points of {locus}"),
                    join_values(&dims),
                )
            }
            CheckKind::SampledLocus { locus, seeds } => self.sampled_locus(check, *locus, *seeds)?,
            CheckKind::QuadricRank { ring, elem, expected } => {
                let ring = self.ring(ring.as_deref())?;
                let r = quadric_rank(&parse_homogeneous(&ring, elem).map_err(err)?).map_err(err)?;
                Outcome::new(r == *expected, expected.to_string(), r.to_string())
            }
            CheckKind::QuadricFacts { item, trials } => {
                let s = verify_quadric_facts(*item, &self.ring(None)?, *trials, &mut self.rng(check));
                Outcome::from_summary(format!("item {item}: no counterexample in {trials} trials"), &s)
            }
            CheckKind::NoPencilEnvelope { trials } => {
                if !self.finite() {
                    return Ok(Outcome::skip("no counterexample", "pencil enumeration requires a finite field"));
                }
                let s = verify_no_pencil_envelope(&self.ring(None)?, *trials, &mut self.rng(check));
                Outcome::from_summary(format!("annihilator nonzero whenever no rank-2 pencil, {trials} trials"), &s)
            }
            CheckKind::OpenCondition { trials } => {
                let s = verify_open_condition(&self.ring(None)?, *trials, &mut self.rng(check));
                Outcome::from_summary(format!("U^2 = 0 iff U in some wedge^2 W, {trials} trials"), &s)
            }
            CheckKind::OpenConditionFixture { gens, square_zero, in_wedge_w } => {
                let ring = self.ring(None)?;
                let u = QuadricSpace::new(&ring, parse_generators(&ring, gens).map_err(err)?).map_err(err)?;
                let (sq, w) = (u_squared_zero(&u), annihilator_space(&u).len() >= 2);
                Outcome::new(
                    sq == *square_zero && w == *in_wedge_w,
                    format!("U^2 = 0: {square_zero}; U in some wedge^2 W: {in_wedge_w}"),
                    format!("U^2 = 0: {sq}; U in some wedge^2 W: {w}; dim(U ^ E_1) = {}", u.wedge_linear_dim()),
                )
            }
            CheckKind::PencilCount { gens, expected } => {
                if !self.finite() {
                    return Ok(Outcome::skip(expected.to_string(), "pencil enumeration requires a finite field"));
                }
                let ring = self.ring(None)?;
                let u = QuadricSpace::new(&ring, parse_generators(&ring, gens).map_err(err)?).map_err(err)?;
                let n = find_rank2_pencils(&u).map_err(err)?.len();
                Outcome::new(n == *expected, format!("{expected} rank-2 pencils"), format!("{n} rank-2 pencils"))
            }
            CheckKind::PencilUniqueness { trials } => {
                if !self.finite() {
                    return Ok(Outcome::skip("exactly one rank-2 pencil", "pencil enumeration requires a finite field"));
                }
                let s = verify_pencil_uniqueness(&self.ring(None)?, *trials, &mut self.rng(check));
                Outcome::from_summary(format!("exactly one rank-2 pencil in each of {trials} samples"), &s)
            }
            CheckKind::PencilUniquenessExact { trials } => {
                let s = verify_pencil_uniqueness_exact(&self.ring(None)?, *trials, &mut self.rng(check));
                Outcome::from_summary(format!("the constructed pencil is certified unique in {trials} samples"), &s)
            }
            CheckKind::EnvelopeUniqueness { trials } => {
                let s = verify_envelope_uniqueness(&self.ring(None)?, *trials, &mut self.rng(check));
                Outcome::from_summary(format!("annihilator of dimension exactly 1 in each of {trials} samples"), &s)
            }
            CheckKind::GenericInitialOfPoints { trials, required, expected } => {
                let want = self.resolve(expected)?;
                let (hits, misses) = generic_initial_of_points(&self.ring(None)?, &want, *trials, bound, &mut self.rng(check));
                let mut actual = format!("{hits}/{trials} matched");
                if !misses.is_empty() {
                    actual.push_str(&format!("; misses: {}", misses.join(" | ")));
                }
                Outcome::new(hits >= *required, format!(">= {required}/{trials} initial ideals equal {}", expected.describe()), actual)
            }
            CheckKind::GrowthBounds { max_a, max_d } => {
                let bad = growth_bound_mismatches(*max_a, *max_d);
                Outcome::new(
                    bad.is_empty(),
                    format!("closed forms equal brute force for a <= {max_a}, d <= {max_d}"),
                    if bad.is_empty() { "no mismatch".into() } else { bad.join("; ") },
                )
            }
            CheckKind::LexRoundTrip { ring_kind, trials } => {
                let kind = match ring_kind.as_str() {
                    "S" => RingKind::Polynomial,
                    "E" => RingKind::Exterior,
                    other => return Err(format!("unknown ring kind '{other}'")),
                };
                let bad = lex_round_trip(&self.field, kind, *trials, &mut self.rng(check));
                Outcome::new(
                    bad.is_empty(),
                    format!("{trials} random monomial ideals round-trip"),
                    if bad.is_empty() { "no mismatch".into() } else { bad.join("; ") },
                )
            }
        })
    }

    fn sampled_locus(&self, check: &Check, locus: Locus, seeds: usize) -> R<Outcome> {
        let want = locus.hilbert_function();
        let mut lines = Vec::new();
        let mut ok = seeds > 0;
        for i in 0..seeds {
            let s = sample_locus(locus, self.sample_seed(check, i), &self.field).map_err(err)?;
            let hf = s.ideal.hilbert_function(locus.bound()).values;
            let facts = verify_locus(locus, &s.ideal);
            ok &= hf == want && facts.is_ok();
            let facts = match facts {
                Ok(f) => f.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
                Err(e) => format!("predicate failed: {e}"),
            };
            lines.push(format!("#{i}: {} attempt(s), Hilbert function {}, {facts}", s.attempts, join_values(&hf)));
        }
        Ok(Outcome::new(
            ok,
            format!("{seeds} samples of {locus} with Hilbert function {} and all defining predicates", join_values(&want)),
            lines.join("; "),
        ))
    }
}

impl<F: Field> Runner for Ctx<'_, F> {
    fn run(&self, check: &Check) -> Result<Outcome, String> {
        self.execute(check)
    }

    fn note(&self) -> &str {
        &self.note
    }
}
