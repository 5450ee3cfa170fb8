//! Scenario files: fixtures, families and a list of typed checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::samplers::Locus;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub description: String,
    /// Default ring for fixtures and checks, without field: `S:3`, `E:5`.
    pub ring: String,
    /// Degree bound used wherever a check does not give its own.
    pub bound: usize,
    /// Default field, overridable from the command line.
    pub field: String,
    #[serde(default)]
    pub fixtures: BTreeMap<String, Fixture>,
    #[serde(default)]
    pub families: BTreeMap<String, Family>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    #[serde(default)]
    pub ring: Option<String>,
    pub gens: String,
    /// Declared Hilbert function, verified before any check runs.
    pub hf: String,
}

/// A one-parameter family over `k(t)`. Both templates may use the integer
/// placeholders `{a}` and `{b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Family {
    #[serde(default)]
    pub ring: Option<String>,
    pub gens: String,
    pub limit: String,
}

/// How a check names an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum IdealRef {
    Fixture {
        fixture: String,
        /// Keep only generators of degree at most this.
        #[serde(default)]
        max_degree: Option<usize>,
    },
    Gens {
        gens: String,
        #[serde(default)]
        ring: Option<String>,
    },
    Minors {
        minors: String,
        size: usize,
        #[serde(default)]
        ring: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub provenance: String,
    /// Field for this check regardless of the scenario default, for claims
    /// tied to a particular field.
    #[serde(default)]
    pub field: Option<String>,
    #[serde(flatten)]
    pub kind: CheckKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckKind {
    LexIdeal {
        #[serde(default)]
        ring: Option<String>,
        hf: String,
        expected: IdealRef,
    },
    HilbertFunction {
        ideal: IdealRef,
        expected: String,
    },
    GeneratorDegrees {
        ideal: IdealRef,
        expected: Vec<usize>,
    },
    InitialIdeal {
        ideal: IdealRef,
        expected: IdealRef,
    },
    Saturation {
        ideal: IdealRef,
        expected: IdealRef,
    },
    Saturated {
        ideal: IdealRef,
        expected: bool,
    },
    /// h-vector of the ideal itself.
    HVector {
        ideal: IdealRef,
        expected: Vec<i64>,
    },
    /// h-vector of the saturation of a length-3 scheme in the plane.
    Stratum {
        ideal: IdealRef,
        expected: Vec<i64>,
    },
    Substitution {
        ideal: IdealRef,
        matrix: Vec<Vec<i64>>,
        expected: IdealRef,
    },
    VanishingIdeal {
        #[serde(default)]
        ring: Option<String>,
        points: Vec<Vec<i64>>,
        #[serde(default)]
        expected: Option<IdealRef>,
        #[serde(default)]
        hf: Option<String>,
    },
    FlatLimit {
        family: String,
        params: Vec<[i64; 2]>,
    },
    FiberHilbertFunction {
        family: String,
        params: Vec<[i64; 2]>,
        t: Vec<i64>,
        expected: String,
        /// Hilbert function of the ideal generated by the fiber's quadrics.
        #[serde(default)]
        quadrics: Option<String>,
    },
    NaiveSpecialization {
        family: String,
        params: [i64; 2],
        degree: usize,
        naive: usize,
        limit: usize,
    },
    /// `expected` may use `{a}`, `{b}` and `{t}`.
    FiberSaturation {
        family: String,
        params: Vec<[i64; 2]>,
        t: Vec<i64>,
        expected: IdealRef,
        hf: String,
    },
    Tangent {
        ideal: IdealRef,
        at_least: usize,
        #[serde(default)]
        pinned: Option<usize>,
    },
    SampledTangent {
        locus: Locus,
        seeds: usize,
        at_least: usize,
    },
    SampledLocus {
        locus: Locus,
        seeds: usize,
    },
    QuadricRank {
        #[serde(default)]
        ring: Option<String>,
        elem: String,
        expected: usize,
    },
    QuadricFacts {
        item: u8,
        trials: usize,
    },
    NoPencilEnvelope {
        trials: usize,
    },
    OpenCondition {
        trials: usize,
    },
    OpenConditionFixture {
        gens: String,
        square_zero: bool,
        in_wedge_w: bool,
    },
    PencilCount {
        gens: String,
        expected: usize,
    },
    PencilUniqueness {
        trials: usize,
    },
    PencilUniquenessExact {
        trials: usize,
    },
    EnvelopeUniqueness {
        trials: usize,
    },
    GenericInitialOfPoints {
        trials: usize,
        required: usize,
        expected: IdealRef,
    },
    GrowthBounds {
        max_a: usize,
        max_d: usize,
    },
    LexRoundTrip {
        /// `S` or `E`.
        ring_kind: String,
        trials: usize,
    },
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Replaces `{name}` placeholders with parenthesized integers.
pub fn instantiate(template: &str, values: &[(&str, i64)]) -> String {
    let mut out = template.to_string();
    for (name, v) in values {
        out = out.replace(&format!("{{{name}}}"), &format!("({v})"));
    }
    out
}

impl IdealRef {
    pub fn instantiate(&self, values: &[(&str, i64)]) -> Self {
        match self {
            IdealRef::Gens { gens, ring } => IdealRef::Gens {
                gens: instantiate(gens, values),
                ring: ring.clone(),
            },
            IdealRef::Minors { minors, size, ring } => IdealRef::Minors {
                minors: instantiate(minors, values),
                size: *size,
                ring: ring.clone(),
            },
            other => other.clone(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            IdealRef::Fixture { fixture, max_degree: None } => fixture.clone(),
            IdealRef::Fixture {
                fixture,
                max_degree: Some(d),
            } => format!("degree <= {d} generators of {fixture}"),
            IdealRef::Gens { gens, .. } => format!("({})", gens.replace(';', ",")),
            IdealRef::Minors { minors, size, .. } => format!("{size}x{size} minors of [{minors}]"),
        }
    }
}
