use std::fmt::Display;

use lexpoint_core::combinatorics::{default_lex_bound, lex_ideal};
use lexpoint_core::degeneration::FamilyIdeal;
use lexpoint_core::exterior::quadric_rank;
use lexpoint_core::field::{Field, FieldSpec, PrimeField, RationalFunctions, Rationals};
use lexpoint_core::ideal::{minors_ideal, HilbertFunction, Ideal};
use lexpoint_core::parse::{parse_generators, parse_homogeneous, parse_matrix, IdealFile};
use lexpoint_core::ring::{Ring, RingKind, RingSpec};
use lexpoint_core::tangent::tangent_dimension;
use lexpoint_core::with_field;
use lexpoint_scenarios::runner::{parse_scenario, run, run_scenario, RunOptions, ScenarioError};
use lexpoint_scenarios::samplers::{sample_locus, Locus};
use serde_json::{json, Value};

use crate::{Cli, Command, IdealInput, VerifyArgs};

pub struct Output {
    pub text: String,
    pub json: Value,
    pub checks_failed: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            checks_failed: false,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => f.write_str(m),
        }
    }
}

fn usage<E: Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn compute<E: Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

type Result<T> = std::result::Result<T, CliError>;

enum Source {
    Text(String),
    File(IdealFile),
}

/// Validated ideal input: ring spec, generator source and bound.
struct Input {
    spec: RingSpec,
    source: Source,
    bound: Option<usize>,
}

fn parse_ring(text: &str) -> Result<RingSpec> {
    text.parse().map_err(usage)
}

fn read_input(inp: &IdealInput) -> Result<Input> {
    let ring = inp.ring.as_deref().map(parse_ring).transpose()?;
    let (spec, source) = match (&inp.gens, &inp.ideal) {
        (Some(g), None) => {
            let spec = ring.ok_or_else(|| usage("--gens needs --ring"))?;
            (spec, Source::Text(g.clone()))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let file = IdealFile::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if let Some(r) = ring {
                if r != file.ring {
                    return Err(usage(format!("--ring {r} disagrees with the file's ring {}", file.ring)));
                }
            }
            (file.ring.clone(), Source::File(file))
        }
        _ => return Err(usage("exactly one of --gens or --ideal is required")),
    };
    Ok(Input {
        spec,
        source,
        bound: inp.degree_bound,
    })
}

fn build_ideal<F: Field>(input: &Input, k: F) -> Result<Ideal<F>> {
    let ring = input.spec.build(k).map_err(usage)?;
    let gens = match &input.source {
        Source::Text(t) => parse_generators(&ring, t),
        Source::File(f) => f.generators(&ring),
    }
    .map_err(usage)?;
    Ideal::new(&ring, gens).map_err(usage)
}

fn default_bound<F: Field>(ring: &Ring<F>, max_gen_degree: usize) -> usize {
    match ring.kind() {
        RingKind::Exterior => ring.n(),
        RingKind::Polynomial => 8.max(2 * max_gen_degree),
    }
}

fn bound_for<F: Field>(input: &Input, ideal: &Ideal<F>) -> usize {
    input
        .bound
        .unwrap_or_else(|| default_bound(ideal.ring(), ideal.max_generator_degree()))
}

fn gens_output<F: Field>(ideal: &Ideal<F>, bound: usize, extra: Value) -> Output {
    let gens: Vec<String> = ideal.minimal_generators(bound).iter().map(|g| g.to_string()).collect();
    let mut json = json!({ "degree_bound": bound, "generators": gens });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    Output::new(format!("{}\n", gens.join("; ")), json)
}

pub fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Hf(inp) => {
            let input = read_input(inp)?;
            with_field!(&input.spec.field, |k| hf(&input, k))
        }
        Command::LexIdeal { ring, hf, degree_bound } => {
            let spec = parse_ring(ring)?;
            let hf: HilbertFunction = hf.parse().map_err(usage)?;
            with_field!(&spec.field, |k| lex(&spec, &hf, *degree_bound, k))
        }
        Command::Initial(inp) => {
            let input = read_input(inp)?;
            with_field!(&input.spec.field, |k| initial(&input, k))
        }
        Command::Saturate(inp) => {
            let input = read_input(inp)?;
            with_field!(&input.spec.field, |k| saturate(&input, k))
        }
        Command::Minors { ring, matrix, size, degree_bound } => {
            let spec = parse_ring(ring)?;
            with_field!(&spec.field, |k| minors(&spec, matrix, *size, *degree_bound, k))
        }
        Command::Tangent { input, basis } => {
            let input = read_input(input)?;
            with_field!(&input.spec.field, |k| tangent(&input, *basis, k))
        }
        Command::FlatLimit(inp) => {
            let input = read_input(inp)?;
            let base = match &input.spec.field {
                FieldSpec::Functions(b) => b.as_ref().clone(),
                other => other.clone(),
            };
            match base {
                FieldSpec::Rationals => flat_limit(&input, Rationals),
                FieldSpec::Prime(p) => flat_limit(&input, PrimeField::new(p).map_err(usage)?),
                FieldSpec::Functions(_) => Err(usage("nested function fields are not supported")),
            }
        }
        Command::Rank { ring, elem } => {
            let spec = parse_ring(ring)?;
            if spec.kind != RingKind::Exterior {
                return Err(usage("rank needs an exterior ring (E:n@...)"));
            }
            with_field!(&spec.field, |k| rank(&spec, elem, k))
        }
        Command::Sample { locus, seed, field } => {
            let locus: Locus = locus.parse().map_err(usage)?;
            let spec: FieldSpec = field.parse().map_err(usage)?;
            match spec {
                FieldSpec::Rationals => sample(locus, *seed, Rationals),
                FieldSpec::Prime(p) => sample(locus, *seed, PrimeField::new(p).map_err(usage)?),
                FieldSpec::Functions(_) => Err(usage("sampling needs QQ or GF(p)")),
            }
        }
        Command::Verify(args) => verify(args),
    }
}

fn hf<F: Field>(input: &Input, k: F) -> Result<Output> {
    let ideal = build_ideal(input, k)?;
    let bound = bound_for(input, &ideal);
    let values = ideal.hilbert_function(bound).values;
    let text: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    Ok(Output::new(
        format!("{}\n", text.join(",")),
        json!({ "ring": input.spec.to_string(), "degree_bound": bound, "hilbert_function": values }),
    ))
}

fn lex<F: Field>(spec: &RingSpec, hf: &HilbertFunction, bound: Option<usize>, k: F) -> Result<Output> {
    let ring = spec.build(k).map_err(usage)?;
    let ideal = lex_ideal(hf, &ring, bound).map_err(compute)?;
    let bound = bound.unwrap_or_else(|| default_lex_bound(hf));
    Ok(gens_output(&ideal, bound, json!({ "ring": spec.to_string(), "hilbert_function": hf.to_string() })))
}

fn initial<F: Field>(input: &Input, k: F) -> Result<Output> {
    let ideal = build_ideal(input, k)?;
    let bound = bound_for(input, &ideal);
    Ok(gens_output(&ideal.initial_ideal(bound), bound, json!({ "ring": input.spec.to_string() })))
}

fn saturate<F: Field>(input: &Input, k: F) -> Result<Output> {
    let ideal = build_ideal(input, k)?;
    let bound = bound_for(input, &ideal);
    let sat = ideal.saturate(bound).map_err(compute)?;
    Ok(gens_output(&sat, bound, json!({ "ring": input.spec.to_string() })))
}

fn minors<F: Field>(spec: &RingSpec, matrix: &str, size: usize, bound: Option<usize>, k: F) -> Result<Output> {
    let ring = spec.build(k).map_err(usage)?;
    let m = parse_matrix(&ring, matrix).map_err(usage)?;
    let ideal = minors_ideal(&ring, &m, size).map_err(usage)?;
    let bound = bound.unwrap_or_else(|| default_bound(&ring, ideal.max_generator_degree()));
    Ok(gens_output(&ideal, bound, json!({ "ring": spec.to_string(), "size": size })))
}

fn tangent<F: Field>(input: &Input, with_basis: bool, k: F) -> Result<Output> {
    let ideal = build_ideal(input, k)?;
    let report = tangent_dimension(&ideal, input.bound).map_err(compute)?;
    let gens: Vec<String> = report.generators.iter().map(|g| g.to_string()).collect();
    let basis: Vec<Vec<String>> = report
        .basis
        .iter()
        .map(|images| images.iter().map(|f| f.to_string()).collect())
        .collect();
    let mut text = format!("{}\n", report.dimension);
    if with_basis {
        for (i, images) in basis.iter().enumerate() {
            let maps: Vec<String> = gens.iter().zip(images).map(|(g, f)| format!("{g} -> {f}")).collect();
            text.push_str(&format!("phi{}: {}\n", i + 1, maps.join(", ")));
        }
    }
    let mut json = json!({
        "ring": input.spec.to_string(),
        "dimension": report.dimension,
        "generators": gens,
        "generator_degrees": report.generator_degrees,
        "syzygy_degrees": report.syzygy_degrees,
        "syzygy_bound": report.syzygy_bound,
        "convention": report.convention,
    });
    if with_basis {
        json["basis"] = json!(basis);
    }
    Ok(Output::new(text, json))
}

fn flat_limit<F: Field>(input: &Input, k: F) -> Result<Output> {
    let ring_t = input.spec.build(RationalFunctions::new(k)).map_err(usage)?;
    let gens = match &input.source {
        Source::Text(t) => parse_generators(&ring_t, t),
        Source::File(f) => f.generators(&ring_t),
    }
    .map_err(usage)?;
    let family = FamilyIdeal::new(&ring_t, gens).map_err(usage)?;
    let bound = input
        .bound
        .unwrap_or_else(|| default_bound(&ring_t, family.generic().max_generator_degree()));
    let limit = family.flat_limit(bound).map_err(compute)?;
    let hf = limit.hilbert_function(bound).values;
    Ok(gens_output(&limit, bound, json!({ "ring": input.spec.to_string(), "hilbert_function": hf })))
}

fn rank<F: Field>(spec: &RingSpec, elem: &str, k: F) -> Result<Output> {
    let ring = spec.build(k).map_err(usage)?;
    let q = parse_homogeneous(&ring, elem).map_err(usage)?;
    let r = quadric_rank(&q).map_err(usage)?;
    Ok(Output::new(format!("{r}\n"), json!({ "ring": spec.to_string(), "element": q.to_string(), "rank": r })))
}

fn sample<F: Field>(locus: Locus, seed: u64, k: F) -> Result<Output> {
    let s = sample_locus(locus, seed, &k).map_err(compute)?;
    let gens: Vec<String> = s.ideal.generators().iter().map(|g| g.to_string()).collect();
    let mut text = format!("{locus} over {} (seed {seed}, {} attempt(s))\n{}\n", k.name(), s.attempts, gens.join("; "));
    for (key, v) in &s.facts {
        text.push_str(&format!("{key}: {v}\n"));
    }
    let facts: serde_json::Map<String, Value> = s.facts.iter().map(|(a, b)| (a.clone(), json!(b))).collect();
    Ok(Output::new(
        text,
        json!({ "locus": locus, "field": k.name(), "seed": seed, "attempts": s.attempts, "generators": gens, "facts": facts }),
    ))
}

fn scenario_error(e: ScenarioError) -> CliError {
    match e {
        ScenarioError::Unknown(_) | ScenarioError::Parse { .. } | ScenarioError::Field { .. } => usage(e),
        ScenarioError::Fixture { .. } => compute(e),
    }
}

fn verify(args: &VerifyArgs) -> Result<Output> {
    let field = args
        .field
        .as_deref()
        .map(|f| f.parse::<FieldSpec>().map_err(usage))
        .transpose()?;
    let opts = RunOptions {
        seed: args.seed,
        field,
        timings: args.timings,
    };
    let report = match &args.scenario_file {
        Some(path) => {
            let src = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let scn = parse_scenario(&path.display().to_string(), &src).map_err(scenario_error)?;
            if let Some(name) = &args.scenario {
                if *name != scn.name {
                    return Err(usage(format!("--scenario {name} but the file defines '{}'", scn.name)));
                }
            }
            run(&scn, &opts)
        }
        None => run_scenario(args.scenario.as_deref().expect("clap requires one"), &opts),
    }
    .map_err(scenario_error)?;
    Ok(Output {
        text: report.to_text(),
        json: serde_json::to_value(&report).expect("serializable"),
        checks_failed: !report.pass,
    })
}
