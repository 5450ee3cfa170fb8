use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Echoed verbatim from the scenario data.
    pub provenance: String,
    /// Wall-clock milliseconds; `null` unless timings were requested, so
    /// that default reports are reproducible byte for byte.
    pub ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scenario: String,
    pub seed: u64,
    pub field: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerificationReport {
    /// Sorts checks by id and derives the overall status: no failures.
    /// Skipped checks are listed with their reason and do not fail the run.
    pub fn new(scenario: &str, seed: u64, field: String, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = checks.iter().all(|c| c.status != Status::Fail);
        Self {
            scenario: scenario.to_string(),
            seed,
            field,
            checks,
            pass,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{tag} {} [{}]", c.id, c.provenance));
            if let Some(ms) = c.ms {
                out.push_str(&format!(" {ms} ms"));
            }
            out.push('\n');
            if c.status != Status::Pass {
                out.push_str(&format!("     expected: {}\n     actual:   {}\n", c.expected, c.actual));
            }
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} skipped (seed {}, field {})\n",
            self.scenario,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
            self.seed,
            self.field
        ));
        out
    }
}
