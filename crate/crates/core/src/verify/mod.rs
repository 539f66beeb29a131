//! The claim registry and the suite runner.
//!
//! Each claim is checked at one of four scopes: exhaustively over small
//! finite instances, over seeded random instances, by replaying a witness
//! from the symbolic catalog, or by comparing a closed-form decider with
//! brute force. Finite objects always satisfy the minimal conditions and
//! are always stable, so many transfer statements hold vacuously on them;
//! those claims still run every auxiliary substructure through the engine,
//! check the structural facts their arguments rely on, and are reported as
//! vacuous passes.

mod claims;
mod corpus;
mod probe;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use corpus::Context;
pub use probe::{probe_open_problem, ProbeReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    FiniteExhaustive,
    FiniteSampled,
    SymbolicWitness,
    DerivedDecider,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    MustHold,
    CounterexampleExpected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Every instance satisfied the hypothesis and conclusion trivially.
    VacuousPass,
    WitnessVerified,
    Fail,
    WitnessFailed,
    Error,
}

impl Status {
    pub fn ok(self) -> bool {
        matches!(
            self,
            Status::Pass | Status::VacuousPass | Status::WitnessVerified
        )
    }
}

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub scope: Scope,
    pub expected: Expectation,
    check: fn(&Context) -> Result<Outcome>,
}

/// Maximum number of violations listed per claim; the rest are counted.
pub const MAX_LISTED: usize = 10;

/// What a checker found.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub instances: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    /// Decider-backed checks on infinite objects.
    pub symbolic: u64,
    /// The statement holds trivially on every finite instance examined.
    pub vacuous: bool,
}

impl Outcome {
    pub fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < MAX_LISTED {
                self.violations.push(what());
            }
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn witness(&mut self, s: impl Into<String>) {
        self.witnesses.push(s.into());
    }

    pub fn merge(&mut self, other: Outcome) {
        self.instances += other.instances;
        self.symbolic += other.symbolic;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_LISTED {
                self.violations.push(v);
            }
        }
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
        self.vacuous |= other.vacuous;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest order of the exhaustively enumerated semigroups used by
    /// semigroup-level claims.
    pub max_order: usize,
    pub depth: usize,
    pub samples: usize,
    /// Exhaustive biacts: `|S|,|T| <= exhaustive_order`, carrier
    /// `<= exhaustive_size`.
    pub exhaustive_order: usize,
    pub exhaustive_size: usize,
    pub random_biacts: usize,
    pub random_order: usize,
    pub random_size: usize,
    /// Random transformation semigroups added to the semigroup corpus.
    pub random_semigroups: usize,
    pub random_semigroup_max_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            max_order: 3,
            depth: crate::symbolic::DEFAULT_DEPTH,
            samples: crate::symbolic::DEFAULT_SAMPLES,
            exhaustive_order: 2,
            exhaustive_size: 3,
            random_biacts: 1000,
            random_order: 4,
            random_size: 6,
            random_semigroups: 24,
            random_semigroup_max_order: 8,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub summary: String,
    pub scope: Scope,
    pub expected: Expectation,
    pub status: Status,
    pub instances: u64,
    pub symbolic_checks: u64,
    pub vacuous: bool,
    pub violation_count: u64,
    pub violations: Vec<String>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    /// Kept out of the JSON so that reports are byte-identical across runs.
    #[serde(skip)]
    pub wall: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub toolkit_version: String,
    pub config: VerifyConfig,
    pub passed: usize,
    pub failed: usize,
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per claim, with timings.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&format!(
                "{:<14} {:<17} {:>8} instances {:>8.2}s  {}\n",
                c.id,
                format!("{:?}", c.status),
                c.instances,
                c.wall.as_secs_f64(),
                c.summary
            ));
            for v in &c.violations {
                out.push_str(&format!("    violation: {v}\n"));
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

/// Every claim id in the registry, in registry order.
pub fn claim_ids() -> Vec<&'static str> {
    claims::REGISTRY.iter().map(|c| c.id).collect()
}

pub fn registry() -> &'static [Claim] {
    claims::REGISTRY
}

/// Numeric sort key: `"R3.14(2)"` becomes `[3, 14, 2]`.
fn sort_key(id: &str) -> (Vec<u64>, String) {
    let nums = id
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap_or(u64::MAX))
        .collect();
    (nums, id.to_string())
}

/// `"all"` or a comma-separated list of claim ids.
pub fn select(selection: &str) -> Result<Vec<&'static Claim>> {
    if selection.trim() == "all" {
        return Ok(claims::REGISTRY.iter().collect());
    }
    selection
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|id| {
            claims::REGISTRY
                .iter()
                .find(|c| c.id == id)
                .ok_or_else(|| Error::UnknownClaim(id.to_string()))
        })
        .collect()
}

fn run_claim(claim: &Claim, ctx: &Context) -> ClaimRecord {
    let start = Instant::now();
    let result = (claim.check)(ctx);
    let wall = start.elapsed();
    let (status, outcome) = match result {
        Err(e) => (
            Status::Error,
            Outcome {
                violations: vec![e.to_string()],
                violation_count: 1,
                ..Outcome::default()
            },
        ),
        Ok(o) => {
            let status = match (claim.expected, o.violation_count == 0) {
                (Expectation::MustHold, false) => Status::Fail,
                (Expectation::MustHold, true) if o.vacuous && o.symbolic == 0 => {
                    Status::VacuousPass
                }
                (Expectation::MustHold, true) => Status::Pass,
                (Expectation::CounterexampleExpected, true) => Status::WitnessVerified,
                (Expectation::CounterexampleExpected, false) => Status::WitnessFailed,
            };
            (status, o)
        }
    };
    ClaimRecord {
        id: claim.id.into(),
        summary: claim.summary.into(),
        scope: claim.scope,
        expected: claim.expected,
        status,
        instances: outcome.instances,
        symbolic_checks: outcome.symbolic,
        vacuous: outcome.vacuous,
        violation_count: outcome.violation_count,
        violations: outcome.violations,
        witnesses: outcome.witnesses,
        notes: outcome.notes,
        wall,
    }
}

/// Runs the selected claims (in parallel) and collects a report sorted by
/// claim id.
pub fn run_suite(selection: &str, config: &VerifyConfig) -> Result<VerificationReport> {
    let chosen = select(selection)?;
    let ctx = Context::new(config.clone());
    let mut claims: Vec<ClaimRecord> = chosen.par_iter().map(|c| run_claim(c, &ctx)).collect();
    claims.sort_by_key(|c| sort_key(&c.id));
    let passed = claims.iter().filter(|c| c.status.ok()).count();
    Ok(VerificationReport {
        toolkit_version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        passed,
        failed: claims.len() - passed,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every statement the harness is expected to cover.
    const MANIFEST: [&str; 41] = [
        "L3.3",
        "P3.4",
        "P3.5",
        "P3.6",
        "L3.7",
        "C3.8",
        "C3.9",
        "L3.10",
        "P3.11",
        "C3.12",
        "C3.13",
        "R3.14(2)",
        "R3.14(3)",
        "P4.1",
        "L4.2",
        "C4.3",
        "P4.4",
        "P4.5",
        "T4.6",
        "C4.7",
        "Ex4.8",
        "L4.10",
        "C4.11",
        "T4.13",
        "C4.14",
        "P4.15",
        "T4.16",
        "Con4.17/P4.18",
        "C4.19",
        "S5.0",
        "P5.1",
        "P5.2",
        "P5.3",
        "T5.4",
        "L5.5",
        "C5.6",
        "T5.7",
        "L5.8",
        "P5.9",
        "Con5.10/P5.11",
        "C5.12",
    ];

    #[test]
    fn registry_matches_manifest() {
        let mut ids = claim_ids();
        let mut want = MANIFEST.to_vec();
        ids.sort();
        want.sort();
        assert_eq!(ids, want);
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = claim_ids();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), MANIFEST.len());
    }

    #[test]
    fn unknown_claim_rejected() {
        assert!(matches!(select("P9.9"), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn sort_key_is_numeric() {
        let mut ids = vec!["C3.12", "C3.8", "R3.14(3)", "R3.14(2)", "L3.10"];
        ids.sort_by_key(|s| sort_key(s));
        assert_eq!(ids, ["C3.8", "L3.10", "C3.12", "R3.14(2)", "R3.14(3)"]);
    }
}
