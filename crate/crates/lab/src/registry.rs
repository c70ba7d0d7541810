//! The declarative check registry behind `verify-paper`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use fowidth::pebble::PebbleError;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Default,
    Deep,
}

impl Profile {
    /// Largest vertex count of the exhaustive corpora.
    pub fn corpus_n(self) -> usize {
        match self {
            Profile::Quick => 6,
            Profile::Default | Profile::Deep => 7,
        }
    }

    /// Canonical-position budget handed to the pebble solver.
    pub fn pebble_budget(self) -> u64 {
        match self {
            Profile::Quick => 1_000_000,
            Profile::Default => fowidth::pebble::DEFAULT_BUDGET,
            Profile::Deep => 1_000_000_000,
        }
    }

    /// Multiplier on sample counts for statistical checks.
    pub fn sample_scale(self) -> usize {
        match self {
            Profile::Quick | Profile::Default => 1,
            Profile::Deep => 4,
        }
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Default => "default",
            Profile::Deep => "deep",
        })
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "default" => Ok(Profile::Default),
            "deep" => Ok(Profile::Deep),
            _ => Err(format!("unknown profile '{s}' (expected quick, default or deep)")),
        }
    }
}

/// Cost class of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cost {
    Light,
    /// Exhaustive scan over every labeled graph up to the profile's size.
    Corpus,
    /// Pebble games near the solver budget.
    Heavy,
}

#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub seed: u64,
    pub profile: Profile,
}

/// What a check runner reports.
#[derive(Debug, Clone, PartialEq)]
pub enum Run {
    Done { passed: bool, details: Value },
    Skip { reason: String, details: Value },
}

impl Run {
    pub fn new(passed: bool, details: Value) -> Self {
        Run::Done { passed, details }
    }

    pub fn skip(reason: impl Into<String>) -> Self {
        Run::Skip {
            reason: reason.into(),
            details: Value::Null,
        }
    }
}

pub type Runner = fn(&Ctx) -> anyhow::Result<Run>;

pub struct Check {
    pub id: &'static str,
    /// The result the check is about, e.g. "Lemma join".
    pub anchor: &'static str,
    pub cost: Cost,
    /// Whether the outcome depends on `--seed`.
    pub seeded: bool,
    pub run: Runner,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub anchor: String,
    #[serde(flatten)]
    pub status: Status,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Seconds; kept outside `details` so reruns compare equal there.
    pub wall_time: f64,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic with a non-string payload".into())
}

/// Runs one check, turning errors and panics into failures.
pub fn run_check(check: &Check, ctx: &Ctx) -> CheckResult {
    let start = Instant::now();
    let (status, details) = if check.cost == Cost::Corpus && ctx.profile == Profile::Quick {
        (
            Status::Skipped {
                reason: format!(
                    "exhaustive n = {} scan skipped under the quick profile",
                    Profile::Default.corpus_n()
                ),
            },
            Value::Null,
        )
    } else {
        match catch_unwind(AssertUnwindSafe(|| (check.run)(ctx))) {
            Ok(Ok(Run::Done { passed, details })) => {
                (if passed { Status::Pass } else { Status::Fail }, details)
            }
            Ok(Ok(Run::Skip { reason, details })) => (Status::Skipped { reason }, details),
            Ok(Err(e)) if matches!(e.downcast_ref(), Some(PebbleError::Budget { .. })) => (
                Status::Skipped {
                    reason: format!("{e} under the {} profile", ctx.profile),
                },
                Value::Null,
            ),
            Ok(Err(e)) => (Status::Fail, serde_json::json!({ "error": format!("{e:#}") })),
            Err(p) => (Status::Fail, serde_json::json!({ "panic": panic_message(p) })),
        }
    };
    CheckResult {
        check_id: check.id.to_string(),
        anchor: check.anchor.to_string(),
        status,
        details,
        seed: check.seeded.then_some(ctx.seed),
        wall_time: start.elapsed().as_secs_f64(),
    }
}

/// Whether `id` is selected by `filter`.
///
/// * `prefix*` selects ids starting with `prefix`;
/// * a filter containing `.` selects that exact id;
/// * anything else selects ids whose group (the part before `.`) equals the
///   filter or has it as one of its `-`-separated words, so `paw` selects
///   `thm-paw.*` but not `lem-olariu.paw-free`.
pub fn matches(id: &str, filter: Option<&str>) -> bool {
    let Some(f) = filter else { return true };
    if let Some(prefix) = f.strip_suffix('*') {
        return id.starts_with(prefix);
    }
    if f.contains('.') {
        return id == f;
    }
    let group = id.split('.').next().unwrap_or(id);
    group == f || group.split('-').any(|w| w == f)
}

/// Runs the selected checks concurrently; results are ordered by id.
pub fn run_all(checks: &[Check], filter: Option<&str>, ctx: &Ctx) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = checks
        .par_iter()
        .filter(|c| matches(c.id, filter))
        .map(|c| run_check(c, ctx))
        .collect();
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}
