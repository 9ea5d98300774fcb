//! Registry of checkable claims about total dot product graphs and the
//! harness that evaluates them against exhaustive computation.
//!
//! Every claim is checked per instance. A failing instance is either a
//! documented erratum candidate (`refuted-expected`) or a surprise
//! (`refuted-unexpected`); the harness never adjusts a claim to fit.

mod cliques;
mod domination;
mod misc;
mod structure;
mod support;

use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// How observed and expected values relate when a claim holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Equality,
    LowerBound,
    UpperBound,
    StructuralIsomorphism,
    Divisibility,
}

/// Parameters of one claim instance. Absent fields are omitted from JSON;
/// the remaining keys serialize in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
}

impl Instance {
    pub fn ring(r: &str, n: usize) -> Self {
        Instance { r: Some(r.to_string()), n: Some(n), ..Instance::default() }
    }

    pub fn pair(r: &str, n: usize, s: &str, m: usize) -> Self {
        Instance { s: Some(s.to_string()), m: Some(m), ..Instance::ring(r, n) }
    }

    pub fn with_case(mut self, case: &str) -> Self {
        self.case = Some(case.to_string());
        self
    }

    pub fn with_closed(mut self, closed: bool) -> Self {
        self.closed = Some(closed);
        self
    }
}

/// How much work the default instance sets may do.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Budget {
    /// Desk-scale instances, each well under a second.
    #[default]
    Default,
    /// Adds larger sweeps.
    Extended,
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Budget::Default),
            "extended" => Ok(Budget::Extended),
            other => Err(Error::Precondition(format!("unknown budget `{other}` (expected default or extended)"))),
        }
    }
}

impl std::fmt::Display for Budget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Budget::Default => "default",
            Budget::Extended => "extended",
        })
    }
}

/// Result of evaluating one instance, before it becomes a report.
pub(crate) struct Outcome {
    holds: bool,
    observed: Value,
    expected: Value,
    witness: Value,
    note: Option<String>,
    erratum: Option<String>,
}

impl Outcome {
    fn new(holds: bool, observed: impl Serialize, expected: impl Serialize) -> Self {
        Outcome {
            holds,
            observed: to_value(observed),
            expected: to_value(expected),
            witness: Value::Null,
            note: None,
            erratum: None,
        }
    }

    fn witness(mut self, w: impl Serialize) -> Self {
        self.witness = to_value(w);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Marks a failure of this instance as a known erratum candidate.
    fn erratum_if(mut self, known: bool, why: impl Into<String>) -> Self {
        if known {
            self.erratum = Some(why.into());
        }
        self
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

pub(crate) enum Verdict {
    Checked(Outcome),
    Skipped(String),
}

impl From<Outcome> for Verdict {
    fn from(o: Outcome) -> Self {
        Verdict::Checked(o)
    }
}

/// A registered claim.
pub struct Claim {
    pub id: &'static str,
    /// Short description of the statement being checked.
    pub anchor: &'static str,
    pub semantics: Semantics,
    /// Human description of the instance set.
    pub domain: &'static str,
    instances: fn(Budget) -> Vec<Instance>,
    check: fn(&Instance, &Caps) -> Result<Verdict>,
}

impl Claim {
    pub fn instances(&self, budget: Budget) -> Vec<Instance> {
        (self.instances)(budget)
    }
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    RefutedExpected,
    RefutedUnexpected,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::RefutedExpected => "refuted-expected",
            Status::RefutedUnexpected => "refuted-unexpected",
            Status::Skipped => "skipped",
        }
    }
}

/// Outcome of checking one claim instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub claim: String,
    pub params: Instance,
    pub semantics: Semantics,
    pub status: Status,
    /// Why the instance was skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub observed: Value,
    pub expected: Value,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall-clock time; the only nondeterministic field.
    pub runtime_ms: u64,
}

/// Counts per status, in the order printed by report footers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub confirmed: usize,
    #[serde(rename = "refuted-expected")]
    pub refuted_expected: usize,
    #[serde(rename = "refuted-unexpected")]
    pub refuted_unexpected: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Confirmed => s.confirmed += 1,
                Status::RefutedExpected => s.refuted_expected += 1,
                Status::RefutedUnexpected => s.refuted_unexpected += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

/// All claims in registry order.
pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = structure::claims();
        all.extend(domination::claims());
        all.extend(cliques::claims());
        all.extend(misc::claims());
        all
    })
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Claims whose id matches the glob `filter`, in registry order.
pub fn select(filter: &str) -> Result<Vec<&'static Claim>> {
    let pattern = glob::Pattern::new(filter)
        .map_err(|e| Error::Precondition(format!("bad claim filter `{filter}`: {}", e.msg)))?;
    let chosen: Vec<_> = registry().iter().filter(|c| pattern.matches(c.id)).collect();
    if chosen.is_empty() {
        return Err(Error::EmptyFilter(filter.to_string()));
    }
    Ok(chosen)
}

/// Checks one instance of claim `id`.
pub fn verify(id: &str, params: &Instance, caps: &Caps) -> Result<CheckReport> {
    evaluate(find_claim(id)?, params, caps)
}

fn evaluate(claim: &Claim, params: &Instance, caps: &Caps) -> Result<CheckReport> {
    let start = Instant::now();
    let verdict = match (claim.check)(params, caps) {
        Ok(v) => v,
        Err(Error::CapExceeded { what, size, cap }) => Verdict::Skipped(format!("cap: {what} of size {size} exceeds {cap}")),
        Err(e) => return Err(e),
    };
    let runtime_ms = start.elapsed().as_millis() as u64;
    let mut report = CheckReport {
        claim: claim.id.to_string(),
        params: params.clone(),
        semantics: claim.semantics,
        status: Status::Skipped,
        reason: None,
        observed: Value::Null,
        expected: Value::Null,
        witness: Value::Null,
        note: None,
        runtime_ms,
    };
    match verdict {
        Verdict::Skipped(reason) => report.reason = Some(reason),
        Verdict::Checked(o) => {
            report.status = match (o.holds, &o.erratum) {
                (true, _) => Status::Confirmed,
                (false, Some(_)) => Status::RefutedExpected,
                (false, None) => Status::RefutedUnexpected,
            };
            report.observed = o.observed;
            report.expected = o.expected;
            report.witness = o.witness;
            report.note = match (o.holds, o.erratum, o.note) {
                (false, Some(e), Some(n)) => Some(format!("erratum candidate: {e}; {n}")),
                (false, Some(e), None) => Some(format!("erratum candidate: {e}")),
                (_, _, n) => n,
            };
        }
    }
    Ok(report)
}

/// Runs every instance of every claim matching `filter`. Instances run in
/// parallel; reports come back in registry order.
pub fn run_all(filter: &str, budget: Budget, caps: &Caps) -> Result<Vec<CheckReport>> {
    let jobs: Vec<(&Claim, Instance)> =
        select(filter)?.into_iter().flat_map(|c| c.instances(budget).into_iter().map(move |i| (c, i))).collect();
    jobs.par_iter().map(|(c, i)| evaluate(c, i, caps)).collect()
}
