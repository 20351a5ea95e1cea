//! Job specifications, identifiers, and the job lifecycle state machine.
//!
//! The happy path walks `WAITING → ASSIGNED → RUNNING → SAVING → DONE`; any
//! non-terminal state may fall off into one of the error states or `EXPIRED`.
//! Terminal states admit no outgoing transition.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lfn::Lfn;

/// Identifier assigned to a job by the central service; strictly increasing
/// within one central-service lifetime, never reused.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct JobId(pub u64);

impl fmt::Display for JobId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A submitted job: a shell script body plus everything needed to stage its
/// inputs and collect its outputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    /// Shell script body, executed by the job wrapper via `sh -c`.
    pub script: String,
    /// Positional arguments passed to the script as `$1..`.
    #[serde(default)]
    pub arguments: Vec<String>,
    /// Logical file names staged into the sandbox before execution.
    #[serde(default)]
    pub input_lfns: Vec<String>,
    /// Glob patterns (relative to the sandbox) selecting files to upload.
    #[serde(default)]
    pub output_patterns: Vec<String>,
    /// Wall-clock budget; the wrapper kills the script past this, and the
    /// central service expires jobs that overstay it in any state.
    pub ttl_seconds: u64,
    /// Identity string of whoever submitted the job.
    #[serde(default = "default_submitter")]
    pub submitter: String,
}

fn default_submitter() -> String {
    "local".to_owned()
}

/// One violated [`JobSpec`] invariant, as returned by [`validate_job_spec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecViolation {
    /// The invariant that was violated, in the contract's wording.
    pub rule: String,
    /// The offending value, when there is one to point at.
    pub detail: Option<String>,
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.detail {
            Some(d) => write!(f, "{}: {}", self.rule, d),
            None => write!(f, "{}", self.rule),
        }
    }
}

fn violation(rule: &str, detail: Option<String>) -> SpecViolation {
    SpecViolation {
        rule: rule.to_owned(),
        detail,
    }
}

/// Checks every [`JobSpec`] invariant and returns the full list of
/// violations. The spec is acceptable iff the list is empty. Violations are
/// data, not errors: callers decide what to do with them.
pub fn validate_job_spec(spec: &JobSpec) -> Vec<SpecViolation> {
    let mut violations = Vec::new();
    if spec.script.is_empty() {
        violations.push(violation("script non-empty", None));
    }
    if spec.ttl_seconds < 1 {
        violations.push(violation("ttl_seconds at least 1", None));
    }
    for pattern in &spec.output_patterns {
        if pattern.starts_with('/') {
            violations.push(violation(
                "output_patterns contains no absolute paths",
                Some(pattern.clone()),
            ));
        }
    }
    for raw in &spec.input_lfns {
        if let Err(err) = Lfn::parse(raw) {
            violations.push(violation(
                "input_lfns are syntactically valid LFNs",
                Some(format!("{raw}: {err}")),
            ));
        }
    }
    violations
}

/// Lifecycle state of a job.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum JobStatus {
    Waiting,
    Assigned,
    Running,
    Saving,
    Done,
    ErrorExec,
    ErrorSave,
    ErrorAgent,
    Expired,
}

impl JobStatus {
    /// All states, in declaration order.
    pub const ALL: [JobStatus; 9] = [
        JobStatus::Waiting,
        JobStatus::Assigned,
        JobStatus::Running,
        JobStatus::Saving,
        JobStatus::Done,
        JobStatus::ErrorExec,
        JobStatus::ErrorSave,
        JobStatus::ErrorAgent,
        JobStatus::Expired,
    ];

    /// Terminal states admit no outgoing transition.
    pub fn is_terminal(self) -> bool {
        matches!(
            self,
            JobStatus::Done
                | JobStatus::ErrorExec
                | JobStatus::ErrorSave
                | JobStatus::ErrorAgent
                | JobStatus::Expired
        )
    }

    /// Whether `self → next` is an allowed edge of the state machine.
    pub fn can_advance_to(self, next: JobStatus) -> bool {
        use JobStatus::*;
        match (self, next) {
            (Waiting, Assigned) | (Assigned, Running) | (Running, Saving) | (Saving, Done) => true,
            (from, ErrorExec | ErrorSave | ErrorAgent | Expired) => !from.is_terminal(),
            _ => false,
        }
    }

    /// The wire/journal spelling, e.g. `ERROR_EXEC`.
    pub fn as_str(self) -> &'static str {
        match self {
            JobStatus::Waiting => "WAITING",
            JobStatus::Assigned => "ASSIGNED",
            JobStatus::Running => "RUNNING",
            JobStatus::Saving => "SAVING",
            JobStatus::Done => "DONE",
            JobStatus::ErrorExec => "ERROR_EXEC",
            JobStatus::ErrorSave => "ERROR_SAVE",
            JobStatus::ErrorAgent => "ERROR_AGENT",
            JobStatus::Expired => "EXPIRED",
        }
    }

    /// Parses the wire/journal spelling.
    pub fn parse(s: &str) -> Option<JobStatus> {
        JobStatus::ALL.into_iter().find(|st| st.as_str() == s)
    }
}

impl fmt::Display for JobStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rejected status transition. Raised by [`advance_status`] when
/// `(current, next)` is not an allowed edge; signals a logic bug in a
/// component rather than a recoverable condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("illegal job status transition {current} -> {next}")]
pub struct IllegalTransition {
    pub current: JobStatus,
    pub next: JobStatus,
}

/// Returns `next` iff `(current, next)` is an allowed edge of the job state
/// machine.
pub fn advance_status(current: JobStatus, next: JobStatus) -> Result<JobStatus, IllegalTransition> {
    if current.can_advance_to(next) {
        Ok(next)
    } else {
        Err(IllegalTransition { current, next })
    }
}

/// A job as tracked by the central service.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobRecord {
    pub id: JobId,
    pub spec: JobSpec,
    pub status: JobStatus,
    /// Every status the job has held, oldest first, with run-relative
    /// timestamps. The last entry always equals `status`.
    pub status_history: Vec<StatusStamp>,
    pub assigned_worker: Option<String>,
    /// Present iff the job reached DONE or ERROR_EXEC.
    pub exit_code: Option<i64>,
    /// Output LFNs registered while the job was SAVING.
    pub output_lfns: Vec<String>,
}

/// One entry of a job's status history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusStamp {
    pub status: JobStatus,
    pub ts_ms: u64,
}

impl JobRecord {
    /// A freshly submitted job in WAITING.
    pub fn new(id: JobId, spec: JobSpec, now_ms: u64) -> JobRecord {
        JobRecord {
            id,
            spec,
            status: JobStatus::Waiting,
            status_history: vec![StatusStamp {
                status: JobStatus::Waiting,
                ts_ms: now_ms,
            }],
            assigned_worker: None,
            exit_code: None,
            output_lfns: Vec::new(),
        }
    }

    /// Applies a status transition, keeping `status` and `status_history`
    /// in lock step.
    pub fn advance(&mut self, next: JobStatus, now_ms: u64) -> Result<(), IllegalTransition> {
        let status = advance_status(self.status, next)?;
        self.status = status;
        self.status_history.push(StatusStamp {
            status,
            ts_ms: now_ms,
        });
        Ok(())
    }

    /// Timestamp of the initial WAITING entry.
    pub fn submitted_at_ms(&self) -> u64 {
        self.status_history.first().map(|s| s.ts_ms).unwrap_or(0)
    }

    /// Summary of resource requirements, as reported to polling CEs.
    pub fn requirements_summary(&self) -> BTreeMap<String, String> {
        let mut summary = BTreeMap::new();
        summary.insert("ttl_seconds".to_owned(), self.spec.ttl_seconds.to_string());
        summary.insert(
            "input_count".to_owned(),
            self.spec.input_lfns.len().to_string(),
        );
        summary
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_spec() -> JobSpec {
        JobSpec {
            script: "echo hi".to_owned(),
            arguments: vec![],
            input_lfns: vec![],
            output_patterns: vec![],
            ttl_seconds: 60,
            submitter: "tester".to_owned(),
        }
    }

    #[test]
    fn minimal_valid_spec_passes() {
        assert!(validate_job_spec(&minimal_spec()).is_empty());
    }

    #[test]
    fn empty_script_is_reported() {
        let mut spec = minimal_spec();
        spec.script = String::new();
        let violations = validate_job_spec(&spec);
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].rule, "script non-empty");
    }

    #[test]
    fn absolute_output_pattern_is_reported() {
        let mut spec = minimal_spec();
        spec.script = "x".to_owned();
        spec.output_patterns = vec!["/etc/passwd".to_owned()];
        let violations = validate_job_spec(&spec);
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].rule, "output_patterns contains no absolute paths");
        assert_eq!(violations[0].detail.as_deref(), Some("/etc/passwd"));
    }

    #[test]
    fn every_violation_is_collected() {
        let spec = JobSpec {
            script: String::new(),
            arguments: vec![],
            input_lfns: vec!["not-absolute".to_owned()],
            output_patterns: vec!["/abs".to_owned()],
            ttl_seconds: 0,
            submitter: String::new(),
        };
        let rules: Vec<_> = validate_job_spec(&spec)
            .into_iter()
            .map(|v| v.rule)
            .collect();
        assert_eq!(rules.len(), 4);
    }

    #[test]
    fn allowed_edge_advances() {
        assert_eq!(
            advance_status(JobStatus::Waiting, JobStatus::Assigned),
            Ok(JobStatus::Assigned)
        );
    }

    #[test]
    fn terminal_state_rejects_everything() {
        let err = advance_status(JobStatus::Done, JobStatus::Running).unwrap_err();
        assert_eq!(err.current, JobStatus::Done);
        assert_eq!(err.next, JobStatus::Running);
    }

    /// Independent edge-set oracle: the literal list of allowed edges from
    /// the state machine's definition, spelled out rather than computed.
    fn oracle_edges() -> Vec<(JobStatus, JobStatus)> {
        use JobStatus::*;
        let mut edges = vec![
            (Waiting, Assigned),
            (Assigned, Running),
            (Running, Saving),
            (Saving, Done),
        ];
        for from in [Waiting, Assigned, Running, Saving] {
            for to in [ErrorExec, ErrorSave, ErrorAgent, Expired] {
                edges.push((from, to));
            }
        }
        edges
    }

    #[test]
    fn exhaustive_transition_table_matches_oracle() {
        let oracle = oracle_edges();
        let mut checked = 0;
        for from in JobStatus::ALL {
            for to in JobStatus::ALL {
                let expected = oracle.contains(&(from, to));
                let actual = advance_status(from, to).is_ok();
                assert_eq!(
                    expected, actual,
                    "transition {from} -> {to}: oracle {expected}, impl {actual}"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 81);
        assert_eq!(oracle.len(), 20);
    }

    #[test]
    fn record_keeps_status_and_history_aligned() {
        let mut record = JobRecord::new(JobId(1), minimal_spec(), 0);
        record.advance(JobStatus::Assigned, 5).unwrap();
        record.advance(JobStatus::Running, 9).unwrap();
        assert_eq!(record.status, JobStatus::Running);
        assert_eq!(record.status_history.last().unwrap().status, record.status);
        assert_eq!(record.status_history.len(), 3);
        assert!(record.advance(JobStatus::Done, 10).is_err());
        assert_eq!(record.status, JobStatus::Running, "failed advance must not mutate");
        assert_eq!(record.status_history.len(), 3);
    }

    #[test]
    fn status_spelling_round_trips() {
        for status in JobStatus::ALL {
            assert_eq!(JobStatus::parse(status.as_str()), Some(status));
            let json = serde_json::to_string(&status).unwrap();
            assert_eq!(json, format!("\"{}\"", status.as_str()));
        }
    }
}
