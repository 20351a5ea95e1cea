//! Domain types shared by every grid component: jobs and their lifecycle
//! state machine, logical file names, checksums, content identifiers, the
//! run clock, and the per-component event journal.

pub mod checksum;
pub mod clock;
pub mod guid;
pub mod job;
pub mod journal;
pub mod lfn;

pub use checksum::{compute_checksum, Checksum, ChecksumError};
pub use clock::RunClock;
pub use guid::Guid;
pub use job::{
    advance_status, validate_job_spec, IllegalTransition, JobId, JobRecord, JobSpec, JobStatus,
    SpecViolation,
};
pub use journal::{read_journal_file, EventKind, Journal, JournalError, JournalEvent};
pub use lfn::{Lfn, LfnError};
