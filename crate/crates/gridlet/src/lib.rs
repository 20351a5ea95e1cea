//! gridlet — a desk-scale emulator of a computing grid's workload-management
//! path, plus the machinery to evaluate it: a severity-tiered test suite,
//! journal-based flow verification, fault injection, and a one-command CI mode.
//!
//! The emulated grid has five components, mirroring the production layout:
//!
//! - `central` — the coordinator owning the task queue, file catalog and
//!   status API,
//! - `ce` — the computing element that polls for waiting jobs and injects
//!   job agents into the batch queue,
//! - `schedd` — the batch queue placing agent startup scripts onto worker
//!   slots,
//! - `worker` — the worker node hosting job agents; each agent pulls a job
//!   and runs it in a sandboxed wrapper,
//! - `se` — the storage element holding input and output files.
//!
//! Components run either in realtime mode (threads, newline-delimited JSON
//! over loopback TCP) or in stepped mode (a single-threaded, virtual-clock
//! simulation with deterministic message ordering). Every component writes a
//! JSONL journal under `<run_dir>/journal/`; the test suite and the scenario
//! harness verify the job flow by replaying those journals.

pub mod batch_queue;
pub mod central;
pub mod cli;
pub mod compute_element;
pub mod config;
pub mod core;
pub mod faults;
pub mod orchestrator;
pub mod scenario;
pub mod storage_element;
pub mod testsuite;
pub mod transport;
pub mod worker;
