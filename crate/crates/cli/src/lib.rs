//! File formats and the benchmark harness around the `fbsplit` solvers.
//!
//! - [`instance`]: JSON instance documents.
//! - [`trace_csv`]: per-iteration CSV traces.
//! - [`bench`]: seeded benchmark runs and their report tables.

pub mod bench;
pub mod error;
pub mod instance;
pub mod trace_csv;

pub use bench::{run_benchmark, run_instance, Algorithm, BenchRun, ReportRow, RunConfig};
pub use error::{Error, Result};
pub use instance::InstanceDoc;
pub use trace_csv::{emit_trace, read_trace, TraceRow};
