//! Batch command surface over the workbench: structure-spec parsing, task
//! dispatch with deterministic canonical-JSON reports, and a
//! content-addressed cache for expensive enumerations.

pub mod cache;
pub mod commands;
pub mod report;
pub mod task;

pub use cache::{cache_key, cache_lookup, cache_store, CACHE_ENV};
pub use commands::run_task;
pub use report::{Report, Status, VERSION};
pub use task::{schema_dump, Command, ParamValue, TaskError, TaskSpec};
