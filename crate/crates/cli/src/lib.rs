//! Command-line front end for `pellrep-core`: JSONL/CSV records, a threaded
//! search driver and the `pellrep` command dispatcher.

pub mod app;
pub mod parallel;
pub mod record;

pub use app::{run, EXIT_FALSIFIED, EXIT_OK, EXIT_USAGE};
pub use record::OutputRecord;
