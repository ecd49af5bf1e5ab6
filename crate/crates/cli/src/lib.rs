//! Command-line front end for `wavesearch-core`: experiment configs, dispatch
//! and CSV/JSON output.

pub mod config;
pub mod error;
pub mod experiments;
pub mod record;

pub use config::{parse_angle, ExperimentConfig, Format};
pub use error::CliError;
pub use experiments::{query_table_rows, run_experiment, table_eq7, QueryTableRow};
pub use record::{ExperimentRecord, Series};
