//! Workload generation, engine execution and reporting.

mod engine;
mod report;
mod stats;
mod workload;

pub use engine::{run_workload, Engine, Method, RunOptions};
pub use report::{write_csv, Report, DEPTH_CONVENTION};
pub use stats::{dataset_stats, DatasetStats, StatsFlags};
pub use workload::{gen_bad_queries, gen_random_queries, generate, Workload, WorkloadKind, WorkloadSpec};
