//! Instance files, analysis orchestration, reports and the fixture suite.

mod analyze;
mod instance;
pub mod models;
mod report;
mod suite;

pub use analyze::{analyze, AnalyzeOptions, HILBERT_CROSS_CHECK_MAX_N};
pub use instance::{FatPointEntry, FieldConfig, InputSpec, InstanceSpec, RingConfig, Task};
pub use report::{
    AnalysisReport, Certificate, CheckRecord, CheckStatus, DualSection, FiberSection, IdealSection, InputEcho,
    ReesSection, TimingEntry,
};
pub use suite::{
    basic_sequences, fixtures, verify_suite, CaseOutcome, Expectation, Fixture, SuiteLevel, SuiteSummary, Tally,
    ARRANGEMENTS,
};
