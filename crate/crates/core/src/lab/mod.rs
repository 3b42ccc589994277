//! Scenario runner, exhaustive and seeded sweeps, and batch records.

mod enumerate;
mod records;
mod scenario;

pub use enumerate::{
    check_word, enumerate_and_verify, EnumerateConfig, Property, Summary, Sweep,
    DEFAULT_WORD_BUDGET, MAX_LENGTH, MAX_STRANDS,
};
pub use records::{escape, BatchRecord};
pub use scenario::{
    load_scenario, run_scenario, scenario_names, Check, Fact, Scenario, ScenarioReport, Source,
};
