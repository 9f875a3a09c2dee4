//! Experiment scenarios, Monte Carlo drivers and verification suites.

pub mod csv;
mod oracle;
mod run;
mod scenario;
pub mod verify;

pub use oracle::{brute_force_constant_hedge, BruteForceResult, RatioGrid};
pub use run::{
    hedge_ratios, run_scenario, simulate_path, Aggregate, PathRun, PathSummary, ScenarioResult,
};
pub use scenario::{
    builtin_scenario, HedgeMode, PathScheme, Scenario, BUILTIN_SCENARIOS, DEFAULT_PATHS,
    DEFAULT_SEED,
};
