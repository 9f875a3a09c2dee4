//! Optimal quadratic hedging in Lévy-Ito markets.
//!
//! Markets are driven by one Brownian motion and a finite-activity Poisson
//! random measure. All hedging is carried out in natural (benchmark) units,
//! where every non-dividend asset price is a martingale.
//!
//! The crate is organized bottom-up:
//!
//! - [`levy`]: jump measures, seeded noise on a time grid, Euler integration of
//!   symmetric Lévy-Ito dynamics and the proportional product/quotient rules.
//! - [`market`]: pricing kernel, benchmark, domestic/natural volatility
//!   transforms and closed-form geometric price paths.
//! - [`hedging`]: optimal hedge ratios for one, two or `n` hedging assets,
//!   self-financing portfolio evolution and mean-squared-error diagnostics.
//! - [`sim`]: built-in experiment scenarios, Monte Carlo drivers, brute-force
//!   oracles, property suites and CSV emission.

// `!(x > 0.0)` is used throughout so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hedging;
pub mod levy;
pub mod market;
pub mod sim;
pub mod stats;

pub use error::{Error, Result};
pub use hedging::{
    analytic_delta, degeneracy_check, evolve_portfolio, gram_system, multi_asset_hedge,
    rho_diagnostic, single_asset_hedge, single_coefficients, two_asset_hedge, DegeneracyReport,
    GramSystem, HedgeReport, HedgeRule, HedgeStrategy, SingleHedgeCoefficients,
};
pub use levy::{
    compensate, geometric_path, integrate, product_coefficients, quotient_coefficients,
    sample_noise, JumpAtom, LevyMeasure, NoiseRealization, PathSeries, SymmetricCoefficients,
    TimeGrid,
};
pub use market::{AssetSpec, GeometricBernoulliSpec, PricingKernelSpec};
pub use sim::{builtin_scenario, run_scenario, HedgeMode, PathScheme, Scenario, ScenarioResult};
