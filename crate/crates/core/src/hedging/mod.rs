//! Optimal quadratic hedging in natural units.
//!
//! For natural prices `dS/S_- = σ dW + ∫Σ Ñ` and contract
//! `dC/C_- = σ^c dW + ∫Σ^c Ñ`, the hedge error of a self-financing strategy
//! has instantaneous variance `G - 2φ·F + φᵀMφ`, so the optimum solves the
//! Gram system `Mφ = F` pointwise in time.

mod coefficients;
mod delta;
mod portfolio;
mod solve;

pub use coefficients::{
    covariance_rate, gram_system, rho_diagnostic, single_coefficients, GramSystem,
    SingleHedgeCoefficients,
};
pub use delta::{analytic_delta, delta_rate, horizon_factor};
pub use portfolio::{
    evolve_portfolio, ConstantRatios, HedgeReport, HedgeRule, HedgeStrategy, NoHedge, OptimalHedge,
};
pub use solve::{
    degeneracy_check, multi_asset_hedge, optimal_ratios, single_asset_hedge, two_asset_hedge,
    DegeneracyReport, DEGENERACY_TOLERANCE,
};
