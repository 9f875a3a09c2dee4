use rayon::prelude::*;

use super::scenario::{HedgeMode, PathScheme, Scenario};
use crate::error::Result;
use crate::hedging::{
    analytic_delta, evolve_portfolio, optimal_ratios, rho_diagnostic, single_coefficients,
    two_asset_hedge, ConstantRatios, HedgeReport,
};
use crate::levy::{sample_noise, LevyMeasure, NoiseRealization, PathSeries, TimeGrid};
use crate::market::{euler_price_path, geometric_price_path, AssetSpec};
use crate::stats::Estimate;

/// Everything simulated on one path.
#[derive(Debug, Clone, PartialEq)]
pub struct PathRun {
    pub path_index: u64,
    /// Cumulative number of arrivals `N_t` at each grid point.
    pub jump_count: Vec<u64>,
    /// Compound Poisson process `X_t = Σ x_k N_k(t)` at each grid point.
    pub levy: Vec<f64>,
    pub contract: PathSeries,
    pub assets: Vec<PathSeries>,
    pub report: HedgeReport,
}

/// Per-path figures from which every aggregate can be recomputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSummary {
    pub path_index: u64,
    pub delta: f64,
    pub sum_dv: f64,
    pub sum_dv_sq: f64,
    pub max_abs_dv: f64,
    pub steps: usize,
}

impl PathSummary {
    fn from_report(path_index: u64, report: &HedgeReport) -> Self {
        let r = &report.residual_increments;
        Self {
            path_index,
            delta: report.delta_mc,
            sum_dv: r.iter().sum(),
            sum_dv_sq: r.iter().map(|x| x * x).sum(),
            max_abs_dv: report.max_abs_residual(),
            steps: r.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aggregate {
    /// Monte Carlo `E[(V_T - V_0)²]` with its standard error.
    pub delta: Estimate,
    /// Standard deviation of `dV` pooled over every step of every path.
    pub per_step_std: f64,
    pub max_abs_dv: f64,
}

impl Aggregate {
    pub fn from_summaries(paths: &[PathSummary]) -> Self {
        let deltas: Vec<f64> = paths.iter().map(|p| p.delta).collect();
        let count: usize = paths.iter().map(|p| p.steps).sum();
        let sum: f64 = paths.iter().map(|p| p.sum_dv).sum();
        let sum_sq: f64 = paths.iter().map(|p| p.sum_dv_sq).sum();
        let mean = sum / count as f64;
        Self {
            delta: Estimate::from_samples(&deltas),
            per_step_std: (sum_sq / count as f64 - mean * mean).max(0.0).sqrt(),
            max_abs_dv: paths.iter().fold(0.0, |m, p| m.max(p.max_abs_dv)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub scenario: Scenario,
    /// Scaled hedge ratios `φ^i S^i / C`, zero for unused assets.
    pub ratios: Vec<f64>,
    /// Closed-form `Δ_T` in natural units (not per `C_0²`).
    pub delta_analytic: f64,
    pub rho: Option<f64>,
    pub paths: Vec<PathSummary>,
    pub aggregate: Aggregate,
    /// Full record of path 0.
    pub reporting: PathRun,
}

fn ratios_for(
    mode: HedgeMode,
    contract: &AssetSpec,
    assets: &[AssetSpec],
    measure: &LevyMeasure,
) -> Result<Vec<f64>> {
    let mut ratios = vec![0.0; assets.len()];
    match mode {
        HedgeMode::None => {}
        HedgeMode::Single(i) => {
            ratios[i] = single_coefficients(contract, &assets[i], measure)?.optimal_ratio();
        }
        HedgeMode::TwoAsset => {
            let (a, b) =
                two_asset_hedge(contract, &assets[0], &assets[1], (1.0, 1.0, 1.0), measure)?;
            ratios[0] = a;
            ratios[1] = b;
        }
        HedgeMode::Multi => ratios = optimal_ratios(contract, assets, measure)?,
    }
    Ok(ratios)
}

fn price_path(
    scheme: PathScheme,
    asset: &AssetSpec,
    measure: &LevyMeasure,
    noise: &NoiseRealization,
    grid: &TimeGrid,
) -> Result<PathSeries> {
    match scheme {
        PathScheme::Euler => euler_price_path(asset, measure, noise, grid),
        PathScheme::Exact => geometric_price_path(asset, measure, noise, grid),
    }
}

/// Constant scaled ratios `φ^i S^i / C` used by a scenario's hedge mode,
/// zero for assets the mode leaves out.
pub fn hedge_ratios(s: &Scenario) -> Result<Vec<f64>> {
    Ok(prepare(s)?.ratios)
}

struct Prepared {
    contract: AssetSpec,
    assets: Vec<AssetSpec>,
    ratios: Vec<f64>,
}

fn prepare(s: &Scenario) -> Result<Prepared> {
    s.validate()?;
    let contract = s.natural_contract()?;
    let assets = s.natural_assets()?;
    let ratios = ratios_for(s.hedge_mode, &contract, &assets, &s.measure)?;
    Ok(Prepared {
        contract,
        assets,
        ratios,
    })
}

fn run_path(s: &Scenario, p: &Prepared, path_index: u64) -> Result<PathRun> {
    let noise = sample_noise(&s.measure, &s.grid, s.seed, path_index);
    let contract = price_path(s.scheme, &p.contract, &s.measure, &noise, &s.grid)?;
    let assets = p
        .assets
        .iter()
        .map(|a| price_path(s.scheme, a, &s.measure, &noise, &s.grid))
        .collect::<Result<Vec<_>>>()?;
    let report = evolve_portfolio(
        &contract,
        &assets,
        &ConstantRatios(p.ratios.clone()),
        &s.grid,
    )?;

    let locations: Vec<f64> = s.measure.locations().collect();
    let mut jump_count = Vec::with_capacity(s.grid.steps() + 1);
    let mut levy = Vec::with_capacity(s.grid.steps() + 1);
    let (mut n, mut x) = (0u64, 0.0);
    jump_count.push(n);
    levy.push(x);
    for i in 0..s.grid.steps() {
        for e in noise.events(i) {
            n += u64::from(e.count);
            x += f64::from(e.count) * locations[e.atom];
        }
        jump_count.push(n);
        levy.push(x);
    }
    Ok(PathRun {
        path_index,
        jump_count,
        levy,
        contract,
        assets,
        report,
    })
}

/// Simulates a single path of a scenario in full detail.
pub fn simulate_path(s: &Scenario, path_index: u64) -> Result<PathRun> {
    run_path(s, &prepare(s)?, path_index)
}

/// Runs every path of a scenario. All assets of a path share one noise
/// realization; paths run in parallel but results are assembled in path
/// order, so the output does not depend on the thread count.
pub fn run_scenario(s: &Scenario) -> Result<ScenarioResult> {
    let prepared = prepare(s)?;
    let reporting = run_path(s, &prepared, 0)?;
    let mut paths = vec![PathSummary::from_report(0, &reporting.report)];
    let rest = (1..s.n_paths as u64)
        .into_par_iter()
        .map(|i| run_path(s, &prepared, i).map(|run| PathSummary::from_report(i, &run.report)))
        .collect::<Result<Vec<_>>>()?;
    paths.extend(rest);

    let c0 = prepared.contract.initial_price();
    let delta_analytic = c0
        * c0
        * analytic_delta(
            &prepared.contract,
            &prepared.assets,
            &prepared.ratios,
            &s.measure,
            s.grid.horizon(),
        )?;
    let rho = match s.hedge_mode {
        HedgeMode::Single(i) => Some(rho_diagnostic(
            &prepared.contract,
            &prepared.assets[i],
            &s.measure,
        )?),
        _ => None,
    };
    let aggregate = Aggregate::from_summaries(&paths);
    let mut reporting = reporting;
    reporting.report.delta_analytic = Some(delta_analytic);
    reporting.report.rho = rho;
    Ok(ScenarioResult {
        scenario: s.clone(),
        ratios: prepared.ratios,
        delta_analytic,
        rho,
        paths,
        aggregate,
        reporting,
    })
}
