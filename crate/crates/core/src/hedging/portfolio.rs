use super::coefficients::gram_system;
use super::solve::multi_asset_hedge;
use crate::error::{check_len, Error, Result};
use crate::levy::{LevyMeasure, PathSeries, TimeGrid};
use crate::market::AssetSpec;
use crate::stats::std_dev;

/// Chooses the units `φ^i` of each hedging asset to hold over step `step`,
/// given the prices at the start of that step.
pub trait HedgeRule {
    fn holdings(&self, step: usize, contract: f64, assets: &[f64], out: &mut [f64]) -> Result<()>;
}

/// Holds nothing; the portfolio is the bare contract.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoHedge;

impl HedgeRule for NoHedge {
    fn holdings(&self, _step: usize, _c: f64, _s: &[f64], out: &mut [f64]) -> Result<()> {
        out.iter_mut().for_each(|x| *x = 0.0);
        Ok(())
    }
}

/// `φ^i = r_i C / S^i` for fixed scaled ratios `r_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantRatios(pub Vec<f64>);

impl HedgeRule for ConstantRatios {
    fn holdings(&self, _step: usize, contract: f64, assets: &[f64], out: &mut [f64]) -> Result<()> {
        check_len("hedge ratios", assets.len(), self.0.len())?;
        for ((o, r), s) in out.iter_mut().zip(&self.0).zip(assets) {
            *o = r * contract / s;
        }
        Ok(())
    }
}

/// Solves the Gram system afresh at every step. Equivalent to
/// [`ConstantRatios`] with the optimal ratios when volatilities are constant.
#[derive(Debug, Clone)]
pub struct OptimalHedge<'a> {
    pub contract: &'a AssetSpec,
    pub assets: &'a [AssetSpec],
    pub measure: &'a LevyMeasure,
}

impl HedgeRule for OptimalHedge<'_> {
    fn holdings(&self, _step: usize, contract: f64, assets: &[f64], out: &mut [f64]) -> Result<()> {
        let sys = gram_system(self.contract, self.assets, contract, assets, self.measure)?;
        out.copy_from_slice(&multi_asset_hedge(&sys)?);
        Ok(())
    }
}

/// Holdings at each grid point together with the benchmark position.
///
/// Row `i` of `phi` is the position taken at `t_i` and held over
/// `(t_i, t_{i+1}]`; `theta[i]` is the matching benchmark holding, so that
/// `V_i = C_i - Σ φ^j_i S^j_i + θ_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct HedgeStrategy {
    pub phi: Vec<Vec<f64>>,
    pub theta: Vec<f64>,
}

impl HedgeRule for HedgeStrategy {
    fn holdings(&self, step: usize, _c: f64, _s: &[f64], out: &mut [f64]) -> Result<()> {
        let row = self
            .phi
            .get(step)
            .ok_or_else(|| Error::GridMismatch(format!("no holdings for step {step}")))?;
        check_len("holdings", out.len(), row.len())?;
        out.copy_from_slice(row);
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HedgeReport {
    pub strategy: HedgeStrategy,
    pub portfolio_path: PathSeries,
    /// `dV = dC - Σ φ^i dS^i` for each step.
    pub residual_increments: Vec<f64>,
    /// `(V_T - V_0)²` on this path.
    pub delta_mc: f64,
    pub delta_analytic: Option<f64>,
    pub rho: Option<f64>,
    pub per_step_std: f64,
}

impl HedgeReport {
    pub fn max_abs_residual(&self) -> f64 {
        self.residual_increments
            .iter()
            .fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest relative violation of `V = C - Σ φ S + θ` along the path.
    pub fn self_financing_error(&self, contract: &PathSeries, assets: &[PathSeries]) -> f64 {
        let v = &self.portfolio_path.values;
        (0..v.len())
            .map(|i| {
                let held: f64 = self.strategy.phi[i]
                    .iter()
                    .zip(assets)
                    .map(|(p, s)| p * s.values[i])
                    .sum();
                let rebuilt = contract.values[i] - held + self.strategy.theta[i];
                (rebuilt - v[i]).abs() / v[i].abs().max(contract.values[i].abs())
            })
            .fold(0.0, f64::max)
    }
}

/// Runs a self-financing hedge along given price paths.
///
/// The portfolio starts at `V_0 = C_0` with the short-sale proceeds in the
/// benchmark (`θ_0 = Σ φ_0 S_0`). Holdings are predictable: the rule sees
/// only the prices at the start of each step.
pub fn evolve_portfolio<R: HedgeRule + ?Sized>(
    contract: &PathSeries,
    assets: &[PathSeries],
    rule: &R,
    grid: &TimeGrid,
) -> Result<HedgeReport> {
    let n = grid.steps();
    check_len("contract path steps", n, contract.steps())?;
    for a in assets {
        check_len("asset path steps", n, a.steps())?;
    }
    let k = assets.len();
    let mut prices = vec![0.0; k];
    let mut phi = Vec::with_capacity(n + 1);
    let mut theta = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    let mut left_limits = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);

    let mut v = contract.values[0];
    let mut gains = 0.0;
    for i in 0..=n {
        for (p, a) in prices.iter_mut().zip(assets) {
            *p = a.values[i];
        }
        let mut row = vec![0.0; k];
        rule.holdings(i, contract.values[i], &prices, &mut row)?;
        let held: f64 = row.iter().zip(&prices).map(|(h, s)| h * s).sum();
        theta.push(held - gains);
        values.push(v);
        if i < n {
            let dc = contract.values[i + 1] - contract.values[i];
            let ds: f64 = row
                .iter()
                .zip(assets)
                .map(|(h, a)| h * (a.values[i + 1] - a.values[i]))
                .sum();
            let dc_left = contract.left_limits[i] - contract.values[i];
            let ds_left: f64 = row
                .iter()
                .zip(assets)
                .map(|(h, a)| h * (a.left_limits[i] - a.values[i]))
                .sum();
            left_limits.push(v + dc_left - ds_left);
            let dv = dc - ds;
            residuals.push(dv);
            gains += ds;
            v += dv;
        }
        phi.push(row);
    }

    let delta = (v - contract.values[0]).powi(2);
    Ok(HedgeReport {
        strategy: HedgeStrategy { phi, theta },
        portfolio_path: PathSeries {
            values,
            left_limits,
        },
        per_step_std: std_dev(&residuals),
        residual_increments: residuals,
        delta_mc: delta,
        delta_analytic: None,
        rho: None,
    })
}
