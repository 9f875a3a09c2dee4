use super::scenario::{HedgeMode, Scenario};
use crate::error::{Error, Result};
use crate::hedging::analytic_delta;

/// Evenly spaced candidate ratios `lo, lo + step, ..., hi` on each axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioGrid {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl RatioGrid {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && step > 0.0 && hi >= lo) {
            return Err(Error::InvalidParameter(format!(
                "ratio grid needs lo <= hi and step > 0, got [{lo}, {hi}] step {step}"
            )));
        }
        Ok(Self { lo, hi, step })
    }

    pub fn points(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.lo + i as f64 * self.step).collect()
    }
}

/// Analytic `Δ_T / C_0²` evaluated on every grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult {
    /// Candidate values along each axis.
    pub axis: Vec<f64>,
    /// 1 for a single-asset search, 2 for a two-asset search.
    pub dims: usize,
    /// Row-major surface; index `i * axis.len() + j` for two dimensions.
    pub values: Vec<f64>,
    /// Minimizing scaled ratios, one per searched asset.
    pub best: Vec<f64>,
    pub best_value: f64,
}

/// Exhaustive search over constant scaled hedge ratios.
pub fn brute_force_constant_hedge(s: &Scenario, grid: RatioGrid) -> Result<BruteForceResult> {
    s.validate()?;
    let contract = s.natural_contract()?;
    let assets = s.natural_assets()?;
    let horizon = s.grid.horizon();
    let axis = grid.points();
    let mut ratios = vec![0.0; assets.len()];
    let mut values = Vec::new();
    let (dims, searched) = match s.hedge_mode {
        HedgeMode::Single(i) => (1, vec![i]),
        HedgeMode::TwoAsset => (2, vec![0, 1]),
        mode => {
            return Err(Error::InvalidParameter(format!(
                "brute force needs a single or two-asset hedge, got {mode:?}"
            )))
        }
    };
    let mut eval = |pt: &[f64]| -> Result<f64> {
        for (&k, &r) in searched.iter().zip(pt) {
            ratios[k] = r;
        }
        analytic_delta(&contract, &assets, &ratios, &s.measure, horizon)
    };

    let mut best = vec![f64::NAN; dims];
    let mut best_value = f64::INFINITY;
    if dims == 1 {
        for &a in &axis {
            let v = eval(&[a])?;
            if v < best_value {
                best_value = v;
                best = vec![a];
            }
            values.push(v);
        }
    } else {
        for &a in &axis {
            for &b in &axis {
                let v = eval(&[a, b])?;
                if v < best_value {
                    best_value = v;
                    best = vec![a, b];
                }
                values.push(v);
            }
        }
    }
    Ok(BruteForceResult {
        axis,
        dims,
        values,
        best,
        best_value,
    })
}
