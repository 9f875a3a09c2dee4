use nalgebra::{DMatrix, DVector};

use crate::error::{check_len, Error, Result};
use crate::levy::LevyMeasure;
use crate::market::AssetSpec;

/// `σ_a σ_b + ∫ Σ_a(x) Σ_b(x) ν(dx)`: instantaneous covariance rate of the
/// proportional returns of two assets.
pub fn covariance_rate(a: &AssetSpec, b: &AssetSpec, measure: &LevyMeasure) -> Result<f64> {
    a.check_measure(measure)?;
    b.check_measure(measure)?;
    Ok(a.brownian_vol() * b.brownian_vol() + measure.weighted_dot(a.jump_vol(), b.jump_vol()))
}

/// Per-unit-time coefficients of the single-asset hedge error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleHedgeCoefficients {
    /// `K`: variance rate of the contract.
    pub contract_variance: f64,
    /// `L`: covariance rate of contract and hedging asset.
    pub covariance: f64,
    /// `M`: variance rate of the hedging asset.
    pub asset_variance: f64,
}

impl SingleHedgeCoefficients {
    /// Scaled optimal ratio `φ̂ S / C = L / M`.
    pub fn optimal_ratio(&self) -> f64 {
        self.covariance / self.asset_variance
    }

    /// `ρ = L² / (K M)`.
    pub fn rho(&self) -> f64 {
        self.covariance * self.covariance / (self.contract_variance * self.asset_variance)
    }
}

pub fn single_coefficients(
    contract: &AssetSpec,
    asset: &AssetSpec,
    measure: &LevyMeasure,
) -> Result<SingleHedgeCoefficients> {
    Ok(SingleHedgeCoefficients {
        contract_variance: covariance_rate(contract, contract, measure)?,
        covariance: covariance_rate(asset, contract, measure)?,
        asset_variance: covariance_rate(asset, asset, measure)?,
    })
}

/// Fraction of the contract's instantaneous variance removed by the best
/// single-asset hedge. Equals one exactly when a perfect hedge exists.
pub fn rho_diagnostic(
    contract: &AssetSpec,
    asset: &AssetSpec,
    measure: &LevyMeasure,
) -> Result<f64> {
    let c = single_coefficients(contract, asset, measure)?;
    if !(c.contract_variance > 0.0 && c.asset_variance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "rho undefined for degenerate variances K = {}, M = {}",
            c.contract_variance, c.asset_variance
        )));
    }
    Ok(c.rho().clamp(0.0, 1.0))
}

/// `M^{ij}`, `F^i` and `G` at the current left-limit prices.
#[derive(Debug, Clone, PartialEq)]
pub struct GramSystem {
    pub gram: DMatrix<f64>,
    pub cross: DVector<f64>,
    pub contract_variance: f64,
    pub asset_prices: Vec<f64>,
    pub contract_price: f64,
}

impl GramSystem {
    pub fn dim(&self) -> usize {
        self.cross.len()
    }

    /// Gram matrix with entry `(i, j)` divided by `S^i S^j`.
    pub fn scaled_gram(&self) -> DMatrix<f64> {
        let p = &self.asset_prices;
        DMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.gram[(i, j)] / (p[i] * p[j])
        })
    }

    /// Instantaneous hedge-error variance `G - 2φ·F + φᵀMφ` for holdings `φ`.
    pub fn error_rate(&self, holdings: &[f64]) -> f64 {
        let phi = DVector::from_column_slice(holdings);
        self.contract_variance - 2.0 * phi.dot(&self.cross)
            + (phi.transpose() * &self.gram * &phi)[(0, 0)]
    }
}

pub fn gram_system(
    contract: &AssetSpec,
    assets: &[AssetSpec],
    contract_price: f64,
    asset_prices: &[f64],
    measure: &LevyMeasure,
) -> Result<GramSystem> {
    check_len("asset prices", assets.len(), asset_prices.len())?;
    if !(contract_price > 0.0) || asset_prices.iter().any(|&p| !(p > 0.0)) {
        return Err(Error::InvalidParameter("prices must be positive".into()));
    }
    let n = assets.len();
    let mut gram = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = asset_prices[i]
                * asset_prices[j]
                * covariance_rate(&assets[i], &assets[j], measure)?;
            gram[(i, j)] = v;
            gram[(j, i)] = v;
        }
    }
    let cross = assets
        .iter()
        .zip(asset_prices)
        .map(|(a, p)| Ok(p * contract_price * covariance_rate(a, contract, measure)?))
        .collect::<Result<Vec<f64>>>()?;
    let contract_variance =
        contract_price * contract_price * covariance_rate(contract, contract, measure)?;
    Ok(GramSystem {
        gram,
        cross: DVector::from_vec(cross),
        contract_variance,
        asset_prices: asset_prices.to_vec(),
        contract_price,
    })
}
