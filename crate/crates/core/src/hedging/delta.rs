use super::coefficients::covariance_rate;
use crate::error::{check_len, Result};
use crate::levy::LevyMeasure;
use crate::market::AssetSpec;

/// Instantaneous hedge-error variance per unit `C²` for constant scaled
/// ratios `r_i = φ^i S^i / C`: `K - 2 Σ r_i L_i + Σ r_i r_j M_ij`.
pub fn delta_rate(
    contract: &AssetSpec,
    assets: &[AssetSpec],
    ratios: &[f64],
    measure: &LevyMeasure,
) -> Result<f64> {
    check_len("hedge ratios", assets.len(), ratios.len())?;
    let mut q = covariance_rate(contract, contract, measure)?;
    for (i, (a, r)) in assets.iter().zip(ratios).enumerate() {
        q -= 2.0 * r * covariance_rate(a, contract, measure)?;
        for j in 0..=i {
            let m = r * ratios[j] * covariance_rate(a, &assets[j], measure)?;
            q += if i == j { m } else { 2.0 * m };
        }
    }
    Ok(q)
}

/// `∫_0^T E[C_u²] du / C_0²`. The natural contract price is a geometric
/// martingale with variance rate `K`, so `E[C_u²] = C_0² e^{K u}`.
pub fn horizon_factor(contract_variance: f64, horizon: f64) -> f64 {
    let kt = contract_variance * horizon;
    if kt.abs() < 1e-12 {
        horizon * (1.0 + 0.5 * kt)
    } else {
        kt.exp_m1() / contract_variance
    }
}

/// Closed-form mean squared hedge error `Δ_T / C_0²` of a strategy with
/// constant scaled ratios.
pub fn analytic_delta(
    contract: &AssetSpec,
    assets: &[AssetSpec],
    ratios: &[f64],
    measure: &LevyMeasure,
    horizon: f64,
) -> Result<f64> {
    let rate = delta_rate(contract, assets, ratios, measure)?;
    let k = covariance_rate(contract, contract, measure)?;
    Ok(rate * horizon_factor(k, horizon))
}
