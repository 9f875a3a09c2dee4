use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use super::coefficients::{covariance_rate, gram_system, GramSystem, SingleHedgeCoefficients};
use crate::error::{Error, Result};
use crate::levy::LevyMeasure;
use crate::market::AssetSpec;

/// A scaled Gram matrix whose smallest eigenvalue is at or below
/// `DEGENERACY_TOLERANCE * trace / n` is treated as singular.
pub const DEGENERACY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegeneracyReport {
    pub min_eigenvalue: f64,
    pub condition_number: f64,
    pub degenerate: bool,
}

fn threshold(trace: f64, n: usize) -> f64 {
    DEGENERACY_TOLERANCE * trace / n as f64
}

fn report_from_eigenvalues(min: f64, max: f64, trace: f64, n: usize) -> DegeneracyReport {
    let condition_number = if min > 0.0 { max / min } else { f64::INFINITY };
    DegeneracyReport {
        min_eigenvalue: min,
        condition_number,
        degenerate: !(min > threshold(trace, n)),
    }
}

fn scaled_report(scaled: DMatrix<f64>) -> DegeneracyReport {
    let n = scaled.nrows();
    if n == 0 {
        return DegeneracyReport {
            min_eigenvalue: f64::NAN,
            condition_number: f64::NAN,
            degenerate: true,
        };
    }
    let trace = scaled.trace();
    let eig = SymmetricEigen::new(scaled).eigenvalues;
    let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
    let max = eig.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    report_from_eigenvalues(min, max, trace, n)
}

/// Eigen-analysis of the price-scaled Gram matrix.
pub fn degeneracy_check(system: &GramSystem) -> DegeneracyReport {
    scaled_report(system.scaled_gram())
}

/// Units `φ̂ = (L/M) C_- / S_-` of a single hedging asset.
pub fn single_asset_hedge(
    contract_price_left: f64,
    asset_price_left: f64,
    coeffs: &SingleHedgeCoefficients,
) -> Result<f64> {
    if !(asset_price_left > 0.0) {
        return Err(Error::InvalidParameter(
            "asset price must be positive".into(),
        ));
    }
    let m = coeffs.asset_variance;
    let report = report_from_eigenvalues(m, m, m, 1);
    if report.degenerate {
        return Err(Error::Degenerate(report));
    }
    Ok(coeffs.covariance / m * contract_price_left / asset_price_left)
}

/// Solves `M φ̂ = F` by Cholesky factorization.
pub fn multi_asset_hedge(system: &GramSystem) -> Result<Vec<f64>> {
    let report = degeneracy_check(system);
    if report.degenerate {
        return Err(Error::Degenerate(report));
    }
    let chol = system
        .gram
        .clone()
        .cholesky()
        .ok_or(Error::Degenerate(report))?;
    Ok(chol.solve(&system.cross).iter().copied().collect())
}

/// Two-asset hedge in closed form:
///
/// `φ̂¹ = (P¹² - Q¹²)/R¹² · C/S¹`, `φ̂² = (P²¹ - Q²¹)/R²¹ · C/S²`
///
/// with `P^{ij} = L_i M_jj`, `Q^{ij} = M_ij L_j`, `R^{ij} = M_ii M_jj - M_ij²`
/// built from per-unit-time rates.
pub fn two_asset_hedge(
    contract: &AssetSpec,
    asset1: &AssetSpec,
    asset2: &AssetSpec,
    prices_left: (f64, f64, f64),
    measure: &LevyMeasure,
) -> Result<(f64, f64)> {
    let (c, s1, s2) = prices_left;
    if !(c > 0.0 && s1 > 0.0 && s2 > 0.0) {
        return Err(Error::InvalidParameter("prices must be positive".into()));
    }
    let l1 = covariance_rate(asset1, contract, measure)?;
    let l2 = covariance_rate(asset2, contract, measure)?;
    let m11 = covariance_rate(asset1, asset1, measure)?;
    let m22 = covariance_rate(asset2, asset2, measure)?;
    let m12 = covariance_rate(asset1, asset2, measure)?;

    let r = m11 * m22 - m12 * m12;
    let trace = m11 + m22;
    let spread = ((m11 - m22).powi(2) + 4.0 * m12 * m12).sqrt();
    let min = if trace > 0.0 {
        r / (0.5 * (trace + spread))
    } else {
        0.0
    };
    let report = report_from_eigenvalues(min, 0.5 * (trace + spread), trace, 2);
    if report.degenerate {
        return Err(Error::Degenerate(report));
    }

    let p12 = l1 * m22;
    let q12 = m12 * l2;
    let p21 = l2 * m11;
    let q21 = m12 * l1;
    Ok(((p12 - q12) / r * c / s1, (p21 - q21) / r * c / s2))
}

/// Optimal scaled ratios `φ̂^i S^i / C` for constant volatilities.
///
/// These do not depend on the prices, so they are computed once at unit
/// prices and reused for every step of every path.
pub fn optimal_ratios(
    contract: &AssetSpec,
    assets: &[AssetSpec],
    measure: &LevyMeasure,
) -> Result<Vec<f64>> {
    let ones = vec![1.0; assets.len()];
    multi_asset_hedge(&gram_system(contract, assets, 1.0, &ones, measure)?)
}
