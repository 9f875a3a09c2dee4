//! Pricing kernel, benchmark and asset price dynamics.
//!
//! Domestic prices carry the drift `r + λσ + ∫ΛΣ ν(dx)`; dividing by the
//! benchmark `ξ = 1/π` removes it, leaving driftless natural prices with
//! volatilities `σ̄ = σ - λ` and `Σ̄ = Σ(1 - Λ) - Λ`.
//!
//! The kernel is normalized with `π_0 = 1`, so domestic and natural prices
//! agree at time zero.

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::levy::{
    compensate, geometric_path, integrate, LevyMeasure, NoiseRealization, PathSeries, Proportional,
    SymmetricCoefficients, TimeGrid,
};

/// `dπ = -π_{t-} [r dt + λ dW + ∫ Λ(x) Ñ(dx, dt)]` with constant `r, λ, Λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "KernelDoc", into = "KernelDoc")]
pub struct PricingKernelSpec {
    short_rate: f64,
    brownian_mpr: f64,
    jump_mpr: Vec<f64>,
}

impl PricingKernelSpec {
    pub fn new(short_rate: f64, brownian_mpr: f64, jump_mpr: Vec<f64>) -> Result<Self> {
        if !(short_rate.is_finite() && brownian_mpr.is_finite()) {
            return Err(Error::InvalidParameter(
                "kernel rates must be finite".into(),
            ));
        }
        if let Some(k) = jump_mpr.iter().position(|&l| !(l < 1.0 && l.is_finite())) {
            return Err(Error::InvalidParameter(format!(
                "jump market price of risk at atom {k} must be finite and below 1"
            )));
        }
        Ok(Self {
            short_rate,
            brownian_mpr,
            jump_mpr,
        })
    }

    pub fn null(n_atoms: usize) -> Self {
        Self {
            short_rate: 0.0,
            brownian_mpr: 0.0,
            jump_mpr: vec![0.0; n_atoms],
        }
    }

    pub fn short_rate(&self) -> f64 {
        self.short_rate
    }

    pub fn brownian_mpr(&self) -> f64 {
        self.brownian_mpr
    }

    pub fn jump_mpr(&self) -> &[f64] {
        &self.jump_mpr
    }

    /// `κ(x_k) = log(1 / (1 - Λ(x_k)))`.
    pub fn kappa(&self) -> Vec<f64> {
        self.jump_mpr.iter().map(|l| -(-l).ln_1p()).collect()
    }

    fn check_measure(&self, measure: &LevyMeasure) -> Result<()> {
        check_len(
            "jump market prices of risk",
            measure.len(),
            self.jump_mpr.len(),
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KernelDoc {
    short_rate: f64,
    brownian_mpr: f64,
    jump_mpr: Vec<f64>,
}

impl TryFrom<KernelDoc> for PricingKernelSpec {
    type Error = Error;

    fn try_from(d: KernelDoc) -> Result<Self> {
        Self::new(d.short_rate, d.brownian_mpr, d.jump_mpr)
    }
}

impl From<PricingKernelSpec> for KernelDoc {
    fn from(k: PricingKernelSpec) -> Self {
        KernelDoc {
            short_rate: k.short_rate,
            brownian_mpr: k.brownian_mpr,
            jump_mpr: k.jump_mpr,
        }
    }
}

/// Constant proportional volatilities of one asset: `σ` and `Σ(x_k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "AssetDoc", into = "AssetDoc")]
pub struct AssetSpec {
    initial_price: f64,
    brownian_vol: f64,
    jump_vol: Vec<f64>,
}

impl AssetSpec {
    pub fn new(initial_price: f64, brownian_vol: f64, jump_vol: Vec<f64>) -> Result<Self> {
        if !(initial_price.is_finite() && initial_price > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "initial price must be positive, got {initial_price}"
            )));
        }
        if !brownian_vol.is_finite() {
            return Err(Error::InvalidParameter(
                "brownian volatility must be finite".into(),
            ));
        }
        if let Some(k) = jump_vol.iter().position(|&s| !(s > -1.0 && s.is_finite())) {
            return Err(Error::InvalidParameter(format!(
                "jump volatility at atom {k} must be finite and exceed -1"
            )));
        }
        Ok(Self {
            initial_price,
            brownian_vol,
            jump_vol,
        })
    }

    pub fn initial_price(&self) -> f64 {
        self.initial_price
    }

    pub fn brownian_vol(&self) -> f64 {
        self.brownian_vol
    }

    pub fn jump_vol(&self) -> &[f64] {
        &self.jump_vol
    }

    pub fn n_atoms(&self) -> usize {
        self.jump_vol.len()
    }

    pub fn with_initial_price(&self, initial_price: f64) -> Result<Self> {
        Self::new(initial_price, self.brownian_vol, self.jump_vol.clone())
    }

    /// `log(1 + Σ(x_k))`.
    pub fn log_jump_vol(&self) -> Vec<f64> {
        self.jump_vol.iter().map(|s| s.ln_1p()).collect()
    }

    /// Driftless proportional coefficients, i.e. natural-unit dynamics.
    pub fn martingale_coefficients(&self) -> SymmetricCoefficients {
        SymmetricCoefficients {
            drift: 0.0,
            brownian_vol: self.brownian_vol,
            jump_vol: self.jump_vol.clone(),
        }
    }

    pub(crate) fn check_measure(&self, measure: &LevyMeasure) -> Result<()> {
        check_len(
            "asset jump volatilities",
            measure.len(),
            self.jump_vol.len(),
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssetDoc {
    initial_price: f64,
    brownian_vol: f64,
    jump_vol: Vec<f64>,
}

impl TryFrom<AssetDoc> for AssetSpec {
    type Error = Error;

    fn try_from(d: AssetDoc) -> Result<Self> {
        Self::new(d.initial_price, d.brownian_vol, d.jump_vol)
    }
}

impl From<AssetSpec> for AssetDoc {
    fn from(a: AssetSpec) -> Self {
        AssetDoc {
            initial_price: a.initial_price,
            brownian_vol: a.brownian_vol,
            jump_vol: a.jump_vol,
        }
    }
}

/// Geometric Lévy asset `S_0 exp(σ W_t - σ²t/2 + β X_t - t ∫(e^{βx} - 1) ν(dx))`
/// where `X` is the compound Poisson process of the measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometricBernoulliSpec {
    pub initial_price: f64,
    pub brownian_vol: f64,
    pub jump_exponent: f64,
}

impl GeometricBernoulliSpec {
    pub fn new(initial_price: f64, brownian_vol: f64, jump_exponent: f64) -> Self {
        Self {
            initial_price,
            brownian_vol,
            jump_exponent,
        }
    }

    /// Jump volatilities `Σ(x_k) = exp(β x_k) - 1` over the atoms of `measure`.
    pub fn to_asset(&self, measure: &LevyMeasure) -> Result<AssetSpec> {
        let jump_vol = measure
            .locations()
            .map(|x| (self.jump_exponent * x).exp_m1())
            .collect();
        AssetSpec::new(self.initial_price, self.brownian_vol, jump_vol)
    }
}

/// Closed-form pricing kernel path with `π_0 = 1`.
pub fn kernel_path(
    kernel: &PricingKernelSpec,
    measure: &LevyMeasure,
    noise: &NoiseRealization,
    grid: &TimeGrid,
) -> Result<PathSeries> {
    kernel.check_measure(measure)?;
    check_len("noise steps", grid.steps(), noise.steps())?;
    let kappa = kernel.kappa();
    let lambda = kernel.brownian_mpr;
    // -∫(e^{-κ} - 1 + κ) ν(dx), per unit time
    let jump_drift: f64 = -measure
        .intensities()
        .zip(&kappa)
        .map(|(w, k)| ((-k).exp() - 1.0 + k) * w)
        .sum::<f64>();
    let kappa_comp: f64 = measure.intensities().zip(&kappa).map(|(w, k)| k * w).sum();
    let rate = -kernel.short_rate - 0.5 * lambda * lambda + jump_drift + kappa_comp;

    let mut values = Vec::with_capacity(grid.steps() + 1);
    let mut left_limits = Vec::with_capacity(grid.steps());
    values.push(1.0);
    let mut w = 0.0;
    let mut jump_log = 0.0;
    for (i, dw) in noise.brownian_increments().iter().enumerate() {
        w += dw;
        let base = rate * grid.time(i + 1) - lambda * w;
        left_limits.push((base + jump_log).exp());
        jump_log -= noise
            .events(i)
            .iter()
            .map(|e| f64::from(e.count) * kappa[e.atom])
            .sum::<f64>();
        values.push((base + jump_log).exp());
    }
    Ok(PathSeries {
        values,
        left_limits,
    })
}

/// Proportional dynamics of the benchmark `ξ = 1/π`.
pub fn benchmark_coefficients(
    kernel: &PricingKernelSpec,
    measure: &LevyMeasure,
) -> Result<SymmetricCoefficients> {
    kernel.check_measure(measure)?;
    let lambda = kernel.brownian_mpr;
    let jump_vol: Vec<f64> = kernel.jump_mpr.iter().map(|l| l / (1.0 - l)).collect();
    let drift =
        kernel.short_rate + lambda * lambda + measure.weighted_dot(&kernel.jump_mpr, &jump_vol);
    Ok(SymmetricCoefficients {
        drift,
        brownian_vol: lambda,
        jump_vol,
    })
}

/// Domestic volatilities to natural ones.
pub fn to_natural(asset: &AssetSpec, kernel: &PricingKernelSpec) -> Result<AssetSpec> {
    check_len("kernel atoms", asset.n_atoms(), kernel.jump_mpr.len())?;
    let jump_vol = asset
        .jump_vol
        .iter()
        .zip(&kernel.jump_mpr)
        .map(|(s, l)| s * (1.0 - l) - l)
        .collect();
    AssetSpec::new(
        asset.initial_price,
        asset.brownian_vol - kernel.brownian_mpr,
        jump_vol,
    )
}

/// Natural volatilities back to domestic ones.
pub fn from_natural(asset: &AssetSpec, kernel: &PricingKernelSpec) -> Result<AssetSpec> {
    check_len("kernel atoms", asset.n_atoms(), kernel.jump_mpr.len())?;
    let jump_vol = asset
        .jump_vol
        .iter()
        .zip(&kernel.jump_mpr)
        .map(|(s, l)| (s + l) / (1.0 - l))
        .collect();
    AssetSpec::new(
        asset.initial_price,
        asset.brownian_vol + kernel.brownian_mpr,
        jump_vol,
    )
}

/// Domestic drift `r + λσ + ∫ Λ(x) Σ(x) ν(dx)` of a (domestic) asset.
pub fn domestic_drift(
    asset: &AssetSpec,
    kernel: &PricingKernelSpec,
    measure: &LevyMeasure,
) -> Result<f64> {
    asset.check_measure(measure)?;
    kernel.check_measure(measure)?;
    Ok(kernel.short_rate
        + kernel.brownian_mpr * asset.brownian_vol
        + measure.weighted_dot(&kernel.jump_mpr, &asset.jump_vol))
}

/// Proportional domestic dynamics of `asset` under `kernel`.
pub fn domestic_coefficients(
    asset: &AssetSpec,
    kernel: &PricingKernelSpec,
    measure: &LevyMeasure,
) -> Result<SymmetricCoefficients> {
    Ok(SymmetricCoefficients {
        drift: domestic_drift(asset, kernel, measure)?,
        brownian_vol: asset.brownian_vol,
        jump_vol: asset.jump_vol.clone(),
    })
}

/// Exact natural price path of a driftless geometric asset.
pub fn geometric_price_path(
    asset: &AssetSpec,
    measure: &LevyMeasure,
    noise: &NoiseRealization,
    grid: &TimeGrid,
) -> Result<PathSeries> {
    asset.check_measure(measure)?;
    geometric_path(
        &asset.martingale_coefficients(),
        measure,
        noise,
        grid,
        asset.initial_price,
    )
}

/// Euler path of the same natural dynamics, `dS = S_{t-}[σ dW + ∫Σ Ñ]`.
///
/// Increments are linear in the noise, so hedges that match the volatility
/// coefficients cancel risk exactly step by step.
pub fn euler_price_path(
    asset: &AssetSpec,
    measure: &LevyMeasure,
    noise: &NoiseRealization,
    grid: &TimeGrid,
) -> Result<PathSeries> {
    asset.check_measure(measure)?;
    let coeffs = asset.martingale_coefficients();
    integrate(
        &Proportional(&coeffs),
        measure,
        noise,
        grid,
        asset.initial_price,
    )
}

/// Compensator of the asset jump volatility, `∫ Σ(x) ν(dx)`.
pub fn jump_compensator(asset: &AssetSpec, measure: &LevyMeasure) -> Result<f64> {
    compensate(measure, &asset.jump_vol)
}
