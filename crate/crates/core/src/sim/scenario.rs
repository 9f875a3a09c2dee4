use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levy::{LevyMeasure, TimeGrid};
use crate::market::{to_natural, AssetSpec, GeometricBernoulliSpec, PricingKernelSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HedgeMode {
    None,
    /// Optimal hedge with one asset, by index.
    Single(usize),
    /// Closed-form optimal hedge with the first two assets.
    TwoAsset,
    /// Gram-system hedge with every asset.
    Multi,
}

/// How price paths are generated from the shared noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathScheme {
    /// Proportional Euler steps; returns are linear in the noise increments,
    /// so complete-market hedges cancel exactly on the grid.
    #[default]
    Euler,
    /// Closed-form exponential evaluation.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub measure: LevyMeasure,
    /// When present, contract and asset specs are domestic and are converted
    /// to natural units before hedging.
    #[serde(default)]
    pub kernel: Option<PricingKernelSpec>,
    pub contract: GeometricBernoulliSpec,
    pub hedging_assets: Vec<GeometricBernoulliSpec>,
    pub grid: TimeGrid,
    pub n_paths: usize,
    pub seed: u64,
    pub hedge_mode: HedgeMode,
    #[serde(default)]
    pub scheme: PathScheme,
}

pub const BUILTIN_SCENARIOS: [&str; 5] = ["fig1", "fig2a", "fig2b", "fig3", "fig4"];

pub const DEFAULT_SEED: u64 = 20_240_517;
pub const DEFAULT_PATHS: usize = 1000;

/// Bernoulli jump-diffusion experiments: `m = 15`, `p = 0.5`, marks `±1`,
/// `T = 1` on a thousand steps, all prices starting at 100.
pub fn builtin_scenario(name: &str) -> Result<Scenario> {
    let (mode, vols) = match name {
        "fig1" => (HedgeMode::None, [0.20, 0.10, 0.15]),
        "fig2a" => (HedgeMode::Single(0), [0.20, 0.10, 0.15]),
        "fig2b" => (HedgeMode::Single(1), [0.20, 0.10, 0.15]),
        "fig3" => (HedgeMode::TwoAsset, [0.20, 0.10, 0.15]),
        "fig4" => (HedgeMode::TwoAsset, [0.003, 0.001, 0.002]),
        other => return Err(Error::UnknownScenario(other.to_string())),
    };
    let [s1, s2, sc] = vols;
    Ok(Scenario {
        name: name.to_string(),
        measure: LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0)?,
        kernel: None,
        contract: GeometricBernoulliSpec::new(100.0, sc, 0.25),
        hedging_assets: vec![
            GeometricBernoulliSpec::new(100.0, s1, 0.30),
            GeometricBernoulliSpec::new(100.0, s2, 0.20),
        ],
        grid: TimeGrid::new(1.0, 1000)?,
        n_paths: DEFAULT_PATHS,
        seed: DEFAULT_SEED,
        hedge_mode: mode,
        scheme: PathScheme::Euler,
    })
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        if self.n_paths == 0 {
            return Err(Error::InvalidParameter("n_paths must be at least 1".into()));
        }
        let n = self.hedging_assets.len();
        let ok = match self.hedge_mode {
            HedgeMode::None => true,
            HedgeMode::Single(i) => i < n,
            HedgeMode::TwoAsset => n >= 2,
            HedgeMode::Multi => n >= 1,
        };
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "hedge mode {:?} needs more than {n} hedging assets",
                self.hedge_mode
            )));
        }
        if let Some(k) = &self.kernel {
            if k.jump_mpr().len() != self.measure.len() {
                return Err(Error::InvalidParameter(
                    "kernel jump prices of risk must match the measure atoms".into(),
                ));
            }
        }
        self.natural_contract()?;
        self.natural_assets()?;
        Ok(())
    }

    fn natural(&self, spec: &GeometricBernoulliSpec) -> Result<AssetSpec> {
        let asset = spec.to_asset(&self.measure)?;
        match &self.kernel {
            Some(k) => to_natural(&asset, k),
            None => Ok(asset),
        }
    }

    pub fn natural_contract(&self) -> Result<AssetSpec> {
        self.natural(&self.contract)
    }

    pub fn natural_assets(&self) -> Result<Vec<AssetSpec>> {
        self.hedging_assets
            .iter()
            .map(|a| self.natural(a))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_parameters() {
        let f1 = builtin_scenario("fig1").unwrap();
        assert_eq!(
            f1.measure,
            LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0).unwrap()
        );
        assert_eq!(f1.grid.horizon(), 1.0);
        assert_eq!(f1.grid.steps(), 1000);
        assert_eq!(f1.hedge_mode, HedgeMode::None);
        assert_eq!(f1.contract, GeometricBernoulliSpec::new(100.0, 0.15, 0.25));

        let f3 = builtin_scenario("fig3").unwrap();
        assert_eq!(f3.hedge_mode, HedgeMode::TwoAsset);
        assert_eq!(f3.hedging_assets[0].brownian_vol, 0.20);
        assert_eq!(f3.hedging_assets[1].brownian_vol, 0.10);
        assert_eq!(f3.contract.brownian_vol, 0.15);

        let f4 = builtin_scenario("fig4").unwrap();
        assert_eq!(f4.hedging_assets[0].brownian_vol, 0.003);
        assert_eq!(f4.hedging_assets[1].brownian_vol, 0.001);
        assert_eq!(f4.contract.brownian_vol, 0.002);
        assert_eq!(f4.hedging_assets[0].jump_exponent, 0.30);
        assert_eq!(f4.hedging_assets[1].jump_exponent, 0.20);
        assert_eq!(f4.measure, f3.measure);

        assert_eq!(
            builtin_scenario("fig2a").unwrap().hedge_mode,
            HedgeMode::Single(0)
        );
        assert_eq!(
            builtin_scenario("fig2b").unwrap().hedge_mode,
            HedgeMode::Single(1)
        );
        assert!(matches!(
            builtin_scenario("fig9"),
            Err(Error::UnknownScenario(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = builtin_scenario("fig2b").unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: Scenario = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn validation() {
        let mut s = builtin_scenario("fig3").unwrap();
        s.hedge_mode = HedgeMode::Single(2);
        assert!(s.validate().is_err());
        s.hedge_mode = HedgeMode::Multi;
        s.n_paths = 0;
        assert!(s.validate().is_err());
    }
}
