use std::path::{Path, PathBuf};

use levy_hedge::sim::{builtin_scenario, Scenario};
use levy_hedge::TimeGrid;
use serde::{Deserialize, Serialize};

use crate::exit::Failure;

pub const SCHEMA_VERSION: u32 = 1;

/// On-disk run configuration. Exactly one of `builtin` and `scenario` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<Scenario>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
    #[serde(default)]
    pub verbosity: u8,
}

/// Command-line overrides applied on top of a config.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub paths: Option<usize>,
    pub steps: Option<usize>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn builtin(name: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            builtin: Some(name.to_string()),
            scenario: None,
            out_dir: None,
            verbosity: 0,
        }
    }

    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("reading {}: {e}", path.display())))?;
        let cfg: Self = serde_json::from_str(&text)
            .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(Failure::Config(format!(
                "unsupported schema_version {}, expected {SCHEMA_VERSION}",
                cfg.schema_version
            )));
        }
        Ok(cfg)
    }

    /// Resolves the scenario and applies overrides. The result, serialized
    /// with [`RunConfig::effective`], reproduces the run on its own.
    pub fn resolve(&self, o: &Overrides) -> Result<(Scenario, Option<PathBuf>), Failure> {
        let mut s = match (&self.builtin, &self.scenario) {
            (Some(name), None) => builtin_scenario(name)?,
            (None, Some(s)) => s.clone(),
            _ => {
                return Err(Failure::Config(
                    "config needs exactly one of `builtin` and `scenario`".into(),
                ))
            }
        };
        if let Some(seed) = o.seed {
            s.seed = seed;
        }
        if let Some(paths) = o.paths {
            s.n_paths = paths;
        }
        if let Some(steps) = o.steps {
            s.grid = TimeGrid::new(s.grid.horizon(), steps)?;
        }
        s.validate()?;
        Ok((s, o.out.clone().or_else(|| self.out_dir.clone())))
    }

    pub fn effective(&self, scenario: &Scenario, out_dir: Option<PathBuf>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            builtin: None,
            scenario: Some(scenario.clone()),
            out_dir,
            verbosity: self.verbosity,
        }
    }
}
