//! Experiment configuration: JSON format, defaults, and validation with
//! path-to-field diagnostics.

use serde::{Deserialize, Serialize};

use hpsim::protocol::{make_layout, Model, NoiseScope, Placement, ProtocolLayout};

pub const DEFAULT_DT_ISING: f64 = 0.1;
pub const DEFAULT_DT_YM: f64 = 0.5;

/// Placement field: a named default or explicit site lists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PlacementConfig {
    Named(String),
    Explicit {
        a_sites: Vec<usize>,
        d_sites: Vec<usize>,
    },
}

fn default_scope() -> NoiseScope {
    NoiseScope::AllCnots
}

fn default_n_traj() -> usize {
    1000
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub model: Model,
    pub n: usize,
    pub n_a: usize,
    pub n_d: usize,
    #[serde(default)]
    pub placement: Option<PlacementConfig>,
    /// Transverse field (ising).
    #[serde(default)]
    pub h: Option<f64>,
    /// Longitudinal field (ising).
    #[serde(default)]
    pub m: Option<f64>,
    /// Coupling (ym).
    #[serde(default)]
    pub k: Option<f64>,
    /// Trotter step; defaults to 0.1 (ising) or 0.5 (ym).
    #[serde(default)]
    pub dt: Option<f64>,
    /// Forces the Trotter step count per grid point, overriding `dt`.
    #[serde(default)]
    pub m_steps: Option<usize>,
    pub t_grid: Vec<f64>,
    #[serde(default)]
    pub p: f64,
    #[serde(default = "default_scope")]
    pub scope: NoiseScope,
    #[serde(default = "default_n_traj")]
    pub n_traj: usize,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config field `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError {
        field: field.to_string(),
        message: message.into(),
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: ExperimentConfig =
            serde_json::from_str(text).map_err(|e| err("<root>", e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_a == 0 || self.n_a > self.n {
            return Err(err("n_a", format!("must satisfy 1 <= n_a <= n = {}", self.n)));
        }
        if self.n_d == 0 || self.n_d > self.n {
            return Err(err("n_d", format!("must satisfy 1 <= n_d <= n = {}", self.n)));
        }
        if self.t_grid.is_empty() {
            return Err(err("t_grid", "must be nonempty"));
        }
        if self.t_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err("t_grid", "must be strictly increasing"));
        }
        if self.t_grid[0] < 0.0 {
            return Err(err("t_grid", "times must be nonnegative"));
        }
        if let Some(dt) = self.dt {
            if dt <= 0.0 {
                return Err(err("dt", "must be positive"));
            }
        }
        if let Some(m) = self.m_steps {
            if m == 0 {
                return Err(err("m_steps", "must be positive"));
            }
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(err("p", format!("{} is outside [0, 1]", self.p)));
        }
        if self.model == Model::Ym && self.k.map(|k| k < 0.0).unwrap_or(false) {
            return Err(err("k", "must be nonnegative"));
        }
        if let Some(PlacementConfig::Named(name)) = &self.placement {
            if name != "ising_default" && name != "ym_default" {
                return Err(err(
                    "placement",
                    format!("unknown placement `{name}` (expected ising_default, ym_default, or explicit site lists)"),
                ));
            }
        }
        // layout construction catches out-of-range explicit sites
        self.layout().map(|_| ())
    }

    /// Effective Trotter step.
    pub fn dt(&self) -> f64 {
        self.dt.unwrap_or(match self.model {
            Model::Ym => DEFAULT_DT_YM,
            _ => DEFAULT_DT_ISING,
        })
    }

    /// Effective Ising couplings.
    pub fn ising_fields(&self) -> (f64, f64) {
        (self.h.unwrap_or(0.0), self.m.unwrap_or(0.0))
    }

    pub fn placement(&self) -> Placement {
        match &self.placement {
            Some(PlacementConfig::Named(name)) if name == "ym_default" => Placement::YmDefault,
            Some(PlacementConfig::Named(_)) => Placement::IsingDefault,
            Some(PlacementConfig::Explicit { a_sites, d_sites }) => Placement::Explicit {
                a_sites: a_sites.clone(),
                d_sites: d_sites.clone(),
            },
            None => match self.model {
                Model::Ym => Placement::YmDefault,
                _ => Placement::IsingDefault,
            },
        }
    }

    pub fn layout(&self) -> Result<ProtocolLayout, ConfigError> {
        make_layout(self.n, self.n_a, self.n_d, self.placement())
            .map_err(|e| err("placement", e.to_string()))
    }

    /// Trotter step count for one grid time; `None` for t = 0.
    pub fn steps_for(&self, t: f64) -> Option<usize> {
        if t == 0.0 {
            return None;
        }
        Some(
            self.m_steps
                .unwrap_or_else(|| ((t / self.dt()).round() as usize).max(1)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> &'static str {
        r#"{"model":"ising","n":4,"n_a":1,"n_d":2,"h":-1.05,"m":0.5,
            "t_grid":[0.5,1.0],"p":0.01,"n_traj":10,"seed":7}"#
    }

    #[test]
    fn parses_and_fills_defaults() {
        let cfg = ExperimentConfig::from_json(base()).unwrap();
        assert_eq!(cfg.dt(), DEFAULT_DT_ISING);
        assert_eq!(cfg.scope, NoiseScope::AllCnots);
        assert_eq!(cfg.steps_for(1.0), Some(10));
        assert_eq!(cfg.steps_for(0.0), None);
        assert_eq!(cfg.placement(), Placement::IsingDefault);
    }

    #[test]
    fn rejects_bad_fields_with_diagnostics() {
        let bad_p = base().replace("0.01", "1.5");
        let e = ExperimentConfig::from_json(&bad_p).unwrap_err();
        assert_eq!(e.field, "p");

        let bad_grid = base().replace("[0.5,1.0]", "[1.0,0.5]");
        assert_eq!(ExperimentConfig::from_json(&bad_grid).unwrap_err().field, "t_grid");

        let bad_nd = base().replace("\"n_d\":2", "\"n_d\":9");
        assert_eq!(ExperimentConfig::from_json(&bad_nd).unwrap_err().field, "n_d");
    }

    #[test]
    fn explicit_placement_parses() {
        let text = r#"{"model":"haar","n":4,"n_a":1,"n_d":1,
            "placement":{"a_sites":[1],"d_sites":[3]},"t_grid":[0.0]}"#;
        let cfg = ExperimentConfig::from_json(text).unwrap();
        assert_eq!(cfg.layout().unwrap().a_sites(), &[1]);
    }
}
