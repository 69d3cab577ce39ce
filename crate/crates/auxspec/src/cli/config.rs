//! JSON run configuration: `--config PATH` or the `AUXSPEC_CONFIG`
//! environment variable. Command-line flags override file values.

use serde::Deserialize;
use std::path::PathBuf;

pub const CONFIG_ENV: &str = "AUXSPEC_CONFIG";

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Coarsest oracle mesh (interior points).
    pub mesh_size: Option<usize>,
    /// Oracle domain cutoff override (auto-sized when absent).
    pub domain_cutoff: Option<f64>,
    /// Significant digits for printed values.
    pub digits: Option<usize>,
    /// λ sample grid used by `fit --grid default`.
    pub lambda_grid: Option<Vec<f64>>,
    /// Relative tolerance for the scaling-constraint check.
    pub scaling_tolerance: Option<f64>,
}

impl RunConfig {
    /// Load from the explicit flag, else the environment, else defaults.
    pub fn load(flag: Option<&PathBuf>) -> Result<Self, String> {
        let path = match flag {
            Some(p) => Some(p.clone()),
            None => std::env::var_os(CONFIG_ENV).map(PathBuf::from),
        };
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("cannot parse config {}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_partial_config() {
        let cfg: RunConfig = serde_json::from_str(r#"{ "mesh_size": 2048, "digits": 8 }"#).unwrap();
        assert_eq!(cfg.mesh_size, Some(2048));
        assert_eq!(cfg.digits, Some(8));
        assert!(cfg.lambda_grid.is_none());
    }

    #[test]
    fn rejects_unknown_fields() {
        let out: Result<RunConfig, _> = serde_json::from_str(r#"{ "mesh": 10 }"#);
        assert!(out.is_err());
    }
}
