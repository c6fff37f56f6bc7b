//! Run configuration for batch commands.

use serde::{Deserialize, Serialize};

/// Environment variable naming a JSON config file to load defaults from.
pub const CONFIG_ENV_VAR: &str = "FUNCTOWER_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Tsv,
    Pretty,
}

/// Defaults for grid-shaped commands; command-line flags override fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub default_order: u32,
    /// Inclusive range of ambient dimensions for grid commands.
    pub n_range: (u32, u32),
    /// Inclusive range of point counts / layer indices for grid commands.
    pub k_range: (u32, u32),
    pub output_format: OutputFormat,
    pub parallelism: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            default_order: 12,
            n_range: (1, 5),
            k_range: (2, 12),
            output_format: OutputFormat::Pretty,
            parallelism: 4,
        }
    }
}

impl RunConfig {
    /// Loads the file named by `FUNCTOWER_CONFIG` when set, otherwise the
    /// defaults. A malformed or unreadable file is an error.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(CONFIG_ENV_VAR) {
            Err(_) => Ok(RunConfig::default()),
            Ok(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read config file {path}: {e}"))?;
                let config: RunConfig = serde_json::from_str(&text)
                    .map_err(|e| format!("malformed config file {path}: {e}"))?;
                config.validate()?;
                Ok(config)
            }
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.default_order < 2 {
            return Err("default_order must be at least 2".into());
        }
        if self.n_range.0 > self.n_range.1 || self.n_range.0 < 1 {
            return Err("n_range must be a non-empty range of positive integers".into());
        }
        if self.k_range.0 > self.k_range.1 || self.k_range.0 < 1 {
            return Err("k_range must be a non-empty range of positive integers".into());
        }
        if self.parallelism < 1 {
            return Err("parallelism must be positive".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn partial_json_fills_defaults() {
        let c: RunConfig = serde_json::from_str(r#"{"default_order": 8}"#).unwrap();
        assert_eq!(c.default_order, 8);
        assert_eq!(c.k_range, (2, 12));
    }

    #[test]
    fn bad_ranges_rejected() {
        let c: RunConfig = serde_json::from_str(r#"{"n_range": [4, 2]}"#).unwrap();
        assert!(c.validate().is_err());
    }
}
