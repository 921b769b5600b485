use std::path::Path;

use serde::{Deserialize, Serialize};

/// Environment variable naming the configuration file.
pub const CONFIG_ENV: &str = "TIGHTLOC_CONFIG";

/// Size caps. Every field is optional in the file; missing ones keep their
/// defaults.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Largest Q for computations in the truncated ring itself.
    pub max_q_direct: u32,
    /// Largest Q for the special-matrix route.
    pub max_q_matrix: u32,
    /// Largest q accepted by `hk`.
    pub max_q_hk: u32,
    /// Largest |k_min| accepted by `cohomology`.
    pub max_kmin: u32,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_q_direct: 16,
            max_q_matrix: 256,
            max_q_hk: 64,
            max_kmin: 6,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::from_toml(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Reads the file named by [`CONFIG_ENV`], or the defaults if unset.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }
}
