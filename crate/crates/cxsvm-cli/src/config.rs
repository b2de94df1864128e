//! Versioned experiment configurations with the benchmark defaults.

use crate::{CliError, Result};
use cxsvm::datasets::{BlobConfig, ChannelConfig, SincGridConfig};
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

pub const CONFIG_SCHEMA: u32 = 1;

/// SHA-256 of the canonical config JSON, stamped into every emitted CSV.
pub fn config_hash<T: Serialize>(cfg: &T) -> String {
    let json = serde_json::to_string(cfg).expect("config serializes");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Standard comment lines for emitted CSVs.
pub fn csv_comments<T: Serialize>(cfg: &T) -> Vec<String> {
    vec![
        format!("schema={CONFIG_SCHEMA}"),
        format!("config_sha256={}", config_hash(cfg)),
    ]
}

pub fn load_config<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Config(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn check_schema(schema: u32) -> Result<()> {
    if schema != CONFIG_SCHEMA {
        return Err(CliError::Config(format!(
            "unsupported schema {schema} (expected {CONFIG_SCHEMA})"
        )));
    }
    Ok(())
}

/// Solver knobs shared by the experiments.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct SolveOpts {
    pub epsilon: f64,
    pub kkt_tol: f64,
    pub max_passes: usize,
}

impl Default for SolveOpts {
    fn default() -> Self {
        SolveOpts {
            epsilon: 0.1,
            kkt_tol: 1e-3,
            max_passes: 0,
        }
    }
}

/// Sinc grid regression: CSVR (complex Gaussian) vs DRC (real Gaussian) with
/// the tuned kernel parameters.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SincExpConfig {
    pub schema: u32,
    pub grid: SincGridConfig,
    /// One run per seed; `grid.seed` is overridden by each entry.
    pub seeds: Vec<u64>,
    pub csvr_t: f64,
    pub drc_t: f64,
    pub c: f64,
    #[serde(default)]
    pub solve: SolveOpts,
}

impl Default for SincExpConfig {
    fn default() -> Self {
        SincExpConfig {
            schema: CONFIG_SCHEMA,
            grid: SincGridConfig::paper_default(1),
            seeds: vec![1, 2, 3, 4, 5],
            csvr_t: 0.25,
            drc_t: 4.0,
            c: 1000.0,
            solve: SolveOpts::default(),
        }
    }
}

/// Channel identification / equalization sweep over the (C, t) grids.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ChannelExpConfig {
    pub schema: u32,
    pub channel: ChannelConfig,
    pub seeds: Vec<u64>,
    pub c_values: Vec<f64>,
    pub csvr_t_values: Vec<f64>,
    pub drc_t_values: Vec<f64>,
    #[serde(default)]
    pub solve: SolveOpts,
}

fn inv_sq(values: &[f64]) -> Vec<f64> {
    values.iter().map(|s| 1.0 / (s * s)).collect()
}

impl ChannelExpConfig {
    /// Identification protocol with the tuned per-C kernel grids
    /// (t = 1/k² for k in the tables).
    pub fn identification_default() -> Self {
        ChannelExpConfig {
            schema: CONFIG_SCHEMA,
            channel: ChannelConfig::identification_default(1),
            seeds: vec![1, 2, 3, 4, 5],
            c_values: vec![1000.0, 2000.0, 5000.0, 10000.0, 20000.0, 50000.0],
            csvr_t_values: inv_sq(&[6.0, 8.0, 9.0, 11.0, 13.0]),
            drc_t_values: inv_sq(&[4.0, 5.0, 6.0, 7.0, 10.0]),
            solve: SolveOpts::default(),
        }
    }

    /// Equalization protocol (L = 5, D = 2, source scale 0.30).
    pub fn equalization_default() -> Self {
        ChannelExpConfig {
            schema: CONFIG_SCHEMA,
            channel: ChannelConfig::equalization_default(1),
            seeds: vec![1, 2, 3, 4, 5],
            c_values: vec![1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 200.0, 500.0, 1000.0],
            csvr_t_values: inv_sq(&[2.5, 3.0, 4.5, 5.5, 6.0, 7.0, 9.0]),
            drc_t_values: inv_sq(&[1.5, 1.75, 2.25, 2.5, 3.0, 5.0, 7.0, 7.5]),
            solve: SolveOpts::default(),
        }
    }
}

/// Separable quaternary benchmark: CSVM (2 dual solves) vs a one-versus-all
/// baseline (4 dual solves) on the same blobs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct QuaternaryExpConfig {
    pub schema: u32,
    pub centers: [(f64, f64); 4],
    pub n_train_per_class: usize,
    pub n_test_per_class: usize,
    pub spreads: Vec<f64>,
    pub seeds: Vec<u64>,
    pub t: f64,
    pub c: f64,
    #[serde(default)]
    pub kkt_tol: f64,
    #[serde(default)]
    pub max_passes: usize,
}

impl Default for QuaternaryExpConfig {
    fn default() -> Self {
        QuaternaryExpConfig {
            schema: CONFIG_SCHEMA,
            centers: [(2.0, 2.0), (2.0, -2.0), (-2.0, 2.0), (-2.0, -2.0)],
            n_train_per_class: 40,
            n_test_per_class: 25,
            spreads: vec![0.3, 1.0],
            seeds: vec![1, 2, 3, 4, 5],
            t: 0.5,
            c: 100.0,
            kkt_tol: 1e-3,
            max_passes: 0,
        }
    }
}

impl QuaternaryExpConfig {
    pub fn train_blobs(&self, spread: f64, seed: u64) -> BlobConfig {
        BlobConfig {
            centers: self.centers,
            spread,
            n_per_class: self.n_train_per_class,
            seed,
        }
    }

    pub fn test_blobs(&self, spread: f64, seed: u64) -> BlobConfig {
        let test_seed = cxsvm::rng::SplitRng::for_role(seed, "blob-test").next_u64();
        BlobConfig {
            centers: self.centers,
            spread,
            n_per_class: self.n_test_per_class,
            seed: test_seed,
        }
    }
}

/// Dataset-only configs for the `gen` subcommand.
#[derive(Clone, Debug, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct GenConfigFile {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sinc: Option<SincGridConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<ChannelConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blobs: Option<BlobConfig>,
}
