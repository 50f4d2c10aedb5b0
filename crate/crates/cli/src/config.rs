//! Run configuration: a single JSON document; command-line flags override
//! individual fields. Unknown keys are rejected.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub lattice: LatticeConfig,
    #[serde(default)]
    pub window: WindowSpec,
    #[serde(default)]
    pub envelope: EnvelopeConfig,
    #[serde(default)]
    pub admm: AdmmSection,
    #[serde(default)]
    pub eval: EvalConfig,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    /// Worker threads for independent design runs; `None` uses one thread.
    #[serde(default)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeConfig {
    pub a: usize,
    #[serde(rename = "M")]
    pub channels: usize,
    /// Ambient length; `None` picks the smallest length compatible with the
    /// lattice that holds the window (and any input signals).
    #[serde(rename = "L", default)]
    pub ambient_len: Option<usize>,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        Self { a: 128, channels: 256, ambient_len: None }
    }
}

/// How to obtain a window: a generated family or a file on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowSpec {
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default = "default_support", rename = "K")]
    pub support: usize,
    #[serde(default)]
    pub alpha: Option<f64>,
    #[serde(default)]
    pub path: Option<PathBuf>,
    /// Normalize energy to `a/M` after generation or load.
    #[serde(default = "default_true")]
    pub normalize: bool,
    /// Evaluate the canonical tight variant of this window (recomputed at
    /// each lattice it is used on).
    #[serde(default)]
    pub tight: bool,
    #[serde(default)]
    pub name: Option<String>,
}

fn default_support() -> usize {
    256
}

fn default_true() -> bool {
    true
}

impl Default for WindowSpec {
    fn default() -> Self {
        Self {
            family: Some("hann".to_string()),
            support: 256,
            alpha: None,
            path: None,
            normalize: true,
            tight: false,
            name: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct EnvelopeConfig {
    /// Padded DFT length for the response ceiling; `None` means `16 K`.
    #[serde(default, rename = "K_tilde")]
    pub k_tilde: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdmmSection {
    #[serde(default)]
    pub beta: Option<f64>,
    #[serde(default)]
    pub beta_grid: Option<Vec<f64>>,
    #[serde(default = "default_one")]
    pub mu: f64,
    #[serde(default = "default_one")]
    pub lambda: f64,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
    #[serde(default)]
    pub tol_primal: Option<f64>,
    #[serde(default = "default_tol_change")]
    pub tol_change: f64,
}

fn default_one() -> f64 {
    1.0
}

fn default_max_iter() -> usize {
    2000
}

fn default_tol_change() -> f64 {
    1e-10
}

impl Default for AdmmSection {
    fn default() -> Self {
        Self {
            beta: None,
            beta_grid: None,
            mu: 1.0,
            lambda: 1.0,
            max_iter: default_max_iter(),
            tol_primal: None,
            tol_change: default_tol_change(),
        }
    }
}

impl AdmmSection {
    /// The β grid to run: `beta_grid` if set, else the single `beta`,
    /// else `[1]`.
    pub fn betas(&self) -> Result<Vec<f64>> {
        let grid = match (&self.beta_grid, self.beta) {
            (Some(grid), _) => grid.clone(),
            (None, Some(beta)) => vec![beta],
            (None, None) => vec![1.0],
        };
        if grid.is_empty() {
            bail!("beta grid is empty");
        }
        Ok(grid)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalConfig {
    #[serde(default)]
    pub snr_db: f64,
    /// `ideal_wiener` or `dd_wiener`.
    #[serde(default = "default_mask")]
    pub mask: String,
    #[serde(default = "default_dd_alpha")]
    pub dd_alpha: f64,
    /// `oracle`, `first_frames`, or `supplied`.
    #[serde(default = "default_psd_mode")]
    pub psd_mode: String,
    /// Per-channel noise PSD file (one value per line) for `supplied`.
    #[serde(default)]
    pub psd_file: Option<PathBuf>,
    /// Input audio/CSV paths; empty means fixtures.
    #[serde(default)]
    pub inputs: Vec<PathBuf>,
    /// Seeds of the synthetic fixture corpus used when `inputs` is empty.
    #[serde(default)]
    pub fixture_seeds: Vec<u64>,
    #[serde(default = "default_fixture_len")]
    pub fixture_len: usize,
    /// Base seed for the per-signal noise draws.
    #[serde(default = "default_noise_seed")]
    pub noise_seed_base: u64,
    /// Hop sizes for `sweep`.
    #[serde(default)]
    pub hops: Vec<usize>,
    /// Additional windows evaluated by `sweep` (besides `window`).
    #[serde(default)]
    pub windows: Vec<WindowSpec>,
    /// Write enhanced signals as WAV next to the records.
    #[serde(default)]
    pub write_audio: bool,
    #[serde(default = "default_sample_rate")]
    pub sample_rate: u32,
}

fn default_mask() -> String {
    "ideal_wiener".to_string()
}

fn default_dd_alpha() -> f64 {
    0.98
}

fn default_psd_mode() -> String {
    "oracle".to_string()
}

fn default_fixture_len() -> usize {
    3072
}

fn default_noise_seed() -> u64 {
    9000
}

fn default_sample_rate() -> u32 {
    16000
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            snr_db: 0.0,
            mask: default_mask(),
            dd_alpha: default_dd_alpha(),
            psd_mode: default_psd_mode(),
            psd_file: None,
            inputs: Vec::new(),
            fixture_seeds: Vec::new(),
            fixture_len: default_fixture_len(),
            noise_seed_base: default_noise_seed(),
            hops: Vec::new(),
            windows: Vec::new(),
            write_audio: false,
            sample_rate: default_sample_rate(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: RunConfig = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        Ok(config)
    }

    /// The fully resolved document embedded in every output for provenance.
    pub fn to_value(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(self)?)
    }
}
