//! Subcommand implementations.

pub mod analyze;
pub mod denoise;
pub mod design;
pub mod generate;
pub mod sweep;

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use neartight_core::gabor::{default_ambient_len, GaborParams};

use crate::config::RunConfig;
use crate::{CommonArgs, WindowArgs};

/// Loads the config file (or defaults) and applies common flag overrides.
pub fn load_config(common: &CommonArgs) -> Result<RunConfig> {
    let mut config = match &common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(a) = common.hop {
        config.lattice.a = a;
    }
    if let Some(m) = common.channels {
        config.lattice.channels = m;
    }
    if let Some(l) = common.ambient {
        config.lattice.ambient_len = Some(l);
    }
    if let Some(dir) = &common.out_dir {
        config.output_dir = Some(dir.clone());
    }
    Ok(config)
}

/// Applies window flag overrides onto the config's window spec.
pub fn apply_window_args(config: &mut RunConfig, args: &WindowArgs) {
    if let Some(f) = &args.family {
        config.window.family = Some(f.clone());
        config.window.path = None;
    }
    if let Some(k) = args.support {
        config.window.support = k;
    }
    if let Some(alpha) = args.alpha {
        config.window.alpha = Some(alpha);
    }
    if let Some(path) = &args.window {
        config.window.path = Some(path.clone());
        config.window.family = None;
    }
    if let Some(name) = &args.name {
        config.window.name = Some(name.clone());
    }
    if args.no_normalize {
        config.window.normalize = false;
    }
}

/// Lattice from the config, with the ambient length defaulted to the
/// smallest compatible length that holds `min_len` samples.
pub fn resolve_params(config: &RunConfig, min_len: usize) -> Result<GaborParams> {
    let lat = &config.lattice;
    let l = lat
        .ambient_len
        .unwrap_or_else(|| default_ambient_len(lat.a, lat.channels, min_len));
    let params = GaborParams::new(lat.a, lat.channels, l)?;
    if params.undersampled() {
        eprintln!(
            "warning: lattice a={} M={} is undersampled (redundancy {} < 1); it cannot be a frame",
            lat.a,
            lat.channels,
            params.redundancy()
        );
    }
    Ok(params)
}

/// Creates and returns the output directory.
pub fn ensure_out_dir(config: &RunConfig) -> Result<PathBuf> {
    let dir = config
        .output_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from("out"));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    Ok(dir)
}
