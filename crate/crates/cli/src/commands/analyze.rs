//! `analyze`: frame diagnostics and frequency response of a window file.

use std::fs;
use std::process::ExitCode;

use anyhow::{Context, Result};
use neartight_core::gabor::frame_diagnostics;
use neartight_core::io::{read_window_csv, read_window_json, WindowFile};
use neartight_core::spectral::{magnitude_db, zero_pad_dft};
use serde::Serialize;

use crate::commands::{ensure_out_dir, load_config, resolve_params};
use crate::AnalyzeArgs;

#[derive(Serialize)]
struct AnalysisFile {
    window: WindowFile,
    lower_bound: f64,
    upper_bound: f64,
    kappa: f64,
    painless: bool,
    #[serde(rename = "K_tilde")]
    k_tilde: usize,
    config: serde_json::Value,
}

pub fn run(args: AnalyzeArgs) -> Result<ExitCode> {
    let mut config = load_config(&args.common)?;

    let is_json = args
        .window
        .extension()
        .map(|e| e.eq_ignore_ascii_case("json"))
        .unwrap_or(false);
    let (window, file_lattice) = if is_json {
        let file = read_window_json(&args.window)
            .with_context(|| format!("reading {}", args.window.display()))?;
        let (w, p) = file.into_window()?;
        (w, Some(p))
    } else {
        let name = args
            .window
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "window".to_string());
        (
            read_window_csv(&args.window, &name)
                .with_context(|| format!("reading {}", args.window.display()))?,
            None,
        )
    };

    // Flags take precedence; a JSON window supplies its own lattice.
    let params = match file_lattice {
        Some(p) if args.common.hop.is_none() && args.common.channels.is_none() => p,
        _ => resolve_params(&config, window.support_len())?,
    };
    // Re-pin the window to the lattice in use.
    let window = neartight_core::Window64::new(window.name().to_string(), window.samples().to_vec())?
        .with_provenance(window.provenance().to_string())
        .with_ambient(params.signal_len())?;

    config.lattice.a = params.hop();
    config.lattice.channels = params.channels();
    config.lattice.ambient_len = Some(params.signal_len());
    let config_value = config.to_value()?;

    let diag = frame_diagnostics(&window, &params)?;
    let k_tilde = args.k_tilde.unwrap_or(16 * window.support_len());
    let spectrum = zero_pad_dft(&window, k_tilde)?;
    let db = magnitude_db(&spectrum);

    let out_dir = ensure_out_dir(&config)?;
    let analysis = AnalysisFile {
        window: WindowFile::from_window(&window, &params),
        lower_bound: diag.lower,
        upper_bound: diag.upper,
        kappa: diag.condition_number,
        painless: diag.painless,
        k_tilde,
        config: config_value.clone(),
    };
    fs::write(
        out_dir.join("analysis.json"),
        serde_json::to_string_pretty(&analysis)?,
    )?;

    let mut text = format!("# config: {}\n", serde_json::to_string(&config_value)?);
    text.push_str("bin,magnitude,db\n");
    for (bin, (z, d)) in spectrum.iter().zip(&db).enumerate() {
        text.push_str(&format!("{bin},{},{d}\n", z.norm()));
    }
    fs::write(out_dir.join("response.csv"), text)?;

    println!(
        "{}: A={:.6e} B={:.6e} kappa={:.6} painless={} (a={}, M={}, L={})",
        window.name(),
        diag.lower,
        diag.upper,
        diag.condition_number,
        diag.painless,
        params.hop(),
        params.channels(),
        params.signal_len()
    );
    Ok(ExitCode::SUCCESS)
}
