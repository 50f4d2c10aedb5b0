//! Design report and envelope exports.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::design::DesignReport;
use crate::error::Result;
use crate::gabor::GaborParams;
use crate::io::WindowFile;
use crate::spectral::FrequencyEnvelope;

/// JSON form of a [`DesignReport`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub window: WindowFile,
    pub beta: f64,
    pub kappa: f64,
    pub distance_to_tight: f64,
    pub max_constraint_violation: f64,
    pub iterations_run: usize,
    pub converged: bool,
    pub support_leakage: f64,
    pub residual_history: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<serde_json::Value>,
}

impl ReportFile {
    pub fn from_report(report: &DesignReport<f64>, beta: f64, params: &GaborParams) -> Self {
        Self {
            window: WindowFile::from_window(&report.window, params),
            beta,
            kappa: report.kappa,
            distance_to_tight: report.distance_to_tight,
            max_constraint_violation: report.max_constraint_violation,
            iterations_run: report.iterations_run,
            converged: report.converged,
            support_leakage: report.support_leakage,
            residual_history: report.residual_history.clone(),
            config: None,
        }
    }

    pub fn with_config(mut self, config: serde_json::Value) -> Self {
        self.config = Some(config);
        self
    }
}

pub fn write_report_json(path: &Path, report: &ReportFile) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(report)?)?;
    Ok(())
}

/// JSON form of a [`FrequencyEnvelope`], knots included for reproducibility.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnvelopeFile {
    #[serde(rename = "K_tilde")]
    pub k_tilde: usize,
    pub d: Vec<f64>,
    /// `(bin, dB)` spline knots; empty for supplied/degenerate envelopes.
    pub knots: Vec<(usize, f64)>,
    pub clamped: bool,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<serde_json::Value>,
}

impl EnvelopeFile {
    pub fn from_envelope(env: &FrequencyEnvelope<f64>) -> Self {
        Self {
            k_tilde: env.len(),
            d: env.ceiling().to_vec(),
            knots: env.knots().to_vec(),
            clamped: env.clamped(),
            degenerate: env.degenerate(),
            config: None,
        }
    }

    pub fn with_config(mut self, config: serde_json::Value) -> Self {
        self.config = Some(config);
        self
    }

    pub fn into_envelope(self) -> Result<FrequencyEnvelope<f64>> {
        FrequencyEnvelope::from_linear(self.d)
    }
}

pub fn write_envelope_json(path: &Path, file: &EnvelopeFile) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(file)?)?;
    Ok(())
}

/// `(bin, linear magnitude, dB)` triples for plotting.
pub fn write_envelope_csv(
    path: &Path,
    env: &FrequencyEnvelope<f64>,
    config: Option<&serde_json::Value>,
) -> Result<()> {
    let mut text = String::new();
    if let Some(cfg) = config {
        text.push_str(&format!("# config: {}\n", serde_json::to_string(cfg)?));
    }
    text.push_str("bin,magnitude,db\n");
    for (bin, &d) in env.ceiling().iter().enumerate() {
        text.push_str(&format!("{bin},{d},{}\n", 20.0 * d.log10()));
    }
    fs::write(path, text)?;
    Ok(())
}
