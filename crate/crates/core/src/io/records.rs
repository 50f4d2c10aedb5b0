//! Evaluation record tables and bare signal CSV.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::enhance::{EvalRecord, SweepFailure};
use crate::error::{Error, Result};

/// Writes records as CSV keyed by `(window_id, hop, mask_kind)`. A leading
/// `# config: ...` comment carries the resolved run configuration.
pub fn write_records_csv(
    path: &Path,
    records: &[EvalRecord<f64>],
    config: Option<&serde_json::Value>,
) -> Result<()> {
    let mut text = String::new();
    if let Some(cfg) = config {
        text.push_str(&format!("# config: {}\n", serde_json::to_string(cfg)?));
    }
    text.push_str("window_id,hop,mask_kind,snr_out_db,kappa\n");
    for r in records {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            r.window_id, r.hop, r.mask_kind, r.snr_out_db, r.kappa
        ));
    }
    fs::write(path, text)?;
    Ok(())
}

#[derive(Serialize)]
struct RecordsFile<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    config: Option<&'a serde_json::Value>,
    records: &'a [EvalRecord<f64>],
    failures: &'a [SweepFailure],
}

pub fn write_records_json(
    path: &Path,
    records: &[EvalRecord<f64>],
    failures: &[SweepFailure],
    config: Option<&serde_json::Value>,
) -> Result<()> {
    let file = RecordsFile { config, records, failures };
    fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

/// Reads a signal stored one sample per line; blank lines and lines starting
/// with `#` are skipped.
pub fn read_signal_csv(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path)?;
    let mut samples = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value: f64 = line.parse().map_err(|e| Error::FileFormat {
            path: path.display().to_string(),
            reason: format!("line {}: {e}", idx + 1),
        })?;
        samples.push(value);
    }
    if samples.is_empty() {
        return Err(Error::FileFormat {
            path: path.display().to_string(),
            reason: "no samples".to_string(),
        });
    }
    Ok(samples)
}

/// Writes a signal one sample per line.
pub fn write_signal_csv(path: &Path, samples: &[f64]) -> Result<()> {
    let mut text = String::new();
    for s in samples {
        text.push_str(&format!("{s}\n"));
    }
    fs::write(path, text)?;
    Ok(())
}
