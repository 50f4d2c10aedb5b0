//! Window import/export: JSON envelope and plain CSV.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gabor::{GaborParams, Window};

/// JSON schema `{name, K, L, a, M, samples[]}` for a window tied to a
/// lattice. An optional `config` field carries the resolved run
/// configuration for provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowFile {
    pub name: String,
    #[serde(rename = "K")]
    pub support: usize,
    #[serde(rename = "L")]
    pub ambient_len: usize,
    pub a: usize,
    #[serde(rename = "M")]
    pub channels: usize,
    pub samples: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<serde_json::Value>,
}

impl WindowFile {
    pub fn from_window(window: &Window<f64>, params: &GaborParams) -> Self {
        Self {
            name: window.name().to_string(),
            support: window.support_len(),
            ambient_len: params.signal_len(),
            a: params.hop(),
            channels: params.channels(),
            samples: window.samples().to_vec(),
            provenance: if window.provenance().is_empty() {
                None
            } else {
                Some(window.provenance().to_string())
            },
            config: None,
        }
    }

    pub fn with_config(mut self, config: serde_json::Value) -> Self {
        self.config = Some(config);
        self
    }

    /// Reconstructs the window (ambient length pinned) and its lattice.
    pub fn into_window(self) -> Result<(Window<f64>, GaborParams)> {
        if self.samples.len() != self.support {
            return Err(Error::FileFormat {
                path: self.name.clone(),
                reason: format!(
                    "K={} disagrees with {} samples",
                    self.support,
                    self.samples.len()
                ),
            });
        }
        let params = GaborParams::new(self.a, self.channels, self.ambient_len)?;
        let mut window = Window::new(self.name, self.samples)?.with_ambient(self.ambient_len)?;
        if let Some(p) = self.provenance {
            window = window.with_provenance(p);
        }
        Ok((window, params))
    }
}

pub fn write_window_json(path: &Path, file: &WindowFile) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(file)?)?;
    Ok(())
}

pub fn read_window_json(path: &Path) -> Result<WindowFile> {
    let text = fs::read_to_string(path)?;
    let file: WindowFile = serde_json::from_str(&text).map_err(|e| Error::FileFormat {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    Ok(file)
}

/// One sample per line, shortest round-trip decimal.
pub fn write_window_csv(path: &Path, window: &Window<f64>) -> Result<()> {
    let mut text = String::new();
    for s in window.samples() {
        text.push_str(&format!("{s}\n"));
    }
    fs::write(path, text)?;
    Ok(())
}

/// Reads a bare sample list (one value per line; blank lines and `#`
/// comments are skipped).
pub fn read_window_csv(path: &Path, name: &str) -> Result<Window<f64>> {
    let samples = super::read_signal_csv(path)?;
    Window::new(name.to_string(), samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn json_round_trip_is_bit_exact() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("w.json");
        let params = GaborParams::new(2, 4, 8).unwrap();
        let samples = vec![0.1 + 0.2, 1.0 / 3.0, std::f64::consts::PI, 1e-300];
        let window = Window::new("w", samples.clone())
            .unwrap()
            .with_ambient(8)
            .unwrap()
            .with_provenance("test");
        write_window_json(&path, &WindowFile::from_window(&window, &params)).unwrap();
        let (back, back_params) = read_window_json(&path).unwrap().into_window().unwrap();
        assert_eq!(back.samples(), samples.as_slice());
        assert_eq!(back_params, params);
        assert_eq!(back.provenance(), "test");
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("w.csv");
        let samples = vec![-0.7071067811865476, 2.2250738585072014e-308, 42.0];
        let window = Window::new("w", samples.clone()).unwrap();
        write_window_csv(&path, &window).unwrap();
        let back = read_window_csv(&path, "w").unwrap();
        assert_eq!(back.samples(), samples.as_slice());
    }

    #[test]
    fn inconsistent_support_is_rejected() {
        let f = WindowFile {
            name: "bad".into(),
            support: 3,
            ambient_len: 8,
            a: 2,
            channels: 4,
            samples: vec![1.0, 2.0],
            provenance: None,
            config: None,
        };
        assert!(f.into_window().is_err());
    }
}
