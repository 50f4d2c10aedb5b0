//! Resolving window specs (generated family or file) into windows.

use std::path::Path;

use anyhow::{bail, Context, Result};
use neartight_core::gabor::GaborParams;
use neartight_core::io::{read_window_csv, read_window_json};
use neartight_core::spectral::{hann_window, kaiser_window, normalize_energy, rectangular_window};
use neartight_core::Window64;

use crate::config::WindowSpec;

/// Default Kaiser shape parameter, matching the evaluation setup.
pub const DEFAULT_KAISER_ALPHA: f64 = 10.0;

fn generate_family(family: &str, support: usize, alpha: Option<f64>) -> Result<Window64> {
    let window = match family.to_ascii_lowercase().as_str() {
        "hann" => hann_window(support)?,
        "kaiser" => kaiser_window(support, alpha.unwrap_or(DEFAULT_KAISER_ALPHA))?,
        "rect" | "rectangular" => rectangular_window(support)?,
        other => bail!("unknown window family '{other}' (expected hann, kaiser, or rect)"),
    };
    Ok(window)
}

fn load_window(path: &Path) -> Result<Window64> {
    let is_json = path
        .extension()
        .map(|e| e.eq_ignore_ascii_case("json"))
        .unwrap_or(false);
    if is_json {
        let (window, _) = read_window_json(path)?
            .into_window()
            .with_context(|| format!("window file {}", path.display()))?;
        // The caller owns the lattice; drop the file's pinned ambient length.
        Ok(Window64::new(window.name().to_string(), window.samples().to_vec())?
            .with_provenance(window.provenance().to_string()))
    } else {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "window".to_string());
        Ok(read_window_csv(path, &name)?)
    }
}

/// Resolves a spec to a window. With `params` given, the result is energy
/// normalized to `a/M` (when the spec asks for it) and validated against
/// the lattice. The `tight` flag is handled by callers because the tight
/// variant depends on the lattice in use.
pub fn resolve_window(spec: &WindowSpec, params: Option<&GaborParams>) -> Result<Window64> {
    let mut window = match (&spec.path, &spec.family) {
        (Some(path), _) => load_window(path)?,
        (None, Some(family)) => generate_family(family, spec.support, spec.alpha)?,
        (None, None) => bail!("window spec needs either a family or a path"),
    };
    if let Some(name) = &spec.name {
        window = window.with_name(name.clone());
    }
    if let Some(p) = params {
        if spec.normalize {
            window = normalize_energy(&window, p)?;
        }
        window = window.with_ambient(p.signal_len())?;
    }
    Ok(window)
}

/// Parses a comma-separated numeric list flag.
pub fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|e| anyhow::anyhow!("invalid {what} entry '{s}': {e}"))
        })
        .collect()
}
