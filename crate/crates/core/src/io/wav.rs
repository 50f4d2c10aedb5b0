//! Mono WAV input/output (16-bit PCM and 32-bit float).

use std::path::Path;

use hound::{SampleFormat, WavReader, WavSpec, WavWriter};

use crate::error::{Error, Result};

/// Samples plus the rate they were recorded at.
#[derive(Debug, Clone, PartialEq)]
pub struct WavContents {
    pub samples: Vec<f64>,
    pub sample_rate: u32,
}

/// Reads a mono WAV file; 16-bit PCM samples are scaled to `[-1, 1)`.
pub fn read_wav_mono(path: &Path) -> Result<WavContents> {
    let mut reader = WavReader::open(path)?;
    let spec = reader.spec();
    if spec.channels != 1 {
        return Err(Error::FileFormat {
            path: path.display().to_string(),
            reason: format!("expected mono audio, found {} channels", spec.channels),
        });
    }
    let samples: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
        (SampleFormat::Int, 16) => reader
            .samples::<i16>()
            .map(|s| s.map(|v| v as f64 / 32768.0))
            .collect::<std::result::Result<_, _>>()?,
        (SampleFormat::Float, 32) => reader
            .samples::<f32>()
            .map(|s| s.map(|v| v as f64))
            .collect::<std::result::Result<_, _>>()?,
        (format, bits) => {
            return Err(Error::FileFormat {
                path: path.display().to_string(),
                reason: format!("unsupported sample format {format:?} at {bits} bits"),
            })
        }
    };
    if samples.is_empty() {
        return Err(Error::FileFormat {
            path: path.display().to_string(),
            reason: "no samples".to_string(),
        });
    }
    Ok(WavContents { samples, sample_rate: spec.sample_rate })
}

/// Writes mono 32-bit float WAV.
pub fn write_wav_mono(path: &Path, samples: &[f64], sample_rate: u32) -> Result<()> {
    let spec = WavSpec {
        channels: 1,
        sample_rate,
        bits_per_sample: 32,
        sample_format: SampleFormat::Float,
    };
    let mut writer = WavWriter::create(path, spec)?;
    for &s in samples {
        writer.write_sample(s as f32)?;
    }
    writer.finalize()?;
    Ok(())
}
