//! `denoise`: Wiener-mask enhancement of audio inputs or fixtures.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use neartight_core::enhance::{
    add_noise_at_snr, snr_db, speech_like_fixture, MaskSpec, NoisePsdMode, NoisyPair,
};
use neartight_core::gabor::{canonical_tight, condition_number};
use neartight_core::io::{read_signal_csv, read_wav_mono, write_records_csv, write_wav_mono};

use crate::commands::{apply_window_args, ensure_out_dir, load_config, resolve_params};
use crate::config::{EvalConfig, RunConfig};
use crate::windows::{parse_list, resolve_window};
use crate::{DenoiseArgs, EvalArgs};

/// Applies eval flag overrides onto the config.
pub fn apply_eval_args(config: &mut RunConfig, args: &EvalArgs) -> Result<()> {
    if !args.inputs.is_empty() {
        config.eval.inputs = args.inputs.clone();
    }
    if let Some(seeds) = &args.fixture_seeds {
        config.eval.fixture_seeds = parse_list(seeds, "fixture seed")?;
    }
    if let Some(len) = args.fixture_len {
        config.eval.fixture_len = len;
    }
    if let Some(snr) = args.snr {
        config.eval.snr_db = snr;
    }
    if let Some(mask) = &args.mask {
        config.eval.mask = mask.clone();
    }
    if let Some(alpha) = args.dd_alpha {
        config.eval.dd_alpha = alpha;
    }
    if let Some(mode) = &args.psd_mode {
        config.eval.psd_mode = mode.clone();
    }
    if let Some(file) = &args.psd_file {
        config.eval.psd_file = Some(file.clone());
    }
    if let Some(base) = args.noise_seed_base {
        config.eval.noise_seed_base = base;
    }
    Ok(())
}

/// Loads the evaluation corpus: explicit inputs (WAV/CSV by extension) or
/// the seeded fixture corpus. An empty corpus is a configuration error.
pub fn build_corpus(eval: &EvalConfig) -> Result<Vec<(String, Vec<f64>)>> {
    if !eval.inputs.is_empty() {
        let mut corpus = Vec::new();
        for path in &eval.inputs {
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            let is_wav = path
                .extension()
                .map(|e| e.eq_ignore_ascii_case("wav"))
                .unwrap_or(false);
            let samples = if is_wav {
                read_wav_mono(path)?.samples
            } else {
                read_signal_csv(path)?
            };
            corpus.push((id, samples));
        }
        return Ok(corpus);
    }
    if eval.fixture_seeds.is_empty() {
        bail!("no inputs and no fixture seeds: nothing to evaluate");
    }
    Ok(eval
        .fixture_seeds
        .iter()
        .map(|&seed| {
            (
                format!("fixture{seed}"),
                speech_like_fixture::<f64>(seed, eval.fixture_len),
            )
        })
        .collect())
}

/// Builds the noisy pairs with per-signal noise seeds.
pub fn build_pairs(corpus: &[(String, Vec<f64>)], eval: &EvalConfig) -> Result<Vec<NoisyPair<f64>>> {
    corpus
        .iter()
        .enumerate()
        .map(|(i, (id, samples))| {
            add_noise_at_snr(samples, eval.snr_db, eval.noise_seed_base + i as u64)
                .with_context(|| format!("adding noise to {id}"))
        })
        .collect()
}

/// Translates the mask section of the config.
pub fn build_mask_spec(eval: &EvalConfig) -> Result<MaskSpec<f64>> {
    match eval.mask.as_str() {
        "ideal_wiener" | "ideal" => Ok(MaskSpec::ideal()),
        "dd_wiener" | "dd" => {
            let mode = match eval.psd_mode.as_str() {
                "oracle" => NoisePsdMode::Oracle,
                "first_frames" => NoisePsdMode::FirstFrames,
                "supplied" => {
                    let path = eval
                        .psd_file
                        .as_ref()
                        .ok_or_else(|| anyhow::anyhow!("psd_mode 'supplied' needs psd_file"))?;
                    NoisePsdMode::Supplied(read_signal_csv(path)?)
                }
                other => bail!("unknown psd_mode '{other}'"),
            };
            Ok(MaskSpec::decision_directed(eval.dd_alpha, mode)?)
        }
        other => bail!("unknown mask '{other}' (expected ideal_wiener or dd_wiener)"),
    }
}

fn padded(v: &[f64], l: usize) -> Vec<f64> {
    let mut out = vec![0.0; l];
    out[..v.len()].copy_from_slice(v);
    out
}

pub fn run(args: DenoiseArgs) -> Result<ExitCode> {
    let mut config = load_config(&args.common)?;
    apply_window_args(&mut config, &args.window);
    apply_eval_args(&mut config, &args.eval)?;
    if args.write_audio {
        config.eval.write_audio = true;
    }
    if args.tight {
        config.window.tight = true;
    }

    let corpus = build_corpus(&config.eval)?;
    let pairs = build_pairs(&corpus, &config.eval)?;
    let mask_spec = build_mask_spec(&config.eval)?;

    let longest = corpus.iter().map(|(_, s)| s.len()).max().unwrap_or(0);
    let params = resolve_params(&config, longest.max(config.window.support))?;
    let mut window = resolve_window(&config.window, Some(&params))?;
    if config.window.tight {
        window = canonical_tight(&window, &params)?;
    }
    let kappa = condition_number(&window, &params)?;

    let out_dir = ensure_out_dir(&config)?;
    let config_value = config.to_value()?;

    let l = params.signal_len();
    let mut per_file = String::from("input,noise_seed,snr_out_db\n");
    let mut snr_sum = 0.0;
    let mut successes = 0usize;
    for ((id, _), pair) in corpus.iter().zip(&pairs) {
        let cell = NoisyPair {
            clean: padded(&pair.clean, l),
            noisy: padded(&pair.noisy, l),
            noise: padded(&pair.noise, l),
            target_snr_db: pair.target_snr_db,
            seed: pair.seed,
        };
        match neartight_core::enhance::enhance(&cell, &window, &params, &mask_spec)
            .and_then(|out| snr_db(&cell.clean, &out).map(|s| (out, s)))
        {
            Ok((enhanced, snr)) => {
                per_file.push_str(&format!("{id},{},{snr}\n", pair.seed));
                snr_sum += snr;
                successes += 1;
                if config.eval.write_audio {
                    let path: PathBuf = out_dir.join(format!("enhanced_{id}.wav"));
                    write_wav_mono(&path, &enhanced, config.eval.sample_rate)?;
                }
            }
            Err(e) => {
                eprintln!("{id} failed: {e}");
                per_file.push_str(&format!("{id},{},failed\n", pair.seed));
            }
        }
    }

    let mut text = format!("# config: {}\n", serde_json::to_string(&config_value)?);
    text.push_str(&per_file);
    fs::write(out_dir.join("per_file.csv"), text)?;

    if successes == 0 {
        return Ok(ExitCode::from(3));
    }
    let record = neartight_core::enhance::EvalRecord {
        window_id: window.name().to_string(),
        hop: params.hop(),
        snr_out_db: snr_sum / successes as f64,
        kappa,
        mask_kind: mask_spec.kind.as_str().to_string(),
    };
    write_records_csv(&out_dir.join("records.csv"), &[record.clone()], Some(&config_value))?;
    println!(
        "{} at a={}: averaged output SNR {:.3} dB over {} inputs (kappa={:.4})",
        record.window_id, record.hop, record.snr_out_db, successes, record.kappa
    );
    Ok(ExitCode::SUCCESS)
}
