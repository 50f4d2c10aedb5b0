//! `sweep`: evaluate windows across hop sizes on a shared corpus.

use std::process::ExitCode;

use anyhow::{bail, Result};
use neartight_core::enhance::{sweep, EvalRecord, LatticeTemplate, SweepFailure};
use neartight_core::gabor::{canonical_tight, default_ambient_len, GaborParams};
use neartight_core::io::{write_records_csv, write_records_json};
use neartight_core::Window64;

use crate::commands::denoise::{apply_eval_args, build_corpus, build_mask_spec, build_pairs};
use crate::commands::{apply_window_args, ensure_out_dir, load_config};
use crate::config::WindowSpec;
use crate::windows::{parse_list, resolve_window};
use crate::SweepArgs;

pub fn run(args: SweepArgs) -> Result<ExitCode> {
    let mut config = load_config(&args.common)?;
    apply_window_args(&mut config, &args.window);
    apply_eval_args(&mut config, &args.eval)?;
    if let Some(hops) = &args.hops {
        config.eval.hops = parse_list(hops, "hop")?;
    }
    if config.eval.hops.is_empty() {
        bail!("no hop sizes given (use --hops or eval.hops in the config)");
    }

    let corpus = build_corpus(&config.eval)?;
    let pairs = build_pairs(&corpus, &config.eval)?;
    let mask_spec = build_mask_spec(&config.eval)?;
    let longest = corpus.iter().map(|(_, s)| s.len()).max().unwrap_or(0);

    let mut specs: Vec<WindowSpec> = vec![config.window.clone()];
    specs.extend(config.eval.windows.iter().cloned());
    let max_support = specs.iter().map(|s| s.support).max().unwrap_or(0);

    let mut records: Vec<EvalRecord<f64>> = Vec::new();
    let mut failures: Vec<SweepFailure> = Vec::new();
    for &hop in &config.eval.hops {
        let channels = config.lattice.channels;
        let l = config
            .lattice
            .ambient_len
            .unwrap_or_else(|| default_ambient_len(hop, channels, longest.max(max_support)));
        let cell_params = match GaborParams::new(hop, channels, l) {
            Ok(p) => p,
            Err(e) => {
                for spec in &specs {
                    failures.push(SweepFailure {
                        window_id: spec.name.clone().unwrap_or_else(|| "window".to_string()),
                        hop,
                        error: e.to_string(),
                    });
                }
                continue;
            }
        };

        // The canonical tight variant depends on the hop, so it is derived
        // here, per cell lattice.
        let mut windows: Vec<Window64> = Vec::new();
        for spec in &specs {
            let base = match resolve_window(spec, Some(&cell_params)) {
                Ok(base) => base,
                Err(e) => {
                    failures.push(SweepFailure {
                        window_id: spec.name.clone().unwrap_or_else(|| "window".to_string()),
                        hop,
                        error: e.to_string(),
                    });
                    continue;
                }
            };
            if !spec.tight {
                windows.push(base.clone());
            }
            if spec.tight || args.include_tight {
                match canonical_tight(&base, &cell_params) {
                    Ok(t) => windows.push(t),
                    Err(e) => failures.push(SweepFailure {
                        window_id: format!("{}-tight", base.name()),
                        hop,
                        error: e.to_string(),
                    }),
                }
            }
        }

        let outcome = sweep(
            &windows,
            &[hop],
            &pairs,
            &mask_spec,
            LatticeTemplate { channels, ambient_len: Some(l) },
        )?;
        records.extend(outcome.records);
        failures.extend(outcome.failures);
    }

    let out_dir = ensure_out_dir(&config)?;
    let config_value = config.to_value()?;
    write_records_csv(&out_dir.join("records.csv"), &records, Some(&config_value))?;
    write_records_json(
        &out_dir.join("records.json"),
        &records,
        &failures,
        Some(&config_value),
    )?;
    for r in &records {
        println!(
            "{} a={}: snr_out={:.3} dB kappa={:.4} ({})",
            r.window_id, r.hop, r.snr_out_db, r.kappa, r.mask_kind
        );
    }
    for f in &failures {
        eprintln!("cell {} a={} failed: {}", f.window_id, f.hop, f.error);
    }

    if records.is_empty() {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}
