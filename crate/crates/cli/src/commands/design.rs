//! `design`: run the solver over a β grid and write reports.

use std::fs;
use std::process::ExitCode;

use anyhow::{Context, Result};
use neartight_core::design::{design_window, AdmmConfig, DesignReport};
use neartight_core::io::{
    write_envelope_csv, write_envelope_json, write_report_json, write_window_csv,
    write_window_json, EnvelopeFile, ReportFile, WindowFile,
};
use neartight_core::spectral::sidelobe_envelope;
use rayon::prelude::*;

use crate::commands::{apply_window_args, ensure_out_dir, load_config, resolve_params};
use crate::windows::{parse_list, resolve_window};
use crate::DesignArgs;

/// β keys rendered with their shortest decimal form, stable across runs.
fn beta_key(beta: f64) -> String {
    format!("{beta}")
}

pub fn run(args: DesignArgs) -> Result<ExitCode> {
    let mut config = load_config(&args.common)?;
    apply_window_args(&mut config, &args.window);
    if let Some(grid) = &args.beta_grid {
        config.admm.beta_grid = Some(parse_list(grid, "beta")?);
    }
    if let Some(beta) = args.beta {
        if config.admm.beta_grid.is_none() {
            config.admm.beta_grid = Some(vec![beta]);
        }
    }
    if let Some(mu) = args.mu {
        config.admm.mu = mu;
    }
    if let Some(lambda) = args.lambda {
        config.admm.lambda = lambda;
    }
    if let Some(mi) = args.max_iter {
        config.admm.max_iter = mi;
    }
    if let Some(kt) = args.k_tilde {
        config.envelope.k_tilde = Some(kt);
    }
    if let Some(t) = args.threads {
        config.threads = Some(t);
    }

    let betas = config.admm.betas()?;
    let params = resolve_params(&config, config.window.support)?;
    let g0 = resolve_window(&config.window, Some(&params))?;
    let k_tilde = config.envelope.k_tilde.unwrap_or(16 * g0.support_len());
    let envelope = sidelobe_envelope(&g0, k_tilde)?;

    // Validate every per-β solver configuration up front; a bad step rule
    // must fail before any output is produced.
    let mut solver_cfgs = Vec::new();
    for &beta in &betas {
        let cfg = AdmmConfig {
            beta,
            mu: config.admm.mu,
            lambda: config.admm.lambda,
            max_iter: config.admm.max_iter,
            tol_primal: config.admm.tol_primal,
            tol_change: config.admm.tol_change,
        }
        .validated()?;
        solver_cfgs.push(cfg);
    }

    let out_dir = ensure_out_dir(&config)?;
    let config_value = config.to_value()?;
    write_envelope_json(
        &out_dir.join("envelope.json"),
        &EnvelopeFile::from_envelope(&envelope).with_config(config_value.clone()),
    )?;
    write_envelope_csv(&out_dir.join("envelope.csv"), &envelope, Some(&config_value))?;

    let run_one = |cfg: &AdmmConfig<f64>| -> (f64, Result<DesignReport<f64>, String>) {
        let beta = cfg.beta;
        let result =
            design_window(&g0, &envelope, cfg.clone(), &params).map_err(|e| e.to_string());
        (beta, result)
    };
    let outcomes: Vec<(f64, Result<DesignReport<f64>, String>)> = match config.threads {
        Some(n) if n > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .context("building worker pool")?;
            pool.install(|| solver_cfgs.par_iter().map(run_one).collect())
        }
        _ => solver_cfgs.iter().map(run_one).collect(),
    };

    let mut summary = String::from(
        "beta,kappa,distance_to_tight,max_constraint_violation,iterations,converged\n",
    );
    let mut failures = Vec::new();
    let mut successes = 0usize;
    for (beta, outcome) in &outcomes {
        let key = beta_key(*beta);
        match outcome {
            Ok(report) => {
                successes += 1;
                let named = report
                    .window
                    .clone()
                    .with_name(format!("{}-beta{key}", g0.name()));
                let file = ReportFile::from_report(report, *beta, &params)
                    .with_config(config_value.clone());
                write_report_json(&out_dir.join(format!("report_beta{key}.json")), &file)?;
                let wfile =
                    WindowFile::from_window(&named, &params).with_config(config_value.clone());
                write_window_json(&out_dir.join(format!("window_beta{key}.json")), &wfile)?;
                write_window_csv(&out_dir.join(format!("window_beta{key}.csv")), &named)?;
                summary.push_str(&format!(
                    "{key},{},{},{},{},{}\n",
                    report.kappa,
                    report.distance_to_tight,
                    report.max_constraint_violation,
                    report.iterations_run,
                    report.converged
                ));
                println!(
                    "beta={key}: kappa={:.6} distance={:.3e} violation={:.3e} iterations={}",
                    report.kappa,
                    report.distance_to_tight,
                    report.max_constraint_violation,
                    report.iterations_run
                );
            }
            Err(message) => {
                eprintln!("beta={key} failed: {message}");
                failures.push(serde_json::json!({"beta": beta, "error": message}));
            }
        }
    }

    let summary_path = out_dir.join("summary.csv");
    let mut text = format!("# config: {}\n", serde_json::to_string(&config_value)?);
    text.push_str(&summary);
    fs::write(&summary_path, text)?;
    if !failures.is_empty() {
        fs::write(
            out_dir.join("failures.json"),
            serde_json::to_string_pretty(&failures)?,
        )?;
    }

    if successes == 0 {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}
