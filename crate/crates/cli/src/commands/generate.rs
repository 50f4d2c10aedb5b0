//! `generate`: write a standard window and optional dual/tight variants.

use std::process::ExitCode;

use anyhow::Result;
use neartight_core::gabor::{canonical_dual, canonical_tight, condition_number, GaborParams};
use neartight_core::io::{write_window_csv, write_window_json, WindowFile};
use neartight_core::Window64;

use crate::commands::{apply_window_args, ensure_out_dir, load_config, resolve_params};
use crate::windows::resolve_window;
use crate::GenerateArgs;

pub fn run(args: GenerateArgs) -> Result<ExitCode> {
    let mut config = load_config(&args.common)?;
    apply_window_args(&mut config, &args.window);

    let params = resolve_params(&config, config.window.support)?;
    let window = resolve_window(&config.window, Some(&params))?;
    let out_dir = ensure_out_dir(&config)?;
    let config_value = config.to_value()?;

    let mut write = |w: &Window64, params: &GaborParams| -> Result<()> {
        let stem = w.name().to_string();
        let file = WindowFile::from_window(w, params).with_config(config_value.clone());
        write_window_json(&out_dir.join(format!("{stem}.json")), &file)?;
        write_window_csv(&out_dir.join(format!("{stem}.csv")), w)?;
        println!(
            "wrote {stem} (K={}, energy={:.6}, kappa={:.6})",
            w.support_len(),
            w.energy(),
            condition_number(w, params)?
        );
        Ok(())
    };

    write(&window, &params)?;
    if args.tight {
        write(&canonical_tight(&window, &params)?, &params)?;
    }
    if args.dual {
        write(&canonical_dual(&window, &params)?, &params)?;
    }
    Ok(ExitCode::SUCCESS)
}
