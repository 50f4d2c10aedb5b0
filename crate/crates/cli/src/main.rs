//! `neartight` — design and evaluate nearly tight Gabor analysis windows.
//!
//! Subcommands: `generate` standard windows (plus canonical dual/tight
//! variants), `design` nearly tight windows over a β grid, `analyze` frame
//! properties and frequency responses, `denoise` audio with Wiener masks,
//! and `sweep` windows across hop sizes. Outputs are plot-ready CSV and
//! JSON carrying the resolved configuration.
//!
//! Exit codes: 0 success, 2 configuration or input error, 3 when every unit
//! of work failed.

mod commands;
mod config;
mod windows;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "neartight", version, about = "Nearly tight Gabor window design toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a standard window (optionally its canonical dual/tight).
    Generate(GenerateArgs),
    /// Design nearly tight windows over a β grid.
    Design(DesignArgs),
    /// Report frame bounds, condition number and frequency response.
    Analyze(AnalyzeArgs),
    /// Denoise inputs with a Wiener mask and report SNR.
    Denoise(DenoiseArgs),
    /// Evaluate windows across hop sizes.
    Sweep(SweepArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// JSON run configuration; flags override individual fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, short = 'o')]
    out_dir: Option<PathBuf>,
    /// Time shift (hop) in samples.
    #[arg(long, short = 'a')]
    hop: Option<usize>,
    /// Number of frequency channels.
    #[arg(long, short = 'M')]
    channels: Option<usize>,
    /// Ambient signal length; defaults to the smallest compatible length.
    #[arg(long, short = 'L')]
    ambient: Option<usize>,
}

#[derive(Args)]
struct WindowArgs {
    /// Window family: hann, kaiser, or rect.
    #[arg(long)]
    family: Option<String>,
    /// Window support K.
    #[arg(long, short = 'K')]
    support: Option<usize>,
    /// Kaiser shape parameter.
    #[arg(long)]
    alpha: Option<f64>,
    /// Window file (JSON envelope or CSV sample list) instead of a family.
    #[arg(long)]
    window: Option<PathBuf>,
    /// Window name used in outputs.
    #[arg(long)]
    name: Option<String>,
    /// Skip the a/M energy normalization.
    #[arg(long)]
    no_normalize: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    window: WindowArgs,
    /// Also write the canonical tight window.
    #[arg(long)]
    tight: bool,
    /// Also write the canonical dual window.
    #[arg(long)]
    dual: bool,
}

#[derive(Args)]
struct DesignArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    window: WindowArgs,
    /// Comma-separated β grid, e.g. "1,1.5,2,4".
    #[arg(long)]
    beta_grid: Option<String>,
    /// Single β (overridden by --beta-grid).
    #[arg(long)]
    beta: Option<f64>,
    /// Primal step size μ.
    #[arg(long)]
    mu: Option<f64>,
    /// Splitting step size λ.
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    max_iter: Option<usize>,
    /// Padded DFT length for the response ceiling (default 16 K).
    #[arg(long)]
    k_tilde: Option<usize>,
    /// Worker threads for independent β runs.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Window file to analyze (JSON envelope or CSV sample list).
    #[arg(long)]
    window: PathBuf,
    /// Padded DFT length for the response export (default 16 K).
    #[arg(long)]
    k_tilde: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    /// Input signals (WAV or CSV); may repeat.
    #[arg(long = "input")]
    inputs: Vec<PathBuf>,
    /// Comma-separated fixture seeds used when no inputs are given.
    #[arg(long)]
    fixture_seeds: Option<String>,
    /// Fixture length in samples.
    #[arg(long)]
    fixture_len: Option<usize>,
    /// Input SNR in dB.
    #[arg(long)]
    snr: Option<f64>,
    /// Mask kind: ideal_wiener or dd_wiener.
    #[arg(long)]
    mask: Option<String>,
    /// Decision-directed smoothing in [0, 1).
    #[arg(long)]
    dd_alpha: Option<f64>,
    /// Noise PSD mode for dd_wiener: oracle, first_frames, or supplied.
    #[arg(long)]
    psd_mode: Option<String>,
    /// Per-channel PSD file for --psd-mode supplied.
    #[arg(long)]
    psd_file: Option<PathBuf>,
    /// Base seed for noise draws.
    #[arg(long)]
    noise_seed_base: Option<u64>,
}

#[derive(Args)]
struct DenoiseArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    eval: EvalArgs,
    /// Evaluate the canonical tight variant of the window.
    #[arg(long)]
    tight: bool,
    /// Write enhanced signals as WAV files.
    #[arg(long)]
    write_audio: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    eval: EvalArgs,
    /// Comma-separated hop sizes, e.g. "128,192".
    #[arg(long)]
    hops: Option<String>,
    /// Also evaluate the canonical tight variant of each window.
    #[arg(long)]
    include_tight: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Generate(args) => commands::generate::run(args),
        Command::Design(args) => commands::design::run(args),
        Command::Analyze(args) => commands::analyze::run(args),
        Command::Denoise(args) => commands::denoise::run(args),
        Command::Sweep(args) => commands::sweep::run(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
