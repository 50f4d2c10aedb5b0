//! File formats: window JSON/CSV, envelope exports, design reports, sweep
//! record tables, and mono WAV audio. All text formats serialize `f64`
//! samples with shortest-round-trip decimal representations, so a write
//! followed by a read is bit-exact.

mod records;
mod report;
mod wav;
mod window_file;

pub use records::{read_signal_csv, write_records_csv, write_records_json, write_signal_csv};
pub use report::{write_envelope_csv, write_envelope_json, write_report_json, EnvelopeFile, ReportFile};
pub use wav::{read_wav_mono, write_wav_mono, WavContents};
pub use window_file::{read_window_csv, read_window_json, write_window_csv, write_window_json, WindowFile};
