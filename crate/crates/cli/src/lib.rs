//! Input parsing, the per-instance verification battery, the built-in
//! corpus and report output for the `jacdual` command.

pub mod corpus;
pub mod desc;
pub mod lemmas;
pub mod report;
pub mod run;

use std::io::Write;
use std::path::Path;

pub use corpus::{builtin_corpus, corpus_run, CorpusEntry, CorpusRun, Family, Filter};
pub use desc::{parse_ideal, render, IdealDescription, InputError, OrderChoice};
pub use lemmas::{run_lemmas, LemmaConfig, LemmaSummary};
pub use report::{Check, Outcome, Status, VerificationReport};
pub use run::{run_instance, RunConfig, Skip};

/// Writes pretty JSON through a temporary file in the target directory.
pub fn write_json_atomic<T: serde::Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer_pretty(&mut tmp, value)?;
    tmp.write_all(b"\n")?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
