//! Experiment harness behind the `cxsvm` binary: experiment configs with the
//! benchmark defaults, cross-validation grid search over (C, t), and the four
//! reproducible experiments (sinc grid regression, channel identification,
//! channel equalization, quaternary blobs).
//!
//! Reports are split into a fully deterministic `report.csv` (byte-identical
//! for identical config + seed) and a `timings.csv` carrying wall-clock times,
//! which are machine-dependent by nature.

pub mod config;
pub mod crossval;
pub mod experiments;
pub mod report;

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cxsvm::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Map `f` over `items` with up to `threads` workers; results are placed by
/// index, so the output does not depend on scheduling.
pub fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads <= 1 {
        return items.iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let mut out: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|scope| {
        for (w, slots) in out.chunks_mut(chunk).enumerate() {
            let f = &f;
            let base = w * chunk;
            scope.spawn(move || {
                for (k, slot) in slots.iter_mut().enumerate() {
                    *slot = Some(f(base + k, &items[base + k]));
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("slot filled")).collect()
}

/// Canonical artifact paths inside an output directory.
pub fn artifact_path(out_dir: &std::path::Path, name: &str) -> PathBuf {
    out_dir.join(name)
}
