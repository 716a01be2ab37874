//! Worker pool sizing. Results never depend on the worker count.

use crate::error::{CliError, Result};

pub const WORKERS_ENV: &str = "CUBINV_WORKERS";

/// Worker count from the flag, else `CUBINV_WORKERS`, else the number of
/// available cores.
pub fn worker_count(flag: Option<usize>) -> Result<usize> {
    if let Some(n) = flag {
        return positive(n);
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) => {
            let n = v.trim().parse().map_err(|_| CliError::Input(format!("{WORKERS_ENV}: `{v}` is not a number")))?;
            positive(n)
        }
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(CliError::Input("worker count must be at least 1".into()));
    }
    Ok(n)
}

/// Runs `f` inside a dedicated pool with `n` threads.
pub fn install<R: Send>(n: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| CliError::Internal(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}
