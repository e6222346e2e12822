//! Trial execution: data-parallel by default, sequential behind the same API
//! when the `parallel` feature is off.
//!
//! Every trial is deterministic in `(seed, trial index)`, so the two paths
//! produce identical results and reports stay byte-identical either way.
//! [`run_trials_seq`] is always sequential and serves as the baseline in the
//! criterion benches.

/// Runs `n` independent trials, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn run_trials<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn run_trials<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Always-sequential variant with the same contract.
pub fn run_trials_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}
