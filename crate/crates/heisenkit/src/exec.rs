//! Batch execution over independent work items.
//!
//! Grid verifications, random-trial property checks and per-specialization
//! dual computations are all embarrassingly parallel. With the `parallel`
//! feature (default) batches run on rayon; without it, or when
//! [`ExecMode::Sequential`] is requested, they run on the calling thread.
//! Results come back in item order either way, so output is deterministic
//! given the seed.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

impl ExecMode {
    pub fn label(self) -> &'static str {
        match self {
            ExecMode::Sequential => "sequential",
            ExecMode::Parallel => "parallel",
        }
    }
}

/// Applies `f` to `0..n`, collecting results in index order.
pub fn map_batch<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    (0..n).map(f).collect()
}

/// Applies `f` to every item of a vector, preserving order.
pub fn map_items<I, T, F>(mode: ExecMode, items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_and_preserve_order() {
        let seq = map_batch(ExecMode::Sequential, 100, |i| i * i);
        let par = map_batch(ExecMode::default(), 100, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
