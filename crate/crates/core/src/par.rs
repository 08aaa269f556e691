//! Execution policy for the data-parallel loops (sample suites, minors,
//! claim batteries).
//!
//! Results are always collected in index order, so a computation returns the
//! same value under either policy. Without the `parallel` feature,
//! [`Exec::Parallel`] runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this build can actually run [`Exec::Parallel`] on a pool.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// `true` iff `pred` holds for every index; short-circuits on the first
    /// counterexample found.
    pub fn all<F>(self, n: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().all(pred),
            _ => (0..n).all(pred),
        }
    }
}
