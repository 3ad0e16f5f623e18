//! Data-parallel execution helpers.
//!
//! With the `parallel` feature (default), independent work items run on the
//! rayon pool; without it, the same closures run on a plain iterator. Callers
//! derive any randomness from per-item seeds, so both paths produce identical
//! results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;

/// Applies `f` to every item, honoring the `parallel` feature.
#[cfg(feature = "parallel")]
pub fn try_map<T, U, F>(items: Vec<T>, f: F) -> Result<Vec<U>>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Result<U> + Send + Sync,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn try_map<T, U, F>(items: Vec<T>, f: F) -> Result<Vec<U>>
where
    F: Fn(T) -> Result<U>,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential reference path. Benchmarks and determinism tests compare
/// this against [`try_map`].
pub fn try_map_seq<T, U, F>(items: Vec<T>, f: F) -> Result<Vec<U>>
where
    F: Fn(T) -> Result<U>,
{
    items.into_iter().map(f).collect()
}
