//! Execution policy for the data-parallel loops (modular trials, minor
//! sweeps, large products).
//!
//! Without the `parallel` feature, [`Exec::Parallel`] silently runs
//! sequentially. Results never depend on the policy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Order-preserving map over chunks of at least `min_len` items.
pub fn map_chunks<T, U, F>(exec: Exec, items: &[T], min_len: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&[T]) -> U + Sync + Send,
{
    let min_len = min_len.max(1);
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > min_len {
        let chunk = items
            .len()
            .div_ceil(rayon::current_num_threads())
            .max(min_len);
        return items.par_chunks(chunk).map(f).collect();
    }
    let _ = exec;
    if items.is_empty() {
        return Vec::new();
    }
    items.chunks(items.len().max(min_len)).map(f).collect()
}
