//! Parallel execution with a compile-time sequential fallback.
//!
//! With the default `parallel` feature the index maps fan out over the rayon
//! pool; without it they compile to plain loops with identical results and
//! ordering. The `_seq` twin is always sequential regardless of features, so
//! benchmarks can compare the two lanes in one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..count`, preserving index order in the output.
pub fn map_indexed<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`], available in every build.
pub fn map_indexed_seq<T>(count: usize, f: impl Fn(usize) -> T) -> Vec<T> {
    (0..count).map(f).collect()
}

/// Runs `f`, capping rayon to `cap` worker threads when given.
///
/// The cap installs a dedicated pool around `f`, so `Some(1)` forces
/// effectively sequential execution. Without the `parallel` feature there is
/// no pool and the cap is ignored.
pub fn with_thread_cap<R: Send>(cap: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match cap {
            Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = cap;
        f()
    }
}
