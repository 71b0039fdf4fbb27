//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers dispatch to rayon unless the
//! process-wide mode has been set to [`ExecMode::Sequential`]. Without the
//! feature everything runs on the calling thread.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(1);

pub fn set_mode(mode: ExecMode) {
    MODE.store(matches!(mode, ExecMode::Parallel) as u8, Ordering::SeqCst);
}

pub fn mode() -> ExecMode {
    if cfg!(feature = "parallel") && MODE.load(Ordering::SeqCst) == 1 {
        ExecMode::Parallel
    } else {
        ExecMode::Sequential
    }
}

/// Runs `f` with the given mode and restores the previous one.
pub fn with_mode<R>(m: ExecMode, f: impl FnOnce() -> R) -> R {
    let prev = mode();
    set_mode(m);
    let out = f();
    set_mode(prev);
    out
}

/// `items.iter().map(f).collect()`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == ExecMode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// `(0..n).map(f).collect()`, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == ExecMode::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Fallible variant of [`map`]; returns the first error in item order.
pub fn try_map<T, R, E, F>(items: &[T], f: F) -> Result<Vec<R>, E>
where
    T: Sync,
    R: Send,
    E: Send,
    F: Fn(&T) -> Result<R, E> + Sync + Send,
{
    map(items, f).into_iter().collect()
}
