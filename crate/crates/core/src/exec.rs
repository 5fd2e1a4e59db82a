//! Index-range combinators used by the exhaustive sweeps.
//!
//! With the `parallel` feature the ranges are split across the rayon pool,
//! otherwise they run on the calling thread. Every combinator is
//! order-preserving, so results never depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Least index in `0..n` satisfying `pred`.
pub(crate) fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_first(|&i| pred(i))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find(|&i| pred(i))
    }
}

/// First `Some` produced over `0..n`, by index.
pub(crate) fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(f)
    }
}

/// All `Some` values over `0..n`, in index order.
pub(crate) fn filter_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter_map(f).collect()
    }
}

/// Order-preserving filter over a slice.
pub(crate) fn filter_slice<T, F>(items: Vec<T>, pred: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().filter(|t| pred(t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().filter(|t| pred(t)).collect()
    }
}

/// Whether the parallel backend is compiled in.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
