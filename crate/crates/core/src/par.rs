//! Data-parallel helpers. With the `parallel` feature these go through rayon;
//! without it they are plain sequential iterators with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Maps then folds with an associative `combine`; `identity` must be neutral.
pub fn map_reduce<T, R, F, I, C>(items: Vec<T>, f: F, identity: I, combine: C) -> R
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
    I: Fn() -> R + Send + Sync,
    C: Fn(R, R) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).reduce(identity, combine)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).fold(identity(), combine)
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
