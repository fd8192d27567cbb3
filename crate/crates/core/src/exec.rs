//! Data-parallel summation helpers.
//!
//! Every hot loop in this crate is a sum of independent per-element terms in
//! exact arithmetic, so the reduction is associative and commutative and the
//! result is bit-identical regardless of schedule. With the `parallel`
//! feature the work is spread over rayon; without it the same helpers run
//! sequentially. The `*_seq` variants are always sequential, so benchmarks
//! can compare both paths in a single build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_sum_seq<T, R, M, A>(items: &[T], map: M, add: A, zero: R) -> R
where
    M: Fn(&T) -> R,
    A: Fn(R, R) -> R,
{
    items.iter().map(map).fold(zero, add)
}

#[cfg(feature = "parallel")]
pub(crate) fn map_sum<T, R, M, A>(items: &[T], map: M, add: A, zero: R) -> R
where
    T: Sync,
    R: Send + Sync + Clone,
    M: Fn(&T) -> R + Sync + Send,
    A: Fn(R, R) -> R + Sync + Send,
{
    items
        .par_iter()
        .map(map)
        .reduce(|| zero.clone(), add)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_sum<T, R, M, A>(items: &[T], map: M, add: A, zero: R) -> R
where
    T: Sync,
    R: Send + Sync + Clone,
    M: Fn(&T) -> R + Sync + Send,
    A: Fn(R, R) -> R + Sync + Send,
{
    map_sum_seq(items, map, add, zero)
}

/// Order-preserving map over independent items.
#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, R, M>(items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(map).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, R, M>(items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(map).collect()
}
