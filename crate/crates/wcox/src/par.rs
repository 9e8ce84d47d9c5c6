//! Deterministic data-parallel scans.
//!
//! With the `parallel` feature the index range is distributed over rayon
//! workers; without it the same fold runs sequentially. Accumulators must
//! merge commutatively and associatively with deterministic tie-breaking,
//! so the final value is identical for every schedule and thread count.

/// Accumulator that can absorb the result of another worker.
pub trait Merge {
    fn merge(self, other: Self) -> Self;
}

#[cfg(feature = "parallel")]
pub fn map_reduce<R>(
    n: usize,
    identity: impl Fn() -> R + Sync,
    map: impl Fn(usize) -> R + Sync,
) -> R
where
    R: Merge + Send,
{
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .fold(&identity, |acc, i| acc.merge(map(i)))
        .reduce(&identity, R::merge)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<R>(
    n: usize,
    identity: impl Fn() -> R + Sync,
    map: impl Fn(usize) -> R + Sync,
) -> R
where
    R: Merge + Send,
{
    (0..n).fold(identity(), |acc, i| acc.merge(map(i)))
}
