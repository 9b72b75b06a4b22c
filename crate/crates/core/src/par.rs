//! Thin dispatch layer between rayon and plain iteration.
//!
//! Every helper has identical output for both backends: reductions are
//! exact-field sums (associative and commutative), and collections preserve
//! input order, so a build without the `parallel` feature is byte-for-byte
//! equivalent. Work is handed to rayon in contiguous chunks so that tiny
//! per-item closures (a quadric evaluation, a 10x10 rank) amortize the task
//! overhead.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_collect_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().with_min_len(32).map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn flat_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    items.into_par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn flat_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> Vec<U>,
{
    items.into_iter().flat_map(f).collect()
}

/// Order-preserving filter over owned items, chunked for rayon.
#[cfg(feature = "parallel")]
pub(crate) fn filter_collect<T, F>(items: Vec<T>, keep: F) -> Vec<T>
where
    T: Send + Sync + Copy,
    F: Fn(&T) -> bool + Sync + Send,
{
    items
        .par_chunks(2048)
        .flat_map_iter(|chunk| chunk.iter().copied().filter(&keep).collect::<Vec<T>>())
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_collect<T, F>(items: Vec<T>, keep: F) -> Vec<T>
where
    T: Copy,
    F: Fn(&T) -> bool,
{
    items.into_iter().filter(|t| keep(t)).collect()
}

/// Order-preserving filter-map over owned items, chunked for rayon.
#[cfg(feature = "parallel")]
pub(crate) fn filter_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync + Copy,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    items
        .par_chunks(512)
        .flat_map_iter(|chunk| chunk.iter().filter_map(&f).collect::<Vec<U>>())
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Copy,
    F: Fn(&T) -> Option<U>,
{
    items.iter().filter_map(f).collect()
}

/// Sum of `f` over index chunks of `0..n`; `add` must be associative and
/// commutative (exact field addition is).
#[cfg(feature = "parallel")]
pub(crate) fn sum_over_range<U, F, A>(n: usize, chunk: usize, zero: U, f: F, add: A) -> U
where
    U: Send + Sync + Clone,
    F: Fn(std::ops::Range<usize>) -> U + Sync + Send,
    A: Fn(U, U) -> U + Sync + Send,
{
    let starts: Vec<usize> = (0..n).step_by(chunk.max(1)).collect();
    starts
        .into_par_iter()
        .map(|s| f(s..(s + chunk).min(n)))
        .reduce(|| zero.clone(), add)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_over_range<U, F, A>(n: usize, _chunk: usize, zero: U, f: F, add: A) -> U
where
    U: Clone,
    F: Fn(std::ops::Range<usize>) -> U,
    A: Fn(U, U) -> U,
{
    if n == 0 {
        return zero;
    }
    add(zero, f(0..n))
}
