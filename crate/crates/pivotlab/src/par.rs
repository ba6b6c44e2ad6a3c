//! Scoped worker pool over an index range with deterministic merge order.

/// Splits `0..len` into contiguous chunks, maps each chunk on a worker
/// thread, and returns the per-chunk results in chunk order. With one
/// thread (or a short input) everything runs inline, so results never
/// depend on scheduling.
pub fn map_chunks<R, F>(len: u64, threads: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(std::ops::Range<u64>) -> R + Sync,
{
    let threads = threads.max(1);
    if threads == 1 || len < 2 {
        return vec![f(0..len)];
    }
    let workers = threads.min(len as usize);
    let chunk = len.div_ceil(workers as u64);
    let ranges: Vec<std::ops::Range<u64>> = (0..workers as u64)
        .map(|w| {
            let start = w * chunk;
            let end = ((w + 1) * chunk).min(len);
            start..end
        })
        .filter(|r| !r.is_empty())
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| scope.spawn(|| f(r)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Maps a slice in parallel, preserving element order.
pub fn map_slice<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let chunks = map_chunks(items.len() as u64, threads, |range| {
        items[range.start as usize..range.end as usize]
            .iter()
            .map(&f)
            .collect::<Vec<R>>()
    });
    chunks.into_iter().flatten().collect()
}
