//! Ordered fan-out for grid sweeps: results land in their input slots, so
//! output bytes never depend on the thread count.

/// Maps `f` over `0..n`, splitting the range across `threads` scoped
/// workers.
pub fn par_map<T, F>(n: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if threads <= 1 || n <= 1 {
        return (0..n).map(f).collect();
    }
    let chunk = n.div_ceil(threads);
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (index, piece) in slots.chunks_mut(chunk).enumerate() {
            let f = &f;
            scope.spawn(move || {
                for (offset, slot) in piece.iter_mut().enumerate() {
                    *slot = Some(f(index * chunk + offset));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("every slot is filled"))
        .collect()
}
