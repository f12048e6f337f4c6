//! Grid constructors shared by sweeps and witness searches.

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * (i as f64 / (n - 1) as f64))
            .collect(),
    }
}

/// `n` multiplicatively spaced points from `lo` to `hi` inclusive;
/// requires `0 < lo <= hi`.
pub fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let ratio = hi / lo;
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo * ratio.powf(i as f64 / (n - 1) as f64))
            .collect(),
    }
}

/// `n` rewards from `x0` to `x0 + span` whose offsets are log-spaced in
/// `1 + offset`, so low rewards are sampled densely and high rewards
/// sparsely.
pub fn log1p_rewards(x0: f64, span: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![x0],
        _ => (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                x0 + ((1.0 + span).powf(t) - 1.0)
            })
            .collect(),
    }
}
