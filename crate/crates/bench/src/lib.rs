//! Benchmarks for latcount-core live in `benches/`.

/// Indices with many divisors, used as benchmark inputs.
pub const HIGHLY_COMPOSITE: [u64; 4] = [360, 5040, 55440, 720720];
