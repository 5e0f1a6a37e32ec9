//! Benchmark-only package; see `benches/degrees.rs`.
