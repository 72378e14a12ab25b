//! Benchmark-only crate; see `benches/negaz4.rs`.
