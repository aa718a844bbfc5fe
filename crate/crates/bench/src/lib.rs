//! Benchmarks for the symbolic kernel live under `benches/`.
