//! Benchmarks for nset-core live in `benches/`.
