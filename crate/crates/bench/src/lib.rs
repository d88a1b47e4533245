//! Criterion benchmarks for `metalie-core`; see `benches/`.
