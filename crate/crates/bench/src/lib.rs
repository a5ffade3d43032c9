//! Criterion benchmarks for `hansen-core`; see `benches/pipeline.rs`.
