//! Criterion benchmarks for `hopftab`; see `benches/algebra.rs`.
