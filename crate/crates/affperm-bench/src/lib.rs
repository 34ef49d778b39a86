//! Criterion benchmarks for `affperm`; the benches live in `benches/`.
