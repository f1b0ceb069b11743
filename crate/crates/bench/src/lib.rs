//! Criterion benchmarks live under benches/; nothing to export.
