//! Criterion benchmarks for morsekit; see `benches/`.
