//! Criterion benchmarks for `firewsn-core`; see `benches/`.
