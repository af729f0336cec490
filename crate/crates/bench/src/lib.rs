//! Benchmarks live in `benches/`; run them with `cargo bench -p finite-analogues-bench`.
