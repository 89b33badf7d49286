// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmarks for the dnalign pipeline live under `benches/`.
