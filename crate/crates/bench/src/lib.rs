//! Inputs shared by the benchmarks.

use grig_core::Params;

pub const BENCH_PARAMS: Params = Params::new(1.0, 1.0, 2.0, 3.0);
