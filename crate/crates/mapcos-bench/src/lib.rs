//! Benchmark harness around `mapcos`: convergence sweeps, resolution
//! (points-per-wavelength) sweeps, map comparisons on a fixed function
//! suite, and constant optimization, all emitting machine-readable CSV.

pub mod commands;
pub mod config;
pub mod functions;
pub mod output;

pub use config::{BenchError, RunConfig};
