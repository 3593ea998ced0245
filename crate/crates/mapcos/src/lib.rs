//! Approximation of functions analytic on (0,1) with endpoint
//! singularities, by variable transforms composed with truncated-domain
//! cosine expansions.
//!
//! Four transforms map (0,1) onto the real line: the exponential map, the
//! double-exponential map, and their parametrized (slit-strip) variants
//! which trade a strip-width parameter `alpha` for far better resolution
//! of oscillatory behaviour. The transplanted function is truncated to
//! `[-L, L]`, rescaled to `[-1, 1]` and expanded in `cos(k pi (y+1)/2)`;
//! coefficients come from equispaced samples in O(n log n) via FFTs.
//!
//! The crate is generic over the scalar type (`f32`/`f64`) through the
//! [`Scalar`] trait, and over real or complex sample values through
//! [`Value`]. The aliases below fix the common double-precision choices.
//!
//! ```
//! use mapcos::{MapSpec, MappedApproximant};
//!
//! let f = |x: f64| x.powf(1.0 / 3.0);
//! let map = MapSpec::<f64>::e();
//! let p = MappedApproximant::build(f, map, 24.0, 576).unwrap();
//! let err = p.measure_error(f, 20_000).unwrap();
//! assert!(err.total < 1e-3);
//! ```

pub mod analysis;
pub mod approximant;
pub mod cosine;
pub mod error;
mod fft;
pub mod maps;
mod scalar;
pub mod special;

pub use approximant::{ErrorReport, MappedApproximant, ParameterRule, RuleVariant};
pub use cosine::{CosineExpansion, SampledFunction};
pub use error::{AnalysisError, BuildError, CosineError, MapError, SpecialError};
pub use maps::{FinitePrecisionWarning, MapKind, MapSpec};
pub use scalar::{Scalar, Value};

use num_complex::Complex;

/// Double-precision complex value.
pub type Complex64 = Complex<f64>;
/// Real-valued expansion over `f64`.
pub type RealExpansion = CosineExpansion<f64>;
/// Complex-valued expansion over `f64`.
pub type ComplexExpansion = CosineExpansion<Complex64>;
/// Real-valued approximant over `f64`.
pub type RealApproximant = MappedApproximant<f64, f64>;
/// Complex-valued approximant over `f64`.
pub type ComplexApproximant = MappedApproximant<f64, Complex64>;
/// Resolution sweep record over `f64`.
pub type ResolutionRecord = analysis::ResolutionRecord<f64>;
