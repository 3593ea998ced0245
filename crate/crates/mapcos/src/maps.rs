//! The four variable transforms between (0,1) and the real line, their
//! inverses, and the auxiliary function `g` used by the parametrized
//! double-exponential map.
//!
//! All real inverse maps are total: they accept any real `s` (including
//! infinities) and saturate to the exact limit values 0 and 1 once the
//! stable formulas underflow. Forward maps are defined on the open
//! interval (0,1) only.

use num_complex::Complex;

use crate::error::MapError;
use crate::scalar::{lit, Scalar};
use crate::special::{log_cosh, log_expm1, softplus_diff_sym};

/// Finite-precision guidance threshold for the parametrized exponential map.
pub const SE_ALPHA_GUARD: f64 = 0.0044;
/// Finite-precision guidance threshold for the parametrized double-exponential map.
pub const SDE_ALPHA_GUARD: f64 = 0.24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    E,
    Se,
    De,
    Sde,
}

impl MapKind {
    pub fn label(&self) -> &'static str {
        match self {
            MapKind::E => "e",
            MapKind::Se => "se",
            MapKind::De => "de",
            MapKind::Sde => "sde",
        }
    }

    /// Whether the map takes a strip-width parameter alpha.
    pub fn parametrized(&self) -> bool {
        matches!(self, MapKind::Se | MapKind::Sde)
    }
}

impl std::fmt::Display for MapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Structured warning raised when alpha lies below the overflow-guidance
/// threshold for its map family. Advisory only; evaluation stays safe.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FinitePrecisionWarning {
    pub kind: MapKind,
    pub alpha: f64,
    pub threshold: f64,
}

impl std::fmt::Display for FinitePrecisionWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "alpha={:e} below {} guidance threshold {:e}",
            self.alpha, self.kind, self.threshold
        )
    }
}

/// A concrete transform: the family plus its parameter where applicable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MapSpec<T> {
    E,
    De,
    Se { alpha: T },
    Sde { alpha: T },
}

impl<T: Scalar> MapSpec<T> {
    pub fn e() -> Self {
        MapSpec::E
    }

    pub fn de() -> Self {
        MapSpec::De
    }

    pub fn se(alpha: T) -> Result<Self, MapError> {
        check_alpha(alpha)?;
        Ok(MapSpec::Se { alpha })
    }

    pub fn sde(alpha: T) -> Result<Self, MapError> {
        check_alpha(alpha)?;
        Ok(MapSpec::Sde { alpha })
    }

    pub fn new(kind: MapKind, alpha: Option<T>) -> Result<Self, MapError> {
        match (kind, alpha) {
            (MapKind::E, None) => Ok(MapSpec::E),
            (MapKind::De, None) => Ok(MapSpec::De),
            (MapKind::Se, Some(a)) => MapSpec::se(a),
            (MapKind::Sde, Some(a)) => MapSpec::sde(a),
            (_, a) => Err(MapError::InvalidAlpha {
                alpha: a.and_then(|x| x.to_f64()).unwrap_or(f64::NAN),
            }),
        }
    }

    pub fn kind(&self) -> MapKind {
        match self {
            MapSpec::E => MapKind::E,
            MapSpec::De => MapKind::De,
            MapSpec::Se { .. } => MapKind::Se,
            MapSpec::Sde { .. } => MapKind::Sde,
        }
    }

    pub fn alpha(&self) -> Option<T> {
        match self {
            MapSpec::Se { alpha } | MapSpec::Sde { alpha } => Some(*alpha),
            _ => None,
        }
    }

    /// Half-width of the strip on which the inverse map is analytic.
    pub fn strip_half_width(&self) -> T {
        match self {
            MapSpec::E => T::PI(),
            MapSpec::De => T::FRAC_PI_2(),
            MapSpec::Se { alpha } => *alpha,
            MapSpec::Sde { alpha } => *alpha * lit::<T>(0.5),
        }
    }

    pub fn finite_precision_warning(&self) -> Option<FinitePrecisionWarning> {
        let (alpha, threshold) = match self {
            MapSpec::Se { alpha } => (*alpha, SE_ALPHA_GUARD),
            MapSpec::Sde { alpha } => (*alpha, SDE_ALPHA_GUARD),
            _ => return None,
        };
        if alpha.to_f64().unwrap_or(f64::NAN) < threshold {
            Some(FinitePrecisionWarning {
                kind: self.kind(),
                alpha: alpha.to_f64().unwrap_or(f64::NAN),
                threshold,
            })
        } else {
            None
        }
    }

    /// Forward transform `s = psi(x)` for `x` in (0,1).
    pub fn forward(&self, x: T) -> Result<T, MapError> {
        if !(x > T::zero() && x < T::one()) {
            return Err(MapError::DomainX {
                x: x.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(match self {
            MapSpec::E => logit(x),
            MapSpec::De => (logit(x) / T::PI()).asinh(),
            MapSpec::Se { alpha } => se_forward(x, *alpha),
            MapSpec::Sde { alpha } => {
                let s = se_forward(x, *alpha);
                g_forward(s, *alpha, lit::<T>(1e-14))?
            }
        })
    }

    /// Inverse transform `x = psi^{-1}(s)`, total over the extended reals
    /// and clamped to [0,1].
    pub fn inverse(&self, s: T) -> T {
        let x = match self {
            MapSpec::E => logistic(s),
            MapSpec::De => logistic(T::PI() * s.sinh()),
            MapSpec::Se { alpha } => se_inverse(s, *alpha),
            MapSpec::Sde { alpha } => {
                let a = *alpha;
                let h = T::FRAC_PI_2() / a;
                if s.is_infinite() {
                    return if s > T::zero() { T::one() } else { T::zero() };
                }
                let u = T::PI() * s / a;
                let w = u + sinh_over_cosh(u, h);
                a / T::PI() * softplus_diff_sym(w, h)
            }
        };
        x.min(T::one()).max(T::zero())
    }

    /// Analytic continuation of the inverse map inside its strip.
    /// Principal-branch logarithms, continuous along the real axis; no
    /// branch tracking across the slits.
    pub fn inverse_complex(&self, z: Complex<T>) -> Result<Complex<T>, MapError> {
        let bound = self.strip_half_width();
        if !(z.im.abs() < bound) {
            return Err(MapError::OutsideStrip {
                im: z.im.abs().to_f64().unwrap_or(f64::NAN),
                bound: bound.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(match self {
            MapSpec::E => logistic_c(z),
            MapSpec::De => logistic_c(z.sinh() * T::PI()),
            MapSpec::Se { alpha } => se_inverse_c(z, *alpha),
            MapSpec::Sde { alpha } => {
                let a = *alpha;
                let h = T::FRAC_PI_2() / a;
                let u = z * (T::PI() / a);
                let w = u + sinh_over_cosh_c(u, h);
                se_inverse_c_scaled(w, a, h)
            }
        })
    }
}

fn check_alpha<T: Scalar>(alpha: T) -> Result<(), MapError> {
    if alpha > T::zero() && alpha.is_finite() {
        Ok(())
    } else {
        Err(MapError::InvalidAlpha {
            alpha: alpha.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// `log(x / (1-x))`.
fn logit<T: Scalar>(x: T) -> T {
    x.ln() - (-x).ln_1p()
}

/// `1 / (1 + e^{-t})`, stable on both tails.
fn logistic<T: Scalar>(t: T) -> T {
    if t >= T::zero() {
        T::one() / (T::one() + (-t).exp())
    } else {
        let e = t.exp();
        e / (T::one() + e)
    }
}

fn logistic_c<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    if z.re >= T::zero() {
        one / (one + (-z).exp())
    } else {
        let e = z.exp();
        e / (one + e)
    }
}

/// psi_SE(x): evaluated with expm1/log1p primitives, with the half-shift
/// that makes it the exact inverse of `se_inverse` (psi(1/2) = 0).
fn se_forward<T: Scalar>(x: T, alpha: T) -> T {
    let u = T::PI() * x / alpha;
    let v = T::PI() * (T::one() - x) / alpha;
    // log(1 - e^{-v}) = log_expm1(v) - v
    alpha / T::PI() * (log_expm1(u) - (log_expm1(v) - v)) - lit::<T>(0.5)
}

/// psi_SE^{-1}(s) = (alpha/pi) * [softplus(u+h) - softplus(u-h)],
/// u = pi s / alpha, h = pi / (2 alpha).
fn se_inverse<T: Scalar>(s: T, alpha: T) -> T {
    let h = T::FRAC_PI_2() / alpha;
    if s.is_infinite() {
        return if s > T::zero() { T::one() } else { T::zero() };
    }
    let u = T::PI() * s / alpha;
    alpha / T::PI() * softplus_diff_sym(u, h)
}

/// `sinh(u) / cosh(h)` without overflow: routed through `log cosh`.
fn sinh_over_cosh<T: Scalar>(u: T, h: T) -> T {
    let cbar = log_cosh(h);
    if u.abs() <= T::one() {
        u.sinh() * (-cbar).exp()
    } else {
        lit::<T>(0.5) * ((u - cbar).exp() - (-u - cbar).exp())
    }
}

fn sinh_over_cosh_c<T: Scalar>(u: Complex<T>, h: T) -> Complex<T> {
    let cbar = log_cosh(h);
    if u.re.abs() <= T::one() {
        u.sinh() * (-cbar).exp()
    } else {
        let half = lit::<T>(0.5);
        ((u - cbar).exp() - (-u - cbar).exp()) * half
    }
}

fn se_inverse_c<T: Scalar>(z: Complex<T>, alpha: T) -> Complex<T> {
    let h = T::FRAC_PI_2() / alpha;
    let u = z * (T::PI() / alpha);
    se_inverse_c_scaled(u, alpha, h)
}

/// `softplus(u+h) - softplus(u-h)` with principal-branch complex logs,
/// branched on `Re u` like the real version so the explicit `2h` term
/// survives when `|Re u|` is huge.
fn se_inverse_c_scaled<T: Scalar>(u: Complex<T>, alpha: T, h: T) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let hc = Complex::new(h, T::zero());
    let diff = if u.re >= h {
        Complex::new(h + h, T::zero()) + (one + (-(u + hc)).exp()).ln()
            - (one + (-(u - hc)).exp()).ln()
    } else if u.re <= -h {
        (one + (u + hc).exp()).ln() - (one + (u - hc).exp()).ln()
    } else {
        (u + hc) + (one + (-(u + hc)).exp()).ln() - (one + (u - hc).exp()).ln()
    };
    diff * (alpha / T::PI())
}

/// `g^{-1}(t; alpha) = t + (alpha/pi) sinh(pi t/alpha)/cosh(pi/(2 alpha))`,
/// overflow-safe via log-space `cosh`. Errors only if the true value
/// exceeds the floating-point range.
pub fn g_inverse<T: Scalar>(t: T, alpha: T) -> Result<T, MapError> {
    check_alpha(alpha)?;
    let v = g_inverse_raw(t, alpha);
    if v.is_finite() || t.is_infinite() || t.is_nan() {
        Ok(v)
    } else {
        Err(MapError::Overflow {
            t: t.to_f64().unwrap_or(f64::NAN),
            alpha: alpha.to_f64().unwrap_or(f64::NAN),
        })
    }
}

pub(crate) fn g_inverse_raw<T: Scalar>(t: T, alpha: T) -> T {
    let h = T::FRAC_PI_2() / alpha;
    t + alpha / T::PI() * sinh_over_cosh(T::PI() * t / alpha, h)
}

/// Solve `g^{-1}(t) = s` for `t` by bisection-safeguarded Newton.
///
/// The bracket `[min(0,s), max(0,s)]` always contains the root because
/// `|g^{-1}(t)| >= |t|` with matching sign, and `d g^{-1}/dt >= 1`.
/// Terminates when `|g^{-1}(t) - s| <= tol * max(1, |s|)`.
pub fn g_forward<T: Scalar>(s: T, alpha: T, tol: T) -> Result<T, MapError> {
    check_alpha(alpha)?;
    if s == T::zero() {
        return Ok(T::zero());
    }
    let h = T::FRAC_PI_2() / alpha;
    let cbar = log_cosh(h);
    let scale = T::one().max(s.abs());

    let mut lo = T::zero().min(s);
    let mut hi = T::zero().max(s);

    // Initial guess: invert the sinh term alone, in log space when large.
    let w_log = (T::PI() * s.abs() / alpha).ln() + cbar;
    let t0_mag = if w_log > lit::<T>(30.0) {
        alpha / T::PI() * (w_log + T::LN_2())
    } else {
        alpha / T::PI() * w_log.exp().asinh()
    };
    let mut t = s.signum() * t0_mag.min(s.abs());
    if !(t > lo && t < hi) {
        t = (lo + hi) * lit::<T>(0.5);
    }

    let cap = 100;
    let mut residual = T::infinity();
    for _ in 0..cap {
        let r = g_inverse_raw(t, alpha) - s;
        residual = r.abs();
        if residual <= tol * scale {
            return Ok(t);
        }
        if r > T::zero() {
            hi = t;
        } else {
            lo = t;
        }
        // derivative: 1 + cosh(pi t/alpha)/cosh(h)
        let u = (T::PI() * t / alpha).abs();
        let d = T::one() + lit::<T>(0.5) * ((u - cbar).exp() + (-u - cbar).exp());
        let next = t - r / d;
        t = if next.is_finite() && next > lo && next < hi {
            next
        } else {
            (lo + hi) * lit::<T>(0.5)
        };
        if lo == hi {
            break;
        }
    }
    let r = (g_inverse_raw(t, alpha) - s).abs();
    if r <= tol * scale {
        Ok(t)
    } else {
        Err(MapError::NoConvergence {
            iters: cap,
            residual: residual.to_f64().unwrap_or(f64::NAN),
        })
    }
}
