//! Scalar special functions and cancellation-safe primitives.

use crate::error::SpecialError;
use crate::scalar::{lit, Scalar};

/// `log(e^u - 1)` for `u > 0` without overflow or cancellation.
pub(crate) fn log_expm1<T: Scalar>(u: T) -> T {
    if u > lit::<T>(0.5) {
        u + (-(-u).exp()).ln_1p()
    } else {
        u.exp_m1().ln()
    }
}

/// `log(cosh(h))` for `h >= 0` without overflow.
pub(crate) fn log_cosh<T: Scalar>(h: T) -> T {
    if h > lit::<T>(20.0) {
        h - T::LN_2() + (-(h + h)).exp().ln_1p()
    } else {
        h.cosh().ln()
    }
}

/// `softplus(u + h) - softplus(u - h)` for `h >= 0`, formed so the two large
/// branches never cancel. Tends to `2h` as `u -> +inf` and to `0` as
/// `u -> -inf` (also for `u = +-inf` exactly).
pub(crate) fn softplus_diff_sym<T: Scalar>(u: T, h: T) -> T {
    if u.is_nan() {
        return u;
    }
    if u >= h {
        (h + h) + (-(u + h)).exp().ln_1p() - (-(u - h)).exp().ln_1p()
    } else if u <= -h {
        (u + h).exp().ln_1p() - (u - h).exp().ln_1p()
    } else {
        (u + h) + (-(u + h)).exp().ln_1p() - (u - h).exp().ln_1p()
    }
}

/// Principal-branch Lambert-W: the inverse of `w -> w*e^w` on `[-1, inf)`.
///
/// Halley iteration, seeded with `log(1+x)` for large positive arguments,
/// `w ~ x` near zero, and the square-root expansion near the branch point.
/// Terminates when `|w*e^w - x| <= tol * max(1, |x|)`, capped at 100
/// iterations.
pub fn lambert_w0<T: Scalar>(x: T, tol: T) -> Result<T, SpecialError> {
    let branch = -T::E().recip();
    if x < branch {
        return Err(SpecialError::LambertDomain {
            x: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    if x == branch {
        return Ok(-T::one());
    }
    if x == T::zero() {
        return Ok(T::zero());
    }

    let mut w = if x > T::one() {
        // W(x) ~ log x - log log x for large x; log(1+x) is close enough to start.
        x.ln_1p()
    } else if x < lit::<T>(-0.25) {
        // Series about the branch point: W ~ -1 + sqrt(2(e x + 1)).
        let p = (lit::<T>(2.0) * (T::E() * x + T::one())).sqrt();
        -T::one() + p
    } else {
        x
    };

    let scale = T::one().max(x.abs());
    let cap = 100;
    for _ in 0..cap {
        let ew = w.exp();
        let f = w * ew - x;
        if f.abs() <= tol * scale {
            return Ok(w);
        }
        let fp = ew * (w + T::one());
        let denom = fp - f * (w + lit::<T>(2.0)) / (lit::<T>(2.0) * w + lit::<T>(2.0));
        let step = f / denom;
        w -= step;
        // Principal branch stays on or above -1.
        if w < -T::one() {
            w = -T::one();
        }
    }
    let residual = (w * w.exp() - x).abs();
    if residual <= tol * scale {
        Ok(w)
    } else {
        Err(SpecialError::LambertNoConvergence {
            iters: cap,
            residual: residual.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// Jacobi elliptic `sn(u, k)` with modulus `k` in `[0, 1)`.
pub fn jacobi_sn<T: Scalar>(u: T, k: T) -> T {
    jacobi_sn_cn(u, k).0
}

/// Jacobi `sn` and `cn` from the same descending-Landen/AGM pass.
pub fn jacobi_sn_cn<T: Scalar>(u: T, k: T) -> (T, T) {
    assert!(
        k >= T::zero() && k < T::one(),
        "jacobi_sn: modulus must lie in [0, 1)"
    );
    if k == T::zero() {
        return (u.sin(), u.cos());
    }

    const MAX_LEVELS: usize = 10;
    let mut a = [T::zero(); MAX_LEVELS + 1];
    let mut c = [T::zero(); MAX_LEVELS + 1];
    a[0] = T::one();
    c[0] = k;
    let mut b = (T::one() - k * k).sqrt();
    let mut levels = 0;
    for i in 1..=MAX_LEVELS {
        a[i] = (a[i - 1] + b) * lit::<T>(0.5);
        c[i] = (a[i - 1] - b) * lit::<T>(0.5);
        b = (a[i - 1] * b).sqrt();
        levels = i;
        if c[i].abs() < lit::<T>(1e-15) {
            break;
        }
    }

    let mut phi = T::from_usize(1 << levels).unwrap() * a[levels] * u;
    for i in (1..=levels).rev() {
        let s = (c[i] * phi.sin() / a[i]).min(T::one()).max(-T::one());
        phi = (phi + s.asin()) * lit::<T>(0.5);
    }
    (phi.sin(), phi.cos())
}

/// `log((1 + e^a) / (1 + e^b))` without overflow or catastrophic cancellation.
///
/// For positive arguments the softplus rearrangement
/// `log1p(e^v) = v + log1p(e^-v)` keeps the explicit difference `a - b`
/// intact. Accepts infinite arguments.
pub fn log_ratio_1p_exp<T: Scalar>(a: T, b: T) -> T {
    if a == b {
        return T::zero();
    }
    let apos = a > T::zero();
    let bpos = b > T::zero();
    match (apos, bpos) {
        (true, true) => (a - b) + (-a).exp().ln_1p() - (-b).exp().ln_1p(),
        (false, false) => a.exp().ln_1p() - b.exp().ln_1p(),
        (true, false) => a + (-a).exp().ln_1p() - b.exp().ln_1p(),
        (false, true) => a.exp().ln_1p() - b - (-b).exp().ln_1p(),
    }
}
