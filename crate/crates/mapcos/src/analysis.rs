//! Evaluators for the convergence/resolution bounds and the machinery that
//! measures delta-resolution (degrees of freedom needed to resolve a given
//! oscillation frequency).

use std::collections::BTreeMap;

use crate::approximant::ParameterRule;
use crate::error::AnalysisError;
use crate::maps::MapKind;
use crate::scalar::{lit, Scalar};

/// Constants entering the generic error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundParams<T> {
    pub beta: T,
    pub tau: T,
    pub m_psi: T,
    pub n_psi: T,
    pub c_psi: T,
}

impl<T: Scalar> BoundParams<T> {
    pub fn new(beta: T, tau: T, m_psi: T, n_psi: T, c_psi: T) -> Result<Self, AnalysisError> {
        let bad = |name: &'static str, value: T| AnalysisError::InvalidParameter {
            name,
            value: value.to_f64().unwrap_or(f64::NAN),
        };
        if !(beta > T::zero()) {
            return Err(bad("beta", beta));
        }
        if !(tau > T::zero() && tau <= T::one()) {
            return Err(bad("tau", tau));
        }
        for (name, v) in [("M_psi", m_psi), ("N_psi", n_psi), ("C_psi", c_psi)] {
            if !(v >= T::zero()) {
                return Err(bad(name, v));
            }
        }
        Ok(BoundParams {
            beta,
            tau,
            m_psi,
            n_psi,
            c_psi,
        })
    }
}

/// The generic truncated-expansion error bound
/// `3 N b^{-1} C^tau + 114 M b^{-2} n exp(-beta n pi / (2L))`
/// with `b = min(beta, 1)`; requires `L <= n`.
pub fn general_bound<T: Scalar>(p: &BoundParams<T>, n: usize, l: T) -> Result<T, AnalysisError> {
    let nf = T::from_usize(n).unwrap();
    if !(l <= nf) {
        return Err(AnalysisError::HypothesisViolated {
            l: l.to_f64().unwrap_or(f64::NAN),
            n,
        });
    }
    let b = p.beta.min(T::one());
    let endpoint = lit::<T>(3.0) * p.n_psi / b * p.c_psi.powf(p.tau);
    let interior = lit::<T>(114.0) * p.m_psi / (b * b)
        * nf
        * (-p.beta * nf * T::PI() / (lit::<T>(2.0) * l)).exp();
    Ok(endpoint + interior)
}

/// The decay index `rho` of the rate statements (`error ~
/// rho^{-sqrt(n)}` for the single-exponential maps, `rho^{-n/log(cn)}` for
/// the double-exponential ones).
///
/// The SDE rule takes the larger of its two branches where every
/// other map takes the smaller; `rate_index_min` applies the min
/// convention uniformly for comparison.
pub fn rate_index<T: Scalar>(rule: &ParameterRule<T>, beta: T, tau: T) -> T {
    let (r1, r2) = rate_index_branches(rule, beta, tau);
    match rule.kind() {
        MapKind::Sde => r1.max(r2),
        _ => r1.min(r2),
    }
}

/// Min-convention variant of [`rate_index`] (identical except for SDE).
pub fn rate_index_min<T: Scalar>(rule: &ParameterRule<T>, beta: T, tau: T) -> T {
    let (r1, r2) = rate_index_branches(rule, beta, tau);
    r1.min(r2)
}

/// The two competing branches (interior-driven, endpoint-driven).
pub fn rate_index_branches<T: Scalar>(rule: &ParameterRule<T>, beta: T, tau: T) -> (T, T) {
    let two = lit::<T>(2.0);
    match *rule {
        ParameterRule::E { c } => ((beta * T::PI() / (two * c)).exp(), (tau * c).exp()),
        ParameterRule::Se { alpha0, l0 } => (
            (alpha0 * T::PI() / (two * l0 + T::one())).exp(),
            (tau * T::PI() * l0 / alpha0).exp(),
        ),
        ParameterRule::De { c } => (
            (beta * T::FRAC_PI_2()).exp(),
            (tau * T::FRAC_PI_2() * c).exp(),
        ),
        ParameterRule::Sde { l0, c } => (
            (T::PI() * T::PI() * l0 / (lit::<T>(4.0) * l0 + two)).exp(),
            (c * tau).exp(),
        ),
    }
}

/// `H(t) = 0` for `t < 1`, `t arccos(1/sqrt(t)) - sqrt(t-1)` for `t >= 1`;
/// continuous at 1, and `H(t)/t -> pi/2` like `pi/2 - 2/sqrt(t)`.
pub fn resolution_h<T: Scalar>(t: T) -> T {
    if t < T::one() {
        return T::zero();
    }
    let inv_sqrt = t.sqrt().recip().min(T::one());
    t * inv_sqrt.acos() - (t - T::one()).sqrt()
}

/// The shared crude prefactor `A = 114 pi^2` of the oscillatory bounds.
pub fn bound_prefactor<T: Scalar>() -> T {
    lit::<T>(114.0) * T::PI() * T::PI()
}

/// Interior and endpoint terms of the oscillatory error bound for the
/// exponential map with `L = c sqrt(n)` (prefactor `A` not included):
/// interior `(1-(n*/n)^{1/4})^{-1} exp(-pi w H(sqrt(n/n*)))`,
/// endpoint `2 pi w (1-(n*/n)^{1/4})^{-2} exp(4 pi w e^{pi-c sqrt(n)} - c sqrt(n))`,
/// valid for `n > n* = c^2 w^2` and `w >= pi + log 2`.
pub fn psi_e_resolution_bound<T: Scalar>(
    omega: T,
    n: usize,
    c: T,
) -> Result<(T, T), AnalysisError> {
    if !(omega >= T::PI() + T::LN_2()) {
        return Err(AnalysisError::OmegaTooSmall {
            omega: omega.to_f64().unwrap_or(f64::NAN),
        });
    }
    let n_star = c * c * omega * omega;
    let nf = T::from_usize(n).unwrap();
    if !(nf > n_star) {
        return Err(AnalysisError::BelowCritical {
            n,
            n_star: n_star.to_f64().unwrap_or(f64::NAN),
        });
    }
    let q = (n_star / nf).powf(lit::<T>(0.25));
    let pref = (T::one() - q).recip();
    let two_pi = lit::<T>(2.0) * T::PI();
    let interior = pref * (-T::PI() * omega * resolution_h((nf / n_star).sqrt())).exp();
    let root = c * nf.sqrt();
    let endpoint = two_pi
        * omega
        * pref
        * pref
        * (lit::<T>(4.0) * T::PI() * omega * (T::PI() - root).exp() - root).exp();
    Ok((interior, endpoint))
}

/// Interior and endpoint terms of the oscillatory estimate for the
/// parametrized exponential map with `L = L0 + 1/2`, `alpha = alpha0/sqrt(n)`:
/// `exp(alpha0 pi (2w - n/(2 L0 + 1))/sqrt(n))` and `w exp(-pi L0 sqrt(n)/alpha0)`.
pub fn psi_se_resolution_terms<T: Scalar>(omega: T, n: usize, alpha0: T, l0: T) -> (T, T) {
    let nf = T::from_usize(n).unwrap();
    let root = nf.sqrt();
    let two = lit::<T>(2.0);
    let interior = (alpha0 * T::PI() * (two * omega - nf / (two * l0 + T::one())) / root).exp();
    let endpoint = omega * (-T::PI() * l0 * root / alpha0).exp();
    (interior, endpoint)
}

/// One point of a resolution sweep: the smallest degrees of freedom at
/// which the measured uniform error for frequency `omega` drops to `delta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResolutionRecord<T> {
    pub omega: u32,
    pub delta: T,
    /// Degrees of freedom `n + 1` at the accepted degree.
    pub dof: usize,
    pub achieved_error: T,
}

/// Find the first degree on the search schedule whose measured error drops
/// to `delta`, and report it as degrees of freedom.
///
/// Search: geometric sweep by factor 5/4 from 0 to bracket the crossing,
/// then linear refinement stepping by `max(1, bracket/64)`. A candidate is
/// accepted only when the error also holds at `candidate + step` (the
/// error need not be monotone in n). `error_at` takes the degree `n`.
pub fn measure_resolution<T: Scalar>(
    mut error_at: impl FnMut(usize) -> T,
    omega: u32,
    delta: T,
    n_max: usize,
) -> Result<ResolutionRecord<T>, AnalysisError> {
    let mut memo: BTreeMap<usize, T> = BTreeMap::new();
    let mut eval = |n: usize, memo: &mut BTreeMap<usize, T>| -> T {
        *memo.entry(n).or_insert_with(|| error_at(n))
    };

    let mut schedule = vec![0usize];
    while *schedule.last().unwrap() < n_max {
        let last = *schedule.last().unwrap();
        let next = (last + 1).max((last as f64 * 1.25).ceil() as usize);
        schedule.push(next.min(n_max));
    }

    let mut bracket = None;
    let mut prev: Option<usize> = None;
    for &n in &schedule {
        if eval(n, &mut memo) <= delta {
            bracket = Some((prev.unwrap_or(n), n));
            break;
        }
        prev = Some(n);
    }
    let Some((lo, hi)) = bracket else {
        return Err(AnalysisError::BudgetExceeded { omega, n_max });
    };

    let step = ((hi - lo) / 64).max(1);
    let mut n = lo + step;
    while n <= hi {
        let e = eval(n, &mut memo);
        if e <= delta && eval(n + step, &mut memo) <= delta {
            return Ok(ResolutionRecord {
                omega,
                delta,
                dof: n + 1,
                achieved_error: e,
            });
        }
        n += step;
    }
    Ok(ResolutionRecord {
        omega,
        delta,
        dof: hi + 1,
        achieved_error: eval(hi, &mut memo),
    })
}

/// Normalizations for the resolution constant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScalingLaw<T> {
    Omega,
    OmegaSquared,
    /// `omega * log(c * omega)` (natural log).
    OmegaLog {
        c: T,
    },
}

impl<T: Scalar> ScalingLaw<T> {
    pub fn value(&self, omega: u32) -> Result<T, AnalysisError> {
        let w = T::from_u32(omega).unwrap();
        match *self {
            ScalingLaw::Omega => Ok(w),
            ScalingLaw::OmegaSquared => Ok(w * w),
            ScalingLaw::OmegaLog { c } => {
                let arg = c * w;
                if arg <= T::one() {
                    Err(AnalysisError::InvalidScaling {
                        omega,
                        c: c.to_f64().unwrap_or(f64::NAN),
                    })
                } else {
                    Ok(w * arg.ln())
                }
            }
        }
    }
}

/// Finite-sample proxy for the asymptotic resolution constant: the maximum
/// of `dof / scaling(omega)` over the upper half of the records by omega.
pub fn resolution_constant<T: Scalar>(
    records: &[ResolutionRecord<T>],
    scaling: ScalingLaw<T>,
) -> Result<T, AnalysisError> {
    if records.len() < 3 {
        return Err(AnalysisError::InsufficientData {
            needed: 3,
            got: records.len(),
        });
    }
    let mut sorted: Vec<&ResolutionRecord<T>> = records.iter().collect();
    sorted.sort_by_key(|r| r.omega);
    let top = &sorted[sorted.len() / 2..];
    let mut worst = T::zero();
    for r in top {
        let s = scaling.value(r.omega)?;
        worst = worst.max(T::from_usize(r.dof).unwrap() / s);
    }
    Ok(worst)
}
