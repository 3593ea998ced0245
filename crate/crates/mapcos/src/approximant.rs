//! The end-to-end approximant on [0,1]: transform, truncate, expand.
//!
//! A built approximant is the three-branch function that is constant on
//! the two endpoint intervals `[0, x_L)` and `(1-x_L, 1]` and evaluates
//! the cosine expansion of the mapped, truncated function in between.

use crate::cosine::{discrete_coefficients, sample_node, CosineExpansion, SampledFunction};
use crate::error::BuildError;
use crate::maps::{MapKind, MapSpec};
use crate::scalar::{lit, Scalar, Value};
use crate::special::lambert_w0;

/// Which form of the truncation/parameter rules to apply. The
/// `Caption` variant drops the additive guard terms in the Lambert-W rules
/// (`W(cn)` instead of `1 + W(cn)`, and `L0 pi / W(cn)` instead of
/// `L0 pi / (pi/2 + W(cn))`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RuleVariant {
    #[default]
    Theorem,
    Caption,
}

impl RuleVariant {
    pub fn label(&self) -> &'static str {
        match self {
            RuleVariant::Theorem => "theorem",
            RuleVariant::Caption => "caption",
        }
    }
}

/// Per-map parameter rule: the user constants from which `(L, alpha)` are
/// derived for a given degree `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ParameterRule<T> {
    /// `L = c sqrt(n)`.
    E { c: T },
    /// `L = L0 + 1/2`, `alpha = alpha0 / sqrt(n)`.
    Se { alpha0: T, l0: T },
    /// `L = 1 + W(cn)` (caption: `W(cn)`).
    De { c: T },
    /// `L = L0 + 1/2`, `alpha = L0 pi / (pi/2 + W(cn))` (caption: `L0 pi / W(cn)`).
    Sde { l0: T, c: T },
}

impl<T: Scalar> ParameterRule<T> {
    pub fn kind(&self) -> MapKind {
        match self {
            ParameterRule::E { .. } => MapKind::E,
            ParameterRule::Se { .. } => MapKind::Se,
            ParameterRule::De { .. } => MapKind::De,
            ParameterRule::Sde { .. } => MapKind::Sde,
        }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        let check = |name: &'static str, v: T| -> Result<(), BuildError> {
            if v > T::zero() && v.is_finite() {
                Ok(())
            } else {
                Err(BuildError::InvalidRuleConstant {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                })
            }
        };
        match *self {
            ParameterRule::E { c } | ParameterRule::De { c } => check("c", c),
            ParameterRule::Se { alpha0, l0 } => {
                check("alpha0", alpha0)?;
                check("L0", l0)
            }
            ParameterRule::Sde { l0, c } => {
                check("L0", l0)?;
                check("c", c)
            }
        }
    }

    /// The truncation `L` and mapping parameter `alpha` (where applicable)
    /// for degree `n >= 1`.
    pub fn select(&self, n: usize, variant: RuleVariant) -> (T, Option<T>) {
        assert!(n >= 1, "parameter rules are defined for n >= 1");
        let nf = T::from_usize(n).unwrap();
        match *self {
            ParameterRule::E { c } => (c * nf.sqrt(), None),
            ParameterRule::Se { alpha0, l0 } => (l0 + lit::<T>(0.5), Some(alpha0 / nf.sqrt())),
            ParameterRule::De { c } => {
                let w = lambert_w0(c * nf, lit::<T>(1e-14)).expect("W on [0, inf) converges");
                let l = match variant {
                    RuleVariant::Theorem => T::one() + w,
                    RuleVariant::Caption => w,
                };
                (l, None)
            }
            ParameterRule::Sde { l0, c } => {
                let w = lambert_w0(c * nf, lit::<T>(1e-14)).expect("W on [0, inf) converges");
                let denom = match variant {
                    RuleVariant::Theorem => T::FRAC_PI_2() + w,
                    RuleVariant::Caption => w,
                };
                (l0 + lit::<T>(0.5), Some(l0 * T::PI() / denom))
            }
        }
    }

    /// Convenience: the concrete map plus `L` for degree `n`.
    pub fn map_spec(&self, n: usize, variant: RuleVariant) -> Result<(MapSpec<T>, T), BuildError> {
        self.validate()?;
        let (l, alpha) = self.select(n, variant);
        let spec = MapSpec::new(self.kind(), alpha)?;
        Ok((spec, l))
    }
}

/// Interior/endpoint split of the measured uniform error, with
/// `total = max` of the three parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorReport<T> {
    pub interior: T,
    pub endpoint_lo: T,
    pub endpoint_hi: T,
    pub total: T,
}

impl<T: Scalar> ErrorReport<T> {
    fn new(interior: T, endpoint_lo: T, endpoint_hi: T) -> Self {
        ErrorReport {
            interior,
            endpoint_lo,
            endpoint_hi,
            total: interior.max(endpoint_lo).max(endpoint_hi),
        }
    }
}

/// A built approximant: map, truncation, expansion and cached endpoint data.
#[derive(Clone, Debug)]
pub struct MappedApproximant<T, V> {
    map: MapSpec<T>,
    l: T,
    n: usize,
    expansion: CosineExpansion<V>,
    endpoint_lo: V,
    endpoint_hi: V,
    x_l: T,
}

impl<T: Scalar, V: Value<T>> MappedApproximant<T, V> {
    /// Sample `F_L(y_j) = f(psi^{-1}(L y_j))` at the `n+1` equispaced nodes
    /// and take the discrete cosine expansion. `f` must evaluate finitely
    /// at every node (nodes can saturate to exactly 0 or 1 when `L` is
    /// large enough that `psi^{-1}(-L)` underflows).
    pub fn build(f: impl Fn(T) -> V, map: MapSpec<T>, l: T, n: usize) -> Result<Self, BuildError> {
        if !(l > T::zero() && l.is_finite()) {
            return Err(BuildError::InvalidTruncation {
                l: l.to_f64().unwrap_or(f64::NAN),
            });
        }
        let x_l = map.inverse(-l);
        debug_assert!(x_l < lit::<T>(0.5));

        let count = if n == 0 { 1 } else { n + 1 };
        let mut values = Vec::with_capacity(count);
        for j in 0..count {
            let x = map.inverse(l * sample_node::<T>(j, n));
            let v = f(x);
            if !v.all_finite() {
                return Err(BuildError::NonFiniteAtNode {
                    index: j,
                    x: x.to_f64().unwrap_or(f64::NAN),
                });
            }
            values.push(v);
        }
        let endpoint_lo = if n == 0 { f(x_l) } else { values[0] };
        let endpoint_hi = if n == 0 { f(map.inverse(l)) } else { values[n] };
        if !endpoint_lo.all_finite() || !endpoint_hi.all_finite() {
            return Err(BuildError::NonFiniteAtPoint {
                x: x_l.to_f64().unwrap_or(f64::NAN),
            });
        }
        let samples = SampledFunction::new(values).expect("non-empty by construction");
        let expansion = discrete_coefficients(&samples);
        Ok(MappedApproximant {
            map,
            l,
            n,
            expansion,
            endpoint_lo,
            endpoint_hi,
            x_l,
        })
    }

    pub fn map(&self) -> MapSpec<T> {
        self.map
    }

    pub fn truncation(&self) -> T {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Degrees of freedom (coefficient count), `n + 1`.
    pub fn dof(&self) -> usize {
        self.n + 1
    }

    pub fn expansion(&self) -> &CosineExpansion<V> {
        &self.expansion
    }

    pub fn endpoint_values(&self) -> (V, V) {
        (self.endpoint_lo, self.endpoint_hi)
    }

    /// The truncation point `x_L = psi^{-1}(-L)`.
    pub fn x_l(&self) -> T {
        self.x_l
    }

    /// Evaluate the three-branch approximant at `x` in [0,1].
    pub fn evaluate(&self, x: T) -> V {
        if x < self.x_l || x <= T::zero() {
            return self.endpoint_lo;
        }
        if x > T::one() - self.x_l || x >= T::one() {
            return self.endpoint_hi;
        }
        let s = self
            .map
            .forward(x)
            .expect("x strictly inside (0,1) on the middle branch");
        self.expansion.evaluate(s / self.l)
    }

    /// Discrete-max estimate of the three error terms: the interior norm
    /// over `grid` equispaced points of [-1,1] in the mapped variable, and
    /// each endpoint norm over proportionally many points (minimum 32) of
    /// its own x-interval.
    pub fn measure_error(
        &self,
        f: impl Fn(T) -> V,
        grid: usize,
    ) -> Result<ErrorReport<T>, BuildError> {
        assert!(grid >= 2, "error grid needs at least two points");

        // Interior: synthesize on the uniform y-grid in one pass when the
        // degree makes pointwise Clenshaw expensive.
        let m = grid - 1;
        let use_fast = self.n >= 32;
        let synthesized: Option<Vec<V>> = if use_fast {
            Some(self.expansion.evaluate_on_uniform_grid(grid))
        } else {
            None
        };
        let mut interior = T::zero();
        for i in 0..grid {
            let y =
                lit::<T>(2.0) * T::from_usize(i).unwrap() / T::from_usize(m).unwrap() - T::one();
            let x = self.map.inverse(self.l * y);
            let fv = f(x);
            if !fv.all_finite() {
                return Err(BuildError::NonFiniteAtPoint {
                    x: x.to_f64().unwrap_or(f64::NAN),
                });
            }
            let pv = match &synthesized {
                Some(vals) => vals[i],
                None => self.expansion.evaluate(y),
            };
            interior = interior.max((fv - pv).modulus());
        }

        let ep_points = {
            let prop = (T::from_usize(grid).unwrap() * self.x_l)
                .ceil()
                .to_usize()
                .unwrap_or(0);
            prop.max(32)
        };
        let scan = |a: T, b: T, anchor: V| -> Result<T, BuildError> {
            let mut worst = T::zero();
            let denom = T::from_usize(ep_points - 1).unwrap();
            for i in 0..ep_points {
                let x = a + (b - a) * T::from_usize(i).unwrap() / denom;
                let fv = f(x);
                if !fv.all_finite() {
                    return Err(BuildError::NonFiniteAtPoint {
                        x: x.to_f64().unwrap_or(f64::NAN),
                    });
                }
                worst = worst.max((fv - anchor).modulus());
            }
            Ok(worst)
        };
        let endpoint_lo = scan(T::zero(), self.x_l, self.endpoint_lo)?;
        let endpoint_hi = scan(T::one() - self.x_l, T::one(), self.endpoint_hi)?;

        Ok(ErrorReport::new(interior, endpoint_lo, endpoint_hi))
    }
}
