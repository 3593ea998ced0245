//! Cosine expansion on [-1,1] in the basis `cos(k pi (y+1)/2)`:
//! O(n log n) discrete coefficients from equispaced samples, stable
//! evaluation, fast synthesis on uniform grids, and an adaptive-quadrature
//! oracle for the exact (integral) coefficients.

use num_complex::Complex;

use crate::error::CosineError;
use crate::fft::fft_forward;
use crate::scalar::{lit, Scalar, Value};

/// Samples `F(y_j)` at the equispaced nodes `y_j = -1 + 2j/n`, `j = 0..=n`.
/// A single sample stands for the degenerate degree-0 case (node `y = 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct SampledFunction<V> {
    values: Vec<V>,
}

impl<V> SampledFunction<V> {
    pub fn new(values: Vec<V>) -> Result<Self, CosineError> {
        if values.is_empty() {
            return Err(CosineError::Empty);
        }
        Ok(SampledFunction { values })
    }

    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }
}

/// The node `y_j = -1 + 2j/n` (exactly +-1 at the ends); `0` for `n = 0`.
pub fn sample_node<T: Scalar>(j: usize, n: usize) -> T {
    if n == 0 {
        return T::zero();
    }
    lit::<T>(2.0) * T::from_usize(j).unwrap() / T::from_usize(n).unwrap() - T::one()
}

/// Coefficients `c~_0 ..= c~_n` of the discrete cosine expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct CosineExpansion<V> {
    coeffs: Vec<V>,
}

impl<V> CosineExpansion<V> {
    pub fn from_coeffs(coeffs: Vec<V>) -> Result<Self, CosineError> {
        if coeffs.is_empty() {
            return Err(CosineError::Empty);
        }
        Ok(CosineExpansion { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[V] {
        &self.coeffs
    }
}

/// Discrete coefficients `c~_k = (2 gamma_k / n) sum_j gamma_j F(y_j) cos(jk pi/n)`
/// with `gamma_0 = gamma_n = 1/2`, via a real-even extension fed to a
/// complex FFT of length `2n`.
pub fn discrete_coefficients<T: Scalar, V: Value<T>>(
    samples: &SampledFunction<V>,
) -> CosineExpansion<V> {
    let n = samples.degree();
    let vals = samples.values();
    if n == 0 {
        return CosineExpansion {
            coeffs: vec![vals[0]],
        };
    }
    let mut buf: Vec<Complex<T>> = Vec::with_capacity(2 * n);
    buf.extend(vals.iter().map(|v| v.into_complex()));
    buf.extend((1..n).rev().map(|j| vals[j].into_complex()));
    fft_forward(&mut buf);

    let inv_n = T::from_usize(n).unwrap().recip();
    let half = lit::<T>(0.5);
    let coeffs = (0..=n)
        .map(|k| {
            let gamma = if k == 0 || k == n { half } else { T::one() };
            V::from_complex(buf[k]).scale(gamma * inv_n)
        })
        .collect();
    CosineExpansion { coeffs }
}

impl<V> CosineExpansion<V> {
    /// Evaluate `sum_k c~_k cos(k pi (y+1)/2)` by backward Clenshaw
    /// recurrence on `u = cos(pi(y+1)/2) = -sin(pi y / 2)`.
    pub fn evaluate<T: Scalar>(&self, y: T) -> V
    where
        V: Value<T>,
    {
        let y = y.min(T::one()).max(-T::one());
        let u = -(T::FRAC_PI_2() * y).sin();
        let two_u = u + u;
        let mut b1 = V::zero();
        let mut b2 = V::zero();
        for &c in self.coeffs[1..].iter().rev() {
            let next = c + b1.scale(two_u) - b2;
            b2 = b1;
            b1 = next;
        }
        self.coeffs[0] + b1.scale(u) - b2
    }

    /// Values at the `m` uniform points `y_i = -1 + 2i/(m-1)`, `i = 0..m`,
    /// by folded DCT-I synthesis in O(m log m). Agrees with `evaluate`
    /// to rounding; coefficients beyond degree `m-1` fold by the exact
    /// aliasing rule on that node set.
    pub fn evaluate_on_uniform_grid<T: Scalar>(&self, m_points: usize) -> Vec<V>
    where
        V: Value<T>,
    {
        assert!(m_points >= 2, "uniform grid needs at least two points");
        let m = m_points - 1;
        let mut folded: Vec<Complex<T>> = vec![Complex::new(T::zero(), T::zero()); m + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            let kp = alias_index(k, m);
            folded[kp] += c.into_complex();
        }
        let half = lit::<T>(0.5);
        let mut buf: Vec<Complex<T>> = Vec::with_capacity(2 * m);
        buf.push(folded[0]);
        buf.extend(folded[1..m].iter().map(|&c| c * half));
        buf.push(folded[m]);
        buf.extend(folded[1..m].iter().rev().map(|&c| c * half));
        fft_forward(&mut buf);
        (0..=m).map(|i| V::from_complex(buf[i])).collect()
    }
}

/// Node-set aliasing: `cos(k pi j/n) = cos(k' pi j/n)` for all `j`, with
/// `k' = |mod(k+n-1, 2n) - (n-1)|`.
pub fn alias_index(k: usize, n: usize) -> usize {
    let m = (k + n - 1) % (2 * n);
    m.abs_diff(n - 1)
}

/// Exact expansion coefficient of `f` (the `k = 0` coefficient carries the
/// usual 1/2 factor), by globally adaptive Gauss-Kronrod quadrature to
/// absolute tolerance `tol`. Oracle-grade: used to validate the discrete
/// transform, not on any hot path.
pub fn exact_coefficient<T: Scalar, V: Value<T>>(
    f: impl Fn(T) -> V,
    k: usize,
    tol: T,
) -> Result<V, CosineError> {
    let kf = T::from_usize(k).unwrap();
    let weight = move |y: T| (kf * T::FRAC_PI_2() * (y + T::one())).cos();
    let g = |y: T| f(y).scale(weight(y));

    const MAX_PANELS: usize = 10_000;
    struct Panel<T, V> {
        a: T,
        b: T,
        value: V,
        err: T,
    }
    let mut panels: Vec<Panel<T, V>> = Vec::new();
    let (v, e) = gauss_kronrod(&g, -T::one(), T::one());
    panels.push(Panel {
        a: -T::one(),
        b: T::one(),
        value: v,
        err: e,
    });

    loop {
        let total_err = panels.iter().fold(T::zero(), |acc, p| acc + p.err);
        if total_err <= tol {
            break;
        }
        if panels.len() >= MAX_PANELS {
            return Err(CosineError::QuadratureNoConvergence {
                panels: panels.len(),
                tol: tol.to_f64().unwrap_or(f64::NAN),
                estimate: total_err.to_f64().unwrap_or(f64::NAN),
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.partial_cmp(&b.1.err).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = (a + b) * lit::<T>(0.5);
        for (lo, hi) in [(a, mid), (mid, b)] {
            let (v, e) = gauss_kronrod(&g, lo, hi);
            panels.push(Panel {
                a: lo,
                b: hi,
                value: v,
                err: e,
            });
        }
    }

    let mut total = V::zero();
    for p in &panels {
        total = total + p.value;
    }
    if k == 0 {
        total = total.scale(lit::<T>(0.5));
    }
    Ok(total)
}

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gauss_kronrod<T: Scalar, V: Value<T>>(g: &impl Fn(T) -> V, a: T, b: T) -> (V, T) {
    let half = lit::<T>(0.5);
    let center = (a + b) * half;
    let hlen = (b - a) * half;

    let mut kron = V::zero();
    let mut gauss = V::zero();
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let dx = hlen * lit::<T>(x);
        let contrib = if x == 0.0 {
            g(center)
        } else {
            g(center - dx) + g(center + dx)
        };
        kron = kron + contrib.scale(lit::<T>(wk));
        if i % 2 == 1 {
            gauss = gauss + contrib.scale(lit::<T>(WG[i / 2]));
        }
    }
    let kron = kron.scale(hlen);
    let gauss = gauss.scale(hlen);
    ((kron), (kron - gauss).modulus())
}
