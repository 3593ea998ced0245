//! Registry of benchmark functions on [0,1]. All are complex-valued (real
//! ones embed), continuous up to the endpoints, and total on [0,1] so the
//! endpoint error terms can be sampled at x = 0 and x = 1.

use std::sync::Arc;

use mapcos::special::jacobi_sn;
use mapcos::Complex64;

pub type TestFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

#[derive(Clone, Copy)]
pub struct TestFunctionSpec {
    pub id: &'static str,
    pub description: &'static str,
    /// Hoelder exponent at the endpoints, where known.
    pub known_tau: Option<f64>,
    /// Oscillation frequency the function closes over, where applicable.
    pub default_omega: Option<u32>,
    builder: fn(u32) -> TestFn,
}

impl TestFunctionSpec {
    /// Instantiate, optionally overriding the frequency parameter.
    pub fn build(&self, omega: Option<u32>) -> TestFn {
        (self.builder)(omega.or(self.default_omega).unwrap_or(0))
    }
}

fn build_one(_: u32) -> TestFn {
    Arc::new(|_| Complex64::new(1.0, 0.0))
}

fn build_x13(_: u32) -> TestFn {
    Arc::new(|x: f64| Complex64::new(x.powf(1.0 / 3.0), 0.0))
}

fn build_osc(omega: u32) -> TestFn {
    let w = omega as f64;
    Arc::new(move |x: f64| Complex64::new(0.0, -2.0 * std::f64::consts::PI * w * x).exp())
}

fn build_f1(omega: u32) -> TestFn {
    let w = omega as f64;
    Arc::new(move |x: f64| {
        let osc = Complex64::new(0.0, -2.0 * std::f64::consts::PI * w * x).exp();
        osc * x.powf(0.2)
    })
}

fn build_f2(_: u32) -> TestFn {
    Arc::new(|x: f64| {
        let d = x - 0.5;
        Complex64::new(x.sqrt() / (1.0 + 1.0e4 * d * d), 0.0)
    })
}

fn build_f3(_: u32) -> TestFn {
    let k = 0.5f64.sqrt();
    Arc::new(move |x: f64| {
        if x <= 0.0 || x >= 1.0 {
            // |sn| <= 1 and the algebraic prefactor vanishes at both ends.
            return Complex64::new(0.0, 0.0);
        }
        let arg = 5.0 * x.ln() - 3.0 * (-x).ln_1p();
        let v = x.sqrt() * (1.0 - x).powf(0.75) * jacobi_sn(arg, k);
        Complex64::new(v, 0.0)
    })
}

pub const REGISTRY: &[TestFunctionSpec] = &[
    TestFunctionSpec {
        id: "one",
        description: "constant 1",
        known_tau: None,
        default_omega: None,
        builder: build_one,
    },
    TestFunctionSpec {
        id: "x13",
        description: "x^(1/3): algebraic singularity at 0",
        known_tau: Some(1.0 / 3.0),
        default_omega: None,
        builder: build_x13,
    },
    TestFunctionSpec {
        id: "osc",
        description: "exp(-2 pi i w x): pure oscillation",
        known_tau: Some(1.0),
        default_omega: Some(16),
        builder: build_osc,
    },
    TestFunctionSpec {
        id: "f1",
        description: "x^(1/5) exp(-2 pi i w x): singular oscillation",
        known_tau: Some(0.2),
        default_omega: Some(400),
        builder: build_f1,
    },
    TestFunctionSpec {
        id: "f2",
        description: "sqrt(x)/(1+100^2 (x-1/2)^2): singular Runge",
        known_tau: Some(0.5),
        default_omega: None,
        builder: build_f2,
    },
    TestFunctionSpec {
        id: "f3",
        description: "x^(1/2) (1-x)^(3/4) sn(log(x^5/(1-x)^3), 1/sqrt(2))",
        known_tau: Some(0.5),
        default_omega: None,
        builder: build_f3,
    },
];

pub fn lookup(id: &str) -> Option<&'static TestFunctionSpec> {
    REGISTRY.iter().find(|s| s.id == id)
}
