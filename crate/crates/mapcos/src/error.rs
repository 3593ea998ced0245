use thiserror::Error;

/// Errors from the scalar special functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("lambert_w0: argument {x} lies below the branch point -1/e")]
    LambertDomain { x: f64 },
    #[error("lambert_w0: no convergence after {iters} iterations (residual {residual:e}, tol {tol:e}); tolerance too tight")]
    LambertNoConvergence {
        iters: usize,
        residual: f64,
        tol: f64,
    },
}

/// Errors from the variable transforms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MapError {
    #[error("forward map: x = {x} outside the open interval (0,1)")]
    DomainX { x: f64 },
    #[error("map parameter alpha = {alpha} must be positive and finite")]
    InvalidAlpha { alpha: f64 },
    #[error("complex evaluation: |Im z| = {im} is not inside the analyticity strip of half-width {bound}")]
    OutsideStrip { im: f64, bound: f64 },
    #[error("g_inverse overflows the floating-point range at t = {t} (alpha = {alpha})")]
    Overflow { t: f64, alpha: f64 },
    #[error("g_forward: no convergence after {iters} iterations (residual {residual:e}); tol below achievable precision")]
    NoConvergence { iters: usize, residual: f64 },
}

/// Errors from the cosine-expansion module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CosineError {
    #[error("sampled function must hold at least one value")]
    Empty,
    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },
    #[error("adaptive quadrature did not reach tol {tol:e} within {panels} panels (error estimate {estimate:e})")]
    QuadratureNoConvergence {
        panels: usize,
        tol: f64,
        estimate: f64,
    },
}

/// Errors from building or measuring a mapped approximant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildError {
    #[error("truncation L = {l} must be positive and finite")]
    InvalidTruncation { l: f64 },
    #[error("rule constant {name} = {value} must be positive and finite")]
    InvalidRuleConstant { name: &'static str, value: f64 },
    #[error("function evaluation at node {index} (x = {x:e}) is not finite")]
    NonFiniteAtNode { index: usize, x: f64 },
    #[error("function evaluation at x = {x:e} is not finite while measuring")]
    NonFiniteAtPoint { x: f64 },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Errors from the bound evaluators and resolution machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("bound hypothesis violated: requires L <= n, got L = {l}, n = {n}")]
    HypothesisViolated { l: f64, n: usize },
    #[error("bound requires n > n* = {n_star} (got n = {n})")]
    BelowCritical { n: usize, n_star: f64 },
    #[error("bound requires omega >= pi + log 2, got {omega}")]
    OmegaTooSmall { omega: f64 },
    #[error("invalid bound parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("no n <= {n_max} reaches the target accuracy for omega = {omega}")]
    BudgetExceeded { omega: u32, n_max: usize },
    #[error("resolution constant needs at least {needed} records, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("scaling omega*log(c*omega) undefined at omega = {omega} for c = {c}")]
    InvalidScaling { omega: u32, c: f64 },
}
