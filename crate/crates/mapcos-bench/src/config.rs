//! Run configuration shared by the benchmark commands, with field-level
//! validation.

use mapcos::{AnalysisError, BuildError, MapError, MapKind, RuleVariant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },
    #[error("budget exceeded: no n <= {n_max} reaches the target for omega = {omega}")]
    Budget { omega: u32, n_max: usize },
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl BenchError {
    pub fn config(field: &str, message: impl Into<String>) -> Self {
        BenchError::Config {
            field: field.to_string(),
            message: message.into(),
        }
    }

    /// Process exit code: 2 config, 3 budget, 4 numeric/io.
    pub fn exit_code(&self) -> u8 {
        match self {
            BenchError::Config { .. } => 2,
            BenchError::Budget { .. } => 3,
            BenchError::Numeric(_) | BenchError::Io(_) => 4,
        }
    }
}

impl From<AnalysisError> for BenchError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::BudgetExceeded { omega, n_max } => BenchError::Budget { omega, n_max },
            other => BenchError::Numeric(other.to_string()),
        }
    }
}

impl From<BuildError> for BenchError {
    fn from(e: BuildError) -> Self {
        BenchError::Numeric(e.to_string())
    }
}

impl From<MapError> for BenchError {
    fn from(e: MapError) -> Self {
        BenchError::Numeric(e.to_string())
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub maps: Vec<MapKind>,
    pub function: Option<String>,
    pub c: f64,
    pub alpha0: f64,
    pub l0: f64,
    pub n_max: usize,
    pub omegas: Vec<u32>,
    /// Frequency override for parameterized functions (f1, osc).
    pub omega_param: Option<u32>,
    pub delta: f64,
    pub grid: usize,
    pub rule_variant: RuleVariant,
    pub jobs: Option<usize>,
    pub opt_min: Option<f64>,
    pub opt_max: Option<f64>,
    pub opt_points: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            maps: Vec::new(),
            function: None,
            c: 1.0,
            alpha0: 1.0,
            l0: 0.1,
            n_max: 1024,
            omegas: Vec::new(),
            omega_param: None,
            delta: 1e-2,
            grid: 20_000,
            rule_variant: RuleVariant::Theorem,
            jobs: None,
            opt_min: None,
            opt_max: None,
            opt_points: None,
        }
    }
}

impl RunConfig {
    pub fn validate_common(&self) -> Result<(), BenchError> {
        if self.maps.is_empty() {
            return Err(BenchError::config("map", "at least one map is required"));
        }
        for (name, v) in [("c", self.c), ("alpha0", self.alpha0), ("L0", self.l0)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(BenchError::config(
                    name,
                    format!("must be positive, got {v}"),
                ));
            }
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(BenchError::config(
                "delta",
                format!("must lie in (0,1), got {}", self.delta),
            ));
        }
        if self.grid < 2 {
            return Err(BenchError::config("grid", "needs at least 2 points"));
        }
        if self.n_max < 1 {
            return Err(BenchError::config("n_max", "must be at least 1"));
        }
        if let Some(j) = self.jobs {
            if j == 0 {
                return Err(BenchError::config("jobs", "must be at least 1"));
            }
        }
        Ok(())
    }

    pub fn validate_omegas(&self) -> Result<(), BenchError> {
        if self.omegas.is_empty() {
            return Err(BenchError::config("omega", "schedule must be nonempty"));
        }
        if self.omegas.windows(2).any(|w| w[1] <= w[0]) {
            return Err(BenchError::config(
                "omega",
                "schedule must be strictly increasing",
            ));
        }
        Ok(())
    }
}

pub fn parse_map_kind(s: &str) -> Result<MapKind, BenchError> {
    match s.to_ascii_lowercase().as_str() {
        "e" => Ok(MapKind::E),
        "se" => Ok(MapKind::Se),
        "de" => Ok(MapKind::De),
        "sde" => Ok(MapKind::Sde),
        other => Err(BenchError::config(
            "map",
            format!("unknown map `{other}` (expected e, se, de, sde or all)"),
        )),
    }
}

pub fn parse_maps(items: &[String]) -> Result<Vec<MapKind>, BenchError> {
    let mut out = Vec::new();
    for item in items {
        if item.eq_ignore_ascii_case("all") {
            out.extend([MapKind::E, MapKind::Se, MapKind::De, MapKind::Sde]);
        } else {
            out.push(parse_map_kind(item)?);
        }
    }
    out.dedup();
    Ok(out)
}

pub fn parse_rule_variant(s: &str) -> Result<RuleVariant, BenchError> {
    match s.to_ascii_lowercase().as_str() {
        "theorem" => Ok(RuleVariant::Theorem),
        "caption" => Ok(RuleVariant::Caption),
        other => Err(BenchError::config(
            "rule_variant",
            format!("unknown variant `{other}` (expected theorem or caption)"),
        )),
    }
}
