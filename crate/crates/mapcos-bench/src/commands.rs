//! The four benchmark commands. Sweep points run on a rayon pool (sized by
//! `jobs`, default available parallelism) and results are merged in a fixed
//! key order, so output bytes do not depend on scheduling.

use rayon::prelude::*;

use mapcos::analysis::{
    measure_resolution, rate_index, resolution_constant, ResolutionRecord, ScalingLaw,
};
use mapcos::{ComplexApproximant, ErrorReport, MapKind, ParameterRule, RuleVariant};

use crate::config::{BenchError, RunConfig};
use crate::functions::{lookup, TestFn, TestFunctionSpec};
use crate::output::{fmt_float, fmt_opt_float, CommandOutput, Metadata};

pub fn rule_for(kind: MapKind, c: f64, alpha0: f64, l0: f64) -> ParameterRule<f64> {
    match kind {
        MapKind::E => ParameterRule::E { c },
        MapKind::Se => ParameterRule::Se { alpha0, l0 },
        MapKind::De => ParameterRule::De { c },
        MapKind::Sde => ParameterRule::Sde { l0, c },
    }
}

/// Strip half-width entering the rate index: the limiting value
/// for the non-parametrized maps (pi for E, 1 for DE); unused by SE/SDE.
fn rate_beta(kind: MapKind) -> f64 {
    match kind {
        MapKind::E => std::f64::consts::PI,
        _ => 1.0,
    }
}

pub struct ErrorPoint {
    pub report: ErrorReport<f64>,
    pub l: f64,
    pub alpha: Option<f64>,
    pub warning: String,
}

/// Build the approximant for one `(rule, n)` point and measure its error.
pub fn error_point(
    rule: &ParameterRule<f64>,
    variant: RuleVariant,
    f: &TestFn,
    n: usize,
    grid: usize,
) -> Result<ErrorPoint, BenchError> {
    let (spec, l) = rule.map_spec(n.max(1), variant)?;
    let warning = spec
        .finite_precision_warning()
        .map(|w| w.to_string())
        .unwrap_or_default();
    let approx = ComplexApproximant::build(|x| f(x), spec, l, n)?;
    let report = approx.measure_error(|x| f(x), grid)?;
    Ok(ErrorPoint {
        report,
        l,
        alpha: spec.alpha(),
        warning,
    })
}

fn with_pool<R: Send>(
    jobs: Option<usize>,
    work: impl FnOnce() -> R + Send,
) -> Result<R, BenchError> {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| BenchError::Numeric(e.to_string()))
            .map(|pool| pool.install(work)),
        None => Ok(work()),
    }
}

/// Degrees for convergence sweeps: perfect squares up to `n_max`, so the
/// points are equispaced in sqrt(n).
pub fn square_schedule(n_max: usize) -> Vec<usize> {
    let mut ns = Vec::new();
    let mut k = 2usize;
    while k * k <= n_max {
        ns.push(k * k);
        k += 1;
    }
    ns
}

/// Degrees for comparison sweeps: geometric by 5/4 from 4 to `n_max`.
pub fn geometric_schedule(n_max: usize) -> Vec<usize> {
    let mut ns = vec![];
    let mut n = 4usize;
    while n <= n_max {
        ns.push(n);
        n = (n + 1).max((n as f64 * 1.25).ceil() as usize);
    }
    ns
}

const CONVERGE_COLUMNS: &[&str] = &[
    "map",
    "n",
    "L",
    "alpha",
    "interior",
    "endpoint_lo",
    "endpoint_hi",
    "total",
    "predicted_rate",
    "warnings",
];

pub fn cmd_converge(cfg: &RunConfig) -> Result<CommandOutput, BenchError> {
    cfg.validate_common()?;
    let spec = required_function(cfg)?;
    let f = spec.build(cfg.omega_param);
    let tau = spec.known_tau.unwrap_or(1.0);
    let ns = square_schedule(cfg.n_max);
    if ns.is_empty() {
        return Err(BenchError::config("n_max", "must be at least 4"));
    }

    let tasks: Vec<(usize, usize)> = cfg
        .maps
        .iter()
        .enumerate()
        .flat_map(|(mi, _)| ns.iter().map(move |&n| (mi, n)))
        .collect();
    let rows: Result<Vec<_>, BenchError> = with_pool(cfg.jobs, || {
        tasks
            .par_iter()
            .map(|&(mi, n)| {
                let kind = cfg.maps[mi];
                let rule = rule_for(kind, cfg.c, cfg.alpha0, cfg.l0);
                let pt = error_point(&rule, cfg.rule_variant, &f, n, cfg.grid)?;
                let rate = rate_index(&rule, rate_beta(kind), tau);
                Ok((
                    (mi, n),
                    vec![
                        kind.label().to_string(),
                        n.to_string(),
                        fmt_float(pt.l),
                        fmt_opt_float(pt.alpha),
                        fmt_float(pt.report.interior),
                        fmt_float(pt.report.endpoint_lo),
                        fmt_float(pt.report.endpoint_hi),
                        fmt_float(pt.report.total),
                        fmt_float(rate),
                        pt.warning,
                    ],
                ))
            })
            .collect()
    })?;
    let mut rows = rows?;
    rows.sort_by_key(|(key, _)| *key);

    let meta = Metadata::new("converge", cfg);
    let mut out = CommandOutput::new(&meta, CONVERGE_COLUMNS);
    out.rows = rows.into_iter().map(|(_, r)| r).collect();
    Ok(out)
}

const RESOLVE_COLUMNS: &[&str] = &["map", "omega", "delta", "R", "ratio_to_scaling", "warnings"];

fn scaling_for(kind: MapKind, c: f64) -> (ScalingLaw<f64>, &'static str) {
    match kind {
        MapKind::E => (ScalingLaw::OmegaSquared, "omega^2"),
        MapKind::De => (ScalingLaw::OmegaLog { c }, "omega*log(c*omega)"),
        MapKind::Se | MapKind::Sde => (ScalingLaw::Omega, "omega"),
    }
}

/// Measured total error of `rule` at degree `n` for the oscillation
/// `exp(-2 pi i omega x)`.
pub fn oscillation_error(
    rule: &ParameterRule<f64>,
    variant: RuleVariant,
    omega: u32,
    n: usize,
    grid: usize,
) -> f64 {
    let f = lookup("osc").expect("registry").build(Some(omega));
    error_point(rule, variant, &f, n, grid)
        .expect("oscillation sweeps evaluate finitely")
        .report
        .total
}

pub fn resolve_one(
    cfg: &RunConfig,
    kind: MapKind,
    omega: u32,
) -> Result<ResolutionRecord<f64>, BenchError> {
    let rule = rule_for(kind, cfg.c, cfg.alpha0, cfg.l0);
    let rec = measure_resolution(
        |n| oscillation_error(&rule, cfg.rule_variant, omega, n, cfg.grid),
        omega,
        cfg.delta,
        cfg.n_max,
    )?;
    Ok(rec)
}

pub fn cmd_resolve(cfg: &RunConfig) -> Result<CommandOutput, BenchError> {
    cfg.validate_common()?;
    cfg.validate_omegas()?;

    let tasks: Vec<(usize, u32)> = cfg
        .maps
        .iter()
        .enumerate()
        .flat_map(|(mi, _)| cfg.omegas.iter().map(move |&w| (mi, w)))
        .collect();
    let results: Result<Vec<_>, BenchError> = with_pool(cfg.jobs, || {
        tasks
            .par_iter()
            .map(|&(mi, omega)| {
                let rec = resolve_one(cfg, cfg.maps[mi], omega)?;
                Ok(((mi, omega), rec))
            })
            .collect()
    })?;
    let mut results = results?;
    results.sort_by_key(|(key, _)| *key);

    let meta = Metadata::new("resolve", cfg);
    let mut out = CommandOutput::new(&meta, RESOLVE_COLUMNS);
    for (mi, kind) in cfg.maps.iter().enumerate() {
        let (scaling, scaling_name) = scaling_for(*kind, cfg.c);
        let records: Vec<ResolutionRecord<f64>> = results
            .iter()
            .filter(|((i, _), _)| *i == mi)
            .map(|(_, r)| *r)
            .collect();
        for rec in &records {
            debug_assert!(rec.dof >= 2 * rec.omega as usize);
            let rule = rule_for(*kind, cfg.c, cfg.alpha0, cfg.l0);
            let (spec, _) = rule.map_spec(rec.dof.saturating_sub(1).max(1), cfg.rule_variant)?;
            let warning = spec
                .finite_precision_warning()
                .map(|w| w.to_string())
                .unwrap_or_default();
            out.rows.push(vec![
                kind.label().to_string(),
                rec.omega.to_string(),
                fmt_float(rec.delta),
                rec.dof.to_string(),
                fmt_float(rec.dof as f64 / scaling.value(rec.omega)?),
                warning,
            ]);
        }
        if records.len() >= 3 {
            let constant = resolution_constant(&records, scaling)?;
            out.footers.push(
                serde_json::json!({
                    "map": kind.label(),
                    "scaling": scaling_name,
                    "delta": cfg.delta,
                    "records": records.len(),
                    "estimator": "max over upper half of records by omega",
                    "resolution_constant": constant,
                })
                .to_string(),
            );
        }
    }
    Ok(out)
}

const COMPARE_COLUMNS: &[&str] = &[
    "function",
    "map",
    "n",
    "c",
    "alpha0",
    "l0",
    "L",
    "alpha",
    "interior",
    "endpoint_lo",
    "endpoint_hi",
    "total",
    "warnings",
];

/// Which constant a map family tunes, with its default search range.
pub fn tunable_constant(kind: MapKind) -> (&'static str, f64, f64) {
    match kind {
        MapKind::Se => ("alpha0", 0.1, 4.0),
        _ => ("c", 0.05, 5.0),
    }
}

pub fn log_grid(min: f64, max: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![min];
    }
    let (la, lb) = (min.ln(), max.ln());
    (0..points)
        .map(|i| (la + (lb - la) * i as f64 / (points - 1) as f64).exp())
        .collect()
}

/// Index of the smallest error; ties break toward the smaller constant
/// (first occurrence on the ascending grid).
pub fn argmin_scan(errors: &[f64]) -> usize {
    let mut best = 0;
    for (i, &e) in errors.iter().enumerate() {
        if e < errors[best] {
            best = i;
        }
    }
    best
}

fn substitute_constant(kind: MapKind, cfg: &RunConfig, value: f64) -> ParameterRule<f64> {
    match tunable_constant(kind).0 {
        "alpha0" => rule_for(kind, cfg.c, value, cfg.l0),
        _ => rule_for(kind, value, cfg.alpha0, cfg.l0),
    }
}

/// Grid-search the tunable constant, minimizing the measured error at the
/// full budget `n_max`.
pub fn optimize_constant(
    cfg: &RunConfig,
    kind: MapKind,
    f: &TestFn,
) -> Result<(f64, Vec<(f64, f64)>), BenchError> {
    let (name, dmin, dmax) = tunable_constant(kind);
    let min = cfg.opt_min.unwrap_or(dmin);
    let max = cfg.opt_max.unwrap_or(dmax);
    let points = cfg.opt_points.unwrap_or(20);
    if points == 0 {
        return Err(BenchError::config("opt_points", "search range is empty"));
    }
    if !(min > 0.0 && max >= min) {
        return Err(BenchError::config(
            if name == "c" {
                "opt_min/opt_max (c)"
            } else {
                "opt_min/opt_max (alpha0)"
            },
            format!("invalid range [{min}, {max}]"),
        ));
    }
    let grid = log_grid(min, max, points);
    let evals: Result<Vec<(f64, f64)>, BenchError> = grid
        .par_iter()
        .map(|&v| {
            let rule = substitute_constant(kind, cfg, v);
            let pt = error_point(&rule, cfg.rule_variant, f, cfg.n_max, cfg.grid)?;
            Ok((v, pt.report.total))
        })
        .collect();
    let evals = evals?;
    let errors: Vec<f64> = evals.iter().map(|&(_, e)| e).collect();
    Ok((evals[argmin_scan(&errors)].0, evals))
}

pub fn cmd_compare(cfg: &RunConfig) -> Result<CommandOutput, BenchError> {
    cfg.validate_common()?;
    let functions: Vec<&TestFunctionSpec> = match cfg.function.as_deref() {
        Some(id) => vec![lookup(id)
            .ok_or_else(|| BenchError::config("function", format!("unknown id `{id}`")))?],
        None => ["f1", "f2", "f3"]
            .iter()
            .map(|id| lookup(id).expect("registry"))
            .collect(),
    };
    let ns = geometric_schedule(cfg.n_max);
    if ns.is_empty() {
        return Err(BenchError::config("n_max", "must be at least 4"));
    }

    let meta = Metadata::new("compare", cfg);
    let mut out = CommandOutput::new(&meta, COMPARE_COLUMNS);
    let result: Result<Vec<Vec<Vec<String>>>, BenchError> = with_pool(cfg.jobs, || {
        functions
            .iter()
            .flat_map(|spec| cfg.maps.iter().map(move |&kind| (spec, kind)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(spec, kind)| {
                let f = spec.build(cfg.omega_param);
                let (best, _) = optimize_constant(cfg, kind, &f)?;
                let mut local = RunConfig::clone(cfg);
                match tunable_constant(kind).0 {
                    "alpha0" => local.alpha0 = best,
                    _ => local.c = best,
                }
                let rule = rule_for(kind, local.c, local.alpha0, local.l0);
                let mut rows = Vec::new();
                for &n in &ns {
                    let pt = error_point(&rule, cfg.rule_variant, &f, n, cfg.grid)?;
                    rows.push(vec![
                        spec.id.to_string(),
                        kind.label().to_string(),
                        n.to_string(),
                        fmt_float(local.c),
                        fmt_float(local.alpha0),
                        fmt_float(local.l0),
                        fmt_float(pt.l),
                        fmt_opt_float(pt.alpha),
                        fmt_float(pt.report.interior),
                        fmt_float(pt.report.endpoint_lo),
                        fmt_float(pt.report.endpoint_hi),
                        fmt_float(pt.report.total),
                        pt.warning,
                    ]);
                }
                Ok(rows)
            })
            .collect()
    })?;
    for rows in result? {
        out.rows.extend(rows);
    }
    // fixed key order regardless of completion
    out.rows.sort_by(|a, b| {
        (&a[0], &a[1], a[2].parse::<usize>().unwrap()).cmp(&(
            &b[0],
            &b[1],
            b[2].parse::<usize>().unwrap(),
        ))
    });
    Ok(out)
}

const OPTIMIZE_COLUMNS: &[&str] = &[
    "map",
    "function",
    "constant",
    "value",
    "error_at_n_max",
    "warnings",
];

pub fn cmd_optimize(cfg: &RunConfig) -> Result<CommandOutput, BenchError> {
    cfg.validate_common()?;
    if cfg.maps.len() != 1 {
        return Err(BenchError::config("map", "optimize takes exactly one map"));
    }
    let kind = cfg.maps[0];
    let spec = required_function(cfg)?;
    let f = spec.build(cfg.omega_param);

    let (grid_evals, best) = with_pool(cfg.jobs, || {
        optimize_constant(cfg, kind, &f).map(|(best, evals)| (evals, best))
    })??;
    let (name, _, _) = tunable_constant(kind);

    let meta = Metadata::new("optimize", cfg);
    let mut out = CommandOutput::new(&meta, OPTIMIZE_COLUMNS);
    for &(v, err) in &grid_evals {
        let rule = substitute_constant(kind, cfg, v);
        let (mspec, _) = rule.map_spec(cfg.n_max, cfg.rule_variant)?;
        out.rows.push(vec![
            kind.label().to_string(),
            spec.id.to_string(),
            name.to_string(),
            fmt_float(v),
            fmt_float(err),
            mspec
                .finite_precision_warning()
                .map(|w| w.to_string())
                .unwrap_or_default(),
        ]);
    }
    out.footers.push(
        serde_json::json!({
            "argmin": {"constant": name, "value": best},
            "n_max": cfg.n_max,
            "function": spec.id,
            "map": kind.label(),
        })
        .to_string(),
    );
    Ok(out)
}

fn required_function(cfg: &RunConfig) -> Result<&'static TestFunctionSpec, BenchError> {
    let id = cfg
        .function
        .as_deref()
        .ok_or_else(|| BenchError::config("function", "a function id is required"))?;
    lookup(id).ok_or_else(|| BenchError::config("function", format!("unknown id `{id}`")))
}
