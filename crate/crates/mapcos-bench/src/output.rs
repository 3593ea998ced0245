//! CSV emission: a `#`-prefixed JSON metadata line, an RFC-4180 body, and
//! optional `#`-prefixed JSON footer lines. Floats are written in `{:e}`
//! form (shortest round-trip), so identical configs give identical bytes.

use std::io::Write;

use serde::Serialize;

use crate::config::RunConfig;
use mapcos::MapKind;

#[derive(Serialize)]
pub struct Metadata<'a> {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub rule_variant: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<&'a str>,
    pub maps: Vec<&'static str>,
    pub c: f64,
    pub alpha0: f64,
    pub l0: f64,
    pub n_max: usize,
    pub delta: f64,
    pub grid: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub omegas: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_param: Option<u32>,
}

impl<'a> Metadata<'a> {
    pub fn new(command: &'a str, cfg: &'a RunConfig) -> Self {
        Metadata {
            schema: 1,
            tool: "mapcos-bench",
            version: env!("CARGO_PKG_VERSION"),
            command,
            rule_variant: cfg.rule_variant.label(),
            function: cfg.function.as_deref(),
            maps: cfg.maps.iter().map(MapKind::label).collect(),
            c: cfg.c,
            alpha0: cfg.alpha0,
            l0: cfg.l0,
            n_max: cfg.n_max,
            delta: cfg.delta,
            grid: cfg.grid,
            omegas: cfg.omegas.clone(),
            omega_param: cfg.omega_param,
        }
    }
}

pub struct CommandOutput {
    pub metadata: String,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
    /// JSON footer lines, emitted `#`-prefixed after the body.
    pub footers: Vec<String>,
}

impl CommandOutput {
    pub fn new(metadata: &Metadata, columns: &'static [&'static str]) -> Self {
        CommandOutput {
            metadata: serde_json::to_string(metadata).expect("metadata serializes"),
            columns,
            rows: Vec::new(),
            footers: Vec::new(),
        }
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# {}", self.metadata)?;
        let mut csv = csv::WriterBuilder::new().from_writer(&mut w);
        csv.write_record(self.columns)?;
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.columns.len());
            csv.write_record(row)?;
        }
        csv.flush()?;
        drop(csv);
        for f in &self.footers {
            writeln!(w, "# {f}")?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("in-memory write");
        buf
    }
}

/// Shortest round-trip float formatting used for every float field.
pub fn fmt_float(x: f64) -> String {
    format!("{x:e}")
}

pub fn fmt_opt_float(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

/// Minimal gnuplot companion script referencing the CSV by name.
pub fn gnuplot_stub(csv_name: &str, x_col: usize, y_col: usize, title: &str) -> String {
    format!(
        "set datafile separator ','\n\
         set key autotitle columnhead\n\
         set logscale y\n\
         plot '{csv_name}' using {x_col}:{y_col} with linespoints title '{title}'\n"
    )
}

/// Minimal Vega-Lite companion spec referencing the CSV by name.
pub fn vega_stub(csv_name: &str, x_field: &str, y_field: &str) -> String {
    serde_json::json!({
        "$schema": "https://vega.github.io/schema/vega-lite/v5.json",
        "data": {"url": csv_name, "format": {"type": "csv", "parse": "auto"}},
        "mark": "line",
        "encoding": {
            "x": {"field": x_field, "type": "quantitative"},
            "y": {"field": y_field, "type": "quantitative", "scale": {"type": "log"}}
        }
    })
    .to_string()
}
