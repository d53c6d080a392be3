//! Report shapes and their two serializations.
//!
//! Every report starts with a verbatim echo of the configuration that
//! produced it, so a report file is self-describing and reproducible.
//! Rationals serialize as exact `"p/q"` strings — never as JSON numbers,
//! which would silently lose precision. Decimal renderings appear only
//! alongside their exact values, tagged with the mantissa precision that
//! produced them.
//!
//! JSON is emitted with a fixed field order (struct order) and CSV rows in a
//! deterministic order, so identical configurations produce byte-identical
//! output.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use taujet_core::{BigFloat, JetQ, Ratio};

use crate::config::{CommonArgs, FormatArg};
use crate::CliError;

/// The configuration block repeated at the head of every report.
#[derive(Serialize, Debug, Clone)]
pub struct ConfigEcho {
    pub command: String,
    pub epsilon: String,
    pub levels: u64,
    pub jet_order: u64,
    pub generation: u64,
    pub closure: String,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schedule_list: Option<Vec<String>>,
    pub precision: u64,
    pub format: String,
    pub output: String,
    pub poly_cap: u64,
    pub verbose: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reflect_all: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_hi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
}

impl ConfigEcho {
    pub fn new(command: &str, args: &CommonArgs) -> Self {
        ConfigEcho {
            command: command.to_string(),
            epsilon: args.epsilon.to_string(),
            levels: args.levels,
            jet_order: args.jet_order,
            generation: args.generation,
            closure: match args.closure {
                crate::config::ClosureArg::One => "one".to_string(),
                crate::config::ClosureArg::Linear => "linear".to_string(),
            },
            rule: match args.rule {
                crate::config::RuleArg::PowerTower => "power-tower".to_string(),
                crate::config::RuleArg::LiteralPowerTower => "literal-power-tower".to_string(),
            },
            schedule_list: args
                .schedule_list
                .as_ref()
                .map(|list| list.iter().map(Ratio::to_string).collect()),
            precision: args.precision,
            format: match args.format {
                FormatArg::Json => "json".to_string(),
                FormatArg::Csv => "csv".to_string(),
            },
            output: args
                .output
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_else(|| "-".to_string()),
            poly_cap: args.poly_cap,
            verbose: args.verbose,
            grid: None,
            reflect_all: None,
            t_lo: None,
            t_hi: None,
            steps: None,
        }
    }

    /// Renders the echo as `# key = value` comment lines for CSV heads.
    /// Keys come out in alphabetical order — deterministic by construction.
    fn comment_lines(&self) -> Vec<String> {
        let value = serde_json::to_value(self).expect("config echo serializes");
        let object = value.as_object().expect("config echo is an object");
        object
            .iter()
            .map(|(key, val)| {
                let rendered = match val {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Array(items) => items
                        .iter()
                        .map(|item| item.as_str().unwrap_or_default().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    other => other.to_string(),
                };
                format!("# {key} = {rendered}")
            })
            .collect()
    }
}

/// An exact value paired with its decimal reading.
#[derive(Serialize, Debug, Clone)]
pub struct DecimalValue {
    /// The value as an exact rational string.
    pub exact: String,
    /// Scientific-notation decimal at the configured precision.
    pub decimal: String,
}

impl DecimalValue {
    pub fn of(value: &BigFloat) -> Self {
        DecimalValue {
            exact: value.to_ratio().to_string(),
            decimal: value.to_decimal(),
        }
    }
}

pub fn ratio_strings(values: &[Ratio]) -> Vec<String> {
    values.iter().map(Ratio::to_string).collect()
}

pub fn jet_strings(jet: &JetQ) -> Vec<String> {
    ratio_strings(jet.coeffs())
}

/// A report that knows both its JSON shape (via `Serialize`) and its CSV
/// projection.
pub trait Report: Serialize {
    fn config(&self) -> &ConfigEcho;

    /// Summary lines placed between the config echo and the table,
    /// already `# `-prefixed by the caller's format.
    fn csv_summary(&self) -> Vec<(String, String)> {
        Vec::new()
    }

    /// Header row followed by data rows.
    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>);
}

pub fn render<R: Report>(report: &R, format: FormatArg) -> Result<String, CliError> {
    match format {
        FormatArg::Json => {
            let mut text = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
            text.push('\n');
            Ok(text)
        }
        FormatArg::Csv => {
            let mut out = String::new();
            for line in report.config().comment_lines() {
                out.push_str(&line);
                out.push('\n');
            }
            for (key, value) in report.csv_summary() {
                let _ = writeln!(out, "# {key} = {value}");
            }
            let (header, rows) = report.csv_table();
            out.push_str(&csv_row(&header));
            for row in rows {
                out.push_str(&csv_row(&row));
            }
            Ok(out)
        }
    }
}

fn csv_row(fields: &[String]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_escape(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Writes the rendered report to the configured destination.
pub fn write_out(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
    }
}

// ---------------------------------------------------------------------------
// Per-command report shapes
// ---------------------------------------------------------------------------

#[derive(Serialize, Debug)]
pub struct JetsReport {
    pub config: ConfigEcho,
    /// Normalization constant C of the inner branch.
    pub normalization_constant: String,
    /// Coefficients of the inner branch, orders 0..=K.
    pub tau_minus: Vec<String>,
    /// Coefficients of the outer branch, orders 0..=K.
    pub tau_plus: Vec<String>,
}

impl Report for JetsReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![(
            "normalization_constant".to_string(),
            self.normalization_constant.clone(),
        )]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec!["order".into(), "tau_minus".into(), "tau_plus".into()];
        let rows = self
            .tau_minus
            .iter()
            .zip(&self.tau_plus)
            .enumerate()
            .map(|(k, (m, p))| vec![k.to_string(), m.clone(), p.clone()])
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct ResidualCliReport {
    pub config: ConfigEcho,
    /// Residual coefficients, orders 0..=K.
    pub residual: Vec<String>,
    /// Order of the first surviving term, absent when the window is clean.
    pub leading_order: Option<usize>,
    pub leading_coefficient: String,
}

impl Report for ResidualCliReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![
            (
                "leading_order".to_string(),
                self.leading_order
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "none".to_string()),
            ),
            (
                "leading_coefficient".to_string(),
                self.leading_coefficient.clone(),
            ),
        ]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec!["order".into(), "residual".into()];
        let rows = self
            .residual
            .iter()
            .enumerate()
            .map(|(k, c)| vec![k.to_string(), c.clone()])
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct JumpRow {
    pub epsilon: String,
    pub total: String,
    /// Per-level contributions T_1 … T_{N−1}.
    pub terms: Vec<String>,
    pub closure_term: String,
    pub identity_holds: bool,
}

#[derive(Serialize, Debug)]
pub struct JumpScanReport {
    pub config: ConfigEcho,
    pub rows: Vec<JumpRow>,
}

impl Report for JumpScanReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let terms = self.rows.first().map(|r| r.terms.len()).unwrap_or(0);
        let mut header = vec!["epsilon".to_string(), "total".to_string()];
        for k in 1..=terms {
            header.push(format!("T{k}"));
        }
        header.push("closure_term".into());
        header.push("identity_holds".into());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut fields = vec![row.epsilon.clone(), row.total.clone()];
                fields.extend(row.terms.iter().cloned());
                fields.push(row.closure_term.clone());
                fields.push(row.identity_holds.to_string());
                fields
            })
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct ParityCliReport {
    pub config: ConfigEcho,
    pub reflect_mode: String,
    /// Sum of absolute coefficient defects between each branch and the
    /// reflection of its partner; exactly "0/1" for a symmetric pair.
    pub asymmetry: String,
    pub symmetric: bool,
    pub tau_minus: Vec<String>,
    pub tau_plus: Vec<String>,
    pub reflected_minus: Vec<String>,
    pub reflected_plus: Vec<String>,
}

impl Report for ParityCliReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![
            ("reflect_mode".to_string(), self.reflect_mode.clone()),
            ("asymmetry".to_string(), self.asymmetry.clone()),
            ("symmetric".to_string(), self.symmetric.to_string()),
        ]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec![
            "order".into(),
            "tau_minus".into(),
            "tau_plus".into(),
            "reflected_minus".into(),
            "reflected_plus".into(),
        ];
        let rows = (0..self.tau_minus.len())
            .map(|k| {
                vec![
                    k.to_string(),
                    self.tau_minus[k].clone(),
                    self.tau_plus[k].clone(),
                    self.reflected_minus[k].clone(),
                    self.reflected_plus[k].clone(),
                ]
            })
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct GenerationCliReport {
    pub config: ConfigEcho,
    /// 2^k, the order at which the configured generation first deviates.
    pub expected_order: usize,
    pub clean_below_expected: bool,
    pub leading_order: Option<usize>,
    pub leading_coefficient: Option<String>,
    /// Coefficients of ln(τ₋/τ_standard); absent for an unscaled cascade,
    /// whose deviation vanishes identically.
    pub log_coefficients: Option<Vec<String>>,
}

impl Report for GenerationCliReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![
            (
                "expected_order".to_string(),
                self.expected_order.to_string(),
            ),
            (
                "clean_below_expected".to_string(),
                self.clean_below_expected.to_string(),
            ),
            (
                "leading_order".to_string(),
                self.leading_order
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "none".to_string()),
            ),
            (
                "leading_coefficient".to_string(),
                self.leading_coefficient
                    .clone()
                    .unwrap_or_else(|| "none".to_string()),
            ),
        ]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec!["order".into(), "log_coefficient".into()];
        let rows = match &self.log_coefficients {
            None => Vec::new(),
            Some(coeffs) => coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), c.clone()])
                .collect(),
        };
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct TelescopeReport {
    pub config: ConfigEcho,
    /// The branch series computed through the level-by-level product.
    pub product: Vec<String>,
    /// The same series from the collapsed closed form.
    pub collapsed: Vec<String>,
    /// Collapsed closed form as an exact ratio of polynomials.
    pub collapsed_numerator: Vec<String>,
    pub collapsed_denominator: Vec<String>,
    /// Exact agreement of the two routes, both as truncated series and as
    /// rational functions under cross-multiplication.
    pub identical: bool,
}

impl Report for TelescopeReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![("identical".to_string(), self.identical.to_string())]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec!["order".into(), "product".into(), "collapsed".into()];
        let rows = self
            .product
            .iter()
            .zip(&self.collapsed)
            .enumerate()
            .map(|(k, (p, c))| vec![k.to_string(), p.clone(), c.clone()])
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct CompareCliRow {
    pub t: DecimalValue,
    pub tau_s: DecimalValue,
    pub tau_g: DecimalValue,
    pub abs_dev: DecimalValue,
    pub rel_dev: DecimalValue,
}

#[derive(Serialize, Debug)]
pub struct CompareCliReport {
    pub config: ConfigEcho,
    pub rows: Vec<CompareCliRow>,
}

impl Report for CompareCliReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec![
            "t".into(),
            "tau_s".into(),
            "tau_g".into(),
            "abs_dev".into(),
            "rel_dev".into(),
        ];
        let rows = self
            .rows
            .iter()
            .map(|row| {
                vec![
                    row.t.decimal.clone(),
                    row.tau_s.decimal.clone(),
                    row.tau_g.decimal.clone(),
                    row.abs_dev.decimal.clone(),
                    row.rel_dev.decimal.clone(),
                ]
            })
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug)]
pub struct ScheduleRow {
    pub level: usize,
    pub epsilon: String,
    pub alpha: String,
    /// Origin value of the plus-branch factor at this level.
    pub origin_factor: String,
    /// |t′(0) − 1|, defined for levels past the base.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<String>,
    /// Running normalization product C_n, defined for levels past the base.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partial_product: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct ScheduleCliReport {
    pub config: ConfigEcho,
    pub origin_is_unscaled: bool,
    pub strictly_decreasing_after_first: bool,
    pub normalization_constant: String,
    pub rows: Vec<ScheduleRow>,
}

impl Report for ScheduleCliReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![
            (
                "origin_is_unscaled".to_string(),
                self.origin_is_unscaled.to_string(),
            ),
            (
                "strictly_decreasing_after_first".to_string(),
                self.strictly_decreasing_after_first.to_string(),
            ),
            (
                "normalization_constant".to_string(),
                self.normalization_constant.clone(),
            ),
        ]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec![
            "level".into(),
            "epsilon".into(),
            "alpha".into(),
            "origin_factor".into(),
            "deviation".into(),
            "partial_product".into(),
        ];
        let rows = self
            .rows
            .iter()
            .map(|row| {
                vec![
                    row.level.to_string(),
                    row.epsilon.clone(),
                    row.alpha.clone(),
                    row.origin_factor.clone(),
                    row.deviation.clone().unwrap_or_default(),
                    row.partial_product.clone().unwrap_or_default(),
                ]
            })
            .collect();
        (header, rows)
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckRow {
    pub name: String,
    /// The mathematical statement being checked, self-contained.
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub status: String,
}

#[derive(Serialize, Debug)]
pub struct VerifyCliReport {
    pub config: ConfigEcho,
    pub checks: Vec<CheckRow>,
    /// "pass" iff every check passed.
    pub overall: String,
}

impl Report for VerifyCliReport {
    fn config(&self) -> &ConfigEcho {
        &self.config
    }

    fn csv_summary(&self) -> Vec<(String, String)> {
        vec![("overall".to_string(), self.overall.clone())]
    }

    fn csv_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = vec![
            "name".into(),
            "status".into(),
            "expected".into(),
            "actual".into(),
            "claim".into(),
        ];
        let rows = self
            .checks
            .iter()
            .map(|check| {
                vec![
                    check.name.clone(),
                    check.status.clone(),
                    check.expected.clone(),
                    check.actual.clone(),
                    check.claim.clone(),
                ]
            })
            .collect();
        (header, rows)
    }
}
