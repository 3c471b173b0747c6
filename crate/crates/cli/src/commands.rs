//! The subcommands, as plain functions returning a rendered table.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use connpart_core::cumulants::{self, Flavor, Sequence};
use connpart_core::partition::PartitionFamily;
use connpart_core::series::DEFAULT_ORDER;
use connpart_core::theorem::{self, Check};
use connpart_core::{LambdaPoly, Rational, Ring};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::format::{self, FormatError, JsonScalar};

pub const MAX_ORDER: usize = 16;
/// Enumerating `Π_n` beyond this is Bell-number territory (`B_13 ≈ 2.8e7`).
pub const MAX_COUNT_N: usize = 13;
pub const MAX_PAIRING_N: usize = 14;
pub const MAX_VERIFY_N: usize = 9;
pub const MAX_BLOCKPOLY_N: usize = 10;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] connpart_core::Error),
}

fn usage(msg: impl Into<String>) -> CommandError {
    CommandError::Usage(msg.into())
}

/// Rows of text plus the equivalent JSON document.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub rows: Vec<Vec<String>>,
    pub json: Value,
}

impl Output {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            self.rows.iter().map(|r| r.join("\t") + "\n").collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Rate {
    Exact(Rational),
    Lambda,
}

/// `gaussian`, `poisson:RATE` (RATE a rational or `lambda`), or `custom`
/// backed by a JSON file.
#[derive(Clone, Debug, PartialEq)]
pub enum DistributionSpec {
    Gaussian,
    Poisson(Rate),
    Custom(PathBuf),
}

impl DistributionSpec {
    pub fn parse(spec: &str, file: Option<&Path>) -> Result<Self, CommandError> {
        let (name, rate) = match spec.split_once(':') {
            Some((name, rate)) => (name, Some(rate)),
            None => (spec, None),
        };
        let dist = match (name, rate) {
            ("gaussian", None) => DistributionSpec::Gaussian,
            ("gaussian", Some(_)) => return Err(usage("gaussian takes no parameter")),
            ("poisson", None) => return Err(usage("poisson needs a rate, e.g. poisson:1 or poisson:lambda")),
            ("poisson", Some("lambda" | "λ")) => DistributionSpec::Poisson(Rate::Lambda),
            ("poisson", Some(r)) => DistributionSpec::Poisson(Rate::Exact(format::parse_rational(r)?)),
            ("custom", None) => match file {
                Some(path) => DistributionSpec::Custom(path.to_path_buf()),
                None => return Err(usage("custom needs --moments-file")),
            },
            ("custom", Some(_)) => return Err(usage("custom takes its values from --moments-file")),
            _ => return Err(usage(format!("unknown distribution {name:?}"))),
        };
        if file.is_some() && !matches!(dist, DistributionSpec::Custom(_)) {
            return Err(usage("--moments-file only applies to --dist custom"));
        }
        Ok(dist)
    }
}

fn check_order(order: usize) -> Result<(), CommandError> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(usage(format!("order must be between 1 and {MAX_ORDER}, got {order}")))
    }
}

fn sequence_table<R: JsonScalar>(seq: &Sequence<R>) -> Output {
    let rows = seq
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| vec![(i + 1).to_string(), v.to_string()])
        .collect();
    Output {
        rows,
        json: format::sequence_to_json(seq),
    }
}

fn convert<R: JsonScalar>(source: &Sequence<R>, from: Flavor, to: Flavor) -> Result<Output, CommandError> {
    let input = cumulants::transform(source, from)?;
    Ok(sequence_table(&cumulants::transform(&input, to)?))
}

/// The `to` sequence of a distribution, given or derived in the `from` flavor.
///
/// Built-in distributions start from their classical cumulants; a custom
/// file holds the `from` sequence itself.
pub fn transform(dist: &DistributionSpec, from: Flavor, to: Flavor, order: Option<usize>) -> Result<Output, CommandError> {
    match dist {
        DistributionSpec::Gaussian => {
            let order = order.unwrap_or(DEFAULT_ORDER);
            check_order(order)?;
            convert(&cumulants::gaussian::<Rational>(order), from, to)
        }
        DistributionSpec::Poisson(Rate::Exact(rate)) => {
            let order = order.unwrap_or(DEFAULT_ORDER);
            check_order(order)?;
            convert(&cumulants::poisson(rate.clone(), order), from, to)
        }
        DistributionSpec::Poisson(Rate::Lambda) => {
            let order = order.unwrap_or(DEFAULT_ORDER);
            check_order(order)?;
            convert(&cumulants::poisson(LambdaPoly::lambda(), order), from, to)
        }
        DistributionSpec::Custom(path) => {
            let text = fs::read_to_string(path).map_err(|source| CommandError::Io {
                path: path.clone(),
                source,
            })?;
            let seq: Sequence<Rational> =
                format::sequence_from_json(&text, from).map_err(|source| CommandError::File {
                    path: path.clone(),
                    source,
                })?;
            let order = order.unwrap_or(seq.order().min(MAX_ORDER));
            check_order(order)?;
            if seq.order() < order {
                return Err(usage(format!(
                    "{} holds {} values, order {order} requested",
                    path.display(),
                    seq.order()
                )));
            }
            convert(&seq.truncate(order), from, to)
        }
    }
}

/// Cardinality of a partition family for `n = 1..=max` (even `n` only for pairings).
pub fn count(kind: PartitionFamily, max: usize) -> Result<Output, CommandError> {
    let limit = if kind.needs_even() { MAX_PAIRING_N } else { MAX_COUNT_N };
    if max == 0 {
        return Err(usage("--max must be at least 1"));
    }
    if max > limit {
        return Err(usage(format!(
            "refusing to enumerate {kind} partitions beyond n = {limit}: the number of set partitions grows like the Bell numbers"
        )));
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for n in (1..=max).filter(|n| !kind.needs_even() || n % 2 == 0) {
        let c = connpart_core::enumerate(n, kind)?.count();
        rows.push(vec![n.to_string(), c.to_string()]);
        entries.push(json!({"n": n, "count": c}));
    }
    Ok(Output {
        rows,
        json: json!({"kind": kind.name(), "counts": entries}),
    })
}

/// `Σ_{π connected} λ^{|π|}` for `n = 1..=max`, with its value at `λ = 1`.
pub fn blockpoly(max: usize) -> Result<Output, CommandError> {
    if max == 0 || max > MAX_BLOCKPOLY_N {
        return Err(usage(format!("--max must be between 1 and {MAX_BLOCKPOLY_N}, got {max}")));
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for n in 1..=max {
        let poly = theorem::block_polynomial(n)?;
        let at_one = poly.eval(&Rational::one());
        rows.push(vec![n.to_string(), poly.to_string(), at_one.to_string()]);
        entries.push(json!({
            "n": n,
            "polynomial": poly.to_json(),
            "text": poly.to_string(),
            "at_one": at_one.to_string(),
        }));
    }
    Ok(Output {
        rows,
        json: Value::Array(entries),
    })
}

/// Result of `verify`: the checks in deterministic order and their JSON report.
#[derive(Clone, Debug)]
pub struct Verification {
    pub checks: Vec<Check>,
    pub report: Value,
}

impl Verification {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.equal())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Runs the theorem checks, fanning out trials across threads. `tamper`
/// deliberately corrupts the first comparison to exercise the failure path.
pub fn verify(max_n: usize, trials: usize, seed: u64, tamper: bool) -> Result<Verification, CommandError> {
    if max_n == 0 || max_n > MAX_VERIFY_N {
        return Err(usage(format!("--max-n must be between 1 and {MAX_VERIFY_N}, got {max_n}")));
    }
    if trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let per_trial = (0..trials as u64)
        .into_par_iter()
        .map(|t| theorem::verify_trial(max_n, seed.wrapping_add(t)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut checks: Vec<Check> = per_trial.into_iter().flatten().collect();
    if tamper {
        if let Some(first) = checks.first_mut() {
            first.rhs += Rational::one();
        }
    }
    let report = format::report_to_json(&checks, max_n, trials, seed);
    Ok(Verification { checks, report })
}

pub fn parse_flavor(s: &str) -> Result<Flavor, String> {
    Flavor::from_str(s).map_err(|e| e.to_string())
}

pub fn parse_family(s: &str) -> Result<PartitionFamily, String> {
    PartitionFamily::from_str(s).map_err(|e| e.to_string())
}
