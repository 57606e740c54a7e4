mod analytic;
mod fockvir;
mod formal;
mod qdelta;
mod witt;

use std::path::PathBuf;

use schurq_core::{Poly, Rational};
use serde_json::{json, Value};

use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::report::{decimal, rational_json, Report, Table};

/// Settings shared by all commands.
pub struct Context {
    pub cache_dir: Option<PathBuf>,
    pub verbose: u8,
}

impl Context {
    pub fn from_config(config: &RunConfig) -> Self {
        let cache_dir = if config.no_cache { None } else { crate::cache::resolve_dir(config.cache_dir.as_deref()) };
        Context { cache_dir, verbose: config.verbose }
    }

    pub fn note(&self, msg: impl AsRef<str>) {
        if self.verbose > 0 {
            eprintln!("schurq: {}", msg.as_ref());
        }
    }
}

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let cx = Context::from_config(config);
    match &config.command {
        Command::Qreduce { expr } => qdelta::qreduce(expr),
        Command::Qfunction { partition } => qdelta::qfunction(partition),
        Command::Inner { a, b } => qdelta::inner(a, b),
        Command::Intersection { max_weight } => fockvir::intersection(&cx, *max_weight),
        Command::VirasoroCheck { m, n, max_weight } => fockvir::virasoro_check(*m, *n, *max_weight),
        Command::Kw(args) => formal::kw(args),
        Command::Fgl { exp } => formal::fgl(exp),
        Command::Ml { alpha, z, compare_asymptotic } => analytic::ml(*alpha, z, *compare_asymptotic),
        Command::Witt(args) => witt::witt(args),
        Command::Voa(cmd) => witt::voa(cmd),
    }
}

/// Rejects inputs above a desk-scale limit.
fn limit(name: &str, value: u32, max: u32) -> Result<(), CliError> {
    if value > max {
        Err(CliError::usage(format!("{name} = {value} exceeds the supported maximum {max}")))
    } else {
        Ok(())
    }
}

/// A polynomial as `{"text": ..., "terms": [{"monomial": {...}, "coefficient": "p/q"}]}`.
fn poly_json(p: &Poly, name: impl Fn(u32) -> String + Copy) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let monomial: serde_json::Map<String, Value> = m.iter().map(|(v, e)| (name(v), json!(e))).collect();
            json!({"monomial": monomial, "coefficient": rational_json(c)})
        })
        .collect();
    json!({"text": p.display_with(name).to_string(), "terms": terms})
}

/// CSV rows `label, term, coefficient, decimal` for each term of `p`.
fn poly_rows(table: &mut Table, label: &str, p: &Poly, name: impl Fn(u32) -> String + Copy) {
    for (m, c) in p.terms() {
        let term = Poly::monomial(m.clone(), Rational::from_integer(1.into()));
        table.push(vec![label.into(), term.display_with(name).to_string(), c.to_string(), decimal(c)]);
    }
}

fn x_name(k: u32) -> String {
    schurq_core::qdelta::x_name(k)
}
