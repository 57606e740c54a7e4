use schurq_core::exactring::int;
use schurq_core::qdelta::{classical_q, inner_product, q_reduce, q_to_x, QElement};
use schurq_core::Poly;
use serde_json::{json, Value};

use super::{poly_json, poly_rows, x_name};
use crate::error::{CliError, InModule, Module};
use crate::grammar::{parse_index_list, parse_poly};
use crate::report::{decimal, rational_json, Report, Table};

/// Largest index `k` accepted in `q_k`.
pub const MAX_Q_INDEX: u32 = 24;
/// Largest partition weight accepted by `qfunction`.
pub const MAX_PARTITION_WEIGHT: u32 = 30;

/// Parses an expression in the `q_k`, with `q0 = 1`.
pub fn parse_q(expr: &str) -> Result<QElement, CliError> {
    let raw = parse_poly(expr, |c, k| match c {
        'q' if k == 0 => Ok(Poly::constant(int(1))),
        'q' if k <= MAX_Q_INDEX => Ok(Poly::var(k)),
        'q' => Err(format!("q{k}: index exceeds {MAX_Q_INDEX}")),
        _ => Err(format!("unknown variable '{c}{k}'; expressions use q1, q2, ...")),
    })?;
    q_reduce(&raw).in_module(Module::Qdelta)
}

fn element_json(a: &QElement) -> Value {
    let terms: Vec<Value> =
        a.terms().map(|(l, c)| json!({"partition": l.parts(), "coefficient": rational_json(c)})).collect();
    json!({"text": a.to_string(), "terms": terms})
}

/// Both renderings of an element of the q-algebra.
fn element_report(a: &QElement, extra: Value) -> Report {
    let x = q_to_x(a);
    let pretty = format!("{a}\nx-basis: {}", x.display_with(x_name));
    let mut table = Table::new(&["basis", "term", "coefficient", "decimal"]);
    for (l, c) in a.terms() {
        let term = QElement::basis(l.clone()).to_string();
        table.push(vec!["q".into(), term, c.to_string(), decimal(c)]);
    }
    poly_rows(&mut table, "x", &x, x_name);
    let mut json = json!({"q_basis": element_json(a), "x_basis": poly_json(&x, x_name)});
    if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    Report { passed: true, pretty, json, table }
}

pub fn qreduce(expr: &str) -> Result<Report, CliError> {
    let a = parse_q(expr)?;
    Ok(element_report(&a, json!({"input": expr})))
}

pub fn qfunction(partition: &str) -> Result<Report, CliError> {
    let parts = parse_index_list(partition)?;
    if let Some(&big) = parts.iter().max() {
        super::limit("largest part", big, MAX_Q_INDEX)?;
    }
    super::limit("partition weight", parts.iter().sum(), MAX_PARTITION_WEIGHT)?;
    let q = classical_q(&parts).in_module(Module::Qdelta)?;
    Ok(element_report(&q, json!({"partition": parts})))
}

pub fn inner(a: &str, b: &str) -> Result<Report, CliError> {
    let (x, y) = (parse_q(a)?, parse_q(b)?);
    let value = inner_product(&x, &y);
    let mut table = Table::new(&["a", "b", "value", "decimal"]);
    table.push(vec![x.to_string(), y.to_string(), value.to_string(), decimal(&value)]);
    Ok(Report {
        passed: true,
        pretty: value.to_string(),
        json: json!({"a": element_json(&x), "b": element_json(&y), "value": rational_json(&value)}),
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(qreduce("q1^2").unwrap().pretty.lines().next(), Some("2*q2"));
        assert_eq!(qfunction("2,1").unwrap().pretty.lines().next(), Some("q2*q1 - 2*q3"));
        assert_eq!(inner("q1", "q1").unwrap().pretty, "2");
        assert_eq!(qreduce("q0 + q2^2 - 2*q1*q3 + 2*q4").unwrap().pretty.lines().next(), Some("1"));
    }

    #[test]
    fn errors() {
        assert!(matches!(qfunction("1,2"), Err(CliError::Core { module: Module::Qdelta, .. })));
        assert!(matches!(qreduce("q1 * p2"), Err(CliError::Parse(e)) if e.column == 6));
        assert!(matches!(qreduce("q99"), Err(CliError::Parse(_))));
    }
}
