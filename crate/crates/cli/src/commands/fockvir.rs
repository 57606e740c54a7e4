use schurq_core::exactring::int;
use schurq_core::fockvir::{virasoro_commutator_check, IntersectionTable};
use schurq_core::Poly;
use serde_json::{json, Value};

use super::Context;
use crate::cache;
use crate::error::CliError;
use crate::report::{decimal, pass_fail, rational_json, Report, Table};

pub const MAX_INTERSECTION_WEIGHT: u32 = 21;
pub const MAX_VIRASORO_WEIGHT: u32 = 12;
pub const MAX_VIRASORO_INDEX: u32 = 12;

/// `sum (2 d_j + 1)`, the weight of `t_{d_1} ... t_{d_n}`.
fn weight(degrees: &[u32]) -> u32 {
    degrees.iter().map(|d| 2 * d + 1).sum()
}

/// `<tau_0^3 tau_1>` style.
pub fn bracket(degrees: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let d = degrees[i];
        let run = degrees[i..].iter().take_while(|&&e| e == d).count();
        parts.push(if run == 1 { format!("tau_{d}") } else { format!("tau_{d}^{run}") });
        i += run;
    }
    format!("<{}>", parts.join(" "))
}

fn table_report(table: &IntersectionTable, max_weight: u32) -> Report {
    let mut pretty = Vec::new();
    let mut rows = Table::new(&["degrees", "genus", "weight", "value", "decimal"]);
    let mut entries = Vec::new();
    for (key, e) in table.entries().filter(|(k, _)| weight(k) <= max_weight) {
        pretty.push(format!("{} = {}    (genus {})", bracket(key), e.value, e.genus));
        let degrees: Vec<String> = key.iter().map(u32::to_string).collect();
        rows.push(vec![
            degrees.join(" "),
            e.genus.to_string(),
            weight(key).to_string(),
            e.value.to_string(),
            decimal(&e.value),
        ]);
        entries.push(json!({"degrees": key, "genus": e.genus, "value": rational_json(&e.value)}));
    }
    if pretty.is_empty() {
        pretty.push("no admissible multi-indices".into());
    }
    Report {
        passed: true,
        pretty: pretty.join("\n"),
        json: json!({"max_weight": max_weight, "entries": Value::Array(entries)}),
        table: rows,
    }
}

pub fn intersection(cx: &Context, max_weight: u32) -> Result<Report, CliError> {
    super::limit("--max-weight", max_weight, MAX_INTERSECTION_WEIGHT)?;
    let max_degree = max_weight.saturating_sub(1) / 2;
    let (table, warning) = cache::table(cx.cache_dir.as_deref(), max_degree)?;
    if let Some(w) = warning {
        eprintln!("schurq: warning: {w}");
    }
    match &cx.cache_dir {
        Some(dir) => cx.note(format!("intersection cache at {} holds degree {}", dir.display(), table.max_degree())),
        None => cx.note("cache disabled"),
    }
    Ok(table_report(&table, max_weight))
}

pub fn virasoro_check(m: i32, n: i32, max_weight: u32) -> Result<Report, CliError> {
    super::limit("--max-weight", max_weight, MAX_VIRASORO_WEIGHT)?;
    super::limit("|m|", m.unsigned_abs(), MAX_VIRASORO_INDEX)?;
    super::limit("|n|", n.unsigned_abs(), MAX_VIRASORO_INDEX)?;
    let w = virasoro_commutator_check(m, n, max_weight);
    let pretty = format!(
        "[L_{m}, L_{n}] = {}*L_{}{}\ncentral term: {}\nmonomials checked: {} (weight <= {max_weight})\n{}",
        m - n,
        m + n,
        if m + n == 0 { format!(" + {}", w.central) } else { String::new() },
        w.central,
        w.monomials_checked,
        pass_fail(w.passed),
    );
    let failures: Vec<String> =
        w.failures.iter().map(|f| Poly::monomial(f.clone(), int(1)).display_with(super::x_name).to_string()).collect();
    let mut table = Table::new(&["m", "n", "central", "central_decimal", "monomials_checked", "passed"]);
    table.push(vec![
        m.to_string(),
        n.to_string(),
        w.central.to_string(),
        decimal(&w.central),
        w.monomials_checked.to_string(),
        w.passed.to_string(),
    ]);
    Ok(Report {
        passed: w.passed,
        pretty,
        json: json!({
            "m": m, "n": n, "max_weight": max_weight,
            "central": rational_json(&w.central),
            "monomials_checked": w.monomials_checked,
            "failures": failures,
            "passed": w.passed,
        }),
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        assert_eq!(bracket(&[0, 0, 0, 1]), "<tau_0^3 tau_1>");
        assert_eq!(bracket(&[1]), "<tau_1>");
    }

    #[test]
    fn small_tables() {
        let cx = Context { cache_dir: None, verbose: 0 };
        let r = intersection(&cx, 3).unwrap();
        assert!(r.pretty.contains("<tau_0^3> = 1"));
        assert!(r.pretty.contains("<tau_1> = 1/24"));
        assert!(!r.pretty.contains("tau_0^4"));
        assert!(intersection(&cx, 99).is_err());
    }

    #[test]
    fn central_term() {
        let r = virasoro_check(2, -2, 6).unwrap();
        assert!(r.passed);
        assert!(r.pretty.contains("central term: 1/2"));
    }
}
