use std::path::Path;

use schurq_core::fgl::{integrality_check, kw_logarithm, law_from_exponential, mod_p_polynomial_check, GenusValues};
use schurq_core::qdelta::x_to_q;
use schurq_core::{Monomial, Poly, Rational, Series};
use serde_json::{json, Value};

use super::{poly_json, poly_rows, x_name};
use crate::config::KwArgs;
use crate::error::{CliError, InModule, Module};
use crate::grammar::parse_rational;
use crate::report::{decimal, pass_fail, rational_json, Report, Table};

pub const MAX_CPN: u32 = 7;
pub const MAX_KW_ORDER: u32 = 16;
pub const MAX_FGL_ORDER: u32 = 12;

pub fn kw(args: &KwArgs) -> Result<Report, CliError> {
    if let Some(n) = args.cpn {
        cpn(n)
    } else if let Some(order) = args.integrality {
        integrality(order)
    } else if let Some(p) = args.modp {
        modp(p, args.order)
    } else {
        Err(CliError::usage("one of --cpn, --integrality, --modp is required"))
    }
}

fn cpn(n: u32) -> Result<Report, CliError> {
    super::limit("--cpn", n, MAX_CPN)?;
    let logarithm = kw_logarithm(n as usize + 1).in_module(Module::Fgl)?;
    let genus = GenusValues::from_logarithm(&logarithm);
    let value = &genus.values[n as usize];
    let q = x_to_q(value).in_module(Module::Qdelta)?;
    let mut table = Table::new(&["basis", "term", "coefficient", "decimal"]);
    poly_rows(&mut table, "x", value, x_name);
    table.push(vec!["q".into(), q.to_string(), String::new(), String::new()]);
    Ok(Report {
        passed: true,
        pretty: format!("{}\nq-basis: {q}", value.display_with(x_name)),
        json: json!({"n": n, "x_basis": poly_json(value, x_name), "q_basis": q.to_string()}),
        table,
    })
}

fn integrality(order: u32) -> Result<Report, CliError> {
    super::limit("--integrality", order, MAX_KW_ORDER)?;
    let w = integrality_check(order as usize).in_module(Module::Fgl)?;
    let mut lines = Vec::new();
    let mut table = Table::new(&["power", "coefficient", "integral"]);
    let mut coefficients = Vec::new();
    for (i, c) in w.coefficients.iter().enumerate().skip(1) {
        let ok = !w.failures.contains(&i);
        lines.push(format!("T^{i}: {c}"));
        table.push(vec![i.to_string(), c.to_string(), ok.to_string()]);
        coefficients.push(json!({"power": i, "coefficient": c.to_string(), "integral": ok}));
    }
    lines.push(format!("integral to T^{order}: {}", pass_fail(w.integral)));
    Ok(Report {
        passed: w.integral,
        pretty: lines.join("\n"),
        json: json!({"order": order, "coefficients": coefficients, "failures": w.failures, "passed": w.integral}),
        table,
    })
}

fn modp(p: u32, order: u32) -> Result<Report, CliError> {
    super::limit("--order", order, MAX_KW_ORDER)?;
    let w = mod_p_polynomial_check(p, order as usize).in_module(Module::Fgl)?;
    let pretty = format!(
        "p = {p}: coefficients of T^(k+1) vanish mod p exactly for k >= {} (checked to T^{order})\n{}",
        w.cutoff,
        pass_fail(w.passed)
    );
    let mut table = Table::new(&["p", "cutoff", "order", "failures", "early_vanishing", "passed"]);
    let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    table.push(vec![
        p.to_string(),
        w.cutoff.to_string(),
        order.to_string(),
        list(&w.failures),
        list(&w.early_vanishing),
        w.passed.to_string(),
    ]);
    Ok(Report {
        passed: w.passed,
        pretty,
        json: json!({
            "p": p, "cutoff": w.cutoff, "order": order,
            "failures": w.failures, "early_vanishing": w.early_vanishing, "passed": w.passed,
        }),
        table,
    })
}

/// Reads `["0", "1", "1/2", 3, ...]`.
fn read_coefficients(path: &Path) -> Result<Vec<Rational>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: not valid JSON: {e}", path.display())))?;
    let Value::Array(items) = value else {
        return Err(CliError::usage(format!("{}: expected a JSON array of coefficients", path.display())));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let text = match item {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() => n.to_string(),
                _ => return Err(CliError::usage(format!("coefficient {i}: expected an integer or a \"p/q\" string"))),
            };
            parse_rational(&text).map_err(|e| CliError::usage(format!("coefficient {i}: {e}")))
        })
        .collect()
}

pub fn fgl(path: &Path) -> Result<Report, CliError> {
    let coeffs = read_coefficients(path)?;
    if coeffs.len() < 2 {
        return Err(CliError::usage("need the coefficients of at least T^0 and T^1"));
    }
    let order = coeffs.len() as u32 - 1;
    super::limit("exponential order", order, MAX_FGL_ORDER)?;
    let exponential = Series::new("T", coeffs, order as usize);
    let law = law_from_exponential(&exponential).in_module(Module::Fgl)?;
    let axioms = law.check_axioms().in_module(Module::Fgl)?;
    let genus = law.genus_values();

    let mut table = Table::new(&["kind", "i", "j", "value", "decimal"]);
    let mut law_terms = Vec::new();
    let mut law_poly = Poly::default();
    for total in 1..=order {
        for i in 0..=total {
            let c = law.coeff(i, total - i);
            if num_traits::Zero::is_zero(&c) {
                continue;
            }
            let m = Monomial::from_pairs([(0, i as i32), (1, (total - i) as i32)]);
            law_poly.add_term(m, c.clone());
            table.push(vec!["law".into(), i.to_string(), (total - i).to_string(), c.to_string(), decimal(&c)]);
            law_terms.push(json!({"i": i, "j": total - i, "coefficient": rational_json(&c)}));
        }
    }
    let logarithm: Vec<Value> = law.logarithm.coeffs().iter().map(rational_json).collect();
    for (i, c) in law.logarithm.coeffs().iter().enumerate() {
        table.push(vec!["logarithm".into(), i.to_string(), String::new(), c.to_string(), decimal(c)]);
    }
    for (n, v) in genus.values.iter().enumerate() {
        table.push(vec!["genus".into(), n.to_string(), String::new(), v.to_string(), decimal(v)]);
    }
    let genus_json: Vec<Value> = genus.values.iter().map(rational_json).collect();
    let checks = [
        ("unit", axioms.unit),
        ("commutative", axioms.commutative),
        ("associative", axioms.associative),
        ("negation", axioms.negation),
        ("exp_log_inverse", axioms.exp_log_inverse),
        ("invariant_differential", axioms.invariant_differential),
    ];
    let passed = axioms.all();
    let pretty = format!(
        "F(X,Y) = {} + O(deg {})\nlogarithm: {}\ngenus of CP^0, CP^1, ...: {}\n{}\n{}",
        law_poly.display_with(|v| if v == 0 { "X".into() } else { "Y".into() }),
        order + 1,
        law.logarithm.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
        genus.values.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
        checks.iter().map(|(k, v)| format!("{k}: {}", pass_fail(*v))).collect::<Vec<_>>().join("\n"),
        pass_fail(passed),
    );
    let axioms_json: serde_json::Map<String, Value> = checks.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    Ok(Report {
        passed,
        pretty,
        json: json!({
            "order": order, "law": law_terms, "logarithm": logarithm,
            "genus": genus_json, "axioms": axioms_json, "passed": passed,
        }),
        table,
    })
}
