use schurq_core::exactring::int;
use schurq_core::wittvoa::symfn::{complete_in_p, p as power_sum, Bounds};
use schurq_core::wittvoa::{
    ghost, pairing_nondegeneracy, vertex_y_powersum, witt_add, witt_from_ints, witt_mul, witt_neg,
    y_multiplicativity_check, TParameter, WittVector,
};
use schurq_core::{Poly, Rational};
use serde_json::{json, Value};

use crate::config::{VoaCommand, WittArgs, WittOp};
use crate::error::{CliError, InModule, Module};
use crate::grammar::{parse_int_list, parse_poly};
use crate::report::{decimal, pass_fail, rational_json, Report, Table};

pub const MAX_WITT_ORDER: u32 = 30;
pub const MAX_VOA_DEGREE: u32 = 6;
pub const MAX_VOA_WINDOW: u32 = 12;
pub const MAX_CLOSURE_ORDER: u32 = 11;
pub const MAX_CLOSURE_MODES: u32 = 60;
pub const MAX_CLOSURE_N: u32 = 24;
/// Nilpotency order of the coefficient ring used for the trace pairing.
const PAIRING_NILPOTENCY: u32 = 7;

fn operand(text: &str, order: usize) -> Result<WittVector<Rational>, CliError> {
    let mut ints = parse_int_list(text)?;
    ints.resize(order, 0);
    Ok(witt_from_ints(&ints))
}

fn list(values: &[Rational]) -> String {
    values.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn witt(args: &WittArgs) -> Result<Report, CliError> {
    let needs_b = matches!(args.op, WittOp::Add | WittOp::Mul);
    if needs_b != args.b.is_some() {
        return Err(CliError::usage(if needs_b {
            "--b is required for add and mul"
        } else {
            "--b is only used by add and mul"
        }));
    }
    let len = |s: &str| s.split(',').count() as u32;
    let order = args.order.unwrap_or_else(|| len(&args.a).max(args.b.as_deref().map_or(0, len)));
    super::limit("--order", order, MAX_WITT_ORDER)?;
    if order == 0 {
        return Err(CliError::usage("--order must be positive"));
    }
    let a = operand(&args.a, order as usize)?;
    let result = match (args.op, &args.b) {
        (WittOp::Add, Some(b)) => witt_add(&a, &operand(b, order as usize)?),
        (WittOp::Mul, Some(b)) => witt_mul(&a, &operand(b, order as usize)?),
        (WittOp::Neg, _) => witt_neg(&a),
        _ => Ok(a),
    }
    .in_module(Module::Wittvoa)?;
    let coefficients = &result.series().coeffs()[1..];
    let ghosts = ghost(&result).in_module(Module::Wittvoa)?;
    let ghosts = ghosts.components();

    let mut table = Table::new(&["n", "h_n", "ghost_n", "ghost_decimal"]);
    for (i, (h, g)) in coefficients.iter().zip(ghosts).enumerate() {
        table.push(vec![(i + 1).to_string(), h.to_string(), g.to_string(), decimal(g)]);
    }
    let pretty = format!("h: {}\nghost: {}", list(coefficients), list(ghosts));
    let to_json = |v: &[Rational]| Value::Array(v.iter().map(rational_json).collect());
    Ok(Report {
        passed: true,
        pretty,
        json: json!({"order": order, "coefficients": to_json(coefficients), "ghost": to_json(ghosts)}),
        table,
    })
}

pub fn voa(cmd: &VoaCommand) -> Result<Report, CliError> {
    match *cmd {
        VoaCommand::YCheck { ref b, ref bprime, window, degree } => y_check(b, bprime, window, degree),
        VoaCommand::Closure { p, n_max, bound } => closure(p, n_max, bound),
        VoaCommand::Pairing { order } => pairing(order),
    }
}

/// An expression in the power sums `p_k` and complete functions `h_k`,
/// expanded in power sums.
pub fn parse_symmetric(expr: &str, degree: u32) -> Result<Poly, CliError> {
    let complete = complete_in_p(degree as usize, false).in_module(Module::Wittvoa)?;
    Ok(parse_poly(expr, |c, k| match c {
        'p' | 'h' if k == 0 => Ok(Poly::constant(int(1))),
        _ if k > degree => Err(format!("{c}{k} exceeds the degree bound {degree}")),
        'p' => Ok(power_sum(k)),
        'h' => Ok(complete[k as usize].clone()),
        _ => Err(format!("unknown variable '{c}{k}'; use p1, p2, ... or h1, h2, ...")),
    })?)
}

fn y_check(b: &str, bprime: &str, window: u32, degree: u32) -> Result<Report, CliError> {
    super::limit("--degree", degree, MAX_VOA_DEGREE)?;
    super::limit("--window", window, MAX_VOA_WINDOW)?;
    let (x, y) = (parse_symmetric(b, degree)?, parse_symmetric(bprime, degree)?);
    let w = window as i64;
    let bounds = Bounds::symmetric(degree);
    let witness = y_multiplicativity_check(&x, &y, (-w, w), bounds).in_module(Module::Wittvoa)?;
    let verdict = if witness.inconclusive { "inconclusive" } else { pass_fail(witness.passed) };
    let pretty = format!(
        "Y(b) Y(b') = Y(b b') for z^k, |k| <= {window}, degree <= {degree}\ncoefficients compared: {}\nmismatches: {:?}\n{verdict}",
        witness.compared, witness.mismatches
    );
    let mut table = Table::new(&["window", "degree", "compared", "mismatches", "result"]);
    let mismatches: Vec<String> = witness.mismatches.iter().map(i64::to_string).collect();
    table.push(vec![
        window.to_string(),
        degree.to_string(),
        witness.compared.to_string(),
        mismatches.join(" "),
        verdict.into(),
    ]);
    Ok(Report {
        passed: witness.passed,
        pretty,
        json: json!({
            "b": b, "bprime": bprime, "window": [-w, w], "degree": degree,
            "compared": witness.compared, "mismatches": witness.mismatches,
            "inconclusive": witness.inconclusive, "passed": witness.passed,
        }),
        table,
    })
}

fn closure(p: u32, n_max: u32, bound: u32) -> Result<Report, CliError> {
    super::limit("--p", p, MAX_CLOSURE_ORDER)?;
    super::limit("--bound", bound, MAX_CLOSURE_MODES)?;
    super::limit("--n-max", n_max, MAX_CLOSURE_N)?;
    if p < 2 {
        return Err(CliError::usage("--p must be at least 2"));
    }
    let mut table = Table::new(&["n", "closes"]);
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut passed = true;
    for n in (1..=n_max).filter(|n| n % p != 0) {
        let y = vertex_y_powersum(n, TParameter::PrimitiveRoot(p)).in_module(Module::Wittvoa)?;
        let closes = y.closes_on_quotient(bound);
        passed &= closes == Some(true);
        let text = match closes {
            Some(true) => "closes",
            Some(false) => "does not close",
            None => "undetermined",
        };
        lines.push(format!("Y(p_{n}): {text}"));
        table.push(vec![n.to_string(), text.into()]);
        rows.push(json!({"n": n, "closes": closes}));
    }
    lines.push(pass_fail(passed).into());
    Ok(Report {
        passed,
        pretty: lines.join("\n"),
        json: json!({"p": p, "bound": bound, "rows": rows, "passed": passed}),
        table,
    })
}

fn pairing(order: u32) -> Result<Report, CliError> {
    super::limit("--order", order, PAIRING_NILPOTENCY - 1)?;
    let w = pairing_nondegeneracy::<PAIRING_NILPOTENCY>(order as usize).in_module(Module::Wittvoa)?;
    let mut table = Table::new(&["i", "j", "value"]);
    for (i, row) in w.gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            table.push(vec![(i + 1).to_string(), (j + 1).to_string(), v.to_string()]);
        }
    }
    let rows: Vec<String> = w.gram.iter().map(|r| format!("[{}]", list(r))).collect();
    let gram: Vec<Vec<Value>> = w.gram.iter().map(|r| r.iter().map(rational_json).collect()).collect();
    Ok(Report {
        passed: w.nondegenerate,
        pretty: format!("gram:\n{}\ndeterminant: {}\n{}", rows.join("\n"), w.determinant, pass_fail(w.nondegenerate)),
        json: json!({"order": order, "gram": gram, "determinant": rational_json(&w.determinant), "passed": w.nondegenerate}),
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::WittOp;

    fn args(op: WittOp, a: &str, b: Option<&str>) -> WittArgs {
        WittArgs { op, a: a.into(), b: b.map(Into::into), order: None }
    }

    #[test]
    fn witt_ops() {
        // (1+2T)*(1+3T) = 1+6T
        let r = witt(&args(WittOp::Mul, "2,0,0", Some("3"))).unwrap();
        assert_eq!(r.pretty.lines().next(), Some("h: 6, 0, 0"));
        let r = witt(&args(WittOp::Ghost, "1", None)).unwrap();
        assert_eq!(r.pretty, "h: 1\nghost: 1");
        assert!(witt(&args(WittOp::Add, "1", None)).is_err());
        assert!(witt(&args(WittOp::Add, "1", Some("1,x"))).is_err());
    }

    #[test]
    fn vertex_checks() {
        assert!(y_check("p1", "p1", 6, 4).unwrap().passed);
        assert!(y_check("h1", "h1 - p1 + 1", 4, 3).unwrap().passed);
        assert!(matches!(parse_symmetric("p5", 4), Err(CliError::Parse(_))));
        assert!(closure(3, 5, 30).unwrap().passed);
        assert!(pairing(3).unwrap().passed);
        assert!(pairing(7).is_err());
    }
}
