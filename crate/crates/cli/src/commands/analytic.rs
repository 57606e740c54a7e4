use num_complex::Complex64;
use schurq_core::asympt::{asymptotic_comparison, ml_exp, Method};
use serde_json::json;

use crate::error::{CliError, InModule, Module};
use crate::report::{float, pass_fail, Report, Table};

/// Parses `2`, `-8`, `10i`, `-i`, `1.5-2i`, `1e3+4i`.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::usage(format!("'{text}' is not a complex number (examples: 2, 10i, 1.5-2i)"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let real = |t: &str| t.parse::<f64>().ok().filter(|x| x.is_finite());
    let Some(body) = s.strip_suffix('i') else {
        return real(&s).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad);
    };
    // the imaginary part starts at the last sign that is not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .unwrap_or(0);
    let (re_text, im_text) = body.split_at(split);
    let re = if re_text.is_empty() { 0.0 } else { real(re_text).ok_or_else(bad)? };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => real(t).ok_or_else(bad)?,
    };
    Ok(Complex64::new(re, im))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Series => "series",
        Method::Asymptotic => "asymptotic",
        Method::Identity => "identity",
        Method::RootFinding => "root-finding",
    }
}

fn show(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", float(z.re), float(z.im.abs()))
}

pub fn ml(alpha: f64, points: &[String], compare: bool) -> Result<Report, CliError> {
    if alpha != 1.0 && alpha != 0.5 {
        return Err(CliError::usage("--alpha must be 1 or 0.5"));
    }
    if compare && alpha != 0.5 {
        return Err(CliError::usage("--compare-asymptotic needs --alpha 0.5"));
    }
    let zs = points.iter().map(|p| parse_complex(p)).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut passed = true;
    let table = if compare {
        let mut table = Table::new(&[
            "z_re",
            "z_im",
            "series_re",
            "series_im",
            "asymptotic_re",
            "asymptotic_im",
            "difference",
            "bound",
            "within",
        ]);
        for z in zs {
            let c = asymptotic_comparison(z).in_module(Module::Asympt)?;
            passed &= c.within;
            let (f, a) = (c.function.value, c.asymptotic.value);
            table.push(vec![
                float(z.re),
                float(z.im),
                float(f.re),
                float(f.im),
                float(a.re),
                float(a.im),
                float(c.difference),
                float(c.bound),
                c.within.to_string(),
            ]);
            lines.push(format!(
                "z = {}: exp_1/2 = {}, asymptotic = {}, |difference| = {:e} <= bound {:e}: {}",
                show(z),
                show(f),
                show(a),
                c.difference,
                c.bound,
                pass_fail(c.within)
            ));
            rows.push(json!({
                "z": [z.re, z.im], "series": [f.re, f.im], "asymptotic": [a.re, a.im],
                "difference": c.difference, "bound": c.bound, "within": c.within,
            }));
        }
        table
    } else {
        let mut table = Table::new(&["z_re", "z_im", "value_re", "value_im", "error", "method"]);
        for z in zs {
            let e = ml_exp(alpha, z).in_module(Module::Asympt)?;
            table.push(vec![
                float(z.re),
                float(z.im),
                float(e.value.re),
                float(e.value.im),
                float(e.error),
                method_name(e.method).into(),
            ]);
            lines.push(format!(
                "exp_{alpha}({}) = {} (error <= {:e}, {})",
                show(z),
                show(e.value),
                e.error,
                method_name(e.method)
            ));
            rows.push(json!({
                "z": [z.re, z.im], "value": [e.value.re, e.value.im], "error": e.error, "method": method_name(e.method),
            }));
        }
        table
    };
    Ok(Report {
        passed,
        pretty: lines.join("\n"),
        json: json!({"alpha": alpha, "rows": rows, "passed": passed}),
        table,
    })
}
