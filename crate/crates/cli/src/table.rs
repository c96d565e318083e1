//! `table`: tabulate R_0 … R_max_n with exact or double coefficients.

use anyhow::{bail, Result};
use serde_json::{json, Value};

use romanovski_core::FamilyParams;

use crate::output::{fmt_f64, json_f64, print_json};
use crate::scalar::{format_rational, parse_scalar, ScalarInput};
use crate::Format;

pub fn run(alpha: &str, beta: &str, max_n: usize, format: Format) -> Result<()> {
    if max_n > 64 {
        bail!("--max-n must be at most 64");
    }
    let alpha = parse_scalar(alpha)?;
    let beta = parse_scalar(beta)?;
    let exact = alpha.is_exact() && beta.is_exact();
    let family = FamilyParams::new(alpha.to_rational(), beta.to_rational());

    struct Row {
        n: usize,
        degree: Option<usize>,
        deficient: bool,
        coeffs: Vec<String>,
        coeffs_json: Vec<Value>,
    }

    let rows: Vec<Row> = (0..=max_n)
        .map(|n| {
            let r = family.recurrence(n);
            let (coeffs, coeffs_json) = if exact {
                let strings: Vec<String> =
                    r.poly.coeffs().iter().map(format_rational).collect();
                let values = strings.iter().map(|s| Value::String(s.clone())).collect();
                (strings, values)
            } else {
                let doubles = r.to_double();
                let strings: Vec<String> =
                    doubles.coeffs().iter().map(|c| fmt_f64(*c)).collect();
                let values = doubles.coeffs().iter().map(|c| json_f64(*c)).collect();
                (strings, values)
            };
            Row {
                n,
                degree: r.poly.degree(),
                deficient: r.degree_deficient,
                coeffs,
                coeffs_json,
            }
        })
        .collect();

    match format {
        Format::Json => {
            let mut doc = json!({
                "alpha": alpha_beta_field(&alpha),
                "beta": alpha_beta_field(&beta),
                "backend": if exact { "rational" } else { "double" },
                "max_n": max_n,
                "rows": rows.iter().map(|r| json!({
                    "n": r.n,
                    "degree": r.degree,
                    "degree_deficient": r.deficient,
                    "coefficients": r.coeffs_json,
                })).collect::<Vec<_>>(),
            });
            if !exact {
                doc["notice"] = Value::String(
                    "decimal input routed to the double backend; pass num/den for exact output"
                        .into(),
                );
            }
            print_json(&doc);
        }
        Format::Csv => {
            let header: Vec<String> = ["n", "degree", "degree_deficient"]
                .iter()
                .map(|s| s.to_string())
                .chain((0..=max_n).map(|k| format!("c{k}")))
                .collect();
            println!("{}", header.join(","));
            for r in rows {
                let mut fields = vec![
                    r.n.to_string(),
                    r.degree.map(|d| d.to_string()).unwrap_or_default(),
                    r.deficient.to_string(),
                ];
                for k in 0..=max_n {
                    fields.push(r.coeffs.get(k).cloned().unwrap_or_default());
                }
                println!("{}", fields.join(","));
            }
        }
    }
    Ok(())
}

fn alpha_beta_field(s: &ScalarInput) -> Value {
    match s {
        ScalarInput::Exact(r) => Value::String(format_rational(r)),
        ScalarInput::Double(d) => json_f64(*d),
    }
}
