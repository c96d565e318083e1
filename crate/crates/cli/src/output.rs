//! Deterministic serialization: every float is emitted with 17 significant
//! digits, and JSON numbers carry that text verbatim (arbitrary-precision
//! numbers), so identical invocations produce byte-identical output.

use std::str::FromStr;

use serde_json::{Number, Value};

/// 17 significant digits, scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON value for a float: a 17-significant-digit number, or null for
/// non-finite values (which JSON cannot carry).
pub fn json_f64(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&fmt_f64(x)).expect("formatted float"))
    } else {
        Value::Null
    }
}

pub fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_f64(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_f64(-4.0), "-4.0000000000000000e0");
        let third: f64 = 1.0 / 3.0;
        assert_eq!(fmt_f64(third).parse::<f64>().unwrap(), third);
    }

    #[test]
    fn json_numbers_carry_the_text() {
        let v = json_f64(0.5);
        assert_eq!(serde_json::to_string(&v).unwrap(), "5.0000000000000000e-1");
        assert_eq!(json_f64(f64::NAN), Value::Null);
    }
}
