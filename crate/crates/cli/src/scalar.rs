//! Parameter parsing: exact "num/den" rationals vs decimal doubles.
//!
//! Integers and `num/den` strings route to the exact rational backend;
//! anything with a decimal point or exponent routes to the double backend
//! (flagged in output metadata, since exact identities need exact inputs).

use anyhow::{bail, Context, Result};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum ScalarInput {
    Exact(BigRational),
    Double(f64),
}

impl ScalarInput {
    pub fn is_exact(&self) -> bool {
        matches!(self, ScalarInput::Exact(_))
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            ScalarInput::Exact(r) => r.clone(),
            ScalarInput::Double(d) => BigRational::from_float(*d).expect("finite double"),
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<ScalarInput> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: num_bigint::BigInt = num
            .trim()
            .parse()
            .with_context(|| format!("bad numerator in {s:?}"))?;
        let den: num_bigint::BigInt = den
            .trim()
            .parse()
            .with_context(|| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            bail!("zero denominator in {s:?}");
        }
        return Ok(ScalarInput::Exact(BigRational::new(num, den)));
    }
    if let Ok(int) = s.parse::<num_bigint::BigInt>() {
        return Ok(ScalarInput::Exact(BigRational::from_integer(int)));
    }
    let d: f64 = s
        .parse()
        .with_context(|| format!("{s:?} is neither a rational nor a decimal"))?;
    if !d.is_finite() {
        bail!("{s:?} is not finite");
    }
    Ok(ScalarInput::Double(d))
}

/// Canonical "num/den" form (plain integer when the denominator is 1).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().abs().to_f64() == Some(1.0) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(
            parse_scalar("-7/2").unwrap(),
            ScalarInput::Exact(BigRational::new(BigInt::from(-7), BigInt::from(2)))
        );
        assert_eq!(
            parse_scalar("5").unwrap(),
            ScalarInput::Exact(BigRational::from_integer(BigInt::from(5)))
        );
        assert_eq!(parse_scalar("0.5").unwrap(), ScalarInput::Double(0.5));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(!parse_scalar("-3.5e-2").unwrap().is_exact());
    }

    #[test]
    fn formats_reduced_rationals() {
        let r = BigRational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(format_rational(&r), "-2/3");
        let i = BigRational::from_integer(BigInt::from(20));
        assert_eq!(format_rational(&i), "20");
    }
}
