//! `gap`: Cauchy-ensemble gap probabilities (Nyström determinant or MC).

use anyhow::Result;
use serde_json::json;

use romanovski_core::rmt::{
    gap_probability, mc_gap_estimate, orthonormal_basis, EnsembleSpec, GapQuery, RmtError,
};

use crate::output::{json_f64, print_json};
use crate::{ExitOutcome, Method};

#[allow(clippy::too_many_arguments)]
pub fn run(
    n: usize,
    a: f64,
    lo: f64,
    hi: f64,
    method: Method,
    order: usize,
    samples: u64,
    seed: u64,
) -> Result<ExitOutcome> {
    let spec = EnsembleSpec { n, a };
    let invalid = |e: RmtError| {
        eprintln!("error: {e}");
        ExitOutcome::UsageError
    };
    match method {
        Method::Nystrom => {
            let kernel = match orthonormal_basis(&spec) {
                Ok(k) => k,
                Err(e) => return Ok(invalid(e)),
            };
            let result = match gap_probability(&kernel, &GapQuery { lo, hi, order }) {
                Ok(r) => r,
                Err(e) => return Ok(invalid(e)),
            };
            print_json(&json!({
                "spec": {"N": n, "a": json_f64(a)},
                "interval": [json_f64(lo), json_f64(hi)],
                "method": "nystrom",
                "value": json_f64(result.value),
                "error": json_f64(result.discrepancy),
                "quadrature_order": result.order,
            }));
        }
        Method::Mc => {
            let est = match mc_gap_estimate(&spec, lo, hi, samples, seed) {
                Ok(e) => e,
                Err(e) => return Ok(invalid(e)),
            };
            print_json(&json!({
                "spec": {"N": n, "a": json_f64(a)},
                "interval": [json_f64(lo), json_f64(hi)],
                "method": "mc",
                "value": json_f64(est.estimate),
                "error": json_f64(est.std_error),
                "samples": est.samples,
                "seed": seed,
            }));
        }
    }
    Ok(ExitOutcome::Success)
}
