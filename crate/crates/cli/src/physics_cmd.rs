//! `physics`: bound-state solutions, overlap matrices, and plot data.

use anyhow::Result;
use serde_json::{json, Value};

use romanovski_core::math;
use romanovski_core::physics::{
    assoc_legendre_oracle, assoc_legendre_via_romanovski, legendre_cross_orthogonality,
    rosen_morse_overlap, rosen_morse_potential, rosen_morse_state, scarf_overlap, scarf_potential,
    scarf_state, BoundState, PhysicsError, RosenMorseParams, ScarfParams,
};

use crate::output::{fmt_f64, json_f64, print_json};
use crate::{Emit, ExitOutcome};

fn domain_error(e: PhysicsError) -> ExitOutcome {
    eprintln!("error: {e}");
    ExitOutcome::DomainError
}

pub fn scarf(a: f64, b: f64, n_max: Option<usize>, emit: Emit) -> Result<ExitOutcome> {
    let p = ScarfParams { a, b };
    let bound = if a > 0.0 { (a.ceil() as usize).max(1) - 1 } else { 0 };
    let top = n_max.unwrap_or_else(|| bound.min(8));
    let states: Vec<BoundState> = {
        let mut v = Vec::new();
        for n in 0..=top {
            match scarf_state(n, &p) {
                Ok(st) => v.push(st),
                Err(e) => return Ok(domain_error(e)),
            }
        }
        v
    };
    match emit {
        Emit::States => {
            print_json(&json!({
                "problem": "scarf",
                "A": json_f64(a),
                "B": json_f64(b),
                "states": states.iter().map(|st| json!({
                    "n": st.n,
                    "energy": json_f64(st.energy),
                    "normalization": json_f64(st.normalization),
                })).collect::<Vec<_>>(),
            }));
        }
        Emit::Overlaps => {
            let mut entries = Vec::new();
            for m in 0..states.len() {
                for n in m..states.len() {
                    match scarf_overlap(m, n, &p) {
                        Ok(o) => entries.push(json!({
                            "m": m, "n": n,
                            "value": json_f64(o.value),
                            "convergent": o.is_convergent(),
                        })),
                        Err(e) => return Ok(domain_error(e)),
                    }
                }
            }
            print_json(&json!({
                "problem": "scarf", "A": json_f64(a), "B": json_f64(b),
                "overlaps": entries,
            }));
        }
        Emit::Plotdata => {
            let headers: Vec<String> = ["z", "V"]
                .iter()
                .map(|s| s.to_string())
                .chain(states.iter().map(|st| format!("psi_{}", st.n)))
                .collect();
            println!("{}", headers.join(","));
            let points = 801;
            for i in 0..points {
                let z = -8.0 + 16.0 * i as f64 / (points - 1) as f64;
                let mut fields = vec![fmt_f64(z), fmt_f64(scarf_potential(z, &p))];
                for st in &states {
                    fields.push(fmt_f64(st.psi(z)));
                }
                println!("{}", fields.join(","));
            }
        }
    }
    Ok(ExitOutcome::Success)
}

pub fn rosen_morse(
    b: f64,
    l: u32,
    n_max: usize,
    emit: Emit,
    plot_compare: bool,
) -> Result<ExitOutcome> {
    let p = RosenMorseParams { b, l };
    let states: Vec<BoundState> = {
        let mut v = Vec::new();
        for n in 0..=n_max {
            match rosen_morse_state(n, &p) {
                Ok(st) => v.push(st),
                Err(e) => return Ok(domain_error(e)),
            }
        }
        v
    };
    match emit {
        Emit::States => {
            print_json(&json!({
                "problem": "rosenmorse",
                "b": json_f64(b),
                "l": l,
                "states": states.iter().map(|st| json!({
                    "n": st.n,
                    "energy": json_f64(st.energy),
                    "normalization": json_f64(st.normalization),
                })).collect::<Vec<_>>(),
            }));
        }
        Emit::Overlaps => {
            let mut entries = Vec::new();
            for m in 0..states.len() {
                for n in m..states.len() {
                    match rosen_morse_overlap(m, n, &p) {
                        Ok(o) => entries.push(json!({
                            "m": m, "n": n,
                            "value": json_f64(o.value),
                            "convergent": o.is_convergent(),
                        })),
                        Err(e) => return Ok(domain_error(e)),
                    }
                }
            }
            print_json(&json!({
                "problem": "rosenmorse", "b": json_f64(b), "l": l,
                "overlaps": entries,
            }));
        }
        Emit::Plotdata => {
            let mut headers: Vec<String> = ["z", "v"].iter().map(|s| s.to_string()).collect();
            if plot_compare {
                headers.push("v_coulomb_plus_linear".to_string());
            }
            headers.extend(states.iter().map(|st| format!("psi_{}", st.n)));
            println!("{}", headers.join(","));
            let points = 801;
            let ll = (l * (l + 1)) as f64;
            for i in 1..points {
                let z = math::PI * i as f64 / points as f64;
                let mut fields = vec![
                    fmt_f64(z),
                    fmt_f64(rosen_morse_potential(z, &p).unwrap_or(f64::NAN)),
                ];
                if plot_compare {
                    // leading Taylor behavior: Coulomb plus linear confinement
                    // plus the centrifugal barrier
                    fields.push(fmt_f64(-2.0 * b / z + 2.0 * b / 3.0 * z + ll / (z * z)));
                }
                for st in &states {
                    fields.push(fmt_f64(st.psi(z)));
                }
                println!("{}", fields.join(","));
            }
        }
    }
    Ok(ExitOutcome::Success)
}

pub fn legendre(l: u32, m: Option<u32>, emit: Emit) -> Result<ExitOutcome> {
    match emit {
        Emit::States | Emit::Plotdata => {
            // θ-sweep of the reconstruction against the oracle
            let m = m.unwrap_or(0);
            println!("theta,reconstruction,oracle,ratio");
            let points = 181;
            for i in 1..points {
                let theta = math::PI * i as f64 / points as f64;
                let v = match assoc_legendre_via_romanovski(l, m, theta) {
                    Ok(v) => v,
                    Err(e) => return Ok(domain_error(e)),
                };
                let oracle = assoc_legendre_oracle(l, m, math::cos(theta));
                let ratio = if oracle.abs() > 1e-12 { v / oracle } else { f64::NAN };
                println!(
                    "{},{},{},{}",
                    fmt_f64(theta),
                    fmt_f64(v),
                    fmt_f64(oracle),
                    fmt_f64(ratio)
                );
            }
            Ok(ExitOutcome::Success)
        }
        Emit::Overlaps => {
            let mut entries: Vec<Value> = Vec::new();
            for lp in 0..=4u32 {
                if lp == l {
                    continue;
                }
                let m_range: Vec<u32> = match m {
                    Some(m) => vec![m],
                    None => (0..=l.min(lp)).collect(),
                };
                for mm in m_range {
                    if mm > l.min(lp) {
                        return Ok(domain_error(PhysicsError::BadIndices));
                    }
                    match legendre_cross_orthogonality(l, lp, mm) {
                        Ok(o) => entries.push(json!({
                            "l": l, "lp": lp, "m": mm,
                            "value": json_f64(o.value),
                            "convergent": o.is_convergent(),
                        })),
                        Err(e) => return Ok(domain_error(e)),
                    }
                }
            }
            print_json(&json!({
                "problem": "legendre",
                "l": l,
                "overlaps": entries,
            }));
            Ok(ExitOutcome::Success)
        }
    }
}
