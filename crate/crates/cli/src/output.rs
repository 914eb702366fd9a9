//! Trajectory tables and verification reports.
//!
//! Trajectories are CSV with a header row; every float is printed with
//! 17 significant digits (`{:.16e}`), which round-trips `f64` exactly.
//!
//! Reports are line-oriented:
//!
//! ```text
//! # galilei verify seed=<seed> trials=<trials> tolerance_override=<none|value>
//! check,trials,max_residual,status
//! group.associativity,1000,0.0000000000000000e0,PASS
//! ...
//! overall,PASS
//! ```

use std::fmt::Write as _;

use galilei_core::orbits::{CoadjointOrbit, PhaseCoordinates};
use galilei_core::twobody::{sample_times, TrajectorySample, TwoBodySystem};
use galilei_core::verify::{RunConfig, VerificationReport};

/// A float with 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn push_row(out: &mut String, values: &[f64]) {
    let row: Vec<String> = values.iter().copied().map(num).collect();
    out.push_str(&row.join(","));
    out.push('\n');
}

/// Header of a single-orbit trajectory table.
pub fn orbit_header<O: CoadjointOrbit>() -> String {
    let [a, b] = O::State::NAMES;
    format!("t,{a},{b},jK,jP,jE,{}", O::KIND.casimir_name())
}

/// `n_steps + 1` samples of the time-translation flow of `orbit`.
pub fn orbit_trajectory<O: CoadjointOrbit>(
    orbit: &O,
    initial: O::State,
    t_end: f64,
    n_steps: usize,
) -> String {
    let mut out = orbit_header::<O>();
    out.push('\n');
    for t in sample_times(t_end, n_steps) {
        let s = orbit.evolve(initial, t);
        let j = orbit.momentum(s);
        let [a, b] = s.to_array();
        push_row(&mut out, &[t, a, b, j.j_k, j.j_p, j.j_e, orbit.casimir(&j)]);
    }
    out
}

pub const TWO_BODY_HEADER: &str = "t,p,q,pi,rho,p1,q1,p2,q2,jP_cm,jK_cm,jP_int,jK_int,jE,T,V";

/// A two-body trajectory table: barycentric and particle coordinates,
/// momenta, kinetic and potential energy.
pub fn two_body_trajectory(system: &TwoBodySystem, samples: &[TrajectorySample]) -> String {
    let mut out = String::from(TWO_BODY_HEADER);
    out.push('\n');
    for s in samples {
        let b = s.state.to_array();
        let x = system.from_barycenter(&s.state).to_array();
        let j = s.momentum;
        push_row(
            &mut out,
            &[
                s.t,
                b[0],
                b[1],
                b[2],
                b[3],
                x[0],
                x[1],
                x[2],
                x[3],
                j.j_p_cm,
                j.j_k_cm,
                j.j_p_int,
                j.j_k_int,
                j.j_e,
                s.energy.kinetic,
                s.energy.potential,
            ],
        );
    }
    out
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The line-oriented verification report.
pub fn report(config: &RunConfig, report: &VerificationReport) -> String {
    let mut out = String::new();
    let tol = config
        .tolerance_override
        .map_or_else(|| "none".to_string(), num);
    let _ = writeln!(
        out,
        "# galilei verify seed={} trials={} tolerance_override={tol}",
        config.seed, config.trials
    );
    out.push_str("check,trials,max_residual,status\n");
    for r in &report.records {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.name,
            r.trials,
            num(r.max_residual),
            status(r.passed)
        );
    }
    let _ = writeln!(out, "overall,{}", status(report.passed()));
    out
}

/// One paragraph per failed check, naming its worst-case inputs.
pub fn failure_details(report: &VerificationReport) -> String {
    let mut out = String::new();
    for r in report.failures() {
        let _ = write!(
            out,
            "FAIL {}: max_residual {} > tolerance {}; worst input:",
            r.name,
            num(r.max_residual),
            num(r.tolerance)
        );
        for (name, value) in &r.worst_input {
            let _ = write!(out, " {name}={}", num(*value));
        }
        out.push('\n');
    }
    out
}
