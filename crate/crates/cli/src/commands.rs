//! Subcommand bodies. Each writes its human-readable output to `stdout` and
//! returns the process exit code on success.

use std::io::Write;
use std::path::Path;

use galilei_core::orbits::CoadjointOrbit;
use galilei_core::verify::{self, tolerance, RunConfig};

use crate::output;
use crate::scenario::Scenario;
use crate::{CliError, EXIT_CHECK_FAILED};

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Malformed(format!("cannot write {}: {e}", path.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

/// Writes the sampled trajectory of a scenario as CSV.
pub fn simulate(
    scenario: &Path,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<u8, CliError> {
    let scenario = Scenario::load(scenario)?;
    let sampling = scenario.sampling();
    let (t_end, n) = (sampling.t_end, sampling.n_steps);
    let table = match &scenario {
        Scenario::SingleForced { orbit, initial, .. } => {
            output::orbit_trajectory(orbit, *initial, t_end, n)
        }
        Scenario::SingleFree { orbit, initial, .. } => {
            output::orbit_trajectory(orbit, *initial, t_end, n)
        }
        Scenario::SingleSpacetime { orbit, initial, .. } => {
            output::orbit_trajectory(orbit, *initial, t_end, n)
        }
        Scenario::TwoBody {
            system, initial, ..
        } => output::two_body_trajectory(system, &system.trajectory(initial, t_end, n)?),
    };
    emit(&table, out, stdout)?;
    Ok(0)
}

/// Runs the verification suite; exit code 1 if any check fails.
pub fn verify(
    config: &RunConfig,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, CliError> {
    if config.trials == 0 {
        return Err(CliError::Malformed("--trials must be at least 1".into()));
    }
    if let Some(tol) = config.tolerance_override {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Malformed(
                "--tolerance-override must be positive and finite".into(),
            ));
        }
    }
    let report = verify::run_all_with(config)?;
    emit(&output::report(config, &report), out, stdout)?;
    if report.passed() {
        Ok(0)
    } else {
        stderr.write_all(output::failure_details(&report).as_bytes())?;
        Ok(EXIT_CHECK_FAILED)
    }
}

/// Prints the barycentric coordinates and derived parameters of a two-body
/// scenario's initial state.
pub fn decompose(scenario: &Path, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let scenario = Scenario::load(scenario)?;
    let Scenario::TwoBody {
        system, initial, ..
    } = &scenario
    else {
        return Err(CliError::Malformed(format!(
            "decompose needs a two_body scenario, got {}",
            scenario.kind()
        )));
    };
    let x = system.from_barycenter(initial);
    let d = system.params();
    let lines = [
        ("p1", x.p1),
        ("q1", x.q1),
        ("p2", x.p2),
        ("q2", x.q2),
        ("p", initial.p),
        ("q", initial.q),
        ("pi", initial.pi),
        ("rho", initial.rho),
        ("m", d.total_mass),
        ("mu", d.reduced_mass),
        ("f", d.total_force),
        ("phi", d.relative_force),
    ];
    for (name, value) in lines {
        writeln!(stdout, "{name} = {value}")?;
    }
    writeln!(stdout, "isolated = {}", system.is_isolated())?;
    Ok(0)
}

fn orbit_momentum<O: CoadjointOrbit>(
    orbit: &O,
    s: O::State,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let j = orbit.momentum(s);
    for (name, value) in [("jK", j.j_k), ("jP", j.j_p), ("jE", j.j_e)] {
        writeln!(stdout, "{name} = {value}")?;
    }
    writeln!(stdout, "{} = {}", O::KIND.casimir_name(), orbit.casimir(&j))?;
    Ok(())
}

/// Prints momentum components and Casimir values of a scenario's initial
/// state.
pub fn momentum(scenario: &Path, stdout: &mut dyn Write) -> Result<u8, CliError> {
    match Scenario::load(scenario)? {
        Scenario::SingleForced { orbit, initial, .. } => orbit_momentum(&orbit, initial, stdout)?,
        Scenario::SingleFree { orbit, initial, .. } => orbit_momentum(&orbit, initial, stdout)?,
        Scenario::SingleSpacetime { orbit, initial, .. } => {
            orbit_momentum(&orbit, initial, stdout)?
        }
        Scenario::TwoBody {
            system, initial, ..
        } => {
            let j = system.momenta(&initial);
            let e = system.energy(&initial);
            let x = system.from_barycenter(&initial);
            let (o1, o2) = system.particle_orbits();
            let u1 = o1.casimir(&o1.momentum(x.particle1()));
            let u2 = o2.casimir(&o2.momentum(x.particle2()));
            let lines = [
                ("jP_cm", j.j_p_cm),
                ("jK_cm", j.j_k_cm),
                ("jP_int", j.j_p_int),
                ("jK_int", j.j_k_int),
                ("jE", j.j_e),
                ("T", e.kinetic),
                ("V", e.potential),
                ("U1", u1),
                ("U2", u2),
            ];
            for (name, value) in lines {
                writeln!(stdout, "{name} = {value}")?;
            }
        }
    }
    Ok(0)
}

/// Prints the version, default seed and trial count, and default tolerances.
pub fn info(stdout: &mut dyn Write) -> Result<u8, CliError> {
    let lines = [
        ("exact", tolerance::EXACT),
        ("action", tolerance::ACTION),
        ("casimir", tolerance::CASIMIR),
        ("energy", tolerance::ENERGY),
        ("finite_difference", tolerance::FINITE_DIFFERENCE),
        ("fd_step", tolerance::FD_STEP),
        ("fd_step_second", tolerance::FD_STEP_SECOND),
    ];
    writeln!(stdout, "galilei {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(stdout, "default_seed = {}", verify::DEFAULT_SEED)?;
    writeln!(stdout, "default_trials = {}", verify::DEFAULT_TRIALS)?;
    for (name, value) in lines {
        writeln!(stdout, "tolerance.{name} = {value:e}")?;
    }
    Ok(0)
}
