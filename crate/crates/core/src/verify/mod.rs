//! Seeded randomized verification of the structural identities.
//!
//! Each check draws `trials` independent inputs, measures a residual per
//! trial, and keeps the maximum together with the input that produced it.
//! Residuals are absolute errors divided by `max(1, magnitude)` of the
//! quantities involved, so one tolerance serves inputs of any size. A check
//! never aborts; failures are recorded in the [`CheckRecord`].
//!
//! [`run_all`] runs every check over every orbit kind and a fixed panel of
//! two-body systems. Its output is a pure function of the master seed and
//! the trial count.

mod group_checks;
mod orbit_checks;
pub mod sampling;
mod twobody_checks;

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::orbits::{ForcedMassiveOrbit, FreeMassiveOrbit, OrbitKind, SpacetimeOrbit};
use crate::twobody::TwoBodySystem;

pub use group_checks::{
    check_group_associativity, check_group_identity, check_group_inverse, check_one_parameter,
};
pub use orbit_checks::{
    check_action_homomorphism, check_action_symplectic, check_casimir_invariance,
    check_component_invariance, check_flow_generator, check_momentum_gradient,
};
pub use sampling::{Interval, RandomOrbit, Ranges, Sampler};
pub use twobody_checks::{
    check_barycenter_canonical, check_barycenter_roundtrip, check_barycentric_action_symplectic,
    check_conjugation, check_energy_conservation, check_flow_composition,
    check_isolated_relative_force, check_motion_equations, check_product_action_symplectic,
    check_relative_kinematics, check_stabilizer, check_straight_line, check_twobody_suite,
};

/// Default tolerances and finite-difference steps.
pub mod tolerance {
    /// Identities that hold exactly in real arithmetic and involve no
    /// subtraction of large, nearly equal terms.
    pub const EXACT: f64 = 1e-12;
    /// Composition of actions and the barycenter conjugation.
    pub const ACTION: f64 = 1e-9;
    /// Casimir labels recovered after a group action.
    pub const CASIMIR: f64 = 1e-9;
    /// Relative drift of the energy along the flow.
    pub const ENERGY: f64 = 1e-9;
    /// Central finite-difference comparisons.
    pub const FINITE_DIFFERENCE: f64 = 1e-6;
    /// Relative step for first derivatives: `h = FD_STEP * max(1, |x|)`.
    pub const FD_STEP: f64 = 1e-5;
    /// Relative step for second derivatives. The flows are quadratic in
    /// time, so the truncation error vanishes and only round-off
    /// (`~eps |x| / h^2`) remains.
    pub const FD_STEP_SECOND: f64 = 1e-3;
}

/// Default master seed of [`run_all`].
pub const DEFAULT_SEED: u64 = 0x6a1_11e1;

/// Default trials per check.
pub const DEFAULT_TRIALS: usize = 1000;

/// Parameters of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckSpec {
    pub name: String,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub ranges: Ranges,
}

impl CheckSpec {
    /// A check with the default sampling ranges.
    pub fn new(
        name: impl Into<String>,
        trials: usize,
        seed: u64,
        tolerance: f64,
    ) -> Result<Self, Error> {
        Self::with_ranges(name, trials, seed, tolerance, Ranges::default())
    }

    pub fn with_ranges(
        name: impl Into<String>,
        trials: usize,
        seed: u64,
        tolerance: f64,
        ranges: Ranges,
    ) -> Result<Self, Error> {
        let spec = Self {
            name: name.into(),
            trials,
            seed,
            tolerance,
            ranges,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Same spec under another name, keeping seed and ranges.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.trials == 0 {
            return Err(Error::ZeroCount("trials"));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::NonPositive("tolerance"));
        }
        self.ranges.validate()
    }

    fn sampler(&self, trial: usize) -> Sampler {
        Sampler::new(self.seed, trial as u64, self.ranges)
    }
}

/// Named input values of a trial.
pub type Inputs = Vec<(&'static str, f64)>;

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub trials: usize,
    /// Largest residual over all trials; `inf` if any residual was NaN.
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Inputs of the trial that produced `max_residual`.
    pub worst_input: Inputs,
}

/// A list of check records.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// True iff every check passed.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.max_residual)
            .fold(0.0, f64::max)
    }
}

/// Runs `trial` once per trial index and max-reduces the residuals.
///
/// Ties keep the lowest trial index, so the result does not depend on
/// evaluation order.
pub(crate) fn run_check<F>(spec: &CheckSpec, mut trial: F) -> CheckRecord
where
    F: FnMut(&mut Sampler) -> (f64, Inputs),
{
    let mut max_residual = 0.0_f64;
    let mut worst_input = Inputs::new();
    for i in 0..spec.trials {
        let mut sampler = spec.sampler(i);
        let (residual, inputs) = trial(&mut sampler);
        let residual = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual.abs()
        };
        if i == 0 || residual > max_residual {
            max_residual = residual;
            worst_input = inputs;
        }
    }
    CheckRecord {
        name: spec.name.clone(),
        trials: spec.trials,
        max_residual,
        tolerance: spec.tolerance,
        passed: max_residual <= spec.tolerance,
        worst_input,
    }
}

/// `|err| / max(1, scale)`.
pub fn scaled(err: f64, scale: f64) -> f64 {
    err.abs() / scale.abs().max(1.0)
}

/// Componentwise `|a_i - b_i| / max(1, |a_i|, |b_i|)`, maximized.
pub fn rel_diff(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| scaled(x - y, x.abs().max(y.abs())))
        .fold(0.0, nan_max)
}

/// `max(|x_i|)` over a slice.
pub fn sup_norm(a: &[f64]) -> f64 {
    a.iter().map(|x| x.abs()).fold(0.0, nan_max)
}

/// `max` that propagates NaN as infinity.
pub(crate) fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::INFINITY
    } else {
        a.max(b)
    }
}

/// `max |A^T W A - W|`.
pub fn symplectic_defect<const N: usize>(a: &[[f64; N]; N], w: &[[f64; N]; N]) -> f64 {
    let mut defect = 0.0_f64;
    for i in 0..N {
        for j in 0..N {
            let mut s = 0.0;
            for k in 0..N {
                for l in 0..N {
                    s += a[k][i] * w[k][l] * a[l][j];
                }
            }
            defect = nan_max(defect, (s - w[i][j]).abs());
        }
    }
    defect
}

/// Settings shared by the checks of [`run_all_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    /// Replaces every check's default tolerance when set.
    pub tolerance_override: Option<f64>,
}

impl RunConfig {
    pub fn new(seed: u64, trials: usize) -> Self {
        Self {
            seed,
            trials,
            tolerance_override: None,
        }
    }

    /// A spec named `name` with this run's seed and trial count.
    pub fn spec(&self, name: &str, default_tolerance: f64) -> Result<CheckSpec, Error> {
        self.spec_with_ranges(name, default_tolerance, Ranges::default())
    }

    pub fn spec_with_ranges(
        &self,
        name: &str,
        default_tolerance: f64,
        ranges: Ranges,
    ) -> Result<CheckSpec, Error> {
        CheckSpec::with_ranges(
            name,
            self.trials,
            sampling::derive_seed(self.seed, name),
            self.tolerance_override.unwrap_or(default_tolerance),
            ranges,
        )
    }
}

/// A named two-body system of the fixed verification panel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelEntry {
    pub name: &'static str,
    pub system: TwoBodySystem,
}

/// Systems checked by [`run_all`]: isolated, non-isolated, equal masses,
/// and a 1:1000 mass ratio.
pub fn default_panel() -> Vec<PanelEntry> {
    let entries = [
        ("isolated", (1.0, 3.0, 2.0, -2.0)),
        ("non_isolated", (1.0, 3.0, 1.0, 3.0)),
        ("equal_mass", (2.0, 2.0, 1.0, 3.0)),
        ("mass_ratio_1000", (1.0, 1000.0, 0.5, -3.0)),
        ("mass_ratio_1000_isolated", (0.01, 10.0, -7.0, 7.0)),
    ];
    entries
        .into_iter()
        .map(|(name, (m1, m2, f1, f2))| PanelEntry {
            name,
            system: TwoBodySystem::new(m1, m2, f1, f2).expect("panel systems are valid"),
        })
        .collect()
}

/// Fixed Casimir labels checked in addition to random ones.
pub fn fixed_casimir_label(kind: OrbitKind) -> f64 {
    match kind {
        OrbitKind::ForcedMassive | OrbitKind::FreeMassive => 2.5,
        OrbitKind::Spacetime => -1.0,
    }
}

/// Every orbit check for one orbit kind.
pub fn check_orbit_suite(kind: OrbitKind, config: &RunConfig) -> Result<VerificationReport, Error> {
    match kind {
        OrbitKind::ForcedMassive => orbit_checks::suite::<ForcedMassiveOrbit>(config),
        OrbitKind::FreeMassive => orbit_checks::suite::<FreeMassiveOrbit>(config),
        OrbitKind::Spacetime => orbit_checks::suite::<SpacetimeOrbit>(config),
    }
}

/// Every group-law check.
pub fn check_group_suite(config: &RunConfig) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new();
    report.push(check_group_associativity(
        &config.spec("group.associativity", tolerance::EXACT)?,
    ));
    report.push(check_group_identity(
        &config.spec("group.identity", tolerance::EXACT)?,
    ));
    report.push(check_group_inverse(
        &config.spec("group.inverse", tolerance::EXACT)?,
    ));
    report.push(check_one_parameter(
        &config.spec("group.one_parameter", tolerance::EXACT)?,
    ));
    Ok(report)
}

/// The full suite with default tolerances.
pub fn run_all(seed: u64, trials: usize) -> Result<VerificationReport, Error> {
    run_all_with(&RunConfig::new(seed, trials))
}

pub fn run_all_with(config: &RunConfig) -> Result<VerificationReport, Error> {
    if config.trials == 0 {
        return Err(Error::ZeroCount("trials"));
    }
    if let Some(tol) = config.tolerance_override {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::NonPositive("tolerance"));
        }
    }
    let mut report = check_group_suite(config)?;
    for kind in OrbitKind::ALL {
        report.extend(check_orbit_suite(kind, config)?);
    }
    for entry in default_panel() {
        report.extend(check_twobody_suite(&entry.system, entry.name, config)?);
    }
    // Two more systems drawn from the master seed, one of them isolated.
    let mut sampler = Sampler::new(
        sampling::derive_seed(config.seed, "twobody.random"),
        0,
        Ranges::default(),
    );
    let random = sampler.two_body_system();
    report.extend(check_twobody_suite(&random, "random", config)?);
    let (m1, m2, f1) = (sampler.mass(), sampler.mass(), sampler.force());
    let random_isolated = TwoBodySystem::new(m1, m2, f1, -f1)?;
    report.extend(check_twobody_suite(
        &random_isolated,
        "random_isolated",
        config,
    )?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_spec_validation() {
        assert!(CheckSpec::new("a", 1, 0, 1e-9).is_ok());
        assert_eq!(
            CheckSpec::new("a", 0, 0, 1e-9),
            Err(Error::ZeroCount("trials"))
        );
        assert_eq!(
            CheckSpec::new("a", 1, 0, 0.0),
            Err(Error::NonPositive("tolerance"))
        );
        assert!(CheckSpec::new("a", 1, 0, f64::NAN).is_err());
    }

    #[test]
    fn run_check_tracks_worst_trial() {
        let spec = CheckSpec::new("toy", 10, 3, 0.5).unwrap();
        let mut i = 0.0;
        let rec = run_check(&spec, |_| {
            i += 1.0;
            let r = if i == 4.0 { 0.75 } else { 0.1 };
            (r, alloc::vec![("i", i)])
        });
        assert_eq!(rec.max_residual, 0.75);
        assert_eq!(rec.worst_input, alloc::vec![("i", 4.0)]);
        assert!(!rec.passed);
    }

    #[test]
    fn nan_residual_fails() {
        let spec = CheckSpec::new("nan", 3, 3, 1.0).unwrap();
        let rec = run_check(&spec, |_| (f64::NAN, Inputs::new()));
        assert_eq!(rec.max_residual, f64::INFINITY);
        assert!(!rec.passed);
    }

    #[test]
    fn symplectic_defect_of_shear() {
        let omega = [[0.0, 1.0], [-1.0, 0.0]];
        assert_eq!(symplectic_defect(&[[1.0, 0.0], [0.7, 1.0]], &omega), 0.0);
        assert_eq!(symplectic_defect(&[[2.0, 0.0], [0.0, 1.0]], &omega), 1.0);
    }

    #[test]
    fn rel_diff_is_scale_aware() {
        assert_eq!(rel_diff(&[1000.0], &[1001.0]), 1.0 / 1001.0);
        assert_eq!(rel_diff(&[0.0], &[0.5]), 0.5);
    }

    #[test]
    fn report_overall_flag() {
        let mut r = VerificationReport::new();
        assert!(r.passed());
        let spec = CheckSpec::new("ok", 1, 0, 1.0).unwrap();
        r.push(run_check(&spec, |_| (0.0, Inputs::new())));
        assert!(r.passed());
        let spec = CheckSpec::new("bad", 1, 0, 1.0).unwrap();
        r.push(run_check(&spec, |_| (2.0, Inputs::new())));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.get("bad").unwrap().max_residual, 2.0);
    }

    #[test]
    fn panel_covers_required_systems() {
        let panel = default_panel();
        assert!(panel.iter().any(|e| e.system.is_isolated()));
        assert!(panel.iter().any(|e| !e.system.is_isolated()));
        assert!(panel.iter().any(|e| e.system.m1() == e.system.m2()));
        assert!(panel
            .iter()
            .any(|e| e.system.m2() / e.system.m1() >= 1000.0));
    }
}
