//! Counter-based random streams.
//!
//! Every check owns a seed derived from the master seed and the check name;
//! trial `i` of that check draws from ChaCha stream `i`. A trial's inputs are
//! therefore independent of how many other trials or checks run, and of the
//! order in which they run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::group::GroupElement;
use crate::orbits::{
    CoadjointOrbit, ForcedMassiveOrbit, FreeMassiveOrbit, Momentum, PhaseCoordinates,
    SpacetimeOrbit,
};
use crate::twobody::{BarycenterGroupElement, BarycenterState, ProductState, TwoBodySystem};

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub const fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn validate(&self, name: &'static str) -> Result<(), Error> {
        if !(self.lo.is_finite() && self.hi.is_finite()) {
            return Err(Error::NonFinite(name));
        }
        if self.lo > self.hi {
            return Err(Error::EmptyInterval(name));
        }
        Ok(())
    }
}

/// Sampling ranges for every kind of random input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ranges {
    /// Phase-space coordinates.
    pub state: Interval,
    /// Group parameters, also used for evolution times.
    pub group: Interval,
    /// Masses; must lie in `(0, inf)`.
    pub mass: Interval,
    pub force: Interval,
    /// Casimir labels `U` and `K`.
    pub label: Interval,
}

impl Default for Ranges {
    fn default() -> Self {
        Self {
            state: Interval::new(-10.0, 10.0),
            group: Interval::new(-10.0, 10.0),
            mass: Interval::new(0.1, 10.0),
            force: Interval::new(-10.0, 10.0),
            label: Interval::new(-10.0, 10.0),
        }
    }
}

impl Ranges {
    pub fn validate(&self) -> Result<(), Error> {
        self.state.validate("state")?;
        self.group.validate("group")?;
        self.mass.validate("mass")?;
        self.force.validate("force")?;
        self.label.validate("label")?;
        if self.mass.lo <= 0.0 {
            return Err(Error::NonPositiveMass("mass range"));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the check called `name` under `master`.
pub fn derive_seed(master: u64, name: &str) -> u64 {
    // FNV-1a over the name.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    mix64(master ^ mix64(h))
}

/// Random inputs for one trial.
pub struct Sampler {
    rng: ChaCha8Rng,
    ranges: Ranges,
}

impl Sampler {
    pub fn new(seed: u64, trial: u64, ranges: Ranges) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Self { rng, ranges }
    }

    pub fn ranges(&self) -> &Ranges {
        &self.ranges
    }

    pub fn uniform(&mut self, iv: Interval) -> f64 {
        let u: f64 = self.rng.random();
        iv.lo + (iv.hi - iv.lo) * u
    }

    pub fn state_coord(&mut self) -> f64 {
        self.uniform(self.ranges.state)
    }

    pub fn group_param(&mut self) -> f64 {
        self.uniform(self.ranges.group)
    }

    pub fn mass(&mut self) -> f64 {
        self.uniform(self.ranges.mass)
    }

    pub fn force(&mut self) -> f64 {
        self.uniform(self.ranges.force)
    }

    /// A force that is never exactly zero.
    pub fn nonzero_force(&mut self) -> f64 {
        let f = self.force();
        if f != 0.0 {
            f
        } else if self.ranges.force.hi != 0.0 {
            self.ranges.force.hi
        } else {
            self.ranges.force.lo
        }
    }

    pub fn label(&mut self) -> f64 {
        self.uniform(self.ranges.label)
    }

    pub fn group_element(&mut self) -> GroupElement {
        GroupElement::new(self.group_param(), self.group_param(), self.group_param())
    }

    pub fn barycenter_group_element(&mut self) -> BarycenterGroupElement {
        BarycenterGroupElement::new(
            self.group_param(),
            self.group_param(),
            self.group_param(),
            self.group_param(),
            self.group_param(),
        )
    }

    pub fn product_state(&mut self) -> ProductState {
        ProductState::new(
            self.state_coord(),
            self.state_coord(),
            self.state_coord(),
            self.state_coord(),
        )
    }

    pub fn barycenter_state(&mut self) -> BarycenterState {
        BarycenterState::new(
            self.state_coord(),
            self.state_coord(),
            self.state_coord(),
            self.state_coord(),
        )
    }

    pub fn two_body_system(&mut self) -> TwoBodySystem {
        let (m1, m2, f1, f2) = (self.mass(), self.mass(), self.force(), self.force());
        TwoBodySystem::new(m1, m2, f1, f2).expect("ranges validated")
    }

    pub fn orbit_state<S: PhaseCoordinates>(&mut self) -> S {
        S::from_array([self.state_coord(), self.state_coord()])
    }
}

/// An orbit family that can be drawn at random.
pub trait RandomOrbit: CoadjointOrbit + Sized {
    fn sample(sampler: &mut Sampler) -> Self;

    /// Like [`RandomOrbit::sample`] but with a prescribed Casimir label.
    fn sample_with_label(sampler: &mut Sampler, label: f64) -> Self;

    /// Sum of magnitudes of the terms in the Casimir function; the natural
    /// scale of its round-off.
    fn casimir_scale(&self, j: &Momentum) -> f64;

    /// Labels and parameters, for failure reports.
    fn describe(&self) -> [(&'static str, f64); 3];
}

impl RandomOrbit for ForcedMassiveOrbit {
    fn sample(sampler: &mut Sampler) -> Self {
        let label = sampler.label();
        Self::sample_with_label(sampler, label)
    }

    fn sample_with_label(sampler: &mut Sampler, label: f64) -> Self {
        let (m, f) = (sampler.mass(), sampler.force());
        Self::new(m, f, label).expect("ranges validated")
    }

    fn casimir_scale(&self, j: &Momentum) -> f64 {
        j.j_e.abs()
            + j.j_p * j.j_p / (2.0 * self.mass())
            + (self.force() * j.j_k / self.mass()).abs()
    }

    fn describe(&self) -> [(&'static str, f64); 3] {
        [
            ("m", self.mass()),
            ("f", self.force()),
            ("U", self.internal_energy()),
        ]
    }
}

impl RandomOrbit for FreeMassiveOrbit {
    fn sample(sampler: &mut Sampler) -> Self {
        let label = sampler.label();
        Self::sample_with_label(sampler, label)
    }

    fn sample_with_label(sampler: &mut Sampler, label: f64) -> Self {
        let m = sampler.mass();
        Self::new(m, label).expect("ranges validated")
    }

    fn casimir_scale(&self, j: &Momentum) -> f64 {
        j.j_e.abs() + j.j_p * j.j_p / (2.0 * self.mass())
    }

    fn describe(&self) -> [(&'static str, f64); 3] {
        [
            ("m", self.mass()),
            ("f", 0.0),
            ("U", self.internal_energy()),
        ]
    }
}

impl RandomOrbit for SpacetimeOrbit {
    fn sample(sampler: &mut Sampler) -> Self {
        let label = sampler.label();
        Self::sample_with_label(sampler, label)
    }

    fn sample_with_label(sampler: &mut Sampler, label: f64) -> Self {
        let f = sampler.nonzero_force();
        Self::new(f, label).expect("ranges validated")
    }

    fn casimir_scale(&self, j: &Momentum) -> f64 {
        j.j_k.abs() + (j.j_p * j.j_p / (2.0 * self.force())).abs()
    }

    fn describe(&self) -> [(&'static str, f64); 3] {
        [("m", 0.0), ("f", self.force()), ("K", self.invariant())]
    }
}
