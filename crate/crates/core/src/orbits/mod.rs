//! Single-particle phase spaces: the three coadjoint orbits of the Galilei
//! group.
//!
//! | orbit                   | labels      | chart       | Casimir                      |
//! |-------------------------|-------------|-------------|------------------------------|
//! | [`ForcedMassiveOrbit`]  | `m, f, U`   | `(p, q)`    | `U = e - p^2/2m + f q`       |
//! | [`FreeMassiveOrbit`]    | `m, U`      | `(p, q)`    | `U = e - p^2/2m`             |
//! | [`SpacetimeOrbit`]      | `f, K`      | `(tau, q)`  | `K = k - p^2/2f`             |
//!
//! In every case the Hamiltonian vector field of a generator `X` is
//! `rho(X) = -(d/ds)|_0 L_{exp(sX)}`, and the momentum component `J_X`
//! satisfies `rho(X) _| sigma = dJ_X`.

mod forced;
mod free;
mod spacetime;

use core::fmt;
use core::marker::PhantomData;

use crate::group::{Generator, GroupElement};

pub use forced::ForcedMassiveOrbit;
pub use free::FreeMassiveOrbit;
pub use spacetime::SpacetimeOrbit;

/// Which of the three orbit families a phase space belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    ForcedMassive,
    FreeMassive,
    Spacetime,
}

impl OrbitKind {
    pub const ALL: [OrbitKind; 3] = [
        OrbitKind::ForcedMassive,
        OrbitKind::FreeMassive,
        OrbitKind::Spacetime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrbitKind::ForcedMassive => "forced",
            OrbitKind::FreeMassive => "free",
            OrbitKind::Spacetime => "spacetime",
        }
    }

    /// Name of the Casimir label (`U` or `K`).
    pub fn casimir_name(self) -> &'static str {
        match self {
            OrbitKind::ForcedMassive | OrbitKind::FreeMassive => "U",
            OrbitKind::Spacetime => "K",
        }
    }
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Two-dimensional coordinates on an orbit.
pub trait PhaseCoordinates: Copy + fmt::Debug + PartialEq {
    /// Coordinate names in chart order.
    const NAMES: [&'static str; 2];

    fn to_array(self) -> [f64; 2];
    fn from_array(a: [f64; 2]) -> Self;
}

/// Canonical coordinates on the massive orbits: linear momentum `p` and
/// position `q = k/m`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PQState {
    pub p: f64,
    pub q: f64,
}

impl PQState {
    pub const fn new(p: f64, q: f64) -> Self {
        Self { p, q }
    }
}

impl PhaseCoordinates for PQState {
    const NAMES: [&'static str; 2] = ["p", "q"];

    fn to_array(self) -> [f64; 2] {
        [self.p, self.q]
    }

    fn from_array([p, q]: [f64; 2]) -> Self {
        Self { p, q }
    }
}

/// Spacetime coordinates on the force orbit: `tau = p/f` and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TauQState {
    pub tau: f64,
    pub q: f64,
}

impl TauQState {
    pub const fn new(tau: f64, q: f64) -> Self {
        Self { tau, q }
    }
}

impl PhaseCoordinates for TauQState {
    const NAMES: [&'static str; 2] = ["tau", "q"];

    fn to_array(self) -> [f64; 2] {
        [self.tau, self.q]
    }

    fn from_array([tau, q]: [f64; 2]) -> Self {
        Self { tau, q }
    }
}

/// A tangent vector in the chart of `S`.
///
/// The chart is part of the type, so a `(dp, dq)` vector cannot be paired
/// with a `(dtau, dq)` one.
pub struct TangentVector<S> {
    pub components: [f64; 2],
    chart: PhantomData<S>,
}

impl<S> TangentVector<S> {
    pub const fn new(a: f64, b: f64) -> Self {
        Self {
            components: [a, b],
            chart: PhantomData,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| c.is_finite())
    }
}

impl TangentVector<PQState> {
    pub fn dp(&self) -> f64 {
        self.components[0]
    }

    pub fn dq(&self) -> f64 {
        self.components[1]
    }
}

impl TangentVector<TauQState> {
    pub fn dtau(&self) -> f64 {
        self.components[0]
    }

    pub fn dq(&self) -> f64 {
        self.components[1]
    }
}

impl<S> Clone for TangentVector<S> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<S> Copy for TangentVector<S> {}

impl<S> PartialEq for TangentVector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl<S: PhaseCoordinates> fmt::Debug for TangentVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = S::NAMES;
        write!(
            f,
            "(d{a}={}, d{b}={})",
            self.components[0], self.components[1]
        )
    }
}

/// `sigma(u, w)` for `sigma = dp ^ dq`.
pub fn symplectic_pairing(u: TangentVector<PQState>, w: TangentVector<PQState>) -> f64 {
    u.dp() * w.dq() - u.dq() * w.dp()
}

/// The momentum map value `(J_K, J_P, J_E)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Momentum {
    /// Dual to boosts.
    pub j_k: f64,
    /// Dual to space translations.
    pub j_p: f64,
    /// Dual to time translations.
    pub j_e: f64,
}

impl Momentum {
    pub const fn new(j_k: f64, j_p: f64, j_e: f64) -> Self {
        Self { j_k, j_p, j_e }
    }

    pub fn component(&self, generator: Generator) -> f64 {
        match generator {
            Generator::Boost => self.j_k,
            Generator::SpaceTranslation => self.j_p,
            Generator::TimeTranslation => self.j_e,
        }
    }
}

/// A homogeneous symplectic phase space of the Galilei group.
pub trait CoadjointOrbit {
    type State: PhaseCoordinates;

    const KIND: OrbitKind;

    /// The left action `L_g`.
    fn act(&self, g: &GroupElement, s: Self::State) -> Self::State;

    /// `rho(X)` evaluated at `s`.
    fn hamiltonian_field(&self, generator: Generator, s: Self::State)
        -> TangentVector<Self::State>;

    fn momentum(&self, s: Self::State) -> Momentum;

    /// The Casimir function of the momentum (`U` or `K`).
    fn casimir(&self, momentum: &Momentum) -> f64;

    /// The stored Casimir label.
    fn label(&self) -> f64;

    /// The symplectic form in this orbit's chart.
    fn pairing(&self, u: TangentVector<Self::State>, w: TangentVector<Self::State>) -> f64;

    /// Components of the covector `u _| sigma` in the chart basis.
    fn contraction(&self, u: TangentVector<Self::State>) -> [f64; 2] {
        [
            self.pairing(u, TangentVector::new(1.0, 0.0)),
            self.pairing(u, TangentVector::new(0.0, 1.0)),
        ]
    }

    /// Time evolution: the action of a pure time translation.
    fn evolve(&self, s: Self::State, t: f64) -> Self::State {
        self.act(&GroupElement::exp(Generator::TimeTranslation, t), s)
    }
}
