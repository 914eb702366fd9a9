use crate::error::{finite, Error};
use crate::group::{Generator, GroupElement};

use super::{CoadjointOrbit, Momentum, OrbitKind, TangentVector, TauQState};

/// The orbit labelled by a nonzero force `f` and the invariant `K`, worked
/// in the spacetime chart `(tau, q)` with `tau = p/f`.
///
/// Since `p = f tau`, the symplectic form `dp ^ dq` reads `f dtau ^ dq` in
/// this chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimeOrbit {
    force: f64,
    invariant: f64,
}

impl SpacetimeOrbit {
    pub fn new(force: f64, invariant: f64) -> Result<Self, Error> {
        let force = finite("f", force)?;
        if force == 0.0 {
            return Err(Error::ZeroForce("f"));
        }
        Ok(Self {
            force,
            invariant: finite("K", invariant)?,
        })
    }

    pub fn force(&self) -> f64 {
        self.force
    }

    pub fn invariant(&self) -> f64 {
        self.invariant
    }
}

impl CoadjointOrbit for SpacetimeOrbit {
    type State = TauQState;

    const KIND: OrbitKind = OrbitKind::Spacetime;

    fn act(&self, g: &GroupElement, s: TauQState) -> TauQState {
        TauQState {
            tau: s.tau + g.t,
            q: s.q + g.v * s.tau + g.x,
        }
    }

    fn hamiltonian_field(&self, generator: Generator, s: TauQState) -> TangentVector<TauQState> {
        match generator {
            Generator::Boost => TangentVector::new(0.0, -s.tau),
            Generator::SpaceTranslation => TangentVector::new(0.0, -1.0),
            Generator::TimeTranslation => TangentVector::new(-1.0, 0.0),
        }
    }

    fn momentum(&self, s: TauQState) -> Momentum {
        let f = self.force;
        Momentum {
            j_k: f * s.tau * s.tau / 2.0 + self.invariant,
            j_p: f * s.tau,
            j_e: -f * s.q,
        }
    }

    fn casimir(&self, j: &Momentum) -> f64 {
        j.j_k - j.j_p * j.j_p / (2.0 * self.force)
    }

    fn label(&self) -> f64 {
        self.invariant
    }

    fn pairing(&self, u: TangentVector<TauQState>, w: TangentVector<TauQState>) -> f64 {
        self.force * (u.dtau() * w.dq() - u.dq() * w.dtau())
    }
}
