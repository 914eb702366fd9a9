use crate::error::{finite, positive_mass, Error};
use crate::group::{Generator, GroupElement};

use super::{symplectic_pairing, CoadjointOrbit, Momentum, OrbitKind, PQState, TangentVector};

/// A particle of mass `m` under a constant force `f`, with internal energy
/// label `U`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcedMassiveOrbit {
    mass: f64,
    force: f64,
    internal_energy: f64,
}

impl ForcedMassiveOrbit {
    pub fn new(mass: f64, force: f64, internal_energy: f64) -> Result<Self, Error> {
        Ok(Self {
            mass: positive_mass("m", mass)?,
            force: finite("f", force)?,
            internal_energy: finite("U", internal_energy)?,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn force(&self) -> f64 {
        self.force
    }

    pub fn internal_energy(&self) -> f64 {
        self.internal_energy
    }
}

impl CoadjointOrbit for ForcedMassiveOrbit {
    type State = PQState;

    const KIND: OrbitKind = OrbitKind::ForcedMassive;

    fn act(&self, g: &GroupElement, s: PQState) -> PQState {
        let (m, f) = (self.mass, self.force);
        PQState {
            p: s.p - m * g.v + f * g.t,
            q: s.q + (s.p / m) * g.t + (f / m) * g.t * g.t / 2.0 + g.x - g.v * g.t,
        }
    }

    fn hamiltonian_field(&self, generator: Generator, s: PQState) -> TangentVector<PQState> {
        match generator {
            Generator::Boost => TangentVector::new(self.mass, 0.0),
            Generator::SpaceTranslation => TangentVector::new(0.0, -1.0),
            Generator::TimeTranslation => TangentVector::new(-self.force, -s.p / self.mass),
        }
    }

    fn momentum(&self, s: PQState) -> Momentum {
        Momentum {
            j_k: self.mass * s.q,
            j_p: s.p,
            j_e: s.p * s.p / (2.0 * self.mass) - self.force * s.q + self.internal_energy,
        }
    }

    fn casimir(&self, j: &Momentum) -> f64 {
        let q = j.j_k / self.mass;
        j.j_e - j.j_p * j.j_p / (2.0 * self.mass) + self.force * q
    }

    fn label(&self) -> f64 {
        self.internal_energy
    }

    fn pairing(&self, u: TangentVector<PQState>, w: TangentVector<PQState>) -> f64 {
        symplectic_pairing(u, w)
    }
}
