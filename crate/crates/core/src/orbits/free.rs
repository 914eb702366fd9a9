use crate::error::{finite, positive_mass, Error};
use crate::group::{Generator, GroupElement};

use super::{symplectic_pairing, CoadjointOrbit, Momentum, OrbitKind, PQState, TangentVector};

/// A free particle of mass `m` with internal energy label `U`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeMassiveOrbit {
    mass: f64,
    internal_energy: f64,
}

impl FreeMassiveOrbit {
    pub fn new(mass: f64, internal_energy: f64) -> Result<Self, Error> {
        Ok(Self {
            mass: positive_mass("m", mass)?,
            internal_energy: finite("U", internal_energy)?,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn internal_energy(&self) -> f64 {
        self.internal_energy
    }
}

impl CoadjointOrbit for FreeMassiveOrbit {
    type State = PQState;

    const KIND: OrbitKind = OrbitKind::FreeMassive;

    fn act(&self, g: &GroupElement, s: PQState) -> PQState {
        PQState {
            p: s.p - self.mass * g.v,
            q: s.q + (s.p / self.mass) * g.t + g.x - g.v * g.t,
        }
    }

    fn hamiltonian_field(&self, generator: Generator, s: PQState) -> TangentVector<PQState> {
        match generator {
            Generator::Boost => TangentVector::new(self.mass, 0.0),
            Generator::SpaceTranslation => TangentVector::new(0.0, -1.0),
            Generator::TimeTranslation => TangentVector::new(0.0, -s.p / self.mass),
        }
    }

    fn momentum(&self, s: PQState) -> Momentum {
        Momentum {
            j_k: self.mass * s.q,
            j_p: s.p,
            j_e: s.p * s.p / (2.0 * self.mass) + self.internal_energy,
        }
    }

    fn casimir(&self, j: &Momentum) -> f64 {
        j.j_e - j.j_p * j.j_p / (2.0 * self.mass)
    }

    fn label(&self) -> f64 {
        self.internal_energy
    }

    fn pairing(&self, u: TangentVector<PQState>, w: TangentVector<PQState>) -> f64 {
        symplectic_pairing(u, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit() -> FreeMassiveOrbit {
        FreeMassiveOrbit::new(2.0, 0.0).unwrap()
    }

    #[test]
    fn action_examples() {
        let s = orbit().act(&GroupElement::new(1.0, 2.0, 0.0), PQState::new(4.0, 0.0));
        assert_eq!(s, PQState::new(4.0, 5.0));
        let s = orbit().act(&GroupElement::new(0.0, 0.0, 1.0), PQState::new(0.0, 7.0));
        assert_eq!(s, PQState::new(-2.0, 7.0));
        let s0 = PQState::new(3.0, -4.0);
        assert_eq!(orbit().act(&GroupElement::IDENTITY, s0), s0);
    }

    #[test]
    fn momentum_and_casimir_example() {
        let j = orbit().momentum(PQState::new(4.0, 5.0));
        assert_eq!(j, Momentum::new(10.0, 4.0, 4.0));
        assert_eq!(orbit().casimir(&j), 0.0);
    }

    #[test]
    fn energy_field_has_no_momentum_component() {
        let e = orbit().hamiltonian_field(Generator::TimeTranslation, PQState::new(4.0, 1.0));
        assert_eq!(e.components, [0.0, -2.0]);
    }

    #[test]
    fn rejects_nonpositive_mass() {
        assert_eq!(
            FreeMassiveOrbit::new(0.0, 1.0),
            Err(Error::NonPositiveMass("m"))
        );
    }
}
