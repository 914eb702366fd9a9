//! Two forced massive particles and their barycenter reduction.
//!
//! The phase space is the product of two forced orbits with
//! `sigma = dp1 ^ dq1 + dp2 ^ dq2`. The barycenter change of variables
//!
//! ```text
//! p  = p1 + p2                  pi  = (m2 p1 - m1 p2) / m
//! q  = (m1 q1 + m2 q2) / m      rho = q1 - q2
//! ```
//!
//! is canonical (`sigma = dp ^ dq + dpi ^ drho`) and splits the system into a
//! center of mass of mass `m` driven by the total force `f`, and a fictitious
//! particle of reduced mass `mu` driven by the relative force `phi`.
//!
//! Pairs of Galilei transformations with a common time shift act on the
//! reduced coordinates through [`BarycenterGroupElement`]; the subgroup of
//! such pairs fixing the center-of-mass origin is the internal group, see
//! [`TwoBodySystem::internal_group_element`].

use alloc::vec::Vec;

use crate::error::{finite, positive_mass, Error};
use crate::group::GroupElement;
use crate::orbits::{CoadjointOrbit, ForcedMassiveOrbit, PQState};

/// Relative tolerance used by [`TwoBodySystem::is_isolated`].
pub const DEFAULT_ISOLATION_RTOL: f64 = 1e-12;

/// Masses and constant forces of the two particles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoBodySystem {
    m1: f64,
    m2: f64,
    f1: f64,
    f2: f64,
    params: DerivedParams,
}

/// Quantities of the reduced system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// `m = m1 + m2`
    pub total_mass: f64,
    /// `mu = m1 m2 / m`
    pub reduced_mass: f64,
    /// `f = f1 + f2`
    pub total_force: f64,
    /// `phi = (m2 f1 - m1 f2) / m`
    pub relative_force: f64,
}

impl DerivedParams {
    /// True iff `|f| <= tol`.
    pub fn is_isolated(&self, tol: f64) -> bool {
        self.total_force.abs() <= tol
    }

    /// Acceleration of the center of mass, `f/m`.
    pub fn cm_acceleration(&self) -> f64 {
        self.total_force / self.total_mass
    }

    /// Acceleration of the fictitious particle, `phi/mu`.
    pub fn relative_acceleration(&self) -> f64 {
        self.relative_force / self.reduced_mass
    }
}

/// Raw coordinates `(p1, q1, p2, q2)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ProductState {
    pub p1: f64,
    pub q1: f64,
    pub p2: f64,
    pub q2: f64,
}

impl ProductState {
    pub const fn new(p1: f64, q1: f64, p2: f64, q2: f64) -> Self {
        Self { p1, q1, p2, q2 }
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.p1, self.q1, self.p2, self.q2]
    }

    pub fn from_array([p1, q1, p2, q2]: [f64; 4]) -> Self {
        Self { p1, q1, p2, q2 }
    }

    pub fn particle1(&self) -> PQState {
        PQState::new(self.p1, self.q1)
    }

    pub fn particle2(&self) -> PQState {
        PQState::new(self.p2, self.q2)
    }
}

/// Reduced coordinates `(p, q, pi, rho)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BarycenterState {
    /// Total linear momentum.
    pub p: f64,
    /// Center-of-mass position.
    pub q: f64,
    /// Relative linear momentum.
    pub pi: f64,
    /// Relative position `q1 - q2`.
    pub rho: f64,
}

impl BarycenterState {
    pub const fn new(p: f64, q: f64, pi: f64, rho: f64) -> Self {
        Self { p, q, pi, rho }
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.p, self.q, self.pi, self.rho]
    }

    pub fn from_array([p, q, pi, rho]: [f64; 4]) -> Self {
        Self { p, q, pi, rho }
    }
}

/// A pair `((x1, t, v1), (x2, t, v2))` with a shared time shift, stored in
/// reduced form: `x = (m1 x1 + m2 x2)/m`, `r = x1 - x2`, and likewise `v`, `u`
/// for the velocities.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BarycenterGroupElement {
    pub x: f64,
    pub t: f64,
    pub v: f64,
    pub r: f64,
    pub u: f64,
}

impl BarycenterGroupElement {
    pub const fn new(x: f64, t: f64, v: f64, r: f64, u: f64) -> Self {
        Self { x, t, v, r, u }
    }

    /// Pure time translation.
    pub const fn time(t: f64) -> Self {
        Self::new(0.0, t, 0.0, 0.0, 0.0)
    }
}

/// Momentum components of the reduced system.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TwoBodyMomentum {
    /// `J(P_CM) = p`
    pub j_p_cm: f64,
    /// `J(K_CM) = m q`
    pub j_k_cm: f64,
    /// `J(P_INT) = pi`
    pub j_p_int: f64,
    /// `J(K_INT) = mu rho`
    pub j_k_int: f64,
    /// `J(E) = T + V`
    pub j_e: f64,
}

/// Energy split into kinetic and potential parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Energy {
    /// `p^2/2m + pi^2/2mu`
    pub kinetic: f64,
    /// `-f q - phi rho`
    pub potential: f64,
}

impl Energy {
    pub fn total(&self) -> f64 {
        self.kinetic + self.potential
    }
}

/// One row of a sampled trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub state: BarycenterState,
    pub momentum: TwoBodyMomentum,
    pub energy: Energy,
}

impl TwoBodySystem {
    pub fn new(m1: f64, m2: f64, f1: f64, f2: f64) -> Result<Self, Error> {
        let m1 = positive_mass("m1", m1)?;
        let m2 = positive_mass("m2", m2)?;
        let f1 = finite("f1", f1)?;
        let f2 = finite("f2", f2)?;
        let total_mass = m1 + m2;
        let total_force = f1 + f2;
        let params = DerivedParams {
            total_mass,
            reduced_mass: m1 * m2 / total_mass,
            total_force,
            // Same value as (m2 f1 - m1 f2)/m, but exactly f1 when f1 = -f2.
            relative_force: f1 - (m1 / total_mass) * total_force,
        };
        if !params.reduced_mass.is_finite() || !params.relative_force.is_finite() {
            return Err(Error::NonFinite("derived parameters"));
        }
        Ok(Self {
            m1,
            m2,
            f1,
            f2,
            params,
        })
    }

    pub fn m1(&self) -> f64 {
        self.m1
    }

    pub fn m2(&self) -> f64 {
        self.m2
    }

    pub fn f1(&self) -> f64 {
        self.f1
    }

    pub fn f2(&self) -> f64 {
        self.f2
    }

    pub fn params(&self) -> DerivedParams {
        self.params
    }

    /// Default isolation tolerance, `1e-12 * max(1, |f1| + |f2|)`.
    pub fn isolation_tolerance(&self) -> f64 {
        DEFAULT_ISOLATION_RTOL * (self.f1.abs() + self.f2.abs()).max(1.0)
    }

    pub fn is_isolated(&self) -> bool {
        self.params.is_isolated(self.isolation_tolerance())
    }

    /// The single-particle orbits of the two constituents, in the `U = 0`
    /// gauge.
    pub fn particle_orbits(&self) -> (ForcedMassiveOrbit, ForcedMassiveOrbit) {
        // Labels were validated in `new`.
        (
            ForcedMassiveOrbit::new(self.m1, self.f1, 0.0).expect("validated labels"),
            ForcedMassiveOrbit::new(self.m2, self.f2, 0.0).expect("validated labels"),
        )
    }

    pub fn to_barycenter(&self, s: &ProductState) -> BarycenterState {
        let m = self.params.total_mass;
        BarycenterState {
            p: s.p1 + s.p2,
            q: (self.m1 * s.q1 + self.m2 * s.q2) / m,
            pi: (self.m2 * s.p1 - self.m1 * s.p2) / m,
            rho: s.q1 - s.q2,
        }
    }

    pub fn from_barycenter(&self, b: &BarycenterState) -> ProductState {
        let m = self.params.total_mass;
        let (w1, w2) = (self.m1 / m, self.m2 / m);
        ProductState {
            p1: w1 * b.p + b.pi,
            q1: b.q + w2 * b.rho,
            p2: w2 * b.p - b.pi,
            q2: b.q - w1 * b.rho,
        }
    }

    /// Each particle transformed on its own orbit by an independent group
    /// element.
    pub fn product_act(
        &self,
        g1: &GroupElement,
        g2: &GroupElement,
        s: &ProductState,
    ) -> ProductState {
        let (o1, o2) = self.particle_orbits();
        let a = o1.act(g1, s.particle1());
        let b = o2.act(g2, s.particle2());
        ProductState::new(a.p, a.q, b.p, b.q)
    }

    /// Reduced form of a shared-time pair.
    pub fn pair_to_barycentric(
        &self,
        g1: &GroupElement,
        g2: &GroupElement,
    ) -> Result<BarycenterGroupElement, Error> {
        if g1.t != g2.t {
            return Err(Error::UnequalTimeShift(g1.t, g2.t));
        }
        let m = self.params.total_mass;
        Ok(BarycenterGroupElement {
            x: (self.m1 * g1.x + self.m2 * g2.x) / m,
            t: g1.t,
            v: (self.m1 * g1.v + self.m2 * g2.v) / m,
            r: g1.x - g2.x,
            u: g1.v - g2.v,
        })
    }

    /// The pair `((x1, t, v1), (x2, t, v2))` encoded by `gb`.
    pub fn barycentric_to_pair(&self, gb: &BarycenterGroupElement) -> (GroupElement, GroupElement) {
        let m = self.params.total_mass;
        let (w1, w2) = (self.m1 / m, self.m2 / m);
        (
            GroupElement::new(gb.x + w2 * gb.r, gb.t, gb.v + w2 * gb.u),
            GroupElement::new(gb.x - w1 * gb.r, gb.t, gb.v - w1 * gb.u),
        )
    }

    /// Action of the shared-time subgroup on reduced coordinates: the center
    /// of mass moves like a forced particle `(m, f)` under `(x, t, v)` and the
    /// fictitious particle like `(mu, phi)` under `(r, t, u)`.
    pub fn barycentric_act(
        &self,
        gb: &BarycenterGroupElement,
        b: &BarycenterState,
    ) -> BarycenterState {
        let DerivedParams {
            total_mass: m,
            reduced_mass: mu,
            total_force: f,
            relative_force: phi,
        } = self.params;
        let t = gb.t;
        BarycenterState {
            p: b.p - m * gb.v + f * t,
            q: b.q + (b.p / m) * t + (f / m) * t * t / 2.0 + gb.x - gb.v * t,
            pi: b.pi - mu * gb.u + phi * t,
            rho: b.rho + (b.pi / mu) * t + (phi / mu) * t * t / 2.0 + gb.r - gb.u * t,
        }
    }

    /// Element of the internal group with relative parameters `(r, t, u)`.
    ///
    /// The center-of-mass part is `x = (f/m) t^2/2`, `v = (f/m) t`, which
    /// undoes the drift of the origin under the total force; in the isolated
    /// case both vanish.
    pub fn internal_group_element(&self, r: f64, t: f64, u: f64) -> (GroupElement, GroupElement) {
        let m = self.params.total_mass;
        let (w1, w2) = (self.m1 / m, self.m2 / m);
        let (x_cm, v_cm) = if self.is_isolated() {
            (0.0, 0.0)
        } else {
            let a = self.params.cm_acceleration();
            (a * t * t / 2.0, a * t)
        };
        (
            GroupElement::new(x_cm + w2 * r, t, v_cm + w2 * u),
            GroupElement::new(x_cm - w1 * r, t, v_cm - w1 * u),
        )
    }

    pub fn energy(&self, b: &BarycenterState) -> Energy {
        let DerivedParams {
            total_mass: m,
            reduced_mass: mu,
            total_force: f,
            relative_force: phi,
        } = self.params;
        Energy {
            kinetic: b.p * b.p / (2.0 * m) + b.pi * b.pi / (2.0 * mu),
            potential: -f * b.q - phi * b.rho,
        }
    }

    pub fn momenta(&self, b: &BarycenterState) -> TwoBodyMomentum {
        TwoBodyMomentum {
            j_p_cm: b.p,
            j_k_cm: self.params.total_mass * b.q,
            j_p_int: b.pi,
            j_k_int: self.params.reduced_mass * b.rho,
            j_e: self.energy(b).total(),
        }
    }

    /// Closed-form motion: the action of the pure time translation by `t`.
    pub fn evolve(&self, b: &BarycenterState, t: f64) -> BarycenterState {
        let DerivedParams {
            total_mass: m,
            reduced_mass: mu,
            total_force: f,
            relative_force: phi,
        } = self.params;
        BarycenterState {
            p: b.p + f * t,
            q: b.q + (b.p / m) * t + (f / m) * t * t / 2.0,
            pi: b.pi + phi * t,
            rho: b.rho + (b.pi / mu) * t + (phi / mu) * t * t / 2.0,
        }
    }

    /// `n_steps + 1` evenly spaced samples of [`TwoBodySystem::evolve`] on
    /// `[0, t_end]`.
    pub fn trajectory(
        &self,
        b0: &BarycenterState,
        t_end: f64,
        n_steps: usize,
    ) -> Result<Vec<TrajectorySample>, Error> {
        let t_end = finite("t_end", t_end)?;
        if n_steps == 0 {
            return Err(Error::ZeroCount("n_steps"));
        }
        Ok(sample_times(t_end, n_steps)
            .map(|t| {
                let state = self.evolve(b0, t);
                TrajectorySample {
                    t,
                    state,
                    momentum: self.momenta(&state),
                    energy: self.energy(&state),
                }
            })
            .collect())
    }
}

/// `n + 1` evenly spaced times from `0` to `t_end`, both ends exact.
pub fn sample_times(t_end: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..=n).map(move |i| {
        if i == n {
            t_end
        } else {
            t_end * (i as f64) / (n as f64)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(m1: f64, m2: f64, f1: f64, f2: f64) -> TwoBodySystem {
        TwoBodySystem::new(m1, m2, f1, f2).unwrap()
    }

    #[test]
    fn derived_params_examples() {
        let p = sys(1.0, 3.0, 2.0, -2.0).params();
        assert_eq!(
            (
                p.total_mass,
                p.reduced_mass,
                p.total_force,
                p.relative_force
            ),
            (4.0, 0.75, 0.0, 2.0)
        );
        let p = sys(1.0, 1.0, 0.0, 0.0).params();
        assert_eq!(
            (
                p.total_mass,
                p.reduced_mass,
                p.total_force,
                p.relative_force
            ),
            (2.0, 0.5, 0.0, 0.0)
        );
        let p = sys(2.0, 2.0, 1.0, 3.0).params();
        assert_eq!(
            (
                p.total_mass,
                p.reduced_mass,
                p.total_force,
                p.relative_force
            ),
            (4.0, 1.0, 4.0, -1.0)
        );
    }

    #[test]
    fn relative_force_matches_direct_formula() {
        let s = sys(0.7, 2.9, 1.3, -4.1);
        let direct = (2.9 * 1.3 - 0.7 * -4.1) / 3.6;
        assert!((s.params().relative_force - direct).abs() < 1e-14);
        let via_accel = s.params().reduced_mass * (1.3 / 0.7 - -4.1 / 2.9);
        assert!((s.params().relative_force - via_accel).abs() < 1e-14);
    }

    #[test]
    fn opposite_forces_give_exact_relative_force() {
        for (m1, m2, f1) in [(1.0, 3.0, 2.0), (0.1, 7.3, -9.9), (1.0, 1000.0, 0.3)] {
            let s = sys(m1, m2, f1, -f1);
            assert_eq!(s.params().relative_force, f1);
            assert!(s.is_isolated());
        }
    }

    #[test]
    fn isolation_classification() {
        assert!(sys(1.0, 1.0, 0.0, 0.0).is_isolated());
        assert!(!sys(1.0, 3.0, 1.0, 3.0).is_isolated());
        let p = sys(1.0, 3.0, 1.0, 3.0).params();
        assert!(!p.is_isolated(1e-12));
        assert!(p.is_isolated(4.0));
    }

    #[test]
    fn barycenter_examples() {
        let s = sys(1.0, 3.0, 0.0, 0.0);
        let b = s.to_barycenter(&ProductState::new(2.0, 4.0, 2.0, 0.0));
        assert_eq!(b, BarycenterState::new(4.0, 1.0, 1.0, 4.0));
        assert_eq!(
            s.from_barycenter(&BarycenterState::new(4.0, 1.0, 1.0, 4.0)),
            ProductState::new(2.0, 4.0, 2.0, 0.0)
        );
        assert_eq!(
            s.from_barycenter(&BarycenterState::default()),
            ProductState::default()
        );
        let e = sys(2.0, 2.0, 0.0, 0.0);
        assert_eq!(
            e.to_barycenter(&ProductState::new(1.0, 0.0, 1.0, 0.0)),
            BarycenterState::new(2.0, 0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn product_act_moves_each_particle() {
        let s = sys(2.0, 5.0, 4.0, -1.0);
        let out = s.product_act(
            &GroupElement::new(0.0, 1.0, 0.0),
            &GroupElement::IDENTITY,
            &ProductState::new(1.0, 0.0, 3.0, -2.0),
        );
        assert_eq!(out, ProductState::new(5.0, 1.5, 3.0, -2.0));
        let s0 = ProductState::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(
            s.product_act(&GroupElement::IDENTITY, &GroupElement::IDENTITY, &s0),
            s0
        );
    }

    #[test]
    fn barycentric_act_example() {
        // m = 4, mu = 0.75, f = 4, phi = 2
        let s = sys(1.0, 3.0, 3.0, 1.0);
        assert_eq!(s.params().total_force, 4.0);
        assert_eq!(s.params().relative_force, 2.0);
        let b = s.barycentric_act(
            &BarycenterGroupElement::time(1.0),
            &BarycenterState::default(),
        );
        assert_eq!(b.p, 4.0);
        assert_eq!(b.q, 0.5);
        assert_eq!(b.pi, 2.0);
        assert!((b.rho - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(s.evolve(&BarycenterState::default(), 1.0), b);

        let b0 = BarycenterState::new(1.0, -2.0, 3.0, 0.5);
        assert_eq!(
            s.barycentric_act(&BarycenterGroupElement::default(), &b0),
            b0
        );
    }

    #[test]
    fn pair_encoding_round_trip() {
        let s = sys(1.0, 3.0, 0.0, 0.0);
        let g1 = GroupElement::new(5.0, 2.0, 8.0);
        let g2 = GroupElement::new(1.0, 2.0, 0.0);
        let gb = s.pair_to_barycentric(&g1, &g2).unwrap();
        assert_eq!(gb, BarycenterGroupElement::new(2.0, 2.0, 2.0, 4.0, 8.0));
        assert_eq!(s.barycentric_to_pair(&gb), (g1, g2));
        assert_eq!(
            s.pair_to_barycentric(&g1, &GroupElement::new(0.0, 1.0, 0.0)),
            Err(Error::UnequalTimeShift(2.0, 1.0))
        );
    }

    #[test]
    fn internal_group_examples() {
        let s = sys(1.0, 3.0, 1.0, 3.0);
        let (g1, g2) = s.internal_group_element(4.0, 2.0, 8.0);
        assert_eq!(g1, GroupElement::new(5.0, 2.0, 8.0));
        assert_eq!(g2, GroupElement::new(1.0, 2.0, 0.0));

        let (g1, g2) = s.internal_group_element(0.0, 0.0, 0.0);
        assert_eq!((g1, g2), (GroupElement::IDENTITY, GroupElement::IDENTITY));

        let iso = sys(1.0, 3.0, 2.0, -2.0);
        let (g1, g2) = iso.internal_group_element(4.0, 2.0, 8.0);
        assert_eq!(g1, GroupElement::new(3.0, 2.0, 6.0));
        assert_eq!(g2, GroupElement::new(-1.0, 2.0, -2.0));
    }

    #[test]
    fn internal_group_fixes_cm_origin() {
        let s = sys(1.0, 3.0, 1.0, 3.0);
        let (g1, g2) = s.internal_group_element(4.0, 2.0, 8.0);
        let gb = s.pair_to_barycentric(&g1, &g2).unwrap();
        let b = s.barycentric_act(&gb, &BarycenterState::new(0.0, 0.0, 1.5, -2.0));
        assert_eq!((b.p, b.q), (0.0, 0.0));
    }

    #[test]
    fn momenta_examples() {
        let s = sys(1.0, 3.0, 2.0, -2.0);
        let j = s.momenta(&BarycenterState::new(4.0, 1.0, 1.0, 4.0));
        assert_eq!(
            (j.j_p_cm, j.j_k_cm, j.j_p_int, j.j_k_int),
            (4.0, 4.0, 1.0, 3.0)
        );
        let z = s.momenta(&BarycenterState::default());
        assert_eq!(z, TwoBodyMomentum::default());

        let prod = ProductState::new(2.0, 4.0, 2.0, 0.0);
        let b = s.to_barycenter(&prod);
        let cm = (1.0 * prod.q1 + 3.0 * prod.q2) / 4.0;
        assert_eq!(s.momenta(&b).j_k_cm / 4.0, cm);
    }

    #[test]
    fn energy_examples() {
        let s = sys(1.0, 3.0, 2.0, -2.0);
        let e = s.energy(&BarycenterState::new(4.0, 1.0, 1.0, 4.0));
        assert!((e.kinetic - (2.0 + 2.0 / 3.0)).abs() < 1e-15);
        assert_eq!(e.potential, -8.0);
        assert!((e.total() + 16.0 / 3.0).abs() < 1e-14);
        assert_eq!(s.energy(&BarycenterState::default()).total(), 0.0);

        let s = sys(2.0, 2.0, 1.0, 3.0);
        let e = s.energy(&BarycenterState::new(0.0, 2.0, 0.0, 3.0));
        assert_eq!(e.total(), -5.0);
    }

    #[test]
    fn evolve_examples() {
        let s = sys(1.0, 3.0, 2.0, -2.0);
        let b = BarycenterState::new(4.0, 1.0, 1.0, 4.0);
        assert_eq!(s.evolve(&b, 0.0), b);
        for t in [-3.0, 0.5, 10.0] {
            assert_eq!(s.evolve(&b, t).p, 4.0);
        }
        assert_eq!(s.evolve(&b, 1.0).q, 2.0);
    }

    #[test]
    fn trajectory_rows() {
        let s = sys(1.0, 3.0, 2.0, -2.0);
        let b0 = BarycenterState::new(4.0, 1.0, 1.0, 4.0);
        let rows = s.trajectory(&b0, 1.0, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].state, b0);
        assert_eq!(rows[1].state, s.evolve(&b0, 1.0));
        assert_eq!(rows[1].t, 1.0);

        let rows = s.trajectory(&b0, 0.0, 1).unwrap();
        assert_eq!(rows[0].state, rows[1].state);

        assert_eq!(s.trajectory(&b0, 1.0, 0), Err(Error::ZeroCount("n_steps")));
        assert_eq!(
            s.trajectory(&b0, f64::NAN, 3),
            Err(Error::NonFinite("t_end"))
        );
    }

    #[test]
    fn trajectory_conserves_energy() {
        let s = sys(0.3, 4.0, -2.0, 7.0);
        let b0 = BarycenterState::new(1.0, -2.0, 3.0, 0.5);
        let rows = s.trajectory(&b0, 10.0, 50).unwrap();
        let e0 = rows[0].momentum.j_e;
        for r in &rows {
            let scale = r.energy.kinetic.abs() + r.energy.potential.abs();
            assert!((r.momentum.j_e - e0).abs() <= 1e-9 * scale.max(1.0));
        }
    }

    #[test]
    fn rejects_bad_systems() {
        assert_eq!(
            TwoBodySystem::new(0.0, 1.0, 0.0, 0.0),
            Err(Error::NonPositiveMass("m1"))
        );
        assert_eq!(
            TwoBodySystem::new(1.0, -2.0, 0.0, 0.0),
            Err(Error::NonPositiveMass("m2"))
        );
        assert_eq!(
            TwoBodySystem::new(1.0, 1.0, f64::INFINITY, 0.0),
            Err(Error::NonFinite("f1"))
        );
    }
}
