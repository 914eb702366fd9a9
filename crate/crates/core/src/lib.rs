//! The one-dimensional Galilei group and the mechanics built on it.
//!
//! - [`group`]: the three-parameter group of space shifts, time shifts and
//!   boosts, with its composition law and one-parameter subgroups.
//! - [`orbits`]: the three coadjoint-orbit phase spaces (forced massive, free
//!   massive, spacetime), each with its symplectic action, Hamiltonian vector
//!   fields, momentum map and Casimir invariant.
//! - [`twobody`]: two forced massive particles, the barycenter change of
//!   variables, the action of the shared-time subgroup, the internal group and
//!   the closed-form motion.
//! - [`verify`]: a seeded randomized harness that measures the residual of
//!   every structural identity above and collects them in a report.
//!
//! The crate is `no_std` and only needs `alloc` for trajectories and reports.
#![no_std]

extern crate alloc;

pub mod error;
pub mod group;
pub mod orbits;
pub mod twobody;
pub mod verify;

pub use error::Error;
pub use group::{Generator, GroupElement};
pub use orbits::{
    CoadjointOrbit, ForcedMassiveOrbit, FreeMassiveOrbit, Momentum, OrbitKind, PQState,
    SpacetimeOrbit, TangentVector, TauQState,
};
pub use twobody::{
    BarycenterGroupElement, BarycenterState, DerivedParams, Energy, ProductState, TwoBodyMomentum,
    TwoBodySystem,
};
