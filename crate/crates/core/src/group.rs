//! The 1+1 dimensional Galilei group.
//!
//! An element `(x, t, v)` shifts space by `x`, time by `t` and boosts by the
//! velocity `v`. On spacetime points it acts as
//!
//! ```text
//! (tau, q) -> (tau + t, q + v tau + x)
//! ```
//!
//! Treating this as a left action, `g.(h.(tau, q))` expands to
//!
//! ```text
//! (tau + h.t + g.t,  q + (g.v + h.v) tau + g.x + h.x + g.v h.t)
//! ```
//!
//! so the product `g h` must be `(g.x + h.x + g.v h.t, g.t + h.t, g.v + h.v)`.
//! The same law makes the massive-particle actions in [`crate::orbits`] left
//! actions as well; the verification harness checks all three.

use crate::error::{finite, Error};

/// One Galilei transformation.
///
/// Elements are plain values: the group is `R^3` with a polynomial product,
/// so there is no normal form to maintain.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GroupElement {
    /// Space translation.
    pub x: f64,
    /// Time translation.
    pub t: f64,
    /// Boost velocity.
    pub v: f64,
}

/// The three generators of the Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `K`, dual to the boost momentum.
    Boost,
    /// `P`, dual to the linear momentum.
    SpaceTranslation,
    /// `E`, dual to the energy.
    TimeTranslation,
}

impl Generator {
    pub const ALL: [Generator; 3] = [
        Generator::Boost,
        Generator::SpaceTranslation,
        Generator::TimeTranslation,
    ];

    /// Single-letter symbol (`K`, `P`, `E`).
    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Boost => "K",
            Generator::SpaceTranslation => "P",
            Generator::TimeTranslation => "E",
        }
    }
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        x: 0.0,
        t: 0.0,
        v: 0.0,
    };

    pub const fn new(x: f64, t: f64, v: f64) -> Self {
        Self { x, t, v }
    }

    /// Like [`GroupElement::new`] but rejects NaN and infinities.
    pub fn try_new(x: f64, t: f64, v: f64) -> Result<Self, Error> {
        Ok(Self {
            x: finite("x", x)?,
            t: finite("t", t)?,
            v: finite("v", v)?,
        })
    }

    pub const fn identity() -> Self {
        Self::IDENTITY
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.t.is_finite() && self.v.is_finite()
    }

    /// The product `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            x: self.x + other.x + self.v * other.t,
            t: self.t + other.t,
            v: self.v + other.v,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            x: -self.x + self.v * self.t,
            t: -self.t,
            v: -self.v,
        }
    }

    /// The one-parameter subgroup `s -> exp(s X)`.
    pub fn exp(generator: Generator, s: f64) -> GroupElement {
        match generator {
            Generator::Boost => GroupElement::new(0.0, 0.0, s),
            Generator::SpaceTranslation => GroupElement::new(s, 0.0, 0.0),
            Generator::TimeTranslation => GroupElement::new(0.0, s, 0.0),
        }
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.x, self.t, self.v]
    }
}

impl From<[f64; 3]> for GroupElement {
    fn from([x, t, v]: [f64; 3]) -> Self {
        Self { x, t, v }
    }
}

impl core::ops::Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.compose(&rhs)
    }
}
