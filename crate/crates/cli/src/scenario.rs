//! Scenario files.
//!
//! A scenario is a TOML document whose `kind` selects one of four layouts:
//!
//! ```toml
//! kind = "two_body"          # or single_forced | single_free | single_spacetime
//! t_end = 1.0
//! n_steps = 10
//!
//! [system]                   # two_body: masses and forces
//! m1 = 1.0
//! m2 = 3.0
//! f1 = 2.0
//! f2 = -2.0
//!
//! [initial]                  # two_body: p1, q1, p2, q2
//! p1 = 2.0                   # (or [initial_barycenter] with p, q, pi, rho)
//! q1 = 4.0
//! p2 = 2.0
//! q2 = 0.0
//! ```
//!
//! Single-particle kinds use an `[orbit]` table (`m, f, U` forced; `m, U`
//! free; `f, K` spacetime) and an `[initial]` table (`p, q` on the massive
//! orbits, `tau, q` on the spacetime orbit).

use std::path::Path;

use galilei_core::orbits::{
    ForcedMassiveOrbit, FreeMassiveOrbit, PQState, SpacetimeOrbit, TauQState,
};
use galilei_core::twobody::{BarycenterState, ProductState, TwoBodySystem};
use serde::Deserialize;

use crate::CliError;

/// Just the discriminator; every other key is ignored at this stage.
#[derive(Debug, Deserialize)]
struct RawKind {
    kind: String,
}

// One top-level layout per kind. Each is deserialized directly from the
// document text so that errors carry the line and key they refer to.

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSingleForced {
    #[allow(dead_code)]
    kind: String,
    t_end: f64,
    n_steps: i64,
    orbit: RawForced,
    initial: RawPQ,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSingleFree {
    #[allow(dead_code)]
    kind: String,
    t_end: f64,
    n_steps: i64,
    orbit: RawFree,
    initial: RawPQ,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSingleSpacetime {
    #[allow(dead_code)]
    kind: String,
    t_end: f64,
    n_steps: i64,
    orbit: RawSpacetime,
    initial: RawTauQ,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwoBody {
    #[allow(dead_code)]
    kind: String,
    t_end: f64,
    n_steps: i64,
    system: RawSystem,
    initial: Option<RawProduct>,
    initial_barycenter: Option<RawBarycenter>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForced {
    m: f64,
    f: f64,
    #[serde(rename = "U")]
    u: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFree {
    m: f64,
    #[serde(rename = "U")]
    u: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpacetime {
    f: f64,
    #[serde(rename = "K")]
    k: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPQ {
    p: f64,
    q: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTauQ {
    tau: f64,
    q: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    m1: f64,
    m2: f64,
    f1: f64,
    f2: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    p1: f64,
    q1: f64,
    p2: f64,
    q2: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBarycenter {
    p: f64,
    q: f64,
    pi: f64,
    rho: f64,
}

/// Time grid of a scenario: `n_steps + 1` samples on `[0, t_end]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub t_end: f64,
    pub n_steps: usize,
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    SingleForced {
        orbit: ForcedMassiveOrbit,
        initial: PQState,
        sampling: Sampling,
    },
    SingleFree {
        orbit: FreeMassiveOrbit,
        initial: PQState,
        sampling: Sampling,
    },
    SingleSpacetime {
        orbit: SpacetimeOrbit,
        initial: TauQState,
        sampling: Sampling,
    },
    TwoBody {
        system: TwoBodySystem,
        initial: BarycenterState,
        sampling: Sampling,
    },
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Malformed(format!("cannot read scenario {}: {e}", path.display()))
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        fn de<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
            toml::from_str(text)
                .map_err(|e| CliError::Malformed(format!("malformed scenario: {e}")))
        }
        let RawKind { kind } = de(text)?;
        match kind.as_str() {
            "single_forced" => de::<RawSingleForced>(text)?.validate(),
            "single_free" => de::<RawSingleFree>(text)?.validate(),
            "single_spacetime" => de::<RawSingleSpacetime>(text)?.validate(),
            "two_body" => de::<RawTwoBody>(text)?.validate(),
            other => Err(CliError::Malformed(format!(
                "malformed scenario: unknown `kind` {other:?}; expected one of \
                 single_forced, single_free, single_spacetime, two_body"
            ))),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Scenario::SingleForced { .. } => "single_forced",
            Scenario::SingleFree { .. } => "single_free",
            Scenario::SingleSpacetime { .. } => "single_spacetime",
            Scenario::TwoBody { .. } => "two_body",
        }
    }

    pub fn sampling(&self) -> Sampling {
        match self {
            Scenario::SingleForced { sampling, .. }
            | Scenario::SingleFree { sampling, .. }
            | Scenario::SingleSpacetime { sampling, .. }
            | Scenario::TwoBody { sampling, .. } => *sampling,
        }
    }
}

fn sampling(t_end: f64, n_steps: i64) -> Result<Sampling, CliError> {
    if !t_end.is_finite() {
        return Err(galilei_core::Error::NonFinite("t_end").into());
    }
    if n_steps < 1 {
        return Err(galilei_core::Error::ZeroCount("n_steps").into());
    }
    Ok(Sampling {
        t_end,
        n_steps: n_steps as usize,
    })
}

fn finite_state<const N: usize>(
    names: [&'static str; N],
    values: [f64; N],
) -> Result<(), CliError> {
    match names.iter().zip(values).find(|(_, v)| !v.is_finite()) {
        Some((name, _)) => Err(galilei_core::Error::NonFinite(name).into()),
        None => Ok(()),
    }
}

impl RawSingleForced {
    fn validate(self) -> Result<Scenario, CliError> {
        let (o, s) = (self.orbit, self.initial);
        finite_state(["p", "q"], [s.p, s.q])?;
        Ok(Scenario::SingleForced {
            orbit: ForcedMassiveOrbit::new(o.m, o.f, o.u)?,
            initial: PQState::new(s.p, s.q),
            sampling: sampling(self.t_end, self.n_steps)?,
        })
    }
}

impl RawSingleFree {
    fn validate(self) -> Result<Scenario, CliError> {
        let (o, s) = (self.orbit, self.initial);
        finite_state(["p", "q"], [s.p, s.q])?;
        Ok(Scenario::SingleFree {
            orbit: FreeMassiveOrbit::new(o.m, o.u)?,
            initial: PQState::new(s.p, s.q),
            sampling: sampling(self.t_end, self.n_steps)?,
        })
    }
}

impl RawSingleSpacetime {
    fn validate(self) -> Result<Scenario, CliError> {
        let (o, s) = (self.orbit, self.initial);
        finite_state(["tau", "q"], [s.tau, s.q])?;
        Ok(Scenario::SingleSpacetime {
            orbit: SpacetimeOrbit::new(o.f, o.k)?,
            initial: TauQState::new(s.tau, s.q),
            sampling: sampling(self.t_end, self.n_steps)?,
        })
    }
}

impl RawTwoBody {
    fn validate(self) -> Result<Scenario, CliError> {
        let sys = self.system;
        let system = TwoBodySystem::new(sys.m1, sys.m2, sys.f1, sys.f2)?;
        let initial = match (self.initial, self.initial_barycenter) {
            (Some(s), None) => {
                finite_state(["p1", "q1", "p2", "q2"], [s.p1, s.q1, s.p2, s.q2])?;
                system.to_barycenter(&ProductState::new(s.p1, s.q1, s.p2, s.q2))
            }
            (None, Some(b)) => {
                finite_state(["p", "q", "pi", "rho"], [b.p, b.q, b.pi, b.rho])?;
                BarycenterState::new(b.p, b.q, b.pi, b.rho)
            }
            (Some(_), Some(_)) => {
                return Err(CliError::Malformed(
                    "malformed scenario: give either `initial` or `initial_barycenter`, not both"
                        .into(),
                ))
            }
            (None, None) => {
                return Err(CliError::Malformed(
                    "malformed scenario: missing field `initial` (or `initial_barycenter`)".into(),
                ))
            }
        };
        Ok(Scenario::TwoBody {
            system,
            initial,
            sampling: sampling(self.t_end, self.n_steps)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_BODY: &str = r#"
kind = "two_body"
t_end = 1.0
n_steps = 1

[system]
m1 = 1.0
m2 = 3.0
f1 = 2.0
f2 = -2.0

[initial]
p1 = 2.0
q1 = 4.0
p2 = 2.0
q2 = 0.0
"#;

    #[test]
    fn parses_two_body() {
        let s = Scenario::parse(TWO_BODY).unwrap();
        match s {
            Scenario::TwoBody {
                initial, sampling, ..
            } => {
                assert_eq!(initial, BarycenterState::new(4.0, 1.0, 1.0, 4.0));
                assert_eq!(
                    sampling,
                    Sampling {
                        t_end: 1.0,
                        n_steps: 1
                    }
                );
            }
            other => panic!("wrong kind {other:?}"),
        }
    }

    #[test]
    fn integers_are_numbers() {
        let s = Scenario::parse(
            "kind = \"single_forced\"\nt_end = 2\nn_steps = 4\n[orbit]\nm = 2\nf = 4\nU = 0\n[initial]\np = 5\nq = 1.5e0\n",
        )
        .unwrap();
        assert_eq!(s.kind(), "single_forced");
    }

    #[test]
    fn missing_field_is_named() {
        let text = TWO_BODY.replace("m2 = 3.0\n", "");
        let err = Scenario::parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("m2"), "{err}");
    }

    #[test]
    fn unknown_field_is_named() {
        let text = TWO_BODY.replace("m2 = 3.0", "m2 = 3.0\nm3 = 1.0");
        let err = Scenario::parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("m3"), "{err}");
    }

    #[test]
    fn wrong_type_is_malformed() {
        let text = TWO_BODY.replace("f1 = 2.0", "f1 = \"two\"");
        let err = Scenario::parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("f1"), "{err}");
    }

    #[test]
    fn unknown_top_level_key_is_named() {
        let text = TWO_BODY.replace(
            "t_end = 1.0",
            "t_end = 1.0
t_start = 0.0",
        );
        let err = Scenario::parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("t_start"), "{err}");
    }

    #[test]
    fn unknown_kind_is_malformed() {
        let text = TWO_BODY.replace("two_body", "three_body");
        assert_eq!(Scenario::parse(&text).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn zero_mass_is_constraint_violation() {
        let text = TWO_BODY.replace("m1 = 1.0", "m1 = 0.0");
        let err = Scenario::parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("m1"), "{err}");
    }

    #[test]
    fn zero_steps_is_constraint_violation() {
        let text = TWO_BODY.replace("n_steps = 1", "n_steps = 0");
        assert_eq!(Scenario::parse(&text).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn zero_spacetime_force_is_constraint_violation() {
        let text = "kind = \"single_spacetime\"\nt_end = 1\nn_steps = 1\n[orbit]\nf = 0\nK = 0\n[initial]\ntau = 0\nq = 0\n";
        assert_eq!(Scenario::parse(text).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn barycenter_initial_state() {
        let text = TWO_BODY.replace(
            "[initial]\np1 = 2.0\nq1 = 4.0\np2 = 2.0\nq2 = 0.0",
            "[initial_barycenter]\np = 4.0\nq = 1.0\npi = 1.0\nrho = 4.0",
        );
        match Scenario::parse(&text).unwrap() {
            Scenario::TwoBody { initial, .. } => {
                assert_eq!(initial, BarycenterState::new(4.0, 1.0, 1.0, 4.0))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn both_initial_tables_rejected() {
        let text =
            format!("{TWO_BODY}\n[initial_barycenter]\np = 4.0\nq = 1.0\npi = 1.0\nrho = 4.0\n");
        assert_eq!(Scenario::parse(&text).unwrap_err().exit_code(), 2);
    }
}
