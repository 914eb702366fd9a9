use thiserror::Error;

/// Construction errors for the domain types.
///
/// Operations on already-constructed values are total; every label or
/// parameter constraint is enforced here instead.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("`{0}` must be a finite number")]
    NonFinite(&'static str),
    #[error("mass `{0}` must be strictly positive")]
    NonPositiveMass(&'static str),
    #[error("force `{0}` must be nonzero on a spacetime orbit")]
    ZeroForce(&'static str),
    #[error("`{0}` must be at least 1")]
    ZeroCount(&'static str),
    #[error("`{0}` must be strictly positive")]
    NonPositive(&'static str),
    #[error("interval `{0}` is empty")]
    EmptyInterval(&'static str),
    #[error("a shared-time pair needs equal time shifts, got {0} and {1}")]
    UnequalTimeShift(f64, f64),
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64, Error> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(name))
    }
}

pub(crate) fn positive_mass(name: &'static str, value: f64) -> Result<f64, Error> {
    let value = finite(name, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositiveMass(name))
    }
}
