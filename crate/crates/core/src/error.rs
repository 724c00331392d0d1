//! Error types for the numeric kernels and the bounds engine.

use thiserror::Error;

/// Errors from the scalar special functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("gamma pole at nonpositive integer x = {0}")]
    GammaPole(f64),
    #[error("gamma overflow for x = {0} (finite up to x ≈ 171.62)")]
    GammaOverflow(f64),
    #[error("unsupported Bessel order nu = {0} (need nu >= -1/2)")]
    UnsupportedOrder(f64),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("2F1 parameter pole: c = {0} is a nonpositive integer")]
    HypergeometricPole(f64),
    #[error("2F1 series did not converge for argument {0}")]
    HypergeometricDivergence(f64),
}

/// Errors from the quadrature engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("tolerance not reached: estimated error {err:e} > requested {tol:e}")]
    ToleranceNotReached { err: f64, tol: f64 },
    #[error("integral diverges: {0}")]
    Divergent(&'static str),
    #[error("integrand produced a non-finite value near x = {0}")]
    NonFinite(f64),
}

/// Errors from Mellin–Barnes (Fox H / Meijer G) evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MellinError {
    #[error("pole sets are not separable by a vertical line (max left {max_left} >= min right {min_right})")]
    InseparablePoles { max_left: f64, min_right: f64 },
    #[error("decay exponent alpha = {0} is not positive")]
    NonpositiveAlpha(f64),
    #[error("spec has no Gamma factors")]
    EmptySpec,
    #[error("invalid scale factor {0} (must be > 0)")]
    BadScale(f64),
    #[error("negative argument z = {0} (contour form needs z > 0)")]
    BadArgument(f64),
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// Errors from the radial integration machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadialError {
    #[error("divergent radial integral: {0}")]
    Divergent(&'static str),
    #[error("profile decay class inconsistent with sampled values: {0}")]
    DecayMismatch(&'static str),
    #[error("bad quadrature config: {0}")]
    BadConfig(&'static str),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// Errors from parameter validation and the bounds engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation not applicable in this regime: {0}")]
    Regime(String),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("limit case: {0}")]
    LimitCase(&'static str),
    #[error(transparent)]
    Radial(#[from] RadialError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

impl From<QuadError> for BoundsError {
    fn from(e: QuadError) -> Self {
        BoundsError::Radial(RadialError::Quad(e))
    }
}

/// Errors from maximizer-profile construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProfileError {
    #[error("profile not defined here: {0}")]
    Regime(String),
    #[error("evaluation method not applicable: {0}")]
    MethodInapplicable(String),
    #[error("closed-form representation unavailable: {0}")]
    RepresentationUnavailable(String),
    #[error(transparent)]
    Mellin(#[from] MellinError),
    #[error(transparent)]
    Radial(#[from] RadialError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}
