//! Sharp constants, rigorous bounds and maximizer profiles for the L²
//! fractional Gagliardo–Nirenberg and Sobolev inequalities on ℝᵈ.
//!
//! The library computes, for parameters `(d, j, n, θ)` with `‖Dʲf‖_{Lʳ} ≤
//! G ‖f‖^{1-θ} ‖Dⁿf‖^θ` and its additive-norm (Sobolev) companion:
//!
//! * exact sharp constants in the closed-form regimes (`j = θn`, `θ = 1`,
//!   `r = ∞`),
//! * upper bounds `G₊/S₊` and `G₊₊/S₊₊`, lower bounds `G₋/S₋` (trial-family
//!   ε-scan) and `G₋₋/S₋₋`,
//! * the maximizer profiles, evaluated by direct Hankel quadrature or through
//!   their Fox H / Meijer G representations (Mellin–Barnes contour
//!   integration).
//!
//! Numeric building blocks live in [`special`] (Γ, Bessel J/K, ₂F₁),
//! [`quad`] (adaptive Gauss–Kronrod with tail transforms) and [`radial`]
//! (d-dimensional radial integrals and Hankel-kernel transforms).

pub mod bounds;
pub mod error;
pub mod mellin;
pub mod params;
pub mod profiles;
pub mod quad;
pub mod radial;
pub mod special;
pub mod tables;

pub use bounds::{BoundsReport, EpsGrid};
pub use error::{BoundsError, MellinError, ProfileError, QuadError, RadialError, SpecialError};
pub use mellin::{GFunctionSpec, HFunctionSpec, Rational};
pub use params::{GnsParams, ParamValue, RExponent, Regime, RegimeReport};
pub use profiles::ProfileAb;
pub use radial::{DecayClass, LrExponent, QuadratureConfig, RadialProfile};
pub use special::Order;
