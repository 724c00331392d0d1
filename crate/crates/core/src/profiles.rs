//! Maximizer and trial profiles: the generic position-space transform of
//! |k|^{2a−d}/(1+|k|^{2b}), its specializations F_{jn} and L_{jn}, the θ = 1
//! maximizer, the ε-regularized trial family, and generation of the Fox H /
//! Meijer G parameter specs for these profiles.

use crate::error::ProfileError;
use crate::mellin::{self, GFunctionSpec, HFunctionSpec, Rational};
use crate::radial::{self, DecayClass, QuadratureConfig, RadialProfile};
use crate::special::{self, Order};
use std::f64::consts::PI;

/// Parameters of the Fourier-side profile g(k) = |k|^{2a−d}/(1+|k|^{2b}),
/// b > a > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileAb {
    pub a: f64,
    pub b: f64,
    pub d: u32,
}

impl ProfileAb {
    pub fn new(a: f64, b: f64, d: u32) -> Result<Self, ProfileError> {
        if !(b > a && a > 0.0) || d == 0 {
            return Err(ProfileError::Regime(format!(
                "profile needs b > a > 0 and d >= 1 (got a = {a}, b = {b}, d = {d})"
            )));
        }
        Ok(ProfileAb { a, b, d })
    }

    /// The Fourier-side radial profile ξ^{2a−d}/(1+ξ^{2b}).
    pub fn fourier_profile(&self) -> RadialProfile {
        let (a, b, d) = (self.a, self.b, self.d);
        RadialProfile::new(
            move |xi: f64| xi.powf(2.0 * a - d as f64) / (1.0 + xi.powf(2.0 * b)),
            DecayClass::Algebraic { p: 2.0 * b - 2.0 * a + d as f64 },
        )
        .expect("decay class is exact for this profile")
    }

    /// Closed form of the transform at the origin:
    /// F(0) = π / (2^{d/2} Γ(d/2) b sin(π a/b)).
    pub fn value_at_zero(&self) -> f64 {
        PI / (2f64.powf(self.d as f64 / 2.0)
            * special::gamma_unchecked(self.d as f64 / 2.0)
            * self.b
            * (PI * self.a / self.b).sin())
    }
}

/// Evaluation route for a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    /// Direct Hankel-kernel quadrature of the Fourier data (the slow oracle).
    Quadrature,
    /// Mellin–Barnes contour integral of the Fox H representation.
    FoxH,
    /// Mellin–Barnes contour integral of the Meijer G representation
    /// (requires b = N/M rational).
    MeijerG,
    /// MeijerG when the profile's b is rational with small N, else FoxH.
    Auto,
}

/// Fox H spec of the transform: F(ρ) = prefactor · H(spec | (ρ/2)²).
#[derive(Debug, Clone, PartialEq)]
pub struct HProfileSpec {
    pub spec: HFunctionSpec,
    pub prefactor: f64,
}

/// Meijer G spec of the transform: F(ρ) = prefactor · G(spec | (ρ/(2N))^{2N}).
#[derive(Debug, Clone, PartialEq)]
pub struct GProfileSpec {
    pub spec: GFunctionSpec,
    pub prefactor: f64,
    /// N in the argument map ρ ↦ (ρ/(2N))^{2N}.
    pub big_n: i64,
}

impl GProfileSpec {
    pub fn argument(&self, rho: f64) -> f64 {
        (rho / (2.0 * self.big_n as f64)).powi(2 * self.big_n as i32)
    }
}

/// The Fox H parameter layout for the transform of |k|^{2a−d}/(1+|k|^{2b}):
/// upper-left (1−a/b, 1/b); lower-left (0,1), (1−a/b, 1/b); lower-right
/// (1−d/2, 1); prefactor 1/(2^{d/2} b); argument (ρ/2)².
pub fn h_spec_for_profile(p: &ProfileAb) -> HProfileSpec {
    let ab = p.a / p.b;
    HProfileSpec {
        spec: HFunctionSpec {
            upper_left: vec![(1.0 - ab, 1.0 / p.b)],
            upper_right: vec![],
            lower_left: vec![(0.0, 1.0), (1.0 - ab, 1.0 / p.b)],
            lower_right: vec![(1.0 - p.d as f64 / 2.0, 1.0)],
        },
        prefactor: 1.0 / (2f64.powf(p.d as f64 / 2.0) * p.b),
    }
}

/// The Meijer G layout for rational b = N/M and rational a:
///
/// aℓ = 1 − a/N − (ℓ−1)/M (ℓ ≤ M); b_h = (h−1)/N (h ≤ N),
/// b_{N+h} = −a/N + h/M (h ≤ M); b*ℓ = 1 − d/2N − (ℓ−1)/N (ℓ ≤ N);
/// prefactor M/(2^{d/2+M−1} π^{M−1} N^{d/2}); argument (ρ/2N)^{2N}.
/// The output is canonicalized (sorted, cancellable pairs removed).
pub fn g_spec_for_profile(a: Rational, big_n: i64, big_m: i64, d: u32) -> GProfileSpec {
    let n = Rational::new(big_n, 1);
    let upper_left: Vec<Rational> = (1..=big_m)
        .map(|l| Rational::new(1, 1) - a / n - Rational::new(l - 1, big_m))
        .collect();
    let mut lower_left: Vec<Rational> =
        (1..=big_n).map(|h| Rational::new(h - 1, big_n)).collect();
    lower_left.extend((1..=big_m).map(|h| -a / n + Rational::new(h, big_m)));
    let lower_right: Vec<Rational> = (1..=big_n)
        .map(|l| Rational::new(1, 1) - Rational::new(d as i64, 2 * big_n) - Rational::new(l - 1, big_n))
        .collect();
    let spec = GFunctionSpec { upper_left, upper_right: vec![], lower_left, lower_right }
        .simplify();
    let prefactor = big_m as f64
        / (2f64.powf(d as f64 / 2.0 + big_m as f64 - 1.0)
            * PI.powi(big_m as i32 - 1)
            * (big_n as f64).powf(d as f64 / 2.0));
    GProfileSpec { spec, prefactor, big_n }
}

fn rational_b(b: f64) -> Option<(i64, i64)> {
    // b = N/M with small M; profiles come from rational n in practice.
    for m in 1..=24i64 {
        let n = b * m as f64;
        if (n - n.round()).abs() < 1e-11 && n.round() >= 1.0 {
            return Some((n.round() as i64, m));
        }
    }
    None
}

/// F(ρ) for the transform of |k|^{2a−d}/(1+|k|^{2b}), by the chosen method.
/// F(0) is the closed form π/(2^{d/2} Γ(d/2) b sin(πa/b)) for all methods.
pub fn profile_ab(
    p: &ProfileAb,
    rho: f64,
    method: EvalMethod,
    cfg: &QuadratureConfig,
) -> Result<f64, ProfileError> {
    if rho < 0.0 {
        return Err(ProfileError::Regime("rho must be nonnegative".into()));
    }
    if rho == 0.0 {
        return Ok(p.value_at_zero());
    }
    match method {
        EvalMethod::Quadrature => {
            let g = p.fourier_profile();
            Ok(radial::hankel_inverse_ft(&g, p.d, rho, cfg)?)
        }
        EvalMethod::FoxH => {
            let h = h_spec_for_profile(p);
            let z = (rho / 2.0) * (rho / 2.0);
            Ok(h.prefactor * mellin::eval_h(&h.spec, z, cfg)?)
        }
        EvalMethod::MeijerG => {
            let (bn, bm) = rational_b(p.b).ok_or_else(|| {
                ProfileError::MethodInapplicable(format!(
                    "meijer_g needs rational b = N/M (got b = {})",
                    p.b
                ))
            })?;
            let a_rat = to_rational(p.a).ok_or_else(|| {
                ProfileError::MethodInapplicable(format!(
                    "meijer_g needs rational a (got a = {})",
                    p.a
                ))
            })?;
            let g = g_spec_for_profile(a_rat, bn, bm, p.d);
            Ok(g.prefactor * mellin::eval_g(&g.spec, g.argument(rho), cfg)?)
        }
        EvalMethod::Auto => match rational_b(p.b) {
            Some((bn, _)) if bn <= 12 && to_rational(p.a).is_some() => {
                profile_ab(p, rho, EvalMethod::MeijerG, cfg)
            }
            _ => profile_ab(p, rho, EvalMethod::FoxH, cfg),
        },
    }
}

fn to_rational(v: f64) -> Option<Rational> {
    for den in 1..=48i64 {
        let num = v * den as f64;
        if (num - num.round()).abs() < 1e-11 {
            return Some(Rational::new(num.round() as i64, den));
        }
    }
    None
}

/// F_{jn}: transform of |k|^j/(1+|k|^{2n}) — the r = ∞ maximizer profile.
/// Uses a = (j+d)/2, b = n; needs θ(j,n) = j/n + d/2n < 1.
pub fn f_linf(
    j: f64,
    n: f64,
    d: u32,
    rho: f64,
    method: EvalMethod,
    cfg: &QuadratureConfig,
) -> Result<f64, ProfileError> {
    if n <= 0.0 || j < 0.0 || j / n + d as f64 / (2.0 * n) >= 1.0 {
        return Err(ProfileError::Regime(format!(
            "F_jn needs n > 0, j >= 0 and j/n + d/2n < 1 (got j = {j}, n = {n}, d = {d})"
        )));
    }
    let p = ProfileAb::new((j + d as f64) / 2.0, n, d)?;
    profile_ab(&p, rho, method, cfg)
}

/// L_{jn}: transform of |k|^{2j}/(1+|k|^{2n}) (the j ↦ 2j variant of F_{jn}),
/// a = j + d/2, b = n; needs (2j+d)/2n < 1.
pub fn l_profile(
    j: f64,
    n: f64,
    d: u32,
    rho: f64,
    method: EvalMethod,
    cfg: &QuadratureConfig,
) -> Result<f64, ProfileError> {
    if n <= 0.0 || j < 0.0 || (2.0 * j + d as f64) / (2.0 * n) >= 1.0 {
        return Err(ProfileError::Regime(format!(
            "L_jn needs n > 0, j >= 0 and (2j+d)/2n < 1 (got j = {j}, n = {n}, d = {d})"
        )));
    }
    let p = ProfileAb::new(j + d as f64 / 2.0, n, d)?;
    profile_ab(&p, rho, method, cfg)
}

/// Membership predicates for the θ = 1 maximizer: (f ∈ L^∞, f ∈ L²) hold iff
/// n < j/2 + d/2 and n < j/2 + d/4 respectively.
pub fn theta1_membership(j: f64, n: f64, d: u32) -> (bool, bool) {
    (n < j / 2.0 + d as f64 / 2.0, n < j / 2.0 + d as f64 / 4.0)
}

/// The θ = 1 maximizer in position space:
///
/// f(ρ) = Γ(d/2−j/2) Γ(d/2−n+j/2) / (2ʲ Γ(d/2) Γ(d/2−n+j))
///        · ₂F₁(d/2−j/2, d/2−n+j/2; d/2; −ρ²),
///
/// valid for 0 ≤ j ≤ n < j + d/2 and (for this representation) n < j/2 + d/2;
/// at j = 0 it reduces to (1+ρ²)^{−(d/2−n)}.
pub fn theta1_maximizer(j: f64, n: f64, d: u32, rho: f64) -> Result<f64, ProfileError> {
    let df = d as f64;
    if !(0.0 <= j && j <= n && n < j + df / 2.0) {
        return Err(ProfileError::Regime(format!(
            "theta=1 maximizer needs 0 <= j <= n < j + d/2 (got j = {j}, n = {n}, d = {d})"
        )));
    }
    if n >= j / 2.0 + df / 2.0 {
        return Err(ProfileError::RepresentationUnavailable(format!(
            "hypergeometric form needs n < j/2 + d/2 (got j = {j}, n = {n}, d = {d})"
        )));
    }
    let a = df / 2.0 - j / 2.0;
    let b = df / 2.0 - n + j / 2.0;
    let pref = special::gamma(a)? * special::gamma(b)?
        / (2f64.powf(j) * special::gamma_unchecked(df / 2.0) * special::gamma(df / 2.0 - n + j)?);
    Ok(pref * special::hyp2f1_neg(a, b, df / 2.0, rho * rho)?)
}

/// Fourier-side trial profile g_{jnε}(ξ) = ξ^{n−j} K_{n−j}(ξ) / (ξ²+ε²)^{n−j/2}
/// (its ε → 0 limit is the θ = 1 maximizer's Fourier data, up to a constant).
pub fn trial_minus_fourier(j: f64, n: f64, eps: f64) -> Result<RadialProfile, ProfileError> {
    if !(eps > 0.0) || !(n >= j && j >= 0.0) {
        return Err(ProfileError::Regime(format!(
            "trial family needs eps > 0 and n >= j >= 0 (got j = {j}, n = {n}, eps = {eps})"
        )));
    }
    let mu = n - j;
    let den_pow = n - j / 2.0;
    let profile = RadialProfile::new(
        move |xi: f64| {
            if xi <= 0.0 {
                return 0.0;
            }
            xi.powf(mu) * special::bessel_k_unchecked(mu, xi) / (xi * xi + eps * eps).powf(den_pow)
        },
        DecayClass::Exponential,
    )?;
    Ok(profile)
}

/// M_{jnε}(ρ): the Hankel transform of ξ ↦ ξⁿ K_{n−j}(ξ)/(ξ²+ε²)^{n−j/2},
/// i.e. the position profile of Dʲ applied to the trial function.
pub fn m_profile(
    j: f64,
    n: f64,
    eps: f64,
    d: u32,
    rho: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, ProfileError> {
    if !(eps > 0.0) || !(n >= j && j >= 0.0) {
        return Err(ProfileError::Regime(format!(
            "M profile needs eps > 0 and n >= j >= 0 (got j = {j}, n = {n}, eps = {eps})"
        )));
    }
    let mu = n - j;
    let den_pow = n - j / 2.0;
    let weighted = RadialProfile::new(
        move |xi: f64| {
            if xi <= 0.0 {
                return 0.0;
            }
            xi.powf(n) * special::bessel_k_unchecked(mu, xi) / (xi * xi + eps * eps).powf(den_pow)
        },
        DecayClass::Exponential,
    )?;
    Ok(radial::hankel_inverse_ft(&weighted, d, rho, cfg)?)
}

/// Elementary closed forms of the three Table II rows that reduce to
/// elementary functions (used as oracles for the H/G evaluations).
pub fn elementary_f(d: u32, j: f64, n: f64, rho: f64) -> Option<f64> {
    let is = |v: f64, w: f64| (v - w).abs() < 1e-12;
    if d == 1 && is(j, 0.0) && is(n, 1.0) {
        return Some((PI / 2.0f64).sqrt() * (-rho).exp());
    }
    if d == 1 && is(j, 0.0) && is(n, 2.0) {
        let u = rho / 2f64.sqrt();
        return Some(PI.sqrt() / 2.0 * (-u).exp() * (u.cos() + u.sin()));
    }
    if d == 3 && is(j, 0.0) && is(n, 2.0) {
        let u = rho / 2f64.sqrt();
        if rho == 0.0 {
            return Some((PI / 2.0f64).sqrt() / 2f64.sqrt());
        }
        return Some((PI / 2.0f64).sqrt() * (-u).exp() * u.sin() / rho);
    }
    None
}
