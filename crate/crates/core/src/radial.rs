//! Radial integration machinery: d-dimensional radial integrals, the
//! beta-type closed forms, radial inverse Fourier (Hankel-kernel) transforms,
//! weighted Lʳ norms of radial profiles, and the Macdonald-kernel transform.

use crate::error::{QuadError, RadialError};
use crate::quad;
use crate::special::{self, Order};
use std::f64::consts::PI;
use std::sync::Arc;

/// How a radial profile decays at infinity; used to pick tail strategies and
/// to check integrability up front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayClass {
    /// |G(ξ)| = O(e^{−cξ}) for some c > 0.
    Exponential,
    /// |G(ξ)| = O(ξ^{−p}).
    Algebraic { p: f64 },
    /// Sign-changing with envelope O(ξ^{−p}) (Hankel images of algebraic data).
    OscillatoryAlgebraic { p: f64 },
}

impl DecayClass {
    fn envelope_exponent(&self) -> Option<f64> {
        match self {
            DecayClass::Exponential => None,
            DecayClass::Algebraic { p } | DecayClass::OscillatoryAlgebraic { p } => Some(*p),
        }
    }
}

/// Lʳ exponent, r ∈ [1, ∞].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LrExponent {
    Finite(f64),
    Infinity,
}

/// A real-valued radial map on (0, ∞) supplied as a callable.
///
/// The callable must be safe to evaluate from multiple threads.
#[derive(Clone)]
pub struct RadialProfile {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub value_at_zero: Option<f64>,
    pub decay: DecayClass,
    /// Abscissae of narrow features the adaptive quadrature must not skip.
    pub breakpoints: Vec<f64>,
}

impl std::fmt::Debug for RadialProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RadialProfile")
            .field("value_at_zero", &self.value_at_zero)
            .field("decay", &self.decay)
            .finish()
    }
}

impl RadialProfile {
    /// Builds a profile and spot-checks the declared decay class at three
    /// large abscissae (a tripwire, not a proof).
    pub fn new<F>(eval: F, decay: DecayClass) -> Result<Self, RadialError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let profile = Self::new_unchecked(eval, decay);
        profile.spot_check()?;
        Ok(profile)
    }

    /// Skips the decay spot check; for wrappers whose decay is known exactly.
    pub fn new_unchecked<F>(eval: F, decay: DecayClass) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        RadialProfile { eval: Arc::new(eval), value_at_zero: None, decay, breakpoints: Vec::new() }
    }

    pub fn with_value_at_zero(mut self, v: f64) -> Self {
        self.value_at_zero = Some(v);
        self
    }

    pub fn with_breakpoints(mut self, pts: Vec<f64>) -> Self {
        self.breakpoints = pts;
        self
    }

    /// Merges default panel edges with the profile's declared breakpoints.
    fn panel_edges(&self, base: &[f64]) -> Vec<f64> {
        let hi = *base.last().unwrap();
        let mut pts: Vec<f64> = base.to_vec();
        pts.extend(self.breakpoints.iter().copied().filter(|&b| b > 0.0 && b < hi));
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        pts
    }

    #[inline]
    pub fn eval(&self, xi: f64) -> f64 {
        (self.eval)(xi)
    }

    fn spot_check(&self) -> Result<(), RadialError> {
        match self.decay {
            DecayClass::Exponential => {
                let near = self.eval(16.0).abs().max(self.eval(24.0).abs());
                let far = self.eval(48.0).abs();
                if far > near.max(1e-280) {
                    return Err(RadialError::DecayMismatch(
                        "profile grows between xi = 24 and xi = 48 but claims exponential decay",
                    ));
                }
            }
            DecayClass::Algebraic { p } => {
                let v16 = self.eval(16.0).abs() * 16f64.powf(p);
                let v48 = self.eval(48.0).abs() * 48f64.powf(p);
                if v48 > 30.0 * (v16 + 1e-250) {
                    return Err(RadialError::DecayMismatch(
                        "sampled values exceed the declared algebraic envelope",
                    ));
                }
            }
            // Pointwise checks are meaningless next to kernel zeros.
            DecayClass::OscillatoryAlgebraic { .. } => {}
        }
        Ok(())
    }
}

/// Every numeric knob the quadratures use.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
    pub osc_accel_terms: usize,
    pub truncation_safety: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-11,
            rel_tol: 1e-10,
            max_panels: 4096,
            osc_accel_terms: 28,
            truncation_safety: 10.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), RadialError> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(RadialError::BadConfig("tolerances must be positive"));
        }
        if self.max_panels < 16 {
            return Err(RadialError::BadConfig("max_panels must be at least 16"));
        }
        Ok(())
    }

    /// A loosened copy for inner/nested quadratures.
    pub fn relaxed(&self, factor: f64) -> Self {
        QuadratureConfig {
            abs_tol: self.abs_tol * factor,
            rel_tol: self.rel_tol * factor,
            ..*self
        }
    }
}

/// Surface constant of the d-sphere: 2 π^{d/2} / Γ(d/2).
pub fn sphere_factor(d: u32) -> f64 {
    2.0 * PI.powf(d as f64 / 2.0) / special::gamma_unchecked(d as f64 / 2.0)
}

/// Cutoff beyond which an exponential-class profile is numerically negligible.
fn exponential_cutoff(g: &RadialProfile, power: f64, cfg: &QuadratureConfig) -> f64 {
    let mut cut = 40.0;
    let floor = cfg.abs_tol / cfg.truncation_safety / 1e3;
    while cut < 720.0 {
        if g.eval(cut).abs() * cut.powf(power.max(0.0)) < floor {
            return cut;
        }
        cut += 20.0;
    }
    720.0
}

/// ∫_{ℝᵈ} G(|k|) dk = (2 π^{d/2}/Γ(d/2)) ∫₀^∞ ξ^{d−1} G(ξ) dξ.
pub fn radial_integral(
    g: &RadialProfile,
    d: u32,
    cfg: &QuadratureConfig,
) -> Result<f64, RadialError> {
    cfg.validate()?;
    let dm1 = (d - 1) as f64;
    let f = {
        let prof = g.clone();
        move |xi: f64| if xi <= 0.0 { 0.0 } else { xi.powf(dm1) * prof.eval(xi) }
    };
    let (head_value, head_end) = match g.decay {
        DecayClass::Exponential => {
            let cut = exponential_cutoff(g, dm1, cfg);
            let pts = g.panel_edges(&[0.0, 0.5, 2.0, 8.0, cut]);
            let q =
                quad::integrate_segments(&f, &pts, cfg.abs_tol, cfg.rel_tol, cfg.max_panels)?;
            return Ok(sphere_factor(d) * q.value);
        }
        DecayClass::Algebraic { p } | DecayClass::OscillatoryAlgebraic { p } => {
            if p - dm1 <= 1.0 + 1e-12 {
                return Err(RadialError::Divergent(
                    "xi^{d-1} G(xi) decays too slowly at infinity",
                ));
            }
            let r = 48.0;
            let pts = g.panel_edges(&[0.0, 0.5, 2.0, 8.0, r]);
            let q =
                quad::integrate_segments(&f, &pts, cfg.abs_tol, cfg.rel_tol, cfg.max_panels)?;
            (q.value, r)
        }
    };
    let p_tail = g.decay.envelope_exponent().unwrap() - dm1;
    let tail =
        quad::integrate_tail_algebraic(&f, head_end, p_tail, cfg.abs_tol, cfg.rel_tol, cfg.max_panels)?;
    Ok(sphere_factor(d) * (head_value + tail.value))
}

/// Closed form of ∫₀^∞ ξ^{2au−1} (1+ξ^{2b})^{−u} dξ = Γ(au/b) Γ(u−au/b) / (2b Γ(u)).
pub fn beta_integral(a: f64, b: f64, u: f64) -> Result<f64, RadialError> {
    if !(b > a && a > 0.0 && u > 0.0) {
        return Err(RadialError::Domain("beta_integral needs b > a > 0, u > 0"));
    }
    let x = a * u / b;
    Ok(special::gamma(x)? * special::gamma(u - x)? / (2.0 * b * special::gamma(u)?))
}

/// Integer-u variant: π (1−au/b)_{u−1} / (2b (u−1)! sin(π au/b)), with the
/// ε → 0 product formula when au/b is an integer in {1, …, u−1}.
pub fn beta_integral_integer(a: f64, b: f64, u: u32) -> Result<f64, RadialError> {
    if !(b > a && a > 0.0) || u == 0 {
        return Err(RadialError::Domain("beta_integral_integer needs b > a > 0, u >= 1"));
    }
    let x = a * u as f64 / b;
    let fact: f64 = (1..u).map(|i| i as f64).product();
    if (x - x.round()).abs() < 1e-12 && x.round() >= 1.0 && (x.round() as u32) <= u - 1 {
        let m = x.round() as i64;
        // lim_{ε→0} π (1−m−ε)_{u−1} / sin(π(m+ε)) = (−1)^{m+1} Π_{i≠m−1} (1−m+i)
        let mut prod = 1.0;
        for i in 0..=(u as i64 - 2) {
            if i == m - 1 {
                continue;
            }
            prod *= (1 - m + i) as f64;
        }
        let sign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * prod / (2.0 * b * fact));
    }
    Ok(PI * special::pochhammer(1.0 - x, u - 1) / (2.0 * b * fact * (PI * x).sin()))
}

/// I(j,n) = ∫_{ℝᵈ} |k|^{2j} (1+|k|^{2n})^{−1} dk
///        = π^{d/2+1} / (Γ(d/2) n sin(π (j/n + d/2n))).
pub fn i_jn(j: f64, n: f64, d: u32) -> Result<f64, RadialError> {
    if n <= 0.0 || j < 0.0 {
        return Err(RadialError::Domain("i_jn needs n > 0, j >= 0"));
    }
    let theta = j / n + d as f64 / (2.0 * n);
    if theta >= 1.0 {
        return Err(RadialError::Divergent("i_jn diverges when j/n + d/2n >= 1"));
    }
    let df = d as f64;
    Ok(PI.powf(df / 2.0 + 1.0) / (special::gamma_unchecked(df / 2.0) * n * (PI * theta).sin()))
}

/// The d-dimensional Hankel kernel J_{d/2−1}(x)/x^{d/2−1}, with its x → 0 limit.
#[inline]
pub fn hankel_kernel(d: u32, x: f64) -> f64 {
    match d {
        1 => (2.0 / PI).sqrt() * x.cos(),
        3 => {
            if x.abs() < 1e-5 {
                (2.0 / PI).sqrt() * (1.0 - x * x / 6.0)
            } else {
                (2.0 / PI).sqrt() * x.sin() / x
            }
        }
        _ => special::bessel_j_kernel(Order(d as f64 / 2.0 - 1.0), x)
            .expect("kernel order d/2-1 >= -1/2"),
    }
}

/// Limit value of the Hankel kernel at 0: 1/(2^{d/2−1} Γ(d/2)).
pub fn hankel_kernel_at_zero(d: u32) -> f64 {
    let nu = d as f64 / 2.0 - 1.0;
    1.0 / (2f64.powf(nu) * special::gamma_unchecked(nu + 1.0))
}

/// F(ρ) = ∫₀^∞ ξ^{d−1} [J_{d/2−1}(ρξ)/(ρξ)^{d/2−1}] G(ξ) dξ, the radial form
/// of the d-dimensional inverse Fourier transform of G(|k|).
pub fn hankel_inverse_ft(
    g: &RadialProfile,
    d: u32,
    rho: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, RadialError> {
    cfg.validate()?;
    if rho < 0.0 {
        return Err(RadialError::Domain("hankel_inverse_ft needs rho >= 0"));
    }
    let dm1 = (d - 1) as f64;
    if let Some(p) = g.decay.envelope_exponent() {
        if p - dm1 <= 1.0 + 1e-12 && rho == 0.0 {
            return Err(RadialError::Divergent("profile is not integrable against xi^{d-1}"));
        }
    }
    if rho == 0.0 {
        let moment = radial_integral(g, d, cfg)? / sphere_factor(d);
        return Ok(hankel_kernel_at_zero(d) * moment);
    }
    let prof = g.clone();
    let f = move |xi: f64| {
        if xi <= 0.0 {
            0.0
        } else {
            xi.powf(dm1) * hankel_kernel(d, rho * xi) * prof.eval(xi)
        }
    };
    match g.decay {
        DecayClass::Exponential => {
            let cut = exponential_cutoff(g, dm1, cfg);
            // Pre-split so no panel holds more than ~1 kernel oscillation.
            let step = (PI / rho).min(cut / 8.0).max(1e-3);
            let mut pts = vec![0.0];
            let mut x = step.min(0.5);
            while x < cut {
                pts.push(x);
                x += step;
            }
            pts.push(cut);
            let pts = g.panel_edges(&pts);
            let q = quad::integrate_segments(&f, &pts, cfg.abs_tol, cfg.rel_tol, cfg.max_panels)?;
            Ok(q.value)
        }
        DecayClass::Algebraic { p } | DecayClass::OscillatoryAlgebraic { p } => {
            // Head by adaptive panels, oscillatory tail by zero-partition plus
            // alternating-series acceleration.
            if p - dm1 <= 0.0 {
                return Err(RadialError::Divergent("oscillatory tail with non-decaying envelope"));
            }
            let nu = Order(d as f64 / 2.0 - 1.0);
            let (k0, xi0) = {
                // Start the zero-partition at a kernel zero beyond xi = 12.
                let mut k = 1usize;
                loop {
                    let z = special::bessel_j_zero(nu, k) / rho;
                    if z > 12.0 {
                        break (k, z);
                    }
                    k += 1;
                }
            };
            let step = (PI / rho).min(2.0).max(1e-3);
            let mut pts = vec![0.0];
            let mut x = step.min(0.5);
            while x < xi0 {
                pts.push(x);
                x += step;
            }
            pts.push(xi0);
            let head = quad::integrate_segments(&f, &pts, cfg.abs_tol, cfg.rel_tol, cfg.max_panels)?;
            // Panels between consecutive kernel zeros alternate in sign.
            let mut terms = Vec::with_capacity(cfg.osc_accel_terms);
            let mut lo = xi0;
            for k in (k0 + 1)..(k0 + 1 + cfg.osc_accel_terms) {
                let hi = special::bessel_j_zero(nu, k) / rho;
                let (v, _, _) = quad::gk21(&f, lo, hi);
                terms.push(v);
                lo = hi;
            }
            let (tail, tail_err) = quad::euler_accelerate(&terms);
            let total = head.value + tail;
            if tail_err > (cfg.abs_tol * 1e3).max(cfg.rel_tol * 1e3 * total.abs()) {
                return Err(RadialError::Quad(QuadError::ToleranceNotReached {
                    err: tail_err,
                    tol: cfg.abs_tol * 1e3,
                }));
            }
            Ok(total)
        }
    }
}

/// Weighted Lʳ norm of a radial profile:
/// ((2π^{d/2}/Γ(d/2)) ∫₀^∞ ρ^{d−1} |F(ρ)|^r dρ)^{1/r}, or the sup for r = ∞.
pub fn lr_norm_radial(
    f: &RadialProfile,
    r: LrExponent,
    d: u32,
    cfg: &QuadratureConfig,
) -> Result<f64, RadialError> {
    cfg.validate()?;
    match r {
        LrExponent::Infinity => Ok(sup_norm(f)),
        LrExponent::Finite(r) => {
            if r < 1.0 {
                return Err(RadialError::Domain("lr_norm_radial needs r >= 1"));
            }
            let power = {
                let prof = f.clone();
                move |rho: f64| prof.eval(rho).abs().powf(r)
            };
            let decay = match f.decay {
                DecayClass::Exponential => DecayClass::Exponential,
                DecayClass::Algebraic { p } => DecayClass::Algebraic { p: p * r },
                DecayClass::OscillatoryAlgebraic { p } => DecayClass::Algebraic { p: p * r },
            };
            let powered =
                RadialProfile::new_unchecked(power, decay).with_breakpoints(f.breakpoints.clone());
            let integral = radial_integral(&powered, d, cfg)?;
            Ok(integral.powf(1.0 / r))
        }
    }
}

/// Sup over an adaptive ρ-grid: 256 geometric samples plus golden-section
/// refinement around the three largest.
fn sup_norm(f: &RadialProfile) -> f64 {
    let rho_max = match f.decay {
        DecayClass::Exponential => 60.0,
        DecayClass::Algebraic { .. } | DecayClass::OscillatoryAlgebraic { .. } => 100.0,
    };
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(257);
    if let Some(v0) = f.value_at_zero {
        samples.push((0.0, v0.abs()));
    } else {
        samples.push((1e-9, f.eval(1e-9).abs()));
    }
    let ratio = (rho_max / 1e-3f64).powf(1.0 / 255.0);
    let mut rho = 1e-3;
    for _ in 0..256 {
        samples.push((rho, f.eval(rho).abs()));
        rho *= ratio;
    }
    let mut order: Vec<usize> = (0..samples.len()).collect();
    order.sort_by(|&a, &b| samples[b].1.partial_cmp(&samples[a].1).unwrap());
    let mut best = samples[order[0]].1;
    const GOLDEN: f64 = 0.618_033_988_749_894_8;
    for &idx in order.iter().take(3) {
        let lo = if idx == 0 { 0.0 } else { samples[idx - 1].0 };
        let hi = if idx + 1 < samples.len() { samples[idx + 1].0 } else { rho_max };
        let (mut a, mut b) = (lo, hi);
        let mut x1 = b - GOLDEN * (b - a);
        let mut x2 = a + GOLDEN * (b - a);
        let mut f1 = f.eval(x1).abs();
        let mut f2 = f.eval(x2).abs();
        for _ in 0..60 {
            if f1 < f2 {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + GOLDEN * (b - a);
                f2 = f.eval(x2).abs();
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - GOLDEN * (b - a);
                f1 = f.eval(x1).abs();
            }
            if (b - a).abs() < 1e-12 * (1.0 + b.abs()) {
                break;
            }
        }
        best = best.max(f1).max(f2);
    }
    best
}

/// Whether K_μ(|k|)/|k|^σ is in L¹(ℝᵈ) (needs |μ| + σ < d).
pub fn macdonald_l1_admissible(mu: f64, sigma: f64, d: u32) -> bool {
    mu.abs() + sigma < d as f64
}

/// Whether K_μ(|k|)/|k|^σ is in L²(ℝᵈ) (needs 2(|μ| + σ) < d).
pub fn macdonald_l2_admissible(mu: f64, sigma: f64, d: u32) -> bool {
    2.0 * (mu.abs() + sigma) < d as f64
}

/// Closed form of the radial inverse Fourier transform of K_μ(|k|)/|k|^σ:
///
/// F(ρ) = Γ(d/2+μ/2−σ/2) Γ(d/2−μ/2−σ/2) / (2^{σ+1−d/2} Γ(d/2))
///        · ₂F₁(d/2+μ/2−σ/2, d/2−μ/2−σ/2; d/2; −ρ²),
///
/// reducing to 2^{d/2−μ−1} Γ(d/2−μ) (1+ρ²)^{μ−d/2} when μ = σ.
pub fn macdonald_transform(mu: f64, sigma: f64, d: u32, rho: f64) -> Result<f64, RadialError> {
    if !macdonald_l1_admissible(mu, sigma, d) {
        return Err(RadialError::Domain("macdonald_transform needs |mu| + sigma < d"));
    }
    if rho < 0.0 {
        return Err(RadialError::Domain("macdonald_transform needs rho >= 0"));
    }
    let df = d as f64;
    let a = df / 2.0 + mu / 2.0 - sigma / 2.0;
    let b = df / 2.0 - mu / 2.0 - sigma / 2.0;
    let pref = special::gamma(a)? * special::gamma(b)?
        / (2f64.powf(sigma + 1.0 - df / 2.0) * special::gamma_unchecked(df / 2.0));
    Ok(pref * special::hyp2f1_neg(a, b, df / 2.0, rho * rho)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn radial_integral_gaussian_d2() {
        let g = RadialProfile::new(|x| (-x * x).exp(), DecayClass::Exponential).unwrap();
        assert!(rel(radial_integral(&g, 2, &cfg()).unwrap(), PI) < 1e-10);
    }

    #[test]
    fn radial_integral_lorentzian_d1() {
        let g =
            RadialProfile::new(|x| 1.0 / (1.0 + x * x), DecayClass::Algebraic { p: 2.0 }).unwrap();
        assert!(rel(radial_integral(&g, 1, &cfg()).unwrap(), PI) < 1e-9);
    }

    #[test]
    fn radial_integral_exp_over_xi_d3() {
        let g = RadialProfile::new(|x| (-x).exp() / x, DecayClass::Exponential).unwrap();
        assert!(rel(radial_integral(&g, 3, &cfg()).unwrap(), 4.0 * PI) < 1e-9);
    }

    #[test]
    fn radial_integral_divergence_detected() {
        let g =
            RadialProfile::new(|x| 1.0 / (1.0 + x * x), DecayClass::Algebraic { p: 2.0 }).unwrap();
        assert!(matches!(radial_integral(&g, 3, &cfg()), Err(RadialError::Divergent(_))));
    }

    #[test]
    fn scaling_covariance() {
        // radial_integral(G(λ·)) = λ^{-d} radial_integral(G)
        let base = radial_integral(
            &RadialProfile::new(|x| (-x).exp(), DecayClass::Exponential).unwrap(),
            2,
            &cfg(),
        )
        .unwrap();
        for &lam in &[0.5f64, 2.0, 3.7] {
            let scaled = radial_integral(
                &RadialProfile::new(move |x| (-lam * x).exp(), DecayClass::Exponential).unwrap(),
                2,
                &cfg(),
            )
            .unwrap();
            assert!(rel(scaled, base / (lam * lam)) < 1e-10, "lambda = {lam}");
        }
    }

    #[test]
    fn beta_integral_values() {
        assert!(rel(beta_integral(0.5, 1.0, 1.0).unwrap(), PI / 2.0) < 1e-14);
        assert!(rel(beta_integral(1.0 / 3.0, 1.0, 3.0).unwrap(), 0.25) < 1e-13);
        assert!(matches!(beta_integral(1.0, 0.5, 1.0), Err(RadialError::Domain(_))));
    }

    #[test]
    fn beta_integral_integer_degenerate() {
        // a=1/3, b=1, u=3 has au/b = 1: the ε → 0 limit formula applies.
        let v = beta_integral_integer(1.0 / 3.0, 1.0, 3).unwrap();
        assert!(rel(v, 0.25) < 1e-13);
        // reduces to the u=1 case
        assert!(rel(beta_integral_integer(0.5, 1.0, 1).unwrap(), PI / 2.0) < 1e-14);
    }

    #[test]
    fn beta_integral_integer_matches_general() {
        let triples = [(0.3, 1.1, 2u32), (0.7, 2.0, 4), (0.21, 0.9, 5), (1.4, 3.0, 3)];
        for (a, b, u) in triples {
            let lhs = beta_integral_integer(a, b, u).unwrap();
            let rhs = beta_integral(a, b, u as f64).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "a={a} b={b} u={u}");
        }
    }

    #[test]
    fn i_jn_values() {
        // d=1, j=0, n=1: ∫ dk/(1+k²) = π
        assert!(rel(i_jn(0.0, 1.0, 1).unwrap(), PI) < 1e-13);
        assert!(matches!(i_jn(0.5, 1.0, 1), Err(RadialError::Divergent(_))));
        // vs radial integral of |k|^{2j}/(1+|k|^{2n}) for d=3, j=0, n=2
        let g = RadialProfile::new(|x| 1.0 / (1.0 + x.powi(4)), DecayClass::Algebraic { p: 4.0 })
            .unwrap();
        let by_quad = radial_integral(&g, 3, &cfg()).unwrap();
        assert!(rel(i_jn(0.0, 2.0, 3).unwrap(), by_quad) < 1e-9);
    }

    #[test]
    fn hankel_lorentzian_d1() {
        // F(ρ) = √(π/2) e^{−ρ} for G = 1/(1+ξ²), d = 1.
        let g =
            RadialProfile::new(|x| 1.0 / (1.0 + x * x), DecayClass::Algebraic { p: 2.0 }).unwrap();
        for &rho in &[0.0f64, 0.3, 1.0, 2.5, 7.0] {
            let v = hankel_inverse_ft(&g, 1, rho, &cfg()).unwrap();
            let want = (PI / 2.0f64).sqrt() * (-rho).exp();
            assert!(rel(v, want) < 1e-8, "rho = {rho}: {v} vs {want}");
        }
    }

    #[test]
    fn hankel_at_zero_limit_kernel() {
        let g =
            RadialProfile::new(|x| 1.0 / (1.0 + x * x), DecayClass::Algebraic { p: 2.0 }).unwrap();
        let v = hankel_inverse_ft(&g, 1, 0.0, &cfg()).unwrap();
        assert!(rel(v, (PI / 2.0f64).sqrt()) < 1e-10);
    }

    #[test]
    fn hankel_macdonald_d3() {
        // G = K₀(ξ): transform ∝ (1+ρ²)^{−3/2} (μ = σ = 0, d = 3).
        let g = RadialProfile::new(
            |x| special::bessel_k(Order(0.0), x).unwrap(),
            DecayClass::Exponential,
        )
        .unwrap();
        for &rho in &[0.0f64, 1.0, 2.0] {
            let v = hankel_inverse_ft(&g, 3, rho, &cfg()).unwrap();
            let want = macdonald_transform(0.0, 0.0, 3, rho).unwrap();
            assert!(rel(v, want) < 1e-8, "rho = {rho}");
        }
    }

    #[test]
    fn lr_norm_values() {
        let f = RadialProfile::new(|x| (-x).exp(), DecayClass::Exponential).unwrap();
        assert!(rel(lr_norm_radial(&f, LrExponent::Finite(2.0), 1, &cfg()).unwrap(), 1.0) < 1e-10);

        let f2 = RadialProfile::new(|x| (PI / 2.0f64).sqrt() * (-x).exp(), DecayClass::Exponential)
            .unwrap()
            .with_value_at_zero((PI / 2.0f64).sqrt());
        let sup = lr_norm_radial(&f2, LrExponent::Infinity, 1, &cfg()).unwrap();
        assert!(rel(sup, (PI / 2.0f64).sqrt()) < 1e-9);

        // d=2, F = 1/(1+ρ²), r=4 → (π/3)^{1/4}
        let f3 =
            RadialProfile::new(|x| 1.0 / (1.0 + x * x), DecayClass::Algebraic { p: 2.0 }).unwrap();
        let v = lr_norm_radial(&f3, LrExponent::Finite(4.0), 2, &cfg()).unwrap();
        assert!(rel(v, (PI / 3.0).powf(0.25)) < 1e-9);
    }

    #[test]
    fn sup_of_nonnegative_hankel_is_value_at_zero() {
        // For G ≥ 0 integrable the transform attains its sup at ρ = 0.
        let c = cfg();
        let g = RadialProfile::new(|x| 1.0 / (1.0 + x.powi(4)), DecayClass::Algebraic { p: 4.0 })
            .unwrap();
        let f0 = hankel_inverse_ft(&g, 1, 0.0, &c).unwrap();
        let transform = RadialProfile::new(
            move |rho| {
                let gg = RadialProfile::new(
                    |x| 1.0 / (1.0 + x.powi(4)),
                    DecayClass::Algebraic { p: 4.0 },
                )
                .unwrap();
                hankel_inverse_ft(&gg, 1, rho, &QuadratureConfig::default().relaxed(10.0)).unwrap()
            },
            DecayClass::Exponential,
        )
        .unwrap()
        .with_value_at_zero(f0);
        let sup = lr_norm_radial(&transform, LrExponent::Infinity, 1, &c).unwrap();
        assert!((sup - f0).abs() < 1e-9 * f0);
    }

    #[test]
    fn macdonald_transform_values() {
        // μ = σ = 0, d = 3, ρ = 1 → √2 Γ(3/2) 2^{−3/2}
        let v = macdonald_transform(0.0, 0.0, 3, 1.0).unwrap();
        assert!(rel(v, 0.44311346272637900682) < 1e-12);
        assert!(rel(macdonald_transform(0.5, 0.5, 2, 0.7).unwrap(), 1.0267549477266416711) < 1e-12);
        assert!(rel(macdonald_transform(1.0, 1.0, 3, 2.0).unwrap(), 0.56049912163979286993) < 1e-12);
        assert!(rel(macdonald_transform(0.3, 0.1, 1, 1.4).unwrap(), 1.1284327645868776189) < 1e-12);
        // μ = σ closed form
        for &(mu, d) in &[(0.25f64, 2u32), (0.5, 3)] {
            let df = d as f64;
            for &rho in &[0.0f64, 1.3] {
                let want = 2f64.powf(df / 2.0 - mu - 1.0) * special::gamma(df / 2.0 - mu).unwrap()
                    / (1.0 + rho * rho).powf(df / 2.0 - mu);
                assert!(rel(macdonald_transform(mu, mu, d, rho).unwrap(), want) < 1e-12);
            }
        }
    }

    #[test]
    fn macdonald_admissibility() {
        assert!(macdonald_l1_admissible(0.5, 0.5, 2));
        assert!(!macdonald_l1_admissible(1.0, 1.0, 2));
        // boundary 2(|μ|+σ) = d is excluded
        assert!(!macdonald_l2_admissible(0.5, 0.5, 2));
        assert!(macdonald_l2_admissible(0.4, 0.5, 2));
        assert!(matches!(macdonald_transform(2.0, 1.5, 3, 1.0), Err(RadialError::Domain(_))));
    }

    #[test]
    fn decay_spot_check_trips() {
        assert!(RadialProfile::new(|_| 1.0, DecayClass::Exponential).is_err());
        assert!(RadialProfile::new(|x| x.sqrt(), DecayClass::Algebraic { p: 2.0 }).is_err());
    }
}
