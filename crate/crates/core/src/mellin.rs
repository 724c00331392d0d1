//! Definition-faithful numerical evaluation of the Fox H-function and the
//! Meijer G-function by truncated vertical-contour (Mellin–Barnes)
//! integration: pole bookkeeping, contour selection, the α-decay
//! admissibility check, and parameter simplification.
//!
//! The integrand along the line `Re s = c` is
//!
//! ```text
//! z^s · Π Γ(1 − aℓ + Aℓ s) Π Γ(bℓ − Bℓ s)
//!       ─────────────────────────────────────
//!       Π Γ(a*ℓ − A*ℓ s) Π Γ(1 − b*ℓ + B*ℓ s)
//! ```
//!
//! with the `(a, A)` group's poles (the "left" set 𝓛) kept left of the
//! contour and the `(b, B)` group's poles (the "right" set 𝓡) right of it.

use crate::error::{MellinError, QuadError, SpecialError};
use crate::quad;
use crate::radial::QuadratureConfig;
use crate::special::log_gamma_vertical;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub type Rational = num_rational::Ratio<i64>;

/// Hard cap on the truncation height of the contour integral.
const MAX_TRUNCATION: f64 = 400.0;

/// Parameter groups of a Fox H-function, each entry a pair (coefficient,
/// scale) with scale > 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HFunctionSpec {
    pub upper_left: Vec<(f64, f64)>,
    pub upper_right: Vec<(f64, f64)>,
    pub lower_left: Vec<(f64, f64)>,
    pub lower_right: Vec<(f64, f64)>,
}

impl HFunctionSpec {
    pub fn validate(&self) -> Result<(), MellinError> {
        let groups =
            [&self.upper_left, &self.upper_right, &self.lower_left, &self.lower_right];
        if groups.iter().all(|g| g.is_empty()) {
            return Err(MellinError::EmptySpec);
        }
        for g in groups {
            for &(_, scale) in g {
                if !(scale > 0.0) {
                    return Err(MellinError::BadScale(scale));
                }
            }
        }
        let alpha = self.alpha();
        if !(alpha > 0.0) {
            return Err(MellinError::NonpositiveAlpha(alpha));
        }
        // Left and right pole sets must be separable (hence disjoint).
        self.choose_contour()?;
        Ok(())
    }

    /// α = ΣA − ΣA* + ΣB − ΣB*, the exponential decay rate (×π/2) on the line.
    pub fn alpha(&self) -> f64 {
        let s = |g: &[(f64, f64)]| g.iter().map(|&(_, sc)| sc).sum::<f64>();
        s(&self.upper_left) - s(&self.upper_right) + s(&self.lower_left) - s(&self.lower_right)
    }

    /// ω = Σa + Σa* − Σb − Σb* (power-law factor exponent is −ω + cΩ).
    fn omega(&self) -> f64 {
        let s = |g: &[(f64, f64)]| g.iter().map(|&(c, _)| c).sum::<f64>();
        s(&self.upper_left) + s(&self.upper_right) - s(&self.lower_left) - s(&self.lower_right)
    }

    /// Ω = ΣA + ΣA* − ΣB − ΣB*.
    fn cap_omega(&self) -> f64 {
        let s = |g: &[(f64, f64)]| g.iter().map(|&(_, sc)| sc).sum::<f64>();
        s(&self.upper_left) + s(&self.upper_right) - s(&self.lower_left) - s(&self.lower_right)
    }

    /// First `count` left poles {(−1 + aℓ − k)/Aℓ}, rightmost first.
    pub fn left_poles(&self, count: usize) -> Vec<f64> {
        let mut poles = Vec::new();
        for &(a, sc) in &self.upper_left {
            for k in 0..count {
                poles.push((a - 1.0 - k as f64) / sc);
            }
        }
        poles.sort_by(|x, y| y.partial_cmp(x).unwrap());
        poles.truncate(count);
        poles
    }

    /// First `count` right poles {(bℓ + k)/Bℓ}, leftmost first.
    pub fn right_poles(&self, count: usize) -> Vec<f64> {
        let mut poles = Vec::new();
        for &(b, sc) in &self.lower_left {
            for k in 0..count {
                poles.push((b + k as f64) / sc);
            }
        }
        poles.sort_by(|x, y| x.partial_cmp(y).unwrap());
        poles.truncate(count);
        poles
    }

    /// Abscissa of the vertical contour: the midpoint of (max 𝓛, min 𝓡).
    pub fn choose_contour(&self) -> Result<f64, MellinError> {
        let max_left = self
            .upper_left
            .iter()
            .map(|&(a, sc)| (a - 1.0) / sc)
            .fold(f64::NEG_INFINITY, f64::max);
        let min_right =
            self.lower_left.iter().map(|&(b, sc)| b / sc).fold(f64::INFINITY, f64::min);
        if max_left >= min_right {
            return Err(MellinError::InseparablePoles { max_left, min_right });
        }
        if max_left == f64::NEG_INFINITY && min_right == f64::INFINITY {
            return Ok(0.0);
        }
        if max_left == f64::NEG_INFINITY {
            return Ok(min_right - 1.0);
        }
        if min_right == f64::INFINITY {
            return Ok(max_left + 1.0);
        }
        Ok(0.5 * (max_left + min_right))
    }

    fn log_integrand(&self, s: Complex64) -> Option<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for &(a, sc) in &self.upper_left {
            match log_gamma_vertical(Complex64::new(1.0 - a, 0.0) + s * sc) {
                Ok(lg) => sum += lg,
                Err(_) => return None, // contour through a left pole: caller's bug
            }
        }
        for &(b, sc) in &self.lower_left {
            match log_gamma_vertical(Complex64::new(b, 0.0) - s * sc) {
                Ok(lg) => sum += lg,
                Err(_) => return None,
            }
        }
        for &(a, sc) in &self.upper_right {
            match log_gamma_vertical(Complex64::new(a, 0.0) - s * sc) {
                Ok(lg) => sum -= lg,
                // 1/Γ vanishes at denominator poles; the integrand is 0 there.
                Err(SpecialError::GammaPole(_)) => return Some(Complex64::new(f64::NEG_INFINITY, 0.0)),
                Err(_) => return None,
            }
        }
        for &(b, sc) in &self.lower_right {
            match log_gamma_vertical(Complex64::new(1.0 - b, 0.0) + s * sc) {
                Ok(lg) => sum -= lg,
                Err(SpecialError::GammaPole(_)) => return Some(Complex64::new(f64::NEG_INFINITY, 0.0)),
                Err(_) => return None,
            }
        }
        Some(sum)
    }
}

/// Meijer G parameter groups (all scale factors 1), kept as exact rationals
/// so cancellation and table canonicalization are exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GFunctionSpec {
    pub upper_left: Vec<Rational>,
    pub upper_right: Vec<Rational>,
    pub lower_left: Vec<Rational>,
    pub lower_right: Vec<Rational>,
}

impl GFunctionSpec {
    pub fn alpha(&self) -> f64 {
        (self.upper_left.len() + self.lower_left.len()) as f64
            - (self.upper_right.len() + self.lower_right.len()) as f64
    }

    /// Lift to an H-function spec with unit scale factors.
    pub fn lift(&self) -> HFunctionSpec {
        let conv = |v: &[Rational]| -> Vec<(f64, f64)> {
            v.iter().map(|r| (ratio_to_f64(*r), 1.0)).collect()
        };
        HFunctionSpec {
            upper_left: conv(&self.upper_left),
            upper_right: conv(&self.upper_right),
            lower_left: conv(&self.lower_left),
            lower_right: conv(&self.lower_right),
        }
    }

    /// Canonical form: each sequence sorted ascending, every pair
    /// (aℓ₁ = b*ℓ₂) and every pair (a*ℓ₁ = bℓ₂) removed.
    pub fn simplify(&self) -> GFunctionSpec {
        let mut upper_left = self.upper_left.clone();
        let mut lower_right = self.lower_right.clone();
        cancel_pairs(&mut upper_left, &mut lower_right);
        let mut upper_right = self.upper_right.clone();
        let mut lower_left = self.lower_left.clone();
        cancel_pairs(&mut upper_right, &mut lower_left);
        upper_left.sort();
        upper_right.sort();
        lower_left.sort();
        lower_right.sort();
        GFunctionSpec { upper_left, upper_right, lower_left, lower_right }
    }
}

fn cancel_pairs(xs: &mut Vec<Rational>, ys: &mut Vec<Rational>) {
    let mut i = 0;
    while i < xs.len() {
        if let Some(k) = ys.iter().position(|y| *y == xs[i]) {
            ys.remove(k);
            xs.remove(i);
        } else {
            i += 1;
        }
    }
}

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Evaluates the H-function at z > 0 by truncated vertical-contour
/// integration. The result must be real for the conjugate-symmetric specs in
/// use; its imaginary residue is checked against the tolerance and dropped.
pub fn eval_h(spec: &HFunctionSpec, z: f64, cfg: &QuadratureConfig) -> Result<f64, MellinError> {
    if z < 0.0 {
        return Err(MellinError::BadArgument(z));
    }
    spec.validate()?;
    if z == 0.0 {
        return eval_h_limit_at_zero(spec, cfg);
    }
    let (value, im_residue, _) = contour_integral(spec, z, cfg)?;
    let scale = value.abs().max(1.0);
    if im_residue.abs() > 10.0 * cfg.rel_tol.max(cfg.abs_tol) * scale * 10.0 {
        return Err(MellinError::Quad(QuadError::ToleranceNotReached {
            err: im_residue.abs(),
            tol: 10.0 * cfg.rel_tol * scale,
        }));
    }
    Ok(value)
}

/// Evaluates the Meijer G-function at z > 0 (unit-scale H-function).
pub fn eval_g(spec: &GFunctionSpec, z: f64, cfg: &QuadratureConfig) -> Result<f64, MellinError> {
    eval_h(&spec.lift(), z, cfg)
}

/// Evaluates the contour integral along an explicitly chosen abscissa; the
/// value must not depend on `c` as long as the line separates the pole sets.
pub fn eval_h_at_contour(
    spec: &HFunctionSpec,
    z: f64,
    cfg: &QuadratureConfig,
    c: f64,
) -> Result<f64, MellinError> {
    spec.validate()?;
    if z <= 0.0 {
        return Err(MellinError::BadArgument(z));
    }
    contour_integral_at(spec, z, cfg, c).map(|(v, _, _)| v)
}

/// The two halves of the contour integral, computed independently (no
/// conjugate-symmetry shortcut) so realness is a genuine check.
fn contour_integral(
    spec: &HFunctionSpec,
    z: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64, f64), MellinError> {
    let c = spec.choose_contour()?;
    contour_integral_at(spec, z, cfg, c)
}

fn contour_integral_at(
    spec: &HFunctionSpec,
    z: f64,
    cfg: &QuadratureConfig,
    c: f64,
) -> Result<(f64, f64, f64), MellinError> {
    let alpha = spec.alpha();
    let ln_z = z.ln();
    let integrand = |t: f64| -> Complex64 {
        let s = Complex64::new(c, t);
        match spec.log_integrand(s) {
            Some(lg) => {
                let total = lg + s * ln_z;
                if total.re == f64::NEG_INFINITY {
                    Complex64::new(0.0, 0.0)
                } else {
                    total.exp()
                }
            }
            None => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    // Panel height resolves both the Γ-product oscillation (scale ~2) and the
    // z^{it} oscillation of frequency |ln z|.
    let height = (2.0f64).min(2.0 * PI * 2.5 / ln_z.abs().max(1.0)).max(0.05);
    let q_exp = -spec.omega() + c * spec.cap_omega();

    let mut acc = Complex64::new(0.0, 0.0);
    let mut t = 0.0;
    let scale0 = integrand(0.0).norm().max(integrand(height / 2.0).norm());
    if !scale0.is_finite() {
        return Err(MellinError::Quad(QuadError::NonFinite(0.0)));
    }
    let mut reached = false;
    while t < MAX_TRUNCATION {
        let hi = t + height;
        let (v_up, e_up) = panel_refined(&integrand, t, hi, cfg, 0)?;
        let (v_dn, e_dn) = panel_refined(&integrand, -hi, -t, cfg, 0)?;
        acc += v_up + v_dn;
        let _ = e_up + e_dn;
        t = hi;
        // Stirling envelope bound on the remaining tail, with the spec'd
        // safety factor.
        let phi_t = integrand(t).norm().max(integrand(t - 0.25 * height).norm());
        let growth = if q_exp > 0.0 { (1.0 + q_exp / (0.5 * PI * alpha * t.max(1.0))).powf(q_exp.min(80.0)).min(8.0) } else { 1.0 };
        let tail_bound = 2.0 * phi_t * (2.0 / (PI * alpha)) * growth * cfg.truncation_safety;
        let tol_here = cfg.abs_tol.max(cfg.rel_tol * acc.norm() / (2.0 * PI));
        if tail_bound < tol_here * 2.0 * PI && t >= 2.0 * height {
            reached = true;
            break;
        }
    }
    if !reached {
        return Err(MellinError::Quad(QuadError::ToleranceNotReached {
            err: f64::INFINITY,
            tol: cfg.abs_tol,
        }));
    }
    let value = acc / (2.0 * PI);
    Ok((value.re, value.im, c))
}

/// One complex panel with recursive bisection until its own error estimate is
/// below the local tolerance.
fn panel_refined(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
    depth: u32,
) -> Result<(Complex64, f64), MellinError> {
    let (v, e) = quad::gk21_complex(&f, a, b);
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(MellinError::Quad(QuadError::NonFinite(0.5 * (a + b))));
    }
    if e < cfg.abs_tol * 0.01 || e < cfg.rel_tol * 0.1 * v.norm() || depth >= 14 {
        if depth >= 14 && e > cfg.abs_tol {
            return Err(MellinError::Quad(QuadError::ToleranceNotReached {
                err: e,
                tol: cfg.abs_tol,
            }));
        }
        return Ok((v, e));
    }
    let mid = 0.5 * (a + b);
    let (v1, e1) = panel_refined(f, a, mid, cfg, depth + 1)?;
    let (v2, e2) = panel_refined(f, mid, b, cfg, depth + 1)?;
    Ok((v1 + v2, e1 + e2))
}

/// z → 0⁺ limit by exponent-aware Richardson extrapolation at z = 1e−12 and
/// 1e−15; the correction exponent is the gap between the two smallest right
/// poles.
fn eval_h_limit_at_zero(
    spec: &HFunctionSpec,
    cfg: &QuadratureConfig,
) -> Result<f64, MellinError> {
    let poles = spec.right_poles(8);
    let p1 = poles.first().copied().unwrap_or(f64::INFINITY);
    if p1 > 1e-12 {
        return Ok(0.0);
    }
    if p1 < -1e-12 {
        return Err(MellinError::BadArgument(0.0));
    }
    let q = poles
        .iter()
        .find(|&&p| p > 1e-9)
        .copied()
        .ok_or(MellinError::BadArgument(0.0))?;
    let (z1, z2) = (1e-12, 1e-15);
    let f1 = eval_h(spec, z1, cfg)?;
    let f2 = eval_h(spec, z2, cfg)?;
    let (w1, w2) = (z1.powf(q), z2.powf(q));
    Ok((f2 * w1 - f1 * w2) / (w1 - w2))
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

    /// Spec of F(ρ) = (prefactor) H(... | (ρ/2)²) for g = |k|^{2a−d}/(1+|k|^{2b}).
    fn profile_h_spec(a: f64, b: f64, d: u32) -> HFunctionSpec {
        HFunctionSpec {
            upper_left: vec![(1.0 - a / b, 1.0 / b)],
            upper_right: vec![],
            lower_left: vec![(0.0, 1.0), (1.0 - a / b, 1.0 / b)],
            lower_right: vec![(1.0 - d as f64 / 2.0, 1.0)],
        }
    }

    #[test]
    fn pole_sets_and_contour() {
        // a = 1/2, b = 1, d = 1 (the d=1 (0,1) profile)
        let spec = profile_h_spec(0.5, 1.0, 1);
        let left = spec.left_poles(3);
        assert_eq!(left, vec![-0.5, -1.5, -2.5]);
        let right = spec.right_poles(4);
        assert_eq!(right, vec![0.0, 0.5, 1.0, 1.5]);
        assert!((spec.choose_contour().unwrap() - -0.25).abs() < 1e-15);
        assert!((spec.alpha() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn empty_upper_left_pole_list() {
        let spec = HFunctionSpec {
            upper_left: vec![],
            upper_right: vec![],
            lower_left: vec![(0.0, 1.0)],
            lower_right: vec![],
        };
        assert!(spec.left_poles(4).is_empty());
        assert_eq!(spec.right_poles(3), vec![0.0, 1.0, 2.0]);
    }

    #[test]
    fn inseparable_poles_detected() {
        // upper_left gives max 𝓛 = 1, lower_left min 𝓡 = 0.
        let spec = HFunctionSpec {
            upper_left: vec![(2.0, 1.0)],
            upper_right: vec![],
            lower_left: vec![(0.0, 1.0)],
            lower_right: vec![],
        };
        assert!(matches!(
            spec.choose_contour(),
            Err(MellinError::InseparablePoles { .. })
        ));
        assert!(spec.validate().is_err());
    }

    #[test]
    fn alpha_invariant_rejects_empty() {
        let spec = HFunctionSpec {
            upper_left: vec![],
            upper_right: vec![],
            lower_left: vec![],
            lower_right: vec![],
        };
        assert!(matches!(spec.validate(), Err(MellinError::EmptySpec)));
    }

    #[test]
    fn fh_spec_reproduces_lorentzian_transform() {
        // F(ρ) = 2^{-1/2} H(...) = √(π/2) e^{−ρ} for a=1/2, b=1, d=1.
        let spec = profile_h_spec(0.5, 1.0, 1);
        for &rho in &[0.5f64, 1.0, 2.0, 5.0] {
            let z = (rho / 2.0) * (rho / 2.0);
            let h = eval_h(&spec, z, &cfg()).unwrap();
            let f = h / 2f64.sqrt();
            let want = (PI / 2.0).sqrt() * (-rho).exp();
            assert!(rel(f, want) < 1e-9, "rho = {rho}: {f} vs {want}");
        }
    }

    #[test]
    fn fh_spec_limit_at_zero() {
        // F(0) = √(π/2) for the same spec.
        let spec = profile_h_spec(0.5, 1.0, 1);
        let f0 = eval_h(&spec, 0.0, &cfg()).unwrap() / 2f64.sqrt();
        assert!(rel(f0, (PI / 2.0f64).sqrt()) < 1e-4);
    }

    #[test]
    fn g_spec_elementary_exponential() {
        // 2^{-1/2} G(—; 0, 1/2; — | (ρ/2)²) = √(π/2) e^{−ρ}
        let spec = GFunctionSpec {
            upper_left: vec![],
            upper_right: vec![],
            lower_left: vec![Rational::new(0, 1), Rational::new(1, 2)],
            lower_right: vec![],
        };
        for &rho in &[1.0f64, 2.0] {
            let z = (rho / 2.0) * (rho / 2.0);
            let g = eval_g(&spec, z, &cfg()).unwrap();
            assert!(rel(g / 2f64.sqrt(), (PI / 2.0).sqrt() * (-rho).exp()) < 1e-9);
        }
        assert!((spec.alpha() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn g_matches_lifted_h() {
        let spec = GFunctionSpec {
            upper_left: vec![Rational::new(1, 2)],
            upper_right: vec![],
            lower_left: vec![
                Rational::new(0, 1),
                Rational::new(1, 2),
                Rational::new(1, 2),
            ],
            lower_right: vec![Rational::new(1, 4), Rational::new(3, 4)],
        };
        let c = cfg();
        for &z in &[0.01f64, 0.5, 3.0] {
            let via_g = eval_g(&spec, z, &c).unwrap();
            let via_h = eval_h(&spec.lift(), z, &c).unwrap();
            assert!(rel(via_g, via_h) < 1e-12);
        }
    }

    #[test]
    fn simplify_cancels_and_sorts() {
        let raw = GFunctionSpec {
            upper_left: vec![Rational::new(1, 2), Rational::new(1, 6)],
            upper_right: vec![],
            lower_left: vec![Rational::new(1, 2), Rational::new(0, 1)],
            lower_right: vec![Rational::new(1, 2), Rational::new(-1, 4)],
        };
        let s = raw.simplify();
        assert_eq!(s.upper_left, vec![Rational::new(1, 6)]);
        assert_eq!(s.lower_right, vec![Rational::new(-1, 4)]);
        assert_eq!(s.lower_left, vec![Rational::new(0, 1), Rational::new(1, 2)]);
        // idempotent
        assert_eq!(s.simplify(), s);
    }

    #[test]
    fn simplify_is_permutation_invariant() {
        let a = GFunctionSpec {
            upper_left: vec![Rational::new(3, 4), Rational::new(1, 4)],
            upper_right: vec![],
            lower_left: vec![Rational::new(1, 2), Rational::new(0, 1)],
            lower_right: vec![],
        };
        let b = GFunctionSpec {
            upper_left: vec![Rational::new(1, 4), Rational::new(3, 4)],
            upper_right: vec![],
            lower_left: vec![Rational::new(0, 1), Rational::new(1, 2)],
            lower_right: vec![],
        };
        assert_eq!(a.simplify(), b.simplify());
    }

    #[test]
    fn cancellation_preserves_value() {
        // raw d=1 (0,1) spec before cancelling the (1/2, 1/2) pair
        let raw = GFunctionSpec {
            upper_left: vec![Rational::new(1, 2)],
            upper_right: vec![],
            lower_left: vec![Rational::new(0, 1), Rational::new(1, 2)],
            lower_right: vec![Rational::new(1, 2)],
        };
        let simplified = raw.simplify();
        assert!(simplified.upper_left.is_empty());
        assert!(simplified.lower_right.is_empty());
        let c = cfg();
        for &z in &[0.2f64, 1.0, 4.0] {
            let v1 = eval_g(&raw, z, &c).unwrap();
            let v2 = eval_g(&simplified, z, &c).unwrap();
            assert!(rel(v1, v2) < 1e-8, "z = {z}");
        }
    }

    #[test]
    fn contour_shift_invariance() {
        // Move the contour ±30% of the pole gap (staying between the pole
        // sets): the value must not change.
        let spec = profile_h_spec(0.5, 1.0, 1);
        let c = cfg();
        let z = 0.25;
        let base = eval_h(&spec, z, &c).unwrap();
        let gap = 0.5; // (max 𝓛, min 𝓡) = (−1/2, 0)
        for &shift in &[-0.3f64, 0.3] {
            let line = -0.25 + shift * gap;
            let v = eval_h_at_contour(&spec, z, &c, line).unwrap();
            assert!(rel(v, base) < 1e-8, "shift {shift}: {v} vs {base}");
        }
    }

    #[test]
    fn rejects_negative_argument() {
        let spec = profile_h_spec(0.5, 1.0, 1);
        assert!(matches!(eval_h(&spec, -1.0, &cfg()), Err(MellinError::BadArgument(_))));
    }
}
