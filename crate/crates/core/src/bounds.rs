//! Sharp constants and bound families for the L² Gagliardo–Nirenberg and
//! Sobolev inequalities: exact values in the closed-form regimes, the upper
//! bounds G₊/S₊ and G₊₊/S₊₊, the lower bounds G₋/S₋ (ε-regularized trial
//! family) and G₋₋/S₋₋, conversion between the two inequality families, and
//! the auxiliary constants (Riesz, Hardy–Littlewood–Sobolev, Hausdorff–Young).

use crate::error::BoundsError;
use crate::params::{classify, GnsParams, RExponent, Regime};
use crate::profiles::{self, EvalMethod};
use crate::quad;
use crate::radial::{self, DecayClass, LrExponent, QuadratureConfig, RadialProfile};
use crate::special;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

/// √((1−θ)^{1−θ} θ^θ): the t = 2 conversion factor between the two families.
pub fn weight(theta: f64) -> f64 {
    gn_sobolev_factor(theta, 2.0)
}

/// [(1−θ)^{1−θ} θ^θ]^{1/t}; S = factor · G whenever d/p − d/q + n ≠ 0.
/// Honors 0⁰ = 1 and x^{1/∞} = 1.
pub fn gn_sobolev_factor(theta: f64, t: f64) -> f64 {
    if t.is_infinite() {
        return 1.0;
    }
    ((1.0 - theta).powf(1.0 - theta) * theta.powf(theta)).powf(1.0 / t)
}

/// The rescaling λ that turns a Gagliardo–Nirenberg maximizer into a Sobolev
/// one: λ = ((θ/(1−θ))^{1/t} ‖f‖ / ‖Dⁿf‖)^{1/(d/p − d/q + n)}.
#[allow(clippy::too_many_arguments)]
pub fn optimal_lambda(
    theta: f64,
    t: f64,
    norm_l2: f64,
    norm_dn: f64,
    d: u32,
    p: f64,
    q: f64,
    n: f64,
) -> Result<f64, BoundsError> {
    if !(norm_l2 > 0.0 && norm_dn > 0.0) {
        return Err(BoundsError::Domain("optimal_lambda needs positive norms"));
    }
    let scale_exp = d as f64 / p - d as f64 / q + n;
    if scale_exp == 0.0 {
        return Err(BoundsError::Domain("optimal_lambda needs d/p - d/q + n != 0"));
    }
    if (theta == 0.0 || theta == 1.0) && t.is_finite() {
        return Err(BoundsError::LimitCase(
            "theta in {0,1} with finite t: lambda degenerates to 0 or infinity",
        ));
    }
    let ratio = (theta / (1.0 - theta)).powf(1.0 / t) * norm_l2 / norm_dn;
    Ok(ratio.powf(1.0 / scale_exp))
}

/// Sharp constants in the Hölder case j = θn: G = 1 and
/// S = √((1−θ)^{1−θ}θ^θ) for n > 0, S = 1/√2 for n = 0.
pub fn sharp_holder(p: &GnsParams) -> Result<(f64, f64), BoundsError> {
    let rep = classify(p)?;
    if rep.regime != Regime::Holder {
        return Err(BoundsError::Regime("sharp_holder needs j = theta*n".into()));
    }
    let g = 1.0;
    let s = if p.n.to_f64() > 0.0 { weight(p.theta.to_f64()) } else { (0.5f64).sqrt() };
    Ok((g, s))
}

/// The θ = 1 sharp constant (equal for both inequality families when n ≠ 0):
///
/// Γ(j,n) = (4π)^{−(n−j)/2} √(Γ(d/2−n+j)/Γ(d/2+n−j)) (Γ(d)/Γ(d/2))^{(n−j)/d}.
pub fn sharp_theta1(j: f64, n: f64, d: u32) -> Result<f64, BoundsError> {
    let df = d as f64;
    if !(0.0 <= j && j <= n && n < j + df / 2.0) {
        return Err(BoundsError::Domain("sharp_theta1 needs 0 <= j <= n < j + d/2"));
    }
    let s = n - j;
    Ok((4.0 * PI).powf(-s / 2.0)
        * (special::gamma(df / 2.0 - s)? / special::gamma(df / 2.0 + s)?).sqrt()
        * (special::gamma(df)? / special::gamma(df / 2.0)?).powf(s / df))
}

/// Sharp constants in the r = ∞ case θ = θ(j,n) = j/n + d/2n < 1:
///
/// S = 1/(2^{d/2} π^{d/4−1/2} √(Γ(d/2) n sin(πθ))), G = S/√((1−θ)^{1−θ}θ^θ).
///
/// Returns (θ(j,n), S, G).
pub fn sharp_linf(j: f64, n: f64, d: u32) -> Result<(f64, f64, f64), BoundsError> {
    if n <= 0.0 || j < 0.0 {
        return Err(BoundsError::Domain("sharp_linf needs n > 0, j >= 0"));
    }
    let df = d as f64;
    let theta = j / n + df / (2.0 * n);
    if theta >= 1.0 {
        return Err(BoundsError::Regime(format!(
            "sharp_linf needs theta(j,n) = j/n + d/2n < 1 (got {theta})"
        )));
    }
    let s = 1.0
        / (2f64.powf(df / 2.0)
            * PI.powf(df / 4.0 - 0.5)
            * (special::gamma_unchecked(df / 2.0) * n * (PI * theta).sin()).sqrt());
    Ok((theta, s, s / weight(theta)))
}

/// Upper bound G₊ (exact at j = θn and at θ = 1):
///
/// G₊ = (4π)^{−(θn−j)/2} √(Γ(d/2−θn+j)/Γ(d/2+θn−j)) (Γ(d)/Γ(d/2))^{(θn−j)/d},
/// S₊ = √((1−θ)^{1−θ}θ^θ) G₊. Needs θn − j < d/2.
pub fn upper_plus(j: f64, n: f64, theta: f64, d: u32) -> Result<(f64, f64), BoundsError> {
    let df = d as f64;
    let e = theta * n - j;
    if !(0.0 <= e) {
        return Err(BoundsError::Domain("upper_plus needs theta*n - j >= 0"));
    }
    if !(e < df / 2.0) {
        return Err(BoundsError::Regime(
            "upper_plus diverges at theta*n - j >= d/2".into(),
        ));
    }
    let g = (4.0 * PI).powf(-e / 2.0)
        * (special::gamma(df / 2.0 - e)? / special::gamma(df / 2.0 + e)?).sqrt()
        * (special::gamma(df)? / special::gamma(df / 2.0)?).powf(e / df);
    Ok((g, weight(theta) * g))
}

/// Upper bound S₊₊ = E·F/π^{(θn−j)/2} (Hölder + sharp Hausdorff–Young route),
/// exact at θ = j/n + d/2n and at j = θn; G₊₊ = S₊₊/√((1−θ)^{1−θ}θ^θ).
/// Needs θ < 1. Returns (S₊₊, G₊₊).
pub fn upper_plusplus(j: f64, n: f64, theta: f64, d: u32) -> Result<(f64, f64), BoundsError> {
    let df = d as f64;
    let e = theta * n - j;
    if !(0.0 <= e && e <= df / 2.0) {
        return Err(BoundsError::Domain("upper_plusplus needs 0 <= theta*n - j <= d/2"));
    }
    if !(theta < 1.0) {
        return Err(BoundsError::Regime("upper_plusplus diverges at theta = 1".into()));
    }
    // E = (1 + 2j/d − 2θn/d)^{d/4+j/2−θn/2} / (1 − 2j/d + 2θn/d)^{d/4−j/2+θn/2};
    // the numerator is 0^0 = 1 at the r = ∞ boundary.
    let e_factor = (1.0 - 2.0 * e / df).powf(df / 4.0 - e / 2.0)
        / (1.0 + 2.0 * e / df).powf(df / 4.0 + e / 2.0);
    let f_factor = if e <= 1e-14 {
        weight(theta)
    } else {
        (special::gamma(df * (1.0 - theta) / (2.0 * e))? * special::gamma(df * theta / (2.0 * e))?
            / (n * special::gamma_unchecked(df / 2.0) * special::gamma(df / (2.0 * e))?))
        .powf(e / df)
    };
    let spp = e_factor * f_factor / PI.powf(e / 2.0);
    Ok((spp, spp / weight(theta)))
}

/// A(j,n) = ‖f‖²_{L²} and B(j,n) = ‖Dⁿf‖²_{L²} for the r = ∞ maximizer
/// f = 𝓕⁻¹(|k|^j/(1+|k|^{2n})):
///
/// A = π^{d/2+1}(1 − j/n − d/2n)/(Γ(d/2) n sin(π(j/n + d/2n))),
/// B = π^{d/2+1}(j/n + d/2n)/(same denominator).
pub fn ab_helpers(j: f64, n: f64, d: u32) -> Result<(f64, f64), BoundsError> {
    if n <= 0.0 || j < 0.0 {
        return Err(BoundsError::Domain("ab_helpers needs n > 0, j >= 0"));
    }
    let df = d as f64;
    let ts = j / n + df / (2.0 * n);
    if ts >= 1.0 {
        return Err(BoundsError::Domain("ab_helpers needs j/n + d/2n < 1"));
    }
    let den = special::gamma_unchecked(df / 2.0) * n * (PI * ts).sin();
    let common = PI.powf(df / 2.0 + 1.0) / den;
    Ok((common * (1.0 - ts), common * ts))
}

/// Riesz-potential constant Z_n = Γ(d/2 − n/2)/(2ⁿ π^{d/2} Γ(n/2)), 0 < n < d.
pub fn riesz_constant(n: f64, d: u32) -> Result<f64, BoundsError> {
    let df = d as f64;
    if !(0.0 < n && n < df) {
        return Err(BoundsError::Domain("riesz_constant needs 0 < n < d"));
    }
    Ok(special::gamma(df / 2.0 - n / 2.0)?
        / (2f64.powf(n) * PI.powf(df / 2.0) * special::gamma(n / 2.0)?))
}

/// Sharp Hardy–Littlewood–Sobolev constant
/// N_n = π^{d/2−n/2} (Γ(n/2)/Γ(d/2−n/2)) √(Γ(d/2−n)/Γ(d/2+n)) (Γ(d)/Γ(d/2))^{n/d},
/// 0 < n < d/2. Satisfies Z_n · N_n = Γ̂(n), the θ = 1 sharp constant at j = 0.
pub fn hls_constant(n: f64, d: u32) -> Result<f64, BoundsError> {
    let df = d as f64;
    if !(0.0 < n && n < df / 2.0) {
        return Err(BoundsError::Domain("hls_constant needs 0 < n < d/2"));
    }
    Ok(PI.powf(df / 2.0 - n / 2.0) * (special::gamma(n / 2.0)? / special::gamma(df / 2.0 - n / 2.0)?)
        * (special::gamma(df / 2.0 - n)? / special::gamma(df / 2.0 + n)?).sqrt()
        * (special::gamma(df)? / special::gamma(df / 2.0)?).powf(n / df))
}

/// Sharp Hausdorff–Young constant
/// C_p = (2π)^{−(d/p − d/2)} [(1/p′)^{1/p′} / (1/p)^{1/p}]^{d/2}, 1 ≤ p ≤ 2.
pub fn hausdorff_young_constant(p: f64, d: u32) -> Result<f64, BoundsError> {
    if !(1.0 <= p && p <= 2.0) {
        return Err(BoundsError::Domain("hausdorff_young_constant needs p in [1,2]"));
    }
    let df = d as f64;
    let ip = 1.0 / p;
    let ipp = 1.0 - ip; // 1/p'
    Ok((2.0 * PI).powf(-(df * ip - df / 2.0)) * (ipp.powf(ipp) / ip.powf(ip)).powf(df / 2.0))
}

// ---------------------------------------------------------------------------
// Lower bound G₋: ε-grid scan of the regularized trial family
// ---------------------------------------------------------------------------

/// The ε-grid over which the trial-family quotient is maximized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Default for EpsGrid {
    fn default() -> Self {
        EpsGrid { start: 0.01, stop: 5.0, step: 0.01 }
    }
}

impl EpsGrid {
    pub fn coarse() -> Self {
        EpsGrid { start: 0.25, stop: 2.0, step: 0.25 }
    }

    pub fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step).round() as usize;
        (0..=count).map(|i| self.start + i as f64 * self.step).collect()
    }
}

// Inner tolerances of the ε-scan; the output is reported to three decimals.
const GM_NORM_REL_TOL: f64 = 1e-8;
const GM_LR_REL_TOL: f64 = 2e-5;

/// 20-point Gauss–Legendre rule on [−1, 1] (positive abscissae half).
#[rustfmt::skip]
const GL20_X: [f64; 10] = [
    0.076_526_521_133_497_333_75, 0.227_785_851_141_645_078_08,
    0.373_706_088_715_419_560_67, 0.510_867_001_950_827_098_00,
    0.636_053_680_726_515_025_45, 0.746_331_906_460_150_792_61,
    0.839_116_971_822_218_823_39, 0.912_234_428_251_325_905_87,
    0.963_971_927_277_913_791_27, 0.993_128_599_185_094_924_79,
];
#[rustfmt::skip]
const GL20_W: [f64; 10] = [
    0.152_753_387_130_725_850_70, 0.149_172_986_472_603_746_79,
    0.142_096_109_318_382_051_33, 0.131_688_638_449_176_626_90,
    0.118_194_531_961_518_417_31, 0.101_930_119_817_240_435_04,
    0.083_276_741_576_704_748_73, 0.062_672_048_334_109_063_57,
    0.040_601_429_800_386_941_33, 0.017_614_007_139_152_118_31,
];

/// Fixed quadrature nodes for M(ρ): the trial profile sampled once per ε, so
/// each ρ-evaluation is a weighted kernel sum.
struct TrialNodes {
    xi: Vec<f64>,
    wh: Vec<f64>, // weight × h(ξ)
    d: u32,
}

impl TrialNodes {
    fn build(j: f64, n: f64, eps: f64, d: u32) -> TrialNodes {
        let mu = n - j;
        let den_pow = n - j / 2.0;
        let h = |xi: f64| -> f64 {
            if xi <= 0.0 {
                return 0.0;
            }
            xi.powf(n + d as f64 - 1.0) * special::bessel_k_unchecked(mu, xi)
                / (xi * xi + eps * eps).powf(den_pow)
        };
        // Graded panels: geometric refinement through the ε-scale peak, then
        // uniform panels sized for kernel oscillation up to ρ ≈ 140.
        let mut edges = vec![0.0];
        let mut x = (eps / 4.0).min(0.05);
        while x < (8.0 * eps).min(1.0) {
            edges.push(x);
            x *= 2.0;
        }
        let start = *edges.last().unwrap();
        let cut = 46.0;
        let w = 0.05;
        let mut x = start + w;
        while x < cut {
            edges.push(x);
            x += w;
        }
        edges.push(cut);
        let mut xi = Vec::with_capacity((edges.len() - 1) * 20);
        let mut wh = Vec::with_capacity(xi.capacity());
        for pair in edges.windows(2) {
            let c = 0.5 * (pair[0] + pair[1]);
            let half = 0.5 * (pair[1] - pair[0]);
            for i in 0..10 {
                for sgn in [-1.0, 1.0] {
                    let node = c + sgn * half * GL20_X[i];
                    xi.push(node);
                    wh.push(half * GL20_W[i] * h(node));
                }
            }
        }
        TrialNodes { xi, wh, d }
    }

    #[inline]
    fn m(&self, rho: f64) -> f64 {
        let mut acc = 0.0;
        match self.d {
            1 => {
                for (x, w) in self.xi.iter().zip(&self.wh) {
                    acc += w * (rho * x).cos();
                }
                acc * (2.0 / PI).sqrt()
            }
            3 => {
                for (x, w) in self.xi.iter().zip(&self.wh) {
                    let t = rho * x;
                    acc += if t < 1e-6 { *w } else { w * t.sin() / t };
                }
                acc * (2.0 / PI).sqrt()
            }
            _ => {
                for (x, w) in self.xi.iter().zip(&self.wh) {
                    acc += w * radial::hankel_kernel(self.d, rho * x);
                }
                acc
            }
        }
    }

    fn m_at_zero(&self) -> f64 {
        let sum: f64 = self.wh.iter().sum();
        radial::hankel_kernel_at_zero(self.d) * sum
    }
}

/// The trial-family quotient Γ₋(j,n,θ | ε) = Y/(U^{1−θ} V^θ) at one ε.
fn gminus_at_eps(
    j: f64,
    n: f64,
    theta: f64,
    d: u32,
    r: LrExponent,
    eps: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, BoundsError> {
    let mu = n - j;
    let df = d as f64;
    let cd = radial::sphere_factor(d);
    let uv_pow = 2.0 * n - j;
    let ku = move |xi: f64| special::bessel_k_unchecked(mu, xi);

    // U, V: plain adaptive integrals with breakpoints around the ε-peak.
    let pts: Vec<f64> = {
        let mut p = vec![0.0, eps / 2.0, eps, 2.0 * eps, 4.0 * eps, 8.0 * eps, 1.0, 5.0, 12.0, 24.0, 46.0];
        p.sort_by(|a, b| a.partial_cmp(b).unwrap());
        p.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        p
    };
    let iu = |xi: f64| {
        if xi <= 0.0 {
            0.0
        } else {
            xi.powf(2.0 * n - 2.0 * j + df - 1.0) * ku(xi).powi(2)
                / (xi * xi + eps * eps).powf(uv_pow)
        }
    };
    let iv = |xi: f64| {
        if xi <= 0.0 {
            0.0
        } else {
            xi.powf(4.0 * n - 2.0 * j + df - 1.0) * ku(xi).powi(2)
                / (xi * xi + eps * eps).powf(uv_pow)
        }
    };
    let u2 = quad::integrate_segments(&iu, &pts, 1e-280, GM_NORM_REL_TOL, cfg.max_panels)?;
    let v2 = quad::integrate_segments(&iv, &pts, 1e-280, GM_NORM_REL_TOL, cfg.max_panels)?;
    let u = (cd * u2.value).sqrt();
    let v = (cd * v2.value).sqrt();

    let nodes = TrialNodes::build(j, n, eps, d);
    let y = match r {
        // Nonnegative Fourier data: the sup of the transform sits at ρ = 0.
        LrExponent::Infinity => nodes.m_at_zero(),
        LrExponent::Finite(r) => {
            let integrand = |rho: f64| rho.powf(df - 1.0) * nodes.m(rho).abs().powf(r);
            let mut acc = 0.0;
            let mut lo = 0.0;
            let mut hi = 4.0;
            loop {
                let block = quad::integrate(
                    &integrand,
                    lo,
                    hi,
                    acc.max(1e-280) * GM_LR_REL_TOL,
                    GM_LR_REL_TOL,
                    cfg.max_panels,
                )?;
                acc += block.value;
                if block.value.abs() < GM_LR_REL_TOL * acc.abs() || hi >= 140.0 {
                    break;
                }
                lo = hi;
                hi = (hi * 1.7).min(140.0);
            }
            // Algebraic tail correction: |M(ρ)| ≈ |M(R)| (ρ/R)^{−β} with
            // β = d + 2μ (the origin-singularity decay of the transform).
            let beta = df + 2.0 * mu.max(0.05);
            let m_end = nodes.m(hi).abs().max(nodes.m(0.97 * hi).abs());
            let tail_pow = beta * r - df;
            if tail_pow > 0.0 {
                acc += m_end.powf(r) * hi.powf(df) / tail_pow;
            }
            (cd * acc).powf(1.0 / r)
        }
    };
    Ok(y / (u.powf(1.0 - theta) * v.powf(theta)))
}

/// Lower bound Γ₋(j,n,θ) = max over the ε-grid of the trial-family quotient,
/// with S₋ = √((1−θ)^{1−θ}θ^θ)·Γ₋. Returns (G₋, best ε, S₋).
///
/// The scan parallelizes over the grid; the reduction is a deterministic max
/// with ties broken toward smaller ε.
pub fn lower_minus(
    p: &GnsParams,
    cfg: &QuadratureConfig,
    grid: &EpsGrid,
) -> Result<(f64, f64, f64), BoundsError> {
    let rep = classify(p)?;
    let (j, n, theta) = (p.j.to_f64(), p.n.to_f64(), p.theta.to_f64());
    let r = rep.r.to_lr();
    let eps_values = grid.values();
    if eps_values.is_empty() {
        return Err(BoundsError::Domain("empty epsilon grid"));
    }
    let results: Result<Vec<(f64, f64)>, BoundsError> = eps_values
        .par_iter()
        .map(|&eps| gminus_at_eps(j, n, theta, p.d, r, eps, cfg).map(|g| (eps, g)))
        .collect();
    let mut best = (f64::NEG_INFINITY, f64::NAN);
    for (eps, g) in results? {
        if g > best.0 || (g == best.0 && eps < best.1) {
            best = (g, eps);
        }
    }
    Ok((best.0, best.1, weight(theta) * best.0))
}

// ---------------------------------------------------------------------------
// Lower bound S₋₋ via the rescaled r = ∞ maximizer
// ---------------------------------------------------------------------------

/// Lower bound S₋₋(j,n,θ) (exact at θ = 0 and θ = j/n + d/2n):
///
/// S₋₋ = I(j,n,θ)/π^{d/4+1/2}
///       · √(Γ(d/2) n sin(πθ̄) (1−θ)^{1−θ}θ^θ / ((1−θ̄)^{1−θ} θ̄^θ)),
///
/// θ̄ = j/n + d/2n, I the Lʳ norm of the transform L_{jn} (closed form when
/// θ = θ̄). Needs 0 < n, 0 ≤ j ≤ n, j/n ≤ θ ≤ θ̄ < 1.
/// Returns (S₋₋, G₋₋).
pub fn lower_minusminus(
    p: &GnsParams,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64), BoundsError> {
    let rep = classify(p)?;
    if !rep.minusminus_applicable {
        return Err(BoundsError::Regime(
            "lower_minusminus needs 0 < n, 0 <= j <= n and j/n <= theta <= j/n + d/2n < 1".into(),
        ));
    }
    let (j, n, theta) = (p.j.to_f64(), p.n.to_f64(), p.theta.to_f64());
    let d = p.d;
    let df = d as f64;
    let ts = j / n + df / (2.0 * n);

    let i_value = match rep.r.to_lr() {
        LrExponent::Infinity => {
            PI / (2f64.powf(df / 2.0) * special::gamma_unchecked(df / 2.0) * n * (PI * theta).sin())
        }
        LrExponent::Finite(r) => {
            let l0 = profiles::l_profile(j, n, d, 0.0, EvalMethod::Auto, cfg)?;
            // L decays exponentially for analytic data (integer 2j), with an
            // algebraic ρ^{-(d+2j)} tail otherwise.
            let decay = if (2.0 * j - (2.0 * j).round()).abs() < 1e-12 {
                DecayClass::Exponential
            } else {
                DecayClass::OscillatoryAlgebraic { p: df + 2.0 * j }
            };
            let inner_cfg = cfg.relaxed(10.0);
            let l = RadialProfile::new(
                move |rho: f64| {
                    profiles::l_profile(j, n, d, rho, EvalMethod::Auto, &inner_cfg)
                        .unwrap_or(f64::NAN)
                },
                decay,
            )?
            .with_value_at_zero(l0);
            radial::lr_norm_radial(&l, LrExponent::Finite(r), d, &cfg.relaxed(1e4))?
        }
    };
    let w = (1.0 - theta).powf(1.0 - theta) * theta.powf(theta);
    let smm = i_value / PI.powf(df / 4.0 + 0.5)
        * (special::gamma_unchecked(df / 2.0) * n * (PI * ts).sin() * w
            / ((1.0 - ts).powf(1.0 - theta) * ts.powf(theta)))
        .sqrt();
    Ok((smm, smm / weight(theta)))
}

// ---------------------------------------------------------------------------
// Rayleigh quotients of trial profiles
// ---------------------------------------------------------------------------

/// Gagliardo–Nirenberg and Sobolev quotients of a trial function given by its
/// radial Fourier profile g = 𝓕h: both are certified lower bounds for the
/// respective sharp constants.
///
/// gn_ratio = ‖Dʲh‖_{Lʳ} / (‖h‖^{1−θ} ‖Dⁿh‖^θ),
/// sobolev_ratio = ‖Dʲh‖_{Lʳ} / √(‖h‖² + ‖Dⁿh‖²).
pub fn rayleigh_quotients(
    g: &RadialProfile,
    p: &GnsParams,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64), BoundsError> {
    let rep = classify(p)?;
    let (j, n, theta) = (p.j.to_f64(), p.n.to_f64(), p.theta.to_f64());
    let d = p.d;
    let df = d as f64;

    let weighted_sq = |power: f64| -> Result<f64, BoundsError> {
        let base = g.clone();
        let decay = match g.decay {
            DecayClass::Exponential => DecayClass::Exponential,
            DecayClass::Algebraic { p } => DecayClass::Algebraic { p: 2.0 * p - 2.0 * power },
            DecayClass::OscillatoryAlgebraic { p } => {
                DecayClass::Algebraic { p: 2.0 * p - 2.0 * power }
            }
        };
        let prof = RadialProfile::new_unchecked(
            move |xi: f64| {
                let v = base.eval(xi);
                xi.powf(2.0 * power) * v * v
            },
            decay,
        )
        .with_breakpoints(g.breakpoints.clone());
        Ok(radial::radial_integral(&prof, d, cfg)?)
    };

    let u = weighted_sq(0.0)?.sqrt(); // ‖h‖
    let v = weighted_sq(n)?.sqrt(); // ‖Dⁿh‖

    let numerator = match rep.r.to_lr() {
        // Plancherel: ‖Dʲh‖_{L²} is exactly the weighted Fourier L² norm.
        LrExponent::Finite(r) if (r - 2.0).abs() < 1e-14 => weighted_sq(j)?.sqrt(),
        r_exp => {
            let weighted = {
                let base = g.clone();
                let decay = match g.decay {
                    DecayClass::Exponential => DecayClass::Exponential,
                    DecayClass::Algebraic { p } => DecayClass::Algebraic { p: p - j },
                    DecayClass::OscillatoryAlgebraic { p } => {
                        DecayClass::OscillatoryAlgebraic { p: p - j }
                    }
                };
                RadialProfile::new_unchecked(move |xi: f64| xi.powf(j) * base.eval(xi), decay)
                    .with_breakpoints(g.breakpoints.clone())
            };
            let m0 = radial::hankel_inverse_ft(&weighted, d, 0.0, cfg)?;
            let inner = cfg.relaxed(100.0);
            let wprof = weighted.clone();
            // Probe the transform's decay to classify its tail.
            let m20 = radial::hankel_inverse_ft(&weighted, d, 20.0, &inner)?.abs();
            let m40 = radial::hankel_inverse_ft(&weighted, d, 40.0, &inner)?.abs();
            let position_decay = if m40 < 1e-14 * m0.abs().max(1e-30) {
                DecayClass::Exponential
            } else {
                let p_hat = (m20 / m40).log2() * 0.95;
                DecayClass::OscillatoryAlgebraic { p: p_hat.max(0.51 * df) }
            };
            let m_profile = RadialProfile::new_unchecked(
                move |rho: f64| {
                    radial::hankel_inverse_ft(&wprof, d, rho, &inner).unwrap_or(f64::NAN)
                },
                position_decay,
            )
            .with_value_at_zero(m0);
            radial::lr_norm_radial(&m_profile, r_exp, d, &cfg.relaxed(1e3))?
        }
    };

    let gn = numerator / (u.powf(1.0 - theta) * v.powf(theta));
    let sob = numerator / (u * u + v * v).sqrt();
    Ok((gn, sob))
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

/// One bound value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinusBound {
    pub value: f64,
    pub best_eps: f64,
}

/// Everything the engine can say about one parameter point: exact values
/// where a closed-form regime applies, all applicable bounds, and the best
/// envelope.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub params: GnsParams,
    pub regime: Regime,
    pub r: RExponent,
    pub exact_g: Option<f64>,
    pub exact_s: Option<f64>,
    pub exact_reason: Option<String>,
    pub g_plus: Option<f64>,
    pub s_plus: Option<f64>,
    pub g_plusplus: Option<f64>,
    pub s_plusplus: Option<f64>,
    pub g_minus: Option<MinusBound>,
    pub s_minus: Option<f64>,
    pub g_minusminus: Option<f64>,
    pub s_minusminus: Option<f64>,
    pub best_lower_g: f64,
    pub best_upper_g: f64,
    pub best_lower_s: f64,
    pub best_upper_s: f64,
}

/// Computes every applicable bound and the exact values in exact regimes,
/// with the default ε-grid for the trial-family scan.
pub fn best_bounds(p: &GnsParams, cfg: &QuadratureConfig) -> Result<BoundsReport, BoundsError> {
    best_bounds_with(p, cfg, &EpsGrid::default(), true)
}

/// [`best_bounds`] with an explicit ε-grid; `include_minus = false` skips the
/// (expensive) trial-family scan.
pub fn best_bounds_with(
    p: &GnsParams,
    cfg: &QuadratureConfig,
    grid: &EpsGrid,
    include_minus: bool,
) -> Result<BoundsReport, BoundsError> {
    let rep = classify(p)?;
    let (j, n, theta) = (p.j.to_f64(), p.n.to_f64(), p.theta.to_f64());
    let d = p.d;

    let (exact_g, exact_s, exact_reason) = match rep.regime {
        Regime::Holder => {
            let (g, s) = sharp_holder(p)?;
            (Some(g), Some(s), Some("j = theta*n (Holder case)".to_string()))
        }
        Regime::ThetaOne => {
            let g = sharp_theta1(j, n, d)?;
            let s = if n > 0.0 { g } else { (0.5f64).sqrt() };
            (Some(g), Some(s), Some("theta = 1".to_string()))
        }
        Regime::LInfinity => {
            let (_, s, g) = sharp_linf(j, n, d)?;
            (Some(g), Some(s), Some("theta = j/n + d/2n (r = infinity)".to_string()))
        }
        Regime::General => (None, None, None),
    };

    let (g_plus, s_plus) = if rep.plus_applicable {
        let (g, s) = upper_plus(j, n, theta, d)?;
        (Some(g), Some(s))
    } else {
        (None, None)
    };
    let (s_plusplus, g_plusplus) = if rep.plusplus_applicable {
        let (s, g) = upper_plusplus(j, n, theta, d)?;
        (Some(s), Some(g))
    } else {
        (None, None)
    };
    let (g_minus, s_minus) = if include_minus {
        let (g, eps, s) = lower_minus(p, cfg, grid)?;
        (Some(MinusBound { value: g, best_eps: eps }), Some(s))
    } else {
        (None, None)
    };
    let (s_minusminus, g_minusminus) = if rep.minusminus_applicable {
        let (s, g) = lower_minusminus(p, cfg)?;
        (Some(s), Some(g))
    } else {
        (None, None)
    };

    let mut lowers_g: Vec<f64> = Vec::new();
    let mut uppers_g: Vec<f64> = Vec::new();
    if let Some(m) = g_minus {
        lowers_g.push(m.value);
    }
    if let Some(v) = g_minusminus {
        lowers_g.push(v);
    }
    if let Some(v) = g_plus {
        uppers_g.push(v);
    }
    if let Some(v) = g_plusplus {
        uppers_g.push(v);
    }
    if let Some(v) = exact_g {
        lowers_g.push(v);
        uppers_g.push(v);
    }
    let best_lower_g = lowers_g.iter().copied().fold(0.0f64, f64::max);
    let best_upper_g = uppers_g.iter().copied().fold(f64::INFINITY, f64::min);
    let w = weight(theta);
    let report = BoundsReport {
        params: *p,
        regime: rep.regime,
        r: rep.r,
        exact_g,
        exact_s,
        exact_reason,
        g_plus,
        s_plus,
        g_plusplus,
        s_plusplus,
        g_minus,
        s_minus,
        g_minusminus,
        s_minusminus,
        best_lower_g,
        best_upper_g,
        best_lower_s: w * best_lower_g,
        best_upper_s: w * best_upper_g,
    };
    // Quadrature slack per the ordering invariant.
    if report.best_lower_g > report.best_upper_g + 1e-9 {
        return Err(BoundsError::InvalidParams(format!(
            "bound ordering violated: lower {} > upper {}",
            report.best_lower_g, report.best_upper_g
        )));
    }
    Ok(report)
}
