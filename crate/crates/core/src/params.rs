//! Parameter records for the L² inequalities, with exact-rational regime
//! detection and the validity predicates
//!
//! ```text
//! 0 ≤ θ ≤ 1,  0 ≤ n, j < ∞,  0 ≤ θn − j ≤ d/2,  θ ≠ 1 if n = j + d/2,
//! 1/r = 1/2 − (θn − j)/d.
//! ```

use crate::error::BoundsError;
use crate::mellin::{ratio_to_f64, Rational};
use crate::radial::LrExponent;
use serde::{Deserialize, Serialize, Serializer};

/// Tolerance used for regime predicates on inexact (float) inputs.
pub const FLOAT_REGIME_TOL: f64 = 1e-12;

/// A parameter that is either an exact rational or a float. Regime boundaries
/// carry different formulas, so predicates are decided exactly whenever both
/// operands are rational.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub enum ParamValue {
    Exact(Rational),
    Approx(f64),
}

impl ParamValue {
    pub fn exact(num: i64, den: i64) -> Self {
        ParamValue::Exact(Rational::new(num, den))
    }

    pub fn integer(v: i64) -> Self {
        ParamValue::Exact(Rational::new(v, 1))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            ParamValue::Exact(r) => ratio_to_f64(r),
            ParamValue::Approx(v) => v,
        }
    }

    pub fn as_exact(self) -> Option<Rational> {
        match self {
            ParamValue::Exact(r) => Some(r),
            ParamValue::Approx(_) => None,
        }
    }

    pub fn mul(self, other: ParamValue) -> ParamValue {
        match (self, other) {
            (ParamValue::Exact(a), ParamValue::Exact(b)) => ParamValue::Exact(a * b),
            _ => ParamValue::Approx(self.to_f64() * other.to_f64()),
        }
    }

    pub fn sub(self, other: ParamValue) -> ParamValue {
        match (self, other) {
            (ParamValue::Exact(a), ParamValue::Exact(b)) => ParamValue::Exact(a - b),
            _ => ParamValue::Approx(self.to_f64() - other.to_f64()),
        }
    }

    /// Equality: exact on rationals, within [`FLOAT_REGIME_TOL`] otherwise.
    pub fn eq_value(self, other: ParamValue) -> bool {
        match (self, other) {
            (ParamValue::Exact(a), ParamValue::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= FLOAT_REGIME_TOL,
        }
    }

    pub fn lt(self, other: ParamValue) -> bool {
        match (self, other) {
            (ParamValue::Exact(a), ParamValue::Exact(b)) => a < b,
            _ => self.to_f64() < other.to_f64() - FLOAT_REGIME_TOL,
        }
    }

    pub fn le(self, other: ParamValue) -> bool {
        self.lt(other) || self.eq_value(other)
    }

    /// Renders "p/q" for rationals, the decimal otherwise.
    pub fn display(&self) -> String {
        match self {
            ParamValue::Exact(r) => {
                if *r.denom() == 1 {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            ParamValue::Approx(v) => format!("{v}"),
        }
    }

    /// Parses "p/q", an integer, or (if `allow_inexact`) a float.
    pub fn parse(s: &str, allow_inexact: bool) -> Result<Self, String> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| format!("bad numerator in '{s}'"))?;
            let den: i64 = den.trim().parse().map_err(|_| format!("bad denominator in '{s}'"))?;
            if den == 0 {
                return Err(format!("zero denominator in '{s}'"));
            }
            return Ok(ParamValue::exact(num, den));
        }
        if let Ok(int) = s.parse::<i64>() {
            return Ok(ParamValue::integer(int));
        }
        match s.parse::<f64>() {
            Ok(v) if allow_inexact => Ok(ParamValue::Approx(v)),
            Ok(_) => {
                Err(format!("'{s}' is not an exact rational; pass --inexact to accept floats"))
            }
            Err(_) => Err(format!("cannot parse '{s}' as a rational or float")),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.display())
    }
}

/// The derived Lebesgue exponent r, possibly ∞, exact when the inputs are.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RExponent {
    Finite(ParamValue),
    Infinite,
}

impl RExponent {
    pub fn to_lr(self) -> LrExponent {
        match self {
            RExponent::Finite(v) => LrExponent::Finite(v.to_f64()),
            RExponent::Infinite => LrExponent::Infinity,
        }
    }

    pub fn display(&self) -> String {
        match self {
            RExponent::Finite(v) => v.display(),
            RExponent::Infinite => "inf".to_string(),
        }
    }
}

/// The central input record: dimension and the exponent triple (j, n, θ),
/// plus the Sobolev norm exponent t (the bounds of the theory fix t = 2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GnsParams {
    pub d: u32,
    pub j: ParamValue,
    pub n: ParamValue,
    pub theta: ParamValue,
    pub t: f64,
}

impl GnsParams {
    pub fn new(d: u32, j: ParamValue, n: ParamValue, theta: ParamValue) -> Self {
        GnsParams { d, j, n, theta, t: 2.0 }
    }

    pub fn from_f64(d: u32, j: f64, n: f64, theta: f64) -> Self {
        GnsParams {
            d,
            j: ParamValue::Approx(j),
            n: ParamValue::Approx(n),
            theta: ParamValue::Approx(theta),
            t: 2.0,
        }
    }

    /// θn − j.
    pub fn excess(&self) -> ParamValue {
        self.theta.mul(self.n).sub(self.j)
    }

    /// θ(j,n) = j/n + d/2n, the r = ∞ boundary value of θ (needs n > 0).
    pub fn theta_star(&self) -> Option<ParamValue> {
        match (self.j, self.n) {
            (ParamValue::Exact(j), ParamValue::Exact(n)) => {
                if *n.numer() == 0 {
                    None
                } else {
                    Some(ParamValue::Exact(
                        j / n + Rational::new(self.d as i64, 1) / (Rational::new(2, 1) * n),
                    ))
                }
            }
            _ => {
                let n = self.n.to_f64();
                if n <= 0.0 {
                    None
                } else {
                    Some(ParamValue::Approx(self.j.to_f64() / n + self.d as f64 / (2.0 * n)))
                }
            }
        }
    }

    /// 1/r = 1/2 − (θn − j)/d; `Infinite` when θn − j = d/2.
    pub fn r(&self) -> RExponent {
        let excess = self.excess();
        if excess.eq_value(ParamValue::exact(self.d as i64, 2)) {
            return RExponent::Infinite;
        }
        match excess {
            ParamValue::Exact(e) => {
                let inv = Rational::new(1, 2) - e / Rational::new(self.d as i64, 1);
                RExponent::Finite(ParamValue::Exact(Rational::new(1, 1) / inv))
            }
            ParamValue::Approx(e) => {
                let inv = 0.5 - e / self.d as f64;
                RExponent::Finite(ParamValue::Approx(1.0 / inv))
            }
        }
    }
}

/// Primary regime of a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// j = θn: Hölder case, sharp constants in closed form (G = 1).
    Holder,
    /// θ = 1: Riesz-potential case, sharp constants in closed form.
    ThetaOne,
    /// θ = j/n + d/2n (r = ∞): sup-norm case, sharp constants in closed form.
    LInfinity,
    /// Anything else: only bounds are available.
    General,
}

/// Classification plus applicability flags for the bound families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeReport {
    pub regime: Regime,
    pub r: RExponent,
    /// θn − j < d/2 (the G₊/S₊ bound is finite).
    pub plus_applicable: bool,
    /// θ < 1 (the G₊₊/S₊₊ bound is finite).
    pub plusplus_applicable: bool,
    /// j ≤ n, j/n + d/2n < 1 and j/n ≤ θ ≤ j/n + d/2n (G₋₋/S₋₋ defined).
    pub minusminus_applicable: bool,
}

/// Validates the general L² conditions and classifies the point.
pub fn classify(p: &GnsParams) -> Result<RegimeReport, BoundsError> {
    let zero = ParamValue::integer(0);
    let one = ParamValue::integer(1);
    if p.d == 0 {
        return Err(BoundsError::InvalidParams("d must be a positive integer".into()));
    }
    if !p.j.to_f64().is_finite() || !p.n.to_f64().is_finite() || !p.theta.to_f64().is_finite() {
        return Err(BoundsError::InvalidParams("parameters must be finite".into()));
    }
    if p.j.lt(zero) || p.n.lt(zero) {
        return Err(BoundsError::InvalidParams(
            "need 0 <= n, j < infinity (violated: j or n negative)".into(),
        ));
    }
    if p.theta.lt(zero) || one.lt(p.theta) {
        return Err(BoundsError::InvalidParams(format!(
            "need 0 <= theta <= 1 (got theta = {})",
            p.theta.display()
        )));
    }
    let excess = p.excess();
    if excess.lt(zero) {
        return Err(BoundsError::InvalidParams(format!(
            "need 0 <= theta*n - j (got theta*n - j = {})",
            excess.display()
        )));
    }
    let half_d = ParamValue::exact(p.d as i64, 2);
    if half_d.lt(excess) {
        return Err(BoundsError::InvalidParams(format!(
            "need theta*n - j <= d/2 (got theta*n - j = {})",
            excess.display()
        )));
    }
    // θ ≠ 1 when n = j + d/2.
    let j_plus_half_d = p.j.sub(ParamValue::exact(-(p.d as i64), 2));
    if p.theta.eq_value(one) && p.n.eq_value(j_plus_half_d) {
        return Err(BoundsError::InvalidParams("theta = 1 excluded when n = j + d/2".into()));
    }
    if !(p.t >= 1.0) {
        return Err(BoundsError::InvalidParams("need t in [1, inf]".into()));
    }

    let holder = p.j.eq_value(p.theta.mul(p.n));
    let theta_one = p.theta.eq_value(one);
    let linf = excess.eq_value(half_d);
    let regime = if holder {
        Regime::Holder
    } else if theta_one {
        Regime::ThetaOne
    } else if linf {
        Regime::LInfinity
    } else {
        Regime::General
    };

    let minusminus_applicable = match p.theta_star() {
        Some(ts) => {
            p.j.le(p.n) && zero.lt(p.n) && ts.lt(one) && {
                let jn = match (p.j, p.n) {
                    (ParamValue::Exact(j), ParamValue::Exact(n)) if *n.numer() != 0 => {
                        ParamValue::Exact(j / n)
                    }
                    _ => ParamValue::Approx(p.j.to_f64() / p.n.to_f64()),
                };
                jn.le(p.theta) && p.theta.le(ts)
            }
        }
        None => false,
    };

    Ok(RegimeReport {
        regime,
        r: p.r(),
        plus_applicable: excess.lt(half_d),
        plusplus_applicable: p.theta.lt(one),
        minusminus_applicable,
    })
}
