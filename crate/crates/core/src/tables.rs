//! Reference tables: the published sharp constants, maximizer specs and bound
//! values (Tables I–III) as fixtures, plus the generators that recompute them
//! with the published rounding conventions (exact values truncated; upper
//! bounds rounded up; lower bounds rounded down).

use crate::bounds::{self, EpsGrid};
use crate::error::BoundsError;
use crate::mellin::Rational;
use crate::params::{GnsParams, ParamValue};
use crate::profiles::{self, GProfileSpec};
use crate::radial::QuadratureConfig;
use serde::Serialize;

/// One row of Table I (r = ∞ sharp constants). Rows that list a partner pair
/// (j′, n) share the same constants through θ(j,n) + θ(j′,n) = 1.
#[derive(Debug, Clone, Copy)]
pub struct TableIRow {
    pub d: u32,
    pub j: (i64, i64),
    pub n: (i64, i64),
    pub partner_j: Option<(i64, i64)>,
    pub s_printed: &'static str,
    pub g_printed: &'static str,
}

pub const TABLE_I: [TableIRow; 12] = [
    TableIRow { d: 1, j: (0, 1), n: (1, 1), partner_j: None, s_printed: "0.707", g_printed: "1.000" },
    TableIRow { d: 1, j: (0, 1), n: (3, 2), partner_j: Some((1, 2)), s_printed: "0.620", g_printed: "0.852" },
    TableIRow { d: 1, j: (0, 1), n: (2, 1), partner_j: Some((1, 1)), s_printed: "0.594", g_printed: "0.787" },
    TableIRow { d: 1, j: (4, 1), n: (10, 1), partner_j: Some((5, 1)), s_printed: "0.224", g_printed: "0.317" },
    TableIRow { d: 2, j: (0, 1), n: (3, 2), partner_j: None, s_printed: "0.438", g_printed: "0.603" },
    TableIRow { d: 2, j: (0, 1), n: (2, 1), partner_j: None, s_printed: "0.353", g_printed: "0.500" },
    TableIRow { d: 2, j: (0, 1), n: (5, 2), partner_j: Some((1, 2)), s_printed: "0.324", g_printed: "0.453" },
    TableIRow { d: 2, j: (0, 1), n: (3, 1), partner_j: Some((1, 1)), s_printed: "0.310", g_printed: "0.426" },
    TableIRow { d: 3, j: (0, 1), n: (2, 1), partner_j: None, s_printed: "0.237", g_printed: "0.314" },
    TableIRow { d: 3, j: (0, 1), n: (5, 2), partner_j: None, s_printed: "0.182", g_printed: "0.256" },
    TableIRow { d: 3, j: (0, 1), n: (3, 1), partner_j: None, s_printed: "0.162", g_printed: "0.230" },
    TableIRow { d: 3, j: (1, 1), n: (3, 1), partner_j: None, s_printed: "0.230", g_printed: "0.288" },
];

/// One row of Table II (r = ∞ maximizer profiles). The canonical Meijer G
/// parameter lists are stored as (numerator, denominator) pairs.
#[derive(Debug, Clone, Copy)]
pub struct TableIIRow {
    pub d: u32,
    pub j: (i64, i64),
    pub n: (i64, i64),
    /// Sequences (a; b; b*) of the canonicalized G-spec.
    pub a_seq: &'static [(i64, i64)],
    pub b_seq: &'static [(i64, i64)],
    pub bs_seq: &'static [(i64, i64)],
    /// True for the rows the published table lists in elementary form.
    pub elementary: bool,
}

pub const TABLE_II: [TableIIRow; 9] = [
    TableIIRow {
        d: 1, j: (0, 1), n: (1, 1),
        a_seq: &[], b_seq: &[(0, 1), (1, 2)], bs_seq: &[],
        elementary: true,
    },
    TableIIRow {
        d: 1, j: (0, 1), n: (2, 1),
        a_seq: &[], b_seq: &[(0, 1), (1, 2), (3, 4)], bs_seq: &[(1, 4)],
        elementary: true,
    },
    TableIIRow {
        d: 1, j: (1, 1), n: (2, 1),
        a_seq: &[(1, 2)], b_seq: &[(0, 1), (1, 2), (1, 2)], bs_seq: &[(1, 4), (3, 4)],
        elementary: false,
    },
    TableIIRow {
        d: 2, j: (0, 1), n: (3, 2),
        a_seq: &[(1, 6)], b_seq: &[(0, 1), (1, 6), (1, 3), (2, 3), (2, 3)], bs_seq: &[(0, 1), (1, 3)],
        elementary: false,
    },
    TableIIRow {
        d: 2, j: (0, 1), n: (2, 1),
        a_seq: &[], b_seq: &[(0, 1), (1, 2), (1, 2)], bs_seq: &[(0, 1)],
        elementary: false,
    },
    TableIIRow {
        d: 2, j: (1, 1), n: (3, 1),
        a_seq: &[(1, 2)], b_seq: &[(0, 1), (1, 3), (1, 2), (2, 3)], bs_seq: &[(0, 1), (1, 3), (2, 3)],
        elementary: false,
    },
    TableIIRow {
        d: 3, j: (0, 1), n: (2, 1),
        a_seq: &[], b_seq: &[(0, 1), (1, 4), (1, 2)], bs_seq: &[(-1, 4)],
        elementary: true,
    },
    TableIIRow {
        d: 3, j: (0, 1), n: (3, 1),
        a_seq: &[], b_seq: &[(0, 1), (1, 3), (1, 2), (2, 3)], bs_seq: &[(-1, 6), (1, 6)],
        elementary: false,
    },
    TableIIRow {
        d: 3, j: (1, 1), n: (3, 1),
        a_seq: &[(1, 3)], b_seq: &[(0, 1), (1, 3), (1, 3), (2, 3)], bs_seq: &[(-1, 6), (1, 6), (1, 2)],
        elementary: false,
    },
];

/// Which bound the published table sets in boldface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoldLower {
    Minus,
    MinusMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoldUpper {
    Plus,
    PlusPlus,
}

/// One row of Table III (bounds on the Gagliardo–Nirenberg sharp constant).
#[derive(Debug, Clone, Copy)]
pub struct TableIIIRow {
    pub d: u32,
    pub j: (i64, i64),
    pub n: (i64, i64),
    pub theta: (i64, i64),
    pub r: (i64, i64),
    pub gm_printed: &'static str,
    pub gmm_printed: Option<&'static str>,
    pub gp_printed: &'static str,
    pub gpp_printed: &'static str,
    pub bold_lower: BoldLower,
    pub bold_upper: BoldUpper,
}

pub const TABLE_III: [TableIIIRow; 18] = [
    TableIIIRow { d: 1, j: (0, 1), n: (1, 1), theta: (1, 3), r: (6, 1), gm_printed: "0.849", gmm_printed: Some("0.832"), gp_printed: "1.204", gpp_printed: "0.873", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 1, j: (3, 4), n: (1, 1), theta: (9, 10), r: (20, 7), gm_printed: "0.867", gmm_printed: None, gp_printed: "1.030", gpp_printed: "0.944", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 1, j: (3, 4), n: (1, 1), theta: (99, 100), r: (50, 13), gm_printed: "0.950", gmm_printed: None, gp_printed: "1.078", gpp_printed: "1.564", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::Plus },
    TableIIIRow { d: 1, j: (1, 1), n: (2, 1), theta: (5, 8), r: (4, 1), gm_printed: "0.608", gmm_printed: Some("0.633"), gp_printed: "1.087", gpp_printed: "0.711", bold_lower: BoldLower::MinusMinus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 1, j: (5, 1), n: (10, 1), theta: (21, 40), r: (4, 1), gm_printed: "0.080", gmm_printed: Some("0.421"), gp_printed: "1.087", gpp_printed: "0.471", bold_lower: BoldLower::MinusMinus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 1, j: (9, 1), n: (10, 1), theta: (37, 40), r: (4, 1), gm_printed: "0.317", gmm_printed: Some("0.00894"), gp_printed: "1.087", gpp_printed: "0.592", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 2, j: (0, 1), n: (2, 1), theta: (1, 3), r: (6, 1), gm_printed: "0.504", gmm_printed: Some("0.498"), gp_printed: "0.741", gpp_printed: "0.511", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 2, j: (0, 1), n: (3, 1), theta: (1, 6), r: (4, 1), gm_printed: "0.533", gmm_printed: Some("0.547"), gp_printed: "0.752", gpp_printed: "0.554", bold_lower: BoldLower::MinusMinus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 2, j: (1, 2), n: (1, 1), theta: (3, 4), r: (8, 3), gm_printed: "0.766", gmm_printed: None, gp_printed: "0.848", gpp_printed: "0.782", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 2, j: (1, 2), n: (1, 1), theta: (9, 10), r: (10, 3), gm_printed: "0.714", gmm_printed: None, gp_printed: "0.781", gpp_printed: "0.795", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::Plus },
    TableIIIRow { d: 2, j: (1, 1), n: (3, 1), theta: (5, 9), r: (6, 1), gm_printed: "0.387", gmm_printed: Some("0.414"), gp_printed: "0.741", gpp_printed: "0.436", bold_lower: BoldLower::MinusMinus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 2, j: (9, 1), n: (10, 1), theta: (19, 20), r: (4, 1), gm_printed: "0.359", gmm_printed: None, gp_printed: "0.752", gpp_printed: "0.504", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 3, j: (0, 1), n: (2, 1), theta: (3, 8), r: (4, 1), gm_printed: "0.389", gmm_printed: Some("0.359"), gp_printed: "0.494", gpp_printed: "0.394", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 3, j: (0, 1), n: (3, 1), theta: (1, 3), r: (6, 1), gm_printed: "0.273", gmm_printed: Some("0.278"), gp_printed: "0.428", gpp_printed: "0.284", bold_lower: BoldLower::MinusMinus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 3, j: (1, 1), n: (3, 1), theta: (2, 3), r: (6, 1), gm_printed: "0.264", gmm_printed: Some("0.250"), gp_printed: "0.428", gpp_printed: "0.284", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 3, j: (2, 1), n: (3, 1), theta: (95, 100), r: (60, 13), gm_printed: "0.385", gmm_printed: None, gp_printed: "0.461", gpp_printed: "0.453", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
    TableIIIRow { d: 3, j: (2, 1), n: (3, 1), theta: (99, 100), r: (300, 53), gm_printed: "0.396", gmm_printed: None, gp_printed: "0.433", gpp_printed: "0.677", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::Plus },
    TableIIIRow { d: 3, j: (9, 1), n: (10, 1), theta: (19, 20), r: (3, 1), gm_printed: "0.321", gmm_printed: None, gp_printed: "0.609", gpp_printed: "0.469", bold_lower: BoldLower::Minus, bold_upper: BoldUpper::PlusPlus },
];

// ---------------------------------------------------------------------------
// Rounding conventions
// ---------------------------------------------------------------------------

/// Rounds up at `decimals` places (the published convention for upper bounds).
pub fn round_up(v: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    // Guard digits keep values computed slightly above an exact boundary from
    // rounding one step too far.
    ((v * scale) - 1e-9).ceil() / scale
}

/// Rounds down at `decimals` places (the published convention for lower bounds).
pub fn round_down(v: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    ((v * scale) + 1e-9).floor() / scale
}

/// Truncates toward zero at `decimals` places (the "0.707..." convention of
/// Table I).
pub fn truncate(v: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    ((v * scale) + 1e-9).trunc() / scale
}

/// Number of decimal places in a printed value like "0.00894".
pub fn printed_decimals(s: &str) -> u32 {
    s.split_once('.').map(|(_, frac)| frac.len() as u32).unwrap_or(0)
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ComputedTableI {
    pub d: u32,
    pub j: ParamValue,
    pub n: ParamValue,
    pub partner_j: Option<ParamValue>,
    pub theta: f64,
    pub partner_theta: Option<f64>,
    pub s: f64,
    pub g: f64,
}

pub fn computed_table_i() -> Result<Vec<ComputedTableI>, BoundsError> {
    TABLE_I
        .iter()
        .map(|row| {
            let j = row.j.0 as f64 / row.j.1 as f64;
            let n = row.n.0 as f64 / row.n.1 as f64;
            let (theta, s, g) = bounds::sharp_linf(j, n, row.d)?;
            let partner_theta = row
                .partner_j
                .map(|(pn, pd)| {
                    let pj = pn as f64 / pd as f64;
                    bounds::sharp_linf(pj, n, row.d).map(|(t, _, _)| t)
                })
                .transpose()?;
            Ok(ComputedTableI {
                d: row.d,
                j: ParamValue::exact(row.j.0, row.j.1),
                n: ParamValue::exact(row.n.0, row.n.1),
                partner_j: row.partner_j.map(|(a, b)| ParamValue::exact(a, b)),
                theta,
                partner_theta,
                s,
                g,
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ComputedTableII {
    pub row: TableIIRow,
    pub spec: GProfileSpec,
    /// The printed elementary form evaluated at ρ (when the row has one).
    pub elementary: Option<fn(f64) -> f64>,
}

pub fn computed_table_ii() -> Vec<ComputedTableII> {
    TABLE_II
        .iter()
        .map(|row| {
            let n = Rational::new(row.n.0, row.n.1);
            let a = (Rational::new(row.j.0, row.j.1) + Rational::new(row.d as i64, 1))
                / Rational::new(2, 1);
            let spec = profiles::g_spec_for_profile(a, *n.numer(), *n.denom(), row.d);
            let elementary: Option<fn(f64) -> f64> = match (row.d, row.j.0, row.n.0, row.n.1) {
                (1, 0, 1, 1) => Some(|rho| profiles::elementary_f(1, 0.0, 1.0, rho).unwrap()),
                (1, 0, 2, 1) => Some(|rho| profiles::elementary_f(1, 0.0, 2.0, rho).unwrap()),
                (3, 0, 2, 1) => Some(|rho| profiles::elementary_f(3, 0.0, 2.0, rho).unwrap()),
                _ => None,
            };
            ComputedTableII { row: *row, spec, elementary }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ComputedTableIII {
    pub d: u32,
    pub j: ParamValue,
    pub n: ParamValue,
    pub theta: ParamValue,
    pub r: ParamValue,
    pub g_minus: Option<f64>,
    pub best_eps: Option<f64>,
    pub g_minusminus: Option<f64>,
    pub g_plus: f64,
    pub g_plusplus: f64,
    pub bold_lower: BoldLower,
    pub bold_upper: BoldUpper,
}

/// Recomputes Table III. `include_minus = false` skips the ε-scan column.
pub fn computed_table_iii(
    cfg: &QuadratureConfig,
    grid: &EpsGrid,
    include_minus: bool,
) -> Result<Vec<ComputedTableIII>, BoundsError> {
    TABLE_III
        .iter()
        .map(|row| computed_table_iii_row(row, cfg, grid, include_minus))
        .collect()
}

pub fn computed_table_iii_row(
    row: &TableIIIRow,
    cfg: &QuadratureConfig,
    grid: &EpsGrid,
    include_minus: bool,
) -> Result<ComputedTableIII, BoundsError> {
    let p = GnsParams::new(
        row.d,
        ParamValue::exact(row.j.0, row.j.1),
        ParamValue::exact(row.n.0, row.n.1),
        ParamValue::exact(row.theta.0, row.theta.1),
    );
    let rep = bounds::best_bounds_with(&p, cfg, grid, include_minus)?;
    let (g_plus, g_plusplus) = (rep.g_plus.expect("+ defined on Table III rows"),
                                 rep.g_plusplus.expect("++ defined on Table III rows"));
    let bold_lower = match (rep.g_minus, rep.g_minusminus) {
        (Some(m), Some(mm)) => {
            if m.value >= mm {
                BoldLower::Minus
            } else {
                BoldLower::MinusMinus
            }
        }
        _ => row.bold_lower,
    };
    let bold_upper = if g_plus <= g_plusplus { BoldUpper::Plus } else { BoldUpper::PlusPlus };
    Ok(ComputedTableIII {
        d: row.d,
        j: p.j,
        n: p.n,
        theta: p.theta,
        r: match rep.r {
            crate::params::RExponent::Finite(v) => v,
            crate::params::RExponent::Infinite => ParamValue::Approx(f64::INFINITY),
        },
        g_minus: rep.g_minus.map(|m| m.value),
        best_eps: rep.g_minus.map(|m| m.best_eps),
        g_minusminus: rep.g_minusminus,
        g_plus,
        g_plusplus,
        bold_lower,
        bold_upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_conventions() {
        assert_eq!(round_up(1.20338, 3), 1.204);
        assert_eq!(round_down(0.83241, 3), 0.832);
        assert_eq!(round_down(0.0089466, 5), 0.00894);
        assert_eq!(truncate(0.59460, 3), 0.594);
        assert_eq!(truncate(0.85289, 3), 0.852);
        // exact boundary: a value computed epsilon above 0.5 still prints 0.500
        assert_eq!(round_up(0.5 + 1e-12, 3), 0.5);
        assert_eq!(printed_decimals("0.00894"), 5);
        assert_eq!(printed_decimals("1.204"), 3);
    }

    #[test]
    fn table_iii_r_values_consistent() {
        for row in &TABLE_III {
            let p = GnsParams::new(
                row.d,
                ParamValue::exact(row.j.0, row.j.1),
                ParamValue::exact(row.n.0, row.n.1),
                ParamValue::exact(row.theta.0, row.theta.1),
            );
            match p.r() {
                crate::params::RExponent::Finite(ParamValue::Exact(r)) => {
                    assert_eq!(r, Rational::new(row.r.0, row.r.1), "row {row:?}");
                }
                other => panic!("row {row:?}: unexpected r {other:?}"),
            }
        }
    }

    #[test]
    fn table_iii_gmm_defined_iff_applicable() {
        for row in &TABLE_III {
            let p = GnsParams::new(
                row.d,
                ParamValue::exact(row.j.0, row.j.1),
                ParamValue::exact(row.n.0, row.n.1),
                ParamValue::exact(row.theta.0, row.theta.1),
            );
            let rep = crate::params::classify(&p).unwrap();
            assert_eq!(
                rep.minusminus_applicable,
                row.gmm_printed.is_some(),
                "row {row:?}"
            );
        }
    }

    #[test]
    fn table_ii_specs_match_printed_lists() {
        for c in computed_table_ii() {
            let want_a: Vec<Rational> =
                c.row.a_seq.iter().map(|&(n, d)| Rational::new(n, d)).collect();
            let want_b: Vec<Rational> =
                c.row.b_seq.iter().map(|&(n, d)| Rational::new(n, d)).collect();
            let want_bs: Vec<Rational> =
                c.row.bs_seq.iter().map(|&(n, d)| Rational::new(n, d)).collect();
            assert_eq!(c.spec.spec.upper_left, want_a, "row {:?}", c.row);
            assert_eq!(c.spec.spec.lower_left, want_b, "row {:?}", c.row);
            assert_eq!(c.spec.spec.lower_right, want_bs, "row {:?}", c.row);
            assert!(c.spec.spec.upper_right.is_empty());
        }
    }

    #[test]
    fn table_i_matches_printed_values() {
        for (row, c) in TABLE_I.iter().zip(computed_table_i().unwrap()) {
            let s_want: f64 = row.s_printed.parse().unwrap();
            let g_want: f64 = row.g_printed.parse().unwrap();
            assert_eq!(truncate(c.s, 3), s_want, "row {row:?}: S = {}", c.s);
            assert_eq!(truncate(c.g, 3), g_want, "row {row:?}: G = {}", c.g);
            if let Some(pt) = c.partner_theta {
                assert!((pt + c.theta - 1.0).abs() < 1e-12, "partner thetas sum to 1");
            }
        }
    }
}
