//! The four-step economic Carnot cycle on the ideal income surface, its
//! wealth/goods accounting, efficiency, reversal, and closure diagnostics.
//!
//! Vertex numbering and leg order:
//!   1 -> 2  iso-ips expansion at the hot stability I_H
//!   2 -> 3  isentropic expansion down to the cold stability I_C
//!   3 -> 4  iso-ips compression at I_C
//!   4 -> 1  isentropic compression back up to I_H
//!
//! The free inputs are (I_H, I_C, Q_1, Q_2); the cold-leg volumes follow
//! from the adiabat relation, Q_3 = Q_2 (I_H/I_C)^(f/2) and
//! Q_4 = Q_1 (I_H/I_C)^(f/2). On the E-I diagram the cycle is the
//! axis-aligned rectangle [E_A, E_B] x [I_C, I_H].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{goods_production_along, goods_quadrature, work_along, work_quadrature};
use crate::state::{CycleReport, IdealIncomeModel};

/// Accepted |loop integral of dG| relative to |W|.
pub const GROWTH_CLOSURE_REL: f64 = 1e-8;

/// Accepted |quadrature of P dQ minus quadrature of I dE| relative to |W|
/// at the default per-leg sampling.
pub const AREA_MATCH_REL: f64 = 1e-6;

/// Accepted |W - (q_H - q_C)| relative to |q_H|.
pub const FIRST_LAW_REL: f64 = 1e-9;

/// Relative closure required of the rebuilt vertex 1 after leg 4 -> 1.
const VERTEX_CLOSURE_REL: f64 = 1e-9;

/// Inputs of an economic Carnot cycle between reservoirs at stabilities
/// I_H > I_C, with the hot iso-ips running from Q_1 to Q_2 > Q_1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCarnotSpec")]
pub struct CarnotSpec {
    model: IdealIncomeModel,
    #[serde(rename = "I_H")]
    stability_hot: f64,
    #[serde(rename = "I_C")]
    stability_cold: f64,
    #[serde(rename = "Q_1")]
    volume_start: f64,
    #[serde(rename = "Q_2")]
    volume_expanded: f64,
    samples_per_leg: usize,
}

#[derive(Deserialize)]
#[allow(non_snake_case)]
struct RawCarnotSpec {
    model: IdealIncomeModel,
    I_H: f64,
    I_C: f64,
    Q_1: f64,
    Q_2: f64,
    samples_per_leg: usize,
}

impl TryFrom<RawCarnotSpec> for CarnotSpec {
    type Error = Error;

    fn try_from(raw: RawCarnotSpec) -> Result<Self> {
        CarnotSpec::new(raw.model, raw.I_H, raw.I_C, raw.Q_1, raw.Q_2, raw.samples_per_leg)
    }
}

impl CarnotSpec {
    pub fn new(
        model: IdealIncomeModel,
        stability_hot: f64,
        stability_cold: f64,
        volume_start: f64,
        volume_expanded: f64,
        samples_per_leg: usize,
    ) -> Result<Self> {
        let i_cold = crate::state::require_positive(stability_cold, "cold stability I_C")?;
        let i_hot = crate::state::require_positive(stability_hot, "hot stability I_H")?;
        if i_hot <= i_cold {
            return Err(Error::domain(format!(
                "I_H must exceed I_C for a working cycle, got I_H = {i_hot}, I_C = {i_cold}"
            )));
        }
        let q1 = crate::state::require_positive(volume_start, "volume Q_1")?;
        let q2 = crate::state::require_positive(volume_expanded, "volume Q_2")?;
        if q2 <= q1 {
            return Err(Error::domain(format!(
                "Q_2 must exceed Q_1 on the hot expansion, got Q_1 = {q1}, Q_2 = {q2}"
            )));
        }
        if samples_per_leg < 2 {
            return Err(Error::domain(format!(
                "samples_per_leg must be at least 2, got {samples_per_leg}"
            )));
        }
        Ok(CarnotSpec {
            model,
            stability_hot: i_hot,
            stability_cold: i_cold,
            volume_start: q1,
            volume_expanded: q2,
            samples_per_leg,
        })
    }

    pub fn model(&self) -> &IdealIncomeModel {
        &self.model
    }

    pub fn stability_hot(&self) -> f64 {
        self.stability_hot
    }

    pub fn stability_cold(&self) -> f64 {
        self.stability_cold
    }

    pub fn volume_start(&self) -> f64 {
        self.volume_start
    }

    pub fn volume_expanded(&self) -> f64 {
        self.volume_expanded
    }

    pub fn samples_per_leg(&self) -> usize {
        self.samples_per_leg
    }
}

/// Diagnostics from re-integrating a cycle's sampled legs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleDiagnostics {
    /// |loop integral of dG| accumulated over the four legs.
    pub growth_closure: f64,
    /// |quadrature of P dQ minus quadrature of I dE| over the four legs.
    pub area_mismatch: f64,
    /// |W - (q_H - q_C)| from the report fields.
    pub first_law: f64,
    pub growth_limit: f64,
    pub area_limit: f64,
    pub first_law_limit: f64,
    pub pass: bool,
}

/// Builds the cycle: four analytic vertices, four sampled legs, totals from
/// the per-leg closed forms, and the closure residuals.
pub fn build_cycle(spec: &CarnotSpec) -> Result<CycleReport> {
    let model = spec.model();
    let (i_hot, i_cold) = (spec.stability_hot(), spec.stability_cold());
    let (q1, q2) = (spec.volume_start(), spec.volume_expanded());
    let half_f = 0.5 * f64::from(model.degrees_of_freedom());
    let blowup = (i_hot / i_cold).powf(half_f);
    let q3 = q2 * blowup;
    let q4 = q1 * blowup;

    let v1 = model.state_at(q1, i_hot)?;
    let v2 = model.state_at(q2, i_hot)?;
    let v3 = model.state_at(q3, i_cold)?;
    let v4 = model.state_at(q4, i_cold)?;

    let m = spec.samples_per_leg();
    let legs = vec![
        model.isotherm_path(i_hot, q1, q2, m)?,
        model.adiabat_path(&v2.point(), q3, m)?,
        model.isotherm_path(i_cold, q3, q4, m)?,
        model.adiabat_path(&v4.point(), q1, m)?,
    ];

    let closing = legs[3].last();
    let closure = (closing.price() - v1.price()).abs() / v1.price()
        + (closing.volume() - v1.volume()).abs() / v1.volume()
        + (closing.stability() - v1.stability()).abs() / v1.stability();
    if closure > VERTEX_CLOSURE_REL {
        return Err(Error::solver(format!(
            "cycle failed to close: vertex 1 missed by {closure:e} relative"
        )));
    }

    let entropy_low = v1.entropy();
    let entropy_high = v2.entropy();

    let mut wealth = 0.0;
    let mut residual_growth = 0.0;
    for leg in &legs {
        wealth += work_along(leg)?;
        residual_growth += leg.last().growth() - leg.first().growth();
    }
    let goods_absorbed = goods_production_along(&legs[0])?;
    let goods_rejected = -goods_production_along(&legs[2])?;
    let eta = efficiency(i_hot, i_cold)?;
    let residual_first_law = (wealth - (goods_absorbed - goods_rejected)).abs();
    if residual_first_law > FIRST_LAW_REL * goods_absorbed.abs().max(1.0) {
        return Err(Error::solver(format!(
            "first-law residual {residual_first_law:e} out of bounds for q_H = {goods_absorbed}"
        )));
    }

    Ok(CycleReport {
        vertices: [v1, v2, v3, v4],
        legs,
        wealth,
        goods_absorbed,
        goods_rejected,
        eta,
        entropy_low,
        entropy_high,
        residual_growth: residual_growth.abs(),
        residual_first_law,
    })
}

/// Rectangle rule on the E-I diagram: `W = (I_H - I_C)(E_B - E_A)`.
/// Degenerate gaps (equal stabilities or equal entropies) are admitted and
/// give zero; inverted gaps are rejected.
pub fn wealth_rectangle(
    stability_hot: f64,
    stability_cold: f64,
    entropy_low: f64,
    entropy_high: f64,
) -> Result<f64> {
    crate::state::require_positive(stability_cold, "cold stability I_C")?;
    crate::state::require_positive(stability_hot, "hot stability I_H")?;
    if stability_hot < stability_cold {
        return Err(Error::domain(format!(
            "I_H = {stability_hot} is below I_C = {stability_cold}"
        )));
    }
    check_entropy_gap(entropy_low, entropy_high)?;
    Ok((stability_hot - stability_cold) * (entropy_high - entropy_low))
}

/// Goods production drawn from the hot reservoir: `q_H = I_H (E_B - E_A)`.
pub fn goods_hot(stability_hot: f64, entropy_low: f64, entropy_high: f64) -> Result<f64> {
    crate::state::require_positive(stability_hot, "hot stability I_H")?;
    check_entropy_gap(entropy_low, entropy_high)?;
    Ok(stability_hot * (entropy_high - entropy_low))
}

/// Goods production rejected to the cold reservoir: `q_C = I_C (E_B - E_A)`.
pub fn goods_cold(stability_cold: f64, entropy_low: f64, entropy_high: f64) -> Result<f64> {
    crate::state::require_positive(stability_cold, "cold stability I_C")?;
    check_entropy_gap(entropy_low, entropy_high)?;
    Ok(stability_cold * (entropy_high - entropy_low))
}

fn check_entropy_gap(entropy_low: f64, entropy_high: f64) -> Result<()> {
    if !entropy_low.is_finite() || !entropy_high.is_finite() || entropy_high < entropy_low {
        Err(Error::domain(format!(
            "entropy bounds must satisfy E_A <= E_B, got E_A = {entropy_low}, E_B = {entropy_high}"
        )))
    } else {
        Ok(())
    }
}

/// Engine efficiency `eta = W / q_H = 1 - I_C / I_H`, strictly inside
/// (0, 1). Equal stabilities are an error rather than zero: a gap-free
/// "engine" is a specification mistake, not a working cycle.
pub fn efficiency(stability_hot: f64, stability_cold: f64) -> Result<f64> {
    crate::state::require_positive(stability_cold, "cold stability I_C")?;
    crate::state::require_positive(stability_hot, "hot stability I_H")?;
    if stability_cold >= stability_hot {
        return Err(Error::domain(format!(
            "efficiency requires I_H > I_C, got I_H = {stability_hot}, I_C = {stability_cold}"
        )));
    }
    Ok(1.0 - stability_cold / stability_hot)
}

/// The consumption cycle: same states traversed counterclockwise. Every
/// energy quantity flips sign exactly; vertices are unchanged as a set.
pub fn reverse_cycle(report: &CycleReport) -> CycleReport {
    let legs = report
        .legs()
        .iter()
        .rev()
        .map(|leg| leg.reversed())
        .collect();
    CycleReport {
        vertices: *report.vertices(),
        legs,
        wealth: -report.wealth(),
        goods_absorbed: -report.goods_absorbed(),
        goods_rejected: -report.goods_rejected(),
        eta: report.eta(),
        entropy_low: report.entropy_low(),
        entropy_high: report.entropy_high(),
        residual_growth: report.residual_growth(),
        residual_first_law: report.residual_first_law(),
    }
}

/// Re-integrates the sampled legs and reports the closure residuals. The
/// quadrature routes here are independent of the closed forms used by
/// `build_cycle`, so this catches corrupted or inconsistent leg data.
pub fn validate_cycle(report: &CycleReport) -> CycleDiagnostics {
    let mut growth_loop = 0.0;
    let mut work_loop = 0.0;
    let mut goods_loop = 0.0;
    for leg in report.legs() {
        growth_loop += leg.last().growth() - leg.first().growth();
        work_loop += work_quadrature(leg).unwrap_or(f64::NAN);
        goods_loop += goods_quadrature(leg).unwrap_or(f64::NAN);
    }
    let growth_closure = growth_loop.abs();
    let area_mismatch = (work_loop - goods_loop).abs();
    let first_law =
        (report.wealth() - (report.goods_absorbed() - report.goods_rejected())).abs();

    let wealth_scale = report.wealth().abs();
    let growth_limit = GROWTH_CLOSURE_REL * wealth_scale;
    let area_limit = AREA_MATCH_REL * wealth_scale;
    let first_law_limit = FIRST_LAW_REL * report.goods_absorbed().abs();
    CycleDiagnostics {
        growth_closure,
        area_mismatch,
        first_law,
        growth_limit,
        area_limit,
        first_law_limit,
        pass: growth_closure <= growth_limit
            && area_mismatch <= area_limit
            && first_law <= first_law_limit,
    }
}
