//! Shared domain types: state points, model parameters, process paths, and
//! cycle reports.
//!
//! All types are immutable after construction and validate their invariants
//! when built, whether from code or from serialized JSON. Every coordinate is
//! a dimensionless floating-point quantity; the only structural constraint on
//! the measurable coordinates is that they live in the open octant
//! `(0, inf)^3`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Entropy is stored relative to a declared reference state, so two samples
/// of the same process agree on differences regardless of convention.
pub const DEFAULT_REFERENCE: (f64, f64) = (1.0, 1.0);

/// Relative tolerance on entropy spread along a constructed isentropic path.
pub const ISENTROPIC_SPREAD_REL: f64 = 1e-12;

pub(crate) fn require_positive(value: f64, name: &str) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(format!(
            "{name} must be finite and > 0, got {value}"
        )))
    }
}

/// A point (P, Q, I) on an equation-of-state surface: price level, volume-
/// structure-quality, and internal politics stability. All three coordinates
/// are strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawStatePoint")]
pub struct StatePoint {
    #[serde(rename = "P")]
    price: f64,
    #[serde(rename = "Q")]
    volume: f64,
    #[serde(rename = "I")]
    stability: f64,
}

#[derive(Deserialize)]
#[allow(non_snake_case)]
struct RawStatePoint {
    P: f64,
    Q: f64,
    I: f64,
}

impl TryFrom<RawStatePoint> for StatePoint {
    type Error = Error;

    fn try_from(raw: RawStatePoint) -> Result<Self> {
        StatePoint::new(raw.P, raw.Q, raw.I)
    }
}

impl StatePoint {
    /// Validates and builds a state point; rejects any coordinate that is
    /// non-finite or lies outside `(0, inf)`.
    pub fn new(price: f64, volume: f64, stability: f64) -> Result<Self> {
        Ok(StatePoint {
            price: require_positive(price, "price level P")?,
            volume: require_positive(volume, "volume Q")?,
            stability: require_positive(stability, "stability I")?,
        })
    }

    pub fn price(&self) -> f64 {
        self.price
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn stability(&self) -> f64 {
        self.stability
    }
}

/// Parameters (n, R, f) of the ideal income law `P Q = n R I` with growth
/// potential `G = (f/2) n R I`, plus the reference state used to anchor the
/// entropy scale.
///
/// The degrees of freedom `f` take exactly the values 3 (mono-atomic income),
/// 5 (diatomic income), or 6 (arbitrarily shaped economic molecules).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawIdealIncomeModel")]
pub struct IdealIncomeModel {
    #[serde(rename = "n")]
    moles: f64,
    #[serde(rename = "R")]
    income_constant: f64,
    #[serde(rename = "f")]
    degrees_of_freedom: u32,
    #[serde(rename = "Q_ref")]
    volume_ref: f64,
    #[serde(rename = "I_ref")]
    stability_ref: f64,
}

#[derive(Deserialize)]
#[allow(non_snake_case)]
struct RawIdealIncomeModel {
    n: f64,
    R: f64,
    f: u32,
    #[serde(default = "one")]
    Q_ref: f64,
    #[serde(default = "one")]
    I_ref: f64,
}

fn one() -> f64 {
    1.0
}

impl TryFrom<RawIdealIncomeModel> for IdealIncomeModel {
    type Error = Error;

    fn try_from(raw: RawIdealIncomeModel) -> Result<Self> {
        IdealIncomeModel::with_reference(raw.n, raw.R, raw.f, raw.Q_ref, raw.I_ref)
    }
}

impl IdealIncomeModel {
    /// Model with the default reference state (Q_ref, I_ref) = (1, 1).
    pub fn new(moles: f64, income_constant: f64, degrees_of_freedom: u32) -> Result<Self> {
        Self::with_reference(
            moles,
            income_constant,
            degrees_of_freedom,
            DEFAULT_REFERENCE.0,
            DEFAULT_REFERENCE.1,
        )
    }

    pub fn with_reference(
        moles: f64,
        income_constant: f64,
        degrees_of_freedom: u32,
        volume_ref: f64,
        stability_ref: f64,
    ) -> Result<Self> {
        if !matches!(degrees_of_freedom, 3 | 5 | 6) {
            return Err(Error::domain(format!(
                "degrees of freedom f must be one of {{3, 5, 6}}, got {degrees_of_freedom}"
            )));
        }
        Ok(IdealIncomeModel {
            moles: require_positive(moles, "mole count n")?,
            income_constant: require_positive(income_constant, "income constant R")?,
            degrees_of_freedom,
            volume_ref: require_positive(volume_ref, "reference volume Q_ref")?,
            stability_ref: require_positive(stability_ref, "reference stability I_ref")?,
        })
    }

    pub fn moles(&self) -> f64 {
        self.moles
    }

    pub fn income_constant(&self) -> f64 {
        self.income_constant
    }

    pub fn degrees_of_freedom(&self) -> u32 {
        self.degrees_of_freedom
    }

    pub fn reference(&self) -> (f64, f64) {
        (self.volume_ref, self.stability_ref)
    }

    /// n R, the extensive prefactor shared by the equation of state and the
    /// entropy formula.
    pub fn extensive_constant(&self) -> f64 {
        self.moles * self.income_constant
    }

    /// (f + 2) / f, the exponent in the adiabatic invariant `P Q^((f+2)/f)`.
    pub fn adiabatic_exponent(&self) -> f64 {
        let f = f64::from(self.degrees_of_freedom);
        (f + 2.0) / f
    }
}

impl std::fmt::Display for IdealIncomeModel {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            out,
            "ideal-income(n={}, R={}, f={})",
            self.moles, self.income_constant, self.degrees_of_freedom
        )
    }
}

/// Parameters (a, b, R, n) of the economic Van der Waals equation
/// `(P + a/Q_m^2)(Q_m - b) = R I` in molar form.
///
/// `a` (cohesion) and `b` (excluded volume) are opaque positive constants;
/// no economic interpretation is attached to them here.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawVdWModel")]
pub struct VdWModel {
    #[serde(rename = "a")]
    cohesion: f64,
    #[serde(rename = "b")]
    covolume: f64,
    #[serde(rename = "R")]
    income_constant: f64,
    #[serde(rename = "n")]
    moles: f64,
}

#[derive(Deserialize)]
#[allow(non_snake_case)]
struct RawVdWModel {
    a: f64,
    b: f64,
    R: f64,
    #[serde(default = "one")]
    n: f64,
}

impl TryFrom<RawVdWModel> for VdWModel {
    type Error = Error;

    fn try_from(raw: RawVdWModel) -> Result<Self> {
        VdWModel::new(raw.a, raw.b, raw.R, raw.n)
    }
}

impl VdWModel {
    pub fn new(cohesion: f64, covolume: f64, income_constant: f64, moles: f64) -> Result<Self> {
        Ok(VdWModel {
            cohesion: require_positive(cohesion, "cohesion a")?,
            covolume: require_positive(covolume, "excluded volume b")?,
            income_constant: require_positive(income_constant, "income constant R")?,
            moles: require_positive(moles, "mole count n")?,
        })
    }

    pub fn cohesion(&self) -> f64 {
        self.cohesion
    }

    pub fn covolume(&self) -> f64 {
        self.covolume
    }

    pub fn income_constant(&self) -> f64 {
        self.income_constant
    }

    pub fn moles(&self) -> f64 {
        self.moles
    }
}

impl std::fmt::Display for VdWModel {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            out,
            "vdw(a={}, b={}, R={}, n={})",
            self.cohesion, self.covolume, self.income_constant, self.moles
        )
    }
}

/// A state point together with its entropy E (relative to the model's
/// reference state) and growth potential G.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtendedState {
    point: StatePoint,
    #[serde(rename = "E")]
    entropy: f64,
    #[serde(rename = "G")]
    growth: f64,
}

impl ExtendedState {
    pub fn new(point: StatePoint, entropy: f64, growth: f64) -> Self {
        ExtendedState {
            point,
            entropy,
            growth,
        }
    }

    pub fn point(&self) -> StatePoint {
        self.point
    }

    pub fn price(&self) -> f64 {
        self.point.price()
    }

    pub fn volume(&self) -> f64 {
        self.point.volume()
    }

    pub fn stability(&self) -> f64 {
        self.point.stability()
    }

    pub fn entropy(&self) -> f64 {
        self.entropy
    }

    pub fn growth(&self) -> f64 {
        self.growth
    }
}

/// The reversible process kinds that paths can sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathKind {
    /// Constant internal politics stability on the ideal income surface.
    IsoIps,
    /// Constant entropy on the ideal income surface.
    Isentropic,
    /// Constant stability on the Van der Waals surface (raw or corrected).
    VdWIsotherm,
}

/// A sampled reversible process: at least two extended states with strictly
/// monotone volume (a stationary path with every sample identical is the one
/// permitted degenerate case).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProcessPath {
    kind: PathKind,
    samples: Vec<ExtendedState>,
    model_id: String,
}

impl ProcessPath {
    /// Validates the per-kind invariants:
    /// - every kind: >= 2 samples, volume strictly monotone (or all samples
    ///   bitwise identical for a stationary path);
    /// - `IsoIps` and `VdWIsotherm`: one shared stability value, exactly;
    /// - `Isentropic`: entropy spread within `ISENTROPIC_SPREAD_REL` of the
    ///   path's own scale.
    pub fn new(kind: PathKind, samples: Vec<ExtendedState>, model_id: String) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::path(format!(
                "a process path needs at least 2 samples, got {}",
                samples.len()
            )));
        }

        let stationary = samples.windows(2).all(|w| w[0] == w[1]);
        if !stationary {
            let ascending = samples[1].volume() > samples[0].volume();
            for pair in samples.windows(2) {
                let step_up = pair[1].volume() > pair[0].volume();
                let step_down = pair[1].volume() < pair[0].volume();
                if (ascending && !step_up) || (!ascending && !step_down) {
                    return Err(Error::path(
                        "volume must be strictly monotone along a path".to_string(),
                    ));
                }
            }
        }

        match kind {
            PathKind::IsoIps | PathKind::VdWIsotherm => {
                let stability = samples[0].stability();
                if samples.iter().any(|s| s.stability() != stability) {
                    return Err(Error::path(
                        "all samples of an isotherm must share one stability value".to_string(),
                    ));
                }
            }
            PathKind::Isentropic => {
                let scale = entropy_scale(&samples[0]);
                let first = samples[0].entropy();
                for s in &samples {
                    if (s.entropy() - first).abs() > ISENTROPIC_SPREAD_REL * scale {
                        return Err(Error::path(format!(
                            "entropy spread {} exceeds isentropic tolerance {}",
                            (s.entropy() - first).abs(),
                            ISENTROPIC_SPREAD_REL * scale
                        )));
                    }
                }
            }
        }

        Ok(ProcessPath {
            kind,
            samples,
            model_id,
        })
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn samples(&self) -> &[ExtendedState] {
        &self.samples
    }

    pub fn model_id(&self) -> &str {
        &self.model_id
    }

    pub fn first(&self) -> &ExtendedState {
        &self.samples[0]
    }

    pub fn last(&self) -> &ExtendedState {
        &self.samples[self.samples.len() - 1]
    }

    /// The same process traversed in the opposite direction.
    pub fn reversed(&self) -> ProcessPath {
        let mut samples = self.samples.clone();
        samples.reverse();
        ProcessPath {
            kind: self.kind,
            samples,
            model_id: self.model_id.clone(),
        }
    }
}

/// Tolerance scale for entropy comparisons: the entropy itself may sit at
/// zero (the reference state), so fall back to G/I, which is of order n R.
pub(crate) fn entropy_scale(sample: &ExtendedState) -> f64 {
    let growth_scale = (sample.growth() / sample.stability()).abs();
    sample.entropy().abs().max(growth_scale).max(1.0)
}

/// The assembled economic Carnot cycle: four vertices (states 1..4), the four
/// sampled legs connecting them, the cycle totals, and closure residuals.
///
/// `W = q_H - q_C` holds to within `residual_W`; `residual_dG` is the
/// accumulated growth-potential change around the loop, which vanishes for an
/// exact differential.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleReport {
    pub(crate) vertices: [ExtendedState; 4],
    pub(crate) legs: Vec<ProcessPath>,
    #[serde(rename = "W")]
    pub(crate) wealth: f64,
    #[serde(rename = "q_H")]
    pub(crate) goods_absorbed: f64,
    #[serde(rename = "q_C")]
    pub(crate) goods_rejected: f64,
    pub(crate) eta: f64,
    #[serde(rename = "E_A")]
    pub(crate) entropy_low: f64,
    #[serde(rename = "E_B")]
    pub(crate) entropy_high: f64,
    #[serde(rename = "residual_dG")]
    pub(crate) residual_growth: f64,
    #[serde(rename = "residual_W")]
    pub(crate) residual_first_law: f64,
}

impl CycleReport {
    pub fn vertices(&self) -> &[ExtendedState; 4] {
        &self.vertices
    }

    pub fn legs(&self) -> &[ProcessPath] {
        &self.legs
    }

    /// Net wealth over the cycle, positive for the clockwise engine cycle.
    pub fn wealth(&self) -> f64 {
        self.wealth
    }

    /// Goods production absorbed on the hot iso-ips leg.
    pub fn goods_absorbed(&self) -> f64 {
        self.goods_absorbed
    }

    /// Goods production rejected on the cold iso-ips leg (positive for the
    /// engine cycle).
    pub fn goods_rejected(&self) -> f64 {
        self.goods_rejected
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn entropy_low(&self) -> f64 {
        self.entropy_low
    }

    pub fn entropy_high(&self) -> f64 {
        self.entropy_high
    }

    pub fn residual_growth(&self) -> f64 {
        self.residual_growth
    }

    pub fn residual_first_law(&self) -> f64 {
        self.residual_first_law
    }
}
