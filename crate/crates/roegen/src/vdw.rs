//! The economic Van der Waals equation of state
//! `(P + a/Q_m^2)(Q_m - b) = R I`, its critical point, volume roots, and the
//! Maxwell equal-area correction of subcritical isotherms.
//!
//! All operations work in molar volume `Q_m`; `pressure_total` exposes the
//! n-mole form `(P + a n^2 / Q^2)(Q - n b) = n R I` as a thin wrapper with
//! `Q = n Q_m`.

use serde::{Deserialize, Serialize};

use crate::cubic;
use crate::error::{Error, Result};
use crate::state::{ExtendedState, PathKind, ProcessPath, StatePoint, VdWModel};

/// A stability is treated as supercritical when it is within this relative
/// margin of the critical stability (or above it).
pub const CRITICAL_MARGIN_REL: f64 = 1e-9;

/// Equal-area defect accepted by `maxwell_construction`, relative to
/// `P_sat (Q_hi - Q_lo)`.
pub const AREA_RESIDUAL_REL: f64 = 1e-10;

/// Scaled tolerance on the first and second volume derivatives of the price
/// at the critical point.
pub const CRITICAL_DERIVATIVE_REL: f64 = 1e-10;

/// The critical point of a Van der Waals model:
/// `P_c = a/(27 b^2)`, `Q_c = 3 b` (molar), `I_c = 8 a / (27 b R)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    #[serde(rename = "P_c")]
    price: f64,
    #[serde(rename = "Q_c")]
    volume: f64,
    #[serde(rename = "I_c")]
    stability: f64,
}

impl CriticalPoint {
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

/// Derivative diagnostics at the critical point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalDiagnostics {
    pub critical: CriticalPoint,
    /// dP/dQ at the critical point (should vanish).
    pub slope: f64,
    /// d2P/dQ2 at the critical point (should vanish).
    pub curvature: f64,
    /// |slope| relative to the natural scale P_c / Q_c.
    pub slope_residual: f64,
    /// |curvature| relative to the natural scale P_c / Q_c^2.
    pub curvature_residual: f64,
    pub pass: bool,
}

/// Result of the Maxwell equal-area construction at a subcritical stability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoexistenceResult {
    #[serde(rename = "P_sat")]
    saturation_price: f64,
    #[serde(rename = "Q_lo")]
    volume_low: f64,
    #[serde(rename = "Q_hi")]
    volume_high: f64,
    area_residual: f64,
}

impl CoexistenceResult {
    pub fn saturation_price(&self) -> f64 {
        self.saturation_price
    }

    pub fn volume_low(&self) -> f64 {
        self.volume_low
    }

    pub fn volume_high(&self) -> f64 {
        self.volume_high
    }

    pub fn area_residual(&self) -> f64 {
        self.area_residual
    }
}

impl VdWModel {
    /// Raw price on an iso-ips: `P = R I / (Q_m - b) - a / Q_m^2`.
    ///
    /// The value may legitimately be negative on deep subcritical isotherms;
    /// callers must not assume positivity.
    pub fn pressure(&self, molar_volume: f64, stability: f64) -> Result<f64> {
        let i = crate::state::require_positive(stability, "stability I")?;
        let q = self.require_above_covolume(molar_volume)?;
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        Ok(r * i / (q - b) - a / (q * q))
    }

    /// n-mole wrapper: total volume `Q = n Q_m`.
    pub fn pressure_total(&self, volume: f64, stability: f64) -> Result<f64> {
        self.pressure(volume / self.moles(), stability)
    }

    /// Analytic dP/dQ_m at constant stability.
    pub fn pressure_slope(&self, molar_volume: f64, stability: f64) -> Result<f64> {
        let i = crate::state::require_positive(stability, "stability I")?;
        let q = self.require_above_covolume(molar_volume)?;
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        let gap = q - b;
        Ok(-r * i / (gap * gap) + 2.0 * a / (q * q * q))
    }

    /// Analytic d2P/dQ_m2 at constant stability.
    pub fn pressure_curvature(&self, molar_volume: f64, stability: f64) -> Result<f64> {
        let i = crate::state::require_positive(stability, "stability I")?;
        let q = self.require_above_covolume(molar_volume)?;
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        let gap = q - b;
        Ok(2.0 * r * i / (gap * gap * gap) - 6.0 * a / (q * q * q * q))
    }

    /// Closed-form critical point.
    pub fn critical_point(&self) -> CriticalPoint {
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        CriticalPoint {
            price: a / (27.0 * b * b),
            volume: 3.0 * b,
            stability: 8.0 * a / (27.0 * b * r),
        }
    }

    /// Evaluates the stationary-inflection conditions dP/dQ = 0 and
    /// d2P/dQ2 = 0 at the critical point.
    pub fn verify_critical(&self) -> CriticalDiagnostics {
        let critical = self.critical_point();
        let (p_c, q_c) = (critical.price(), critical.volume());
        let slope = self
            .pressure_slope(q_c, critical.stability())
            .expect("critical point lies inside the domain");
        let curvature = self
            .pressure_curvature(q_c, critical.stability())
            .expect("critical point lies inside the domain");
        let slope_residual = slope.abs() / (p_c / q_c);
        let curvature_residual = curvature.abs() / (p_c / (q_c * q_c));
        CriticalDiagnostics {
            critical,
            slope,
            curvature,
            slope_residual,
            curvature_residual,
            pass: slope_residual <= CRITICAL_DERIVATIVE_REL
                && curvature_residual <= CRITICAL_DERIVATIVE_REL,
        }
    }

    /// Stability expressed as a multiple of the critical stability.
    pub fn stability_from_reduced(&self, reduced: f64) -> f64 {
        reduced * self.critical_point().stability()
    }

    /// Reduced price `P/P_c` at reduced volume `Q_m/Q_c` and reduced
    /// stability `I/I_c`; identical for every parameterization of the model.
    pub fn reduced_pressure(&self, reduced_volume: f64, reduced_stability: f64) -> Result<f64> {
        let critical = self.critical_point();
        let p = self.pressure(
            reduced_volume * critical.volume(),
            reduced_stability * critical.stability(),
        )?;
        Ok(p / critical.price())
    }

    /// All molar-volume roots of the iso-ips cubic
    /// `Q^3 - (b + R I / P) Q^2 + (a/P) Q - a b / P = 0` with `Q > b`,
    /// ascending, double roots reported twice.
    pub fn volume_roots(&self, price: f64, stability: f64) -> Result<Vec<f64>> {
        let p = crate::state::require_positive(price, "price P")?;
        let i = crate::state::require_positive(stability, "stability I")?;
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        let c2 = -(b + r * i / p);
        let c1 = a / p;
        let c0 = -a * b / p;
        let roots: Vec<f64> = cubic::real_roots_monic(c2, c1, c0)?
            .into_iter()
            .filter(|&q| q > b)
            .collect();
        if roots.is_empty() {
            // the cubic is negative at Q = b and grows to +inf, so a root
            // above b always exists; reaching this means the solve went bad
            return Err(Error::solver(format!(
                "no volume root above the excluded volume b = {b} at P = {p}, I = {i}"
            )));
        }
        Ok(roots)
    }

    /// The two spinodal volumes (local price minimum, local price maximum)
    /// on a subcritical iso-ips, from the cubic numerator of dP/dQ = 0:
    /// `R I Q^3 - 2 a (Q - b)^2 = 0`.
    pub fn spinodal_volumes(&self, stability: f64) -> Result<(f64, f64)> {
        let i = crate::state::require_positive(stability, "stability I")?;
        self.require_subcritical(i)?;
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        let ri = r * i;
        let c2 = -2.0 * a / ri;
        let c1 = 4.0 * a * b / ri;
        let c0 = -2.0 * a * b * b / ri;
        let above: Vec<f64> = cubic::real_roots_monic(c2, c1, c0)?
            .into_iter()
            .filter(|&q| q > b)
            .collect();
        if above.len() < 2 {
            return Err(Error::solver(format!(
                "expected two spinodal volumes above b at I = {i}, found {above:?}"
            )));
        }
        Ok((above[0], above[above.len() - 1]))
    }

    /// Maxwell equal-area construction: the saturation price `P_sat` at which
    /// the two lobes cut off by the tie line cancel,
    /// `int_{Q_lo}^{Q_hi} (P_vdw(Q) - P_sat) dQ = 0`, found by bisection
    /// between the spinodal prices using the analytic antiderivative
    /// `int P_vdw dQ = R I ln(Q - b) + a/Q`.
    pub fn maxwell_construction(&self, stability: f64) -> Result<CoexistenceResult> {
        let i = crate::state::require_positive(stability, "stability I")?;
        self.require_subcritical(i)?;

        let (spin_lo, spin_hi) = self.spinodal_volumes(i)?;
        let price_floor = self.pressure(spin_lo, i)?;
        let price_ceiling = self.pressure(spin_hi, i)?;
        // negative raw prices exist on deep subcritical isotherms but lie
        // outside the (0, inf)^3 point space, so the bracket is clamped
        // slightly above zero
        let mut lo = if price_floor > 0.0 {
            price_floor
        } else {
            1e-12 * price_ceiling
        };
        let mut hi = price_ceiling;
        if lo >= hi {
            return Err(Error::solver(format!(
                "maxwell bracket collapsed: [{lo}, {hi}] at I = {i}"
            )));
        }

        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match self.tie_line_area(mid, i, spin_lo, spin_hi)? {
                TieLineArea::Balanced(area) => {
                    if area > 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                TieLineArea::PriceTooLow => lo = mid,
                TieLineArea::PriceTooHigh => hi = mid,
            }
        }

        let saturation_price = 0.5 * (lo + hi);
        let roots = self.volume_roots(saturation_price, i)?;
        if roots.len() < 3 {
            return Err(Error::solver(format!(
                "saturation price {saturation_price} does not cut three volume roots at I = {i}"
            )));
        }
        let (volume_low, volume_high) = (roots[0], roots[2]);
        let area_residual = self
            .equal_area_defect(saturation_price, i, volume_low, volume_high)
            .abs();
        let tolerance = AREA_RESIDUAL_REL * saturation_price * (volume_high - volume_low);
        if area_residual > tolerance {
            return Err(Error::solver(format!(
                "equal-area defect {area_residual:e} exceeds tolerance {tolerance:e}"
            )));
        }
        Ok(CoexistenceResult {
            saturation_price,
            volume_low,
            volume_high,
            area_residual,
        })
    }

    /// Iso-ips path on the Van der Waals surface, geometrically sampled on
    /// `[volume_min, volume_max]`. With `corrected` set and a subcritical
    /// stability, prices inside the coexistence interval are replaced by the
    /// flat tie line at `P_sat`; on a supercritical iso-ips the flag has no
    /// effect.
    ///
    /// The model defines no entropy or growth potential, so samples carry
    /// E = 0 and G = 0; exports for this kind use only (Q, P, I).
    pub fn isotherm_path(
        &self,
        stability: f64,
        volume_min: f64,
        volume_max: f64,
        samples: usize,
        corrected: bool,
    ) -> Result<ProcessPath> {
        let i = crate::state::require_positive(stability, "stability I")?;
        let q_min = self.require_above_covolume(volume_min)?;
        let q_max = self.require_above_covolume(volume_max)?;
        if q_min >= q_max {
            return Err(Error::domain(format!(
                "volume range is empty or inverted: [{q_min}, {q_max}]"
            )));
        }
        if samples < 2 {
            return Err(Error::domain(format!(
                "an isotherm needs at least 2 samples, got {samples}"
            )));
        }

        let coexistence = if corrected && self.is_subcritical(i) {
            Some(self.maxwell_construction(i)?)
        } else {
            None
        };

        let ratio = q_max / q_min;
        let last = samples - 1;
        let mut states = Vec::with_capacity(samples);
        for k in 0..samples {
            let volume = if k == 0 {
                q_min
            } else if k == last {
                q_max
            } else {
                q_min * ratio.powf(k as f64 / last as f64)
            };
            let mut price = self.pressure(volume, i)?;
            if let Some(c) = &coexistence {
                if volume >= c.volume_low && volume <= c.volume_high {
                    price = c.saturation_price;
                }
            }
            if price <= 0.0 {
                return Err(Error::domain(format!(
                    "raw price is non-positive ({price}) at Q_m = {volume}, I = {i}; \
                     the sampled states must stay inside (0, inf)^3: narrow the \
                     volume range or use the corrected isotherm"
                )));
            }
            let point = StatePoint::new(price, volume, i)?;
            states.push(ExtendedState::new(point, 0.0, 0.0));
        }
        ProcessPath::new(PathKind::VdWIsotherm, states, self.to_string())
    }

    /// Raw price samples on a (Q_m, I) grid, emitted row by row with the
    /// stability sweep outermost. Prices may be negative here; the grid is
    /// surface data, not a state-point path.
    pub fn pressure_grid(
        &self,
        volume_min: f64,
        volume_max: f64,
        volume_count: usize,
        stability_min: f64,
        stability_max: f64,
        stability_count: usize,
    ) -> Result<Vec<(f64, f64, f64)>> {
        let q_min = self.require_above_covolume(volume_min)?;
        let q_max = self.require_above_covolume(volume_max)?;
        crate::state::require_positive(stability_min, "stability I_min")?;
        crate::state::require_positive(stability_max, "stability I_max")?;
        if q_min >= q_max || stability_min > stability_max {
            return Err(Error::domain(
                "grid ranges must satisfy Q_min < Q_max and I_min <= I_max".to_string(),
            ));
        }
        if volume_count < 2 || stability_count < 1 {
            return Err(Error::domain(
                "grid needs at least 2 volume points and 1 stability point".to_string(),
            ));
        }

        let q_ratio = q_max / q_min;
        let mut rows = Vec::with_capacity(volume_count * stability_count);
        for j in 0..stability_count {
            let stability = if stability_count == 1 {
                stability_min
            } else {
                let t = j as f64 / (stability_count - 1) as f64;
                stability_min + t * (stability_max - stability_min)
            };
            for k in 0..volume_count {
                let volume = if k == 0 {
                    q_min
                } else if k == volume_count - 1 {
                    q_max
                } else {
                    q_min * q_ratio.powf(k as f64 / (volume_count - 1) as f64)
                };
                rows.push((volume, self.pressure(volume, stability)?, stability));
            }
        }
        Ok(rows)
    }

    pub(crate) fn is_subcritical(&self, stability: f64) -> bool {
        stability < self.critical_point().stability() * (1.0 - CRITICAL_MARGIN_REL)
    }

    fn require_subcritical(&self, stability: f64) -> Result<()> {
        if self.is_subcritical(stability) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "stability {stability} is supercritical (critical stability {}): no \
                 coexistence region exists",
                self.critical_point().stability()
            )))
        }
    }

    fn require_above_covolume(&self, molar_volume: f64) -> Result<f64> {
        let b = self.covolume();
        if molar_volume.is_finite() && molar_volume > b {
            Ok(molar_volume)
        } else {
            Err(Error::domain(format!(
                "molar volume must exceed the excluded volume b = {b}, got {molar_volume}"
            )))
        }
    }

    /// Signed equal-area defect of the tie line at `price`:
    /// `F(Q_hi) - F(Q_lo) - price (Q_hi - Q_lo)` with
    /// `F(Q) = R I ln(Q - b) + a/Q`.
    fn equal_area_defect(&self, price: f64, stability: f64, q_lo: f64, q_hi: f64) -> f64 {
        let (a, b, r) = (self.cohesion(), self.covolume(), self.income_constant());
        let ri = r * stability;
        ri * ((q_hi - b).ln() - (q_lo - b).ln()) + a * (1.0 / q_hi - 1.0 / q_lo)
            - price * (q_hi - q_lo)
    }

    fn tie_line_area(
        &self,
        price: f64,
        stability: f64,
        spin_lo: f64,
        spin_hi: f64,
    ) -> Result<TieLineArea> {
        let roots = self.volume_roots(price, stability)?;
        if roots.len() >= 3 {
            return Ok(TieLineArea::Balanced(self.equal_area_defect(
                price,
                stability,
                roots[0],
                roots[2],
            )));
        }
        // a probe that grazed the bracket edge: classify by which branch
        // the surviving root sits on
        let q = roots[0];
        if q >= spin_hi {
            Ok(TieLineArea::PriceTooLow)
        } else if q <= spin_lo {
            Ok(TieLineArea::PriceTooHigh)
        } else {
            Err(Error::solver(format!(
                "ambiguous tie-line probe at P = {price}, I = {stability}: root {q} \
                 lies between the spinodal volumes ({spin_lo}, {spin_hi})"
            )))
        }
    }
}

enum TieLineArea {
    Balanced(f64),
    PriceTooLow,
    PriceTooHigh,
}
