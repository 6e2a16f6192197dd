//! The ideal income equation of state `P Q = n R I` and its reversible
//! processes.
//!
//! Iso-ips (constant stability) and isentropic (constant entropy) paths are
//! generated on a geometric volume grid, so the power-law pressure profiles
//! `P ~ 1/Q` and `P ~ Q^-(f+2)/f` are sampled with log-uniform resolution.
//! Work and goods-production integrals prefer the closed forms the path kind
//! permits; `work_quadrature` and `goods_quadrature` always integrate the
//! stored samples and serve as the independent numeric route.

use crate::error::{Error, Result};
use crate::state::{ExtendedState, IdealIncomeModel, PathKind, ProcessPath, StatePoint};

/// Relative tolerance for accepting that a starting point sits on the
/// equation-of-state surface.
pub const EOS_REL_TOL: f64 = 1e-9;

impl IdealIncomeModel {
    /// Price level on the surface: `P = n R I / Q`.
    pub fn pressure(&self, volume: f64, stability: f64) -> Result<f64> {
        let q = crate::state::require_positive(volume, "volume Q")?;
        let i = crate::state::require_positive(stability, "stability I")?;
        Ok(self.extensive_constant() * i / q)
    }

    /// Growth potential `G = (f/2) n R I`, a function of stability only.
    pub fn growth_potential(&self, stability: f64) -> Result<f64> {
        let i = crate::state::require_positive(stability, "stability I")?;
        let f = f64::from(self.degrees_of_freedom());
        Ok(0.5 * f * self.extensive_constant() * i)
    }

    /// Entropy relative to the model reference state:
    /// `E = n R ln(Q/Q_ref) + (f/2) n R ln(I/I_ref)`.
    pub fn entropy(&self, volume: f64, stability: f64) -> Result<f64> {
        let q = crate::state::require_positive(volume, "volume Q")?;
        let i = crate::state::require_positive(stability, "stability I")?;
        let (q_ref, i_ref) = self.reference();
        let nr = self.extensive_constant();
        let f = f64::from(self.degrees_of_freedom());
        Ok(nr * (q / q_ref).ln() + 0.5 * f * nr * (i / i_ref).ln())
    }

    /// Entropy change of an iso-ips process between two volumes:
    /// `n R ln(Q_to / Q_from)`, negative for compression.
    pub fn delta_entropy_isothermal(&self, volume_from: f64, volume_to: f64) -> Result<f64> {
        let from = crate::state::require_positive(volume_from, "volume Q_from")?;
        let to = crate::state::require_positive(volume_to, "volume Q_to")?;
        Ok(self.extensive_constant() * (to / from).ln())
    }

    /// The point reached from `from` by the reversible isentropic process
    /// ending at volume `volume_to`. Stability follows
    /// `I_to = I_from (Q_from/Q_to)^(2/f)` and the price comes back from the
    /// equation of state, so `P Q^((f+2)/f)` is preserved.
    pub fn adiabat_endpoint(&self, from: &StatePoint, volume_to: f64) -> Result<StatePoint> {
        let q_to = crate::state::require_positive(volume_to, "volume Q_to")?;
        let nri = self.extensive_constant() * from.stability();
        let closure = (from.price() * from.volume() - nri).abs();
        if closure > EOS_REL_TOL * nri {
            return Err(Error::model(format!(
                "starting point violates P Q = n R I: |P Q - n R I| = {closure:e} \
                 exceeds {EOS_REL_TOL:e} relative"
            )));
        }
        if q_to == from.volume() {
            return Ok(*from);
        }
        let exponent = 2.0 / f64::from(self.degrees_of_freedom());
        let stability = from.stability() * (from.volume() / q_to).powf(exponent);
        let price = self.extensive_constant() * stability / q_to;
        StatePoint::new(price, q_to, stability)
    }

    /// The extended state (P, Q, I, E, G) at a surface point.
    pub fn state_at(&self, volume: f64, stability: f64) -> Result<ExtendedState> {
        let price = self.pressure(volume, stability)?;
        let point = StatePoint::new(price, volume, stability)?;
        Ok(ExtendedState::new(
            point,
            self.entropy(volume, stability)?,
            self.growth_potential(stability)?,
        ))
    }

    /// Iso-ips path at stability `stability`, sampled on `samples` points
    /// geometrically spaced from `volume_from` to `volume_to`.
    pub fn isotherm_path(
        &self,
        stability: f64,
        volume_from: f64,
        volume_to: f64,
        samples: usize,
    ) -> Result<ProcessPath> {
        crate::state::require_positive(stability, "stability I")?;
        let from = crate::state::require_positive(volume_from, "volume Q_from")?;
        let to = crate::state::require_positive(volume_to, "volume Q_to")?;
        if from == to {
            return Err(Error::domain(
                "degenerate iso-ips interval: Q_from and Q_to must differ".to_string(),
            ));
        }
        check_sample_count(samples)?;

        let mut states = Vec::with_capacity(samples);
        for volume in geometric_grid(from, to, samples) {
            states.push(self.state_at(volume, stability)?);
        }
        ProcessPath::new(PathKind::IsoIps, states, self.to_string())
    }

    /// Isentropic path from `from` to volume `volume_to`, every sample
    /// produced by `adiabat_endpoint`. A degenerate request with
    /// `volume_to == from.volume()` yields a stationary path.
    pub fn adiabat_path(
        &self,
        from: &StatePoint,
        volume_to: f64,
        samples: usize,
    ) -> Result<ProcessPath> {
        let to = crate::state::require_positive(volume_to, "volume Q_to")?;
        check_sample_count(samples)?;

        let mut states = Vec::with_capacity(samples);
        if to == from.volume() {
            let endpoint = self.adiabat_endpoint(from, to)?;
            let state = ExtendedState::new(
                endpoint,
                self.entropy(endpoint.volume(), endpoint.stability())?,
                self.growth_potential(endpoint.stability())?,
            );
            states.resize(samples, state);
        } else {
            for volume in geometric_grid(from.volume(), to, samples) {
                let point = self.adiabat_endpoint(from, volume)?;
                states.push(ExtendedState::new(
                    point,
                    self.entropy(point.volume(), point.stability())?,
                    self.growth_potential(point.stability())?,
                ));
            }
        }
        ProcessPath::new(PathKind::Isentropic, states, self.to_string())
    }
}

fn check_sample_count(samples: usize) -> Result<()> {
    if samples < 2 {
        Err(Error::domain(format!(
            "a path needs at least 2 samples, got {samples}"
        )))
    } else {
        Ok(())
    }
}

/// Log-uniform grid from `from` to `to` inclusive, endpoints exact.
fn geometric_grid(from: f64, to: f64, samples: usize) -> impl Iterator<Item = f64> {
    let ratio = to / from;
    let last = samples - 1;
    (0..samples).map(move |k| {
        if k == 0 {
            from
        } else if k == last {
            to
        } else {
            from * ratio.powf(k as f64 / last as f64)
        }
    })
}

/// Work `int P dQ` along a path, positive for expansion.
///
/// Iso-ips legs use the closed form `n R I ln(Q_to/Q_from)` (recovered from
/// the samples through `n R I = P_0 Q_0`), isentropic legs use
/// `-dG = G_from - G_to`, and Van der Waals isotherms fall back to the
/// trapezoid quadrature of the samples. The closed forms are written as
/// differences so reversing a path negates the result exactly.
pub fn work_along(path: &ProcessPath) -> Result<f64> {
    require_samples(path)?;
    let first = path.first();
    let last = path.last();
    match path.kind() {
        PathKind::IsoIps => {
            let nri = first.price() * first.volume();
            Ok(nri * (last.volume().ln() - first.volume().ln()))
        }
        PathKind::Isentropic => Ok(first.growth() - last.growth()),
        PathKind::VdWIsotherm => work_quadrature(path),
    }
}

/// Goods production `int I dE` along a path.
///
/// Iso-ips legs use `I (E_to - E_from)`; isentropic legs are exactly zero;
/// anything else integrates the samples.
pub fn goods_production_along(path: &ProcessPath) -> Result<f64> {
    require_samples(path)?;
    match path.kind() {
        PathKind::IsoIps => {
            let stability = path.first().stability();
            Ok(stability * (path.last().entropy() - path.first().entropy()))
        }
        PathKind::Isentropic => Ok(0.0),
        PathKind::VdWIsotherm => goods_quadrature(path),
    }
}

/// Composite-trapezoid `int P dQ` over the stored samples, independent of
/// the closed forms above.
pub fn work_quadrature(path: &ProcessPath) -> Result<f64> {
    trapezoid(path, |s| (s.volume(), s.price()))
}

/// Composite-trapezoid `int I dE` over the stored samples.
pub fn goods_quadrature(path: &ProcessPath) -> Result<f64> {
    trapezoid(path, |s| (s.entropy(), s.stability()))
}

/// Trapezoid rule accumulated in ascending-volume order so that a reversed
/// path integrates to the exact negation.
fn trapezoid(path: &ProcessPath, axis: impl Fn(&ExtendedState) -> (f64, f64)) -> Result<f64> {
    require_samples(path)?;
    let samples = path.samples();
    let ascending = samples[0].volume() <= samples[samples.len() - 1].volume();

    let mut total = 0.0;
    let n = samples.len();
    for k in 0..n - 1 {
        let (lo, hi) = if ascending {
            (&samples[k], &samples[k + 1])
        } else {
            // walk a descending path from its far end so the terms and the
            // accumulation order match the forward traversal exactly
            (&samples[n - 1 - k], &samples[n - 2 - k])
        };
        let (x0, y0) = axis(lo);
        let (x1, y1) = axis(hi);
        total += 0.5 * (y0 + y1) * (x1 - x0);
    }
    Ok(if ascending { total } else { -total })
}

fn require_samples(path: &ProcessPath) -> Result<()> {
    if path.samples().len() < 2 {
        Err(Error::path(format!(
            "integration needs at least 2 samples, got {}",
            path.samples().len()
        )))
    } else {
        Ok(())
    }
}
