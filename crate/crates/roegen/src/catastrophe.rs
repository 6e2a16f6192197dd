//! Diffeomorphism from the (P, Q, I) octant onto cusp-catastrophe
//! coordinates (x, alpha, beta), and the cusp potential whose stationary
//! points mirror the Van der Waals volume roots.
//!
//! Substituting `u = 1/Q` into the Van der Waals equation and clearing
//! denominators leaves the monic cubic
//! `u^3 - u^2/b + (P b + R I)/(a b) u - P/(a b) = 0`; depressing it with
//! `x = u - 1/(3b)` produces `x^3 + alpha x + beta = 0` with
//!
//! ```text
//! x     = 1/Q - 1/(3b)
//! alpha = P/a + R I/(a b) - 1/(3 b^2)
//! beta  = -2P/(3 a b) + R I/(3 a b^2) - 2/(27 b^3)
//! ```
//!
//! so states on the surface land exactly on the cuspidal manifold and the
//! critical point lands on the origin. The map is affine in (P, I) at fixed
//! Q, which is what makes the closed-form inverse below possible and proves
//! the diffeomorphism property constructively.

use serde::{Deserialize, Serialize};

use crate::cubic;
use crate::error::{Error, Result};
use crate::state::{StatePoint, VdWModel};

/// Cusp coordinates. On the image of the octant, `x > -1/(3b)` and
/// `alpha > -1/(3b^2)`; `beta` is unconstrained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CuspCoords {
    x: f64,
    alpha: f64,
    beta: f64,
}

impl CuspCoords {
    pub fn new(x: f64, alpha: f64, beta: f64) -> Self {
        CuspCoords { x, alpha, beta }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Forward map. Infallible: every `StatePoint` lies in the open octant by
/// construction.
pub fn phi(model: &VdWModel, state: &StatePoint) -> CuspCoords {
    let (a, b, r) = (
        model.cohesion(),
        model.covolume(),
        model.income_constant(),
    );
    let (p, q, i) = (state.price(), state.volume(), state.stability());
    let ri = r * i;
    CuspCoords {
        x: 1.0 / q - 1.0 / (3.0 * b),
        alpha: p / a + ri / (a * b) - 1.0 / (3.0 * b * b),
        beta: -2.0 * p / (3.0 * a * b) + ri / (3.0 * a * b * b) - 2.0 / (27.0 * b * b * b),
    }
}

/// Closed-form inverse: recover Q from x, then solve the 2x2 linear system
/// in (P, R I) from (alpha, beta). Fails with a domain error when the
/// recovered coordinates leave the open octant, i.e. when `coords` is
/// outside the image of `phi`.
pub fn phi_inverse(model: &VdWModel, coords: &CuspCoords) -> Result<StatePoint> {
    let (a, b, r) = (
        model.cohesion(),
        model.covolume(),
        model.income_constant(),
    );
    let inv_q = coords.x + 1.0 / (3.0 * b);
    if !inv_q.is_finite() || inv_q <= 0.0 {
        return Err(Error::domain(format!(
            "x = {} maps to a non-positive volume: outside the image of phi",
            coords.x
        )));
    }
    let volume = 1.0 / inv_q;

    // alpha + 1/(3b^2) = P/a + RI/(ab);  beta + 2/(27b^3) = -2P/(3ab) + RI/(3ab^2)
    let lhs_alpha = coords.alpha + 1.0 / (3.0 * b * b);
    let lhs_beta = coords.beta + 2.0 / (27.0 * b * b * b);
    let price = a * lhs_alpha / 3.0 - a * b * lhs_beta;
    let stability = b * (a * lhs_alpha - price) / r;

    StatePoint::new(price, volume, stability).map_err(|_| {
        Error::domain(format!(
            "({}, {}, {}) recovers (P, Q, I) = ({price}, {volume}, {stability}): \
             outside the image of phi",
            coords.x, coords.alpha, coords.beta
        ))
    })
}

/// `x^3 + alpha x + beta`; zero exactly on the image of the Van der Waals
/// surface.
pub fn surface_residual(coords: &CuspCoords) -> f64 {
    let x = coords.x;
    x * x * x + coords.alpha * x + coords.beta
}

/// The cusp potential `f(x) = x^4/4 + alpha x^2/2 + beta x`.
pub fn cusp_potential(coords: &CuspCoords) -> f64 {
    let x = coords.x;
    0.25 * x * x * x * x + 0.5 * coords.alpha * x * x + coords.beta * x
}

/// Stationary points of the cusp potential: the real roots of
/// `x^3 + alpha x + beta = 0`, ascending, double roots reported twice.
pub fn cusp_stationary_points(alpha: f64, beta: f64) -> Result<Vec<f64>> {
    cubic::real_roots_depressed(alpha, beta)
}

/// Discriminant `-4 alpha^3 - 27 beta^2`: positive exactly on the
/// three-stationary-point regime inside the cusp.
pub fn cusp_discriminant(alpha: f64, beta: f64) -> f64 {
    cubic::depressed_discriminant(alpha, beta)
}

/// (alpha, beta, distinct stationary-point count) over a rectangular grid,
/// row-major with alpha outermost, for plotting the bifurcation set.
pub fn bifurcation_grid(
    alpha_min: f64,
    alpha_max: f64,
    alpha_count: usize,
    beta_min: f64,
    beta_max: f64,
    beta_count: usize,
) -> Result<Vec<(f64, f64, u8)>> {
    if alpha_count == 0 || beta_count == 0 {
        return Err(Error::domain(
            "bifurcation grid needs at least one point per axis".to_string(),
        ));
    }
    let finite = alpha_min.is_finite()
        && alpha_max.is_finite()
        && beta_min.is_finite()
        && beta_max.is_finite();
    if !finite || alpha_min > alpha_max || beta_min > beta_max {
        return Err(Error::domain(
            "bifurcation grid ranges are inverted or non-finite".to_string(),
        ));
    }
    let mut rows = Vec::with_capacity(alpha_count * beta_count);
    for ai in 0..alpha_count {
        let alpha = lerp_grid(alpha_min, alpha_max, ai, alpha_count);
        for bi in 0..beta_count {
            let beta = lerp_grid(beta_min, beta_max, bi, beta_count);
            let disc = cusp_discriminant(alpha, beta);
            let count = if disc > 0.0 {
                3
            } else if disc == 0.0 && (alpha != 0.0 || beta != 0.0) {
                2
            } else {
                1
            };
            rows.push((alpha, beta, count));
        }
    }
    Ok(rows)
}

fn lerp_grid(min: f64, max: f64, index: usize, count: usize) -> f64 {
    if count == 1 {
        min
    } else if index == count - 1 {
        max
    } else {
        min + (max - min) * index as f64 / (count - 1) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_rel(actual: f64, expected: f64, tol: f64) {
        let scale = expected.abs().max(1.0);
        assert!(
            (actual - expected).abs() <= tol * scale,
            "actual {actual} expected {expected} (tol {tol})"
        );
    }

    fn reference_model() -> VdWModel {
        VdWModel::new(27.0, 1.0, 8.0, 1.0).unwrap()
    }

    #[test]
    fn critical_point_maps_to_origin() {
        let m = reference_model();
        let c = m.critical_point();
        let s = StatePoint::new(c.price(), c.volume(), c.stability()).unwrap();
        let coords = phi(&m, &s);
        assert!(coords.x().abs() <= 1e-15, "{coords:?}");
        assert!(coords.alpha().abs() <= 1e-15, "{coords:?}");
        assert!(coords.beta().abs() <= 1e-15, "{coords:?}");
    }

    #[test]
    fn phi_hand_arithmetic_at_unit_point() {
        // a=27, b=1, R=8, state (1, 1, 1):
        //   x     = 1 - 1/3 = 2/3
        //   alpha = 1/27 + 8/27 - 9/27 = 0
        //   beta  = -2/81 + 8/81 - 6/81 = 0
        let m = reference_model();
        let s = StatePoint::new(1.0, 1.0, 1.0).unwrap();
        let coords = phi(&m, &s);
        assert_rel(coords.x(), 2.0 / 3.0, 1e-15);
        assert!(coords.alpha().abs() <= 1e-15, "{coords:?}");
        assert!(coords.beta().abs() <= 1e-15, "{coords:?}");
    }

    #[test]
    fn x_approaches_excluded_volume_limit() {
        let m = reference_model();
        let s = StatePoint::new(1.0, 1e12, 1.0).unwrap();
        let coords = phi(&m, &s);
        assert_rel(coords.x(), -1.0 / 3.0, 1e-10);
        assert!(coords.x() > -1.0 / 3.0);
    }

    #[test]
    fn phi_inverse_recovers_critical_point() {
        let m = reference_model();
        let c = m.critical_point();
        let s = phi_inverse(&m, &CuspCoords::new(0.0, 0.0, 0.0)).unwrap();
        assert_rel(s.price(), c.price(), 1e-14);
        assert_rel(s.volume(), c.volume(), 1e-14);
        assert_rel(s.stability(), c.stability(), 1e-14);
    }

    #[test]
    fn phi_round_trip() {
        let m = VdWModel::new(3.1, 0.4, 2.7, 1.0).unwrap();
        for (p, q, i) in [
            (0.5, 1.7, 0.9),
            (2.0, 0.9, 3.0),
            (0.01, 30.0, 0.2),
            (8.0, 1.3, 5.5),
        ] {
            let s = StatePoint::new(p, q, i).unwrap();
            let back = phi_inverse(&m, &phi(&m, &s)).unwrap();
            assert_rel(back.price(), p, 1e-10);
            assert_rel(back.volume(), q, 1e-10);
            assert_rel(back.stability(), i, 1e-10);
        }
    }

    #[test]
    fn phi_inverse_rejects_points_outside_image() {
        let m = reference_model();
        // x below -1/(3b): no positive volume
        assert!(matches!(
            phi_inverse(&m, &CuspCoords::new(-0.4, 0.0, 0.0)),
            Err(Error::Domain(_))
        ));
        // pushing beta up forces the recovered price negative
        let s = StatePoint::new(1.0, 2.0, 1.0).unwrap();
        let mut c = phi(&m, &s);
        c.beta += 1e3;
        assert!(matches!(phi_inverse(&m, &c), Err(Error::Domain(_))));
    }

    #[test]
    fn surface_states_satisfy_cusp_equation() {
        let m = VdWModel::new(5.0, 0.25, 3.0, 1.0).unwrap();
        let crit = m.critical_point();
        for k in 0..300 {
            let q = 0.3 + 0.08 * k as f64;
            let i = crit.stability() * (0.6 + 0.005 * k as f64);
            let p = match m.pressure(q, i) {
                Ok(p) if p > 0.0 => p,
                _ => continue,
            };
            let s = StatePoint::new(p, q, i).unwrap();
            let coords = phi(&m, &s);
            let scale = coords
                .x()
                .abs()
                .powi(3)
                .max((coords.alpha() * coords.x()).abs())
                .max(coords.beta().abs())
                .max(1.0);
            assert!(
                surface_residual(&coords).abs() <= 1e-9 * scale,
                "residual {} at Q={q} I={i}",
                surface_residual(&coords)
            );
        }
    }

    #[test]
    fn surface_residual_plain_values() {
        assert_eq!(surface_residual(&CuspCoords::new(0.0, 0.0, 0.0)), 0.0);
        assert_eq!(surface_residual(&CuspCoords::new(1.0, 1.0, 1.0)), 3.0);
    }

    #[test]
    fn potential_vanishes_at_origin_for_all_parameters() {
        for (alpha, beta) in [(0.0, 0.0), (-3.0, 2.0), (5.0, -1.0)] {
            assert_eq!(cusp_potential(&CuspCoords::new(0.0, alpha, beta)), 0.0);
        }
    }

    #[test]
    fn stationary_points_factor_example() {
        // x^3 - 3x + 2 = (x - 1)^2 (x + 2)
        let pts = cusp_stationary_points(-3.0, 2.0).unwrap();
        assert_eq!(pts.len(), 3);
        assert_rel(pts[0], -2.0, 1e-12);
        assert_rel(pts[1], 1.0, 1e-12);
        assert_rel(pts[2], 1.0, 1e-12);
    }

    #[test]
    fn stationary_points_match_volume_roots() {
        let m = reference_model();
        let crit = m.critical_point();
        let i = 0.88 * crit.stability();
        let coexistence = m.maxwell_construction(i).unwrap();
        let p = coexistence.saturation_price();
        let volumes = m.volume_roots(p, i).unwrap();
        assert_eq!(volumes.len(), 3);

        // any surface state at this (P, I) carries the same (alpha, beta)
        let witness = StatePoint::new(p, volumes[0], i).unwrap();
        let coords = phi(&m, &witness);
        let stationary = cusp_stationary_points(coords.alpha(), coords.beta()).unwrap();
        assert_eq!(stationary.len(), 3);

        let b = m.covolume();
        let mut mapped: Vec<f64> = volumes.iter().map(|q| 1.0 / q - 1.0 / (3.0 * b)).collect();
        mapped.sort_by(|x, y| x.total_cmp(y));
        for (expected, actual) in mapped.iter().zip(stationary.iter()) {
            assert!((expected - actual).abs() <= 1e-8, "{mapped:?} vs {stationary:?}");
        }
    }

    #[test]
    fn supercritical_isotherm_has_single_stationary_point() {
        let m = reference_model();
        let crit = m.critical_point();
        let i = 1.2 * crit.stability();
        for k in 1..60 {
            let q = 1.0 + 0.35 * k as f64;
            let p = m.pressure(q, i).unwrap();
            if p <= 0.0 {
                continue;
            }
            let s = StatePoint::new(p, q, i).unwrap();
            let coords = phi(&m, &s);
            let pts = cusp_stationary_points(coords.alpha(), coords.beta()).unwrap();
            let distinct = pts
                .iter()
                .enumerate()
                .filter(|(idx, v)| *idx == 0 || (pts[idx - 1] - **v).abs() > 1e-12)
                .count();
            assert_eq!(distinct, 1, "at Q = {q}");
        }
    }

    #[test]
    fn discriminant_classifies_grid() {
        let rows = bifurcation_grid(-2.0, 2.0, 21, -2.0, 2.0, 21).unwrap();
        assert_eq!(rows.len(), 441);
        for (alpha, beta, count) in rows {
            let pts = cusp_stationary_points(alpha, beta).unwrap();
            let distinct = pts
                .iter()
                .enumerate()
                .filter(|(idx, v)| *idx == 0 || (pts[idx - 1] - **v).abs() > 1e-9)
                .count();
            if cusp_discriminant(alpha, beta).abs() > 1e-12 {
                assert_eq!(usize::from(count), distinct, "alpha={alpha} beta={beta}");
            }
        }
    }

    #[test]
    fn bifurcation_grid_rejects_empty() {
        assert!(bifurcation_grid(-1.0, 1.0, 0, -1.0, 1.0, 5).is_err());
    }
}
