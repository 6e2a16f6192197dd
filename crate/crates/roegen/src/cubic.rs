//! Closed-form real-root solver for cubics, shared by the Van der Waals
//! volume equation and the cusp stationary-point equation.
//!
//! Strategy: depress the cubic, classify by the discriminant
//! `D = -4 p^3 - 27 q^2`, then take the trigonometric branch (three real
//! roots), the Cardano branch (one real root), or the exact degenerate
//! formulas (double / triple). Every root is finished with guarded Newton
//! polishing; near a triple root the closed form is already the backward-
//! stable answer and polishing is a no-op.
//!
//! Roots are returned ascending with multiplicity, so a double root appears
//! twice and a triple root three times.

use crate::error::{Error, Result};

/// Residual acceptance target: `|x^3 + c2 x^2 + c1 x + c0|` at a returned
/// root must not exceed `RESIDUAL_REL` times the coefficient scale at x.
pub const RESIDUAL_REL: f64 = 1e-12;

const MAX_POLISH_ITERATIONS: usize = 100;

/// Window (relative to the natural root magnitude) inside which the
/// depressed coefficients are treated as an exact triple root. Anything this
/// close to degenerate is within the backward error of forming the
/// coefficients in the first place.
const TRIPLE_REL: f64 = 1e-11;

/// Window on the discriminant, relative to its two summands, inside which
/// the cubic is treated as having a double root.
const DOUBLE_DISC_REL: f64 = 1e-13;

/// Real roots of the monic cubic `x^3 + c2 x^2 + c1 x + c0`, ascending,
/// with multiplicity.
pub fn real_roots_monic(c2: f64, c1: f64, c0: f64) -> Result<Vec<f64>> {
    if !(c2.is_finite() && c1.is_finite() && c0.is_finite()) {
        return Err(Error::solver("non-finite cubic coefficient".to_string()));
    }
    let shift = -c2 / 3.0;
    // depressed form: t^3 + p t + q with x = t + shift
    let p = c1 - c2 * c2 / 3.0;
    let q = (2.0 * c2 * c2 * c2 - 9.0 * c2 * c1) / 27.0 + c0;

    let mut roots: Vec<f64> = depressed_roots(p, q, shift.abs())
        .into_iter()
        .map(|t| t + shift)
        .collect();

    for root in roots.iter_mut() {
        *root = polish(*root, c2, c1, c0);
    }
    roots.sort_by(|a, b| a.total_cmp(b));

    for &root in &roots {
        let (value, _) = eval(root, c2, c1, c0);
        let scale = coefficient_scale(root, c2, c1, c0);
        if value.abs() > RESIDUAL_REL * scale {
            return Err(Error::solver(format!(
                "root polishing failed to converge within {MAX_POLISH_ITERATIONS} iterations: \
                 residual {:e} at root {root} (limit {:e})",
                value.abs(),
                RESIDUAL_REL * scale
            )));
        }
    }
    Ok(roots)
}

/// Real roots of the depressed cubic `x^3 + p x + q`, ascending, with
/// multiplicity.
pub fn real_roots_depressed(p: f64, q: f64) -> Result<Vec<f64>> {
    real_roots_monic(0.0, p, q)
}

/// Discriminant `-4 p^3 - 27 q^2` of `x^3 + p x + q`; positive exactly when
/// the cubic has three distinct real roots.
pub fn depressed_discriminant(p: f64, q: f64) -> f64 {
    -4.0 * p * p * p - 27.0 * q * q
}

fn depressed_roots(p: f64, q: f64, extra_scale: f64) -> Vec<f64> {
    // natural magnitude of the roots, including the shift so that noise
    // thresholds survive cancellation in the depression step
    let s = p.abs().sqrt().max(q.abs().cbrt()).max(extra_scale);
    if s == 0.0 || (p.abs() <= TRIPLE_REL * s * s && q.abs() <= TRIPLE_REL * s * s * s) {
        return vec![0.0, 0.0, 0.0];
    }

    let p_cubed_term = 4.0 * p.abs().powi(3);
    let q_squared_term = 27.0 * q * q;
    let disc = depressed_discriminant(p, q);

    if disc.abs() <= DOUBLE_DISC_REL * (p_cubed_term + q_squared_term) {
        // double root -3q/(2p), simple root 3q/p (p != 0 here, or the
        // triple branch above would have fired)
        let double = -1.5 * q / p;
        let simple = 3.0 * q / p;
        let mut r = vec![simple, double, double];
        r.sort_by(|a, b| a.total_cmp(b));
        return r;
    }

    if disc > 0.0 {
        // three distinct real roots; p < 0 is guaranteed in this branch
        let amplitude = 2.0 * (-p / 3.0).sqrt();
        let argument = (3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt();
        let phase = argument.clamp(-1.0, 1.0).acos() / 3.0;
        let third = 2.0 * std::f64::consts::PI / 3.0;
        vec![
            amplitude * phase.cos(),
            amplitude * (phase - third).cos(),
            amplitude * (phase + third).cos(),
        ]
    } else {
        // one real root via Cardano, picking the large-magnitude cube root
        // to dodge cancellation
        if q == 0.0 {
            // x (x^2 + p) with p > 0
            return vec![0.0];
        }
        let radical = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let w = -q / 2.0 - radical.copysign(q);
        let major = w.cbrt();
        vec![major - p / (3.0 * major)]
    }
}

fn eval(x: f64, c2: f64, c1: f64, c0: f64) -> (f64, f64) {
    let value = ((x + c2) * x + c1) * x + c0;
    let derivative = (3.0 * x + 2.0 * c2) * x + c1;
    (value, derivative)
}

fn coefficient_scale(x: f64, c2: f64, c1: f64, c0: f64) -> f64 {
    let ax = x.abs();
    (ax * ax * ax + (c2 * x * x).abs() + (c1 * x).abs() + c0.abs()).max(f64::MIN_POSITIVE)
}

/// Guarded Newton refinement: keep the best iterate seen, stop on a tiny
/// residual, a vanishing derivative, or a stalled step.
fn polish(start: f64, c2: f64, c1: f64, c0: f64) -> f64 {
    let mut x = start;
    let (mut best_value, _) = eval(x, c2, c1, c0);
    let mut best = x;
    for _ in 0..MAX_POLISH_ITERATIONS {
        let (value, derivative) = eval(x, c2, c1, c0);
        if value.abs() < best_value.abs() {
            best_value = value;
            best = x;
        }
        let scale = coefficient_scale(x, c2, c1, c0);
        if value.abs() <= 1e-15 * scale || derivative == 0.0 {
            break;
        }
        let step = value / derivative;
        if !step.is_finite() || step.abs() <= f64::EPSILON * x.abs() {
            break;
        }
        x -= step;
    }
    let (final_value, _) = eval(x, c2, c1, c0);
    if final_value.abs() <= best_value.abs() {
        x
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len(), "{actual:?} vs {expected:?}");
        for (a, e) in actual.iter().zip(expected) {
            assert!(
                (a - e).abs() <= tol * e.abs().max(1.0),
                "{actual:?} vs {expected:?}"
            );
        }
    }

    #[test]
    fn three_distinct_roots() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let r = real_roots_monic(-6.0, 11.0, -6.0).unwrap();
        assert_roots(&r, &[1.0, 2.0, 3.0], 1e-14);
    }

    #[test]
    fn single_real_root() {
        // (x-1)(x^2+1) = x^3 - x^2 + x - 1
        let r = real_roots_monic(-1.0, 1.0, -1.0).unwrap();
        assert_roots(&r, &[1.0], 1e-14);
    }

    #[test]
    fn double_root_reported_twice() {
        // x^3 - 3x + 2 = (x-1)^2 (x+2)
        let r = real_roots_depressed(-3.0, 2.0).unwrap();
        assert_roots(&r, &[-2.0, 1.0, 1.0], 1e-12);
    }

    #[test]
    fn triple_root_collapses() {
        // (x-3)^3 = x^3 - 9x^2 + 27x - 27
        let r = real_roots_monic(-9.0, 27.0, -27.0).unwrap();
        assert_roots(&r, &[3.0, 3.0, 3.0], 1e-12);
        assert_eq!(r[0], r[1]);
        assert_eq!(r[1], r[2]);
    }

    #[test]
    fn zero_cubic_root_at_origin() {
        let r = real_roots_depressed(0.0, 0.0).unwrap();
        assert_roots(&r, &[0.0, 0.0, 0.0], 0.0);
    }

    #[test]
    fn wide_magnitude_spread() {
        // roots 1e-4, 1, 1e4
        let (r1, r2, r3) = (1e-4, 1.0, 1e4);
        let c2 = -(r1 + r2 + r3);
        let c1 = r1 * r2 + r1 * r3 + r2 * r3;
        let c0 = -r1 * r2 * r3;
        let r = real_roots_monic(c2, c1, c0).unwrap();
        assert_roots(&r, &[r1, r2, r3], 1e-10);
    }

    #[test]
    fn discriminant_sign_matches_root_count() {
        let mut k = 0u32;
        for i in -20i32..=20 {
            for j in -20i32..=20 {
                let p = i as f64 / 4.0;
                let q = j as f64 / 4.0;
                let disc = depressed_discriminant(p, q);
                if disc.abs() < 1e-9 {
                    continue;
                }
                let roots = real_roots_depressed(p, q).unwrap();
                let distinct = roots
                    .iter()
                    .enumerate()
                    .filter(|(idx, r)| *idx == 0 || (roots[idx - 1] - **r).abs() > 1e-9)
                    .count();
                if disc > 0.0 {
                    assert_eq!(distinct, 3, "p={p} q={q}");
                } else {
                    assert_eq!(distinct, 1, "p={p} q={q}");
                }
                k += 1;
            }
        }
        assert!(k > 1000);
    }
}
