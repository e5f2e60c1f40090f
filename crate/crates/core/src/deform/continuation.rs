use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::psi::{horner, horner_with_derivative};
use super::{DeformError, SymPoly};
use crate::exactpoly::{refine, squarefree_part, Interval};
use crate::twobridge::Fraction;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContinuationParams {
    /// Residual tolerance relative to the largest coefficient of `ψ(s_n, ·)`.
    pub rel_tol: f64,
    pub max_newton: usize,
    /// Largest move of `x` allowed in one corrector or fallback solve.
    pub trust_radius: f64,
    /// `log2` of the width the starting interval is refined to.
    pub start_width_log2: u32,
    /// Angle steps below this fraction of the full angle abort the path.
    pub min_step: f64,
    pub max_steps: usize,
}

impl Default for ContinuationParams {
    fn default() -> Self {
        ContinuationParams {
            rel_tol: 1e-9,
            max_newton: 100,
            trust_radius: 0.5,
            start_width_log2: 40,
            min_step: 1e-9,
            max_steps: 100_000,
        }
    }
}

/// Result of continuing a real root of `λ_K = ψ(2, ·)` to `s_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub fraction: Option<Fraction>,
    pub n: usize,
    pub s_n: f64,
    pub x0: f64,
    pub x_n: f64,
    /// `|ψ(s_n, x_n)|`.
    pub residual: f64,
    /// Bound the residual was held to.
    pub tolerance: f64,
    pub converged: bool,
    /// Accepted continuation steps in `θ`.
    pub steps: usize,
}

struct Solve {
    x: f64,
    residual: f64,
    iterations: usize,
}

/// Newton on `x ↦ p(x)`, kept within `trust` of `center`.
fn newton(c: &[f64], x_start: f64, center: f64, trust: f64, tol: f64, max_iter: usize) -> Option<Solve> {
    let mut x = x_start;
    for it in 0..max_iter {
        let (v, d) = horner_with_derivative(c, x);
        if v.abs() <= tol {
            // one more step tightens the root without risking the bound
            if d != 0.0 {
                let xn = x - v / d;
                let vn = horner(c, xn).abs();
                if vn <= v.abs() && (xn - center).abs() <= trust {
                    x = xn;
                }
            }
            let residual = horner(c, x).abs();
            return Some(Solve {
                x,
                residual,
                iterations: it,
            });
        }
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        x -= v / d;
        if !x.is_finite() || (x - center).abs() > trust {
            return None;
        }
    }
    None
}

/// Bracket a sign change within `trust` of `center`, nearest first, and bisect.
fn bisection_fallback(c: &[f64], center: f64, trust: f64, tol: f64) -> Option<Solve> {
    const SAMPLES: usize = 256;
    let h = trust / SAMPLES as f64;
    for side in [1.0, -1.0] {
        let mut a = center;
        let mut fa = horner(c, a);
        for i in 1..=SAMPLES {
            let b = center + side * h * i as f64;
            let fb = horner(c, b);
            if fa == 0.0 {
                return Some(Solve {
                    x: a,
                    residual: 0.0,
                    iterations: 0,
                });
            }
            if fa.signum() != fb.signum() {
                let (mut lo, mut hi, mut flo) = (a.min(b), a.max(b), if a < b { fa } else { fb });
                let mut iterations = 0;
                while hi - lo > f64::EPSILON * hi.abs().max(1.0) && iterations < 200 {
                    let mid = 0.5 * (lo + hi);
                    let fm = horner(c, mid);
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                    iterations += 1;
                }
                let x = 0.5 * (lo + hi);
                let residual = horner(c, x).abs();
                return (residual <= tol).then_some(Solve {
                    x,
                    residual,
                    iterations,
                });
            }
            a = b;
            fa = fb;
        }
    }
    None
}

fn max_abs(c: &[f64]) -> f64 {
    c.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Follow the root of `ψ(2cos θ, ·)` from `θ = 0` to `θ_end`, with an Euler
/// predictor and a Newton corrector. Returns the end point and step count.
fn track(psi: &SymPoly, x_start: f64, theta_end: f64, prm: &ContinuationParams) -> Option<(f64, usize)> {
    let mut theta = 0.0;
    let mut x = x_start;
    let mut h = theta_end / 16.0;
    let mut steps = 0;
    while theta < theta_end {
        if h < prm.min_step * theta_end || steps >= prm.max_steps {
            return None;
        }
        let next = (theta + h).min(theta_end);
        let c = psi.x_coeffs_at_angle(theta);
        let (_, dx) = horner_with_derivative(&c, x);
        let dtheta = horner(&psi.x_coeffs_dtheta(theta), x);
        let slope = if dx != 0.0 { -dtheta / dx } else { f64::NAN };
        let pred = x + (next - theta) * slope;
        if !pred.is_finite() || (pred - x).abs() > prm.trust_radius {
            h *= 0.5;
            continue;
        }
        let cn = psi.x_coeffs_at_angle(next);
        let tol = prm.rel_tol * max_abs(&cn);
        match newton(&cn, pred, x, prm.trust_radius, tol, 12) {
            // slow convergence usually means the step jumped toward another branch
            Some(sol) if sol.iterations <= 6 => {
                theta = next;
                x = sol.x;
                steps += 1;
                if sol.iterations <= 3 {
                    h *= 1.5;
                }
            }
            _ => h *= 0.5,
        }
    }
    Some((x, steps))
}

/// Continue the real root of `ψ(2, ·)` isolated by `x0` to
/// `s_n = 2cos(2π/n)`.
///
/// The root is refined exactly, then tracked in `θ` (with `s = 2cos θ`) in
/// steps whose corrector moves `x` by at most the trust radius. If tracking
/// fails, Newton and then bisection are tried directly at `s_n` within the
/// trust radius of the start. Failure of both gives `converged = false`.
pub fn continue_root(psi: &SymPoly, x0: &Interval, n: usize) -> Result<Witness, DeformError> {
    continue_root_with(psi, x0, n, &ContinuationParams::default())
}

pub fn continue_root_with(
    psi: &SymPoly,
    x0: &Interval,
    n: usize,
    prm: &ContinuationParams,
) -> Result<Witness, DeformError> {
    if n < 3 {
        return Err(DeformError::BadOrder(n));
    }
    let lambda = squarefree_part(&psi.at_two())?;
    let width = BigRational::new(BigInt::one(), BigInt::one() << prm.start_width_log2);
    let start = refine(&lambda, x0, &width)?.midpoint_f64();

    let theta = 2.0 * PI / n as f64;
    let s_n = 2.0 * theta.cos();
    let c = psi.x_coeffs_at_angle(theta);
    let tol = prm.rel_tol * max_abs(&c);

    let mut steps = 0;
    let mut solved = None;
    if let Some((x, k)) = track(psi, start, theta, prm) {
        steps = k;
        solved = newton(&c, x, x, prm.trust_radius, tol, prm.max_newton);
    }
    if solved.is_none() {
        solved = newton(&c, start, start, prm.trust_radius, tol, prm.max_newton)
            .or_else(|| bisection_fallback(&c, start, prm.trust_radius, tol));
    }
    let (x_n, converged) = match solved {
        Some(sol) => (sol.x, sol.residual <= tol),
        None => (f64::NAN, false),
    };
    let residual = if x_n.is_finite() { horner(&c, x_n).abs() } else { f64::INFINITY };
    Ok(Witness {
        fraction: psi.fraction(),
        n,
        s_n,
        x0: start,
        x_n,
        residual,
        tolerance: tol,
        converged,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::psi_of;
    use crate::exactpoly::isolate_real_roots;
    use crate::twobridge::{normalize, sign_sequences};

    fn psi(p: i64, q: i64) -> SymPoly {
        psi_of(&sign_sequences(&normalize(p, q).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_closed_form() {
        let ps = psi(3, 1);
        let root = &isolate_real_roots(&ps.at_two()).unwrap()[0];
        let w = continue_root(&ps, root, 6).unwrap();
        assert!(w.converged);
        assert!((w.s_n - 1.0).abs() < 1e-15);
        assert!((w.x_n - 2.0).abs() < 1e-12);
        assert!(w.residual < 1e-12);
        assert_eq!(w.x0, -1.0);
        for n in 3..=64 {
            let w = continue_root(&ps, root, n).unwrap();
            let c = (2.0 * PI / n as f64).cos();
            assert!(w.converged, "n = {n}");
            assert!((w.x_n - (3.0 - 4.0 * c * c)).abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn rejects_small_order() {
        let ps = psi(3, 1);
        let root = &isolate_real_roots(&ps.at_two()).unwrap()[0];
        assert_eq!(continue_root(&ps, root, 2), Err(DeformError::BadOrder(2)));
    }

    #[test]
    fn non_isolating_start_is_an_error() {
        let ps = psi(3, 1);
        let bad = Interval::from_ints(1, 2).unwrap();
        assert!(matches!(continue_root(&ps, &bad, 6), Err(DeformError::Poly(_))));
    }

    #[test]
    fn five_one_converges_for_large_n() {
        let ps = psi(5, 1);
        for root in isolate_real_roots(&ps.at_two()).unwrap() {
            let mut last = None;
            for n in [64, 32, 16] {
                let w = continue_root(&ps, &root, n).unwrap();
                assert!(w.converged, "n = {n}");
                assert!(w.residual <= w.tolerance);
                let d = (w.x_n - w.x0).abs();
                if let Some(prev) = last {
                    assert!(d >= prev);
                }
                last = Some(d);
            }
        }
    }

    #[test]
    fn failure_is_reported_not_raised() {
        let ps = psi(3, 1);
        let root = &isolate_real_roots(&ps.at_two()).unwrap()[0];
        let prm = ContinuationParams {
            trust_radius: 1e-6,
            ..Default::default()
        };
        let w = continue_root_with(&ps, root, 3, &prm).unwrap();
        assert!(!w.converged);
    }
}
