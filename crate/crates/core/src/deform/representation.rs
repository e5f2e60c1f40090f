use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{angle_of, DeformError};
use crate::twobridge::{sign_sequences, Fraction};

type M2 = [[Complex64; 2]; 2];

fn mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn identity() -> M2 {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    [[one, zero], [zero, one]]
}

fn max_entry(m: &M2) -> f64 {
    m.iter().flatten().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

fn distance(a: &M2, b: &M2) -> f64 {
    let mut d = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            d = d.max((a[i][j] - b[i][j]).norm());
        }
    }
    d
}

fn power(m: &M2, n: usize) -> M2 {
    (0..n).fold(identity(), |acc, _| mul(&acc, m))
}

/// Numerical check of `a ↦ (t 1; 0 t⁻¹)`, `b ↦ (t 0; x t⁻¹)` at
/// `t = e^{iθ}`, `s = 2cos θ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationCheck {
    pub s: f64,
    pub x: f64,
    /// `max |(W ρ(a) - ρ(b) W)_{ij}|`.
    pub residual: f64,
    /// `|(W ρ(a) - ρ(b) W)_{ij}|` in row-major order. Entry (1,2) is `φ`
    /// scaled by `t`; (2,1) and (2,2) are the remaining entry conditions.
    pub entries: [f64; 4],
    /// `max |W_{ij}|`, the scale the residual should be read against.
    pub scale: f64,
    /// `|tr ρ(a) - s|`.
    pub trace_error: f64,
    /// `max |ρ(a)^n - I|`, when an order is requested.
    pub order_error: Option<f64>,
    /// `max |R(2π/n)^n - I|` for the rotation `R(θ) = (cos θ -sin θ; sin θ cos θ)`.
    pub rotation_order_error: Option<f64>,
}

/// Evaluate the representation condition for `k` at trace `s` and parameter
/// `x`. The matrix word is multiplied out numerically from the sign sequence,
/// independently of the exact `φ`.
pub fn verify_representation(
    k: &Fraction,
    s: f64,
    x: f64,
    n: Option<usize>,
) -> Result<RepresentationCheck, DeformError> {
    if !(-2.0..=2.0).contains(&s) || s.is_nan() {
        return Err(DeformError::BadTrace(s));
    }
    if let Some(n) = n {
        if n < 3 {
            return Err(DeformError::BadOrder(n));
        }
    }
    let sd = sign_sequences(k).map_err(crate::riley::RileyError::from)?;
    let theta = angle_of(s);
    let t = Complex64::from_polar(1.0, theta);
    let ti = t.inv();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let xc = Complex64::new(x, 0.0);
    let a = [[t, one], [zero, ti]];
    let a_inv = [[ti, -one], [zero, t]];
    let b = [[t, zero], [xc, ti]];
    let b_inv = [[ti, zero], [-xc, t]];

    let mut w = identity();
    for i in 0..sd.n() {
        w = mul(&w, if sd.eps[i] > 0 { &a } else { &a_inv });
        w = mul(&w, if sd.eta[i] > 0 { &b } else { &b_inv });
    }
    let lhs = mul(&w, &a);
    let rhs = mul(&b, &w);
    let entries = [
        (lhs[0][0] - rhs[0][0]).norm(),
        (lhs[0][1] - rhs[0][1]).norm(),
        (lhs[1][0] - rhs[1][0]).norm(),
        (lhs[1][1] - rhs[1][1]).norm(),
    ];
    let residual = entries.iter().fold(0.0f64, |m, v| m.max(*v));

    let (order_error, rotation_order_error) = match n {
        Some(n) => {
            let rot_angle = 2.0 * PI / n as f64;
            let (sn, cs) = rot_angle.sin_cos();
            let rot = [
                [Complex64::new(cs, 0.0), Complex64::new(-sn, 0.0)],
                [Complex64::new(sn, 0.0), Complex64::new(cs, 0.0)],
            ];
            (
                Some(distance(&power(&a, n), &identity())),
                Some(distance(&power(&rot, n), &identity())),
            )
        }
        None => (None, None),
    };
    Ok(RepresentationCheck {
        s,
        x,
        residual,
        entries,
        scale: max_entry(&w),
        trace_error: ((t + ti).re - s).abs().max((t + ti).im.abs()),
        order_error,
        rotation_order_error,
    })
}
