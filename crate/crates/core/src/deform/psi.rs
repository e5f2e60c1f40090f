use num_bigint::BigInt;
use num_traits::Zero;

use super::{DeformError, LaurentBi};
use crate::exactpoly::{rational_to_f64, IntPoly};
use crate::twobridge::Fraction;

/// `ψ(s, x)` with `φ(t, x) = ψ(t + t⁻¹, x)`.
///
/// Kept in two exact forms: the Chebyshev-like expansion
/// `ψ = c_0(x) + Σ_{j≥1} c_j(x) P_j(s)` with `P_j(t + t⁻¹) = t^j + t^{-j}`,
/// and the monomial expansion `Σ_i s^i g_i(x)`. Numerical evaluation uses the
/// first, since on `|s| ≤ 2` each `P_j(s) = 2cos(jθ)` is bounded while the
/// monomial coefficients of `P_j` grow like `2^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    fraction: Option<Fraction>,
    cheb: Vec<IntPoly>,
    mono: Vec<IntPoly>,
}

impl SymPoly {
    /// Attach the knot whose Riley polynomial must equal `ψ(2, ·)`.
    pub fn for_knot(self, fraction: Fraction, lambda: &IntPoly) -> Result<Self, DeformError> {
        if &self.at_two() != lambda {
            return Err(DeformError::PsiMismatch(fraction));
        }
        Ok(SymPoly {
            fraction: Some(fraction),
            ..self
        })
    }

    pub fn fraction(&self) -> Option<Fraction> {
        self.fraction
    }

    /// `c_j(x)`, indexed by `j`.
    pub fn chebyshev_coeffs(&self) -> &[IntPoly] {
        &self.cheb
    }

    /// `g_i(x)` in `ψ = Σ s^i g_i(x)`.
    pub fn s_coeffs(&self) -> &[IntPoly] {
        &self.mono
    }

    pub fn s_degree(&self) -> usize {
        self.mono.len().saturating_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.cheb.iter().filter_map(IntPoly::degree).max()
    }

    /// `ψ(2, x)`, exactly. `P_j(2) = 2` for `j ≥ 1`.
    pub fn at_two(&self) -> IntPoly {
        let mut acc = self.cheb.first().cloned().unwrap_or_default();
        let two = BigInt::from(2);
        for c in self.cheb.iter().skip(1) {
            acc = &acc + &c.scale(&two);
        }
        acc
    }

    /// Exact specialization at an integer `s`, from the monomial form.
    pub fn at_s(&self, s: i64) -> IntPoly {
        let s = BigInt::from(s);
        let mut acc = IntPoly::zero();
        for g in self.mono.iter().rev() {
            acc = &acc.scale(&s) + g;
        }
        acc
    }

    /// Coefficients in `x` of `ψ(2cos θ, ·)`, ascending.
    pub fn x_coeffs_at_angle(&self, theta: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.x_degree().map_or(1, |d| d + 1)];
        for (j, c) in self.cheb.iter().enumerate() {
            let w = if j == 0 { 1.0 } else { 2.0 * (j as f64 * theta).cos() };
            for (m, a) in c.coeffs().iter().enumerate() {
                out[m] += w * rational_to_f64(&a.clone().into());
            }
        }
        out
    }

    /// `∂ψ/∂θ` at `s = 2cos θ`, as coefficients in `x`.
    pub fn x_coeffs_dtheta(&self, theta: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.x_degree().map_or(1, |d| d + 1)];
        for (j, c) in self.cheb.iter().enumerate().skip(1) {
            let w = -2.0 * j as f64 * (j as f64 * theta).sin();
            for (m, a) in c.coeffs().iter().enumerate() {
                out[m] += w * rational_to_f64(&a.clone().into());
            }
        }
        out
    }

    /// `ψ(s, x)` in floating point for `|s| ≤ 2`.
    pub fn eval(&self, s: f64, x: f64) -> f64 {
        horner(&self.x_coeffs_at_angle(angle_of(s)), x)
    }
}

/// `θ ∈ [0, π]` with `2cos θ = s`, clamped at the ends.
pub fn angle_of(s: f64) -> f64 {
    (s / 2.0).clamp(-1.0, 1.0).acos()
}

pub(crate) fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

/// `(p(x), p'(x))`.
pub(crate) fn horner_with_derivative(c: &[f64], x: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut d = 0.0;
    for a in c.iter().rev() {
        d = d * x + v;
        v = v * x + a;
    }
    (v, d)
}

/// Monomial coefficients of `P_j(s)` for `j = 0..=jmax`, with `P_0 = 2`,
/// `P_1 = s`, `P_j = s P_{j-1} - P_{j-2}`.
pub fn trace_polynomials(jmax: usize) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::constant(BigInt::from(2))];
    if jmax >= 1 {
        out.push(IntPoly::x());
    }
    for j in 2..=jmax {
        let next = &out[j - 1].shift_up(1) - &out[j - 2];
        out.push(next);
    }
    out
}

/// Rewrite a `t ↔ t⁻¹` symmetric `φ` in `s = t + t⁻¹`.
pub fn to_psi(phi: &LaurentBi) -> Result<SymPoly, DeformError> {
    if !phi.is_symmetric() {
        return Err(DeformError::Asymmetric);
    }
    let jmax = phi.t_range().map_or(0, |(_, hi)| hi.max(0) as usize);
    let xdeg = phi.x_degree().unwrap_or(0) as usize;
    let mut cheb = vec![vec![BigInt::zero(); xdeg + 1]; jmax + 1];
    for (j, m, c) in phi.terms() {
        if j >= 0 {
            cheb[j as usize][m as usize] = c.clone();
        }
    }
    let cheb: Vec<IntPoly> = cheb.into_iter().map(IntPoly::new).collect();

    let traces = trace_polynomials(jmax);
    let mut mono = vec![vec![BigInt::zero(); xdeg + 1]; jmax + 1];
    for (j, c) in cheb.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if j == 0 {
            for (m, a) in c.coeffs().iter().enumerate() {
                mono[0][m] += a;
            }
            continue;
        }
        for (i, pc) in traces[j].coeffs().iter().enumerate() {
            if pc.is_zero() {
                continue;
            }
            for (m, a) in c.coeffs().iter().enumerate() {
                mono[i][m] += pc * a;
            }
        }
    }
    let mut mono: Vec<IntPoly> = mono.into_iter().map(IntPoly::new).collect();
    while mono.len() > 1 && mono.last().is_some_and(IntPoly::is_zero) {
        mono.pop();
    }
    Ok(SymPoly {
        fraction: None,
        cheb,
        mono,
    })
}
