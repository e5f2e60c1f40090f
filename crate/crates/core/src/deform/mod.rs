//! Non-parabolic deformations of the Riley representation.
//!
//! With `a ↦ (t 1; 0 t⁻¹)` and `b ↦ (t 0; x t⁻¹)` the relator word becomes a
//! matrix `W(t, x)` over `ℤ[t^{±1}, x]`. Equating the (1,2) entries of
//! `W ρ(a) = ρ(b) W` gives
//!
//! ```text
//! φ(t, x) = w₁₁ + (t⁻¹ - t) w₁₂ = 0,
//! ```
//!
//! while the (2,1) and (2,2) entries give `(t - t⁻¹) w₂₁ = x w₁₁` and
//! `w₂₁ = x w₁₂`. `φ` is symmetric in `t ↔ t⁻¹`, so it is a polynomial
//! `ψ(s, x)` in `s = t + t⁻¹`, and `ψ(2, x) = λ_K(x)`. Real roots of `λ_K`
//! continue along `ψ = 0` to the elliptic traces `s_n = 2cos(2π/n)`.

mod continuation;
mod laurent;
mod psi;
mod representation;

pub use continuation::{continue_root, continue_root_with, ContinuationParams, Witness};
pub use laurent::LaurentBi;
pub use psi::{angle_of, to_psi, trace_polynomials, SymPoly};
pub use representation::{verify_representation, RepresentationCheck};

use crate::exactpoly::PolyError;
use crate::riley::{riley_polynomial_of, RileyError};
use crate::twobridge::{Fraction, SignData};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DeformError {
    #[error("φ is not symmetric under t ↔ t⁻¹")]
    Asymmetric,
    #[error("{0}: ψ(2, x) differs from the Riley polynomial")]
    PsiMismatch(Fraction),
    #[error("order n = {0} must be at least 3")]
    BadOrder(usize),
    #[error("trace s = {0} outside [-2, 2]")]
    BadTrace(f64),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Riley(#[from] RileyError),
}

pub type LaurentMatrix = [[LaurentBi; 2]; 2];

/// `(u, v) · ρ(a)^ε` and `(u, v) · ρ(b)^η` with
/// `ρ(a)⁻¹ = (t⁻¹ -1; 0 t)` and `ρ(b)⁻¹ = (t⁻¹ 0; -x t)`.
fn row_times_a(u: &LaurentBi, v: &LaurentBi, eps: i8) -> (LaurentBi, LaurentBi) {
    if eps > 0 {
        let mut nv = v.shifted(-1, 0, false);
        nv.add_shifted(u, 0, 0, false);
        (u.shifted(1, 0, false), nv)
    } else {
        let mut nv = v.shifted(1, 0, false);
        nv.add_shifted(u, 0, 0, true);
        (u.shifted(-1, 0, false), nv)
    }
}

fn row_times_b(u: &LaurentBi, v: &LaurentBi, eta: i8) -> (LaurentBi, LaurentBi) {
    if eta > 0 {
        let mut nu = u.shifted(1, 0, false);
        nu.add_shifted(v, 0, 1, false);
        (nu, v.shifted(-1, 0, false))
    } else {
        let mut nu = u.shifted(-1, 0, false);
        nu.add_shifted(v, 0, 1, true);
        (nu, v.shifted(1, 0, false))
    }
}

fn word_row(sd: &SignData, mut u: LaurentBi, mut v: LaurentBi) -> (LaurentBi, LaurentBi) {
    for i in 0..sd.n() {
        (u, v) = row_times_a(&u, &v, sd.eps[i]);
        (u, v) = row_times_b(&u, &v, sd.eta[i]);
    }
    (u, v)
}

/// `W = ∏ ρ(a)^{ε_i} ρ(b)^{η_i}`, exactly.
pub fn general_word(sd: &SignData) -> LaurentMatrix {
    let (w11, w12) = word_row(sd, LaurentBi::one(), LaurentBi::zero());
    let (w21, w22) = word_row(sd, LaurentBi::zero(), LaurentBi::one());
    [[w11, w12], [w21, w22]]
}

/// Top row `(w₁₁, w₁₂)` of [`general_word`], which is all `φ` needs.
pub fn general_word_top_row(sd: &SignData) -> (LaurentBi, LaurentBi) {
    word_row(sd, LaurentBi::one(), LaurentBi::zero())
}

/// `φ = w₁₁ + (t⁻¹ - t) w₁₂`.
pub fn phi(w: &LaurentMatrix) -> LaurentBi {
    phi_from_row(&w[0][0], &w[0][1])
}

fn phi_from_row(w11: &LaurentBi, w12: &LaurentBi) -> LaurentBi {
    let mut out = w11.clone();
    out.add_shifted(w12, -1, 0, false);
    out.add_shifted(w12, 1, 0, true);
    out
}

/// The remaining entry conditions `(t - t⁻¹) w₂₁ - x w₁₁` and `w₂₁ - x w₁₂`,
/// which vanish wherever `W` defines a representation.
pub fn entry_conditions(w: &LaurentMatrix) -> [LaurentBi; 2] {
    let [[w11, w12], [w21, _]] = w;
    let mut c1 = w21.shifted(1, 0, false);
    c1.add_shifted(w21, -1, 0, true);
    c1.add_shifted(w11, 0, 1, true);
    let mut c2 = w21.clone();
    c2.add_shifted(w12, 0, 1, true);
    [c1, c2]
}

/// `ψ` of a knot, checked against its Riley polynomial.
pub fn psi_of(sd: &SignData) -> Result<SymPoly, DeformError> {
    let (w11, w12) = general_word_top_row(sd);
    let lambda = riley_polynomial_of(sd)?;
    to_psi(&phi_from_row(&w11, &w12))?.for_knot(sd.fraction, &lambda)
}
