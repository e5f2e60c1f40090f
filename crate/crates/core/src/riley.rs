//! The parabolic word `W_k = ∏_{i≤k} A^{ε_i} X^{η_i}` with
//! `A = [[1, 1], [0, 1]]`, `X = [[1, 0], [x, 1]]`, its top-left entry
//! `λ_K = a_n` (the Riley polynomial), and the checks that tie it to the
//! signature bound.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::{
    self, coprime, isolate_real_roots, IntPoly, Interval, PolyError, Sign,
};
use crate::sturmvar::{self, PolySeq};
use crate::twobridge::{self, Fraction, KnotError, KnotInvariants, SignData};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RileyError {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{fraction}: invariant violated: {what}")]
    Invariant { fraction: Fraction, what: String },
    #[error("{fraction}: sign law fails at k = {k} near root {interval}")]
    SignLaw {
        fraction: Fraction,
        k: usize,
        interval: Interval,
    },
    #[error("{0}: λ does not divide the (2,2) relation defect")]
    Certification(Fraction),
    #[error(transparent)]
    SturmVar(#[from] sturmvar::SturmVarError),
}

fn invariant(fraction: Fraction, what: impl Into<String>) -> RileyError {
    RileyError::Invariant {
        fraction,
        what: what.into(),
    }
}

/// Entries of `W_k` for `k = 0..=n`: `W_k = [[a_k, b_k], [c_k, d_k]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RileySequence {
    pub fraction: Fraction,
    pub a: Vec<IntPoly>,
    pub b: Vec<IntPoly>,
    pub c: Vec<IntPoly>,
    pub d: Vec<IntPoly>,
}

/// `(u, v) · [[1 + δx, ε], [ηx, 1]]`, one row of `W_{k-1} · A^ε X^η`.
fn step_row(u: &IntPoly, v: &IntPoly, eps: i8, eta: i8) -> (IntPoly, IntPoly) {
    let delta = eps * eta;
    let len = u.coeffs().len().max(v.coeffs().len() + 1) + 1;
    let mut nu = vec![BigInt::zero(); len];
    for (i, c) in u.coeffs().iter().enumerate() {
        nu[i] += c;
        if delta > 0 {
            nu[i + 1] += c;
        } else {
            nu[i + 1] -= c;
        }
    }
    for (i, c) in v.coeffs().iter().enumerate() {
        if eta > 0 {
            nu[i + 1] += c;
        } else {
            nu[i + 1] -= c;
        }
    }
    let nv = if eps > 0 { u + v } else { v - u };
    (IntPoly::new(nu), nv)
}

/// `λ_K` alone, via the top row of the recurrence. Checks degree, leading
/// coefficient and constant term on the way.
pub fn riley_polynomial_of(sd: &SignData) -> Result<IntPoly, RileyError> {
    let mut a = IntPoly::one();
    let mut b = IntPoly::zero();
    for k in 0..sd.n() {
        (a, b) = step_row(&a, &b, sd.eps[k], sd.eta[k]);
    }
    check_top_entry(sd, sd.n(), &a)?;
    Ok(a)
}

fn lead_product(sd: &SignData, k: usize) -> i8 {
    sd.delta[..k].iter().product()
}

fn check_top_entry(sd: &SignData, k: usize, a: &IntPoly) -> Result<(), RileyError> {
    let fr = sd.fraction;
    if a.degree() != Some(k) {
        return Err(invariant(fr, format!("deg a_{k} = {:?}", a.degree())));
    }
    if a.lead() != Some(&BigInt::from(lead_product(sd, k))) {
        return Err(invariant(fr, format!("lead(a_{k}) ≠ ∏δ")));
    }
    if !a.constant_term().is_one() {
        return Err(invariant(fr, format!("a_{k}(0) ≠ 1")));
    }
    Ok(())
}

/// Build every `W_k` and check `deg a_k = k`, `lead a_k = ∏δ_i`, `a_k(0) = 1`
/// and `a_k d_k - b_k c_k = 1`.
pub fn riley_sequence(sd: &SignData) -> Result<RileySequence, RileyError> {
    let n = sd.n();
    let mut rs = RileySequence {
        fraction: sd.fraction,
        a: Vec::with_capacity(n + 1),
        b: Vec::with_capacity(n + 1),
        c: Vec::with_capacity(n + 1),
        d: Vec::with_capacity(n + 1),
    };
    rs.a.push(IntPoly::one());
    rs.b.push(IntPoly::zero());
    rs.c.push(IntPoly::zero());
    rs.d.push(IntPoly::one());
    for k in 0..n {
        let (a, b) = step_row(&rs.a[k], &rs.b[k], sd.eps[k], sd.eta[k]);
        let (c, d) = step_row(&rs.c[k], &rs.d[k], sd.eps[k], sd.eta[k]);
        rs.a.push(a);
        rs.b.push(b);
        rs.c.push(c);
        rs.d.push(d);
    }
    for k in 0..=n {
        check_top_entry(sd, k, &rs.a[k])?;
        let det = &(&rs.a[k] * &rs.d[k]) - &(&rs.b[k] * &rs.c[k]);
        if det != IntPoly::one() {
            return Err(invariant(sd.fraction, format!("det W_{k} ≠ 1")));
        }
    }
    Ok(rs)
}

impl RileySequence {
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    /// `gcd(a_k, b_k) = 1` and `gcd(a_k, a_{k+1}) = 1` for every `k`.
    pub fn check_coprimality(&self) -> Result<(), RileyError> {
        for k in 0..=self.n() {
            if !self.b[k].is_zero() && !coprime(&self.a[k], &self.b[k])? {
                return Err(invariant(self.fraction, format!("gcd(a_{k}, b_{k}) ≠ 1")));
            }
            if k < self.n() && !coprime(&self.a[k], &self.a[k + 1])? {
                return Err(invariant(
                    self.fraction,
                    format!("gcd(a_{k}, a_{}) ≠ 1", k + 1),
                ));
            }
        }
        Ok(())
    }
}

pub fn riley_polynomial(rs: &RileySequence) -> IntPoly {
    rs.a[rs.n()].clone()
}

/// `f_k = (∏_{i≤k} η_i) a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSequence {
    pub f: Vec<IntPoly>,
}

pub fn f_sequence(sd: &SignData, rs: &RileySequence) -> FSequence {
    f_from_top_entries(sd, &rs.a)
}

fn f_from_top_entries(sd: &SignData, a: &[IntPoly]) -> FSequence {
    let f = a
        .iter()
        .enumerate()
        .map(|(k, a)| {
            if sd.eta_prefix(k) > 0 {
                a.clone()
            } else {
                -a
            }
        })
        .collect();
    FSequence { f }
}

/// `a_0, …, a_n` alone, with the same per-entry checks as
/// [`riley_sequence`] except the determinant.
pub fn top_entries(sd: &SignData) -> Result<Vec<IntPoly>, RileyError> {
    let mut a = vec![IntPoly::one()];
    let mut b = IntPoly::zero();
    for k in 0..sd.n() {
        let (na, nb) = step_row(&a[k], &b, sd.eps[k], sd.eta[k]);
        check_top_entry(sd, k + 1, &na)?;
        a.push(na);
        b = nb;
    }
    Ok(a)
}

impl FSequence {
    pub fn into_seq(self) -> PolySeq {
        PolySeq::new(self.f)
    }
}

/// The three equal quantities behind the signature bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjectureBound {
    /// `var f(-∞) = #{k : ε_k = +1}`
    pub var_minus_inf: usize,
    /// `var f(+∞) = #{k : ε_k = -1}`
    pub var_plus_inf: usize,
    /// `|Σ ε_k| = |σ| / 2`
    pub bound: usize,
}

/// Signs of `f_k` at `±∞` come from `μ_k` alone: `sign f_k(+∞) = μ_k`,
/// `sign f_k(-∞) = (-1)^k μ_k`.
pub fn conjecture_bound(sd: &SignData) -> Result<ConjectureBound, RileyError> {
    let plus = sd.mu.iter().map(|&m| Sign::of_i64(m as i64));
    let minus = sd
        .mu
        .iter()
        .enumerate()
        .map(|(k, &m)| Sign::of_i64(if k % 2 == 0 { m as i64 } else { -(m as i64) }));
    let var_plus_inf = sturmvar::variation(plus).expect("μ has no zeros");
    let var_minus_inf = sturmvar::variation(minus).expect("μ has no zeros");
    let positives = sd.eps.iter().filter(|&&e| e > 0).count();
    let negatives = sd.n() - positives;
    let eps_sum: i64 = sd.eps.iter().map(|&e| e as i64).sum();
    let sigma = twobridge::signature(sd);
    let fr = sd.fraction;
    if var_plus_inf != negatives || var_minus_inf != positives {
        return Err(invariant(fr, "variation at ±∞ disagrees with ε counts"));
    }
    let bound = var_minus_inf.abs_diff(var_plus_inf);
    if bound as i64 != eps_sum.abs() || 2 * eps_sum != sigma {
        return Err(invariant(fr, "|Σε| ≠ |var(-∞) - var(+∞)| or σ ≠ 2Σε"));
    }
    Ok(ConjectureBound {
        var_minus_inf,
        var_plus_inf,
        bound,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub fraction: Fraction,
    pub n: usize,
    pub sigma: i64,
    pub determinant: i64,
    pub bound: usize,
    pub real_root_count: usize,
    pub satisfied: bool,
    pub lambda: IntPoly,
    pub roots: Vec<Interval>,
    pub squarefree: bool,
    pub congruence_ok: bool,
    pub timing: Duration,
}

impl VerificationReport {
    /// `real_root_count - bound` when satisfied.
    pub fn gap(&self) -> i64 {
        self.real_root_count as i64 - self.bound as i64
    }
}

#[derive(Clone, Debug)]
struct RootData {
    roots: Vec<Interval>,
    squarefree: bool,
}

/// Checks the root-count bound for fractions, memoizing root isolation by the
/// exact Riley polynomial. Mirror images share `λ`, as do other presentations
/// of the same knot, so a family scan isolates each polynomial once.
#[derive(Default)]
pub struct Verifier {
    cache: Mutex<HashMap<IntPoly, Arc<RootData>>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached_polynomials(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    pub fn clear(&self) {
        self.cache.lock().unwrap().clear();
    }

    pub fn verify(&self, k: &Fraction) -> Result<VerificationReport, RileyError> {
        let start = Instant::now();
        let sd = twobridge::sign_sequences(k)?;
        let lambda = riley_polynomial_of(&sd)?;
        let cb = conjecture_bound(&sd)?;
        let inv = KnotInvariants::of(&sd);

        let cached = self.cache.lock().unwrap().get(&lambda).cloned();
        let data = match cached {
            Some(d) => d,
            None => {
                let d = Arc::new(RootData {
                    squarefree: exactpoly::is_squarefree(&lambda)?,
                    roots: isolate_real_roots(&lambda)?,
                });
                self.cache
                    .lock()
                    .unwrap()
                    .insert(lambda.clone(), Arc::clone(&d));
                d
            }
        };
        let real_root_count = data.roots.len();
        Ok(VerificationReport {
            fraction: *k,
            n: sd.n(),
            sigma: inv.signature,
            determinant: inv.determinant,
            bound: cb.bound,
            real_root_count,
            satisfied: real_root_count >= cb.bound,
            lambda,
            roots: data.roots.clone(),
            squarefree: data.squarefree,
            congruence_ok: inv.congruence_holds(),
            timing: start.elapsed(),
        })
    }
}

/// Count the distinct real roots of `λ_K` and compare with `|σ|/2`. A failed
/// comparison is reported, not raised.
pub fn verify_conjecture(k: &Fraction) -> Result<VerificationReport, RileyError> {
    Verifier::new().verify(k)
}

/// One checked root of an interior `a_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignLawCheck {
    pub k: usize,
    pub interval: Interval,
    pub sign_prev: Sign,
    pub sign_next: Sign,
    pub sign_b: Sign,
    /// `-η_k η_{k+1}`
    pub expected: Sign,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SignLawReport {
    pub checks: Vec<SignLawCheck>,
}

/// At every real root `x₀` of `a_k`, `0 < k < n`: `a_{k±1}(x₀)` and `b_k(x₀)`
/// are non-zero and `sign a_{k-1}(x₀) · sign a_{k+1}(x₀) = -η_k η_{k+1}`.
/// Signs at irrational roots are settled by refining the isolating interval
/// away from every root of the neighbour.
pub fn lemma31_check(rs: &RileySequence, sd: &SignData) -> Result<SignLawReport, RileyError> {
    let n = rs.n();
    let mut report = SignLawReport::default();
    if n < 2 {
        return Ok(report);
    }
    for k in 1..n {
        let expected = Sign::of_i64(-(sd.eta[k - 1] as i64) * sd.eta[k] as i64);
        if rs.a[k].constant_term().is_zero() {
            return Err(invariant(rs.fraction, format!("a_{k}(0) = 0")));
        }
        let rows = exactpoly::signs_at_roots(&rs.a[k], &[&rs.a[k - 1], &rs.a[k + 1], &rs.b[k]])?;
        for (iv, signs) in rows {
            let (sign_prev, sign_next, sign_b) = (signs[0], signs[1], signs[2]);
            let ok = !sign_prev.is_zero()
                && !sign_next.is_zero()
                && !sign_b.is_zero()
                && sign_prev * sign_next == expected;
            if !ok {
                return Err(RileyError::SignLaw {
                    fraction: rs.fraction,
                    k,
                    interval: iv,
                });
            }
            report.checks.push(SignLawCheck {
                k,
                interval: iv,
                sign_prev,
                sign_next,
                sign_b,
                expected,
            });
        }
    }
    Ok(report)
}

/// Symbolic relation defect `W_n A - X W_n = [[0, a_n], [-x a_n, c_n - x b_n]]`
/// and the exact quotient `(c_n - x b_n) / λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicCertificate {
    pub lambda: IntPoly,
    pub defect: [[IntPoly; 2]; 2],
    pub quotient: IntPoly,
}

pub fn relation_defect(rs: &RileySequence) -> [[IntPoly; 2]; 2] {
    let n = rs.n();
    let x = IntPoly::x();
    let a = &rs.a[n];
    [
        [IntPoly::zero(), a.clone()],
        [-(&x * a), &rs.c[n] - &(&x * &rs.b[n])],
    ]
}

/// Every root of `λ` (real or complex) makes `W_n A = X W_n`: entries (1,2)
/// and (2,1) are multiples of `λ` by construction and (2,2) is checked to be
/// one by exact division.
pub fn certify_parabolic(rs: &RileySequence) -> Result<ParabolicCertificate, RileyError> {
    let lambda = riley_polynomial(rs);
    let defect = relation_defect(rs);
    let quotient = defect[1][1]
        .div_exact(&lambda)?
        .ok_or(RileyError::Certification(rs.fraction))?;
    Ok(ParabolicCertificate {
        lambda,
        defect,
        quotient,
    })
}

/// `max |(W_n A - X W_n)_{ij}|` with `W_n` evaluated in floating point at `x`.
pub fn relation_defect_at(rs: &RileySequence, x: f64) -> f64 {
    let n = rs.n();
    let (a, b, c, d) = (
        rs.a[n].eval_f64(x),
        rs.b[n].eval_f64(x),
        rs.c[n].eval_f64(x),
        rs.d[n].eval_f64(x),
    );
    // W A = [[a, a + b], [c, c + d]], X W = [[a, b], [xa + c, xb + d]]; the (1,1) entries agree
    let e = [(a + b) - b, c - (x * a + c), (c + d) - (x * b + d)];
    e.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Hypotheses and bound of the generalized Sturm theorem, applied to the
/// f-sequence of `k`.
pub fn f_sequence_bound(k: &Fraction) -> Result<(sturmvar::HypothesisReport, usize), RileyError> {
    let sd = twobridge::sign_sequences(k)?;
    let seq = f_from_top_entries(&sd, &top_entries(&sd)?).into_seq();
    let report = sturmvar::check_hypotheses(&seq)?;
    let bound = report
        .lower_bound()
        .ok_or_else(|| invariant(*k, "f-sequence fails the generalized Sturm hypotheses"))?;
    Ok((report, bound))
}
