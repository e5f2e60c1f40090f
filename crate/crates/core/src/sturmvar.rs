//! Sign variations of polynomial sequences and the generalized Sturm bound.
//!
//! For `f = (f_0, …, f_n)` with `f_0` a non-zero constant and
//! `f_{k-1}(x₀) f_{k+1}(x₀) < 0` at every real root `x₀` of an interior `f_k`,
//! the last polynomial `f_n` has at least `|var f(-∞) - var f(+∞)|` distinct
//! real roots. [`check_hypotheses`] verifies those conditions exactly and
//! [`lower_bound`] refuses to return a bound for a sequence that fails them.

use crate::exactpoly::{isolate_real_roots, Infinity, IntPoly, Interval, PolyError, RootSigns, Sign};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SturmVarError {
    #[error("variation is undefined on a sequence containing zero (index {0})")]
    ZeroEntry(usize),
    #[error("f_{0} is the zero polynomial")]
    ZeroPolynomial(usize),
    #[error("sequence fails the hypotheses ({0} violations)")]
    HypothesesFail(usize),
    #[error("empty sequence")]
    Empty,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeq {
    pub f: Vec<IntPoly>,
}

impl PolySeq {
    pub fn new(f: Vec<IntPoly>) -> Self {
        PolySeq { f }
    }

    /// Index of the last polynomial.
    pub fn n(&self) -> usize {
        self.f.len().saturating_sub(1)
    }

    pub fn last(&self) -> Option<&IntPoly> {
        self.f.last()
    }
}

/// Number of adjacent sign changes in a sequence of non-zero signs.
pub fn variation<I: IntoIterator<Item = Sign>>(signs: I) -> Result<usize, SturmVarError> {
    let mut prev: Option<Sign> = None;
    let mut count = 0;
    for (i, s) in signs.into_iter().enumerate() {
        if s.is_zero() {
            return Err(SturmVarError::ZeroEntry(i));
        }
        if prev.is_some_and(|p| p != s) {
            count += 1;
        }
        prev = Some(s);
    }
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariationCount {
    pub at_minus_inf: usize,
    pub at_plus_inf: usize,
    pub bound: usize,
}

pub fn variation_at_infinity(seq: &PolySeq) -> Result<VariationCount, SturmVarError> {
    if seq.f.is_empty() {
        return Err(SturmVarError::Empty);
    }
    let signs = |dir| {
        seq.f
            .iter()
            .enumerate()
            .map(|(i, p)| p.sign_at_infinity(dir).map_err(|_| SturmVarError::ZeroPolynomial(i)))
            .collect::<Result<Vec<_>, _>>()
    };
    let at_minus_inf = variation(signs(Infinity::Minus)?)?;
    let at_plus_inf = variation(signs(Infinity::Plus)?)?;
    Ok(VariationCount {
        at_minus_inf,
        at_plus_inf,
        bound: at_minus_inf.abs_diff(at_plus_inf),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// `f_0` is not a non-zero constant.
    NotConstant,
    /// At a real root of `f_k`, `f_{k-1} f_{k+1}` is zero or positive.
    Neighbours {
        k: usize,
        witness: Interval,
        sign_prev: Sign,
        sign_next: Sign,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct HypothesisReport {
    pub violations: Vec<Violation>,
    /// Real roots of interior members that were checked.
    pub roots_checked: usize,
    pub variation: VariationCount,
}

impl HypothesisReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// The guaranteed number of distinct real roots of `f_n`, when the
    /// hypotheses hold.
    pub fn lower_bound(&self) -> Option<usize> {
        self.passes().then_some(self.variation.bound)
    }
}

/// Check both hypotheses, reporting every violation with a witness interval.
/// Zero polynomials anywhere in the sequence are rejected.
pub fn check_hypotheses(seq: &PolySeq) -> Result<HypothesisReport, SturmVarError> {
    let variation = variation_at_infinity(seq)?;
    let mut violations = Vec::new();
    if !seq.f[0].is_constant() {
        violations.push(Violation::NotConstant);
    }
    let n = seq.n();
    let mut roots_checked = 0;
    if n >= 2 {
        let roots: Vec<Vec<Interval>> = seq
            .f
            .iter()
            .map(|g| if g.is_zero() { Ok(Vec::new()) } else { isolate_real_roots(g) })
            .collect::<Result<_, _>>()?;
        for k in 1..n {
            let prev = RootSigns::new(&seq.f[k], &seq.f[k - 1], &roots[k - 1])?;
            let next = RootSigns::new(&seq.f[k], &seq.f[k + 1], &roots[k + 1])?;
            for iv in &roots[k] {
                roots_checked += 1;
                let (iv, sign_prev) = prev.at(iv)?;
                let (iv, sign_next) = next.at(&iv)?;
                if sign_prev * sign_next != Sign::Negative {
                    violations.push(Violation::Neighbours {
                        k,
                        witness: iv,
                        sign_prev,
                        sign_next,
                    });
                }
            }
        }
    }
    Ok(HypothesisReport {
        violations,
        roots_checked,
        variation,
    })
}

/// `|var f(-∞) - var f(+∞)|`, only for sequences that pass
/// [`check_hypotheses`].
pub fn lower_bound(seq: &PolySeq) -> Result<usize, SturmVarError> {
    let report = check_hypotheses(seq)?;
    report
        .lower_bound()
        .ok_or(SturmVarError::HypothesesFail(report.violations.len()))
}
