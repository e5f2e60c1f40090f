//! 2-bridge fractions `p/q`, the sign sequences of the standard two-generator
//! presentation, and the signature and determinant read off from them.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("p = {0} must be odd and greater than 1")]
    BadDenominator(i64),
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("sign sequence of {0} is not palindromic")]
    NotPalindromic(Fraction),
    #[error("pmax = {0} is below 3")]
    BadBound(i64),
}

/// Canonical 2-bridge fraction: `p` odd and `> 1`, `q` odd with `-p < q < p`
/// and `gcd(q, p) = 1`. Construct through [`normalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fraction {
    p: i64,
    q: i64,
}

impl Fraction {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Number of `a^ε b^η` syllables in the relator word, `(p - 1) / 2`.
    pub fn n(&self) -> usize {
        ((self.p - 1) / 2) as usize
    }

    pub fn mirror(&self) -> Fraction {
        Fraction {
            p: self.p,
            q: -self.q,
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Reduce `q` mod `2p` into `(-p, p)` and move an even result onto the odd
/// representative `q ∓ p`, which names the same knot (`q` is unchanged mod `p`).
pub fn normalize(p: i64, q: i64) -> Result<Fraction, KnotError> {
    if p <= 1 || p % 2 == 0 {
        return Err(KnotError::BadDenominator(p));
    }
    if q.gcd(&p) != 1 {
        return Err(KnotError::NotCoprime { p, q });
    }
    let mut r = q.rem_euclid(2 * p);
    if r > p {
        r -= 2 * p;
    }
    if r % 2 == 0 {
        r = if r > 0 { r - p } else { r + p };
    }
    Ok(Fraction { p, q: r })
}

/// `ε_i`, `η_i` of the relator `w = ∏ a^{ε_i} b^{η_i}` together with the
/// derived `δ_i = ε_i η_i` and prefix products `μ_k = ∏_{i≤k} ε_i`.
/// Vectors are zero-based: `eps[0]` is `ε_1`, while `mu[0]` is `μ_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignData {
    pub fraction: Fraction,
    pub eps: Vec<i8>,
    pub eta: Vec<i8>,
    pub delta: Vec<i8>,
    pub mu: Vec<i8>,
}

impl SignData {
    pub fn n(&self) -> usize {
        self.eps.len()
    }

    /// `∏_{i≤k} η_i`, the sign that turns `a_k` into `f_k`.
    pub fn eta_prefix(&self, k: usize) -> i8 {
        self.eta[..k].iter().product()
    }
}

fn letter_sign(m: i64, f: &Fraction) -> i8 {
    let fl = (m as i128 * f.q as i128).div_euclid(f.p as i128);
    if fl.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `ε(m) = (-1)^⌊mq/p⌋` (floor toward -∞), `ε_i = ε(2i-1)`, `η_i = ε(2i)`.
pub fn sign_sequences(k: &Fraction) -> Result<SignData, KnotError> {
    let n = k.n();
    let eps: Vec<i8> = (1..=n).map(|i| letter_sign(2 * i as i64 - 1, k)).collect();
    let eta: Vec<i8> = (1..=n).map(|i| letter_sign(2 * i as i64, k)).collect();
    if (0..n).any(|i| eps[i] != eta[n - 1 - i]) {
        return Err(KnotError::NotPalindromic(*k));
    }
    let delta = eps.iter().zip(&eta).map(|(e, h)| e * h).collect();
    let mut mu = Vec::with_capacity(n + 1);
    mu.push(1i8);
    for e in &eps {
        mu.push(mu.last().unwrap() * e);
    }
    Ok(SignData {
        fraction: *k,
        eps,
        eta,
        delta,
        mu,
    })
}

/// `σ = Σ (ε_i + η_i)`.
pub fn signature(sd: &SignData) -> i64 {
    sd.eps
        .iter()
        .zip(&sd.eta)
        .map(|(&e, &h)| e as i64 + h as i64)
        .sum()
}

pub fn determinant(k: &Fraction) -> i64 {
    k.p
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotInvariants {
    pub signature: i64,
    pub determinant: i64,
}

impl KnotInvariants {
    pub fn of(sd: &SignData) -> Self {
        KnotInvariants {
            signature: signature(sd),
            determinant: determinant(&sd.fraction),
        }
    }

    /// `det ≡ (-1)^{σ/2} (mod 4)`.
    pub fn congruence_holds(&self) -> bool {
        let expected = if (self.signature / 2).rem_euclid(2) == 0 { 1 } else { 3 };
        self.signature % 2 == 0 && self.determinant.rem_euclid(4) == expected
    }
}

/// Every canonical fraction with `3 ≤ p ≤ pmax`, ordered by `p`, then `|q|`,
/// positive `q` first.
pub fn enumerate(pmax: i64) -> Result<Vec<Fraction>, KnotError> {
    if pmax < 3 {
        return Err(KnotError::BadBound(pmax));
    }
    let mut out = Vec::new();
    for p in (3..=pmax).step_by(2) {
        for a in (1..p).step_by(2) {
            if a.gcd(&p) != 1 {
                continue;
            }
            out.push(Fraction { p, q: a });
            out.push(Fraction { p, q: -a });
        }
    }
    Ok(out)
}

/// As [`enumerate`], keeping only the first fraction of each class
/// `{q, q⁻¹ mod p}` (canonicalized).
pub fn enumerate_dedup(pmax: i64) -> Result<Vec<Fraction>, KnotError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in enumerate(pmax)? {
        let inv = normalize(f.p, mod_inverse(f.q, f.p))?;
        let key = (f.p, f.q.min(inv.q));
        if seen.insert(key) {
            out.push(f);
        }
    }
    Ok(out)
}

fn mod_inverse(q: i64, p: i64) -> i64 {
    let e = q.rem_euclid(p).extended_gcd(&p);
    e.x.rem_euclid(p)
}
