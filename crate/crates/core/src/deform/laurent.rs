use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::exactpoly::IntPoly;

/// Exact element of `ℤ[t^{±1}, x]`, stored sparsely as
/// `(t-exponent, x-exponent) → coefficient` with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentBi {
    terms: BTreeMap<(i64, u32), BigInt>,
}

impl LaurentBi {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    /// `c t^j x^m`.
    pub fn monomial(c: BigInt, j: i64, m: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(j, m, c);
        out
    }

    pub fn t(j: i64) -> Self {
        Self::monomial(BigInt::one(), j, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, u32), BigInt)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for ((j, m), c) in terms {
            out.add_term(j, m, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> {
        self.terms.iter().map(|(&(j, m), c)| (j, m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: i64, m: u32) -> BigInt {
        self.terms.get(&(j, m)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, j: i64, m: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((j, m)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(j, m));
        }
    }

    /// `±t^{dj} x^{dm} · self`.
    pub fn shifted(&self, dj: i64, dm: u32, negate: bool) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(j, m), c)| ((j + dj, m + dm), if negate { -c } else { c.clone() }))
            .collect();
        LaurentBi { terms }
    }

    /// `self += ±t^{dj} x^{dm} · other`.
    pub fn add_shifted(&mut self, other: &LaurentBi, dj: i64, dm: u32, negate: bool) {
        for (&(j, m), c) in &other.terms {
            let key = (j + dj, m + dm);
            let e = self.terms.entry(key).or_default();
            if negate {
                *e -= c;
            } else {
                *e += c;
            }
            if e.is_zero() {
                self.terms.remove(&key);
            }
        }
    }

    /// The substitution `t ↦ t⁻¹`.
    pub fn invert_t(&self) -> Self {
        let terms = self.terms.iter().map(|(&(j, m), c)| ((-j, m), c.clone())).collect();
        LaurentBi { terms }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(j, m), c)| self.terms.get(&(-j, m)) == Some(c))
    }

    /// Specialization `t = 1`.
    pub fn at_t_one(&self) -> IntPoly {
        let deg = self.x_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (&(_, m), c) in &self.terms {
            coeffs[m as usize] += c;
        }
        IntPoly::new(coeffs)
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, m)| m).max()
    }

    /// `(min, max)` t-exponent.
    pub fn t_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|&(j, _)| j).min()?;
        let hi = self.terms.keys().map(|&(j, _)| j).max()?;
        Some((lo, hi))
    }

    /// Floating-point value, summed in key order.
    pub fn eval(&self, t: Complex64, x: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for (&(j, m), c) in &self.terms {
            let cf = crate::exactpoly::rational_to_f64(&c.clone().into());
            acc += t.powi(j as i32) * x.powu(m) * cf;
        }
        acc
    }
}

impl fmt::Display for LaurentBi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // descending t within ascending x
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(j, m)| (m, -j));
        for (i, (j, m)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(j, m)];
            let mono = match (j, m) {
                (0, 0) => String::new(),
                (0, _) => xpow(m),
                (_, 0) => tpow(j),
                _ => format!("{}{}", tpow(j), xpow(m)),
            };
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}{mono}")
            };
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

fn tpow(j: i64) -> String {
    if j == 1 {
        "t".into()
    } else {
        format!("t^{j}")
    }
}

fn xpow(m: u32) -> String {
    if m == 1 {
        "x".into()
    } else {
        format!("x^{m}")
    }
}

impl Add for &LaurentBi {
    type Output = LaurentBi;
    fn add(self, rhs: &LaurentBi) -> LaurentBi {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, 0, false);
        out
    }
}

impl Sub for &LaurentBi {
    type Output = LaurentBi;
    fn sub(self, rhs: &LaurentBi) -> LaurentBi {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, 0, true);
        out
    }
}

impl Mul for &LaurentBi {
    type Output = LaurentBi;
    fn mul(self, rhs: &LaurentBi) -> LaurentBi {
        let mut out = LaurentBi::zero();
        for (&(j1, m1), c1) in &self.terms {
            for (&(j2, m2), c2) in &rhs.terms {
                out.add_term(j1 + j2, m1 + m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentBi {
    type Output = LaurentBi;
    fn neg(self) -> LaurentBi {
        self.shifted(0, 0, true)
    }
}

impl Add for LaurentBi {
    type Output = LaurentBi;
    fn add(self, rhs: LaurentBi) -> LaurentBi {
        &self + &rhs
    }
}

impl Sub for LaurentBi {
    type Output = LaurentBi;
    fn sub(self, rhs: LaurentBi) -> LaurentBi {
        &self - &rhs
    }
}

impl Mul for LaurentBi {
    type Output = LaurentBi;
    fn mul(self, rhs: LaurentBi) -> LaurentBi {
        &self * &rhs
    }
}

impl Neg for LaurentBi {
    type Output = LaurentBi;
    fn neg(self) -> LaurentBi {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_phi() -> LaurentBi {
        &(&(&LaurentBi::t(2) + &LaurentBi::t(-2)) + &LaurentBi::x()) - &LaurentBi::one()
    }

    #[test]
    fn arithmetic() {
        let a = &LaurentBi::t(1) + &LaurentBi::t(-1);
        let sq = &a * &a;
        assert_eq!(sq, &(&LaurentBi::t(2) + &LaurentBi::t(-2)) + &LaurentBi::monomial(2.into(), 0, 0));
        assert!((&sq - &sq).is_zero());
        assert_eq!(-(-sq.clone()), sq);
        let mut z = LaurentBi::x();
        z.add_term(0, 1, BigInt::from(-1));
        assert!(z.is_zero());
    }

    #[test]
    fn symmetry_and_specialization() {
        let phi = trefoil_phi();
        assert!(phi.is_symmetric());
        assert_eq!(phi.invert_t(), phi);
        assert_eq!(phi.at_t_one(), IntPoly::from_i64s(&[1, 1]));
        assert!(!(&phi + &LaurentBi::t(1)).is_symmetric());
        assert_eq!(phi.t_range(), Some((-2, 2)));
        assert_eq!(phi.x_degree(), Some(1));
    }

    #[test]
    fn display() {
        assert_eq!(trefoil_phi().to_string(), "t^2 - 1 + t^-2 + x");
        assert_eq!(LaurentBi::monomial((-3).into(), -1, 2).to_string(), "-3t^-1x^2");
        assert_eq!(LaurentBi::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let t = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        // s = 1, so t² + t⁻² = s² - 2 = -1 and φ = -2 + x
        let v = trefoil_phi().eval(t, Complex64::new(2.0, 0.0));
        assert!(v.norm() < 1e-14);
    }
}
