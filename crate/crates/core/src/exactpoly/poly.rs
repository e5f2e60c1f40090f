use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Sign};

/// Dense univariate polynomial over ℤ, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree = len - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Which end of the real line a sign is taken at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Infinity {
    Plus,
    Minus,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// `den^deg · f(num/den)`, an integer with the sign of `f(num/den)` when
    /// `den > 0`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        if den.is_one() {
            return self.eval_int(num);
        }
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for c in self.coeffs[..d].iter().rev() {
            den_pow *= den;
            acc *= num;
            if !c.is_zero() {
                acc += c * &den_pow;
            }
        }
        acc
    }

    /// Exact sign of `f(r)`.
    pub fn sign_at(&self, r: &BigRational) -> Sign {
        Sign::of(&self.eval_homogeneous(r.numer(), r.denom()))
    }

    pub fn eval_rational(&self, r: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn sign_at_infinity(&self, direction: Infinity) -> Result<Sign, PolyError> {
        let lead = self.lead().ok_or(PolyError::ZeroPolynomial)?;
        let s = Sign::of(lead);
        Ok(match direction {
            Infinity::Plus => s,
            Infinity::Minus if self.coeffs.len().is_multiple_of(2) => -s,
            Infinity::Minus => s,
        })
    }

    /// `1 + max_i |a_i| / |a_lead|`; every real root lies strictly inside
    /// `(-B, B)`.
    pub fn cauchy_bound(&self) -> Result<BigRational, PolyError> {
        let lead = self.lead().ok_or(PolyError::ZeroPolynomial)?.abs();
        let d = self.coeffs.len() - 1;
        let max = self.coeffs[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        Ok(BigRational::one() + BigRational::new(max, lead))
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content, keeping the sign of every coefficient.
    pub fn strip_content(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Content 1 and positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let p = self.strip_content();
        match p.lead() {
            Some(l) if l.is_negative() => -p,
            _ => p,
        }
    }

    /// Pseudo-remainder scaled by `|lc(g)|^(deg f - deg g + 1)`, so that the
    /// remainder keeps the sign convention of the true Euclidean remainder.
    pub fn signed_pseudo_rem(&self, g: &IntPoly) -> Result<IntPoly, PolyError> {
        let gd = g.degree().ok_or(PolyError::DivisionByZero)?;
        let lg = g.lead().unwrap();
        let Some(fd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if fd < gd {
            return Ok(self.clone());
        }
        let mut r = self.coeffs.clone();
        let steps = fd - gd + 1;
        for i in (gd..=fd).rev() {
            let top = std::mem::take(&mut r[i]);
            for c in r[..i].iter_mut() {
                *c *= lg;
            }
            if !top.is_zero() {
                for j in 0..gd {
                    r[i - gd + j] -= &top * &g.coeffs[j];
                }
            }
        }
        r.truncate(gd);
        let mut rem = IntPoly::new(r);
        if lg.is_negative() && steps % 2 == 1 {
            rem = -rem;
        }
        Ok(rem)
    }

    /// Exact division in ℤ[x]: `Some(q)` when `self = g·q`.
    pub fn div_exact(&self, g: &IntPoly) -> Result<Option<IntPoly>, PolyError> {
        let gd = g.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(fd) = self.degree() else {
            return Ok(Some(IntPoly::zero()));
        };
        if fd < gd {
            return Ok(None);
        }
        let lg = g.lead().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); fd - gd + 1];
        for i in (gd..=fd).rev() {
            if r[i].is_zero() {
                continue;
            }
            let (quot, rem) = r[i].div_rem(lg);
            if !rem.is_zero() {
                return Ok(None);
            }
            for j in 0..gd {
                r[i - gd + j] -= &quot * &g.coeffs[j];
            }
            r[i] = BigInt::zero();
            q[i - gd] = quot;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPoly::new(q)))
    }

    /// Largest coefficient magnitude, in bits.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        if self.coeffs.len() < rhs.coeffs.len() {
            return rhs + self;
        }
        for (o, s) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *o += s;
        }
        IntPoly::new(self.coeffs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, s) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= s;
        }
        IntPoly::new(out)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Display for IntPoly {
    /// Ascending order, e.g. `1 + 3x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
