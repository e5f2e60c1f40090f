//! Exact univariate arithmetic in ℤ[x] with real-root counting and isolation.
//!
//! Two independent root counters live here: the classical Sturm sequence
//! ([`sturm`]) and a Descartes-rule bisection ([`descartes`]) which is much
//! cheaper at high degree and backs [`count_real_roots`]. Tests hold them
//! against each other.

mod descartes;
mod enclosure;
mod gcd;
mod poly;
mod roots;
pub mod sturm;

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use gcd::{coprime, gcd, is_squarefree, squarefree_part};
pub use poly::{Infinity, IntPoly};
pub use roots::{
    bisect_once, count_real_roots, isolate_real_roots, refine, sign_near_root, signs_at_roots, RootSigns,
};
pub use sturm::{count_roots_in, sturm_sequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(BigRational),
    #[error("interval {0} does not isolate a root")]
    NotIsolating(Box<Interval>),
    #[error("interval lower end exceeds upper end")]
    InvertedInterval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn of_rational(x: &BigRational) -> Sign {
        Sign::of(x.numer())
    }

    pub fn of_i64(x: i64) -> Sign {
        Sign::of(&BigInt::from(x))
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.to_i8() * rhs.to_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// Closed rational interval `[lo, hi]`. A degenerate interval `[m, m]` names
/// an exactly known rational root; otherwise root-isolation contracts treat
/// the interior `(lo, hi)` and guarantee neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self, PolyError> {
        if lo > hi {
            return Err(PolyError::InvertedInterval);
        }
        Ok(Interval { lo, hi })
    }

    pub fn exact(m: BigRational) -> Self {
        Interval {
            lo: m.clone(),
            hi: m,
        }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Self, PolyError> {
        Self::new(BigInt::from(lo).into(), BigInt::from(hi).into())
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Closed intervals share at least one point.
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn negate(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "[{}]", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // both parts may overflow f64 on their own
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
    let n = poly::bigint_to_f64(&(r.numer() >> shift));
    let d = poly::bigint_to_f64(&(r.denom() >> shift));
    if d.is_zero() {
        n.signum() * f64::INFINITY
    } else {
        n / d
    }
}

pub(crate) fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

pub(crate) fn pow2(k: i64) -> BigRational {
    if k >= 0 {
        BigRational::from_integer(BigInt::one() << k as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-k) as usize)
    }
}
