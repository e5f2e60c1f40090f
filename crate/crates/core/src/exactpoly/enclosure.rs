//! Floating-point enclosures `lo ≤ x ≤ hi` of exact values.
//!
//! Sums are rounded outward using the exact error term of TwoSum and halving
//! is checked for exactness, so every enclosure provably contains the value it
//! stands for. A sign is only reported when the enclosure excludes zero or is
//! exactly zero.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::Sign;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Enclosure {
    lo: f64,
    hi: f64,
}

/// `2^e` for `e` in the normal exponent range.
fn pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((1023 + e) as u64) << 52)
}

/// `x · 2^e`, exact when the result is a normal number.
fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= pow2(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= pow2(-1000);
        e += 1000;
    }
    x * pow2(e)
}

/// `(s, err)` with `s = fl(a + b)` and `s + err = a + b` exactly.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

fn add_down(a: f64, b: f64) -> f64 {
    let (s, err) = two_sum(a, b);
    if !s.is_finite() {
        return f64::NEG_INFINITY;
    }
    if err < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn add_up(a: f64, b: f64) -> f64 {
    let (s, err) = two_sum(a, b);
    if !s.is_finite() {
        return f64::INFINITY;
    }
    if err > 0.0 {
        s.next_up()
    } else {
        s
    }
}

fn half_down(x: f64) -> f64 {
    let r = x * 0.5;
    if r * 2.0 == x {
        r
    } else {
        r.next_down()
    }
}

fn half_up(x: f64) -> f64 {
    let r = x * 0.5;
    if r * 2.0 == x {
        r
    } else {
        r.next_up()
    }
}

impl Enclosure {
    pub(crate) fn zero() -> Self {
        Enclosure { lo: 0.0, hi: 0.0 }
    }

    /// Encloses `n / 2^shift`.
    pub(crate) fn of_scaled(n: &BigInt, shift: u64) -> Self {
        let bits = n.bits();
        if bits == 0 {
            return Self::zero();
        }
        let top = bits as i64 - shift as i64;
        if top < -1020 {
            // |n / 2^shift| < 2^top, too small to place exactly
            let tiny = pow2(-1020);
            return if n.is_positive() {
                Enclosure { lo: 0.0, hi: tiny }
            } else {
                Enclosure { lo: -tiny, hi: 0.0 }
            };
        }
        let (m_lo, m_hi, e) = if bits <= 53 {
            let m = n.to_f64().expect("fits in 53 bits");
            (m, m, 0)
        } else {
            let s = bits - 53;
            // arithmetic shift floors, so n / 2^s lies in [m, m + 1]
            let m = (n >> s as usize).to_f64().expect("fits in 53 bits");
            (m, m + 1.0, s as i64)
        };
        let exponent = e - shift as i64;
        Enclosure {
            lo: ldexp(m_lo, exponent),
            hi: ldexp(m_hi, exponent),
        }
    }

    /// Encloses every member of `b` after a common power-of-two scaling that
    /// brings the largest to about one.
    pub(crate) fn of_all(b: &[BigInt]) -> Vec<Self> {
        let shift = b.iter().map(BigInt::bits).max().unwrap_or(0);
        b.iter().map(|c| Self::of_scaled(c, shift)).collect()
    }

    /// `(a + b) / 2`.
    pub(crate) fn mean(a: Self, b: Self) -> Self {
        Enclosure {
            lo: half_down(add_down(a.lo, b.lo)),
            hi: half_up(add_up(a.hi, b.hi)),
        }
    }

    pub(crate) fn sign(&self) -> Option<Sign> {
        if self.lo > 0.0 {
            Some(Sign::Positive)
        } else if self.hi < 0.0 {
            Some(Sign::Negative)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn scaled_integers_are_enclosed() {
        let e = Enclosure::of_scaled(&BigInt::from(3), 1);
        assert_eq!(e, Enclosure { lo: 1.5, hi: 1.5 });
        // 2^60 + 1 is not a double
        let n = (BigInt::from(1) << 60usize) + 1;
        let e = Enclosure::of_scaled(&n, 60);
        assert!(e.lo <= 1.0 && e.hi > 1.0);
        let e = Enclosure::of_scaled(&-n, 60);
        assert!(e.hi >= -1.0 && e.lo < -1.0);
        assert_eq!(Enclosure::of_scaled(&big("5"), 5000).sign(), None);
        assert_eq!(Enclosure::of_scaled(&big("-7"), 3).sign(), Some(Sign::Negative));
    }

    #[test]
    fn mean_is_outward() {
        let a = Enclosure { lo: 1.0, hi: 1.0 };
        let b = Enclosure { lo: 1e-20, hi: 1e-20 };
        let m = Enclosure::mean(a, b);
        assert!(m.lo < m.hi);
        assert!(m.lo <= 0.5 && m.hi >= 0.5);
        let z = Enclosure::mean(Enclosure { lo: 1.0, hi: 1.0 }, Enclosure { lo: -1.0, hi: -1.0 });
        assert_eq!(z.sign(), Some(Sign::Zero));
        let tiny = Enclosure { lo: f64::from_bits(1), hi: f64::from_bits(1) };
        let h = Enclosure::mean(tiny, Enclosure::zero());
        assert!(h.lo <= 0.0 && h.hi > 0.0);
        assert!(h.contains(0.0));
    }

    #[test]
    fn two_sum_is_exact() {
        let (s, e) = two_sum(1.0, 1e-20);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-20);
    }
}
