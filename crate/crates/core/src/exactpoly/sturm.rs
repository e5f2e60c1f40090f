//! Classical Sturm sequences.
//!
//! Each remainder is negated and divided by its positive content only, so the
//! sign pattern at every point matches the textbook rational sequence.

use num_rational::BigRational;

use super::{squarefree_part, Infinity, IntPoly, Interval, PolyError, Sign};

/// `s_0 = f, s_1 = f', s_{i+1} = -rem(s_{i-1}, s_i)` up to positive factors,
/// ending in a non-zero constant. A non-squarefree `f` is replaced by
/// `f / gcd(f, f')` first.
pub fn sturm_sequence(f: &IntPoly) -> Result<Vec<IntPoly>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let f0 = if super::is_squarefree(f)? {
        f.strip_content()
    } else {
        squarefree_part(f)?
    };
    let mut seq = vec![f0.clone()];
    if f0.is_constant() {
        return Ok(seq);
    }
    seq.push(f0.derivative().strip_content());
    loop {
        let n = seq.len();
        let r = seq[n - 2].signed_pseudo_rem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        seq.push((-r).strip_content());
    }
    Ok(seq)
}

/// Sign changes of a sign list, zeros skipped.
pub fn variations<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs {
        if s.is_zero() {
            continue;
        }
        if !last.is_zero() && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub fn variations_at(seq: &[IntPoly], r: &BigRational) -> usize {
    variations(seq.iter().map(|p| p.sign_at(r)))
}

pub fn variations_at_infinity(seq: &[IntPoly], dir: Infinity) -> usize {
    variations(seq.iter().map(|p| p.sign_at_infinity(dir).unwrap_or(Sign::Zero)))
}

/// Distinct real roots of `f`, by Sturm's theorem.
pub fn count_real_roots_sturm(f: &IntPoly) -> Result<usize, PolyError> {
    let seq = sturm_sequence(f)?;
    Ok(variations_at_infinity(&seq, Infinity::Minus) - variations_at_infinity(&seq, Infinity::Plus))
}

/// Distinct real roots of `f` in `(lo, hi]`. Endpoints must not be roots.
pub fn count_roots_in(f: &IntPoly, iv: &Interval) -> Result<usize, PolyError> {
    let seq = sturm_sequence(f)?;
    count_with_sequence(&seq, iv)
}

fn count_with_sequence(seq: &[IntPoly], iv: &Interval) -> Result<usize, PolyError> {
    for end in [iv.lo(), iv.hi()] {
        if seq[0].sign_at(end).is_zero() {
            return Err(PolyError::EndpointIsRoot(end.clone()));
        }
    }
    Ok(variations_at(seq, iv.lo()) - variations_at(seq, iv.hi()))
}

/// Isolating intervals by Sturm-count bisection of `(-B, B)`, `B` the Cauchy
/// bound. Slower than [`super::isolate_real_roots`]; kept as an independent
/// route.
pub fn isolate_real_roots_sturm(f: &IntPoly) -> Result<Vec<Interval>, PolyError> {
    let seq = sturm_sequence(f)?;
    let b = seq[0].cauchy_bound()?;
    let mut out = Vec::new();
    let mut stack = vec![Interval::new(-b.clone(), b)?];
    while let Some(iv) = stack.pop() {
        let count = count_with_sequence(&seq, &iv)?;
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(iv);
            continue;
        }
        let m = iv.midpoint();
        if seq[0].sign_at(&m).is_zero() {
            // carve out a root-free neighbourhood of the exact root m
            let mut eps = iv.width() / super::two() / super::two();
            loop {
                let around = Interval::new(&m - &eps, &m + &eps)?;
                if count_with_sequence(&seq, &around) == Ok(1) {
                    break;
                }
                eps /= super::two();
            }
            out.push(Interval::exact(m.clone()));
            stack.push(Interval::new(&m + &eps, iv.hi().clone())?);
            stack.push(Interval::new(iv.lo().clone(), &m - &eps)?);
        } else {
            stack.push(Interval::new(m.clone(), iv.hi().clone())?);
            stack.push(Interval::new(iv.lo().clone(), m)?);
        }
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn sequences() {
        assert_eq!(
            sturm_sequence(&p(&[1, 3, 1])).unwrap(),
            vec![p(&[1, 3, 1]), p(&[3, 2]), p(&[1])]
        );
        assert_eq!(sturm_sequence(&p(&[1, 1])).unwrap(), vec![p(&[1, 1]), p(&[1])]);
        assert_eq!(
            sturm_sequence(&p(&[1, -1, 1])).unwrap(),
            vec![p(&[1, -1, 1]), p(&[-1, 2]), p(&[-1])]
        );
        assert!(sturm_sequence(&IntPoly::zero()).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots_sturm(&p(&[1, 3, 1])), Ok(2));
        assert_eq!(count_real_roots_sturm(&p(&[1, -1, 1])), Ok(0));
        assert_eq!(count_real_roots_sturm(&p(&[1, 1])), Ok(1));
        // (x+1)^2 (x-2): two distinct
        assert_eq!(count_real_roots_sturm(&p(&[-2, -3, 0, 1])), Ok(2));
    }

    #[test]
    fn interval_counts() {
        let f = p(&[1, 3, 1]);
        assert_eq!(count_roots_in(&f, &Interval::from_ints(-1, 0).unwrap()), Ok(1));
        assert_eq!(count_roots_in(&f, &Interval::from_ints(-4, 4).unwrap()), Ok(2));
        assert!(matches!(
            count_roots_in(&p(&[1, 1]), &Interval::from_ints(-1, 0).unwrap()),
            Err(PolyError::EndpointIsRoot(_))
        ));
    }

    #[test]
    fn sturm_isolation_handles_rational_midpoint_roots() {
        // roots -2, 0, 2: the first midpoint is an exact root
        let f = p(&[0, -4, 0, 1]);
        let ivs = isolate_real_roots_sturm(&f).unwrap();
        assert_eq!(ivs.len(), 3);
        assert!(ivs[1].is_exact());
        for iv in &ivs {
            assert!(iv.contains(&BigRational::from_integer((-2).into()))
                || iv.contains(&BigRational::from_integer(0.into()))
                || iv.contains(&BigRational::from_integer(2.into())));
        }
    }

    #[test]
    fn variation_skips_zero() {
        use Sign::*;
        assert_eq!(variations([Positive, Zero, Negative, Positive]), 2);
        assert_eq!(variations([Zero, Zero]), 0);
    }
}
