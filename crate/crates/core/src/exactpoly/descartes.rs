//! Real-root isolation by Descartes' rule of signs on dyadic subintervals.
//!
//! Every node of the search holds integer Bernstein coefficients of `f` on
//! the node's interval. Their sign variations bound the number of roots
//! there (exactly when the bound is 0 or 1), and a single de Casteljau pass of
//! additions and shifts produces both children, so no rational arithmetic
//! happens on the hot path.
//!
//! The walk first runs on floating-point enclosures of the coefficients and
//! only falls back to exact integers on cells where rounding leaves a sign
//! undecided.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::enclosure::Enclosure;
use super::{pow2, IntPoly, Interval, Sign};

/// Isolating intervals for the real roots of a squarefree `f`, ascending.
/// Open intervals have dyadic endpoints; endpoints may coincide with an exact
/// root reported as a degenerate interval next to them.
pub(crate) fn isolate_squarefree(f: &IntPoly) -> Vec<Interval> {
    isolate_with_signs(f, &[]).into_iter().map(|(iv, _)| iv).collect()
}

/// As [`isolate_squarefree`], pairing each root with the signs of `others`
/// there. On every open interval each member of `others` has constant sign.
/// No member of `others` may vanish at a real root of `f`, or the subdivision
/// never terminates.
pub(crate) fn isolate_with_signs(f: &IntPoly, others: &[&IntPoly]) -> Vec<(Interval, Vec<Sign>)> {
    let mut coeffs = f.coeffs().to_vec();
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let zero_root = coeffs[0].is_zero();
    if zero_root {
        // squarefree, so x divides exactly once
        coeffs.remove(0);
    }
    let g = IntPoly::new(coeffs);

    let reflected: Vec<IntPoly> = others.iter().map(|o| o.reflect()).collect();
    let negatives = positive_roots(&g.reflect(), &reflected.iter().collect::<Vec<_>>());
    out.extend(negatives.into_iter().rev().map(|(iv, s)| (iv.negate(), s)));
    if zero_root {
        let signs = others.iter().map(|o| Sign::of(&o.constant_term())).collect();
        out.push((Interval::exact(BigRational::zero()), signs));
    }
    out.extend(positive_roots(&g, others));
    out
}

/// Dyadic sub-interval of `(0, 1)`: `(c / 2^k, (c + 1) / 2^k)`, or the single
/// point `c / 2^k`.
struct Dyadic {
    c: BigUint,
    k: u64,
    exact: bool,
    signs: Vec<Sign>,
}

fn scaled(p: &[BigInt], b: u64) -> Vec<BigInt> {
    let mut h: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(i, c)| c << (b * i as u64) as usize)
        .collect();
    strip_power_of_two(&mut h);
    h
}

fn positive_roots(g: &IntPoly, others: &[&IntPoly]) -> Vec<(Interval, Vec<Sign>)> {
    let coeffs = g.coeffs();
    if coeffs.len() <= 1 || sign_changes(coeffs) == 0 {
        return Vec::new();
    }
    let b = positive_root_bound_log2(coeffs);
    // h(x) = g(2^b x), roots of interest in (0, 1)
    let h = scaled(coeffs, b);
    let raw: Vec<Vec<BigInt>> = others.iter().map(|o| scaled(o.coeffs(), b)).collect();
    let mut found = if FILTERED.with(|f| f.get()) {
        subdivide_filtered(&h, &raw)
    } else {
        subdivide(vec![(bernstein_coeffs(&h), BigUint::zero(), 0)], &raw)
    };
    found.sort_by(|x, y| {
        let k = x.k.max(y.k);
        let lx = &x.c << (k - x.k) as usize;
        let ly = &y.c << (k - y.k) as usize;
        lx.cmp(&ly).then(y.exact.cmp(&x.exact))
    });
    found
        .into_iter()
        .map(|d| {
            let scale = pow2(b as i64 - d.k as i64);
            let lo = BigRational::from_integer(BigInt::from(d.c.clone())) * &scale;
            let iv = if d.exact {
                Interval::exact(lo)
            } else {
                let hi = BigRational::from_integer(BigInt::from(d.c + 1u32)) * &scale;
                Interval::new(lo, hi).expect("ordered dyadic endpoints")
            };
            (iv, d.signs)
        })
        .collect()
}

/// Another polynomial followed through the subdivision: its Bernstein
/// coefficients on the current cell, or its sign once that is constant there.
#[derive(Clone)]
enum Track {
    Known(Sign),
    Coeffs(Vec<BigInt>),
}

impl Track {
    fn settle(&mut self) {
        if let Track::Coeffs(b) = self {
            if sign_changes(b) == 0 {
                let first = b.iter().find(|c| !c.is_zero()).expect("non-zero polynomial");
                *self = Track::Known(Sign::of(first));
            }
        }
    }

    fn sign(&self) -> Option<Sign> {
        match self {
            Track::Known(s) => Some(*s),
            Track::Coeffs(_) => None,
        }
    }
}

/// Bernstein coefficients of `h` on the cell `(c / 2^k, (c + 1) / 2^k)`, up to
/// a positive factor.
fn bernstein_on_cell(h: &[BigInt], c: &BigUint, k: u64) -> Vec<BigInt> {
    let c = BigInt::from(c.clone());
    let mut p = h.to_vec();
    let d = p.len().saturating_sub(1);
    // p(x) <- 2^{kd} p(x / 2^k)
    for (i, a) in p.iter_mut().enumerate() {
        *a <<= (k * (d - i) as u64) as usize;
    }
    // p(x) <- p(x + c)
    for i in 0..d {
        for j in (i..d).rev() {
            let t = &p[j + 1] * &c;
            p[j] += t;
        }
    }
    strip_power_of_two(&mut p);
    bernstein_coeffs(&p)
}

fn track_on_cell(h: &[BigInt], c: &BigUint, k: u64) -> Track {
    if h.iter().all(Zero::is_zero) {
        Track::Known(Sign::Zero)
    } else {
        Track::Coeffs(bernstein_on_cell(h, c, k))
    }
}

/// Sign of `h` at the dyadic point `c / 2^k`.
fn sign_at_dyadic(h: &[BigInt], c: &BigUint, k: u64) -> Sign {
    let c = BigInt::from(c.clone());
    let d = h.len().saturating_sub(1);
    let mut acc = BigInt::zero();
    for (i, a) in h.iter().enumerate().rev() {
        acc = acc * &c + (a << (k * (d - i) as u64) as usize);
    }
    Sign::of(&acc)
}

/// Roots of `h` in `(0, 1)`, given its Bernstein coefficients, by midpoint
/// subdivision. The sign variations of the coefficients bound the roots on a
/// cell and one de Casteljau pass yields both halves. Cells holding one root
/// are split further until each of `others` has constant sign; those are only
/// brought onto a cell once it holds a single root.
fn subdivide(start: Vec<(Vec<BigInt>, BigUint, u64)>, others: &[Vec<BigInt>]) -> Vec<Dyadic> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<BigInt>, Option<Vec<Track>>, BigUint, u64)> =
        start.into_iter().map(|(b, c, k)| (b, None, c, k)).collect();
    while let Some((b, tracks, c, k)) = stack.pop() {
        let v = sign_changes(&b);
        if v == 0 {
            continue;
        }
        let mut tracks = match tracks {
            None if v == 1 => Some(others.iter().map(|h| track_on_cell(h, &c, k)).collect::<Vec<_>>()),
            t => t,
        };
        if let Some(ts) = tracks.as_mut() {
            ts.iter_mut().for_each(Track::settle);
            if v == 1 && ts.iter().all(|t| t.sign().is_some()) {
                let signs = ts.iter().filter_map(Track::sign).collect();
                out.push(Dyadic {
                    c,
                    k,
                    exact: false,
                    signs,
                });
                continue;
            }
        }
        let (left, right) = de_casteljau_split(b);
        let (left_tracks, right_tracks) = match tracks {
            None => (None, None),
            Some(ts) => {
                let mut lt = Vec::with_capacity(ts.len());
                let mut rt = Vec::with_capacity(ts.len());
                for t in ts {
                    match t {
                        Track::Known(s) => {
                            lt.push(Track::Known(s));
                            rt.push(Track::Known(s));
                        }
                        Track::Coeffs(tb) => {
                            let (l, r) = de_casteljau_split(tb);
                            lt.push(Track::Coeffs(l));
                            rt.push(Track::Coeffs(r));
                        }
                    }
                }
                (Some(lt), Some(rt))
            }
        };
        let c2 = &c << 1usize;
        if left.last().is_some_and(Zero::is_zero) {
            let mid = &c2 + 1u32;
            let signs = match &left_tracks {
                // the last left coefficient is the value at the midpoint
                Some(ts) => ts
                    .iter()
                    .map(|t| match t {
                        Track::Known(s) => *s,
                        Track::Coeffs(l) => Sign::of(l.last().expect("non-empty")),
                    })
                    .collect(),
                None => others.iter().map(|h| sign_at_dyadic(h, &mid, k + 1)).collect(),
            };
            out.push(Dyadic {
                c: mid,
                k: k + 1,
                exact: true,
                signs,
            });
        }
        stack.push((right, right_tracks, &c2 + 1u32, k + 1));
        stack.push((left, left_tracks, c2, k + 1));
    }
    out
}

thread_local! {
    static FILTERED: std::cell::Cell<bool> = const { std::cell::Cell::new(true) };
}

/// Run `f` with the floating-point filter off, so every node is exact.
#[cfg(test)]
pub(crate) fn exact_only<T>(f: impl FnOnce() -> T) -> T {
    FILTERED.with(|c| c.set(false));
    let out = f();
    FILTERED.with(|c| c.set(true));
    out
}

/// Splits allowed along a path whose variation count the enclosures leave open.
const UNCERTAIN_SPLITS: u8 = 2;

/// Cells deeper than this are always handled exactly.
const MAX_FILTERED_DEPTH: u64 = 96;

/// [`Track`] with enclosed coefficients.
enum FloatTrack {
    Known(Sign),
    Coeffs(Vec<Enclosure>),
}

impl FloatTrack {
    fn settle(&mut self) {
        if let FloatTrack::Coeffs(b) = self {
            let signs: Option<Vec<Sign>> = b.iter().map(Enclosure::sign).collect();
            let Some(signs) = signs else { return };
            let mut nonzero = signs.into_iter().filter(|s| !s.is_zero());
            let Some(first) = nonzero.next() else { return };
            if nonzero.all(|s| s == first) {
                *self = FloatTrack::Known(first);
            }
        }
    }

    fn sign(&self) -> Option<Sign> {
        match self {
            FloatTrack::Known(s) => Some(*s),
            FloatTrack::Coeffs(_) => None,
        }
    }
}

/// Least and greatest sign variation over every choice of the unknown signs.
fn float_variations(b: &[Enclosure]) -> (usize, usize) {
    let (mut lo, mut hi) = (0, 0);
    let mut last: Option<Sign> = None;
    // unknown signs since the last known non-zero one
    let mut run = 0usize;
    for e in b {
        match e.sign() {
            None => run += 1,
            Some(Sign::Zero) => {}
            Some(s) => {
                match last {
                    // a run between opposite signs adds an odd count up to run + 1
                    Some(l) if l != s => {
                        lo += 1;
                        hi += if run.is_multiple_of(2) { run + 1 } else { run };
                    }
                    // between equal signs an even count up to run + 1
                    Some(_) => hi += if run.is_multiple_of(2) { run } else { run + 1 },
                    None => hi += run,
                }
                last = Some(s);
                run = 0;
            }
        }
    }
    hi += if last.is_some() { run } else { run.saturating_sub(1) };
    (lo, hi)
}

fn float_split(b: &[Enclosure]) -> (Vec<Enclosure>, Vec<Enclosure>) {
    let d = b.len() - 1;
    let mut w = b.to_vec();
    let mut left = Vec::with_capacity(d + 1);
    let mut right = vec![Enclosure::zero(); d + 1];
    left.push(w[0]);
    right[d] = w[d];
    for r in 1..=d {
        for i in 0..=d - r {
            w[i] = Enclosure::mean(w[i], w[i + 1]);
        }
        left.push(w[0]);
        right[d - r] = w[d - r];
    }
    (left, right)
}

/// [`subdivide`] run on floating-point enclosures of the Bernstein
/// coefficients. Unknown signs only ever cause extra splitting; the sign at a
/// midpoint is decided exactly when the enclosure straddles zero, and cells
/// still undecided at [`MAX_FILTERED_DEPTH`] are handed to the exact
/// subdivision. The result is the same as the exact one.
fn subdivide_filtered(h: &[BigInt], others: &[Vec<BigInt>]) -> Vec<Dyadic> {
    let root = Enclosure::of_all(&bernstein_coeffs(h));
    let mut out = Vec::new();
    let mut exact_cells = Vec::new();
    let mut stack: Vec<(Vec<Enclosure>, Option<Vec<FloatTrack>>, BigUint, u64, u8)> =
        vec![(root, None, BigUint::zero(), 0, UNCERTAIN_SPLITS)];
    while let Some((b, tracks, c, k, mut slack)) = stack.pop() {
        let (vmin, vmax) = float_variations(&b);
        if vmax == 0 {
            continue;
        }
        if vmin != vmax {
            if slack == 0 {
                exact_cells.push((c, k));
                continue;
            }
            slack -= 1;
        }
        let mut tracks = match tracks {
            None if vmax == 1 && vmin == 1 => Some(others.iter().map(|o| float_track_on_cell(o, &c, k)).collect::<Vec<_>>()),
            t => t,
        };
        if let Some(ts) = tracks.as_mut() {
            ts.iter_mut().for_each(FloatTrack::settle);
            if vmax == 1 && vmin == 1 && ts.iter().all(|t| t.sign().is_some()) {
                let signs = ts.iter().filter_map(FloatTrack::sign).collect();
                out.push(Dyadic {
                    c,
                    k,
                    exact: false,
                    signs,
                });
                continue;
            }
        }
        if k >= MAX_FILTERED_DEPTH {
            exact_cells.push((c, k));
            continue;
        }
        let (mut left, mut right) = float_split(&b);
        let c2 = &c << 1usize;
        let mid_point = &c2 + 1u32;
        let mid = match left.last().and_then(Enclosure::sign) {
            Some(s) => s,
            None => {
                let s = sign_at_dyadic(h, &mid_point, k + 1);
                if s.is_zero() {
                    // both halves start or end at the root
                    *left.last_mut().expect("non-empty") = Enclosure::zero();
                    right[0] = Enclosure::zero();
                }
                s
            }
        };
        let (left_tracks, right_tracks) = match tracks {
            None => (None, None),
            Some(ts) => {
                let mut lt = Vec::with_capacity(ts.len());
                let mut rt = Vec::with_capacity(ts.len());
                for t in ts {
                    match t {
                        FloatTrack::Known(s) => {
                            lt.push(FloatTrack::Known(s));
                            rt.push(FloatTrack::Known(s));
                        }
                        FloatTrack::Coeffs(tb) => {
                            let (l, r) = float_split(&tb);
                            lt.push(FloatTrack::Coeffs(l));
                            rt.push(FloatTrack::Coeffs(r));
                        }
                    }
                }
                (Some(lt), Some(rt))
            }
        };
        if mid.is_zero() {
            let known = |i: usize| match left_tracks.as_ref().map(|ts| &ts[i]) {
                Some(FloatTrack::Known(s)) => Some(*s),
                Some(FloatTrack::Coeffs(l)) => l.last().and_then(Enclosure::sign),
                None => None,
            };
            let signs = (0..others.len())
                .map(|i| known(i).unwrap_or_else(|| sign_at_dyadic(&others[i], &mid_point, k + 1)))
                .collect();
            out.push(Dyadic {
                c: mid_point.clone(),
                k: k + 1,
                exact: true,
                signs,
            });
        }
        stack.push((right, right_tracks, mid_point, k + 1, slack));
        stack.push((left, left_tracks, c2, k + 1, slack));
    }
    if !exact_cells.is_empty() {
        let start = exact_cells
            .into_iter()
            .map(|(c, k)| (bernstein_on_cell(h, &c, k), c, k))
            .collect();
        out.extend(subdivide(start, others));
    }
    out
}

fn float_track_on_cell(h: &[BigInt], c: &BigUint, k: u64) -> FloatTrack {
    if h.iter().all(Zero::is_zero) {
        FloatTrack::Known(Sign::Zero)
    } else {
        FloatTrack::Coeffs(Enclosure::of_all(&bernstein_on_cell(h, c, k)))
    }
}

/// Bernstein coefficients of `h` on `[0, 1]`, up to a common positive factor.
///
/// The coefficient of `x^{d-i}` in `(x+1)^d h(1/(x+1))` is `C(d,i) b_i`; the
/// factor `lcm_i C(d,i)` keeps the `b_i` integral.
fn bernstein_coeffs(h: &[BigInt]) -> Vec<BigInt> {
    let d = h.len() - 1;
    let mut t: Vec<BigInt> = h.iter().rev().cloned().collect();
    taylor_shift_one(&mut t);
    let mut binom = Vec::with_capacity(d + 1);
    let mut cur = BigInt::from(1);
    for i in 0..=d {
        binom.push(cur.clone());
        cur = cur * BigInt::from(d - i) / BigInt::from(i + 1);
    }
    let l = binom.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c));
    let mut b: Vec<BigInt> = (0..=d).map(|i| &t[d - i] * (&l / &binom[i])).collect();
    strip_power_of_two(&mut b);
    b
}

/// Bernstein coefficients of the two halves, each scaled to integers and
/// stripped of common powers of two. A zero last entry of the left half (and
/// first of the right) means the midpoint is a root.
fn de_casteljau_split(mut b: Vec<BigInt>) -> (Vec<BigInt>, Vec<BigInt>) {
    let d = b.len() - 1;
    let mut left = Vec::with_capacity(d + 1);
    let mut right = vec![BigInt::zero(); d + 1];
    left.push(b[0].clone() << d);
    right[d] = b[d].clone() << d;
    for r in 1..=d {
        for i in 0..=d - r {
            let (lo, hi) = b.split_at_mut(i + 1);
            lo[i] += &hi[0];
        }
        // row r holds 2^r times the de Casteljau values
        left.push(b[0].clone() << (d - r));
        right[d - r] = b[d - r].clone() << (d - r);
    }
    strip_power_of_two(&mut left);
    strip_power_of_two(&mut right);
    (left, right)
}

/// In-place `p(x) <- p(x + 1)`.
fn taylor_shift_one(p: &mut [BigInt]) {
    let d = p.len().saturating_sub(1);
    for i in 0..d {
        for j in (i..d).rev() {
            let (lo, hi) = p.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

fn strip_power_of_two(p: &mut [BigInt]) {
    let Some(tz) = p.iter().filter_map(|c| c.trailing_zeros()).min() else {
        return;
    };
    if tz > 0 {
        for c in p.iter_mut() {
            *c = &*c >> tz as usize;
        }
    }
}

fn sign_changes(p: &[BigInt]) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for c in p.iter().filter(|c| !c.is_zero()) {
        let neg = c.is_negative();
        if last.is_some_and(|l| l != neg) {
            count += 1;
        }
        last = Some(neg);
    }
    count
}

/// `b` with every positive root below `2^b` (Fujiwara-style bound, from bit
/// lengths only).
fn positive_root_bound_log2(p: &[BigInt]) -> u64 {
    let d = p.len() - 1;
    let lead_bits = p[d].bits() as i64;
    let mut best: i64 = 0;
    for (i, c) in p[..d].iter().rev().enumerate() {
        if c.is_zero() {
            continue;
        }
        let i = i as i64 + 1;
        // |c / lead| < 2^(bits(c) - bits(lead) + 1)
        let num = c.bits() as i64 - lead_bits + 1;
        let e = -((-num).div_euclid(i));
        best = best.max(e);
    }
    // Fujiwara: 2 · max |a_{d-i}/a_d|^{1/i}
    (best + 1).max(0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn root_bound_is_valid() {
        for (coeffs, root) in [(vec![-32, 1], 32.0), (vec![-1, 0, 1], 1.0), (vec![-1000, 1, 1], 31.1)] {
            let b = positive_root_bound_log2(&big(&coeffs));
            assert!(2f64.powi(b as i32) > root, "{coeffs:?}");
        }
    }

    #[test]
    fn bernstein_of_quadratic() {
        // x² - x + 1/4 scaled: 4x² - 4x + 1 = (1-x)² - 2x(1-x)·... on [0, 1]
        // Bernstein: b0 = 1, b1 = h(0) + h'(0)/2 = -1, b2 = 1
        assert_eq!(bernstein_coeffs(&big(&[1, -4, 4])), big(&[1, -1, 1]));
        assert_eq!(bernstein_coeffs(&big(&[0, 0, 1])), big(&[0, 0, 1]));
    }

    #[test]
    fn split_matches_direct_conversion() {
        // h(x) = (x - 1/3)(x - 3/4) · 12 = 12x² - 13x + 3
        let h = big(&[3, -13, 12]);
        let (left, right) = de_casteljau_split(bernstein_coeffs(&h));
        // h(x/2) = 3x² - 6.5x + 3 -> 6x² - 13x + 6
        let direct_left = bernstein_coeffs(&big(&[6, -13, 6]));
        // h((x+1)/2) = 3x² - 0.5x - 0.5 -> 6x² - x - 1
        let direct_right = bernstein_coeffs(&big(&[-1, -1, 6]));
        let same_ray = |a: &[BigInt], b: &[BigInt]| {
            a.iter().zip(b).all(|(x, y)| x * &b[0] == y * &a[0]) && a[0].signum() == b[0].signum()
        };
        assert!(same_ray(&left, &direct_left), "{left:?} {direct_left:?}");
        assert!(same_ray(&right, &direct_right), "{right:?} {direct_right:?}");
        assert_eq!(sign_changes(&left), 1);
        assert_eq!(sign_changes(&right), 1);
    }

    #[test]
    fn taylor_shift() {
        let mut p = big(&[1, 2, 1]);
        taylor_shift_one(&mut p);
        assert_eq!(p, big(&[4, 4, 1]));
    }

    #[test]
    fn exact_midpoint_root() {
        // (2x - 1)(4x - 1)(4x - 3)
        let f = IntPoly::from_i64s(&[-3, 22, -48, 32]);
        let ivs = isolate_squarefree(&f);
        assert_eq!(ivs.len(), 3);
        assert!(ivs.iter().any(|iv| iv.is_exact()));
        for (iv, (n, d)) in ivs.iter().zip([(1, 4), (1, 2), (3, 4)]) {
            assert!(iv.contains(&BigRational::new(n.into(), d.into())), "{iv}");
        }
    }

    #[test]
    fn isolates_integer_roots() {
        // (x+3)(x+1)x(x-2)(x-5)
        let f = IntPoly::from_i64s(&[0, 30, 19, -15, -3, 1]);
        let ivs = isolate_squarefree(&f);
        let roots = [-3, -1, 0, 2, 5];
        assert_eq!(ivs.len(), roots.len());
        for (iv, r) in ivs.iter().zip(roots) {
            assert!(iv.contains(&BigRational::from_integer(r.into())), "{iv} {r}");
        }
    }

    fn product(factors: &[(i64, i64)]) -> IntPoly {
        factors
            .iter()
            .fold(IntPoly::one(), |acc, &(a, b)| &acc * &IntPoly::from_i64s(&[-b, a]))
    }

    fn both_walks(f: &IntPoly, others: &[&IntPoly]) {
        let filtered = isolate_with_signs(f, others);
        let exact = exact_only(|| isolate_with_signs(f, others));
        assert_eq!(filtered, exact, "{f}");
    }

    #[test]
    fn filter_agrees_with_exact_walk() {
        // clustered, dyadic and far apart roots
        let f = product(&[(1000, 1), (1000, 2), (1001, 2), (2, 1), (8, 3), (1, -40), (3, 1)]);
        let g = product(&[(999, 1), (4, 3), (1, 7)]);
        let h = &IntPoly::from_i64s(&[1, 0, 1]) * &product(&[(1, -39)]);
        both_walks(&f, &[]);
        both_walks(&f, &[&g, &h]);
        both_walks(&g, &[&f]);
    }

    #[test]
    fn filter_agrees_on_riley_entries() {
        use crate::riley::riley_sequence;
        use crate::twobridge::{enumerate, sign_sequences};
        for k in enumerate(31).unwrap() {
            let rs = riley_sequence(&sign_sequences(&k).unwrap()).unwrap();
            for j in 1..rs.n() {
                both_walks(&rs.a[j], &[&rs.a[j - 1], &rs.a[j + 1], &rs.b[j]]);
            }
        }
    }

    #[test]
    fn variation_bounds_with_unknown_signs() {
        let pos = Enclosure::of_scaled(&BigInt::from(1), 0);
        let neg = Enclosure::of_scaled(&BigInt::from(-1), 0);
        // an enclosure of 5 / 2^5000 cannot tell its sign
        let unk = Enclosure::of_scaled(&BigInt::from(5), 5000);
        let zero = Enclosure::zero();
        assert_eq!(float_variations(&[pos, neg, pos]), (2, 2));
        assert_eq!(float_variations(&[pos, unk, pos]), (0, 2));
        assert_eq!(float_variations(&[pos, unk, unk, unk, pos]), (0, 4));
        assert_eq!(float_variations(&[pos, unk, unk, neg]), (1, 3));
        assert_eq!(float_variations(&[pos, unk, unk, unk, neg]), (1, 3));
        assert_eq!(float_variations(&[unk, unk, pos, zero, unk]), (0, 3));
        assert_eq!(float_variations(&[unk, unk, unk]), (0, 2));
        assert_eq!(float_variations(&[zero, unk]), (0, 0));
    }

    #[test]
    fn filter_agrees_on_clustered_riley_roots() {
        use crate::riley::riley_polynomial_of;
        use crate::twobridge::{normalize, sign_sequences};
        // twelve real roots, eight of them in clusters
        let sd = sign_sequences(&normalize(301, 139).unwrap()).unwrap();
        let f = riley_polynomial_of(&sd).unwrap();
        assert_eq!(isolate_squarefree(&f).len(), 12);
        both_walks(&f, &[]);
    }
}
